use super::DiAlgebra;
use crate::exactlin::{Scalar, Subspace};
use crate::{Error, Result};

/// The three equivalent recursions for the lower central series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `L^<n+1> = L^<n> ◊ L`
    RightIterated,
    /// `L^{n+1} = L ◊ L^{n}`
    LeftIterated,
    /// `L^{n+1} = Σ_{i+j=n+1} L^i ◊ L^j`
    Full,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::RightIterated, Variant::LeftIterated, Variant::Full];
}

/// Central series data. Both lists are 1-indexed in the usual sense: `lower[0] = L¹ = L`,
/// `upper[0] = Z₁ = Z(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport<S: Scalar> {
    pub lower: Vec<Subspace<S>>,
    pub upper: Vec<Subspace<S>>,
    pub center: Subspace<S>,
    pub derived: Subspace<S>,
    pub nilpotency_class: Option<usize>,
}

impl<S: Scalar> SeriesReport<S> {
    /// `Lʲ` for `j ≥ 1`; the chain is constant past its last stored term.
    pub fn lower_term(&self, j: usize) -> &Subspace<S> {
        assert!(j >= 1, "lower central series starts at L^1");
        &self.lower[(j - 1).min(self.lower.len() - 1)]
    }

    /// `Z_j` for `j ≥ 0`, with `Z₀ = 0`.
    pub fn upper_term(&self, j: usize) -> Subspace<S> {
        if j == 0 {
            return Subspace::zero(self.center.ambient_dim());
        }
        self.upper[(j - 1).min(self.upper.len() - 1)].clone()
    }
}

impl<S: Scalar> DiAlgebra<S> {
    /// Descending chain `L¹ ⊇ L² ⊇ …`, stopping at `0` (included) or where it stabilizes.
    pub fn lower_central(&self, variant: Variant) -> Vec<Subspace<S>> {
        let full = self.full();
        let mut chain = vec![full.clone()];
        loop {
            let last = chain.last().expect("chain is non-empty");
            if last.is_zero() {
                break;
            }
            let next = match variant {
                Variant::RightIterated => self.diamond(last, &full),
                Variant::LeftIterated => self.diamond(&full, last),
                Variant::Full => {
                    let m = chain.len();
                    (0..m).fold(Subspace::zero(self.dim()), |acc, i| {
                        let term = self.diamond(&chain[i], &chain[m - 1 - i]);
                        acc.sum(&term).expect("same ambient")
                    })
                }
            };
            if &next == last {
                break;
            }
            chain.push(next);
        }
        chain
    }

    /// Ascending chain `Z₁ ⊆ Z₂ ⊆ …` until it stabilizes.
    pub fn upper_central(&self) -> Vec<Subspace<S>> {
        let mut chain = vec![self.center()];
        loop {
            let last = chain.last().expect("chain is non-empty");
            let next = self.preimage_of(last);
            if &next == last {
                break;
            }
            chain.push(next);
        }
        chain
    }

    /// Smallest `c` with `L^{c+1} = 0`, or `None` if the lower series stabilizes above zero.
    pub fn nilpotency_class(&self) -> Option<usize> {
        class_of(&self.lower_central(Variant::Full))
    }

    pub fn series_report(&self) -> SeriesReport<S> {
        let lower = self.lower_central(Variant::Full);
        let nilpotency_class = class_of(&lower);
        SeriesReport {
            derived: lower.get(1).cloned().unwrap_or_else(|| lower[0].clone()),
            lower,
            upper: self.upper_central(),
            center: self.center(),
            nilpotency_class,
        }
    }

    /// `L^s ◊ Z_i + Z_i ◊ L^s ⊆ Z_{i-s}` for all `1 ≤ s ≤ i ≤ class`.
    pub fn lemma22_check(&self) -> Result<bool> {
        let report = self.series_report();
        let class = report.nilpotency_class.ok_or(Error::NotNilpotent)?;
        for i in 1..=class {
            let zi = report.upper_term(i);
            for s in 1..=i {
                let ls = report.lower_term(s);
                let lhs = self.diamond(ls, &zi).sum(&self.diamond(&zi, ls))?;
                if !lhs.is_subspace_of(&report.upper_term(i - s)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn class_of<S: Scalar>(lower: &[Subspace<S>]) -> Option<usize> {
    let last = lower.last()?;
    last.is_zero().then(|| lower.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialg::tests::{ex6, r};
    use crate::Rat;

    fn idempotent() -> DiAlgebra<Rat> {
        DiAlgebra::from_entries(1, &[(0, 0, 0, r(1))], &[(0, 0, 0, r(1))]).unwrap()
    }

    #[test]
    fn running_example_series() {
        let a = ex6();
        let e1 = Subspace::coordinate(2, &[1]);
        for v in Variant::ALL {
            assert_eq!(a.lower_central(v), vec![a.full(), e1.clone(), Subspace::zero(2)]);
        }
        assert_eq!(a.upper_central(), vec![e1.clone(), a.full()]);
        assert_eq!(a.nilpotency_class(), Some(2));
        assert!(a.lemma22_check().unwrap());
        let rep = a.series_report();
        assert_eq!(rep.derived, e1);
        assert_eq!(rep.upper_term(0), Subspace::zero(2));
        assert_eq!(rep.upper_term(5), a.full());
    }

    #[test]
    fn abelian_series() {
        let a = DiAlgebra::<Rat>::abelian(3);
        for v in Variant::ALL {
            assert_eq!(a.lower_central(v), vec![a.full(), Subspace::zero(3)]);
        }
        assert_eq!(a.upper_central(), vec![a.full()]);
        assert_eq!(a.nilpotency_class(), Some(1));
        assert!(a.lemma22_check().unwrap());
    }

    #[test]
    fn idempotent_is_not_nilpotent() {
        let a = idempotent();
        assert_eq!(a.lower_central(Variant::Full), vec![a.full()]);
        assert_eq!(a.upper_central(), vec![Subspace::zero(1)]);
        assert_eq!(a.nilpotency_class(), None);
        assert!(matches!(a.lemma22_check(), Err(Error::NotNilpotent)));
    }

    #[test]
    fn zero_algebra_has_class_zero() {
        assert_eq!(DiAlgebra::<Rat>::abelian(0).nilpotency_class(), Some(0));
    }
}
