use std::fmt;

use super::mat::{axpy, dot};
use super::{Mat, Scalar};
use crate::{Error, Result};

/// A subspace of coordinate space, stored by its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<S: Scalar> {
    ambient: usize,
    basis: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_rref(&Mat::identity(ambient))
    }

    /// Span of the given vectors (any spanning set; dependent vectors are fine).
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<S>>) -> Self {
        Self::from_rref(&Mat::from_rows(ambient, vectors))
    }

    /// Row space of `m`.
    pub fn row_space(m: &Mat<S>) -> Self {
        Self::from_rref(m)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vectors = indices.iter().map(|&i| unit_vector(ambient, i)).collect();
        Self::from_vectors(ambient, vectors)
    }

    fn from_rref(m: &Mat<S>) -> Self {
        let red = m.rref();
        Subspace {
            ambient: m.cols(),
            basis: (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect(),
            pivots: red.pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Basis as the rows of a `dim x ambient` matrix.
    pub fn basis_matrix(&self) -> Mat<S> {
        Mat::from_rows(self.ambient, self.basis.clone())
    }

    /// Coordinates not hit by a pivot. Their unit vectors span a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut hit = vec![false; self.ambient];
        for &p in &self.pivots {
            hit[p] = true;
        }
        (0..self.ambient).filter(|&i| !hit[i]).collect()
    }

    /// Remainder of `v` after clearing every pivot coordinate with the basis.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        for (p, b) in self.pivots.iter().zip(&self.basis) {
            if !r[*p].is_zero() {
                let c = r[*p].clone();
                axpy(&mut r, &c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the stored basis. Only meaningful when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[S]) -> Vec<S> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn combine(&self, coords: &[S]) -> Vec<S> {
        assert_eq!(coords.len(), self.dim());
        self.combine_signed(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace<S>) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        self.check_ambient(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Self::from_vectors(self.ambient, vectors))
    }

    /// Row vectors spanning `{w : w . v = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace<S> {
        self.basis_matrix().nullspace()
    }

    pub fn intersect(&self, other: &Subspace<S>) -> Result<Subspace<S>> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        // x·U = y·V  ⇔  (x, y) in the kernel of [Uᵀ | Vᵀ]
        let a = self.dim();
        let mut cols = self.basis.clone();
        cols.extend(other.basis.iter().cloned());
        let kernel = Mat::from_cols(self.ambient, &cols).nullspace();
        let vectors = kernel
            .basis()
            .iter()
            .map(|k| self.combine_signed(&k[..a]))
            .collect();
        Ok(Self::from_vectors(self.ambient, vectors))
    }

    /// `Σ c_i b_i` over the stored basis.
    fn combine_signed(&self, coords: &[S]) -> Vec<S> {
        let mut v = vec![S::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                axpy(&mut v, &-c.clone(), b);
            }
        }
        v
    }

    /// Representatives whose cosets form a basis of `self / sub`.
    pub fn quotient_basis(&self, sub: &Subspace<S>) -> Result<Vec<Vec<S>>> {
        self.check_ambient(sub)?;
        if !sub.is_subspace_of(self) {
            return Err(Error::NotContained);
        }
        let mut acc = sub.clone();
        let mut reps = Vec::new();
        for b in &self.basis {
            if !acc.contains(b) {
                reps.push(b.clone());
                acc = acc.sum(&Subspace::from_vectors(self.ambient, vec![b.clone()]))?;
            }
        }
        Ok(reps)
    }

    /// `{ m v : v in self }` for a map `m` from this ambient space.
    pub fn image_under(&self, m: &Mat<S>) -> Subspace<S> {
        assert_eq!(m.cols(), self.ambient);
        Self::from_vectors(m.rows(), self.basis.iter().map(|b| m.apply(b)).collect())
    }

    /// `{ v : m v in self }` for a map `m` into this ambient space.
    pub fn preimage_under(&self, m: &Mat<S>) -> Subspace<S> {
        assert_eq!(m.rows(), self.ambient);
        if self.is_full() {
            return Subspace::full(m.cols());
        }
        // m v = Wᵀ y  ⇔  (v, y) in the kernel of [m | Wᵀ]; keep the v part
        let mut cols: Vec<Vec<S>> = (0..m.cols()).map(|j| m.col(j)).collect();
        cols.extend(self.basis.iter().cloned());
        let kernel = Mat::from_cols(self.ambient, &cols).nullspace();
        let vectors = kernel
            .basis()
            .iter()
            .map(|k| k[..m.cols()].to_vec())
            .collect();
        Self::from_vectors(m.cols(), vectors)
    }

    /// `{ v : m v in self for every m in maps }`
    pub fn preimage_under_all(&self, maps: &[Mat<S>]) -> Subspace<S> {
        let ann = self.annihilator().basis_matrix();
        let mut rows = Vec::new();
        for m in maps {
            assert_eq!(m.rows(), self.ambient);
            rows.extend(ann.mul(m).to_rows());
        }
        let cols = maps.first().map_or(self.ambient, |m| m.cols());
        Mat::from_rows(cols, rows).nullspace()
    }

    /// Evaluates the linear functional with coefficients `f` on every basis vector.
    pub fn evaluate(&self, f: &[S]) -> Vec<S> {
        self.basis.iter().map(|b| dot(f, b)).collect()
    }

    fn check_ambient(&self, other: &Subspace<S>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }
}

pub fn unit_vector<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

impl<S: Scalar> fmt::Debug for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)?;
        f.debug_list()
            .entries(self.basis.iter().map(|b| super::format_vector(b)))
            .finish()
    }
}

impl<S: Scalar> fmt::Display for Subspace<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.basis.iter().map(|b| super::format_vector(b)).collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::Rat;
    use proptest::prelude::*;

    fn v(e: &[i64]) -> Vec<Rat> {
        e.iter().map(|&x| Rat::from_i64(x)).collect()
    }

    fn span(n: usize, vs: &[&[i64]]) -> Subspace<Rat> {
        Subspace::from_vectors(n, vs.iter().map(|x| v(x)).collect())
    }

    #[test]
    fn sum_and_intersection_of_axes() {
        let e0 = span(2, &[&[1, 0]]);
        let e1 = span(2, &[&[0, 1]]);
        assert_eq!(e0.sum(&e1).unwrap(), Subspace::full(2));
        assert!(e0.intersect(&e1).unwrap().is_zero());
    }

    #[test]
    fn quotient_of_plane_by_axis() {
        let reps = Subspace::<Rat>::full(2).quotient_basis(&span(2, &[&[0, 1]])).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(!reps[0][0].is_zero());
    }

    #[test]
    fn quotient_requires_containment() {
        let e0 = span(2, &[&[1, 0]]);
        let e1 = span(2, &[&[0, 1]]);
        assert!(matches!(e0.quotient_basis(&e1), Err(Error::NotContained)));
        assert!(matches!(
            e0.sum(&Subspace::zero(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_from_different_spanning_sets() {
        let a = span(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let b = span(3, &[&[1, 2, 1], &[2, 1, -1], &[3, 3, 0]]);
        assert_eq!(a, b);
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn preimage_and_image() {
        // projection onto the first coordinate
        let p = Mat::<Rat>::from_i64(1, 2, &[1, 0]);
        let pre = Subspace::zero(1).preimage_under(&p);
        assert_eq!(pre, span(2, &[&[0, 1]]));
        assert_eq!(Subspace::full(2).image_under(&p), Subspace::full(1));
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = span(3, &[&[1, 2, 0], &[0, 1, 1]]);
        let w = v(&[2, 1, -3]);
        assert!(s.contains(&w));
        assert_eq!(s.combine(&s.coordinates(&w)), w);
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Mat<Rat>> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |e| Mat::from_i64(r, c, &e))
        })
    }

    fn subspace_of(n: usize) -> impl Strategy<Value = Subspace<Rat>> {
        (0..=n).prop_flat_map(move |k| {
            proptest::collection::vec(-2i64..=2, k * n).prop_map(move |e| {
                Subspace::row_space(&Mat::from_i64(k, n, &e))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rref_idempotent_and_rank_nullity(m in small_matrix(20)) {
            let r = m.rref();
            prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
            prop_assert_eq!(r.rank + m.nullspace().dim(), m.cols());
            for b in m.nullspace().basis() {
                prop_assert!(m.apply(b).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn modular_law(u in subspace_of(6), w in subspace_of(6)) {
            let s = u.sum(&w).unwrap();
            let i = u.intersect(&w).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&w));
            prop_assert!(u.is_subspace_of(&s) && w.is_subspace_of(&s));
            let reps = s.quotient_basis(&u).unwrap();
            prop_assert_eq!(reps.len(), s.dim() - u.dim());
        }

        #[test]
        fn canonical_under_recombination(u in subspace_of(5), c in -3i64..=3) {
            // adding a multiple of one basis vector to another must not change the subspace
            let mut vs = u.basis().to_vec();
            if vs.len() >= 2 {
                let first = vs[0].clone();
                let k = Rat::from_i64(c);
                for (x, y) in vs[1].iter_mut().zip(first) {
                    *x = x.clone() + k.clone() * y;
                }
                vs.reverse();
            }
            prop_assert_eq!(Subspace::from_vectors(5, vs), u);
        }
    }
}
