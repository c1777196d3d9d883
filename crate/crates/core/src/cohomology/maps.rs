//! Inflation, transgression and the `δ` map, all realised on flat cochains.
//!
//! Maps on `H²` are never built on a quotient space. Images get `B²` added and
//! kernels are taken inside `Z²`, so every comparison is between honest subspaces.

use super::{
    cocycle_space, eval_row, flat_index, vanishes, Category, CentralExtension, CocycleSpace,
    Spaces,
};
use crate::dialg::{DiAlgebra, Quotient};
use crate::exactlin::{unit_vector, Mat, Scalar, Subspace};
use crate::{Error, Result};

fn require_ambient<S: Scalar>(a: &DiAlgebra<S>, u: &Subspace<S>) -> Result<()> {
    if u.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: u.ambient_dim(),
        });
    }
    Ok(())
}

fn require_central<S: Scalar>(a: &DiAlgebra<S>, u: &Subspace<S>) -> Result<()> {
    require_ambient(a, u)?;
    if !a.is_central(u)? {
        return Err(Error::NotCentral);
    }
    Ok(())
}

/// Pullback `Z²(L/B) → Z²(L)` along the projection.
#[derive(Clone, Debug)]
pub struct InflationMap<S: Scalar> {
    pub quotient: Quotient<S>,
    /// Acts on flat cochains of the quotient.
    pub matrix: Mat<S>,
    /// `Z²(L/B)`
    pub source: CocycleSpace<S>,
    /// Image of `Z²(L/B)` inside the flat cochains of `L`.
    pub image: Subspace<S>,
    /// `dim` of the induced image in `H²(L)`.
    pub h2_image_dim: usize,
}

impl<S: Scalar> InflationMap<S> {
    /// Columns are the images of the basis of `Z²(L/B)`.
    pub fn restricted(&self) -> Mat<S> {
        let cols: Vec<Vec<S>> = self
            .source
            .basis
            .basis()
            .iter()
            .map(|v| self.matrix.apply(v))
            .collect();
        Mat::from_cols(self.matrix.rows(), &cols)
    }
}

/// Matrix of `f ↦ f(π·, π·)` from flat cochains on the target of `projection` to flat
/// cochains on its source.
pub(crate) fn pullback_matrix<S: Scalar>(category: Category, projection: &Mat<S>) -> Mat<S> {
    let (q, n) = (projection.rows(), projection.cols());
    let mut m = Mat::zeros(category.flat_len(n), category.flat_len(q));
    for t in 0..category.forms() {
        for x in 0..n {
            for y in 0..n {
                for c1 in 0..q {
                    let px = &projection[(c1, x)];
                    if px.is_zero() {
                        continue;
                    }
                    for c2 in 0..q {
                        let py = &projection[(c2, y)];
                        if !py.is_zero() {
                            m[(flat_index(n, t, x, y), flat_index(q, t, c1, c2))] =
                                px.clone() * py.clone();
                        }
                    }
                }
            }
        }
    }
    m
}

/// `Inf: H²(L/B) → H²(L)` for a central ideal `B`.
pub fn inflation<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
    b: &Subspace<S>,
) -> Result<InflationMap<S>> {
    category.check(a)?;
    inflation_in(a, category, b, &Spaces::of(a, category)?)
}

pub(crate) fn inflation_in<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
    b: &Subspace<S>,
    spaces: &Spaces<S>,
) -> Result<InflationMap<S>> {
    require_central(a, b)?;
    let quotient = a.quotient(b)?;
    let matrix = pullback_matrix(category, &quotient.projection);
    let source = cocycle_space(&quotient.algebra, category)?;
    let image = source.basis.image_under(&matrix);
    let cob = &spaces.coboundaries;
    let h2_image_dim = image.sum(cob)?.dim() - cob.dim();
    Ok(InflationMap {
        quotient,
        matrix,
        source,
        image,
        h2_image_dim,
    })
}

/// `Tra: Hom(Z, F) → Z²(L/Z)`, `χ ↦ χ ∘ g` for the section cocycle `g` of `L → L/Z`.
#[derive(Clone, Debug)]
pub struct TransgressionMap<S: Scalar> {
    pub quotient: Quotient<S>,
    /// `flat(L/Z) x dim Z`; column `b` is the cocycle paired with the `b`-th coordinate of `Z`.
    pub matrix: Mat<S>,
}

pub fn transgression<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
    z: &Subspace<S>,
) -> Result<TransgressionMap<S>> {
    category.check(a)?;
    require_central(a, z)?;
    let ext = CentralExtension::from_ideal(a, z)?;
    let section = ext.canonical_section()?;
    let pairs = ext.section_cocycle(&section)?;
    let quotient = a.quotient(z)?;
    let rows = category.flat_len(quotient.algebra.dim());
    let cols: Vec<Vec<S>> = pairs.iter().map(|p| p.flatten(category)).collect();
    Ok(TransgressionMap {
        matrix: Mat::from_cols(rows, &cols),
        quotient,
    })
}

/// `δ: H²(L) → (L/A ⊗ B ⊕ B ⊗ L/A)^forms`.
#[derive(Clone, Debug)]
pub struct DeltaMap<S: Scalar> {
    /// `codomain x flat(L)`, blocks ordered `(f″⊣, g″⊣, f″⊢, g″⊢)`.
    pub matrix: Mat<S>,
    pub codomain_dim: usize,
    /// `ker δ' ∩ Z²(L)`, which contains `B²(L)`.
    pub kernel: Subspace<S>,
    /// `δ'(Z²(L))`
    pub image: Subspace<S>,
    pub h2_kernel_dim: usize,
    pub h2_image_dim: usize,
}

/// Builds `δ'` for `L' ⊆ big` and `small ⊆ Z(L)`, once every cocycle vanishes on
/// `big × small` and `small × big`.
pub fn delta_map<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
    big: &Subspace<S>,
    small: &Subspace<S>,
) -> Result<DeltaMap<S>> {
    category.check(a)?;
    delta_map_in(a, category, big, small, &Spaces::of(a, category)?)
}

pub(crate) fn delta_map_in<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
    big: &Subspace<S>,
    small: &Subspace<S>,
    spaces: &Spaces<S>,
) -> Result<DeltaMap<S>> {
    require_ambient(a, big)?;
    require_central(a, small)?;
    if !a.derived().is_subspace_of(big) {
        return Err(Error::HypothesisFailed(
            "derived ideal is not contained in the first ideal".into(),
        ));
    }
    if !vanishes(a.dim(), category, &spaces.cocycles, big, small) {
        return Err(Error::HypothesisFailed(
            "some cocycle does not vanish on the pair of ideals".into(),
        ));
    }
    let n = a.dim();
    let reps: Vec<Vec<S>> = big
        .complement_coords()
        .into_iter()
        .map(|c| unit_vector(n, c))
        .collect();
    let mut rows = Vec::new();
    for t in 0..category.forms() {
        for x in &reps {
            for b in small.basis() {
                rows.push(eval_row(n, category, t, x, b));
            }
        }
        for b in small.basis() {
            for x in &reps {
                rows.push(eval_row(n, category, t, b, x));
            }
        }
    }
    let matrix = Mat::from_rows(category.flat_len(n), rows);
    let codomain_dim = matrix.rows();
    let z = &spaces.cocycles;
    let kernel = z.intersect(&matrix.nullspace())?;
    let image = z.image_under(&matrix);
    Ok(DeltaMap {
        h2_kernel_dim: kernel.dim() - spaces.coboundaries.dim(),
        h2_image_dim: image.dim(),
        matrix,
        codomain_dim,
        kernel,
        image,
    })
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::cohomology::coboundary_space;
    use crate::dialg::tests::ex6;
    use crate::Rat;

    #[test]
    fn inflation_by_zero_is_identity() {
        let a = ex6();
        let inf = inflation(&a, Category::Dias, &Subspace::zero(2)).unwrap();
        assert_eq!(inf.matrix, Mat::identity(8));
        assert_eq!(inf.image, cocycle_space(&a, Category::Dias).unwrap().basis);
    }

    #[test]
    fn inflation_from_center_of_running_example() {
        let a = ex6();
        let inf = inflation(&a, Category::Dias, &a.center()).unwrap();
        assert_eq!(inf.h2_image_dim, 1);
        let cob = coboundary_space(&a, Category::Dias).unwrap().basis;
        let src_cob = coboundary_space(&inf.quotient.algebra, Category::Dias).unwrap().basis;
        assert!(src_cob.image_under(&inf.matrix).is_subspace_of(&cob));
    }

    #[test]
    fn inflation_needs_central_ideal() {
        let a = ex6();
        assert!(matches!(
            inflation(&a, Category::Dias, &a.full()),
            Err(Error::NotCentral)
        ));
        let ab = DiAlgebra::<Rat>::abelian(2);
        let inf = inflation(&ab, Category::Dias, &ab.full()).unwrap();
        assert_eq!(inf.source.dim(), 0);
        assert_eq!(inf.h2_image_dim, 0);
    }

    #[test]
    fn transgression_on_running_example() {
        let a = ex6();
        let tra = transgression(&a, Category::Dias, &a.center()).unwrap();
        // quotient is 1-dim abelian; g⊣(x̄1, x̄1) = g⊢(x̄1, x̄1) = x
        assert_eq!(tra.matrix, Mat::from_i64(2, 1, &[1, 1]));
        let zq = cocycle_space(&tra.quotient.algebra, Category::Dias).unwrap();
        let bq = coboundary_space(&tra.quotient.algebra, Category::Dias).unwrap();
        let img = tra.matrix.image();
        assert!(img.is_subspace_of(&zq.basis));
        assert_eq!(img.sum(&bq.basis).unwrap().dim() - bq.dim(), 1);
    }

    #[test]
    fn transgression_of_split_summand_is_zero_on_classes() {
        // ex6 ⊕ F: the extra coordinate is a direct-summand central ideal
        let mut a = DiAlgebra::<Rat>::abelian(3);
        let one = Rat::from_integer(1.into());
        a.set_sc(crate::Product::Left, 0, 0, 1, one.clone());
        a.set_sc(crate::Product::Right, 0, 0, 1, one);
        let z = Subspace::coordinate(3, &[2]);
        let tra = transgression(&a, Category::Dias, &z).unwrap();
        assert!(tra.matrix.is_zero());
    }

    #[test]
    fn delta_on_running_example() {
        let a = ex6();
        let d = delta_map(&a, Category::Dias, &a.derived(), &a.center()).unwrap();
        assert_eq!(d.codomain_dim, 4);
        assert_eq!(d.h2_kernel_dim, 1);
        assert_eq!(d.h2_image_dim, 1);
        let cob = coboundary_space(&a, Category::Dias).unwrap().basis;
        for b in cob.basis() {
            assert!(d.matrix.apply(b).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn delta_degenerate_cases() {
        let a = ex6();
        let d = delta_map(&a, Category::Dias, &a.derived(), &Subspace::zero(2)).unwrap();
        assert_eq!(d.codomain_dim, 0);
        assert_eq!(d.h2_kernel_dim, 2);
        // Z² has a cocycle with f(e0, e1) != 0
        assert!(matches!(
            delta_map(&a, Category::Dias, &a.full(), &a.center()),
            Err(Error::HypothesisFailed(_))
        ));
        assert!(matches!(
            delta_map(&a, Category::Dias, &Subspace::zero(2), &a.center()),
            Err(Error::HypothesisFailed(_))
        ));
    }
}
