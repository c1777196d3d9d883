use super::{cocycle_space, Category, CocyclePair};
use crate::dialg::{DiAlgebra, Product};
use crate::exactlin::{unit_vector, Mat, Scalar, Subspace};
use crate::{Error, Result};

/// `0 → kernel → total → base → 0` with `kernel` central in `total`.
#[derive(Clone, Debug)]
pub struct CentralExtension<S: Scalar> {
    pub total: DiAlgebra<S>,
    pub kernel: Subspace<S>,
    /// `base.dim x total.dim`
    pub projection: Mat<S>,
}

impl<S: Scalar> CentralExtension<S> {
    /// The extension `0 → Z → L → L/Z → 0` for a central ideal `Z`.
    pub fn from_ideal(a: &DiAlgebra<S>, z: &Subspace<S>) -> Result<Self> {
        if !a.is_central(z)? {
            return Err(Error::NotCentral);
        }
        let q = a.quotient(z)?;
        Ok(CentralExtension {
            total: a.clone(),
            kernel: z.clone(),
            projection: q.projection,
        })
    }

    pub fn base_dim(&self) -> usize {
        self.projection.rows()
    }

    /// Section through the unit vectors at the kernel's non-pivot coordinates.
    pub fn canonical_section(&self) -> Result<Mat<S>> {
        let total = self.total.dim();
        let comp = self.kernel.complement_coords();
        let cols: Vec<Vec<S>> = comp.iter().map(|&c| unit_vector(total, c)).collect();
        let embed = Mat::from_cols(total, &cols);
        let square = self.projection.mul(&embed);
        let inv = square.inverse().ok_or(Error::NotInvertible)?;
        Ok(embed.mul(&inv))
    }

    /// `f_p(i, j) = μ(i) ∘_p μ(j) - μ(i ∘_p j)` for a linear section `μ`, one pair per
    /// kernel coordinate.
    pub fn section_cocycle(&self, section: &Mat<S>) -> Result<Vec<CocyclePair<S>>> {
        let n = self.base_dim();
        if section.rows() != self.total.dim()
            || section.cols() != n
            || self.projection.mul(section) != Mat::identity(n)
        {
            return Err(Error::NotASection);
        }
        let images: Vec<Vec<S>> = (0..n).map(|i| section.col(i)).collect();
        let mut pairs = vec![CocyclePair::zero(n); self.kernel.dim()];
        for p in Product::BOTH {
            for i in 0..n {
                for j in 0..n {
                    let w = self.total.mul(p, &images[i], &images[j]);
                    let lifted = section.apply(&self.projection.apply(&w));
                    let g: Vec<S> = w.into_iter().zip(lifted).map(|(a, b)| a - b).collect();
                    debug_assert!(self.kernel.contains(&g));
                    for (pair, c) in pairs.iter_mut().zip(self.kernel.coordinates(&g)) {
                        match p {
                            Product::Left => pair.f_left[(i, j)] = c,
                            Product::Right => pair.f_right[(i, j)] = c,
                        }
                    }
                }
            }
        }
        Ok(pairs)
    }
}

/// Central extension of `a` by one new coordinate per cocycle:
/// `(x, u) ∘ (y, v) = (x ∘ y, f_∘(x, y))`.
pub fn extend_by_cocycles<S: Scalar>(
    a: &DiAlgebra<S>,
    cocycles: &[CocyclePair<S>],
) -> Result<CentralExtension<S>> {
    let n = a.dim();
    let k = cocycles.len();
    if !cocycles.is_empty() {
        let z = cocycle_space(a, Category::Dias)?;
        for c in cocycles {
            if c.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.dim(),
                });
            }
            if !z.basis.contains(&c.flat()) {
                return Err(Error::NotACocycle);
            }
        }
    }
    let total_dim = n + k;
    let mut total = DiAlgebra::abelian(total_dim);
    for p in Product::BOTH {
        for i in 0..n {
            for j in 0..n {
                for (m, x) in a.mul_basis(p, i, j).into_iter().enumerate() {
                    total.set_sc(p, i, j, m, x);
                }
                for (c, pair) in cocycles.iter().enumerate() {
                    total.set_sc(p, i, j, n + c, pair.form(p)[(i, j)].clone());
                }
            }
        }
    }
    let mut names = a.names().to_vec();
    names.extend((0..k).map(|c| format!("m{c}")));
    let total = total.with_names(names)?;
    let mut projection = Mat::zeros(n, total_dim);
    for i in 0..n {
        projection[(i, i)] = S::one();
    }
    let kernel_coords: Vec<usize> = (n..total_dim).collect();
    Ok(CentralExtension {
        total,
        kernel: Subspace::coordinate(total_dim, &kernel_coords),
        projection,
    })
}

/// Checks that `(k, m)` is a defining pair of `l`: `m ⊆ Z(k) ∩ k'` and `basis_map`
/// (quotient coordinates to `l` coordinates) is an algebra isomorphism `k/m → l`.
pub fn verify_defining_pair<S: Scalar>(
    k: &DiAlgebra<S>,
    m: &Subspace<S>,
    l: &DiAlgebra<S>,
    basis_map: &Mat<S>,
) -> Result<bool> {
    if m.ambient_dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            found: m.ambient_dim(),
        });
    }
    // a central subspace is automatically an ideal, so this runs before the quotient
    let allowed = k.center().intersect(&k.derived())?;
    if !m.is_subspace_of(&allowed) {
        return Ok(false);
    }
    let q = k.quotient(m)?;
    if basis_map.rows() != l.dim() || basis_map.cols() != q.algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: q.algebra.dim(),
            found: basis_map.cols(),
        });
    }
    if !basis_map.is_invertible() {
        return Err(Error::NotInvertible);
    }
    Ok(q.algebra.is_homomorphism(l, basis_map))
}
