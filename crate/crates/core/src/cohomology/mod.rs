//! Second cohomology with coefficients in the ground field.
//!
//! A 2-cochain is a pair of bilinear forms `(f⊣, f⊢)`, stored flat as `f⊣` row-major
//! followed by `f⊢` row-major (length `2n²`). In the associative category there is a
//! single form and the flat length is `n²`. Cocycles are the solutions of the linear
//! conditions below over all basis triples `(i, j, k)`:
//!
//! ```text
//! C1  f⊣(i, j⊣k) = f⊣(i, j⊢k)        C4  f⊣(i, j⊣k) = f⊣(i⊣j, k)
//! C2  f⊣(i⊢j, k) = f⊢(i, j⊣k)        C5  f⊢(i, j⊢k) = f⊢(i⊢j, k)
//! C3  f⊢(i⊣j, k) = f⊢(i⊢j, k)
//! ```
//!
//! and, for associative algebras, `f(i, jk) = f(ij, k)`. Coboundaries are the pairs
//! `(-ε∘⊣, -ε∘⊢)` for a linear functional `ε`.

mod extension;
mod generator;
mod maps;

pub use extension::{extend_by_cocycles, verify_defining_pair, CentralExtension};
pub use generator::{random_nilpotent, random_nilpotent_in};
pub use maps::{delta_map, inflation, transgression, DeltaMap, InflationMap, TransgressionMap};
pub(crate) use maps::{delta_map_in, inflation_in};

use std::fmt;

use crate::dialg::{DiAlgebra, Product};
use crate::exactlin::{Mat, Scalar, Subspace};
use crate::{Error, Result};

/// Which cohomology theory to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    /// Pairs of forms, conditions C1 to C5.
    Dias,
    /// Single forms on an algebra with `⊣ = ⊢`.
    Assoc,
}

impl Category {
    /// Number of bilinear forms in a cochain.
    pub fn forms(self) -> usize {
        self.products().len()
    }

    /// The product each form is paired with.
    pub fn products(self) -> &'static [Product] {
        match self {
            Category::Dias => &Product::BOTH,
            Category::Assoc => &[Product::Left],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Category::Dias => "dias",
            Category::Assoc => "assoc",
        }
    }

    /// Fails with [`Error::CategoryMismatch`] when `a` is not an algebra of this category.
    pub fn check<S: Scalar>(self, a: &DiAlgebra<S>) -> Result<()> {
        if self == Category::Assoc && !a.is_associative_type() {
            return Err(Error::CategoryMismatch);
        }
        Ok(())
    }

    /// Length of a flat cochain on an `n`-dimensional algebra.
    pub fn flat_len(self, n: usize) -> usize {
        self.forms() * n * n
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dias" => Ok(Category::Dias),
            "assoc" => Ok(Category::Assoc),
            other => Err(Error::Parse(format!("unknown category {other:?}"))),
        }
    }
}

#[inline]
pub(crate) fn flat_index(n: usize, form: usize, i: usize, j: usize) -> usize {
    form * n * n + i * n + j
}

/// A pair of scalar-valued bilinear forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CocyclePair<S: Scalar> {
    pub f_left: Mat<S>,
    pub f_right: Mat<S>,
}

impl<S: Scalar> CocyclePair<S> {
    pub fn zero(n: usize) -> Self {
        CocyclePair {
            f_left: Mat::zeros(n, n),
            f_right: Mat::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.f_left.rows()
    }

    /// From a flat vector of length `2n²`.
    pub fn from_flat(n: usize, flat: &[S]) -> Self {
        assert_eq!(flat.len(), 2 * n * n, "flat cochain length");
        let (l, r) = flat.split_at(n * n);
        let rows = |v: &[S]| v.chunks(n.max(1)).map(|c| c.to_vec()).collect::<Vec<_>>();
        CocyclePair {
            f_left: Mat::from_rows(n, if n == 0 { vec![] } else { rows(l) }),
            f_right: Mat::from_rows(n, if n == 0 { vec![] } else { rows(r) }),
        }
    }

    /// From a flat cochain of the given category; an associative form `f` becomes `(f, f)`.
    pub fn from_category_flat(category: Category, n: usize, flat: &[S]) -> Self {
        match category {
            Category::Dias => Self::from_flat(n, flat),
            Category::Assoc => {
                let mut doubled = flat.to_vec();
                doubled.extend_from_slice(flat);
                Self::from_flat(n, &doubled)
            }
        }
    }

    pub fn flat(&self) -> Vec<S> {
        let mut v = self.f_left.to_rows().concat();
        v.extend(self.f_right.to_rows().concat());
        v
    }

    /// Flat cochain in the given category. Associative cochains keep only `f⊣`.
    pub fn flatten(&self, category: Category) -> Vec<S> {
        match category {
            Category::Dias => self.flat(),
            Category::Assoc => self.f_left.to_rows().concat(),
        }
    }

    pub fn form(&self, p: Product) -> &Mat<S> {
        match p {
            Product::Left => &self.f_left,
            Product::Right => &self.f_right,
        }
    }

    /// `f_p(x, y)` for arbitrary vectors.
    pub fn eval(&self, p: Product, x: &[S], y: &[S]) -> S {
        let f = self.form(p);
        let fy = f.apply(y);
        crate::exactlin::dot(x, &fy)
    }
}

impl<S: Scalar> fmt::Debug for CocyclePair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CocyclePair")
            .field("f_left", &self.f_left)
            .field("f_right", &self.f_right)
            .finish()
    }
}

/// A subspace of flat cochains: `Z²`, `B²`, or something derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSpace<S: Scalar> {
    pub n: usize,
    pub category: Category,
    pub basis: Subspace<S>,
}

impl<S: Scalar> CocycleSpace<S> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn pairs(&self) -> Vec<CocyclePair<S>> {
        self.basis
            .basis()
            .iter()
            .map(|v| CocyclePair::from_category_flat(self.category, self.n, v))
            .collect()
    }
}

/// One side of a cocycle condition at a basis triple.
#[derive(Clone, Copy)]
enum Side {
    /// `f_t(e_i, e_j ∘_p e_k)`
    Inner(usize, Product),
    /// `f_t(e_i ∘_p e_j, e_k)`
    Outer(usize, Product),
}

/// Conditions as `lhs - rhs`, in the order C1..C5 (or the single associative one).
fn conditions(category: Category) -> &'static [(Side, Side)] {
    use Product::{Left as L, Right as R};
    use Side::{Inner, Outer};
    match category {
        Category::Dias => &[
            (Inner(0, L), Inner(0, R)),
            (Outer(0, R), Inner(1, L)),
            (Outer(1, L), Outer(1, R)),
            (Inner(0, L), Outer(0, L)),
            (Inner(1, R), Outer(1, R)),
        ],
        Category::Assoc => &[(Inner(0, L), Outer(0, L))],
    }
}

/// Nonzero entries of one condition at `(i, j, k)`, merged by column.
fn condition_row<S: Scalar>(
    a: &DiAlgebra<S>,
    (lhs, rhs): (Side, Side),
    i: usize,
    j: usize,
    k: usize,
) -> Vec<(usize, S)> {
    let n = a.dim();
    let mut terms: Vec<(usize, S)> = Vec::new();
    for (side, negate) in [(lhs, false), (rhs, true)] {
        for mid in 0..n {
            let (c, col) = match side {
                Side::Inner(t, p) => (a.sc(p, j, k, mid), flat_index(n, t, i, mid)),
                Side::Outer(t, p) => (a.sc(p, i, j, mid), flat_index(n, t, mid, k)),
            };
            if c.is_zero() {
                continue;
            }
            let c = if negate { -c.clone() } else { c.clone() };
            match terms.iter_mut().find(|(x, _)| *x == col) {
                Some((_, v)) => *v = v.clone() + c,
                None => terms.push((col, c)),
            }
        }
    }
    terms.retain(|(_, v)| !v.is_zero());
    terms
}

fn densify<S: Scalar>(len: usize, terms: Vec<(usize, S)>) -> Vec<S> {
    let mut row = vec![S::zero(); len];
    for (c, v) in terms {
        row[c] = v;
    }
    row
}

/// The stacked linear system whose nullspace is `Z²(L, F)`: one row per condition and
/// basis triple `(i, j, k)`, conditions in blocks of `n³`.
pub fn cocycle_system<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Mat<S> {
    let n = a.dim();
    let width = category.flat_len(n);
    let mut rows = Vec::new();
    for &cond in conditions(category) {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    rows.push(densify(width, condition_row(a, cond, i, j, k)));
                }
            }
        }
    }
    Mat::from_rows(width, rows)
}

/// Distinct nonzero rows of [`cocycle_system`]; same row space, far fewer rows.
fn cocycle_equations<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Mat<S> {
    let n = a.dim();
    let width = category.flat_len(n);
    let mut seen = std::collections::HashSet::new();
    let mut rows = Vec::new();
    for &cond in conditions(category) {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let terms = condition_row(a, cond, i, j, k);
                    if !terms.is_empty() && seen.insert(terms.clone()) {
                        rows.push(densify(width, terms));
                    }
                }
            }
        }
    }
    Mat::from_rows(width, rows)
}

/// `Z²(L, F)`
pub fn cocycle_space<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Result<CocycleSpace<S>> {
    category.check(a)?;
    Ok(CocycleSpace {
        n: a.dim(),
        category,
        basis: cocycle_equations(a, category).nullspace(),
    })
}

/// Matrix of `ε ↦ (-ε∘⊣, -ε∘⊢)` from functionals to flat cochains.
pub fn coboundary_operator<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Mat<S> {
    let n = a.dim();
    let mut m = Mat::zeros(category.flat_len(n), n);
    for (t, &p) in category.products().iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = a.sc(p, i, j, k);
                    if !c.is_zero() {
                        m[(flat_index(n, t, i, j), k)] = -c.clone();
                    }
                }
            }
        }
    }
    m
}

/// `B²(L, F)`
pub fn coboundary_space<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
) -> Result<CocycleSpace<S>> {
    category.check(a)?;
    Ok(CocycleSpace {
        n: a.dim(),
        category,
        basis: coboundary_operator(a, category).image(),
    })
}

/// Dimensions of `Z²`, `B²` and `H² = Z²/B²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiplierDims {
    pub cocycles: usize,
    pub coboundaries: usize,
    pub multiplier: usize,
}

pub fn multiplier_dims<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Result<MultiplierDims> {
    let z = cocycle_space(a, category)?.dim();
    let b = coboundary_space(a, category)?.dim();
    Ok(MultiplierDims {
        cocycles: z,
        coboundaries: b,
        multiplier: z - b,
    })
}

/// `dim M(L) = dim H²(L, F)`
pub fn multiplier_dim<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Result<usize> {
    Ok(multiplier_dims(a, category)?.multiplier)
}

/// `dim Hom(L, F)`: homomorphisms into the one-dimensional zero algebra kill `L'`.
pub fn hom_dim<S: Scalar>(a: &DiAlgebra<S>) -> usize {
    a.dim() - a.derived().dim()
}

/// `dim Hom(Z, F)` for a central ideal, which carries only zero products.
pub fn hom_dim_restricted<S: Scalar>(_a: &DiAlgebra<S>, z: &Subspace<S>) -> usize {
    z.dim()
}

/// Row that evaluates form `t` of a flat cochain at `(x, y)`.
pub(crate) fn eval_row<S: Scalar>(
    n: usize,
    category: Category,
    t: usize,
    x: &[S],
    y: &[S],
) -> Vec<S> {
    let mut row = vec![S::zero(); category.flat_len(n)];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            row[flat_index(n, t, i, j)] = xi.clone() * yj.clone();
        }
    }
    row
}

/// `Z²` and `B²` of one algebra, computed once and shared by the maps of a single report.
#[derive(Clone, Debug)]
pub(crate) struct Spaces<S: Scalar> {
    pub cocycles: Subspace<S>,
    pub coboundaries: Subspace<S>,
}

impl<S: Scalar> Spaces<S> {
    pub(crate) fn of(a: &DiAlgebra<S>, category: Category) -> Result<Self> {
        Ok(Spaces {
            cocycles: cocycle_space(a, category)?.basis,
            coboundaries: coboundary_space(a, category)?.basis,
        })
    }

    pub(crate) fn h2_dim(&self) -> usize {
        self.cocycles.dim() - self.coboundaries.dim()
    }
}

/// Whether every cocycle vanishes on `u × v` and `v × u`, for every form.
pub fn vanishing_check<S: Scalar>(
    a: &DiAlgebra<S>,
    category: Category,
    u: &Subspace<S>,
    v: &Subspace<S>,
) -> Result<bool> {
    for s in [u, v] {
        if s.ambient_dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: s.ambient_dim(),
            });
        }
    }
    let z = cocycle_space(a, category)?;
    Ok(vanishes(a.dim(), category, &z.basis, u, v))
}

pub(crate) fn vanishes<S: Scalar>(
    n: usize,
    category: Category,
    cocycles: &Subspace<S>,
    u: &Subspace<S>,
    v: &Subspace<S>,
) -> bool {
    for t in 0..category.forms() {
        for x in u.basis() {
            for y in v.basis() {
                for row in [eval_row(n, category, t, x, y), eval_row(n, category, t, y, x)] {
                    if cocycles.evaluate(&row).iter().any(|c| !c.is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
