//! Diassociative algebras given by structure constants.

mod axioms;
mod series;

use std::fmt;

pub use axioms::{Axiom, Violation};
pub use series::{SeriesReport, Variant};

use crate::exactlin::{Mat, Scalar, Subspace};
use crate::{Error, Result};

/// One of the two products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Product {
    /// `⊣`
    Left,
    /// `⊢`
    Right,
}

impl Product {
    pub const BOTH: [Product; 2] = [Product::Left, Product::Right];

    pub fn symbol(self) -> &'static str {
        match self {
            Product::Left => "⊣",
            Product::Right => "⊢",
        }
    }
}

/// Which products to take between two subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceProduct {
    Left,
    Right,
    /// `A ◊ B = A ⊣ B + A ⊢ B`
    Diamond,
}

/// A finite-dimensional algebra with two bilinear products.
///
/// `e_i ⊣ e_j = Σ_k left[i][j][k] e_k`, and likewise for `⊢`. Construction does not
/// check the axioms; call [`DiAlgebra::validate_axioms`] for that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiAlgebra<S: Scalar> {
    dim: usize,
    left: Vec<S>,
    right: Vec<S>,
    names: Vec<String>,
}

/// A quotient algebra together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient<S: Scalar> {
    pub algebra: DiAlgebra<S>,
    /// `q x n` matrix from the parent's coordinates to quotient coordinates.
    pub projection: Mat<S>,
    /// Parent coordinates whose unit vectors represent the quotient basis.
    pub complement: Vec<usize>,
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl<S: Scalar> DiAlgebra<S> {
    /// The algebra with all products zero.
    pub fn abelian(dim: usize) -> Self {
        let n3 = dim * dim * dim;
        DiAlgebra {
            dim,
            left: vec![S::zero(); n3],
            right: vec![S::zero(); n3],
            names: default_names(dim),
        }
    }

    /// Builds an algebra from flat `n³` tensors indexed `(i * n + j) * n + k`.
    pub fn from_tensors(dim: usize, left: Vec<S>, right: Vec<S>) -> Result<Self> {
        let n3 = dim * dim * dim;
        for len in [left.len(), right.len()] {
            if len != n3 {
                return Err(Error::DimensionMismatch {
                    expected: n3,
                    found: len,
                });
            }
        }
        Ok(DiAlgebra {
            dim,
            left,
            right,
            names: default_names(dim),
        })
    }

    /// Builds an algebra from sparse `(i, j, k, coeff)` entries for each product.
    pub fn from_entries(
        dim: usize,
        left: &[(usize, usize, usize, S)],
        right: &[(usize, usize, usize, S)],
    ) -> Result<Self> {
        let mut a = Self::abelian(dim);
        for (p, entries) in [(Product::Left, left), (Product::Right, right)] {
            for (i, j, k, c) in entries {
                for idx in [*i, *j, *k] {
                    if idx >= dim {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            found: idx + 1,
                        });
                    }
                }
                a.set_sc(p, *i, *j, *k, c.clone());
            }
        }
        Ok(a)
    }

    /// Treats an associative algebra as a diassociative one with `⊣ = ⊢`.
    pub fn from_associative(dim: usize, sc: Vec<S>) -> Result<Self> {
        let a = Self::from_tensors(dim, sc.clone(), sc)?;
        if let Some((i, j, k)) = a.associativity_failure(Product::Left) {
            return Err(Error::NotAssociative(i, j, k));
        }
        Ok(a)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn tensor(&self, p: Product) -> &[S] {
        match p {
            Product::Left => &self.left,
            Product::Right => &self.right,
        }
    }

    #[inline]
    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn sc(&self, p: Product, i: usize, j: usize, k: usize) -> &S {
        &self.tensor(p)[self.index(i, j, k)]
    }

    pub fn set_sc(&mut self, p: Product, i: usize, j: usize, k: usize, value: S) {
        let idx = self.index(i, j, k);
        match p {
            Product::Left => self.left[idx] = value,
            Product::Right => self.right[idx] = value,
        }
    }

    /// `e_i ∘ e_j` as a coordinate vector.
    pub fn mul_basis(&self, p: Product, i: usize, j: usize) -> Vec<S> {
        let start = self.index(i, j, 0);
        self.tensor(p)[start..start + self.dim].to_vec()
    }

    /// `x ∘ y` for arbitrary coordinate vectors.
    pub fn mul(&self, p: Product, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim;
        let t = self.tensor(p);
        let mut out = vec![S::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi.clone() * yj.clone();
                let start = self.index(i, j, 0);
                for (o, s) in out.iter_mut().zip(&t[start..start + n]) {
                    if !s.is_zero() {
                        *o = o.clone() + c.clone() * s.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ e_a ∘ x`.
    pub fn left_mult_matrix(&self, p: Product, a: usize) -> Mat<S> {
        let cols: Vec<Vec<S>> = (0..self.dim).map(|j| self.mul_basis(p, a, j)).collect();
        Mat::from_cols(self.dim, &cols)
    }

    /// Matrix of `x ↦ x ∘ e_a`.
    pub fn right_mult_matrix(&self, p: Product, a: usize) -> Mat<S> {
        let cols: Vec<Vec<S>> = (0..self.dim).map(|i| self.mul_basis(p, i, a)).collect();
        Mat::from_cols(self.dim, &cols)
    }

    /// All `4n` multiplication operators `x ↦ e_a ∘ x`, `x ↦ x ∘ e_a`.
    fn multiplication_operators(&self) -> Vec<Mat<S>> {
        let mut ops = Vec::with_capacity(4 * self.dim);
        for a in 0..self.dim {
            for p in Product::BOTH {
                ops.push(self.left_mult_matrix(p, a));
                ops.push(self.right_mult_matrix(p, a));
            }
        }
        ops
    }

    pub fn is_abelian(&self) -> bool {
        self.left.iter().chain(&self.right).all(|x| x.is_zero())
    }

    /// True when `⊣` and `⊢` have identical structure constants.
    pub fn is_associative_type(&self) -> bool {
        self.left == self.right
    }

    fn check_space(&self, u: &Subspace<S>) -> Result<()> {
        if u.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Span of the chosen products of basis vectors of `u` with basis vectors of `v`.
    pub fn product_subspaces(
        &self,
        u: &Subspace<S>,
        v: &Subspace<S>,
        which: SubspaceProduct,
    ) -> Result<Subspace<S>> {
        self.check_space(u)?;
        self.check_space(v)?;
        let products: &[Product] = match which {
            SubspaceProduct::Left => &[Product::Left],
            SubspaceProduct::Right => &[Product::Right],
            SubspaceProduct::Diamond => &Product::BOTH,
        };
        let mut vectors = Vec::new();
        for x in u.basis() {
            for y in v.basis() {
                for &p in products {
                    vectors.push(self.mul(p, x, y));
                }
            }
        }
        Ok(Subspace::from_vectors(self.dim, vectors))
    }

    pub(crate) fn diamond(&self, u: &Subspace<S>, v: &Subspace<S>) -> Subspace<S> {
        self.product_subspaces(u, v, SubspaceProduct::Diamond)
            .expect("subspaces of this algebra")
    }

    pub fn full(&self) -> Subspace<S> {
        Subspace::full(self.dim)
    }

    /// `L' = L ◊ L`
    pub fn derived(&self) -> Subspace<S> {
        let full = self.full();
        self.diamond(&full, &full)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().is_full()
    }

    /// Checks the four products of every basis element of `u` with every basis element of `L`.
    pub fn is_ideal(&self, u: &Subspace<S>) -> Result<bool> {
        self.check_space(u)?;
        for x in u.basis() {
            for a in 0..self.dim {
                for p in Product::BOTH {
                    let ea = crate::exactlin::unit_vector(self.dim, a);
                    if !u.contains(&self.mul(p, x, &ea)) || !u.contains(&self.mul(p, &ea, x)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_central(&self, u: &Subspace<S>) -> Result<bool> {
        self.check_space(u)?;
        Ok(u.is_subspace_of(&self.center()))
    }

    /// Elements whose four products with everything vanish.
    pub fn center(&self) -> Subspace<S> {
        Subspace::zero(self.dim).preimage_under_all(&self.multiplication_operators())
    }

    /// `{x : x ∘ l, l ∘ x ∈ target for all l and both products}`
    pub(crate) fn preimage_of(&self, target: &Subspace<S>) -> Subspace<S> {
        target.preimage_under_all(&self.multiplication_operators())
    }

    /// Quotient by an ideal, on the basis of unit vectors at the ideal's non-pivot coordinates.
    pub fn quotient(&self, ideal: &Subspace<S>) -> Result<Quotient<S>> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let complement = ideal.complement_coords();
        let q = complement.len();
        let project = |v: &[S]| -> Vec<S> {
            let r = ideal.reduce(v);
            complement.iter().map(|&c| r[c].clone()).collect()
        };
        let cols: Vec<Vec<S>> = (0..self.dim)
            .map(|j| project(&crate::exactlin::unit_vector(self.dim, j)))
            .collect();
        let projection = Mat::from_cols(q, &cols);
        let mut algebra = Self::abelian(q);
        for p in Product::BOTH {
            for (a, &ca) in complement.iter().enumerate() {
                for (b, &cb) in complement.iter().enumerate() {
                    for (k, x) in project(&self.mul_basis(p, ca, cb)).into_iter().enumerate() {
                        algebra.set_sc(p, a, b, k, x);
                    }
                }
            }
        }
        algebra.names = complement.iter().map(|&c| self.names[c].clone()).collect();
        Ok(Quotient {
            algebra,
            projection,
            complement,
        })
    }

    /// Whether `map` (a `target.dim x self.dim` matrix) preserves both products.
    pub fn is_homomorphism(&self, target: &DiAlgebra<S>, map: &Mat<S>) -> bool {
        if map.rows() != target.dim || map.cols() != self.dim {
            return false;
        }
        let images: Vec<Vec<S>> = (0..self.dim).map(|i| map.col(i)).collect();
        for p in Product::BOTH {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let lhs = map.apply(&self.mul_basis(p, i, j));
                    let rhs = target.mul(p, &images[i], &images[j]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl<S: Scalar> fmt::Debug for DiAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DiAlgebra(dim {})", self.dim)?;
        let n = self.dim;
        for p in Product::BOTH {
            let t = match p {
                Product::Left => &self.left,
                Product::Right => &self.right,
            };
            for i in 0..n {
                for j in 0..n {
                    let v = &t[(i * n + j) * n..(i * n + j + 1) * n];
                    if v.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let terms: Vec<String> = v
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| format!("{x}*{}", self.names[k]))
                        .collect();
                    writeln!(
                        f,
                        "  {} {} {} = {}",
                        self.names[i],
                        p.symbol(),
                        self.names[j],
                        terms.join(" + ")
                    )?;
                }
            }
        }
        Ok(())
    }
}
