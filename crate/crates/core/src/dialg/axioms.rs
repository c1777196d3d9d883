use std::fmt;

use super::{DiAlgebra, Product};
use crate::exactlin::{unit_vector, Scalar};

/// The five identities a diassociative algebra satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `x ⊣ (y ⊣ z) = (x ⊣ y) ⊣ z`
    AssocLeft,
    /// `x ⊢ (y ⊢ z) = (x ⊢ y) ⊢ z`
    AssocRight,
    /// `x ⊣ (y ⊣ z) = x ⊣ (y ⊢ z)`
    Eq1,
    /// `(x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)`
    Eq2,
    /// `(x ⊣ y) ⊢ z = (x ⊢ y) ⊢ z`
    Eq3,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::AssocLeft,
        Axiom::AssocRight,
        Axiom::Eq1,
        Axiom::Eq2,
        Axiom::Eq3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AssocLeft => "assoc-left",
            Axiom::AssocRight => "assoc-right",
            Axiom::Eq1 => "eq1",
            Axiom::Eq2 => "eq2",
            Axiom::Eq3 => "eq3",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failing basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<S: Scalar> {
    pub axiom: Axiom,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: Vec<S>,
    pub rhs: Vec<S>,
}

impl<S: Scalar> DiAlgebra<S> {
    /// Both sides of `axiom` at the basis triple `(i, j, k)`.
    pub fn axiom_sides(&self, axiom: Axiom, i: usize, j: usize, k: usize) -> (Vec<S>, Vec<S>) {
        use Product::{Left as L, Right as R};
        let n = self.dim();
        let (ei, ek) = (unit_vector(n, i), unit_vector(n, k));
        // x (y z) with outer product `o` and inner product `p`
        let right_nested = |o: Product, p: Product| self.mul(o, &ei, &self.mul_basis(p, j, k));
        // (x y) z with inner product `p` and outer product `o`
        let left_nested = |p: Product, o: Product| self.mul(o, &self.mul_basis(p, i, j), &ek);
        match axiom {
            Axiom::AssocLeft => (right_nested(L, L), left_nested(L, L)),
            Axiom::AssocRight => (right_nested(R, R), left_nested(R, R)),
            Axiom::Eq1 => (right_nested(L, L), right_nested(L, R)),
            Axiom::Eq2 => (left_nested(R, L), right_nested(R, L)),
            Axiom::Eq3 => (left_nested(L, R), left_nested(R, R)),
        }
    }

    /// Every failing `(axiom, i, j, k)`; empty means the algebra is diassociative.
    pub fn validate_axioms(&self) -> Vec<Violation<S>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for axiom in Axiom::ALL {
                        let (lhs, rhs) = self.axiom_sides(axiom, i, j, k);
                        if lhs != rhs {
                            out.push(Violation {
                                axiom,
                                i,
                                j,
                                k,
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate_axioms().is_empty()
    }

    pub(crate) fn associativity_failure(&self, p: Product) -> Option<(usize, usize, usize)> {
        let axiom = match p {
            Product::Left => Axiom::AssocLeft,
            Product::Right => Axiom::AssocRight,
        };
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (l, r) = self.axiom_sides(axiom, i, j, k);
                    if l != r {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}
