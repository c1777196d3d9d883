//! Multiplier bounds for nilpotent algebras and the sequences behind them.
//!
//! Every report recomputes its quantities from the algebra, so a single report can be
//! audited on its own. The associative versions use the factor 2 in place of 4, since
//! an associative extension carries one form instead of two.

mod sequence;

pub use sequence::{five_term_report, thm43_report, Arrow, Junction, Node, SequenceReport};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cohomology::{multiplier_dim, Category};
use crate::dialg::DiAlgebra;
use crate::exactlin::{Scalar, Subspace};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `dim H²(L) + 1 ≤ dim H²(L/Z) + 4 dim(L/L')` for a one-dimensional `Z ⊆ Z(L) ∩ L'`.
    Cor42,
    /// `dim H²(L) ≤ dim H²(L/Lⁿ) + 4 dim Lⁿ dim(L/Z_{n-1}) - dim Lⁿ` at class `n`.
    Cor44,
    /// `dim H²(L) ≤ dim H²(L/L') + dim L' [4 dim(L/Z(L)) - 4 dim((L/Z(L))') - 1]`.
    Cor45,
    /// `dim H²(L) ≤ dim H²(L/L') + dim L' [4 dim(L/L') - 1]`.
    Cor46,
    /// `dim H²(L) ≤ -2d² + d + 4nd - n` with `d = dim(L/L')`.
    Cor47,
}

impl BoundKind {
    pub const ALL: [BoundKind; 5] = [
        BoundKind::Cor42,
        BoundKind::Cor44,
        BoundKind::Cor45,
        BoundKind::Cor46,
        BoundKind::Cor47,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Cor42 => "cor42",
            BoundKind::Cor44 => "cor44",
            BoundKind::Cor45 => "cor45",
            BoundKind::Cor46 => "cor46",
            BoundKind::Cor47 => "cor47",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bound `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: BoundKind,
    pub category: Category,
    pub hypotheses_ok: bool,
    pub reasons: Vec<String>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    /// `None` when a hypothesis failed; otherwise `lhs ≤ rhs`.
    pub holds: Option<bool>,
}

impl BoundReport {
    fn refused(name: BoundKind, category: Category, reasons: Vec<String>) -> Self {
        BoundReport {
            name,
            category,
            hypotheses_ok: false,
            reasons,
            lhs: None,
            rhs: None,
            holds: None,
        }
    }

    fn evaluated(name: BoundKind, category: Category, lhs: i64, rhs: i64) -> Self {
        BoundReport {
            name,
            category,
            hypotheses_ok: true,
            reasons: Vec::new(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            holds: Some(lhs <= rhs),
        }
    }

    pub fn pair(&self) -> Option<(i64, i64)> {
        Some((self.lhs?, self.rhs?))
    }
}

fn h2<S: Scalar>(a: &DiAlgebra<S>, category: Category) -> Result<i64> {
    Ok(multiplier_dim(a, category)? as i64)
}

fn h2_mod<S: Scalar>(a: &DiAlgebra<S>, category: Category, ideal: &Subspace<S>) -> Result<i64> {
    h2(&a.quotient(ideal)?.algebra, category)
}

/// First basis vector of `Z(L) ∩ L'`, the ideal used for `cor42` when none is given.
pub fn canonical_cor42_ideal<S: Scalar>(a: &DiAlgebra<S>) -> Option<Subspace<S>> {
    let meet = a.center().intersect(&a.derived()).ok()?;
    let v = meet.basis().first()?.clone();
    Some(Subspace::from_vectors(a.dim(), vec![v]))
}

/// Evaluates one bound. Failed hypotheses give a report with no verdict; only a category
/// mismatch or a malformed ideal is an error.
pub fn check_bound<S: Scalar>(
    a: &DiAlgebra<S>,
    which: BoundKind,
    category: Category,
    z: Option<&Subspace<S>>,
) -> Result<BoundReport> {
    category.check(a)?;
    let class = match a.nilpotency_class() {
        Some(c) => c,
        None => {
            return Ok(BoundReport::refused(
                which,
                category,
                vec!["algebra is not nilpotent".into()],
            ))
        }
    };
    let factor = 2 * category.forms() as i64;
    let n = a.dim() as i64;
    let derived = a.derived();
    let dl = derived.dim() as i64;
    let d = n - dl;

    match which {
        BoundKind::Cor42 => {
            let z = match z {
                Some(z) => {
                    if z.ambient_dim() != a.dim() {
                        return Err(Error::DimensionMismatch {
                            expected: a.dim(),
                            found: z.ambient_dim(),
                        });
                    }
                    z.clone()
                }
                None => match canonical_cor42_ideal(a) {
                    Some(z) => z,
                    None => {
                        return Ok(BoundReport::refused(
                            which,
                            category,
                            vec!["Z(L) ∩ L' is zero".into()],
                        ))
                    }
                },
            };
            let mut reasons = Vec::new();
            if z.dim() != 1 {
                reasons.push(format!("ideal has dimension {}, expected 1", z.dim()));
            }
            if !z.is_subspace_of(&a.center()) {
                reasons.push("ideal is not central".into());
            }
            if !z.is_subspace_of(&derived) {
                reasons.push("ideal is not inside L'".into());
            }
            if !reasons.is_empty() {
                return Ok(BoundReport::refused(which, category, reasons));
            }
            let lhs = h2(a, category)? + 1;
            let rhs = h2_mod(a, category, &z)? + factor * d;
            Ok(BoundReport::evaluated(which, category, lhs, rhs))
        }
        BoundKind::Cor44 => {
            if class == 0 {
                return Ok(BoundReport::refused(
                    which,
                    category,
                    vec!["zero algebra has class 0".into()],
                ));
            }
            let series = a.series_report();
            let top = series.lower_term(class).clone();
            let below = series.upper_term(class - 1);
            let t = top.dim() as i64;
            let lhs = h2(a, category)?;
            let rhs = h2_mod(a, category, &top)? + factor * t * (n - below.dim() as i64) - t;
            Ok(BoundReport::evaluated(which, category, lhs, rhs))
        }
        BoundKind::Cor45 => {
            let b = a.quotient(&a.center())?.algebra;
            let bd = b.dim() as i64;
            let bdl = b.derived().dim() as i64;
            let lhs = h2(a, category)?;
            let rhs = h2_mod(a, category, &derived)? + dl * (factor * bd - factor * bdl - 1);
            Ok(BoundReport::evaluated(which, category, lhs, rhs))
        }
        BoundKind::Cor46 => {
            let lhs = h2(a, category)?;
            let rhs = h2_mod(a, category, &derived)? + dl * (factor * d - 1);
            Ok(BoundReport::evaluated(which, category, lhs, rhs))
        }
        BoundKind::Cor47 => {
            let lhs = h2(a, category)?;
            let rhs = -(factor / 2) * d * d + d + factor * n * d - n;
            Ok(BoundReport::evaluated(which, category, lhs, rhs))
        }
    }
}

/// Every bound in every category the algebra belongs to; `cor42` uses the canonical ideal.
pub fn all_bounds<S: Scalar>(a: &DiAlgebra<S>) -> Result<Vec<BoundReport>> {
    let mut categories = vec![Category::Dias];
    if a.is_associative_type() {
        categories.push(Category::Assoc);
    }
    let mut out = Vec::new();
    for category in categories {
        for kind in BoundKind::ALL {
            out.push(check_bound(a, kind, category, None)?);
        }
    }
    Ok(out)
}
