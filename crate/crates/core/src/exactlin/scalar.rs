use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact field element.
///
/// Only rational types implement this. Reduction decisions (is this pivot zero?) are
/// made by exact comparison, which floating point cannot support.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Eq + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Parses `"p/q"` or `"p"`. Non-reduced input is accepted and normalised.
    fn parse(s: &str) -> Option<Self>;
}

macro_rules! impl_ratio_scalar {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_i64(v: i64) -> Self {
                Ratio::from_integer(<$int>::from(v))
            }

            fn parse(s: &str) -> Option<Self> {
                Ratio::<$int>::from_str(s.trim()).ok()
            }
        }
    };
}

impl_ratio_scalar!(BigInt);
impl_ratio_scalar!(i64);
impl_ratio_scalar!(i128);

/// Parses a comma-separated list of rationals, e.g. `"0, 1/2, -3"`.
pub fn parse_vector<S: Scalar>(s: &str) -> Option<Vec<S>> {
    if s.trim().is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(S::parse).collect()
}

pub fn format_vector<S: std::fmt::Display>(v: &[S]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
