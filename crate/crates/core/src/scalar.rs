//! Exact scalar types.
//!
//! Everything numeric in this crate (state values, function values, LP and
//! vertex-enumeration arithmetic) is generic over [`Scalar`]. Only exact
//! ordered fields qualify: equality tests drive every verdict, so floating
//! point types are deliberately not implemented.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed};

/// An exact ordered field element.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Ord + Hash + Signed + Send + Sync + 'static {
    /// Builds `num / den`. Panics if `den == 0`.
    fn ratio(num: i64, den: i64) -> Self;

    /// Parses `p/q`, `p` or `-p/q`.
    fn parse(text: &str) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    /// True iff `0 <= self <= 1`.
    fn in_unit_interval(&self) -> bool {
        !self.is_negative() && *self <= Self::one()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + Integer
        + Signed
        + Hash
        + FromPrimitive
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn ratio(num: i64, den: i64) -> Self {
        let num = T::from_i64(num).expect("numerator fits the integer type");
        let den = T::from_i64(den).expect("denominator fits the integer type");
        Ratio::new(num, den)
    }

    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = T::from_str(num).ok()?;
        let den = T::from_str(den).ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num, den))
    }
}

/// Arbitrary-precision rational; the default scalar everywhere.
pub type BigRational = Ratio<BigInt>;

/// Machine-word rational. Faster, but arithmetic may overflow and panic on
/// large inputs.
pub type Rational64 = Ratio<i64>;

/// Sum of a sequence of scalars.
pub fn sum<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> S {
    values.into_iter().fold(S::zero(), |acc, v| acc + v.clone())
}
