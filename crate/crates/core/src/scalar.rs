//! Scalar abstraction shared by the linear algebra, the Schur-coordinate
//! vectors and the polynomial evaluator.
//!
//! Everything that is checked by this crate runs over [`BigInt`] or
//! [`BigRational`]; the floating point impls exist so the same routines can
//! be used for quick numerical estimates.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};

/// A commutative ring element usable by the generic routines of this crate.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    /// Embeds a machine integer.
    fn int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

/// Scalars in which `/` is true division.
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for BigRational {}
impl Field for Ratio<i64> {}

/// Scalars whose arithmetic is exact, so equality tests are meaningful.
pub trait Exact: Scalar {
    /// `Some(v)` when the value is an integer.
    fn to_integer(&self) -> Option<BigInt>;
}

impl Exact for BigInt {
    fn to_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl Exact for i64 {
    fn to_integer(&self) -> Option<BigInt> {
        Some(BigInt::from(*self))
    }
}

impl Exact for BigRational {
    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| Ratio::to_integer(self))
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(
            parse_rational("3").unwrap(),
            BigRational::from_integer(3.into())
        );
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            BigRational::new((-3).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn int_embedding() {
        assert_eq!(<f64 as Scalar>::int(-3), -3.0);
        assert_eq!(<BigInt as Scalar>::int(7), BigInt::from(7));
    }
}
