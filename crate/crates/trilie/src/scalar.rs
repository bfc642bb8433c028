//! Exact rational scalars.
//!
//! Every computation in this crate is exact: scalars are arbitrary-precision
//! rationals, always stored reduced with a positive denominator. No floating
//! point is used anywhere.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// An exact rational number.
///
/// Backed by an arbitrary-precision `numerator/denominator` pair that is kept
/// reduced (`gcd = 1`) with the denominator strictly positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as an exact rational. Panics if `q == 0`; use the `FromStr`
    /// implementation for fallible parsing of user input.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        ExactScalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Integer value when the scalar is an integer fitting in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.denom().is_one() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Option<ExactScalar> {
        if self.is_zero() {
            None
        } else {
            Some(ExactScalar(self.0.recip()))
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    /// Parses `p` or `p/q` with optional leading `-`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidScalar(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Ok(ExactScalar(BigRational::new(num, den)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((self.0).$method(rhs.0))
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: ExactScalar) -> ExactScalar {
        assert!(!rhs.is_zero(), "division by zero");
        ExactScalar(self.0 / rhs.0)
    }
}

impl Div<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        assert!(!rhs.is_zero(), "division by zero");
        ExactScalar(&self.0 / &rhs.0)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        self.0 *= &rhs.0;
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        ExactScalar::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_reduces() {
        let a = ExactScalar::ratio(2, 4);
        assert_eq!(a, ExactScalar::ratio(1, 2));
        assert_eq!(a.numerator(), &BigInt::from(1));
        assert_eq!(a.denominator(), &BigInt::from(2));

        let b = ExactScalar::ratio(1, 3);
        assert_eq!(&a * &b, ExactScalar::ratio(1, 6));
        assert_eq!(&a + &b, ExactScalar::ratio(5, 6));
        assert_eq!(&a - &b, ExactScalar::ratio(1, 6));
    }

    #[test]
    fn denominator_stays_positive() {
        let a = ExactScalar::ratio(1, -2);
        assert!(a.is_negative());
        assert_eq!(a.denominator(), &BigInt::from(2));
        assert_eq!(a.to_string(), "-1/2");
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["0", "7", "-3", "1/2", "-5/7", "22/7"] {
            let v: ExactScalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("4/8".parse::<ExactScalar>().unwrap().to_string(), "1/2");
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("x".parse::<ExactScalar>().is_err());
        assert!("1.5".parse::<ExactScalar>().is_err());
    }
}
