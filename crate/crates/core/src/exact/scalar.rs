//! Arbitrary-precision rational scalars.
//!
//! Every quantity in this crate is a `Scalar`: a fraction of big integers
//! kept in lowest terms with a positive denominator. There is no floating
//! point anywhere; all arithmetic is exact.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` in lowest terms. Panics if `den == 0`.
    pub fn fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// max(|num|, |den|); the pivot-selection measure.
    pub fn height(&self) -> BigUint {
        let n = self.0.numer().magnitude();
        let d = self.0.denom().magnitude();
        if n >= d {
            n.clone()
        } else {
            d.clone()
        }
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Scalar(self.0.recip())
    }

    /// Integer value, if the scalar is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.0.is_integer() {
            return None;
        }
        i64::try_from(self.0.numer()).ok()
    }

    /// Canonical text form `num/den` in lowest terms, `3/1` for integers.
    pub fn to_fraction_string(&self) -> String {
        alloc::format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Parses the canonical `num/den` form; a bare integer is also accepted.
    pub fn parse(s: &str) -> Option<Self> {
        let mut parts = s.splitn(2, '/');
        let num: BigInt = parts.next()?.trim().parse().ok()?;
        match parts.next() {
            None => Some(Scalar(BigRational::from_integer(num))),
            Some(d) => {
                let den: BigInt = d.trim().parse().ok()?;
                if den.is_zero() {
                    None
                } else {
                    Some(Scalar(BigRational::new(num, den)))
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(self.0 / rhs.0)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let s = Scalar::fraction(4, -6);
        assert_eq!(s.to_fraction_string(), "-2/3");
        assert_eq!(Scalar::fraction(0, 5), Scalar::zero());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/1", "-7/2", "0/1", "22/7"] {
            let v = Scalar::parse(s).unwrap();
            assert_eq!(v.to_fraction_string(), s);
        }
        assert_eq!(Scalar::parse("5").unwrap(), Scalar::from_int(5));
        assert!(Scalar::parse("1/0").is_none());
        assert!(Scalar::parse("x").is_none());
    }

    #[test]
    fn height_is_max_of_magnitudes() {
        assert_eq!(Scalar::fraction(3, 7).height(), 7u32.into());
        assert_eq!(Scalar::fraction(-9, 2).height(), 9u32.into());
    }
}
