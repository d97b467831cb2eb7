//! Exact rational numbers over unbounded integers.
//!
//! [`Rational`] is always stored in lowest terms with a positive
//! denominator, so structural equality coincides with numeric equality and
//! zero is always `0/1`. The arithmetic itself is delegated to
//! [`num_rational::BigRational`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact fraction `numerator / denominator` in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num / den` reduced, with the sign carried by the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// The exact value of a finite binary floating-point number.
    pub fn from_f64(x: f64) -> Result<Self> {
        BigRational::from_float(x)
            .map(Rational)
            .ok_or_else(|| Error::domain(format!("{x} is not a finite real")))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The denominator as an unsigned integer.
    pub fn denom_unsigned(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let (_, r) = self.numer().div_mod_floor(self.denom());
        Rational(BigRational::new(r, self.denom().clone()))
    }

    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        Ok(self * &rhs.reciprocal()?)
    }

    /// Absolute difference `|self - other|`.
    pub fn distance(&self, other: &Rational) -> Self {
        (self - other).abs()
    }

    /// Lossy conversion, for display only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `n / 10^k` for decimal literals such as `31416 / 10^4`.
    pub fn decimal(mantissa: impl Into<BigInt>, scale: u32) -> Self {
        Rational(BigRational::new(
            mantissa.into(),
            num_traits::pow(BigInt::from(10u8), scale as usize),
        ))
    }
}

/// Ordering of two rationals; same as [`Ord::cmp`].
pub fn compare(x: &Rational, y: &Rational) -> Ordering {
    x.cmp(y)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

fn parse_integer(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(format!("malformed integer {s:?}")));
    }
    s.parse::<BigInt>()
        .map_err(|_| Error::parse(format!("malformed integer {s:?}")))
}

/// Accepts `p/q` or `p`, each with an optional leading minus.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse_integer(p.trim())?, parse_integer(q.trim())?),
            None => Ok(Rational::from_integer(parse_integer(s)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::Sign;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn construction_reduces_and_normalizes_sign() {
        let x = r(6, 7);
        assert_eq!((x.numer(), x.denom()), (&BigInt::from(6), &BigInt::from(7)));
        let x = r(169, 550);
        assert_eq!(x.to_string(), "169/550");
        let x = r(4, -6);
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
        let z = r(0, -17);
        assert_eq!(format!("{z:?}"), "0/1");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(Rational::new(1, 0), Err(Error::Domain("zero denominator".into())));
    }

    #[test]
    fn reciprocal_cases() {
        assert_eq!(r(6, 7).reciprocal().unwrap(), r(7, 6));
        assert_eq!(r(-2, 3).reciprocal().unwrap(), r(-3, 2));
        assert_eq!(r(1, 1).reciprocal().unwrap(), r(1, 1));
        assert_eq!(
            Rational::zero().reciprocal(),
            Err(Error::Domain("reciprocal of zero".into()))
        );
    }

    #[test]
    fn field_operations() {
        assert_eq!(r(1, 6) + r(1, 6), r(1, 3));
        assert_eq!(r(6, 7) * r(7, 6), r(1, 1));
        // 355*7 = 2485 < 22*113 = 2486
        assert_eq!(compare(&r(355, 113), &r(22, 7)), Ordering::Less);
    }

    #[test]
    fn floor_and_fract() {
        assert_eq!(r(7, 2).floor(), BigInt::from(3));
        assert_eq!(r(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(r(-7, 2).fract(), r(1, 2));
        assert_eq!(r(5, 1).fract(), Rational::zero());
    }

    #[test]
    fn text_form() {
        assert_eq!("6/7".parse::<Rational>().unwrap(), r(6, 7));
        assert_eq!("-4/6".parse::<Rational>().unwrap(), r(-2, 3));
        assert_eq!("12".parse::<Rational>().unwrap(), r(12, 1));
        assert_eq!(r(12, 1).to_string(), "12");
        assert_eq!(r(-2, 3).to_string(), "-2/3");
        let big = "123456789012345678901234567891/7";
        assert_eq!(big.parse::<Rational>().unwrap().to_string(), big);
        for bad in ["", "1/", "/2", "+3", "1/-", "a/b", "1.5", "--1", "3/0"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn from_f64_is_exact() {
        assert_eq!(Rational::from_f64(0.5).unwrap(), r(1, 2));
        assert_eq!(Rational::from_f64(5.0).unwrap(), r(5, 1));
        assert!(Rational::from_f64(f64::NAN).is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(p, q)| r(p, q))
    }

    fn assert_reduced(x: &Rational) {
        assert!(x.denom() >= &BigInt::one());
        assert!(x.numer().gcd(x.denom()).is_one() || x.is_zero());
        if x.is_zero() {
            assert!(x.denom().is_one());
        }
    }

    proptest! {
        #[test]
        fn results_stay_reduced(x in arb_rational(), y in arb_rational()) {
            for z in [&x + &y, &x - &y, &x * &y] {
                assert_reduced(&z);
            }
        }

        #[test]
        fn commutative_and_associative(x in arb_rational(), y in arb_rational(), z in arb_rational()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn inverses(x in arb_rational()) {
            prop_assert_eq!(&x - &x, Rational::zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.reciprocal().unwrap(), Rational::one());
            }
        }

        #[test]
        fn compare_matches_sign_of_difference(x in arb_rational(), y in arb_rational()) {
            let expected = match (&x - &y).numer().sign() {
                Sign::Minus => Ordering::Less,
                Sign::NoSign => Ordering::Equal,
                Sign::Plus => Ordering::Greater,
            };
            prop_assert_eq!(compare(&x, &y), expected);
        }

        #[test]
        fn display_parse_round_trip(x in arb_rational()) {
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
