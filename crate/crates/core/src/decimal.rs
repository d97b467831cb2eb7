//! Eventually periodic decimal expansions of non-negative rationals.
//!
//! Terminating decimals are written with a repeating `0`, so `5` is
//! `5.(0)` and `1/8` is `0.125(0)`. An all-9 period is never produced and
//! never accepted.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::number_theory::multiplicative_order_big;
use crate::rational::Rational;

/// `integer_part . preperiod (period)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecimalExpansion {
    integer_part: BigUint,
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

/// Period length together with the preperiod length. A terminating decimal
/// reports length 1 (its period is `0`) and sets `terminating`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeriodReport {
    pub length: usize,
    pub preperiod: usize,
    pub terminating: bool,
}

impl DecimalExpansion {
    pub fn new(integer_part: BigUint, preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        if let Some(d) = preperiod.iter().chain(&period).find(|&&d| d > 9) {
            return Err(Error::domain(format!("invalid decimal digit {d}")));
        }
        if period.is_empty() {
            return Err(Error::domain("empty period"));
        }
        if period.iter().all(|&d| d == 9) {
            return Err(Error::domain("9-repeating periods are not supported"));
        }
        Ok(DecimalExpansion {
            integer_part,
            preperiod,
            period,
        })
    }

    pub fn integer_part(&self) -> &BigUint {
        &self.integer_part
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    pub fn is_terminating(&self) -> bool {
        self.period == [0]
    }

    /// The `j`-th fractional digit, `j >= 1`.
    pub fn digit(&self, j: usize) -> u8 {
        assert!(j >= 1, "decimal places are numbered from 1");
        let i = j - 1;
        match self.preperiod.get(i) {
            Some(&d) => d,
            None => self.period[(i - self.preperiod.len()) % self.period.len()],
        }
    }

    /// The first `n` fractional digits with the period unrolled.
    pub fn unrolled(&self, n: usize) -> Vec<u8> {
        (1..=n).map(|j| self.digit(j)).collect()
    }

    /// `w + u/10^p + v/(10^p (10^l - 1))`.
    pub fn reconstruct(&self) -> Rational {
        let ten = BigInt::from(10u8);
        let p = num_traits::pow(ten.clone(), self.preperiod.len());
        let l = num_traits::pow(ten, self.period.len()) - 1;
        let u = digits_value(&self.preperiod);
        let v = digits_value(&self.period);
        let w = BigInt::from(self.integer_part.clone());
        // ((w*p + u)*l + v) / (p*l)
        let num = (w * &p + u) * &l + v;
        Rational::new(num, p * l).expect("10^p (10^l - 1) is positive")
    }
}

fn digits_value(digits: &[u8]) -> BigInt {
    digits
        .iter()
        .fold(BigInt::zero(), |acc, &d| acc * 10 + BigInt::from(d))
}

fn require_nonnegative(x: &Rational) -> Result<()> {
    if x.is_negative() {
        return Err(Error::domain("negative input"));
    }
    Ok(())
}

/// Long division with remainder-cycle detection. The first remainder to
/// recur marks the start of the period, which yields the minimal preperiod
/// and minimal period.
pub fn expand(x: &Rational) -> Result<DecimalExpansion> {
    require_nonnegative(x)?;
    let den = x.denom_unsigned();
    let (w, mut rem) = x.numer().magnitude().div_rem(&den);
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut digits = Vec::new();
    let start = loop {
        if let Some(&i) = seen.get(&rem) {
            break i;
        }
        seen.insert(rem.clone(), digits.len());
        let (d, r) = (rem * 10u8).div_rem(&den);
        digits.push(d.to_u8().expect("digit below 10"));
        rem = r;
    };
    let period = digits.split_off(start);
    DecimalExpansion::new(w, digits, period)
}

pub fn period_length(x: &Rational) -> Result<PeriodReport> {
    let e = expand(x)?;
    Ok(PeriodReport {
        length: e.period.len(),
        preperiod: e.preperiod.len(),
        terminating: e.is_terminating(),
    })
}

/// Period data from the factorization `den = 2^a 5^b d'`: the preperiod is
/// `max(a, b)` and the period is the order of 10 modulo `d'`.
pub fn period_length_by_order(x: &Rational) -> Result<PeriodReport> {
    require_nonnegative(x)?;
    let mut d = x.denom_unsigned();
    let two = BigUint::from(2u8);
    let five = BigUint::from(5u8);
    let (mut a, mut b) = (0usize, 0usize);
    while d.is_even() {
        d /= &two;
        a += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        b += 1;
    }
    let preperiod = a.max(b);
    if d.is_one() {
        return Ok(PeriodReport {
            length: 1,
            preperiod,
            terminating: true,
        });
    }
    let order = multiplicative_order_big(&BigUint::from(10u8), &d).expect("d' is coprime to 10");
    Ok(PeriodReport {
        length: order.to_usize().ok_or_else(|| Error::range("period length overflows usize"))?,
        preperiod,
        terminating: false,
    })
}

/// The `j`-th fractional digit of `x`, computed directly from
/// `10^(j-1) mod den` without expanding earlier digits.
pub fn digit_at(x: &Rational, j: u64) -> Result<u8> {
    require_nonnegative(x)?;
    if j == 0 {
        return Err(Error::domain("decimal places are numbered from 1"));
    }
    let den = x.denom_unsigned();
    let frac = x.numer().magnitude() % &den;
    let shifted = frac * BigUint::from(10u8).modpow(&BigUint::from(j - 1), &den) % &den;
    Ok((shifted * 10u8 / &den).to_u8().expect("digit below 10"))
}

/// The first `1/d`, scanning `d = 3, 7, 9, 11, ...` coprime to 10, whose
/// decimal period has at least `min_length` digits.
pub fn find_period_at_least(min_length: usize) -> Result<Rational> {
    if min_length == 0 {
        return Err(Error::domain("period length bound must be positive"));
    }
    let mut d = 3u64;
    loop {
        if !d.is_multiple_of(2) && !d.is_multiple_of(5) {
            let order = crate::number_theory::multiplicative_order(10, d).expect("coprime to 10");
            if order as usize >= min_length {
                let x = Rational::new(1, d).expect("d > 0");
                let checked = period_length(&x)?;
                if checked.length < min_length {
                    return Err(Error::domain(format!(
                        "order of 10 mod {d} is {order} but long division found period {}",
                        checked.length
                    )));
                }
                return Ok(x);
            }
        }
        d += 1;
    }
}

impl fmt::Display for DecimalExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.", self.integer_part)?;
        for d in &self.preperiod {
            write!(f, "{d}")?;
        }
        write!(f, "(")?;
        for d in &self.period {
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

fn parse_digits(s: &str) -> Result<Vec<u8>> {
    s.bytes()
        .map(|b| {
            if b.is_ascii_digit() {
                Ok(b - b'0')
            } else {
                Err(Error::parse(format!("invalid digit {:?}", b as char)))
            }
        })
        .collect()
}

/// Parses `w.uuu(vvv)`.
impl FromStr for DecimalExpansion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(format!("expected w.uu(vv), got {s:?}"));
        let (w, rest) = s.split_once('.').ok_or_else(bad)?;
        let (pre, rest) = rest.split_once('(').ok_or_else(bad)?;
        let period = rest.strip_suffix(')').ok_or_else(bad)?;
        if w.is_empty() || !w.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let w: BigUint = w.parse().map_err(|_| bad())?;
        DecimalExpansion::new(w, parse_digits(pre)?, parse_digits(period)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn exp(w: u32, pre: &[u8], per: &[u8]) -> DecimalExpansion {
        DecimalExpansion::new(BigUint::from(w), pre.to_vec(), per.to_vec()).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(&r(1, 6)).unwrap(), exp(0, &[1], &[6]));
        // 0.23(45) is 129/550; 169/550 is 0.30(72)
        assert_eq!(expand(&r(129, 550)).unwrap(), exp(0, &[2, 3], &[4, 5]));
        assert_eq!(expand(&r(169, 550)).unwrap(), exp(0, &[3, 0], &[7, 2]));
        assert_eq!(expand(&r(5, 1)).unwrap(), exp(5, &[], &[0]));
        assert_eq!(expand(&r(6, 7)).unwrap(), exp(0, &[], &[8, 5, 7, 1, 4, 2]));
        assert_eq!(expand(&r(1, 8)).unwrap(), exp(0, &[1, 2, 5], &[0]));
        assert_eq!(expand(&r(1, 6)).unwrap().to_string(), "0.1(6)");
        assert_eq!(expand(&r(129, 550)).unwrap().to_string(), "0.23(45)");
        assert_eq!(expand(&r(169, 550)).unwrap().to_string(), "0.30(72)");
        assert_eq!(expand(&r(5, 1)).unwrap().to_string(), "5.(0)");
        assert!(expand(&r(-1, 3)).is_err());
    }

    #[test]
    fn period_examples() {
        assert_eq!(period_length(&r(1, 6)).unwrap().length, 1);
        assert_eq!(period_length(&r(169, 550)).unwrap().length, 2);
        assert_eq!(period_length(&r(129, 550)).unwrap().length, 2);
        // remainders 1, 3, 2, 6, 4, 5
        assert_eq!(period_length(&r(1, 7)).unwrap().length, 6);
        let five = period_length(&r(5, 1)).unwrap();
        assert_eq!((five.length, five.terminating), (1, true));
        assert!(!period_length(&r(1, 6)).unwrap().terminating);
    }

    #[test]
    fn order_examples() {
        let a = period_length_by_order(&r(1, 6)).unwrap();
        assert_eq!((a.length, a.preperiod, a.terminating), (1, 1, false));
        let b = period_length_by_order(&r(169, 550)).unwrap();
        assert_eq!((b.length, b.preperiod), (2, 2));
        let c = period_length_by_order(&r(1, 8)).unwrap();
        assert_eq!((c.terminating, c.preperiod), (true, 3));
    }

    #[test]
    fn digit_examples() {
        assert_eq!(digit_at(&r(129, 550), 5).unwrap(), 4);
        assert_eq!(digit_at(&r(169, 550), 5).unwrap(), 7);
        assert_eq!(digit_at(&r(5, 1), 3).unwrap(), 0);
        assert_eq!(digit_at(&r(6, 7), 7).unwrap(), 8);
        assert!(digit_at(&r(1, 3), 0).is_err());
        assert_eq!(digit_at(&r(1, 7), 1_000_000_000_000).unwrap(), expand(&r(1, 7)).unwrap().digit(1_000_000_000_000));
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(exp(0, &[1], &[6]).reconstruct(), r(1, 6));
        assert_eq!(exp(5, &[], &[0]).reconstruct(), r(5, 1));
        assert_eq!(exp(0, &[2, 3], &[4, 5]).reconstruct(), r(129, 550));
        assert_eq!(exp(0, &[3, 0], &[7, 2]).reconstruct(), r(169, 550));
        assert!(DecimalExpansion::new(BigUint::zero(), vec![1], vec![10]).is_err());
        assert!(DecimalExpansion::new(BigUint::zero(), vec![1], vec![]).is_err());
        assert!(DecimalExpansion::new(BigUint::zero(), vec![1], vec![9, 9]).is_err());
    }

    #[test]
    fn find_period_examples() {
        assert_eq!(find_period_at_least(6).unwrap(), r(1, 7));
        assert_eq!(find_period_at_least(1).unwrap(), r(1, 3));
        assert_eq!(find_period_at_least(16).unwrap(), r(1, 17));
        assert!(find_period_at_least(0).is_err());
    }

    #[test]
    fn text_form() {
        for s in ["0.23(45)", "5.(0)", "0.(857142)", "12.125(0)"] {
            assert_eq!(s.parse::<DecimalExpansion>().unwrap().to_string(), s);
        }
        assert_eq!("0.23(45)".parse::<DecimalExpansion>().unwrap().reconstruct(), r(129, 550));
        for bad in ["0.23", "0.2(3", ".(3)", "1.(x)", "1.()", "-1.(3)", "0.(9)"] {
            assert!(bad.parse::<DecimalExpansion>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn round_trip_all_small_fractions() {
        for p in 1..=500 {
            for q in 1..=500 {
                let x = r(p, q);
                assert_eq!(expand(&x).unwrap().reconstruct(), x);
            }
        }
    }

    fn check_minimal(x: &Rational) {
        let e = expand(x).unwrap();
        let (w, u, v) = (e.integer_part.clone(), e.preperiod.clone(), e.period.clone());
        for l in 1..v.len() {
            if v.len() % l == 0 && v.chunks(l).all(|c| c == &v[..l]) {
                panic!("{x:?}: period {v:?} is generated by a block of length {l}");
            }
        }
        if let Some((&last, shorter)) = u.split_last() {
            // dropping the last preperiod digit means rotating it into the period
            let mut rotated = vec![last];
            rotated.extend_from_slice(&v[..v.len() - 1]);
            if let Ok(alt) = DecimalExpansion::new(w, shorter.to_vec(), rotated) {
                assert_ne!(alt.reconstruct(), *x, "{x:?}: preperiod not minimal");
            }
        }
    }

    #[test]
    fn oracle_agreement_and_minimality() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut cases: Vec<Rational> = (1..=2000).map(|q| r(1, q)).collect();
        cases.extend((0..1000).map(|_| r(rng.gen_range(1..5000), rng.gen_range(1..=2000))));
        for x in &cases {
            let by_division = period_length(x).unwrap();
            let by_order = period_length_by_order(x).unwrap();
            assert_eq!(by_division, by_order, "{x:?}");
            check_minimal(x);
            let e = expand(x).unwrap();
            assert!(!e.period.iter().all(|&d| d == 9));
        }
    }

    #[test]
    fn digit_at_matches_unrolled() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let x = r(rng.gen_range(0..3000), rng.gen_range(1..700));
            let unrolled = expand(&x).unwrap().unrolled(200);
            for j in 1..=200 {
                assert_eq!(digit_at(&x, j as u64).unwrap(), unrolled[j - 1], "{x:?} at {j}");
            }
        }
    }
}
