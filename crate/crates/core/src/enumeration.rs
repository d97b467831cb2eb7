//! Infinite inputs for the diagonal constructions: an enumeration of the
//! positive rationals, decimal digit streams, and partial-quotient streams of
//! named irrationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The Calkin-Wilf sequence `1/1, 1/2, 2/1, 1/3, 3/2, 2/3, 3/1, ...`,
/// in which every positive rational appears exactly once.
#[derive(Clone, Debug)]
pub struct CalkinWilf {
    num: BigUint,
    den: BigUint,
    position: usize,
}

pub fn calkin_wilf() -> CalkinWilf {
    CalkinWilf::new()
}

impl CalkinWilf {
    pub fn new() -> Self {
        CalkinWilf {
            num: BigUint::from(1u8),
            den: BigUint::from(1u8),
            position: 0,
        }
    }

    /// Number of values yielded so far.
    pub fn position(&self) -> usize {
        self.position
    }

    /// 1-based index of `x` in the sequence, found by scanning at most
    /// `limit` terms.
    pub fn position_of(x: &Rational, limit: usize) -> Option<usize> {
        CalkinWilf::new().take(limit).position(|y| &y == x).map(|i| i + 1)
    }
}

impl Default for CalkinWilf {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for CalkinWilf {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let out = Rational::new(self.num.clone(), self.den.clone()).expect("denominator >= 1");
        // p/q -> q / (2 floor(p/q) q + q - p)
        let (p, q) = (&self.num, &self.den);
        let next_den = (p / q) * q * 2u8 + q - p;
        self.num = std::mem::replace(&mut self.den, next_den);
        self.position += 1;
        Some(out)
    }
}

/// The fractional decimal digits `d1 d2 d3 ...` of a non-negative rational,
/// produced by long division. Terminating decimals continue with zeros.
#[derive(Clone, Debug)]
pub struct DigitStream {
    integer_part: BigUint,
    remainder: BigUint,
    den: BigUint,
}

pub fn digits_of(x: &Rational) -> Result<DigitStream> {
    if x.is_negative() {
        return Err(Error::domain("negative input"));
    }
    let den = x.denom_unsigned();
    let (integer_part, remainder) = x.numer().magnitude().div_rem(&den);
    Ok(DigitStream {
        integer_part,
        remainder,
        den,
    })
}

impl DigitStream {
    pub fn integer_part(&self) -> &BigUint {
        &self.integer_part
    }
}

impl Iterator for DigitStream {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let (d, r) = (&self.remainder * 10u8).div_rem(&self.den);
        self.remainder = r;
        Some(d.to_u8().expect("digit below 10"))
    }
}

/// Partial quotients of pi, `[3; 7, 15, 1, 292, ...]`. Stored rather than
/// computed; verified against a 200-digit evaluation of pi.
pub const PI_PARTIAL_QUOTIENTS: [u32; 50] = [
    3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2, 1, 84, 2, 1, 1, 15, 3, 13, 1,
    4, 2, 6, 6, 99, 1, 2, 2, 6, 3, 5, 1, 1, 6, 8, 1, 7, 1, 2, 3, 7,
];

/// `3.141592653589793` as an exact rational.
pub fn pi_proxy() -> Rational {
    Rational::decimal(3_141_592_653_589_793u64, 15)
}

/// `2.718281828459` as an exact rational.
pub fn e_proxy() -> Rational {
    Rational::decimal(2_718_281_828_459u64, 12)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StreamName {
    Sqrt2,
    E,
    Phi,
    Pi,
    /// `[k; k, k, ...]`
    Metallic(u64),
}

impl FromStr for StreamName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt2" => Ok(StreamName::Sqrt2),
            "e" => Ok(StreamName::E),
            "phi" => Ok(StreamName::Phi),
            "pi" => Ok(StreamName::Pi),
            _ => {
                let k = s
                    .strip_prefix("metallic:")
                    .ok_or_else(|| Error::domain(format!("unknown stream {s:?}")))?;
                let k: u64 = k
                    .parse()
                    .map_err(|_| Error::domain(format!("invalid metallic index {k:?}")))?;
                if k == 0 {
                    return Err(Error::domain("metallic index must be at least 1"));
                }
                Ok(StreamName::Metallic(k))
            }
        }
    }
}

impl fmt::Display for StreamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StreamName::Sqrt2 => write!(f, "sqrt2"),
            StreamName::E => write!(f, "e"),
            StreamName::Phi => write!(f, "phi"),
            StreamName::Pi => write!(f, "pi"),
            StreamName::Metallic(k) => write!(f, "metallic:{k}"),
        }
    }
}

#[derive(Clone, Debug)]
enum Pattern {
    /// `lead` followed by `repeat` forever.
    Periodic { lead: u64, repeat: u64 },
    /// `[2; 1, 2, 1, 1, 4, 1, 1, 6, ...]`
    E,
    Table(&'static [u32]),
}

/// Partial quotients `a0, a1, a2, ...` of an irrational number.
///
/// Every stream is infinite except `pi`, which ends with its stored table;
/// [`CfStream::try_next`] reports that as a range error while the
/// [`Iterator`] impl simply stops.
#[derive(Clone, Debug)]
pub struct CfStream {
    pattern: Pattern,
    position: usize,
}

impl CfStream {
    pub fn named(name: StreamName) -> Self {
        let pattern = match name {
            StreamName::Sqrt2 => Pattern::Periodic { lead: 1, repeat: 2 },
            StreamName::E => Pattern::E,
            StreamName::Phi => Pattern::Periodic { lead: 1, repeat: 1 },
            StreamName::Pi => Pattern::Table(&PI_PARTIAL_QUOTIENTS),
            StreamName::Metallic(k) => Pattern::Periodic { lead: k, repeat: k },
        };
        CfStream {
            pattern,
            position: 0,
        }
    }

    pub fn metallic(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::domain("metallic index must be at least 1"));
        }
        Ok(Self::named(StreamName::Metallic(k)))
    }

    /// Index of the next partial quotient.
    pub fn position(&self) -> usize {
        self.position
    }

    fn term(&self, i: usize) -> Option<u64> {
        match &self.pattern {
            Pattern::Periodic { lead, repeat } => Some(if i == 0 { *lead } else { *repeat }),
            Pattern::E => Some(match i {
                0 => 2,
                _ if i % 3 == 2 => 2 * (i as u64 + 1) / 3,
                _ => 1,
            }),
            Pattern::Table(t) => t.get(i).map(|&a| a as u64),
        }
    }

    pub fn try_next(&mut self) -> Result<BigUint> {
        let a = self.term(self.position).ok_or_else(|| {
            Error::range(format!(
                "stream has no partial quotient at index {} (stored table exhausted)",
                self.position
            ))
        })?;
        self.position += 1;
        Ok(BigUint::from(a))
    }

    /// The next `n` partial quotients.
    pub fn prefix(&mut self, n: usize) -> Result<Vec<BigUint>> {
        (0..n).map(|_| self.try_next()).collect()
    }
}

impl Iterator for CfStream {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        self.try_next().ok()
    }
}

pub fn named_cf_stream(name: &str) -> Result<CfStream> {
    Ok(CfStream::named(name.parse()?))
}

/// A fixed family of distinct irrationals: the metallic means
/// `[k; k, k, ...]` for `k = 1..=count`.
pub fn irrational_enumeration(count: usize) -> Vec<CfStream> {
    (1..=count as u64).map(|k| CfStream::named(StreamName::Metallic(k))).collect()
}
