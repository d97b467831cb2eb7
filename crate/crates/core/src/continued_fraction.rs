//! Finite simple continued fractions `[a0; a1, ..., an]`.
//!
//! A [`ContinuedFraction`] always holds the canonical form: `a0 >= 0`,
//! `ai >= 1` afterwards, and a last term of at least 2 whenever there is more
//! than one term. Raw term lists such as `[3; 7, 15, 1]` are accepted by
//! [`canonicalize`], [`evaluate`] and [`fractional_digit_budget`] without
//! being rewritten.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ContinuedFraction {
    terms: Vec<BigUint>,
}

/// The value of the prefix `[a0; a1, ..., a_index]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Convergent {
    pub index: usize,
    pub value: Rational,
}

impl ContinuedFraction {
    /// Expands a non-negative rational with the Euclidean quotient sequence.
    pub fn from_rational(x: &Rational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::domain("negative input"));
        }
        let mut num = x.numer().magnitude().clone();
        let mut den = x.denom_unsigned();
        let mut terms = Vec::new();
        loop {
            let (q, r) = num.div_rem(&den);
            terms.push(q);
            if r.is_zero() {
                break;
            }
            num = std::mem::replace(&mut den, r);
        }
        // Euclid never ends on a quotient of 1 unless the whole list is [1].
        debug_assert!(is_canonical(&terms));
        Ok(ContinuedFraction { terms })
    }

    /// Exact value, folded from the last term towards the first.
    pub fn to_rational(&self) -> Rational {
        fold(&self.terms)
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigUint> {
        self.terms
    }

    /// Number of partial quotients after `a0`.
    pub fn tail_len(&self) -> usize {
        self.terms.len() - 1
    }

    /// The first `count` convergents.
    pub fn convergents(&self, count: usize) -> Result<Vec<Convergent>> {
        convergents(self.terms.iter().cloned(), count)
    }

    pub fn fractional_digit_budget(&self) -> usize {
        fractional_digit_budget(&self.terms)
    }

    /// Space-separated terms, e.g. `0 1 6`.
    pub fn to_spaced_string(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Approximates a positive real to within `eps`.
    ///
    /// `x` is first converted to the exact rational value of its binary
    /// representation. Terms are then peeled off exactly by floor and
    /// reciprocal, and the accumulated list is re-evaluated after every term
    /// until it lies within `eps` of that value. The result is canonical.
    pub fn from_real_approx(x: f64, eps: f64) -> Result<Self> {
        if eps.is_nan() || eps <= 0.0 || eps.is_infinite() {
            return Err(Error::domain(format!("eps must be a positive real, got {eps}")));
        }
        if x.is_nan() || x <= 0.0 {
            return Err(Error::domain(format!("input must be a positive real, got {x}")));
        }
        let target = Rational::from_f64(x)?;
        let tolerance = Rational::from_f64(eps)?;
        let mut rest = target.clone();
        let mut terms: Vec<BigUint> = Vec::new();
        loop {
            let a = rest.floor();
            terms.push(a.magnitude().clone());
            if target.distance(&fold(&terms)) <= tolerance {
                break;
            }
            let frac = rest.fract();
            if frac.is_zero() {
                // the value was reached exactly
                break;
            }
            rest = frac.reciprocal()?;
        }
        canonicalize_unsigned(terms)
    }
}

fn is_canonical(terms: &[BigUint]) -> bool {
    !terms.is_empty()
        && terms.iter().skip(1).all(|t| !t.is_zero())
        && (terms.len() == 1 || terms.last().is_some_and(|t| *t >= BigUint::from(2u8)))
}

fn fold(terms: &[BigUint]) -> Rational {
    let mut iter = terms.iter().rev();
    let last = iter.next().expect("continued fraction has at least one term");
    let mut acc = Rational::from_integer(BigInt::from(last.clone()));
    for a in iter {
        // acc >= 1 here since every non-leading term is >= 1
        acc = Rational::from_integer(BigInt::from(a.clone())) + acc.reciprocal().expect("nonzero");
    }
    acc
}

fn validate(terms: &[BigInt]) -> Result<Vec<BigUint>> {
    let Some(first) = terms.first() else {
        return Err(Error::domain("empty continued fraction"));
    };
    if first.is_negative() {
        return Err(Error::domain("negative leading partial quotient"));
    }
    terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            if i > 0 && !t.is_positive() {
                Err(Error::domain(format!("invalid partial quotient {t} at index {i}")))
            } else {
                Ok(t.magnitude().clone())
            }
        })
        .collect()
}

fn canonicalize_unsigned(mut terms: Vec<BigUint>) -> Result<ContinuedFraction> {
    if terms.is_empty() {
        return Err(Error::domain("empty continued fraction"));
    }
    if let Some(i) = terms.iter().skip(1).position(|t| t.is_zero()) {
        return Err(Error::domain(format!("invalid partial quotient 0 at index {}", i + 1)));
    }
    if terms.len() >= 2 && terms.last().is_some_and(|t| t.is_one()) {
        terms.pop();
        *terms.last_mut().expect("length >= 1") += 1u8;
    }
    Ok(ContinuedFraction { terms })
}

/// Brings a term list into canonical form, merging a trailing 1 into its
/// predecessor: `[..., a, 1]` becomes `[..., a + 1]`.
pub fn canonicalize(terms: &[BigInt]) -> Result<ContinuedFraction> {
    canonicalize_unsigned(validate(terms)?)
}

/// Exact value of a raw, possibly non-canonical, term list.
pub fn evaluate(terms: &[BigUint]) -> Result<Rational> {
    if terms.is_empty() {
        return Err(Error::domain("empty continued fraction"));
    }
    if let Some(i) = terms.iter().skip(1).position(|t| t.is_zero()) {
        return Err(Error::domain(format!("invalid partial quotient 0 at index {}", i + 1)));
    }
    Ok(fold(terms))
}

/// Lazily computed convergents of any stream of partial quotients, via
/// `h_k = a_k h_{k-1} + h_{k-2}` and `k_k = a_k k_{k-1} + k_{k-2}`.
pub struct Convergents<I> {
    terms: I,
    index: usize,
    h: (BigInt, BigInt),
    k: (BigInt, BigInt),
}

impl<I: Iterator<Item = BigUint>> Convergents<I> {
    pub fn new(terms: impl IntoIterator<IntoIter = I>) -> Self {
        Convergents {
            terms: terms.into_iter(),
            index: 0,
            // (h_{-2}, h_{-1}) and (k_{-2}, k_{-1})
            h: (BigInt::zero(), BigInt::one()),
            k: (BigInt::one(), BigInt::zero()),
        }
    }
}

impl<I: Iterator<Item = BigUint>> Iterator for Convergents<I> {
    type Item = Convergent;

    fn next(&mut self) -> Option<Convergent> {
        let a = BigInt::from(self.terms.next()?);
        let h = &a * &self.h.1 + &self.h.0;
        let k = &a * &self.k.1 + &self.k.0;
        self.h = (std::mem::replace(&mut self.h.1, h.clone()), h.clone());
        self.k = (std::mem::replace(&mut self.k.1, k.clone()), k.clone());
        let index = self.index;
        self.index += 1;
        Some(Convergent {
            index,
            value: Rational::new(h, k).expect("convergent denominators are positive"),
        })
    }
}

/// The first `count` convergents of `terms`.
pub fn convergents(terms: impl IntoIterator<Item = BigUint>, count: usize) -> Result<Vec<Convergent>> {
    if count == 0 {
        return Err(Error::domain("convergent count must be positive"));
    }
    let out: Vec<_> = Convergents::new(terms).take(count).collect();
    if out.len() < count {
        return Err(Error::range(format!(
            "requested {count} convergents but only {} terms are available",
            out.len()
        )));
    }
    Ok(out)
}

/// Total number of decimal digits in `a1 ... an`; `a0` is not counted.
pub fn fractional_digit_budget(terms: &[BigUint]) -> usize {
    terms.iter().skip(1).map(|t| t.to_string().len()).sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Closer {
    ContinuedFraction,
    Decimal,
    Tie,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ApproximationReport {
    pub closer: Closer,
    pub cf_error: Rational,
    pub decimal_error: Rational,
}

/// Decides exactly which of two approximations lies nearer to `target`.
pub fn approximation_compare(
    target: &Rational,
    cf_approx: &Rational,
    decimal_approx: &Rational,
) -> ApproximationReport {
    let cf_error = target.distance(cf_approx);
    let decimal_error = target.distance(decimal_approx);
    let closer = match cf_error.cmp(&decimal_error) {
        Ordering::Less => Closer::ContinuedFraction,
        Ordering::Greater => Closer::Decimal,
        Ordering::Equal => Closer::Tie,
    };
    ApproximationReport {
        closer,
        cf_error,
        decimal_error,
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms)
    }
}

/// Writes `[a0; a1, a2]`, or `[a0]` for a single term.
pub fn write_terms(f: &mut impl fmt::Write, terms: &[BigUint]) -> fmt::Result {
    write!(f, "[")?;
    for (i, t) in terms.iter().enumerate() {
        match i {
            0 => write!(f, "{t}")?,
            1 => write!(f, "; {t}")?,
            _ => write!(f, ", {t}")?,
        }
    }
    write!(f, "]")
}

pub fn format_terms(terms: &[BigUint]) -> String {
    let mut s = String::new();
    write_terms(&mut s, terms).expect("writing to a String");
    s
}

fn parse_int(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(format!("malformed partial quotient {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::parse(format!("malformed partial quotient {s:?}")))
}

/// Parses `[a0; a1, a2, ...]` or the space-separated `a0 a1 a2` into a raw,
/// validated term list. No canonicalization is applied.
pub fn parse_terms(s: &str) -> Result<Vec<BigUint>> {
    let s = s.trim();
    let raw: Vec<BigInt> = if let Some(body) = s.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| Error::parse(format!("missing closing bracket in {s:?}")))?;
        match body.split_once(';') {
            Some((head, tail)) => {
                let mut v = vec![parse_int(head.trim())?];
                for t in tail.split(',') {
                    v.push(parse_int(t.trim())?);
                }
                v
            }
            None => vec![parse_int(body.trim())?],
        }
    } else {
        s.split_whitespace().map(parse_int).collect::<Result<_>>()?
    };
    validate(&raw)
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        canonicalize_unsigned(parse_terms(s)?)
    }
}
