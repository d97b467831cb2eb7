//! Diagonal constructions over enumerated numbers.
//!
//! Rows are any iterators: digit streams for the decimal construction,
//! partial-quotient streams for the continued-fraction one. Positions are
//! 1-based throughout, so the witness at position `k` compares the `k`-th
//! row's `k`-th entry with the `k`-th entry of the constructed number.

use std::fmt::{self, Display, Write as _};

use num_bigint::BigUint;

use crate::continued_fraction::{format_terms, ContinuedFraction};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::enumeration::digits_of;

/// Evidence that the constructed number differs from row `position` at that
/// row's diagonal entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagonalWitness<T> {
    pub position: usize,
    pub enumerated: T,
    pub constructed: T,
}

impl<T: PartialEq> DiagonalWitness<T> {
    pub fn differs(&self) -> bool {
        self.enumerated != self.constructed
    }
}

/// Prefix `0.d01 d02 ...` of the decimal diagonal number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecimalDiagonal {
    pub digits: Vec<u8>,
    pub witnesses: Vec<DiagonalWitness<u8>>,
}

impl DecimalDiagonal {
    /// `0.` followed by the constructed digits and an ellipsis.
    pub fn render_prefix(&self) -> String {
        let mut s = String::from("0.");
        s.extend(self.digits.iter().map(|d| char::from(b'0' + d)));
        s.push_str("...");
        s
    }

    pub fn verify<I, R>(&self, rows: I) -> Result<Verdict>
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = u8>,
    {
        verify_differs(&self.digits, rows, self.digits.len())
    }
}

/// Prefix `[a00; a01, a02, ...]` of the continued-fraction diagonal number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CfDiagonal {
    /// `a00` followed by one constructed quotient per position.
    pub terms: Vec<BigUint>,
    pub witnesses: Vec<DiagonalWitness<BigUint>>,
}

impl CfDiagonal {
    pub fn render_prefix(&self) -> String {
        let mut s = format_terms(&self.terms);
        s.insert_str(s.len() - 1, ", ...");
        s
    }

    /// Re-checks every position against the rows, skipping each row's `a0`.
    pub fn verify<I, R>(&self, rows: I) -> Result<Verdict>
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = BigUint>,
    {
        verify_differs(
            &self.terms[1..],
            rows.into_iter().map(|r| r.into_iter().skip(1)),
            self.terms.len() - 1,
        )
    }
}

/// Digit chosen at a diagonal position: 5, or 4 when the diagonal digit is 5.
/// Never 0 or 9, so the result has no second decimal representation.
pub fn pick_digit(diagonal: u8) -> u8 {
    if diagonal != 5 {
        5
    } else {
        4
    }
}

/// Quotient chosen at a diagonal position: one more than the diagonal entry.
pub fn pick_quotient(diagonal: &BigUint) -> BigUint {
    diagonal + 1u8
}

/// Builds `0.d01 d02 ... d0n` with `d0k = pick_digit(d_kk)`, where `d_kk` is
/// the `k`-th digit of the `k`-th row.
pub fn decimal_diagonal<I, R>(rows: I, depth: usize) -> Result<DecimalDiagonal>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = u8>,
{
    let entries = diagonal_entries(rows, depth, 1)?;
    let mut digits = Vec::with_capacity(depth);
    let mut witnesses = Vec::with_capacity(depth);
    for (k, d) in entries.into_iter().enumerate() {
        let constructed = pick_digit(d);
        digits.push(constructed);
        witnesses.push(DiagonalWitness {
            position: k + 1,
            enumerated: d,
            constructed,
        });
    }
    Ok(DecimalDiagonal { digits, witnesses })
}

/// Builds `[0; a01, ..., a0n]` with `a0k = a_kk + 1`, where `a_kk` is the
/// partial quotient at index `k` of the `k`-th row (index 0 being `a0`).
pub fn cf_diagonal<I, R>(rows: I, depth: usize) -> Result<CfDiagonal>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = BigUint>,
{
    let entries = diagonal_entries(rows, depth, 0)?;
    let mut terms = Vec::with_capacity(depth + 1);
    terms.push(BigUint::default());
    let mut witnesses = Vec::with_capacity(depth);
    for (k, a) in entries.into_iter().enumerate() {
        let constructed = pick_quotient(&a);
        terms.push(constructed.clone());
        witnesses.push(DiagonalWitness {
            position: k + 1,
            enumerated: a,
            constructed,
        });
    }
    Ok(CfDiagonal { terms, witnesses })
}

/// Entry `k + 1 - first_index` of the `k`-th row for `k = 1..=depth`: rows
/// indexed from 1 (digits) use `first_index = 1`, rows indexed from 0
/// (partial quotients) use 0.
fn diagonal_entries<I, R, T>(rows: I, depth: usize, first_index: usize) -> Result<Vec<T>>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = T>,
{
    let mut rows = rows.into_iter();
    let mut out = Vec::with_capacity(depth);
    for k in 1..=depth {
        let row = rows
            .next()
            .ok_or_else(|| Error::input(format!("only {} rows available, depth {depth} requested", k - 1)))?;
        let entry = row
            .into_iter()
            .nth(k - first_index)
            .ok_or_else(|| Error::input(format!("row {k} ended before its diagonal entry")))?;
        out.push(entry);
    }
    Ok(out)
}

/// Outcome of re-checking a constructed prefix against its rows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Differs,
    /// First position at which the constructed entry equals the row's.
    SameAt(usize),
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Differs
    }

    pub fn counterexample(self) -> Option<usize> {
        match self {
            Verdict::Differs => None,
            Verdict::SameAt(k) => Some(k),
        }
    }
}

/// Checks that `constructed[k - 1]` differs from the `k`-th entry of row `k`
/// for every `k <= depth`. Depth 0 holds vacuously.
pub fn verify_differs<T, I, R>(constructed: &[T], rows: I, depth: usize) -> Result<Verdict>
where
    T: PartialEq,
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = T>,
{
    if constructed.len() < depth {
        return Err(Error::range(format!(
            "constructed prefix has {} entries, depth {depth} requested",
            constructed.len()
        )));
    }
    let entries = diagonal_entries(rows, depth, 1)?;
    Ok(entries
        .iter()
        .zip(constructed)
        .position(|(e, c)| e == c)
        .map_or(Verdict::Differs, |i| Verdict::SameAt(i + 1)))
}

/// Certificate that the continued-fraction diagonal breaks down over an
/// enumeration of rationals: the `failing_index`-th rational has fewer than
/// `failing_index` partial quotients after `a0`, so `a_kk` does not exist.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CfDiagonalFailure {
    pub failing_index: usize,
    pub rational: Rational,
    pub expansion: ContinuedFraction,
    /// Partial quotients after `a0`; always below `failing_index`.
    pub tail_len: usize,
}

impl Display for CfDiagonalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.failing_index;
        write!(
            f,
            "diagonal undefined at k={k}: CF of {}/{} = {} has no a_{k}{k}",
            self.rational.numer(),
            self.rational.denom(),
            self.expansion
        )
    }
}

/// Scans the enumeration for the first `k` whose canonical continued
/// fraction has no entry at the diagonal position.
pub fn cf_diagonal_over_rationals<I>(enumeration: I) -> Result<CfDiagonalFailure>
where
    I: IntoIterator<Item = Rational>,
{
    for (i, x) in enumeration.into_iter().enumerate() {
        let k = i + 1;
        let expansion = ContinuedFraction::from_rational(&x)?;
        if expansion.tail_len() < k {
            return Ok(CfDiagonalFailure {
                failing_index: k,
                tail_len: expansion.tail_len(),
                rational: x,
                expansion,
            });
        }
    }
    Err(Error::input("enumeration ended before the diagonal broke down"))
}

/// Whether a digit prefix is compatible with one (preperiod, period) pair.
/// An inconsistent ruling carries `witness = j` with digits `j` and
/// `j + period` (1-based, both past the preperiod) different.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeriodicityRuling {
    pub preperiod: usize,
    pub period: usize,
    pub witness: Option<usize>,
}

impl PeriodicityRuling {
    pub fn consistent(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeriodicityReport {
    pub digits: Vec<u8>,
    pub rulings: Vec<PeriodicityRuling>,
}

impl PeriodicityReport {
    pub fn ruled_out(&self) -> impl Iterator<Item = &PeriodicityRuling> {
        self.rulings.iter().filter(|r| !r.consistent())
    }

    pub fn consistent(&self) -> impl Iterator<Item = &PeriodicityRuling> {
        self.rulings.iter().filter(|r| r.consistent())
    }
}

/// Rules on every pair `p <= max_preperiod`, `1 <= l <= max_period` using
/// only the digits in `prefix`. Requires `prefix.len() >= max_preperiod +
/// 2 * max_period` so each pair sees at least one full repetition.
pub fn periodicity_rulings(
    prefix: &[u8],
    max_preperiod: usize,
    max_period: usize,
) -> Result<Vec<PeriodicityRuling>> {
    if max_period == 0 {
        return Err(Error::range("max period must be at least 1"));
    }
    let needed = max_preperiod + 2 * max_period;
    if prefix.len() < needed {
        return Err(Error::range(format!(
            "depth {} is below max_preperiod + 2 * max_period = {needed}",
            prefix.len()
        )));
    }
    let mut out = Vec::with_capacity((max_preperiod + 1) * max_period);
    for p in 0..=max_preperiod {
        for l in 1..=max_period {
            // 0-based i covers 1-based positions p+1 ..= len-l
            let witness = (p..prefix.len() - l)
                .find(|&i| prefix[i] != prefix[i + l])
                .map(|i| i + 1);
            out.push(PeriodicityRuling {
                preperiod: p,
                period: l,
                witness,
            });
        }
    }
    Ok(out)
}

/// Builds the decimal diagonal over the first `depth` rationals of the
/// enumeration and rules on which small (preperiod, period) pairs its prefix
/// already excludes.
pub fn rational_diagonal_analysis<I>(
    enumeration: I,
    depth: usize,
    max_preperiod: usize,
    max_period: usize,
) -> Result<PeriodicityReport>
where
    I: IntoIterator<Item = Rational>,
{
    if max_period == 0 || depth < max_preperiod + 2 * max_period {
        return Err(Error::range(format!(
            "depth {depth} must be at least max_preperiod + 2 * max_period = {}, with max_period >= 1",
            max_preperiod + 2 * max_period
        )));
    }
    let rows = enumeration
        .into_iter()
        .take(depth)
        .map(|x| digits_of(&x))
        .collect::<Result<Vec<_>>>()?;
    let diagonal = decimal_diagonal(rows, depth)?;
    let rulings = periodicity_rulings(&diagonal.digits, max_preperiod, max_period)?;
    Ok(PeriodicityReport {
        digits: diagonal.digits,
        rulings,
    })
}

/// Witness table with a header row; `entry` names the enumerated column
/// (`d` or `a`).
pub fn render_table<T: Display + PartialEq>(witnesses: &[DiagonalWitness<T>], entry: char) -> String {
    let header = [
        "k".to_string(),
        format!("{entry}_kk"),
        format!("{entry}_0k"),
        "differs".to_string(),
    ];
    let rows: Vec<[String; 4]> = witnesses
        .iter()
        .map(|w| {
            [
                w.position.to_string(),
                w.enumerated.to_string(),
                w.constructed.to_string(),
                if w.differs() { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ")).expect("writing to a String");
    }
    out
}

/// One `k<TAB>diag<TAB>constructed` line per witness.
pub fn render_tsv<T: Display>(witnesses: &[DiagonalWitness<T>]) -> String {
    let mut out = String::new();
    for w in witnesses {
        writeln!(out, "{}\t{}\t{}", w.position, w.enumerated, w.constructed).expect("writing to a String");
    }
    out
}
