//! Periodic decimal expansions and their period lengths.
//!
//! Run with `cargo run --example repeating_decimals`.

use cfdiag::decimal::{digit_at, expand, find_period_at_least, period_length, period_length_by_order};
use cfdiag::{Rational, Result};

pub fn run_example() -> Result<()> {
    for (p, q) in [(1, 6), (129, 550), (169, 550), (6, 7), (5, 1), (1, 8)] {
        let x = Rational::new(p, q)?;
        let e = expand(&x)?;
        let by_division = period_length(&x)?;
        let by_order = period_length_by_order(&x)?;
        assert_eq!(by_division, by_order);
        assert_eq!(e.reconstruct(), x);
        println!(
            "{x:>8} = {e:<12} period {} preperiod {}{}",
            by_division.length,
            by_division.preperiod,
            if by_division.terminating { " (terminating)" } else { "" }
        );
    }

    let x = Rational::new(6, 7)?;
    println!("digit 1000000 of 6/7: {}", digit_at(&x, 1_000_000)?);

    // period lengths have no upper bound
    for bound in [1, 6, 16, 30, 50] {
        let x = find_period_at_least(bound)?;
        println!("period >= {bound:>2}: {x} has period {}", period_length(&x)?.length);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
