//! The continued-fraction diagonal: it goes through over irrationals, whose
//! expansions are infinite, and breaks down over rationals, whose expansions
//! are finite.
//!
//! Run with `cargo run --example cf_diagonal`.

use cfdiag::diagonalization::{cf_diagonal, cf_diagonal_over_rationals, render_table};
use cfdiag::enumeration::irrational_enumeration;
use cfdiag::{calkin_wilf, Rational, Result};

pub fn run_example() -> Result<()> {
    let depth = 8;
    let d = cf_diagonal(irrational_enumeration(depth), depth)?;
    println!("constructed {}", d.render_prefix());
    print!("{}", render_table(&d.witnesses, 'a'));
    assert!(d.verify(irrational_enumeration(depth))?.holds());

    println!("{}", cf_diagonal_over_rationals(calkin_wilf())?);

    // even an enumeration that front-loads long expansions runs out quickly
    let fib: Vec<Rational> = [(13, 8), (21, 13), (34, 21), (55, 34), (89, 55)]
        .into_iter()
        .map(|(p, q)| Rational::new(p, q))
        .collect::<Result<_>>()?;
    let failure = cf_diagonal_over_rationals(fib.into_iter().chain(calkin_wilf()))?;
    println!("{failure}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
