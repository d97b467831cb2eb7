//! Converting between rationals, continued fractions and floats.
//!
//! Run with `cargo run --example continued_fractions`.

use cfdiag::continued_fraction::{canonicalize, convergents};
use cfdiag::{named_cf_stream, ContinuedFraction, Rational, Result};
use num_bigint::BigInt;

pub fn run_example() -> Result<()> {
    let six_sevenths = Rational::new(6, 7)?;
    let cf = ContinuedFraction::from_rational(&six_sevenths)?;
    println!("{six_sevenths} = {cf} (\"{}\")", cf.to_spaced_string());
    assert_eq!(cf.to_spaced_string(), "0 1 6");
    assert_eq!(cf.to_rational(), six_sevenths);

    // the trailing 1 is merged into its predecessor
    let written: Vec<BigInt> = [3, 7, 15, 1].into_iter().map(BigInt::from).collect();
    let canonical = canonicalize(&written)?;
    println!("[3; 7, 15, 1] -> {canonical} = {}", canonical.to_rational());

    println!("convergents of pi:");
    for c in convergents(named_cf_stream("pi")?, 6)? {
        println!("  {}: {}", c.index, c.value);
    }

    let sqrt2 = ContinuedFraction::from_real_approx(std::f64::consts::SQRT_2, 1e-9)?;
    println!("sqrt(2) to 1e-9: {sqrt2}");
    let back = ContinuedFraction::from_real_approx(6.0 / 7.0, 1e-9)?;
    println!("6/7 as a double, to 1e-9: {back}");
    assert_eq!(back, cf);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
