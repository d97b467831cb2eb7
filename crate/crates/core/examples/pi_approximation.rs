//! `[3; 7, 15, 1]` against `3.1416`: four fractional digits each, compared
//! exactly against a 16-digit value of pi.
//!
//! Run with `cargo run --example pi_approximation`.

use cfdiag::continued_fraction::{approximation_compare, evaluate, fractional_digit_budget, parse_terms, Closer};
use cfdiag::enumeration::pi_proxy;
use cfdiag::{Rational, Result};

pub fn run_example() -> Result<()> {
    let terms = parse_terms("[3; 7, 15, 1]")?;
    let cf_value = evaluate(&terms)?;
    let decimal = Rational::decimal(31416, 4);
    let report = approximation_compare(&pi_proxy(), &cf_value, &decimal);
    println!(
        "[3; 7, 15, 1] = {cf_value} uses {} fractional digits, error {:.3e}",
        fractional_digit_budget(&terms),
        report.cf_error.to_f64()
    );
    println!("3.1416 uses 4 fractional digits, error {:.3e}", report.decimal_error.to_f64());
    assert_eq!(report.closer, Closer::ContinuedFraction);
    println!("the continued fraction is closer by exact comparison");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
