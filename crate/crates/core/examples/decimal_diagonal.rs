//! The decimal diagonal over an enumeration of the rationals, and what a
//! finite prefix of it says about periodicity.
//!
//! Run with `cargo run --example decimal_diagonal`.

use cfdiag::diagonalization::{decimal_diagonal, rational_diagonal_analysis, render_table};
use cfdiag::{calkin_wilf, digits_of, Result};

pub fn run_example() -> Result<()> {
    let depth = 12;
    let rows = calkin_wilf().take(depth).map(|x| digits_of(&x)).collect::<Result<Vec<_>>>()?;
    let d = decimal_diagonal(rows.clone(), depth)?;
    println!("constructed {}", d.render_prefix());
    print!("{}", render_table(&d.witnesses, 'd'));
    assert!(d.verify(rows)?.holds());

    let report = rational_diagonal_analysis(calkin_wilf(), 200, 10, 20)?;
    let ruled_out = report.ruled_out().count();
    println!(
        "over 200 digits, {ruled_out} of {} (preperiod <= 10, period <= 20) pairs are ruled out",
        report.rulings.len()
    );
    for r in report.ruled_out().take(5) {
        let j = r.witness.expect("ruled-out pairs carry a witness");
        println!(
            "  p={} l={}: digit {j} is {} but digit {} is {}",
            r.preperiod,
            r.period,
            report.digits[j - 1],
            j + r.period,
            report.digits[j + r.period - 1]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
