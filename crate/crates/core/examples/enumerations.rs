//! The Calkin-Wilf enumeration, decimal digit streams and named
//! partial-quotient streams.
//!
//! Run with `cargo run --example enumerations`.

use cfdiag::continued_fraction::convergents;
use cfdiag::enumeration::{e_proxy, irrational_enumeration};
use cfdiag::{calkin_wilf, digits_of, named_cf_stream, CalkinWilf, Rational, Result};

pub fn run_example() -> Result<()> {
    let first: Vec<String> = calkin_wilf().take(15).map(|x| x.to_string()).collect();
    println!("Calkin-Wilf: {}", first.join(", "));
    let six_sevenths = Rational::new(6, 7)?;
    if let Some(k) = CalkinWilf::position_of(&six_sevenths, 1 << 12) {
        println!("6/7 is term {k}");
    }

    for x in calkin_wilf().take(6) {
        let s = digits_of(&x)?;
        let w = s.integer_part().clone();
        let digits: String = s.take(12).map(|d| char::from(b'0' + d)).collect();
        println!("{x:>4} = {w}.{digits}...");
    }

    for name in ["sqrt2", "e", "phi", "pi", "metallic:3"] {
        let terms: Vec<String> = named_cf_stream(name)?.prefix(12)?.iter().map(|a| a.to_string()).collect();
        println!("{name:>10}: [{}; {}, ...]", terms[0], terms[1..].join(", "));
    }

    let e12 = &convergents(named_cf_stream("e")?, 12)?[11].value;
    println!("12th convergent of e: {e12}, off from 2.718281828459 by {}", e12.distance(&e_proxy()));

    println!("irrational rows for the diagonal: metallic means 1..=5");
    for mut row in irrational_enumeration(5) {
        let t: Vec<String> = row.prefix(5)?.iter().map(|a| a.to_string()).collect();
        println!("  {}", t.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
