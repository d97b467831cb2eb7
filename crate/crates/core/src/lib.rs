//! Exact continued fractions, repeating decimals, enumerations of numbers,
//! and the diagonal constructions built on them.
//!
//! Every value is an exact [`Rational`]; floating point is only accepted by
//! [`ContinuedFraction::from_real_approx`], which converts its input to the
//! exact value of the binary float first.

pub mod cli;
pub mod continued_fraction;
pub mod decimal;
pub mod diagonalization;
pub mod enumeration;
pub mod error;
pub mod number_theory;
pub mod rational;

pub use continued_fraction::{ContinuedFraction, Convergent};
pub use decimal::{DecimalExpansion, PeriodReport};
pub use diagonalization::{CfDiagonalFailure, DiagonalWitness, Verdict};
pub use enumeration::{calkin_wilf, digits_of, named_cf_stream, CalkinWilf, CfStream, DigitStream, StreamName};
pub use error::{Error, Result};
pub use rational::Rational;
