//! The `cfdiag` command line.
//!
//! [`run`] parses arguments, dispatches to one library operation and writes
//! its exact textual result. Exit codes: 0 on success, 1 when the operation
//! reports an error, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::continued_fraction::{
    approximation_compare, convergents, evaluate, fractional_digit_budget, parse_terms, Closer,
    ContinuedFraction,
};
use crate::decimal::{self, DecimalExpansion};
use crate::diagonalization::{
    cf_diagonal, cf_diagonal_over_rationals, decimal_diagonal, rational_diagonal_analysis,
    render_table, render_tsv, DiagonalWitness,
};
use crate::enumeration::{calkin_wilf, digits_of, irrational_enumeration, pi_proxy, CfStream, StreamName};
use crate::error::{Error, Result};
use crate::rational::Rational;

const DEFAULT_DEPTH: usize = 20;
const DEFAULT_EPS: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(
    name = "cfdiag",
    version,
    about = "Exact continued fractions, repeating decimals and diagonal constructions",
    after_help = "Defaults: --depth 20, --eps 1e-9. All numeric output is exact."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Continued fraction conversions
    #[command(subcommand)]
    Cf(CfCommand),
    /// Repeating decimal expansions
    #[command(subcommand)]
    Decimal(DecimalCommand),
    /// Diagonal constructions
    #[command(subcommand)]
    Diag(DiagCommand),
    /// Compare a continued-fraction approximation with a decimal one
    #[command(subcommand)]
    Approx(ApproxCommand),
    /// Print the first values of a named stream (sqrt2, e, phi, pi, metallic:<k>, cw)
    Stream {
        name: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CfCommand {
    /// Canonical continued fraction of P/Q
    FromRational {
        #[arg(allow_hyphen_values = true)]
        value: Rational,
        /// Print space-separated terms instead of [a0; a1, ...]
        #[arg(long)]
        spaced: bool,
    },
    /// Exact value of "[a0; a1, ...]" or "a0 a1 ..."
    ToRational {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Continued fraction within EPS of a real number
    FromReal {
        #[arg(allow_hyphen_values = true)]
        x: f64,
        #[arg(long, default_value_t = DEFAULT_EPS, allow_hyphen_values = true)]
        eps: f64,
    },
    /// Convergents of a continued fraction literal or a named stream
    Convergents {
        source: String,
        /// Defaults to every term of a literal, or 20 for a stream
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum DecimalCommand {
    /// Expansion of P/Q as w.uu(vv)
    Expand {
        #[arg(allow_hyphen_values = true)]
        value: Rational,
    },
    /// Period length and preperiod of P/Q
    Period {
        #[arg(allow_hyphen_values = true)]
        value: Rational,
    },
    /// Smallest 1/d whose period has at least L digits
    FindPeriod {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        min_length: u64,
    },
    /// Exact value of a w.uu(vv) expansion
    Reconstruct { expansion: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Tsv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CfSource {
    Irrationals,
    Rationals,
}

#[derive(Args, Debug)]
struct DepthArg {
    #[arg(long, default_value_t = DEFAULT_DEPTH as u64, value_parser = clap::value_parser!(u64).range(1..))]
    depth: u64,
}

#[derive(Subcommand, Debug)]
enum DiagCommand {
    /// Decimal diagonal over the Calkin-Wilf rationals
    Decimal {
        #[command(flatten)]
        depth: DepthArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Continued-fraction diagonal over metallic means, or its failure over rationals
    Cf {
        #[arg(long, value_enum)]
        source: CfSource,
        #[command(flatten)]
        depth: DepthArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Which small (preperiod, period) pairs the decimal diagonal prefix rules out
    Analyze {
        #[command(flatten)]
        depth: DepthArg,
        #[arg(long, default_value_t = 4)]
        max_preperiod: usize,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max_period: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ApproxCommand {
    /// Defaults: pi as 3141592653589793/10^15, [3; 7, 15, 1] against 3.1416
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        target: Option<Rational>,
        #[arg(long)]
        cf: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        decimal: Option<Rational>,
    },
}

/// Runs one command. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<String> {
    match command {
        Command::Cf(c) => run_cf(c),
        Command::Decimal(c) => run_decimal(c),
        Command::Diag(c) => run_diag(c),
        Command::Approx(ApproxCommand::Compare { target, cf, decimal }) => {
            run_compare(target, cf.as_deref(), decimal)
        }
        Command::Stream { name, count } => run_stream(&name, count as usize),
    }
}

fn run_cf(command: CfCommand) -> Result<String> {
    Ok(match command {
        CfCommand::FromRational { value, spaced } => {
            let cf = ContinuedFraction::from_rational(&value)?;
            if spaced {
                format!("{}\n", cf.to_spaced_string())
            } else {
                format!("{cf}\n")
            }
        }
        CfCommand::ToRational { cf } => format!("{}\n", evaluate(&parse_terms(&cf)?)?),
        CfCommand::FromReal { x, eps } => {
            let cf = ContinuedFraction::from_real_approx(x, eps)?;
            format!("{cf}\n")
        }
        CfCommand::Convergents { source, count } => {
            let list = match source.parse::<StreamName>() {
                Ok(name) => convergents(CfStream::named(name), count.map_or(DEFAULT_DEPTH, |c| c as usize))?,
                Err(_) => {
                    let terms = parse_terms(&source)
                        .map_err(|_| Error::domain(format!("{source:?} is neither a stream name nor a continued fraction")))?;
                    let n = count.map_or(terms.len(), |c| c as usize);
                    convergents(terms, n)?
                }
            };
            list.iter().map(|c| format!("{}\t{}\n", c.index, c.value)).collect()
        }
    })
}

fn run_decimal(command: DecimalCommand) -> Result<String> {
    Ok(match command {
        DecimalCommand::Expand { value } => format!("{}\n", decimal::expand(&value)?),
        DecimalCommand::Period { value } => {
            let report = decimal::period_length(&value)?;
            let mut line = format!("period length {}, preperiod {}", report.length, report.preperiod);
            if report.terminating {
                line.push_str(", terminating");
            }
            line.push('\n');
            line
        }
        DecimalCommand::FindPeriod { min_length } => {
            let x = decimal::find_period_at_least(min_length as usize)?;
            let report = decimal::period_length(&x)?;
            format!("{x} (period length {})\n", report.length)
        }
        DecimalCommand::Reconstruct { expansion } => {
            let e: DecimalExpansion = expansion.parse()?;
            format!("{}\n", e.reconstruct())
        }
    })
}

fn render<T: std::fmt::Display + PartialEq>(
    prefix: &str,
    witnesses: &[DiagonalWitness<T>],
    entry: char,
    format: Format,
) -> String {
    match format {
        Format::Table => format!("constructed {prefix}\n{}", render_table(witnesses, entry)),
        Format::Tsv => render_tsv(witnesses),
    }
}

fn run_diag(command: DiagCommand) -> Result<String> {
    match command {
        DiagCommand::Decimal { depth, format } => {
            let depth = depth.depth as usize;
            let rows = calkin_wilf()
                .take(depth)
                .map(|x| digits_of(&x))
                .collect::<Result<Vec<_>>>()?;
            let d = decimal_diagonal(rows, depth)?;
            Ok(render(&d.render_prefix(), &d.witnesses, 'd', format))
        }
        DiagCommand::Cf {
            source: CfSource::Irrationals,
            depth,
            format,
        } => {
            let depth = depth.depth as usize;
            let d = cf_diagonal(irrational_enumeration(depth), depth)?;
            Ok(render(&d.render_prefix(), &d.witnesses, 'a', format))
        }
        DiagCommand::Cf {
            source: CfSource::Rationals,
            ..
        } => Ok(format!("{}\n", cf_diagonal_over_rationals(calkin_wilf())?)),
        DiagCommand::Analyze {
            depth,
            max_preperiod,
            max_period,
        } => {
            let report = rational_diagonal_analysis(
                calkin_wilf(),
                depth.depth as usize,
                max_preperiod,
                max_period as usize,
            )?;
            let digits: String = report.digits.iter().map(|d| char::from(b'0' + d)).collect();
            let mut out = format!("constructed 0.{digits}...\n");
            for r in &report.rulings {
                match r.witness {
                    Some(j) => out.push_str(&format!(
                        "p={}\tl={}\truled out\tj={j}\n",
                        r.preperiod, r.period
                    )),
                    None => out.push_str(&format!("p={}\tl={}\tconsistent\n", r.preperiod, r.period)),
                }
            }
            let ruled_out = report.ruled_out().count();
            out.push_str(&format!("{ruled_out} of {} pairs ruled out\n", report.rulings.len()));
            Ok(out)
        }
    }
}

fn run_compare(target: Option<Rational>, cf: Option<&str>, decimal: Option<Rational>) -> Result<String> {
    let target = target.unwrap_or_else(pi_proxy);
    let terms = parse_terms(cf.unwrap_or("[3; 7, 15, 1]"))?;
    let cf_value = evaluate(&terms)?;
    let decimal = decimal.unwrap_or_else(|| Rational::decimal(31416, 4));
    let report = approximation_compare(&target, &cf_value, &decimal);
    let verdict = match report.closer {
        Closer::ContinuedFraction => "continued fraction is closer",
        Closer::Decimal => "decimal is closer",
        Closer::Tie => "tie",
    };
    Ok(format!(
        "target {target}\ncf {} = {cf_value} (fractional digits {})\ncf error {}\ndecimal {decimal}\ndecimal error {}\n{verdict}\n",
        crate::continued_fraction::format_terms(&terms),
        fractional_digit_budget(&terms),
        report.cf_error,
        report.decimal_error,
    ))
}

fn run_stream(name: &str, count: usize) -> Result<String> {
    let values: Vec<String> = if name == "cw" {
        calkin_wilf().take(count).map(|x| format!("{}/{}", x.numer(), x.denom())).collect()
    } else {
        named_prefix(name, count)?
    };
    Ok(format!("{}\n", values.join(" ")))
}

fn named_prefix(name: &str, count: usize) -> Result<Vec<String>> {
    let mut s = CfStream::named(name.parse()?);
    Ok(s.prefix(count)?.iter().map(|a| a.to_string()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cfdiag").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn convergents_of_literal_and_stream() {
        assert_eq!(call(&["cf", "convergents", "[0; 1, 6]"]).1, "0\t0\n1\t1\n2\t6/7\n");
        assert_eq!(
            call(&["cf", "convergents", "pi", "--count", "4"]).1,
            "0\t3\n1\t22/7\n2\t333/106\n3\t355/113\n"
        );
        let (code, _, err) = call(&["cf", "convergents", "[5]", "--count", "2"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("range error"));
        assert_eq!(call(&["cf", "convergents", "tau"]).0, 1);
    }

    #[test]
    fn stream_listing() {
        assert_eq!(call(&["stream", "e", "--count", "6"]).1, "2 1 2 1 1 4\n");
        assert_eq!(call(&["stream", "cw", "--count", "4"]).1, "1/1 1/2 2/1 1/3\n");
        assert_eq!(call(&["stream", "pi", "--count", "51"]).0, 1);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("--depth 20"));
    }
}
