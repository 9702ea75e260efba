//! The `faulhaber` command-line tool.
//!
//! ```text
//! faulhaber bern <j>                              print B_j
//! faulhaber poly bernoulli <m> [--basis x|centered|u]
//! faulhaber faulhaber <exponent>                  print the Faulhaber form
//! faulhaber eval <exponent> <n> [--method brute|bernoulli|faulhaber]
//! faulhaber verify [--max-m M] [--only T2-even,T2-odd,T3]
//! ```
//!
//! Every subcommand accepts `--format plain|json|latex` (default plain).
//! Results go to stdout, diagnostics to stderr.  Exit status: 0 on
//! success or an all-pass sweep, 1 when a verification sweep finds a
//! failure, 2 on usage errors.

use crate::forms::{
    eval_faulhaber, faulhaber_form, power_sum_bernoulli, power_sum_bruteforce,
};
use crate::numerics::Rational;
use crate::render::{
    self, json_to_string, rational_json, rational_latex, rational_plain, rationals_json,
    OutputFormat,
};
use crate::verify::{sweep, TheoremId};
use crate::{bernoulli_polynomial, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(
    name = "faulhaber",
    version,
    about = "Exact Bernoulli numbers, Bernoulli polynomials, and Faulhaber forms of power sums"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Plain)]
    pub format: FormatArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Bernoulli number B_j
    Bern { j: u32 },
    /// Print a polynomial in the chosen basis
    Poly {
        kind: PolyKind,
        m: u32,
        /// x (powers of x), centered (powers of x - 1/2), or u (powers of U(x))
        #[arg(long, value_enum, default_value_t = BasisArg::X)]
        basis: BasisArg,
    },
    /// Print the Faulhaber form of S_exponent (exponent >= 2)
    Faulhaber { exponent: u32 },
    /// Evaluate the power sum S_exponent at n
    Eval {
        exponent: u32,
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Bernoulli)]
        method: MethodArg,
    },
    /// Run the verification sweep up to --max-m
    Verify {
        #[arg(long, default_value_t = 10)]
        max_m: u32,
        /// Comma-separated families: T2-even, T2-odd, T3 (or T3-even/T3-odd)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Plain,
    Json,
    Latex,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => OutputFormat::Plain,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Latex => OutputFormat::Latex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Bernoulli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    X,
    Centered,
    U,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Bernoulli,
    Faulhaber,
}

/// A command's stdout text and process exit status.
#[derive(Debug, PartialEq, Eq)]
pub struct CmdOutput {
    pub stdout: String,
    pub status: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput { stdout, status: 0 }
    }
}

/// Usage-level failure; the caller prints it to stderr and exits 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Executes a parsed command line.  Pure apart from the Bernoulli cache:
/// identical arguments produce byte-identical output.
pub fn run(cli: &Cli) -> Result<CmdOutput, UsageError> {
    let format = OutputFormat::from(cli.format);
    match &cli.command {
        Command::Bern { j } => Ok(CmdOutput::ok(render_bern(*j, format))),
        Command::Poly { kind, m, basis } => {
            let PolyKind::Bernoulli = kind;
            Ok(CmdOutput::ok(render_poly(*m, *basis, format)))
        }
        Command::Faulhaber { exponent } => {
            let form = faulhaber_form(*exponent)?;
            let text = match format {
                OutputFormat::Plain => render::faulhaber_plain(&form),
                OutputFormat::Latex => render::faulhaber_latex(&form),
                OutputFormat::Json => json_to_string(&render::faulhaber_json(&form)),
            };
            Ok(CmdOutput::ok(line(text)))
        }
        Command::Eval {
            exponent,
            n,
            method,
        } => run_eval(*exponent, *n, *method, format),
        Command::Verify { max_m, only } => run_verify(*max_m, only, format),
    }
}

/// Exit status for a sweep outcome: 0 all-pass, 1 otherwise.
pub fn sweep_exit_status(all_pass: bool) -> i32 {
    if all_pass {
        0
    } else {
        1
    }
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}

fn render_bern(j: u32, format: OutputFormat) -> String {
    let b = crate::bernoulli_number(j);
    line(match format {
        OutputFormat::Plain => rational_plain(&b),
        OutputFormat::Latex => rational_latex(&b),
        OutputFormat::Json => json_to_string(&rational_json(&b)),
    })
}

fn render_poly(m: u32, basis: BasisArg, format: OutputFormat) -> String {
    let p = bernoulli_polynomial(m);
    let text = match basis {
        BasisArg::U => {
            let split = p.to_u_basis();
            match format {
                OutputFormat::Plain => render::usplit_plain(&split),
                OutputFormat::Latex => render::usplit_latex(&split),
                OutputFormat::Json => json_to_string(&json!({
                    "kind": "bernoulli",
                    "m": m,
                    "basis": "u",
                    "even": rationals_json(split.even.coeffs()),
                    "odd": rationals_json(split.odd.coeffs()),
                })),
            }
        }
        BasisArg::X | BasisArg::Centered => {
            let (p, name) = match basis {
                BasisArg::X => (p, "x"),
                BasisArg::Centered => (p.to_centered().expect("power basis"), "centered"),
                BasisArg::U => unreachable!(),
            };
            match format {
                OutputFormat::Plain => render::poly_plain(&p),
                OutputFormat::Latex => render::poly_latex(&p),
                OutputFormat::Json => json_to_string(&json!({
                    "kind": "bernoulli",
                    "m": m,
                    "basis": name,
                    "coeffs": rationals_json(p.coeffs()),
                })),
            }
        }
    };
    line(text)
}

fn run_eval(
    exponent: u32,
    n: u64,
    method: MethodArg,
    format: OutputFormat,
) -> Result<CmdOutput, UsageError> {
    if n < 1 {
        return Err(UsageError("n must be at least 1".into()));
    }
    let value: Rational = match method {
        MethodArg::Brute => power_sum_bruteforce(exponent, n),
        MethodArg::Bernoulli => {
            if exponent < 1 {
                return Err(UsageError(
                    "the bernoulli method needs exponent >= 1; use --method brute for S_0".into(),
                ));
            }
            power_sum_bernoulli(exponent, n)
        }
        MethodArg::Faulhaber => {
            if exponent < 2 {
                return Err(UsageError(
                    "the faulhaber method needs exponent >= 2; use --method brute or bernoulli"
                        .into(),
                ));
            }
            eval_faulhaber(&faulhaber_form(exponent)?, n)
        }
    };
    assert!(value.is_integer(), "power sums are integers");
    let digits = value.numer().to_string();
    let text = match format {
        OutputFormat::Plain | OutputFormat::Latex => digits,
        OutputFormat::Json => json_to_string(&json!({
            "exponent": exponent,
            "n": n.to_string(),
            "method": match method {
                MethodArg::Brute => "brute",
                MethodArg::Bernoulli => "bernoulli",
                MethodArg::Faulhaber => "faulhaber",
            },
            "value": digits,
        })),
    };
    Ok(CmdOutput::ok(line(text)))
}

fn parse_only(only: &[String]) -> Result<Vec<TheoremId>, UsageError> {
    if only.is_empty() {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for token in only {
        match token.to_ascii_lowercase().as_str() {
            "t2-even" => ids.push(TheoremId::T2Even),
            "t2-odd" => ids.push(TheoremId::T2Odd),
            "t3" => ids.extend([TheoremId::T3Even, TheoremId::T3Odd]),
            "t3-even" => ids.push(TheoremId::T3Even),
            "t3-odd" => ids.push(TheoremId::T3Odd),
            other => {
                return Err(UsageError(format!(
                    "unknown theorem family '{other}'; expected T2-even, T2-odd, or T3"
                )))
            }
        }
    }
    ids.sort();
    ids.dedup();
    Ok(ids)
}

fn run_verify(max_m: u32, only: &[String], format: OutputFormat) -> Result<CmdOutput, UsageError> {
    if max_m < 1 {
        return Err(UsageError("--max-m must be at least 1".into()));
    }
    let which = parse_only(only)?;
    let reports = sweep(max_m, &which);
    let all_pass = reports.iter().all(|r| r.verdict);
    let text = match format {
        OutputFormat::Plain => render::reports_plain(&reports, max_m),
        OutputFormat::Json => line(json_to_string(&render::reports_json(&reports, max_m))),
        OutputFormat::Latex => line(render::reports_latex(&reports, max_m)),
    };
    Ok(CmdOutput {
        stdout: text,
        status: sweep_exit_status(all_pass),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<CmdOutput, UsageError> {
        let cli = Cli::try_parse_from(args).expect("args parse");
        run(&cli)
    }

    #[test]
    fn bern_outputs() {
        assert_eq!(run_args(&["faulhaber", "bern", "4"]).unwrap().stdout, "-1/30\n");
        assert_eq!(run_args(&["faulhaber", "bern", "3"]).unwrap().stdout, "0\n");
        assert_eq!(run_args(&["faulhaber", "bern", "0"]).unwrap().stdout, "1\n");
        assert_eq!(
            run_args(&["faulhaber", "bern", "4", "--format", "json"])
                .unwrap()
                .stdout,
            "{\"den\":\"30\",\"num\":\"-1\"}\n"
        );
    }

    #[test]
    fn poly_outputs() {
        assert_eq!(
            run_args(&["faulhaber", "poly", "bernoulli", "4", "--basis", "u"])
                .unwrap()
                .stdout,
            "-1/30 + 4*U^2\n"
        );
        assert_eq!(
            run_args(&["faulhaber", "poly", "bernoulli", "3", "--basis", "u"])
                .unwrap()
                .stdout,
            "(x - 1/2)*(2*U)\n"
        );
        assert_eq!(
            run_args(&["faulhaber", "poly", "bernoulli", "0"]).unwrap().stdout,
            "1\n"
        );
    }

    #[test]
    fn faulhaber_outputs() {
        assert_eq!(
            run_args(&["faulhaber", "faulhaber", "3"]).unwrap().stdout,
            "S_3 = S_1^2*(1)\n"
        );
        assert_eq!(
            run_args(&["faulhaber", "faulhaber", "4"]).unwrap().stdout,
            "S_4 = S_2*(-1/5 + 6/5*S_1)\n"
        );
        assert!(run_args(&["faulhaber", "faulhaber", "1"]).is_err());
    }

    #[test]
    fn eval_methods_agree() {
        let brute = run_args(&["faulhaber", "eval", "2", "4", "--method", "brute"]).unwrap();
        assert_eq!(brute.stdout, "30\n");
        let bern = run_args(&["faulhaber", "eval", "7", "10", "--method", "bernoulli"]).unwrap();
        let brute7 = run_args(&["faulhaber", "eval", "7", "10", "--method", "brute"]).unwrap();
        assert_eq!(bern.stdout, brute7.stdout);
    }

    #[test]
    fn eval_rejects_invalid_combinations() {
        assert!(run_args(&["faulhaber", "eval", "1", "5", "--method", "faulhaber"]).is_err());
        assert!(run_args(&["faulhaber", "eval", "0", "5", "--method", "bernoulli"]).is_err());
        assert!(run_args(&["faulhaber", "eval", "3", "0"]).is_err());
    }

    #[test]
    fn verify_small_sweep_passes() {
        let out = run_args(&["faulhaber", "verify", "--max-m", "3"]).unwrap();
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("T2-even  2   pass"));
        assert!(out.stdout.ends_with("reports passed (max m = 3)\n"));
    }

    #[test]
    fn verify_only_filter() {
        let out = run_args(&["faulhaber", "verify", "--max-m", "2", "--only", "T3"]).unwrap();
        assert!(out.stdout.contains("T3-even"));
        assert!(out.stdout.contains("T3-odd"));
        assert!(!out.stdout.contains("T2-even"));
        assert!(run_args(&["faulhaber", "verify", "--only", "T9"]).is_err());
    }

    #[test]
    fn verify_rejects_zero_bound() {
        assert!(run_args(&["faulhaber", "verify", "--max-m", "0"]).is_err());
    }

    // The all-pass sweep leaves no honest way to see status 1 end to end;
    // the mapping itself is the contract.
    #[test]
    fn exit_status_mapping() {
        assert_eq!(sweep_exit_status(true), 0);
        assert_eq!(sweep_exit_status(false), 1);
    }
}
