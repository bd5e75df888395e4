//! Command-line front end for the `qbbw` binary.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::characters::{char_dual_kac, char_lambda_factor, char_levi_irreducible, Character};
use crate::cohomology::{dolbeault, scan, BundleSpec, InputKind};
use crate::error::{Error, Result};
use crate::rootdata::{levi_blocks_of, odd_positive_roots_of, RootData, SubalgebraSpec, Weight};
use crate::uqrep::{verify_hopf, verify_relations, Rep, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qbbw", version, about = "Bott-Borel-Weil cohomology and relation checks for U_q(gl(m|n))")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true, env = "QBBW_JSON", action = clap::ArgAction::SetTrue, value_parser = clap::builder::BoolishValueParser::new())]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dolbeault cohomology of the bundle induced from a weight.
    Cohomology {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        /// Theta sets, e.g. "theta-=all" or "theta+=1;theta-=all".
        #[arg(long)]
        parabolic: String,
        /// Weight as "a,b|c", split at the m|n boundary.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "irreducible")]
        input_kind: KindArg,
    },
    /// Formal characters.
    Character {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum)]
        which: Which,
        /// Highest weight; not needed for lambda_factor.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Reductive subalgebra as theta sets; defaults to all of gl(m|n).
        #[arg(long)]
        levi: Option<String>,
    },
    /// Check the defining relations and Hopf axioms in tensor powers of V.
    Verify {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        depth: u8,
    },
    /// Tabulate cohomology over a box of integral weights.
    Scan {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        parabolic: String,
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, allow_hyphen_values = true)]
        max: i64,
        #[arg(long, value_enum, default_value = "irreducible")]
        input_kind: KindArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Irreducible,
    #[value(name = "dual_kac")]
    DualKac,
}

impl From<KindArg> for InputKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Irreducible => InputKind::Irreducible,
            KindArg::DualKac => InputKind::DualKac,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Which {
    #[value(name = "dual_kac")]
    DualKac,
    #[value(name = "levi_irreducible")]
    LeviIrreducible,
    #[value(name = "lambda_factor")]
    LambdaFactor,
}

/// Parses `argv` (including the program name), runs the command, and
/// returns the process exit code.
pub fn parse_and_run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs an already-parsed command.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Output(e.to_string());
    match &cli.command {
        Command::Cohomology {
            m,
            n,
            parabolic,
            weight,
            input_kind,
        } => {
            let rd = RootData::new(*m, *n)?;
            let p = SubalgebraSpec::parse(&rd, parabolic)?;
            let lambda = parse_weight(weight, *m, *n)?;
            let spec = BundleSpec::new(rd, p, lambda, (*input_kind).into())?;
            let res = dolbeault(&spec)?;
            if cli.json {
                writeln!(out, "{}", res.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{res}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Character {
            m,
            n,
            which,
            weight,
            levi,
        } => {
            let rd = RootData::new(*m, *n)?;
            let levi = match levi {
                Some(s) => SubalgebraSpec::parse(&rd, s)?,
                None => SubalgebraSpec::full(&rd),
            };
            let need_weight = || -> Result<Weight> {
                let s = weight
                    .as_deref()
                    .ok_or_else(|| Error::Parse("--weight is required for this character".into()))?;
                parse_weight(s, *m, *n)
            };
            let ch = match which {
                Which::DualKac => char_dual_kac(&rd, &levi, &need_weight()?)?,
                Which::LeviIrreducible => {
                    let blocks = levi_blocks_of(&rd, &levi)?;
                    char_levi_irreducible(&rd, &blocks, &need_weight()?)?
                }
                Which::LambdaFactor => char_lambda_factor(&odd_positive_roots_of(&rd, &levi)?, *m, *n),
            };
            if cli.json {
                writeln!(out, "{}", ch.to_json()).map_err(io)?;
            } else {
                write_character(out, &ch).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { m, n, depth } => {
            let v = Rep::vector(*m, *n)?;
            let mut report = Report::new();
            report.extend_prefixed("V/", verify_relations(&v));
            let hopf = verify_hopf(*m, *n, usize::from(*depth))?;
            for c in hopf.checks() {
                report.push(c.clone());
            }
            if cli.json {
                let checks: Vec<_> = report
                    .checks()
                    .iter()
                    .map(|c| json!({"name": c.name, "passed": c.passed, "residual_degree": c.residual_degree}))
                    .collect();
                let v = json!({"passed": report.all_passed(), "checks": checks});
                writeln!(out, "{v}").map_err(io)?;
            } else {
                write!(out, "{report}").map_err(io)?;
                let failed = report.failures().count();
                writeln!(out, "{} checks, {} failed", report.len(), failed).map_err(io)?;
            }
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Scan {
            m,
            n,
            parabolic,
            min,
            max,
            input_kind,
        } => {
            let rd = RootData::new(*m, *n)?;
            let p = SubalgebraSpec::parse(&rd, parabolic)?;
            for row in scan(&rd, &p, (*input_kind).into(), *min, *max)? {
                let lam = row.lambda.paren();
                let coords: Vec<i64> = row.lambda.to_ints().expect("scan weights are integral");
                if cli.json {
                    let v = match &row.result {
                        Ok(r) => json!({"lambda": coords, "result": r.to_json_value()}),
                        Err(e) => json!({"lambda": coords, "error": e.to_string()}),
                    };
                    writeln!(out, "{v}").map_err(io)?;
                } else {
                    match &row.result {
                        Ok(r) => writeln!(out, "{lam} {r}"),
                        Err(e) => writeln!(out, "{lam} undefined: {e}"),
                    }
                    .map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses a weight and checks its `|` split against `-m`/`-n`.
pub fn parse_weight(s: &str, m: usize, n: usize) -> Result<Weight> {
    let w = Weight::parse(s)?;
    if w.context() != (m, n) {
        return Err(Error::Parse(format!(
            "weight {s:?} splits as {}|{} but -m {m} -n {n} was given",
            w.m(),
            w.n()
        )));
    }
    Ok(w)
}

fn write_character(out: &mut impl Write, ch: &Character) -> std::io::Result<()> {
    writeln!(out, "terms={} dim={}", ch.num_terms(), ch.dim())?;
    for w in ch.weights() {
        writeln!(out, "  {} {}", ch.multiplicity(&w), w.paren())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["qbbw"];
        argv.extend_from_slice(args);
        let code = parse_and_run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn weight_split_mismatch_is_usage_error() {
        let (code, _, err) = run_args(&["cohomology", "-m", "2", "-n", "1", "--parabolic", "theta-=all", "--weight", "-2|0,0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("splits as 1|2"), "{err}");
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, _, _) = run_args(&["verify", "-m", "1", "-n", "1", "--bogus"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("cohomology"));
    }
}
