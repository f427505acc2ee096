//! The `jordan` command line: `rep`, `cgc` and `verify`.
//!
//! Every spin or weight flag takes a doubled integer, so `--j 3` means `j = 3/2`
//! and `--m -1` means `m = -1/2`.

pub mod format;
pub mod json;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::cgc::{self, coupled_labels, coupled_spins, product_labels};
use crate::error::Result;
use crate::exact::{lift_to_sqrt, EMat, HalfInt, Style};
use crate::jordanian::{self, Generator};
use crate::report::Report;
use crate::su2;
use crate::suite::{self, Bounds, Suite, DEFAULT_MAX_2J, DEFAULT_SEED};
use json::{MatrixPayload, OutputRecord, Payload, TableEntry, TablePayload, VerifyPayload};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "jordan",
    version,
    about = "Exact matrices and Clebsch-Gordan coefficients for the Jordanian deformation of sl(2)",
    after_help = "Spin and weight labels are doubled integers: --j 3 means j = 3/2."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print a generator matrix on one irreducible representation.
    #[command(allow_negative_numbers = true)]
    Rep(RepArgs),
    /// Print deformed Clebsch-Gordan coefficients.
    #[command(allow_negative_numbers = true)]
    Cgc(CgcArgs),
    /// Run exact verification suites; exits nonzero on any mismatch.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    V,
    E,
}

#[derive(Args, Debug, Clone)]
pub struct RepArgs {
    /// 2j
    #[arg(long = "j", value_name = "TWICE_J")]
    pub twice_j: i64,
    /// H, X, Y, Z+, Z-, expHX, expNegHX, coshHalfInv or sinhHX
    #[arg(long = "gen", value_name = "GENERATOR")]
    pub generator: Generator,
    #[arg(long, value_enum, default_value_t = Basis::V)]
    pub basis: Basis,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug, Clone)]
pub struct CgcArgs {
    /// 2j1
    #[arg(long = "j1", value_name = "TWICE_J1")]
    pub twice_j1: i64,
    /// 2j2
    #[arg(long = "j2", value_name = "TWICE_J2")]
    pub twice_j2: i64,
    /// Keep only the coupled spin 2j
    #[arg(long = "j", value_name = "TWICE_J")]
    pub twice_j: Option<i64>,
    /// Keep only the coupled weight 2m
    #[arg(long = "m", value_name = "TWICE_M")]
    pub twice_m: Option<i64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
    pub suite: String,
    /// Bound on 2j, and on 2j1+2j2 for pairs
    #[arg(long = "max-2j", env = "JORDAN_MAX_2J", default_value_t = DEFAULT_MAX_2J)]
    pub max_2j: i64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub success: bool,
}

fn half(t: i64) -> HalfInt {
    HalfInt::from_twice(t)
}

fn latex_half(x: HalfInt) -> String {
    match x.to_integer() {
        Some(n) => n.to_string(),
        None if x.twice() < 0 => format!("-\\tfrac{{{}}}{{2}}", -x.twice()),
        None => format!("\\tfrac{{{}}}{{2}}", x.twice()),
    }
}

/// The matrix requested by `rep`, with entries in `HPoly<SqrtRat>`.
pub fn rep_matrix(generator: Generator, j: HalfInt, basis: Basis) -> Result<EMat> {
    let v = lift_to_sqrt(&jordanian::generator_matrix(generator, j)?.matrix);
    match basis {
        Basis::V => Ok(v),
        Basis::E => su2::v_to_e_operator(&v, &su2::alphas(j)?),
    }
}

pub fn run_rep(args: &RepArgs, command: Vec<String>) -> Result<Outcome> {
    let j = half(args.twice_j);
    let m = rep_matrix(args.generator, j, args.basis)?;
    let basis = match args.basis {
        Basis::V => "v",
        Basis::E => "e",
    };
    let stdout = match args.format {
        OutputFormat::Text => {
            let weights: Vec<String> = j.weights().map(|w| w.to_string()).collect();
            format!(
                "{} on V^({j}), {basis}-basis; column k is the image of {basis}_m for m = {}\n{}",
                args.generator,
                weights.join(", "),
                format::matrix_text(&m)
            )
        }
        OutputFormat::Latex => format::matrix_latex(&m),
        OutputFormat::Json => {
            let payload = Payload::Matrix(MatrixPayload {
                generator: args.generator.name().to_string(),
                j,
                basis: basis.to_string(),
                weights: j.weights().collect(),
                rows: json::encode_matrix(&m),
            });
            OutputRecord::new(command, payload).to_json()? + "\n"
        }
    };
    Ok(Outcome { stdout, warnings: vec![], success: true })
}

/// Table entries matching the filters, in column order then row order.
fn cgc_entries(args: &CgcArgs) -> Result<(Vec<TableEntry>, Vec<String>)> {
    let (j1, j2) = (half(args.twice_j1), half(args.twice_j2));
    let mut warnings = Vec::new();
    let columns: Vec<(HalfInt, HalfInt)> = coupled_labels(j1, j2)
        .into_iter()
        .filter(|&(j, m)| args.twice_j.is_none_or(|t| j.twice() == t) && args.twice_m.is_none_or(|t| m.twice() == t))
        .collect();
    if columns.is_empty() {
        let spins: Vec<String> = coupled_spins(j1, j2).iter().map(|j| j.twice().to_string()).collect();
        warnings.push(format!(
            "no coupled state matches the filter; 2j must be one of {} and 2m a weight of it",
            spins.join(", ")
        ));
    }
    let rows = product_labels(j1, j2)?;
    let mut entries = Vec::new();
    for (j, m) in columns {
        for &(n1, n2) in &rows {
            let value = cgc::deformed_cgc(j1, j2, j, n1, n2, m)?;
            entries.push(TableEntry { j, n1, n2, m, value: json::encode_poly(&value) });
        }
    }
    Ok((entries, warnings))
}

pub fn run_cgc(args: &CgcArgs, command: Vec<String>) -> Result<Outcome> {
    let (j1, j2) = (half(args.twice_j1), half(args.twice_j2));
    su2::RepSpace::new(j1)?;
    su2::RepSpace::new(j2)?;
    let (entries, warnings) = cgc_entries(args)?;
    let filtered = args.twice_j.is_some() || args.twice_m.is_some();
    let stdout = match args.format {
        OutputFormat::Json => {
            let payload = Payload::Table(TablePayload {
                j1,
                j2,
                row_order: product_labels(j1, j2)?,
                column_order: coupled_labels(j1, j2),
                entries,
            });
            OutputRecord::new(command, payload).to_json()? + "\n"
        }
        OutputFormat::Text => {
            let mut out = format!("deformed Clebsch-Gordan coefficients for j1={j1}, j2={j2}\n");
            if !filtered {
                out.push_str("coupling matrix: rows (n1,n2) with n1 then n2 descending, columns (j,m) with j then m descending\n");
                out.push_str(&format::matrix_text(&cgc::coupling_matrix(j1, j2)?));
            }
            let mut current = None;
            let mut zeros = 0;
            for e in &entries {
                let value = json::decode_poly(&e.value)?;
                if value.is_zero() {
                    zeros += 1;
                    continue;
                }
                if current != Some((e.j, e.m)) {
                    out.push_str(&format!("j={} m={}\n", e.j, e.m));
                    current = Some((e.j, e.m));
                }
                out.push_str(&format!("  n1={} n2={}: {}\n", e.n1, e.n2, value.render(Style::Text)));
            }
            out.push_str(&format!("{} entries, {} identically zero\n", entries.len(), zeros));
            out
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for e in &entries {
                let value = json::decode_poly(&e.value)?;
                if value.is_zero() {
                    continue;
                }
                out.push_str(&format!(
                    "\\mathcal{{C}}^{{{},{},{}}}_{{{},{},{}}} = {} \\\\\n",
                    latex_half(j1),
                    latex_half(j2),
                    latex_half(e.j),
                    latex_half(e.n1),
                    latex_half(e.n2),
                    latex_half(e.m),
                    value.render(Style::Latex)
                ));
            }
            out
        }
    };
    Ok(Outcome { stdout, warnings, success: true })
}

pub fn verify_reports(args: &VerifyArgs) -> Result<Vec<Report>> {
    let suite: Suite = args.suite.parse()?;
    suite::run(suite, Bounds { max_2j: args.max_2j, seed: args.seed, ..Bounds::default() })
}

pub fn run_verify(args: &VerifyArgs, command: Vec<String>) -> Result<Outcome> {
    let reports = verify_reports(args)?;
    let success = reports.iter().all(Report::passed);
    let stdout = match args.format {
        OutputFormat::Json => {
            let payload = Payload::Verify(VerifyPayload {
                suite: args.suite.clone(),
                max_2j: args.max_2j,
                seed: args.seed,
                passed: success,
                reports,
            });
            OutputRecord::new(command, payload).to_json()? + "\n"
        }
        _ => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_string());
            }
            let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
            let failed: usize = reports.iter().map(|r| r.checks.iter().filter(|c| !c.passed).count()).sum();
            out.push_str(&format!(
                "suite {}: {checks} checks, {failed} failed, max 2j = {}, seed = {}\n",
                args.suite, args.max_2j, args.seed
            ));
            out
        }
    };
    Ok(Outcome { stdout, warnings: vec![], success })
}

pub fn execute(cli: &Cli, command: Vec<String>) -> Result<Outcome> {
    match &cli.command {
        Command::Rep(a) => run_rep(a, command),
        Command::Cgc(a) => run_cgc(a, command),
        Command::Verify(a) => run_verify(a, command),
    }
}

/// Parses `args` (including the program name), runs the command and prints its output.
/// Returns the process exit code: 0 on success, 1 on a failed verification, 2 on errors.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let command = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, command) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", outcome.stdout);
            if outcome.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Outcome> {
        let mut full = vec!["jordan"];
        full.extend_from_slice(args);
        let cli = Cli::try_parse_from(&full).expect("valid flags");
        execute(&cli, args.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn rep_h_text() {
        let out = run(&["rep", "--j", "2", "--gen", "H", "--basis", "v"]).unwrap();
        assert!(out.stdout.contains("[ -2  0  0 ]"), "{}", out.stdout);
        assert!(out.stdout.contains("[  0  0  2 ]"));
    }

    #[test]
    fn rep_scalar_x_is_zero() {
        let out = run(&["rep", "--j", "0", "--gen", "X"]).unwrap();
        assert!(out.stdout.ends_with("[ 0 ]\n"));
    }

    #[test]
    fn rep_y_json_matches_library() {
        let out = run(&["rep", "--j", "2", "--gen", "Y", "--format", "json"]).unwrap();
        let rec = OutputRecord::from_json(&out.stdout).unwrap();
        let Payload::Matrix(p) = rec.payload else { panic!("matrix payload expected") };
        let expect = lift_to_sqrt(&jordanian::y_matrix(half(2)).unwrap());
        assert_eq!(json::decode_matrix(&p.rows).unwrap(), expect);
        assert_eq!(rec.command[0], "rep");
    }

    #[test]
    fn rep_text_renders_polynomials() {
        let out = run(&["rep", "--j", "2", "--gen", "coshHalfInv"]).unwrap();
        assert!(out.stdout.contains("-(1/8)h^2"), "{}", out.stdout);
        let out = run(&["rep", "--j", "3", "--gen", "Y", "--basis", "e", "--format", "latex"]).unwrap();
        assert!(out.stdout.starts_with("\\begin{pmatrix}"));
    }

    #[test]
    fn cgc_worked_values() {
        let out = run(&["cgc", "--j1", "4", "--j2", "4", "--j", "6"]).unwrap();
        assert!(out.stdout.contains("j=3 m=2\n") && out.stdout.contains("  n1=2 n2=0: (1/2)√2\n"), "{}", out.stdout);
        assert!(out.stdout.contains("  n1=2 n2=0: -(18/5)√5 h^3\n"));
        let out = run(&["cgc", "--j1", "4", "--j2", "4", "--j", "6", "--m", "6", "--format", "json"]).unwrap();
        let rec = OutputRecord::from_json(&out.stdout).unwrap();
        let Payload::Table(t) = rec.payload else { panic!("table payload expected") };
        let e = t.entries.iter().find(|e| e.n1 == half(4) && e.n2 == half(0)).unwrap();
        assert!(e.value.is_empty());
    }

    #[test]
    fn cgc_trivial_coupling() {
        let out = run(&["cgc", "--j1", "0", "--j2", "2"]).unwrap();
        assert!(out.stdout.contains("[ 1  0  0 ]\n[ 0  1  0 ]\n[ 0  0  1 ]\n"), "{}", out.stdout);
    }

    #[test]
    fn cgc_bad_filter_warns() {
        let out = run(&["cgc", "--j1", "2", "--j2", "2", "--j", "3"]).unwrap();
        assert_eq!(out.warnings.len(), 1);
        assert!(out.stdout.contains("0 entries"));
    }

    #[test]
    fn verify_trivial_and_failure_codes() {
        let out = run(&["verify", "--suite", "relations", "--max-2j", "0"]).unwrap();
        assert!(out.success);
        assert!(Cli::try_parse_from(["jordan", "rep", "--j", "2", "--gen", "W"]).is_err());
        assert!(matches!(run(&["rep", "--j", "-2", "--gen", "X"]), Err(crate::Error::NegativeSpin(-2))));
        assert!(run(&["cgc", "--j1", "2", "--j2", "2", "--m", "-2"]).unwrap().warnings.is_empty());
    }

    #[test]
    fn verify_output_is_deterministic() {
        let a = run(&["verify", "--suite", "props", "--max-2j", "3", "--format", "json"]).unwrap();
        let b = run(&["verify", "--suite", "props", "--max-2j", "3", "--format", "json"]).unwrap();
        assert_eq!(a, b);
    }
}
