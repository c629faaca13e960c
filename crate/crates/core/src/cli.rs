//! The `hopf` command line interface.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 crossing cap exceeded.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::basis::eval_q_pair;
use crate::hopf::{
    check_symmetries, homfly_decorated, homfly_general_with, homfly_with_convention, Convention, Decoration, HopfSpec,
};
use crate::meridian::{eigen_record, t_minus, t_pair, t_plus, tbar_pair, EigenRecord};
use crate::oracle::{build_diagram, Oracle, OracleError, PlanarDiagram, DEFAULT_MAX_CROSSINGS};
use crate::partitions::{partitions_up_to, BasisLabel};
use crate::ring::{render_json, render_latex, render_plain, SkeinScalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

impl OutputFormat {
    pub fn render(self, x: &SkeinScalar) -> String {
        let x = x.canonical();
        match self {
            OutputFormat::Plain => render_plain(&x),
            OutputFormat::Json => render_json(&x),
            OutputFormat::Latex => render_latex(&x),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Paper,
    Swapped,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => Convention::Paper,
            ConventionArg::Swapped => Convention::Swapped,
        }
    }
}

/// `k1,k2,n1,n2`
#[derive(Clone, Copy, Debug)]
struct FamilyArg(HopfSpec);

impl FromStr for FamilyArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| format!("'{p}': {e}")))
            .collect::<Result<_, _>>()?;
        match parts[..] {
            [k1, k2, n1, n2] => Ok(FamilyArg(HopfSpec::new(k1, k2, n1, n2))),
            _ => Err(format!("expected four comma-separated integers k1,k2,n1,n2, got '{s}'")),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hopf",
    version,
    about = "Framed Homfly polynomials of generalized Hopf links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form value of H(k1,k2;n1,n2).
    Eval {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
        convention: ConventionArg,
    },
    /// Closed-form value of H(k1,k2;X) for a decoration X read from a JSON file.
    EvalDecoration {
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        decoration: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Evaluates a diagram by skein-tree recursion.
    Oracle {
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        pd: Option<PathBuf>,
        #[arg(long)]
        family: Option<FamilyArg>,
        #[arg(long, env = "HOPF_MAX_CROSSINGS", default_value_t = DEFAULT_MAX_CROSSINGS)]
        max_crossings: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Checks the closed form against the oracle, the link symmetries and the
    /// distinctness of eigenvalues.
    Verify {
        #[arg(long, default_value_t = 2)]
        max_encircling: usize,
        #[arg(long, default_value_t = 3)]
        max_core: usize,
        #[arg(long, env = "HOPF_MAX_CROSSINGS", default_value_t = DEFAULT_MAX_CROSSINGS)]
        max_crossings: usize,
        /// Flips the sign of the content sum in t_{λ,μ}, to check that the
        /// verification notices.
        #[arg(long, hide = true)]
        inject_t_pair_sign_error: bool,
    },
    /// Eigenvalues and plane evaluations for all labels with |λ|, |μ| ≤ N, as
    /// JSON lines.
    Table {
        #[arg(long)]
        max_size: usize,
    },
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
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
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(failure) if failure.message.is_empty() => failure.code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::CapExceeded { .. } => EXIT_CAP,
            OracleError::Malformed(_) => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a reader that stops early (`| head`) is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Self {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Self {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Eval {
            k1,
            k2,
            n1,
            n2,
            format,
            convention,
        } => {
            let value = homfly_with_convention(HopfSpec::new(k1, k2, n1, n2), convention.into());
            writeln!(out, "{}", format.render(&value))?;
            Ok(EXIT_OK)
        }
        Command::EvalDecoration {
            k1,
            k2,
            decoration,
            format,
        } => {
            let x: Decoration = read_json(&decoration)?;
            writeln!(out, "{}", format.render(&homfly_decorated(k1, k2, &x)))?;
            Ok(EXIT_OK)
        }
        Command::Oracle {
            pd,
            family,
            max_crossings,
            format,
        } => {
            let diagram = match (pd, family) {
                (Some(path), _) => read_json::<PlanarDiagram>(&path)?,
                (None, Some(FamilyArg(spec))) => build_diagram(spec),
                (None, None) => return Err(Failure::usage("one of --pd or --family is required")),
            };
            let value = Oracle::new(max_crossings).evaluate(&diagram)?;
            writeln!(out, "{}", format.render(&value))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            max_encircling,
            max_core,
            max_crossings,
            inject_t_pair_sign_error,
        } => {
            let eigen = if inject_t_pair_sign_error {
                faulty_eigen_record
            } else {
                eigen_record
            };
            verify(max_encircling, max_core, max_crossings, eigen, out)
        }
        Command::Table { max_size } => {
            for row in table_rows(max_size) {
                let line = serde_json::to_string(&row).map_err(|e| Failure::usage(e.to_string()))?;
                writeln!(out, "{line}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// `t_{λ,μ}` with its content-sum term negated: `2δ - t`.
fn faulty_eigen_record(label: &BasisLabel) -> EigenRecord {
    let mut rec = eigen_record(label);
    rec.t = &SkeinScalar::delta().scale_int(2) - &rec.t;
    rec
}

#[derive(Serialize)]
struct TableRow {
    label: BasisLabel,
    t: SkeinScalar,
    tbar: SkeinScalar,
    #[serde(rename = "evalQ")]
    eval_q: SkeinScalar,
}

fn table_rows(max_size: usize) -> Vec<TableRow> {
    let parts = partitions_up_to(max_size);
    let mut labels: Vec<BasisLabel> = parts
        .iter()
        .flat_map(|neg| parts.iter().map(move |pos| BasisLabel::new(neg.clone(), pos.clone())))
        .collect();
    labels.sort();
    labels
        .into_iter()
        .map(|label| {
            let rec = eigen_record(&label);
            TableRow {
                t: rec.t.canonical(),
                tbar: rec.tbar.canonical(),
                eval_q: eval_q_pair(&label).canonical(),
                label,
            }
        })
        .collect()
}

fn verify(
    max_encircling: usize,
    max_core: usize,
    max_crossings: usize,
    eigen: fn(&BasisLabel) -> EigenRecord,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut failures = 0usize;
    let mut skipped = 0usize;
    let oracle = Oracle::new(max_crossings);
    let grid = HopfSpec::grid(max_encircling, max_core);

    for &spec in &grid {
        let diagram = build_diagram(spec);
        match oracle.evaluate(&diagram) {
            Ok(expected) => {
                let ok = homfly_general_with(spec, eigen) == expected;
                failures += usize::from(!ok);
                writeln!(
                    out,
                    "{} oracle {spec} ({} crossings)",
                    verdict(ok),
                    diagram.crossing_count()
                )?;
            }
            Err(OracleError::CapExceeded { crossings, cap }) => {
                skipped += 1;
                writeln!(out, "SKIP oracle {spec}: {crossings} crossings exceed the cap of {cap}")?;
            }
            Err(e) => return Err(e.into()),
        }
    }

    for &spec in &grid {
        let report = check_symmetries(spec);
        for check in &report.checks {
            failures += usize::from(!check.passed);
            writeln!(out, "{} symmetry {}", verdict(check.passed), check.name)?;
        }
    }

    let singles = partitions_up_to(8);
    let ok = all_distinct(singles.iter().map(t_plus));
    failures += usize::from(!ok);
    writeln!(out, "{} distinct t_plus over |λ| ≤ 8", verdict(ok))?;
    let ok = all_distinct(singles.iter().map(t_minus));
    failures += usize::from(!ok);
    writeln!(out, "{} distinct t_minus over |λ| ≤ 8", verdict(ok))?;

    let small = partitions_up_to(4);
    let labels: Vec<BasisLabel> = small
        .iter()
        .flat_map(|neg| small.iter().map(move |pos| BasisLabel::new(neg.clone(), pos.clone())))
        .collect();
    let ok = all_distinct(labels.iter().map(t_pair));
    failures += usize::from(!ok);
    writeln!(out, "{} distinct t_pair over |λ|, |μ| ≤ 4", verdict(ok))?;
    let ok = all_distinct(labels.iter().map(tbar_pair));
    failures += usize::from(!ok);
    writeln!(out, "{} distinct tbar_pair over |λ|, |μ| ≤ 4", verdict(ok))?;

    writeln!(out, "{failures} failed, {skipped} skipped")?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Canonical forms are determined by value, so equal values collide on them.
fn all_distinct(values: impl Iterator<Item = SkeinScalar>) -> bool {
    let mut seen = HashMap::new();
    values
        .enumerate()
        .all(|(i, x)| seen.insert(render_json(&x.canonical()), i).is_none())
}
