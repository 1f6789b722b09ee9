//! Command-line front end.
//!
//! Exit codes: 0 on success (for `analyze`, a full-rank solution exists),
//! 2 when a solution exists but not a full-rank one or a candidate fails
//! `verify`, and 1 for invalid input or an unsupported spectrum.

pub mod document;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::comp_op::{build, truncation_degree};
use crate::engine::{
    analyze_with, sample_self_map, solve_power_with, validate_map_with, verify, AnalysisReport, Mode,
    SchroederSolution, VerifyReport,
};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::polymap::{conjugate_map, PolyMap};

use document::{read_map, read_matrix, AnalysisDoc, OperatorDoc, ReportDocument, SolutionDoc, VerifyDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_FULL_RANK: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "schroeder", version, about = "Exact power-series solutions of Schroeder's equation F∘φ = φ'(0)F")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    FullRank,
    Independent,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::FullRank => Mode::FullRank,
            ModeArg::Independent => Mode::Independent,
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    /// Format written to stdout.
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Also write the machine-readable report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Spot-check |φ(z)| < |z| at this many random points of the unit ball
    /// and warn on violations.
    #[arg(long, value_name = "COUNT")]
    pub sample_check: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a full-rank solution exists.
    Analyze {
        /// Map file: a JSON map document or text like "z1/2, z2/4 + z1^2/16".
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Construct a truncated solution of F∘φ = φ'(0)F.
    Solve {
        input: PathBuf,
        /// Output degree [default: 10, or K if larger].
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value = "full-rank")]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Construct a truncated solution of F∘φ = φ'(0)^k F.
    SolvePower {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        degree: Option<u32>,
        /// Only used for k = 1.
        #[arg(long, value_enum, default_value = "full-rank")]
        mode: ModeArg,
        #[command(flatten)]
        output: Output,
    },
    /// Check F∘φ = B·F through a degree, with B = φ'(0)^k or a given matrix.
    Verify {
        map: PathBuf,
        candidate: PathBuf,
        #[arg(long, conflicts_with = "matrix")]
        k: Option<u32>,
        /// JSON matrix of {"re","im"} rational-string pairs.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        degree: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Print the truncated composition operator.
    Matrix {
        input: PathBuf,
        /// Truncation degree [default: K from the spectrum].
        #[arg(long)]
        degree: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
}

impl Command {
    fn output(&self) -> &Output {
        match self {
            Command::Analyze { output, .. }
            | Command::Solve { output, .. }
            | Command::SolvePower { output, .. }
            | Command::Verify { output, .. }
            | Command::Matrix { output, .. } => output,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Solve { .. } => "solve",
            Command::SolvePower { .. } => "solve-power",
            Command::Verify { .. } => "verify",
            Command::Matrix { .. } => "matrix",
        }
    }
}

/// A finished command: the report, its text rendering and the exit code.
struct Outcome {
    report: ReportDocument,
    text: String,
    code: i32,
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<(PolyMap, Option<ExactMatrix>)> {
    read_map(&read_file(path)?).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analysis_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let blocks: Vec<String> = r.blocks.iter().map(|(l, n)| format!("{l} (size {n})")).collect();
    writeln!(s, "Jordan blocks of φ'(0): {}", blocks.join(", ")).unwrap();
    let res: Vec<String> = r.resonance.iter().map(ToString::to_string).collect();
    writeln!(s, "resonant eigenvalues: {}", if res.is_empty() { "none".into() } else { res.join(", ") }).unwrap();
    writeln!(s, "K = {}, N = {}", r.degree, r.size).unwrap();
    writeln!(s, "  {:<12} {:<9} {:>6} {:>6} {:>6}  full rank", "μ", "resonant", "d_orig", "d_ker", "d_proj").unwrap();
    for e in &r.records {
        writeln!(
            s,
            "  {:<12} {:<9} {:>6} {:>6} {:>6}  {}",
            e.eigenvalue.to_string(),
            yes_no(e.resonant),
            e.d_orig,
            e.d_ker,
            e.d_proj,
            yes_no(e.full_rank_possible)
        )
        .unwrap();
    }
    if r.verdict && !r.obstructed_blocks.is_empty() {
        let which: Vec<String> = r.obstructed_blocks.iter().map(|j| (j + 1).to_string()).collect();
        writeln!(s, "kernel dimensions agree, but block(s) {} admit no chain with the required gradients", which.join(", "))
            .unwrap();
    }
    writeln!(
        s,
        "verdict: {}",
        if r.full_rank_exists() { "a full-rank solution exists" } else { "no full-rank solution" }
    )
    .unwrap();
    s
}

fn matrix_text(m: &ExactMatrix, indent: &str) -> String {
    let mut s = String::new();
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(s, "{indent}[{}]", cells.join(", ")).unwrap();
    }
    s
}

fn solution_text(sol: &SchroederSolution) -> String {
    let mut s = String::new();
    writeln!(s, "mode: {}, k = {}, degree {}", sol.mode, sol.power, sol.degree).unwrap();
    for (j, c) in sol.map.components().iter().enumerate() {
        writeln!(s, "F{} = {c}", j + 1).unwrap();
    }
    writeln!(s, "F'(0) =").unwrap();
    s.push_str(&matrix_text(&sol.derivative, "  "));
    writeln!(s, "residual vanishes through degree {}", sol.residual_degree).unwrap();
    writeln!(s, "component rank {}", sol.component_rank).unwrap();
    s
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    match &r.failure {
        None => writeln!(s, "residual vanishes through degree {}", r.checked_degree).unwrap(),
        Some(f) => writeln!(
            s,
            "residual vanishes through degree {}; component {} has coefficient {} at {}",
            r.residual_degree, f.component, f.value, f.monomial
        )
        .unwrap(),
    }
    writeln!(s, "rank F'(0) = {}, component rank = {} of {}", r.derivative_rank, r.component_rank, r.dim).unwrap();
    if r.degenerate() {
        writeln!(s, "candidate is degenerate: its components are linearly dependent").unwrap();
    }
    writeln!(s, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
    s
}

fn solved(name: &str, result: Result<SchroederSolution>) -> Result<Outcome> {
    let mut report = ReportDocument::new(name);
    match result {
        Ok(sol) => {
            report.analysis = Some(AnalysisDoc::from_report(&sol.analysis));
            report.solution = Some(SolutionDoc::from_solution(&sol));
            Ok(Outcome { report, text: solution_text(&sol), code: EXIT_OK })
        }
        Err(Error::NoFullRank(analysis)) => {
            report.analysis = Some(AnalysisDoc::from_report(&analysis));
            let text = format!("{}no full-rank solution; try --mode independent\n", analysis_text(&analysis));
            Ok(Outcome { report, text, code: EXIT_NOT_FULL_RANK })
        }
        Err(e) => Err(e),
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    let name = cmd.name();
    match cmd {
        Command::Analyze { input, .. } => {
            let (phi, conj) = load_map(input)?;
            let analysis = analyze_with(&phi, conj.as_ref())?;
            let mut report = ReportDocument::new(name);
            report.analysis = Some(AnalysisDoc::from_report(&analysis));
            let code = if analysis.full_rank_exists() { EXIT_OK } else { EXIT_NOT_FULL_RANK };
            Ok(Outcome { report, text: analysis_text(&analysis), code })
        }
        Command::Solve { input, degree, mode, .. } => {
            let (phi, conj) = load_map(input)?;
            solved(name, solve_power_with(&phi, 1, *degree, (*mode).into(), conj.as_ref()))
        }
        Command::SolvePower { input, k, degree, mode, .. } => {
            let (phi, conj) = load_map(input)?;
            solved(name, solve_power_with(&phi, *k, *degree, (*mode).into(), conj.as_ref()))
        }
        Command::Verify { map, candidate, k, matrix, degree, .. } => {
            let (phi, _) = load_map(map)?;
            let (f, _) = load_map(candidate)?;
            let b = match matrix {
                Some(path) => read_matrix(&read_file(path)?)?,
                None => phi.linear_part().pow(k.unwrap_or(1))?,
            };
            let r = verify(&phi.pad_to(*degree), &f.pad_to(*degree), &b, *degree)?;
            let mut report = ReportDocument::new(name);
            report.verify = Some(VerifyDoc::from_report(&r, &b));
            let code = if r.passed() { EXIT_OK } else { EXIT_NOT_FULL_RANK };
            Ok(Outcome { report, text: verify_text(&r), code })
        }
        Command::Matrix { input, degree, .. } => {
            let (phi, conj) = load_map(input)?;
            let sd = validate_map_with(&phi, conj.as_ref())?;
            let k = match degree {
                Some(k) => *k,
                None => truncation_degree(&sd.eigenvalues)?,
            };
            let target = match &conj {
                Some(d) => conjugate_map(&phi, d)?,
                None => phi,
            };
            let op = build(&target.pad_to(k), k)?;
            let mut text = String::new();
            let labels: Vec<String> = op.basis.iter().map(ToString::to_string).collect();
            writeln!(text, "K = {}, N = {}", op.degree, op.size()).unwrap();
            writeln!(text, "basis: {}", labels.join(", ")).unwrap();
            text.push_str(&matrix_text(&op.u, "  "));
            let mut report = ReportDocument::new(name);
            report.operator = Some(OperatorDoc::from_operator(&op));
            Ok(Outcome { report, text, code: EXIT_OK })
        }
    }
}

fn sample_warning(cmd: &Command) -> Option<String> {
    let count = cmd.output().sample_check?;
    let path = match cmd {
        Command::Analyze { input, .. }
        | Command::Solve { input, .. }
        | Command::SolvePower { input, .. }
        | Command::Matrix { input, .. } => input,
        Command::Verify { map, .. } => map,
    };
    let (phi, _) = load_map(path).ok()?;
    let s = sample_self_map(&phi, count, cmd.output().seed);
    (s.violations > 0).then(|| {
        format!(
            "sampling: |φ(z)| ≥ |z| at {} of {} points (worst ratio {:.4}); φ may not contract the unit ball",
            s.violations, s.samples, s.worst_ratio
        )
    })
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let cmd = &cli.command;
    let mut outcome = match execute(cmd) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INVALID;
        }
    };
    if let Some(w) = sample_warning(cmd) {
        let _ = writeln!(stderr, "warning: {w}");
        outcome.report.warnings.push(w);
    }
    let json = outcome.report.to_json();
    let out = cmd.output();
    if let Some(path) = &out.out {
        if let Err(e) = std::fs::write(path, &json) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return EXIT_INVALID;
        }
    }
    let _ = match out.format {
        Format::Text => write!(stdout, "{}", outcome.text),
        Format::Machine => write!(stdout, "{json}"),
    };
    outcome.code
}
