//! `jordan`: build, verify and close rainbows from the command line.
//!
//! Exit codes: 0 = property holds / build ok, 1 = property fails, 2 = bad input,
//! 3 = internal verification failure.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use jordan_schemes::closure::{closure, is_proper, ClosureKind, SeedPartition};
use jordan_schemes::construct::{
    build_cyclotomic_base, build_wfdf, CoverSpec, WfdfSpec, MAX_WFDF_DIM,
};
use jordan_schemes::io::{parse_auto, to_json};
use jordan_schemes::verify::{
    hoffman_coclique_bound, is_coherent_configuration, is_jordan_configuration, srg_check,
    SrgParams, Witness,
};
use jordan_schemes::{Error, Rainbow, StructureReport};

#[derive(Parser)]
#[command(name = "jordan", version, about = "Coherent configurations and Jordan schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a scheme and write it as rainbow JSON.
    #[command(subcommand)]
    Build(Build),
    /// Check the coherence or Jordan condition.
    Verify {
        #[arg(long, value_enum)]
        kind: VerifyKind,
        path: PathBuf,
    },
    /// Stabilize a rainbow under the WL or Jordan closure.
    Closure {
        #[arg(long, value_enum)]
        kind: ClosureArg,
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the full closure report instead of the bare result.
        #[arg(long)]
        report: bool,
    },
    /// Test whether a symmetric Jordan scheme is proper.
    Proper { path: PathBuf },
    /// Print symmetry, homogeneity, regularity and valencies.
    Params { path: PathBuf },
    /// Strongly regular parameters and Hoffman bound of one color.
    Srg {
        path: PathBuf,
        #[arg(long)]
        color: usize,
    },
    /// Merge every color with its transpose.
    Symmetrize {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Build {
    Wfdf(WfdfArgs),
    Cover {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Switch {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        fiber: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct WfdfArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value_t = DiamondArg::Cyclic)]
    diamond: DiamondArg,
    #[arg(long, value_enum, default_value_t = SigmaArg::Identity)]
    sigma: SigmaArg,
    #[arg(long, value_enum, default_value_t = ThetaArg::Plus)]
    theta: ThetaArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Cc,
    Jc,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosureArg {
    Wl,
    Jordan,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiamondArg {
    Cyclic,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SigmaArg {
    Identity,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ThetaArg {
    Plus,
    Random,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_internal() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn bad_input(message: String) -> Failure {
    Failure { code: 2, message }
}

type CliResult = Result<u8, Failure>;

fn load(path: &Path) -> Result<Rainbow, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| bad_input(format!("cannot read {}: {e}", path.display())))?;
    let loaded = parse_auto(&text)?;
    if loaded.renumbered {
        eprintln!("note: color ids renumbered canonically");
    }
    Ok(loaded.rainbow)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| bad_input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure {
                    code: 3,
                    message: format!("cannot write to stdout: {e}"),
                })
        }
    }
}

fn report_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn summary(x: &Rainbow) {
    eprintln!("order {}, rank {}", x.order(), x.rank());
}

fn build(cmd: Build) -> CliResult {
    let (rainbow, out) = match cmd {
        Build::Wfdf(a) => {
            if a.d == 0 || a.d > MAX_WFDF_DIM {
                return Err(bad_input(format!(
                    "--d must lie in 1..={}",
                    MAX_WFDF_DIM
                )));
            }
            let random = a.diamond == DiamondArg::Random
                || a.sigma == SigmaArg::Random
                || a.theta == ThetaArg::Random;
            let spec = if random {
                WfdfSpec::sampled(
                    a.d,
                    a.diamond == DiamondArg::Random,
                    a.sigma == SigmaArg::Random,
                    a.theta == ThetaArg::Random,
                    a.seed,
                )
            } else {
                WfdfSpec::canonical(a.d)
            };
            (build_wfdf(&spec)?.rainbow, a.out)
        }
        Build::Cover { q, m, out } => (build_cyclotomic_base(CoverSpec { q, m })?.rainbow, out),
        Build::Switch { q, m, fiber, out } => {
            let base = build_cyclotomic_base(CoverSpec { q, m })?;
            (base.switch(fiber)?.rainbow, out)
        }
    };
    summary(&rainbow);
    emit(&to_json(&rainbow), out.as_deref())?;
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    kind: &'static str,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessReport>,
}

#[derive(Serialize)]
struct WitnessReport {
    c: usize,
    d: usize,
    f: usize,
    first: (usize, usize),
    second: (usize, usize),
    first_count: i64,
    second_count: i64,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        WitnessReport {
            c: w.c,
            d: w.d,
            f: w.f,
            first: w.first,
            second: w.second,
            first_count: w.first_count,
            second_count: w.second_count,
        }
    }
}

fn verify(kind: VerifyKind, path: &Path) -> CliResult {
    let x = load(path)?;
    let (name, verdict) = match kind {
        VerifyKind::Cc => ("cc", is_coherent_configuration(&x)),
        VerifyKind::Jc => ("jc", is_jordan_configuration(&x)),
    };
    let report = VerifyReport {
        kind: name,
        holds: verdict.holds(),
        witness: verdict.witness().map(WitnessReport::from),
    };
    eprintln!("{name}: {}", if report.holds { "holds" } else { "fails" });
    emit(&report_json(&report), None)?;
    Ok(if report.holds { 0 } else { 1 })
}

fn run_closure(kind: ClosureArg, path: &Path, out: Option<&Path>, with_report: bool) -> CliResult {
    let x = load(path)?;
    let kind = match kind {
        ClosureArg::Wl => ClosureKind::Wl,
        ClosureArg::Jordan => ClosureKind::Jordan,
    };
    let report = closure(&SeedPartition::from_rainbow(&x), kind)?;
    eprintln!(
        "{} closure: rank {} -> {} in {} rounds",
        kind.name(),
        x.rank(),
        report.result.rank(),
        report.rounds
    );
    let text = if with_report {
        report.to_json()
    } else {
        to_json(&report.result)
    };
    emit(&text, out)?;
    Ok(0)
}

fn proper(path: &Path) -> CliResult {
    let x = load(path)?;
    let report = is_proper(&x)?;
    eprintln!(
        "{}: rank {} vs symmetrized WL rank {}",
        if report.proper { "proper" } else { "improper" },
        report.jordan_rank,
        report.symmetrized_wl_rank
    );
    emit(&report_json(&report), None)?;
    Ok(if report.proper { 0 } else { 1 })
}

#[derive(Serialize)]
struct ParamsReport {
    order: usize,
    rank: usize,
    #[serde(flatten)]
    structure: StructureReport,
}

fn params(path: &Path) -> CliResult {
    let x = load(path)?;
    summary(&x);
    let report = ParamsReport {
        order: x.order(),
        rank: x.rank(),
        structure: x.structure_report(),
    };
    emit(&report_json(&report), None)?;
    Ok(0)
}

#[derive(Serialize)]
struct SrgReport {
    color: usize,
    srg: Option<SrgParams>,
    /// Largest coclique size allowed by the Hoffman bound.
    hoffman_floor: Option<u64>,
    /// The bound itself as `num/den` when rational.
    hoffman_exact: Option<String>,
}

fn srg(path: &Path, color: usize) -> CliResult {
    let x = load(path)?;
    if color >= x.rank() {
        return Err(bad_input(format!("color {color} out of range for rank {}", x.rank())));
    }
    let params = srg_check(&x.relation(color))?;
    let bound = params.as_ref().map(hoffman_coclique_bound).transpose()?;
    let report = SrgReport {
        color,
        srg: params,
        hoffman_floor: bound.map(|b| b.floor()),
        hoffman_exact: bound.and_then(|b| b.exact()).map(|r| r.to_string()),
    };
    match &report.srg {
        Some(p) => eprintln!("color {color}: SRG({},{},{},{})", p.v, p.k, p.lambda, p.mu),
        None => eprintln!("color {color}: not strongly regular"),
    }
    emit(&report_json(&report), None)?;
    Ok(if report.srg.is_some() { 0 } else { 1 })
}

fn symmetrize(path: &Path, out: Option<&Path>) -> CliResult {
    let x = load(path)?.symmetrize();
    summary(&x);
    emit(&to_json(&x), out)?;
    Ok(0)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Build(b) => build(b),
        Command::Verify { kind, path } => verify(kind, &path),
        Command::Closure {
            kind,
            path,
            out,
            report,
        } => run_closure(kind, &path, out.as_deref(), report),
        Command::Proper { path } => proper(&path),
        Command::Params { path } => params(&path),
        Command::Srg { path, color } => srg(&path, color),
        Command::Symmetrize { path, out } => symmetrize(&path, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // --help and --version are not errors
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
