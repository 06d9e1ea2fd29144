//! Command line front end: normal forms, verification suites, the solvers
//! and the proportionality constants.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use ambient_dirac::algebra::suites::{verify_identity_suite, IdentitySuite};
use ambient_dirac::clifford::{cross_module_oracle, Signature, DEFAULT_SIGNATURES};
use ambient_dirac::clifford::{
    kernel_lemma_report, mixed_signatures, verify_flat_relations, verify_flat_suite,
};
use ambient_dirac::expr::{format_element, normal_form};
use ambient_dirac::solvers::suites::{constants_report, even_solver_report, odd_solver_report};
use ambient_dirac::solvers::{defect_is_cleared, even_extend, even_weight, odd_extend, odd_weight};
use ambient_dirac::weighted::yiso_report;
use ambient_dirac::{Parity, Report, Status, SymScalar};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit code for a run with no failing case.
pub const EXIT_OK: i32 = 0;
/// Exit code when at least one case failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage and syntax errors.
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "ambient-dirac",
    version,
    about = "Exact algebra for invariant powers of the ambient Dirac operator"
)]
struct Cli {
    /// Write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of an expression in x, y, h, Q, D.
    Nf { expr: String },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Run the even or odd extension solver.
    Solve(SolveArgs),
    /// Tabulate the constants c with R = c L.
    Constants {
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long, default_value_t = 5)]
        pmax: u32,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long)]
    pmax: Option<u32>,
    /// Signature as R,S.
    #[arg(long, value_parser = parse_signature)]
    sig: Option<Signature>,
    /// Maximum polynomial degree of random spinors.
    #[arg(long, default_value_t = 3)]
    deg: u32,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Append a failing case.
    #[arg(long, hide = true)]
    inject_fail: bool,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    parity: ParityArg,
    #[arg(long, default_value_t = 1)]
    p: u32,
    #[arg(long)]
    max_order: Option<usize>,
    /// Solve at a symbolic weight w instead of the special weight for p.
    #[arg(long)]
    generic_w: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Relations,
    Prop2,
    Prop3,
    Prop4,
    Flat,
    Kernel,
    Yiso,
    Jacobi,
    Confluence,
    Oracle,
    Even,
    Odd,
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    let (r, t) = s.split_once(',').ok_or("expected R,S")?;
    let r: usize = r.trim().parse().map_err(|e| format!("bad R: {e}"))?;
    let t: usize = t.trim().parse().map_err(|e| format!("bad S: {e}"))?;
    Signature::new(r, t).map_err(|e| e.to_string())
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
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
    let report = match cli.command {
        Command::Nf { expr } => match normal_form(&expr) {
            Ok(a) => {
                let text = format_element(&a);
                let _ = writeln!(out, "{text}");
                let mut r = Report::new("nf", None);
                r.check(expr, true, "", text);
                r
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        },
        Command::Verify(args) => {
            let r = verify(&args);
            let _ = write!(out, "{}", r.to_table());
            r
        }
        Command::Solve(args) => solve(&args, out),
        Command::Constants { parity, pmax } => {
            let r = constants_report(parity.into(), pmax);
            for c in &r.cases {
                let _ = writeln!(out, "{}  c={}  {}", c.id, c.computed, c.status.as_str());
            }
            r
        }
    };
    if let Some(path) = &cli.json {
        if let Err(e) = write_json(path, &report) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn write_json(path: &Path, report: &Report) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    std::fs::write(path, text)
}

fn signatures(sig: Option<Signature>) -> Vec<Signature> {
    sig.map_or_else(|| DEFAULT_SIGNATURES.to_vec(), |s| vec![s])
}

fn verify(args: &VerifyArgs) -> Report {
    let seed = args.seed;
    let identity = |suite: IdentitySuite, default_pmax: u32| {
        verify_identity_suite(suite, args.pmax.unwrap_or(default_pmax), seed)
    };
    let mut report = match args.suite {
        SuiteArg::Relations => {
            let mut r = identity(IdentitySuite::Relations, 0);
            for sig in signatures(args.sig) {
                r.absorb(verify_flat_relations(
                    sig,
                    args.deg,
                    args.trials.unwrap_or(20),
                    seed,
                ));
            }
            r
        }
        SuiteArg::Prop2 => identity(IdentitySuite::Prop2, 8),
        SuiteArg::Prop3 => identity(IdentitySuite::Prop3, 6),
        SuiteArg::Prop4 => identity(IdentitySuite::Prop4, 5),
        SuiteArg::Jacobi => identity(IdentitySuite::Jacobi, 0),
        SuiteArg::Confluence => identity(IdentitySuite::Confluence, 0),
        SuiteArg::Flat => {
            let mut r = Report::new("flat", Some(seed));
            for sig in signatures(args.sig) {
                r.absorb(verify_flat_suite(sig, args.deg, args.trials.unwrap_or(20), seed));
            }
            r
        }
        SuiteArg::Oracle => {
            let mut r = Report::new("oracle", Some(seed));
            for sig in signatures(args.sig) {
                r.absorb(cross_module_oracle(sig, args.trials.unwrap_or(100), 4, seed));
            }
            r
        }
        SuiteArg::Kernel => {
            let sigs = args.sig.map_or_else(|| mixed_signatures(8), |s| vec![s]);
            kernel_lemma_report(&sigs, args.trials.unwrap_or(5), seed)
        }
        SuiteArg::Yiso => yiso_report(args.pmax.unwrap_or(4) as usize, 4, seed),
        SuiteArg::Even => even_solver_report(args.pmax.unwrap_or(5), 8, args.trials.unwrap_or(10), seed),
        SuiteArg::Odd => odd_solver_report(args.pmax.unwrap_or(5), 8, args.trials.unwrap_or(10), seed),
    };
    if args.inject_fail {
        report.record(
            "injected failure",
            Status::Fail,
            "pass",
            "fail",
            "requested on the command line",
        );
    }
    report
}

fn solve(args: &SolveArgs, out: &mut dyn Write) -> Report {
    let parity: Parity = args.parity.into();
    let p = args.p;
    let (weight, default_order) = match (args.generic_w, parity) {
        (true, _) => (SymScalar::w(), 8),
        (false, Parity::Even) => (even_weight(p), 2 * p as usize),
        (false, Parity::Odd) => (odd_weight(p), 2 * p as usize + 1),
    };
    let max_order = args.max_order.unwrap_or(default_order);
    let result = match parity {
        Parity::Even => even_extend(&weight, max_order),
        Parity::Odd => odd_extend(&weight, max_order),
    };
    let obstruction = result
        .obstruction
        .as_ref()
        .map_or("none".to_string(), |o| format!("slot {}: {}", o.slot, o.top));
    let denominators = if result.denominators.is_empty() {
        "none".to_string()
    } else {
        result
            .denominators
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "weight: {weight}");
    let _ = writeln!(out, "representative: {}", result.representative);
    let _ = writeln!(out, "solved to order: {}", result.solvable_to);
    let _ = writeln!(out, "obstruction: {obstruction}");
    let _ = writeln!(out, "denominators: {denominators}");

    let mut r = Report::new("solve", None);
    r.check(
        "defect cleared below the obstruction",
        defect_is_cleared(&result),
        "true",
        defect_is_cleared(&result).to_string(),
    );
    r.record(
        "representative",
        Status::Pass,
        "",
        result.representative.to_string(),
        "",
    );
    r.record("obstruction", Status::Pass, "", obstruction, "");
    r.record("denominators", Status::Pass, "", denominators, "");
    r
}
