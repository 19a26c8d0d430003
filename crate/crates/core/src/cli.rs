//! The `gentle` command line. Exit codes: 0 success, 1 the input parses but
//! fails a mathematical precondition or a verification, 2 I/O, syntax or
//! usage errors. Diagnostics go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::verify_theta;
use crate::combinatorics::koszul_dual;
use crate::dot::{ar_dot, quiver_dot};
use crate::dsl::{parse, to_dsl};
use crate::error::Error;
use crate::fibres::fibre_report;
use crate::lattices::{ar_quiver, LatticeLabel, OrbitKind};
use crate::presentation::{
    classify_strict, validate, GentlePresentation, Quiver, RelationSet, StrictPresentation,
};
use crate::report::{analyze, singularity_report, Report, SignChoice};
use crate::singularity::compare;

#[derive(Debug, Parser)]
#[command(
    name = "gentle",
    version,
    about = "Invariants of gentle quivers with relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON (keys sorted).
    #[arg(long, global = true)]
    json: bool,
    /// Emit a Graphviz digraph (check, analyze, koszul: the quiver; ar-quiver: the AR quiver).
    #[arg(long, global = true)]
    dot: bool,
    /// Truncation order N for computations modulo c^N [default: 4].
    #[arg(long, global = true, value_name = "N")]
    trunc: Option<usize>,
    /// Use the other canonical sign assignment (analyze, omega-verify).
    #[arg(long, global = true)]
    flip_signs: bool,
    /// Write the output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate the gentle axioms and admissible-completeness.
    Check { file: PathBuf },
    /// Full report; includes theta verification when --trunc is given.
    Analyze { file: PathBuf },
    /// The Auslander–Reiten quiver of lattices.
    ArQuiver { file: PathBuf },
    /// Differential-cycle arrows, shift orbits and the singularity invariant.
    Sing { file: PathBuf },
    /// The Koszul dual presentation, in the input format.
    Koszul { file: PathBuf },
    /// Rank, generic fibre blocks and special fibre relations.
    Fibre { file: PathBuf },
    /// Verify the dualising-bimodule isomorphism modulo c^N.
    OmegaVerify { file: PathBuf },
    /// Compare the singularity invariants of two presentations.
    Compare { left: PathBuf, right: PathBuf },
}

impl Cli {
    fn sign_choice(&self) -> SignChoice {
        if self.flip_signs {
            SignChoice::Flipped
        } else {
            SignChoice::Declaration
        }
    }
}

const DEFAULT_TRUNC: usize = 4;

#[derive(Debug)]
enum Failure {
    /// Exit 1.
    Invalid(String),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Parse(_) | Error::Json(_) => Failure::Usage(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

struct Outcome {
    output: String,
    code: i32,
    notes: Vec<String>,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            code: 0,
            notes: Vec::new(),
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let outcome = match execute(&cli) {
        Ok(outcome) => outcome,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Invalid(msg) => (1, msg),
                Failure::Usage(msg) => (2, msg),
            };
            let _ = writeln!(stderr, "error: {msg}");
            return code;
        }
    };
    for note in &outcome.notes {
        let _ = writeln!(stderr, "{note}");
    }
    let written = match &cli.out {
        Some(path) => {
            std::fs::write(path, &outcome.output).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => stdout
            .write_all(outcome.output.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return 2;
    }
    outcome.code
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Check { file } => check(cli, file),
        Command::Analyze { file } => {
            let gp = load(file)?;
            if cli.dot {
                return Ok(Outcome::ok(quiver_dot(&gp)));
            }
            let report = analyze(&gp, cli.trunc, cli.sign_choice())?;
            let output = if cli.json {
                to_json(&report)?
            } else {
                render_report(&report)
            };
            let failed = report.omega_verify.as_ref().is_some_and(|v| !v.passed);
            Ok(Outcome {
                output,
                code: i32::from(failed),
                notes: Vec::new(),
            })
        }
        Command::ArQuiver { file } => {
            let sp = strict(load(file)?)?;
            let ar = ar_quiver(&sp);
            let name = |l: LatticeLabel| l.name(&sp);
            let output = if cli.dot {
                ar_dot(&sp, &ar)
            } else if cli.json {
                to_json(&json!({
                    "nodes": ar.nodes.iter().map(|&n| name(n)).collect::<Vec<_>>(),
                    "irreducible": ar.irreducible.iter().map(|&(a, b)| [name(a), name(b)]).collect::<Vec<_>>(),
                    "tau": ar.tau.iter().map(|&(a, b)| [name(a), name(b)]).collect::<Vec<_>>(),
                    "orbits": ar.orbits.iter().map(|o| json!({
                        "kind": o.kind,
                        "nodes": o.nodes.iter().map(|&n| name(n)).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                }))?
            } else {
                let mut s = String::new();
                let projectives = ar.nodes.iter().filter(|n| n.is_projective()).count();
                writeln!(
                    s,
                    "nodes: {} ({} projective, {} arrow ideals)",
                    ar.nodes.len(),
                    projectives,
                    ar.nodes.len() - projectives
                )
                .unwrap();
                writeln!(s, "irreducible maps: {}", ar.irreducible.len()).unwrap();
                writeln!(
                    s,
                    "tau-orbits: {} finite, {} periodic",
                    ar.finite_orbits(),
                    ar.periodic_orbits()
                )
                .unwrap();
                for o in &ar.orbits {
                    let nodes: Vec<String> = o.nodes.iter().map(|&n| name(n)).collect();
                    let kind = match o.kind {
                        OrbitKind::Finite => "finite",
                        OrbitKind::Periodic => "periodic",
                    };
                    writeln!(s, "  {kind}: {}", nodes.join(" -> ")).unwrap();
                }
                s
            };
            Ok(Outcome::ok(output))
        }
        Command::Sing { file } => {
            let gp = load(file)?;
            let report = singularity_report(&gp);
            let output = if cli.json {
                to_json(&report)?
            } else {
                let mut s = String::new();
                writeln!(s, "dc arrows: {}", report.dc_arrows.join(", ")).unwrap();
                for orbit in &report.orbits {
                    writeln!(s, "  orbit: {}", orbit.join(" -> ")).unwrap();
                }
                writeln!(s, "invariant: {:?}", report.invariant).unwrap();
                s
            };
            Ok(Outcome::ok(output))
        }
        Command::Koszul { file } => {
            let dual = koszul_dual(&load(file)?)?;
            let dsl = to_dsl(dual.quiver(), dual.relations());
            let output = if cli.dot {
                quiver_dot(&dual)
            } else if cli.json {
                to_json(&json!({ "dsl": dsl }))?
            } else {
                dsl
            };
            Ok(Outcome::ok(output))
        }
        Command::Fibre { file } => {
            let report = fibre_report(&load(file)?)?;
            let output = if cli.json {
                to_json(&report)?
            } else {
                report.to_string()
            };
            Ok(Outcome::ok(output))
        }
        Command::OmegaVerify { file } => {
            let sp = strict(load(file)?)?;
            let order = cli.trunc.unwrap_or(DEFAULT_TRUNC);
            let signs = cli.sign_choice().signs(&sp);
            let report = verify_theta(sp, signs, order)?;
            let output = if cli.json {
                to_json(&report)?
            } else {
                let mut s = String::new();
                writeln!(
                    s,
                    "{:<12} {:>8} {:>8}  status",
                    "generator", "checks", "failures"
                )
                .unwrap();
                for g in &report.generators {
                    let status = if g.failures == 0 { "pass" } else { "FAIL" };
                    writeln!(
                        s,
                        "{:<12} {:>8} {:>8}  {status}",
                        g.generator, g.checks, g.failures
                    )
                    .unwrap();
                }
                writeln!(s, "{:<12} {:>8}", "inverse", report.inverse_checks).unwrap();
                writeln!(
                    s,
                    "theta: {} ({} checks modulo c^{order}, {} failures)",
                    if report.passed() { "pass" } else { "FAIL" },
                    report.total_checks(),
                    report.failures.len()
                )
                .unwrap();
                s
            };
            let notes = report
                .failures
                .iter()
                .map(|f| {
                    format!(
                        "failure: generator {} basis {} identity {} witness {}",
                        f.generator, f.basis, f.identity, f.witness
                    )
                })
                .collect();
            Ok(Outcome {
                output,
                code: i32::from(!report.passed()),
                notes,
            })
        }
        Command::Compare { left, right } => {
            let comparison = compare(&load(left)?, &load(right)?);
            let output = if cli.json {
                to_json(&comparison)?
            } else {
                format!("{}\n", comparison.verdict)
            };
            Ok(Outcome::ok(output))
        }
    }
}

fn check(cli: &Cli, file: &Path) -> Result<Outcome, Failure> {
    let (q, r) = parse_file(file)?;
    let gp = match validate(q, r) {
        Ok(gp) => gp,
        Err(violations) => {
            let output = if cli.json {
                to_json(&json!({ "gentle": false, "strict": false, "violations": violations }))?
            } else {
                "gentle: no; strict: no\n".to_string()
            };
            return Ok(Outcome {
                output,
                code: 1,
                notes: violations
                    .iter()
                    .map(|v| format!("{}: {v}", file.display()))
                    .collect(),
            });
        }
    };
    if cli.dot {
        return Ok(Outcome::ok(quiver_dot(&gp)));
    }
    let strictness = classify_strict(&gp);
    let offending_arrows = gp.names(&strictness.offending_arrows);
    let offending_vertices: Vec<String> = strictness
        .offending_vertices
        .iter()
        .map(|&v| gp.vertex_name(v).to_string())
        .collect();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let output = if cli.json {
        to_json(&json!({
            "gentle": true,
            "strict": strictness.admissible_complete,
            "offending_arrows": offending_arrows,
            "offending_vertices": offending_vertices,
        }))?
    } else {
        let mut s = format!(
            "gentle: yes; strict: {}\n",
            yes_no(strictness.admissible_complete)
        );
        if !offending_vertices.is_empty() {
            writeln!(s, "boundary vertices: {}", offending_vertices.join(", ")).unwrap();
        }
        if !offending_arrows.is_empty() {
            writeln!(
                s,
                "arrows on no admissible cycle: {}",
                offending_arrows.join(", ")
            )
            .unwrap();
        }
        s
    };
    Ok(Outcome::ok(output))
}

fn render_report(r: &Report) -> String {
    let mut s = String::new();
    let p = &r.presentation;
    let list = |xs: &[Vec<String>]| -> String {
        xs.iter()
            .map(|c| format!("({})", c.join(" ")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(
        s,
        "{}: {} vertices, {} arrows, {} relations",
        p.name, p.vertices, p.arrows, p.relations
    )
    .unwrap();
    writeln!(
        s,
        "gentle: yes; strict: {}",
        if r.strict { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(s, "admissible cycles: {}", list(&r.admissible_cycles)).unwrap();
    writeln!(s, "differential cycles: {}", list(&r.differential_cycles)).unwrap();
    writeln!(s, "differential walks: {}", list(&r.differential_walks)).unwrap();
    writeln!(s, "injective dimension w: {}", r.injective_dimension).unwrap();
    let fp = &r.finite_projective;
    if fp.finite_projective {
        writeln!(s, "finite projective: yes").unwrap();
    } else {
        writeln!(
            s,
            "finite projective: no (witnesses: {})",
            fp.witnesses.join(", ")
        )
        .unwrap();
    }
    let components: Vec<String> = r
        .glued_components
        .iter()
        .map(|c| format!("{}{}", c.kind, c.arrows.len()))
        .collect();
    writeln!(s, "glued components: {}", components.join(" ")).unwrap();
    writeln!(
        s,
        "Koszul dual {}: {} arrows, {} relations",
        r.koszul_dual.name, r.koszul_dual.arrows, r.koszul_dual.relations
    )
    .unwrap();
    if let Some(a) = &r.algebra {
        writeln!(
            s,
            "basis rank: {}; positive arrows: {}",
            a.rank,
            a.positive_arrows.join(", ")
        )
        .unwrap();
    }
    if let Some(ar) = &r.ar_quiver {
        writeln!(
            s,
            "AR quiver: {} nodes, {} irreducible maps, {} finite and {} periodic tau-orbits",
            ar.nodes, ar.irreducible, ar.finite_orbits, ar.periodic_orbits
        )
        .unwrap();
    }
    writeln!(s, "singularity invariant: {:?}", r.singularity.invariant).unwrap();
    if let Some(f) = &r.fibres {
        writeln!(s, "rank: {}; generic fibre blocks: {:?}", f.rank, f.generic).unwrap();
    }
    if let Some(v) = &r.omega_verify {
        writeln!(
            s,
            "theta modulo c^{}: {} ({} checks, {} failures)",
            v.order,
            if v.passed { "pass" } else { "FAIL" },
            v.checks,
            v.failures
        )
        .unwrap();
    }
    s
}

fn parse_file(path: &Path) -> Result<(Quiver, RelationSet), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GentlePresentation, Failure> {
    let (q, r) = parse_file(path)?;
    validate(q, r).map_err(|violations| {
        let lines: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        Failure::Invalid(format!(
            "{}: not gentle: {}",
            path.display(),
            lines.join("; ")
        ))
    })
}

fn strict(gp: GentlePresentation) -> Result<StrictPresentation, Failure> {
    Ok(StrictPresentation::new(gp)?)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let value: Value = serde_json::to_value(value).map_err(Error::from)?;
    Ok(serde_json::to_string_pretty(&value).map_err(Error::from)? + "\n")
}
