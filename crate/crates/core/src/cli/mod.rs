//! The `pathramsey` command line.
//!
//! Exit codes: `0` success (good coloring, witness found, formula covered,
//! proof steps as expected), `1` negative outcome (bad coloring, search
//! exhausted, bound not covered, unexpected proof verdict), `2` invalid input,
//! `3` a capacity or resource limit was hit.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};

use crate::constructions::blowup_witness;
use crate::error::Error;
use crate::formulas::{
    bipartite_path_turan_oracle, cited_bipartite_bound, conjectured_r3_cycle, conjectured_r3_path,
    turan_path_max_edges, turan_path_oracle, two_color_path_ramsey, woodall_bound, CitedBound,
};
use crate::graph::{parse_targets, verify_coloring, ColorReport, Target};
use crate::proof;
use crate::search::{find_good_coloring, SearchConfig, SearchStatus};
use crate::Int;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Environment variable supplying the default `search --node-limit`.
pub const NODE_LIMIT_VAR: &str = "RAMSEY_NODE_LIMIT";

#[derive(Parser, Debug)]
#[command(
    name = "pathramsey",
    version,
    about = "Three-color Ramsey numbers of paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the blow-up witness coloring for P_n.
    Witness {
        #[arg(long)]
        n: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring file against one target per color.
    Verify {
        file: PathBuf,
        #[arg(long)]
        targets: String,
    },
    /// Search for a coloring of K_n avoiding the targets.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        targets: String,
        #[arg(long, default_value_t = 3)]
        colors: usize,
        #[arg(long)]
        node_limit: Option<u64>,
        /// Seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a bound: turan-path, woodall, bipartite, ramsey2-path,
    /// conj-r3-path or conj-r3-cycle.
    Formula {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<Int>,
        /// Also run the brute-force oracle where one exists.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the mechanized proof steps.
    ProofCheck {
        #[arg(long)]
        step: Option<String>,
    },
}

/// Runs the command line on `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Witness { n, out: path } => witness(n, path, out),
        Command::Verify { file, targets } => verify(&file, &targets, out),
        Command::Search {
            n,
            targets,
            colors,
            node_limit,
            time_limit,
            workers,
            out: path,
        } => search(
            SearchArgs {
                n,
                targets,
                colors,
                node_limit,
                time_limit,
                workers,
                path,
            },
            out,
            err,
        ),
        Command::Formula {
            name,
            params,
            oracle,
        } => formula(&name, &params, oracle, out),
        Command::ProofCheck { step } => proof_check(step.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Capacity { .. } | Error::LimitReached { .. } => EXIT_LIMIT,
                _ => EXIT_INVALID,
            }
        }
    }
}

type CmdResult = Result<i32, Error>;

fn io_err(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::precondition(format!("{}: {e}", path.display()))
}

fn write_out(path: Option<&std::path::Path>, text: &str, out: &mut dyn Write) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_err(p, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::precondition(format!("stdout: {e}"))),
    }
}

fn emit(out: &mut dyn Write, line: impl AsRef<str>) -> Result<(), Error> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| Error::precondition(format!("stdout: {e}")))
}

fn witness(n: usize, path: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let col = blowup_witness(n)?;
    let report = verify_coloring(&col, &[Target::path(n)?; 3])?;
    if !report.is_good() {
        // the construction is broken; refuse to write it
        print_report(&report, out)?;
        return Ok(EXIT_NEGATIVE);
    }
    let text = format::serialize(&col)?;
    write_out(path.as_deref(), &text, out)?;
    if path.is_some() {
        emit(out, format!("order={} verdict=good", col.n()))?;
    }
    Ok(EXIT_OK)
}

fn print_report(report: &ColorReport, out: &mut dyn Write) -> Result<(), Error> {
    for c in &report.classes {
        emit(
            out,
            format!(
                "color={} edges={} longest_path={} circumference={}",
                c.color, c.edges, c.longest_path, c.circumference
            ),
        )?;
    }
    for c in &report.classes {
        if let Some(seq) = &c.violation {
            let vs: Vec<String> = seq.iter().map(usize::to_string).collect();
            emit(
                out,
                format!(
                    "violation color={} target={} vertices={}",
                    c.color,
                    c.target,
                    vs.join(",")
                ),
            )?;
        }
    }
    emit(
        out,
        format!("verdict={}", if report.is_good() { "good" } else { "bad" }),
    )
}

fn verify(file: &std::path::Path, targets: &str, out: &mut dyn Write) -> CmdResult {
    let text = std::fs::read_to_string(file).map_err(|e| io_err(file, e))?;
    let col = format::parse(&text)?;
    let targets = parse_targets(targets)?;
    if targets.len() != col.colors() as usize {
        return Err(Error::domain(format!(
            "{} targets given for a {}-color file",
            targets.len(),
            col.colors()
        )));
    }
    let report = verify_coloring(&col, &targets)?;
    print_report(&report, out)?;
    Ok(if report.is_good() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

struct SearchArgs {
    n: usize,
    targets: String,
    colors: usize,
    node_limit: Option<u64>,
    time_limit: Option<f64>,
    workers: usize,
    path: Option<PathBuf>,
}

fn search(a: SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let targets = parse_targets(&a.targets)?;
    if targets.len() != a.colors {
        return Err(Error::domain(format!(
            "{} targets given for {} colors",
            targets.len(),
            a.colors
        )));
    }
    if a.n > crate::search::MAX_SEARCH_VERTICES {
        return Err(Error::domain(format!(
            "search needs n <= {}",
            crate::search::MAX_SEARCH_VERTICES
        )));
    }
    let node_limit = match a.node_limit {
        Some(l) => Some(l),
        None => match std::env::var(NODE_LIMIT_VAR) {
            Ok(v) => Some(v.trim().parse().map_err(|_| {
                Error::domain(format!("{NODE_LIMIT_VAR}={v:?} is not a node count"))
            })?),
            Err(_) => None,
        },
    };
    let time_limit = match a.time_limit {
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Error::domain(format!("time limit {s} must be positive"))),
        None => None,
    };
    let cfg = SearchConfig {
        node_limit,
        time_limit,
        workers: a.workers,
        ..SearchConfig::new(a.n, targets)
    };
    let start = Instant::now();
    let outcome = find_good_coloring(&cfg)?;
    let _ = writeln!(err, "elapsed_ms={}", start.elapsed().as_millis());

    let s = &outcome.stats;
    let names: Vec<String> = cfg.targets.iter().map(Target::to_string).collect();
    emit(
        out,
        format!(
            "status={} n={} targets={} symmetry={}",
            outcome.status.as_str(),
            cfg.n,
            names.join(","),
            if outcome.symmetry_rules.is_empty() {
                "none".to_string()
            } else {
                outcome.symmetry_rules.join(",")
            }
        ),
    )?;
    emit(
        out,
        format!(
            "nodes={} pattern_prunes={} budget_prunes={} capacity_prunes={} symmetry_prunes={} leaves={}",
            s.nodes, s.pattern_prunes, s.budget_prunes, s.capacity_prunes, s.symmetry_prunes, s.leaves
        ),
    )?;
    Ok(match outcome.status {
        SearchStatus::Witness => {
            let col = outcome
                .witness
                .as_ref()
                .expect("witness status carries a coloring");
            if col.colors() > format::MAX_FILE_COLORS {
                emit(out, "witness not written: more than 9 colors")?;
            } else {
                write_out(a.path.as_deref(), &format::serialize(col)?, out)?;
            }
            EXIT_OK
        }
        SearchStatus::ExhaustedNone => EXIT_NEGATIVE,
        SearchStatus::LimitReached => EXIT_LIMIT,
    })
}

fn formula(name: &str, params: &[Int], oracle: bool, out: &mut dyn Write) -> CmdResult {
    let arity = match name {
        "turan-path" | "woodall" | "ramsey2-path" => 2,
        "bipartite" => 3,
        "conj-r3-path" | "conj-r3-cycle" => 1,
        _ => return Err(Error::domain(format!("unknown formula {name:?}"))),
    };
    if params.len() != arity {
        return Err(Error::domain(format!(
            "{name} takes {arity} parameters, got {}",
            params.len()
        )));
    }
    let p = params;
    let as_size =
        |x: Int| usize::try_from(x).map_err(|_| Error::domain(format!("{x} must be non-negative")));
    match name {
        "turan-path" => {
            emit(out, format!("value={}", turan_path_max_edges(p[0], p[1])?))?;
            if oracle {
                emit(
                    out,
                    format!(
                        "oracle={}",
                        turan_path_oracle(as_size(p[0])?, as_size(p[1])?)?
                    ),
                )?;
            }
        }
        "woodall" => {
            let w = woodall_bound(p[0], p[1])?;
            emit(out, format!("value={}", w.value))?;
            emit(out, format!("exact={} integral={}", w.exact, w.integral))?;
        }
        "bipartite" => match cited_bipartite_bound(p[0], p[1], p[2]) {
            CitedBound::NotCovered => {
                emit(out, "value=not-covered")?;
                if oracle {
                    let o = bipartite_path_turan_oracle(
                        as_size(p[0])?,
                        as_size(p[1])?,
                        as_size(p[2])?,
                    )?;
                    emit(out, format!("oracle={o}"))?;
                }
                return Ok(EXIT_NEGATIVE);
            }
            CitedBound::Covered { value, rule } => {
                emit(out, format!("value={value}"))?;
                emit(out, format!("rule={rule}"))?;
                if oracle {
                    let o = bipartite_path_turan_oracle(
                        as_size(p[0])?,
                        as_size(p[1])?,
                        as_size(p[2])?,
                    )?;
                    emit(out, format!("oracle={o}"))?;
                }
            }
        },
        "ramsey2-path" => emit(out, format!("value={}", two_color_path_ramsey(p[0], p[1])?))?,
        "conj-r3-path" => emit(out, format!("value={}", conjectured_r3_path(p[0])?))?,
        _ => emit(out, format!("value={}", conjectured_r3_cycle(p[0])?))?,
    }
    Ok(EXIT_OK)
}

fn proof_check(step: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let steps = match step {
        Some(id) => {
            if !proof::STEP_IDS.contains(&id) {
                return Err(Error::domain(format!(
                    "unknown step {id:?}; known steps: {}",
                    proof::STEP_IDS.join(", ")
                )));
            }
            vec![proof::run_step(id)?]
        }
        None => proof::run_all()?,
    };
    for s in &steps {
        for line in s.lines() {
            emit(out, line)?;
        }
    }
    emit(out, proof::summary(&steps))?;
    Ok(if steps.iter().all(proof::ProofStep::as_expected) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}
