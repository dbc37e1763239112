use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use ccl::io::{format_edge_list, read_edge_list};
use ccl::json::{CertificateFile, TraceFile};
use ccl::report::{bounds_report, parse_range, BoundsCheck};
use ccl::sweep::{sweep, Mode, SweepConfig};
use ccl_core::cover::{build_3cover, build_4cover, refine_3cover, validate_cover};
use ccl_core::graph::turan_graph;
use ccl_core::sequence::{reduce, GreedySequence};
use ccl_core::solver::{exact_min_cover, SolveError, SolveOptions, DEFAULT_NODE_LIMIT};
use clap::{Parser, Subcommand};

const NODE_LIMIT_VAR: &str = "CCL_NODE_LIMIT";

/// Clique covers of graphs: constructions, exact solving, validation and
/// bound checks.
#[derive(Parser)]
#[command(name = "ccl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the Turán graph T(n,t) as an edge list.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a constructive t-clique cover (t = 4, or t = 3 for K5-free graphs).
    Cover {
        #[arg(long)]
        t: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a minimum t-clique cover by branch and bound.
    Exact {
        #[arg(long)]
        t: usize,
        #[arg(long = "in")]
        input: PathBuf,
        /// Search node budget; defaults to $CCL_NODE_LIMIT or 10^7.
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Verify counting bounds in exact arithmetic and print a JSON report.
    Bounds {
        /// erdos | moonmoser | eq1 | appendixA | appendixB | chain
        #[arg(long)]
        check: BoundsCheck,
        #[arg(long, conflicts_with = "range")]
        n: Option<u64>,
        /// Inclusive range `a..b`.
        #[arg(long)]
        range: Option<String>,
        /// List passing items too.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare cover numbers with k_t(T(n,t)) over many graphs.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value = "exhaustive")]
        mode: Mode,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a greedy sequence and print the trace.
    Reduce {
        /// Comma-separated entries, e.g. 4,3,2,2,1
        #[arg(long)]
        seq: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            let written = stdout.write_all(text.as_bytes()).and_then(|()| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    stdout.write_all(b"\n")
                }
            });
            match written {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => Ok(r?),
            }
        }
    }
}

/// Certificate JSON goes to `--out` when given (and the size to stdout),
/// otherwise to stdout.
fn emit_certificate(file: &CertificateFile, out: Option<&Path>) -> Result<()> {
    emit(&file.to_json(), out)?;
    if out.is_some() {
        println!("size {}", file.size);
    }
    Ok(())
}

fn node_limit(flag: Option<u64>) -> Result<u64> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(NODE_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{NODE_LIMIT_VAR}={v:?} is not a node count")),
        Err(_) => Ok(DEFAULT_NODE_LIMIT),
    }
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Turan { n, t, out } => {
            let g = turan_graph(n, t)?;
            emit(&format_edge_list(&g), out.as_deref())?;
        }
        Command::Cover { t, input, out } => {
            let g = read_edge_list(&input)?;
            let file = match t {
                4 => CertificateFile::new(&build_4cover(&g), None),
                3 => {
                    let base = build_3cover(&g)?;
                    let refined = refine_3cover(&g, &base);
                    CertificateFile::new(&refined.certificate, Some(&base.partition))
                }
                _ => bail!("constructive covers exist for t = 3 and t = 4 only"),
            };
            emit_certificate(&file, out.as_deref())?;
        }
        Command::Exact {
            t,
            input,
            node_limit: flag,
            out,
        } => {
            let g = read_edge_list(&input)?;
            let opts = SolveOptions {
                node_limit: node_limit(flag)?,
                ..SolveOptions::default()
            };
            match exact_min_cover(&g, t, opts) {
                Ok(s) => {
                    emit_certificate(&CertificateFile::new(&s.certificate, None), out.as_deref())?
                }
                Err(SolveError::BudgetExceeded { nodes, best }) => {
                    if let Some(p) = &out {
                        emit(&CertificateFile::new(&best, None).to_json(), Some(p))?;
                    }
                    bail!(
                        "node budget exhausted after {nodes} nodes; best cover found has {} cliques (an upper bound only)",
                        best.len()
                    );
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Verify { input, cert } => {
            let g = read_edge_list(&input)?;
            let c = CertificateFile::read(&cert)?.to_certificate()?;
            return Ok(match validate_cover(&g, &c) {
                Ok(()) => {
                    println!("valid: {} cliques cover every {}-clique", c.len(), c.t);
                    ExitCode::SUCCESS
                }
                Err(v) => {
                    println!("invalid: {v}");
                    ExitCode::from(1)
                }
            });
        }
        Command::Bounds {
            check,
            n,
            range,
            full,
            out,
        } => {
            let ns = match (n, range) {
                (Some(n), _) => vec![n],
                (None, Some(r)) => parse_range(&r).map_err(anyhow::Error::msg)?,
                (None, None) => check.default_ns(),
            };
            let report = bounds_report(check, &ns, full)?;
            emit(&serde_json::to_string_pretty(&report)?, out.as_deref())?;
            return Ok(status(report.passed));
        }
        Command::Sweep {
            n,
            t,
            mode,
            samples,
            seed,
            out,
        } => {
            let cfg = SweepConfig {
                n,
                t,
                mode,
                samples,
                seed,
                node_limit: node_limit(None)?,
            };
            let report = sweep(&cfg)?;
            emit(&serde_json::to_string_pretty(&report)?, out.as_deref())?;
            return Ok(status(report.passed()));
        }
        Command::Reduce { seq } => {
            let entries = seq
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u8>()
                        .with_context(|| format!("bad sequence entry {s:?}"))
                })
                .collect::<Result<Vec<_>>>()?;
            let trace = reduce(&GreedySequence::new(entries)?);
            emit(&serde_json::to_string(&TraceFile::from(&trace))?, None)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
