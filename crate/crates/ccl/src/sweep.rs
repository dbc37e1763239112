//! Conjecture sweeps: compare `CC_t(G)` with `k_t(T(n,t))` over many graphs.

use std::fmt;
use std::str::FromStr;

use ccl_core::bounds::erdos_h;
use ccl_core::cover::{build_4cover, validate_cover};
use ccl_core::graph::is_turan;
use ccl_core::solver::{exact_min_cover, SolveError, SolveOptions};
use ccl_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gen::{make_clique_free, random_graph};

/// Largest `n` accepted in exhaustive mode.
pub const EXHAUSTIVE_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            _ => Err(format!("unknown sweep mode {s:?}")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random => "random",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n: usize,
    pub t: usize,
    pub mode: Mode,
    pub samples: usize,
    pub seed: Option<u64>,
    pub node_limit: u64,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("exhaustive sweeps need 1 <= n <= {EXHAUSTIVE_MAX_N}, got n = {0}")]
    TooLarge(usize),
    #[error("random sweeps need a seed")]
    MissingSeed,
    #[error("sweeps need n >= 1 and t >= 1")]
    BadParameters,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub id: u64,
    pub edges: Vec<[usize; 2]>,
    pub cover: usize,
    pub is_turan: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub id: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub t: usize,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub instances: usize,
    /// `k_t(T(n,t))`.
    pub turan_bound: u64,
    pub max_cover: usize,
    /// `max_cover / turan_bound` as a reduced fraction.
    pub max_ratio: Option<String>,
    pub exact_solves: usize,
    /// Graphs with cover number equal to `turan_bound`.
    pub witnesses: Vec<Witness>,
    /// Witnesses that are not Turán graphs.
    pub counterexample_candidates: usize,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Outcome {
    id: u64,
    graph: Graph,
    cover: Option<usize>,
    exact: bool,
    failure: Option<String>,
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport, SweepError> {
    if cfg.n == 0 || cfg.t == 0 {
        return Err(SweepError::BadParameters);
    }
    let bound = erdos_h(cfg.n as u64, cfg.t as u64 + 1, cfg.t as u64).expect("t + 1 > t") as u64;
    let opts = SolveOptions {
        node_limit: cfg.node_limit,
        ..SolveOptions::default()
    };
    let outcomes: Vec<Outcome> = match cfg.mode {
        Mode::Exhaustive => {
            if cfg.n > EXHAUSTIVE_MAX_N {
                return Err(SweepError::TooLarge(cfg.n));
            }
            let pairs = cfg.n * (cfg.n - 1) / 2;
            (0..1u64 << pairs)
                .into_par_iter()
                .map(|mask| {
                    let g = Graph::from_edge_mask(cfg.n, mask).expect("n <= 6");
                    exact_outcome(mask, g, cfg.t, opts)
                })
                .collect()
        }
        Mode::Random => {
            let seed = cfg.seed.ok_or(SweepError::MissingSeed)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let graphs: Vec<Graph> = (0..cfg.samples)
                .map(|_| {
                    let mut g = random_graph(cfg.n, &mut rng);
                    if cfg.t == 4 {
                        make_clique_free(&mut g, 6, &mut rng);
                    }
                    g
                })
                .collect();
            graphs
                .into_par_iter()
                .enumerate()
                .map(|(id, g)| random_outcome(id as u64, g, cfg.t, bound, opts))
                .collect()
        }
    };

    let mut report = SweepReport {
        n: cfg.n,
        t: cfg.t,
        mode: cfg.mode,
        seed: cfg.seed.filter(|_| cfg.mode == Mode::Random),
        instances: outcomes.len(),
        turan_bound: bound,
        max_cover: 0,
        max_ratio: None,
        exact_solves: 0,
        witnesses: Vec::new(),
        counterexample_candidates: 0,
        failures: Vec::new(),
    };
    for o in outcomes {
        report.exact_solves += o.exact as usize;
        if let Some(reason) = o.failure {
            report.failures.push(Failure { id: o.id, reason });
        }
        let Some(cover) = o.cover else { continue };
        report.max_cover = report.max_cover.max(cover);
        if o.exact && cover as u64 == bound {
            let turan = is_turan(&o.graph, cfg.t);
            report.counterexample_candidates += !turan as usize;
            report.witnesses.push(Witness {
                id: o.id,
                edges: o.graph.edges().map(|(u, v)| [u, v]).collect(),
                cover,
                is_turan: turan,
            });
        }
    }
    if bound > 0 {
        report.max_ratio = Some(reduced(report.max_cover as u64, bound));
    }
    Ok(report)
}

fn reduced(a: u64, b: u64) -> String {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    format!("{}/{}", a / x, b / x)
}

fn exact_outcome(id: u64, g: Graph, t: usize, opts: SolveOptions) -> Outcome {
    match exact_min_cover(&g, t, opts) {
        Ok(s) => {
            let failure = validate_cover(&g, &s.certificate)
                .err()
                .map(|e| format!("exact certificate invalid: {e}"));
            Outcome {
                id,
                graph: g,
                cover: Some(s.size),
                exact: true,
                failure,
            }
        }
        Err(e) => Outcome {
            id,
            graph: g,
            cover: None,
            exact: false,
            failure: Some(e.to_string()),
        },
    }
}

fn random_outcome(id: u64, g: Graph, t: usize, bound: u64, opts: SolveOptions) -> Outcome {
    if t != 4 {
        return exact_outcome(id, g, t, opts);
    }
    let cert = build_4cover(&g);
    let upper = cert.len();
    // exact solves only where the constructive bound is within 10% of the Turán count
    if (upper as u64) * 10 < bound * 9 {
        return Outcome {
            id,
            graph: g,
            cover: Some(upper),
            exact: false,
            failure: None,
        };
    }
    match exact_min_cover(&g, t, opts) {
        Ok(s) => {
            let mut failure = validate_cover(&g, &s.certificate)
                .err()
                .map(|e| format!("exact certificate invalid: {e}"));
            if s.size > upper {
                failure = Some(format!(
                    "exact size {} exceeds constructive size {upper}",
                    s.size
                ));
            } else if s.size as u64 > bound {
                failure = Some(format!(
                    "cover number {} exceeds k_t(T(n,t)) = {bound}",
                    s.size
                ));
            }
            Outcome {
                id,
                graph: g,
                cover: Some(s.size),
                exact: true,
                failure,
            }
        }
        Err(SolveError::BudgetExceeded { best, .. }) => {
            let value = best.len().min(upper);
            let failure = (value as u64 > bound).then(|| {
                format!(
                    "undecided: best cover {value} exceeds {bound} and the search budget ran out"
                )
            });
            Outcome {
                id,
                graph: g,
                cover: Some(value),
                exact: false,
                failure,
            }
        }
        Err(e) => Outcome {
            id,
            graph: g,
            cover: Some(upper),
            exact: false,
            failure: (upper as u64 > bound).then(|| e.to_string()),
        },
    }
}
