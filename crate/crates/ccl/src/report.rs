//! JSON reports for the extremal bound checks.

use std::fmt;
use std::str::FromStr;

use ccl_core::bounds::{
    appendix_a_g, appendix_b_h, erdos_h, k4_turan_identities, moon_moser, proof_chain_check, Check,
};
use ccl_core::graph::{count_cliques, turan_graph};
use ccl_core::rational::Rational;
use ccl_core::{Error, Graph};
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::gen::random_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsCheck {
    Erdos,
    MoonMoser,
    Eq1,
    AppendixA,
    AppendixB,
    Chain,
}

impl BoundsCheck {
    pub const ALL: [BoundsCheck; 6] = [
        BoundsCheck::Erdos,
        BoundsCheck::MoonMoser,
        BoundsCheck::Eq1,
        BoundsCheck::AppendixA,
        BoundsCheck::AppendixB,
        BoundsCheck::Chain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundsCheck::Erdos => "erdos",
            BoundsCheck::MoonMoser => "moonmoser",
            BoundsCheck::Eq1 => "eq1",
            BoundsCheck::AppendixA => "appendixA",
            BoundsCheck::AppendixB => "appendixB",
            BoundsCheck::Chain => "chain",
        }
    }

    /// Values of `n` checked when none are given.
    pub fn default_ns(self) -> Vec<u64> {
        match self {
            BoundsCheck::Erdos => (1..=20).collect(),
            BoundsCheck::MoonMoser => (1..=7).collect(),
            BoundsCheck::Eq1 => (4..=1000).collect(),
            BoundsCheck::AppendixA => (6..=2000).collect(),
            BoundsCheck::AppendixB => (6..=104).collect(),
            BoundsCheck::Chain => [97, 101].into_iter().chain(105..=200).collect(),
        }
    }
}

impl fmt::Display for BoundsCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundsCheck {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown check {s:?}; expected one of erdos, moonmoser, eq1, appendixA, appendixB, chain"))
    }
}

/// Parses `a..b` or `a..=b`, both inclusive.
pub fn parse_range(s: &str) -> Result<Vec<u64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: u64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start {a:?}"))?;
    let hi: u64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end {b:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo..=hi).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Equality,
    Mismatch,
    Skipped,
    Fail,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub equality: usize,
    pub mismatch: usize,
    pub skipped: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub check: &'static str,
    pub ns: [u64; 2],
    pub passed: bool,
    pub counts: Counts,
    pub items: Vec<Value>,
}

fn rat(r: &Rational) -> String {
    r.to_string()
}

fn check_json(c: &Check) -> Value {
    json!({
        "label": c.label,
        "lhs": rat(&c.lhs),
        "relation": c.relation.symbol(),
        "rhs": rat(&c.rhs),
        "holds": c.holds(),
    })
}

/// Runs one check over the given `n` values. Items with status `pass` are
/// left out unless `full` is set or a single `n` was requested.
pub fn bounds_report(check: BoundsCheck, ns: &[u64], full: bool) -> Result<BoundsReport, Error> {
    if ns.is_empty() {
        return Err(Error::OutOfRange("no n values to check"));
    }
    let items: Vec<(Status, Value)> = match check {
        BoundsCheck::Erdos => ns
            .par_iter()
            .map(|&n| erdos_item(n))
            .collect::<Result<Vec<_>, _>>()?
            .concat(),
        BoundsCheck::MoonMoser => ns
            .iter()
            .map(|&n| moon_moser_items(n))
            .collect::<Result<Vec<_>, _>>()?
            .concat(),
        BoundsCheck::Eq1 => ns
            .par_iter()
            .map(|&n| eq1_item(n))
            .collect::<Result<_, _>>()?,
        BoundsCheck::AppendixA => ns
            .par_iter()
            .map(|&n| appendix_a_items(n))
            .collect::<Result<Vec<_>, _>>()?
            .concat(),
        BoundsCheck::AppendixB => ns
            .par_iter()
            .map(|&n| appendix_b_item(n))
            .collect::<Result<_, _>>()?,
        BoundsCheck::Chain => ns
            .par_iter()
            .map(|&n| chain_item(n))
            .collect::<Result<_, _>>()?,
    };
    let mut counts = Counts::default();
    for (s, _) in &items {
        match s {
            Status::Pass => counts.pass += 1,
            Status::Equality => counts.equality += 1,
            Status::Mismatch => counts.mismatch += 1,
            Status::Skipped => counts.skipped += 1,
            Status::Fail => counts.fail += 1,
        }
    }
    let keep_all = full || ns.len() == 1;
    Ok(BoundsReport {
        check: check.name(),
        ns: [
            *ns.iter().min().expect("non-empty"),
            *ns.iter().max().expect("non-empty"),
        ],
        passed: counts.fail == 0,
        counts,
        items: items
            .into_iter()
            .filter(|(s, _)| keep_all || *s != Status::Pass)
            .map(|(_, v)| v)
            .collect(),
    })
}

fn erdos_item(n: u64) -> Result<Vec<(Status, Value)>, Error> {
    let mut out = Vec::new();
    for k in 2..=6u64 {
        let r = (k - 1) as usize;
        // with fewer vertices than parts, T(n, r) degenerates to K_n
        let g = if n as usize >= r {
            turan_graph(n as usize, r)?
        } else {
            Graph::complete(n as usize)?
        };
        for t in 1..k {
            let formula = erdos_h(n, k, t)?;
            let enumerated = count_cliques(&g, t as usize)? as u128;
            let status = if formula == enumerated {
                Status::Pass
            } else {
                Status::Fail
            };
            out.push((status, json!({"n": n, "k": k, "t": t, "formula": formula as u64, "enumerated": enumerated as u64, "status": status})));
        }
    }
    Ok(out)
}

/// Largest `n` for which every labeled graph is visited.
const MOON_MOSER_EXHAUSTIVE: u64 = 7;
const MOON_MOSER_SAMPLES: usize = 2000;

fn moon_moser_items(n: u64) -> Result<Vec<(Status, Value)>, Error> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let nu = n as usize;
    let exhaustive = n <= MOON_MOSER_EXHAUSTIVE;
    let graphs: Vec<Graph> = if exhaustive {
        let pairs = nu * (nu - 1) / 2;
        (0..1u64 << pairs)
            .map(|m| Graph::from_edge_mask(nu, m))
            .collect::<Result<_, _>>()?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n);
        (0..MOON_MOSER_SAMPLES)
            .map(|_| random_graph(nu, &mut rng))
            .collect()
    };
    let mut out = Vec::new();
    for t in 2..=3usize {
        let results: Vec<_> = graphs
            .par_iter()
            .map(|g| match moon_moser(g, t) {
                Ok(m) => Ok(Some(m.slack())),
                Err(Error::ZeroCount { .. }) => Ok(None),
                Err(e) => Err(e),
            })
            .collect::<Result<_, _>>()?;
        let slacks: Vec<&Rational> = results.iter().flatten().collect();
        let violations = slacks.iter().filter(|s| s.is_negative()).count();
        let equalities = slacks.iter().filter(|s| s.is_zero()).count();
        let min = slacks.iter().min().map(|s| rat(s));
        let status = if violations > 0 {
            Status::Fail
        } else if slacks.is_empty() {
            Status::Skipped
        } else {
            Status::Pass
        };
        out.push((
            status,
            json!({
                "n": n, "t": t,
                "mode": if exhaustive { "exhaustive" } else { "sampled" },
                "graphs": graphs.len(),
                "undefined": results.len() - slacks.len(),
                "equalities": equalities,
                "violations": violations,
                "min_slack": min,
                "status": status,
            }),
        ));
    }
    Ok(out)
}

fn eq1_item(n: u64) -> Result<(Status, Value), Error> {
    let r = k4_turan_identities(n)?;
    let status = if r.passed() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok((
        status,
        json!({
            "n": n,
            "k4": r.k4 as u64,
            "diff": r.diff as u64,
            "checks": r.checks.iter().map(check_json).collect::<Vec<_>>(),
            "status": status,
        }),
    ))
}

fn appendix_a_items(n: u64) -> Result<Vec<(Status, Value)>, Error> {
    let mut out = Vec::new();
    for c in 6..=10u64.min(n) {
        let g = appendix_a_g(n, c)?;
        let status = match (g.positive(), g.agree()) {
            (false, _) => Status::Fail,
            (true, false) => Status::Mismatch,
            (true, true) => Status::Pass,
        };
        out.push((
            status,
            json!({
                "n": n, "c": c,
                "direct": rat(&g.direct),
                "cubic": rat(&g.cubic),
                "derivative": rat(&g.derivative),
                "derivative_positive": g.derivative.is_positive(),
                "status": status,
            }),
        ));
    }
    Ok(out)
}

/// `n` values whose direct `h(n)` is outside the claimed range.
pub const APPENDIX_B_EXCLUDED: [u64; 2] = [97, 101];

fn appendix_b_item(n: u64) -> Result<(Status, Value), Error> {
    let h = appendix_b_h(n)?;
    let status = if APPENDIX_B_EXCLUDED.contains(&n) || n > 104 {
        Status::Skipped
    } else if !h.positive() {
        Status::Fail
    } else if !h.agree() {
        Status::Mismatch
    } else {
        Status::Pass
    };
    Ok((
        status,
        json!({
            "n": n, "k": h.k, "residue": h.residue,
            "direct": rat(&h.direct),
            "case_cubic": rat(&h.case_cubic),
            "positive": h.positive(),
            "agree": h.agree(),
            "status": status,
        }),
    ))
}

fn chain_item(n: u64) -> Result<(Status, Value), Error> {
    let r = proof_chain_check(n)?;
    let status = if !r.passed() {
        Status::Fail
    } else if !r.equalities.is_empty() {
        Status::Equality
    } else if !r.residue.agree() {
        Status::Mismatch
    } else {
        Status::Pass
    };
    let point = |p: &ccl_core::bounds::ChainPoint| json!({"branch": p.branch, "d": p.d, "q": p.q, "value": rat(&p.value), "designated": p.designated});
    Ok((
        status,
        json!({
            "n": n,
            "diff": r.diff as u64,
            "d_range": [r.d_range.0, r.d_range.1],
            "pairs": r.pairs,
            "violations": r.violations.iter().map(point).collect::<Vec<_>>(),
            "equalities": r.equalities.iter().map(point).collect::<Vec<_>>(),
            "endpoints": {
                "q_low": r.endpoints.q_low,
                "q_high": r.endpoints.q_high,
                "g_low": rat(&r.endpoints.g_low),
                "g_high": rat(&r.endpoints.g_high),
                "max": rat(r.endpoints.max()),
                "target": rat(&r.endpoints.target),
                "holds": r.endpoints.holds(),
            },
            "residue_case": {
                "k": r.residue.k,
                "residue": r.residue.residue,
                "q": r.residue.q,
                "g": rat(&r.residue.g),
                "published": rat(&r.residue.published),
                "agree": r.residue.agree(),
            },
            "status": status,
        }),
    ))
}
