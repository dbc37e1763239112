//! Exact checks of the counting bounds used to compare clique covers with
//! Turán graphs.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{count_cliques, Graph};
use crate::rational::{int, ratio, term, uint, Poly, Rational};
use crate::sequence::{KEY_CUBIC, Q_TERMS};

/// Maximum number of `t`-cliques in an `n`-vertex `K_k`-free graph,
/// `Σ_{0 ≤ i_1 < .. < i_t ≤ k−2} Π ⌊(n + i_r)/(k − 1)⌋`.
pub fn erdos_h(n: u64, k: u64, t: u64) -> Result<u128> {
    if t == 0 {
        return Err(Error::ZeroCliqueSize);
    }
    if k <= t {
        return Err(Error::OutOfRange("erdos_h needs k > t"));
    }
    let r = k - 1;
    let sizes: Vec<u128> = (0..r).map(|i| ((n + i) / r) as u128).collect();
    Ok(elementary(&sizes, t as usize))
}

/// Elementary symmetric polynomial of degree `t` in `xs`.
fn elementary(xs: &[u128], t: usize) -> u128 {
    let mut e = alloc::vec![0u128; t + 1];
    e[0] = 1;
    for &x in xs {
        for j in (1..=t).rev() {
            e[j] += e[j - 1] * x;
        }
    }
    e[t]
}

/// `k_4(T(n,4))`, zero when `n < 4`.
pub fn k4_turan(n: u64) -> u128 {
    erdos_h(n, 5, 4).expect("5 > 4")
}

/// `k_3(T(n,3))`.
pub fn k3_turan(n: u64) -> u128 {
    erdos_h(n, 4, 3).expect("4 > 3")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
        }
    }
}

/// A single exact comparison `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: &'static str,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Check {
    pub fn new(label: &'static str, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        Check {
            label,
            lhs,
            relation,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Lt => self.lhs < self.rhs,
            Relation::Le => self.lhs <= self.rhs,
            Relation::Eq => self.lhs == self.rhs,
        }
    }

    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoonMoser {
    pub t: usize,
    /// `k_{t−1}`, `k_t`, `k_{t+1}`.
    pub counts: [u64; 3],
    pub lhs: Rational,
    pub rhs: Rational,
}

impl MoonMoser {
    pub fn slack(&self) -> Rational {
        &self.lhs - &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

/// `k_{t+1}/k_t ≥ (t² k_t/k_{t−1} − n)/(t² − 1)`, evaluated exactly.
pub fn moon_moser(g: &Graph, t: usize) -> Result<MoonMoser> {
    if t < 2 {
        return Err(Error::OutOfRange("moon_moser needs t >= 2"));
    }
    let below = count_cliques(g, t - 1)?;
    let at = count_cliques(g, t)?;
    let above = count_cliques(g, t + 1)?;
    if below == 0 {
        return Err(Error::ZeroCount { t: t - 1 });
    }
    if at == 0 {
        return Err(Error::ZeroCount { t });
    }
    let tt = (t * t) as i64;
    let lhs = uint(above.into()) / uint(at.into());
    let rhs =
        (int(tt) * uint(at.into()) / uint(below.into()) - int(g.order() as i64)) / int(tt - 1);
    Ok(MoonMoser {
        t,
        counts: [below, at, above],
        lhs,
        rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: u64,
    pub k4: u128,
    /// `k_4(T(n,4)) − k_4(T(n−1,4))`.
    pub diff: u128,
    pub checks: Vec<Check>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::holds)
    }
}

/// Sandwich bounds on `k_4(T(n,4))` and its increments (for `n ≥ 6`) and
/// the increment identity `k_4(T(n,4)) − k_4(T(n−1,4)) = k_3(T(⌊3n/4⌋,3))`
/// (for `n ≥ 4`).
pub fn k4_turan_identities(n: u64) -> Result<IdentityReport> {
    if n < 4 {
        return Err(Error::OutOfRange("k4 identities need n >= 4"));
    }
    let k4 = k4_turan(n);
    let diff = k4 - k4_turan(n - 1);
    let ni = n as i64;
    let (k4r, diffr) = (uint(k4), uint(diff));
    let mut checks = Vec::new();
    if n >= 6 {
        checks.push(Check::new(
            "(n-2)^2 (n+2)^2 / 256 <= k4(T(n,4))",
            int((ni - 2) * (ni - 2)) * int((ni + 2) * (ni + 2)) / int(256),
            Relation::Le,
            k4r.clone(),
        ));
        checks.push(Check::new(
            "k4(T(n,4)) <= n^4 / 256",
            k4r.clone(),
            Relation::Le,
            int(ni * ni) * int(ni * ni) / int(256),
        ));
        checks.push(Check::new(
            "(n-1)^3 / 64 <= k4(T(n,4)) - k4(T(n-1,4))",
            int((ni - 1) * (ni - 1) * (ni - 1)) / int(64),
            Relation::Le,
            diffr.clone(),
        ));
        checks.push(Check::new(
            "k4(T(n,4)) - k4(T(n-1,4)) <= n^3 / 64",
            diffr.clone(),
            Relation::Le,
            int(ni * ni * ni) / int(64),
        ));
    }
    checks.push(Check::new(
        "k4(T(n,4)) - k4(T(n-1,4)) = k3(T(floor(3n/4),3))",
        diffr,
        Relation::Eq,
        uint(k3_turan(3 * n / 4)),
    ));
    Ok(IdentityReport {
        n,
        k4,
        diff,
        checks,
    })
}

const fn cubic(c: [(i64, i64); 4]) -> [crate::rational::Term; 4] {
    [
        term(c[0].0, c[0].1, 3, 0),
        term(c[1].0, c[1].1, 2, 0),
        term(c[2].0, c[2].1, 1, 0),
        term(c[3].0, c[3].1, 0, 0),
    ]
}

const fn quadratic(c: [(i64, i64); 3]) -> [crate::rational::Term; 3] {
    [
        term(c[0].0, c[0].1, 2, 0),
        term(c[1].0, c[1].1, 1, 0),
        term(c[2].0, c[2].1, 0, 0),
    ]
}

/// Published cubic expansions of `g(n,c)` in `n`, for `c = 6..=10`.
pub const G_CUBICS: [Poly; 5] = [
    Poly(&cubic([(1, 864), (3, 8), (-21, 8), (5, 1)])),
    Poly(&cubic([(23, 3136), (479, 896), (-297, 64), (2735, 256)])),
    Poly(&cubic([(1, 64), (21, 32), (-7, 1), (305, 16)])),
    Poly(&cubic([(395, 15552), (283, 384), (-615, 64), (7791, 256)])),
    Poly(&cubic([(29, 800), (31, 40), (-99, 8), (45, 1)])),
];

/// Published derivatives `g'(n,c)`, for `c = 6..=10`.
pub const G_DERIVATIVES: [Poly; 5] = [
    Poly(&quadratic([(1, 288), (3, 4), (-21, 8)])),
    Poly(&quadratic([(69, 3136), (479, 448), (-297, 64)])),
    Poly(&quadratic([(3, 64), (21, 16), (-7, 1)])),
    Poly(&quadratic([(395, 5184), (283, 192), (-615, 64)])),
    Poly(&quadratic([(87, 800), (31, 20), (-99, 8)])),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixA {
    pub n: u64,
    pub c: u64,
    /// `g(n,c)` from its definition.
    pub direct: Rational,
    /// `g(n,c)` from the published cubic.
    pub cubic: Rational,
    /// Published `g'(n,c)` at `n`.
    pub derivative: Rational,
}

impl AppendixA {
    pub fn agree(&self) -> bool {
        self.direct == self.cubic
    }

    pub fn positive(&self) -> bool {
        self.direct > Rational::zero()
    }
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `g(n,c)`: the Turán lower bound `(n−2)²(n+2)²/256` minus the peeled
/// cover bound `((n−c)/4)⁴ + 1 + (n−c) + C(c,2)((n−c)/c)² + C(c,3)((n−c)/c)³`.
pub fn appendix_a_g(n: u64, c: u64) -> Result<AppendixA> {
    if !(6..=10).contains(&c) {
        return Err(Error::OutOfRange("appendix A needs 6 <= c <= 10"));
    }
    if n < c {
        return Err(Error::OutOfRange("appendix A needs n >= c"));
    }
    let (ni, ci) = (n as i64, c as i64);
    let r = ni - ci;
    let turan = int((ni - 2) * (ni - 2)) * int((ni + 2) * (ni + 2)) / int(256);
    let quarter = ratio(r, 4);
    let frac = ratio(r, ci);
    let peeled = &quarter * &quarter * &quarter * &quarter
        + Rational::one()
        + int(r)
        + int(binom(ci, 2)) * &frac * &frac
        + int(binom(ci, 3)) * &frac * &frac * &frac;
    let idx = (c - 6) as usize;
    Ok(AppendixA {
        n,
        c,
        direct: turan - peeled,
        cubic: G_CUBICS[idx].eval_int(ni, 0),
        derivative: G_DERIVATIVES[idx].eval_int(ni, 0),
    })
}

/// Published residue-class cubics `−(3k³ + b k² + c k + d)/25` for
/// `n = 4k + r`, indexed by `r`.
pub const H_CASES: [[i64; 3]; 4] = [
    [-90, 75, -50],
    [-74, 64, -18],
    [-78, 51, -14],
    [-82, 11, -1],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixB {
    pub n: u64,
    pub k: u64,
    pub residue: u8,
    pub direct: Rational,
    pub case_cubic: Rational,
}

impl AppendixB {
    pub fn agree(&self) -> bool {
        self.direct == self.case_cubic
    }

    pub fn positive(&self) -> bool {
        self.direct > Rational::zero()
    }
}

/// `h(n) = k_4(T(n,4)) − k_4(T(n−5,4)) − 1 − (n−5) − 2/5 (n−5)² − 2/25 (n−5)³`,
/// alongside the published residue-class cubic.
pub fn appendix_b_h(n: u64) -> Result<AppendixB> {
    if n < 6 {
        return Err(Error::OutOfRange("appendix B needs n >= 6"));
    }
    let r = n as i64 - 5;
    let direct = uint(k4_turan(n))
        - uint(k4_turan(n - 5))
        - int(1)
        - int(r)
        - ratio(2, 5) * int(r * r)
        - ratio(2, 25) * int(r * r * r);
    let (k, residue) = (n / 4, (n % 4) as u8);
    let ki = k as i64;
    let [b, c, d] = H_CASES[residue as usize];
    let case_cubic = -ratio(3 * ki * ki * ki + b * ki * ki + c * ki + d, 25);
    Ok(AppendixB {
        n,
        k,
        residue,
        direct,
        case_cubic,
    })
}

/// One evaluated `(branch, d, q)` point of the proof chain sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPoint {
    /// Which of the three quadratic corrections (1-based).
    pub branch: u8,
    pub d: u64,
    pub q: u64,
    pub value: Rational,
    /// Whether this is the one admissible equality: first branch,
    /// `n ≡ 1 (mod 4)`, `q = (n−1)/4`, `d = n − q`.
    pub designated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endpoints {
    pub q_low: u64,
    pub q_high: u64,
    pub g_low: Rational,
    pub g_high: Rational,
    /// `(n−1)³/64`.
    pub target: Rational,
}

impl Endpoints {
    pub fn max(&self) -> &Rational {
        (&self.g_low).max(&self.g_high)
    }

    pub fn holds(&self) -> bool {
        *self.max() < self.target
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCase {
    pub k: u64,
    pub residue: u8,
    pub q: u64,
    /// First-branch `F(q, n−q)` at `q = ⌈n/4⌉ − 1`.
    pub g: Rational,
    /// The published closed form for this residue class.
    pub published: Rational,
}

impl ResidueCase {
    pub fn agree(&self) -> bool {
        self.g == self.published
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub n: u64,
    /// `k_4(T(n,4)) − k_4(T(n−1,4))`.
    pub diff: u128,
    pub d_range: (u64, u64),
    pub pairs: usize,
    pub violations: Vec<ChainPoint>,
    pub equalities: Vec<ChainPoint>,
    /// Third-branch `F(q, n−q)` at `q = ⌈n/5⌉` and `q = ⌈n/4⌉ − 1`.
    pub endpoints: Endpoints,
    pub residue: ResidueCase,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.equalities.iter().all(|p| p.designated)
            && self.endpoints.holds()
            && self.residue.g <= uint(self.diff)
    }
}

/// `59/2 q³ − 24q²d + 13/2 qd² − 5/9 d³ + Q_branch(q, d)`.
pub fn chain_f(branch: u8, q: i64, d: i64) -> Rational {
    KEY_CUBIC.eval_int(q, d) + Q_TERMS[branch as usize - 1].eval_int(q, d)
}

fn published_residue(k: i64, residue: u8) -> Rational {
    let k3 = int(k * k * k);
    match residue {
        0 => k3 - int(3 * k * k) - ratio(329, 3) * int(k) - int(51),
        1 => k3,
        2 => k3 + int(3 * k) - ratio(10, 3),
        _ => k3 + int(9 * k) - ratio(116, 9),
    }
}

/// Checks `F(q,d) ≤ k_4(T(n,4)) − k_4(T(n−1,4))` for every branch and every
/// integer pair with `⌊3n/4⌋ + 1 ≤ d ≤ ⌊4n/5⌋` and `⌈d/4⌉ ≤ q ≤ n − d`.
pub fn proof_chain_check(n: u64) -> Result<ChainReport> {
    if n < 6 {
        return Err(Error::OutOfRange("proof chain needs n >= 6"));
    }
    let diff = k4_turan(n) - k4_turan(n - 1);
    let bound = uint(diff);
    let (d_lo, d_hi) = (3 * n / 4 + 1, 4 * n / 5);
    let mut report = ChainReport {
        n,
        diff,
        d_range: (d_lo, d_hi),
        pairs: 0,
        violations: Vec::new(),
        equalities: Vec::new(),
        endpoints: endpoints(n),
        residue: residue_case(n),
    };
    for d in d_lo..=d_hi {
        for q in d.div_ceil(4)..=n - d {
            report.pairs += 1;
            for branch in 1..=3u8 {
                let value = chain_f(branch, q as i64, d as i64);
                if value < bound {
                    continue;
                }
                let designated = branch == 1 && n % 4 == 1 && q == (n - 1) / 4 && d == n - q;
                let point = ChainPoint {
                    branch,
                    d,
                    q,
                    value,
                    designated,
                };
                if point.value == bound {
                    report.equalities.push(point);
                } else {
                    report.violations.push(point);
                }
            }
        }
    }
    Ok(report)
}

fn endpoints(n: u64) -> Endpoints {
    let q_low = n.div_ceil(5);
    let q_high = n.div_ceil(4) - 1;
    let g = |q: u64| chain_f(3, q as i64, (n - q) as i64);
    let m = n as i64 - 1;
    Endpoints {
        q_low,
        q_high,
        g_low: g(q_low),
        g_high: g(q_high),
        target: int(m * m * m) / int(64),
    }
}

fn residue_case(n: u64) -> ResidueCase {
    let (k, residue) = (n / 4, (n % 4) as u8);
    let q = n.div_ceil(4) - 1;
    ResidueCase {
        k,
        residue,
        q,
        g: chain_f(1, q as i64, (n - q) as i64),
        published: published_residue(k as i64, residue),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::turan_graph;

    #[test]
    fn erdos_examples() {
        assert_eq!(erdos_h(6, 5, 4), Ok(4));
        assert_eq!(erdos_h(12, 4, 3), Ok(64));
        assert_eq!(erdos_h(4, 5, 4), Ok(1));
        assert_eq!(
            erdos_h(4, 4, 4),
            Err(Error::OutOfRange("erdos_h needs k > t"))
        );
        assert_eq!(k4_turan(3), 0);
        assert_eq!(k4_turan(20), 625);
    }

    #[test]
    fn erdos_matches_enumeration() {
        for n in 1..=14u64 {
            for k in 2..=6u64 {
                if (k - 1) as usize > n as usize {
                    continue;
                }
                let g = turan_graph(n as usize, (k - 1) as usize).unwrap();
                for t in 1..k {
                    assert_eq!(
                        erdos_h(n, k, t).unwrap(),
                        count_cliques(&g, t as usize).unwrap() as u128
                    );
                }
            }
        }
    }

    #[test]
    fn moon_moser_examples() {
        let k4 = Graph::complete(4).unwrap();
        let m = moon_moser(&k4, 2).unwrap();
        assert_eq!(m.slack(), Rational::zero());
        let t93 = turan_graph(9, 3).unwrap();
        let m = moon_moser(&t93, 2).unwrap();
        assert_eq!((m.lhs.clone(), m.slack()), (int(1), Rational::zero()));
        assert_eq!(
            moon_moser(&Graph::empty(4).unwrap(), 2),
            Err(Error::ZeroCount { t: 2 })
        );
        assert!(moon_moser(&k4, 1).is_err());
    }

    #[test]
    fn identity_examples() {
        let r = k4_turan_identities(8).unwrap();
        assert_eq!((r.k4, r.diff), (16, 8));
        assert!(r.passed());
        let r = k4_turan_identities(6).unwrap();
        assert_eq!(r.checks[0].lhs, int(4));
        assert_eq!(r.k4, 4);
        assert_eq!(k4_turan_identities(5).unwrap().checks.len(), 1);
    }

    #[test]
    fn appendix_a_examples() {
        let g = appendix_a_g(6, 6).unwrap();
        assert_eq!(g.direct, int(3));
        assert!(g.agree());
        assert!(appendix_a_g(5, 6).is_err());
        assert!(appendix_a_g(20, 11).is_err());
    }

    #[test]
    fn derivative_tables_match_cubics() {
        for (g, dg) in G_CUBICS.iter().zip(G_DERIVATIVES.iter()) {
            for (t, d) in g.0.iter().zip(dg.0.iter()) {
                assert_eq!(ratio(t.num * t.px as i64, t.den), ratio(d.num, d.den));
            }
        }
    }

    #[test]
    fn appendix_b_examples() {
        let h = appendix_b_h(8).unwrap();
        assert_eq!(h.direct, ratio(156, 25));
        assert_eq!(h.case_cubic, ratio(236, 25));
        assert!(!h.agree());
        assert!(appendix_b_h(9).unwrap().agree());
    }

    #[test]
    fn chain_anchors() {
        let r = proof_chain_check(97).unwrap();
        assert!(r.passed());
        assert_eq!(*r.endpoints.max(), int(13406));
        assert_eq!(r.endpoints.target, int(13824));
        let r = proof_chain_check(101).unwrap();
        assert!(r.passed());
        assert_eq!(*r.endpoints.max(), int(15099));
        assert_eq!(r.endpoints.target, int(15625));
        let r = proof_chain_check(105).unwrap();
        assert!(r.passed());
        assert_eq!(r.equalities.len(), 1);
        assert!(r.residue.agree());
    }
}
