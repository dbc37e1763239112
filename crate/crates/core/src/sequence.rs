//! Greedy sequences and their value function.
//!
//! A greedy sequence is the non-increasing list of part sizes of a greedy
//! partition of a `K5`-free graph, so every entry is in `1..=4`. Its value
//! `f = S1 + S2 + S3` counts the cliques used by the three-family triangle
//! cover built in [`crate::cover::build_3cover`].
//!
//! Three local operations never decrease `f` and keep the number of 4's
//! fixed; applied with priority 1 > 2 > 3 they reduce any sequence to one
//! of three irreducible shapes whose value has a closed form in `(m, q)`.
//!
//! Termination of [`reduce`]: operations 1 and 2 shorten the sequence and
//! operation 3 keeps the length while removing two 2's, so the pair
//! `(length, number of 2's)` strictly decreases in lexicographic order.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::CliquePartition;
use crate::rational::{int, term, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GreedySequence {
    entries: Vec<u8>,
}

/// Summary counts of a sequence: `m` (sum), `p` (length), `a` (# of 4's),
/// `b` (# ≥ 3), `c` (# ≥ 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub m: i64,
    pub p: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl GreedySequence {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::OutOfRange("greedy sequences are non-empty"));
        }
        for (index, &entry) in entries.iter().enumerate() {
            if !(1..=4).contains(&entry) {
                return Err(Error::InvalidSequence {
                    index,
                    entry,
                    reason: "entries must be in 1..=4",
                });
            }
            if index > 0 && entry > entries[index - 1] {
                return Err(Error::InvalidSequence {
                    index,
                    entry,
                    reason: "entries must be non-increasing",
                });
            }
        }
        Ok(GreedySequence { entries })
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn counts(&self) -> Counts {
        let count = |min: u8| self.entries.iter().filter(|&&x| x >= min).count() as i64;
        Counts {
            m: self.entries.iter().map(|&x| x as i64).sum(),
            p: self.entries.len() as i64,
            a: count(4),
            b: count(3),
            c: count(2),
        }
    }

    fn count_of(&self, v: u8) -> usize {
        self.entries.iter().filter(|&&x| x == v).count()
    }
}

/// Every greedy sequence with sum at most `max_sum`, in lexicographic order.
pub fn all_sequences(max_sum: usize) -> Vec<GreedySequence> {
    fn grow(prefix: &mut Vec<u8>, left: usize, out: &mut Vec<GreedySequence>) {
        let top = prefix.last().copied().unwrap_or(4);
        for v in 1..=top.min(left.min(4) as u8) {
            prefix.push(v);
            out.push(GreedySequence {
                entries: prefix.clone(),
            });
            grow(prefix, left - v as usize, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), max_sum, &mut out);
    out.sort();
    out
}

/// Sequence of part sizes of a partition of a `K5`-free graph.
pub fn sequence_of(p: &CliquePartition<'_>) -> Result<GreedySequence> {
    if let Some(size) = p.sizes().into_iter().find(|&s| s > 4) {
        return Err(Error::CliqueTooLarge { size, forbidden: 5 });
    }
    GreedySequence::new(p.sizes().into_iter().map(|s| s as u8).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Value {
    pub s1: i64,
    pub s2: i64,
    pub s3: i64,
    pub f: i64,
}

/// Evaluates `S1`, `S2`, `S3` and `f` straight from their defining sums.
pub fn value_f(seq: &GreedySequence) -> Value {
    let Counts { m, p, a, b, c } = seq.counts();
    // 1-based access
    let at = |j: i64| seq.entries[(j - 1) as usize] as i64;
    let s1 = b;
    let s2 = m * b + a * a - a * b - b * b + b * c - a - 3 * b;

    let head = |upto: i64| (2..=upto).map(|j| (at(j) - 1) * (j - 1)).sum::<i64>();
    let tail = |from: i64, upto: i64| (from..=upto).map(|j| (at(j) - 1) * b).sum::<i64>();
    let mut s3 = 0;
    for k in 3..=b {
        s3 += at(k) * head(k - 1);
    }
    for k in b + 1..=c {
        s3 += at(k) * (head(b) + tail(b + 1, k - 1));
    }
    for _ in c + 1..=p {
        s3 += head(b) + tail(b + 1, c);
    }
    Value {
        s1,
        s2,
        s3,
        f: s1 + s2 + s3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    /// Two 1's become one 2.
    MergeOnes,
    /// The only 1 is absorbed into the first 2, making a 3.
    AbsorbOne,
    /// The first and last 2 become a 3 and a 1.
    SplitTwos,
}

impl Operation {
    pub fn id(self) -> u8 {
        match self {
            Operation::MergeOnes => 1,
            Operation::AbsorbOne => 2,
            Operation::SplitTwos => 3,
        }
    }
}

/// One applied operation. `i` and `j` are the 0-based positions in the
/// sequence before the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub op: Operation,
    pub i: usize,
    pub j: usize,
    pub before: GreedySequence,
    pub after: GreedySequence,
    pub f_before: i64,
    pub f_after: i64,
}

impl Step {
    pub fn delta_f(&self) -> i64 {
        self.f_after - self.f_before
    }
}

/// Applies the highest-priority applicable operation, or returns `None`
/// when `seq` is irreducible.
pub fn apply_operation(seq: &GreedySequence) -> Option<Step> {
    let e = &seq.entries;
    let ones = seq.count_of(1);
    let twos = seq.count_of(2);
    let first = |v: u8| e.iter().position(|&x| x == v);
    let last = |v: u8| e.iter().rposition(|&x| x == v);
    let mut next = e.clone();
    let (op, i, j) = if ones >= 2 {
        let (i, j) = (first(1)?, last(1)?);
        next[i] = 2;
        next.remove(j);
        (Operation::MergeOnes, i, j)
    } else if ones == 1 && twos >= 1 {
        let (i, j) = (first(2)?, first(1)?);
        next[i] = 3;
        next.remove(j);
        (Operation::AbsorbOne, i, j)
    } else if ones == 0 && twos >= 2 {
        let (i, j) = (first(2)?, last(2)?);
        next[i] = 3;
        next[j] = 1;
        (Operation::SplitTwos, i, j)
    } else {
        return None;
    };
    next.sort_unstable_by(|x, y| y.cmp(x));
    let after = GreedySequence { entries: next };
    Some(Step {
        op,
        i,
        j,
        f_before: value_f(seq).f,
        f_after: value_f(&after).f,
        before: seq.clone(),
        after,
    })
}

/// Shape of an irreducible sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceType {
    /// Only 3's and 4's.
    ThreesAndFours,
    /// 3's and 4's followed by a single 2.
    TrailingTwo,
    /// 3's and 4's followed by a single 1.
    TrailingOne,
}

impl SequenceType {
    pub fn kind(self) -> u8 {
        match self {
            SequenceType::ThreesAndFours => 1,
            SequenceType::TrailingTwo => 2,
            SequenceType::TrailingOne => 3,
        }
    }

    pub fn from_kind(kind: u8) -> Result<Self> {
        match kind {
            1 => Ok(SequenceType::ThreesAndFours),
            2 => Ok(SequenceType::TrailingTwo),
            3 => Ok(SequenceType::TrailingOne),
            _ => Err(Error::OutOfRange("sequence type must be 1, 2 or 3")),
        }
    }
}

/// Type of an irreducible sequence; `None` if an operation still applies.
pub fn classify(seq: &GreedySequence) -> Option<SequenceType> {
    let (body, last) = seq.entries.split_at(seq.len() - 1);
    if body.iter().any(|&x| x < 3) {
        return None;
    }
    match last[0] {
        3 | 4 => Some(SequenceType::ThreesAndFours),
        2 => Some(SequenceType::TrailingTwo),
        _ => Some(SequenceType::TrailingOne),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    pub final_sequence: GreedySequence,
    pub final_type: SequenceType,
}

impl ReductionTrace {
    /// Length `q` of the irreducible sequence.
    pub fn q(&self) -> usize {
        self.final_sequence.len()
    }
}

pub fn reduce(seq: &GreedySequence) -> ReductionTrace {
    let mut steps = Vec::new();
    let mut current = seq.clone();
    while let Some(step) = apply_operation(&current) {
        current = step.after.clone();
        steps.push(step);
    }
    let final_type = classify(&current).expect("no operation applies to an irreducible sequence");
    ReductionTrace {
        steps,
        final_sequence: current,
        final_type,
    }
}

// Polynomials below are in (x, y) = (q, m).

/// `28q³ − 45/2 q²m + 6qm² − 1/2 m³`
pub const ADJUSTMENT_CUBIC: Poly = Poly(&[
    term(28, 1, 3, 0),
    term(-45, 2, 2, 1),
    term(6, 1, 1, 2),
    term(-1, 2, 0, 3),
]);

pub const R_TERMS: [Poly; 3] = [
    Poly(&[
        term(3, 2, 1, 1),
        term(-1, 2, 0, 2),
        term(-3, 1, 1, 0),
        term(1, 1, 0, 1),
    ]),
    Poly(&[
        term(-28, 1, 2, 0),
        term(33, 2, 1, 1),
        term(-5, 2, 0, 2),
        term(6, 1, 1, 0),
        term(-2, 1, 0, 1),
    ]),
    Poly(&[
        term(-56, 1, 2, 0),
        term(63, 2, 1, 1),
        term(-9, 2, 0, 2),
        term(34, 1, 1, 0),
        term(-10, 1, 0, 1),
        term(-6, 1, 0, 0),
    ]),
];

/// `59/2 q³ − 24q²m + 13/2 qm² − 5/9 m³`
pub const KEY_CUBIC: Poly = Poly(&[
    term(59, 2, 3, 0),
    term(-24, 1, 2, 1),
    term(13, 2, 1, 2),
    term(-5, 9, 0, 3),
]);

pub const Q_TERMS: [Poly; 3] = [
    Poly(&[
        term(13, 2, 2, 0),
        term(-17, 6, 1, 1),
        term(2, 9, 0, 2),
        term(1, 3, 1, 0),
        term(-1, 9, 0, 1),
        term(4, 9, 0, 0),
    ]),
    Poly(&[
        term(-23, 1, 2, 0),
        term(79, 6, 1, 1),
        term(-35, 18, 0, 2),
        term(11, 2, 1, 0),
        term(-11, 6, 0, 1),
    ]),
    Poly(&[
        term(-105, 2, 2, 0),
        term(175, 6, 1, 1),
        term(-37, 9, 0, 2),
        term(92, 3, 1, 0),
        term(-80, 9, 0, 1),
        term(-16, 3, 0, 0),
    ]),
];

/// `[R1, R2, R3]` at `(m, q)`.
pub fn r_values(m: i64, q: i64) -> [Rational; 3] {
    R_TERMS.map(|r| r.eval_int(q, m))
}

/// `[Q1, Q2, Q3]` at `(m, q)`.
pub fn q_values(m: i64, q: i64) -> [Rational; 3] {
    Q_TERMS.map(|r| r.eval_int(q, m))
}

/// Number of 4's an irreducible sequence of the given type must contain.
fn fours_for(kind: SequenceType, m: i64, q: i64) -> i64 {
    match kind {
        SequenceType::ThreesAndFours => m - 3 * q,
        SequenceType::TrailingTwo => m - 3 * q + 1,
        SequenceType::TrailingOne => m - 3 * q + 2,
    }
}

/// Value `f` of the irreducible `(m, q)` sequence of the given type.
pub fn closed_form_f(kind: SequenceType, m: i64, q: i64) -> Result<Rational> {
    let a = fours_for(kind, m, q);
    let max_fours = match kind {
        SequenceType::ThreesAndFours => q,
        _ => q - 1,
    };
    if q < 1 || a < 0 || a > max_fours {
        return Err(Error::InconsistentType {
            kind: kind.kind(),
            m,
            q,
        });
    }
    let idx = kind.kind() as usize - 1;
    Ok(ADJUSTMENT_CUBIC.eval_int(q, m) + R_TERMS[idx].eval_int(q, m))
}

fn max_of(values: [Rational; 3]) -> Rational {
    let [x, y, z] = values;
    x.max(y).max(z)
}

/// `28q³ − 45/2 q²m + 6qm² − 1/2 m³ + max(R1, R2, R3)`.
pub fn adjustment_bound(m: i64, q: i64) -> Rational {
    ADJUSTMENT_CUBIC.eval_int(q, m) + max_of(r_values(m, q))
}

/// `59/2 q³ − 24q²m + 13/2 qm² − 5/9 m³ + max(Q1, Q2, Q3)`: the bound on
/// the refined triangle cover of a `K5`-free graph on `m` vertices whose
/// greedy sequence reduces to length `q`.
pub fn key_lemma_bound(m: i64, q: i64) -> Rational {
    KEY_CUBIC.eval_int(q, m) + max_of(q_values(m, q))
}

/// The correction `−2/9 (a−1)²(a−2) + 1/6 a²(a−1)` subtracted from the
/// adjustment bound once `a` size-4 parts are refined.
pub fn refinement_correction(a: i64) -> Rational {
    use crate::rational::ratio;
    ratio(-2, 9) * int((a - 1) * (a - 1) * (a - 2)) + ratio(1, 6) * int(a * a * (a - 1))
}
