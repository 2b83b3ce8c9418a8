//! Block-sensitivity caps from the moment LP.
//!
//! A degree-`d` function with block sensitivity `b` yields a univariate
//! polynomial `p(t) = ⟨p, (t, t², …, t^d)⟩` with `p(1) = 1`,
//! `0 ≤ p(k) ≤ 1` for `1 < k < b` and `p(b) = τ ∈ {0,1}`. When that system
//! is infeasible for both `τ` no such function exists. [`bs_upper_bound`]
//! scans `b` exhaustively and keeps a witness or a Farkas certificate for
//! every verdict so the resulting table can be re-checked without a solver.

mod record;
pub mod simplex;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::{popcount, BooleanFunction, Mask};
use crate::error::{Error, Result};
use crate::measures::BlockCollection;
use crate::ratio::Rational;
use simplex::{integer_row, IncrementalLeq, LeqOutcome};

pub use record::{parse_records, write_records, LpRecord, RecordCheck};

/// Default largest degree for which the LP table is computed.
pub const DEFAULT_LP_MAX_DEGREE: u32 = 14;

/// One constraint of the moment system, acting on `⟨p, m_d(point)⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `⟨p, m_d(k)⟩ = rhs`
    Equal { point: u64, rhs: bool },
    /// `⟨p, m_d(k)⟩ ≥ 0`
    AtLeastZero { point: u64 },
    /// `⟨p, m_d(k)⟩ ≤ 1`
    AtMostOne { point: u64 },
}

impl Constraint {
    pub fn point(&self) -> u64 {
        match *self {
            Self::Equal { point, .. } | Self::AtLeastZero { point } | Self::AtMostOne { point } => {
                point
            }
        }
    }
}

/// The feasibility system for a given degree `d`, candidate `b ≥ 2` and `τ`.
///
/// Constraint order (also the order of certificate multipliers): the
/// equality at `k = 1`, then `≥ 0`, `≤ 1` for each `k = 2..b−1`, then the
/// equality at `k = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MomentSystem {
    degree: u32,
    b: u64,
    tau: bool,
}

impl MomentSystem {
    pub fn new(degree: u32, b: u64, tau: bool) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Domain("moment system needs degree ≥ 1".into()));
        }
        if b < 2 {
            return Err(Error::Domain(format!("moment system needs b ≥ 2, got {b}")));
        }
        Ok(Self { degree, b, tau })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn tau(&self) -> bool {
        self.tau
    }

    /// `m_d(t) = (t, t², …, t^d)` with exact integers.
    pub fn moment(&self, t: u64) -> Vec<BigInt> {
        let t = BigInt::from(t);
        let mut acc = BigInt::one();
        (0..self.degree)
            .map(|_| {
                acc *= &t;
                acc.clone()
            })
            .collect()
    }

    pub fn constraints(&self) -> Vec<Constraint> {
        let mut out = Vec::with_capacity(self.row_count());
        out.push(Constraint::Equal {
            point: 1,
            rhs: true,
        });
        for k in 2..self.b {
            out.push(Constraint::AtLeastZero { point: k });
            out.push(Constraint::AtMostOne { point: k });
        }
        out.push(Constraint::Equal {
            point: self.b,
            rhs: self.tau,
        });
        out
    }

    /// `2(b−2) + 2`.
    pub fn row_count(&self) -> usize {
        2 * (self.b as usize - 2) + 2
    }

    /// `⟨p, m_d(k)⟩`; `p` must have length `d`.
    pub fn evaluate(&self, p: &[Rational], k: u64) -> Rational {
        self.moment(k)
            .into_iter()
            .zip(p)
            .map(|(m, c)| Rational::from_integer(m) * c)
            .sum()
    }

    /// The system as `A p ≤ c`: every equality becomes two rows, so the
    /// result has `row_count() + 2` rows.
    fn as_leq_with(
        &self,
        row: impl Fn(u64) -> Vec<Rational>,
    ) -> (Vec<Vec<Rational>>, Vec<Rational>) {
        let mut a = Vec::new();
        let mut c = Vec::new();
        for con in self.constraints() {
            let m = row(con.point());
            let neg: Vec<Rational> = m.iter().map(|x| -x).collect();
            match con {
                Constraint::Equal { rhs, .. } => {
                    let r = Rational::from_integer(BigInt::from(rhs as u8));
                    a.push(m);
                    c.push(r.clone());
                    a.push(neg);
                    c.push(-r);
                }
                Constraint::AtLeastZero { .. } => {
                    a.push(neg);
                    c.push(Rational::zero());
                }
                Constraint::AtMostOne { .. } => {
                    a.push(m);
                    c.push(Rational::one());
                }
            }
        }
        (a, c)
    }
}

/// Coordinates for degree-`d` polynomials with `p(0) = 0` given by their
/// values at `d` distinct nonzero integer nodes.
///
/// Solving in these coordinates keeps the simplex numbers small; the change
/// of variables is invertible, so feasibility and Farkas multipliers are
/// the same as for the monomial system.
struct NodeBasis {
    nodes: Vec<i64>,
    /// monomial coefficients (of `t¹..t^d`) of each Lagrange polynomial
    lagrange: Vec<Vec<Rational>>,
}

impl NodeBasis {
    /// Nodes spread over `[1, b]` (Chebyshev-like) when `b > d`, else `1..=d`.
    fn for_system(sys: &MomentSystem) -> Self {
        let d = sys.degree as i64;
        let b = sys.b as i64;
        let nodes: Vec<i64> = if b > d {
            let mut nodes: Vec<i64> = (0..d)
                .map(|i| {
                    let theta = std::f64::consts::PI * (2 * i + 1) as f64 / (2 * d) as f64;
                    let x = (1.0 - theta.cos()) / 2.0;
                    1 + (x * (b - 1) as f64).round() as i64
                })
                .collect();
            nodes.sort_unstable();
            // force distinct values while staying inside [1, b]
            for i in 1..nodes.len() {
                if nodes[i] <= nodes[i - 1] {
                    nodes[i] = nodes[i - 1] + 1;
                }
            }
            for i in (0..nodes.len()).rev() {
                let limit = b - (nodes.len() - 1 - i) as i64;
                if nodes[i] > limit {
                    nodes[i] = limit;
                }
            }
            nodes
        } else {
            (1..=d).collect()
        };
        let lagrange = (0..nodes.len())
            .map(|i| Self::lagrange_coeffs(&nodes, i))
            .collect();
        Self { nodes, lagrange }
    }

    fn lagrange_coeffs(nodes: &[i64], i: usize) -> Vec<Rational> {
        let ti = nodes[i];
        // numerator polynomial t · Π_{j≠i} (t − t_j), coefficients of t^0..t^d
        let mut poly = vec![BigInt::zero(), BigInt::one()];
        let mut denom = BigInt::from(ti);
        for (j, &tj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (e, c) in poly.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * tj;
            }
            poly = next;
            denom *= ti - tj;
        }
        poly.into_iter()
            .skip(1)
            .map(|c| Rational::new(c, denom.clone()))
            .collect()
    }

    /// `(L_1(k), …, L_d(k))`.
    fn row(&self, k: u64) -> Vec<Rational> {
        let k = k as i64;
        (0..self.nodes.len())
            .map(|i| {
                let ti = self.nodes[i];
                let mut num = BigInt::from(k);
                let mut den = BigInt::from(ti);
                for (j, &tj) in self.nodes.iter().enumerate() {
                    if j != i {
                        num *= k - tj;
                        den *= ti - tj;
                    }
                }
                Rational::new(num, den)
            })
            .collect()
    }

    fn to_monomial(&self, values: &[Rational]) -> Vec<Rational> {
        let d = self.nodes.len();
        (0..d)
            .map(|e| {
                values
                    .iter()
                    .zip(&self.lagrange)
                    .map(|(v, l)| v * &l[e])
                    .sum()
            })
            .collect()
    }
}

/// Feasibility verdict with its proof object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum LpOutcome {
    Feasible {
        #[serde(with = "crate::ratio::serde_fraction_vec")]
        witness: Vec<Rational>,
    },
    /// Multipliers aligned with [`MomentSystem::constraints`]: free sign on
    /// the equalities, nonnegative on the inequalities, combining to `0 ≤ −1`.
    Infeasible {
        #[serde(with = "crate::ratio::serde_fraction_vec")]
        certificate: Vec<Rational>,
    },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible { .. })
    }
}

pub fn build_system(degree: u32, b: u64, tau: bool) -> Result<MomentSystem> {
    MomentSystem::new(degree, b, tau)
}

/// Exact phase-I simplex on the moment system.
///
/// The simplex runs on a growing subset of rows: the equalities and the box
/// rows at the interpolation nodes to start, then one most-violated row per
/// round (warm-started), until the candidate satisfies the whole system or
/// the subset is infeasible. A certificate for a subset is a certificate for the whole
/// system with zero multipliers on the rows left out.
pub fn solve_feasibility(sys: &MomentSystem) -> LpOutcome {
    let basis = NodeBasis::for_system(sys);
    let (a, c) = sys.as_leq_with(|k| basis.row(k));
    let scaled: Vec<_> = a
        .iter()
        .zip(&c)
        .map(|(r, rhs)| integer_row(r, rhs))
        .collect();
    let total = a.len();
    let mut active = vec![false; total];
    // equality rows sit at both ends of the `≤` form
    for i in [0, 1, total - 2, total - 1] {
        active[i] = true;
    }
    // box rows at the basis nodes are unit rows
    for &t in &basis.nodes {
        if t >= 2 && (t as u64) < sys.b {
            let k = t as usize - 2;
            active[2 + 2 * k] = true;
            active[3 + 2 * k] = true;
        }
    }

    let mut solver = IncrementalLeq::new(sys.degree as usize);
    // solver row id → index into the `≤` rows
    let mut origin: Vec<usize> = Vec::new();
    for i in (0..total).filter(|&i| active[i]) {
        solver.add_row(&a[i], c[i].clone());
        origin.push(i);
    }
    let leq = loop {
        match solver.solve() {
            LeqOutcome::Feasible(p) => {
                // integer test: a·num > c·den, with excess (a·num − c·den)/(den·scale)
                let num = solver.point_numerators();
                let den = solver.denominator();
                let most_violated = (0..total)
                    .filter(|&i| !active[i])
                    .filter_map(|i| {
                        let (row, rhs, scale) = &scaled[i];
                        let lhs: BigInt = row.iter().zip(&num).map(|(x, y)| x * y).sum();
                        let excess = lhs - rhs * den;
                        excess
                            .is_positive()
                            .then(|| (Rational::new(excess, scale.clone()), i))
                    })
                    .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
                match most_violated {
                    None => break LeqOutcome::Feasible(p),
                    Some((_, i)) => {
                        active[i] = true;
                        solver.add_row(&a[i], c[i].clone());
                        origin.push(i);
                    }
                }
            }
            LeqOutcome::Infeasible(y_sub) => {
                let mut y = vec![Rational::zero(); total];
                for (&i, v) in origin.iter().zip(y_sub) {
                    y[i] = v;
                }
                break LeqOutcome::Infeasible(y);
            }
        }
    };

    match leq {
        LeqOutcome::Feasible(values) => LpOutcome::Feasible {
            witness: basis.to_monomial(&values),
        },
        LeqOutcome::Infeasible(y) => {
            // fold the two rows of each equality into one signed multiplier
            let mut certificate = Vec::with_capacity(sys.row_count());
            let mut it = y.into_iter();
            for con in sys.constraints() {
                let first = it.next().expect("row count");
                match con {
                    Constraint::Equal { .. } => {
                        let second = it.next().expect("row count");
                        certificate.push(first - second);
                    }
                    _ => certificate.push(first),
                }
            }
            LpOutcome::Infeasible { certificate }
        }
    }
}

/// Common denominator `L` of `v` and the integers `L·v_i`.
fn over_common_denominator(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let l = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints = v.iter().map(|r| r.numer() * (&l / r.denom())).collect();
    (ints, l)
}

/// Re-evaluates every constraint at `p`, in integer arithmetic.
pub fn check_witness(sys: &MomentSystem, p: &[Rational]) -> Result<bool> {
    if p.len() != sys.degree as usize {
        return Err(Error::LengthMismatch {
            expected: sys.degree as usize,
            got: p.len(),
        });
    }
    // p(k) = P(k) / L
    let (coeffs, l) = over_common_denominator(p);
    let value = |k: u64| -> BigInt { sys.moment(k).iter().zip(&coeffs).map(|(m, c)| m * c).sum() };
    Ok(sys.constraints().into_iter().all(|con| {
        let v = value(con.point());
        match con {
            Constraint::Equal { rhs, .. } => v == if rhs { l.clone() } else { BigInt::zero() },
            Constraint::AtLeastZero { .. } => !v.is_negative(),
            Constraint::AtMostOne { .. } => v <= l,
        }
    }))
}

/// Verifies a Farkas certificate: sign conditions, a vanishing combination
/// of the constraint vectors, and a negative combination of right-hand sides.
pub fn check_certificate(sys: &MomentSystem, cert: &[Rational]) -> Result<bool> {
    let cons = sys.constraints();
    if cert.len() != cons.len() {
        return Err(Error::LengthMismatch {
            expected: cons.len(),
            got: cert.len(),
        });
    }
    // scaling every multiplier by the same L > 0 preserves all three conditions
    let (ys, _) = over_common_denominator(cert);
    let mut combo = vec![BigInt::zero(); sys.degree as usize];
    let mut rhs = BigInt::zero();
    for (con, y) in cons.iter().zip(&ys) {
        // each inequality is read in `≤` form: −m·p ≤ 0 and m·p ≤ 1
        let (w, r) = match *con {
            Constraint::Equal { rhs, .. } => (y.clone(), rhs),
            Constraint::AtLeastZero { .. } => {
                if y.is_negative() {
                    return Ok(false);
                }
                (-y, false)
            }
            Constraint::AtMostOne { .. } => {
                if y.is_negative() {
                    return Ok(false);
                }
                (y.clone(), true)
            }
        };
        if w.is_zero() {
            continue;
        }
        for (acc, m) in combo.iter_mut().zip(sys.moment(con.point())) {
            *acc += &w * m;
        }
        if r {
            rhs += y;
        }
    }
    Ok(combo.iter().all(Zero::is_zero) && rhs.is_negative())
}

/// Validates an outcome against its system.
pub fn check_outcome(sys: &MomentSystem, outcome: &LpOutcome) -> Result<bool> {
    match outcome {
        LpOutcome::Feasible { witness } => check_witness(sys, witness),
        LpOutcome::Infeasible { certificate } => check_certificate(sys, certificate),
    }
}

/// `b(d)` together with the verdict of every `(b, τ)` scanned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsBoundEntry {
    pub degree: u32,
    pub bound: u64,
    /// One record per `(b, τ)` with `2 ≤ b ≤ d²`, ordered by `(b, τ)`.
    pub records: Vec<LpRecord>,
}

impl BsBoundEntry {
    /// `b(d)` recomputed from the stored verdicts alone.
    pub fn bound_from_records(&self) -> u64 {
        self.records
            .iter()
            .filter(|r| r.outcome.is_feasible())
            .map(|r| r.b)
            .max()
            .unwrap_or(1)
    }
}

fn scan_candidates(degree: u32) -> Vec<(u64, bool)> {
    let top = (degree as u64).pow(2);
    (2..=top).flat_map(|b| [(b, false), (b, true)]).collect()
}

fn solve_record(degree: u32, b: u64, tau: bool) -> LpRecord {
    let sys = MomentSystem::new(degree, b, tau).expect("valid scan parameters");
    LpRecord {
        degree,
        b,
        tau,
        outcome: solve_feasibility(&sys),
    }
}

/// `b(d)`: the largest `b ∈ [1, d²]` for which the system is feasible for
/// some `τ`. Every `b` is solved; feasibility is not assumed monotone.
/// `b = 1` counts as feasible without a solve.
pub fn bs_upper_bound(degree: u32) -> Result<BsBoundEntry> {
    if degree == 0 {
        return Err(Error::Domain("degree must be ≥ 1".into()));
    }
    let records: Vec<LpRecord> = scan_candidates(degree)
        .into_par_iter()
        .map(|(b, tau)| solve_record(degree, b, tau))
        .collect();
    let mut entry = BsBoundEntry {
        degree,
        bound: 1,
        records,
    };
    entry.bound = entry.bound_from_records();
    Ok(entry)
}

/// The map `d → b(d)` for `d = 1..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsBoundTable {
    entries: BTreeMap<u32, BsBoundEntry>,
}

impl BsBoundTable {
    /// Solves every `(d, b, τ)` with `d ≤ max_degree`, in parallel on the
    /// current rayon pool. The result does not depend on scheduling.
    pub fn compute(max_degree: u32) -> Result<Self> {
        if max_degree == 0 {
            return Err(Error::Domain("max degree must be ≥ 1".into()));
        }
        let jobs: Vec<(u32, u64, bool)> = (1..=max_degree)
            .flat_map(|d| scan_candidates(d).into_iter().map(move |(b, t)| (d, b, t)))
            .collect();
        let records: Vec<LpRecord> = jobs
            .into_par_iter()
            .map(|(d, b, t)| solve_record(d, b, t))
            .collect();
        Ok(Self::from_records(max_degree, records))
    }

    /// Rebuilds the table from stored verdicts (no solver involved).
    pub fn from_records(max_degree: u32, records: Vec<LpRecord>) -> Self {
        let mut entries: BTreeMap<u32, BsBoundEntry> = (1..=max_degree)
            .map(|d| {
                (
                    d,
                    BsBoundEntry {
                        degree: d,
                        bound: 1,
                        records: Vec::new(),
                    },
                )
            })
            .collect();
        for r in records {
            if let Some(e) = entries.get_mut(&r.degree) {
                e.records.push(r);
            }
        }
        for e in entries.values_mut() {
            e.records.sort_by_key(|r| (r.b, r.tau));
            e.bound = e.bound_from_records();
        }
        Self { entries }
    }

    /// Rebuilds the table from stored verdicts after re-checking every one.
    ///
    /// The records must cover every `(b, τ)` with `2 ≤ b ≤ d²` for each
    /// `d = 1..=max`, where `max` is the largest degree present; any gap,
    /// duplicate or failed check is an error.
    pub fn from_verified_records(records: Vec<LpRecord>) -> Result<Self> {
        let max_degree = records.iter().map(|r| r.degree).max().unwrap_or(0);
        if max_degree == 0 {
            return Err(Error::Input("no LP records".into()));
        }
        let mut keys: Vec<(u32, u64, bool)> =
            records.iter().map(|r| (r.degree, r.b, r.tau)).collect();
        keys.sort_unstable();
        let expected: Vec<(u32, u64, bool)> = (1..=max_degree)
            .flat_map(|d| scan_candidates(d).into_iter().map(move |(b, t)| (d, b, t)))
            .collect();
        if keys != expected {
            return Err(Error::Input(format!(
                "LP records do not cover exactly the scan for d = 1..={max_degree}"
            )));
        }
        let checks: Vec<bool> = records
            .par_iter()
            .map(LpRecord::verify)
            .collect::<Result<_>>()?;
        if let Some(i) = checks.iter().position(|ok| !ok) {
            let r = &records[i];
            return Err(Error::Input(format!(
                "LP record d={} b={} tau={} fails verification",
                r.degree, r.b, r.tau as u8
            )));
        }
        Ok(Self::from_records(max_degree, records))
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    pub fn bound(&self, degree: u32) -> Option<u64> {
        self.entries.get(&degree).map(|e| e.bound)
    }

    pub fn entry(&self, degree: u32) -> Option<&BsBoundEntry> {
        self.entries.get(&degree)
    }

    pub fn entries(&self) -> impl Iterator<Item = &BsBoundEntry> {
        self.entries.values()
    }

    pub fn bounds(&self) -> Vec<(u32, u64)> {
        self.entries.values().map(|e| (e.degree, e.bound)).collect()
    }

    pub fn records(&self) -> impl Iterator<Item = &LpRecord> {
        self.entries.values().flat_map(|e| e.records.iter())
    }
}

/// `p(k)` = average of `g` over inputs of Hamming weight `k`, for `k = 0..=n`.
pub fn symmetrize_profile(g: &BooleanFunction) -> Vec<Rational> {
    let n = g.arity();
    let mut ones = vec![0u64; n + 1];
    let mut total = vec![0u64; n + 1];
    for x in 0..g.table_len() as Mask {
        let w = popcount(x) as usize;
        total[w] += 1;
        ones[w] += g.value(x) as u64;
    }
    ones.iter()
        .zip(&total)
        .map(|(&o, &t)| Rational::new(BigInt::from(o), BigInt::from(t)))
        .collect()
}

/// Collapses `f` onto its sensitive blocks at `x`:
/// `g(y) = f(x ⊕ ⋃_{j: y_j = 1} B_j) ⊕ f(x)`, so `g(0) = 0` and `g(e_j) = 1`.
pub fn fact8_reduce(f: &BooleanFunction, blocks: &BlockCollection) -> Result<BooleanFunction> {
    if !blocks.validate(f) {
        return Err(Error::Input(
            "blocks are not disjoint sensitive blocks at the base input".into(),
        ));
    }
    let x = blocks.base_input;
    let fx = f.value(x);
    Ok(BooleanFunction::from_fn(blocks.len(), |y| {
        let flip = blocks
            .blocks
            .iter()
            .enumerate()
            .filter(|(j, _)| y >> j & 1 == 1)
            .fold(0, |acc, (_, b)| acc | b);
        f.value(x ^ flip) != fx
    }))
}

/// `b(d)/d²` for every entry and the maximum over `d ≥ 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C0Ratios {
    pub ratios: Vec<(u32, Rational)>,
    pub max_from_four: Option<(u32, Rational)>,
}

pub fn c0_ratios(bounds: &[(u32, u64)]) -> Result<C0Ratios> {
    if bounds.is_empty() {
        return Err(Error::Domain("empty block-sensitivity table".into()));
    }
    let ratios: Vec<(u32, Rational)> = bounds
        .iter()
        .map(|&(d, b)| {
            (
                d,
                Rational::new(BigInt::from(b), BigInt::from(d as u64 * d as u64)),
            )
        })
        .collect();
    let max_from_four = ratios.iter().filter(|(d, _)| *d >= 4).fold(
        None::<(u32, Rational)>,
        |acc, (d, r)| match acc {
            Some((_, ref best)) if best >= r => acc,
            _ => Some((*d, r.clone())),
        },
    );
    Ok(C0Ratios {
        ratios,
        max_from_four,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::block_sensitivity_at;
    use crate::ratio::{frac, int};

    #[test]
    fn build_examples() {
        let s = build_system(2, 3, false).unwrap();
        assert_eq!(
            s.constraints(),
            vec![
                Constraint::Equal {
                    point: 1,
                    rhs: true
                },
                Constraint::AtLeastZero { point: 2 },
                Constraint::AtMostOne { point: 2 },
                Constraint::Equal {
                    point: 3,
                    rhs: false
                },
            ]
        );
        assert_eq!(s.moment(2), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(s.moment(3), vec![BigInt::from(3), BigInt::from(9)]);

        let s = build_system(1, 2, true).unwrap();
        assert_eq!(
            s.constraints(),
            vec![
                Constraint::Equal {
                    point: 1,
                    rhs: true
                },
                Constraint::Equal {
                    point: 2,
                    rhs: true
                },
            ]
        );
        assert_eq!(s.moment(2), vec![BigInt::from(2)]);

        let s = build_system(3, 4, true).unwrap();
        assert_eq!(s.row_count(), 6);
        assert_eq!(s.constraints().len(), 6);
        assert_eq!(s.moment(4).len(), 3);
        assert_eq!(s.moment(4)[2], BigInt::from(64));

        assert!(build_system(0, 3, false).is_err());
        assert!(build_system(2, 1, false).is_err());
    }

    #[test]
    fn moments_stay_exact() {
        let s = build_system(14, 114, true).unwrap();
        let expect: BigInt = BigInt::from(114u64).pow(14);
        assert_eq!(s.moment(114)[13], expect);
    }

    #[test]
    fn solve_examples() {
        let s = build_system(2, 3, false).unwrap();
        let out = solve_feasibility(&s);
        assert!(out.is_feasible());
        assert!(check_outcome(&s, &out).unwrap());

        for tau in [false, true] {
            let s = build_system(1, 2, tau).unwrap();
            let out = solve_feasibility(&s);
            assert!(!out.is_feasible());
            assert!(check_outcome(&s, &out).unwrap());

            let s = build_system(2, 4, tau).unwrap();
            let out = solve_feasibility(&s);
            assert!(!out.is_feasible(), "tau={tau}");
            assert!(check_outcome(&s, &out).unwrap());
        }
    }

    #[test]
    fn witness_checks() {
        let s = build_system(2, 3, false).unwrap();
        assert!(check_witness(&s, &[frac(3, 2), frac(-1, 2)]).unwrap());
        assert!(!check_witness(&s, &[int(1), int(0)]).unwrap());
        assert!(check_witness(&s, &[int(1)]).is_err());
    }

    #[test]
    fn certificate_checks() {
        let s = build_system(1, 2, true).unwrap();
        let LpOutcome::Infeasible { certificate } = solve_feasibility(&s) else {
            panic!("expected infeasible");
        };
        assert!(check_certificate(&s, &certificate).unwrap());
        // −2·(p = 1) + 1·(2p = 1) combines to 0 = −1
        assert!(check_certificate(&s, &[int(-2), int(1)]).unwrap());
        assert!(!check_certificate(&s, &[int(2), int(-1)]).unwrap());
        let zero = vec![int(0); certificate.len()];
        assert!(!check_certificate(&s, &zero).unwrap());
        assert!(check_certificate(&s, &[int(1)]).is_err());
    }

    #[test]
    fn negative_inequality_multiplier_rejected() {
        let s = build_system(2, 4, false).unwrap();
        let LpOutcome::Infeasible { mut certificate } = solve_feasibility(&s) else {
            panic!("expected infeasible");
        };
        assert!(check_certificate(&s, &certificate).unwrap());
        certificate[1] = int(-1);
        assert!(!check_certificate(&s, &certificate).unwrap());
    }

    #[test]
    fn small_degree_bounds() {
        for d in 1..=4u32 {
            let e = bs_upper_bound(d).unwrap();
            assert_eq!(e.bound, (d * (d + 1) / 2) as u64, "d={d}");
            for r in &e.records {
                let sys = MomentSystem::new(r.degree, r.b, r.tau).unwrap();
                assert!(check_outcome(&sys, &r.outcome).unwrap());
            }
        }
    }

    #[test]
    fn verified_reload() {
        let table = BsBoundTable::compute(4).unwrap();
        let records: Vec<LpRecord> = table.records().cloned().collect();
        let back = BsBoundTable::from_verified_records(records.clone()).unwrap();
        assert_eq!(back, table);

        // a missing verdict leaves the scan incomplete
        let mut gap = records.clone();
        gap.pop();
        assert!(BsBoundTable::from_verified_records(gap).is_err());

        // a forged verdict: claim (2, 4, 0) feasible
        let mut forged = records;
        let i = forged
            .iter()
            .position(|r| (r.degree, r.b, r.tau) == (2, 4, false))
            .unwrap();
        forged[i].outcome = LpOutcome::Feasible {
            witness: vec![int(1), int(0)],
        };
        assert!(BsBoundTable::from_verified_records(forged).is_err());
        assert!(BsBoundTable::from_verified_records(Vec::new()).is_err());
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            symmetrize_profile(&BooleanFunction::or(2)),
            vec![int(0), int(1), int(1)]
        );
        assert_eq!(
            symmetrize_profile(&BooleanFunction::parity(3)),
            vec![int(0), int(1), int(0), int(1)]
        );
        assert_eq!(
            symmetrize_profile(&BooleanFunction::majority(3)),
            vec![int(0), int(0), int(1), int(1)]
        );
    }

    #[test]
    fn fact8_examples() {
        let and2 = BooleanFunction::and(2);
        let blocks = BlockCollection {
            base_input: 0b11,
            blocks: vec![0b01, 0b10],
        };
        let g = fact8_reduce(&and2, &blocks).unwrap();
        // g(0,0)=0, g(e_j)=1, g(1,1) = f(0,0) ⊕ f(1,1) = 1
        assert_eq!(g, BooleanFunction::or(2));

        let par = BooleanFunction::parity(2);
        let blocks = BlockCollection {
            base_input: 0,
            blocks: vec![0b01, 0b10],
        };
        assert_eq!(fact8_reduce(&par, &blocks).unwrap(), par);

        let bad = BlockCollection {
            base_input: 0,
            blocks: vec![0b01, 0b01],
        };
        assert!(fact8_reduce(&par, &bad).is_err());
    }

    #[test]
    fn fact8_profiles_start_zero_one() {
        for word in 0u64..256 {
            let f = BooleanFunction::from_word(3, word).unwrap();
            for x in 0..8 {
                let c = block_sensitivity_at(&f, x).unwrap();
                if c.is_empty() {
                    continue;
                }
                let g = fact8_reduce(&f, &c).unwrap();
                let p = symmetrize_profile(&g);
                assert_eq!(p[0], int(0));
                assert_eq!(p[1], int(1));
            }
        }
    }

    #[test]
    fn c0_examples() {
        let r = c0_ratios(&[(1, 1), (7, 29), (14, 114)]).unwrap();
        assert_eq!(r.ratios[0].1, int(1));
        assert_eq!(r.ratios[1].1, frac(29, 49));
        assert_eq!(r.ratios[2].1, frac(114, 196));
        assert_eq!(r.max_from_four, Some((7, frac(29, 49))));
        assert!(c0_ratios(&[]).is_err());
    }
}
