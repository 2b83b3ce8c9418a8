//! Brute-force verification of the inequalities behind the bounds.
//!
//! Every check is a named [`Check`] looked up through a [`CheckRegistry`],
//! so suites can run any subset. Each function's measures are computed once
//! into a [`Profile`] that all checks share. A check passes *vacuously* when
//! its hypothesis cannot apply (for instance, fewer than two relevant
//! coordinates); vacuous passes are tallied separately.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::{mask_coords, popcount, Assignment, BooleanFunction, FourierCoeffs, Mask};
use crate::error::{Error, Result};
use crate::lp::BsBoundTable;
use crate::measures::{
    block_sensitivity, influence, max_disjoint_top_monomials_from, relevant, s_indices,
    sensitivity, total_influence, var_degrees, var_degrees_from, w_from_degrees, TopMonomials,
};
use crate::ratio::{int, pow2_neg, Rational};
use crate::wrec::WBoundTable;

/// Largest arity enumerated exhaustively (`2^16` functions).
pub const MAX_SUITE_ARITY: usize = 4;

/// Largest composed arity accepted by the tensorization check.
pub const MAX_TENSOR_ARITY: usize = 9;

/// Every function of arity `n`, in truth-table order (`f` as a number).
pub fn enumerate_functions(n: usize) -> Result<impl Iterator<Item = BooleanFunction>> {
    if n > MAX_SUITE_ARITY {
        return Err(Error::ArityLimit {
            arity: n,
            limit: MAX_SUITE_ARITY,
            what: "exhaustive enumeration",
        });
    }
    let count = 1u64 << (1u32 << n);
    Ok((0..count).map(move |w| BooleanFunction::from_word(n, w).expect("arity ≤ 6")))
}

/// Measures of one function, shared by every check.
#[derive(Debug, Clone)]
pub struct Profile {
    pub f: BooleanFunction,
    pub degree: u32,
    pub var_degrees: Vec<Option<u32>>,
    pub relevant: Mask,
    pub bs: u32,
    pub sensitivity: u32,
    pub s_indices: Vec<Option<u32>>,
    pub w: Rational,
    pub top: TopMonomials,
    pub fourier: FourierCoeffs,
}

impl Profile {
    pub fn new(f: &BooleanFunction) -> Result<Self> {
        let coeffs = f.mobius_expand();
        let var_degrees = var_degrees_from(&coeffs);
        Ok(Self {
            f: f.clone(),
            degree: coeffs.degree(),
            w: w_from_degrees(&var_degrees),
            var_degrees,
            relevant: relevant(f),
            bs: block_sensitivity(f)?,
            sensitivity: sensitivity(f),
            s_indices: s_indices(f),
            top: max_disjoint_top_monomials_from(&coeffs),
            fourier: f.fourier_expand(),
        })
    }

    pub fn relevant_count(&self) -> u32 {
        popcount(self.relevant)
    }
}

/// Outcome of one check on one function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The hypothesis does not apply; counted as a pass.
    Vacuous,
    Fail(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !matches!(self, Self::Fail(_))
    }

    fn from_failures(failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Self::Pass
        } else {
            Self::Fail(failures.join("; "))
        }
    }
}

/// Reference tables the consistency checks compare against.
#[derive(Debug, Clone)]
pub struct SuiteContext {
    /// `b(d)` for every degree that can occur.
    pub bs_table: Arc<BsBoundTable>,
    /// One `W` table per cap strategy.
    pub w_tables: Vec<Arc<WBoundTable>>,
}

pub trait Check: Send + Sync + fmt::Debug {
    fn name(&self) -> &'static str;
    fn run(&self, p: &Profile, ctx: &SuiteContext) -> Verdict;
}

pub type SharedCheck = Arc<dyn Check>;

/// Named checks in registration order.
#[derive(Debug, Clone, Default)]
pub struct CheckRegistry {
    checks: Vec<SharedCheck>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn register(&mut self, check: SharedCheck) -> Result<()> {
        if self.checks.iter().any(|c| c.name() == check.name()) {
            return Err(Error::Input(format!(
                "check `{}` is already registered",
                check.name()
            )));
        }
        self.checks.push(check);
        Ok(())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<SharedCheck> {
        self.checks
            .iter()
            .find(|c| c.name() == name)
            .cloned()
            .ok_or_else(|| Error::UnknownName {
                kind: "check",
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    /// A registry holding only `names`, in the given order.
    pub fn select(&self, names: &[&str]) -> Result<Self> {
        let mut out = Self::empty();
        for n in names {
            out.register(self.get(n)?)?;
        }
        Ok(out)
    }

    pub fn checks(&self) -> &[SharedCheck] {
        &self.checks
    }
}

impl CheckRegistry {
    /// Every per-function check of the suite.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        let all: Vec<SharedCheck> = vec![
            Arc::new(InfluenceLowerBound),
            Arc::new(DegreeRecursion),
            Arc::new(TopBlockSplit),
            Arc::new(MonomialRestriction),
            Arc::new(SensitivityRecursion),
            Arc::new(BsWithinLpBound),
            Arc::new(WithinWTable),
            Arc::new(RelevantByDegBsS),
            Arc::new(RelevantByDegree),
            Arc::new(BsAtMostDegSquared),
            Arc::new(InfluenceAtMostDegree),
            Arc::new(FourierInfluence),
            Arc::new(Parseval),
            Arc::new(WAtMostHalfInfluence),
            Arc::new(EllAtMostBs),
        ];
        for c in all {
            r.register(c).expect("distinct names");
        }
        r
    }
}

fn show(r: &Rational) -> String {
    crate::ratio::to_fraction_string(r)
}

/// Index of coordinate `i` after coordinate `j` is fixed and removed.
fn shifted(i: usize, j: usize) -> usize {
    if i > j {
        i - 1
    } else {
        i
    }
}

fn fix(f: &BooleanFunction, j: usize, value: bool) -> BooleanFunction {
    f.restrict(&Assignment::new(&[(j, value)]).expect("single coordinate"))
        .expect("coordinate in range")
}

/// `2^-(k+1)`, or 0 when the coordinate is irrelevant in the restriction.
fn half_term(k: Option<u32>) -> Rational {
    k.map_or_else(|| int(0), |k| pow2_neg(k + 1))
}

/// `2^-m(f) ≤ 2^-m(f_0)-1 + 2^-m(f_1)-1` for every ordered pair of distinct
/// relevant `i, j`, where `f_b` fixes `x_j = b`.
fn pair_recursion(
    p: &Profile,
    m: &[Option<u32>],
    measure: fn(&BooleanFunction) -> Vec<Option<u32>>,
) -> Verdict {
    let rel = mask_coords(p.relevant);
    if rel.len() < 2 {
        return Verdict::Vacuous;
    }
    let mut failures = Vec::new();
    for &j in &rel {
        let m0 = measure(&fix(&p.f, j, false));
        let m1 = measure(&fix(&p.f, j, true));
        for &i in &rel {
            if i == j {
                continue;
            }
            let lhs = pow2_neg(m[i].expect("relevant"));
            let k = shifted(i, j);
            let rhs = half_term(m0[k]) + half_term(m1[k]);
            if lhs > rhs {
                failures.push(format!("i={i} j={j}: {} > {}", show(&lhs), show(&rhs)));
            }
        }
    }
    Verdict::from_failures(failures)
}

#[derive(Debug)]
struct InfluenceLowerBound;

impl Check for InfluenceLowerBound {
    fn name(&self) -> &'static str {
        "influence-lower-bound"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        if p.relevant == 0 {
            return Verdict::Vacuous;
        }
        let failures = mask_coords(p.relevant)
            .into_iter()
            .filter_map(|i| {
                let inf = influence(&p.f, i).expect("coordinate in range");
                let bound = pow2_neg(p.var_degrees[i].expect("relevant")) * int(2);
                (inf < bound).then(|| format!("i={i}: Inf={} < {}", show(&inf), show(&bound)))
            })
            .collect();
        Verdict::from_failures(failures)
    }
}

#[derive(Debug)]
struct DegreeRecursion;

impl Check for DegreeRecursion {
    fn name(&self) -> &'static str {
        "degree-recursion"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        pair_recursion(p, &p.var_degrees, var_degrees)
    }
}

#[derive(Debug)]
struct SensitivityRecursion;

impl Check for SensitivityRecursion {
    fn name(&self) -> &'static str {
        "s-recursion"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        pair_recursion(p, &p.s_indices, s_indices)
    }
}

/// `W(f) ≤ |H|·2^-d + 2^-|H| Σ_α W(f_α)` for `H` of full-degree coordinates.
fn top_block_split(f: &BooleanFunction, h: Mask, degree: u32, w: &Rational) -> Option<String> {
    let size = popcount(h);
    let mut sum = int(0);
    for a in 0..(1u32 << size) {
        let fa = f
            .restrict(&Assignment::nth_on(h, a))
            .expect("support in range");
        sum += w_from_degrees(&var_degrees(&fa));
    }
    let rhs = int(size as i64) * pow2_neg(degree) + sum * pow2_neg(size);
    (*w > rhs).then(|| format!("H={:?}: W={} > {}", mask_coords(h), show(w), show(&rhs)))
}

#[derive(Debug)]
struct TopBlockSplit;

impl Check for TopBlockSplit {
    fn name(&self) -> &'static str {
        "top-block-split"
    }

    /// Every nonempty `H` made of coordinates with `deg_i(f) = deg(f)`.
    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        let full: Mask = p
            .var_degrees
            .iter()
            .enumerate()
            .filter(|(_, d)| **d == Some(p.degree))
            .fold(0, |acc, (i, _)| acc | 1 << i);
        if p.degree == 0 || full == 0 {
            return Verdict::Vacuous;
        }
        let mut failures = Vec::new();
        let mut h = full;
        while h != 0 {
            failures.extend(top_block_split(&p.f, h, p.degree, &p.w));
            h = (h - 1) & full;
        }
        Verdict::from_failures(failures)
    }
}

#[derive(Debug)]
struct MonomialRestriction;

impl Check for MonomialRestriction {
    fn name(&self) -> &'static str {
        "monomial-restriction"
    }

    /// For every nonempty sub-collection `C` of the maximum disjoint top
    /// monomials and every `α` on `∪C`: `bs(f_α) ≤ bs(f) − |C|`.
    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        let mons = &p.top.maximum;
        if p.degree == 0 || mons.is_empty() {
            return Verdict::Vacuous;
        }
        let mut failures = Vec::new();
        for pick in 1u32..(1 << mons.len()) {
            let chosen: Vec<Mask> = mask_coords(pick).into_iter().map(|k| mons[k]).collect();
            let h = chosen.iter().fold(0, |acc, m| acc | m);
            let limit = p.bs as i64 - chosen.len() as i64;
            for a in 0..(1u32 << popcount(h)) {
                let fa =
                    p.f.restrict(&Assignment::nth_on(h, a))
                        .expect("support in range");
                let bs = block_sensitivity(&fa).expect("arity within limit") as i64;
                if bs > limit {
                    failures.push(format!(
                        "collection {chosen:?}, alpha #{a}: bs(f_alpha)={bs} > {limit}"
                    ));
                }
            }
        }
        Verdict::from_failures(failures)
    }
}

#[derive(Debug)]
struct BsWithinLpBound;

impl Check for BsWithinLpBound {
    fn name(&self) -> &'static str {
        "bs-within-lp-bound"
    }

    fn run(&self, p: &Profile, ctx: &SuiteContext) -> Verdict {
        if p.degree == 0 {
            return Verdict::Vacuous;
        }
        match ctx.bs_table.bound(p.degree) {
            None => Verdict::Fail(format!("no LP bound for degree {}", p.degree)),
            Some(b) if p.bs as u64 > b => {
                Verdict::Fail(format!("bs={} > b({})={b}", p.bs, p.degree))
            }
            Some(_) => Verdict::Pass,
        }
    }
}

#[derive(Debug)]
struct WithinWTable;

impl Check for WithinWTable {
    fn name(&self) -> &'static str {
        "w-within-table"
    }

    /// `W(f) ≤ W[min(bs(f), cap(deg f))][deg f]` in every supplied table.
    fn run(&self, p: &Profile, ctx: &SuiteContext) -> Verdict {
        if p.degree == 0 {
            return Verdict::Vacuous;
        }
        let failures = ctx
            .w_tables
            .iter()
            .filter_map(|t| match t.lookup_clamped(p.bs as u64, p.degree) {
                None => Some(format!(
                    "{} table too shallow for degree {}",
                    t.cap_mode(),
                    p.degree
                )),
                Some(bound) if p.w > bound => Some(format!(
                    "{}: W={} > W[{}][{}]={}",
                    t.cap_mode(),
                    show(&p.w),
                    (p.bs as u64).min(t.cap(p.degree).unwrap_or(0)),
                    p.degree,
                    show(&bound)
                )),
                Some(_) => None,
            })
            .collect();
        Verdict::from_failures(failures)
    }
}

#[derive(Debug)]
struct RelevantByDegBsS;

impl Check for RelevantByDegBsS {
    fn name(&self) -> &'static str {
        "relevant-by-deg-bs-s"
    }

    /// `|R(f)| ≤ deg(f)·bs(f)·4^s(f)`.
    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        if p.degree == 0 {
            return Verdict::Vacuous;
        }
        let bound = (p.degree as u128) * (p.bs as u128) * 4u128.pow(p.sensitivity);
        if p.relevant_count() as u128 > bound {
            Verdict::Fail(format!("|R|={} > {bound}", p.relevant_count()))
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Debug)]
struct RelevantByDegree;

impl Check for RelevantByDegree {
    fn name(&self) -> &'static str {
        "relevant-by-degree"
    }

    /// `|R(f)| ≤ (d/2)·2^d`.
    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        if p.degree == 0 {
            return Verdict::Vacuous;
        }
        let twice_bound = (p.degree as u64) << p.degree;
        if 2 * p.relevant_count() as u64 > twice_bound {
            Verdict::Fail(format!("|R|={} > {}/2", p.relevant_count(), twice_bound))
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Debug)]
struct BsAtMostDegSquared;

impl Check for BsAtMostDegSquared {
    fn name(&self) -> &'static str {
        "bs-at-most-deg-squared"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        if p.bs > p.degree * p.degree {
            Verdict::Fail(format!("bs={} > deg²={}", p.bs, p.degree * p.degree))
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Debug)]
struct InfluenceAtMostDegree;

impl Check for InfluenceAtMostDegree {
    fn name(&self) -> &'static str {
        "influence-at-most-degree"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        let inf = total_influence(&p.f);
        if inf > int(p.degree as i64) {
            Verdict::Fail(format!("Inf={} > deg={}", show(&inf), p.degree))
        } else {
            Verdict::Pass
        }
    }
}

/// `Inf[f] = Σ_S |S|·F̂(S)²` for the ±1 version `F = 1 − 2f`, whose
/// nonempty coefficients are `−2f̂(S)`.
#[derive(Debug)]
struct FourierInfluence;

impl Check for FourierInfluence {
    fn name(&self) -> &'static str {
        "fourier-influence"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        let inf = total_influence(&p.f);
        let spectral = p.fourier.weighted_square_sum(|k| 4 * k as i64);
        if inf != spectral {
            Verdict::Fail(format!(
                "Inf={} but Σ|S|·(2f̂)²={}",
                show(&inf),
                show(&spectral)
            ))
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Debug)]
struct Parseval;

impl Check for Parseval {
    fn name(&self) -> &'static str {
        "parseval"
    }

    /// `Σ_S f̂(S)² = E[f²] = Pr[f = 1]`, and the spectral degree equals the
    /// multilinear degree.
    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        let mean = Rational::new(p.f.count_ones().into(), (p.f.table_len() as u64).into());
        let mut failures = Vec::new();
        let sq = p.fourier.square_sum();
        if sq != mean {
            failures.push(format!("Σf̂²={} ≠ E[f]={}", show(&sq), show(&mean)));
        }
        if p.fourier.degree() != p.degree {
            failures.push(format!(
                "Fourier degree {} ≠ degree {}",
                p.fourier.degree(),
                p.degree
            ));
        }
        Verdict::from_failures(failures)
    }
}

#[derive(Debug)]
struct WAtMostHalfInfluence;

impl Check for WAtMostHalfInfluence {
    fn name(&self) -> &'static str {
        "w-at-most-half-influence"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        let half = total_influence(&p.f) / int(2);
        if p.w > half {
            Verdict::Fail(format!("W={} > Inf/2={}", show(&p.w), show(&half)))
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Debug)]
struct EllAtMostBs;

impl Check for EllAtMostBs {
    fn name(&self) -> &'static str {
        "ell-at-most-bs"
    }

    fn run(&self, p: &Profile, _: &SuiteContext) -> Verdict {
        if p.top.ell() as u32 > p.bs {
            Verdict::Fail(format!("ℓ={} > bs={}", p.top.ell(), p.bs))
        } else {
            Verdict::Pass
        }
    }
}

// ---------------------------------------------------------------------------
// Single-function entry points.

fn standalone(check: &dyn Check, f: &BooleanFunction) -> bool {
    let ctx = SuiteContext {
        bs_table: Arc::new(BsBoundTable::from_records(1, Vec::new())),
        w_tables: Vec::new(),
    };
    Profile::new(f).is_ok_and(|p| check.run(&p, &ctx).passed())
}

/// `Inf_i[f] ≥ 2^(1−deg_i f)` for every relevant `i`.
pub fn verify_influence_bound(f: &BooleanFunction) -> bool {
    standalone(&InfluenceLowerBound, f)
}

/// The per-variable degree recursion over every ordered pair of relevant
/// coordinates.
pub fn verify_fact5(f: &BooleanFunction) -> bool {
    standalone(&DegreeRecursion, f)
}

/// The same recursion with `s_i` in place of `deg_i`.
pub fn verify_sclaim(f: &BooleanFunction) -> bool {
    standalone(&SensitivityRecursion, f)
}

/// The top-block split of `W(f)` for one `H`; errors when some `i ∈ H` has
/// `deg_i(f) < deg(f)`.
pub fn verify_eq4(f: &BooleanFunction, h: &[usize]) -> Result<bool> {
    let mask = crate::boolfn::coords_mask(h, f.arity())?;
    let degs = var_degrees(f);
    let degree = degs.iter().flatten().copied().max().unwrap_or(0);
    if let Some(&i) = h.iter().find(|&&i| degs[i] != Some(degree)) {
        return Err(Error::Domain(format!(
            "coordinate {i} does not have full degree {degree}"
        )));
    }
    Ok(top_block_split(f, mask, degree, &w_from_degrees(&degs)).is_none())
}

/// `bs(f_α) ≤ bs(f) − |C|` for every sub-collection `C` of the maximum
/// disjoint top monomials.
pub fn verify_prop4(f: &BooleanFunction) -> bool {
    standalone(&MonomialRestriction, f)
}

/// Table soundness and relevant-variable counts: `W(f)` against `wtable`,
/// `bs(f) ≤ b(deg f)`, `|R| ≤ deg·bs·4^s` and `|R| ≤ (d/2)·2^d`.
pub fn verify_consistency(
    f: &BooleanFunction,
    wtable: &WBoundTable,
    bstable: &BsBoundTable,
) -> Result<bool> {
    let p = Profile::new(f)?;
    let ctx = SuiteContext {
        bs_table: Arc::new(bstable.clone()),
        w_tables: vec![Arc::new(wtable.clone())],
    };
    let checks: [&dyn Check; 4] = [
        &WithinWTable,
        &BsWithinLpBound,
        &RelevantByDegBsS,
        &RelevantByDegree,
    ];
    Ok(checks.iter().all(|c| c.run(&p, &ctx).passed()))
}

/// `h = f ∘ g` has `deg h = deg f · deg g`, and when both are nonconstant
/// `bs h ≥ max(bs f, bs g)`.
pub fn tensorization_verdict(f: &BooleanFunction, g: &BooleanFunction) -> Result<Verdict> {
    let arity = f.arity() * g.arity();
    if arity > MAX_TENSOR_ARITY {
        return Err(Error::ArityLimit {
            arity,
            limit: MAX_TENSOR_ARITY,
            what: "tensorization check",
        });
    }
    let h = BooleanFunction::compose_blockwise(f, g)?;
    let (df, dg, dh) = (degree_of(f), degree_of(g), degree_of(&h));
    let mut failures = Vec::new();
    if dh != df * dg {
        failures.push(format!("deg(h)={dh} ≠ {df}·{dg}"));
    }
    if df > 0 && dg > 0 {
        let (bf, bg, bh) = (
            block_sensitivity(f)?,
            block_sensitivity(g)?,
            block_sensitivity(&h)?,
        );
        if bh < bf.max(bg) {
            failures.push(format!("bs(h)={bh} < max({bf}, {bg})"));
        }
    }
    Ok(Verdict::from_failures(failures))
}

pub fn verify_tensorization(f: &BooleanFunction, g: &BooleanFunction) -> Result<bool> {
    Ok(tensorization_verdict(f, g)?.passed())
}

fn degree_of(f: &BooleanFunction) -> u32 {
    f.mobius_expand().degree()
}

// ---------------------------------------------------------------------------
// Suite.

/// Passes per check; `passed` includes the vacuous ones.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub vacuous: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Truth table in the `n:bits` text form; composed pairs as `f ∘ g`.
    pub function: String,
    pub check: String,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub arity: usize,
    pub functions_checked: u64,
    /// Ordered pairs `(f, g)` of arity-2 functions composed for the
    /// tensorization check.
    pub pairs_checked: u64,
    pub checks: BTreeMap<String, Tally>,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, name: &str, function: impl FnOnce() -> String, v: Verdict) {
        let t = self.checks.entry(name.to_string()).or_default();
        match v {
            Verdict::Pass => t.passed += 1,
            Verdict::Vacuous => {
                t.passed += 1;
                t.vacuous += 1;
            }
            Verdict::Fail(details) => {
                t.failed += 1;
                self.counterexamples.push(Counterexample {
                    function: function(),
                    check: name.to_string(),
                    details,
                });
            }
        }
    }
}

pub const TENSORIZATION: &str = "tensorization";

/// Runs `checks` on every arity-`n` function, plus the tensorization check on
/// every ordered pair of arity-2 functions. Work is spread over the current
/// rayon pool; the report does not depend on scheduling.
pub fn run_suite_with(n: usize, checks: &CheckRegistry, ctx: &SuiteContext) -> Result<SuiteReport> {
    let functions: Vec<BooleanFunction> = enumerate_functions(n)?.collect();
    let verdicts: Vec<Vec<Verdict>> = functions
        .par_iter()
        .map(|f| {
            let p = Profile::new(f)?;
            Ok(checks.checks().iter().map(|c| c.run(&p, ctx)).collect())
        })
        .collect::<Result<_>>()?;

    let mut report = SuiteReport {
        arity: n,
        functions_checked: functions.len() as u64,
        pairs_checked: 0,
        checks: checks
            .names()
            .into_iter()
            .map(|name| (name.to_string(), Tally::default()))
            .collect(),
        counterexamples: Vec::new(),
    };
    for (f, vs) in functions.iter().zip(verdicts) {
        for (c, v) in checks.checks().iter().zip(vs) {
            report.record(c.name(), || f.to_string(), v);
        }
    }

    let pairs: Vec<(BooleanFunction, BooleanFunction)> = enumerate_functions(2)?
        .flat_map(|f| {
            enumerate_functions(2)
                .expect("arity 2")
                .map(move |g| (f.clone(), g))
        })
        .collect();
    let verdicts: Vec<Verdict> = pairs
        .par_iter()
        .map(|(f, g)| tensorization_verdict(f, g))
        .collect::<Result<_>>()?;
    report.pairs_checked = pairs.len() as u64;
    report
        .checks
        .insert(TENSORIZATION.to_string(), Tally::default());
    for ((f, g), v) in pairs.iter().zip(verdicts) {
        report.record(TENSORIZATION, || format!("{f} ∘ {g}"), v);
    }
    Ok(report)
}

/// The standard suite against the given tables.
pub fn run_suite(n: usize, wtables: &[WBoundTable], bstable: &BsBoundTable) -> Result<SuiteReport> {
    let ctx = SuiteContext {
        bs_table: Arc::new(bstable.clone()),
        w_tables: wtables.iter().cloned().map(Arc::new).collect(),
    };
    run_suite_with(n, &CheckRegistry::standard(), &ctx)
}
