//! Exact complexity measures: degree, per-variable degree, influence,
//! sensitivity, block sensitivity, the `W` and `S` measures, and disjoint
//! top-degree monomial collections.
//!
//! `deg_i` and `s_i` are only defined on relevant coordinates; irrelevant
//! ones come back as `None` and are skipped by the `W` and `S` sums.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::{mask_coords, popcount, BooleanFunction, Mask, MultilinearCoeffs};
use crate::error::{Error, Result};
use crate::ratio::{pow2_neg, Rational};

/// Largest arity for which block sensitivity (and the full report) is computed.
pub const MAX_BS_ARITY: usize = 12;

fn check_coord(f: &BooleanFunction, i: usize) -> Result<()> {
    if i >= f.arity() {
        return Err(Error::Coordinate {
            coord: i,
            arity: f.arity(),
        });
    }
    Ok(())
}

pub fn degree(f: &BooleanFunction) -> u32 {
    f.mobius_expand().degree()
}

/// `deg_i` for every coordinate, read off the multilinear coefficients.
pub fn var_degrees_from(coeffs: &MultilinearCoeffs) -> Vec<Option<u32>> {
    let mut out = vec![None; coeffs.arity()];
    for (s, _) in coeffs.nonzero() {
        let size = popcount(s);
        for i in mask_coords(s) {
            out[i] = Some(out[i].map_or(size, |d: u32| d.max(size)));
        }
    }
    out
}

pub fn var_degrees(f: &BooleanFunction) -> Vec<Option<u32>> {
    var_degrees_from(&f.mobius_expand())
}

/// `deg_i(f)`, or `None` when coordinate `i` is irrelevant.
pub fn degree_in_var(f: &BooleanFunction, i: usize) -> Result<Option<u32>> {
    check_coord(f, i)?;
    Ok(var_degrees(f)[i])
}

/// Number of inputs `x` with `f(x) ≠ f(x^i)`.
pub fn influence_count(f: &BooleanFunction, i: usize) -> u64 {
    let bit = 1 << i;
    (0..f.table_len() as Mask)
        .filter(|&x| f.value(x) != f.value(x ^ bit))
        .count() as u64
}

fn over_cube(count: u64, arity: usize) -> Rational {
    Rational::new(BigInt::from(count), BigInt::from(1u64) << arity)
}

pub fn influence(f: &BooleanFunction, i: usize) -> Result<Rational> {
    check_coord(f, i)?;
    Ok(over_cube(influence_count(f, i), f.arity()))
}

pub fn total_influence(f: &BooleanFunction) -> Rational {
    let total = (0..f.arity()).map(|i| influence_count(f, i)).sum();
    over_cube(total, f.arity())
}

/// Relevant coordinates `R(f)` as a mask (nonzero influence).
pub fn relevant(f: &BooleanFunction) -> Mask {
    (0..f.arity())
        .filter(|&i| influence_count(f, i) > 0)
        .fold(0, |acc, i| acc | 1 << i)
}

pub fn sensitivity_at(f: &BooleanFunction, x: Mask) -> u32 {
    let fx = f.value(x);
    (0..f.arity())
        .filter(|&i| f.value(x ^ 1 << i) != fx)
        .count() as u32
}

/// `s_x(f)` for every input index.
pub fn sensitivity_profile(f: &BooleanFunction) -> Vec<u32> {
    (0..f.table_len() as Mask)
        .map(|x| sensitivity_at(f, x))
        .collect()
}

pub fn sensitivity(f: &BooleanFunction) -> u32 {
    sensitivity_profile(f).into_iter().max().unwrap_or(0)
}

/// Disjoint blocks, each of which flips `f` at `base_input`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCollection {
    pub base_input: Mask,
    pub blocks: Vec<Mask>,
}

impl BlockCollection {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Re-checks disjointness and sensitivity by direct evaluation.
    pub fn validate(&self, f: &BooleanFunction) -> bool {
        let full = ((1u64 << f.arity()) - 1) as Mask;
        if self.base_input & !full != 0 {
            return false;
        }
        let fx = f.value(self.base_input);
        let mut seen = 0;
        for &b in &self.blocks {
            if b == 0 || b & !full != 0 || b & seen != 0 {
                return false;
            }
            if f.value(self.base_input ^ b) == fx {
                return false;
            }
            seen |= b;
        }
        true
    }
}

fn check_bs_arity(f: &BooleanFunction) -> Result<()> {
    if f.arity() > MAX_BS_ARITY {
        return Err(Error::ArityLimit {
            arity: f.arity(),
            limit: MAX_BS_ARITY,
            what: "block sensitivity",
        });
    }
    Ok(())
}

/// Maximum packing of minimal sensitive blocks at `x`, via a dynamic program
/// over coordinate subsets: `best[M]` is the largest packing inside `M`.
fn packing_at(f: &BooleanFunction, x: Mask) -> BlockCollection {
    let n = f.arity();
    let size = 1usize << n;
    let fx = f.value(x);
    // minimal[B]: B is sensitive and no nonempty proper subset is
    let mut below = vec![false; size];
    let mut minimal = vec![false; size];
    let mut buckets: Vec<Vec<Mask>> = vec![Vec::new(); n];
    for b in 1..size {
        let mut covered = false;
        let mut rest = b;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            let sub = b ^ low;
            if sub != 0 && (below[sub] || minimal[sub]) {
                covered = true;
                break;
            }
            rest ^= low;
        }
        below[b] = covered;
        if !covered && f.value(x ^ b as Mask) != fx {
            minimal[b] = true;
            buckets[b.trailing_zeros() as usize].push(b as Mask);
        }
    }

    let mut best = vec![0u8; size];
    let mut choice = vec![0 as Mask; size];
    for m in 1..size {
        let low = m & m.wrapping_neg();
        let mut v = best[m ^ low];
        let mut pick = 0;
        let bucket = &buckets[low.trailing_zeros() as usize];
        let subsets = 1usize << (m.count_ones() - 1);
        if bucket.len() <= subsets {
            for &b in bucket {
                let b = b as usize;
                if b & !m == 0 && best[m ^ b] + 1 > v {
                    v = best[m ^ b] + 1;
                    pick = b;
                }
            }
        } else {
            // submasks of m that contain its lowest bit
            let rest = m ^ low;
            let mut s = rest;
            loop {
                let b = s | low;
                if minimal[b] && best[m ^ b] + 1 > v {
                    v = best[m ^ b] + 1;
                    pick = b;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & rest;
            }
        }
        best[m] = v;
        choice[m] = pick as Mask;
    }

    let mut blocks = Vec::new();
    let mut m = size - 1;
    while m != 0 {
        let pick = choice[m] as usize;
        if pick == 0 {
            m ^= m & m.wrapping_neg();
        } else {
            blocks.push(pick as Mask);
            m ^= pick;
        }
    }
    blocks.sort_unstable();
    BlockCollection {
        base_input: x,
        blocks,
    }
}

/// `bs_x(f)` with a witness packing.
pub fn block_sensitivity_at(f: &BooleanFunction, x: Mask) -> Result<BlockCollection> {
    check_bs_arity(f)?;
    if x as usize >= f.table_len() {
        return Err(Error::Input(format!(
            "input index {x} out of range for arity {}",
            f.arity()
        )));
    }
    Ok(packing_at(f, x))
}

/// `bs(f)` with a witness at the smallest input index attaining it.
pub fn block_sensitivity_witness(f: &BooleanFunction) -> Result<BlockCollection> {
    check_bs_arity(f)?;
    let inputs = 0..f.table_len() as Mask;
    let all: Vec<BlockCollection> = if f.arity() > 8 {
        inputs.into_par_iter().map(|x| packing_at(f, x)).collect()
    } else {
        inputs.map(|x| packing_at(f, x)).collect()
    };
    // first maximum, so the witness does not depend on scheduling
    let mut best = all[0].clone();
    for c in all.into_iter().skip(1) {
        if c.len() > best.len() {
            best = c;
        }
    }
    Ok(best)
}

pub fn block_sensitivity(f: &BooleanFunction) -> Result<u32> {
    Ok(block_sensitivity_witness(f)?.len() as u32)
}

pub fn w_from_degrees(var_degrees: &[Option<u32>]) -> Rational {
    var_degrees.iter().flatten().map(|&d| pow2_neg(d)).sum()
}

/// `W(f) = Σ_{i∈R(f)} 2^-deg_i(f)`.
pub fn w_measure(f: &BooleanFunction) -> Rational {
    w_from_degrees(&var_degrees(f))
}

/// `s_i(f) = max_{x: f(x)≠f(x^i)} s_x(f) + s_{x^i}(f)` for each coordinate;
/// `None` for irrelevant coordinates.
pub fn s_indices_from(f: &BooleanFunction, profile: &[u32]) -> Vec<Option<u32>> {
    (0..f.arity())
        .map(|i| {
            let bit = 1 << i;
            (0..f.table_len() as Mask)
                .filter(|&x| f.value(x) != f.value(x ^ bit))
                .map(|x| profile[x as usize] + profile[(x ^ bit) as usize])
                .max()
        })
        .collect()
}

pub fn s_indices(f: &BooleanFunction) -> Vec<Option<u32>> {
    s_indices_from(f, &sensitivity_profile(f))
}

pub fn s_index(f: &BooleanFunction, i: usize) -> Result<Option<u32>> {
    check_coord(f, i)?;
    Ok(s_indices(f)[i])
}

/// `S(f) = Σ_{i∈R(f)} 2^-s_i(f)`.
pub fn s_measure(f: &BooleanFunction) -> Rational {
    w_from_degrees(&s_indices(f))
}

/// Disjoint collections of degree-`deg(f)` monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopMonomials {
    pub degree: u32,
    /// Every monomial of degree `deg(f)` with nonzero coefficient.
    pub all: Vec<Mask>,
    /// A maximum pairwise-disjoint sub-collection (exact search).
    pub maximum: Vec<Mask>,
    /// A maximal collection grown greedily in increasing mask order.
    pub greedy: Vec<Mask>,
}

impl TopMonomials {
    /// `ℓ`, the size of the maximum collection.
    pub fn ell(&self) -> usize {
        self.maximum.len()
    }

    /// `H`, the union of the maximum collection.
    pub fn support(&self) -> Mask {
        self.maximum.iter().fold(0, |acc, m| acc | m)
    }

    /// Whether `set` meets every top-degree monomial.
    pub fn hits_all(&self, set: Mask) -> bool {
        self.all.iter().all(|m| m & set != 0)
    }
}

struct PackingSearch<'a> {
    mons: &'a [Mask],
    degree: u32,
    current: Vec<Mask>,
    best: Vec<Mask>,
}

impl PackingSearch<'_> {
    fn run(&mut self, idx: usize, used: Mask) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        if idx == self.mons.len() {
            return;
        }
        let room = self.mons[idx..]
            .iter()
            .filter(|&&m| m & used == 0)
            .fold(0, |acc, m| acc | m);
        let bound = self.current.len() + (popcount(room) / self.degree) as usize;
        if bound <= self.best.len() {
            return;
        }
        let m = self.mons[idx];
        if m & used == 0 {
            self.current.push(m);
            self.run(idx + 1, used | m);
            self.current.pop();
        }
        self.run(idx + 1, used);
    }
}

pub fn max_disjoint_top_monomials_from(coeffs: &MultilinearCoeffs) -> TopMonomials {
    let degree = coeffs.degree();
    if degree == 0 {
        return TopMonomials {
            degree,
            all: Vec::new(),
            maximum: Vec::new(),
            greedy: Vec::new(),
        };
    }
    let all: Vec<Mask> = coeffs
        .nonzero()
        .map(|(s, _)| s)
        .filter(|&s| popcount(s) == degree)
        .collect();
    let mut search = PackingSearch {
        mons: &all,
        degree,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.run(0, 0);
    let maximum = search.best;
    let mut greedy = Vec::new();
    let mut used = 0;
    for &m in &all {
        if m & used == 0 {
            greedy.push(m);
            used |= m;
        }
    }
    TopMonomials {
        degree,
        all,
        maximum,
        greedy,
    }
}

/// Maximum set of pairwise-disjoint top-degree monomials; `ℓ = 0`, `H = ∅`
/// for constants.
pub fn max_disjoint_top_monomials(f: &BooleanFunction) -> TopMonomials {
    max_disjoint_top_monomials_from(&f.mobius_expand())
}

/// Every measure of a single function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub function: String,
    pub arity: usize,
    pub degree: u32,
    /// `deg_i`, `null` for irrelevant coordinates.
    pub var_degrees: Vec<Option<u32>>,
    pub relevant: Vec<usize>,
    #[serde(with = "crate::ratio::serde_fraction_vec")]
    pub influence: Vec<Rational>,
    #[serde(with = "crate::ratio::serde_fraction")]
    pub total_influence: Rational,
    pub sensitivity: u32,
    pub block_sensitivity: u32,
    pub block_witness: BlockCollection,
    #[serde(with = "crate::ratio::serde_fraction")]
    pub w_value: Rational,
    /// `s_i`, `null` for irrelevant coordinates.
    pub s_index: Vec<Option<u32>>,
    #[serde(with = "crate::ratio::serde_fraction")]
    pub s_value: Rational,
    pub top_monomials: TopMonomials,
}

impl MeasureReport {
    pub fn compute(f: &BooleanFunction) -> Result<Self> {
        check_bs_arity(f)?;
        let coeffs = f.mobius_expand();
        let var_degrees = var_degrees_from(&coeffs);
        let counts: Vec<u64> = (0..f.arity()).map(|i| influence_count(f, i)).collect();
        let influence: Vec<Rational> = counts.iter().map(|&c| over_cube(c, f.arity())).collect();
        let total_influence = over_cube(counts.iter().sum(), f.arity());
        let relevant = (0..f.arity()).filter(|&i| counts[i] > 0).collect();
        let profile = sensitivity_profile(f);
        let s_index = s_indices_from(f, &profile);
        let block_witness = block_sensitivity_witness(f)?;
        Ok(Self {
            function: f.to_string(),
            arity: f.arity(),
            degree: coeffs.degree(),
            w_value: w_from_degrees(&var_degrees),
            var_degrees,
            relevant,
            influence,
            total_influence,
            sensitivity: profile.iter().copied().max().unwrap_or(0),
            block_sensitivity: block_witness.len() as u32,
            block_witness,
            s_value: w_from_degrees(&s_index),
            s_index,
            top_monomials: max_disjoint_top_monomials_from(&coeffs),
        })
    }
}
