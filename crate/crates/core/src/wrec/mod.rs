//! Upper bounds on `W(b, d)`, the largest `W(f)` over degree-`d` functions
//! with `bs(f) ≤ b`, and the constants derived from them.
//!
//! The table follows
//!
//! ```text
//! W[b][d] = min( max_{1≤ℓ≤b, 1≤k≤d} ℓ·d·2^-d + W[min(b−ℓ, cap(d−k))][d−k],  d/2 )
//! ```
//!
//! with `W[0][d] = W[b][0] = 0`. A child budget above the child's cap is
//! clamped to the cap: the child is any function of degree `d−k`, and every
//! such function already has `bs ≤ cap(d−k)`. The `d/2` term is optional.
//!
//! Every entry is a dyadic rational `n / 2^D` for a table of depth `D`, so
//! the table stores integer numerators over that common denominator. This is
//! exact; nothing is rounded.

mod caps;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratio::{ceil_decimal, Rational};

pub use caps::{BsCap, CapContext, CapRegistry, LpCaps, SharedCap, WorstCaseCaps};

/// Deepest table the fixed-denominator representation supports.
pub const MAX_DEPTH: u32 = 100;

/// Exact upper bounds `W[b][d]` for `0 ≤ d ≤ depth`, `0 ≤ b ≤ cap(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WBoundTable {
    depth: u32,
    /// common denominator exponent
    scale: u32,
    rows: Vec<Vec<i128>>,
    caps: Vec<u64>,
    cap_mode: &'static str,
    half_degree: bool,
}

fn overflow(what: &str) -> Error {
    Error::Overflow(format!("W table numerator overflow in {what}"))
}

/// Builds the table up to `depth` with the given caps.
pub fn w_table(depth: u32, caps: &dyn BsCap, half_degree: bool) -> Result<WBoundTable> {
    if depth > MAX_DEPTH {
        return Err(Error::Domain(format!(
            "depth {depth} exceeds the supported maximum {MAX_DEPTH}"
        )));
    }
    let scale = depth.max(1);
    let cap_of = |d: u32| -> Result<u64> {
        let c = if d == 0 { 0 } else { caps.cap(d) };
        if c > (d as u64) * (d as u64) {
            return Err(Error::Domain(format!(
                "cap {c} at degree {d} exceeds d² (strategy `{}`)",
                caps.name()
            )));
        }
        Ok(c)
    };
    let caps_vec: Vec<u64> = (0..=depth).map(cap_of).collect::<Result<_>>()?;

    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(depth as usize + 1);
    rows.push(vec![0; caps_vec[0] as usize + 1]);
    for d in 1..=depth {
        let cap = caps_vec[d as usize] as usize;
        // ℓ·d·2^-d in units of 2^-scale
        let unit: i128 = (d as i128) << (scale - d);
        let half: i128 = (d as i128) << (scale - 1);
        // best child value for a leftover budget x, maximised over k explicitly
        let child: Vec<i128> = (0..=cap)
            .map(|x| {
                (1..=d as usize)
                    .map(|k| {
                        let row = &rows[d as usize - k];
                        row[x.min(row.len() - 1)]
                    })
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut row = vec![0i128; cap + 1];
        for b in 1..=cap {
            let mut best = i128::MIN;
            for ell in 1..=b {
                let v = (ell as i128)
                    .checked_mul(unit)
                    .and_then(|t| t.checked_add(child[b - ell]))
                    .ok_or_else(|| overflow("recursion"))?;
                best = best.max(v);
            }
            row[b] = if half_degree { best.min(half) } else { best };
        }
        rows.push(row);
    }

    Ok(WBoundTable {
        depth,
        scale,
        rows,
        caps: caps_vec,
        cap_mode: caps.name(),
        half_degree,
    })
}

impl WBoundTable {
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn cap_mode(&self) -> &'static str {
        self.cap_mode
    }

    pub fn half_degree(&self) -> bool {
        self.half_degree
    }

    /// `cap(d)` as used by this table.
    pub fn cap(&self, degree: u32) -> Option<u64> {
        self.caps.get(degree as usize).copied()
    }

    fn to_rational(&self, num: i128) -> Rational {
        Rational::new(BigInt::from(num), BigInt::one() << self.scale as usize)
    }

    /// `W[b][d]`, or `None` outside `b ≤ cap(d)`, `d ≤ depth`.
    pub fn get(&self, b: u64, degree: u32) -> Option<Rational> {
        let row = self.rows.get(degree as usize)?;
        row.get(b as usize).map(|&n| self.to_rational(n))
    }

    /// `W[min(b, cap(d))][d]`.
    pub fn lookup_clamped(&self, b: u64, degree: u32) -> Option<Rational> {
        let cap = self.cap(degree)?;
        self.get(b.min(cap), degree)
    }

    /// `W[cap(d)][d]`, the bound on `W_d`.
    pub fn head(&self, degree: u32) -> Option<Rational> {
        self.get(self.cap(degree)?, degree)
    }

    /// Every stored entry as `(b, d, value)`, ordered by `d` then `b`.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u32, Rational)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(d, row)| {
            row.iter()
                .enumerate()
                .map(move |(b, &n)| (b as u64, d as u32, self.to_rational(n)))
        })
    }

    pub fn row_len(&self, degree: u32) -> usize {
        self.rows.get(degree as usize).map_or(0, Vec::len)
    }
}

/// `Σ_{r=m}^∞ r³ 2^-r`, computed as `26 − Σ_{r<m} r³ 2^-r`.
pub fn tail_sum(m: u32) -> Rational {
    let full = Rational::from_integer(BigInt::from(26));
    let head: Rational = (0..m)
        .map(|r| {
            let r3 = BigInt::from(r as u64).pow(3);
            Rational::new(r3, BigInt::one() << r as usize)
        })
        .sum();
    full - head
}

/// Head, tail and total of the bound `W* ≤ W[cap(D)][D] + Σ_{r>D} r³ 2^-r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WStarResult {
    pub depth: u32,
    pub cap_mode: String,
    pub half_degree: bool,
    #[serde(with = "crate::ratio::serde_fraction")]
    pub head: Rational,
    #[serde(with = "crate::ratio::serde_fraction")]
    pub tail: Rational,
    #[serde(with = "crate::ratio::serde_fraction")]
    pub total: Rational,
}

impl WStarResult {
    /// `(head, tail, total)` rounded up to `digits` decimals.
    pub fn decimals(&self, digits: usize) -> (String, String, String) {
        (
            ceil_decimal(&self.head, digits),
            ceil_decimal(&self.tail, digits),
            ceil_decimal(&self.total, digits),
        )
    }
}

pub fn w_star_from_table(table: &WBoundTable) -> Result<WStarResult> {
    let depth = table.depth();
    if depth == 0 {
        return Err(Error::Domain("W* bound needs depth ≥ 1".into()));
    }
    let head = table.head(depth).expect("table covers its own depth");
    let tail = tail_sum(depth + 1);
    Ok(WStarResult {
        depth,
        cap_mode: table.cap_mode().to_string(),
        half_degree: table.half_degree(),
        total: &head + &tail,
        head,
        tail,
    })
}

pub fn w_star_bound(depth: u32, caps: &dyn BsCap, half_degree: bool) -> Result<WStarResult> {
    if depth == 0 {
        return Err(Error::Domain("W* bound needs depth ≥ 1".into()));
    }
    w_star_from_table(&w_table(depth, caps, half_degree)?)
}

/// The bound obtained without tracking block sensitivity: the best over
/// `d ≤ max_depth` of `d/2 + Σ_{r>d} r³ 2^-r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Baseline {
    #[serde(with = "crate::ratio::serde_fraction")]
    pub value: Rational,
    pub argmin: u32,
}

pub fn chs_baseline(max_depth: u32) -> Result<Baseline> {
    if max_depth == 0 {
        return Err(Error::Domain("baseline needs depth ≥ 1".into()));
    }
    let mut best: Option<Baseline> = None;
    for d in 1..=max_depth {
        let v = Rational::new(BigInt::from(d), BigInt::from(2)) + tail_sum(d + 1);
        if best.as_ref().is_none_or(|b| v < b.value) {
            best = Some(Baseline {
                value: v,
                argmin: d,
            });
        }
    }
    Ok(best.expect("nonempty range"))
}

/// Certified bound on the number of relevant variables of a degree-`d` function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JuntaBound {
    pub degree: u32,
    /// `min(W[cap(d)][d], W*-bound)`; the first term only when `d` is within
    /// the reference depth.
    #[serde(with = "crate::ratio::serde_fraction")]
    pub coefficient: Rational,
    /// `2^d · coefficient`.
    #[serde(with = "crate::ratio::serde_fraction")]
    pub bound: Rational,
}

/// `|R(f)| ≤ 2^d · min(W[cap(d)][d], W*)` with the `W*` bound taken at
/// `reference_depth` (it bounds every `W_d` since `W_d` increases to `W*`).
pub fn junta_bound(
    degree: u32,
    caps: &dyn BsCap,
    half_degree: bool,
    reference_depth: u32,
) -> Result<JuntaBound> {
    if degree == 0 {
        return Err(Error::Domain("junta bound needs degree ≥ 1".into()));
    }
    let table = w_table(reference_depth.max(1), caps, half_degree)?;
    let star = w_star_from_table(&table)?.total;
    let coefficient = match table.head(degree) {
        Some(h) if h < star => h,
        _ => star,
    };
    let bound = &coefficient * Rational::from_integer(BigInt::one() << degree as usize);
    Ok(JuntaBound {
        degree,
        coefficient,
        bound,
    })
}

/// `W[b][d]` and `W[cap(d)][d]` are only meaningful against the same caps;
/// this checks the tables are entrywise ordered where both are defined.
pub fn dominated_by(lower: &WBoundTable, upper: &WBoundTable) -> bool {
    lower.entries().all(|(b, d, v)| match upper.get(b, d) {
        Some(u) => v <= u,
        None => true,
    })
}

pub fn is_zero_row(table: &WBoundTable, degree: u32) -> bool {
    (0..table.row_len(degree) as u64).all(|b| table.get(b, degree).is_none_or(|v| v.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{frac, int, pow2_neg, to_f64};

    /// Direct transcription of the recursion on rationals, no shortcuts.
    fn oracle_table(depth: u32, cap: impl Fn(u32) -> u64, half: bool) -> Vec<Vec<Rational>> {
        let mut rows: Vec<Vec<Rational>> = vec![vec![int(0)]];
        for d in 1..=depth {
            let c = cap(d);
            let mut row = vec![int(0)];
            for b in 1..=c {
                let mut best: Option<Rational> = None;
                for ell in 1..=b {
                    for k in 1..=d {
                        let child = &rows[(d - k) as usize];
                        let idx = ((b - ell) as usize).min(child.len() - 1);
                        let v = int(ell as i64) * int(d as i64) * pow2_neg(d) + &child[idx];
                        if best.as_ref().is_none_or(|x| v > *x) {
                            best = Some(v);
                        }
                    }
                }
                let mut v = best.unwrap();
                if half && v > frac(d as i64, 2) {
                    v = frac(d as i64, 2);
                }
                row.push(v);
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn matches_rational_oracle() {
        for half in [false, true] {
            let t = w_table(6, &WorstCaseCaps, half).unwrap();
            let o = oracle_table(6, |d| (d * d) as u64, half);
            for (d, row) in o.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    assert_eq!(t.get(b as u64, d as u32).unwrap(), *v, "b={b} d={d}");
                }
            }
            let lp = LpCaps::from_bounds([(1, 1), (2, 3), (3, 6), (4, 10), (5, 15), (6, 21)]);
            let t = w_table(6, &lp, half).unwrap();
            let o = oracle_table(6, |d| lp.cap(d), half);
            for (d, row) in o.iter().enumerate() {
                for (b, v) in row.iter().enumerate() {
                    assert_eq!(t.get(b as u64, d as u32).unwrap(), *v);
                }
            }
        }
    }

    #[test]
    fn first_entries() {
        let t = w_table(2, &WorstCaseCaps, true).unwrap();
        assert_eq!(t.get(1, 1).unwrap(), frac(1, 2));
        assert_eq!(t.head(1).unwrap(), frac(1, 2));
        assert_eq!(t.head(2).unwrap(), int(1));
        assert_eq!(t.get(0, 2).unwrap(), int(0));
        assert_eq!(t.get(5, 2), None);
        assert_eq!(t.lookup_clamped(100, 2).unwrap(), int(1));
    }

    #[test]
    fn worst_caps_small_degrees_hit_half_degree() {
        let t = w_table(7, &WorstCaseCaps, true).unwrap();
        for d in 1..=7 {
            assert_eq!(t.head(d).unwrap(), frac(d as i64, 2), "d={d}");
        }
    }

    #[test]
    fn structural_invariants() {
        let lp = LpCaps::from_bounds([(1, 1), (2, 3), (3, 6), (4, 10), (5, 15), (6, 21), (7, 29)]);
        for caps in [&WorstCaseCaps as &dyn BsCap, &lp] {
            let t = w_table(12, caps, true).unwrap();
            for d in 0..=12u32 {
                assert_eq!(t.get(0, d).unwrap(), int(0));
                for b in 0..t.row_len(d) as u64 {
                    let v = t.get(b, d).unwrap();
                    assert!(v <= frac(d as i64, 2));
                    if let Some(next) = t.get(b + 1, d) {
                        assert!(v <= next);
                    }
                }
            }
            for d in 0..12 {
                assert!(t.head(d).unwrap() <= t.head(d + 1).unwrap());
            }
        }
        let worst = w_table(12, &WorstCaseCaps, true).unwrap();
        let capped = w_table(12, &lp, true).unwrap();
        assert!(dominated_by(&capped, &worst));
        assert!(is_zero_row(&worst, 0));
    }

    #[test]
    fn tail_sum_identities() {
        assert_eq!(tail_sum(0), int(26));
        assert_eq!(tail_sum(1), int(26));
        for m in 0..=64u32 {
            let diff = tail_sum(m) - tail_sum(m + 1);
            let term = Rational::new(BigInt::from(m as u64).pow(3), BigInt::one() << m as usize);
            assert_eq!(diff, term);
            assert!(tail_sum(m + 1) > int(0));
            if m > 0 {
                assert!(tail_sum(m + 1) < tail_sum(m));
            }
        }
    }

    #[test]
    fn tail_sum_generating_function_oracle() {
        // Σ r³ x^r = x(1+4x+x²)/(1−x)⁴ at x = 1/2
        let x = frac(1, 2);
        let one = int(1);
        let gf = &x * (&one + int(4) * &x + &x * &x)
            / ((&one - &x) * (&one - &x) * (&one - &x) * (&one - &x));
        assert_eq!(gf, int(26));
        // partial sums approach 26 with a shrinking remainder
        let mut partial = int(0);
        for r in 0..200u32 {
            partial += Rational::new(BigInt::from(r as u64).pow(3), BigInt::one() << r as usize);
        }
        assert!(int(26) - &partial < Rational::new(BigInt::one(), BigInt::one() << 150usize));
        assert!(partial < int(26));
    }

    #[test]
    fn depth_one_w_star() {
        let r = w_star_bound(1, &WorstCaseCaps, true).unwrap();
        assert_eq!(r.head, frac(1, 2));
        assert_eq!(r.tail, tail_sum(2));
        assert_eq!(r.total, frac(1, 2) + tail_sum(2));
        assert_eq!(r.total, int(26));
        assert!(w_star_bound(0, &WorstCaseCaps, true).is_err());
    }

    #[test]
    fn baseline_value() {
        let b = chs_baseline(1).unwrap();
        assert_eq!(b.value, frac(1, 2) + tail_sum(2));
        let b = chs_baseline(40).unwrap();
        assert_eq!(b.argmin, 11);
        assert!((to_f64(&b.value) - 6.614).abs() < 0.01);
        assert!(to_f64(&b.value) <= 6.614);
    }

    #[test]
    fn junta_small_degrees() {
        let j = junta_bound(1, &WorstCaseCaps, true, 10).unwrap();
        assert_eq!(j.bound, int(1));
        let j = junta_bound(3, &WorstCaseCaps, true, 10).unwrap();
        assert!(j.bound >= int(7));
        assert_eq!(j.bound, int(12));
    }

    #[test]
    fn depth_limit() {
        assert!(w_table(MAX_DEPTH + 1, &WorstCaseCaps, true).is_err());
    }
}
