//! Truth-table Boolean functions on `{0,1}^n`.
//!
//! Coordinates are 0-based in the API (`x_1` of the usual notation is
//! coordinate 0). An input `x` is stored as the index `Σ x_i 2^i`, so
//! coordinate 0 is the least significant bit. Coordinate subsets are `u32`
//! bit masks over the same positions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratio::Rational;
use num_bigint::BigInt;

/// Largest arity the truth-table representation accepts.
pub const MAX_ARITY: usize = 20;

/// Coordinate subset or input index, bit `i` standing for coordinate `i`.
pub type Mask = u32;

#[inline]
pub fn popcount(m: Mask) -> u32 {
    m.count_ones()
}

/// Coordinates of `m` in increasing order.
pub fn mask_coords(m: Mask) -> Vec<usize> {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}

pub fn coords_mask(coords: &[usize], arity: usize) -> Result<Mask> {
    coords.iter().try_fold(0, |acc, &c| {
        if c >= arity {
            Err(Error::Coordinate { coord: c, arity })
        } else {
            Ok(acc | 1 << c)
        }
    })
}

/// Scatters the low bits of `y` into the set positions of `positions`.
#[inline]
pub fn deposit(mut y: Mask, mut positions: Mask) -> Mask {
    let mut out = 0;
    while positions != 0 {
        let low = positions & positions.wrapping_neg();
        if y & 1 == 1 {
            out |= low;
        }
        y >>= 1;
        positions &= positions - 1;
    }
    out
}

/// Gathers the bits of `x` at the set positions of `positions` into the low bits.
#[inline]
pub fn extract(x: Mask, mut positions: Mask) -> Mask {
    let mut out = 0;
    let mut bit = 0;
    while positions != 0 {
        let low = positions & positions.wrapping_neg();
        if x & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        positions &= positions - 1;
    }
    out
}

pub fn input_index(x: &[bool]) -> Mask {
    x.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | (b as Mask) << i)
}

pub fn index_input(idx: Mask, arity: usize) -> Vec<bool> {
    (0..arity).map(|i| idx >> i & 1 == 1).collect()
}

/// `x^B`: `x` with every coordinate of `block` flipped.
pub fn flip_block(x: &[bool], block: &[usize]) -> Result<Vec<bool>> {
    let mut out = x.to_vec();
    for &c in block {
        let bit = out.get_mut(c).ok_or(Error::Coordinate {
            coord: c,
            arity: x.len(),
        })?;
        *bit = !*bit;
    }
    Ok(out)
}

/// Partial assignment `α: H → {0,1}`; `values` is always a subset of `support`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Assignment {
    support: Mask,
    values: Mask,
}

impl Assignment {
    pub fn new(pairs: &[(usize, bool)]) -> Result<Self> {
        let mut support = 0;
        let mut values = 0;
        for &(c, v) in pairs {
            if c >= 32 {
                return Err(Error::Coordinate {
                    coord: c,
                    arity: MAX_ARITY,
                });
            }
            if support >> c & 1 == 1 {
                return Err(Error::Input(format!("coordinate {c} assigned twice")));
            }
            support |= 1 << c;
            values |= (v as Mask) << c;
        }
        Ok(Self { support, values })
    }

    /// Assignment on `support` whose bits are taken from `values` (extra bits are dropped).
    pub fn from_masks(support: Mask, values: Mask) -> Self {
        Self {
            support,
            values: values & support,
        }
    }

    /// The `index`-th of the `2^|support|` assignments on `support`.
    pub fn nth_on(support: Mask, index: Mask) -> Self {
        Self::from_masks(support, deposit(index, support))
    }

    pub fn support(&self) -> Mask {
        self.support
    }

    pub fn values(&self) -> Mask {
        self.values
    }

    pub fn len(&self) -> usize {
        popcount(self.support) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.support == 0
    }

    pub fn get(&self, coord: usize) -> Option<bool> {
        (self.support >> coord & 1 == 1).then_some(self.values >> coord & 1 == 1)
    }
}

/// A function `{0,1}^n → {0,1}` stored as its full truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    arity: usize,
    words: Vec<u64>,
}

fn word_count(arity: usize) -> usize {
    (1usize << arity).div_ceil(64)
}

fn check_arity(arity: usize) -> Result<()> {
    if arity > MAX_ARITY {
        return Err(Error::ArityLimit {
            arity,
            limit: MAX_ARITY,
            what: "truth-table representation",
        });
    }
    Ok(())
}

impl BooleanFunction {
    /// Builds `f` from its truth table; `bits[i]` is the value at input index `i`.
    pub fn from_bits(arity: usize, bits: &[bool]) -> Result<Self> {
        check_arity(arity)?;
        if bits.len() != 1 << arity {
            return Err(Error::LengthMismatch {
                expected: 1 << arity,
                got: bits.len(),
            });
        }
        Ok(Self::from_fn(arity, |x| bits[x as usize]))
    }

    /// Builds `f` by evaluating `value` at every input index.
    ///
    /// Panics if `arity > MAX_ARITY`; use [`BooleanFunction::from_bits`] for
    /// untrusted sizes.
    pub fn from_fn(arity: usize, mut value: impl FnMut(Mask) -> bool) -> Self {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
        let mut words = vec![0u64; word_count(arity)];
        for x in 0..(1u32 << arity) {
            if value(x) {
                words[(x >> 6) as usize] |= 1 << (x & 63);
            }
        }
        Self { arity, words }
    }

    /// Arity `n ≤ 6` function whose table is the low `2^n` bits of `word`.
    pub fn from_word(arity: usize, word: u64) -> Result<Self> {
        if arity > 6 {
            return Err(Error::ArityLimit {
                arity,
                limit: 6,
                what: "single-word truth tables",
            });
        }
        let len = 1u32 << arity;
        let mask = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        if word & !mask != 0 {
            return Err(Error::Input(format!(
                "table word {word:#x} has bits beyond 2^{arity}"
            )));
        }
        Ok(Self {
            arity,
            words: vec![word],
        })
    }

    pub fn constant(arity: usize, value: bool) -> Self {
        Self::from_fn(arity, |_| value)
    }

    /// `x_i` on `arity` coordinates.
    pub fn dictator(arity: usize, coord: usize) -> Self {
        assert!(coord < arity);
        Self::from_fn(arity, |x| x >> coord & 1 == 1)
    }

    pub fn and(arity: usize) -> Self {
        let all = (1u32 << arity) - 1;
        Self::from_fn(arity, |x| x == all)
    }

    pub fn or(arity: usize) -> Self {
        Self::from_fn(arity, |x| x != 0)
    }

    pub fn parity(arity: usize) -> Self {
        Self::from_fn(arity, |x| x.count_ones() % 2 == 1)
    }

    /// Strict majority (value 1 when more than half of the bits are set).
    pub fn majority(arity: usize) -> Self {
        Self::from_fn(arity, |x| 2 * x.count_ones() as usize > arity)
    }

    /// OR of `terms` ANDs over consecutive groups of `width` coordinates.
    pub fn tribes(terms: usize, width: usize) -> Self {
        let group = (1u32 << width) - 1;
        Self::from_fn(terms * width, |x| {
            (0..terms).any(|t| (x >> (t * width)) & group == group)
        })
    }

    /// The depth-`depth` complete decision tree querying a fresh coordinate at
    /// every node.
    ///
    /// Nodes are numbered in heap order (root 1, children `2k`, `2k+1`), node
    /// `k` queries coordinate `k-1`; a 1 moves to `2k`, a 0 to `2k+1`, and a
    /// leaf outputs the last bit read. Depth 2 gives `x_1 ? x_2 : x_3`.
    pub fn decision_tree_complete(depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Domain("decision tree depth must be ≥ 1".into()));
        }
        let arity = (1usize << depth.min(31)) - 1;
        check_arity(arity)?;
        Ok(Self::from_fn(arity, |x| {
            let mut node = 1usize;
            let mut last = false;
            for _ in 0..depth {
                last = x >> (node - 1) & 1 == 1;
                node = if last { 2 * node } else { 2 * node + 1 };
            }
            last
        }))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of table entries, `2^arity`.
    pub fn table_len(&self) -> usize {
        1 << self.arity
    }

    #[inline]
    pub fn value(&self, x: Mask) -> bool {
        self.words[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    /// Truth table packed into a single word; `None` above arity 6.
    pub fn as_word(&self) -> Option<u64> {
        (self.arity <= 6).then(|| self.words[0])
    }

    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                got: x.len(),
            });
        }
        Ok(self.value(input_index(x)))
    }

    pub fn bits(&self) -> Vec<bool> {
        (0..self.table_len() as Mask)
            .map(|x| self.value(x))
            .collect()
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        let ones = self.count_ones();
        ones == 0 || ones == self.table_len() as u64
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.arity, |x| !self.value(x))
    }

    /// `x ↦ f(x ⊕ shift)`.
    pub fn xor_shift(&self, shift: Mask) -> Self {
        Self::from_fn(self.arity, |x| self.value(x ^ shift))
    }

    /// `f_α`: fixes the coordinates in `α`'s support; the survivors are
    /// renumbered densely in their original order.
    pub fn restrict(&self, alpha: &Assignment) -> Result<Self> {
        let full = ((1u64 << self.arity) - 1) as Mask;
        if alpha.support() & !full != 0 {
            let coord = mask_coords(alpha.support() & !full)[0];
            return Err(Error::Coordinate {
                coord,
                arity: self.arity,
            });
        }
        let free = full & !alpha.support();
        let arity = popcount(free) as usize;
        Ok(Self::from_fn(arity, |y| {
            self.value(deposit(y, free) | alpha.values())
        }))
    }

    /// Exact coefficients of the unique multilinear polynomial agreeing with
    /// `f` on `{0,1}^n` (subset Möbius transform of the table).
    pub fn mobius_expand(&self) -> MultilinearCoeffs {
        let n = self.arity;
        let mut a: Vec<i64> = (0..self.table_len() as Mask)
            .map(|x| self.value(x) as i64)
            .collect();
        for i in 0..n {
            let bit = 1 << i;
            for s in 0..a.len() {
                if s & bit != 0 {
                    a[s] -= a[s ^ bit];
                }
            }
        }
        MultilinearCoeffs {
            arity: n,
            coeffs: a,
        }
    }

    /// Exact Fourier coefficients of the 0/1-valued `f` over the ±1 cube,
    /// with the convention `0 ↦ +1`, `1 ↦ −1`:
    /// `f̂(S) = 2^-n Σ_x f(x) (−1)^{|x ∩ S|}`.
    pub fn fourier_expand(&self) -> FourierCoeffs {
        let n = self.arity;
        let mut h: Vec<i64> = (0..self.table_len() as Mask)
            .map(|x| self.value(x) as i64)
            .collect();
        let mut len = 1;
        while len < h.len() {
            for start in (0..h.len()).step_by(2 * len) {
                for j in start..start + len {
                    let (u, v) = (h[j], h[j + len]);
                    h[j] = u + v;
                    h[j + len] = u - v;
                }
            }
            len <<= 1;
        }
        FourierCoeffs {
            arity: n,
            scaled: h,
        }
    }

    /// `outer ∘ inner`: block `j` (coordinates `j·m .. (j+1)·m`) feeds input `j`
    /// of `outer`.
    pub fn compose_blockwise(outer: &Self, inner: &Self) -> Result<Self> {
        let (b, m) = (outer.arity, inner.arity);
        let arity = b * m;
        check_arity(arity)?;
        let block = ((1u64 << m) - 1) as Mask;
        Ok(Self::from_fn(arity, |x| {
            let y = (0..b).fold(0, |acc, j| {
                acc | (inner.value((x >> (j * m)) & block) as Mask) << j
            });
            outer.value(y)
        }))
    }

    /// Hexadecimal form `n:0x…`, most significant nibble first, where bit `i`
    /// of the number is the value at input index `i`.
    pub fn to_hex_string(&self) -> String {
        let nibbles = self.table_len().div_ceil(4);
        let mut s = String::with_capacity(nibbles + 8);
        for k in (0..nibbles).rev() {
            let nib = (0..4).fold(0u32, |acc, b| {
                let x = (4 * k + b) as Mask;
                let bit = (x as usize) < self.table_len() && self.value(x);
                acc | (bit as u32) << b
            });
            s.push(char::from_digit(nib, 16).unwrap());
        }
        format!("{}:0x{}", self.arity, s)
    }
}

impl fmt::Display for BooleanFunction {
    /// `n:BITSTRING`, the character at position `i` being the value at input index `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.arity)?;
        for x in 0..self.table_len() as Mask {
            f.write_str(if self.value(x) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction({self})")
    }
}

impl FromStr for BooleanFunction {
    type Err = Error;

    /// Accepts `n:BITSTRING` and `n:0xHEX` (exact digit count required).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (n, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Input(format!("expected `n:TABLE`, got `{s}`")))?;
        let arity: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad arity `{n}`")))?;
        check_arity(arity)?;
        let len = 1usize << arity;
        if let Some(hex) = body.strip_prefix("0x").or_else(|| body.strip_prefix("0X")) {
            let nibbles = len.div_ceil(4);
            if hex.len() != nibbles {
                return Err(Error::Input(format!(
                    "arity {arity} needs {nibbles} hex digits, got {}",
                    hex.len()
                )));
            }
            let digits: Vec<u32> = hex
                .chars()
                .map(|c| {
                    c.to_digit(16)
                        .ok_or_else(|| Error::Input(format!("bad hex digit `{c}`")))
                })
                .collect::<Result<_>>()?;
            // digits[0] is the most significant nibble
            let bit = |x: usize| digits[nibbles - 1 - x / 4] >> (x % 4) & 1 == 1;
            if (len..4 * nibbles).any(bit) {
                return Err(Error::Input(format!(
                    "hex table sets bits beyond 2^{arity}"
                )));
            }
            Ok(Self::from_fn(arity, |x| bit(x as usize)))
        } else {
            if body.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    got: body.len(),
                });
            }
            let bits: Vec<bool> = body
                .bytes()
                .map(|c| match c {
                    b'0' => Ok(false),
                    b'1' => Ok(true),
                    _ => Err(Error::Input(format!("bad table character `{}`", c as char))),
                })
                .collect::<Result<_>>()?;
            Self::from_bits(arity, &bits)
        }
    }
}

/// Integer coefficients `a_S` of `f = Σ_S a_S Π_{i∈S} x_i`, indexed by subset mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearCoeffs {
    arity: usize,
    coeffs: Vec<i64>,
}

impl MultilinearCoeffs {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, s: Mask) -> i64 {
        self.coeffs[s as usize]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.coeffs
    }

    /// `(S, a_S)` for every nonzero coefficient, in increasing mask order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Mask, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(s, &c)| (s as Mask, c))
    }

    /// Largest `|S|` with `a_S ≠ 0`; 0 for constants.
    pub fn degree(&self) -> u32 {
        self.nonzero().map(|(s, _)| popcount(s)).max().unwrap_or(0)
    }

    pub fn evaluate(&self, x: Mask) -> i64 {
        // Σ over S ⊆ x
        let mut total = self.coeffs[0];
        let mut s = x;
        while s != 0 {
            total += self.coeffs[s as usize];
            s = (s - 1) & x;
        }
        total
    }
}

/// Fourier coefficients `f̂(S) = scaled[S] / 2^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierCoeffs {
    arity: usize,
    scaled: Vec<i64>,
}

impl FourierCoeffs {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `2^n f̂(S)`, an integer.
    pub fn scaled(&self, s: Mask) -> i64 {
        self.scaled[s as usize]
    }

    pub fn coefficient(&self, s: Mask) -> Rational {
        Rational::new(
            BigInt::from(self.scaled[s as usize]),
            BigInt::from(1u64) << self.arity,
        )
    }

    pub fn degree(&self) -> u32 {
        self.scaled
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(s, _)| popcount(s as Mask))
            .max()
            .unwrap_or(0)
    }

    /// `Σ_S w(|S|) f̂(S)²` exactly.
    pub fn weighted_square_sum(&self, weight: impl Fn(u32) -> i64) -> Rational {
        let num: BigInt = self
            .scaled
            .iter()
            .enumerate()
            .map(|(s, &c)| BigInt::from(weight(popcount(s as Mask))) * BigInt::from(c) * c)
            .sum();
        Rational::new(num, BigInt::from(1u64) << (2 * self.arity))
    }

    /// `Σ_S f̂(S)²`.
    pub fn square_sum(&self) -> Rational {
        self.weighted_square_sum(|_| 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::frac;

    fn tt(s: &str) -> BooleanFunction {
        s.parse().unwrap()
    }

    #[test]
    fn from_bits_examples() {
        let and2 = BooleanFunction::from_bits(2, &[false, false, false, true]).unwrap();
        assert_eq!(and2, BooleanFunction::and(2));
        let dict = BooleanFunction::from_bits(1, &[false, true]).unwrap();
        assert_eq!(dict, BooleanFunction::dictator(1, 0));
        let par = BooleanFunction::from_bits(2, &[false, true, true, false]).unwrap();
        assert_eq!(par, BooleanFunction::parity(2));
        assert!(matches!(
            BooleanFunction::from_bits(2, &[false; 3]),
            Err(Error::LengthMismatch {
                expected: 4,
                got: 3
            })
        ));
        assert!(matches!(
            BooleanFunction::from_bits(21, &[]),
            Err(Error::ArityLimit { .. })
        ));
    }

    #[test]
    fn evaluate_examples() {
        let and2 = BooleanFunction::and(2);
        assert!(and2.evaluate(&[true, true]).unwrap());
        assert!(!and2.evaluate(&[false, true]).unwrap());
        assert!(!BooleanFunction::parity(3)
            .evaluate(&[true, true, false])
            .unwrap());
        assert!(and2.evaluate(&[true]).is_err());
    }

    #[test]
    fn flip_block_examples() {
        assert_eq!(
            flip_block(&[false, false, false], &[0, 2]).unwrap(),
            vec![true, false, true]
        );
        let x = vec![true, false, true];
        assert_eq!(flip_block(&x, &[]).unwrap(), x);
        assert_eq!(
            flip_block(&[true, false], &[0, 1]).unwrap(),
            vec![false, true]
        );
        assert!(flip_block(&[true], &[1]).is_err());
    }

    #[test]
    fn restrict_examples() {
        let and3 = BooleanFunction::and(3);
        let one = Assignment::new(&[(2, true)]).unwrap();
        let zero = Assignment::new(&[(2, false)]).unwrap();
        assert_eq!(and3.restrict(&one).unwrap(), BooleanFunction::and(2));
        assert_eq!(
            and3.restrict(&zero).unwrap(),
            BooleanFunction::constant(2, false)
        );
        let not_x1 = BooleanFunction::parity(2)
            .restrict(&Assignment::new(&[(1, true)]).unwrap())
            .unwrap();
        assert_eq!(not_x1, BooleanFunction::dictator(1, 0).complement());
        assert!(and3
            .restrict(&Assignment::new(&[(3, true)]).unwrap())
            .is_err());
    }

    #[test]
    fn restrict_keeps_relative_order() {
        // f(x0,x1,x2) = x0 ∧ ¬x2, fix x1 → g(y0,y1) = y0 ∧ ¬y1
        let f = BooleanFunction::from_fn(3, |x| x & 1 == 1 && x & 4 == 0);
        let g = f.restrict(&Assignment::new(&[(1, true)]).unwrap()).unwrap();
        assert_eq!(g, BooleanFunction::from_fn(2, |y| y == 1));
    }

    #[test]
    fn mobius_examples() {
        let a = BooleanFunction::and(2).mobius_expand();
        assert_eq!(a.as_slice(), &[0, 0, 0, 1]);
        let o = BooleanFunction::or(2).mobius_expand();
        assert_eq!(o.as_slice(), &[0, 1, 1, -1]);
        let p = BooleanFunction::parity(2).mobius_expand();
        assert_eq!(p.as_slice(), &[0, 1, 1, -2]);
    }

    #[test]
    fn fourier_examples() {
        let c = BooleanFunction::constant(2, true).fourier_expand();
        assert_eq!(c.coefficient(0), frac(1, 1));
        assert!((1..4).all(|s| c.scaled(s) == 0));

        let d = BooleanFunction::dictator(1, 0).fourier_expand();
        assert_eq!(d.coefficient(0), frac(1, 2));
        assert_eq!(d.coefficient(1), frac(-1, 2));

        let p = BooleanFunction::parity(2).fourier_expand();
        assert_eq!(p.coefficient(0), frac(1, 2));
        assert_eq!(p.coefficient(1), frac(0, 1));
        assert_eq!(p.coefficient(2), frac(0, 1));
        assert_eq!(p.coefficient(3), frac(-1, 2));
    }

    #[test]
    fn compose_examples() {
        let t =
            BooleanFunction::compose_blockwise(&BooleanFunction::or(2), &BooleanFunction::and(2))
                .unwrap();
        assert_eq!(t, BooleanFunction::tribes(2, 2));
        let p = BooleanFunction::compose_blockwise(
            &BooleanFunction::parity(2),
            &BooleanFunction::parity(2),
        )
        .unwrap();
        assert_eq!(p, BooleanFunction::parity(4));
        let g = tt("3:01101001");
        let same =
            BooleanFunction::compose_blockwise(&BooleanFunction::dictator(1, 0), &g).unwrap();
        assert_eq!(same, g);
        assert!(BooleanFunction::compose_blockwise(
            &BooleanFunction::and(5),
            &BooleanFunction::and(5)
        )
        .is_err());
    }

    #[test]
    fn decision_tree_examples() {
        assert_eq!(
            BooleanFunction::decision_tree_complete(1).unwrap(),
            BooleanFunction::dictator(1, 0)
        );
        let t2 = BooleanFunction::decision_tree_complete(2).unwrap();
        let expected =
            BooleanFunction::from_fn(3, |x| if x & 1 == 1 { x & 2 != 0 } else { x & 4 != 0 });
        assert_eq!(t2, expected);
        let m = t2.mobius_expand();
        // x1x2 + x3 − x1x3
        assert_eq!(m.get(0b011), 1);
        assert_eq!(m.get(0b100), 1);
        assert_eq!(m.get(0b101), -1);
        assert_eq!(m.nonzero().count(), 3);
        let t3 = BooleanFunction::decision_tree_complete(3).unwrap();
        assert_eq!(t3.arity(), 7);
        assert_eq!(t3.mobius_expand().degree(), 3);
        assert!(BooleanFunction::decision_tree_complete(5).is_err());
    }

    #[test]
    fn text_formats() {
        let and2 = tt("2:0001");
        assert_eq!(and2, BooleanFunction::and(2));
        assert_eq!(and2.to_string(), "2:0001");
        assert_eq!(and2.to_hex_string(), "2:0x8");
        assert_eq!(tt("2:0x8"), and2);
        let f = tt("4:0110100110010110");
        assert_eq!(f, BooleanFunction::parity(4));
        assert_eq!(f.to_hex_string(), "4:0x6996");
        assert_eq!(tt("1:0x2"), BooleanFunction::dictator(1, 0));
        assert_eq!(tt("0:1"), BooleanFunction::constant(0, true));
        assert!("2:000".parse::<BooleanFunction>().is_err());
        assert!("2:0002".parse::<BooleanFunction>().is_err());
        assert!("1:0x4".parse::<BooleanFunction>().is_err());
        assert!("2:0x08".parse::<BooleanFunction>().is_err());
        assert!("0001".parse::<BooleanFunction>().is_err());
        assert!("21:0".parse::<BooleanFunction>().is_err());
    }

    #[test]
    fn deposit_extract_inverse() {
        let pos = 0b1011_0100;
        for y in 0..16 {
            assert_eq!(extract(deposit(y, pos), pos), y);
        }
    }
}
