//! Exact phase-I simplex for systems `A p ≤ c` with free variables `p`.
//!
//! The auxiliary problem is `min z  s.t.  a_i·p − z ≤ c_i,  z ≥ 0`. It is
//! kept as a condensed dictionary (one column per nonbasic variable) and
//! solved with the dual simplex method: the starting dictionary with no
//! rows is optimal, and appending a row never breaks dual feasibility, so
//! rows can be added one batch at a time with a warm start. Pivot choices
//! follow least-index (Bland) rules, which rules out cycling.
//!
//! At an optimum with `z* > 0` the reduced costs of the nonbasic slacks give
//! `y ≥ 0` with `yᵀA = 0` and `yᵀc = −z*`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ratio::Rational;

/// Result of a feasibility solve of `A p ≤ c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeqOutcome {
    /// A point satisfying every row.
    Feasible(Vec<Rational>),
    /// `y ≥ 0`, one entry per row, with `yᵀA = 0` and `yᵀc = −1`.
    Infeasible(Vec<Rational>),
}

/// Warm-startable solver; rows are identified by insertion order.
///
/// Variables are numbered `p_0..p_{vars−1}`, then `z`, then one slack per row.
/// The dictionary is stored fraction-free: every entry is an integer over the
/// common denominator `den`, updated by Bareiss-style exact division.
#[derive(Debug, Clone)]
pub struct IncrementalLeq {
    vars: usize,
    /// basic variable of each dictionary row
    basic: Vec<usize>,
    /// nonbasic variable of each column
    nonbasic: Vec<usize>,
    /// `x_basic[i] = (beta[i] − Σ_j table[i][j] x_nonbasic[j]) / den`
    table: Vec<Vec<BigInt>>,
    beta: Vec<BigInt>,
    /// `z = (obj0 + Σ_j obj[j] x_nonbasic[j]) / den`
    obj: Vec<BigInt>,
    obj0: BigInt,
    den: BigInt,
    /// positive factor each row was scaled by to clear denominators
    scale: Vec<BigInt>,
}

impl IncrementalLeq {
    pub fn new(vars: usize) -> Self {
        let mut obj = vec![BigInt::zero(); vars + 1];
        obj[vars] = BigInt::one();
        Self {
            vars,
            basic: Vec::new(),
            nonbasic: (0..=vars).collect(),
            table: Vec::new(),
            beta: Vec::new(),
            obj,
            obj0: BigInt::zero(),
            den: BigInt::one(),
            scale: Vec::new(),
        }
    }

    pub fn row_count(&self) -> usize {
        self.scale.len()
    }

    fn is_free(&self, v: usize) -> bool {
        v < self.vars
    }

    /// Appends `a·p ≤ c`; returns the row id.
    pub fn add_row(&mut self, a: &[Rational], c: Rational) -> usize {
        assert_eq!(a.len(), self.vars, "row width mismatch");
        let (a, c, scale) = integer_row(a, &c);

        // den·s = den·c − Σ a_j den·p_j + den·z over the nonbasic variables
        let mut t = vec![BigInt::zero(); self.nonbasic.len()];
        let mut beta = &c * &self.den;
        let terms = a
            .iter()
            .enumerate()
            .filter(|(_, aj)| !aj.is_zero())
            .map(|(j, aj)| (j, -aj.clone()))
            .chain(std::iter::once((self.vars, BigInt::one())));
        for (var, coef) in terms {
            if let Some(q) = self.nonbasic.iter().position(|&v| v == var) {
                t[q] -= &coef * &self.den;
            } else {
                let i = self
                    .basic
                    .iter()
                    .position(|&v| v == var)
                    .expect("variable is basic");
                beta += &coef * &self.beta[i];
                for (tq, tiq) in t.iter_mut().zip(&self.table[i]) {
                    if !tiq.is_zero() {
                        *tq += &coef * tiq;
                    }
                }
            }
        }

        let id = self.scale.len();
        self.basic.push(self.vars + 1 + id);
        self.table.push(t);
        self.beta.push(beta);
        self.scale.push(scale);
        id
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.table[row][col].clone();
        let den = std::mem::replace(&mut self.den, p.clone());
        let pivot_row = self.table[row].clone();
        let pivot_beta = self.beta[row].clone();

        // a'_ij = (a_ij·p − a_ic·a_rj) / den, exact by Sylvester's identity
        // `sign` is −1 for dictionary rows and +1 for the objective, whose
        // constant enters with the opposite sign
        let update = |entries: &mut [BigInt], beta: &mut BigInt, sign: i32| {
            let f = entries[col].clone();
            for (k, e) in entries.iter_mut().enumerate() {
                if k == col {
                    *e = -f.clone();
                } else {
                    let mut v = &*e * &p;
                    if !f.is_zero() && !pivot_row[k].is_zero() {
                        v -= &f * &pivot_row[k];
                    }
                    *e = exact_div(v, &den);
                }
            }
            let mut v = &*beta * &p;
            if !f.is_zero() {
                if sign < 0 {
                    v -= &f * &pivot_beta;
                } else {
                    v += &f * &pivot_beta;
                }
            }
            *beta = exact_div(v, &den);
        };
        for i in 0..self.table.len() {
            if i != row {
                update(&mut self.table[i], &mut self.beta[i], -1);
            }
        }
        update(&mut self.obj, &mut self.obj0, 1);
        // the pivot row keeps its numerators; its pivot entry becomes the old denominator
        self.table[row][col] = den;

        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for entries in self.table.iter_mut().chain(std::iter::once(&mut self.obj)) {
                for e in entries.iter_mut() {
                    *e = -std::mem::take(e);
                }
            }
            for b in self.beta.iter_mut().chain(std::iter::once(&mut self.obj0)) {
                *b = -std::mem::take(b);
            }
        }

        std::mem::swap(&mut self.basic[row], &mut self.nonbasic[col]);
    }

    /// Least-index sign-constrained basic variable with a negative value.
    fn dual_leaving(&self) -> Option<usize> {
        (0..self.basic.len())
            .filter(|&i| !self.is_free(self.basic[i]) && self.beta[i].is_negative())
            .min_by_key(|&i| self.basic[i])
    }

    /// Dual ratio test on `row`; ties go to the least variable index.
    fn dual_entering(&self, row: usize) -> Option<usize> {
        // candidate ratio |obj_j| / |t_j|, kept as (numerator, denominator)
        let mut best: Option<(BigInt, BigInt, usize, usize)> = None;
        for (j, &v) in self.nonbasic.iter().enumerate() {
            let t = &self.table[row][j];
            let eligible = if self.is_free(v) {
                !t.is_zero()
            } else {
                t.is_negative()
            };
            if !eligible {
                continue;
            }
            let (num, den) = (self.obj[j].abs(), t.abs());
            let better = match &best {
                None => true,
                Some((bn, bd, bv, _)) => {
                    let (lhs, rhs) = (&num * bd, bn * &den);
                    lhs < rhs || (lhs == rhs && v < *bv)
                }
            };
            if better {
                best = Some((num, den, v, j));
            }
        }
        best.map(|(_, _, _, j)| j)
    }

    /// Numerators of the current `p` over the common denominator
    /// [`Self::denominator`].
    pub fn point_numerators(&self) -> Vec<BigInt> {
        (0..self.vars)
            .map(|v| match self.basic.iter().position(|&b| b == v) {
                Some(i) => self.beta[i].clone(),
                None => BigInt::zero(),
            })
            .collect()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    fn value_of(&self, v: usize) -> Rational {
        match self.basic.iter().position(|&b| b == v) {
            Some(i) => Rational::new(self.beta[i].clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    /// Re-optimises after rows were added and reports on all rows so far.
    pub fn solve(&mut self) -> LeqOutcome {
        while let Some(row) = self.dual_leaving() {
            // z can always absorb a violated row, so some column qualifies
            let col = self
                .dual_entering(row)
                .expect("auxiliary problem is always feasible");
            self.pivot(row, col);
        }
        if self.obj0.is_zero() {
            return LeqOutcome::Feasible((0..self.vars).map(|v| self.value_of(v)).collect());
        }
        // multipliers for the scaled rows, mapped back to the rows as given
        let mut y = vec![Rational::zero(); self.scale.len()];
        for (j, &v) in self.nonbasic.iter().enumerate() {
            if v > self.vars {
                let r = v - self.vars - 1;
                y[r] = Rational::new(&self.obj[j] * &self.scale[r], self.obj0.clone());
            }
        }
        LeqOutcome::Infeasible(y)
    }
}

/// Clears the denominators of `a·p ≤ c`; returns the integer row, its
/// right-hand side and the positive factor applied.
pub fn integer_row(a: &[Rational], c: &Rational) -> (Vec<BigInt>, BigInt, BigInt) {
    let scale = a
        .iter()
        .chain(std::iter::once(c))
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints = a.iter().map(|r| (r * &scale).to_integer()).collect();
    (ints, (c * &scale).to_integer(), scale)
}

fn exact_div(v: BigInt, den: &BigInt) -> BigInt {
    if den.is_one() {
        return v;
    }
    debug_assert!((&v % den).is_zero(), "Bareiss division must be exact");
    v / den
}

/// Decides feasibility of `rows · p ≤ rhs` over free `p ∈ ℚ^vars`.
///
/// Deterministic: the pivot sequence depends only on the input.
pub fn solve_leq(rows: &[Vec<Rational>], rhs: &[Rational], vars: usize) -> LeqOutcome {
    assert_eq!(rows.len(), rhs.len(), "row/rhs count mismatch");
    let mut solver = IncrementalLeq::new(vars);
    for (a, c) in rows.iter().zip(rhs) {
        solver.add_row(a, c.clone());
    }
    solver.solve()
}
