//! Exact two-phase simplex with Bland's rule.
//!
//! The solver works on a dense tableau of [`BigRational`]s. Free variables
//! are split, `≥`/`≤` rows get surplus/slack columns and every row gets an
//! artificial column, which is kept in the tableau after phase one so that
//! dual multipliers (and Farkas certificates) can be read off it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub rel: Relation,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, rel: Relation, rhs: Q) -> Self {
        Constraint { coeffs, rel, rhs }
    }

    pub fn from_ints(coeffs: &[i64], rel: Relation, rhs: i64) -> Self {
        Constraint {
            coeffs: coeffs.iter().map(|&c| Q::from_integer(c.into())).collect(),
            rel,
            rhs: Q::from_integer(rhs.into()),
        }
    }

    fn satisfied_by(&self, x: &[Q]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.rel {
            Relation::Ge => lhs >= self.rhs,
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// `minimize objective·x` subject to the constraints; variables flagged in
/// `nonneg` are constrained to be `≥ 0`, the others are free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: Vec<Q>,
    pub constraints: Vec<Constraint>,
    pub nonneg: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        point: Vec<Q>,
        value: Q,
        /// One multiplier per constraint: `objective = Σ duals_k · a_k` on
        /// free columns and `≥` on nonnegative ones.
        duals: Vec<Q>,
    },
    /// Multipliers `μ` with `μ_k ≥ 0` on `≥` rows, `μ_k ≤ 0` on `≤` rows,
    /// `Σ μ_k a_k` zero on free columns and `≤ 0` on nonnegative columns,
    /// and `Σ μ_k b_k > 0`.
    Infeasible { farkas: Vec<Q> },
    Unbounded { point: Vec<Q>, ray: Vec<Q> },
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible { .. })
    }
}

pub(crate) fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            objective: vec![Q::zero(); num_vars],
            constraints: Vec::new(),
            nonneg: vec![false; num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, c: Constraint) {
        assert_eq!(c.coeffs.len(), self.num_vars(), "constraint width");
        self.constraints.push(c);
    }

    pub fn is_feasible_point(&self, x: &[Q]) -> bool {
        x.len() == self.num_vars()
            && self.constraints.iter().all(|c| c.satisfied_by(x))
            && x
                .iter()
                .zip(&self.nonneg)
                .all(|(v, &nn)| !nn || !v.is_negative())
    }

    /// Re-checks a Farkas certificate by direct arithmetic.
    pub fn verify_farkas(&self, mu: &[Q]) -> bool {
        if mu.len() != self.constraints.len() {
            return false;
        }
        for (m, c) in mu.iter().zip(&self.constraints) {
            let ok = match c.rel {
                Relation::Ge => !m.is_negative(),
                Relation::Le => !m.is_positive(),
                Relation::Eq => true,
            };
            if !ok {
                return false;
            }
        }
        for j in 0..self.num_vars() {
            let s = mu
                .iter()
                .zip(&self.constraints)
                .fold(Q::zero(), |acc, (m, c)| acc + m * &c.coeffs[j]);
            if self.nonneg[j] {
                if s.is_positive() {
                    return false;
                }
            } else if !s.is_zero() {
                return false;
            }
        }
        let rhs = mu
            .iter()
            .zip(&self.constraints)
            .fold(Q::zero(), |acc, (m, c)| acc + m * &c.rhs);
        rhs.is_positive()
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(self)
    }
}

struct Tableau {
    /// m rows of (ncols + 1) entries; last entry is the rhs.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    ncols: usize,
    first_artificial: usize,
    /// Column layout of original variables: (plus column, optional minus column).
    var_cols: Vec<(usize, Option<usize>)>,
    sign: Vec<Q>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let m = lp.constraints.len();
        let mut var_cols = Vec::with_capacity(lp.num_vars());
        let mut col = 0;
        for &nn in &lp.nonneg {
            if nn {
                var_cols.push((col, None));
                col += 1;
            } else {
                var_cols.push((col, Some(col + 1)));
                col += 2;
            }
        }
        let mut slack_cols = Vec::with_capacity(m);
        for c in &lp.constraints {
            if c.rel == Relation::Eq {
                slack_cols.push(None);
            } else {
                slack_cols.push(Some(col));
                col += 1;
            }
        }
        let first_artificial = col;
        let ncols = col + m;
        let mut rows = Vec::with_capacity(m);
        let mut sign = Vec::with_capacity(m);
        for (k, c) in lp.constraints.iter().enumerate() {
            let mut row = vec![Q::zero(); ncols + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                let (p, q) = var_cols[j];
                row[p] = a.clone();
                if let Some(q) = q {
                    row[q] = -a.clone();
                }
            }
            if let Some(s) = slack_cols[k] {
                row[s] = match c.rel {
                    Relation::Ge => -Q::one(),
                    _ => Q::one(),
                };
            }
            row[ncols] = c.rhs.clone();
            let s = if c.rhs.is_negative() {
                for x in row.iter_mut() {
                    *x = -std::mem::take(x);
                }
                -Q::one()
            } else {
                Q::one()
            };
            row[first_artificial + k] = Q::one();
            sign.push(s);
            rows.push(row);
        }
        Tableau {
            rows,
            basis: (first_artificial..ncols).collect(),
            ncols,
            first_artificial,
            var_cols,
            sign,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs `c_j - c_B B^{-1} A_j` for every column.
    fn reduced_costs(&self, cost: &[Q]) -> Vec<Q> {
        let mut d: Vec<Q> = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.ncols {
                let a = &self.rows[i][j];
                if !a.is_zero() {
                    d[j] -= cb * a;
                }
            }
        }
        d
    }

    /// Runs simplex iterations with Bland's rule on columns `< allowed`.
    /// Returns `Err(col)` if the column proves unboundedness.
    fn iterate(&mut self, cost: &[Q], allowed: usize) -> Result<(), usize> {
        loop {
            let d = self.reduced_costs(cost);
            let Some(enter) = (0..allowed).find(|&j| d[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return Err(enter),
            }
        }
    }

    fn column_values(&self) -> Vec<Q> {
        let mut x = vec![Q::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rows[i][self.ncols].clone();
        }
        x
    }

    fn original_point(&self, x: &[Q]) -> Vec<Q> {
        self.var_cols
            .iter()
            .map(|&(p, q)| match q {
                Some(q) => &x[p] - &x[q],
                None => x[p].clone(),
            })
            .collect()
    }

    /// Multipliers for the original constraints read off the artificial columns.
    fn multipliers(&self, d: &[Q], art_cost: &Q) -> Vec<Q> {
        (0..self.rows.len())
            .map(|k| (art_cost - &d[self.first_artificial + k]) * &self.sign[k])
            .collect()
    }

    fn run(mut self, lp: &LinearProgram) -> LpOutcome {
        let m = self.rows.len();
        // Phase one.
        let mut cost1 = vec![Q::zero(); self.ncols];
        for c in cost1.iter_mut().skip(self.first_artificial) {
            *c = Q::one();
        }
        self.iterate(&cost1, self.ncols)
            .expect("phase one is bounded below by zero");
        let x = self.column_values();
        let infeas: Q = x[self.first_artificial..]
            .iter()
            .fold(Q::zero(), |a, b| a + b);
        if infeas.is_positive() {
            let d = self.reduced_costs(&cost1);
            let farkas = self.multipliers(&d, &Q::one());
            debug_assert!(lp.verify_farkas(&farkas));
            return LpOutcome::Infeasible { farkas };
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..m {
            if self.basis[r] < self.first_artificial {
                continue;
            }
            if let Some(c) = (0..self.first_artificial).find(|&c| !self.rows[r][c].is_zero()) {
                self.pivot(r, c);
            }
        }
        // Phase two.
        let mut cost2 = vec![Q::zero(); self.ncols];
        for (j, &(p, q)) in self.var_cols.iter().enumerate() {
            cost2[p] = lp.objective[j].clone();
            if let Some(q) = q {
                cost2[q] = -lp.objective[j].clone();
            }
        }
        match self.iterate(&cost2, self.first_artificial) {
            Ok(()) => {
                let x = self.column_values();
                let point = self.original_point(&x);
                let value = dot(&lp.objective, &point);
                let d = self.reduced_costs(&cost2);
                let duals = self.multipliers(&d, &Q::zero());
                LpOutcome::Optimal {
                    point,
                    value,
                    duals,
                }
            }
            Err(enter) => {
                let x = self.column_values();
                let point = self.original_point(&x);
                let mut dir = vec![Q::zero(); self.ncols];
                dir[enter] = Q::one();
                for (i, &b) in self.basis.iter().enumerate() {
                    dir[b] = -self.rows[i][enter].clone();
                }
                let ray = self.original_point(&dir);
                LpOutcome::Unbounded { point, ray }
            }
        }
    }
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Q {
        Q::from_integer(x.into())
    }

    #[test]
    fn minimize_single_bound() {
        let mut lp = LinearProgram::new(1);
        lp.objective = vec![q(1)];
        lp.add(Constraint::from_ints(&[1], Relation::Ge, 3));
        match lp.solve() {
            LpOutcome::Optimal { point, value, .. } => {
                assert_eq!(point, vec![q(3)]);
                assert_eq!(value, q(3));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn farkas_one_variable() {
        let mut lp = LinearProgram::new(1);
        lp.add(Constraint::from_ints(&[1], Relation::Ge, 1));
        lp.add(Constraint::from_ints(&[-1], Relation::Ge, 0));
        match lp.solve() {
            LpOutcome::Infeasible { farkas } => {
                assert!(lp.verify_farkas(&farkas));
                assert_eq!(farkas[0], farkas[1]);
                assert!(farkas[0].is_positive());
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn unbounded_ray() {
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![q(-1), q(0)];
        lp.nonneg = vec![true, true];
        lp.add(Constraint::from_ints(&[1, -1], Relation::Le, 2));
        match lp.solve() {
            LpOutcome::Unbounded { point, ray } => {
                assert!(lp.is_feasible_point(&point));
                assert!(dot(&lp.objective, &ray).is_negative());
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn equality_and_free_variables() {
        // min x + y  s.t. x - y = 1, x + 2y >= 4, y free, x >= 0
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![q(1), q(1)];
        lp.nonneg = vec![true, false];
        lp.add(Constraint::from_ints(&[1, -1], Relation::Eq, 1));
        lp.add(Constraint::from_ints(&[1, 2], Relation::Ge, 4));
        match lp.solve() {
            LpOutcome::Optimal { point, value, duals } => {
                assert_eq!(point, vec![q(2), q(1)]);
                assert_eq!(value, q(3));
                // Strong duality.
                let dual_obj = duals
                    .iter()
                    .zip(&lp.constraints)
                    .fold(Q::zero(), |a, (d, c)| a + d * &c.rhs);
                assert_eq!(dual_obj, value);
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn scaling_objective_keeps_vertex() {
        let mut lp = LinearProgram::new(2);
        lp.nonneg = vec![true, true];
        lp.objective = vec![q(-1), q(-1)];
        lp.add(Constraint::from_ints(&[1, 2], Relation::Le, 4));
        lp.add(Constraint::from_ints(&[2, 1], Relation::Le, 4));
        lp.add(Constraint::from_ints(&[1, 1], Relation::Le, 3));
        let a = lp.solve();
        lp.objective = vec![Q::new(7.into(), 3.into()) * q(-1); 2];
        let b = lp.solve();
        match (a, b) {
            (LpOutcome::Optimal { point: p, .. }, LpOutcome::Optimal { point: r, .. }) => {
                assert_eq!(p, r)
            }
            _ => panic!(),
        }
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![Q::new(1.into(), 2.into()), Q::new(3.into(), 4.into()), q(0)];
        assert_eq!(
            primitive_integer(&v),
            vec![BigInt::from(2), BigInt::from(3), BigInt::zero()]
        );
    }
}
