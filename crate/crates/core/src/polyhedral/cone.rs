//! Cones given by inequalities or by generators, on top of the exact LP.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lp::{primitive_integer, Constraint, LinearProgram, LpOutcome, Relation};
use crate::error::{Error, Result};
use crate::exact::{primitive, RatVec};

type Q = BigRational;

fn qi(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn row(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| qi(x)).collect()
}

fn dedup_primitive(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for r in rows {
        if r.iter().all(|&x| x == 0) {
            continue;
        }
        let p = primitive(r);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Facet-defining rows (primitive, deduplicated) of the full-dimensional
/// cone `{w : a·w ≥ 0 for a in ineqs}`. By Farkas' lemma a row is redundant
/// iff it lies in the cone spanned by the other rows, which is an LP with
/// one equality per coordinate.
pub fn facets_of_inequalities(ineqs: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rows = dedup_primitive(ineqs);
    let mut out = Vec::new();
    for (k, a) in rows.iter().enumerate() {
        let others: Vec<Vec<i64>> = rows
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, b)| b.clone())
            .collect();
        if !in_cone(&others, a) {
            out.push(a.clone());
        }
    }
    out
}

/// Point maximizing the minimum slack `ε` over `a·w ≥ ε`, `w_i ≥ ε`,
/// `w ≤ 1`, with optional equalities `e·w = 0`. Returns `(w, ε)`.
pub fn max_slack_point(ineqs: &[Vec<i64>], equalities: &[Vec<i64>], dim: usize) -> (RatVec, Q) {
    let mut lp = LinearProgram::new(dim + 1);
    // w = 0, ε = 0 is feasible, so the optimum has ε ≥ 0 and w ≥ ε ≥ 0.
    lp.nonneg = vec![true; dim + 1];
    lp.objective[dim] = -Q::one();
    let with_eps = |a: &[i64]| {
        let mut c = row(a);
        c.push(-Q::one());
        c
    };
    for a in ineqs {
        lp.add(Constraint::new(with_eps(a), Relation::Ge, Q::zero()));
    }
    for i in 0..dim {
        let mut e = vec![0i64; dim];
        e[i] = 1;
        lp.add(Constraint::new(with_eps(&e), Relation::Ge, Q::zero()));
        let mut c = vec![Q::zero(); dim + 1];
        c[i] = Q::one();
        lp.add(Constraint::new(c, Relation::Le, Q::one()));
    }
    for e in equalities {
        let mut c = row(e);
        c.push(Q::zero());
        lp.add(Constraint::new(c, Relation::Eq, Q::zero()));
    }
    match lp.solve() {
        LpOutcome::Optimal { point, .. } => {
            let eps = point[dim].clone();
            (RatVec::new(point[..dim].to_vec()), eps)
        }
        // w = 0, ε = 0 is always feasible and ε ≤ 1.
        other => unreachable!("max-slack LP returned {other:?}"),
    }
}

/// Outcome of [`strict_separation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Separation {
    /// Primitive integer `w ≥ 0` with `w·d > 0` for every pair.
    Witness(Vec<BigInt>),
    /// Nonnegative integer multipliers, one per pair, whose combination of
    /// the pairs is componentwise `≤ 0`, so no `w ≥ 0` can be positive on
    /// all of them. Support is inclusion-minimal.
    Certificate(Vec<BigInt>),
}

impl Separation {
    pub fn is_witness(&self) -> bool {
        matches!(self, Separation::Witness(_))
    }
}

/// Decides whether some `w ≥ 0` satisfies `w·d > 0` for all `d` in `pairs`.
pub fn strict_separation(pairs: &[Vec<i64>]) -> Result<Separation> {
    let Some(dim) = pairs.first().map(|p| p.len()) else {
        return Err(Error::Precondition("strict separation needs at least one pair".into()));
    };
    let (w, eps) = max_slack_point(pairs, &[], dim);
    if eps.is_positive() {
        let mut wi = primitive_integer(w.entries());
        // Any w on the optimal ray works; keep the LP vertex but make sure it
        // is strictly positive on the pairs (it is, by ε > 0).
        if wi.iter().all(|x| x.is_zero()) {
            wi = vec![BigInt::one(); dim];
        }
        return Ok(Separation::Witness(wi));
    }
    let active: Vec<usize> = (0..pairs.len()).collect();
    let mut support = gordan(pairs, &active)
        .map(|_| active.clone())
        .ok_or_else(|| Error::Data("separation LP and its alternative disagree".into()))?;
    // Greedy minimization of the support.
    let mut k = 0;
    while k < support.len() {
        let mut trial = support.clone();
        trial.remove(k);
        if !trial.is_empty() && gordan(pairs, &trial).is_some() {
            support = trial;
        } else {
            k += 1;
        }
    }
    let lambda = gordan(pairs, &support).expect("support certified above");
    let ints = primitive_integer(&lambda);
    let mut mult = vec![BigInt::zero(); pairs.len()];
    for (&i, v) in support.iter().zip(ints) {
        mult[i] = v;
    }
    Ok(Separation::Certificate(mult))
}

/// Solves `λ ≥ 0, Σλ = 1, Σ λ_d d ≤ 0` over the given subset of pairs.
fn gordan(pairs: &[Vec<i64>], subset: &[usize]) -> Option<Vec<Q>> {
    let dim = pairs[0].len();
    let mut lp = LinearProgram::new(subset.len());
    lp.nonneg = vec![true; subset.len()];
    lp.add(Constraint::new(vec![Q::one(); subset.len()], Relation::Eq, Q::one()));
    for i in 0..dim {
        let c: Vec<Q> = subset.iter().map(|&k| qi(pairs[k][i])).collect();
        lp.add(Constraint::new(c, Relation::Le, Q::zero()));
    }
    match lp.solve() {
        LpOutcome::Optimal { point, .. } => Some(point),
        _ => None,
    }
}

/// Recheck of a separation result against the pairs, by plain arithmetic.
pub fn verify_separation(pairs: &[Vec<i64>], s: &Separation) -> bool {
    match s {
        Separation::Witness(w) => {
            w.iter().all(|x| !x.is_negative())
                && pairs.iter().all(|d| {
                    let v: BigInt = d.iter().zip(w).map(|(&a, b)| BigInt::from(a) * b).sum();
                    v.is_positive()
                })
        }
        Separation::Certificate(m) => {
            if m.len() != pairs.len() || m.iter().any(|x| x.is_negative()) || m.iter().all(|x| x.is_zero()) {
                return false;
            }
            let dim = pairs[0].len();
            (0..dim).all(|i| {
                let s: BigInt = pairs.iter().zip(m).map(|(d, c)| BigInt::from(d[i]) * c).sum();
                !s.is_positive()
            })
        }
    }
}

/// Whether `y ∈ cone(gens)` (nonnegative rational combination).
pub fn in_cone(gens: &[Vec<i64>], y: &[i64]) -> bool {
    if gens.is_empty() {
        return y.iter().all(|&x| x == 0);
    }
    let dim = y.len();
    let mut lp = LinearProgram::new(gens.len());
    lp.nonneg = vec![true; gens.len()];
    for i in 0..dim {
        let c: Vec<Q> = gens.iter().map(|g| qi(g[i])).collect();
        lp.add(Constraint::new(c, Relation::Eq, qi(y[i])));
    }
    !lp.solve().is_infeasible()
}

/// Checks that no nonzero `x` has both `x` and `-x` in `cone(gens)`,
/// by finding a linear form that is `≥ 1` on every nonzero generator.
pub fn positive_functional(gens: &[Vec<i64>]) -> Option<Vec<BigInt>> {
    let nz: Vec<&Vec<i64>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).collect();
    let Some(dim) = nz.first().map(|g| g.len()) else {
        return Some(Vec::new());
    };
    let mut lp = LinearProgram::new(dim);
    for g in &nz {
        lp.add(Constraint::new(row(g), Relation::Ge, Q::one()));
    }
    match lp.solve() {
        LpOutcome::Optimal { point, .. } => Some(primitive_integer(&point)),
        _ => None,
    }
}

pub fn is_pointed(gens: &[Vec<i64>]) -> bool {
    positive_functional(gens).is_some()
}

/// Minimal subset of `gens` with the same positive hull, one generator per
/// extreme ray (the first one met in input order).
pub fn extreme_rays(gens: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    if !is_pointed(gens) {
        return Err(Error::NotPointed);
    }
    let mut reps: Vec<Vec<i64>> = Vec::new();
    let mut dirs: Vec<Vec<i64>> = Vec::new();
    for g in gens {
        if g.iter().all(|&x| x == 0) {
            continue;
        }
        let p = primitive(g);
        if !dirs.contains(&p) {
            dirs.push(p);
            reps.push(g.clone());
        }
    }
    let mut out = Vec::new();
    for k in 0..dirs.len() {
        let others: Vec<Vec<i64>> = dirs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, d)| d.clone())
            .collect();
        if !in_cone(&others, &dirs[k]) {
            out.push(reps[k].clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn separation_witness() {
        let pairs = vec![vec![1, 0]];
        let s = strict_separation(&pairs).unwrap();
        assert!(s.is_witness());
        assert!(verify_separation(&pairs, &s));
    }

    #[test]
    fn separation_certificate_three_pairs() {
        let pairs = vec![vec![2, -3, 1], vec![-3, 1, 2], vec![1, 2, -3]];
        let s = strict_separation(&pairs).unwrap();
        assert_eq!(s, Separation::Certificate(bi(&[1, 1, 1])));
        assert!(verify_separation(&pairs, &s));
    }

    #[test]
    fn certificate_support_is_minimal() {
        // (1,-1) and (-1,1) already conflict; (1,0) is irrelevant.
        let pairs = vec![vec![1, 0], vec![1, -1], vec![-1, 1]];
        let s = strict_separation(&pairs).unwrap();
        assert_eq!(s, Separation::Certificate(bi(&[0, 1, 1])));
    }

    #[test]
    fn coordinate_direction_needs_positive_weight() {
        // w = (0, 1) is the only direction up to the w ≥ 0 constraint.
        let pairs = vec![vec![-1, 1], vec![0, 1]];
        let s = strict_separation(&pairs).unwrap();
        assert!(verify_separation(&pairs, &s));
        let pairs = vec![vec![-1, 0]];
        assert!(!strict_separation(&pairs).unwrap().is_witness());
    }

    #[test]
    fn extreme_rays_examples() {
        let r = extreme_rays(&[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(r, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(extreme_rays(&[vec![1, 0], vec![-1, 0]]), Err(Error::NotPointed));
        let r = extreme_rays(&[vec![2, 0], vec![1, 0], vec![0, 3]]).unwrap();
        assert_eq!(r, vec![vec![2, 0], vec![0, 3]]);
    }

    #[test]
    fn facets_of_orthant_with_redundancy() {
        let f = facets_of_inequalities(&[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0]]);
        assert_eq!(f, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn interior_of_cone() {
        let (w, eps) = max_slack_point(&[vec![1, -1]], &[], 2);
        assert!(eps.is_positive());
        assert!(w.entries()[0] > w.entries()[1]);
    }
}
