use std::collections::HashSet;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::RatVec;

/// Answer of [`semigroup_contains`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    /// Indices of generators (with repetition, nondecreasing) summing to the target.
    Member(Vec<usize>),
    /// Every residual `target - Σ gens` of nonnegative grading was
    /// explored without reaching zero.
    NotMember { residuals_explored: usize },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

fn scaled_grading(grading: &RatVec) -> Result<Vec<i64>> {
    grading
        .clear_denominators()
        .iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect()
}

fn gval(g: &[i64], v: &[i64]) -> i128 {
    g.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum()
}

/// Decides whether `target` is a nonnegative integer combination of `gens`
/// by exhaustive search over residuals, bounded by a grading that is
/// strictly positive on every generator.
pub fn semigroup_contains(gens: &[Vec<i64>], target: &[i64], grading: &RatVec) -> Result<Membership> {
    let g = scaled_grading(grading)?;
    let values: Vec<i128> = gens.iter().map(|v| gval(&g, v)).collect();
    for (v, &x) in gens.iter().zip(&values) {
        if x <= 0 {
            return Err(Error::InvalidGrading(format!("{v:?}")));
        }
    }
    // Generators sorted by grading so that decompositions come out in a
    // fixed order; duplicates dropped.
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&k| (values[k], gens[k].clone()));
    order.dedup_by_key(|k| gens[*k].clone());
    let min_val = order.iter().map(|&k| values[k]).min();

    struct Search<'a> {
        gens: &'a [Vec<i64>],
        values: &'a [i128],
        order: &'a [usize],
        g: &'a [i64],
        min_val: Option<i128>,
        failed: HashSet<(Vec<i64>, usize)>,
    }
    impl Search<'_> {
        // Decompositions use generators in nondecreasing position of `order`
        // starting at `from`, so every multiset is visited once.
        fn go(&mut self, t: &[i64], from: usize, path: &mut Vec<usize>) -> bool {
            if t.iter().all(|&x| x == 0) {
                return true;
            }
            let tv = gval(self.g, t);
            match self.min_val {
                Some(m) if tv >= m => {}
                _ => return false,
            }
            if self.failed.contains(&(t.to_vec(), from)) {
                return false;
            }
            for pos in from..self.order.len() {
                let k = self.order[pos];
                if self.values[k] > tv {
                    break;
                }
                let next: Vec<i64> = t.iter().zip(&self.gens[k]).map(|(a, b)| a - b).collect();
                path.push(k);
                if self.go(&next, pos, path) {
                    return true;
                }
                path.pop();
            }
            self.failed.insert((t.to_vec(), from));
            false
        }
    }
    let mut search = Search {
        gens,
        values: &values,
        order: &order,
        g: &g,
        min_val,
        failed: HashSet::new(),
    };
    let mut path = Vec::new();
    if search.go(target, 0, &mut path) {
        path.sort();
        Ok(Membership::Member(path))
    } else {
        Ok(Membership::NotMember {
            residuals_explored: search.failed.len(),
        })
    }
}
