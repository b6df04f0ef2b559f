use std::collections::HashSet;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::binomial::{buchberger, Binomial, ReducedGB};
use super::ideal::{leading_ideal, MonomialIdeal};
use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::exact::RatVec;
use crate::polyhedral::cone::{facets_of_inequalities, max_slack_point};
use crate::polyhedral::lp::primitive_integer;

/// Closed cone of weights `w ≥ 0` selecting a given reduced basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerCone {
    /// `v·w ≥ 0` for every row: `lead - trail` for each basis element,
    /// followed by the unit vectors.
    pub inequalities: Vec<Vec<i64>>,
    /// Facet-defining subset, primitive.
    pub facets: Vec<Vec<i64>>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0i64; n];
    e[i] = 1;
    e
}

fn is_unit(v: &[i64]) -> bool {
    v.iter().filter(|&&x| x != 0).count() == 1 && v.iter().all(|&x| x >= 0)
}

pub fn groebner_cone(gb: &ReducedGB) -> GroebnerCone {
    let n = gb.nvars();
    let mut inequalities: Vec<Vec<i64>> = gb.elements().iter().map(Binomial::vector).collect();
    inequalities.extend((0..n).map(|i| unit(n, i)));
    let facets = facets_of_inequalities(&inequalities);
    GroebnerCone {
        inequalities,
        facets,
    }
}

impl GroebnerCone {
    pub fn dim(&self) -> usize {
        self.inequalities.first().map(|r| r.len()).unwrap_or(0)
    }

    pub fn contains(&self, w: &RatVec) -> bool {
        self.inequalities.iter().all(|a| !w.dot_int(a).is_negative())
    }

    /// Strictly inside every facet (and hence every inequality that is not
    /// identically tight).
    pub fn contains_strictly(&self, w: &RatVec) -> bool {
        self.facets.iter().all(|a| w.dot_int(a).is_positive())
    }

    /// A strictly positive integer point of the interior, if the cone is
    /// full-dimensional.
    pub fn interior_point(&self) -> Option<RatVec> {
        let (w, eps) = max_slack_point(&self.facets, &[], self.dim());
        if !eps.is_positive() {
            return None;
        }
        Some(RatVec::new(
            primitive_integer(w.entries())
                .into_iter()
                .map(num_rational::BigRational::from_integer)
                .collect(),
        ))
    }

    /// Facets crossing the open positive orthant, each with a strictly
    /// positive point of its relative interior.
    pub fn flippable_facets(&self) -> Vec<(Vec<i64>, RatVec)> {
        let mut out = Vec::new();
        for a in &self.facets {
            if is_unit(a) {
                continue;
            }
            let others: Vec<Vec<i64>> = self.facets.iter().filter(|b| *b != a).cloned().collect();
            let (w, eps) = max_slack_point(&others, std::slice::from_ref(a), self.dim());
            if eps.is_positive() {
                out.push((a.clone(), w));
            }
        }
        out
    }
}

/// One maximal cone of the (positive part of the) Gröbner fan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FanCone {
    pub ideal: MonomialIdeal,
    pub cone: GroebnerCone,
    pub witness: RatVec,
    pub gb: ReducedGB,
}

fn make_cone(gb: ReducedGB) -> Result<FanCone> {
    let ideal = leading_ideal(&gb)?;
    let cone = groebner_cone(&gb);
    let witness = cone
        .interior_point()
        .ok_or_else(|| Error::Data("Gröbner cone of a term order is not full-dimensional".into()))?;
    // Sanity: under its own interior weight the basis has no ties.
    let order = TermOrder::new(witness.clone())?;
    for g in gb.elements() {
        if order.weight_cmp(g.lead(), g.trail()) != std::cmp::Ordering::Greater {
            return Err(Error::Data(format!("interior weight {witness} ties {g}")));
        }
    }
    Ok(FanCone {
        ideal,
        cone,
        witness,
        gb,
    })
}

/// All monomial initial ideals `in_w(I)` for `w` in the open positive
/// orthant, found by breadth-first flipping across facets. Output is sorted
/// by the canonical form of the initial ideal.
pub fn enumerate_fan(gens: &[Binomial], max_cones: Option<usize>) -> Result<Vec<FanCone>> {
    let Some(n) = gens.first().map(|g| g.nvars()) else {
        return Ok(Vec::new());
    };
    let start = buchberger(gens, &TermOrder::deglex(n))?;
    let first = make_cone(start)?;
    let mut seen: HashSet<MonomialIdeal> = HashSet::from([first.ideal.clone()]);
    let mut frontier = vec![first];
    let mut done: Vec<FanCone> = Vec::new();
    while !frontier.is_empty() {
        let found: Vec<Vec<FanCone>> = frontier
            .par_iter()
            .map(|c| -> Result<Vec<FanCone>> {
                let mut out = Vec::new();
                for (normal, w_f) in c.cone.flippable_facets() {
                    let row = primitive_integer(w_f.entries())
                        .iter()
                        .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
                        .collect::<Result<Vec<i64>>>()?;
                    let neg: Vec<i64> = normal.iter().map(|x| -x).collect();
                    let order = TermOrder::from_rows(vec![row, neg])?;
                    let gb = buchberger(c.gb.elements(), &order)?;
                    out.push(make_cone(gb)?);
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        done.append(&mut frontier);
        for c in found.into_iter().flatten() {
            if seen.insert(c.ideal.clone()) {
                if let Some(cap) = max_cones {
                    if seen.len() > cap {
                        return Err(Error::BudgetExceeded(format!("more than {cap} Gröbner cones")));
                    }
                }
                frontier.push(c);
            }
        }
        frontier.sort_by(|a, b| a.ideal.canonical_cmp(&b.ideal));
    }
    done.sort_by(|a, b| a.ideal.canonical_cmp(&b.ideal));
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::lattice::lattice_ideal;
    use crate::groebner::standard_monomials;
    use crate::group::{CharGroup, GroupSpec};

    #[test]
    fn z2_single_cone() {
        let chars = CharGroup::new(&GroupSpec::cyclic(2, &[1]).unwrap());
        let im = lattice_ideal(chars.lattice()).unwrap();
        let fan = enumerate_fan(&im, None).unwrap();
        assert_eq!(fan.len(), 1);
        assert_eq!(fan[0].ideal.min_gens(), &[vec![2]]);
        assert_eq!(fan[0].cone.facets, vec![vec![1]]);
    }

    #[test]
    fn z3_fan_covers_orthant() {
        let chars = CharGroup::new(&GroupSpec::cyclic(3, &[1, 1, 1]).unwrap());
        let im = lattice_ideal(chars.lattice()).unwrap();
        let fan = enumerate_fan(&im, None).unwrap();
        for c in &fan {
            assert_eq!(standard_monomials(&c.ideal, &chars).unwrap().len(), 3);
            assert!(c.cone.contains_strictly(&c.witness));
        }
        // Every sample weight lies in exactly one open cone.
        for w in [[1, 2, 3], [5, 1, 2], [2, 3, 7], [9, 4, 1]] {
            let w = RatVec::from_ints(&w);
            assert_eq!(fan.iter().filter(|c| c.cone.contains_strictly(&w)).count(), 1);
        }
    }

    #[test]
    fn z11_cone_contains_weight() {
        let chars = CharGroup::new(&GroupSpec::cyclic(11, &[1, 2, 8]).unwrap());
        let im = lattice_ideal(chars.lattice()).unwrap();
        let gb = buchberger(&im, &TermOrder::from_ints(&[10, 7, 6]).unwrap()).unwrap();
        let cone = groebner_cone(&gb);
        assert!(cone.contains_strictly(&RatVec::from_ints(&[10, 7, 6])));
    }
}
