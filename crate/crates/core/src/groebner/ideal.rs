use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::binomial::ReducedGB;
use super::io::format_ideal;
use super::order::{canonical_cmp, divides, Exponent};
use crate::error::{Error, Result};
use crate::group::CharGroup;

/// A monomial ideal given by its minimal generators, kept in canonical
/// order (total degree, then lex on exponents).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    min_gens: Vec<Exponent>,
    nvars: usize,
}

impl MonomialIdeal {
    /// Minimalizes and sorts the given generators.
    pub fn new(nvars: usize, gens: Vec<Exponent>) -> Result<Self> {
        for g in &gens {
            if g.len() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: g.len(),
                });
            }
            if g.iter().any(|&e| e < 0) {
                return Err(Error::Precondition("negative exponent".into()));
            }
        }
        let mut gens = gens;
        gens.sort_by(|a, b| canonical_cmp(a, b));
        gens.dedup();
        let mut min_gens: Vec<Exponent> = Vec::new();
        for g in gens {
            // Sorted by degree, so only earlier entries can divide g.
            if !min_gens.iter().any(|h| divides(h, &g)) {
                min_gens.push(g);
            }
        }
        Ok(MonomialIdeal { min_gens, nvars })
    }

    pub fn min_gens(&self) -> &[Exponent] {
        &self.min_gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn contains(&self, m: &[i64]) -> bool {
        self.min_gens.iter().any(|g| divides(g, m))
    }

    /// Whether a pure power of every variable lies in the ideal, which is
    /// the same as having finitely many standard monomials.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.min_gens
                .iter()
                .any(|g| g.iter().enumerate().all(|(k, &e)| k == i || e == 0))
        })
    }

    /// All monomials outside the ideal, in canonical order.
    pub fn standard_set(&self) -> Result<Vec<Exponent>> {
        if !self.is_artinian() {
            return Err(Error::Precondition(
                "monomial ideal has infinitely many standard monomials".into(),
            ));
        }
        let zero = vec![0i64; self.nvars];
        if self.contains(&zero) {
            return Ok(Vec::new());
        }
        let mut seen: HashSet<Exponent> = HashSet::new();
        let mut queue = VecDeque::from([zero.clone()]);
        seen.insert(zero);
        let mut out = Vec::new();
        while let Some(m) = queue.pop_front() {
            for i in 0..self.nvars {
                let mut next = m.clone();
                next[i] += 1;
                if !self.contains(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
            out.push(m);
        }
        out.sort_by(|a, b| canonical_cmp(a, b));
        Ok(out)
    }

    pub fn to_text(&self, names: &[String]) -> String {
        format_ideal(&self.min_gens, names)
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let a = &self.min_gens;
        let b = &other.min_gens;
        for (x, y) in a.iter().zip(b) {
            match canonical_cmp(x, y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        a.len().cmp(&b.len())
    }
}

/// Leading-term ideal of a reduced basis, provided the defining weight of the
/// basis order already separates every element.
pub fn initial_ideal(gb: &ReducedGB) -> Result<MonomialIdeal> {
    for g in gb.elements() {
        if gb.order().weight_cmp(g.lead(), g.trail()) != Ordering::Greater {
            return Err(Error::TiedWeight(g.to_string()));
        }
    }
    leading_ideal(gb)
}

/// Leading-term ideal of a reduced basis under its full term order.
pub fn leading_ideal(gb: &ReducedGB) -> Result<MonomialIdeal> {
    MonomialIdeal::new(gb.nvars(), gb.leading_exponents())
}

/// The bijection `G* → standard monomials`, indexed by character.
pub type StandardTable = Vec<Exponent>;

/// Standard monomials of `J` sorted by character, failing with the first
/// character (in canonical order) that does not have exactly one.
pub fn standard_monomials(j: &MonomialIdeal, chars: &CharGroup) -> Result<StandardTable> {
    if j.nvars() != chars.n() {
        return Err(Error::Dimension {
            expected: chars.n(),
            found: j.nvars(),
        });
    }
    let std = j.standard_set()?;
    let mut table: Vec<Vec<Exponent>> = vec![Vec::new(); chars.r()];
    for m in std {
        table[chars.deg(&m)].push(m);
    }
    for (character, ms) in table.iter().enumerate() {
        if ms.len() != 1 {
            return Err(Error::NotACluster {
                character,
                count: ms.len(),
            });
        }
    }
    Ok(table.into_iter().map(|mut v| v.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::binomial::{buchberger, Binomial};
    use crate::groebner::order::TermOrder;
    use crate::group::GroupSpec;

    #[test]
    fn minimalization() {
        let j = MonomialIdeal::new(2, vec![vec![2, 1], vec![1, 0], vec![0, 3], vec![1, 0]]).unwrap();
        assert_eq!(j.min_gens(), &[vec![1, 0], vec![0, 3]]);
        assert_eq!(j.standard_set().unwrap(), vec![vec![0, 0], vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn z2_clusters() {
        let chars = CharGroup::new(&GroupSpec::cyclic(2, &[1]).unwrap());
        let j = MonomialIdeal::new(1, vec![vec![2]]).unwrap();
        assert_eq!(standard_monomials(&j, &chars).unwrap(), vec![vec![0], vec![1]]);
        let bad = MonomialIdeal::new(1, vec![vec![1]]).unwrap();
        assert_eq!(
            standard_monomials(&bad, &chars),
            Err(Error::NotACluster {
                character: 1,
                count: 0
            })
        );
    }

    #[test]
    fn tied_weight_reported() {
        let gb = buchberger(
            &[Binomial::new(vec![1, 0], vec![0, 1])],
            &TermOrder::from_ints(&[1, 1]).unwrap(),
        )
        .unwrap();
        assert!(matches!(initial_ideal(&gb), Err(Error::TiedWeight(_))));
        assert_eq!(leading_ideal(&gb).unwrap().min_gens(), &[vec![1, 0]]);
    }

    #[test]
    fn non_artinian_rejected() {
        let j = MonomialIdeal::new(2, vec![vec![1, 0]]).unwrap();
        assert!(j.standard_set().is_err());
    }
}
