use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::order::{canonical_cmp, coprime, divides, lcm, shift, Exponent, TermOrder};
use crate::error::{Error, Result};

/// Pure-difference binomial `x^lead - x^trail`.
///
/// The two sides may share variables while a computation is in progress;
/// elements of a reduced basis of a saturated lattice ideal never do.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    lead: Exponent,
    trail: Exponent,
}

impl Binomial {
    pub fn new(lead: Exponent, trail: Exponent) -> Self {
        assert_eq!(lead.len(), trail.len(), "binomial sides differ in length");
        Binomial { lead, trail }
    }

    /// `x^{v+} - x^{v-}`.
    pub fn from_vector(v: &[i64]) -> Self {
        Binomial {
            lead: v.iter().map(|&x| x.max(0)).collect(),
            trail: v.iter().map(|&x| (-x).max(0)).collect(),
        }
    }

    pub fn lead(&self) -> &[i64] {
        &self.lead
    }

    pub fn trail(&self) -> &[i64] {
        &self.trail
    }

    pub fn nvars(&self) -> usize {
        self.lead.len()
    }

    pub fn is_zero(&self) -> bool {
        self.lead == self.trail
    }

    /// `lead - trail`.
    pub fn vector(&self) -> Vec<i64> {
        self.lead.iter().zip(&self.trail).map(|(a, b)| a - b).collect()
    }

    /// Same binomial up to sign, with the larger side first.
    pub fn oriented(self, order: &TermOrder) -> Self {
        if order.cmp(&self.lead, &self.trail) == Ordering::Less {
            Binomial {
                lead: self.trail,
                trail: self.lead,
            }
        } else {
            self
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.lead, &other.lead).then_with(|| canonical_cmp(&self.trail, &other.trail))
    }
}

/// A reduced Gröbner basis of a binomial ideal together with its order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedGB {
    elements: Vec<Binomial>,
    order: TermOrder,
    nvars: usize,
}

/// Counters from one run of Buchberger's algorithm.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BuchbergerStats {
    pub pairs_considered: usize,
    pub coprime_skipped: usize,
    pub reductions_to_zero: usize,
    pub basis_growth: usize,
}

/// Optional cap on the work done by [`buchberger_with_budget`].
#[derive(Clone, Copy, Debug)]
pub struct GbBudget {
    pub max_basis: usize,
    /// Number of critical pairs generated before giving up; bounds memory.
    pub max_pairs: usize,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget {
            max_basis: 200_000,
            max_pairs: usize::MAX,
        }
    }
}

fn reduce_monomial(m: &[i64], basis: &[Binomial], order: &TermOrder) -> Result<Exponent> {
    let mut m = m.to_vec();
    'outer: loop {
        for g in basis {
            if divides(&g.lead, &m) {
                let next = shift(&m, &g.lead, &g.trail)?;
                debug_assert_eq!(order.cmp(&next, &m), Ordering::Less);
                m = next;
                continue 'outer;
            }
        }
        return Ok(m);
    }
}

fn spair(a: &Binomial, b: &Binomial) -> Result<Binomial> {
    let l = lcm(&a.lead, &b.lead);
    Ok(Binomial {
        lead: shift(&l, &a.lead, &a.trail)?,
        trail: shift(&l, &b.lead, &b.trail)?,
    })
}

pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> Result<ReducedGB> {
    buchberger_with_budget(gens, order, GbBudget::default()).map(|(gb, _)| gb)
}

/// Buchberger's algorithm with normal pair selection (smallest lcm first)
/// and the coprime-leading-terms criterion, followed by interreduction.
pub fn buchberger_with_budget(
    gens: &[Binomial],
    order: &TermOrder,
    budget: GbBudget,
) -> Result<(ReducedGB, BuchbergerStats)> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => {
            return Ok((
                ReducedGB {
                    elements: Vec::new(),
                    order: order.clone(),
                    nvars: 0,
                },
                BuchbergerStats::default(),
            ))
        }
    };
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::Dimension {
                expected: nvars,
                found: g.nvars(),
            });
        }
    }
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<Binomial> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(Vec<i128>, usize, usize)>> = BinaryHeap::new();

    let push = |basis: &mut Vec<Binomial>,
                    heap: &mut BinaryHeap<Reverse<(Vec<i128>, usize, usize)>>,
                    g: Binomial| {
        let j = basis.len();
        for (i, h) in basis.iter().enumerate() {
            let l = lcm(&h.lead, &g.lead);
            heap.push(Reverse((order.key(&l), i, j)));
        }
        basis.push(g);
    };

    for g in gens {
        let lead = reduce_monomial(&g.lead, &basis, order)?;
        let trail = reduce_monomial(&g.trail, &basis, order)?;
        if lead != trail {
            push(&mut basis, &mut heap, Binomial { lead, trail }.oriented(order));
        }
    }

    while let Some(Reverse((_, i, j))) = heap.pop() {
        stats.pairs_considered += 1;
        if coprime(&basis[i].lead, &basis[j].lead) {
            stats.coprime_skipped += 1;
            continue;
        }
        let s = spair(&basis[i], &basis[j])?;
        let lead = reduce_monomial(&s.lead, &basis, order)?;
        let trail = reduce_monomial(&s.trail, &basis, order)?;
        if lead == trail {
            stats.reductions_to_zero += 1;
            continue;
        }
        if basis.len() >= budget.max_basis {
            return Err(Error::BudgetExceeded(format!(
                "Gröbner basis grew beyond {} elements",
                budget.max_basis
            )));
        }
        if basis.len().saturating_add(stats.pairs_considered).saturating_add(heap.len()) > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "more than {} critical pairs (basis at {} elements)",
                budget.max_pairs,
                basis.len()
            )));
        }
        stats.basis_growth += 1;
        push(&mut basis, &mut heap, Binomial { lead, trail }.oriented(order));
    }

    let elements = interreduce(basis, order)?;
    Ok((
        ReducedGB {
            elements,
            order: order.clone(),
            nvars,
        },
        stats,
    ))
}

fn interreduce(mut basis: Vec<Binomial>, order: &TermOrder) -> Result<Vec<Binomial>> {
    basis.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    basis.dedup_by(|a, b| a.lead == b.lead);
    let mut minimal: Vec<Binomial> = Vec::new();
    for g in &basis {
        if !minimal.iter().any(|h| divides(&h.lead, &g.lead)) {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for g in &minimal {
        let trail = reduce_monomial(&g.trail, &minimal, order)?;
        out.push(Binomial {
            lead: g.lead.clone(),
            trail,
        });
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

impl ReducedGB {
    /// Wraps a list that is claimed to be a reduced basis. Use
    /// [`ReducedGB::verify`] to check the claim.
    pub fn from_parts(elements: Vec<Binomial>, order: TermOrder, nvars: usize) -> Self {
        ReducedGB {
            elements,
            order,
            nvars,
        }
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_exponents(&self) -> Vec<Exponent> {
        self.elements.iter().map(|g| g.lead.clone()).collect()
    }

    /// The standard monomial congruent to `x^m`.
    pub fn normal_form(&self, m: &[i64]) -> Result<Exponent> {
        reduce_monomial(m, &self.elements, &self.order)
    }

    pub fn reduces_to_zero(&self, b: &Binomial) -> Result<bool> {
        Ok(self.normal_form(&b.lead)? == self.normal_form(&b.trail)?)
    }

    /// Independent re-check: every S-pair (coprime ones included) reduces to
    /// zero, the basis is reduced, and every element is a genuine binomial.
    pub fn verify(&self) -> Result<bool> {
        let e = &self.elements;
        for g in e {
            if g.is_zero() || self.order.cmp(&g.lead, &g.trail) != Ordering::Greater {
                return Ok(false);
            }
        }
        for (i, g) in e.iter().enumerate() {
            for (j, h) in e.iter().enumerate() {
                if i != j && (divides(&h.lead, &g.lead) || divides(&h.lead, &g.trail)) {
                    return Ok(false);
                }
            }
        }
        for (g, h) in e.iter().tuple_combinations() {
            if !self.reduces_to_zero(&spair(g, h)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every binomial reduces to zero, i.e. lies in this ideal.
    pub fn contains_all(&self, gens: &[Binomial]) -> Result<bool> {
        for g in gens {
            if !self.reduces_to_zero(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Recomputes the reduced basis under another order, starting from this
    /// one.
    pub fn convert(&self, order: &TermOrder) -> Result<ReducedGB> {
        buchberger(&self.elements, order)
    }

    pub fn lead_set(&self) -> HashSet<Exponent> {
        self.elements.iter().map(|g| g.lead.clone()).collect()
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("x{i}")).collect();
        write!(f, "{}", super::io::format_binomial(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{CharGroup, GroupSpec};
    use proptest::prelude::*;

    /// Reduced basis of the lattice ideal of a finite group, computed
    /// without Buchberger: standard monomials are the order-minimal monomial
    /// of each degree, and the basis consists of the minimal non-standard
    /// monomials paired with their standard representatives.
    pub(crate) fn staircase_oracle(chars: &CharGroup, order: &TermOrder) -> Vec<Binomial> {
        let n = chars.n();
        let r = chars.r();
        let mut best: Vec<Option<Exponent>> = vec![None; r];
        let mut heap: BinaryHeap<Reverse<(Vec<i128>, Exponent)>> = BinaryHeap::new();
        let mut seen = HashSet::new();
        let zero = vec![0i64; n];
        heap.push(Reverse((order.key(&zero), zero.clone())));
        seen.insert(zero);
        let mut found = 0;
        while let Some(Reverse((_, m))) = heap.pop() {
            let d = chars.deg(&m);
            if best[d].is_some() {
                continue;
            }
            best[d] = Some(m.clone());
            found += 1;
            if found == r {
                break;
            }
            for i in 0..n {
                let mut next = m.clone();
                next[i] += 1;
                if seen.insert(next.clone()) {
                    heap.push(Reverse((order.key(&next), next)));
                }
            }
        }
        let std: Vec<Exponent> = best.into_iter().map(|m| m.unwrap()).collect();
        let std_set: HashSet<Exponent> = std.iter().cloned().collect();
        let mut out = Vec::new();
        for s in std.iter().chain(std::iter::once(&vec![0i64; n])) {
            for i in 0..n {
                let mut m = s.clone();
                m[i] += 1;
                if std_set.contains(&m) {
                    continue;
                }
                let minimal = (0..n).all(|k| {
                    if m[k] == 0 {
                        return true;
                    }
                    let mut d = m.clone();
                    d[k] -= 1;
                    std_set.contains(&d)
                });
                if minimal {
                    let b = Binomial::new(m.clone(), std[chars.deg(&m)].clone());
                    if !out.contains(&b) {
                        out.push(b);
                    }
                }
            }
        }
        out.sort_by(|a: &Binomial, b| a.canonical_cmp(b));
        out
    }

    fn lattice_gens(chars: &CharGroup) -> Vec<Binomial> {
        chars
            .lattice_rows()
            .iter()
            .map(|u| Binomial::from_vector(u))
            .collect()
    }

    #[test]
    fn z2_single_generator() {
        let gb = buchberger(&[Binomial::new(vec![2], vec![0])], &TermOrder::from_ints(&[1]).unwrap())
            .unwrap();
        assert_eq!(gb.elements(), &[Binomial::new(vec![2], vec![0])]);
        assert_eq!(gb.normal_form(&[3]).unwrap(), vec![1]);
        assert_eq!(gb.normal_form(&[1]).unwrap(), vec![1]);
    }

    #[test]
    fn spair_chain() {
        // x - y, y - z generate x - z.
        let order = TermOrder::lex(3);
        let gb = buchberger(
            &[
                Binomial::new(vec![1, 0, 0], vec![0, 1, 0]),
                Binomial::new(vec![0, 1, 0], vec![0, 0, 1]),
            ],
            &order,
        )
        .unwrap();
        assert_eq!(
            gb.elements(),
            &[
                Binomial::new(vec![0, 1, 0], vec![0, 0, 1]),
                Binomial::new(vec![1, 0, 0], vec![0, 0, 1]),
            ]
        );
        assert!(gb.verify().unwrap());
    }

    #[test]
    fn saturated_lattice_matches_oracle_z14() {
        let chars = CharGroup::new(&GroupSpec::cyclic(14, &[1, 9, 11]).unwrap());
        let order = TermOrder::from_ints(&[1, 1, 1]).unwrap();
        // The oracle basis generates I_M; Buchberger started from it must
        // return it unchanged.
        let oracle = staircase_oracle(&chars, &order);
        let gb = buchberger(&oracle, &order).unwrap();
        assert_eq!(gb.elements(), oracle.as_slice());
        assert!(gb.verify().unwrap());
        let _ = lattice_gens(&chars);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn buchberger_is_order_consistent(
            w in proptest::collection::vec(0i64..6, 3),
            m in 2i64..9,
            a in proptest::collection::vec(0i64..9, 3),
        ) {
            let chars = CharGroup::new(&GroupSpec::cyclic(m, &a).unwrap());
            let order = TermOrder::from_ints(&w).unwrap();
            let oracle = staircase_oracle(&chars, &order);
            // Feed the oracle in another order's reduced form.
            let other = buchberger(&oracle, &TermOrder::lex(3)).unwrap();
            let gb = buchberger(other.elements(), &order).unwrap();
            prop_assert_eq!(gb.elements(), oracle.as_slice());
            prop_assert!(gb.verify().unwrap());
        }
    }
}
