//! G-clusters, coherent-component membership, chart semigroups, universal
//! families and the normality scan.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{integer_kernel, row_lattice_basis, IntMatrix, RatVec};
use crate::groebner::{
    buchberger, canonical_cmp, enumerate_fan, format_monomial, initial_ideal, lattice_ideal_gb, leading_ideal,
    standard_monomials, Binomial, Exponent, GbBudget, MonomialIdeal, ReducedGB, StandardTable, TermOrder,
};
use crate::group::{CharGroup, GroupSpec};
use crate::polyhedral::{hilbert_basis, semigroup_contains, strict_separation, Membership, Separation};

/// A monomial ideal whose quotient has one standard monomial per character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GCluster {
    pub ideal: MonomialIdeal,
    /// Standard monomial of each character, indexed canonically.
    pub std: StandardTable,
}

pub fn is_g_cluster(j: &MonomialIdeal, chars: &CharGroup) -> Result<GCluster> {
    let std = standard_monomials(j, chars)?;
    debug_assert!(std[chars.trivial()].iter().all(|&x| x == 0));
    Ok(GCluster { ideal: j.clone(), std })
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl GCluster {
    /// `u - std(deg u)` for a monomial `x^u` of `J`.
    pub fn pair(&self, chars: &CharGroup, u: &[i64]) -> Vec<i64> {
        sub(u, &self.std[chars.deg(u)])
    }

    /// One pair per minimal generator, in the ideal's canonical order.
    pub fn generator_pairs(&self, chars: &CharGroup) -> Vec<Vec<i64>> {
        self.ideal.min_gens().iter().map(|g| self.pair(chars, g)).collect()
    }

    pub fn to_text(&self, names: &[String]) -> String {
        self.ideal.to_text(names)
    }
}

/// Answer of [`coherent_membership`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MembershipVerdict {
    /// `J = in_w(I_M)` for this strictly positive primitive weight.
    OnCoherent { witness: Vec<BigInt>, rounds: usize },
    /// Nonnegative multipliers on `pairs` (each `u - u'` with `x^u ∈ J` and
    /// `x^{u'}` the standard monomial of the same character) whose
    /// combination is `≤ 0` componentwise.
    OffComponent {
        pairs: Vec<Vec<i64>>,
        certificate: Vec<BigInt>,
        rounds: usize,
    },
}

impl MembershipVerdict {
    pub fn is_on(&self) -> bool {
        matches!(self, MembershipVerdict::OnCoherent { .. })
    }

    /// The pairs that carry a nonzero multiplier, with their multipliers.
    pub fn certificate_support(&self) -> Vec<(Vec<i64>, BigInt)> {
        match self {
            MembershipVerdict::OffComponent { pairs, certificate, .. } => pairs
                .iter()
                .zip(certificate)
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
            MembershipVerdict::OnCoherent { .. } => Vec::new(),
        }
    }
}

/// Cap on refinement rounds in [`coherent_membership`].
pub const MAX_MEMBERSHIP_ROUNDS: usize = 10_000;

fn rat_weight(w: &[BigInt]) -> RatVec {
    RatVec::new(w.iter().map(|x| BigRational::from_integer(x.clone())).collect())
}

/// Decides whether `J = in_w(I_M)` for some `w`.
///
/// Starts from the generator pairs. Each separating weight is rechecked by a
/// Gröbner computation; when the recheck fails it exposes a further pair
/// `u - u'` (a standard monomial of the computed initial ideal lying in `J`,
/// or a tied basis element) that the weight violates, which is added before
/// separating again. Only finitely many such pairs exist, so this ends.
pub fn coherent_membership(cluster: &GCluster, chars: &CharGroup, im: &[Binomial]) -> Result<MembershipVerdict> {
    let mut pairs = cluster.generator_pairs(chars);
    let mut seen: HashSet<Vec<i64>> = pairs.iter().cloned().collect();
    for rounds in 1..=MAX_MEMBERSHIP_ROUNDS {
        let w = match strict_separation(&pairs)? {
            Separation::Certificate(certificate) => {
                return Ok(MembershipVerdict::OffComponent {
                    pairs,
                    certificate,
                    rounds,
                })
            }
            Separation::Witness(w) => w,
        };
        let order = TermOrder::new(rat_weight(&w))?;
        let gb = buchberger(im, &order)?;
        let lead = leading_ideal(&gb)?;
        let extra = if lead == cluster.ideal {
            let tied: Vec<Vec<i64>> = gb
                .elements()
                .iter()
                .filter(|g| order.weight_cmp(g.lead(), g.trail()) != Ordering::Greater)
                .map(|g| sub(g.lead(), g.trail()))
                .collect();
            if tied.is_empty() {
                return Ok(MembershipVerdict::OnCoherent { witness: w, rounds });
            }
            tied
        } else {
            lead.standard_set()?
                .into_iter()
                .filter(|s| cluster.ideal.contains(s))
                .map(|s| cluster.pair(chars, &s))
                .collect()
        };
        let before = pairs.len();
        for p in extra {
            if seen.insert(p.clone()) {
                pairs.push(p);
            }
        }
        if pairs.len() == before {
            return Err(Error::Data(format!("membership refinement stalled at weight {w:?}")));
        }
        log::debug!("membership round {rounds}: {} pairs", pairs.len());
    }
    Err(Error::BudgetExceeded(format!("more than {MAX_MEMBERSHIP_ROUNDS} membership rounds")))
}

/// Candidate standard monomials: exponents all of whose divisors have
/// pairwise distinct characters (so at most `r` divisors).
fn cluster_candidates(chars: &CharGroup) -> Vec<Exponent> {
    let (n, r) = (chars.n(), chars.r());
    let mut out: Vec<Exponent> = vec![vec![0; n]];
    let mut set: HashSet<Exponent> = out.iter().cloned().collect();
    let mut k = 0;
    while k < out.len() {
        let u = out[k].clone();
        k += 1;
        for i in 0..n {
            let mut v = u.clone();
            v[i] += 1;
            if set.contains(&v) {
                continue;
            }
            let count: usize = v.iter().map(|&x| x as usize + 1).product();
            if count > r {
                continue;
            }
            // Every immediate divisor must already be a candidate.
            let ok = (0..n).all(|j| {
                if v[j] == 0 {
                    return true;
                }
                let mut d = v.clone();
                d[j] -= 1;
                set.contains(&d)
            });
            if !ok || !distinct_divisor_characters(chars, &v) {
                continue;
            }
            set.insert(v.clone());
            out.push(v);
        }
    }
    out.sort_by(|a, b| canonical_cmp(a, b));
    out
}

fn distinct_divisor_characters(chars: &CharGroup, v: &[i64]) -> bool {
    let mut seen = vec![false; chars.r()];
    let mut d = vec![0i64; v.len()];
    loop {
        let c = chars.deg(&d);
        if seen[c] {
            return false;
        }
        seen[c] = true;
        // Next divisor in mixed radix.
        let mut i = 0;
        loop {
            if i == v.len() {
                return true;
            }
            if d[i] < v[i] {
                d[i] += 1;
                break;
            }
            d[i] = 0;
            i += 1;
        }
    }
}

/// Ideal with the given standard set (an order ideal).
pub fn ideal_of_staircase(n: usize, staircase: &[Exponent]) -> Result<MonomialIdeal> {
    let set: HashSet<&Exponent> = staircase.iter().collect();
    let mut gens = Vec::new();
    for s in staircase {
        for i in 0..n {
            let mut v = s.clone();
            v[i] += 1;
            if !set.contains(&v) {
                gens.push(v);
            }
        }
    }
    if staircase.is_empty() {
        gens.push(vec![0; n]);
    }
    MonomialIdeal::new(n, gens)
}

/// All monomial G-clusters: order ideals in `N^n` with exactly one monomial
/// of each character. `max_nodes` bounds the backtracking search.
pub fn enumerate_monomial_clusters(chars: &CharGroup, max_nodes: usize) -> Result<Vec<GCluster>> {
    let (n, r) = (chars.n(), chars.r());
    let cand = cluster_candidates(chars);
    let cchar: Vec<usize> = cand.iter().map(|u| chars.deg(u)).collect();
    let index: std::collections::HashMap<&Exponent, usize> = cand.iter().enumerate().map(|(k, u)| (u, k)).collect();
    // Immediate divisors as candidate indices.
    let divisors: Vec<Vec<usize>> = cand
        .iter()
        .map(|u| {
            (0..n)
                .filter(|&j| u[j] > 0)
                .map(|j| {
                    let mut d = u.clone();
                    d[j] -= 1;
                    index[&d]
                })
                .collect()
        })
        .collect();
    // suffix_chars[k]: characters occurring among cand[k..].
    let mut suffix_chars = vec![vec![false; r]; cand.len() + 1];
    for k in (0..cand.len()).rev() {
        suffix_chars[k] = suffix_chars[k + 1].clone();
        suffix_chars[k][cchar[k]] = true;
    }

    struct State<'a> {
        cand: &'a [Exponent],
        cchar: &'a [usize],
        divisors: &'a [Vec<usize>],
        suffix_chars: &'a [Vec<bool>],
        r: usize,
        chosen: Vec<bool>,
        used: Vec<bool>,
        size: usize,
        nodes: usize,
        max_nodes: usize,
        found: Vec<Vec<Exponent>>,
    }
    impl State<'_> {
        fn go(&mut self, k: usize) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Error::BudgetExceeded(format!("cluster search exceeded {} nodes", self.max_nodes)));
            }
            if self.size == self.r {
                let s = (0..self.cand.len())
                    .filter(|&j| self.chosen[j])
                    .map(|j| self.cand[j].clone())
                    .collect();
                self.found.push(s);
                return Ok(());
            }
            // Every unused character must still be available.
            let sc = &self.suffix_chars[k];
            if (0..self.r).any(|c| !self.used[c] && !sc[c]) {
                return Ok(());
            }
            let c = self.cchar[k];
            let can_take = !self.used[c] && self.divisors[k].iter().all(|&d| self.chosen[d]);
            if can_take {
                self.chosen[k] = true;
                self.used[c] = true;
                self.size += 1;
                self.go(k + 1)?;
                self.size -= 1;
                self.used[c] = false;
                self.chosen[k] = false;
            }
            self.go(k + 1)
        }
    }
    let mut st = State {
        cand: &cand,
        cchar: &cchar,
        divisors: &divisors,
        suffix_chars: &suffix_chars,
        r,
        chosen: vec![false; cand.len()],
        used: vec![false; r],
        size: 0,
        nodes: 0,
        max_nodes,
        found: Vec::new(),
    };
    st.go(0)?;
    log::debug!("cluster search: {} candidates, {} nodes", cand.len(), st.nodes);
    let mut out: Vec<GCluster> = st
        .found
        .iter()
        .map(|s| is_g_cluster(&ideal_of_staircase(n, s)?, chars))
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.ideal.canonical_cmp(&b.ideal));
    Ok(out)
}

/// Generators `u - u'` of the chart semigroup `A_J`, each from a minimal
/// generator `x^u` and the standard monomial `x^{u'}` of its character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartSemigroup {
    pub cluster: GCluster,
    /// `(u, u')` pairs, deduplicated on `u - u'` and sorted by it.
    pub pairs: Vec<(Exponent, Exponent)>,
    pub witness: RatVec,
}

impl ChartSemigroup {
    pub fn gens(&self) -> Vec<Vec<i64>> {
        self.pairs.iter().map(|(u, v)| sub(u, v)).collect()
    }
}

pub fn chart_semigroup(cluster: &GCluster, chars: &CharGroup, witness: &RatVec) -> Result<ChartSemigroup> {
    let mut pairs: Vec<(Exponent, Exponent)> = cluster
        .ideal
        .min_gens()
        .iter()
        .map(|g| (g.clone(), cluster.std[chars.deg(g)].clone()))
        .collect();
    pairs.sort_by_key(|a| sub(&a.0, &a.1));
    pairs.dedup_by(|a, b| sub(&a.0, &a.1) == sub(&b.0, &b.1));
    for (u, v) in &pairs {
        let d = sub(u, v);
        if !witness.dot_int(&d).is_positive() {
            return Err(Error::DegenerateWitness(format!("weight {witness} is not positive on {d:?}")));
        }
    }
    Ok(ChartSemigroup {
        cluster: cluster.clone(),
        pairs,
        witness: witness.clone(),
    })
}

/// `⟨x^{u_i} - y_i x^{u'_i}⟩ + I_U` above a chart.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniversalFamily {
    pub binomials: Vec<(Exponent, Exponent)>,
    /// Relations among the `y_i`: the lattice ideal of the kernel of
    /// `Z^s → Z^n`, `e_i ↦ u_i - u'_i`, as a reduced degree-lex basis.
    pub relations: Vec<Binomial>,
    pub kernel: IntMatrix,
}

pub fn universal_family(chart: &ChartSemigroup, budget: GbBudget) -> Result<UniversalFamily> {
    let gens = chart.gens();
    let s = gens.len();
    let n = chart.cluster.ideal.nvars();
    let kernel = integer_kernel(&IntMatrix::from_rows_i64(n, &gens).transpose());
    let relations = if kernel.rows() == 0 {
        Vec::new()
    } else {
        lattice_ideal_gb(&kernel, budget)?.elements().to_vec()
    };
    debug_assert!(kernel.rows() == 0 || kernel.cols() == s);
    Ok(UniversalFamily {
        binomials: chart.pairs.clone(),
        relations,
        kernel,
    })
}

impl UniversalFamily {
    /// Every relation `y^a - y^b` satisfies `Σ a_i g_i = Σ b_i g_i`.
    pub fn relations_vanish(&self) -> bool {
        let gens: Vec<Vec<i64>> = self.binomials.iter().map(|(u, v)| sub(u, v)).collect();
        let image = |e: &[i64]| -> Vec<i64> {
            let n = gens.first().map(|g| g.len()).unwrap_or(0);
            (0..n).map(|j| e.iter().zip(&gens).map(|(c, g)| c * g[j]).sum()).collect()
        };
        self.relations.iter().all(|b| image(b.lead()) == image(b.trail()))
    }
}

/// Lattice used to saturate a chart semigroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormalityLattice {
    /// The lattice `M` of the group.
    M,
    /// The lattice generated by the chart semigroup.
    ZA,
}

#[derive(Clone, Debug, Default)]
pub struct NormalityOptions {
    /// Spot-check these weights instead of scanning the whole fan.
    pub weights: Option<Vec<RatVec>>,
    pub max_cones: Option<usize>,
    pub gb_budget: GbBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartReport {
    #[serde(rename = "J")]
    pub j: Vec<String>,
    pub witness_w: Vec<String>,
    pub gens: Vec<Vec<i64>>,
    /// Hilbert basis of the cone over `M`.
    pub hilbert_basis: Vec<Vec<i64>>,
    pub missing: Vec<Vec<i64>>,
    pub normal: bool,
    /// Same over the lattice generated by `gens`.
    pub hilbert_basis_za: Vec<Vec<i64>>,
    pub missing_za: Vec<Vec<i64>>,
    pub normal_za: bool,
}

/// Evidence that a Hilbert-basis vector is not in the chart semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MissingCertificate {
    pub chart: usize,
    pub lattice: NormalityLattice,
    pub vector: Vec<i64>,
    pub residuals_explored: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    pub group: String,
    pub r: usize,
    pub n: usize,
    pub charts: Vec<ChartReport>,
    /// Verdict over `M`.
    pub overall_normal: bool,
    pub overall_normal_za: bool,
    pub certificates: Vec<MissingCertificate>,
}

struct ChartOutcome {
    report: ChartReport,
    certificates: Vec<(NormalityLattice, Vec<i64>, usize)>,
}

/// Hilbert basis of `cone(gens) ∩ lattice` and the vectors not in `N·gens`.
pub fn chart_normality(gens: &[Vec<i64>], lattice: &IntMatrix, grading: &RatVec) -> Result<(Vec<Vec<i64>>, Vec<(Vec<i64>, usize)>)> {
    let hb = hilbert_basis(gens, lattice)?;
    let mut missing = Vec::new();
    for v in &hb.vectors {
        if gens.contains(v) {
            continue;
        }
        if let Membership::NotMember { residuals_explored } = semigroup_contains(gens, v, grading)? {
            missing.push((v.clone(), residuals_explored));
        }
    }
    Ok((hb.vectors, missing))
}

fn analyse_chart(cluster: &GCluster, chars: &CharGroup, witness: &RatVec, names: &[String]) -> Result<ChartOutcome> {
    let chart = chart_semigroup(cluster, chars, witness)?;
    let gens = chart.gens();
    let (hb_m, miss_m) = chart_normality(&gens, chars.lattice(), witness)?;
    let za = row_lattice_basis(&IntMatrix::from_rows_i64(chars.n(), &gens));
    let (hb_za, miss_za) = chart_normality(&gens, &za, witness)?;
    let mut certificates = Vec::new();
    for (v, k) in &miss_m {
        certificates.push((NormalityLattice::M, v.clone(), *k));
    }
    for (v, k) in &miss_za {
        certificates.push((NormalityLattice::ZA, v.clone(), *k));
    }
    Ok(ChartOutcome {
        report: ChartReport {
            j: cluster.ideal.min_gens().iter().map(|g| format_monomial(g, names)).collect(),
            witness_w: witness.entries().iter().map(|x| x.to_string()).collect(),
            gens,
            hilbert_basis: hb_m,
            normal: miss_m.is_empty(),
            missing: miss_m.into_iter().map(|(v, _)| v).collect(),
            hilbert_basis_za: hb_za,
            normal_za: miss_za.is_empty(),
            missing_za: miss_za.into_iter().map(|(v, _)| v).collect(),
        },
        certificates,
    })
}

/// Initial ideal of `I_M` at a weight that must not tie any basis element.
pub fn initial_cluster(im: &[Binomial], chars: &CharGroup, w: &RatVec) -> Result<(GCluster, ReducedGB)> {
    let gb = buchberger(im, &TermOrder::new(w.clone())?)?;
    let j = initial_ideal(&gb)?;
    Ok((is_g_cluster(&j, chars)?, gb))
}

/// Normality scan: every chart of the fan (or the charts at the given
/// weights), saturated over `M` and over `ZA_J`.
pub fn check_normality(spec: &GroupSpec, options: &NormalityOptions) -> Result<NormalityReport> {
    let chars = CharGroup::new(spec);
    let names = spec.variable_names();
    let im = lattice_ideal_gb(chars.lattice(), options.gb_budget)?;
    let mut charts: Vec<(GCluster, RatVec)> = match &options.weights {
        Some(ws) => ws
            .iter()
            .map(|w| Ok((initial_cluster(im.elements(), &chars, w)?.0, w.clone())))
            .collect::<Result<_>>()?,
        None => enumerate_fan(im.elements(), options.max_cones)?
            .into_iter()
            .map(|c| Ok((is_g_cluster(&c.ideal, &chars)?, c.witness)))
            .collect::<Result<_>>()?,
    };
    charts.sort_by(|a, b| a.0.ideal.canonical_cmp(&b.0.ideal));
    charts.dedup_by(|a, b| a.0 == b.0);
    let outcomes: Vec<ChartOutcome> = charts
        .par_iter()
        .map(|(c, w)| analyse_chart(c, &chars, w, &names))
        .collect::<Result<_>>()?;
    let mut certificates = Vec::new();
    let mut reports = Vec::new();
    for (k, o) in outcomes.into_iter().enumerate() {
        for (lattice, vector, residuals_explored) in o.certificates {
            certificates.push(MissingCertificate {
                chart: k,
                lattice,
                vector,
                residuals_explored,
            });
        }
        reports.push(o.report);
    }
    Ok(NormalityReport {
        group: spec.to_text().trim_end().to_string(),
        r: chars.r(),
        n: chars.n(),
        overall_normal: reports.iter().all(|c| c.normal),
        overall_normal_za: reports.iter().all(|c| c.normal_za),
        charts: reports,
        certificates,
    })
}

/// Primitive integer weight as `i64`s, for display.
pub fn weight_to_i64(w: &[BigInt]) -> Result<Vec<i64>> {
    w.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::lattice_ideal;
    use crate::groebner::parse_monomial_list;

    fn group(m: i64, a: &[i64]) -> CharGroup {
        CharGroup::new(&GroupSpec::cyclic(m, a).unwrap())
    }

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn z2_cluster_and_membership() {
        let g = group(2, &[1]);
        let j = MonomialIdeal::new(1, vec![vec![2]]).unwrap();
        let c = is_g_cluster(&j, &g).unwrap();
        let im = lattice_ideal(g.lattice()).unwrap();
        let v = coherent_membership(&c, &g, &im).unwrap();
        assert_eq!(
            v,
            MembershipVerdict::OnCoherent {
                witness: vec![BigInt::from(1)],
                rounds: 1
            }
        );
        let bad = MonomialIdeal::new(1, vec![vec![1]]).unwrap();
        assert!(matches!(is_g_cluster(&bad, &g), Err(Error::NotACluster { .. })));
        let all = enumerate_monomial_clusters(&g, 1000).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].ideal, j);
    }

    #[test]
    fn z2_chart_and_family() {
        let g = group(2, &[1]);
        let c = is_g_cluster(&MonomialIdeal::new(1, vec![vec![2]]).unwrap(), &g).unwrap();
        let chart = chart_semigroup(&c, &g, &RatVec::from_ints(&[1])).unwrap();
        assert_eq!(chart.gens(), vec![vec![2]]);
        let fam = universal_family(&chart, GbBudget::default()).unwrap();
        assert_eq!(fam.binomials, vec![(vec![2], vec![0])]);
        assert!(fam.relations.is_empty());
        assert!(matches!(
            chart_semigroup(&c, &g, &RatVec::from_ints(&[0])),
            Err(Error::DegenerateWitness(_))
        ));
    }

    #[test]
    fn family_with_relation() {
        // Two chart generators (1,1) and (1,-1) plus (2,0) = their sum.
        let g = group(2, &[1, 1]);
        let j = MonomialIdeal::new(2, vec![vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap();
        assert!(is_g_cluster(&j, &g).is_err());
        let j = MonomialIdeal::new(2, vec![vec![2, 0], vec![0, 1]]).unwrap();
        let c = is_g_cluster(&j, &g).unwrap();
        let chart = chart_semigroup(&c, &g, &RatVec::from_ints(&[1, 2])).unwrap();
        assert_eq!(chart.gens(), vec![vec![-1, 1], vec![2, 0]]);
        let fam = universal_family(&chart, GbBudget::default()).unwrap();
        assert!(fam.relations.is_empty());
        // A genuinely dependent set.
        let chart = ChartSemigroup {
            cluster: c,
            pairs: vec![(vec![2, 0], vec![0, 0]), (vec![0, 2], vec![0, 0]), (vec![1, 1], vec![0, 0])],
            witness: RatVec::from_ints(&[1, 1]),
        };
        let fam = universal_family(&chart, GbBudget::default()).unwrap();
        assert_eq!(fam.relations, vec![Binomial::new(vec![1, 1, 0], vec![0, 0, 2])]);
        assert!(fam.relations_vanish());
    }

    #[test]
    fn z14_reducible_off_component() {
        let g = group(14, &[1, 9, 11]);
        let j = MonomialIdeal::new(
            3,
            parse_monomial_list(
                include_str!("../data/z14_reducible_j.txt"),
                &names(3),
            )
            .unwrap(),
        )
        .unwrap();
        let c = is_g_cluster(&j, &g).unwrap();
        assert_eq!(c.std.len(), 14);
        let im = lattice_ideal(g.lattice()).unwrap();
        let v = coherent_membership(&c, &g, &im).unwrap();
        let support = v.certificate_support();
        let mut vecs: Vec<Vec<i64>> = support.iter().map(|(p, _)| p.clone()).collect();
        vecs.sort();
        assert_eq!(vecs, vec![vec![-3, 1, 2], vec![1, 2, -3], vec![2, -3, 1]]);
        assert!(support.iter().all(|(_, c)| *c == BigInt::from(1)));
        let all = enumerate_monomial_clusters(&g, 5_000_000).unwrap();
        assert!(all.contains(&c));
    }

    fn box_oracle(chars: &CharGroup) -> Vec<MonomialIdeal> {
        // Subsets of size r of the box [0,r)^n closed under division with
        // one monomial per character.
        let (n, r) = (chars.n(), chars.r());
        let mut cells: Vec<Exponent> = Vec::new();
        let total = (r as i64).pow(n as u32);
        for k in 0..total {
            let mut u = vec![0i64; n];
            let mut x = k;
            for slot in u.iter_mut() {
                *slot = x % r as i64;
                x /= r as i64;
            }
            cells.push(u);
        }
        let mut out = Vec::new();
        let m = cells.len();
        let mut pick = vec![0usize; r];
        fn rec(
            start: usize,
            depth: usize,
            pick: &mut Vec<usize>,
            cells: &[Exponent],
            m: usize,
            chars: &CharGroup,
            out: &mut Vec<MonomialIdeal>,
        ) {
            let r = pick.len();
            if depth == r {
                let s: Vec<Exponent> = pick.iter().map(|&k| cells[k].clone()).collect();
                let set: HashSet<&Exponent> = s.iter().collect();
                let closed = s.iter().all(|u| {
                    (0..u.len()).all(|i| {
                        if u[i] == 0 {
                            return true;
                        }
                        let mut d = u.clone();
                        d[i] -= 1;
                        set.contains(&d)
                    })
                });
                let mut ch: Vec<usize> = s.iter().map(|u| chars.deg(u)).collect();
                ch.sort();
                ch.dedup();
                if closed && ch.len() == r {
                    out.push(ideal_of_staircase(chars.n(), &s).unwrap());
                }
                return;
            }
            for k in start..m {
                pick[depth] = k;
                rec(k + 1, depth + 1, pick, cells, m, chars, out);
            }
        }
        rec(0, 0, &mut pick, &cells, m, chars, &mut out);
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    #[test]
    fn z3_clusters_match_box_oracle_and_fan() {
        let g = group(3, &[1, 1, 1]);
        let clusters = enumerate_monomial_clusters(&g, 1_000_000).unwrap();
        let ideals: Vec<MonomialIdeal> = clusters.iter().map(|c| c.ideal.clone()).collect();
        assert_eq!(ideals, box_oracle(&g));
        let im = lattice_ideal(g.lattice()).unwrap();
        let fan = enumerate_fan(&im, None).unwrap();
        let on: Vec<MonomialIdeal> = clusters
            .iter()
            .filter(|c| coherent_membership(c, &g, &im).unwrap().is_on())
            .map(|c| c.ideal.clone())
            .collect();
        let fan_ideals: Vec<MonomialIdeal> = fan.iter().map(|c| c.ideal.clone()).collect();
        assert_eq!(on, fan_ideals);
    }

    #[test]
    fn z3_sl3_is_normal() {
        let spec = GroupSpec::cyclic(3, &[1, 1, 1]).unwrap();
        let rep = check_normality(&spec, &NormalityOptions::default()).unwrap();
        assert!(rep.overall_normal);
        assert!(rep.overall_normal_za);
        for c in &rep.charts {
            let mut g = c.gens.clone();
            g.sort();
            assert_eq!(c.hilbert_basis, g);
        }
    }

    #[test]
    fn z2_normal() {
        let rep = check_normality(&GroupSpec::cyclic(2, &[1]).unwrap(), &NormalityOptions::default()).unwrap();
        assert_eq!(rep.charts.len(), 1);
        assert!(rep.overall_normal);
        assert_eq!(rep.charts[0].hilbert_basis, vec![vec![2]]);
    }
}
