//! Bundled worked examples and a checker that recomputes them.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::constellation::{distinguished_constellation, support_quiver, verify_quiver_rep, QuiverRep};
use crate::error::{Error, Result};
use crate::exact::RatVec;
use crate::groebner::{lattice_ideal, parse_binomial_list, parse_monomial_list, Binomial, MonomialIdeal, ReducedGB};
use crate::group::{CharGroup, GroupSpec, ThetaParam};
use crate::hilbert_scheme::{
    chart_normality, chart_semigroup, coherent_membership, initial_cluster, is_g_cluster, MembershipVerdict,
};
use crate::polyhedral::{semigroup_contains, Membership};

/// Bundled input files.
pub mod data {
    pub const Z11_GROUP: &str = include_str!("../data/z11.grp");
    pub const Z11_CONSTELLATION: &str = include_str!("../data/z11_hard_constellation.txt");
    pub const Z14_GROUP: &str = include_str!("../data/z14.grp");
    pub const Z14_J: &str = include_str!("../data/z14_reducible_j.txt");
    pub const G55556_GROUP: &str = include_str!("../data/g55556.grp");
    pub const G55556_IM: &str = include_str!("../data/g55556_im.txt");
    pub const G55556_J: &str = include_str!("../data/g55556_j.txt");
    pub const G55556_HB: &str = include_str!("../data/g55556_hb.txt");

    pub const Z11_THETA: [i64; 11] = [1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1];
    pub const Z11_WEIGHT: [i64; 3] = [10, 7, 6];
    /// Raw LP solution as printed (not gauge-fixed).
    pub const Z11_V: [i64; 11] = [-8, -10, -1, -3, 6, 4, -9, 0, -2, -15, -6];
    pub const Z14_PAIRS: [[i64; 3]; 3] = [[2, -3, 1], [-3, 1, 2], [1, 2, -3]];
    pub const G55556_WEIGHT: [i64; 6] = [22, 10, 16, 50, 31, 21];
    pub const G55556_MISSING: [i64; 6] = [3, 2, -3, 1, -1, -2];
}

pub const EXAMPLES: [&str; 3] = ["example-hard", "example-reducible", "example-nonnormal"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExampleReport {
    pub id: String,
    pub items: Vec<CheckItem>,
    pub elapsed_ms: u128,
    /// Every Gröbner basis computed along the way passed `verify`.
    pub bases_verified: usize,
}

impl ExampleReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
}

fn item(name: &str, pass: bool, detail: impl Into<String>) -> CheckItem {
    CheckItem {
        name: name.to_string(),
        pass,
        detail: detail.into(),
    }
}

/// Parses a comma-separated integer vector per line, skipping `#` comments.
pub fn parse_vector_lines(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v = line
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|t| {
                t.trim().replace('−', "-").parse::<i64>().map_err(|e| Error::Parse {
                    line: ln + 1,
                    column: 1,
                    message: format!("bad integer '{}': {e}", t.trim()),
                })
            })
            .collect::<Result<Vec<i64>>>()?;
        out.push(v);
    }
    Ok(out)
}

pub fn reproduce(id: &str) -> Result<ExampleReport> {
    let start = Instant::now();
    let (items, bases) = match id {
        "example-hard" => hard()?,
        "example-reducible" => reducible()?,
        "example-nonnormal" => nonnormal()?,
        other => {
            return Err(Error::Precondition(format!(
                "unknown example '{other}' (expected one of {})",
                EXAMPLES.join(", ")
            )))
        }
    };
    let mut all = items;
    let mut verified = 0;
    for gb in &bases {
        if gb.verify()? {
            verified += 1;
        }
    }
    all.push(item(
        "groebner bases re-verified",
        verified == bases.len(),
        format!("{verified}/{} bases pass the S-pair and reducedness check", bases.len()),
    ));
    Ok(ExampleReport {
        id: id.to_string(),
        items: all,
        elapsed_ms: start.elapsed().as_millis(),
        bases_verified: verified,
    })
}

fn hard() -> Result<(Vec<CheckItem>, Vec<ReducedGB>)> {
    let spec = GroupSpec::parse(data::Z11_GROUP)?;
    let chars = CharGroup::new(&spec);
    let names = spec.variable_names();
    let theta = ThetaParam::from_ints(&data::Z11_THETA)?;
    let c = distinguished_constellation(&chars, &theta, &RatVec::from_ints(&data::Z11_WEIGHT))?;
    let expected = QuiverRep::parse(data::Z11_CONSTELLATION, &chars, &names)?;
    let mut items = Vec::new();
    let diff: Vec<String> = (0..chars.r())
        .flat_map(|rho| (0..chars.n()).map(move |i| (i, rho)))
        .filter(|&(i, rho)| c.rep.get(i, rho) != expected.get(i, rho))
        .map(|(i, rho)| format!("{}*e_{}", names[i], chars.label(rho)))
        .collect();
    items.push(item(
        "M_{θ,w} equals the printed module",
        diff.is_empty(),
        if diff.is_empty() {
            format!("{} binomials, {} lone monomials", c.rep.count_ones(), chars.r() * chars.n() - c.rep.count_ones())
        } else {
            format!("differs at {}", diff.join(", "))
        },
    ));
    let target = theta.values().dot(&RatVec::from_ints(&data::Z11_V));
    items.push(item(
        "LP objective equals θ·v",
        c.objective == target,
        format!("computed {}, expected {target}", c.objective),
    ));
    let q = support_quiver(&chars, &c.rep, false)?;
    let cycle = q.find_cycle();
    items.push(item(
        "support quiver acyclic",
        cycle.is_none(),
        format!("{} arrows, cycle {:?}", q.len(), cycle),
    ));
    let reach = q.reachable_from(&[chars.trivial()]);
    let count = reach.iter().filter(|&&x| x).count();
    let negative: Vec<usize> = (0..chars.r())
        .filter(|&k| theta.values().entries()[k] < num_rational::BigRational::zero())
        .collect();
    let reach_neg = q.reachable_from(&negative).iter().filter(|&&x| x).count();
    items.push(item(
        "all vertices reachable from ρ0",
        count == chars.r(),
        format!(
            "{count}/{} reachable from ρ0; {reach_neg}/{} from the θ-negative vertices {:?}; connected: {}",
            chars.r(),
            chars.r(),
            negative.iter().map(|&k| chars.label(k)).collect::<Vec<_>>(),
            q.is_connected()
        ),
    ));
    let rel = verify_quiver_rep(&chars, &c.rep);
    items.push(item(
        "quiver relations and S-pair chain",
        rel.is_ok(),
        format!("{rel:?}"),
    ));
    Ok((items, Vec::new()))
}

fn reducible() -> Result<(Vec<CheckItem>, Vec<ReducedGB>)> {
    let spec = GroupSpec::parse(data::Z14_GROUP)?;
    let chars = CharGroup::new(&spec);
    let names = spec.variable_names();
    let j = MonomialIdeal::new(3, parse_monomial_list(data::Z14_J, &names)?)?;
    let mut items = Vec::new();
    let cluster = match is_g_cluster(&j, &chars) {
        Ok(c) => {
            items.push(item("J is a G-cluster", c.std.len() == 14, format!("{} standard monomials", c.std.len())));
            c
        }
        Err(e) => {
            items.push(item("J is a G-cluster", false, e.to_string()));
            return Ok((items, Vec::new()));
        }
    };
    let im = lattice_ideal(chars.lattice())?;
    let gb = crate::groebner::buchberger(&im, &crate::groebner::TermOrder::deglex(3))?;
    let verdict = coherent_membership(&cluster, &chars, &im)?;
    let off = matches!(verdict, MembershipVerdict::OffComponent { .. });
    items.push(item("J is off the coherent component", off, format!("{verdict:?}")));
    let support = verdict.certificate_support();
    let expected: Vec<Vec<i64>> = data::Z14_PAIRS.iter().map(|p| p.to_vec()).collect();
    let on_listed = support.iter().all(|(p, _)| expected.contains(p)) && support.len() == 3;
    let mut sum = vec![BigInt::zero(); 3];
    for (p, c) in &support {
        for k in 0..3 {
            sum[k] += BigInt::from(p[k]) * c;
        }
    }
    items.push(item(
        "certificate combines the three pairs to zero",
        on_listed && sum.iter().all(|x| x.is_zero()),
        format!(
            "{}; sum {:?}",
            support.iter().map(|(p, c)| format!("{c}·{p:?}")).collect::<Vec<_>>().join(" + "),
            sum
        ),
    ));
    Ok((items, vec![gb]))
}

fn nonnormal() -> Result<(Vec<CheckItem>, Vec<ReducedGB>)> {
    let spec = GroupSpec::parse(data::G55556_GROUP)?;
    let chars = CharGroup::new(&spec);
    let names = spec.variable_names();
    let mut items = Vec::new();
    let im = lattice_ideal(chars.lattice())?;
    let printed: Vec<Binomial> = parse_binomial_list(data::G55556_IM, &names)?;
    let deglex = crate::groebner::TermOrder::deglex(chars.n());
    let ours = ReducedGB::from_parts(im.clone(), deglex.clone(), chars.n());
    let theirs = crate::groebner::buchberger(&printed, &deglex)?;
    let a = ours.contains_all(&printed)?;
    let b = theirs.contains_all(&im)?;
    items.push(item(
        "I_M equals the printed ideal",
        a && b,
        format!(
            "{} computed generators, {} printed; printed ⊆ computed: {a}, computed ⊆ printed: {b}",
            im.len(),
            printed.len()
        ),
    ));
    let w = RatVec::from_ints(&data::G55556_WEIGHT);
    let (cluster, gb_w) = initial_cluster(&im, &chars, &w)?;
    let j = MonomialIdeal::new(chars.n(), parse_monomial_list(data::G55556_J, &names)?)?;
    items.push(item(
        "in_w(I_M) equals the printed J",
        cluster.ideal == j,
        format!("{} minimal generators, {} printed", cluster.ideal.min_gens().len(), j.min_gens().len()),
    ));
    let chart = chart_semigroup(&cluster, &chars, &w)?;
    let gens = chart.gens();
    let (hb, missing) = chart_normality(&gens, chars.lattice(), &w)?;
    let mut printed_hb = parse_vector_lines(data::G55556_HB)?;
    printed_hb.sort();
    items.push(item(
        "Hilbert basis over M equals the printed list",
        hb == printed_hb,
        format!("{} vectors computed, {} printed", hb.len(), printed_hb.len()),
    ));
    let target = data::G55556_MISSING.to_vec();
    let m = semigroup_contains(&gens, &target, &w)?;
    items.push(item(
        "(3,2,-3,1,-1,-2) is not in A_J",
        !m.is_member(),
        match m {
            Membership::NotMember { residuals_explored } => format!("{residuals_explored} residuals explored"),
            Membership::Member(idx) => format!("decomposition {idx:?}"),
        },
    ));
    items.push(item(
        "chart is not normal",
        missing.iter().map(|(v, _)| v).eq([&target]),
        format!("missing {:?}", missing.iter().map(|(v, _)| v).collect::<Vec<_>>()),
    ));
    Ok((items, vec![theirs, gb_w]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_lines() {
        assert_eq!(
            parse_vector_lines("# c\n(1, -2,3)\n4,5,−6\n").unwrap(),
            vec![vec![1, -2, 3], vec![4, 5, -6]]
        );
        assert!(parse_vector_lines("1,x").is_err());
    }

    #[test]
    fn unknown_example() {
        assert!(reproduce("example-missing").is_err());
    }

    #[test]
    fn reducible_passes() {
        let r = reproduce("example-reducible").unwrap();
        assert!(r.pass(), "{:#?}", r.items);
    }
}
