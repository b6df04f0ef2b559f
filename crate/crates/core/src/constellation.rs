//! McKay module, distinguished G-constellations from the slice LP, support
//! quivers and path decompositions.
//!
//! Arrow `a_i^ρ` corresponds to the generator `x_i e_ρ - e_{ρρ_i}` of the
//! McKay module; as a quiver arrow it runs from `ρρ_i` (tail) to `ρ` (head),
//! matching the column `e_ρ - e_{ρρ_i}` of the incidence matrix `B`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::RatVec;
use crate::group::{CharGroup, QuiverMatrices, ThetaParam};
use crate::polyhedral::lp::{Constraint, LinearProgram, LpOutcome, Relation};

type Q = BigRational;

/// Generator `x_i e_ρ - e_{ρρ_i}` of the McKay module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McKayGen {
    pub i: usize,
    pub rho: usize,
    pub target: usize,
}

/// The `nr` generators in (ρ-block, i) order.
pub fn mckay_module(chars: &CharGroup) -> Vec<McKayGen> {
    let mut out = Vec::with_capacity(chars.r() * chars.n());
    for rho in 0..chars.r() {
        for i in 0..chars.n() {
            out.push(McKayGen {
                i,
                rho,
                target: chars.step(rho, i),
            });
        }
    }
    out
}

/// A `{0,1}`-valued representation `b_i^ρ` of the McKay quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiverRep {
    n: usize,
    r: usize,
    b: Vec<bool>,
}

impl QuiverRep {
    pub fn new(n: usize, r: usize, b: Vec<bool>) -> Result<Self> {
        if b.len() != n * r {
            return Err(Error::Dimension {
                expected: n * r,
                found: b.len(),
            });
        }
        Ok(QuiverRep { n, r, b })
    }

    /// `b ≡ 1`, i.e. the McKay module itself.
    pub fn all_ones(n: usize, r: usize) -> Self {
        QuiverRep {
            n,
            r,
            b: vec![true; n * r],
        }
    }

    pub fn get(&self, i: usize, rho: usize) -> bool {
        self.b[rho * self.n + i]
    }

    pub fn set(&mut self, i: usize, rho: usize, value: bool) {
        self.b[rho * self.n + i] = value;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn count_ones(&self) -> usize {
        self.b.iter().filter(|&&x| x).count()
    }

    /// Generators of `M_b` in the printout format, one line per ρ-block:
    /// `x_i*e_ρ - e_ρ'` when `b_i^ρ = 1`, the lone monomial `x_i*e_ρ` otherwise.
    pub fn format(&self, chars: &CharGroup, names: &[String]) -> String {
        let mut s = String::new();
        for rho in 0..self.r {
            let parts: Vec<String> = (0..self.n)
                .map(|i| {
                    let head = format!("{}*e_{}", names[i], chars.label(rho));
                    if self.get(i, rho) {
                        format!("{head} - e_{}", chars.label(chars.step(rho, i)))
                    } else {
                        head
                    }
                })
                .collect();
            let _ = writeln!(s, "{}: {}", chars.label(rho), parts.join(", "));
        }
        s
    }

    /// Parses the output of [`QuiverRep::format`]. Every generator must be
    /// present exactly once; a binomial must point at the right target.
    pub fn parse(text: &str, chars: &CharGroup, names: &[String]) -> Result<Self> {
        let (n, r) = (chars.n(), chars.r());
        let mut seen = vec![false; n * r];
        let mut b = vec![false; n * r];
        let label_index = |tok: &str| (0..r).find(|&k| chars.label(k) == tok);
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse {
                line: ln + 1,
                column: 1,
                message: msg,
            };
            let body = match line.split_once(':') {
                Some((_, body)) => body,
                None => line,
            };
            for item in body.split(',') {
                let item = item.trim();
                if item.is_empty() {
                    continue;
                }
                let (mono, tail) = match item.split_once(" - ") {
                    Some((m, t)) => (m.trim(), Some(t.trim())),
                    None => (item, None),
                };
                let (var, e) = mono
                    .split_once("*e_")
                    .ok_or_else(|| err(format!("expected 'x*e_ρ' in '{item}'")))?;
                let i = names
                    .iter()
                    .position(|nm| nm == var.trim())
                    .ok_or_else(|| err(format!("unknown variable '{var}'")))?;
                let rho = label_index(e.trim()).ok_or_else(|| err(format!("unknown vertex '{e}'")))?;
                let k = rho * n + i;
                if seen[k] {
                    return Err(err(format!("generator '{item}' repeated")));
                }
                seen[k] = true;
                if let Some(t) = tail {
                    let t = t
                        .strip_prefix("e_")
                        .ok_or_else(|| err(format!("expected 'e_ρ' in '{item}'")))?;
                    let target = label_index(t).ok_or_else(|| err(format!("unknown vertex '{t}'")))?;
                    if target != chars.step(rho, i) {
                        return Err(err(format!("'{item}' does not point at {}", chars.label(chars.step(rho, i)))));
                    }
                    b[k] = true;
                }
            }
        }
        if let Some(k) = seen.iter().position(|&x| !x) {
            return Err(Error::Data(format!(
                "generator for x{} at {} missing",
                k % n + 1,
                chars.label(k / n)
            )));
        }
        Ok(QuiverRep { n, r, b })
    }
}

/// Output of [`distinguished_constellation`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Constellation {
    pub rep: QuiverRep,
    /// Optimal vertex returned by the simplex method, with `v_ρ0 = 0`.
    pub v: RatVec,
    pub objective: Q,
    /// `w_i + v_ρ - v_{ρρ_i}` at `v`, in (ρ-block, i) order.
    pub slacks: Vec<Q>,
    /// Whether the LP optimum is a single point.
    pub unique_optimum: bool,
}

fn slice_lp(chars: &CharGroup, theta: &ThetaParam, w: &RatVec) -> LinearProgram {
    let (n, r) = (chars.n(), chars.r());
    let mut lp = LinearProgram::new(r);
    lp.objective = theta.values().entries().to_vec();
    for rho in 0..r {
        for i in 0..n {
            let t = chars.step(rho, i);
            let mut c = vec![Q::zero(); r];
            c[rho] += Q::from_integer(1.into());
            c[t] -= Q::from_integer(1.into());
            lp.add(Constraint::new(c, Relation::Ge, -w.entries()[i].clone()));
        }
    }
    let mut pin = vec![Q::zero(); r];
    pin[chars.trivial()] = Q::from_integer(1.into());
    lp.add(Constraint::new(pin, Relation::Eq, Q::zero()));
    lp
}

/// Solves `min θ·v` over the slice `{w_i + v_ρ - v_{ρρ_i} ≥ 0}` with
/// `v_ρ0 = 0` and reads off `b`: an arrow is kept iff its constraint is
/// tight on the whole optimal face, which does not depend on which optimal
/// vertex the solver lands on.
pub fn distinguished_constellation(chars: &CharGroup, theta: &ThetaParam, w: &RatVec) -> Result<Constellation> {
    distinguished_with_permutation(chars, theta, w, None)
}

/// As [`distinguished_constellation`], with the slice constraints handed to
/// the solver in the given order (used to test independence of the order).
pub fn distinguished_with_permutation(
    chars: &CharGroup,
    theta: &ThetaParam,
    w: &RatVec,
    perm: Option<&[usize]>,
) -> Result<Constellation> {
    let (n, r) = (chars.n(), chars.r());
    if theta.len() != r {
        return Err(Error::Dimension {
            expected: r,
            found: theta.len(),
        });
    }
    if w.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: w.len(),
        });
    }
    if w.entries().iter().any(|x| x.is_negative()) {
        return Err(Error::Precondition(format!("weight {w} has a negative entry")));
    }
    let base = slice_lp(chars, theta, w);
    let m = n * r;
    let order: Vec<usize> = match perm {
        Some(p) => {
            if p.len() != m {
                return Err(Error::Dimension {
                    expected: m,
                    found: p.len(),
                });
            }
            p.to_vec()
        }
        None => (0..m).collect(),
    };
    let mut lp = base.clone();
    lp.constraints = order.iter().map(|&k| base.constraints[k].clone()).collect();
    lp.constraints.push(base.constraints[m].clone());
    let (point, value) = match lp.solve() {
        LpOutcome::Optimal { point, value, .. } => (point, value),
        LpOutcome::Unbounded { .. } => {
            return Err(Error::Data("slice LP is unbounded below".into()));
        }
        LpOutcome::Infeasible { .. } => {
            return Err(Error::Data("slice LP is infeasible for a nonnegative weight".into()));
        }
    };
    let slack = |k: usize, v: &[Q]| -> Q {
        let c = &base.constraints[k];
        crate::polyhedral::lp::dot(&c.coeffs, v) - &c.rhs
    };
    let slacks: Vec<Q> = (0..m).map(|k| slack(k, &point)).collect();

    // Constraints tight on the whole optimal face.
    let mut face = base.clone();
    face.add(Constraint::new(theta.values().entries().to_vec(), Relation::Eq, value.clone()));
    let mut b = vec![false; m];
    for k in 0..m {
        if !slacks[k].is_zero() {
            continue;
        }
        let mut probe = face.clone();
        probe.objective = base.constraints[k].coeffs.iter().map(|x| -x.clone()).collect();
        b[k] = match probe.solve() {
            LpOutcome::Optimal { point, .. } => slack(k, &point).is_zero(),
            LpOutcome::Unbounded { .. } => false,
            LpOutcome::Infeasible { .. } => unreachable!("optimal face contains the returned vertex"),
        };
    }
    let tight_rows: Vec<Vec<i64>> = (0..m)
        .filter(|&k| b[k])
        .map(|k| {
            let (rho, i) = (k / n, k % n);
            let mut row = vec![0i64; r];
            row[rho] += 1;
            row[chars.step(rho, i)] -= 1;
            row
        })
        .collect();
    // v_ρ0 is pinned, so the face is a point iff the tight rows span the
    // (r-1)-dimensional space of differences.
    let unique_optimum = crate::exact::rank_i64(&tight_rows, r) == r - 1;
    Ok(Constellation {
        rep: QuiverRep { n, r, b },
        v: RatVec::new(point),
        objective: value,
        slacks,
        unique_optimum,
    })
}

/// What [`verify_quiver_rep`] checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepVerification {
    pub relations_checked: usize,
    pub spairs_checked: usize,
}

/// Checks the commutativity relations `b_j^{ρρ_i} b_i^ρ = b_i^{ρρ_j} b_j^ρ`
/// and reduces every S-pair of the generators `x_i e_ρ - b_i^ρ e_{ρρ_i}`
/// along the two follow-up generators, asserting a zero remainder.
pub fn verify_quiver_rep(chars: &CharGroup, rep: &QuiverRep) -> Result<RepVerification> {
    let (n, r) = (chars.n(), chars.r());
    let b = |i: usize, rho: usize| -> i64 { rep.get(i, rho) as i64 };
    let mut relations = 0;
    for rho in 0..r {
        for i in 0..n {
            for j in 0..n {
                relations += 1;
                let lhs = b(j, chars.step(rho, i)) * b(i, rho);
                let rhs = b(i, chars.step(rho, j)) * b(j, rho);
                if lhs != rhs {
                    return Err(Error::RelationViolation { i, j, rho });
                }
            }
        }
    }
    let mut spairs = 0;
    for rho in 0..r {
        for i in 0..n {
            for j in i + 1..n {
                spairs += 1;
                // x_j·g_i^ρ - x_i·g_j^ρ = -b_i^ρ x_j e_{ρρ_i} + b_j^ρ x_i e_{ρρ_j}.
                let (a, ca) = (chars.step(rho, i), -b(i, rho));
                let (c, cc) = (chars.step(rho, j), b(j, rho));
                // x_j e_a → b_j^a e_{aρ_j};  x_i e_c → b_i^c e_{cρ_i}.
                let ta = chars.step(a, j);
                let tc = chars.step(c, i);
                debug_assert_eq!(ta, tc);
                let coeff = ca * b(j, a) + cc * b(i, c);
                if coeff != 0 {
                    return Err(Error::RelationViolation { i, j, rho });
                }
            }
        }
    }
    Ok(RepVerification {
        relations_checked: relations,
        spairs_checked: spairs,
    })
}

/// Arrows `a_i^ρ` with `b_i^ρ ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportQuiver {
    r: usize,
    /// `(i, ρ)` pairs in (ρ-block, i) order.
    pub arrows: Vec<(usize, usize)>,
    /// `(tail, head)` for each arrow.
    pub edges: Vec<(usize, usize)>,
}

pub fn support_quiver(chars: &CharGroup, rep: &QuiverRep, expect_acyclic: bool) -> Result<SupportQuiver> {
    let mut arrows = Vec::new();
    let mut edges = Vec::new();
    for rho in 0..chars.r() {
        for i in 0..chars.n() {
            if rep.get(i, rho) {
                arrows.push((i, rho));
                edges.push((chars.step(rho, i), rho));
            }
        }
    }
    let q = SupportQuiver {
        r: chars.r(),
        arrows,
        edges,
    };
    if expect_acyclic {
        if let Some(cycle) = q.find_cycle() {
            return Err(Error::UnexpectedCycle(cycle));
        }
    }
    Ok(q)
}

impl SupportQuiver {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.r];
        for (k, &(t, _)) in self.edges.iter().enumerate() {
            out[t].push(k);
        }
        out
    }

    /// A directed cycle as a list of `(i, ρ)` arrows, found by depth-first
    /// search in vertex order.
    pub fn find_cycle(&self) -> Option<Vec<(usize, usize)>> {
        let out = self.out_edges();
        // 0 = new, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.r];
        let mut via: Vec<Option<usize>> = vec![None; self.r];
        for start in 0..self.r {
            if state[start] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
            state[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if *next < out[v].len() {
                    let e = out[v][*next];
                    *next += 1;
                    let h = self.edges[e].1;
                    match state[h] {
                        0 => {
                            state[h] = 1;
                            via[h] = Some(e);
                            stack.push((h, 0));
                        }
                        1 => {
                            let mut cyc = vec![self.arrows[e]];
                            let mut x = v;
                            while x != h {
                                let pe = via[x].expect("on-stack vertex has a parent edge");
                                cyc.push(self.arrows[pe]);
                                x = self.edges[pe].0;
                            }
                            cyc.reverse();
                            return Some(cyc);
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Vertices reachable from the given sources along arrows.
    pub fn reachable_from(&self, sources: &[usize]) -> Vec<bool> {
        let out = self.out_edges();
        let mut seen = vec![false; self.r];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in sources {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &e in &out[v] {
                let h = self.edges[e].1;
                if !seen[h] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
        seen
    }

    /// Reachability ignoring arrow directions.
    pub fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.r];
        for &(t, h) in &self.edges {
            adj[t].push(h);
            adj[h].push(t);
        }
        let mut seen = vec![false; self.r];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &adj[v] {
                if !seen[h] {
                    seen[h] = true;
                    queue.push_back(h);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Type vector (exponent of `x`) of the unique directed path from
    /// `source` to each vertex, for an acyclic quiver in which each vertex
    /// has at most one path from `source`; `None` where no path exists.
    pub fn path_types(&self, chars: &CharGroup, source: usize) -> Vec<Option<Vec<i64>>> {
        let out = self.out_edges();
        let mut types: Vec<Option<Vec<i64>>> = vec![None; self.r];
        types[source] = Some(vec![0; chars.n()]);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &e in &out[v] {
                let h = self.edges[e].1;
                if types[h].is_none() {
                    let mut t = types[v].clone().unwrap();
                    t[self.arrows[e].0] += 1;
                    types[h] = Some(t);
                    queue.push_back(h);
                }
            }
        }
        types
    }
}

/// Splits `u ∈ N^{nr}` with `B·u = θ` into directed paths from ρ0 (each with
/// `B·u_k = e_ρ - e_ρ0`) plus a remainder that is a union of cycles.
pub fn path_decompose(
    chars: &CharGroup,
    quiver: &QuiverMatrices,
    u: &[i64],
    theta: &[i64],
) -> Result<(Vec<i64>, Vec<Vec<i64>>)> {
    let (n, r) = (chars.n(), chars.r());
    if u.len() != n * r || theta.len() != r {
        return Err(Error::Dimension {
            expected: n * r,
            found: u.len(),
        });
    }
    if u.iter().any(|&x| x < 0) {
        return Err(Error::Precondition("u has a negative entry".into()));
    }
    if quiver.b_times(u) != theta {
        return Err(Error::Precondition("B·u differs from θ".into()));
    }
    let t0 = chars.trivial();
    if theta[t0] > 0 || (0..r).any(|k| k != t0 && theta[k] < 0) {
        return Err(Error::Precondition("θ must be ≤ 0 at ρ0 and ≥ 0 elsewhere".into()));
    }
    let mut residual = u.to_vec();
    let mut th = theta.to_vec();
    let mut paths = Vec::new();
    while th[t0] < 0 {
        let mut path = vec![0i64; n * r];
        let mut cur = t0;
        loop {
            // Arrows with tail `cur`: columns (ρ, i) with ρρ_i = cur.
            let next = (0..n).find_map(|i| {
                let rho = chars.mul(cur, chars.inv(chars.rho(i)));
                let col = quiver.column_index(rho, i);
                (residual[col] > 0).then_some((col, rho))
            });
            match next {
                Some((col, rho)) => {
                    residual[col] -= 1;
                    path[col] += 1;
                    cur = rho;
                }
                None => break,
            }
        }
        if cur == t0 {
            return Err(Error::Data("path walk returned to ρ0".into()));
        }
        th[t0] += 1;
        th[cur] -= 1;
        paths.push(path);
    }
    Ok((residual, paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn z11() -> CharGroup {
        CharGroup::new(&GroupSpec::cyclic(11, &[1, 2, 8]).unwrap())
    }

    #[test]
    fn mckay_generators() {
        let t = CharGroup::new(&GroupSpec::parse("n = 1\n").unwrap());
        assert_eq!(mckay_module(&t), vec![McKayGen { i: 0, rho: 0, target: 0 }]);
        let g = z11();
        let m = mckay_module(&g);
        assert_eq!(m.len(), 33);
        assert_eq!(m[0].target, 1);
        assert_eq!(m[2].target, 8);
        assert_eq!(m[11].target, 0); // x3 e_ρ3 - e_ρ0
    }

    #[test]
    fn z2_hand_lp() {
        let g = CharGroup::new(&GroupSpec::cyclic(2, &[1]).unwrap());
        let theta = ThetaParam::from_ints(&[-1, 1]).unwrap();
        let c = distinguished_constellation(&g, &theta, &RatVec::from_ints(&[1])).unwrap();
        assert_eq!(c.v, RatVec::from_ints(&[0, -1]));
        assert!(!c.rep.get(0, 0));
        assert!(c.rep.get(0, 1));
        let q = support_quiver(&g, &c.rep, true).unwrap();
        assert_eq!(q.edges, vec![(0, 1)]);
        assert!(q.reachable_from(&[0]).iter().all(|&x| x));
        verify_quiver_rep(&g, &c.rep).unwrap();
    }

    #[test]
    fn zero_weight_gives_mckay_module() {
        let g = z11();
        let theta = ThetaParam::ghilb_sample(11);
        let c = distinguished_constellation(&g, &theta, &RatVec::zeros(3)).unwrap();
        assert_eq!(c.rep, QuiverRep::all_ones(3, 11));
        assert!(c.unique_optimum);
        let q = support_quiver(&g, &c.rep, false).unwrap();
        assert!(q.find_cycle().is_some());
        assert!(support_quiver(&g, &c.rep, true).is_err());
    }

    #[test]
    fn relation_violation() {
        let g = z11();
        let mut rep = QuiverRep::all_ones(3, 11);
        rep.set(0, g.step(0, 1), false);
        assert!(matches!(verify_quiver_rep(&g, &rep), Err(Error::RelationViolation { .. })));
    }

    #[test]
    fn format_round_trip() {
        let g = z11();
        let names: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
        let theta = ThetaParam::from_ints(&[1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1]).unwrap();
        let c = distinguished_constellation(&g, &theta, &RatVec::from_ints(&[10, 7, 6])).unwrap();
        let text = c.rep.format(&g, &names);
        assert_eq!(QuiverRep::parse(&text, &g, &names).unwrap(), c.rep);
    }

    #[test]
    fn z11_hard_parameter() {
        let g = z11();
        let names: Vec<String> = (1..=3).map(|i| format!("x{i}")).collect();
        let theta = ThetaParam::from_ints(&[1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1]).unwrap();
        let c = distinguished_constellation(&g, &theta, &RatVec::from_ints(&[10, 7, 6])).unwrap();
        let expected = QuiverRep::parse(include_str!("../data/z11_hard_constellation.txt"), &g, &names).unwrap();
        assert_eq!(c.rep, expected);
        assert!(c.unique_optimum);
        let v = RatVec::from_ints(&[-8, -10, -1, -3, 6, 4, -9, 0, -2, -15, -6]);
        assert_eq!(c.objective, theta.values().dot(&v) - theta.values().dot(&RatVec::from_ints(&[-8; 11])));
        let q = support_quiver(&g, &c.rep, true).unwrap();
        assert_eq!(q.len(), 12);
        assert!(q.is_connected());
        let from_negative = q.reachable_from(&[4, 5]);
        assert!(from_negative.iter().all(|&x| x));
        verify_quiver_rep(&g, &c.rep).unwrap();
    }

    #[test]
    fn path_decomposition() {
        let g = CharGroup::new(&GroupSpec::cyclic(2, &[1]).unwrap());
        let q = QuiverMatrices::new(&g);
        let (u0, paths) = path_decompose(&g, &q, &[0, 0], &[0, 0]).unwrap();
        assert_eq!(u0, vec![0, 0]);
        assert!(paths.is_empty());
        // Two-cycle.
        let (u0, paths) = path_decompose(&g, &q, &[1, 1], &[0, 0]).unwrap();
        assert_eq!(u0, vec![1, 1]);
        assert!(paths.is_empty());
        // Single arrow from ρ0 to ρ1 is a_1^{ρ1} (column 1); B·u = e_ρ1 - e_ρ0.
        let (u0, paths) = path_decompose(&g, &q, &[0, 1], &[-1, 1]).unwrap();
        assert_eq!(u0, vec![0, 0]);
        assert_eq!(paths, vec![vec![0, 1]]);
    }
}
