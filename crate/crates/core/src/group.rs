//! Diagonal abelian groups, their character groups and the McKay quiver matrices.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{kernel_mod, lattice_index, smith_invariants, IntMatrix, RatVec};

/// One generator `diag(ζ_m^{a_1}, …, ζ_m^{a_n})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub modulus: i64,
    pub exponents: Vec<i64>,
}

/// A finite diagonal subgroup of `GL(n)` given by generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub n: usize,
    pub generators: Vec<Generator>,
    pub names: Option<Vec<String>>,
}

impl GroupSpec {
    /// Validates and reduces exponents into `[0, modulus)`.
    pub fn new(n: usize, generators: Vec<Generator>, names: Option<Vec<String>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("dimension n must be at least 1".into()));
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.modulus < 1 {
                return Err(Error::InvalidGroup(format!("modulus {} < 1", g.modulus)));
            }
            if g.exponents.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "generator has {} exponents, expected {n}",
                    g.exponents.len()
                )));
            }
            let exponents = g.exponents.iter().map(|a| a.rem_euclid(g.modulus)).collect();
            gens.push(Generator {
                modulus: g.modulus,
                exponents,
            });
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "{} variable names given, expected {n}",
                    names.len()
                )));
            }
        }
        Ok(GroupSpec {
            n,
            generators: gens,
            names,
        })
    }

    pub fn cyclic(modulus: i64, exponents: &[i64]) -> Result<Self> {
        Self::new(
            exponents.len(),
            vec![Generator {
                modulus,
                exponents: exponents.to_vec(),
            }],
            None,
        )
    }

    pub fn variable_names(&self) -> Vec<String> {
        match &self.names {
            Some(n) => n.clone(),
            None => (1..=self.n).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Parses the `n = …` / `gen m : a1 … an` / `names = …` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut names = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let indent = content.len() - content.trim_start().len();
            let line = content.trim();
            if line.is_empty() {
                continue;
            }
            let err = |col: usize, msg: String| Error::Parse {
                line: line_no,
                column: col + 1,
                message: msg,
            };
            if let Some(rest) = line.strip_prefix("gen") {
                let Some(dim) = n else {
                    return Err(err(indent, "generator before 'n = <int>'".into()));
                };
                let Some((m, exps)) = rest.split_once(':') else {
                    return Err(err(indent, "expected 'gen <modulus> : <a1> ... <an>'".into()));
                };
                let modulus: i64 = m
                    .trim()
                    .parse()
                    .map_err(|_| err(indent + 3, format!("bad modulus '{}'", m.trim())))?;
                if modulus < 1 {
                    return Err(err(indent + 3, format!("modulus {modulus} < 1")));
                }
                let colon = indent + 3 + m.len() + 1;
                let mut exponents = Vec::new();
                for tok in exps.split_whitespace() {
                    let a: i64 = tok
                        .parse()
                        .map_err(|_| err(colon, format!("bad exponent '{tok}'")))?;
                    exponents.push(a);
                }
                if exponents.len() != dim {
                    return Err(err(
                        colon,
                        format!("exponent row has {} entries, expected {dim}", exponents.len()),
                    ));
                }
                gens.push(Generator { modulus, exponents });
            } else if let Some((key, value)) = line.split_once('=') {
                match key.trim() {
                    "n" => {
                        let v: usize = value
                            .trim()
                            .parse()
                            .map_err(|_| err(indent, format!("bad dimension '{}'", value.trim())))?;
                        if n.is_some() {
                            return Err(err(indent, "dimension given twice".into()));
                        }
                        n = Some(v);
                    }
                    "names" => {
                        names = Some(value.split_whitespace().map(str::to_string).collect());
                    }
                    other => return Err(err(indent, format!("unknown key '{other}'"))),
                }
            } else {
                return Err(err(indent, format!("unrecognized line '{line}'")));
            }
        }
        let Some(n) = n else {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "missing 'n = <int>'".into(),
            });
        };
        Self::new(n, gens, names)
    }

    /// Canonical text form; parsing it yields an equal value.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "n = {}", self.n).unwrap();
        if let Some(names) = &self.names {
            writeln!(s, "names = {}", names.join(" ")).unwrap();
        }
        for g in &self.generators {
            let exps: Vec<String> = g.exponents.iter().map(|a| a.to_string()).collect();
            writeln!(s, "gen {} : {}", g.modulus, exps.join(" ")).unwrap();
        }
        s
    }
}

/// The character group `G*` with its canonical enumeration.
///
/// A character is stored as the tuple of its exponents on the generators;
/// elements are listed in lexicographic order of these residue tuples, so
/// the trivial character is element 0 and, for a cyclic group with a
/// single generator, element `k` is the character with residue `k`.
#[derive(Clone, Debug)]
pub struct CharGroup {
    n: usize,
    moduli: Vec<i64>,
    elements: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    rho: Vec<usize>,
    step: Vec<usize>,
    lattice: IntMatrix,
    invariant_factors: Vec<BigInt>,
    generator_orders: Vec<i64>,
}

impl CharGroup {
    pub fn new(spec: &GroupSpec) -> Self {
        let n = spec.n;
        let moduli: Vec<i64> = spec.generators.iter().map(|g| g.modulus).collect();
        let rho_tuples: Vec<Vec<i64>> = (0..n)
            .map(|i| spec.generators.iter().map(|g| g.exponents[i]).collect())
            .collect();
        // G* is the subgroup generated by the rho_i.
        let zero = vec![0i64; moduli.len()];
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        seen.insert(zero.clone(), ());
        let mut frontier = vec![zero];
        while let Some(c) = frontier.pop() {
            for r in &rho_tuples {
                let s: Vec<i64> = c
                    .iter()
                    .zip(r)
                    .zip(&moduli)
                    .map(|((a, b), m)| (a + b).rem_euclid(*m))
                    .collect();
                if seen.insert(s.clone(), ()).is_none() {
                    frontier.push(s);
                }
            }
        }
        let mut elements: Vec<Vec<i64>> = seen.into_keys().collect();
        elements.sort();
        let index: HashMap<Vec<i64>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let rho: Vec<usize> = rho_tuples.iter().map(|t| index[t]).collect();
        let r = elements.len();
        let mut step = vec![0; r * n];
        for (k, e) in elements.iter().enumerate() {
            for i in 0..n {
                let s: Vec<i64> = e
                    .iter()
                    .zip(&rho_tuples[i])
                    .zip(&moduli)
                    .map(|((a, b), m)| (a + b).rem_euclid(*m))
                    .collect();
                step[k * n + i] = index[&s];
            }
        }
        let a_rows: Vec<Vec<i64>> = spec.generators.iter().map(|g| g.exponents.clone()).collect();
        let a = IntMatrix::from_rows_i64(n, &a_rows);
        let mods: Vec<BigInt> = moduli.iter().map(|&m| BigInt::from(m)).collect();
        let lattice = kernel_mod(&a, &mods);
        let invariant_factors = smith_invariants(&lattice);
        let generator_orders = spec
            .generators
            .iter()
            .map(|g| {
                let gcd = g.exponents.iter().fold(g.modulus, |acc, &x| acc.gcd(&x));
                g.modulus / gcd
            })
            .collect();
        CharGroup {
            n,
            moduli,
            elements,
            index,
            rho,
            step,
            lattice,
            invariant_factors,
            generator_orders,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Order of the group.
    pub fn r(&self) -> usize {
        self.elements.len()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    /// Index of `rho_i = deg(e_i)` (0-based `i`).
    pub fn rho(&self, i: usize) -> usize {
        self.rho[i]
    }

    pub fn rhos(&self) -> &[usize] {
        &self.rho
    }

    /// `rho · rho_i`
    pub fn step(&self, rho: usize, i: usize) -> usize {
        self.step[rho * self.n + i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let s: Vec<i64> = self.elements[a]
            .iter()
            .zip(&self.elements[b])
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + y).rem_euclid(*m))
            .collect();
        self.index[&s]
    }

    pub fn inv(&self, a: usize) -> usize {
        let s: Vec<i64> = self.elements[a]
            .iter()
            .zip(&self.moduli)
            .map(|(x, m)| (-x).rem_euclid(*m))
            .collect();
        self.index[&s]
    }

    /// Degree map `deg(u) = Σ u_i rho_i`; `u` may have negative entries.
    pub fn deg(&self, u: &[i64]) -> usize {
        debug_assert_eq!(u.len(), self.n);
        let mut t = vec![0i64; self.moduli.len()];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            let r = &self.elements[self.rho[i]];
            for k in 0..t.len() {
                t[k] = (t[k] + (ui.rem_euclid(self.moduli[k])) * r[k]).rem_euclid(self.moduli[k]);
            }
        }
        self.index[&t]
    }

    /// Canonical (HNF) basis of `M = ker(deg)`.
    pub fn lattice(&self) -> &IntMatrix {
        &self.lattice
    }

    pub fn lattice_rows(&self) -> Vec<Vec<i64>> {
        self.lattice
            .rows_i64()
            .expect("lattice basis entries are bounded by the group order")
    }

    /// Invariant factors of `Z^n / M ≅ G*`.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Orders of the input generators.
    pub fn generator_orders(&self) -> &[i64] {
        &self.generator_orders
    }

    /// True when the group order is smaller than the product of generator orders.
    pub fn has_redundant_generators(&self) -> bool {
        let prod: BigInt = self.generator_orders.iter().map(|&o| BigInt::from(o)).product();
        prod != BigInt::from(self.r())
    }

    /// Index of `M` in `Z^n`, which must equal `r`.
    pub fn lattice_index(&self) -> BigInt {
        lattice_index(&self.lattice).expect("kernel of a finite group map has full rank")
    }

    pub fn label(&self, rho: usize) -> String {
        format!("ρ{rho}")
    }
}

/// Matrices `B` and `C` of the McKay quiver.
///
/// Columns are indexed by arrows `(rho, i)` in block order: one block per
/// character in the canonical enumeration, `i = 0..n` inside each block.
#[derive(Clone, Debug)]
pub struct QuiverMatrices {
    pub b: IntMatrix,
    pub c: IntMatrix,
    n: usize,
}

impl QuiverMatrices {
    pub fn new(chars: &CharGroup) -> Self {
        let (r, n) = (chars.r(), chars.n());
        let mut c = IntMatrix::zeros(r + n, n * r);
        for rho in 0..r {
            for i in 0..n {
                let col = rho * n + i;
                c[(rho, col)] += 1;
                c[(chars.step(rho, i), col)] -= 1;
                c[(r + i, col)] += 1;
            }
        }
        let b = c.select_rows(&(0..r).collect::<Vec<_>>());
        QuiverMatrices { b, c, n }
    }

    pub fn column_index(&self, rho: usize, i: usize) -> usize {
        rho * self.n + i
    }

    /// `B·u` for `u ∈ Z^{nr}`.
    pub fn b_times(&self, u: &[i64]) -> Vec<i64> {
        let r = self.b.rows();
        let mut out = vec![0i64; r];
        for (col, &x) in u.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (row, o) in out.iter_mut().enumerate() {
                let e = self.b[(row, col)].to_i64().unwrap();
                *o += e * x;
            }
        }
        out
    }
}

/// GIT parameter `θ`, indexed by the canonical enumeration of `G*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaParam(RatVec);

impl ThetaParam {
    pub fn new(theta: RatVec) -> Result<Self> {
        let sum = theta
            .entries()
            .iter()
            .fold(BigRational::zero(), |acc, x| acc + x);
        if !sum.is_zero() {
            return Err(Error::Precondition(format!("θ sums to {sum}, not 0")));
        }
        Ok(ThetaParam(theta))
    }

    pub fn from_ints(v: &[i64]) -> Result<Self> {
        Self::new(RatVec::from_ints(v))
    }

    /// The sample `(-(r-1), 1, …, 1)` from the G-Hilb chamber.
    pub fn ghilb_sample(r: usize) -> Self {
        let mut v = vec![1i64; r];
        v[0] = -(r as i64 - 1);
        ThetaParam(RatVec::from_ints(&v))
    }

    pub fn values(&self) -> &RatVec {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// First line of the G-Hilb chamber condition: `θ_ρ0 < 0` and `θ_ρ > 0` otherwise.
    /// The degree-one generation condition is not checked.
    pub fn validate_ghilb(&self) -> bool {
        let e = self.0.entries();
        !e.is_empty() && e[0].is_negative() && e[1..].iter().all(|x| x.is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    pub(crate) fn z11() -> GroupSpec {
        GroupSpec::parse("n = 3\ngen 11 : 1 2 8\n").unwrap()
    }

    const G55556: &str = "\
# (Z/5)^4 in GL(6)
n = 6
names = a b c d e f
gen 5 : 1 1 1 1 1 1
gen 5 : 0 1 0 3 4 3
gen 5 : 3 2 4 2 1 1
gen 5 : 1 0 1 0 0 0
";

    #[test]
    fn parse_examples() {
        let g = z11();
        assert_eq!(g.n, 3);
        assert_eq!(g.generators.len(), 1);
        let h = GroupSpec::parse(G55556).unwrap();
        assert_eq!(h.n, 6);
        assert_eq!(h.generators.len(), 4);
        assert_eq!(h.variable_names()[5], "f");
        let t = GroupSpec::parse("n = 2\n").unwrap();
        assert!(t.generators.is_empty());
        assert_eq!(CharGroup::new(&t).r(), 1);
    }

    #[test]
    fn parse_errors() {
        let e = GroupSpec::parse("n = 3\ngen 0 : 1 2 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        let e = GroupSpec::parse("n = 3\ngen 5 : 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = GroupSpec::parse("gen 5 : 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = GroupSpec::parse("n = 2\nfoo\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 1, .. }));
    }

    #[test]
    fn canonical_roundtrip() {
        let h = GroupSpec::parse(G55556).unwrap();
        let text = h.to_text();
        assert_eq!(GroupSpec::parse(&text).unwrap(), h);
        assert_eq!(GroupSpec::parse(&text).unwrap().to_text(), text);
        assert_eq!(
            GroupSpec::parse("n=2\ngen 4 : -1 5").unwrap().to_text(),
            "n = 2\ngen 4 : 3 1\n"
        );
    }

    #[test]
    fn z11_characters() {
        let g = CharGroup::new(&z11());
        assert_eq!(g.r(), 11);
        assert_eq!(g.rhos(), &[1, 2, 8]);
        assert_eq!(g.lattice_index(), BigInt::from(11));
        assert_eq!(g.invariant_factors(), &[BigInt::from(11)]);
    }

    #[test]
    fn g55556_characters() {
        let g = CharGroup::new(&GroupSpec::parse(G55556).unwrap());
        assert_eq!(g.r(), 625);
        assert!(!g.has_redundant_generators());
        assert_eq!(g.lattice_index(), BigInt::from(625));
        assert_eq!(g.invariant_factors(), vec![BigInt::from(5); 4].as_slice());
    }

    #[test]
    fn redundant_generators_detected() {
        let g = CharGroup::new(&GroupSpec::parse("n = 2\ngen 3 : 1 2\ngen 3 : 2 1\n").unwrap());
        assert_eq!(g.r(), 3);
        assert!(g.has_redundant_generators());
    }

    #[test]
    fn quiver_trivial_and_z2() {
        let t = CharGroup::new(&GroupSpec::parse("n = 1\n").unwrap());
        let q = QuiverMatrices::new(&t);
        assert_eq!(q.b, IntMatrix::from_rows_i64(1, &[vec![0]]));
        assert_eq!(q.c, IntMatrix::from_rows_i64(1, &[vec![0], vec![1]]));

        let z2 = CharGroup::new(&GroupSpec::cyclic(2, &[1]).unwrap());
        let q = QuiverMatrices::new(&z2);
        assert_eq!(q.b, IntMatrix::from_rows_i64(2, &[vec![1, -1], vec![-1, 1]]));
    }

    #[test]
    fn quiver_z11_structure() {
        let g = CharGroup::new(&z11());
        let q = QuiverMatrices::new(&g);
        let b = q.b.rows_i64().unwrap();
        let mut cols = std::collections::HashSet::new();
        for col in 0..33 {
            let c: Vec<i64> = (0..11).map(|r| b[r][col]).collect();
            assert_eq!(c.iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(c.iter().filter(|&&x| x == -1).count(), 1);
            assert_eq!(c.iter().sum::<i64>(), 0);
            assert!(cols.insert(c));
        }
        let c = q.c.rows_i64().unwrap();
        for rho in 0..11 {
            for i in 0..3 {
                let col = q.column_index(rho, i);
                for k in 0..3 {
                    assert_eq!(c[11 + k][col], (k == i) as i64);
                }
            }
        }
    }

    #[test]
    fn theta_ghilb_chamber() {
        assert!(ThetaParam::ghilb_sample(11).validate_ghilb());
        let hard = ThetaParam::from_ints(&[1, 1, 1, 1, -7, -9, 1, 1, 1, 8, 1]).unwrap();
        assert!(!hard.validate_ghilb());
        assert!(!ThetaParam::from_ints(&[0; 5]).unwrap().validate_ghilb());
        assert!(ThetaParam::from_ints(&[1, 1]).is_err());
        let _ = BigInt::one();
    }

    proptest! {
        #[test]
        fn degree_is_homomorphism(u in proptest::collection::vec(-30i64..30, 3),
                                  v in proptest::collection::vec(-30i64..30, 3)) {
            let g = CharGroup::new(&z11());
            let s: Vec<i64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
            prop_assert_eq!(g.deg(&s), g.mul(g.deg(&u), g.deg(&v)));
            for i in 0..3 {
                let mut e = vec![0; 3];
                e[i] = 1;
                prop_assert_eq!(g.deg(&e), g.rho(i));
            }
        }

        #[test]
        fn lattice_index_equals_order(m in 1i64..16, a in proptest::collection::vec(0i64..16, 3)) {
            let g = CharGroup::new(&GroupSpec::cyclic(m, &a).unwrap());
            prop_assert_eq!(g.lattice_index(), BigInt::from(g.r()));
            for row in g.lattice_rows() {
                prop_assert_eq!(g.deg(&row), 0);
            }
        }
    }
}
