//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers ([`BigInt`]) and
//! rationals ([`BigRational`]). Lattices are stored by a basis in the rows
//! of an [`IntMatrix`]; the canonical basis of a lattice is its row Hermite
//! normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fixed-length vector of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVec(entries)
    }

    pub fn zeros(len: usize) -> Self {
        IntVec(vec![BigInt::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Converts to machine integers, failing if any entry does not fit.
    pub fn to_i64(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|x| x.to_i64().ok_or(Error::Overflow))
            .collect()
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec(v.into_iter().map(BigInt::from).collect())
    }
}

impl From<&[i64]> for IntVec {
    fn from(v: &[i64]) -> Self {
        IntVec(v.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Fixed-length vector of rationals, each kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatVec(Vec<BigRational>);

impl RatVec {
    pub fn new(entries: Vec<BigRational>) -> Self {
        // BigRational normalizes on construction, so entries are already reduced.
        RatVec(entries)
    }

    pub fn zeros(len: usize) -> Self {
        RatVec(vec![BigRational::zero(); len])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RatVec(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigRational> {
        self.0
    }

    pub fn dot_int(&self, v: &[i64]) -> BigRational {
        self.0
            .iter()
            .zip(v)
            .fold(BigRational::zero(), |acc, (a, &b)| acc + a * BigInt::from(b))
    }

    pub fn dot(&self, other: &RatVec) -> BigRational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Smallest positive integer multiple with integral entries.
    pub fn clear_denominators(&self) -> Vec<BigInt> {
        let l = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        self.0
            .iter()
            .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
            .collect()
    }

    /// Parses a comma-separated list of integers or `p/q` fractions.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut out = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("empty entry in '{text}'"),
                });
            }
            out.push(parse_rational(tok)?);
        }
        Ok(RatVec(out))
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub fn parse_rational(tok: &str) -> Result<BigRational> {
    let bad = || Error::Parse {
        line: 1,
        column: 1,
        message: format!("not a rational number: '{tok}'"),
    };
    match tok.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = tok.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have `cols` entries.
    pub fn from_rows_i64(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        IntMatrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows)
            .map(|i| IntVec::new(self.row(i).to_vec()))
            .collect()
    }

    pub fn rows_i64(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_i64().ok_or(Error::Overflow))
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    /// Keeps only the given rows, in order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix::from_rows(self.cols, idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let (h, _) = hermite_normal_form(self);
        (0..h.rows)
            .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
            .count()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `H = U·A`. Nonzero rows of `H`
/// come first, pivots are positive and strictly increase in column, and
/// entries above each pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        // Euclid on the column below pivot_row until a single nonzero remains.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..a.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if h[(b, col)].abs() <= h[(i, col)].abs() => {}
                    _ => best = Some(i),
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..a.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(pivot_row, col)]);
                h.sub_row_multiple(i, pivot_row, &q);
                u.sub_row_multiple(i, pivot_row, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for i in 0..pivot_row {
            let q = h[(i, col)].div_floor(&h[(pivot_row, col)]);
            h.sub_row_multiple(i, pivot_row, &q);
            u.sub_row_multiple(i, pivot_row, &q);
        }
        pivots.push(col);
        pivot_row += 1;
    }
    (h, u)
}

/// Nonzero rows of the HNF: the canonical basis of the row lattice.
pub fn row_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_normal_form(a);
    let keep: Vec<usize> = (0..h.rows)
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    h.select_rows(&keep)
}

/// Basis (rows, canonical HNF) of `{x ∈ Z^cols : A·x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let (h, u) = hermite_normal_form(&a.transpose());
    let zero_rows: Vec<usize> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    if zero_rows.is_empty() {
        return IntMatrix::zeros(0, a.cols);
    }
    row_lattice_basis(&u.select_rows(&zero_rows))
}

/// Basis (rows, canonical HNF) of `{u ∈ Z^cols : A·u ≡ 0 (mod moduli)}`,
/// the congruence taken row by row.
pub fn kernel_mod(a: &IntMatrix, moduli: &[BigInt]) -> IntMatrix {
    assert_eq!(a.rows, moduli.len(), "one modulus per row");
    let n = a.cols;
    if a.rows == 0 {
        return IntMatrix::identity(n);
    }
    // Kernel of [A | -diag(m)], projected onto the first n coordinates.
    let k = a.rows;
    let mut stacked = IntMatrix::zeros(k, n + k);
    for i in 0..k {
        for j in 0..n {
            stacked[(i, j)] = a[(i, j)].clone();
        }
        stacked[(i, n + i)] = -moduli[i].clone();
    }
    let ker = integer_kernel(&stacked);
    let proj: Vec<Vec<BigInt>> = (0..ker.rows)
        .map(|i| ker.row(i)[..n].to_vec())
        .collect();
    row_lattice_basis(&IntMatrix::from_rows(n, proj))
}

/// Index of a full-rank lattice in `Z^cols`.
pub fn lattice_index(basis: &IntMatrix) -> Result<BigInt> {
    let h = row_lattice_basis(basis);
    if h.rows != h.cols {
        return Err(Error::NotFullRank {
            rank: h.rows,
            dim: h.cols,
        });
    }
    Ok((0..h.rows).map(|i| h[(i, i)].clone()).product())
}

/// Invariant factors of the cokernel `Z^cols / rowspace(A)`, excluding ones,
/// followed by the free rank as a count of zeros.
pub fn smith_invariants(a: &IntMatrix) -> Vec<BigInt> {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // Pick the smallest nonzero entry in the remaining block as pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| m[(i, j)].abs() < m[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap_rows(t, pi);
        for i in 0..rows {
            let idx_a = i * cols + t;
            let idx_b = i * cols + pj;
            m.data.swap(idx_a, idx_b);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[(i, t)].div_floor(&m[(t, t)]);
            m.sub_row_multiple(i, t, &q);
            if !m[(i, t)].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = m[(t, j)].div_floor(&m[(t, t)]);
            if !q.is_zero() {
                for i in 0..rows {
                    let v = &m[(i, t)] * &q;
                    m[(i, j)] -= v;
                }
            }
            if !m[(t, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility condition: pivot must divide the remaining block.
        let mut fix = None;
        'outer: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[(i, j)] % &m[(t, t)]).is_zero() {
                    fix = Some(i);
                    break 'outer;
                }
            }
        }
        if let Some(i) = fix {
            for j in 0..cols {
                let v = m[(i, j)].clone();
                m[(t, j)] += v;
            }
            continue;
        }
        t += 1;
    }
    let mut out: Vec<BigInt> = (0..t)
        .map(|i| m[(i, i)].abs())
        .filter(|d| !d.is_one())
        .collect();
    out.extend(std::iter::repeat_n(BigInt::zero(), cols - t));
    out
}

/// Solves `x·V = p` over the rationals for square invertible `V` (rows are vectors).
pub fn solve_row_combination(v: &[Vec<BigRational>], p: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = v.len();
    if n == 0 {
        return if p.iter().all(Zero::is_zero) { Some(vec![]) } else { None };
    }
    let d = p.len();
    // Augmented system Vᵀ x = p, size d × (n+1).
    let mut a: Vec<Vec<BigRational>> = (0..d)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..n).map(|i| v[i][j].clone()).collect();
            row.push(p[j].clone());
            row
        })
        .collect();
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..d).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, pr);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..d {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..=n {
                    let t = &a[r][k] * &f;
                    a[i][k] -= t;
                }
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    if (r..d).any(|i| !a[i][n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &c) in piv_cols.iter().enumerate() {
        x[c] = a[row][n].clone();
    }
    Some(x)
}

/// Rank over the rationals of a list of integer row vectors.
pub fn rank_i64(rows: &[Vec<i64>], dim: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    IntMatrix::from_rows_i64(dim, rows).rank()
}

/// Divides out the gcd of the entries.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_rat(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

pub fn big_to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows_i64(cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(3);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_two_by_two() {
        let a = m(2, &[&[2, 4], &[1, 3]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.determinant().abs(), BigInt::one());
        assert_eq!(h.determinant().abs(), BigInt::from(2));
        assert_eq!(h, m(2, &[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn hnf_zero_matrix() {
        let z = IntMatrix::zeros(2, 3);
        let (h, u) = hermite_normal_form(&z);
        assert_eq!(h, z);
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn kernel_mod_z11() {
        let a = m(3, &[&[1, 2, 8]]);
        let k = kernel_mod(&a, &[BigInt::from(11)]);
        assert_eq!(k.rows(), 3);
        for row in k.rows_i64().unwrap() {
            assert_eq!((row[0] + 2 * row[1] + 8 * row[2]).rem_euclid(11), 0);
        }
        assert_eq!(lattice_index(&k).unwrap(), BigInt::from(11));
    }

    #[test]
    fn kernel_mod_z14_contains_known_vectors() {
        let a = m(3, &[&[1, 9, 11]]);
        let k = kernel_mod(&a, &[BigInt::from(14)]);
        for v in [[14i64, 0, 0], [9, -1, 0], [11, 0, -1]] {
            let mut rows = k.rows_i64().unwrap();
            rows.push(v.to_vec());
            // Adding a lattice member does not change the lattice.
            let h = row_lattice_basis(&IntMatrix::from_rows_i64(3, &rows));
            assert_eq!(h, k);
        }
    }

    #[test]
    fn kernel_mod_trivial_group() {
        let a = IntMatrix::zeros(0, 4);
        assert_eq!(kernel_mod(&a, &[]), IntMatrix::identity(4));
    }

    #[test]
    fn index_of_identity_and_rank_deficient() {
        assert_eq!(lattice_index(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        assert!(matches!(
            lattice_index(&m(2, &[&[1, 1]])),
            Err(Error::NotFullRank { .. })
        ));
    }

    #[test]
    fn smith_of_product_group() {
        let a = m(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(smith_invariants(&a), vec![BigInt::from(6)]);
        let b = m(2, &[&[2, 0], &[0, 4]]);
        assert_eq!(smith_invariants(&b), vec![BigInt::from(2), BigInt::from(4)]);
        let c = m(2, &[&[2, 0]]);
        assert_eq!(smith_invariants(&c), vec![BigInt::from(2), BigInt::zero()]);
    }

    #[test]
    fn kernel_of_row() {
        let a = m(3, &[&[1, 1, 1]]);
        let k = integer_kernel(&a);
        assert_eq!(k.rows(), 2);
        for r in k.rows_i64().unwrap() {
            assert_eq!(r.iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn rational_solve() {
        let v = vec![to_rat(&[1, 1]), to_rat(&[1, -1])];
        let x = solve_row_combination(&v, &to_rat(&[3, 1])).unwrap();
        assert_eq!(x, to_rat(&[2, 1]));
    }

    proptest! {
        #[test]
        fn hnf_reproduces_product(entries in proptest::collection::vec(-20i64..20, 12)) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let a = IntMatrix::from_rows_i64(4, &rows);
            let (h, u) = hermite_normal_form(&a);
            prop_assert_eq!(u.mul(&a), h.clone());
            prop_assert_eq!(u.determinant().abs(), BigInt::one());
            // Pivots positive, reduced above.
            let mut last = None;
            for i in 0..h.rows() {
                if let Some(p) = h.row(i).iter().position(|x| !x.is_zero()) {
                    prop_assert!(h[(i, p)].is_positive());
                    if let Some(l) = last { prop_assert!(p > l); }
                    for k in 0..i {
                        prop_assert!(!h[(k, p)].is_negative() && h[(k, p)] < h[(i, p)]);
                    }
                    last = Some(p);
                }
            }
        }

        #[test]
        fn kernel_mod_congruences_hold(a in proptest::collection::vec(0i64..12, 3), m in 1i64..13) {
            let mat = IntMatrix::from_rows_i64(3, std::slice::from_ref(&a));
            let k = kernel_mod(&mat, &[BigInt::from(m)]);
            for row in k.rows_i64().unwrap() {
                let s: i64 = row.iter().zip(&a).map(|(x, y)| x * y).sum();
                prop_assert_eq!(s.rem_euclid(m), 0);
            }
            let idx = lattice_index(&k).unwrap();
            prop_assert!((BigInt::from(m) % &idx).is_zero());
        }
    }
}
