use std::cmp::Ordering;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::RatVec;

/// Exponent vector of a monomial.
pub type Exponent = Vec<i64>;

/// A matrix term order: monomials are compared by a list of integer weight
/// rows in turn, remaining ties broken lexicographically with `x1 > x2 > …`.
///
/// The usual case is a single nonnegative weight `w` refined by lex; extra
/// rows are used internally for elimination and for stepping across walls
/// of the Gröbner fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    weight: RatVec,
    rows: Vec<Vec<i64>>,
}

fn scale_row(w: &RatVec) -> Result<Vec<i64>> {
    w.clear_denominators()
        .iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect()
}

impl TermOrder {
    /// `(w, lex)`; the weight must be nonnegative.
    pub fn new(weight: RatVec) -> Result<Self> {
        if weight.entries().iter().any(|x| x.is_negative()) {
            return Err(Error::Precondition(format!(
                "term order weight {weight} has a negative entry"
            )));
        }
        let row = scale_row(&weight)?;
        Ok(TermOrder {
            weight,
            rows: vec![row],
        })
    }

    pub fn from_ints(weight: &[i64]) -> Result<Self> {
        Self::new(RatVec::from_ints(weight))
    }

    pub fn lex(n: usize) -> Self {
        TermOrder {
            weight: RatVec::zeros(n),
            rows: Vec::new(),
        }
    }

    /// Degree-then-lex order.
    pub fn deglex(n: usize) -> Self {
        Self::from_ints(&vec![1; n]).expect("all-ones weight")
    }

    /// Matrix order from several integer rows. Each variable must be
    /// positive under the first row that does not vanish on it, which makes
    /// the order a well-order.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in &rows {
            if r.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: r.len(),
                });
            }
        }
        for i in 0..n {
            if let Some(first) = rows.iter().map(|r| r[i]).find(|&x| x != 0) {
                if first < 0 {
                    return Err(Error::Precondition(format!(
                        "matrix order is not a well-order on variable {}",
                        i + 1
                    )));
                }
            }
        }
        let weight = RatVec::from_ints(rows.first().map(|r| r.as_slice()).unwrap_or(&[]));
        Ok(TermOrder { weight, rows })
    }

    /// Weight `w` refined by this order.
    pub fn refine(&self, w: &RatVec) -> Result<Self> {
        let mut rows = vec![scale_row(w)?];
        rows.extend(self.rows.iter().cloned());
        let mut t = Self::from_rows(rows)?;
        t.weight = w.clone();
        Ok(t)
    }

    pub fn weight(&self) -> &RatVec {
        &self.weight
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn row_dot(row: &[i64], m: &[i64]) -> i128 {
        let mut s: i128 = 0;
        for (&a, &b) in row.iter().zip(m) {
            s = s
                .checked_add(a as i128 * b as i128)
                .expect("weight evaluation overflowed i128");
        }
        s
    }

    pub fn cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        for row in &self.rows {
            match Self::row_dot(row, a).cmp(&Self::row_dot(row, b)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        a.cmp(b)
    }

    /// Sort key whose lexicographic order is this term order.
    pub fn key(&self, m: &[i64]) -> Vec<i128> {
        let mut k: Vec<i128> = self.rows.iter().map(|r| Self::row_dot(r, m)).collect();
        k.extend(m.iter().map(|&x| x as i128));
        k
    }

    /// Sign of `w·(a - b)` for the defining weight alone.
    pub fn weight_cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        match self.rows.first() {
            Some(r) => Self::row_dot(r, a).cmp(&Self::row_dot(r, b)),
            None => Ordering::Equal,
        }
    }
}

/// `w·m` as an exact rational, for reports.
pub fn weight_value(w: &RatVec, m: &[i64]) -> num_rational::BigRational {
    w.dot_int(m)
}

pub(crate) fn divides(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[i64], b: &[i64]) -> Exponent {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub(crate) fn coprime(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// `m - a + b` with overflow checking.
pub(crate) fn shift(m: &[i64], a: &[i64], b: &[i64]) -> Result<Exponent> {
    m.iter()
        .zip(a)
        .zip(b)
        .map(|((&x, &y), &z)| {
            x.checked_sub(y)
                .and_then(|v| v.checked_add(z))
                .ok_or(Error::Overflow)
        })
        .collect()
}

pub(crate) fn total_degree(m: &[i64]) -> i64 {
    m.iter().sum()
}

/// Canonical monomial ordering used for output: total degree, then lex.
pub fn canonical_cmp(a: &[i64], b: &[i64]) -> Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b))
}
