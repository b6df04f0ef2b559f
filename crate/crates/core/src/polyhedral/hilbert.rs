//! Hilbert bases of pointed rational cones relative to a lattice.
//!
//! The cone is moved into coordinates of `L ∩ span(gens)`, triangulated by
//! placing its extreme rays, and the lattice points of every half-open
//! fundamental parallelepiped are collected. Those points together with
//! the rays contain the Hilbert basis, which is then cut out by removing
//! every candidate `x` for which `x - y` lies in the cone for a smaller
//! candidate `y`.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::cone::{extreme_rays, is_pointed};
use crate::error::{Error, Result};
use crate::exact::{
    integer_kernel, primitive, rank_i64, row_lattice_basis, solve_row_combination, to_rat, IntMatrix,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    pub vectors: Vec<Vec<i64>>,
    pub lattice: IntMatrix,
    pub cone_gens: Vec<Vec<i64>>,
}

/// Largest parallelepiped volume explored before giving up.
pub const MAX_SIMPLEX_VOLUME: i64 = 20_000_000;

/// Basis of `L ∩ span(gens)` as rows.
pub fn saturate_in_span(gens: &[Vec<i64>], lattice: &IntMatrix) -> Result<IntMatrix> {
    let d = lattice.cols();
    let lb = row_lattice_basis(lattice);
    let gm = IntMatrix::from_rows_i64(d, gens);
    let normals = integer_kernel(&gm);
    if normals.rows() == 0 {
        return Ok(lb);
    }
    let p = lb.mul(&normals.transpose());
    let coeffs = integer_kernel(&p.transpose());
    Ok(row_lattice_basis(&coeffs.mul(&lb)))
}

/// Integer coordinates of `v` with respect to the rows of `basis`.
pub fn coordinates(basis: &IntMatrix, v: &[i64]) -> Result<Vec<i64>> {
    let rows: Vec<Vec<BigRational>> = (0..basis.rows())
        .map(|i| basis.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let x = solve_row_combination(&rows, &to_rat(v))
        .ok_or_else(|| Error::Precondition(format!("vector {v:?} is not in the span of the lattice")))?;
    x.iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(Error::Precondition(format!("vector {v:?} is not in the lattice")));
            }
            c.to_integer().to_i64().ok_or(Error::Overflow)
        })
        .collect()
}

fn from_coordinates(basis: &IntMatrix, x: &[i64]) -> Result<Vec<i64>> {
    let d = basis.cols();
    let mut out = vec![BigInt::zero(); d];
    for (i, &c) in x.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o += &basis[(i, j)] * c;
        }
    }
    out.iter().map(|v| v.to_i64().ok_or(Error::Overflow)).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Primitive normal of the hyperplane through `rays` (s-1 independent
/// vectors in Z^s), oriented positive on `inside`.
fn hyperplane_normal(rays: &[&Vec<i64>], s: usize, inside: &[i64]) -> Result<Vec<i64>> {
    let n = if rays.is_empty() {
        vec![1i64]
    } else {
        let m = IntMatrix::from_rows_i64(s, &rays.iter().map(|r| (*r).clone()).collect::<Vec<_>>());
        let k = integer_kernel(&m);
        if k.rows() != 1 {
            return Err(Error::Data("degenerate facet in triangulation".into()));
        }
        k.rows_i64()?.remove(0)
    };
    let n = primitive(&n);
    match dot(&n, inside).signum() {
        1 => Ok(n),
        -1 => Ok(n.iter().map(|x| -x).collect()),
        _ => Err(Error::Data("reference point lies on a facet hyperplane".into())),
    }
}

#[derive(Clone, Debug)]
struct Facet {
    rays: Vec<usize>,
    normal: Vec<i64>,
}

/// Placing triangulation of a full-dimensional pointed cone in Z^s.
/// Returns maximal simplices (ray indices) and primitive facet normals of
/// the cone.
pub(crate) fn triangulate(rays: &[Vec<i64>], s: usize) -> Result<(Vec<Vec<usize>>, Vec<Vec<i64>>)> {
    // Initial simplex: greedily independent rays.
    let mut chosen: Vec<usize> = Vec::new();
    for (i, _) in rays.iter().enumerate() {
        let mut trial: Vec<Vec<i64>> = chosen.iter().map(|&k| rays[k].clone()).collect();
        trial.push(rays[i].clone());
        if rank_i64(&trial, s) == trial.len() {
            chosen.push(i);
            if chosen.len() == s {
                break;
            }
        }
    }
    if chosen.len() != s {
        return Err(Error::Data("cone is not full-dimensional in its span".into()));
    }
    let mut simplices = vec![chosen.clone()];
    let mut facets: Vec<Facet> = Vec::new();
    for omit in 0..s {
        let fr: Vec<usize> = chosen.iter().enumerate().filter(|&(k, _)| k != omit).map(|(_, &r)| r).collect();
        let refs: Vec<&Vec<i64>> = fr.iter().map(|&r| &rays[r]).collect();
        let normal = hyperplane_normal(&refs, s, &rays[chosen[omit]])?;
        facets.push(Facet { rays: fr, normal });
    }
    let in_simplex: HashSet<usize> = chosen.iter().copied().collect();
    for (ri, r) in rays.iter().enumerate() {
        if in_simplex.contains(&ri) {
            continue;
        }
        let visible: Vec<usize> = (0..facets.len()).filter(|&f| dot(&facets[f].normal, r) < 0).collect();
        if visible.is_empty() {
            continue;
        }
        let mut ridge_count: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for &f in &visible {
            let fr = &facets[f].rays;
            for skip in 0..fr.len() {
                let ridge: Vec<usize> = fr.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &x)| x).collect();
                let e = ridge_count.entry(ridge).or_insert((0, 0));
                e.0 += 1;
                e.1 = fr[skip];
            }
            let mut simplex = fr.clone();
            simplex.push(ri);
            simplices.push(simplex);
        }
        let mut new_facets = Vec::new();
        let mut horizon: Vec<(Vec<usize>, usize)> = ridge_count
            .into_iter()
            .filter(|(_, (c, _))| *c == 1)
            .map(|(ridge, (_, apex))| (ridge, apex))
            .collect();
        horizon.sort();
        for (ridge, apex) in horizon {
            let mut fr = ridge.clone();
            fr.push(ri);
            fr.sort();
            let refs: Vec<&Vec<i64>> = fr.iter().map(|&k| &rays[k]).collect();
            let normal = hyperplane_normal(&refs, s, &rays[apex])?;
            new_facets.push(Facet { rays: fr, normal });
        }
        let vis: HashSet<usize> = visible.into_iter().collect();
        let mut kept: Vec<Facet> = facets
            .into_iter()
            .enumerate()
            .filter(|(k, _)| !vis.contains(k))
            .map(|(_, f)| f)
            .collect();
        kept.extend(new_facets);
        facets = kept;
    }
    let mut normals: Vec<Vec<i64>> = Vec::new();
    for f in facets {
        if !normals.contains(&f.normal) {
            normals.push(f.normal);
        }
    }
    normals.sort();
    Ok((simplices, normals))
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// rows of `v` (a basis of Q^s).
fn parallelepiped_points(v: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let s = v.len();
    let vm = IntMatrix::from_rows_i64(s, v);
    let det = vm.determinant().abs().to_i64().ok_or(Error::Overflow)?;
    if det == 1 {
        return Ok(Vec::new());
    }
    if det > MAX_SIMPLEX_VOLUME {
        return Err(Error::BudgetExceeded(format!("simplex volume {det} exceeds {MAX_SIMPLEX_VOLUME}")));
    }
    // W = det · V^{-1}, so p·W = det · (coefficients of p in the rows of V).
    let rows: Vec<Vec<BigRational>> = v.iter().map(|r| to_rat(r)).collect();
    let mut w = vec![vec![0i64; s]; s];
    for j in 0..s {
        let mut e = vec![0i64; s];
        e[j] = 1;
        let x = solve_row_combination(&rows, &to_rat(&e)).expect("rows form a basis");
        for (i, c) in x.iter().enumerate() {
            let scaled = c * BigRational::from_integer(det.into());
            w[j][i] = scaled.to_integer().to_i64().ok_or(Error::Overflow)?;
        }
    }
    let reduce = |p: &[i64]| -> Vec<i64> {
        let mut out = p.to_vec();
        for i in 0..s {
            let q: i128 = (0..s).map(|j| p[j] as i128 * w[j][i] as i128).sum();
            let f = q.div_euclid(det as i128) as i64;
            if f != 0 {
                for (o, &x) in out.iter_mut().zip(&v[i]) {
                    *o -= f * x;
                }
            }
        }
        out
    };
    let zero = vec![0i64; s];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(p) = queue.pop_front() {
        for j in 0..s {
            let mut q = p.clone();
            q[j] += 1;
            let q = reduce(&q);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    debug_assert_eq!(seen.len() as i64, det);
    Ok(seen.into_iter().filter(|p| p.iter().any(|&x| x != 0)).collect())
}

/// Hilbert basis of `lattice ∩ cone(gens)`.
pub fn hilbert_basis(gens: &[Vec<i64>], lattice: &IntMatrix) -> Result<HilbertBasis> {
    let nz: Vec<Vec<i64>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
    let done = |vectors| {
        Ok(HilbertBasis {
            vectors,
            lattice: lattice.clone(),
            cone_gens: gens.to_vec(),
        })
    };
    if nz.is_empty() {
        return done(Vec::new());
    }
    if !is_pointed(&nz) {
        return Err(Error::NotPointed);
    }
    let basis = saturate_in_span(&nz, lattice)?;
    let s = basis.rows();
    let coords: Vec<Vec<i64>> = nz.iter().map(|g| coordinates(&basis, g)).collect::<Result<_>>()?;
    let rays: Vec<Vec<i64>> = extreme_rays(&coords)?.iter().map(|r| primitive(r)).collect();
    let (simplices, facets) = triangulate(&rays, s)?;
    log::debug!("hilbert basis: dim {s}, {} rays, {} simplices, {} facets", rays.len(), simplices.len(), facets.len());

    let mut candidates: HashSet<Vec<i64>> = rays.iter().cloned().collect();
    for simplex in &simplices {
        let v: Vec<Vec<i64>> = simplex.iter().map(|&k| rays[k].clone()).collect();
        candidates.extend(parallelepiped_points(&v)?);
    }
    let value = |x: &[i64]| -> Vec<i64> { facets.iter().map(|f| dot(f, x) as i64).collect() };
    let mut cands: Vec<(i64, Vec<i64>, Vec<i64>)> = candidates
        .into_iter()
        .map(|x| {
            let val = value(&x);
            (val.iter().sum(), val, x)
        })
        .collect();
    cands.sort();
    let mut irreducible: Vec<(i64, Vec<i64>, Vec<i64>)> = Vec::new();
    for c in cands {
        let reducible = irreducible
            .iter()
            .any(|(g, val, _)| *g < c.0 && val.iter().zip(&c.1).all(|(a, b)| a <= b));
        if !reducible {
            irreducible.push(c);
        }
    }
    let mut vectors: Vec<Vec<i64>> = irreducible
        .iter()
        .map(|(_, _, x)| from_coordinates(&basis, x))
        .collect::<Result<_>>()?;
    vectors.sort();
    done(vectors)
}

/// Facet inequalities `a·z ≥ 0` of `cone(gens)` inside its span, expressed
/// on the ambient space together with equations `e·z = 0` cutting out the
/// span. Used for pruning and for brute-force checks.
pub fn cone_description(gens: &[Vec<i64>]) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let nz: Vec<Vec<i64>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
    let Some(d) = nz.first().map(|g| g.len()) else {
        return Ok((Vec::new(), Vec::new()));
    };
    if !is_pointed(&nz) {
        return Err(Error::NotPointed);
    }
    let equations = integer_kernel(&IntMatrix::from_rows_i64(d, &nz)).rows_i64()?;
    let basis = saturate_in_span(&nz, &IntMatrix::identity(d))?;
    let s = basis.rows();
    let coords: Vec<Vec<i64>> = nz.iter().map(|g| coordinates(&basis, g)).collect::<Result<_>>()?;
    let rays: Vec<Vec<i64>> = extreme_rays(&coords)?.iter().map(|r| primitive(r)).collect();
    let (_, facets) = triangulate(&rays, s)?;
    // A functional a on coordinates lifts to the ambient space as any b with
    // B·b = a; solve over Q and clear denominators.
    let bt: Vec<Vec<BigRational>> = (0..d)
        .map(|j| (0..s).map(|i| BigRational::from_integer(basis[(i, j)].clone())).collect())
        .collect();
    let mut out = Vec::new();
    for a in facets {
        let b = solve_row_combination(&bt, &to_rat(&a))
            .ok_or_else(|| Error::Data("facet functional does not lift".into()))?;
        let ints = super::lp::primitive_integer(&b);
        out.push(ints.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect::<Result<Vec<i64>>>()?);
    }
    Ok((out, equations))
}
