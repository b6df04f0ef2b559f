use super::binomial::{buchberger_with_budget, Binomial, GbBudget, ReducedGB};
use super::order::TermOrder;
use crate::error::{Error, Result};
use crate::exact::{lattice_index, IntMatrix};

/// Generators of the lattice ideal `I_L = ⟨x^{u+} - x^{u-} : u ∈ L⟩` for a
/// lattice of finite index in `Z^n`, returned as the reduced basis under
/// degree-lex order, canonically sorted.
///
/// The saturation `(⟨x^{u+} - x^{u-} : u basis⟩ : (x1⋯xn)^∞)` is computed by
/// elimination: adjoin `t` with `t·x1⋯xn - 1` and keep the part of a
/// `t`-eliminating basis free of `t`.
pub fn lattice_ideal(basis: &IntMatrix) -> Result<Vec<Binomial>> {
    lattice_index(basis)?;
    Ok(lattice_ideal_gb(basis, GbBudget::default())?.elements().to_vec())
}

/// Lattice ideal of a lattice of any rank; the result is a reduced
/// degree-lex basis. `budget` caps the size of intermediate bases.
pub fn lattice_ideal_gb(basis: &IntMatrix, budget: GbBudget) -> Result<ReducedGB> {
    let n = basis.cols();
    let rows = basis.rows_i64()?;
    let mut gens: Vec<Binomial> = rows
        .iter()
        .filter(|u| u.iter().any(|&x| x != 0))
        .map(|u| {
            let mut v = u.clone();
            v.push(0);
            Binomial::from_vector(&v)
        })
        .collect();
    if gens.is_empty() {
        return Ok(ReducedGB::from_parts(Vec::new(), TermOrder::deglex(n), n));
    }
    gens.push(Binomial::new(vec![1; n + 1], vec![0; n + 1]));
    let mut t_row = vec![0i64; n + 1];
    t_row[n] = 1;
    let mut deg_row = vec![1i64; n + 1];
    deg_row[n] = 0;
    let elim = TermOrder::from_rows(vec![t_row, deg_row])?;
    let (gb, stats) = buchberger_with_budget(&gens, &elim, budget)?;
    log::debug!("saturation in {n} variables: {stats:?}");
    let kept: Vec<Binomial> = gb
        .elements()
        .iter()
        .filter(|g| g.lead()[n] == 0)
        .map(|g| {
            debug_assert_eq!(g.trail()[n], 0);
            Binomial::new(g.lead()[..n].to_vec(), g.trail()[..n].to_vec())
        })
        .collect();
    if kept.is_empty() {
        return Err(Error::Data("elimination produced an empty basis".into()));
    }
    // The eliminated part is already a reduced degree-lex basis.
    Ok(ReducedGB::from_parts(kept, TermOrder::deglex(n), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::binomial::buchberger;
    use crate::groebner::ideal::{leading_ideal, standard_monomials};
    use crate::group::{CharGroup, GroupSpec};

    #[test]
    fn trivial_group() {
        let chars = CharGroup::new(&GroupSpec::parse("n = 2\n").unwrap());
        let i = lattice_ideal(chars.lattice()).unwrap();
        assert_eq!(
            i,
            vec![
                Binomial::new(vec![0, 1], vec![0, 0]),
                Binomial::new(vec![1, 0], vec![0, 0]),
            ]
        );
    }

    #[test]
    fn z14_matches_known_generators() {
        let chars = CharGroup::new(&GroupSpec::cyclic(14, &[1, 9, 11]).unwrap());
        let ours = lattice_ideal(chars.lattice()).unwrap();
        let known = vec![
            Binomial::new(vec![14, 0, 0], vec![0, 0, 0]),
            Binomial::new(vec![0, 1, 0], vec![9, 0, 0]),
            Binomial::new(vec![0, 0, 1], vec![11, 0, 0]),
        ];
        let order = TermOrder::from_ints(&[1, 1, 1]).unwrap();
        let a = buchberger(&ours, &order).unwrap();
        let b = buchberger(&known, &order).unwrap();
        assert_eq!(a, b);
        let j = leading_ideal(&a).unwrap();
        assert_eq!(standard_monomials(&j, &chars).unwrap().len(), 14);
    }

    #[test]
    fn rejects_infinite_index() {
        let m = IntMatrix::from_rows_i64(2, &[vec![1, -1]]);
        assert!(matches!(lattice_ideal(&m), Err(Error::NotFullRank { .. })));
    }

    #[test]
    fn rank_deficient_toric_ideal() {
        let m = IntMatrix::from_rows_i64(3, &[vec![1, -1, 0], vec![0, 1, -1]]);
        let gb = lattice_ideal_gb(&m, GbBudget::default()).unwrap();
        assert_eq!(gb.len(), 2);
        // 2Z(1,-1) is not saturated, so x - y stays out of the ideal.
        let m = IntMatrix::from_rows_i64(2, &[vec![2, -2]]);
        let gb = lattice_ideal_gb(&m, GbBudget::default()).unwrap();
        assert_eq!(gb.elements(), &[Binomial::new(vec![2, 0], vec![0, 2])]);
    }
}
