//! Pure-difference binomial ideals: term orders, Buchberger's algorithm,
//! lattice ideals, initial ideals and the Gröbner fan.

pub mod binomial;
pub mod fan;
pub mod ideal;
pub mod io;
pub mod lattice;
pub mod order;

pub use fan::{enumerate_fan, groebner_cone, FanCone, GroebnerCone};
pub use binomial::{buchberger, buchberger_with_budget, Binomial, BuchbergerStats, GbBudget, ReducedGB};
pub use ideal::{initial_ideal, leading_ideal, standard_monomials, MonomialIdeal, StandardTable};
pub use lattice::{lattice_ideal, lattice_ideal_gb};
pub use order::{canonical_cmp, Exponent, TermOrder};
pub use io::{format_binomial, format_ideal, format_monomial, parse_binomial_list, parse_monomial, parse_monomial_list};
