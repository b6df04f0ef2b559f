//! Exact linear programming, rational cones, Hilbert bases and semigroup
//! membership.

pub mod cone;
pub mod hilbert;
pub mod lp;
pub mod semigroup;

pub use cone::{extreme_rays, facets_of_inequalities, in_cone, is_pointed, strict_separation, verify_separation, Separation};
pub use hilbert::{cone_description, hilbert_basis, HilbertBasis};
pub use lp::{Constraint, LinearProgram, LpOutcome, Relation};
pub use semigroup::{semigroup_contains, Membership};
