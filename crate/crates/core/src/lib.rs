//! Whitten symmetry groups of oriented, component-labeled links.
//!
//! The crate covers arithmetic in `Γ_μ = Z2 × (Z2^μ ⋊ S_μ)`, its action on
//! linking matrices and PD diagrams, exact Jones and HOMFLYPT polynomials,
//! and the invariant filter that bounds a link's symmetry group from above.

pub mod error;
pub mod group;
pub mod linkmat;
pub mod diagram;
pub mod invariants;
pub mod sym_filter;
pub mod census;

pub use error::{Error, Result};
pub use group::{Permutation, Subgroup, WhittenElement};
pub use linkmat::LinkingMatrix;
