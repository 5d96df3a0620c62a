//! The Whitten group `Γ_μ` and its subgroups.

mod element;
mod ident;
mod lattice;
mod named;
mod perm;
mod subgroup;
mod table;

pub use element::WhittenElement;
pub use ident::{catalog_groups, fingerprint, identify_group, Fingerprint, GroupIdLabel};
pub use lattice::{
    all_subgroups, all_subgroups_with, conjugacy_classes_of_subgroups, conjugacy_classes_with,
    ConjugacyClass, Lattice, LatticeOptions,
};
pub use named::{match_named_subgroup_2, Named2, NamedMatch};
pub use perm::Permutation;
pub use subgroup::{ElemSet, Subgroup, SubgroupJson};
pub use table::{enumerate_gamma, gamma_order, GammaTable, MAX_MU};

use crate::error::Result;

pub fn compose(a: &WhittenElement, b: &WhittenElement) -> Result<WhittenElement> {
    a.compose(b)
}

pub fn inverse(a: &WhittenElement) -> WhittenElement {
    a.inverse()
}

pub fn generate(mu: usize, gens: &[WhittenElement]) -> Result<Subgroup> {
    Subgroup::generate(mu, gens)
}

pub fn conjugate_subgroup(h: &Subgroup, g: &WhittenElement) -> Result<Subgroup> {
    h.conjugate(g)
}

pub fn coset_index(h: &Subgroup) -> usize {
    h.coset_index()
}
