//! Exact polynomial invariants.

mod bracket;
mod homfly;
mod jones;
mod poly;
mod profile;

pub use bracket::{contraction, kauffman_bracket, kauffman_bracket_with, state_sum, DEFAULT_MAX_CROSSINGS};
pub use homfly::{homflypt, homflypt_with, unlink_factor, DEFAULT_NODE_BUDGET};
pub use jones::{jones, jones_with};
pub use poly::{LaurentPoly, LaurentPoly2};
pub use profile::{component_fingerprint, profile, profile_with, InvariantProfile, Limits};

/// Conway polynomial, HOMFLYPT at `a = 1`.
pub fn conway(d: &crate::diagram::LinkDiagram) -> crate::error::Result<LaurentPoly> {
    Ok(homflypt(d)?.conway())
}
