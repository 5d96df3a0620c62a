//! Everything the symmetry filter compares.

use serde::{Deserialize, Serialize};

use super::{homflypt_with, jones_with, LaurentPoly, LaurentPoly2, DEFAULT_MAX_CROSSINGS, DEFAULT_NODE_BUDGET};
use crate::diagram::LinkDiagram;
use crate::error::Result;
use crate::linkmat::LinkingMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_crossings: usize,
    pub node_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_crossings: DEFAULT_MAX_CROSSINGS,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub linking_matrix: LinkingMatrix,
    /// Sum of the self-crossing signs; only for reduced alternating diagrams.
    pub self_writhe: Option<i64>,
    pub jones: LaurentPoly,
    pub homflypt: LaurentPoly2,
    pub component_fingerprints: Vec<LaurentPoly2>,
}

/// HOMFLYPT of component `i` alone.
pub fn component_fingerprint(d: &LinkDiagram, i: usize) -> Result<LaurentPoly2> {
    homflypt_with(&d.sublink(&[i])?, DEFAULT_NODE_BUDGET)
}

pub fn profile(d: &LinkDiagram) -> Result<InvariantProfile> {
    profile_with(d, Limits::default())
}

pub fn profile_with(d: &LinkDiagram, limits: Limits) -> Result<InvariantProfile> {
    let self_writhe = (d.is_alternating() && d.is_reduced())
        .then(|| d.self_writhe());
    let component_fingerprints = (0..d.mu())
        .map(|i| homflypt_with(&d.sublink(&[i])?, limits.node_budget))
        .collect::<Result<_>>()?;
    Ok(InvariantProfile {
        linking_matrix: d.linking_matrix(),
        self_writhe,
        jones: jones_with(d, limits.max_crossings)?,
        homflypt: homflypt_with(d, limits.node_budget)?,
        component_fingerprints,
    })
}
