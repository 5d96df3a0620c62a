//! Named symmetry groups of two-component links.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::WhittenElement;
use super::subgroup::Subgroup;
use super::table::enumerate_gamma;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Named2 {
    Trivial,
    Sigma2_1,
    Sigma4_1,
    Sigma4_2,
    Sigma4_3,
    Sigma8_1,
    Sigma8_2,
    Sigma8_3,
    Gamma2,
    Other,
}

impl Named2 {
    pub const CATALOG: [Named2; 9] = [
        Named2::Trivial,
        Named2::Sigma2_1,
        Named2::Sigma4_1,
        Named2::Sigma4_2,
        Named2::Sigma4_3,
        Named2::Sigma8_1,
        Named2::Sigma8_2,
        Named2::Sigma8_3,
        Named2::Gamma2,
    ];

    /// Short ASCII name, e.g. `Sigma4,1`.
    pub fn as_str(self) -> &'static str {
        match self {
            Named2::Trivial => "trivial",
            Named2::Sigma2_1 => "Sigma2,1",
            Named2::Sigma4_1 => "Sigma4,1",
            Named2::Sigma4_2 => "Sigma4,2",
            Named2::Sigma4_3 => "Sigma4,3",
            Named2::Sigma8_1 => "Sigma8,1",
            Named2::Sigma8_2 => "Sigma8,2",
            Named2::Sigma8_3 => "Sigma8,3",
            Named2::Gamma2 => "Gamma2",
            Named2::Other => "other",
        }
    }

    pub fn parse(s: &str) -> Option<Named2> {
        let t = s
            .trim()
            .replace('Σ', "Sigma")
            .replace('Γ', "Gamma")
            .replace(' ', "");
        Named2::CATALOG
            .iter()
            .copied()
            .chain(std::iter::once(Named2::Other))
            .find(|n| n.as_str().eq_ignore_ascii_case(&t))
    }

    /// The concrete subgroup of `Γ_2`; `None` for `Other`.
    pub fn subgroup(self) -> Option<Subgroup> {
        let all = enumerate_gamma(2).expect("gamma 2");
        let pick = |f: &dyn Fn(&WhittenElement) -> bool| {
            let els: Vec<WhittenElement> = all.iter().filter(|g| f(g)).cloned().collect();
            Subgroup::from_elements(2, els).expect("catalog subgroup")
        };
        let prod = |g: &WhittenElement| g.eps0() * g.eps()[0] * g.eps()[1];
        let id_perm = |g: &WhittenElement| g.perm().is_identity();
        Some(match self {
            Named2::Trivial => Subgroup::trivial(2),
            Named2::Sigma2_1 => pick(&|g| g.is_identity() || g.to_string() == "(1,-1,-1,e)"),
            Named2::Sigma4_1 => pick(&|g| g.eps0() == 1 && g.eps()[0] == g.eps()[1]),
            Named2::Sigma4_2 => pick(&|g| g.eps0() == 1 && id_perm(g)),
            Named2::Sigma4_3 => pick(&|g| prod(g) == 1 && id_perm(g)),
            Named2::Sigma8_1 => pick(&|g| g.eps0() == 1),
            Named2::Sigma8_2 => pick(&|g| prod(g) == 1),
            Named2::Sigma8_3 => pick(&|g| id_perm(g)),
            Named2::Gamma2 => Subgroup::full(2).expect("gamma 2"),
            Named2::Other => return None,
        })
    }
}

impl fmt::Display for Named2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`match_named_subgroup_2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMatch {
    pub name: Named2,
    /// True when `h` only matches a conjugate of the catalog group.
    pub conjugate: bool,
}

pub fn match_named_subgroup_2(h: &Subgroup) -> NamedMatch {
    if h.mu() != 2 {
        return NamedMatch {
            name: Named2::Other,
            conjugate: false,
        };
    }
    let catalog: Vec<(Named2, Subgroup)> = Named2::CATALOG
        .iter()
        .map(|&n| (n, n.subgroup().expect("catalog")))
        .collect();
    for (n, g) in &catalog {
        if g.same_elements(h) {
            return NamedMatch {
                name: *n,
                conjugate: false,
            };
        }
    }
    let all = enumerate_gamma(2).expect("gamma 2");
    for (n, g) in &catalog {
        if g.order() != h.order() {
            continue;
        }
        if all
            .iter()
            .any(|x| g.conjugate(x).is_ok_and(|c| c.same_elements(h)))
        {
            return NamedMatch {
                name: *n,
                conjugate: true,
            };
        }
    }
    NamedMatch {
        name: Named2::Other,
        conjugate: false,
    }
}
