//! Identification of small abstract group types by invariant fingerprints.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::element::WhittenElement;
use super::subgroup::{closure, Subgroup};
use super::table::GammaTable;

/// Abstract isomorphism type of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupIdLabel {
    Trivial,
    Z2,
    D2,
    D4,
    D8,
    Z2xZ2xZ2,
    D6,
    Z2xD4,
    /// `Z2 × ((Z2)^2 ⋊ S3)`, order 48.
    Z2xS3wr,
    Z2xZ2xD4,
    Z2xD8,
    /// Isomorphic to all of `Γ_3` or `Γ_4`.
    Full,
    Other(usize),
}

impl fmt::Display for GroupIdLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupIdLabel::Trivial => write!(f, "trivial"),
            GroupIdLabel::Z2 => write!(f, "Z2"),
            GroupIdLabel::D2 => write!(f, "D2"),
            GroupIdLabel::D4 => write!(f, "D4"),
            GroupIdLabel::D8 => write!(f, "D8"),
            GroupIdLabel::Z2xZ2xZ2 => write!(f, "Z2xZ2xZ2"),
            GroupIdLabel::D6 => write!(f, "D6"),
            GroupIdLabel::Z2xD4 => write!(f, "Z2xD4"),
            GroupIdLabel::Z2xS3wr => write!(f, "Z2xS3wr"),
            GroupIdLabel::Z2xZ2xD4 => write!(f, "Z2xZ2xD4"),
            GroupIdLabel::Z2xD8 => write!(f, "Z2xD8"),
            GroupIdLabel::Full => write!(f, "full"),
            GroupIdLabel::Other(n) => write!(f, "other({n})"),
        }
    }
}

/// Isomorphism invariants of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// Sorted element orders.
    pub element_orders: Vec<usize>,
    pub center_order: usize,
    pub derived_order: usize,
    /// Sorted `(element order, centralizer order)` pairs.
    pub order_centralizer: Vec<(usize, usize)>,
}

pub fn fingerprint(h: &Subgroup) -> Fingerprint {
    let table = GammaTable::get(h.mu()).expect("subgroup has a supported mu");
    let elems: Vec<usize> = h.elements().iter().map(|e| e.index()).collect();
    let commute = |a: usize, b: usize| table.mul(a, b) == table.mul(b, a);

    let mut element_orders = Vec::with_capacity(elems.len());
    let mut order_centralizer = Vec::with_capacity(elems.len());
    let mut center_order = 0;
    for &a in &elems {
        let c = elems.iter().filter(|&&b| commute(a, b)).count();
        if c == elems.len() {
            center_order += 1;
        }
        let o = table.element_order(a);
        element_orders.push(o);
        order_centralizer.push((o, c));
    }
    element_orders.sort_unstable();
    order_centralizer.sort_unstable();

    let mut commutators = Vec::new();
    for &a in &elems {
        for &b in &elems {
            let c = table.mul(table.mul(a, b), table.mul(table.inv(a), table.inv(b)));
            commutators.push(c);
        }
    }
    commutators.sort_unstable();
    commutators.dedup();
    let derived_order = closure(&table, &commutators).len();

    Fingerprint {
        order: elems.len(),
        abelian: center_order == elems.len(),
        element_orders,
        center_order,
        derived_order,
        order_centralizer,
    }
}

fn gen(mu: usize, gens: &[&str]) -> Subgroup {
    let g: Vec<WhittenElement> = gens
        .iter()
        .map(|s| WhittenElement::parse(s).expect("catalog element"))
        .collect();
    Subgroup::generate(mu, &g).expect("catalog group")
}

/// Concrete realizations of every catalog label inside some `Γ_μ`.
pub fn catalog_groups() -> Vec<(GroupIdLabel, Subgroup)> {
    vec![
        (GroupIdLabel::Trivial, Subgroup::trivial(2)),
        (GroupIdLabel::Z2, gen(2, &["(1,-1,-1,e)"])),
        (GroupIdLabel::D2, gen(2, &["(1,-1,-1,e)", "(1,1,1,(12))"])),
        (GroupIdLabel::D4, gen(2, &["(1,-1,1,e)", "(1,1,1,(12))"])),
        (
            GroupIdLabel::D8,
            gen(4, &["(1,1,1,1,1,(13)(24))", "(1,1,1,-1,1,(1243))"]),
        ),
        (
            GroupIdLabel::Z2xZ2xZ2,
            gen(2, &["(-1,1,1,e)", "(1,-1,1,e)", "(1,1,-1,e)"]),
        ),
        (
            GroupIdLabel::D6,
            gen(3, &["(1,-1,-1,-1,e)", "(1,1,1,1,(12))", "(1,1,1,1,(123))"]),
        ),
        (GroupIdLabel::Z2xD4, Subgroup::full(2).expect("gamma 2")),
        (
            GroupIdLabel::Z2xS3wr,
            gen(3, &["(-1,1,1,1,e)", "(1,1,1,1,(123))", "(1,-1,1,1,(12))"]),
        ),
        (
            GroupIdLabel::Z2xZ2xD4,
            gen(
                4,
                &[
                    "(1,-1,-1,-1,-1,e)",
                    "(-1,1,1,1,1,(23))",
                    "(-1,1,1,1,1,(1243))",
                    "(-1,-1,1,1,-1,e)",
                ],
            ),
        ),
        (
            GroupIdLabel::Z2xD8,
            gen(
                4,
                &["(-1,1,1,1,1,e)", "(1,1,1,1,1,(13)(24))", "(1,1,1,-1,1,(1243))"],
            ),
        ),
        (GroupIdLabel::Full, Subgroup::full(3).expect("gamma 3")),
        (GroupIdLabel::Full, Subgroup::full(4).expect("gamma 4")),
    ]
}

fn catalog() -> &'static [(GroupIdLabel, Fingerprint)] {
    static CATALOG: OnceLock<Vec<(GroupIdLabel, Fingerprint)>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        catalog_groups()
            .into_iter()
            .map(|(l, g)| (l, fingerprint(&g)))
            .collect()
    })
}

/// Abstract type of `h`; anything outside the catalog is `Other(order)`.
pub fn identify_group(h: &Subgroup) -> GroupIdLabel {
    if h.order() == 1 {
        return GroupIdLabel::Trivial;
    }
    // the catalog tops out at |Γ_4|
    if h.order() > 768 {
        return GroupIdLabel::Other(h.order());
    }
    let fp = fingerprint(h);
    catalog()
        .iter()
        .find(|(_, f)| *f == fp)
        .map(|(l, _)| l.clone())
        .unwrap_or(GroupIdLabel::Other(h.order()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_realizations_have_expected_orders() {
        let orders: Vec<usize> = catalog_groups().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 8, 16, 8, 12, 16, 48, 32, 32, 96, 768]);
    }

    #[test]
    fn catalog_fingerprints_are_distinct() {
        let c = catalog();
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                assert_ne!(c[i].1, c[j].1, "{} vs {}", c[i].0, c[j].0);
            }
        }
    }

    #[test]
    fn each_catalog_group_identifies_as_itself() {
        for (label, g) in catalog_groups() {
            assert_eq!(identify_group(&g), label);
        }
    }

    #[test]
    fn cyclic_four_is_other() {
        let g = gen(2, &["(1,-1,1,(12))"]);
        assert_eq!(g.order(), 4);
        assert_eq!(identify_group(&g), GroupIdLabel::Other(4));
    }
}
