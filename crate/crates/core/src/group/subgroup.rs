use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::WhittenElement;
use super::table::{check_mu, gamma_order, GammaTable};
use crate::error::{Error, Result};

/// Fixed-width bitset over the canonical indices of `Γ_μ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(order: usize) -> Self {
        Self {
            words: vec![0; order.div_ceil(64)],
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] & (1 << (i & 63)) != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i >> 6];
        let bit = 1 << (i & 63);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let t = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(w * 64 + t)
                }
            })
        })
    }
}

/// Closure of `gens` (canonical indices) inside `Γ_μ`.
pub(crate) fn closure(table: &GammaTable, gens: &[usize]) -> ElemSet {
    let mut set = ElemSet::empty(table.order);
    set.insert(0);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = table.mul(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// A subgroup of `Γ_μ`, stored as its canonical sorted element list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    mu: usize,
    elements: Vec<WhittenElement>,
    generators: Option<Vec<WhittenElement>>,
}

impl Subgroup {
    /// Subgroup generated by `gens`; the empty list gives the trivial group.
    pub fn generate(mu: usize, gens: &[WhittenElement]) -> Result<Subgroup> {
        check_mu(mu)?;
        for g in gens {
            if g.mu() != mu {
                return Err(Error::DimensionMismatch {
                    expected: mu,
                    found: g.mu(),
                });
            }
        }
        let table = GammaTable::get(mu)?;
        let idx: Vec<usize> = gens.iter().map(|g| g.index()).collect();
        let set = closure(&table, &idx);
        let mut sg = Subgroup::from_set(mu, &set);
        sg.generators = Some(gens.to_vec());
        Ok(sg)
    }

    /// Validates that `elements` is closed under the group law.
    pub fn from_elements(mu: usize, elements: Vec<WhittenElement>) -> Result<Subgroup> {
        check_mu(mu)?;
        let table = GammaTable::get(mu)?;
        let mut set = ElemSet::empty(table.order);
        for e in &elements {
            if e.mu() != mu {
                return Err(Error::DimensionMismatch {
                    expected: mu,
                    found: e.mu(),
                });
            }
            set.insert(e.index());
        }
        if !is_closed(&table, &set) {
            return Err(Error::NotASubgroup);
        }
        Ok(Subgroup::from_set(mu, &set))
    }

    pub(crate) fn from_set(mu: usize, set: &ElemSet) -> Subgroup {
        Subgroup {
            mu,
            elements: set.iter().map(|i| WhittenElement::from_index(mu, i)).collect(),
            generators: None,
        }
    }

    pub fn full(mu: usize) -> Result<Subgroup> {
        check_mu(mu)?;
        let order = gamma_order(mu);
        let mut set = ElemSet::empty(order);
        for i in 0..order {
            set.insert(i);
        }
        Ok(Subgroup::from_set(mu, &set))
    }

    pub fn trivial(mu: usize) -> Subgroup {
        Subgroup {
            mu,
            elements: vec![WhittenElement::identity(mu)],
            generators: None,
        }
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WhittenElement] {
        &self.elements
    }

    pub fn generators(&self) -> Option<&[WhittenElement]> {
        self.generators.as_deref()
    }

    pub fn with_generators(mut self, gens: Vec<WhittenElement>) -> Self {
        self.generators = Some(gens);
        self
    }

    pub fn contains(&self, g: &WhittenElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mu == other.mu && self.elements.iter().all(|g| other.contains(g))
    }

    /// Same element set, ignoring generator provenance.
    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.mu == other.mu && self.elements == other.elements
    }

    pub(crate) fn to_set(&self) -> ElemSet {
        let mut set = ElemSet::empty(gamma_order(self.mu));
        for e in &self.elements {
            set.insert(e.index());
        }
        set
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.mu != other.mu {
            return Err(Error::DimensionMismatch {
                expected: self.mu,
                found: other.mu,
            });
        }
        Ok(Subgroup::from_set(self.mu, &self.to_set().intersect(&other.to_set())))
    }

    /// `g H g^{-1}`.
    pub fn conjugate(&self, g: &WhittenElement) -> Result<Subgroup> {
        if g.mu() != self.mu {
            return Err(Error::DimensionMismatch {
                expected: self.mu,
                found: g.mu(),
            });
        }
        let mut elements: Vec<WhittenElement> =
            self.elements.iter().map(|h| h.conjugate_by(g)).collect();
        elements.sort();
        let generators = self
            .generators
            .as_ref()
            .map(|gs| gs.iter().map(|h| h.conjugate_by(g)).collect());
        Ok(Subgroup {
            mu: self.mu,
            elements,
            generators,
        })
    }

    /// Number of cosets in `Γ_μ`.
    pub fn coset_index(&self) -> usize {
        gamma_order(self.mu) / self.order()
    }

    /// Closure and inverse audit.
    pub fn audit(&self) -> bool {
        let Ok(table) = GammaTable::get(self.mu) else {
            return false;
        };
        let set = self.to_set();
        set.contains(0)
            && is_closed(&table, &set)
            && set.iter().all(|x| set.contains(table.inv(x)))
    }

    /// A small generating set, greedily chosen in canonical order.
    pub fn small_generating_set(&self) -> Vec<WhittenElement> {
        let Ok(table) = GammaTable::get(self.mu) else {
            return vec![];
        };
        let target = self.to_set();
        let mut gens: Vec<usize> = Vec::new();
        let mut current = closure(&table, &gens);
        // prefer high-order elements so fewer generators are needed
        let mut cands: Vec<usize> = target.iter().collect();
        cands.sort_by_key(|&x| std::cmp::Reverse(table.element_order(x)));
        for x in cands {
            if current == target {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = closure(&table, &gens);
            }
        }
        gens.into_iter().map(|i| table.element(i)).collect()
    }
}

fn is_closed(table: &GammaTable, set: &ElemSet) -> bool {
    if !set.contains(0) {
        return false;
    }
    let elems: Vec<usize> = set.iter().collect();
    elems
        .iter()
        .all(|&a| elems.iter().all(|&b| set.contains(table.mul(a, b))))
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(mu={}, order={}, {:?})", self.mu, self.order(), self.elements)
    }
}

/// JSON form of a subgroup.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SubgroupJson {
    pub mu: usize,
    pub elements: Vec<WhittenElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<WhittenElement>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl Subgroup {
    pub fn to_json(&self, name: Option<String>) -> SubgroupJson {
        SubgroupJson {
            mu: self.mu,
            elements: self.elements.clone(),
            generators: self.generators.clone(),
            name,
        }
    }

    pub fn from_json(j: SubgroupJson) -> Result<Subgroup> {
        let mut sg = Subgroup::from_elements(j.mu, j.elements)?;
        sg.generators = j.generators;
        Ok(sg)
    }
}

impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(None).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subgroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Subgroup::from_json(SubgroupJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> WhittenElement {
        WhittenElement::parse(s).unwrap()
    }

    #[test]
    fn trivial_generation() {
        let h = Subgroup::generate(2, &[]).unwrap();
        assert_eq!(h.order(), 1);
        assert!(h.audit());
    }

    #[test]
    fn invertible_with_pure_exchange() {
        let h = Subgroup::generate(2, &[el("(1,-1,-1,e)"), el("(1,1,1,(12))")]).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.coset_index(), 4);
    }

    #[test]
    fn order_twelve_from_two_generators() {
        let h = Subgroup::generate(3, &[el("(1,1,1,1,(12))"), el("(1,-1,1,1,(123))")]).unwrap();
        assert_eq!(h.order(), 12);
        assert!(h.audit());
    }

    #[test]
    fn conjugation_by_identity_is_noop() {
        let h = Subgroup::generate(3, &[el("(1,1,-1,1,(123))")]).unwrap();
        let c = h.conjugate(&WhittenElement::identity(3)).unwrap();
        assert!(c.same_elements(&h));
    }

    #[test]
    fn from_elements_rejects_non_subgroups() {
        let r = Subgroup::from_elements(2, vec![WhittenElement::identity(2), el("(1,1,1,(12))"), el("(1,-1,1,e)")]);
        assert!(matches!(r, Err(Error::NotASubgroup)));
    }

    #[test]
    fn coset_indices() {
        assert_eq!(Subgroup::full(2).unwrap().coset_index(), 1);
        let pi = Subgroup::generate(2, &[el("(1,-1,-1,e)")]).unwrap();
        assert_eq!(pi.coset_index(), 8);
        let trefoil = Subgroup::generate(1, &[el("(1,-1,e)")]).unwrap();
        assert_eq!(trefoil.coset_index(), 2);
    }

    #[test]
    fn json_round_trip() {
        let h = Subgroup::generate(2, &[el("(1,-1,-1,e)")]).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        let back: Subgroup = serde_json::from_str(&s).unwrap();
        assert!(back.same_elements(&h));
    }

    #[test]
    fn small_generating_set_regenerates() {
        let h = Subgroup::generate(3, &[el("(-1,1,1,1,e)"), el("(1,1,1,1,(123))"), el("(1,-1,1,1,(12))")]).unwrap();
        assert_eq!(h.order(), 48);
        let gens = h.small_generating_set();
        assert!(Subgroup::generate(3, &gens).unwrap().same_elements(&h));
    }
}
