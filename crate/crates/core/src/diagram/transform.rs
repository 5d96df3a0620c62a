//! Mirror, reversal, relabeling and sublinks.

use super::{build, Crossing, LinkDiagram};
use crate::error::{Error, Result};
use crate::group::{Permutation, WhittenElement};

impl LinkDiagram {
    /// Over and under exchanged at every crossing.
    pub fn mirror(&self) -> LinkDiagram {
        let xs = self.crossings.iter().map(Crossing::switched).collect();
        LinkDiagram::from_parts(xs, self.comp_start.clone())
    }

    /// Reverses the orientation of every component in `comps` (0-based).
    pub fn reverse(&self, comps: &[usize]) -> LinkDiagram {
        let flip: Vec<bool> = (0..self.mu()).map(|c| comps.contains(&c)).collect();
        self.transform(&flip, &Permutation::identity(self.mu()))
            .expect("reversal keeps a valid diagram")
    }

    /// New component `i` is old component `p(i)`.
    pub fn permute(&self, p: &Permutation) -> Result<LinkDiagram> {
        self.transform(&vec![false; self.mu()], p)
    }

    /// `new_i = ±K_{p(i)}`, reversed where `flip_new[i]`.
    fn transform(&self, flip_new: &[bool], p: &Permutation) -> Result<LinkDiagram> {
        let mu = self.mu();
        if p.degree() != mu {
            return Err(Error::DimensionMismatch {
                expected: mu,
                found: p.degree(),
            });
        }
        let inv = p.inverse();
        let flip_old: Vec<bool> = (0..mu).map(|j| flip_new[inv.apply(j)]).collect();
        let raw: Vec<Crossing> = (0..self.crossing_count())
            .map(|x| {
                let c = self.crossings[x];
                let under = flip_old[self.under_component(x)];
                let over = flip_old[self.over_component(x)];
                let mut arcs = c.arcs;
                if under {
                    arcs = [arcs[2], arcs[3], arcs[0], arcs[1]];
                }
                let sign = if under != over { -c.sign } else { c.sign };
                Crossing::new(arcs, sign)
            })
            .collect();
        build(mu, &raw, |e| Some(inv.apply(self.edge_comp[e])))
    }

    /// The action of `g`: mirror if `ε0 = -1`, new component `i` is old
    /// component `p(i)`, reversed if `ε_i = -1`.
    pub fn apply_whitten(&self, g: &WhittenElement) -> Result<LinkDiagram> {
        if g.mu() != self.mu() {
            return Err(Error::DimensionMismatch {
                expected: self.mu(),
                found: g.mu(),
            });
        }
        let base = if g.is_mirror() { self.mirror() } else { self.clone() };
        let flip: Vec<bool> = g.eps().iter().map(|&e| e < 0).collect();
        base.transform(&flip, g.perm())
    }

    /// Keeps the listed components (0-based), relabeled in increasing order.
    pub fn sublink(&self, keep: &[usize]) -> Result<LinkDiagram> {
        let mu = self.mu();
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() || keep.iter().any(|&c| c >= mu) {
            return Err(Error::InvalidDiagram(format!("bad component set {keep:?}")));
        }
        let mut new_label = vec![None; mu];
        for (i, &c) in keep.iter().enumerate() {
            new_label[c] = Some(i);
        }
        let mut uf = UnionFind::new(self.edge_count());
        let mut raw = Vec::new();
        for x in 0..self.crossing_count() {
            let c = self.crossings[x];
            let u = new_label[self.under_component(x)].is_some();
            let o = new_label[self.over_component(x)].is_some();
            match (u, o) {
                (true, true) => raw.push(c),
                (true, false) => uf.union(c.arcs[0], c.arcs[2]),
                (false, true) => uf.union(c.arcs[1], c.arcs[3]),
                (false, false) => {}
            }
        }
        let raw: Vec<Crossing> = raw
            .into_iter()
            .map(|c| Crossing::new(c.arcs.map(|e| uf.find(e)), c.sign))
            .collect();
        build(keep.len(), &raw, |e| new_label[self.edge_comp[e]])
    }
}

/// Union-find whose roots are the smallest member.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::group::enumerate_gamma;
    use crate::linkmat::act_matrix;

    fn hopf() -> LinkDiagram {
        parse_pd("X[4,2,3,1] X[2,4,1,3]").unwrap()
    }

    fn el(s: &str) -> WhittenElement {
        WhittenElement::parse(s).unwrap()
    }

    #[test]
    fn identity_is_noop() {
        let d = hopf();
        assert_eq!(d.apply_whitten(&WhittenElement::identity(2)).unwrap(), d);
    }

    #[test]
    fn mirror_is_involution() {
        let d = hopf();
        assert_eq!(d.mirror().mirror(), d);
        assert_eq!(d.mirror().linking_matrix().get(0, 1), -1);
        d.mirror().validate().unwrap();
    }

    #[test]
    fn reversal_negates_row() {
        let d = hopf();
        let r = d.reverse(&[1]);
        r.validate().unwrap();
        assert_eq!(r.linking_matrix().get(0, 1), -1);
        assert_eq!(r.reverse(&[1]), d);
    }

    #[test]
    fn hopf_matches_matrix_action() {
        let d = hopf();
        for g in enumerate_gamma(2).unwrap() {
            let e = d.apply_whitten(&g).unwrap();
            e.validate().unwrap();
            assert_eq!(e.linking_matrix(), act_matrix(&g, &d.linking_matrix()).unwrap(), "{g}");
        }
    }

    #[test]
    fn whitten_on_split_union() {
        // Hopf link plus a free unknot
        let d = parse_pd("X[4,2,3,1] X[2,4,1,3] C[1] C[] C[3]").unwrap();
        assert!(d.is_free(1));
        let g = el("(1,1,1,1,(123))");
        let e = d.apply_whitten(&g).unwrap();
        assert!(e.is_free(0));
        assert_eq!(e.linking_matrix(), act_matrix(&g, &d.linking_matrix()).unwrap());
    }

    #[test]
    fn sublink_splices() {
        let d = hopf();
        let k = d.sublink(&[1]).unwrap();
        assert_eq!(k, LinkDiagram::unknot());
        assert_eq!(d.sublink(&[0, 1]).unwrap(), d);
        assert!(d.sublink(&[]).is_err());
        assert!(d.sublink(&[2]).is_err());
    }
}
