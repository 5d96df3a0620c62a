//! Oriented, component-labeled link diagrams in PD form.
//!
//! Edges are numbered `0..n` so that each component owns a contiguous range
//! and edge `e` is followed by `e + 1` (wrapping inside the range). A
//! component without crossings owns a single edge that appears nowhere.

mod cable;
mod pd;
mod reidemeister;
mod transform;

use std::ops::Range;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linkmat::LinkingMatrix;

pub use pd::{parse_pd, parse_pd_labeled, serialize_pd, PdInput};
pub use reidemeister::Face;

/// Four edge ids counterclockwise from the incoming under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn new(arcs: [usize; 4], sign: i8) -> Self {
        Crossing { arcs, sign }
    }

    /// Position of the incoming over-strand.
    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn is_incoming(&self, p: usize) -> bool {
        p == 0 || p == self.over_in()
    }

    /// Same crossing with over and under exchanged, orientation kept.
    pub fn switched(&self) -> Crossing {
        let [i, j, k, l] = self.arcs;
        if self.sign > 0 {
            Crossing::new([l, i, j, k], -1)
        } else {
            Crossing::new([j, k, l, i], 1)
        }
    }
}

/// A diagram in canonical edge numbering. Immutable; transforms return new values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    comp_start: Vec<usize>,
    edge_comp: Vec<usize>,
    head: Vec<Option<(usize, usize)>>,
    tail: Vec<Option<(usize, usize)>>,
}

impl LinkDiagram {
    fn from_parts(crossings: Vec<Crossing>, comp_start: Vec<usize>) -> Self {
        let n = *comp_start.last().unwrap_or(&0);
        let mut edge_comp = vec![0; n];
        for c in 0..comp_start.len() - 1 {
            for slot in &mut edge_comp[comp_start[c]..comp_start[c + 1]] {
                *slot = c;
            }
        }
        let mut head = vec![None; n];
        let mut tail = vec![None; n];
        for (x, cr) in crossings.iter().enumerate() {
            for p in 0..4 {
                let e = cr.arcs[p];
                if cr.is_incoming(p) {
                    head[e] = Some((x, p));
                } else {
                    tail[e] = Some((x, p));
                }
            }
        }
        LinkDiagram {
            crossings,
            comp_start,
            edge_comp,
            head,
            tail,
        }
    }

    /// The `mu`-component unlink with no crossings.
    pub fn unlink(mu: usize) -> Self {
        Self::from_parts(Vec::new(), (0..=mu).collect())
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn mu(&self) -> usize {
        self.comp_start.len() - 1
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_comp.len()
    }

    /// 0-based component owning edge `e`.
    pub fn component_of(&self, e: usize) -> usize {
        self.edge_comp[e]
    }

    pub fn component_edges(&self, c: usize) -> Range<usize> {
        self.comp_start[c]..self.comp_start[c + 1]
    }

    /// Whether component `c` has no crossings at all.
    pub fn is_free(&self, c: usize) -> bool {
        let r = self.component_edges(c);
        r.len() == 1 && self.head[r.start].is_none()
    }

    pub fn next_edge(&self, e: usize) -> usize {
        let r = self.component_edges(self.edge_comp[e]);
        if e + 1 == r.end {
            r.start
        } else {
            e + 1
        }
    }

    /// `(crossing, position)` where edge `e` ends.
    pub fn head(&self, e: usize) -> Option<(usize, usize)> {
        self.head[e]
    }

    /// `(crossing, position)` where edge `e` starts.
    pub fn tail(&self, e: usize) -> Option<(usize, usize)> {
        self.tail[e]
    }

    pub fn under_component(&self, x: usize) -> usize {
        self.edge_comp[self.crossings[x].arcs[0]]
    }

    pub fn over_component(&self, x: usize) -> usize {
        self.edge_comp[self.crossings[x].arcs[1]]
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| i64::from(c.sign)).sum()
    }

    /// Sum of signs over crossings of a component with itself.
    pub fn self_writhe(&self) -> i64 {
        (0..self.crossing_count())
            .filter(|&x| self.under_component(x) == self.over_component(x))
            .map(|x| i64::from(self.crossings[x].sign))
            .sum()
    }

    /// Self-writhe restricted to component `c`.
    pub fn component_writhe(&self, c: usize) -> i64 {
        (0..self.crossing_count())
            .filter(|&x| self.under_component(x) == c && self.over_component(x) == c)
            .map(|x| i64::from(self.crossings[x].sign))
            .sum()
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let mu = self.mu();
        let mut twice = vec![vec![0i64; mu]; mu];
        for x in 0..self.crossing_count() {
            let (u, o) = (self.under_component(x), self.over_component(x));
            if u != o {
                let s = i64::from(self.crossings[x].sign);
                twice[u][o] += s;
                twice[o][u] += s;
            }
        }
        let rows = twice
            .into_iter()
            .map(|r| r.into_iter().map(|v| v / 2).collect())
            .collect();
        LinkingMatrix::new(rows).expect("symmetric by construction")
    }

    pub fn overall_linking_number(&self) -> i64 {
        self.linking_matrix().total_linking()
    }

    /// Whether over and under passes alternate along every component.
    pub fn is_alternating(&self) -> bool {
        if self.crossings.is_empty() {
            return true;
        }
        (0..self.edge_count()).all(|e| match (self.tail[e], self.head[e]) {
            (Some((_, p)), Some((_, q))) => (p % 2 == 0) != (q % 2 == 0),
            _ => true,
        })
    }

    /// Checks arc pairing, per-component parity of inter-component
    /// crossings and planarity via the Euler characteristic.
    pub fn validate(&self) -> Result<()> {
        let mut seen = vec![0u8; self.edge_count()];
        for c in &self.crossings {
            for &e in &c.arcs {
                seen[e] += 1;
            }
        }
        for (e, &k) in seen.iter().enumerate() {
            let free = self.is_free(self.edge_comp[e]);
            if (free && k != 0) || (!free && k != 2) {
                return Err(Error::InvalidDiagram(format!("arc {} appears {k} times", e + 1)));
            }
        }
        let mu = self.mu();
        let mut twice = vec![vec![0i64; mu]; mu];
        for x in 0..self.crossing_count() {
            let (u, o) = (self.under_component(x), self.over_component(x));
            if u != o {
                twice[u.min(o)][u.max(o)] += i64::from(self.crossings[x].sign);
            }
        }
        if twice.iter().flatten().any(|v| v % 2 != 0) {
            return Err(Error::InvalidDiagram("odd signed crossing count between two components".into()));
        }
        let faces = self.faces().len();
        let expected = self.crossing_count() + 1 + self.connected_pieces();
        if !self.crossings.is_empty() && faces != expected {
            return Err(Error::InvalidDiagram(format!(
                "not planar: {faces} faces, expected {expected}"
            )));
        }
        Ok(())
    }

    /// Number of connected pieces of the projection that contain crossings.
    fn connected_pieces(&self) -> usize {
        let n = self.crossing_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in 0..self.edge_count() {
            if let (Some((a, _)), Some((b, _))) = (self.head[e], self.tail[e]) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Compact key for memo tables.
    pub(crate) fn key(&self) -> Vec<u32> {
        let mut k = Vec::with_capacity(self.crossings.len() * 5 + self.comp_start.len() + 1);
        k.push(self.comp_start.len() as u32);
        k.extend(self.comp_start.iter().map(|&v| v as u32));
        for c in &self.crossings {
            k.extend(c.arcs.iter().map(|&v| v as u32));
            k.push(c.sign as u32);
        }
        k
    }
}

/// Builds a canonical diagram from crossings over arbitrary labels.
/// `comp_of` must return the 0-based component of every label used;
/// components that receive no label become crossingless.
pub(crate) fn build(
    mu: usize,
    raw: &[Crossing],
    comp_of: impl Fn(usize) -> Option<usize>,
) -> Result<LinkDiagram> {
    build_map(mu, raw, comp_of).map(|(d, _)| d)
}

/// [`build`] that also returns the label to edge id map.
pub(crate) fn build_map(
    mu: usize,
    raw: &[Crossing],
    comp_of: impl Fn(usize) -> Option<usize>,
) -> Result<(LinkDiagram, FxHashMap<usize, usize>)> {
    let mut head: FxHashMap<usize, (usize, usize)> = FxHashMap::default();
    let mut tail: FxHashMap<usize, (usize, usize)> = FxHashMap::default();
    for (x, c) in raw.iter().enumerate() {
        if c.sign != 1 && c.sign != -1 {
            return Err(Error::InvalidDiagram(format!("crossing {} has sign {}", x + 1, c.sign)));
        }
        for p in 0..4 {
            let (map, what) = if c.is_incoming(p) {
                (&mut head, "incoming")
            } else {
                (&mut tail, "outgoing")
            };
            if map.insert(c.arcs[p], (x, p)).is_some() {
                return Err(Error::InvalidDiagram(format!(
                    "arc {} is {what} at two crossings",
                    c.arcs[p]
                )));
            }
        }
    }
    if head.len() != tail.len() || head.keys().any(|k| !tail.contains_key(k)) {
        let bad = head
            .keys()
            .find(|k| !tail.contains_key(k))
            .or_else(|| tail.keys().find(|k| !head.contains_key(k)))
            .copied()
            .unwrap_or(0);
        return Err(Error::InvalidDiagram(format!("arc {bad} is not a closed strand")));
    }
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); mu];
    for &l in head.keys() {
        let c = comp_of(l)
            .filter(|&c| c < mu)
            .ok_or_else(|| Error::InvalidDiagram(format!("arc {l} has no valid component")))?;
        by_comp[c].push(l);
    }
    let mut new_id: FxHashMap<usize, usize> = FxHashMap::default();
    let mut comp_start = vec![0];
    let mut next = 0;
    for (c, labels) in by_comp.iter().enumerate() {
        if labels.is_empty() {
            next += 1;
        } else {
            let start = *labels.iter().min().expect("nonempty");
            let mut cur = start;
            let mut count = 0;
            loop {
                new_id.insert(cur, next);
                next += 1;
                count += 1;
                let (x, p) = head[&cur];
                cur = raw[x].arcs[(p + 2) % 4];
                if cur == start {
                    break;
                }
                if comp_of(cur) != Some(c) {
                    return Err(Error::InvalidDiagram(format!(
                        "arc {cur} continues component {} but is labeled otherwise",
                        c + 1
                    )));
                }
                if count > labels.len() {
                    return Err(Error::InvalidDiagram(format!("component {} does not close", c + 1)));
                }
            }
            if count != labels.len() {
                return Err(Error::InvalidDiagram(format!(
                    "component {} splits into several closed curves",
                    c + 1
                )));
            }
        }
        comp_start.push(next);
    }
    let mut xs: Vec<Crossing> = raw
        .iter()
        .map(|c| Crossing::new(c.arcs.map(|l| new_id[&l]), c.sign))
        .collect();
    xs.sort_by_key(|c| c.arcs[0].min(c.arcs[c.over_in()]));
    Ok((LinkDiagram::from_parts(xs, comp_start), new_id))
}

/// Rebuilds `d` from edited crossings that keep its edge labels.
pub(crate) fn rebuild_same_components(d: &LinkDiagram, raw: &[Crossing]) -> Result<LinkDiagram> {
    build(d.mu(), raw, |e| Some(d.edge_comp[e]))
}

/// Like [`build`], but components are the closed curves ordered by their
/// smallest label, followed by `free` crossingless components.
pub(crate) fn build_from_curves(raw: &[Crossing], free: usize) -> Result<LinkDiagram> {
    let mut head: FxHashMap<usize, (usize, usize)> = FxHashMap::default();
    for (x, c) in raw.iter().enumerate() {
        for p in 0..4 {
            if c.is_incoming(p) {
                head.insert(c.arcs[p], (x, p));
            }
        }
    }
    let mut labels: Vec<usize> = head.keys().copied().collect();
    labels.sort_unstable();
    let mut comp: FxHashMap<usize, usize> = FxHashMap::default();
    let mut count = 0;
    for &l in &labels {
        if comp.contains_key(&l) {
            continue;
        }
        let mut cur = l;
        loop {
            comp.insert(cur, count);
            let Some(&(x, p)) = head.get(&cur) else { break };
            cur = raw[x].arcs[(p + 2) % 4];
            if cur == l || comp.contains_key(&cur) {
                break;
            }
        }
        count += 1;
    }
    build(count + free, raw, |l| comp.get(&l).copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hopf() -> LinkDiagram {
        parse_pd("X[4,2,3,1] X[2,4,1,3]").unwrap()
    }

    #[test]
    fn unknot_basics() {
        let d = LinkDiagram::unknot();
        assert_eq!(d.mu(), 1);
        assert!(d.is_free(0));
        assert_eq!(d.writhe(), 0);
        assert!(d.linking_matrix().is_zero());
        d.validate().unwrap();
    }

    #[test]
    fn unlink_is_zero() {
        let d = LinkDiagram::unlink(3);
        assert_eq!(d.linking_matrix(), LinkingMatrix::zero(3));
        assert_eq!(d.self_writhe(), 0);
    }

    #[test]
    fn positive_hopf() {
        let d = hopf();
        assert_eq!(d.mu(), 2);
        assert_eq!(d.crossing_count(), 2);
        assert!(d.crossings().iter().all(|c| c.sign == 1));
        assert_eq!(d.linking_matrix().get(0, 1), 1);
        assert_eq!(d.overall_linking_number(), 1);
        d.validate().unwrap();
    }

    #[test]
    fn traversal_follows_numbering() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(d.mu(), 1);
        for e in 0..d.edge_count() {
            let (x, p) = d.head(e).unwrap();
            assert_eq!(d.crossings()[x].arcs[(p + 2) % 4], d.next_edge(e));
        }
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(d.self_writhe(), d.writhe());
    }

    #[test]
    fn switching_keeps_orientation() {
        for c in hopf().crossings() {
            let s = c.switched();
            assert_eq!(s.sign, -c.sign);
            assert_eq!(s.switched(), *c);
            let ins: Vec<usize> = (0..4).filter(|&p| c.is_incoming(p)).map(|p| c.arcs[p]).collect();
            let mut ins2: Vec<usize> = (0..4).filter(|&p| s.is_incoming(p)).map(|p| s.arcs[p]).collect();
            ins2.sort();
            let mut ins = ins;
            ins.sort();
            assert_eq!(ins, ins2);
        }
    }

    #[test]
    fn split_component_is_rejected() {
        let raw = [Crossing::new([0, 0, 1, 1], 1)];
        assert!(build(1, &raw, |_| Some(0)).is_ok());
        let raw = [Crossing::new([4, 1, 3, 2], 1), Crossing::new([2, 3, 1, 4], 1)];
        assert!(build(1, &raw, |_| Some(0)).is_err());
    }
}
