//! Faces of the projection, R1/R2 reduction and insertion.

use super::transform::UnionFind;
use super::{build, build_map, Crossing, LinkDiagram};
use crate::error::Result;

/// A face as the cyclic list of `(crossing, position)` darts on its boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(usize, usize)>,
}

impl LinkDiagram {
    fn other_end(&self, x: usize, p: usize) -> (usize, usize) {
        let e = self.crossings[x].arcs[p];
        let h = self.head[e].expect("edge in a crossing");
        if h == (x, p) {
            self.tail[e].expect("edge in a crossing")
        } else {
            h
        }
    }

    /// Faces of the projection graph (crossingless components excluded).
    pub fn faces(&self) -> Vec<Face> {
        let n = self.crossing_count();
        let mut seen = vec![[false; 4]; n];
        let mut out = Vec::new();
        for x in 0..n {
            for p in 0..4 {
                if seen[x][p] {
                    continue;
                }
                let mut darts = Vec::new();
                let (mut cx, mut cp) = (x, p);
                while !seen[cx][cp] {
                    seen[cx][cp] = true;
                    darts.push((cx, cp));
                    let (y, r) = self.other_end(cx, cp);
                    cx = y;
                    cp = (r + 3) % 4;
                }
                out.push(Face { darts });
            }
        }
        out
    }

    /// No nugatory crossing: no face meets a crossing at two corners.
    pub fn is_reduced(&self) -> bool {
        self.faces().iter().all(|f| {
            let mut xs: Vec<usize> = f.darts.iter().map(|&(x, _)| x).collect();
            xs.sort_unstable();
            xs.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Drops crossings `remove`, merging each pair of edges in `joins`.
    fn splice(&self, remove: &[usize], joins: &[(usize, usize)]) -> Result<LinkDiagram> {
        let mut uf = UnionFind::new(self.edge_count());
        for &(a, b) in joins {
            uf.union(a, b);
        }
        let raw: Vec<Crossing> = (0..self.crossing_count())
            .filter(|x| !remove.contains(x))
            .map(|x| {
                let c = self.crossings[x];
                Crossing::new(c.arcs.map(|e| uf.find(e)), c.sign)
            })
            .collect();
        build(self.mu(), &raw, |e| Some(self.edge_comp[e]))
    }

    fn reduce_r1(&self) -> Option<LinkDiagram> {
        for (x, c) in self.crossings.iter().enumerate() {
            for p in 0..4 {
                if c.arcs[p] == c.arcs[(p + 1) % 4] {
                    let join = (c.arcs[(p + 2) % 4], c.arcs[(p + 3) % 4]);
                    if let Ok(d) = self.splice(&[x], &[join]) {
                        return Some(d);
                    }
                }
            }
        }
        None
    }

    /// Removes the two crossings of a bigon face if one edge is over at
    /// both and the other under at both.
    fn reduce_bigon(&self, face: &Face) -> Option<LinkDiagram> {
        let [(x, p), (y, r)] = face.darts[..] else { return None };
        if x == y {
            return None;
        }
        let (_, p1) = self.other_end(x, p);
        let (_, r1) = self.other_end(y, r);
        if p % 2 != p1 % 2 || r % 2 != r1 % 2 || p % 2 == r % 2 {
            return None;
        }
        let cx = &self.crossings[x];
        let cy = &self.crossings[y];
        // each strand: edge between x and y, plus its continuations
        let joins = [
            (cx.arcs[p], cx.arcs[(p + 2) % 4]),
            (cy.arcs[p1], cy.arcs[(p1 + 2) % 4]),
            (cy.arcs[r], cy.arcs[(r + 2) % 4]),
            (cx.arcs[r1], cx.arcs[(r1 + 2) % 4]),
        ];
        let d = self.splice(&[x, y], &joins).ok()?;
        d.validate().ok()?;
        Some(d)
    }

    fn reduce_r2(&self) -> Option<LinkDiagram> {
        self.faces()
            .iter()
            .filter(|f| f.darts.len() == 2)
            .find_map(|f| self.reduce_bigon(f))
    }

    /// Repeated R1 and R2 reductions until none applies.
    pub fn simplify(&self) -> LinkDiagram {
        let mut d = self.clone();
        loop {
            if let Some(n) = d.reduce_r1() {
                d = n;
            } else if let Some(n) = d.reduce_r2() {
                d = n;
            } else {
                return d;
            }
        }
    }

    /// Adds a kink on edge `e`; `kind` in `0..4` picks sign and side.
    pub fn insert_kink(&self, e: usize, kind: u8) -> LinkDiagram {
        let mut next = self.edge_count();
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let ea = e;
        let mut raw = self.crossings.clone();
        let eb = if self.is_free(self.edge_comp[e]) {
            e
        } else {
            let eb = fresh();
            let (x, p) = self.head[e].expect("edge in a crossing");
            raw[x].arcs[p] = eb;
            eb
        };
        let l = fresh();
        raw.push(match kind % 4 {
            0 => Crossing::new([ea, l, l, eb], -1),
            1 => Crossing::new([ea, eb, l, l], 1),
            2 => Crossing::new([l, l, eb, ea], 1),
            _ => Crossing::new([l, ea, eb, l], -1),
        });
        let comp = self.edge_comp[e];
        build(self.mu(), &raw, |k| Some(if k < self.edge_count() { self.edge_comp[k] } else { comp }))
            .expect("kink keeps the diagram valid")
    }

    /// Pushes a finger of edge `e1` over (or under) edge `e2`. Returns
    /// `None` when the two edges share no face.
    pub fn insert_r2(&self, e1: usize, e2: usize, e1_over: bool) -> Option<LinkDiagram> {
        let n = self.edge_count();
        if e1 == e2 || self.is_free(self.edge_comp[e1]) || self.is_free(self.edge_comp[e2]) {
            return None;
        }
        let (c1, c2) = (self.edge_comp[e1], self.edge_comp[e2]);
        let (m1, e1b, m2, e2b) = (n, n + 1, n + 2, n + 3);
        let comp_of = |k: usize| {
            Some(match k {
                _ if k < n => self.edge_comp[k],
                _ if k == m1 || k == e1b => c1,
                _ => c2,
            })
        };
        let mut base = self.crossings.clone();
        for (e, b) in [(e1, e1b), (e2, e2b)] {
            let (x, p) = self.head[e].expect("edge in a crossing");
            base[x].arcs[p] = b;
        }
        for x_first in [true, false] {
            // passages of e2 at the two new crossings X and Y
            let (px, py) = if x_first { ((e2, m2), (m2, e2b)) } else { ((m2, e2b), (e2, m2)) };
            for sx in [1i8, -1] {
                for sy in [1i8, -1] {
                    let make = |(ui, uo): (usize, usize), (oi, oo): (usize, usize), s: i8| {
                        if s > 0 {
                            Crossing::new([ui, oo, uo, oi], 1)
                        } else {
                            Crossing::new([ui, oi, uo, oo], -1)
                        }
                    };
                    let (cx, cy) = if e1_over {
                        (make(px, (e1, m1), sx), make(py, (m1, e1b), sy))
                    } else {
                        (make((e1, m1), px, sx), make((m1, e1b), py, sy))
                    };
                    let mut raw = base.clone();
                    raw.push(cx);
                    raw.push(cy);
                    let Ok((d, ids)) = build_map(self.mu(), &raw, comp_of) else { continue };
                    if d.validate().is_err() {
                        continue;
                    }
                    let m = ids[&m1];
                    let (xa, _) = d.tail[m].expect("in a crossing");
                    let (xb, _) = d.head[m].expect("in a crossing");
                    let bigon = d.faces().into_iter().find(|f| {
                        f.darts.len() == 2 && {
                            let mut xs = [f.darts[0].0, f.darts[1].0];
                            xs.sort();
                            xs == [xa.min(xb), xa.max(xb)]
                        }
                    });
                    if let Some(f) = bigon {
                        if d.reduce_bigon(&f).as_ref() == Some(self) {
                            return Some(d);
                        }
                    }
                }
            }
        }
        None
    }
}
