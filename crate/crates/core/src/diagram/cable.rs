//! Blackboard 2-cables.
//!
//! Copy `L` runs on the left of the original strand and keeps the label,
//! copy `R` runs on its right and becomes the last component. Pictures are
//! drawn with the under strand heading north, positions 0..4 being south,
//! east, north, west.

use rustc_hash::FxHashMap;

use super::{build, Crossing, LinkDiagram};
use crate::error::{Error, Result};

struct Labels {
    next: usize,
    comp: FxHashMap<usize, usize>,
}

impl Labels {
    fn fresh(&mut self, comp: usize) -> usize {
        let l = self.next;
        self.next += 1;
        self.comp.insert(l, comp);
        l
    }
}

impl LinkDiagram {
    /// Replaces component `i` (0-based) by two parallel copies with linking
    /// number 0, or 1 when `clasp` is set. The second copy gets label `mu`.
    pub fn cable2(&self, i: usize, clasp: bool) -> Result<LinkDiagram> {
        self.cable2_twisted(i, i64::from(clasp))
    }

    /// Two copies of component `i` with `k` full twists relative to the
    /// Seifert framing, so the copies link `k` times.
    pub fn cable2_twisted(&self, i: usize, k: i64) -> Result<LinkDiagram> {
        let mu = self.mu();
        if i >= mu {
            return Err(Error::InvalidDiagram(format!("no component {}", i + 1)));
        }
        let n = self.edge_count();
        let new = mu;
        let mut labels = Labels {
            next: n,
            comp: (0..n).map(|e| (e, self.edge_comp[e])).collect(),
        };
        let mut right = FxHashMap::default();
        for e in self.component_edges(i) {
            right.insert(e, labels.fresh(new));
        }
        let l = |e: usize| e;
        let r = |e: usize| right[&e];
        let mut raw = Vec::new();
        for (x, c) in self.crossings.iter().enumerate() {
            let [a, b, cc, d] = c.arcs;
            let s = c.sign;
            let under_i = self.under_component(x) == i;
            let over_i = self.over_component(x) == i;
            match (under_i, over_i) {
                (false, false) => raw.push(*c),
                (true, false) => {
                    let m = labels.fresh(self.edge_comp[b]);
                    raw.push(Crossing::new([r(a), b, r(cc), m], s));
                    raw.push(Crossing::new([l(a), m, l(cc), d], s));
                }
                (false, true) => {
                    let m = labels.fresh(self.edge_comp[a]);
                    let (south, north): (&dyn Fn(usize) -> usize, &dyn Fn(usize) -> usize) =
                        if s > 0 { (&r, &l) } else { (&l, &r) };
                    raw.push(Crossing::new([a, south(b), m, south(d)], s));
                    raw.push(Crossing::new([m, north(b), cc, north(d)], s));
                }
                (true, true) => {
                    let (sc, nc) = if s > 0 { (new, i) } else { (i, new) };
                    let (south, north): (&dyn Fn(usize) -> usize, &dyn Fn(usize) -> usize) =
                        if s > 0 { (&r, &l) } else { (&l, &r) };
                    let vw = labels.fresh(i);
                    let ve = labels.fresh(new);
                    let hs = labels.fresh(sc);
                    let hn = labels.fresh(nc);
                    raw.push(Crossing::new([l(a), hs, vw, south(d)], s));
                    raw.push(Crossing::new([r(a), south(b), ve, hs], s));
                    raw.push(Crossing::new([vw, hn, l(cc), north(d)], s));
                    raw.push(Crossing::new([ve, north(b), r(cc), hn], s));
                }
            }
        }
        let twists = k - self.component_writhe(i);
        if twists != 0 {
            let e0 = self.comp_start[i];
            let (lin, rin) = (l(e0), r(e0));
            let (lout, rout) = if self.is_free(i) {
                (lin, rin)
            } else {
                let lh = labels.fresh(i);
                let rh = labels.fresh(new);
                for c in raw.iter_mut() {
                    for p in 0..4 {
                        if c.is_incoming(p) && c.arcs[p] == lin {
                            c.arcs[p] = lh;
                        } else if c.is_incoming(p) && c.arcs[p] == rin {
                            c.arcs[p] = rh;
                        }
                    }
                }
                (lh, rh)
            };
            let half = 2 * twists.unsigned_abs() as usize;
            // (west strand, east strand) heading north
            let (mut w_in, mut e_in) = (lin, rin);
            let mut west_is_l = true;
            for k in 0..half {
                let last = k + 1 == half;
                // the west strand moves east
                let (w_out, e_out) = if last {
                    if west_is_l {
                        (lout, rout)
                    } else {
                        (rout, lout)
                    }
                } else {
                    let wc = if west_is_l { i } else { new };
                    let ec = if west_is_l { new } else { i };
                    (labels.fresh(wc), labels.fresh(ec))
                };
                if twists > 0 {
                    raw.push(Crossing::new([e_in, w_out, e_out, w_in], 1));
                } else {
                    raw.push(Crossing::new([w_in, e_in, w_out, e_out], -1));
                }
                // after the swap the old east strand is west
                w_in = e_out;
                e_in = w_out;
                west_is_l = !west_is_l;
            }
        }
        let comp = labels.comp;
        build(mu + 1, &raw, |e| comp.get(&e).copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn cabled_unknot_with_clasp_is_hopf() {
        let d = LinkDiagram::unknot().cable2(0, true).unwrap();
        d.validate().unwrap();
        assert_eq!(d.mu(), 2);
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.linking_matrix().get(0, 1), 1);
        let plain = LinkDiagram::unknot().cable2(0, false).unwrap();
        assert_eq!(plain, LinkDiagram::unlink(2));
    }

    #[test]
    fn cable_of_trefoil_is_zero_framed() {
        let t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        for clasp in [false, true] {
            let d = t.cable2(0, clasp).unwrap();
            d.validate().unwrap();
            assert_eq!(d.mu(), 2);
            assert_eq!(d.crossing_count(), 4 * 3 + 2 * (i64::from(clasp) - t.writhe()).unsigned_abs() as usize);
            assert_eq!(d.linking_matrix().get(0, 1), i64::from(clasp));
            assert_eq!(d.component_writhe(0), t.writhe());
            assert_eq!(d.component_writhe(1), t.writhe());
        }
        let m = t.mirror().cable2(0, true).unwrap();
        m.validate().unwrap();
        assert_eq!(m.linking_matrix().get(0, 1), 1);
    }

    #[test]
    fn cable_copies_inherit_rows() {
        let hopf = parse_pd("X[4,2,3,1] X[2,4,1,3]").unwrap();
        for i in 0..2 {
            let d = hopf.cable2(i, true).unwrap();
            d.validate().unwrap();
            let m = d.linking_matrix();
            let j = 1 - i;
            assert_eq!(m.get(i, j), 1);
            assert_eq!(m.get(2, j), 1);
            assert_eq!(m.get(i, 2), 1);
        }
    }
}
