//! Kauffman bracket in `A`, stored with doubled exponents like every
//! [`LaurentPoly`]. At `X[a,b,c,d]` the A-smoothing joins `a-b` and `c-d`.

use rustc_hash::FxHashMap;

use super::LaurentPoly;
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

/// Largest diagram the bracket accepts by default.
pub const DEFAULT_MAX_CROSSINGS: usize = 28;

/// Below this size the plain state sum is used.
const STATE_SUM_BELOW: usize = 14;

/// `-A^2 - A^{-2}`.
fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(4, -1), (-4, -1)])
}

fn smoothing_pairs(arcs: [usize; 4], a_side: bool) -> [(usize, usize); 2] {
    let [a, b, c, d] = arcs;
    if a_side {
        [(a, b), (c, d)]
    } else {
        [(a, d), (b, c)]
    }
}

fn free_count(d: &LinkDiagram) -> usize {
    (0..d.mu()).filter(|&c| d.is_free(c)).count()
}

/// Bracket normalized so the crossingless unknot has value 1.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    kauffman_bracket_with(d, DEFAULT_MAX_CROSSINGS)
}

pub fn kauffman_bracket_with(d: &LinkDiagram, max_crossings: usize) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > max_crossings {
        return Err(Error::ResourceLimit(format!(
            "bracket of a {n}-crossing diagram exceeds the limit of {max_crossings}"
        )));
    }
    if n < STATE_SUM_BELOW {
        state_sum(d)
    } else {
        contraction(d)
    }
}

/// The explicit sum over all `2^n` states.
pub fn state_sum(d: &LinkDiagram) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > 24 {
        return Err(Error::ResourceLimit(format!("state sum over 2^{n} states")));
    }
    let edges = d.edge_count();
    let free = free_count(d);
    let dl = loop_value();
    let mut by_loops: FxHashMap<(i64, usize), i64> = FxHashMap::default();
    let mut parent = vec![0usize; edges];
    for mask in 0u64..(1u64 << n) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut exp = 0i64;
        for (x, c) in d.crossings().iter().enumerate() {
            let a_side = mask >> x & 1 == 0;
            exp += if a_side { 1 } else { -1 };
            for (u, v) in smoothing_pairs(c.arcs, a_side) {
                let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let mut loops = free;
        for e in 0..edges {
            if !d.is_free(d.component_of(e)) && root(&mut parent, e) == e {
                loops += 1;
            }
        }
        *by_loops.entry((exp, loops)).or_insert(0) += 1;
    }
    let mut total = LaurentPoly::zero();
    let mut powers: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for (&(exp, loops), &count) in &by_loops {
        while powers.len() < loops {
            let next = powers.last().expect("nonempty") * &dl;
            powers.push(next);
        }
        let term = powers[loops - 1].shift(2 * exp).scale(count);
        total = &total + &term;
    }
    Ok(total)
}

fn root(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Boundary state: pairs of open edges joined through processed crossings.
type State = Vec<(u32, u32)>;

/// Joins edge ends `u` and `v`; returns whether a loop closed.
fn join(state: &mut State, u: u32, v: u32) -> bool {
    if u == v {
        return true;
    }
    let pu = take_partner(state, u);
    if pu == Some(v) {
        return true;
    }
    let pv = take_partner(state, v);
    let a = pu.unwrap_or(u);
    let b = pv.unwrap_or(v);
    if a == b {
        // u and v both hung off the same open edge
        return true;
    }
    state.push((a.min(b), a.max(b)));
    false
}

fn take_partner(state: &mut State, u: u32) -> Option<u32> {
    let i = state.iter().position(|&(a, b)| a == u || b == u)?;
    let (a, b) = state.swap_remove(i);
    Some(if a == u { b } else { a })
}

/// Crossing order that keeps the boundary small.
fn contraction_order(d: &LinkDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut done = vec![false; n];
    let mut touched = vec![0u32; d.edge_count()];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&x| !done[x])
            .max_by_key(|&x| {
                let shared: u32 = d.crossings()[x].arcs.iter().map(|&e| touched[e].min(1)).sum();
                (shared, std::cmp::Reverse(x))
            })
            .expect("crossings left");
        done[pick] = true;
        for &e in &d.crossings()[pick].arcs {
            touched[e] += 1;
        }
        order.push(pick);
    }
    order
}

/// Crossing-by-crossing contraction over boundary states.
pub fn contraction(d: &LinkDiagram) -> Result<LaurentPoly> {
    let dl = loop_value();
    let mut states: FxHashMap<State, LaurentPoly> = FxHashMap::default();
    states.insert(Vec::new(), LaurentPoly::one());
    for x in contraction_order(d) {
        let arcs = d.crossings()[x].arcs;
        let mut next: FxHashMap<State, LaurentPoly> = FxHashMap::default();
        for (state, poly) in &states {
            for a_side in [true, false] {
                let mut s = state.clone();
                let mut loops = 0;
                for (u, v) in smoothing_pairs(arcs, a_side) {
                    if join(&mut s, u as u32, v as u32) {
                        loops += 1;
                    }
                }
                s.sort_unstable();
                let mut value = poly.shift(if a_side { 2 } else { -2 });
                for _ in 0..loops {
                    value = &value * &dl;
                }
                let slot = next.entry(s).or_default();
                *slot = &*slot + &value;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let mut total = states.remove(&Vec::new()).unwrap_or_default();
    if !states.is_empty() {
        return Err(Error::InvalidDiagram("bracket contraction left open ends".into()));
    }
    for _ in 0..free_count(d) {
        total = &total * &dl;
    }
    total
        .div_exact(&dl)
        .ok_or_else(|| Error::InvalidDiagram("bracket is not divisible by the loop value".into()))
}
