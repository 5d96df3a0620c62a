//! Subgroup lattice of `Γ_μ` by cyclic extension over bitsets.

use std::io::Write;
use std::path::PathBuf;

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use super::subgroup::{closure, ElemSet, Subgroup};
use super::table::{check_mu, GammaTable};
use crate::error::{Error, Result};

/// Knobs for [`all_subgroups_with`].
#[derive(Clone, Debug, Default)]
pub struct LatticeOptions {
    /// Required for `μ = 5`.
    pub allow_long: bool,
    /// Abort once more subgroups than this have been found.
    pub max_subgroups: Option<usize>,
    /// Written after every layer; one JSON line per layer.
    pub checkpoint: Option<PathBuf>,
    /// Print layer progress to stderr.
    pub progress: bool,
}

/// All subgroups of `Γ_μ` as bitsets, sorted by `(order, bitset)`.
pub struct Lattice {
    pub mu: usize,
    pub table: std::sync::Arc<GammaTable>,
    pub sets: Vec<ElemSet>,
}

#[derive(Serialize, Deserialize)]
struct CheckpointLine {
    layer: usize,
    found: usize,
    new_in_layer: usize,
}

impl Lattice {
    pub fn compute(mu: usize, opts: &LatticeOptions) -> Result<Lattice> {
        check_mu(mu)?;
        if mu >= 5 && !opts.allow_long {
            return Err(Error::ResourceLimit(format!(
                "subgroup enumeration for mu={mu} is a long-running job; enable allow_long"
            )));
        }
        let table = GammaTable::get(mu)?;
        let order = table.order;

        // one generator per cyclic subgroup
        let mut cyclic_seen: FxHashSet<ElemSet> = FxHashSet::default();
        let mut cyclic: Vec<(usize, ElemSet)> = Vec::new();
        for g in 1..order {
            let c = closure(&table, &[g]);
            if cyclic_seen.insert(c.clone()) {
                cyclic.push((g, c));
            }
        }

        let trivial = closure(&table, &[]);
        let mut seen: FxHashSet<ElemSet> = FxHashSet::default();
        seen.insert(trivial.clone());
        let mut layer: Vec<(ElemSet, Vec<usize>)> = vec![(trivial, vec![])];
        let mut depth = 0;
        let mut checkpoint = match &opts.checkpoint {
            Some(p) => Some(std::fs::File::create(p)?),
            None => None,
        };

        while !layer.is_empty() {
            depth += 1;
            let found: Vec<(ElemSet, Vec<usize>)> = layer
                .par_iter()
                .flat_map_iter(|(h, gens)| {
                    let mut local: FxHashSet<ElemSet> = FxHashSet::default();
                    let mut out = Vec::new();
                    for (g, c) in &cyclic {
                        if c.is_subset(h) {
                            continue;
                        }
                        let mut ng = gens.clone();
                        ng.push(*g);
                        let s = closure(&table, &ng);
                        if local.insert(s.clone()) {
                            out.push((s, ng));
                        }
                    }
                    out.into_iter()
                })
                .collect();
            let mut next = Vec::new();
            for (s, gens) in found {
                if seen.insert(s.clone()) {
                    next.push((s, gens));
                }
            }
            next.sort_by(|a, b| a.0.cmp(&b.0));
            if let Some(f) = checkpoint.as_mut() {
                let line = CheckpointLine {
                    layer: depth,
                    found: seen.len(),
                    new_in_layer: next.len(),
                };
                writeln!(f, "{}", serde_json::to_string(&line)?)?;
                f.flush()?;
            }
            if opts.progress {
                eprintln!("layer {depth}: {} new, {} total", next.len(), seen.len());
            }
            if let Some(max) = opts.max_subgroups {
                if seen.len() > max {
                    return Err(Error::ResourceLimit(format!(
                        "more than {max} subgroups found"
                    )));
                }
            }
            layer = next;
        }

        let mut sets: Vec<ElemSet> = seen.into_iter().collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(Lattice { mu, table, sets })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    fn conjugate_set(&self, g: usize, s: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.table.order);
        for x in s.iter() {
            out.insert(self.table.conj(g, x));
        }
        out
    }

    /// Class id for every entry of `sets`; ids are numbered by first appearance.
    pub fn conjugacy_class_ids(&self) -> Vec<usize> {
        let index: FxHashMap<&ElemSet, usize> =
            self.sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let gens = gamma_generators(self.mu);
        let mut class = vec![usize::MAX; self.sets.len()];
        let mut next_id = 0;
        for start in 0..self.sets.len() {
            if class[start] != usize::MAX {
                continue;
            }
            class[start] = next_id;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for &g in &gens {
                    let c = self.conjugate_set(g, &self.sets[i]);
                    let j = index[&c];
                    if class[j] == usize::MAX {
                        class[j] = next_id;
                        stack.push(j);
                    }
                }
            }
            next_id += 1;
        }
        class
    }

    pub fn subgroup(&self, i: usize) -> Subgroup {
        Subgroup::from_set(self.mu, &self.sets[i])
    }
}

/// Canonical indices of a small generating set of `Γ_μ`.
fn gamma_generators(mu: usize) -> Vec<usize> {
    use super::element::WhittenElement;
    use super::perm::Permutation;
    let mut out = vec![];
    let mut mirror = WhittenElement::identity(mu);
    mirror = WhittenElement::new(-1, mirror.eps().to_vec(), mirror.perm().clone()).unwrap();
    out.push(mirror.index());
    let mut eps = vec![1; mu];
    eps[0] = -1;
    out.push(WhittenElement::new(1, eps, Permutation::identity(mu)).unwrap().index());
    if mu >= 2 {
        let t = Permutation::from_cycles(mu, &[&[1, 2]]).unwrap();
        out.push(WhittenElement::pure_perm(t).index());
        let cyc: Vec<usize> = (1..=mu).collect();
        let c = Permutation::from_cycles(mu, &[&cyc]).unwrap();
        out.push(WhittenElement::pure_perm(c).index());
    }
    out
}

/// A conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Subgroup,
    pub size: usize,
}

pub fn all_subgroups(mu: usize) -> Result<Vec<Subgroup>> {
    all_subgroups_with(mu, &LatticeOptions::default())
}

pub fn all_subgroups_with(mu: usize, opts: &LatticeOptions) -> Result<Vec<Subgroup>> {
    let lat = Lattice::compute(mu, opts)?;
    Ok((0..lat.len()).map(|i| lat.subgroup(i)).collect())
}

pub fn conjugacy_classes_of_subgroups(mu: usize) -> Result<Vec<ConjugacyClass>> {
    conjugacy_classes_with(mu, &LatticeOptions::default())
}

/// Representatives are the first member of each class in lattice order.
pub fn conjugacy_classes_with(mu: usize, opts: &LatticeOptions) -> Result<Vec<ConjugacyClass>> {
    let lat = Lattice::compute(mu, opts)?;
    let ids = lat.conjugacy_class_ids();
    let n = ids.iter().max().map_or(0, |m| m + 1);
    let mut first = vec![usize::MAX; n];
    let mut size = vec![0; n];
    for (i, &c) in ids.iter().enumerate() {
        if first[c] == usize::MAX {
            first[c] = i;
        }
        size[c] += 1;
    }
    Ok((0..n)
        .map(|c| ConjugacyClass {
            representative: lat.subgroup(first[c]),
            size: size[c],
        })
        .collect())
}
