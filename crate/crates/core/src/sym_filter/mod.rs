//! Upper bound `Σ′` for the symmetry group of a labeled link: every
//! Whitten element the implemented invariants cannot rule out.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::group::{ElemSet, GammaTable, Subgroup, WhittenElement};
use crate::invariants::{profile_with, InvariantProfile, LaurentPoly2, Limits};
use crate::linkmat::{act_matrix, stabilizer_bruteforce};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FilterOptions {
    pub use_satellites: bool,
    /// Limits for the diagram and its images.
    pub limits: Limits,
    /// Limits for the cabled diagrams of the satellite stage.
    pub satellite_limits: Limits,
}

impl Default for FilterOptions {
    fn default() -> Self {
        FilterOptions {
            use_satellites: false,
            limits: Limits::default(),
            satellite_limits: Limits {
                max_crossings: 48,
                node_budget: 4_000_000,
            },
        }
    }
}

impl FilterOptions {
    pub fn with_satellites(use_satellites: bool) -> Self {
        FilterOptions {
            use_satellites,
            ..Self::default()
        }
    }
}

/// Elements left after one stage.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCount {
    pub stage: String,
    pub remaining: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    ProperSuperset { index: usize },
    NotContaining,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Equal => f.write_str("equal"),
            Verdict::ProperSuperset { index } => write!(f, "proper superset (index {index})"),
            Verdict::NotContaining => f.write_str("NOT CONTAINING"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FilterReport {
    pub name: Option<String>,
    pub mu: usize,
    pub stages: Vec<StageCount>,
    /// Elements kept only because an invariant hit a resource limit.
    pub retained_on_limit: Vec<WhittenElement>,
    pub closed: bool,
    #[serde(with = "subgroup_elements")]
    pub sigma_prime: Subgroup,
    pub verdict: Option<Verdict>,
}

mod subgroup_elements {
    use super::*;

    pub fn serialize<S: serde::Serializer>(h: &Subgroup, s: S) -> std::result::Result<S::Ok, S::Error> {
        h.elements().serialize(s)
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Subgroup, D::Error> {
        let els = Vec::<WhittenElement>::deserialize(d)?;
        let mu = els.first().map_or(1, |g| g.mu());
        Subgroup::from_elements(mu, els).map_err(serde::de::Error::custom)
    }
}

impl FilterReport {
    pub fn compare(&mut self, truth: &Subgroup) -> Verdict {
        let v = verdict(&self.sigma_prime, truth);
        self.verdict = Some(v);
        v
    }
}

pub fn verdict(sigma_prime: &Subgroup, truth: &Subgroup) -> Verdict {
    if !truth.is_subgroup_of(sigma_prime) {
        Verdict::NotContaining
    } else if truth.order() == sigma_prime.order() {
        Verdict::Equal
    } else {
        Verdict::ProperSuperset {
            index: sigma_prime.order() / truth.order(),
        }
    }
}

fn image_fingerprint(g: &WhittenElement, fps: &[LaurentPoly2], i: usize) -> LaurentPoly2 {
    let f = &fps[g.perm().apply(i)];
    if g.is_mirror() {
        f.mirror()
    } else {
        f.clone()
    }
}

/// Whether `d` is a reduced alternating diagram, the case where the total
/// self-writhe is a link invariant. Per-component values are not: a flype
/// can turn a self-crossing into a mixed one and back.
fn writhe_is_invariant(d: &LinkDiagram) -> bool {
    d.is_alternating() && d.is_reduced()
}

/// Stabilizer of the linking matrix, cut down by component knot types and
/// (for reduced alternating diagrams) self-writhe. Stage counts are
/// appended to `stages` when given.
pub fn candidate_stage(d: &LinkDiagram) -> Result<Vec<WhittenElement>> {
    candidate_stage_counted(d, Limits::default(), &mut Vec::new())
}

fn candidate_stage_counted(
    d: &LinkDiagram,
    limits: Limits,
    stages: &mut Vec<StageCount>,
) -> Result<Vec<WhittenElement>> {
    let mu = d.mu();
    let mut push = |stage: &str, n: usize| {
        stages.push(StageCount {
            stage: stage.into(),
            remaining: n,
        })
    };
    push("gamma", crate::group::gamma_order(mu));
    let lk = d.linking_matrix();
    let mut cands: Vec<WhittenElement> = stabilizer_bruteforce(&lk)?.elements().to_vec();
    push("linking matrix", cands.len());
    let fps: Vec<LaurentPoly2> = (0..mu)
        .map(|i| crate::invariants::homflypt_with(&d.sublink(&[i])?, limits.node_budget))
        .collect::<Result<_>>()?;
    cands.retain(|g| (0..mu).all(|i| image_fingerprint(g, &fps, i) == fps[i]));
    push("component types", cands.len());
    if writhe_is_invariant(d) {
        let sw = d.self_writhe();
        cands.retain(|g| i64::from(g.eps0()) * sw == sw);
        push("self-writhe", cands.len());
    }
    debug_assert!(cands.iter().all(|g| act_matrix(g, &lk).is_ok_and(|m| m == lk)));
    Ok(cands)
}

enum Outcome {
    Keep,
    Drop,
    Limit,
}

fn compare_profiles(a: Result<InvariantProfile>, b: &InvariantProfile) -> Result<Outcome> {
    match a {
        Ok(p) => Ok(if &p == b { Outcome::Keep } else { Outcome::Drop }),
        Err(Error::ResourceLimit(_)) => Ok(Outcome::Limit),
        Err(e) => Err(e),
    }
}

/// Runs every stage and assembles the report.
pub fn sigma_prime(d: &LinkDiagram, opts: &FilterOptions) -> Result<FilterReport> {
    let mu = d.mu();
    let mut stages = Vec::new();
    let cands = candidate_stage_counted(d, opts.limits, &mut stages)?;
    let base = profile_with(d, opts.limits)?;
    let mut retained_on_limit = Vec::new();

    let outcomes: Vec<Outcome> = cands
        .par_iter()
        .map(|g| compare_profiles(profile_with(&d.apply_whitten(g)?, opts.limits), &base))
        .collect::<Result<_>>()?;
    let mut kept = Vec::new();
    for (g, o) in cands.into_iter().zip(outcomes) {
        match o {
            Outcome::Keep => kept.push(g),
            Outcome::Drop => {}
            Outcome::Limit => {
                retained_on_limit.push(g.clone());
                kept.push(g);
            }
        }
    }
    stages.push(StageCount {
        stage: "polynomials".into(),
        remaining: kept.len(),
    });

    if opts.use_satellites {
        kept = satellite_stage(d, kept, opts.satellite_limits, &mut retained_on_limit)?;
        stages.push(StageCount {
            stage: "satellites".into(),
            remaining: kept.len(),
        });
    }

    let (sigma_prime, closed) = close_up(mu, &kept)?;
    Ok(FilterReport {
        name: None,
        mu,
        stages,
        retained_on_limit,
        closed,
        sigma_prime,
        verdict: None,
    })
}

/// An isotopy `L -> γL` carries the clasped 2-cable of component `k` of `L`
/// to that of component `k` of `γL`; compared for every `k` that `γ` moves.
fn satellite_stage(
    d: &LinkDiagram,
    kept: Vec<WhittenElement>,
    limits: Limits,
    retained: &mut Vec<WhittenElement>,
) -> Result<Vec<WhittenElement>> {
    let mu = d.mu();
    let base: Vec<Result<InvariantProfile>> = (0..mu)
        .into_par_iter()
        .map(|k| profile_with(&d.cable2(k, true)?, limits))
        .collect();
    let outcomes: Vec<Outcome> = kept
        .par_iter()
        .map(|g| -> Result<Outcome> {
            let image = d.apply_whitten(g)?;
            let mut limit = false;
            for k in (0..mu).filter(|&k| g.perm().apply(k) != k) {
                let b = match &base[k] {
                    Ok(b) => b,
                    Err(Error::ResourceLimit(_)) => {
                        limit = true;
                        continue;
                    }
                    Err(e) => return Err(Error::InvalidDiagram(e.to_string())),
                };
                match compare_profiles(profile_with(&image.cable2(k, true)?, limits), b)? {
                    Outcome::Drop => return Ok(Outcome::Drop),
                    Outcome::Limit => limit = true,
                    Outcome::Keep => {}
                }
            }
            Ok(if limit { Outcome::Limit } else { Outcome::Keep })
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (g, o) in kept.into_iter().zip(outcomes) {
        match o {
            Outcome::Keep => out.push(g),
            Outcome::Drop => {}
            Outcome::Limit => {
                if !retained.contains(&g) {
                    retained.push(g.clone());
                }
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// The set as a subgroup when closed; otherwise a maximal subgroup inside
/// it, grown greedily from generated closures in canonical order.
fn close_up(mu: usize, kept: &[WhittenElement]) -> Result<(Subgroup, bool)> {
    let table = GammaTable::get(mu)?;
    let mut set = ElemSet::empty(table.order);
    for g in kept {
        set.insert(g.index());
    }
    let closed = set.contains(0)
        && set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(table.mul(a, b))));
    if closed {
        return Ok((Subgroup::from_elements(mu, kept.to_vec())?, true));
    }
    let mut gens: Vec<WhittenElement> = Vec::new();
    let mut h = Subgroup::trivial(mu);
    let mut order = kept.to_vec();
    order.sort();
    for g in &order {
        if h.contains(g) {
            continue;
        }
        let mut trial = gens.clone();
        trial.push(g.clone());
        let next = Subgroup::generate(mu, &trial)?;
        if next.elements().iter().all(|x| set.contains(x.index())) {
            gens = trial;
            h = next;
        }
    }
    Ok((h, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::group::Named2;

    #[test]
    fn unlink_keeps_everything() {
        let d = LinkDiagram::unlink(2);
        assert_eq!(candidate_stage(&d).unwrap().len(), 16);
        let r = sigma_prime(&d, &FilterOptions::default()).unwrap();
        assert_eq!(r.sigma_prime.order(), 16);
        assert!(r.closed);
    }

    #[test]
    fn hopf_link() {
        let hopf = parse_pd("X[4,2,3,1] X[2,4,1,3]").unwrap();
        let r = sigma_prime(&hopf, &FilterOptions::with_satellites(true)).unwrap();
        // the Hopf link admits every element fixing its linking number
        assert!(r.sigma_prime.same_elements(&Named2::Sigma8_2.subgroup().unwrap()));
        assert_eq!(r.stages.last().unwrap().remaining, 8);
        assert!(r.retained_on_limit.is_empty());
    }

    #[test]
    fn close_up_drops_strays() {
        let g = |s: &str| WhittenElement::parse(s).unwrap();
        let (h, closed) = close_up(2, &[g("(1,1,1,e)"), g("(1,-1,-1,e)"), g("(1,1,-1,e)")]).unwrap();
        assert!(!closed);
        assert!(h.audit());
        assert_eq!(h.order(), 2);
        assert!(h.contains(&g("(1,1,-1,e)")));
    }
}
