//! PD text: `X[a,b,c,d]` crossings, optional `Xp`/`Xm` for an explicit sign,
//! and `C[...]` groups naming the arcs of each component in label order
//! (`C[]` is a crossingless component). `PD[...]` wrappers and brace lists
//! `{{a,b,c,d},...}` are accepted too.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::{build, Crossing, LinkDiagram};
use crate::error::{Error, Result};

/// Unoriented PD data before orientation inference.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PdInput {
    pub crossings: Vec<[usize; 4]>,
    /// Explicit signs from `Xp`/`Xm`; `None` for plain `X`.
    pub signs: Vec<Option<i8>>,
    /// Component groups; `None` orders curves by smallest arc.
    pub groups: Option<Vec<Vec<usize>>>,
}

fn perr(token: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::PdParse {
        token: token.into(),
        reason: reason.into(),
    }
}

impl PdInput {
    pub fn parse(text: &str) -> Result<Self> {
        let mut s = text.trim();
        if let Some(inner) = s.strip_prefix("PD[").and_then(|r| r.strip_suffix(']')) {
            s = inner.trim();
        }
        if s.starts_with("{{") && s.ends_with("}}") {
            s = &s[1..s.len() - 1];
        }
        if s.starts_with("[[") && s.ends_with("]]") {
            s = &s[1..s.len() - 1];
        }
        let mut out = PdInput::default();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() || c == ',' {
                i += 1;
                continue;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let open = chars.get(i).copied();
            let close = match open {
                Some('[') => ']',
                Some('{') => '}',
                _ => {
                    let tok: String = chars[start..(i + 1).min(chars.len())].iter().collect();
                    return Err(perr(tok, "expected `X[...]` or `C[...]`"));
                }
            };
            let end = chars[i..]
                .iter()
                .position(|&ch| ch == close)
                .map(|k| i + k)
                .ok_or_else(|| perr(chars[start..].iter().collect::<String>(), "unclosed bracket"))?;
            let token: String = chars[start..=end].iter().collect();
            let body: String = chars[i + 1..end].iter().collect();
            i = end + 1;
            let nums = body
                .split([',', ' '])
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| perr(token.clone(), format!("`{}` is not an arc label", t.trim())))
                })
                .collect::<Result<Vec<usize>>>()?;
            match name.as_str() {
                "" | "X" | "Xp" | "Xm" => {
                    let arcs: [usize; 4] = nums
                        .try_into()
                        .map_err(|_| perr(token.clone(), "a crossing needs four arcs"))?;
                    out.crossings.push(arcs);
                    out.signs.push(match name.as_str() {
                        "Xp" => Some(1),
                        "Xm" => Some(-1),
                        _ => None,
                    });
                }
                "C" => groups.push(nums),
                _ => return Err(perr(token, "unknown token")),
            }
        }
        if !groups.is_empty() {
            out.groups = Some(groups);
        }
        Ok(out)
    }

    /// Infers orientation and signs, assigns components, and builds the diagram.
    pub fn into_diagram(self) -> Result<LinkDiagram> {
        let curves = orient(&self.crossings, &self.signs)?;
        let (mu, comp) = match &self.groups {
            Some(groups) => assign_groups(&curves.curves, groups)?,
            None => {
                let mut order: Vec<usize> = (0..curves.curves.len()).collect();
                order.sort_by_key(|&k| curves.curves[k].iter().min().copied());
                let mut comp = FxHashMap::default();
                for (label, &k) in order.iter().enumerate() {
                    for &a in &curves.curves[k] {
                        comp.insert(a, label);
                    }
                }
                (curves.curves.len().max(1), comp)
            }
        };
        let d = build(mu, &curves.raw, |l| comp.get(&l).copied())?;
        d.validate()?;
        Ok(d)
    }
}

struct Oriented {
    raw: Vec<Crossing>,
    /// Arc labels of each closed curve.
    curves: Vec<Vec<usize>>,
}

fn orient(xs: &[[usize; 4]], signs: &[Option<i8>]) -> Result<Oriented> {
    let mut occ: FxHashMap<usize, Vec<(usize, usize)>> = FxHashMap::default();
    for (x, arcs) in xs.iter().enumerate() {
        for (p, &a) in arcs.iter().enumerate() {
            occ.entry(a).or_default().push((x, p));
        }
    }
    let mut labels: Vec<usize> = occ.keys().copied().collect();
    labels.sort_unstable();
    for &a in &labels {
        let k = occ[&a].len();
        if k != 2 {
            return Err(perr(a.to_string(), format!("arc appears {k} times, expected 2")));
        }
    }
    let other = |x: usize, p: usize| -> (usize, usize) {
        let v = &occ[&xs[x][p]];
        if v[0] == (x, p) {
            v[1]
        } else {
            v[0]
        }
    };
    // arrival position of the over strand at each crossing
    let mut over_in: Vec<Option<usize>> = vec![None; xs.len()];
    let mut visited: FxHashMap<usize, ()> = FxHashMap::default();
    let mut curves = Vec::new();
    for &a in &labels {
        if visited.contains_key(&a) {
            continue;
        }
        // arrivals (x, p) walking away from the first occurrence of `a`
        let mut arrivals = Vec::new();
        let first = occ[&a][1];
        let mut cur = first;
        loop {
            arrivals.push(cur);
            let exit = (cur.0, (cur.1 + 2) % 4);
            cur = other(exit.0, exit.1);
            if cur == first || arrivals.len() > 4 * xs.len() {
                break;
            }
        }
        let mut forward: Option<bool> = None;
        for &(x, p) in &arrivals {
            let want = if p % 2 == 0 {
                Some(p == 0)
            } else {
                signs[x].map(|s| p == if s > 0 { 3 } else { 1 })
            };
            if let Some(w) = want {
                match forward {
                    None => forward = Some(w),
                    Some(f) if f != w => {
                        return Err(perr(
                            format!("X{:?}", xs[x]),
                            "inconsistent orientation along a component",
                        ))
                    }
                    _ => {}
                }
            }
        }
        let forward = forward.unwrap_or_else(|| {
            let &(x, p) = arrivals.iter().min().expect("nonempty curve");
            let [_, j, _, l] = xs[x];
            let positive = j == l + 1 || l > j + 1;
            (p == 3) == positive
        });
        let mut curve = Vec::new();
        for &(x, p) in &arrivals {
            let inc = if forward { p } else { (p + 2) % 4 };
            if inc % 2 == 1 {
                over_in[x] = Some(inc);
            }
            curve.push(xs[x][inc]);
            visited.insert(xs[x][p], ());
            visited.insert(xs[x][(p + 2) % 4], ());
        }
        curves.push(curve);
    }
    let mut raw = Vec::with_capacity(xs.len());
    for (x, arcs) in xs.iter().enumerate() {
        let inc = over_in[x].ok_or_else(|| perr(format!("X{arcs:?}"), "crossing has no over strand"))?;
        let sign = if inc == 3 { 1 } else { -1 };
        if let Some(s) = signs[x] {
            if s != sign {
                return Err(perr(format!("X{arcs:?}"), "explicit sign contradicts orientation"));
            }
        }
        raw.push(Crossing::new(*arcs, sign));
    }
    Ok(Oriented { raw, curves })
}

fn assign_groups(curves: &[Vec<usize>], groups: &[Vec<usize>]) -> Result<(usize, FxHashMap<usize, usize>)> {
    let mut curve_of: FxHashMap<usize, usize> = FxHashMap::default();
    for (k, c) in curves.iter().enumerate() {
        for &a in c {
            curve_of.insert(a, k);
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; curves.len()];
    for (g, arcs) in groups.iter().enumerate() {
        let mut hit = None;
        for &a in arcs {
            let k = *curve_of
                .get(&a)
                .ok_or_else(|| perr(format!("C{arcs:?}"), format!("arc {a} is not in any crossing")))?;
            if hit.is_some_and(|h| h != k) {
                return Err(perr(format!("C{arcs:?}"), "group spans several components"));
            }
            hit = Some(k);
        }
        if let Some(k) = hit {
            if owner[k].is_some() {
                return Err(perr(format!("C{arcs:?}"), "component named twice"));
            }
            owner[k] = Some(g);
        }
    }
    if let Some(k) = owner.iter().position(|o| o.is_none()) {
        return Err(perr(format!("{:?}", curves[k]), "component missing from `C[...]` groups"));
    }
    let mut comp = FxHashMap::default();
    for (k, c) in curves.iter().enumerate() {
        for &a in c {
            comp.insert(a, owner[k].expect("checked"));
        }
    }
    Ok((groups.len(), comp))
}

/// Parses PD text; see the module docs for the accepted forms.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let input = PdInput::parse(text)?;
    if input.crossings.is_empty() && input.groups.is_none() {
        return Ok(LinkDiagram::unknot());
    }
    input.into_diagram()
}

/// Builds from a PD list plus an `arc -> label` map with labels `1..=mu`.
pub fn parse_pd_labeled(pd: &[[usize; 4]], components: &BTreeMap<usize, usize>) -> Result<LinkDiagram> {
    let mu = components.values().copied().max().unwrap_or(1);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); mu];
    for (&arc, &label) in components {
        if label == 0 {
            return Err(perr(format!("{arc}:{label}"), "component labels start at 1"));
        }
        groups[label - 1].push(arc);
    }
    PdInput {
        crossings: pd.to_vec(),
        signs: vec![None; pd.len()],
        groups: Some(groups),
    }
    .into_diagram()
}

/// Canonical text with 1-based arcs; round-trips through [`parse_pd`].
pub fn serialize_pd(d: &LinkDiagram) -> String {
    let mu = d.mu();
    let mut passes_under = vec![false; mu];
    for x in 0..d.crossing_count() {
        passes_under[d.under_component(x)] = true;
    }
    let mut parts = Vec::new();
    for (x, c) in d.crossings().iter().enumerate() {
        let name = if passes_under[d.over_component(x)] {
            "X"
        } else if c.sign > 0 {
            "Xp"
        } else {
            "Xm"
        };
        let [a, b, cc, e] = c.arcs.map(|v| v + 1);
        parts.push(format!("{name}[{a},{b},{cc},{e}]"));
    }
    for c in 0..mu {
        if d.is_free(c) {
            parts.push("C[]".into());
        } else {
            let arcs: Vec<String> = d.component_edges(c).map(|e| (e + 1).to_string()).collect();
            parts.push(format!("C[{}]", arcs.join(",")));
        }
    }
    parts.join(" ")
}
