//! Embedded table of prime links with 2 to 4 components and at most eight
//! crossings, with calibrations and known symmetry groups.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::diagram::{parse_pd_labeled, LinkDiagram};
use crate::error::{Error, Result};
use crate::group::{Permutation, Subgroup, WhittenElement};
use crate::invariants::{homflypt, jones, LaurentPoly, LaurentPoly2};
use crate::linkmat::{stabilizer_bruteforce, LinkingMatrix};
use crate::sym_filter::{sigma_prime, FilterOptions, FilterReport};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming a census file to use instead of the
/// embedded one.
pub const CENSUS_ENV: &str = "WHITTEN_CENSUS";

const EMBEDDED: &str = include_str!("../../data/census.json");

/// `new_i = ±K_{perm(i)}` applied to the source diagram, mirrored first if
/// `mirror` is set. `perm` is 1-based one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Calibration {
    #[serde(default)]
    pub mirror: bool,
    pub flips: Vec<i8>,
    pub perm: Vec<usize>,
}

impl Calibration {
    pub fn identity(mu: usize) -> Self {
        Calibration {
            mirror: false,
            flips: vec![1; mu],
            perm: (1..=mu).collect(),
        }
    }

    pub fn element(&self) -> Result<WhittenElement> {
        let e0 = if self.mirror { -1 } else { 1 };
        WhittenElement::new(e0, self.flips.clone(), Permutation::from_one_line(&self.perm)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CalibrationLevel {
    /// Pinned by a reference linking matrix or reference polynomials.
    Exact,
    /// Only determined up to conjugacy in the Whitten group.
    Conjugacy,
}

/// A polynomial of `γ·L` for the calibrated link `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferencePolynomial {
    pub gamma: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jones: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homflypt: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkRecord {
    pub rolfsen: String,
    pub thistlethwaite: String,
    pub mu: usize,
    pub crossings: usize,
    pub alternating: bool,
    pub pd: Vec<[usize; 4]>,
    /// Arc label to component label (1-based).
    pub components: BTreeMap<usize, usize>,
    pub calibration: Calibration,
    pub calibration_level: CalibrationLevel,
    #[serde(default)]
    pub calibration_checks: Vec<String>,
    pub sigma_generators: Vec<String>,
    pub sigma_order: usize,
    #[serde(default)]
    pub sigma_name: Option<String>,
    #[serde(default)]
    pub linking_matrix_reference: Option<Vec<Vec<i64>>>,
    /// Jones polynomial of the calibrated diagram, in `t`.
    pub jones: String,
    pub homflypt: String,
    #[serde(default)]
    pub reference_polynomials: Vec<ReferencePolynomial>,
}

/// `(crossings, mu, index)` from a name like `7^2_5`.
pub fn parse_rolfsen(name: &str) -> Option<(usize, usize, usize)> {
    let (c, rest) = name.split_once('^')?;
    let (m, k) = rest.split_once('_')?;
    Some((c.parse().ok()?, m.parse().ok()?, k.parse().ok()?))
}

/// Canonical `C^mu_k` spelling; also accepts `C_k^mu` and Unicode
/// super/subscripts.
pub fn normalize_name(name: &str) -> String {
    let mut s = String::new();
    let mut mode = None;
    for ch in name.trim().chars() {
        let (digit, m) = match ch {
            '⁰'..='⁹' | '¹' | '²' | '³' => (superscript_digit(ch), Some('^')),
            '₀'..='₉' => (Some((ch as u32 - '₀' as u32) as u8), Some('_')),
            _ => (None, None),
        };
        match (digit, m) {
            (Some(d), Some(m)) => {
                if mode != Some(m) {
                    s.push(m);
                    mode = Some(m);
                }
                s.push((b'0' + d) as char);
            }
            _ => {
                mode = None;
                s.push(ch);
            }
        }
    }
    // C_k^mu -> C^mu_k
    if let Some((c, rest)) = s.split_once('_') {
        if let Some((k, m)) = rest.split_once('^') {
            return format!("{c}^{m}_{k}");
        }
    }
    s
}

fn superscript_digit(ch: char) -> Option<u8> {
    match ch {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴'..='⁹' => Some((ch as u32 - '⁴' as u32) as u8 + 4),
        _ => None,
    }
}

impl LinkRecord {
    /// The diagram as stored, before calibration.
    pub fn source_diagram(&self) -> Result<LinkDiagram> {
        if self.pd.is_empty() {
            return Ok(LinkDiagram::unlink(self.mu));
        }
        parse_pd_labeled(&self.pd, &self.components)
    }

    pub fn calibration_element(&self) -> Result<WhittenElement> {
        self.calibration.element()
    }

    /// The calibrated diagram.
    pub fn diagram(&self) -> Result<LinkDiagram> {
        self.source_diagram()?.apply_whitten(&self.calibration_element()?)
    }

    pub fn generators(&self) -> Result<Vec<WhittenElement>> {
        self.sigma_generators.iter().map(|g| WhittenElement::parse(g)).collect()
    }

    /// The known symmetry group.
    pub fn sigma(&self) -> Result<Subgroup> {
        let gens = self.generators()?;
        Ok(Subgroup::generate(self.mu, &gens)?.with_generators(gens))
    }

    pub fn reference_matrix(&self) -> Result<Option<LinkingMatrix>> {
        self.linking_matrix_reference.clone().map(LinkingMatrix::new).transpose()
    }

    /// Cheap checks: the diagram parses, the name agrees with the counts,
    /// the calibrated matrix matches the reference matrix, and the group
    /// has the stated order inside the matrix stabilizer.
    pub fn structural_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut bad = |what: String| out.push(format!("{}: {what}", self.rolfsen));
        match parse_rolfsen(&self.rolfsen) {
            Some((c, m, _)) if c == self.crossings && m == self.mu => {}
            _ => bad(format!("name disagrees with {} crossings, {} components", self.crossings, self.mu)),
        }
        let d = match self.diagram() {
            Ok(d) => d,
            Err(e) => {
                bad(format!("diagram: {e}"));
                return out;
            }
        };
        if d.mu() != self.mu {
            bad(format!("diagram has {} components", d.mu()));
        }
        if d.crossing_count() != self.crossings {
            bad(format!("diagram has {} crossings", d.crossing_count()));
        }
        if d.is_alternating() != self.alternating {
            bad("alternating flag".into());
        }
        let lk = d.linking_matrix();
        match self.reference_matrix() {
            Ok(Some(m)) if m != lk => bad(format!("linking matrix {lk:?}, expected {m:?}")),
            Err(e) => bad(format!("reference matrix: {e}")),
            _ => {}
        }
        match self.sigma() {
            Ok(h) => {
                if h.order() != self.sigma_order {
                    bad(format!("group order {}, expected {}", h.order(), self.sigma_order));
                }
                match stabilizer_bruteforce(&lk) {
                    Ok(st) if !h.is_subgroup_of(&st) => bad("group is not inside the matrix stabilizer".into()),
                    Err(e) => bad(format!("stabilizer: {e}")),
                    _ => {}
                }
            }
            Err(e) => bad(format!("generators: {e}")),
        }
        out
    }

    /// Recomputes the stored Jones and HOMFLYPT polynomials and the
    /// reference polynomials of images.
    pub fn polynomial_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let d = match self.diagram() {
            Ok(d) => d,
            Err(e) => return vec![format!("{}: diagram: {e}", self.rolfsen)],
        };
        let check = |out: &mut Vec<String>, d: &LinkDiagram, j: Option<&str>, h: Option<&str>, what: &str| {
            if let Some(j) = j {
                match (LaurentPoly::parse(j, 't'), jones(d)) {
                    (Ok(want), Ok(got)) if want == got => {}
                    (Ok(_), Ok(got)) => out.push(format!("{}: Jones{what} is {}", self.rolfsen, got.display_with("t"))),
                    (Err(e), _) | (_, Err(e)) => out.push(format!("{}: Jones{what}: {e}", self.rolfsen)),
                }
            }
            if let Some(h) = h {
                match (LaurentPoly2::parse(h), homflypt(d)) {
                    (Ok(want), Ok(got)) if want == got => {}
                    (Ok(_), Ok(got)) => out.push(format!("{}: HOMFLYPT{what} is {got}", self.rolfsen)),
                    (Err(e), _) | (_, Err(e)) => out.push(format!("{}: HOMFLYPT{what}: {e}", self.rolfsen)),
                }
            }
        };
        check(&mut out, &d, Some(&self.jones), Some(&self.homflypt), "");
        for r in &self.reference_polynomials {
            match WhittenElement::parse(&r.gamma).and_then(|g| d.apply_whitten(&g)) {
                Ok(e) => check(&mut out, &e, r.jones.as_deref(), r.homflypt.as_deref(), &format!(" of {}", r.gamma)),
                Err(e) => out.push(format!("{}: reference {}: {e}", self.rolfsen, r.gamma)),
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Census {
    pub schema_version: u32,
    #[serde(default)]
    pub source: String,
    pub records: Vec<LinkRecord>,
}

/// Parses and structurally validates a census file.
pub fn load_census(path: &Path) -> Result<Vec<LinkRecord>> {
    Ok(Census::load(path)?.records)
}

impl Census {
    /// Parses without validation beyond the schema version.
    pub fn from_json(text: &str) -> Result<Census> {
        #[derive(Deserialize)]
        struct Version {
            schema_version: u32,
        }
        let v: Version = serde_json::from_str(text)?;
        if v.schema_version != SCHEMA_VERSION {
            return Err(Error::SchemaVersion(v.schema_version));
        }
        Ok(serde_json::from_str(text)?)
    }

    /// Parses and runs the structural checks, listing every offender.
    pub fn parse_validated(text: &str) -> Result<Census> {
        let c = Census::from_json(text)?;
        let problems = c.structural_problems();
        if problems.is_empty() {
            Ok(c)
        } else {
            Err(Error::CensusValidation(problems.join("\n")))
        }
    }

    pub fn load(path: &Path) -> Result<Census> {
        Census::parse_validated(&std::fs::read_to_string(path)?)
    }

    /// The census compiled into the library.
    pub fn embedded() -> &'static Census {
        static CENSUS: OnceLock<Census> = OnceLock::new();
        CENSUS.get_or_init(|| Census::from_json(EMBEDDED).expect("embedded census parses"))
    }

    /// The file named by `WHITTEN_CENSUS` if set, else the embedded census.
    pub fn from_env() -> Result<Census> {
        match std::env::var_os(CENSUS_ENV) {
            Some(p) if !p.is_empty() => Census::load(Path::new(&p)),
            _ => Ok(Census::embedded().clone()),
        }
    }

    pub fn structural_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for r in &self.records {
            if !seen.insert(&r.rolfsen) {
                out.push(format!("{}: duplicate record", r.rolfsen));
            }
            out.extend(r.structural_problems());
        }
        out
    }

    /// Every record check, polynomials included. Empty when all pass.
    pub fn verify(&self) -> Vec<String> {
        use rayon::prelude::*;
        let mut out = self.structural_problems();
        let poly: Vec<Vec<String>> = self.records.par_iter().map(|r| r.polynomial_problems()).collect();
        out.extend(poly.into_iter().flatten());
        out
    }

    /// Looks a link up by Rolfsen name (`7^2_5`, `7²₅`) or Thistlethwaite
    /// name (`7a2`, `L7a2`).
    pub fn get(&self, name: &str) -> Result<&LinkRecord> {
        let n = normalize_name(name);
        let th = name.trim().trim_start_matches('L');
        self.records
            .iter()
            .find(|r| r.rolfsen == n || r.thistlethwaite == th)
            .ok_or_else(|| Error::UnknownLink(name.to_string()))
    }

    pub fn ground_truth_sigma(&self, name: &str) -> Result<Subgroup> {
        self.get(name)?.sigma()
    }

    /// Runs the invariant filter on the calibrated diagram and compares
    /// with the known group.
    pub fn compare_to_truth(&self, name: &str, opts: &FilterOptions) -> Result<FilterReport> {
        let r = self.get(name)?;
        let mut report = sigma_prime(&r.diagram()?, opts)?;
        report.name = Some(r.rolfsen.clone());
        report.compare(&r.sigma()?);
        Ok(report)
    }

    pub fn cell(&self, crossings: usize, mu: usize) -> impl Iterator<Item = &LinkRecord> {
        self.records.iter().filter(move |r| r.crossings == crossings && r.mu == mu)
    }

    /// Number of oriented, labeled isotopy classes in a cell: the sum of
    /// the coset indices of the symmetry groups.
    pub fn count_link_types(&self, crossings: usize, mu: usize) -> Result<usize> {
        self.cell(crossings, mu).map(|r| Ok(r.sigma()?.coset_index())).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(normalize_name("7²₅"), "7^2_5");
        assert_eq!(normalize_name("8_10^3"), "8^3_10");
        assert_eq!(normalize_name("8^3_10"), "8^3_10");
        assert_eq!(parse_rolfsen("8^3_10"), Some((8, 3, 10)));
        assert_eq!(parse_rolfsen("8a1"), None);
    }

    #[test]
    fn embedded_loads() {
        let c = Census::embedded();
        assert_eq!(c.records.len(), 48);
        assert!(c.structural_problems().is_empty(), "{:?}", c.structural_problems());
        assert_eq!(c.get("7a2").unwrap().rolfsen, c.get("L7a2").unwrap().rolfsen);
        assert!(matches!(c.get("9^2_1"), Err(Error::UnknownLink(_))));
    }

    #[test]
    fn calibration_round_trip() {
        let cal = Calibration {
            mirror: true,
            flips: vec![1, -1, 1],
            perm: vec![1, 3, 2],
        };
        assert_eq!(cal.element().unwrap().to_string(), "(-1,1,-1,1,(23))");
        assert!(Calibration::identity(2).element().unwrap().is_identity());
    }

    #[test]
    fn schema_version_is_checked() {
        let text = r#"{"schema_version": 99, "records": []}"#;
        assert!(matches!(Census::from_json(text), Err(Error::SchemaVersion(99))));
    }

    #[test]
    fn validation_lists_offenders() {
        let mut c = Census::embedded().clone();
        c.records[3].sigma_order += 1;
        c.records[7].crossings += 1;
        let text = serde_json::to_string(&c).unwrap();
        let Err(Error::CensusValidation(msg)) = Census::parse_validated(&text) else { panic!() };
        for r in [&c.records[3], &c.records[7]] {
            assert!(msg.contains(&format!("{}:", r.rolfsen)), "{msg}");
        }
    }

    #[test]
    fn cells() {
        let c = Census::embedded();
        assert_eq!(c.count_link_types(2, 2).unwrap(), 2);
        assert_eq!(c.count_link_types(9, 2).unwrap(), 0);
    }
}
