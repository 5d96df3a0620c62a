//! Linking matrices and their stabilizers in `Γ_μ`.

mod quad;
mod triple;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{enumerate_gamma, Subgroup, WhittenElement};

pub use quad::{f0, f4, f4_preimage, g0, stabilizer_structured_4, ImageElement4, Quad4, QuadType};
pub use triple::{
    classify_triple, f3, f3_preimage, image_group_3, s_aa_minus_a, stabilizer_structured_3,
    ImageElement3, Triple, TripleForm,
};

/// Symmetric integer matrix with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!("row {} has length {}", i + 1, row.len())));
            }
            if row[i] != 0 {
                return Err(Error::InvalidMatrix(format!("nonzero diagonal entry at {}", i + 1)));
            }
            for j in 0..n {
                if entries[j].len() == n && row[j] != entries[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "entries ({},{}) and ({},{}) differ",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn zero(mu: usize) -> Self {
        Self {
            entries: vec![vec![0; mu]; mu],
        }
    }

    /// Builds the matrix from its strict upper triangle, row by row.
    pub fn from_upper(mu: usize, upper: &[i64]) -> Result<Self> {
        if upper.len() != mu * (mu - 1) / 2 {
            return Err(Error::InvalidMatrix(format!(
                "expected {} upper-triangle entries, got {}",
                mu * (mu - 1) / 2,
                upper.len()
            )));
        }
        let mut m = Self::zero(mu);
        let mut k = 0;
        for i in 0..mu {
            for j in i + 1..mu {
                m.entries[i][j] = upper[k];
                m.entries[j][i] = upper[k];
                k += 1;
            }
        }
        Ok(m)
    }

    /// Parses rows separated by `/` or `;`, entries by `,` or whitespace.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Result<Vec<Vec<i64>>> = text
            .split(['/', ';'])
            .map(|row| {
                row.split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::InvalidMatrix(format!("bad entry `{t}`")))
                    })
                    .collect()
            })
            .collect();
        Self::new(rows?)
    }

    pub fn mu(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|&x| x == 0)
    }

    /// Half the sum of all entries: the overall linking number.
    pub fn total_linking(&self) -> i64 {
        self.entries.iter().flatten().sum::<i64>() / 2
    }
}

impl TryFrom<Vec<Vec<i64>>> for LinkingMatrix {
    type Error = Error;
    fn try_from(v: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<LinkingMatrix> for Vec<Vec<i64>> {
    fn from(m: LinkingMatrix) -> Self {
        m.entries
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "({})", rows.join(" / "))
    }
}

impl fmt::Debug for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Lk(γL)_ij = ε0 ε_i ε_j Lk(L)_{p(i) p(j)}`.
pub fn act_matrix(g: &WhittenElement, a: &LinkingMatrix) -> Result<LinkingMatrix> {
    let mu = a.mu();
    if g.mu() != mu {
        return Err(Error::DimensionMismatch {
            expected: mu,
            found: g.mu(),
        });
    }
    let e = g.eps();
    let p = g.perm();
    let mut out = LinkingMatrix::zero(mu);
    for i in 0..mu {
        for j in 0..mu {
            let s = i64::from(g.eps0() * e[i] * e[j]);
            out.entries[i][j] = s * a.entries[p.apply(i)][p.apply(j)];
        }
    }
    Ok(out)
}

/// All `γ` with `act_matrix(γ, a) = a`.
pub fn stabilizer_bruteforce(a: &LinkingMatrix) -> Result<Subgroup> {
    let mu = a.mu();
    let all = enumerate_gamma(mu)?;
    let keep: Vec<WhittenElement> = all
        .into_par_iter()
        .filter(|g| act_matrix(g, a).is_ok_and(|b| &b == a))
        .collect();
    Subgroup::from_elements(mu, keep)
}

/// Whether the stabilizer of a 3x3 matrix contains a mirroring element.
pub fn mirror_zero_linking_check(a: &LinkingMatrix) -> Result<bool> {
    if a.mu() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: a.mu(),
        });
    }
    Ok(stabilizer_bruteforce(a)?.elements().iter().any(|g| g.is_mirror()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> WhittenElement {
        WhittenElement::parse(s).unwrap()
    }

    #[test]
    fn parse_and_validate() {
        let m = LinkingMatrix::parse("0,-1,-1/-1,0,1/-1,1,0").unwrap();
        assert_eq!(m.mu(), 3);
        assert_eq!(m.total_linking(), -1);
        assert!(LinkingMatrix::parse("0,1/2,0").is_err());
        assert!(LinkingMatrix::parse("1,0/0,0").is_err());
        assert!(LinkingMatrix::parse("0,1,0/1,0").is_err());
    }

    #[test]
    fn json_rows() {
        let m = LinkingMatrix::from_upper(2, &[3]).unwrap();
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[0,3],[3,0]]");
        assert!(serde_json::from_str::<LinkingMatrix>("[[0,1],[2,0]]").is_err());
    }

    #[test]
    fn full_inversion_acts_trivially() {
        let m = LinkingMatrix::from_upper(3, &[1, -2, 3]).unwrap();
        assert_eq!(act_matrix(&el("(1,-1,-1,-1,e)"), &m).unwrap(), m);
        assert_eq!(act_matrix(&WhittenElement::identity(3), &m).unwrap(), m);
    }

    #[test]
    fn mirror_negates() {
        let m = LinkingMatrix::from_upper(2, &[2]).unwrap();
        let n = act_matrix(&el("(-1,1,1,e)"), &m).unwrap();
        assert_eq!(n.get(0, 1), -2);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(act_matrix(&el("(1,1,1,e)"), &LinkingMatrix::zero(3)).is_err());
    }

    #[test]
    fn zero_matrix_stabilizer_is_everything() {
        assert_eq!(stabilizer_bruteforce(&LinkingMatrix::zero(3)).unwrap().order(), 96);
        assert!(mirror_zero_linking_check(&LinkingMatrix::zero(3)).unwrap());
    }

    #[test]
    fn mirror_check_examples() {
        let t = Triple::new(1, 2, 3).to_matrix();
        assert!(!mirror_zero_linking_check(&t).unwrap());
        let t = Triple::new(1, 0, 0).to_matrix();
        assert!(mirror_zero_linking_check(&t).unwrap());
    }
}
