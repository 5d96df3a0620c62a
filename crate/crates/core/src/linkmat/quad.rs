//! Four-component matrices with `A14 = A23 = 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::LinkingMatrix;
use crate::error::{Error, Result};
use crate::group::{Permutation, Subgroup, WhittenElement};

/// `(z1, z2, z3, z4) = (A12, A24, A31, A43)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct Quad4 {
    pub z: [i64; 4],
}

impl From<[i64; 4]> for Quad4 {
    fn from(z: [i64; 4]) -> Self {
        Quad4 { z }
    }
}

impl From<Quad4> for [i64; 4] {
    fn from(q: Quad4) -> Self {
        q.z
    }
}

impl Quad4 {
    pub fn new(z1: i64, z2: i64, z3: i64, z4: i64) -> Self {
        Quad4 {
            z: [z1, z2, z3, z4],
        }
    }

    pub fn from_matrix(a: &LinkingMatrix) -> Result<Self> {
        if a.mu() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: a.mu(),
            });
        }
        if a.get(0, 3) != 0 || a.get(1, 2) != 0 {
            return Err(Error::UnsupportedPattern(format!(
                "{a} needs zero entries at (1,4) and (2,3)"
            )));
        }
        Ok(Quad4::new(a.get(0, 1), a.get(1, 3), a.get(2, 0), a.get(3, 2)))
    }

    pub fn to_matrix(self) -> LinkingMatrix {
        let [z1, z2, z3, z4] = self.z;
        // upper triangle order: 12 13 14 23 24 34
        LinkingMatrix::from_upper(4, &[z1, z3, 0, 0, z2, z4]).expect("4x4")
    }
}

fn perm4(s: &str) -> Permutation {
    Permutation::parse_cycles(4, s).expect("valid cycle")
}

const G0_TABLE: [(&str, &str); 8] = [
    ("e", "e"),
    ("(14)", "(12)(34)"),
    ("(23)", "(13)(24)"),
    ("(14)(23)", "(14)(23)"),
    ("(12)(34)", "(23)"),
    ("(13)(24)", "(14)"),
    ("(1243)", "(1243)"),
    ("(1342)", "(1342)"),
];

/// Permutations preserving the zero pattern of a [`Quad4`] matrix.
pub fn g0() -> Vec<Permutation> {
    G0_TABLE.iter().map(|(p, _)| perm4(p)).collect()
}

/// How `p ∈ G0` permutes the four quad coordinates.
pub fn f0(p: &Permutation) -> Result<Permutation> {
    G0_TABLE
        .iter()
        .find(|(a, _)| perm4(a) == *p)
        .map(|(_, b)| perm4(b))
        .ok_or_else(|| Error::NotInG0(p.to_string()))
}

fn f0_inverse(q: &Permutation) -> Result<Permutation> {
    G0_TABLE
        .iter()
        .find(|(_, b)| perm4(b) == *q)
        .map(|(a, _)| perm4(a))
        .ok_or_else(|| Error::NotInG0(q.to_string()))
}

/// `(δ1..δ4, q)` acting on quads by `z_i -> δ_i z_{q(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImageElement4 {
    pub delta: [i8; 4],
    pub perm: Permutation,
}

impl ImageElement4 {
    pub fn from_parts(delta: [i8; 4], cycles: &str) -> Result<Self> {
        let perm = Permutation::parse_cycles(4, cycles)?;
        f0_inverse(&perm)?;
        if delta.iter().any(|&d| d != 1 && d != -1) || delta[3] != delta[0] * delta[1] * delta[2] {
            return Err(Error::InvalidElement(format!("{delta:?} {cycles}")));
        }
        Ok(Self { delta, perm })
    }

    pub fn compose(&self, other: &ImageElement4) -> ImageElement4 {
        let mut delta = [1i8; 4];
        for (i, d) in delta.iter_mut().enumerate() {
            *d = self.delta[i] * other.delta[self.perm.apply(i)];
        }
        ImageElement4 {
            delta,
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn act(&self, q: Quad4) -> Quad4 {
        let mut z = [0; 4];
        for (i, zi) in z.iter_mut().enumerate() {
            *zi = i64::from(self.delta[i]) * q.z[self.perm.apply(i)];
        }
        Quad4 { z }
    }
}

impl fmt::Display for ImageElement4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.delta;
        write!(f, "({a},{b},{c},{d},{})", self.perm)
    }
}

impl fmt::Debug for ImageElement4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(ε0ε1ε2, ε0ε2ε4, ε0ε1ε3, ε0ε3ε4, f0(p))` for `p ∈ G0`.
pub fn f4(g: &WhittenElement) -> Result<ImageElement4> {
    if g.mu() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: g.mu(),
        });
    }
    let e0 = g.eps0();
    let e = g.eps();
    Ok(ImageElement4 {
        delta: [
            e0 * e[0] * e[1],
            e0 * e[1] * e[3],
            e0 * e[0] * e[2],
            e0 * e[2] * e[3],
        ],
        perm: f0(g.perm())?,
    })
}

/// The four elements over `d`, indexed by the free signs `ε1, ε2`.
pub fn f4_preimage(d: &ImageElement4) -> Result<[WhittenElement; 4]> {
    let p = f0_inverse(&d.perm)?;
    let [d1, d2, d3, _] = d.delta;
    let make = |e1: i8, e2: i8| {
        WhittenElement::new(e1 * e2 * d1, vec![e1, e2, e2 * d1 * d3, e1 * d1 * d2], p.clone())
            .expect("valid signs")
    };
    Ok([make(1, 1), make(1, -1), make(-1, 1), make(-1, -1)])
}

/// The quad types handled by the structured path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuadType {
    AAAA,
    AAMinusAA,
    AMinusAMinusAA,
}

impl QuadType {
    pub fn detect(q: Quad4) -> Option<QuadType> {
        let [a, b, c, d] = q.z;
        if a == 0 {
            return None;
        }
        match (b == a, c == a, c == -a, d == a, b == -a) {
            (true, true, _, true, _) => Some(QuadType::AAAA),
            (true, _, true, true, _) => Some(QuadType::AAMinusAA),
            (_, _, true, true, true) => Some(QuadType::AMinusAMinusAA),
            _ => None,
        }
    }

    /// The eight-element stabilizer in the image group.
    pub fn image_stabilizer(self) -> Vec<ImageElement4> {
        let rows: Vec<([i8; 4], &str)> = match self {
            QuadType::AAAA => G0_TABLE.iter().map(|(_, q)| ([1, 1, 1, 1], *q)).collect(),
            QuadType::AAMinusAA => vec![
                ([1, 1, 1, 1], "e"),
                ([1, 1, 1, 1], "(14)"),
                ([1, -1, -1, 1], "(23)"),
                ([1, 1, -1, -1], "(12)(34)"),
                ([-1, 1, -1, 1], "(13)(24)"),
                ([1, -1, -1, 1], "(14)(23)"),
                ([1, 1, -1, -1], "(1243)"),
                ([-1, 1, -1, 1], "(1342)"),
            ],
            QuadType::AMinusAMinusAA => vec![
                ([1, 1, 1, 1], "e"),
                ([1, 1, 1, 1], "(14)"),
                ([1, 1, 1, 1], "(23)"),
                ([1, 1, 1, 1], "(14)(23)"),
                ([-1, -1, -1, -1], "(12)(34)"),
                ([-1, -1, -1, -1], "(13)(24)"),
                ([-1, -1, -1, -1], "(1243)"),
                ([-1, -1, -1, -1], "(1342)"),
            ],
        };
        let mut v: Vec<ImageElement4> = rows
            .into_iter()
            .map(|(d, q)| ImageElement4::from_parts(d, q).expect("table entry"))
            .collect();
        v.sort();
        v
    }
}

/// The 32-element stabilizer of a supported quad matrix.
pub fn stabilizer_structured_4(a: &LinkingMatrix) -> Result<Subgroup> {
    let q = Quad4::from_matrix(a)?;
    let ty = QuadType::detect(q)
        .ok_or_else(|| Error::UnsupportedPattern(format!("quad {:?}", q.z)))?;
    let mut elements = Vec::with_capacity(32);
    for d in ty.image_stabilizer() {
        elements.extend(f4_preimage(&d)?);
    }
    Subgroup::from_elements(4, elements)
}
