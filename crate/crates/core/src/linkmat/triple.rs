//! Three-component theory: triples, the map `f3` onto `(Z2)^3 ⋊ S3` and
//! the ten orbit types.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::LinkingMatrix;
use crate::error::{Error, Result};
use crate::group::{Permutation, Subgroup, WhittenElement};

/// `(z1, z2, z3) = (A23, A13, A12)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct Triple {
    pub z: [i64; 3],
}

impl From<[i64; 3]> for Triple {
    fn from(z: [i64; 3]) -> Self {
        Triple { z }
    }
}

impl From<Triple> for [i64; 3] {
    fn from(t: Triple) -> Self {
        t.z
    }
}

impl Triple {
    pub fn new(z1: i64, z2: i64, z3: i64) -> Self {
        Triple { z: [z1, z2, z3] }
    }

    pub fn from_matrix(a: &LinkingMatrix) -> Result<Self> {
        if a.mu() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: a.mu(),
            });
        }
        Ok(Triple::new(a.get(1, 2), a.get(0, 2), a.get(0, 1)))
    }

    pub fn to_matrix(self) -> LinkingMatrix {
        let [z1, z2, z3] = self.z;
        LinkingMatrix::from_upper(3, &[z3, z2, z1]).expect("3x3")
    }
}

/// Element `(δ1, δ2, δ3, p)` of `(Z2)^3 ⋊ S3`, acting by `z_i -> δ_i z_{p(i)}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImageElement3 {
    pub delta: [i8; 3],
    pub perm: Permutation,
}

impl ImageElement3 {
    pub fn new(delta: [i8; 3], perm: Permutation) -> Result<Self> {
        if perm.degree() != 3 || delta.iter().any(|&d| d != 1 && d != -1) {
            return Err(Error::InvalidElement(format!("{delta:?} {perm}")));
        }
        Ok(Self { delta, perm })
    }

    /// `d1, d2, d3` and a cycle string such as `(12)` or `e`.
    pub fn from_parts(d: [i8; 3], cycles: &str) -> Result<Self> {
        Self::new(d, Permutation::parse_cycles(3, cycles)?)
    }

    pub fn identity() -> Self {
        Self {
            delta: [1; 3],
            perm: Permutation::identity(3),
        }
    }

    /// Same convention as [`WhittenElement::compose`].
    pub fn compose(&self, other: &ImageElement3) -> ImageElement3 {
        let mut delta = [1i8; 3];
        for (i, d) in delta.iter_mut().enumerate() {
            *d = self.delta[i] * other.delta[self.perm.apply(i)];
        }
        ImageElement3 {
            delta,
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn act(&self, t: Triple) -> Triple {
        let mut z = [0; 3];
        for (i, zi) in z.iter_mut().enumerate() {
            *zi = i64::from(self.delta[i]) * t.z[self.perm.apply(i)];
        }
        Triple { z }
    }
}

impl fmt::Display for ImageElement3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.delta;
        write!(f, "({a},{b},{c},{})", self.perm)
    }
}

impl fmt::Debug for ImageElement3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `f3(ε0, ε1, ε2, ε3, p) = (ε1 ε, ε2 ε, ε3 ε, p)` with `ε = ε0 ε1 ε2 ε3`.
pub fn f3(g: &WhittenElement) -> Result<ImageElement3> {
    if g.mu() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: g.mu(),
        });
    }
    let e = g.eps();
    let eps = g.eps0() * e[0] * e[1] * e[2];
    Ok(ImageElement3 {
        delta: [e[0] * eps, e[1] * eps, e[2] * eps],
        perm: g.perm().clone(),
    })
}

/// The two elements over `d`: `(δ1δ2δ3, ±δ1, ±δ2, ±δ3, p)`.
pub fn f3_preimage(d: &ImageElement3) -> [WhittenElement; 2] {
    let [a, b, c] = d.delta;
    let e0 = a * b * c;
    let plus = WhittenElement::new(e0, vec![a, b, c], d.perm.clone()).expect("valid signs");
    let minus = WhittenElement::new(e0, vec![-a, -b, -c], d.perm.clone()).expect("valid signs");
    [plus, minus]
}

/// All 48 elements of `(Z2)^3 ⋊ S3`, sorted.
pub fn image_group_3() -> Vec<ImageElement3> {
    let mut out = Vec::with_capacity(48);
    for bits in 0..8u8 {
        let d = |k: u8| if bits & (1 << (2 - k)) != 0 { -1 } else { 1 };
        for p in Permutation::all(3) {
            out.push(ImageElement3 {
                delta: [d(0), d(1), d(2)],
                perm: p,
            });
        }
    }
    out.sort();
    out
}

/// The ten orbit types of triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleForm {
    Zero,
    A00,
    AMinusA0,
    AA0,
    AB0,
    AAMinusA,
    AAA,
    ABMinusB,
    ABB,
    ABC,
}

impl TripleForm {
    pub const ALL: [TripleForm; 10] = [
        TripleForm::Zero,
        TripleForm::A00,
        TripleForm::AMinusA0,
        TripleForm::AA0,
        TripleForm::AB0,
        TripleForm::AAMinusA,
        TripleForm::AAA,
        TripleForm::ABMinusB,
        TripleForm::ABB,
        TripleForm::ABC,
    ];

    /// Representative with `a, b, c = 1, 2, 3`.
    pub fn representative(self) -> Triple {
        match self {
            TripleForm::Zero => Triple::new(0, 0, 0),
            TripleForm::A00 => Triple::new(1, 0, 0),
            TripleForm::AMinusA0 => Triple::new(1, -1, 0),
            TripleForm::AA0 => Triple::new(1, 1, 0),
            TripleForm::AB0 => Triple::new(1, 2, 0),
            TripleForm::AAMinusA => Triple::new(1, 1, -1),
            TripleForm::AAA => Triple::new(1, 1, 1),
            TripleForm::ABMinusB => Triple::new(1, 2, -2),
            TripleForm::ABB => Triple::new(1, 2, 2),
            TripleForm::ABC => Triple::new(1, 2, 3),
        }
    }

    /// Exact pattern match, without permuting coordinates.
    pub fn detect(t: Triple) -> Option<TripleForm> {
        let [a, b, c] = t.z;
        let nz = t.z.iter().filter(|&&x| x != 0).count();
        match nz {
            0 => Some(TripleForm::Zero),
            1 if a != 0 => Some(TripleForm::A00),
            2 if c == 0 => Some(if a == -b {
                TripleForm::AMinusA0
            } else if a == b {
                TripleForm::AA0
            } else {
                TripleForm::AB0
            }),
            3 => {
                if a.abs() == b.abs() && b.abs() == c.abs() {
                    if a == b && b == c {
                        Some(TripleForm::AAA)
                    } else if a == b && c == -a {
                        Some(TripleForm::AAMinusA)
                    } else {
                        None
                    }
                } else if b.abs() == c.abs() {
                    Some(if b == c {
                        TripleForm::ABB
                    } else {
                        TripleForm::ABMinusB
                    })
                } else if a.abs() != b.abs() && a.abs() != c.abs() {
                    Some(TripleForm::ABC)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Stabilizer order in `Γ3`.
    pub fn gamma_stabilizer_order(self) -> usize {
        2 * self.image_stabilizer().len()
    }

    /// Stabilizer of the form inside `(Z2)^3 ⋊ S3`, as tabulated.
    pub fn image_stabilizer(self) -> Vec<ImageElement3> {
        let all = image_group_3();
        let pick = |f: &dyn Fn(&ImageElement3) -> bool| -> Vec<ImageElement3> {
            all.iter().filter(|g| f(g)).cloned().collect()
        };
        let is = |g: &ImageElement3, cyc: &[&str]| cyc.iter().any(|c| g.perm.to_string() == *c);
        let mut out = match self {
            TripleForm::Zero => all.clone(),
            TripleForm::A00 => pick(&|g| g.delta[0] == 1 && is(g, &["e", "(23)"])),
            TripleForm::AMinusA0 => close(&[
                ImageElement3::from_parts([1, 1, -1], "e").unwrap(),
                ImageElement3::from_parts([-1, -1, 1], "(12)").unwrap(),
            ]),
            TripleForm::AA0 => pick(&|g| g.delta[..2] == [1, 1] && is(g, &["e", "(12)"])),
            TripleForm::AB0 => pick(&|g| g.delta[..2] == [1, 1] && is(g, &["e"])),
            TripleForm::AAMinusA => s_aa_minus_a(),
            TripleForm::AAA => pick(&|g| g.delta == [1, 1, 1]),
            TripleForm::ABMinusB => close(&[ImageElement3::from_parts([1, -1, -1], "(23)").unwrap()]),
            TripleForm::ABB => pick(&|g| g.delta == [1, 1, 1] && is(g, &["e", "(23)"])),
            TripleForm::ABC => vec![ImageElement3::identity()],
        };
        out.sort();
        out
    }
}

impl fmt::Display for TripleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleForm::Zero => "(0,0,0)",
            TripleForm::A00 => "(a,0,0)",
            TripleForm::AMinusA0 => "(a,-a,0)",
            TripleForm::AA0 => "(a,a,0)",
            TripleForm::AB0 => "(a,b,0)",
            TripleForm::AAMinusA => "(a,a,-a)",
            TripleForm::AAA => "(a,a,a)",
            TripleForm::ABMinusB => "(a,b,-b)",
            TripleForm::ABB => "(a,b,b)",
            TripleForm::ABC => "(a,b,c)",
        })
    }
}

fn close(gens: &[ImageElement3]) -> Vec<ImageElement3> {
    let mut set = vec![ImageElement3::identity()];
    let mut i = 0;
    while i < set.len() {
        for g in gens {
            let x = set[i].compose(g);
            if !set.contains(&x) {
                set.push(x);
            }
        }
        i += 1;
    }
    set.sort();
    set
}

/// The six-element stabilizer of `(a, a, -a)`.
pub fn s_aa_minus_a() -> Vec<ImageElement3> {
    let mut v: Vec<ImageElement3> = [
        ([1, 1, 1], "e"),
        ([1, 1, 1], "(12)"),
        ([1, -1, -1], "(23)"),
        ([-1, 1, -1], "(13)"),
        ([1, -1, -1], "(123)"),
        ([-1, 1, -1], "(132)"),
    ]
    .iter()
    .map(|(d, p)| ImageElement3::from_parts(*d, p).unwrap())
    .collect();
    v.sort();
    v
}

/// Orbit type of `t` and a pure permutation `γ0` with `γ0 · t` in that form.
///
/// Candidates are tried by number of moved labels, then in canonical order,
/// so transpositions win over 3-cycles.
pub fn classify_triple(t: Triple) -> (TripleForm, WhittenElement) {
    let mut perms = Permutation::all(3);
    perms.sort_by_key(|p| p.images().enumerate().filter(|(i, q)| i != q).count());
    for p in perms {
        let g = ImageElement3 {
            delta: [1; 3],
            perm: p.clone(),
        };
        if let Some(form) = TripleForm::detect(g.act(t)) {
            return (form, WhittenElement::pure_perm(p));
        }
    }
    unreachable!("every triple has an orbit type")
}

/// Stabilizer of a 3x3 matrix from the orbit-type table.
pub fn stabilizer_structured_3(a: &LinkingMatrix) -> Result<Subgroup> {
    let t = Triple::from_matrix(a)?;
    let (form, g0) = classify_triple(t);
    let elements: Vec<WhittenElement> = form
        .image_stabilizer()
        .iter()
        .flat_map(f3_preimage)
        .collect();
    let stab = Subgroup::from_elements(3, elements)?;
    stab.conjugate(&g0.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_gamma;
    use crate::linkmat::{act_matrix, stabilizer_bruteforce};

    #[test]
    fn matrix_correspondence() {
        let m = LinkingMatrix::parse("0,-1,-1/-1,0,1/-1,1,0").unwrap();
        let t = Triple::from_matrix(&m).unwrap();
        assert_eq!(t, Triple::new(1, -1, -1));
        assert_eq!(t.to_matrix(), m);
    }

    #[test]
    fn f3_kernel() {
        let ker: Vec<String> = enumerate_gamma(3)
            .unwrap()
            .iter()
            .filter(|g| f3(g).unwrap() == ImageElement3::identity())
            .map(|g| g.to_string())
            .collect();
        assert_eq!(ker, vec!["(1,1,1,1,e)", "(1,-1,-1,-1,e)"]);
    }

    #[test]
    fn image_action_matches_matrix_action() {
        let t = Triple::new(1, -2, 3);
        for g in enumerate_gamma(3).unwrap() {
            let lhs = f3(&g).unwrap().act(t).to_matrix();
            let rhs = act_matrix(&g, &t.to_matrix()).unwrap();
            assert_eq!(lhs, rhs, "{g}");
        }
    }

    #[test]
    fn preimages_map_back() {
        for d in image_group_3() {
            for g in f3_preimage(&d) {
                assert_eq!(f3(&g).unwrap(), d);
            }
        }
    }

    #[test]
    fn image_stabilizers_fix_representatives() {
        for form in TripleForm::ALL {
            let rep = form.representative();
            assert_eq!(TripleForm::detect(rep), Some(form));
            for g in form.image_stabilizer() {
                assert_eq!(g.act(rep), rep, "{form} {g}");
            }
        }
    }

    #[test]
    fn seven_three_one_triple_uses_thirteen() {
        let (form, g0) = classify_triple(Triple::new(1, -1, -1));
        assert_eq!(form, TripleForm::AAMinusA);
        assert_eq!(g0.to_string(), "(1,1,1,1,(13))");
    }

    #[test]
    fn small_structured_equals_bruteforce() {
        for t in [Triple::new(2, 0, 0), Triple::new(0, 3, -3), Triple::new(-1, 2, 2)] {
            let m = t.to_matrix();
            let s = stabilizer_structured_3(&m).unwrap();
            let b = stabilizer_bruteforce(&m).unwrap();
            assert!(s.same_elements(&b), "{t:?}");
        }
    }
}
