use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A Whitten group element `(eps0, eps_1..eps_mu, p)`.
///
/// `eps0 = -1` mirrors the link, `eps[i] = -1` reverses the component that
/// ends up with label `i + 1`, and `perm` relabels components so that the new
/// component `i` is the old component `perm(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WhittenElement {
    eps0: i8,
    eps: Vec<i8>,
    perm: Permutation,
}

fn check_sign(s: i8) -> Result<i8> {
    if s == 1 || s == -1 {
        Ok(s)
    } else {
        Err(Error::InvalidElement(format!("sign {s} is not +1 or -1")))
    }
}

impl WhittenElement {
    pub fn new(eps0: i8, eps: Vec<i8>, perm: Permutation) -> Result<Self> {
        check_sign(eps0)?;
        for &e in &eps {
            check_sign(e)?;
        }
        if eps.len() != perm.degree() {
            return Err(Error::DimensionMismatch {
                expected: eps.len(),
                found: perm.degree(),
            });
        }
        if eps.is_empty() {
            return Err(Error::InvalidElement("zero components".into()));
        }
        Ok(Self { eps0, eps, perm })
    }

    pub fn identity(mu: usize) -> Self {
        Self {
            eps0: 1,
            eps: vec![1; mu],
            perm: Permutation::identity(mu),
        }
    }

    /// Element with only a permutation part.
    pub fn pure_perm(perm: Permutation) -> Self {
        Self {
            eps0: 1,
            eps: vec![1; perm.degree()],
            perm,
        }
    }

    /// `(1, -1, ..., -1, e)`.
    pub fn pure_inversion(mu: usize) -> Self {
        Self {
            eps0: 1,
            eps: vec![-1; mu],
            perm: Permutation::identity(mu),
        }
    }

    pub fn mu(&self) -> usize {
        self.eps.len()
    }

    pub fn eps0(&self) -> i8 {
        self.eps0
    }

    pub fn eps(&self) -> &[i8] {
        &self.eps
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.eps0 == 1 && self.eps.iter().all(|&e| e == 1) && self.perm.is_identity()
    }

    pub fn is_mirror(&self) -> bool {
        self.eps0 == -1
    }

    /// Group law: `(eps0 eps0', eps_i eps'_{p(i)}, q∘p)` for `self = (eps, p)`,
    /// `other = (eps', q)`. Acting with the product equals acting with `other`
    /// first and then with `self`.
    pub fn compose(&self, other: &WhittenElement) -> Result<WhittenElement> {
        if self.mu() != other.mu() {
            return Err(Error::DimensionMismatch {
                expected: self.mu(),
                found: other.mu(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &WhittenElement) -> WhittenElement {
        let eps = (0..self.mu())
            .map(|i| self.eps[i] * other.eps[self.perm.apply(i)])
            .collect();
        WhittenElement {
            eps0: self.eps0 * other.eps0,
            eps,
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn inverse(&self) -> WhittenElement {
        let inv = self.perm.inverse();
        let eps = (0..self.mu()).map(|j| self.eps[inv.apply(j)]).collect();
        WhittenElement {
            eps0: self.eps0,
            eps,
            perm: inv,
        }
    }

    /// `g * self * g^{-1}`.
    pub fn conjugate_by(&self, g: &WhittenElement) -> WhittenElement {
        g.compose_unchecked(self).compose_unchecked(&g.inverse())
    }

    pub fn order(&self) -> usize {
        let id = WhittenElement::identity(self.mu());
        let mut x = self.clone();
        let mut k = 1;
        while x != id {
            x = x.compose_unchecked(self);
            k += 1;
        }
        k
    }

    /// Position of the element in the canonical enumeration of `Γ_μ`.
    pub fn index(&self) -> usize {
        let mu = self.mu();
        let mut bits = usize::from(self.eps0 == -1);
        for &e in &self.eps {
            bits = (bits << 1) | usize::from(e == -1);
        }
        let fact: usize = (1..=mu).product();
        bits * fact + self.perm.lex_rank()
    }

    /// Inverse of [`WhittenElement::index`].
    pub fn from_index(mu: usize, index: usize) -> Self {
        let fact: usize = (1..=mu).product();
        let bits = index / fact;
        let perm = Permutation::from_lex_rank(mu, index % fact);
        let eps0 = if (bits >> mu) & 1 == 1 { -1 } else { 1 };
        let eps = (0..mu)
            .map(|i| if (bits >> (mu - 1 - i)) & 1 == 1 { -1 } else { 1 })
            .collect();
        WhittenElement { eps0, eps, perm }
    }

    /// Parses `(1,-1,-1,e)` / `(1,1,-1,1,(123))`; the component count is the
    /// number of signs minus one.
    pub fn parse(text: &str) -> Result<Self> {
        let err = || Error::InvalidElement(text.to_string());
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(err)?;
        // The permutation is the tail after the last sign.
        let mut signs = Vec::new();
        let mut rest = inner.trim();
        while let Some(pos) = rest.find(',') {
            let (tok, tail) = (rest[..pos].trim(), &rest[pos + 1..]);
            match tok {
                "1" | "+1" => signs.push(1i8),
                "-1" => signs.push(-1i8),
                _ => break,
            }
            rest = tail.trim();
        }
        if signs.len() < 2 {
            return Err(err());
        }
        let mu = signs.len() - 1;
        let perm = Permutation::parse_cycles(mu, rest)?;
        WhittenElement::new(signs[0], signs[1..].to_vec(), perm)
    }

    fn sort_key(&self) -> (bool, Vec<bool>, Vec<usize>) {
        (
            self.eps0 == -1,
            self.eps.iter().map(|&e| e == -1).collect(),
            self.perm.one_line(),
        )
    }
}

/// Canonical order: `+1` sorts before `-1`, compared on `(eps0, eps, p)` with
/// the permutation in one-line form. This agrees with [`WhittenElement::index`].
impl Ord for WhittenElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mu()
            .cmp(&other.mu())
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for WhittenElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WhittenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.eps0)?;
        for e in &self.eps {
            write!(f, ",{e}")?;
        }
        write!(f, ",{})", self.perm)
    }
}

impl fmt::Debug for WhittenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementRepr(i8, Vec<i8>, Permutation);

impl Serialize for WhittenElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr(self.eps0, self.eps.clone(), self.perm.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for WhittenElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ElementRepr(e0, eps, perm) = ElementRepr::deserialize(d)?;
        WhittenElement::new(e0, eps, perm).map_err(serde::de::Error::custom)
    }
}
