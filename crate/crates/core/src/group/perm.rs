use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of component labels, stored 0-based in one-line form.
///
/// `images[i] = p(i)`. Display and serialization use the 1-based labels that
/// appear in link tables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    /// Builds a permutation from 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{one_line:?}")));
        }
        Self::from_images(one_line.iter().map(|&i| i - 1).collect())
    }

    /// Builds a permutation of degree `n` from 1-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || b == 0 || a > n || b > n || touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!("{cycles:?}")));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `e`, `(12)`, `(1243)` or `(14)(23)`.
    /// Digits are single component labels, so this covers degree up to 9.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "e" || t == "id" || t.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        for ch in t.chars() {
            match ch {
                '(' if current.is_none() => current = Some(Vec::new()),
                ')' => {
                    let c = current
                        .take()
                        .ok_or_else(|| Error::InvalidPermutation(text.to_string()))?;
                    cycles.push(c);
                }
                ',' | ' ' => {}
                d if d.is_ascii_digit() => match current.as_mut() {
                    Some(c) => c.push(d.to_digit(10).unwrap() as usize),
                    None => return Err(Error::InvalidPermutation(text.to_string())),
                },
                _ => return Err(Error::InvalidPermutation(text.to_string())),
            }
        }
        if current.is_some() {
            return Err(Error::InvalidPermutation(text.to_string()));
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `p(i)` for a 0-based index.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// The map `i -> outer(self(i))`.
    pub fn then(&self, outer: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), outer.degree());
        Permutation {
            images: self.images.iter().map(|&i| outer.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.apply(j);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycles of length > 1, 1-based, each starting at its least label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.apply(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Rank of the permutation in lexicographic order of one-line forms.
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        let mut used = 0u32;
        let mut fact = (1..n).product::<usize>().max(1);
        for (pos, &p) in self.images.iter().enumerate() {
            let smaller = (0..p).filter(|&q| used & (1 << q) == 0).count();
            rank += smaller * fact;
            used |= 1 << p;
            if pos + 1 < n {
                fact /= n - pos - 1;
            }
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Self {
        let mut avail: Vec<u8> = (0..n as u8).collect();
        let mut images = Vec::with_capacity(n);
        for pos in 0..n {
            let fact: usize = (1..(n - pos)).product::<usize>().max(1);
            let k = rank / fact;
            rank %= fact;
            images.push(avail.remove(k));
        }
        Self { images }
    }

    /// All permutations of degree `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let count: usize = (1..=n).product();
        (0..count).map(|r| Self::from_lex_rank(n, r)).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "(")?;
            for i in c {
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}
