use std::sync::{Arc, OnceLock};

use super::element::WhittenElement;
use super::perm::Permutation;
use crate::error::{Error, Result};

pub const MAX_MU: usize = 5;

/// `|Γ_μ| = 2^{μ+1} μ!`.
pub fn gamma_order(mu: usize) -> usize {
    (1usize << (mu + 1)) * (1..=mu).product::<usize>()
}

/// All elements of `Γ_μ` in canonical order.
pub fn enumerate_gamma(mu: usize) -> Result<Vec<WhittenElement>> {
    check_mu(mu)?;
    Ok((0..gamma_order(mu))
        .map(|i| WhittenElement::from_index(mu, i))
        .collect())
}

pub(crate) fn check_mu(mu: usize) -> Result<()> {
    if (1..=MAX_MU).contains(&mu) {
        Ok(())
    } else {
        Err(Error::UnsupportedMu(mu))
    }
}

/// Dense multiplication and inverse tables for `Γ_μ` over canonical indices.
pub struct GammaTable {
    pub mu: usize,
    pub order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

struct Packed {
    bits: usize,
    perm: [u8; MAX_MU],
}

impl GammaTable {
    fn build(mu: usize) -> Self {
        let order = gamma_order(mu);
        let fact: usize = (1..=mu).product();
        let perms = Permutation::all(mu);
        let packed: Vec<Packed> = (0..order)
            .map(|i| {
                let mut perm = [0u8; MAX_MU];
                for (k, p) in perms[i % fact].images().enumerate() {
                    perm[k] = p as u8;
                }
                Packed {
                    bits: i / fact,
                    perm,
                }
            })
            .collect();
        // lex rank of a one-line array via the canonical list
        let rank_of = |p: &[u8]| -> usize {
            let n = p.len();
            let mut rank = 0;
            let mut used = 0u32;
            let mut f = fact;
            for (pos, &v) in p.iter().enumerate() {
                f /= n - pos;
                let smaller = (0..v).filter(|&q| used & (1 << q) == 0).count();
                rank += smaller * f;
                used |= 1 << v;
            }
            rank
        };
        let sign_bit = |bits: usize, i: usize| (bits >> (mu - 1 - i)) & 1;
        let mut mul = vec![0u16; order * order];
        for a in 0..order {
            let pa = &packed[a];
            for b in 0..order {
                let pb = &packed[b];
                let mut bits = ((pa.bits >> mu) ^ (pb.bits >> mu)) & 1;
                let mut perm = [0u8; MAX_MU];
                for i in 0..mu {
                    let j = pa.perm[i] as usize;
                    bits = (bits << 1) | (sign_bit(pa.bits, i) ^ sign_bit(pb.bits, j));
                    perm[i] = pb.perm[j];
                }
                mul[a * order + b] = (bits * fact + rank_of(&perm[..mu])) as u16;
            }
        }
        let mut inv = vec![0u16; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        GammaTable {
            mu,
            order,
            mul,
            inv,
        }
    }

    /// Shared table for `Γ_μ`; built once per process.
    pub fn get(mu: usize) -> Result<Arc<GammaTable>> {
        check_mu(mu)?;
        static TABLES: [OnceLock<Arc<GammaTable>>; MAX_MU] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        Ok(TABLES[mu - 1]
            .get_or_init(|| Arc::new(GammaTable::build(mu)))
            .clone())
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element(&self, i: usize) -> WhittenElement {
        WhittenElement::from_index(self.mu, i)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let expected = [4, 16, 96, 768, 7680];
        for (mu, &n) in (1..=5).zip(expected.iter()) {
            assert_eq!(gamma_order(mu), n);
        }
        assert_eq!(enumerate_gamma(1).unwrap().len(), 4);
        assert_eq!(enumerate_gamma(2).unwrap().len(), 16);
        assert_eq!(enumerate_gamma(4).unwrap().len(), 768);
        assert!(enumerate_gamma(0).is_err());
        assert!(enumerate_gamma(6).is_err());
    }

    #[test]
    fn table_matches_compose() {
        for mu in 1..=3 {
            let t = GammaTable::get(mu).unwrap();
            let els = enumerate_gamma(mu).unwrap();
            for a in 0..t.order {
                for b in 0..t.order {
                    let c = els[a].compose(&els[b]).unwrap();
                    assert_eq!(t.mul(a, b), c.index());
                }
                assert_eq!(t.inv(a), els[a].inverse().index());
            }
        }
    }
}
