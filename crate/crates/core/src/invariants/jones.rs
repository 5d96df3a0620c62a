//! Jones polynomial in `z = t = A^{-4}`.

use super::{kauffman_bracket_with, LaurentPoly, DEFAULT_MAX_CROSSINGS};
use crate::diagram::LinkDiagram;
use crate::error::Result;

pub fn jones(d: &LinkDiagram) -> Result<LaurentPoly> {
    jones_with(d, DEFAULT_MAX_CROSSINGS)
}

/// `(-A^3)^{-w} <D>` rewritten in `t`.
pub fn jones_with(d: &LinkDiagram, max_crossings: usize) -> Result<LaurentPoly> {
    let b = kauffman_bracket_with(d, max_crossings)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = b.shift(-6 * w).scale(sign);
    // A^k = t^{-k/4}; both sides keep doubled exponents
    Ok(LaurentPoly::from_terms(f.terms().map(|(e, c)| (-e / 4, c))))
}
