//! Sparse Laurent polynomials with integer coefficients. Exponents are stored
//! doubled so half-integer powers stay exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One-variable Laurent polynomial; keys are doubled exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * x^(exp2 / 2)`.
    pub fn monomial(exp2: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp2, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp2: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp2).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp2);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(doubled exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp2: i64) -> i64 {
        self.terms.get(&exp2).copied().unwrap_or(0)
    }

    pub fn min_exp2(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp2(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `x -> x^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    /// `x -> x^k`, i.e. every exponent times `k`.
    pub fn scale_exponents(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Multiplies by `x^(exp2 / 2)`.
    pub fn shift(&self, exp2: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + exp2, c)))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * k)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact quotient; `None` when `divisor` does not divide `self`.
    /// The divisor's extreme coefficients must be `±1`, or division may
    /// fail even when the quotient is integral.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dmin, dmax) = (divisor.min_exp2()?, divisor.max_exp2()?);
        let lead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut q = LaurentPoly::zero();
        while let Some(rmax) = rem.max_exp2() {
            if rem.min_exp2()? - dmin > rmax - dmax {
                return None;
            }
            let c = rem.coeff(rmax);
            if c % lead != 0 {
                return None;
            }
            let t = LaurentPoly::monomial(rmax - dmax, c / lead);
            rem = &rem - &(&t * divisor);
            q = &q + &t;
        }
        Some(q)
    }

    /// Evaluates at `x = 1` when all exponents are integral.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Renders with variable `var`, writing `var^{k/2}` for odd doubled exponents.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = fmt_power(var, *e);
            push_term(&mut out, i == 0, *c, &mono);
        }
        out
    }

    /// Parses text like `z^{-15/2} - 2z^3 + 1` in variable `var`.
    pub fn parse(text: &str, var: char) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for t in split_terms(text)? {
            let (c, exps) = parse_term(&t, &[var])?;
            p.add_term(exps[0], c);
        }
        Ok(p)
    }
}

fn fmt_power(var: &str, e2: i64) -> String {
    match e2 {
        0 => String::new(),
        2 => var.to_string(),
        _ if e2 % 2 == 0 => format!("{var}^{}", e2 / 2),
        _ => format!("{var}^{{{}/2}}", e2),
    }
}

fn push_term(out: &mut String, first: bool, c: i64, mono: &str) {
    let sign = if c < 0 { "-" } else { "+" };
    if first {
        if c < 0 {
            out.push('-');
        }
    } else {
        out.push_str(&format!(" {sign} "));
    }
    let a = c.abs();
    if mono.is_empty() {
        out.push_str(&a.to_string());
    } else if a == 1 {
        out.push_str(mono);
    } else {
        out.push_str(&format!("{a}{mono}"));
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("z"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[i64; 2]> = self.terms().map(|(e, c)| [e, c]).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<[i64; 2]>::deserialize(d)?;
        Ok(LaurentPoly::from_terms(v.into_iter().map(|[e, c]| (e, c))))
    }
}

/// Two-variable Laurent polynomial in `(a, z)`; keys are doubled exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `coeff * a^(ea2/2) * z^(ez2/2)`.
    pub fn monomial(ea2: i64, ez2: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(ea2, ez2, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (a, z, c) in terms {
            p.add_term(a, z, c);
        }
        p
    }

    pub fn add_term(&mut self, ea2: i64, ez2: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry((ea2, ez2)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&(ea2, ez2));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.terms.iter().map(|(&(a, z), &c)| (a, z, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(a, z, c)| (a, z, c * k)))
    }

    /// Multiplies by `a^(ea2/2) z^(ez2/2)`.
    pub fn shift(&self, ea2: i64, ez2: i64) -> Self {
        Self::from_terms(self.terms().map(|(a, z, c)| (a + ea2, z + ez2, c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// `P(a, z) -> P(a^{-1}, -z)`, the mirror image for HOMFLYPT.
    pub fn mirror(&self) -> Self {
        Self::from_terms(self.terms().map(|(a, z, c)| {
            // z exponents are integral for HOMFLYPT values
            let sign = if (z / 2) % 2 == 0 { 1 } else { -1 };
            (-a, z, c * sign)
        }))
    }

    /// Substitutes `a = t^{ka/2}`, `z = poly`, producing a polynomial in `t`.
    /// Only non-negative `z` powers are handled directly; negative powers are
    /// divided out exactly.
    pub fn specialize(&self, ka: i64, z: &LaurentPoly) -> Option<LaurentPoly> {
        let min_z = self.terms().map(|(_, e, _)| e).min().unwrap_or(0).min(0);
        if min_z % 2 != 0 {
            return None;
        }
        let lift = (-min_z / 2) as u32;
        let mut total = LaurentPoly::zero();
        for (ea, ez, c) in self.terms() {
            if ez % 2 != 0 || ea % 2 != 0 {
                return None;
            }
            let zp = z.pow(((ez - min_z) / 2) as u32);
            let term = zp.shift(ka * ea / 2).scale(c);
            total = &total + &term;
        }
        total.div_exact(&z.pow(lift))
    }

    /// `z -> z` with `a = 1`: the Conway polynomial of the link.
    pub fn conway(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(_, z, c)| (z, c)))
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut items: Vec<_> = self.terms().collect();
        items.sort_by_key(|&(a, z, _)| (std::cmp::Reverse(z), std::cmp::Reverse(a)));
        for (i, (a, z, c)) in items.into_iter().enumerate() {
            let mut mono = fmt_power("a", a);
            mono.push_str(&fmt_power("z", z));
            push_term(&mut out, i == 0, c, &mono);
        }
        out
    }

    /// Parses text like `a^2z^4 + z^4/a^2 - 2/z^2 + 1/(a^2z^2)`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = LaurentPoly2::zero();
        for t in split_terms(text)? {
            let (c, exps) = parse_term(&t, &['a', 'z'])?;
            p.add_term(exps[0], exps[1], c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (a, z, c) in rhs.terms() {
            out.add_term(a, z, c);
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (a, z, c) in rhs.terms() {
            out.add_term(a, z, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (a1, z1, c1) in self.terms() {
            for (a2, z2, c2) in rhs.terms() {
                out.add_term(a1 + a2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[i64; 3]> = self.terms().map(|(a, z, c)| [a, z, c]).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<[i64; 3]>::deserialize(d)?;
        Ok(LaurentPoly2::from_terms(v.into_iter().map(|[a, z, c]| (a, z, c))))
    }
}

fn parse_err(text: &str, reason: &str) -> Error {
    Error::PdParse {
        token: text.to_string(),
        reason: format!("polynomial: {reason}"),
    }
}

/// Splits at top-level `+`/`-`, keeping the sign with each term.
fn split_terms(text: &str) -> Result<Vec<String>> {
    let s: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '−' { '-' } else { c })
        .collect();
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            _ => {}
        }
        let exponent_sign = matches!(prev, Some('^') | Some('{'));
        if (ch == '+' || ch == '-') && depth == 0 && !exponent_sign && !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    if depth != 0 {
        return Err(parse_err(text, "unbalanced brackets"));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

/// Parses one product term; returns the coefficient and doubled exponents.
fn parse_term(term: &str, vars: &[char]) -> Result<(i64, Vec<i64>)> {
    let chars: Vec<char> = term.chars().collect();
    let mut i = 0;
    let mut sign = 1;
    while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
        if chars[i] == '-' {
            sign = -sign;
        }
        i += 1;
    }
    let mut coeff: i64 = 1;
    let mut exps = vec![0i64; vars.len()];
    let mut denom = false;
    let mut saw_number = false;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let n: i64 = chars[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| parse_err(term, "bad number"))?;
            if denom {
                if n != 1 {
                    return Err(parse_err(term, "numeric denominators are unsupported"));
                }
            } else {
                coeff *= n;
                saw_number = true;
            }
        } else if ch == '*' || ch == '(' || ch == ')' {
            i += 1;
        } else if ch == '/' {
            denom = true;
            i += 1;
        } else if let Some(k) = vars.iter().position(|&v| v == ch) {
            i += 1;
            let mut e2 = 2;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let (val, used) = parse_exponent(&chars[i..]).ok_or_else(|| parse_err(term, "bad exponent"))?;
                e2 = val;
                i += used;
            }
            exps[k] += if denom { -e2 } else { e2 };
        } else {
            return Err(parse_err(term, &format!("unexpected `{ch}`")));
        }
    }
    let _ = saw_number;
    Ok((sign * coeff, exps))
}

/// Parses `3`, `-2`, `{-15/2}`, `(1/2)`; returns the doubled value and chars used.
fn parse_exponent(chars: &[char]) -> Option<(i64, usize)> {
    let (body, used) = match chars.first()? {
        '{' | '(' => {
            let close = chars.iter().position(|&c| c == '}' || c == ')')?;
            (chars[1..close].iter().collect::<String>(), close + 1)
        }
        _ => {
            let mut n = 0;
            if chars.first() == Some(&'-') {
                n = 1;
            }
            while n < chars.len() && chars[n].is_ascii_digit() {
                n += 1;
            }
            (chars[..n].iter().collect::<String>(), n)
        }
    };
    let body = body.replace('−', "-");
    let v = if let Some((num, den)) = body.split_once('/') {
        let num: i64 = num.parse().ok()?;
        match den {
            "2" => num,
            "1" => 2 * num,
            _ => return None,
        }
    } else {
        2 * body.parse::<i64>().ok()?
    };
    Some((v, used))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = LaurentPoly::monomial(2, 1);
        let one = LaurentPoly::one();
        let p = &x + &one;
        let sq = &p * &p;
        assert_eq!(sq, LaurentPoly::from_terms([(4, 1), (2, 2), (0, 1)]));
        assert_eq!(sq.div_exact(&p), Some(p.clone()));
        assert_eq!(LaurentPoly::monomial(2, 1).div_exact(&p), None);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn parse_half_integers() {
        let p = LaurentPoly::parse("z^{-15/2} - z^{-13/2} - z^{-9/2} - z^{-5/2}", 'z').unwrap();
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(-15, 1), (-13, -1), (-9, -1), (-5, -1)]);
        assert_eq!(p.to_string(), "-z^{-5/2} - z^{-9/2} - z^{-13/2} + z^{-15/2}");
        let q = LaurentPoly::parse("-z^-6 + 3z^-5 - 3 + 2z", 'z').unwrap();
        assert_eq!(q.coeff(-12), -1);
        assert_eq!(q.coeff(0), -3);
        assert_eq!(q.coeff(2), 2);
    }

    #[test]
    fn parse_two_variable() {
        let p = LaurentPoly2::parse("a^2z^4 + z^4/a^2 + 1/(a^2z^2) - 2/z^2 - 8").unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.terms().find(|&(a, z, _)| a == -4 && z == -4).unwrap().2, 1);
        assert_eq!(p.terms().find(|&(a, z, _)| a == 0 && z == -4).unwrap().2, -2);
        assert_eq!(p.terms().find(|&(a, z, _)| a == 0 && z == 0).unwrap().2, -8);
    }

    #[test]
    fn json_terms() {
        let p = LaurentPoly::from_terms([(-3, 2), (1, -1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[-3,2],[1,-1]]");
        let q = LaurentPoly2::from_terms([(2, -2, 1)]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[[2,-2,1]]");
    }

    #[test]
    fn mirror_and_specialize() {
        // unlink of two components: (a - 1/a)/z
        let p = LaurentPoly2::from_terms([(2, -2, 1), (-2, -2, -1)]);
        assert_eq!(p.mirror(), p.scale(1));
        // a = t^{-1}, z = t^{1/2} - t^{-1/2} gives -(t^{1/2} + t^{-1/2})
        let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        let j = p.specialize(-2, &z).unwrap();
        assert_eq!(j, LaurentPoly::from_terms([(1, -1), (-1, -1)]));
    }
}
