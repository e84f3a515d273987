//! Finitely supported Pauli strings over the integer chain and their complex
//! linear combinations.
//!
//! A [`PauliString`] is a map from sites to non-identity letters; the empty map
//! is the unit. A [`SpinElement`] is a finite linear combination of strings with
//! complex coefficients, kept canonical: no stored coefficient has modulus at or
//! below the element's tolerance.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::window::Window;

/// A site of the chain.
pub type Site = i64;

/// Coefficients with modulus at or below this are dropped.
pub const DEFAULT_TOLERANCE: f64 = 1e-14;

/// One of the four single-site Pauli matrices `σ₀ = 1, σ₁, σ₂, σ₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum PauliLetter {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            0 => Some(PauliLetter::I),
            1 => Some(PauliLetter::X),
            2 => Some(PauliLetter::Y),
            3 => Some(PauliLetter::Z),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    /// Letters 1 and 2 flip sign under the rotation by π about the 3-axis.
    pub fn is_transverse(self) -> bool {
        matches!(self, PauliLetter::X | PauliLetter::Y)
    }

    fn symbol(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

/// A power of the imaginary unit, `i^k` with `k ∈ {0,1,2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn power(self) -> u8 {
        self.0
    }

    pub fn to_complex(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }
}

impl Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

/// `σ_p σ_q = phase · σ_r`.
pub fn letter_mul(p: PauliLetter, q: PauliLetter) -> (Phase, PauliLetter) {
    use PauliLetter::*;
    match (p, q) {
        (I, r) | (r, I) => (Phase::ONE, r),
        (a, b) if a == b => (Phase::ONE, I),
        (X, Y) => (Phase::I, Z),
        (Y, Z) => (Phase::I, X),
        (Z, X) => (Phase::I, Y),
        (Y, X) => (Phase::MINUS_I, Z),
        (Z, Y) => (Phase::MINUS_I, X),
        (X, Z) => (Phase::MINUS_I, Y),
        _ => unreachable!(),
    }
}

/// Basis monomial: a finitely supported product of single-site Pauli letters.
///
/// Ordering is lexicographic on the increasing `(site, letter)` sequence, which
/// fixes the term order of serialized elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    letters: BTreeMap<Site, PauliLetter>,
}

impl PauliString {
    pub fn identity() -> Self {
        PauliString::default()
    }

    pub fn single(site: Site, letter: PauliLetter) -> Self {
        let mut s = PauliString::default();
        s.set(site, letter);
        s
    }

    pub fn from_letters<I: IntoIterator<Item = (Site, PauliLetter)>>(letters: I) -> Self {
        let mut s = PauliString::default();
        for (site, letter) in letters {
            s.set(site, letter);
        }
        s
    }

    /// Overwrites the letter at `site`; writing `I` clears it.
    pub fn set(&mut self, site: Site, letter: PauliLetter) {
        if letter == PauliLetter::I {
            self.letters.remove(&site);
        } else {
            self.letters.insert(site, letter);
        }
    }

    pub fn get(&self, site: Site) -> PauliLetter {
        self.letters.get(&site).copied().unwrap_or(PauliLetter::I)
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.letters.len()
    }

    /// Non-identity letters in increasing site order.
    pub fn iter(&self) -> impl Iterator<Item = (Site, PauliLetter)> + '_ {
        self.letters.iter().map(|(&s, &l)| (s, l))
    }

    pub fn support(&self) -> Window {
        Window::new(self.letters.keys().copied())
    }

    /// Site-wise product; the phase is the product of the per-site phases.
    pub fn mul(&self, other: &PauliString) -> (Phase, PauliString) {
        let mut phase = Phase::ONE;
        let mut letters = self.letters.clone();
        for (&site, &q) in &other.letters {
            let p = letters.get(&site).copied().unwrap_or(PauliLetter::I);
            let (ph, r) = letter_mul(p, q);
            phase = phase * ph;
            if r == PauliLetter::I {
                letters.remove(&site);
            } else {
                letters.insert(site, r);
            }
        }
        (phase, PauliString { letters })
    }

    /// Number of sites carrying letter 1 or 2, optionally restricted by a site predicate.
    pub fn transverse_count<F: Fn(Site) -> bool>(&self, keep: F) -> usize {
        self.letters.iter().filter(|(&s, l)| l.is_transverse() && keep(s)).count()
    }
}

/// `σ_p σ_q = phase · r` for whole strings.
pub fn string_mul(p: &PauliString, q: &PauliString) -> (Phase, PauliString) {
    p.mul(q)
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "I");
        }
        for (i, (site, letter)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}({})", letter.symbol(), site)?;
        }
        Ok(())
    }
}

/// A finite complex combination of Pauli strings, i.e. a finitely supported
/// element of the quasi-local spin algebra.
#[derive(Debug, Clone)]
pub struct SpinElement {
    terms: BTreeMap<PauliString, Complex64>,
    tol: f64,
}

impl Default for SpinElement {
    fn default() -> Self {
        SpinElement::zero()
    }
}

impl PartialEq for SpinElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl SpinElement {
    pub fn zero() -> Self {
        SpinElement { terms: BTreeMap::new(), tol: DEFAULT_TOLERANCE }
    }

    pub fn one() -> Self {
        SpinElement::scalar(Complex64::new(1.0, 0.0))
    }

    pub fn scalar(c: Complex64) -> Self {
        SpinElement::from_string(PauliString::identity(), c)
    }

    pub fn from_string(s: PauliString, c: Complex64) -> Self {
        let mut e = SpinElement::zero();
        e.accumulate(s, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (PauliString, Complex64)>>(terms: I) -> Self {
        let mut e = SpinElement::zero();
        for (s, c) in terms {
            e.accumulate(s, c);
        }
        e
    }

    /// Replaces the canonicalization threshold and re-canonicalizes.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol.max(0.0);
        self.terms.retain(|_, c| c.norm() > tol);
        self
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, Complex64)> + '_ {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn coeff(&self, s: &PauliString) -> Complex64 {
        self.terms.get(s).copied().unwrap_or_default()
    }

    /// Coefficient of the unit string, i.e. the normalized trace.
    pub fn trace(&self) -> Complex64 {
        self.coeff(&PauliString::identity())
    }

    fn accumulate(&mut self, s: PauliString, c: Complex64) {
        let v = self.coeff(&s) + c;
        if v.norm() > self.tol {
            self.terms.insert(s, v);
        } else {
            self.terms.remove(&s);
        }
    }

    fn merged_tol(&self, other: &SpinElement) -> f64 {
        self.tol.max(other.tol)
    }

    fn canonicalize(mut self) -> Self {
        let tol = self.tol;
        self.terms.retain(|_, c| c.norm() > tol);
        self
    }

    pub fn scale(&self, c: Complex64) -> SpinElement {
        let terms = self.terms.iter().map(|(s, &v)| (s.clone(), v * c)).collect();
        SpinElement { terms, tol: self.tol }.canonicalize()
    }

    pub fn scale_real(&self, r: f64) -> SpinElement {
        self.scale(Complex64::new(r, 0.0))
    }

    /// Maps every coefficient through `f(string, coeff)`.
    pub fn map_coeffs<F: Fn(&PauliString, Complex64) -> Complex64>(&self, f: F) -> SpinElement {
        let terms = self.terms.iter().map(|(s, &v)| (s.clone(), f(s, v))).collect();
        SpinElement { terms, tol: self.tol }.canonicalize()
    }

    /// Conjugates coefficients; every Pauli string is self-adjoint.
    pub fn adjoint(&self) -> SpinElement {
        self.map_coeffs(|_, c| c.conj())
    }

    pub fn commutator(&self, other: &SpinElement) -> SpinElement {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &SpinElement) -> SpinElement {
        &(self * other) + &(other * self)
    }

    /// All sites carrying a non-identity letter in some term.
    pub fn support(&self) -> Window {
        Window::new(self.terms.keys().flat_map(|s| s.letters.keys().copied()))
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &SpinElement) -> f64 {
        (self - other).max_abs_coeff()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `sqrt(τ(a* a))` with `τ` the normalized trace: the Euclidean norm of the coefficients.
    pub fn hilbert_schmidt_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).fold(0.0, |acc, x| acc + x).sqrt()
    }

    /// `τ(a* b)`, the coefficient inner product.
    pub fn trace_inner(&self, other: &SpinElement) -> Complex64 {
        self.terms
            .iter()
            .filter_map(|(s, a)| other.terms.get(s).map(|b| a.conj() * b))
            .sum()
    }

    pub fn approx_eq(&self, other: &SpinElement, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

impl Add for &SpinElement {
    type Output = SpinElement;
    fn add(self, rhs: &SpinElement) -> SpinElement {
        let mut out = self.clone();
        out.tol = self.merged_tol(rhs);
        for (s, &c) in &rhs.terms {
            out.accumulate(s.clone(), c);
        }
        out
    }
}

impl Sub for &SpinElement {
    type Output = SpinElement;
    fn sub(self, rhs: &SpinElement) -> SpinElement {
        let mut out = self.clone();
        out.tol = self.merged_tol(rhs);
        for (s, &c) in &rhs.terms {
            out.accumulate(s.clone(), -c);
        }
        out
    }
}

impl Mul for &SpinElement {
    type Output = SpinElement;
    fn mul(self, rhs: &SpinElement) -> SpinElement {
        let mut acc: BTreeMap<PauliString, Complex64> = BTreeMap::new();
        for (p, &a) in &self.terms {
            for (q, &b) in &rhs.terms {
                let (phase, r) = p.mul(q);
                *acc.entry(r).or_default() += a * b * phase.to_complex();
            }
        }
        SpinElement { terms: acc, tol: self.merged_tol(rhs) }.canonicalize()
    }
}

impl Neg for &SpinElement {
    type Output = SpinElement;
    fn neg(self) -> SpinElement {
        self.scale_real(-1.0)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for SpinElement {
            type Output = SpinElement;
            fn $m(self, rhs: SpinElement) -> SpinElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SpinElement> for SpinElement {
            type Output = SpinElement;
            fn $m(self, rhs: &SpinElement) -> SpinElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<SpinElement> for &SpinElement {
            type Output = SpinElement;
            fn $m(self, rhs: SpinElement) -> SpinElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for SpinElement {
    type Output = SpinElement;
    fn neg(self) -> SpinElement {
        -&self
    }
}

impl std::iter::Sum for SpinElement {
    fn sum<I: Iterator<Item = SpinElement>>(iter: I) -> SpinElement {
        iter.fold(SpinElement::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for SpinElement {
    fn product<I: Iterator<Item = SpinElement>>(iter: I) -> SpinElement {
        iter.fold(SpinElement::one(), |acc, x| &acc * &x)
    }
}

pub(crate) fn format_coeff(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}i", c.im)
    } else if c.im < 0.0 {
        format!("({}-{}i)", c.re, -c.im)
    } else {
        format!("({}+{}i)", c.re, c.im)
    }
}

impl fmt::Display for SpinElement {
    /// Canonical text form: `coeff * X(0) Y(3)` terms joined by ` + `; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} * {}", format_coeff(c), s)?;
        }
        Ok(())
    }
}

/// Splits on `+` signs that sit outside parentheses and are not exponent signs.
pub(crate) fn split_top_level_sum(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 => {
                let prev = s[..i].trim_end();
                let is_exp = prev.ends_with(['e', 'E']) && prev.len() > 1 && {
                    let c = prev.as_bytes()[prev.len() - 2];
                    c.is_ascii_digit() || c == b'.'
                };
                if !is_exp {
                    parts.push(&s[start..i]);
                    start = i + 1;
                }
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

pub(crate) fn parse_coeff(s: &str) -> Result<Complex64> {
    let t = s.trim();
    let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(t).trim();
    if t.is_empty() {
        return Err(Error::Parse("empty coefficient".into()));
    }
    if let Some(body) = t.strip_suffix('i') {
        // Find the split between real and imaginary parts: last +/- not at the start
        // and not following an exponent marker.
        let b = body.as_bytes();
        let mut split = None;
        for i in (1..b.len()).rev() {
            if (b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E') {
                split = Some(i);
                break;
            }
        }
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let re: f64 = re.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
        let im = match im.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            v => v.parse().map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?,
        };
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = t.parse().map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn parse_factors(s: &str) -> Result<PauliString> {
    let mut out = PauliString::identity();
    for tok in s.split_whitespace() {
        if tok == "I" || tok == "1" {
            continue;
        }
        let mut chars = tok.chars();
        let sym = chars.next().ok_or_else(|| Error::Parse("empty factor".into()))?;
        let letter = match sym {
            'X' | 'x' => PauliLetter::X,
            'Y' | 'y' => PauliLetter::Y,
            'Z' | 'z' => PauliLetter::Z,
            'I' | 'i' => PauliLetter::I,
            _ => return Err(Error::Parse(format!("unknown Pauli letter in `{tok}`"))),
        };
        let rest = chars.as_str();
        let site_str = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected `L(site)`, got `{tok}`")))?;
        let site: Site = site_str.trim().parse().map_err(|_| Error::Parse(format!("bad site in `{tok}`")))?;
        let (ph, r) = letter_mul(out.get(site), letter);
        if ph != Phase::ONE {
            return Err(Error::Parse(format!("site {site} repeated in `{s}`")));
        }
        out.set(site, r);
    }
    Ok(out)
}

impl FromStr for SpinElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(SpinElement::zero());
        }
        let mut out = SpinElement::zero();
        for part in split_top_level_sum(s) {
            let part = part.trim();
            let (c, fac) = match part.split_once('*') {
                Some((c, f)) => (parse_coeff(c)?, parse_factors(f)?),
                None => (Complex64::new(1.0, 0.0), parse_factors(part)?),
            };
            out.accumulate(fac, c);
        }
        Ok(out)
    }
}

/// JSON form of one factor: `{"site": 0, "axis": 1}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorJson {
    pub site: Site,
    pub axis: u8,
}

/// JSON form of one term: `{"coeff": [re, im], "factors": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpinTermJson {
    pub coeff: [f64; 2],
    pub factors: Vec<FactorJson>,
}

impl SpinTermJson {
    pub fn to_term(&self) -> Result<(PauliString, Complex64)> {
        let mut s = PauliString::identity();
        for f in &self.factors {
            let letter = PauliLetter::from_index(f.axis)
                .ok_or_else(|| Error::Parse(format!("axis {} not in 0..=3", f.axis)))?;
            let (ph, r) = letter_mul(s.get(f.site), letter);
            if ph != Phase::ONE {
                return Err(Error::Parse(format!("site {} repeated with different axes", f.site)));
            }
            s.set(f.site, r);
        }
        Ok((s, Complex64::new(self.coeff[0], self.coeff[1])))
    }
}

impl SpinElement {
    pub fn to_json_terms(&self) -> Vec<SpinTermJson> {
        self.terms
            .iter()
            .map(|(s, c)| SpinTermJson {
                coeff: [c.re, c.im],
                factors: s.iter().map(|(site, l)| FactorJson { site, axis: l.index() }).collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[SpinTermJson]) -> Result<Self> {
        let mut out = SpinElement::zero();
        for t in terms {
            let (s, c) = t.to_term()?;
            out.accumulate(s, c);
        }
        Ok(out)
    }
}

impl Serialize for SpinElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpinElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<SpinTermJson>::deserialize(deserializer)?;
        SpinElement::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PauliLetter::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn s(site: Site, l: PauliLetter) -> SpinElement {
        SpinElement::from_string(PauliString::single(site, l), c(1.0, 0.0))
    }

    #[test]
    fn letter_products() {
        assert_eq!(letter_mul(X, Y), (Phase::I, Z));
        assert_eq!(letter_mul(I, Z), (Phase::ONE, Z));
        assert_eq!(letter_mul(Y, Y), (Phase::ONE, I));
        assert_eq!(letter_mul(Y, X), (Phase::MINUS_I, Z));
        assert_eq!(letter_mul(Z, X), (Phase::I, Y));
    }

    #[test]
    fn letter_products_match_levi_civita() {
        // σ_k σ_l = δ_kl + i ε_klm σ_m for k,l ∈ {1,2,3}
        for k in 1..=3u8 {
            for l in 1..=3u8 {
                let (ph, r) = letter_mul(PauliLetter::from_index(k).unwrap(), PauliLetter::from_index(l).unwrap());
                if k == l {
                    assert_eq!((ph, r), (Phase::ONE, I));
                } else {
                    let m = 6 - k - l;
                    let eps = if (k, l, m) == (1, 2, 3) || (k, l, m) == (2, 3, 1) || (k, l, m) == (3, 1, 2) {
                        Phase::I
                    } else {
                        Phase::MINUS_I
                    };
                    assert_eq!(r.index(), m);
                    assert_eq!(ph, eps);
                }
            }
        }
    }

    #[test]
    fn string_mul_same_site() {
        let (ph, r) = string_mul(&PauliString::single(0, X), &PauliString::single(0, Y));
        assert_eq!(ph, Phase::I);
        assert_eq!(r, PauliString::single(0, Z));
        let p = PauliString::from_letters([(1, X), (4, Z)]);
        assert_eq!(string_mul(&PauliString::identity(), &p), (Phase::ONE, p.clone()));
    }

    #[test]
    fn set_identity_clears() {
        let mut p = PauliString::single(2, X);
        p.set(2, I);
        assert!(p.is_identity());
    }

    #[test]
    fn add_and_cancel() {
        let a = s(0, X) + s(3, Y).scale(c(0.0, 2.0));
        assert_eq!(&a + &SpinElement::zero(), a);
        assert!((&a + &a.scale_real(-1.0)).is_zero());
    }

    #[test]
    fn pauli_squares_and_commutators() {
        assert_eq!(&s(0, X) * &s(0, X), SpinElement::one());
        assert!(s(0, X).commutator(&s(1, Y)).is_zero());
        assert_eq!(s(0, X).commutator(&s(0, Y)), s(0, Z).scale(c(0.0, 2.0)));
        assert_eq!(s(0, X).anticommutator(&s(0, X)), SpinElement::scalar(c(2.0, 0.0)));
    }

    #[test]
    fn adjoint_conjugates() {
        let a = s(5, Y).scale(c(0.0, 1.0));
        assert_eq!(a.adjoint(), s(5, Y).scale(c(0.0, -1.0)));
        assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn support_examples() {
        let zz = &s(2, Z) * &s(5, Z);
        assert_eq!(zz.support().sites(), &[2, 5]);
        assert!(SpinElement::one().support().is_empty());
        assert_eq!((s(0, X) + s(3, Y)).support().sites(), &[0, 3]);
    }

    #[test]
    fn tiny_coefficients_are_dropped() {
        let a = SpinElement::from_terms([(PauliString::single(0, X), c(1e-15, 0.0))]);
        assert!(a.is_zero());
        let b = s(0, X).with_tolerance(0.5).scale_real(0.4);
        assert!(b.is_zero());
    }

    #[test]
    fn text_form_round_trip() {
        let a = s(0, X).scale(c(2.0, -1.5)) + (&s(-2, Z) * &s(3, Y)) + SpinElement::scalar(c(-0.5, 0.0));
        let text = a.to_string();
        let back: SpinElement = text.parse().unwrap();
        assert_eq!(back, a);
        assert_eq!(s(0, X).to_string(), "1 * X(0)");
        let parsed: SpinElement = "X(0) Y(3) Z(-2)".parse().unwrap();
        assert_eq!(parsed.support().sites(), &[-2, 0, 3]);
        assert!("Q(1)".parse::<SpinElement>().is_err());
        assert!("X(1) Z(1)".parse::<SpinElement>().is_err());
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!(parse_coeff("(1.5-2i)").unwrap(), c(1.5, -2.0));
        assert_eq!(parse_coeff("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_coeff("3").unwrap(), c(3.0, 0.0));
        assert_eq!(parse_coeff("(1e-3+1e+2i)").unwrap(), c(1e-3, 1e2));
    }

    #[test]
    fn json_form() {
        let a = (&s(0, X) * &s(3, Z)).scale(c(0.5, -1.0));
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"[{"coeff":[0.5,-1.0],"factors":[{"site":0,"axis":1},{"site":3,"axis":3}]}]"#);
        let back: SpinElement = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
        let bad = r#"[{"coeff":[1,0],"factors":[{"site":0,"axis":7}]}]"#;
        assert!(serde_json::from_str::<SpinElement>(bad).is_err());
    }
}
