//! Araki–Jordan–Wigner fermions `a_x = T·ψ(S_x σ₋⁽ˣ⁾)`, their matrix units, and
//! fermion polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::crossed::{psi, t_element, HatElement};
use crate::error::{Error, Result};
use crate::pauli::{format_coeff, parse_coeff, split_top_level_sum, PauliLetter, PauliString, Site, SpinElement};
use crate::spin_ops::{s_string, sigma_pm, Ladder};
use crate::window::Window;

/// Residual above which an element is reported as outside the local CAR algebra.
pub const CAR_RESIDUAL_TOLERANCE: f64 = 1e-10;

pub fn annihilator(x: Site) -> HatElement {
    &t_element() * &psi(&(&s_string(x) * &sigma_pm(Ladder::Minus, x)))
}

pub fn creator(x: Site) -> HatElement {
    annihilator(x).adjoint()
}

/// `({a_x, a_y}, {a_x, a_y*})`.
pub fn car_check(x: Site, y: Site) -> (HatElement, HatElement) {
    let ax = annihilator(x);
    (ax.anticommutator(&annihilator(y)), ax.anticommutator(&creator(y)))
}

/// Index pair `(α, β)` of a `2 × 2` matrix unit, both in `{1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatrixUnitIndex {
    alpha: u8,
    beta: u8,
}

impl MatrixUnitIndex {
    pub const E11: MatrixUnitIndex = MatrixUnitIndex { alpha: 1, beta: 1 };
    pub const E12: MatrixUnitIndex = MatrixUnitIndex { alpha: 1, beta: 2 };
    pub const E21: MatrixUnitIndex = MatrixUnitIndex { alpha: 2, beta: 1 };
    pub const E22: MatrixUnitIndex = MatrixUnitIndex { alpha: 2, beta: 2 };
    pub const ALL: [MatrixUnitIndex; 4] = [Self::E11, Self::E12, Self::E21, Self::E22];

    pub fn new(alpha: u8, beta: u8) -> Option<Self> {
        ((1..=2).contains(&alpha) && (1..=2).contains(&beta)).then_some(MatrixUnitIndex { alpha, beta })
    }

    pub fn alpha(self) -> u8 {
        self.alpha
    }

    pub fn beta(self) -> u8 {
        self.beta
    }

    pub fn transpose(self) -> Self {
        MatrixUnitIndex { alpha: self.beta, beta: self.alpha }
    }

    pub fn is_diagonal(self) -> bool {
        self.alpha == self.beta
    }
}

impl fmt::Display for MatrixUnitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.alpha, self.beta)
    }
}

/// `f₁₁ = a*a`, `f₁₂ = a*`, `f₂₁ = a`, `f₂₂ = aa*` at site `x`.
pub fn matrix_unit_f(x: Site, idx: MatrixUnitIndex) -> HatElement {
    let a = annihilator(x);
    let ad = creator(x);
    match (idx.alpha, idx.beta) {
        (1, 1) => &ad * &a,
        (1, 2) => ad,
        (2, 1) => a,
        _ => &a * &ad,
    }
}

/// `R_i`: product of σ₃ over the window sites preceding position `i` (1-based).
fn r_string(i: usize, w: &Window) -> SpinElement {
    let p = PauliString::from_letters(w.sites()[..i - 1].iter().map(|&s| (s, PauliLetter::Z)));
    SpinElement::from_string(p, Complex64::new(1.0, 0.0))
}

/// The window-relative matrix units `e⁽ⁱ⁾`, `i` counted from 1 along the sorted window.
pub fn matrix_unit_e(i: usize, w: &Window, idx: MatrixUnitIndex) -> Result<HatElement> {
    if i == 0 || i > w.len() {
        return Err(Error::IndexOutOfWindow { index: i, len: w.len() });
    }
    let x = w.sites()[i - 1];
    Ok(match (idx.alpha, idx.beta) {
        (1, 1) | (2, 2) => matrix_unit_f(x, idx),
        _ => &psi(&r_string(i, w)) * &matrix_unit_f(x, idx),
    })
}

/// All `4ⁿ` ordered products `u₁(Γ₁)·…·uₙ(Γₙ)` of per-position unit families.
pub(crate) fn unit_products(families: &[[HatElement; 4]]) -> Vec<(Vec<MatrixUnitIndex>, HatElement)> {
    let mut out = Vec::with_capacity(1 << (2 * families.len()));
    let mut prefix = Vec::with_capacity(families.len());
    fn rec(
        families: &[[HatElement; 4]],
        acc: &HatElement,
        prefix: &mut Vec<MatrixUnitIndex>,
        out: &mut Vec<(Vec<MatrixUnitIndex>, HatElement)>,
    ) {
        let k = prefix.len();
        if k == families.len() {
            out.push((prefix.clone(), acc.clone()));
            return;
        }
        for (j, idx) in MatrixUnitIndex::ALL.iter().enumerate() {
            prefix.push(*idx);
            rec(families, &(acc * &families[k][j]), prefix, out);
            prefix.pop();
        }
    }
    rec(families, &HatElement::one(), &mut prefix, &mut out);
    out
}

pub(crate) fn e_families(w: &Window) -> Vec<[HatElement; 4]> {
    (1..=w.len())
        .map(|i| MatrixUnitIndex::ALL.map(|idx| matrix_unit_e(i, w, idx).expect("index in range")))
        .collect()
}

fn f_families(w: &Window) -> Vec<[HatElement; 4]> {
    w.iter().map(|x| MatrixUnitIndex::ALL.map(|idx| matrix_unit_f(x, idx))).collect()
}

/// All `4ⁿ` products `e_Γ` on `w`, keyed by `Γ`.
pub fn e_basis(w: &Window) -> Vec<(Vec<MatrixUnitIndex>, HatElement)> {
    unit_products(&e_families(w))
}

/// `e_Γ = e⁽¹⁾_{Γ₁} ⋯ e⁽ⁿ⁾_{Γₙ}`.
pub fn e_gamma(gamma: &[MatrixUnitIndex], w: &Window) -> Result<HatElement> {
    if gamma.len() != w.len() {
        return Err(Error::IndexOutOfWindow { index: gamma.len(), len: w.len() });
    }
    let mut acc = HatElement::one();
    for (i, idx) in gamma.iter().enumerate() {
        acc = &acc * &matrix_unit_e(i + 1, w, *idx)?;
    }
    Ok(acc)
}

/// Coefficients of an element in the basis `{e_Γ}` of a window.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitExpansion {
    pub window: Window,
    pub coeffs: BTreeMap<Vec<MatrixUnitIndex>, Complex64>,
    pub residual: f64,
}

/// Projects onto an orthogonal family with `τ̂(u*u) = 2⁻ⁿ` and reports the
/// Hilbert–Schmidt norm of what is left over.
fn project(
    p: &HatElement,
    basis: Vec<(Vec<MatrixUnitIndex>, HatElement)>,
    n: usize,
) -> (BTreeMap<Vec<MatrixUnitIndex>, Complex64>, f64) {
    let scale = (1u64 << n) as f64;
    let mut coeffs = BTreeMap::new();
    let mut recon = HatElement::zero();
    for (gamma, u) in basis {
        let alpha = u.trace_inner(p) * scale;
        if alpha.norm() > 1e-14 {
            recon = &recon + &u.scale(alpha);
            coeffs.insert(gamma, alpha);
        }
    }
    let residual = (p - &recon).hilbert_schmidt_norm();
    (coeffs, residual)
}

/// `p = Σ α_Γ e_Γ` on window `w`.
pub fn expand_in_units(p: &HatElement, w: &Window) -> Result<UnitExpansion> {
    let (coeffs, residual) = project(p, e_basis(w), w.len());
    if residual > CAR_RESIDUAL_TOLERANCE {
        return Err(Error::NotInLocalCar { residual });
    }
    Ok(UnitExpansion { window: w.clone(), coeffs, residual })
}

/// One creation (`dagger`) or annihilation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FermionFactor {
    pub site: Site,
    pub dagger: bool,
}

impl FermionFactor {
    pub fn create(site: Site) -> Self {
        FermionFactor { site, dagger: true }
    }

    pub fn annihilate(site: Site) -> Self {
        FermionFactor { site, dagger: false }
    }

    pub fn to_hat(self) -> HatElement {
        if self.dagger {
            creator(self.site)
        } else {
            annihilator(self.site)
        }
    }
}

/// An ordered product of creation and annihilation operators; empty is `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FermionMonomial {
    pub factors: Vec<FermionFactor>,
}

impl FermionMonomial {
    pub fn new(factors: Vec<FermionFactor>) -> Self {
        FermionMonomial { factors }
    }

    pub fn one() -> Self {
        FermionMonomial::default()
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn to_hat(&self) -> HatElement {
        monomial_to_hat(self)
    }
}

impl fmt::Display for FermionMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let name = if fac.dagger { "ad" } else { "a" };
            write!(f, "{}({})", name, fac.site)?;
        }
        Ok(())
    }
}

/// Ordered product of the operators of `m`.
pub fn monomial_to_hat(m: &FermionMonomial) -> HatElement {
    m.factors.iter().map(|f| f.to_hat()).product()
}

/// A finite complex combination of fermion monomials, compared term-wise.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FermionPolynomial {
    terms: BTreeMap<FermionMonomial, Complex64>,
}

impl FermionPolynomial {
    pub fn zero() -> Self {
        FermionPolynomial::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (FermionMonomial, Complex64)>>(terms: I) -> Self {
        let mut p = FermionPolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: FermionMonomial, c: Complex64) {
        let v = self.terms.get(&m).copied().unwrap_or_default() + c;
        if v.norm() > crate::pauli::DEFAULT_TOLERANCE {
            self.terms.insert(m, v);
        } else {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FermionMonomial, Complex64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &FermionMonomial) -> Complex64 {
        self.terms.get(m).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sites(&self) -> Window {
        Window::new(self.terms.keys().flat_map(|m| m.factors.iter().map(|f| f.site)))
    }

    pub fn to_hat(&self) -> HatElement {
        self.terms.iter().map(|(m, &c)| monomial_to_hat(m).scale(c)).sum()
    }

    pub fn scale(&self, c: Complex64) -> FermionPolynomial {
        FermionPolynomial::from_terms(self.terms.iter().map(|(m, &v)| (m.clone(), v * c)))
    }
}

impl fmt::Display for FermionPolynomial {
    /// `coeff * ad(0) a(1)` terms joined by ` + `; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} * {}", format_coeff(c), m)?;
        }
        Ok(())
    }
}

fn parse_monomial(s: &str) -> Result<FermionMonomial> {
    let mut factors = Vec::new();
    for tok in s.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, rest) = tok
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("expected `a(site)` or `ad(site)`, got `{tok}`")))?;
        let dagger = match name {
            "a" => false,
            "ad" | "a†" | "adag" => true,
            _ => return Err(Error::Parse(format!("unknown fermion operator `{name}`"))),
        };
        let site: Site = rest
            .strip_suffix(')')
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad site in `{tok}`")))?;
        factors.push(FermionFactor { site, dagger });
    }
    Ok(FermionMonomial { factors })
}

impl FromStr for FermionPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = FermionPolynomial::zero();
        if s.is_empty() || s == "0" {
            return Ok(out);
        }
        for part in split_top_level_sum(s) {
            let part = part.trim();
            let (c, m) = match part.split_once('*') {
                Some((c, m)) => (parse_coeff(c)?, parse_monomial(m)?),
                None => (Complex64::new(1.0, 0.0), parse_monomial(part)?),
            };
            out.add_term(m, c);
        }
        Ok(out)
    }
}

/// JSON form of one term: `{"coeff": [re, im], "factors": [{"site": 0, "dagger": true}, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FermionTermJson {
    pub coeff: [f64; 2],
    pub factors: Vec<FermionFactor>,
}

impl FermionPolynomial {
    pub fn to_json_terms(&self) -> Vec<FermionTermJson> {
        self.terms
            .iter()
            .map(|(m, c)| FermionTermJson { coeff: [c.re, c.im], factors: m.factors.clone() })
            .collect()
    }

    pub fn from_json_terms(terms: &[FermionTermJson]) -> Self {
        FermionPolynomial::from_terms(
            terms.iter().map(|t| (FermionMonomial::new(t.factors.clone()), Complex64::new(t.coeff[0], t.coeff[1]))),
        )
    }
}

impl Serialize for FermionPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FermionPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(FermionPolynomial::from_json_terms(&Vec::<FermionTermJson>::deserialize(deserializer)?))
    }
}

/// Sign of the permutation sorting `ops` into normal order: creators by
/// increasing site, then annihilators by decreasing site. All swapped pairs sit
/// on distinct sites and therefore anticommute.
fn normal_order_sign(ops: &[FermionFactor]) -> (f64, Vec<FermionFactor>) {
    let key = |f: &FermionFactor| if f.dagger { (0, f.site) } else { (1, -f.site) };
    let mut inversions = 0usize;
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if key(&ops[i]) > key(&ops[j]) {
                inversions += 1;
            }
        }
    }
    let mut sorted = ops.to_vec();
    sorted.sort_by_key(key);
    (if inversions.is_multiple_of(2) { 1.0 } else { -1.0 }, sorted)
}

/// Rewrites `p ∈ 𝔄̂₁,Λ` as a normal-ordered fermion polynomial on the sites of `w`.
///
/// The element is projected onto the site-ordered products of `f`-units; per
/// site `f₁₁ = a*a`, `f₁₂ = a*`, `f₂₁ = a`, `f₂₂ = 1 − a*a`.
pub fn normal_order(p: &HatElement, w: &Window) -> Result<FermionPolynomial> {
    let (coeffs, residual) = project(p, unit_products(&f_families(w)), w.len());
    if residual > CAR_RESIDUAL_TOLERANCE {
        return Err(Error::NotInLocalCar { residual });
    }
    let mut out = FermionPolynomial::zero();
    for (gamma, alpha) in coeffs {
        // Each site contributes one or two alternatives: (sign, operators).
        let mut partial: Vec<(f64, Vec<FermionFactor>)> = vec![(1.0, Vec::new())];
        for (x, idx) in w.iter().zip(&gamma) {
            let number = [FermionFactor::create(x), FermionFactor::annihilate(x)];
            let options: Vec<(f64, Vec<FermionFactor>)> = match (idx.alpha, idx.beta) {
                (1, 1) => vec![(1.0, number.to_vec())],
                (1, 2) => vec![(1.0, vec![FermionFactor::create(x)])],
                (2, 1) => vec![(1.0, vec![FermionFactor::annihilate(x)])],
                _ => vec![(1.0, vec![]), (-1.0, number.to_vec())],
            };
            partial = partial
                .into_iter()
                .flat_map(|(s, ops)| {
                    options.iter().map(move |(t, extra)| {
                        let mut v = ops.clone();
                        v.extend_from_slice(extra);
                        (s * t, v)
                    })
                })
                .collect();
        }
        for (s, ops) in partial {
            let (sign, sorted) = normal_order_sign(&ops);
            out.add_term(FermionMonomial::new(sorted), alpha * (s * sign));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PauliLetter::*;
    use crate::spin_ops::{sigma, sigma_pm};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn annihilator_pair_form() {
        for x in -3..=3 {
            let ax = annihilator(x);
            assert!(ax.a.is_zero());
            let sign = if x >= 1 { 1.0 } else { -1.0 };
            assert_eq!(ax.b, (&s_string(x) * &sigma_pm(Ladder::Minus, x)).scale_real(sign), "x = {x}");
        }
        assert_eq!(annihilator(1).b, sigma_pm(Ladder::Minus, 1));
    }

    #[test]
    fn a0_singular_values() {
        let m = crate::crossed::represent_hat(&annihilator(0), &Window::new([0])).unwrap();
        let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
        sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let expect = [1.0, 1.0, 0.0, 0.0];
        for (s, e) in sv.iter().zip(expect) {
            assert!((s - e).abs() < 1e-12);
        }
    }

    #[test]
    fn car_examples() {
        let (aa, aad) = car_check(0, 5);
        assert!(aa.is_zero() && aad.is_zero());
        let (aa, aad) = car_check(3, 3);
        assert!(aa.is_zero());
        assert_eq!(aad, HatElement::one());
        let (aa, aad) = car_check(-2, 1);
        assert!(aa.is_zero() && aad.is_zero());
    }

    #[test]
    fn f_units() {
        use MatrixUnitIndex as M;
        for x in [-1, 0, 2] {
            assert_eq!(&matrix_unit_f(x, M::E11) + &matrix_unit_f(x, M::E22), HatElement::one());
            assert_eq!(&matrix_unit_f(x, M::E12) * &matrix_unit_f(x, M::E21), matrix_unit_f(x, M::E11));
            assert_eq!(matrix_unit_f(x, M::E12).adjoint(), matrix_unit_f(x, M::E21));
        }
    }

    #[test]
    fn e_units() {
        use MatrixUnitIndex as M;
        let w = Window::new([-1, 0, 3]);
        for idx in M::ALL {
            assert_eq!(matrix_unit_e(1, &w, idx).unwrap(), matrix_unit_f(-1, idx));
        }
        for i in 1..=3 {
            let d = &matrix_unit_e(i, &w, M::E11).unwrap() - &matrix_unit_e(i, &w, M::E22).unwrap();
            assert_eq!(d, psi(&sigma(Z, w.sites()[i - 1])));
        }
        assert_eq!(matrix_unit_e(0, &w, M::E11).unwrap_err(), Error::IndexOutOfWindow { index: 0, len: 3 });
        assert!(matrix_unit_e(4, &w, M::E11).is_err());
    }

    #[test]
    fn expansion_examples() {
        use MatrixUnitIndex as M;
        let w = Window::new([2]);
        let ex = expand_in_units(&annihilator(2), &w).unwrap();
        assert_eq!(ex.coeffs.len(), 1);
        assert!((ex.coeffs[&vec![M::E21]] - c(1.0, 0.0)).norm() < 1e-14);
        let w = Window::new([0, 1]);
        let ex = expand_in_units(&HatElement::one(), &w).unwrap();
        assert_eq!(ex.coeffs.len(), 4);
        assert!(ex.coeffs.keys().all(|g| g.iter().all(|i| i.is_diagonal())));
        // T alone is not a polynomial in the fermions
        assert!(matches!(expand_in_units(&t_element(), &w), Err(Error::NotInLocalCar { .. })));
    }

    #[test]
    fn monomial_examples() {
        let n0 = FermionMonomial::new(vec![FermionFactor::create(0), FermionFactor::annihilate(0)]);
        assert_eq!(monomial_to_hat(&n0), matrix_unit_f(0, MatrixUnitIndex::E11));
        assert_eq!(monomial_to_hat(&FermionMonomial::one()), HatElement::one());
        let odd = FermionMonomial::new(vec![FermionFactor::create(-1), FermionFactor::annihilate(2), FermionFactor::annihilate(0)]);
        assert!(monomial_to_hat(&odd).a.is_zero());
        assert!(monomial_to_hat(&n0).b.is_zero());
    }

    #[test]
    fn normal_order_sigma3() {
        let p = psi(&sigma(Z, 0));
        let no = normal_order(&p, &Window::new([0])).unwrap();
        let expect: FermionPolynomial = "2 * ad(0) a(0) + -1 * 1".parse().unwrap();
        assert_eq!(no, expect);
        assert_eq!(no.to_hat(), p);
    }

    #[test]
    fn normal_order_hopping() {
        let hop = &(&creator(1) * &annihilator(0)) + &(&creator(0) * &annihilator(1));
        let no = normal_order(&hop, &Window::new([0, 1])).unwrap();
        assert_eq!(no.to_hat(), hop);
        for (m, _) in no.terms() {
            let first_annihilator = m.factors.iter().position(|f| !f.dagger).unwrap_or(m.factors.len());
            assert!(m.factors[first_annihilator..].iter().all(|f| !f.dagger));
        }
    }

    #[test]
    fn fermion_text_and_json() {
        let p: FermionPolynomial = "(0.5-1i) * ad(0) a(3) + 2 * 1".parse().unwrap();
        assert_eq!(p.to_string().parse::<FermionPolynomial>().unwrap(), p);
        let js = serde_json::to_string(&p).unwrap();
        assert!(js.contains(r#"{"site":0,"dagger":true}"#));
        assert_eq!(serde_json::from_str::<FermionPolynomial>(&js).unwrap(), p);
        assert!("b(0)".parse::<FermionPolynomial>().is_err());
    }
}
