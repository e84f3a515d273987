//! The spin–CAR isomorphism `ϑ_Λ` and the dictionary between spin strings and
//! fermion bilinears.
//!
//! `ϑ_Λ` sends the unit tensor `E_{α₁β₁} ⊗ … ⊗ E_{αₙβₙ}` on the sorted window
//! `Λ = {x₁ < … < xₙ}` to `e⁽¹⁾_{α₁β₁} ⋯ e⁽ⁿ⁾_{αₙβₙ}`, where
//! `e⁽ⁱ⁾_{12} = ψ(R_i) a*_{xᵢ}`, `e⁽ⁱ⁾_{21} = ψ(R_i) a_{xᵢ}` and `R_i` is the σ₃
//! string over `x₁, …, x_{i−1}`. Because `R_i` depends on which sites precede
//! `xᵢ` in the window, `ϑ_Λ` and `ϑ_{Λ′}` agree on `𝔄_Λ ⊂ 𝔄_{Λ′}` only when
//! `Λ′` adds no sites below `max Λ`, or on elements whose off-diagonal units
//! see no new sites to their left.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::car::{
    annihilator, creator, expand_in_units, normal_order, FermionFactor, FermionMonomial, FermionPolynomial,
    MatrixUnitIndex,
};
use crate::crossed::{hat_norm, psi, t_element, HatElement};
use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, Site, SpinElement};
use crate::spin_ops::{s_string, sigma, sigma_pm, Ladder};
use crate::window::Window;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Per-site matrix-unit indices over a window, in window order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UnitBasisElement {
    pub indices: Vec<MatrixUnitIndex>,
}

/// `σ_κ = Σ c·E_{αβ}` for a single site.
fn letter_units(l: PauliLetter) -> [(MatrixUnitIndex, Complex64); 2] {
    use MatrixUnitIndex as M;
    match l {
        PauliLetter::I => [(M::E11, c(1.0, 0.0)), (M::E22, c(1.0, 0.0))],
        PauliLetter::X => [(M::E12, c(1.0, 0.0)), (M::E21, c(1.0, 0.0))],
        PauliLetter::Y => [(M::E12, c(0.0, -1.0)), (M::E21, c(0.0, 1.0))],
        PauliLetter::Z => [(M::E11, c(1.0, 0.0)), (M::E22, c(-1.0, 0.0))],
    }
}

/// `E_{αβ} = Σ c·σ_κ` for a single site.
fn unit_letters(idx: MatrixUnitIndex) -> [(PauliLetter, Complex64); 2] {
    match (idx.alpha(), idx.beta()) {
        (1, 1) => [(PauliLetter::I, c(0.5, 0.0)), (PauliLetter::Z, c(0.5, 0.0))],
        (2, 2) => [(PauliLetter::I, c(0.5, 0.0)), (PauliLetter::Z, c(-0.5, 0.0))],
        (1, 2) => [(PauliLetter::X, c(0.5, 0.0)), (PauliLetter::Y, c(0.0, 0.5))],
        _ => [(PauliLetter::X, c(0.5, 0.0)), (PauliLetter::Y, c(0.0, -0.5))],
    }
}

fn check_support(a: &SpinElement, w: &Window) -> Result<()> {
    match a.support().iter().find(|s| !w.contains(*s)) {
        Some(site) => Err(Error::SupportExceedsWindow { site }),
        None => Ok(()),
    }
}

/// Coefficients of `a` in the unit-tensor basis of `w`.
pub fn pauli_to_units(a: &SpinElement, w: &Window) -> Result<BTreeMap<UnitBasisElement, Complex64>> {
    check_support(a, w)?;
    let mut out: BTreeMap<UnitBasisElement, Complex64> = BTreeMap::new();
    for (p, coeff) in a.terms() {
        let mut partial: Vec<(Vec<MatrixUnitIndex>, Complex64)> = vec![(Vec::new(), coeff)];
        for x in w.iter() {
            let opts = letter_units(p.get(x));
            partial = partial
                .into_iter()
                .flat_map(|(g, v)| {
                    opts.iter().map(move |&(idx, k)| {
                        let mut g = g.clone();
                        g.push(idx);
                        (g, v * k)
                    })
                })
                .collect();
        }
        for (g, v) in partial {
            *out.entry(UnitBasisElement { indices: g }).or_default() += v;
        }
    }
    out.retain(|_, v| v.norm() > crate::pauli::DEFAULT_TOLERANCE);
    Ok(out)
}

/// Inverse of [`pauli_to_units`].
pub fn units_to_pauli(units: &BTreeMap<UnitBasisElement, Complex64>, w: &Window) -> Result<SpinElement> {
    let mut out = SpinElement::zero();
    for (u, &coeff) in units {
        if u.indices.len() != w.len() {
            return Err(Error::IndexOutOfWindow { index: u.indices.len(), len: w.len() });
        }
        let term: SpinElement = w
            .iter()
            .zip(&u.indices)
            .map(|(x, &idx)| {
                SpinElement::from_terms(unit_letters(idx).map(|(l, k)| (PauliString::single(x, l), k)))
            })
            .product();
        out = &out + &term.scale(coeff);
    }
    Ok(out)
}

/// `ϑ_Λ(σ_κ at window position i)` as a combination of `e⁽ⁱ⁾` units.
fn vartheta_letter(i: usize, w: &Window, l: PauliLetter) -> HatElement {
    letter_units(l)
        .iter()
        .map(|&(idx, k)| crate::car::matrix_unit_e(i, w, idx).expect("position in window").scale(k))
        .sum()
}

/// `ϑ_Λ(a)`. Each Pauli string maps to the ordered product of its single-site
/// images, which is the linear extension of `E-tensor ↦ e_Γ` since the `e⁽ⁱ⁾`
/// families commute and `e⁽ⁱ⁾₁₁ + e⁽ⁱ⁾₂₂ = 1`.
pub fn vartheta(a: &SpinElement, w: &Window) -> Result<HatElement> {
    check_support(a, w)?;
    let mut out = HatElement::zero();
    for (p, coeff) in a.terms() {
        let img: HatElement = p
            .iter()
            .map(|(x, l)| vartheta_letter(w.position(x).expect("checked") + 1, w, l))
            .product();
        out = &out + &img.scale(coeff);
    }
    Ok(out)
}

/// The unique `a` with `ϑ_Λ(a) = x`.
pub fn vartheta_inverse(x: &HatElement, w: &Window) -> Result<SpinElement> {
    let ex = expand_in_units(x, w)?;
    let units = ex.coeffs.into_iter().map(|(g, v)| (UnitBasisElement { indices: g }, v)).collect();
    units_to_pauli(&units, w)
}

/// Whether `ϑ_Λ(a) = ϑ_{Λ′}(a)` for `Λ ⊆ Λ′`.
pub fn consistency_check(a: &SpinElement, w: &Window, w_big: &Window) -> bool {
    if !w.is_subset(w_big) {
        return false;
    }
    match (vartheta(a, w), vartheta(a, w_big)) {
        (Ok(x), Ok(y)) => x.max_abs_diff(&y) <= 1e-12,
        _ => false,
    }
}

/// `ϑ` on the support window of `a`. Multiplicative only for elements whose
/// supports produce the same window-relative strings; see the module notes.
pub fn phi(a: &SpinElement) -> HatElement {
    vartheta(a, &a.support()).expect("support lies in its own window")
}

/// Fermionic expressions for `ψ(σ_κ⁽ˣ⁾)`:
/// `1`, `Tψ(S_x)(a_x + a_x*)`, `i·Tψ(S_x)(a_x − a_x*)`, `2a_x*a_x − 1`.
pub fn psi_sigma(kappa: PauliLetter, x: Site) -> HatElement {
    let a = annihilator(x);
    let ad = creator(x);
    let ts = &t_element() * &psi(&s_string(x));
    match kappa {
        PauliLetter::I => HatElement::one(),
        PauliLetter::X => &ts * &(&a + &ad),
        PauliLetter::Y => (&ts * &(&a - &ad)).scale(c(0.0, 1.0)),
        PauliLetter::Z => &(&ad * &a).scale_real(2.0) - &HatElement::one(),
    }
}

/// `Tψ(S_x)(a_x − a_x*)` without the factor `i`; equals `−i·ψ(σ₂⁽ˣ⁾)`.
pub fn psi_sigma2_without_i(x: Site) -> HatElement {
    &(&t_element() * &psi(&s_string(x))) * &(&annihilator(x) - &creator(x))
}

/// The four bilinear combinations of `a_x^♯` and `a_{x+n}^♯`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BilinearKind {
    /// `a_x* a_{x+n} − a_{x+n}* a_x`
    HopAsym,
    /// `a_x* a_{x+n}* − a_{x+n} a_x`
    PairAsym,
    /// `a_x* a_{x+n}* + a_{x+n} a_x`
    PairSym,
    /// `a_x* a_{x+n} + a_{x+n}* a_x`
    HopSym,
}

impl BilinearKind {
    pub const ALL: [BilinearKind; 4] =
        [BilinearKind::HopAsym, BilinearKind::PairAsym, BilinearKind::PairSym, BilinearKind::HopSym];
}

/// The bilinear as a fermion polynomial (two terms).
pub fn bilinear_poly(x: Site, n: u32, kind: BilinearKind) -> FermionPolynomial {
    let y = x + n as Site;
    let (cx, ax) = (FermionFactor::create(x), FermionFactor::annihilate(x));
    let (cy, ay) = (FermionFactor::create(y), FermionFactor::annihilate(y));
    let one = c(1.0, 0.0);
    let (first, second, sign) = match kind {
        BilinearKind::HopAsym => ([cx, ay], [cy, ax], -1.0),
        BilinearKind::PairAsym => ([cx, cy], [ay, ax], -1.0),
        BilinearKind::PairSym => ([cx, cy], [ay, ax], 1.0),
        BilinearKind::HopSym => ([cx, ay], [cy, ax], 1.0),
    };
    FermionPolynomial::from_terms([
        (FermionMonomial::new(first.to_vec()), one),
        (FermionMonomial::new(second.to_vec()), one * sign),
    ])
}

pub fn bilinear_hat(x: Site, n: u32, kind: BilinearKind) -> HatElement {
    bilinear_poly(x, n, kind).to_hat()
}

/// `σ_k⁽ˣ⁾ (∏_{x<z<x+n} σ₃⁽ᶻ⁾) σ_l⁽ˣ⁺ⁿ⁾`.
fn bond(x: Site, n: u32, k: PauliLetter, l: PauliLetter) -> SpinElement {
    let y = x + n as Site;
    let mut p = PauliString::from_letters((x + 1..y).map(|z| (z, PauliLetter::Z)));
    p.set(x, k);
    p.set(y, l);
    SpinElement::from_string(p, c(1.0, 0.0))
}

/// `ψ⁻¹` of [`bilinear_hat`], as a closed-form spin string combination.
pub fn bilinear_to_spin(x: Site, n: u32, kind: BilinearKind) -> SpinElement {
    assert!(n >= 1, "bond length must be positive");
    use PauliLetter::{X, Y};
    let xy = bond(x, n, X, Y);
    let yx = bond(x, n, Y, X);
    let xx = bond(x, n, X, X);
    let yy = bond(x, n, Y, Y);
    match kind {
        BilinearKind::HopAsym => (&xy - &yx).scale(c(0.0, 0.5)),
        BilinearKind::PairAsym => (&xy + &yx).scale(c(0.0, -0.5)),
        BilinearKind::PairSym => (&xx - &yy).scale_real(-0.5),
        BilinearKind::HopSym => (&xx + &yy).scale_real(-0.5),
    }
}

/// `ψ⁻¹(x)` for `x` with vanishing `T`-component.
pub fn psi_inverse(x: &HatElement) -> Result<SpinElement> {
    if x.in_psi_image() {
        Ok(x.a.clone())
    } else {
        Err(Error::NotInPsiImage)
    }
}

/// Result of rewriting one XY bond with a transverse field.
#[derive(Debug, Clone, PartialEq)]
pub struct XyTransform {
    /// `(1+γ)σ₁⁽ˣ⁾σ₁⁽ˣ⁺¹⁾ + (1−γ)σ₂⁽ˣ⁾σ₂⁽ˣ⁺¹⁾ + λσ₃⁽ˣ⁾`
    pub spin: SpinElement,
    /// `ψ(spin)`
    pub fermion: HatElement,
    /// `spin` rewritten as a normal-ordered fermion polynomial on `{x, x+1}`.
    pub fermion_poly: FermionPolynomial,
    /// `a_x*a_{x+1} + a_{x+1}*a_x + γ(a_x*a_{x+1}* + a_{x+1}a_x)`
    pub density: FermionPolynomial,
    pub report: ProportionalityReport,
}

/// `bond = factor · density`, with the least-squares factor and what is left over.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProportionalityReport {
    pub factor: [f64; 2],
    pub residual: f64,
}

pub fn xy_density(gamma: f64, x: Site) -> FermionPolynomial {
    let hop = bilinear_poly(x, 1, BilinearKind::HopSym);
    let pair = bilinear_poly(x, 1, BilinearKind::PairSym);
    let mut out = hop;
    for (m, v) in pair.terms() {
        out.add_term(m.clone(), v * gamma);
    }
    out
}

/// Finds `c` minimizing `‖bond − c·density‖` in the trace norm and reports both.
pub fn proportionality(bond: &HatElement, density: &HatElement) -> ProportionalityReport {
    let denom = density.trace_inner(density);
    let factor = if denom.norm() == 0.0 { c(0.0, 0.0) } else { density.trace_inner(bond) / denom };
    let residual = (bond - &density.scale(factor)).hilbert_schmidt_norm();
    ProportionalityReport { factor: [factor.re, factor.im], residual }
}

pub fn xy_transform(gamma: f64, lambda: f64, x: Site) -> XyTransform {
    use PauliLetter::{X, Y, Z};
    let bond_spin = &bond(x, 1, X, X).scale_real(1.0 + gamma) + &bond(x, 1, Y, Y).scale_real(1.0 - gamma);
    let spin = &bond_spin + &sigma(Z, x).scale_real(lambda);
    let fermion = psi(&spin);
    let fermion_poly = normal_order(&fermion, &Window::new([x, x + 1])).expect("even local element");
    let density = xy_density(gamma, x);
    let report = proportionality(&psi(&bond_spin), &density.to_hat());
    XyTransform { spin, fermion, fermion_poly, density, report }
}

/// Bond terms of an exchange coupling split by symmetry of `J`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeParts {
    pub direct: SpinElement,
    pub symmetric: SpinElement,
    pub antisymmetric: SpinElement,
}

/// Splits `Σ_{i,j ∈ {1,2}} J_ij σ_i⁽ˣ⁾σ_j⁽ˣ⁺¹⁾`; the third row and column of `J` do not enter.
pub fn exchange_decompose(j: &[[f64; 3]; 3], x: Site) -> ExchangeParts {
    use PauliLetter::{X, Y};
    let xx = bond(x, 1, X, X);
    let yy = bond(x, 1, Y, Y);
    let xy = bond(x, 1, X, Y);
    let yx = bond(x, 1, Y, X);
    let direct = &(&xx + &yy).scale_real((j[0][0] + j[1][1]) / 2.0) + &(&xx - &yy).scale_real((j[0][0] - j[1][1]) / 2.0);
    let symmetric = (&xy + &yx).scale_real((j[0][1] + j[1][0]) / 2.0);
    let antisymmetric = (&xy - &yx).scale_real((j[0][1] - j[1][0]) / 2.0);
    ExchangeParts { direct, symmetric, antisymmetric }
}

/// Both sides of the obstruction to a homomorphism `σ₋⁽ˣ⁾ ↦ a_x`.
#[derive(Debug, Clone, PartialEq)]
pub struct NonpreservationWitness {
    /// `[σ₋⁽ˣ⁾, σ₋⁽ʸ⁾]`, always zero.
    pub spin_commutator: SpinElement,
    /// `[a_x, a_y]`
    pub fermion_commutator: HatElement,
    /// `2 a_x a_y`
    pub twice_product: HatElement,
    /// `‖a_x a_y‖`
    pub product_norm: f64,
    /// `a_y*a_y a_x + a_y a_y* a_x − a_x`; zero by the CAR, so `a_y a_x = 0` would force `a_x = 0`.
    pub recovery_residual: HatElement,
}

pub fn nonpreservation_witness(x: Site, y: Site) -> NonpreservationWitness {
    let ax = annihilator(x);
    let ay = annihilator(y);
    let ayd = creator(y);
    let recovered = &(&(&ayd * &ay) * &ax) + &(&(&ay * &ayd) * &ax);
    NonpreservationWitness {
        spin_commutator: sigma_pm(Ladder::Minus, x).commutator(&sigma_pm(Ladder::Minus, y)),
        fermion_commutator: ax.commutator(&ay),
        twice_product: (&ax * &ay).scale_real(2.0),
        product_norm: hat_norm(&(&ax * &ay)),
        recovery_residual: &recovered - &ax,
    }
}
