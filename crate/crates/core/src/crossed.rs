//! The extension of the spin algebra by the anchor element `T`.
//!
//! An element is stored as a pair `(a, b)` meaning `ψ(a) + ψ(b)·T`, which is the
//! block matrix `[[a, b], [Θ′(b), Θ′(a)]]` over the spin algebra. `T` is a
//! self-adjoint unitary with `T ψ(A) T = ψ(Θ′(A))`.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dense::{self, DenseMatrix, DenseVector};
use crate::error::Result;
use crate::pauli::SpinElement;
use crate::spin_ops::{theta, theta_prime};
use crate::window::Window;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct HatElement {
    pub a: SpinElement,
    pub b: SpinElement,
}

/// `ψ(a) = (a, 0)`.
pub fn psi(a: &SpinElement) -> HatElement {
    HatElement { a: a.clone(), b: SpinElement::zero() }
}

/// The anchor element `T = (0, 1)`.
pub fn t_element() -> HatElement {
    HatElement { a: SpinElement::zero(), b: SpinElement::one() }
}

impl HatElement {
    pub fn new(a: SpinElement, b: SpinElement) -> Self {
        HatElement { a, b }
    }

    pub fn zero() -> Self {
        HatElement::default()
    }

    pub fn one() -> Self {
        psi(&SpinElement::one())
    }

    pub fn scalar(c: Complex64) -> Self {
        psi(&SpinElement::scalar(c))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the `T`-component vanishes, i.e. the element lies in `ψ(𝔄)`.
    pub fn in_psi_image(&self) -> bool {
        self.b.is_zero()
    }

    pub fn scale(&self, c: Complex64) -> HatElement {
        HatElement { a: self.a.scale(c), b: self.b.scale(c) }
    }

    pub fn scale_real(&self, r: f64) -> HatElement {
        self.scale(Complex64::new(r, 0.0))
    }

    /// `(a, b)(c, d) = (ac + bΘ′(d), ad + bΘ′(c))`.
    pub fn mul(&self, y: &HatElement) -> HatElement {
        let a = &(&self.a * &y.a) + &(&self.b * &theta_prime(&y.b));
        let b = &(&self.a * &y.b) + &(&self.b * &theta_prime(&y.a));
        HatElement { a, b }
    }

    /// `(a, b)* = (a*, Θ′(b*))`.
    pub fn adjoint(&self) -> HatElement {
        HatElement { a: self.a.adjoint(), b: theta_prime(&self.b.adjoint()) }
    }

    /// `Θ̂(a, b) = (Θa, Θb)`.
    pub fn theta(&self) -> HatElement {
        HatElement { a: theta(&self.a), b: theta(&self.b) }
    }

    /// `(x + Θ̂x)/2` and `(x − Θ̂x)/2`.
    pub fn even_odd_split(&self) -> (HatElement, HatElement) {
        let t = self.theta();
        ((self + &t).scale_real(0.5), (self - &t).scale_real(0.5))
    }

    pub fn commutator(&self, y: &HatElement) -> HatElement {
        &(self * y) - &(y * self)
    }

    pub fn anticommutator(&self, y: &HatElement) -> HatElement {
        &(self * y) + &(y * self)
    }

    /// Joint support of both components.
    pub fn support(&self) -> Window {
        self.a.support().union(&self.b.support())
    }

    pub fn max_abs_diff(&self, other: &HatElement) -> f64 {
        self.a.max_abs_diff(&other.a).max(self.b.max_abs_diff(&other.b))
    }

    /// `τ̂(x* y)`, where `τ̂` reads off the unit coefficient of the `ψ` part.
    pub fn trace_inner(&self, y: &HatElement) -> Complex64 {
        self.a.trace_inner(&y.a) + self.b.trace_inner(&y.b)
    }

    /// `sqrt(τ̂(x* x))`.
    pub fn hilbert_schmidt_norm(&self) -> f64 {
        (self.a.hilbert_schmidt_norm().powi(2) + self.b.hilbert_schmidt_norm().powi(2)).sqrt()
    }
}

impl Add for &HatElement {
    type Output = HatElement;
    fn add(self, y: &HatElement) -> HatElement {
        HatElement { a: &self.a + &y.a, b: &self.b + &y.b }
    }
}

impl Sub for &HatElement {
    type Output = HatElement;
    fn sub(self, y: &HatElement) -> HatElement {
        HatElement { a: &self.a - &y.a, b: &self.b - &y.b }
    }
}

impl Mul for &HatElement {
    type Output = HatElement;
    fn mul(self, y: &HatElement) -> HatElement {
        HatElement::mul(self, y)
    }
}

impl Neg for &HatElement {
    type Output = HatElement;
    fn neg(self) -> HatElement {
        self.scale_real(-1.0)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for HatElement {
            type Output = HatElement;
            fn $m(self, rhs: HatElement) -> HatElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&HatElement> for HatElement {
            type Output = HatElement;
            fn $m(self, rhs: &HatElement) -> HatElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<HatElement> for &HatElement {
            type Output = HatElement;
            fn $m(self, rhs: HatElement) -> HatElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for HatElement {
    type Output = HatElement;
    fn neg(self) -> HatElement {
        -&self
    }
}

impl std::iter::Sum for HatElement {
    fn sum<I: Iterator<Item = HatElement>>(iter: I) -> HatElement {
        iter.fold(HatElement::zero(), |acc, x| &acc + &x)
    }
}

impl std::iter::Product for HatElement {
    fn product<I: Iterator<Item = HatElement>>(iter: I) -> HatElement {
        iter.fold(HatElement::one(), |acc, x| &acc * &x)
    }
}

pub fn hat_mul(x: &HatElement, y: &HatElement) -> HatElement {
    x.mul(y)
}

pub fn hat_adjoint(x: &HatElement) -> HatElement {
    x.adjoint()
}

pub fn hat_theta(x: &HatElement) -> HatElement {
    x.theta()
}

pub fn even_odd_split(x: &HatElement) -> (HatElement, HatElement) {
    x.even_odd_split()
}

/// Block matrix `[[A, B], [Θ′B, Θ′A]]` with the block index as the outermost factor.
pub fn represent_hat(x: &HatElement, w: &Window) -> Result<DenseMatrix> {
    let a = dense::represent(&x.a, w)?;
    let b = dense::represent(&x.b, w)?;
    let tb = dense::represent(&theta_prime(&x.b), w)?;
    let ta = dense::represent(&theta_prime(&x.a), w)?;
    let d = a.nrows();
    let mut m = DenseMatrix::zeros(2 * d, 2 * d);
    m.view_mut((0, 0), (d, d)).copy_from(&a);
    m.view_mut((0, d), (d, d)).copy_from(&b);
    m.view_mut((d, 0), (d, d)).copy_from(&tb);
    m.view_mut((d, d), (d, d)).copy_from(&ta);
    Ok(m)
}

/// Matrix-free action of [`represent_hat`] on a vector of length `2·2ⁿ`.
pub fn apply_hat(x: &HatElement, w: &Window, v: &DenseVector) -> Result<DenseVector> {
    let d = v.len() / 2;
    let v1 = v.rows(0, d).into_owned();
    let v2 = v.rows(d, d).into_owned();
    let top = dense::apply(&x.a, w, &v1)? + dense::apply(&x.b, w, &v2)?;
    let bot = dense::apply(&theta_prime(&x.b), w, &v1)? + dense::apply(&theta_prime(&x.a), w, &v2)?;
    let mut out = DVector::zeros(2 * d);
    out.rows_mut(0, d).copy_from(&top);
    out.rows_mut(d, d).copy_from(&bot);
    Ok(out)
}

/// Window used for norms: the joint support, or `{0}` for scalar combinations of `1` and `T`.
pub fn norm_window(x: &HatElement) -> Window {
    let w = x.support();
    if w.is_empty() {
        Window::new([0])
    } else {
        w
    }
}

/// The C*-norm, as the spectral norm of the block representation.
pub fn hat_norm(x: &HatElement) -> f64 {
    let w = norm_window(x);
    dense::spectral_norm(&represent_hat(x, &w).expect("support lies in its own window"))
}

/// A function `ℤ₂ → 𝔄`, stored by its values at `1` and `−1`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Z2Function {
    pub at_plus: SpinElement,
    pub at_minus: SpinElement,
}

impl Z2Function {
    pub fn new(at_plus: SpinElement, at_minus: SpinElement) -> Self {
        Z2Function { at_plus, at_minus }
    }
}

/// Twisted convolution with counting measure on `ℤ₂`.
pub fn z2_mul(f: &Z2Function, g: &Z2Function) -> Z2Function {
    Z2Function {
        at_plus: &(&f.at_plus * &g.at_plus) + &(&f.at_minus * &theta_prime(&g.at_minus)),
        at_minus: &(&f.at_plus * &g.at_minus) + &(&f.at_minus * &theta_prime(&g.at_plus)),
    }
}

pub fn z2_invo(f: &Z2Function) -> Z2Function {
    Z2Function { at_plus: f.at_plus.adjoint(), at_minus: theta_prime(&f.at_minus.adjoint()) }
}

/// `Φ(f) = ψ(f(1)) + ψ(f(−1))·T`.
pub fn phi_iso(f: &Z2Function) -> HatElement {
    HatElement { a: f.at_plus.clone(), b: f.at_minus.clone() }
}

pub fn phi_inv(x: &HatElement) -> Z2Function {
    Z2Function { at_plus: x.a.clone(), at_minus: x.b.clone() }
}

/// An element of the right Hilbert module `𝔄²`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ModuleVector {
    pub v1: SpinElement,
    pub v2: SpinElement,
}

impl ModuleVector {
    pub fn new(v1: SpinElement, v2: SpinElement) -> Self {
        ModuleVector { v1, v2 }
    }

    pub fn support(&self) -> Window {
        self.v1.support().union(&self.v2.support())
    }
}

/// `⟨v, w⟩ = v₁* w₁ + v₂* w₂`.
pub fn module_inner(v: &ModuleVector, w: &ModuleVector) -> SpinElement {
    &(&v.v1.adjoint() * &w.v1) + &(&v.v2.adjoint() * &w.v2)
}

pub fn module_norm(v: &ModuleVector) -> f64 {
    dense::norm(&module_inner(v, v)).sqrt()
}

/// A `2 × 2` matrix over the spin algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix {
    pub entries: [[SpinElement; 2]; 2],
}

impl BlockMatrix {
    /// The block form `[[a, b], [Θ′b, Θ′a]]` of `(a, b)`.
    pub fn from_hat(x: &HatElement) -> Self {
        BlockMatrix {
            entries: [[x.a.clone(), x.b.clone()], [theta_prime(&x.b), theta_prime(&x.a)]],
        }
    }

    /// `(t_X v)_i = Σ_j X_ij v_j`.
    pub fn apply(&self, v: &ModuleVector) -> ModuleVector {
        let e = &self.entries;
        ModuleVector {
            v1: &(&e[0][0] * &v.v1) + &(&e[0][1] * &v.v2),
            v2: &(&e[1][0] * &v.v1) + &(&e[1][1] * &v.v2),
        }
    }
}

pub fn t_apply(x: &HatElement, v: &ModuleVector) -> ModuleVector {
    BlockMatrix::from_hat(x).apply(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::PauliLetter::*;
    use crate::spin_ops::sigma;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn anchor_relations() {
        let t = t_element();
        assert_eq!(&t * &t, HatElement::one());
        assert_eq!(t.adjoint(), t);
        let s = psi(&sigma(X, 0));
        assert_eq!(&(&t * &s) * &t, -&s);
        let s1 = psi(&sigma(X, 1));
        assert_eq!(&(&t * &s1) * &t, s1);
        assert!((hat_norm(&t) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_examples() {
        let a = sigma(Y, -1) + sigma(Z, 2).scale(c(0.0, 1.0));
        let cc = sigma(X, 0);
        assert_eq!(psi(&a) * psi(&cc), psi(&(&a * &cc)));
        assert_eq!(t_element() * psi(&cc), HatElement::new(SpinElement::zero(), theta_prime(&cc)));
    }

    #[test]
    fn theta_hat_examples() {
        assert_eq!(t_element().theta(), t_element());
        let a = sigma(X, 3);
        assert_eq!(psi(&a).theta(), psi(&theta(&a)));
        let (e, o) = psi(&sigma(Z, 0)).even_odd_split();
        assert_eq!(e, psi(&sigma(Z, 0)));
        assert!(o.is_zero());
    }

    #[test]
    fn represent_hat_of_t() {
        let m = represent_hat(&t_element(), &Window::new([0])).unwrap();
        let mut expect = DenseMatrix::zeros(4, 4);
        for i in 0..2 {
            expect[(i, i + 2)] = c(1.0, 0.0);
            expect[(i + 2, i)] = c(1.0, 0.0);
        }
        assert_eq!(m, expect);
        let id = represent_hat(&HatElement::one(), &Window::new([0])).unwrap();
        assert_eq!(id, DenseMatrix::identity(4, 4));
    }

    #[test]
    fn represent_hat_is_multiplicative() {
        let x = HatElement::new(sigma(X, 0) + sigma(Z, 1), sigma(Y, -1).scale(c(0.0, 2.0)));
        let y = HatElement::new(sigma(Y, 0), sigma(X, 1) + SpinElement::one());
        let w = Window::new([-1, 0, 1]);
        let lhs = represent_hat(&(&x * &y), &w).unwrap();
        let rhs = represent_hat(&x, &w).unwrap() * represent_hat(&y, &w).unwrap();
        assert!((lhs - rhs).iter().all(|z| z.norm() < 1e-12));
        let adj = represent_hat(&x.adjoint(), &w).unwrap();
        assert!((adj - represent_hat(&x, &w).unwrap().adjoint()).iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn apply_hat_matches_represent_hat() {
        let x = HatElement::new(sigma(X, 0), sigma(Y, 2) + sigma(Z, 0));
        let w = Window::new([0, 2]);
        let v = DVector::from_fn(8, |i, _| c(1.0 + i as f64, -(i as f64)));
        let lhs = apply_hat(&x, &w, &v).unwrap();
        let rhs = represent_hat(&x, &w).unwrap() * &v;
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn z2_examples() {
        let one = Z2Function::new(SpinElement::one(), SpinElement::zero());
        let g = Z2Function::new(sigma(X, 0), sigma(Y, -2));
        assert_eq!(z2_mul(&one, &g), g);
        let t = Z2Function::new(SpinElement::zero(), SpinElement::one());
        assert_eq!(z2_mul(&t, &t), one);
        assert_eq!(phi_iso(&one), HatElement::one());
        assert_eq!(phi_iso(&t), t_element());
        assert_eq!(phi_inv(&phi_iso(&g)), g);
    }

    #[test]
    fn module_examples() {
        let e = ModuleVector::new(SpinElement::one(), SpinElement::zero());
        assert_eq!(module_inner(&e, &e), SpinElement::one());
        let v = ModuleVector::new(sigma(X, 0), SpinElement::zero());
        assert!((module_norm(&v) - 1.0).abs() < 1e-12);
        let x = t_element();
        let tv = t_apply(&x, &v);
        assert_eq!(tv, ModuleVector::new(SpinElement::zero(), sigma(X, 0)));
    }

    #[test]
    fn json_form() {
        let x = HatElement::new(sigma(Z, 0), SpinElement::one());
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(
            js,
            r#"{"a":[{"coeff":[1.0,0.0],"factors":[{"site":0,"axis":3}]}],"b":[{"coeff":[1.0,0.0],"factors":[]}]}"#
        );
        assert_eq!(serde_json::from_str::<HatElement>(&js).unwrap(), x);
    }
}
