//! Named spin observables: `σ_κ⁽ˣ⁾`, raising/lowering operators, the
//! nonlocal multiplicator `S_x`, the prefactor `ε_xy`, and the rotations
//! `Θ` (all sites) and `Θ′` (sites `x ≤ 0` only).

use std::ops::Mul;

use num_complex::Complex64;

use crate::pauli::{PauliLetter, PauliString, Site, SpinElement};

/// A sign in `{−1, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrefactorSign {
    Minus,
    Plus,
}

impl PrefactorSign {
    /// `sign(x) = 1` iff `x ≥ 0`.
    pub fn of(x: Site) -> Self {
        if x >= 0 {
            PrefactorSign::Plus
        } else {
            PrefactorSign::Minus
        }
    }

    pub fn value(self) -> f64 {
        match self {
            PrefactorSign::Plus => 1.0,
            PrefactorSign::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            PrefactorSign::Plus => 1,
            PrefactorSign::Minus => -1,
        }
    }
}

impl Mul for PrefactorSign {
    type Output = PrefactorSign;
    fn mul(self, rhs: Self) -> Self {
        if self == rhs {
            PrefactorSign::Plus
        } else {
            PrefactorSign::Minus
        }
    }
}

impl std::ops::Neg for PrefactorSign {
    type Output = PrefactorSign;
    fn neg(self) -> Self {
        self * PrefactorSign::Minus
    }
}

/// Raising (`Plus`) or lowering (`Minus`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ladder {
    Plus,
    Minus,
}

pub fn sigma(kappa: PauliLetter, x: Site) -> SpinElement {
    SpinElement::from_string(PauliString::single(x, kappa), Complex64::new(1.0, 0.0))
}

/// `σ±⁽ˣ⁾ = (σ₁⁽ˣ⁾ ± i σ₂⁽ˣ⁾)/2`.
pub fn sigma_pm(sign: Ladder, x: Site) -> SpinElement {
    let s = match sign {
        Ladder::Plus => 1.0,
        Ladder::Minus => -1.0,
    };
    SpinElement::from_terms([
        (PauliString::single(x, PauliLetter::X), Complex64::new(0.5, 0.0)),
        (PauliString::single(x, PauliLetter::Y), Complex64::new(0.0, 0.5 * s)),
    ])
}

/// Sites of the σ₃ string making up `S_x`.
pub fn s_string_sites(x: Site) -> std::ops::RangeInclusive<Site> {
    if x >= 1 {
        1..=x - 1
    } else {
        x..=0
    }
}

/// `S_x`: product of σ₃ over `[1, x−1]` for `x ≥ 2`, `1` for `x = 1`, over `[x, 0]` for `x ≤ 0`.
pub fn s_string(x: Site) -> SpinElement {
    let p = PauliString::from_letters(s_string_sites(x).map(|y| (y, PauliLetter::Z)));
    SpinElement::from_string(p, Complex64::new(1.0, 0.0))
}

/// `ε_xy = −sign(y−x)·sign(−y)`.
pub fn epsilon(x: Site, y: Site) -> PrefactorSign {
    -(PrefactorSign::of(y - x) * PrefactorSign::of(-y))
}

fn flip_transverse<F: Fn(Site) -> bool>(a: &SpinElement, keep: F) -> SpinElement {
    a.map_coeffs(|s, c| if s.transverse_count(&keep) % 2 == 1 { -c } else { c })
}

/// Rotation by π about the 3-axis at every site.
pub fn theta(a: &SpinElement) -> SpinElement {
    flip_transverse(a, |_| true)
}

/// Rotation by π about the 3-axis at sites `x ≤ 0`.
pub fn theta_prime(a: &SpinElement) -> SpinElement {
    flip_transverse(a, |s| s <= 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use PauliLetter::*;

    fn one() -> SpinElement {
        SpinElement::one()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(I, 7), one());
        assert_eq!(sigma(Z, 0).support().sites(), &[0]);
        assert_eq!(sigma(X, -4).to_string(), "1 * X(-4)");
    }

    #[test]
    fn ladder_relations() {
        let p = sigma_pm(Ladder::Plus, 0);
        let m = sigma_pm(Ladder::Minus, 0);
        assert_eq!(&p * &m, (sigma(Z, 0) + one()).scale_real(0.5));
        assert_eq!(p.anticommutator(&m), one());
        assert!(p.commutator(&sigma_pm(Ladder::Minus, 1)).is_zero());
        assert_eq!(p.adjoint(), m);
        assert!((&m * &m).is_zero());
    }

    #[test]
    fn s_string_examples() {
        assert_eq!(s_string(1), one());
        assert_eq!(s_string(3), &sigma(Z, 1) * &sigma(Z, 2));
        assert_eq!(s_string(0), sigma(Z, 0));
        assert_eq!(s_string(-2), &(&sigma(Z, -2) * &sigma(Z, -1)) * &sigma(Z, 0));
        assert_eq!(s_string(2), sigma(Z, 1));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(0, 0), PrefactorSign::Minus);
        assert_eq!(epsilon(1, 1), PrefactorSign::Plus);
        for x in -8..=8 {
            let expect = PrefactorSign::of(x - 1);
            assert_eq!(epsilon(x, x), expect, "x = {x}");
        }
    }

    #[test]
    fn epsilon_is_commutation_sign_of_s_string() {
        for x in -8..=8 {
            let sx = s_string(x);
            for y in -8..=8 {
                for k in [X, Y] {
                    let s = sigma(k, y);
                    let lhs = &sx * &s;
                    let rhs = (&s * &sx).scale_real(epsilon(x, y).value());
                    assert_eq!(lhs, rhs, "x = {x}, y = {y}");
                }
            }
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(theta_prime(&sigma(X, 0)), sigma(X, 0).scale_real(-1.0));
        assert_eq!(theta_prime(&sigma(X, 1)), sigma(X, 1));
        assert_eq!(theta(&sigma(Z, 4)), sigma(Z, 4));
        assert_eq!(theta(&sigma(Y, 4)), sigma(Y, 4).scale_real(-1.0));
        let xx = &sigma(X, 0) * &sigma(Y, 1);
        assert_eq!(theta(&xx), xx);
        assert_eq!(theta_prime(&xx), xx.scale_real(-1.0));
    }
}
