//! Pauli-string algebra on the spin chain over `ℤ`, its `ℤ₂` crossed-product
//! extension by the half-chain rotation, and the Araki–Jordan–Wigner fermions
//! living in that extension.
//!
//! Everything is finitely supported: a [`SpinElement`] is a finite linear
//! combination of Pauli strings, a [`HatElement`] is a pair `(a, b)` standing
//! for `ψ(a) + ψ(b)·T`. Dense matrices appear only as a numerical oracle and
//! for norms.

pub mod car;
pub mod crossed;
pub mod dense;
pub mod error;
pub mod jw;
pub mod pauli;
pub mod random;
pub mod spin_ops;
pub mod verify;
pub mod window;

pub use car::{annihilator, creator, FermionMonomial, FermionPolynomial, MatrixUnitIndex};
pub use crossed::{psi, t_element, HatElement, ModuleVector, Z2Function};
pub use error::{Error, Result};
pub use pauli::{PauliLetter, PauliString, Phase, Site, SpinElement};
pub use spin_ops::{epsilon, s_string, sigma, sigma_pm, theta, theta_prime, Ladder, PrefactorSign};
pub use window::Window;
