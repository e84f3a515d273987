//! Seeded random elements for property checks.
//!
//! Coefficients are small Gaussian integers, so sums and products of a few
//! random elements are exact in `f64` and identities can be compared exactly.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::car::{FermionFactor, FermionMonomial, FermionPolynomial};
use crate::crossed::{HatElement, ModuleVector};
use crate::pauli::{PauliLetter, PauliString, Site, SpinElement};
use crate::window::Window;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m + n·i` with `m, n ∈ {−2, …, 2}`, not both zero.
pub fn gaussian_integer<R: Rng>(rng: &mut R) -> Complex64 {
    loop {
        let z = Complex64::new(rng.gen_range(-2..=2) as f64, rng.gen_range(-2..=2) as f64);
        if z.norm() > 0.0 {
            return z;
        }
    }
}

/// A random string with at most `max_weight` letters drawn from `sites`.
pub fn random_string<R: Rng>(rng: &mut R, sites: &[Site], max_weight: usize) -> PauliString {
    let k = rng.gen_range(0..=max_weight.min(sites.len()));
    let chosen: Vec<Site> = sites.choose_multiple(rng, k).copied().collect();
    PauliString::from_letters(chosen.into_iter().map(|s| (s, PauliLetter::ALL[rng.gen_range(1..4)])))
}

/// A random element with up to `max_terms` terms supported in `sites`.
pub fn random_spin<R: Rng>(rng: &mut R, sites: &[Site], max_terms: usize) -> SpinElement {
    let n = rng.gen_range(1..=max_terms.max(1));
    SpinElement::from_terms((0..n).map(|_| (random_string(rng, sites, sites.len()), gaussian_integer(rng))))
}

/// `count` distinct sites drawn from `[lo, hi]`.
pub fn random_window<R: Rng>(rng: &mut R, lo: Site, hi: Site, count: usize) -> Window {
    let all: Vec<Site> = (lo..=hi).collect();
    Window::new(all.choose_multiple(rng, count.min(all.len())).copied())
}

pub fn random_hat<R: Rng>(rng: &mut R, sites: &[Site], max_terms: usize) -> HatElement {
    HatElement::new(random_spin(rng, sites, max_terms), random_spin(rng, sites, max_terms))
}

pub fn random_module_vector<R: Rng>(rng: &mut R, sites: &[Site], max_terms: usize) -> ModuleVector {
    ModuleVector::new(random_spin(rng, sites, max_terms), random_spin(rng, sites, max_terms))
}

pub fn random_monomial<R: Rng>(rng: &mut R, sites: &[Site], max_degree: usize) -> FermionMonomial {
    let d = rng.gen_range(0..=max_degree);
    FermionMonomial::new(
        (0..d)
            .map(|_| FermionFactor { site: *sites.choose(rng).expect("nonempty sites"), dagger: rng.gen_bool(0.5) })
            .collect(),
    )
}

pub fn random_fermion_polynomial<R: Rng>(
    rng: &mut R,
    sites: &[Site],
    max_terms: usize,
    max_degree: usize,
) -> FermionPolynomial {
    let n = rng.gen_range(1..=max_terms.max(1));
    FermionPolynomial::from_terms((0..n).map(|_| (random_monomial(rng, sites, max_degree), gaussian_integer(rng))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_reproducible() {
        let sites: Vec<Site> = (-2..=3).collect();
        let a = random_spin(&mut rng(7), &sites, 5);
        let b = random_spin(&mut rng(7), &sites, 5);
        assert_eq!(a, b);
        assert!(a.support().is_subset(&Window::new(sites.iter().copied())));
    }

    #[test]
    fn windows_have_requested_size() {
        let w = random_window(&mut rng(1), -3, 3, 4);
        assert_eq!(w.len(), 4);
        assert!(w.iter().all(|s| (-3..=3).contains(&s)));
    }
}
