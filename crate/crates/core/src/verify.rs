//! Named verification suites over the algebraic identities of the crate.
//!
//! Each suite returns one [`CheckResult`] per identity, carrying the worst
//! residual seen. Symbolic checks have threshold 0 unless they involve sums of
//! non-dyadic floats; numerical checks use the thresholds listed per check
//! unless a global tolerance override is supplied.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::car::{
    annihilator, car_check, creator, e_basis, matrix_unit_e, matrix_unit_f, MatrixUnitIndex,
};
use crate::crossed::{
    apply_hat, hat_norm, module_inner, module_norm, norm_window, phi_iso, psi, represent_hat, t_apply, t_element,
    z2_invo, z2_mul, HatElement, Z2Function,
};
use crate::dense::{self, kron, DenseVector};
use crate::jw::{
    bilinear_hat, bilinear_to_spin, consistency_check, nonpreservation_witness, psi_inverse, psi_sigma,
    vartheta, vartheta_inverse, xy_transform, BilinearKind,
};
use crate::pauli::{PauliLetter, PauliString, Site, SpinElement};
use crate::random::{self, SeededRng};
use crate::spin_ops::{s_string, sigma, theta, theta_prime};
use crate::window::Window;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub residual: f64,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Car,
    Rotations,
    Crossed,
    Jw,
    Norms,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Car, Suite::Rotations, Suite::Crossed, Suite::Jw, Suite::Norms];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Car => "car",
            Suite::Rotations => "rotations",
            Suite::Crossed => "crossed",
            Suite::Jw => "jw",
            Suite::Norms => "norms",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub lo: Site,
    pub hi: Site,
    pub window: usize,
    pub seed: u64,
    /// Replaces every numerical threshold when set.
    pub tol: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { lo: -6, hi: 6, window: 3, seed: 42, tol: None }
    }
}

struct Collector<'a> {
    cfg: &'a VerifyConfig,
    checks: Vec<CheckResult>,
}

impl<'a> Collector<'a> {
    fn new(cfg: &'a VerifyConfig) -> Self {
        Collector { cfg, checks: Vec::new() }
    }

    fn exact(&mut self, name: &str, cases: usize, residual: f64) {
        self.push(name, cases, residual, 0.0);
    }

    fn numeric(&mut self, name: &str, cases: usize, residual: f64, threshold: f64) {
        let t = self.cfg.tol.unwrap_or(threshold);
        self.push(name, cases, residual, t);
    }

    fn push(&mut self, name: &str, cases: usize, residual: f64, threshold: f64) {
        let passed = residual.is_finite() && residual <= threshold;
        self.checks.push(CheckResult { name: name.to_string(), passed, cases, residual, threshold });
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        SuiteReport { suite: suite.name().to_string(), checks: self.checks }
    }
}

fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    match suite {
        Suite::Car => car_suite(cfg),
        Suite::Rotations => rotations_suite(cfg),
        Suite::Crossed => crossed_suite(cfg),
        Suite::Jw => jw_suite(cfg),
        Suite::Norms => norms_suite(cfg),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| run(*s, cfg)).collect()
}

pub fn random_vector(rng: &mut SeededRng, dim: usize) -> DenseVector {
    DVector::from_fn(dim, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

/// `max ‖(xy + yx − c)v‖ / ‖v‖` over random `v`, evaluated by
/// successive matrix-free applications on window `w`.
pub fn dense_anticommutator_residual(
    x: &HatElement,
    y: &HatElement,
    expected: Complex64,
    w: &Window,
    rng: &mut SeededRng,
    samples: usize,
) -> f64 {
    let dim = 2usize << w.len();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let v = random_vector(rng, dim);
        let xy = apply_hat(x, w, &apply_hat(y, w, &v).expect("window")).expect("window");
        let yx = apply_hat(y, w, &apply_hat(x, w, &v).expect("window")).expect("window");
        let r = xy + yx - v.map(|z| z * expected);
        worst = worst.max(r.norm() / v.norm());
    }
    worst
}

/// CAR relations over `[lo, hi]²`, symbolically and on dense vectors.
pub fn car_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut col = Collector::new(cfg);
    let mut rng = random::rng(cfg.seed);
    let sites: Vec<Site> = (cfg.lo..=cfg.hi).collect();
    let pairs = sites.len() * sites.len();
    let mut sym = 0.0f64;
    let mut num = 0.0f64;
    for &x in &sites {
        for &y in &sites {
            let (aa, aad) = car_check(x, y);
            let delta = if x == y { HatElement::one() } else { HatElement::zero() };
            sym = sym.max(aa.max_abs_diff(&HatElement::zero())).max(aad.max_abs_diff(&delta));
            let ax = annihilator(x);
            let w = norm_window(&ax).union(&norm_window(&annihilator(y)));
            let d = if x == y { 1.0 } else { 0.0 };
            num = num
                .max(dense_anticommutator_residual(&ax, &annihilator(y), 0.0.into(), &w, &mut rng, 1))
                .max(dense_anticommutator_residual(&ax, &creator(y), d.into(), &w, &mut rng, 1));
        }
    }
    col.exact("car.symbolic", pairs, sym);
    col.numeric("car.dense", pairs, num, 1e-12);

    let mut parity = 0.0f64;
    let mut form = 0.0f64;
    for &x in &sites {
        let ax = annihilator(x);
        parity = parity.max(ax.theta().max_abs_diff(&-&ax));
        let sign = if x >= 1 { 1.0 } else { -1.0 };
        let expected = HatElement::new(
            SpinElement::zero(),
            (&s_string(x) * &crate::spin_ops::sigma_pm(crate::spin_ops::Ladder::Minus, x)).scale_real(sign),
        );
        form = form.max(ax.max_abs_diff(&expected));
    }
    col.exact("car.parity", sites.len(), parity);
    col.exact("car.pair_form", sites.len(), form);

    let mut units = 0.0f64;
    for &x in &sites {
        units = units.max(f_unit_residual(x));
    }
    col.exact("car.f_units", sites.len(), units);
    col.finish(Suite::Car)
}

/// Matrix-unit axioms for the `f` family at site `x`.
pub fn f_unit_residual(x: Site) -> f64 {
    let f = |i| matrix_unit_f(x, i);
    unit_axiom_residual(&f)
}

/// `u_{αβ}u_{γδ} = δ_{βγ}u_{αδ}`, `u_{αβ}* = u_{βα}`, `u₁₁ + u₂₂ = 1`.
pub fn unit_axiom_residual(u: &dyn Fn(MatrixUnitIndex) -> HatElement) -> f64 {
    let mut r = 0.0f64;
    for p in MatrixUnitIndex::ALL {
        r = r.max(u(p).adjoint().max_abs_diff(&u(p.transpose())));
        for q in MatrixUnitIndex::ALL {
            let expected = if p.beta() == q.alpha() {
                u(MatrixUnitIndex::new(p.alpha(), q.beta()).expect("valid"))
            } else {
                HatElement::zero()
            };
            r = r.max((&u(p) * &u(q)).max_abs_diff(&expected));
        }
    }
    r.max((&u(MatrixUnitIndex::E11) + &u(MatrixUnitIndex::E22)).max_abs_diff(&HatElement::one()))
}

fn sites_of(lo: Site, hi: Site) -> Vec<Site> {
    (lo..=hi).collect()
}

/// Random elements supported on at most five sites of `[lo, hi]`.
fn small_support(rng: &mut SeededRng, cfg: &VerifyConfig, max_sites: usize) -> Vec<Site> {
    let w = random::random_window(rng, cfg.lo.min(-2), cfg.hi.max(2), max_sites);
    w.into()
}

pub fn rotations_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut col = Collector::new(cfg);
    let mut rng = random::rng(cfg.seed.wrapping_add(1));
    let cases = 50;
    let (mut inv, mut inv_p, mut comm, mut hom, mut adj) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..cases {
        let sites = small_support(&mut rng, cfg, 5);
        let a = random::random_spin(&mut rng, &sites, 4);
        let b = random::random_spin(&mut rng, &sites, 4);
        inv = inv.max(theta(&theta(&a)).max_abs_diff(&a));
        inv_p = inv_p.max(theta_prime(&theta_prime(&a)).max_abs_diff(&a));
        comm = comm.max(theta(&theta_prime(&a)).max_abs_diff(&theta_prime(&theta(&a))));
        let ab = &a * &b;
        hom = hom
            .max(theta(&ab).max_abs_diff(&(&theta(&a) * &theta(&b))))
            .max(theta_prime(&ab).max_abs_diff(&(&theta_prime(&a) * &theta_prime(&b))));
        adj = adj
            .max(theta(&a.adjoint()).max_abs_diff(&theta(&a).adjoint()))
            .max(theta_prime(&a.adjoint()).max_abs_diff(&theta_prime(&a).adjoint()));
    }
    col.exact("rotations.theta_involutive", cases, inv);
    col.exact("rotations.theta_prime_involutive", cases, inv_p);
    col.exact("rotations.commute", cases, comm);
    col.exact("rotations.multiplicative", cases, hom);
    col.exact("rotations.adjoint", cases, adj);

    let mut ax = 0.0f64;
    let xs = sites_of(cfg.lo.max(-4), cfg.hi.min(4));
    for &x in &xs {
        let a = annihilator(x);
        ax = ax.max(a.theta().max_abs_diff(&-&a));
    }
    col.exact("rotations.theta_hat_fermion", xs.len(), ax);

    let mut s_rel = 0.0f64;
    let mut eps = 0.0f64;
    let ss = sites_of(-8, 8);
    for &x in &ss {
        let sx = s_string(x);
        for &y in &ss {
            for k in [PauliLetter::X, PauliLetter::Y] {
                let s = sigma(k, y);
                eps = eps.max((&sx * &s).max_abs_diff(&(&s * &sx).scale_real(crate::spin_ops::epsilon(x, y).value())));
            }
            let prod = crate::spin_ops::epsilon(x, x).value()
                * crate::spin_ops::epsilon(y, y).value()
                * crate::spin_ops::epsilon(x, y).value()
                * crate::spin_ops::epsilon(y, x).value();
            let expect = if x == y { 1.0 } else { -1.0 };
            eps = eps.max((prod - expect).abs());
            if (-6..=6).contains(&x) && (-6..=6).contains(&y) {
                let sy = s_string(y);
                s_rel = s_rel
                    .max(sx.commutator(&sy).max_abs_coeff())
                    .max(sx.commutator(&sigma(PauliLetter::Z, y)).max_abs_coeff());
            }
        }
        if (-6..=6).contains(&x) {
            s_rel = s_rel.max(sx.adjoint().max_abs_diff(&sx)).max((&sx * &sx).max_abs_diff(&SpinElement::one()));
        }
    }
    col.exact("rotations.prefactor", ss.len() * ss.len(), eps);
    col.exact("rotations.s_string", 13 * 13, s_rel);
    col.finish(Suite::Rotations)
}

pub fn crossed_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut col = Collector::new(cfg);
    let mut rng = random::rng(cfg.seed.wrapping_add(2));
    let cases = 100;
    let (mut assoc, mut adj, mut cstar, mut anchor, mut oracle, mut theta_hat) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let (mut phi_mul, mut phi_star, mut phi_unit) = (0.0f64, 0.0f64, 0.0f64);
    let t = t_element();
    anchor = anchor.max((&t * &t).max_abs_diff(&HatElement::one())).max(t.adjoint().max_abs_diff(&t));
    for _ in 0..cases {
        let sites = small_support(&mut rng, cfg, 3);
        let x = random::random_hat(&mut rng, &sites, 3);
        let y = random::random_hat(&mut rng, &sites, 3);
        let z = random::random_hat(&mut rng, &sites, 3);
        assoc = assoc.max((&(&x * &y) * &z).max_abs_diff(&(&x * &(&y * &z))));
        adj = adj
            .max((&x * &y).adjoint().max_abs_diff(&(&y.adjoint() * &x.adjoint())))
            .max(x.adjoint().adjoint().max_abs_diff(&x));
        let n = hat_norm(&x);
        cstar = cstar.max((hat_norm(&(&x.adjoint() * &x)) - n * n).abs() / n.max(1.0).powi(2));
        let a = &x.a;
        anchor = anchor.max((&t * &psi(a)).max_abs_diff(&(&psi(&theta_prime(a)) * &t)));
        let w = x.support().union(&y.support()).union(&Window::new([sites[0]]));
        let lhs = represent_hat(&(&x * &y), &w).expect("window");
        let rhs = represent_hat(&x, &w).expect("window") * represent_hat(&y, &w).expect("window");
        oracle = oracle.max((lhs - rhs).iter().fold(0.0, |m, z| m.max(z.norm())));
        theta_hat = theta_hat
            .max(x.theta().theta().max_abs_diff(&x))
            .max((&x * &y).theta().max_abs_diff(&(&x.theta() * &y.theta())))
            .max(x.adjoint().theta().max_abs_diff(&x.theta().adjoint()));
        let f = Z2Function::new(x.a.clone(), x.b.clone());
        let g = Z2Function::new(y.a.clone(), y.b.clone());
        phi_mul = phi_mul.max(phi_iso(&z2_mul(&f, &g)).max_abs_diff(&(&phi_iso(&f) * &phi_iso(&g))));
        phi_star = phi_star.max(phi_iso(&z2_invo(&f)).max_abs_diff(&phi_iso(&f).adjoint()));
        let unit = Z2Function::new(SpinElement::one(), SpinElement::zero());
        phi_unit = phi_unit
            .max(phi_iso(&unit).max_abs_diff(&HatElement::one()))
            .max(z2_mul(&unit, &f).at_plus.max_abs_diff(&f.at_plus))
            .max(z2_mul(&unit, &f).at_minus.max_abs_diff(&f.at_minus));
    }
    col.exact("crossed.associative", cases, assoc);
    col.exact("crossed.adjoint", cases, adj);
    col.numeric("crossed.c_star_identity", cases, cstar, 1e-10);
    col.exact("crossed.anchor", cases, anchor);
    col.numeric("crossed.dense_oracle", cases, oracle, 1e-12);
    col.exact("crossed.theta_hat", cases, theta_hat);
    col.exact("crossed.phi_multiplicative", cases, phi_mul);
    col.exact("crossed.phi_involution", cases, phi_star);
    col.exact("crossed.phi_unit", cases, phi_unit);

    let samples = 200;
    let (mut bound, mut cs) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for _ in 0..samples {
        let sites = small_support(&mut rng, cfg, 3);
        let x = random::random_hat(&mut rng, &sites, 3);
        let v = random::random_module_vector(&mut rng, &sites, 3);
        let u = random::random_module_vector(&mut rng, &sites, 3);
        bound = bound.max(module_norm(&t_apply(&x, &v)) - hat_norm(&x) * module_norm(&v));
        cs = cs.max(dense::norm(&module_inner(&v, &u)) - module_norm(&v) * module_norm(&u));
    }
    col.numeric("crossed.module_bound", samples, bound.max(0.0), 1e-10);
    col.numeric("crossed.module_cauchy_schwarz", samples, cs.max(0.0), 1e-10);

    let polys = 50;
    let (mut even_b, mut odd_b, mut recon) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..polys {
        let sites = small_support(&mut rng, cfg, 3);
        let p = random::random_fermion_polynomial(&mut rng, &sites, 4, 4).to_hat();
        let (even, odd) = p.even_odd_split();
        even_b = even_b.max(even.b.max_abs_coeff());
        let ot = &odd * &t;
        odd_b = odd_b.max(ot.b.max_abs_coeff()).max(theta(&ot.a).max_abs_diff(&ot.a.scale_real(-1.0)));
        let back = &psi(&p.a) + &(&psi(&p.b) * &t);
        recon = recon.max(back.max_abs_diff(&p)).max((&even + &odd).max_abs_diff(&p));
    }
    col.exact("crossed.even_part_in_psi_image", polys, even_b);
    col.exact("crossed.odd_part_times_t", polys, odd_b);
    col.exact("crossed.decomposition", polys, recon);
    col.finish(Suite::Crossed)
}

/// Worst deviation of the Gram matrix `2ⁿ τ̂(e_Γ* e_Γ′)` from the identity.
pub fn e_gamma_gram_residual(w: &Window) -> f64 {
    let basis = e_basis(w);
    let scale = (1u64 << w.len()) as f64;
    let mut worst = 0.0f64;
    for (i, (_, u)) in basis.iter().enumerate() {
        for (j, (_, v)) in basis.iter().enumerate() {
            let g = u.trace_inner(v) * scale;
            let expect = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g - expect).norm());
        }
    }
    worst
}

/// Matrix-unit axioms of every `e⁽ⁱ⁾` on `w` together with `[e⁽ⁱ⁾, e⁽ʲ⁾] = 0`.
pub fn e_unit_residual(w: &Window) -> f64 {
    let mut r = 0.0f64;
    for i in 1..=w.len() {
        let u = |idx| matrix_unit_e(i, w, idx).expect("in range");
        r = r.max(unit_axiom_residual(&u));
        for j in 1..=w.len() {
            if i == j {
                continue;
            }
            for p in MatrixUnitIndex::ALL {
                for q in MatrixUnitIndex::ALL {
                    let a = u(p);
                    let b = matrix_unit_e(j, w, q).expect("in range");
                    r = r.max(a.commutator(&b).max_abs_diff(&HatElement::zero()));
                }
            }
        }
    }
    r
}

/// Dictionary residuals: the ψ(σ_κ) formulas and the four bilinear identities.
pub fn dictionary_residual(xs: &[Site], ns: &[u32]) -> (f64, f64) {
    let mut sig = 0.0f64;
    let mut secq = 0.0f64;
    for &x in xs {
        for k in PauliLetter::ALL {
            sig = sig.max(psi_sigma(k, x).max_abs_diff(&psi(&sigma(k, x))));
        }
        for &n in ns {
            for kind in BilinearKind::ALL {
                let h = bilinear_hat(x, n, kind);
                secq = match psi_inverse(&h) {
                    Ok(s) => secq.max(s.max_abs_diff(&bilinear_to_spin(x, n, kind))),
                    Err(_) => f64::INFINITY,
                };
            }
        }
    }
    (sig, secq)
}

pub fn jw_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut col = Collector::new(cfg);
    let mut rng = random::rng(cfg.seed.wrapping_add(3));
    let n = cfg.window.clamp(1, 6);
    let w = random::random_window(&mut rng, cfg.lo.min(-(n as Site)), cfg.hi.max(n as Site), n);
    let sites: Vec<Site> = w.clone().into();
    let cases = 20;
    let (mut mult, mut adj, mut inv) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..cases {
        let a = random::random_spin(&mut rng, &sites, 3);
        let b = random::random_spin(&mut rng, &sites, 3);
        let va = vartheta(&a, &w).expect("support in window");
        let vb = vartheta(&b, &w).expect("support in window");
        mult = mult.max(vartheta(&(&a * &b), &w).expect("support in window").max_abs_diff(&(&va * &vb)));
        adj = adj.max(vartheta(&a.adjoint(), &w).expect("support in window").max_abs_diff(&va.adjoint()));
        inv = match vartheta_inverse(&va, &w) {
            Ok(back) => inv.max(back.max_abs_diff(&a)),
            Err(_) => f64::INFINITY,
        };
    }
    col.exact("jw.vartheta_multiplicative", cases, mult);
    col.exact("jw.vartheta_adjoint", cases, adj);
    col.numeric("jw.vartheta_inverse", cases, inv, 1e-12);
    if n <= 4 {
        col.numeric("jw.e_gamma_basis", 1 << (2 * n), e_gamma_gram_residual(&w), 1e-12);
    }
    col.exact("jw.e_units", n, e_unit_residual(&w));

    // Extending a window by sites to the right leaves ϑ unchanged.
    let mut right = 0.0f64;
    for _ in 0..cases {
        let a = random::random_spin(&mut rng, &sites, 3);
        let max = *sites.last().expect("nonempty");
        let big = w.union(&Window::new([max + 1, max + 3]));
        right = right.max(flag(consistency_check(&a, &w, &big)));
    }
    col.exact("jw.consistency_right_extension", cases, right);
    let m = crate::spin_ops::sigma_pm(crate::spin_ops::Ladder::Minus, 1);
    let left_differs = !consistency_check(&m, &Window::new([1]), &Window::new([0, 1]));
    col.exact("jw.consistency_left_insertion_differs", 1, flag(left_differs));

    let (sig, secq) = dictionary_residual(&[-2, 0, 1], &[1, 2, 3]);
    col.exact("jw.sigma_dictionary", 12, sig);
    col.exact("jw.bilinear_dictionary", 36, secq);
    let mut xy = 0.0f64;
    for gamma in [0.0, 0.5, 1.0] {
        let t = xy_transform(gamma, 0.0, 0);
        xy = xy.max((t.report.factor[0] + 2.0).abs()).max(t.report.factor[1].abs()).max(t.report.residual);
    }
    col.numeric("jw.xy_factor_minus_two", 3, xy, 1e-12);

    let mut np = 0.0f64;
    for (x, y) in [(0, 2), (-3, 1), (1, 4), (2, -1)] {
        let wit = nonpreservation_witness(x, y);
        np = np
            .max(wit.spin_commutator.max_abs_coeff())
            .max(wit.fermion_commutator.max_abs_diff(&wit.twice_product))
            .max((wit.product_norm - 1.0).abs())
            .max(wit.recovery_residual.max_abs_diff(&HatElement::zero()));
    }
    col.numeric("jw.nonpreservation", 4, np, 1e-10);
    col.finish(Suite::Jw)
}

fn z_string(lo: Site, hi: Site) -> SpinElement {
    SpinElement::from_string(
        PauliString::from_letters((lo..=hi).map(|s| (s, PauliLetter::Z))),
        Complex64::new(1.0, 0.0),
    )
}

/// `‖σ₃⁽¹⁾⋯σ₃⁽ᵐ⁾ − σ₃⁽¹⁾⋯σ₃⁽ⁿ⁾‖`.
pub fn z_string_difference_norm(n: Site, m: Site) -> f64 {
    dense::norm(&(&z_string(1, m) - &z_string(1, n)))
}

pub fn norms_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut col = Collector::new(cfg);
    let mut rng = random::rng(cfg.seed.wrapping_add(4));
    let remark = [(2, 3), (3, 5)].iter().map(|&(n, m)| (z_string_difference_norm(n, m) - 2.0).abs()).fold(0.0, f64::max);
    col.numeric("norms.z_string_difference", 2, remark, 1e-10);
    col.numeric("norms.sigma3", 1, (dense::norm(&sigma(PauliLetter::Z, 0)) - 1.0).abs(), 1e-10);

    let cases = 20;
    let (mut wi, mut cstar, mut cross) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..cases {
        let sites = small_support(&mut rng, cfg, 3);
        let a = random::random_spin(&mut rng, &sites, 4);
        let n = dense::norm(&a);
        let big = a.support().union(&random::random_window(&mut rng, -4, 4, 2));
        let nb = dense::spectral_norm(&dense::represent(&a, &big).expect("window"));
        wi = wi.max((n - nb).abs());
        cstar = cstar.max((dense::norm(&(&a.adjoint() * &a)) - n * n).abs() / n.max(1.0).powi(2));
        let ma = dense::represent(&a, &a.support().union(&Window::new([sites[0]]))).expect("window");
        let b = random::random_spin(&mut rng, &sites, 3);
        let mb = dense::represent(&b, &b.support().union(&Window::new([sites[0]]))).expect("window");
        let lhs = dense::spectral_norm(&kron(&ma, &mb));
        cross = cross.max((lhs - dense::spectral_norm(&ma) * dense::spectral_norm(&mb)).abs() / lhs.max(1.0));
    }
    col.numeric("norms.window_independence", cases, wi, 1e-10);
    col.numeric("norms.c_star_identity", cases, cstar, 1e-10);
    col.numeric("norms.cross_norm", cases, cross, 1e-10);
    let unit_norms = [hat_norm(&t_element()), hat_norm(&annihilator(0)), hat_norm(&annihilator(3))];
    col.numeric("norms.unit_elements", 3, unit_norms.iter().map(|v| (v - 1.0).abs()).fold(0.0, f64::max), 1e-10);
    col.finish(Suite::Norms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_configs_pass() {
        let cfg = VerifyConfig { lo: -2, hi: 2, window: 2, seed: 3, tol: None };
        for r in run_all(&cfg) {
            for c in &r.checks {
                assert!(c.passed, "{}: residual {}", c.name, c.residual);
            }
        }
    }
}
