use ajw_core::car::normal_order;
use ajw_core::crossed::hat_norm;
use ajw_core::jw::{vartheta, vartheta_inverse};
use ajw_core::verify::{self, CheckResult, Suite, VerifyConfig};
use ajw_core::{dense, SpinElement, Window};
use anyhow::{bail, Result};
use serde::Serialize;

use crate::spec::{Element, HamiltonianSpec};

/// Residual threshold for transforms.
pub const TRANSFORM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    ToFermion,
    ToSpin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteArg {
    Car,
    Rotations,
    Crossed,
    Jw,
    Norms,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Car => vec![Suite::Car],
            SuiteArg::Rotations => vec![Suite::Rotations],
            SuiteArg::Crossed => vec![Suite::Crossed],
            SuiteArg::Jw => vec![Suite::Jw],
            SuiteArg::Norms => vec![Suite::Norms],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: serde_json::Value,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<HamiltonianSpec>,
}

impl Report {
    fn new(command: serde_json::Value, checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Report { command, passed, checks, norm: None, output: None }
    }
}

fn check(name: &str, residual: f64, threshold: f64) -> CheckResult {
    CheckResult { name: name.to_string(), passed: residual <= threshold, cases: 1, residual, threshold }
}

/// Smallest interval containing `w`.
fn hull(w: &Window) -> Window {
    match (w.sites().first(), w.sites().last()) {
        (Some(&lo), Some(&hi)) => Window::range(lo, hi),
        _ => Window::empty(),
    }
}

pub fn transform(spec: &HamiltonianSpec, direction: Direction, tol: Option<f64>) -> Result<Report> {
    let tol = tol.unwrap_or(TRANSFORM_TOLERANCE);
    let echo = serde_json::json!({ "name": "transform", "direction": direction, "tol": tol });
    match (direction, spec.element()?) {
        (Direction::ToFermion, Element::Spin(a)) => {
            let w = spec.window_hint.clone().unwrap_or_else(|| hull(&a.support()));
            let image = vartheta(&a, &w)?;
            let poly = normal_order(&image, &w)?;
            let rebuilt = poly.to_hat();
            let back = vartheta_inverse(&rebuilt, &w)?;
            let checks = vec![
                check("transform.normal_order", (&rebuilt - &image).hilbert_schmidt_norm(), tol),
                check("transform.round_trip", (&back - &a).hilbert_schmidt_norm(), tol),
            ];
            let mut r = Report::new(echo, checks);
            r.output = Some(HamiltonianSpec::from_fermion(&poly, Some(w)));
            Ok(r)
        }
        (Direction::ToSpin, Element::Fermion(p)) => {
            let w = spec.window_hint.clone().unwrap_or_else(|| hull(&p.sites()));
            let x = p.to_hat();
            let a: SpinElement = vartheta_inverse(&x, &w)?;
            let checks = vec![check("transform.round_trip", (&vartheta(&a, &w)? - &x).hilbert_schmidt_norm(), tol)];
            let mut r = Report::new(echo, checks);
            r.output = Some(HamiltonianSpec::from_spin(&a, Some(w)));
            Ok(r)
        }
        (Direction::ToFermion, Element::Fermion(_)) => bail!("to-fermion expects a spec with picture \"spin\""),
        (Direction::ToSpin, Element::Spin(_)) => bail!("to-spin expects a spec with picture \"fermion\""),
    }
}

pub fn verify_suites(suite: SuiteArg, cfg: &VerifyConfig) -> Report {
    let echo = serde_json::json!({
        "name": "verify",
        "suite": suite,
        "range": [cfg.lo, cfg.hi],
        "window": cfg.window,
        "seed": cfg.seed,
        "tol": cfg.tol,
    });
    let checks = suite.suites().into_iter().flat_map(|s| verify::run(s, cfg).checks).collect();
    Report::new(echo, checks)
}

/// Largest window handed to the dense eigensolver.
const MAX_NORM_SITES: usize = 10;

pub fn norm(spec: &HamiltonianSpec) -> Result<Report> {
    let echo = serde_json::json!({ "name": "norm" });
    let value = match spec.element()? {
        Element::Spin(a) => {
            if a.support().len() > MAX_NORM_SITES {
                bail!("support spans {} sites; dense norms are limited to {MAX_NORM_SITES}", a.support().len());
            }
            dense::norm(&a)
        }
        Element::Fermion(p) => {
            let x = p.to_hat();
            if x.support().len() > MAX_NORM_SITES {
                bail!("support spans {} sites; dense norms are limited to {MAX_NORM_SITES}", x.support().len());
            }
            hat_norm(&x)
        }
    };
    let mut r = Report::new(echo, Vec::new());
    r.norm = Some(value);
    Ok(r)
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    for c in &r.checks {
        out.push_str(&format!(
            "{} {} residual={:.3e} threshold={:.1e} cases={}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.residual,
            c.threshold,
            c.cases
        ));
    }
    if let Some(n) = r.norm {
        out.push_str(&format!("norm = {n}\n"));
    }
    if let Some(spec) = &r.output {
        let body = match spec.element() {
            Ok(Element::Spin(a)) => a.to_string(),
            Ok(Element::Fermion(p)) => p.to_string(),
            Err(e) => format!("<{e}>"),
        };
        out.push_str(&format!("output ({:?}): {}\n", spec.picture, body));
        if let Some(w) = &spec.window_hint {
            out.push_str(&format!("window: {w}\n"));
        }
    }
    out.push_str(if r.passed { "all checks passed\n" } else { "some checks FAILED\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ajw_core::car::FermionPolynomial;
    use ajw_core::jw::xy_transform;

    fn spin_spec(text: &str) -> HamiltonianSpec {
        HamiltonianSpec::from_spin(&text.parse().unwrap(), None)
    }

    #[test]
    fn sigma3_to_fermion() {
        let r = transform(&spin_spec("Z(0)"), Direction::ToFermion, None).unwrap();
        assert!(r.passed);
        let Element::Fermion(p) = r.output.unwrap().element().unwrap() else { panic!() };
        assert_eq!(p, "2 * ad(0) a(0) + -1 * 1".parse::<FermionPolynomial>().unwrap());
    }

    #[test]
    fn xy_bond_matches_density_times_minus_two() {
        let t = xy_transform(0.5, 0.0, 0);
        let r = transform(&HamiltonianSpec::from_spin(&t.spin, None), Direction::ToFermion, None).unwrap();
        let Element::Fermion(p) = r.output.unwrap().element().unwrap() else { panic!() };
        assert!(p.to_hat().max_abs_diff(&t.density.to_hat().scale_real(-2.0)) < 1e-14);
    }

    #[test]
    fn empty_spec_gives_empty_output() {
        let spec = HamiltonianSpec::from_spin(&SpinElement::zero(), None);
        let r = transform(&spec, Direction::ToFermion, None).unwrap();
        assert!(r.passed);
        assert!(r.output.unwrap().terms.is_empty());
    }

    #[test]
    fn round_trip_through_both_directions() {
        let spec = spin_spec("(0.5+1i) * X(-1) Z(0) Y(1) + 2 * Z(3) + -1 * X(0)");
        let there = transform(&spec, Direction::ToFermion, None).unwrap();
        let back = transform(&there.output.unwrap(), Direction::ToSpin, None).unwrap();
        assert!(back.passed);
        let (Element::Spin(a), Element::Spin(b)) = (spec.element().unwrap(), back.output.unwrap().element().unwrap()) else {
            panic!()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn wrong_picture_is_an_error() {
        assert!(transform(&spin_spec("Z(0)"), Direction::ToSpin, None).is_err());
    }

    #[test]
    fn norm_examples() {
        let r = norm(&spin_spec("Z(1) Z(2) Z(3) + -1 * Z(1) Z(2)")).unwrap();
        assert!((r.norm.unwrap() - 2.0).abs() < 1e-10);
        let r = norm(&spin_spec("1 * I")).unwrap();
        assert!((r.norm.unwrap() - 1.0).abs() < 1e-12);
        let p: FermionPolynomial = "a(0) + ad(0)".parse().unwrap();
        let r = norm(&HamiltonianSpec::from_fermion(&p, None)).unwrap();
        assert!((r.norm.unwrap() - 1.0).abs() < 1e-12);
    }
}
