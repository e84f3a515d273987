//! Wire format for Hamiltonians: a picture tag, a term list, and an optional window.

use ajw_core::car::{FermionPolynomial, FermionTermJson};
use ajw_core::pauli::{SpinElement, SpinTermJson};
use ajw_core::Window;
use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Picture {
    Spin,
    Fermion,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianSpec {
    pub picture: Picture,
    pub terms: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window_hint: Option<Window>,
}

/// A parsed spec.
#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Spin(SpinElement),
    Fermion(FermionPolynomial),
}

impl HamiltonianSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("input is not a valid Hamiltonian spec")
    }

    pub fn element(&self) -> Result<Element> {
        match self.picture {
            Picture::Spin => {
                let terms: Vec<SpinTermJson> = self
                    .terms
                    .iter()
                    .map(|t| serde_json::from_value(t.clone()))
                    .collect::<std::result::Result<_, _>>()
                    .context("spin terms must look like {\"coeff\":[re,im],\"factors\":[{\"site\":0,\"axis\":1}]}")?;
                Ok(Element::Spin(SpinElement::from_json_terms(&terms)?))
            }
            Picture::Fermion => {
                let terms: Vec<FermionTermJson> = self
                    .terms
                    .iter()
                    .map(|t| serde_json::from_value(t.clone()))
                    .collect::<std::result::Result<_, _>>()
                    .context(
                        "fermion terms must look like {\"coeff\":[re,im],\"factors\":[{\"site\":0,\"dagger\":true}]}",
                    )?;
                Ok(Element::Fermion(FermionPolynomial::from_json_terms(&terms)))
            }
        }
    }

    pub fn from_spin(a: &SpinElement, window_hint: Option<Window>) -> Self {
        HamiltonianSpec {
            picture: Picture::Spin,
            terms: a.to_json_terms().iter().map(|t| serde_json::to_value(t).expect("plain data")).collect(),
            window_hint,
        }
    }

    pub fn from_fermion(p: &FermionPolynomial, window_hint: Option<Window>) -> Self {
        HamiltonianSpec {
            picture: Picture::Fermion,
            terms: p.to_json_terms().iter().map(|t| serde_json::to_value(t).expect("plain data")).collect(),
            window_hint,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_spec_round_trip() {
        let text = r#"{"picture":"spin","terms":[{"coeff":[1,0],"factors":[{"site":0,"axis":3}]}]}"#;
        let spec = HamiltonianSpec::parse(text).unwrap();
        let Element::Spin(a) = spec.element().unwrap() else { panic!("expected spin") };
        assert_eq!(a.to_string(), "1 * Z(0)");
        assert_eq!(HamiltonianSpec::from_spin(&a, None).element().unwrap(), Element::Spin(a));
    }

    #[test]
    fn mismatched_schema_is_rejected() {
        let text = r#"{"picture":"fermion","terms":[{"coeff":[1,0],"factors":[{"site":0,"axis":3}]}]}"#;
        assert!(HamiltonianSpec::parse(text).unwrap().element().is_err());
        assert!(HamiltonianSpec::parse(r#"{"picture":"bosons","terms":[]}"#).is_err());
    }
}
