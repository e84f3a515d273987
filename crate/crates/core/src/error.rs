use thiserror::Error;

use crate::pauli::Site;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("site {site} lies outside the representation window")]
    SupportExceedsWindow { site: Site },

    #[error("unit index {index} is outside 1..={len}")]
    IndexOutOfWindow { index: usize, len: usize },

    #[error("element is not in the local CAR algebra of the window (residual {residual:e})")]
    NotInLocalCar { residual: f64 },

    #[error("element has a nonzero T-component and is not in the image of psi")]
    NotInPsiImage,

    #[error("representation window must contain at least one site")]
    EmptyWindow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
