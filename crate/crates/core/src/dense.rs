//! Finite-dimensional representation of local spin observables as dense
//! `2ⁿ × 2ⁿ` complex matrices, plus spectral norms.
//!
//! Tensor factors follow increasing site order with the leftmost factor most
//! significant: the site at position `p` of an `n`-site window owns bit
//! `n − 1 − p` of the row/column index. Index bit 0 is spin up (`σ₃ = +1`).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, SpinElement};
use crate::window::Window;

pub type DenseMatrix = DMatrix<Complex64>;
pub type DenseVector = DVector<Complex64>;

/// Absolute tolerance used when comparing norms.
pub const NORM_TOLERANCE: f64 = 1e-10;

const MAX_DENSE_SITES: usize = 12;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli_matrix(l: PauliLetter) -> DenseMatrix {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match l {
        PauliLetter::I => DMatrix::from_row_slice(2, 2, &[one, z, z, one]),
        PauliLetter::X => DMatrix::from_row_slice(2, 2, &[z, one, one, z]),
        PauliLetter::Y => DMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        PauliLetter::Z => DMatrix::from_row_slice(2, 2, &[one, z, z, -one]),
    }
}

/// `(A ⊗ B)[(i·p + k), (j·q + l)] = A[i,j]·B[k,l]` for `B` of shape `p × q`.
pub fn kron(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = DMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            if aij == Complex64::default() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// A Pauli string on a window acts as a signed permutation of the basis:
/// column `j` maps to row `j ^ flip` with weight `phase(j)`.
#[derive(Debug, Clone, Copy)]
struct StringAction {
    flip: usize,
    ymask: usize,
    zmask: usize,
    ycount: u32,
}

impl StringAction {
    fn new(p: &PauliString, w: &Window) -> Result<Self> {
        let n = w.len();
        let mut act = StringAction { flip: 0, ymask: 0, zmask: 0, ycount: 0 };
        for (site, l) in p.iter() {
            let pos = w.position(site).ok_or(Error::SupportExceedsWindow { site })?;
            let bit = 1usize << (n - 1 - pos);
            match l {
                PauliLetter::I => {}
                PauliLetter::X => act.flip |= bit,
                PauliLetter::Y => {
                    act.flip |= bit;
                    act.ymask |= bit;
                    act.ycount += 1;
                }
                PauliLetter::Z => act.zmask |= bit,
            }
        }
        Ok(act)
    }

    fn entry(&self, j: usize) -> (usize, Complex64) {
        let base = match self.ycount % 4 {
            0 => c(1.0, 0.0),
            1 => c(0.0, 1.0),
            2 => c(-1.0, 0.0),
            _ => c(0.0, -1.0),
        };
        let odd = ((j & self.ymask).count_ones() + (j & self.zmask).count_ones()) % 2 == 1;
        (j ^ self.flip, if odd { -base } else { base })
    }
}

fn check_window(w: &Window) -> Result<()> {
    if w.is_empty() {
        return Err(Error::EmptyWindow);
    }
    assert!(w.len() <= MAX_DENSE_SITES, "dense windows are limited to {MAX_DENSE_SITES} sites");
    Ok(())
}

/// The matrix of `a` on window `w`.
pub fn represent(a: &SpinElement, w: &Window) -> Result<DenseMatrix> {
    check_window(w)?;
    let dim = 1usize << w.len();
    let mut m = DMatrix::zeros(dim, dim);
    for (p, coeff) in a.terms() {
        let act = StringAction::new(p, w)?;
        for j in 0..dim {
            let (i, v) = act.entry(j);
            m[(i, j)] += coeff * v;
        }
    }
    Ok(m)
}

/// `represent(a, w) · v` without forming the matrix. Works on windows too large
/// for dense matrices.
pub fn apply(a: &SpinElement, w: &Window, v: &DenseVector) -> Result<DenseVector> {
    if w.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let dim = 1usize << w.len();
    assert_eq!(v.len(), dim, "vector length must be 2^|window|");
    let mut out = DVector::zeros(dim);
    for (p, coeff) in a.terms() {
        let act = StringAction::new(p, w)?;
        for j in 0..dim {
            let (i, s) = act.entry(j);
            out[i] += coeff * s * v[j];
        }
    }
    Ok(out)
}

/// Largest singular value.
pub fn spectral_norm(m: &DenseMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    let h = m.adjoint();
    let herm = (m - &h).iter().all(|z| z.norm() <= 1e-14);
    if herm {
        m.clone().symmetric_eigenvalues().iter().fold(0.0f64, |acc, e| acc.max(e.abs()))
    } else {
        let g = &h * m;
        let lmax = g.symmetric_eigenvalues().iter().fold(0.0f64, |acc, &e| acc.max(e));
        lmax.max(0.0).sqrt()
    }
}

/// The C*-norm of `a`, computed on its support window.
pub fn norm(a: &SpinElement) -> f64 {
    let w = a.support();
    if w.is_empty() {
        return a.trace().norm();
    }
    spectral_norm(&represent(a, &w).expect("support lies in its own window"))
}
