//! Corepresentations given by their matrix elements, Peter–Weyl checks and
//! Fourier transforms of functionals.

use std::fmt;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::algebra::{AlgebraElement, Functional, C64, ONE, ZERO};
use crate::error::{Error, Result};
use crate::hopf::{QuantumGroup, TensorElement};

/// Tolerance used when a corepresentation is classified as unitary.
pub const UNITARY_TOL: f64 = 1e-9;

/// A finite-dimensional corepresentation `e_j ↦ Σ_i e_i ⊗ ρ_ij`.
#[derive(Clone)]
pub struct Corepresentation {
    name: String,
    dim: usize,
    rho: Vec<AlgebraElement>,
    unitary: bool,
}

impl fmt::Debug for Corepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Corepresentation")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("unitary", &self.unitary)
            .finish()
    }
}

impl Corepresentation {
    /// `rho` holds the matrix elements in row-major order.
    pub fn new(name: impl Into<String>, dim: usize, rho: Vec<AlgebraElement>) -> Result<Self> {
        let name = name.into();
        if dim == 0 || rho.len() != dim * dim {
            return Err(Error::InvalidCorep(format!(
                "`{name}`: {} matrix elements for dimension {dim}",
                rho.len()
            )));
        }
        let s = rho[0].structure().clone();
        for r in &rho {
            r.ensure_structure(&s)?;
        }
        let mut c = Self {
            name,
            dim,
            rho,
            unitary: false,
        };
        c.unitary = c.unitarity_residual() < UNITARY_TOL;
        Ok(c)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.rho[i * self.dim + j]
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.rho
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    /// The one-dimensional corepresentation with matrix `[𝟙]`.
    pub fn is_trivial(&self) -> bool {
        let one = AlgebraElement::one(self.rho[0].structure());
        self.dim == 1 && self.rho[0].distance(&one).is_ok_and(|r| r < UNITARY_TOL)
    }

    /// Largest residual of `ρ*ρ = I` and `ρρ* = I` over the matrix entries.
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.dim;
        let s = self.rho[0].structure();
        let one = AlgebraElement::one(s);
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let mut left = AlgebraElement::zero(s);
                let mut right = AlgebraElement::zero(s);
                for k in 0..d {
                    left = &left + &(&self.entry(k, i).star() * self.entry(k, j));
                    right = &right + &(self.entry(i, k) * &self.entry(j, k).star());
                }
                if i == j {
                    left = &left - &one;
                    right = &right - &one;
                }
                worst = worst.max(left.max_abs()).max(right.max_abs());
            }
        }
        worst
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CorepReport {
    pub comultiplication: f64,
    pub counit: f64,
    pub tol: f64,
}

impl CorepReport {
    pub fn pass(&self) -> bool {
        self.comultiplication < self.tol && self.counit < self.tol
    }
}

/// Residuals of `Δ(ρ_ij) = Σ_k ρ_ik ⊗ ρ_kj` and `ε(ρ_ij) = δ_ij`.
pub fn check_corep(q: &QuantumGroup, kappa: &Corepresentation, tol: f64) -> Result<CorepReport> {
    let d = kappa.dim();
    let mut comultiplication: f64 = 0.0;
    let mut counit: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            let lhs = q.comultiply(kappa.entry(i, j))?;
            let mut rhs = TensorElement::zero(q.structure());
            for k in 0..d {
                for (a, b, c) in TensorElement::product_of(kappa.entry(i, k), kappa.entry(k, j))?.terms() {
                    rhs.add_term(a, b, c);
                }
            }
            comultiplication = comultiplication.max(lhs.distance(&rhs));
            let expected = if i == j { ONE } else { ZERO };
            counit = counit.max((q.counit(kappa.entry(i, j))? - expected).norm());
        }
    }
    Ok(CorepReport {
        comultiplication,
        counit,
        tol,
    })
}

pub fn check_unitary(kappa: &Corepresentation, tol: f64) -> bool {
    kappa.unitarity_residual() < tol
}

/// The conjugate corepresentation, with matrix elements `ρ_ij*`.
pub fn conjugate(kappa: &Corepresentation) -> Corepresentation {
    let rho = kappa.rho.iter().map(AlgebraElement::star).collect();
    Corepresentation::new(format!("conj({})", kappa.name), kappa.dim, rho).expect("shape preserved")
}

/// The Fourier transform of a functional at a corepresentation.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierMatrix {
    pub alpha: String,
    pub m: DMatrix<C64>,
}

impl FourierMatrix {
    pub fn dim(&self) -> usize {
        self.m.nrows()
    }
}

/// `m[i][j] = φ(ρ_ij*)`.
pub fn fourier(phi: &Functional, kappa: &Corepresentation) -> Result<FourierMatrix> {
    let d = kappa.dim();
    let mut m = DMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = phi.apply(&kappa.entry(i, j).star())?;
        }
    }
    Ok(FourierMatrix {
        alpha: kappa.name.clone(),
        m,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PeterWeylReport {
    pub gram_residual: f64,
    pub corep_residual: f64,
    pub non_unitary: Vec<String>,
    pub sum_dim_squared: usize,
    pub algebra_dim: usize,
    pub tol: f64,
}

impl PeterWeylReport {
    pub fn complete(&self) -> bool {
        self.sum_dim_squared == self.algebra_dim
    }

    pub fn pass(&self) -> bool {
        self.gram_residual < self.tol && self.corep_residual < self.tol && self.non_unitary.is_empty() && self.complete()
    }
}

impl fmt::Display for PeterWeylReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "  corep axioms residual   {:>12.3e}", self.corep_residual)?;
        writeln!(f, "  gram residual           {:>12.3e}", self.gram_residual)?;
        if !self.non_unitary.is_empty() {
            writeln!(f, "  non-unitary: {}", self.non_unitary.join(", "))?;
        }
        if !self.complete() {
            writeln!(
                f,
                "  incomplete irrep list: sum of squared dimensions {} != {}",
                self.sum_dim_squared, self.algebra_dim
            )?;
        }
        Ok(())
    }
}

/// Checks that the matrix elements of `irreps` are orthogonal under
/// `⟨a, b⟩ = ∫ a* b` with `⟨ρ_ij, ρ_ij⟩ = 1/d_α`, and that the list is complete.
pub fn peter_weyl_check(q: &QuantumGroup, irreps: &[Corepresentation], tol: f64) -> Result<PeterWeylReport> {
    let h = q.require_haar()?;
    let s = q.structure();
    let mut corep_residual: f64 = 0.0;
    let mut non_unitary = Vec::new();
    let mut elems: Vec<(&AlgebraElement, f64)> = Vec::new();
    for kappa in irreps {
        let r = check_corep(q, kappa, tol)?;
        corep_residual = corep_residual.max(r.comultiplication).max(r.counit);
        if !check_unitary(kappa, tol) {
            non_unitary.push(kappa.name.clone());
        }
        for e in kappa.entries() {
            elems.push((e, 1.0 / kappa.dim() as f64));
        }
    }
    let w: Vec<f64> = (0..s.dim()).map(|k| h.weight(s.unit(k).block)).collect();
    let mut gram_residual: f64 = 0.0;
    for (x, &(a, norm)) in elems.iter().enumerate() {
        for (y, &(b, _)) in elems.iter().enumerate() {
            let ip: C64 = a
                .coeffs()
                .iter()
                .zip(b.coeffs())
                .zip(&w)
                .map(|((p, q), &wk)| p.conj() * q * wk)
                .sum();
            let expected = if x == y { norm } else { 0.0 };
            gram_residual = gram_residual.max((ip - expected).norm());
        }
    }
    Ok(PeterWeylReport {
        gram_residual,
        corep_residual,
        non_unitary,
        sum_dim_squared: irreps.iter().map(|k| k.dim() * k.dim()).sum(),
        algebra_dim: s.dim(),
        tol,
    })
}

/// Both sides of `ε(a_φ) = Σ_α d_α Tr â_φ(α)`.
pub fn inversion_check(q: &QuantumGroup, phi: &Functional, irreps: &[Corepresentation]) -> Result<(C64, C64)> {
    let lhs = q.dual_haar(phi)?;
    let mut rhs = ZERO;
    for kappa in irreps {
        rhs += fourier(phi, kappa)?.m.trace() * kappa.dim() as f64;
    }
    Ok((lhs, rhs))
}

/// Fourier transform of `φ₁ ⋆ φ₂` and the product of the individual
/// transforms.
pub fn convolution_theorem_check(
    q: &QuantumGroup,
    phi1: &Functional,
    phi2: &Functional,
    kappa: &Corepresentation,
) -> Result<(DMatrix<C64>, DMatrix<C64>)> {
    let lhs = fourier(&q.convolve(phi1, phi2)?, kappa)?.m;
    let rhs = fourier(phi1, kappa)?.m * fourier(phi2, kappa)?.m;
    Ok((lhs, rhs))
}
