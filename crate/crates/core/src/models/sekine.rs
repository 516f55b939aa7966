//! The Sekine quantum groups `Y_n` of order `2n²`.
//!
//! The algebra is `⊕_{(i,j) ∈ Z_n×Z_n} ℂe_(i,j) ⊕ M_n(ℂ)`. One-dimensional
//! factors are indexed mod `n`; matrix units `E_{i,j}` take `i, j ∈ 1..=n`
//! with `0 ≡ n`, so all index arithmetic below reduces mod `n` either way.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::algebra::{AlgebraElement, BlockStructure, Functional, HaarWeights, C64, ONE, ZERO};
use crate::corep::Corepresentation;
use crate::error::{Error, Result};
use crate::hopf::{Comultiplication, LinearMap, QuantumGroup};

fn zeta(n: usize, power: i64) -> C64 {
    let p = power.rem_euclid(n as i64);
    C64::from_polar(1.0, 2.0 * PI * p as f64 / n as f64)
}

/// Basis index of `e_(i,j)`.
pub fn one_dim_index(n: usize, i: i64, j: i64) -> usize {
    let m = n as i64;
    (i.rem_euclid(m) * m + j.rem_euclid(m)) as usize
}

/// Basis index of `E_{i,j}`.
pub fn matrix_index(n: usize, i: i64, j: i64) -> usize {
    let m = n as i64;
    n * n + ((i - 1).rem_euclid(m) * m + (j - 1).rem_euclid(m)) as usize
}

/// Haar weights: `1/(2n²)` on each one-dimensional factor, `1/(2n)` on
/// `M_n`.
pub fn sekine_haar_weights(n: usize) -> Vec<f64> {
    let mut w = vec![1.0 / (2 * n * n) as f64; n * n];
    w.push(1.0 / (2 * n) as f64);
    w
}

pub fn sekine(n: usize) -> Result<QuantumGroup> {
    if n == 0 {
        return Err(Error::Unsupported("Sekine quantum group needs n >= 1".into()));
    }
    let mut sizes = vec![1; n * n];
    sizes.push(n);
    let structure = BlockStructure::shared(sizes)?;
    let d = structure.dim();
    let m = n as i64;
    let e = |i: i64, j: i64| one_dim_index(n, i, j);
    let big = |i: i64, j: i64| matrix_index(n, i, j);
    let inv_n = C64::new(1.0 / n as f64, 0.0);

    let mut t = Vec::with_capacity(4 * n.pow(4));
    for i in 0..m {
        for j in 0..m {
            let k = e(i, j);
            for l in 0..m {
                for r in 0..m {
                    t.push((k, e(l, r), e(i - l, j - r), ONE));
                }
            }
            for l in 1..=m {
                for r in 1..=m {
                    t.push((k, big(l, r), big(l + j, r + j), zeta(n, i * (l - r)) * inv_n));
                }
            }
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            let k = big(i, j);
            for l in 0..m {
                for r in 0..m {
                    t.push((k, e(-l, -r), big(i - r, j - r), zeta(n, l * (i - j))));
                    t.push((k, big(i - r, j - r), e(l, r), zeta(n, l * (j - i))));
                }
            }
        }
    }
    let delta = Comultiplication::from_triplets(d, t)?;

    let mut anti = Vec::with_capacity(d);
    for i in 0..m {
        for j in 0..m {
            anti.push((e(-i, -j), e(i, j), ONE));
        }
    }
    for i in 1..=m {
        for j in 1..=m {
            anti.push((big(j, i), big(i, j), ONE));
        }
    }
    let antipode = LinearMap::from_triplets(d, anti)?;
    let counit = Functional::dual_basis(&structure, e(0, 0));
    let haar = HaarWeights::new(&structure, sekine_haar_weights(n))?;
    QuantumGroup::new(format!("sekine:{n}"), structure, delta, counit, antipode, Some(haar))?.validated()
}

fn element(structure: &Arc<BlockStructure>, terms: impl IntoIterator<Item = (usize, C64)>) -> Result<AlgebraElement> {
    let mut c = vec![ZERO; structure.dim()];
    for (k, v) in terms {
        c[k] += v;
    }
    AlgebraElement::from_coeffs(structure, c)
}

/// `ρ_ℓ^± = Σ ζ^{iℓ} e_(i,j) ± Σ_m E_{m,m+ℓ}`.
pub fn sekine_rho(q: &QuantumGroup, n: usize, l: i64, plus: bool) -> Result<AlgebraElement> {
    let m = n as i64;
    let sign = if plus { ONE } else { -ONE };
    let ones = (0..m).flat_map(|i| (0..m).map(move |j| (one_dim_index(n, i, j), zeta(n, i * l))));
    let mat = (1..=m).map(|r| (matrix_index(n, r, r + l), sign));
    element(q.structure(), ones.chain(mat))
}

/// The complete catalogue for odd `n`: `2n` one-dimensional coreps `ρ_ℓ^±`
/// and `n(n−1)/2` two-dimensional coreps `κ^{u,v}`.
pub fn sekine_irreps(q: &QuantumGroup, n: usize) -> Result<Vec<Corepresentation>> {
    if n.is_multiple_of(2) {
        return Err(Error::Unsupported(format!("irreps of Y_{n}: only odd n is supported")));
    }
    check_dim(q, n)?;
    let m = n as i64;
    let s = q.structure();
    let mut out = Vec::with_capacity(2 * n + n * (n - 1) / 2);
    for l in 0..m {
        for plus in [true, false] {
            let name = format!("rho{l}{}", if plus { '+' } else { '-' });
            out.push(Corepresentation::new(name, 1, vec![sekine_rho(q, n, l, plus)?])?);
        }
    }
    for u in 0..m {
        for v in 1..=(m - 1) / 2 {
            let grid = |f: &dyn Fn(i64, i64) -> i64| {
                (0..m)
                    .flat_map(|i| (0..m).map(move |j| (i, j)))
                    .map(|(i, j)| (one_dim_index(n, i, j), zeta(n, f(i, j))))
                    .collect::<Vec<_>>()
            };
            let r11 = element(s, grid(&|i, j| i * u + j * v))?;
            let r22 = element(s, grid(&|i, j| i * u - j * v))?;
            let r12 = element(s, (1..=m).map(|r| (matrix_index(n, r, r + u), zeta(n, -r * v))))?;
            let r21 = element(s, (1..=m).map(|r| (matrix_index(n, r, r + u), zeta(n, r * v))))?;
            out.push(Corepresentation::new(format!("kappa{u},{v}"), 2, vec![r11, r12, r21, r22])?);
        }
    }
    Ok(out)
}

fn check_dim(q: &QuantumGroup, n: usize) -> Result<()> {
    if q.dim() != 2 * n * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n * n,
            found: q.dim(),
        });
    }
    Ok(())
}

/// `ν = Σ x_(i,j) e^{(i,j)} + Σ a_pq E^{pq}` in terms of the dual basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SekineStateSpec {
    /// `x[i][j]` for `(i, j) ∈ Z_n×Z_n`.
    pub x: DMatrix<f64>,
    /// `a[p−1][q−1]` for `p, q ∈ 1..=n`.
    pub a: DMatrix<C64>,
}

impl SekineStateSpec {
    /// Checks `x ≥ 0`, `A ≥ 0` and `Σx + Tr A = 1`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = |m: String| Error::InvalidStateSpec(m);
        if self.x.shape() != (n, n) || self.a.shape() != (n, n) {
            return Err(bad(format!("x and A must be {n}×{n}")));
        }
        if let Some((idx, v)) = self.x.iter().enumerate().find(|(_, v)| **v < 0.0) {
            return Err(bad(format!(
                "x_({},{}) = {v} is negative",
                idx % n,
                idx / n
            )));
        }
        if (&self.a - self.a.adjoint()).camax() > 1e-12 {
            return Err(bad("A is not Hermitian".into()));
        }
        let min = self.a.clone().symmetric_eigenvalues().min();
        if min < -1e-12 {
            return Err(bad(format!("A is not positive semidefinite (eigenvalue {min:e})")));
        }
        let total = self.x.sum() + self.a.trace().re;
        if (total - 1.0).abs() > 1e-12 {
            return Err(bad(format!("sum of x plus trace of A is {total}, expected 1")));
        }
        Ok(())
    }
}

pub fn sekine_state(q: &QuantumGroup, n: usize, spec: &SekineStateSpec) -> Result<Functional> {
    check_dim(q, n)?;
    spec.validate(n)?;
    let mut c = vec![ZERO; q.dim()];
    for i in 0..n {
        for j in 0..n {
            c[one_dim_index(n, i as i64, j as i64)] = C64::new(spec.x[(i, j)], 0.0);
            c[matrix_index(n, i as i64 + 1, j as i64 + 1)] = spec.a[(i, j)];
        }
    }
    Functional::from_coeffs(q.structure(), c)
}

/// `⅛(e^{(0,1)} + e^{(1,0)} + e^{(−1,0)} + e^{(0,−1)}) + (1/2n)J_n`.
pub fn sekine_walk_spec(n: usize) -> SekineStateSpec {
    let mut x = DMatrix::zeros(n, n);
    let m = n as i64;
    for (i, j) in [(0i64, 1i64), (1, 0), (-1, 0), (0, -1)] {
        x[(i.rem_euclid(m) as usize, j.rem_euclid(m) as usize)] += 0.125;
    }
    let a = DMatrix::from_element(n, n, C64::new(0.5 / n as f64, 0.0));
    SekineStateSpec { x, a }
}

pub fn sekine_walk_state(q: &QuantumGroup, n: usize) -> Result<Functional> {
    sekine_state(q, n, &sekine_walk_spec(n))
}
