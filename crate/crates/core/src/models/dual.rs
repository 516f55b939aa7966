//! The cocommutative quantum group `Ĝ` with function algebra `ℂG`, its
//! states (positive-definite functions) and the walk on `Ŝ_n`.

use nalgebra::{DMatrix, DVector};

use crate::algebra::{AlgebraElement, BlockStructure, Functional, HaarWeights, C64, ONE, ZERO};
use crate::bounds::FourierSpectrum;
use crate::corep::Corepresentation;
use crate::error::{Error, Result};
use crate::hopf::{Comultiplication, LinearMap, QuantumGroup};

use super::group::{permutations, GroupTable, IrrepFamily};

const SNAP: f64 = 1e-13;

fn snap(c: C64) -> C64 {
    let f = |x: f64| if x.abs() < SNAP { 0.0 } else { x };
    C64::new(f(c.re), f(c.im))
}

/// `Ĝ`, either with the Wedderburn blocks of `ℂG` (when an irrep family of `G`
/// is supplied) or as a bounds-only catalogue of the one-dimensional coreps
/// `κ_s`.
#[derive(Debug, Clone)]
pub struct DualModel {
    group: GroupTable,
    quantum_group: Option<QuantumGroup>,
    family: Option<IrrepFamily>,
    deltas: Vec<AlgebraElement>,
}

/// Builds `Ĝ`. With `family = None` only bound computations from values of
/// positive-definite functions are available.
pub fn dual(group: &GroupTable, family: Option<&IrrepFamily>) -> Result<DualModel> {
    let Some(family) = family else {
        return Ok(DualModel {
            group: group.clone(),
            quantum_group: None,
            family: None,
            deltas: Vec::new(),
        });
    };
    let g = group.order();
    let sizes: Vec<usize> = family.reps().iter().map(|r| r.dim()).collect();
    let structure = BlockStructure::shared(sizes)?;
    let d = structure.dim();

    // V[s][k]: coefficient of δ^s at the k-th matrix unit
    let mut v = DMatrix::<C64>::zeros(g, d);
    // f[k][s]: coefficient of the k-th matrix unit at δ^s
    let mut f = DMatrix::<C64>::zeros(d, g);
    for (b, rep) in family.reps().iter().enumerate() {
        let m = rep.dim();
        let scale = m as f64 / g as f64;
        for p in 0..m {
            for q in 0..m {
                let k = structure.index(b, p, q);
                for s in 0..g {
                    v[(s, k)] = rep.mats[s][(p, q)];
                    f[(k, s)] = rep.mats[s][(p, q)].conj() * scale;
                }
            }
        }
    }

    let mut triplets = Vec::new();
    for k in 0..d {
        let mut w = v.clone();
        for s in 0..g {
            let fs = f[(k, s)];
            for x in w.row_mut(s).iter_mut() {
                *x *= fs;
            }
        }
        let c = v.transpose() * w;
        for i in 0..d {
            for j in 0..d {
                let x = snap(c[(i, j)]);
                if x != ZERO {
                    triplets.push((k, i, j, x));
                }
            }
        }
    }
    let delta = Comultiplication::from_triplets(d, triplets)?;

    let mut anti = Vec::new();
    let mut eps = vec![ZERO; d];
    for k in 0..d {
        for i in 0..d {
            let x = snap((0..g).map(|s| f[(k, s)] * v[(group.inverse(s), i)]).sum());
            if x != ZERO {
                anti.push((i, k, x));
            }
        }
        eps[k] = snap((0..g).map(|s| f[(k, s)]).sum());
    }
    let antipode = LinearMap::from_triplets(d, anti)?;
    let counit = Functional::from_coeffs(&structure, eps)?;
    let weights = family.reps().iter().map(|r| r.dim() as f64 / g as f64).collect();
    let haar = HaarWeights::new(&structure, weights)?;
    let deltas = (0..g)
        .map(|s| AlgebraElement::from_coeffs(&structure, v.row(s).iter().copied().collect()))
        .collect::<Result<Vec<_>>>()?;
    let qg = QuantumGroup::new(
        format!("dual:{}", group.name()),
        structure,
        delta,
        counit,
        antipode,
        Some(haar),
    )?
    .validated()?;
    Ok(DualModel {
        group: group.clone(),
        quantum_group: Some(qg),
        family: Some(family.clone()),
        deltas,
    })
}

impl DualModel {
    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn name(&self) -> String {
        format!("dual:{}", self.group.name())
    }

    pub fn is_bounds_only(&self) -> bool {
        self.quantum_group.is_none()
    }

    pub fn quantum_group(&self) -> Option<&QuantumGroup> {
        self.quantum_group.as_ref()
    }

    fn require_full(&self) -> Result<&QuantumGroup> {
        self.quantum_group.as_ref().ok_or_else(|| {
            Error::Unsupported(format!(
                "{} was built without an irrep family of {}",
                self.name(),
                self.group.name()
            ))
        })
    }

    pub fn family(&self) -> Option<&IrrepFamily> {
        self.family.as_ref()
    }

    /// `δ^s` in the matrix-unit basis.
    pub fn delta_element(&self, s: usize) -> Result<&AlgebraElement> {
        self.require_full()?;
        Ok(&self.deltas[s])
    }

    /// The coreps `κ_s` with matrix `[δ^s]`, one per group element.
    pub fn coreps(&self) -> Result<Vec<Corepresentation>> {
        self.require_full()?;
        (0..self.group.order())
            .map(|s| Corepresentation::new(format!("kappa{}", self.group.label(s)), 1, vec![self.deltas[s].clone()]))
            .collect()
    }

    /// The functional with `u(δ^s) = values[s]`.
    pub fn functional_from_values(&self, values: &[C64]) -> Result<Functional> {
        let q = self.require_full()?;
        let family = self.family.as_ref().expect("full model has a family");
        crate::algebra::check_len(self.group.order(), values.len())?;
        let s = q.structure();
        let g = self.group.order() as f64;
        let mut coeffs = vec![ZERO; s.dim()];
        for (b, rep) in family.reps().iter().enumerate() {
            let m = rep.dim();
            for p in 0..m {
                for r in 0..m {
                    let sum: C64 = rep.mats.iter().zip(values).map(|(mat, &u)| mat[(p, r)].conj() * u).sum();
                    coeffs[s.index(b, p, r)] = sum * (m as f64 / g);
                }
            }
        }
        Functional::from_coeffs(s, coeffs)
    }

    /// Fourier spectrum `û(κ_s) = conj(u(s))` over `s ≠ e`.
    pub fn spectrum_from_values(&self, values: &[C64]) -> Result<FourierSpectrum> {
        crate::algebra::check_len(self.group.order(), values.len())?;
        let e = self.group.identity();
        Ok(FourierSpectrum::from_scalars(
            (0..self.group.order())
                .filter(|&s| s != e)
                .map(|s| (format!("kappa{}", self.group.label(s)), values[s].conj())),
        ))
    }
}

/// A unitary representation of `G` and a unit vector, defining the
/// positive-definite function `u(s) = ⟨ρ(s)ξ, ξ⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualStateSpec {
    pub rep: Vec<DMatrix<C64>>,
    pub xi: DVector<C64>,
}

/// Values `u(s)` of the state defined by `spec`, after validating it.
pub fn dual_state_values(group: &GroupTable, spec: &DualStateSpec) -> Result<Vec<C64>> {
    const TOL: f64 = 1e-9;
    let bad = |m: String| Error::InvalidStateSpec(m);
    if spec.rep.len() != group.order() {
        return Err(bad(format!("{} matrices for {} elements", spec.rep.len(), group.order())));
    }
    let dim = spec.xi.len();
    if ((spec.xi.norm_squared()) - 1.0).abs() > TOL {
        return Err(bad(format!("⟨ξ, ξ⟩ = {}, expected 1", spec.xi.norm_squared())));
    }
    let id = DMatrix::<C64>::identity(dim, dim);
    for (s, m) in spec.rep.iter().enumerate() {
        if m.nrows() != dim || m.ncols() != dim {
            return Err(bad(format!("matrix at {} has the wrong shape", group.label(s))));
        }
        if (m.adjoint() * m - &id).camax() > TOL {
            return Err(bad(format!("matrix at {} is not unitary", group.label(s))));
        }
    }
    for s in 0..group.order() {
        for t in 0..group.order() {
            if (&spec.rep[group.mul(s, t)] - &spec.rep[s] * &spec.rep[t]).camax() > TOL {
                return Err(bad(format!(
                    "representation is inconsistent at ({}, {})",
                    group.label(s),
                    group.label(t)
                )));
            }
        }
    }
    let values: Vec<C64> = spec.rep.iter().map(|m| spec.xi.dotc(&(m * &spec.xi))).collect();
    check_positive_definite(group, &values)?;
    Ok(values)
}

/// Checks `u(e) = 1` and that the kernel `[u(s⁻¹t)]` is positive semidefinite.
pub fn check_positive_definite(group: &GroupTable, values: &[C64]) -> Result<()> {
    let g = group.order();
    if (values[group.identity()] - ONE).norm() > 1e-9 {
        return Err(Error::InvalidStateSpec(format!("u(e) = {}, expected 1", values[group.identity()])));
    }
    let kernel = DMatrix::from_fn(g, g, |s, t| values[group.mul(group.inverse(s), t)]);
    let min = kernel.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min);
    if min < -1e-9 {
        return Err(Error::InvalidStateSpec(format!("kernel has eigenvalue {min:e} < 0")));
    }
    Ok(())
}

/// The state defined by `spec` on the full model.
pub fn dual_state(model: &DualModel, spec: &DualStateSpec) -> Result<Functional> {
    let values = dual_state_values(model.group(), spec)?;
    model.functional_from_values(&values)
}

/// How much of `Ŝ_n` to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnhatMode {
    /// Wedderburn blocks of `ℂS_n`, needed for exact distances.
    Full,
    BoundsOnly,
}

impl SnhatMode {
    /// Full for `n ≤ 4`, bounds-only above.
    pub fn default_for(n: usize) -> Self {
        if n <= 4 {
            SnhatMode::Full
        } else {
            SnhatMode::BoundsOnly
        }
    }
}

/// The walk on `Ŝ_n`: the model, the values `u(σ)`, and the state itself when
/// the model is full.
#[derive(Debug, Clone)]
pub struct SnhatWalk {
    pub model: DualModel,
    pub values: Vec<C64>,
    pub state: Option<Functional>,
}

impl SnhatWalk {
    pub fn spectrum(&self) -> Result<FourierSpectrum> {
        self.model.spectrum_from_values(&self.values)
    }
}

/// The unit vector with `ξ_i = sqrt(n^{n−i}(n−1)/(n^n−1))`, `i = 1..n`.
pub fn snhat_xi(n: usize) -> DVector<C64> {
    let nf = n as f64;
    // n^{n−i}/(n^n − 1) = n^{−i}/(1 − n^{−n})
    let denom = -(-nf * nf.ln()).exp_m1();
    DVector::from_iterator(
        n,
        (1..=n).map(|i| C64::new(((nf - 1.0) * (-(i as f64) * nf.ln()).exp() / denom).sqrt(), 0.0)),
    )
}

/// The permutation representation `π(σ)e_i = e_{σ(i)}` with [`snhat_xi`].
pub fn snhat_spec(n: usize) -> DualStateSpec {
    let rep = permutations(n)
        .into_iter()
        .map(|p| {
            let mut m = DMatrix::zeros(n, n);
            for (i, &pi) in p.iter().enumerate() {
                m[(pi, i)] = ONE;
            }
            m
        })
        .collect();
    DualStateSpec { rep, xi: snhat_xi(n) }
}

pub fn snhat_walk_state(n: usize, mode: SnhatMode) -> Result<SnhatWalk> {
    if n < 2 {
        return Err(Error::Unsupported(format!("Ŝ_n walk needs n >= 2, got {n}")));
    }
    if n > 5 {
        return Err(Error::Unsupported(format!("Ŝ_{n}: only n <= 5 is supported")));
    }
    let group = GroupTable::symmetric(n)?;
    let values = dual_state_values(&group, &snhat_spec(n))?;
    let model = match mode {
        SnhatMode::Full => dual(&group, Some(&IrrepFamily::symmetric(&group, n)?))?,
        SnhatMode::BoundsOnly => dual(&group, None)?,
    };
    let state = if model.is_bounds_only() {
        None
    } else {
        Some(model.functional_from_values(&values)?)
    };
    Ok(SnhatWalk { model, values, state })
}
