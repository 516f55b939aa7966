//! Total variation distance, convolution powers and the Fourier bounds on the
//! distance between `ν^{⋆k}` and the Haar state.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Functional, Norm, C64};
use crate::corep::{fourier, Corepresentation, UNITARY_TOL};
use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;

/// Tolerance for the state test applied to inputs of [`tv_distance`].
pub const STATE_TOL: f64 = 1e-8;

/// Tolerance of the bound sandwich `lower ≤ exact ≤ sqrt(ub_sum)`.
pub const SANDWICH_TOL: f64 = 1e-9;

/// `‖ν − μ‖ = ½‖a_ν − a_μ‖₁` for states `ν`, `μ`.
pub fn tv_distance(q: &QuantumGroup, nu: &Functional, mu: &Functional) -> Result<f64> {
    q.check_state(nu, STATE_TOL)?;
    q.check_state(mu, STATE_TOL)?;
    let diff = q.density_of(nu)?.sub(&q.density_of(mu)?)?;
    Ok(0.5 * diff.norm(q.require_haar()?, Norm::One))
}

/// Largest `|ν(p) − μ(p)|` over `samples` random projections.
pub fn sampled_projection_gap<R: Rng + ?Sized>(
    q: &QuantumGroup,
    nu: &Functional,
    mu: &Functional,
    samples: usize,
    rng: &mut R,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let p = crate::random::projection(q.structure(), rng);
        worst = worst.max((nu.apply(&p)? - mu.apply(&p)?).norm());
    }
    Ok(worst)
}

/// The matrix of `μ ↦ ν ⋆ μ` on functional coefficients.
#[derive(Debug, Clone)]
pub struct TransferMatrix {
    m: DMatrix<C64>,
}

impl TransferMatrix {
    pub fn new(q: &QuantumGroup, nu: &Functional) -> Result<Self> {
        let d = q.dim();
        let mut m = DMatrix::zeros(d, d);
        for k in 0..d {
            for &(i, j, c) in q.delta().row(k) {
                m[(k, j)] += c * nu.coeff(i);
            }
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn apply(&self, q: &QuantumGroup, mu: &Functional) -> Result<Functional> {
        let v = &self.m * DVector::from_column_slice(mu.coeffs());
        Functional::from_coeffs(q.structure(), v.iter().copied().collect())
    }

    /// `T^k` by repeated squaring.
    pub fn power(&self, k: usize) -> DMatrix<C64> {
        let d = self.m.nrows();
        let mut result = DMatrix::identity(d, d);
        let mut base = self.m.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

/// `ν^{⋆k}`, with `ν^{⋆0} = ε`.
pub fn power_state(q: &QuantumGroup, nu: &Functional, k: usize) -> Result<Functional> {
    let eps = q.counit_functional();
    match k {
        0 => Ok(eps.clone()),
        1 => Ok(nu.clone()),
        _ => {
            let t = TransferMatrix::new(q, nu)?;
            let v = t.power(k) * DVector::from_column_slice(eps.coeffs());
            Functional::from_coeffs(q.structure(), v.iter().copied().collect())
        }
    }
}

/// One Fourier matrix of a state at a non-trivial irreducible corep.
#[derive(Debug, Clone)]
pub struct SpectrumTerm {
    pub name: String,
    pub dim: usize,
    pub m: DMatrix<C64>,
}

/// Fourier matrices of a state at all non-trivial irreducible coreps; the
/// input to both bounds.
#[derive(Debug, Clone, Default)]
pub struct FourierSpectrum {
    terms: Vec<SpectrumTerm>,
}

/// The lower bound together with every corep attaining it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBound {
    pub value: f64,
    pub modulus: f64,
    pub maximizers: Vec<String>,
}

impl FourierSpectrum {
    /// Transforms `ν` at each unitary corep in `irreps`, skipping the trivial
    /// one.
    pub fn new(nu: &Functional, irreps: &[Corepresentation]) -> Result<Self> {
        let mut terms = Vec::new();
        for kappa in irreps {
            if !kappa.is_unitary() {
                return Err(Error::InvalidCorep(format!("`{}` is not unitary", kappa.name())));
            }
            if kappa.is_trivial() {
                continue;
            }
            terms.push(SpectrumTerm {
                name: kappa.name().to_string(),
                dim: kappa.dim(),
                m: fourier(nu, kappa)?.m,
            });
        }
        Ok(Self { terms })
    }

    /// A spectrum of one-dimensional terms given by their values.
    pub fn from_scalars<I, S>(values: I) -> Self
    where
        I: IntoIterator<Item = (S, C64)>,
        S: Into<String>,
    {
        Self {
            terms: values
                .into_iter()
                .map(|(name, v)| SpectrumTerm {
                    name: name.into(),
                    dim: 1,
                    m: DMatrix::from_element(1, 1, v),
                })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[SpectrumTerm] {
        &self.terms
    }

    /// `ln(d_α Tr[(X*)^k X^k])` for one term, via scaled repeated squaring.
    fn log_term(term: &SpectrumTerm, k: usize) -> f64 {
        let n = term.m.nrows();
        let (mut res, mut res_log) = (DMatrix::<C64>::identity(n, n), 0.0);
        let (mut base, mut base_log) = (term.m.clone(), 0.0);
        let rescale = |m: &mut DMatrix<C64>, log: &mut f64| -> bool {
            let s = m.iter().map(|c| c.norm()).fold(0.0, f64::max);
            if s == 0.0 {
                return false;
            }
            *m /= C64::new(s, 0.0);
            *log += s.ln();
            true
        };
        if !rescale(&mut base, &mut base_log) && k > 0 {
            return f64::NEG_INFINITY;
        }
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                res = &res * &base;
                res_log += base_log;
                if !rescale(&mut res, &mut res_log) {
                    return f64::NEG_INFINITY;
                }
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
                base_log *= 2.0;
                if !rescale(&mut base, &mut base_log) {
                    return f64::NEG_INFINITY;
                }
            }
        }
        let frob2: f64 = res.iter().map(|c| c.norm_sqr()).sum();
        (term.dim as f64).ln() + 2.0 * res_log + frob2.ln()
    }

    /// `¼ Σ_{α≠τ} d_α Tr[(ν̂(α)*)^k ν̂(α)^k]`, summed in log domain.
    pub fn ub_sum(&self, k: usize) -> f64 {
        let logs: Vec<f64> = self.terms.iter().map(|t| Self::log_term(t, k)).collect();
        let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if max == f64::NEG_INFINITY {
            return 0.0;
        }
        let sum: f64 = logs.iter().map(|l| (l - max).exp()).sum();
        0.25 * (max + sum.ln()).exp()
    }

    /// `max ½|ν(ρ)|^k` over the one-dimensional terms.
    pub fn lower(&self, k: usize) -> LowerBound {
        let one_dim: Vec<(&str, f64)> = self
            .terms
            .iter()
            .filter(|t| t.dim == 1)
            .map(|t| (t.name.as_str(), t.m[(0, 0)].norm()))
            .collect();
        lower_from_moduli(&one_dim, k)
    }
}

fn lower_from_moduli(moduli: &[(&str, f64)], k: usize) -> LowerBound {
    let modulus = moduli.iter().map(|&(_, m)| m).fold(0.0, f64::max);
    let maximizers = moduli
        .iter()
        .filter(|&&(_, m)| modulus - m <= 1e-12 * modulus.max(1.0))
        .map(|&(name, _)| name.to_string())
        .collect();
    let value = if modulus == 0.0 {
        if k == 0 {
            0.5
        } else {
            0.0
        }
    } else {
        (k as f64 * modulus.ln()).exp() * 0.5
    };
    LowerBound {
        value,
        modulus,
        maximizers,
    }
}

/// The upper bound sum at `k` from Fourier matrix powers.
pub fn upper_bound(nu: &Functional, irreps: &[Corepresentation], k: usize) -> Result<f64> {
    Ok(FourierSpectrum::new(nu, irreps)?.ub_sum(k))
}

/// `max ½|ν(ρ)|^k` over non-trivial one-dimensional unitary coreps.
pub fn lower_bound(nu: &Functional, one_dim: &[Corepresentation], k: usize) -> Result<LowerBound> {
    let mut moduli = Vec::with_capacity(one_dim.len());
    for kappa in one_dim {
        if kappa.dim() != 1 {
            return Err(Error::InvalidCorep(format!(
                "`{}` has dimension {}, expected 1",
                kappa.name(),
                kappa.dim()
            )));
        }
        if kappa.is_trivial() || !kappa.is_unitary() {
            return Err(Error::InvalidCorep(format!(
                "`{}` must be non-trivial and unitary",
                kappa.name()
            )));
        }
        moduli.push((kappa.name(), nu.apply(kappa.entry(0, 0))?.norm()));
    }
    Ok(lower_from_moduli(&moduli, k))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: usize,
    pub exact_tv: Option<f64>,
    pub ub_sum: f64,
    pub sqrt_ub: f64,
    pub lower: f64,
}

impl BoundRow {
    pub fn check_sandwich(&self) -> Result<()> {
        if let Some(tv) = self.exact_tv {
            if self.lower - SANDWICH_TOL > tv || tv > self.sqrt_ub + SANDWICH_TOL {
                return Err(Error::SandwichViolated {
                    k: self.k,
                    lower: self.lower,
                    exact: tv,
                    upper: self.sqrt_ub,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCurve {
    pub model: String,
    pub state: String,
    pub rows: Vec<BoundRow>,
}

/// Exact distances `TV(ν^{⋆k}, π)` for `k = 1..=k_max`.
pub fn exact_tv_sequence(q: &QuantumGroup, nu: &Functional, k_max: usize) -> Result<Vec<f64>> {
    let pi = q.haar_functional()?;
    let t = TransferMatrix::new(q, nu)?;
    let mut mu = nu.clone();
    let mut out = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        if k > 1 {
            mu = t.apply(q, &mu)?;
        }
        out.push(tv_distance(q, &mu, &pi)?);
    }
    Ok(out)
}

/// Sweeps `k = 1..=k_max`, asserting the sandwich on every row with an exact
/// value.
pub fn bound_curve(
    q: &QuantumGroup,
    nu: &Functional,
    irreps: &[Corepresentation],
    k_max: usize,
    with_exact: bool,
    state: &str,
) -> Result<BoundCurve> {
    if k_max == 0 {
        return Err(Error::Unsupported("k_max must be at least 1".into()));
    }
    let spectrum = FourierSpectrum::new(nu, irreps)?;
    let mut curve = curve_from_spectrum(q.name(), state, &spectrum, k_max)?;
    if with_exact {
        for (row, tv) in curve.rows.iter_mut().zip(exact_tv_sequence(q, nu, k_max)?) {
            row.exact_tv = Some(tv);
            row.check_sandwich()?;
        }
    }
    Ok(curve)
}

/// A curve of bounds only, from a precomputed spectrum.
pub fn curve_from_spectrum(model: &str, state: &str, spectrum: &FourierSpectrum, k_max: usize) -> Result<BoundCurve> {
    if k_max == 0 {
        return Err(Error::Unsupported("k_max must be at least 1".into()));
    }
    let rows = (1..=k_max)
        .map(|k| {
            let ub = spectrum.ub_sum(k);
            BoundRow {
                k,
                exact_tv: None,
                ub_sum: ub,
                sqrt_ub: ub.sqrt(),
                lower: spectrum.lower(k).value,
            }
        })
        .collect();
    Ok(BoundCurve {
        model: model.to_string(),
        state: state.to_string(),
        rows,
    })
}

/// `(tv², ¼ĥ((μ−π)* ⋆ (μ−π)), ub_sum)` with `μ = ν^{⋆k}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CsChain {
    pub tv_squared: f64,
    pub quarter_form: f64,
    pub ub_sum: f64,
}

impl CsChain {
    pub fn holds(&self, tol: f64) -> bool {
        self.tv_squared <= self.quarter_form + tol && (self.quarter_form - self.ub_sum).abs() < tol
    }
}

pub fn cs_chain_check(q: &QuantumGroup, nu: &Functional, irreps: &[Corepresentation], k: usize) -> Result<CsChain> {
    let pi = q.haar_functional()?;
    let mu = power_state(q, nu, k)?;
    let tv = tv_distance(q, &mu, &pi)?;
    let diff = mu.sub(&pi)?;
    let form = q.dual_haar(&q.convolve(&q.functional_star(&diff)?, &diff)?)?;
    Ok(CsChain {
        tv_squared: tv * tv,
        quarter_form: 0.25 * form.re,
        ub_sum: upper_bound(nu, irreps, k)?,
    })
}

/// Filters a catalogue down to its non-trivial one-dimensional members.
pub fn nontrivial_one_dim(irreps: &[Corepresentation]) -> Vec<Corepresentation> {
    irreps
        .iter()
        .filter(|k| k.dim() == 1 && !k.is_trivial() && k.unitarity_residual() < UNITARY_TOL)
        .cloned()
        .collect()
}

