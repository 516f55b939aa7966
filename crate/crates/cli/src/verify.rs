use std::fmt;
use std::path::Path;

use anyhow::Result;
use qwalk_core::corep::peter_weyl_check;
use qwalk_core::hopf::{solve_haar, verify_hopf, HopfReport};
use qwalk_core::{Corepresentation, PeterWeylReport, QuantumGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::document::ModelDocument;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Serialize)]
pub struct HaarCheck {
    pub attached: Option<Vec<f64>>,
    pub solved: Option<Vec<f64>>,
    pub error: Option<String>,
    pub max_diff: Option<f64>,
    pub pass: bool,
}

/// Residuals of identities checked on seeded random functionals.
#[derive(Debug, Clone, Serialize)]
pub struct SampledChecks {
    pub seed: u64,
    pub samples: usize,
    pub density_convolution: f64,
    pub density_convolution_swapped: f64,
    pub plancherel: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub model: String,
    pub dim: usize,
    pub blocks: Vec<usize>,
    pub tol: f64,
    pub hopf: HopfReport,
    pub haar: HaarCheck,
    pub sampled: Option<SampledChecks>,
    pub peter_weyl: Option<PeterWeylReport>,
    pub pass: bool,
}

pub struct VerifyOptions {
    pub tol: f64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            seed: DEFAULT_SEED,
            samples: 8,
        }
    }
}

/// Unlike model resolution elsewhere, documents are loaded without checking
/// the axioms so that failures can be reported.
pub fn verify(spec: &str, opts: &VerifyOptions) -> Result<VerifyReport> {
    let path = Path::new(spec);
    let (q, irreps) = if path.is_file() {
        ModelDocument::read(path)?.build()?
    } else {
        let m = crate::resolve_registry(spec)?;
        let irreps = m.irreps().map(<[_]>::to_vec).unwrap_or_default();
        (m.quantum_group()?.clone(), irreps)
    };
    verify_quantum_group(spec, q, &irreps, opts)
}

pub fn verify_quantum_group(
    label: &str,
    q: QuantumGroup,
    irreps: &[Corepresentation],
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let attached = q.haar().map(|h| h.weights().to_vec());
    let (solved, error) = match solve_haar(&q) {
        Ok(h) => (Some(h), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let max_diff = match (&attached, &solved) {
        (Some(a), Some(s)) => Some(
            a.iter()
                .zip(s.weights())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
        ),
        _ => None,
    };
    let haar = HaarCheck {
        pass: solved.is_some() && max_diff.is_none_or(|d| d < opts.tol),
        attached,
        solved: solved.as_ref().map(|h| h.weights().to_vec()),
        error,
        max_diff,
    };
    let q = match (q.haar().is_some(), solved) {
        (false, Some(h)) => q.with_haar(h)?,
        _ => q,
    };

    let hopf = verify_hopf(&q, opts.tol);
    let sampled = if q.haar().is_some() && opts.samples > 0 {
        Some(sampled_checks(&q, opts)?)
    } else {
        None
    };
    let peter_weyl = if irreps.is_empty() || q.haar().is_none() {
        None
    } else {
        Some(peter_weyl_check(&q, irreps, opts.tol.max(1e-10))?)
    };
    let pass = hopf.pass()
        && haar.pass
        && sampled.as_ref().is_none_or(|s| s.pass)
        && peter_weyl.as_ref().is_none_or(|p| p.pass());
    Ok(VerifyReport {
        model: label.to_string(),
        dim: q.dim(),
        blocks: q.structure().sizes().to_vec(),
        tol: opts.tol,
        hopf,
        haar,
        sampled,
        peter_weyl,
        pass,
    })
}

fn sampled_checks(q: &QuantumGroup, opts: &VerifyOptions) -> Result<SampledChecks> {
    let (direct, swapped) = q.density_convolution_residuals(opts.samples, opts.seed)?;
    let h = q.require_haar()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut plancherel: f64 = 0.0;
    for _ in 0..opts.samples {
        let phi = qwalk_core::random::functional(q.structure(), &mut rng);
        let lhs = q.dual_haar(&q.convolve(&q.functional_star(&phi)?, &phi)?)?;
        let a = q.density_of(&phi)?;
        let rhs = (&a.star() * &a).integrate(h);
        plancherel = plancherel.max((lhs - rhs).norm() / (1.0 + rhs.norm()));
    }
    Ok(SampledChecks {
        seed: opts.seed,
        samples: opts.samples,
        density_convolution: direct,
        density_convolution_swapped: swapped,
        plancherel,
        pass: direct < 1e-8 && plancherel < 1e-9,
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "ok"
    } else {
        "FAIL"
    }
}

fn block_summary(blocks: &[usize]) -> String {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &b in blocks {
        match counts.iter_mut().find(|(size, _)| *size == b) {
            Some((_, c)) => *c += 1,
            None => counts.push((b, 1)),
        }
    }
    let parts: Vec<String> = counts.iter().map(|(size, c)| format!("{c} of size {size}")).collect();
    format!("{} ({})", blocks.len(), parts.join(", "))
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "model       {}", self.model)?;
        writeln!(f, "dimension   {}", self.dim)?;
        writeln!(f, "blocks      {}", block_summary(&self.blocks))?;
        writeln!(f, "hopf axioms (tol {:e})", self.tol)?;
        write!(f, "{}", self.hopf)?;
        for axiom in self.hopf.failing() {
            writeln!(f, "  failed: {}", axiom.name())?;
        }
        match (&self.haar.solved, &self.haar.error) {
            (Some(w), _) => {
                writeln!(f, "haar        solved, weights per block:")?;
                for (b, x) in w.iter().enumerate() {
                    writeln!(f, "  block {b:<4} {x:.15}")?;
                }
                if let Some(d) = self.haar.max_diff {
                    writeln!(f, "  max difference from attached weights {d:.3e}  {}", verdict(self.haar.pass))?;
                }
            }
            (None, Some(e)) => writeln!(f, "haar        FAIL: {e}")?,
            (None, None) => writeln!(f, "haar        not solved")?,
        }
        if let Some(s) = &self.sampled {
            writeln!(f, "sampled checks (seed {}, {} samples)", s.seed, s.samples)?;
            writeln!(f, "  density convolution     {:>12.3e}", s.density_convolution)?;
            writeln!(f, "  swapped operands        {:>12.3e}", s.density_convolution_swapped)?;
            writeln!(f, "  plancherel (relative)   {:>12.3e}  {}", s.plancherel, verdict(s.pass))?;
        }
        match &self.peter_weyl {
            Some(p) => {
                writeln!(f, "peter-weyl  sum of squared dimensions {} of {}  {}", p.sum_dim_squared, p.algebra_dim, verdict(p.pass()))?;
                write!(f, "{p}")?;
            }
            None => writeln!(f, "peter-weyl  no irrep catalogue")?,
        }
        writeln!(f, "result      {}", if self.pass { "PASS" } else { "FAIL" })
    }
}
