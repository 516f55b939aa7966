//! JSON documents describing a quantum group, and states on one.
//!
//! Basis indices are those of [`BlockStructure`]: blocks in order, each block
//! row-major.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use qwalk_core::hopf::{verify_hopf, Comultiplication, LinearMap};
use qwalk_core::{AlgebraElement, BlockStructure, Corepresentation, Functional, HaarWeights, Model, QuantumGroup};
use serde::{Deserialize, Serialize};

use crate::complex::Cx;
use crate::VerificationFailure;

/// `delta` triplets `(row, col1, col2, c)`: `Δ(b_row)` has coefficient `c` at
/// `b_col1 ⊗ b_col2`. `antipode` triplets `(row, col, c)`: `S(b_col)` has
/// coefficient `c` at `b_row`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub name: String,
    pub blocks: Vec<usize>,
    pub delta: Vec<(usize, usize, usize, Cx)>,
    pub epsilon: Vec<Cx>,
    pub antipode: Vec<(usize, usize, Cx)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub haar: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub irreps: Vec<IrrepDocument>,
}

/// Matrix elements in row-major order, each as sparse `(index, c)` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrrepDocument {
    pub name: String,
    pub dim: usize,
    pub entries: Vec<Vec<(usize, Cx)>>,
}

/// Coefficients `φ(b_k)` of a functional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub coeffs: Vec<Cx>,
}

fn sparse(a: &AlgebraElement) -> Vec<(usize, Cx)> {
    a.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() != 0.0)
        .map(|(k, &c)| (k, Cx(c)))
        .collect()
}

impl ModelDocument {
    pub fn from_quantum_group(q: &QuantumGroup, irreps: Option<&[Corepresentation]>) -> Self {
        Self {
            name: q.name().to_string(),
            blocks: q.structure().sizes().to_vec(),
            delta: q.delta().triplets().map(|(k, i, j, c)| (k, i, j, Cx(c))).collect(),
            epsilon: q.counit_functional().coeffs().iter().map(|&c| Cx(c)).collect(),
            antipode: q.antipode_map().triplets().map(|(r, c, v)| (r, c, Cx(v))).collect(),
            haar: q.haar().map(|h| h.weights().to_vec()),
            irreps: irreps
                .unwrap_or_default()
                .iter()
                .map(|k| IrrepDocument {
                    name: k.name().to_string(),
                    dim: k.dim(),
                    entries: k.entries().iter().map(sparse).collect(),
                })
                .collect(),
        }
    }

    /// Assembles the quantum group without checking any axiom.
    pub fn build(&self) -> Result<(QuantumGroup, Vec<Corepresentation>)> {
        let structure = BlockStructure::shared(self.blocks.clone())?;
        let d = structure.dim();
        let delta = Comultiplication::from_triplets(d, self.delta.iter().map(|&(k, i, j, c)| (k, i, j, c.0)))?;
        let counit = Functional::from_coeffs(&structure, self.epsilon.iter().map(|c| c.0).collect())
            .context("epsilon")?;
        let antipode = LinearMap::from_triplets(d, self.antipode.iter().map(|&(r, c, v)| (r, c, v.0)))?;
        let haar = match &self.haar {
            Some(w) => Some(HaarWeights::new(&structure, w.clone()).context("haar")?),
            None => None,
        };
        let q = QuantumGroup::new(self.name.clone(), structure.clone(), delta, counit, antipode, haar)?;
        let irreps = self
            .irreps
            .iter()
            .map(|irrep| {
                let rho = irrep
                    .entries
                    .iter()
                    .map(|terms| {
                        let mut c = vec![qwalk_core::C64::new(0.0, 0.0); d];
                        for &(k, v) in terms {
                            if k >= d {
                                bail!("irrep `{}`: index {k} out of range for dimension {d}", irrep.name);
                            }
                            c[k] += v.0;
                        }
                        Ok(AlgebraElement::from_coeffs(&structure, c)?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Corepresentation::new(irrep.name.clone(), irrep.dim, rho)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((q, irreps))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing model document {}", path.display()))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Loads a document as a model: the Haar state is solved for when absent and
/// every Hopf axiom must hold at `tol`.
pub fn load_model(path: &Path, tol: f64) -> Result<Model> {
    let doc = ModelDocument::read(path)?;
    let (mut q, irreps) = doc.build()?;
    if q.haar().is_none() {
        q = q.with_solved_haar().context("solving for the Haar state")?;
    }
    let report = verify_hopf(&q, tol);
    if !report.pass() {
        let names: Vec<_> = report.failing().iter().map(|a| a.name()).collect();
        return Err(VerificationFailure(format!(
            "{}: failing axioms: {}",
            path.display(),
            names.join(", ")
        ))
        .into());
    }
    let model = Model::from_quantum_group(q);
    Ok(if irreps.is_empty() { model } else { model.with_irreps(irreps) })
}

impl StateDocument {
    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing state document {}", path.display()))
    }

    pub fn from_functional(name: Option<String>, phi: &Functional) -> Self {
        Self {
            name,
            coeffs: phi.coeffs().iter().map(|&c| Cx(c)).collect(),
        }
    }

    pub fn functional(&self, q: &QuantumGroup) -> Result<Functional> {
        Ok(Functional::from_coeffs(q.structure(), self.coeffs.iter().map(|c| c.0).collect())?)
    }
}
