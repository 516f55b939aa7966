use anyhow::{anyhow, Result};
use qwalk_core::corep::fourier;
use qwalk_core::Model;
use serde::Serialize;

use crate::complex::Cx;
use crate::curve::{resolve_state, StateRef};
use crate::document::ModelDocument;
use crate::output::{csv_table, num};

pub fn model_document(model: &Model) -> Result<ModelDocument> {
    let mut doc = ModelDocument::from_quantum_group(model.quantum_group()?, model.irreps());
    doc.name = model.name().to_string();
    Ok(doc)
}

/// One entry `ν̂(α)_ij = ν(ρ_ij*)`.
#[derive(Debug, Clone, Serialize)]
pub struct FourierEntry {
    pub corep: String,
    pub dim: usize,
    pub i: usize,
    pub j: usize,
    pub value: Cx,
}

pub fn fourier_table(model: &Model, state: &StateRef) -> Result<Vec<FourierEntry>> {
    let irreps = model
        .irreps()
        .ok_or_else(|| anyhow!("{} has no irrep catalogue", model.name()))?;
    let nu = resolve_state(model, state)?;
    let mut out = Vec::new();
    for kappa in irreps {
        let m = fourier(&nu, kappa)?.m;
        for i in 0..kappa.dim() {
            for j in 0..kappa.dim() {
                out.push(FourierEntry {
                    corep: kappa.name().to_string(),
                    dim: kappa.dim(),
                    i,
                    j,
                    value: Cx(m[(i, j)]),
                });
            }
        }
    }
    Ok(out)
}

pub fn fourier_csv(entries: &[FourierEntry]) -> Result<String> {
    csv_table(
        &["corep", "dim", "i", "j", "re", "im"],
        entries.iter().map(|e| {
            vec![
                e.corep.clone(),
                e.dim.to_string(),
                e.i.to_string(),
                e.j.to_string(),
                num(e.value.0.re),
                num(e.value.0.im),
            ]
        }),
    )
}
