//! The commutative quantum group `F(G)` of functions on a finite group.

use crate::algebra::{AlgebraElement, BlockStructure, Functional, HaarWeights, ONE};
use crate::corep::Corepresentation;
use crate::error::Result;
use crate::hopf::{Comultiplication, LinearMap, QuantumGroup};

use super::group::{GroupTable, IrrepFamily};

/// `Δ(δ_s) = Σ_t δ_{st⁻¹} ⊗ δ_t`, `ε(δ_s) = δ_{s,e}`, `S(δ_s) = δ_{s⁻¹}`,
/// uniform Haar weights.
pub fn classical(group: &GroupTable) -> Result<QuantumGroup> {
    let n = group.order();
    let structure = BlockStructure::shared(vec![1; n])?;
    let delta = Comultiplication::from_triplets(
        n,
        (0..n).flat_map(|s| (0..n).map(move |t| (s, group.mul(s, group.inverse(t)), t, ONE))),
    )?;
    let counit = Functional::dual_basis(&structure, group.identity());
    let antipode = LinearMap::from_triplets(n, (0..n).map(|s| (group.inverse(s), s, ONE)))?;
    let haar = HaarWeights::new(&structure, vec![1.0 / n as f64; n])?;
    QuantumGroup::new(
        format!("classical:{}", group.name()),
        structure,
        delta,
        counit,
        antipode,
        Some(haar),
    )?
    .validated()
}

/// Matrix coefficients `ρ_ij = Σ_s π(s)_ij δ_s` of each irrep of `G`.
pub fn classical_irreps(q: &QuantumGroup, family: &IrrepFamily) -> Result<Vec<Corepresentation>> {
    family
        .reps()
        .iter()
        .map(|rep| {
            let d = rep.dim();
            let rho = (0..d * d)
                .map(|x| {
                    let coeffs = rep.mats.iter().map(|m| m[(x / d, x % d)]).collect();
                    AlgebraElement::from_coeffs(q.structure(), coeffs)
                })
                .collect::<Result<Vec<_>>>()?;
            Corepresentation::new(rep.name.clone(), d, rho)
        })
        .collect()
}
