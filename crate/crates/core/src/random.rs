//! Seeded random elements, functionals, states and projections, used by the
//! property checks and the CLI.

use std::sync::Arc;

use nalgebra::DMatrix;
use rand::Rng;

use crate::algebra::{AlgebraElement, BlockStructure, Functional, C64};
use crate::error::Result;
use crate::hopf::QuantumGroup;

fn coeffs<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<C64> {
    (0..d)
        .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

/// Coefficients uniform in the unit square of ℂ.
pub fn element<R: Rng + ?Sized>(structure: &Arc<BlockStructure>, rng: &mut R) -> AlgebraElement {
    AlgebraElement::from_coeffs(structure, coeffs(structure.dim(), rng)).expect("length matches")
}

pub fn functional<R: Rng + ?Sized>(structure: &Arc<BlockStructure>, rng: &mut R) -> Functional {
    Functional::from_coeffs(structure, coeffs(structure.dim(), rng)).expect("length matches")
}

/// A random state: density `g*g / ∫ g*g`.
pub fn state<R: Rng + ?Sized>(q: &QuantumGroup, rng: &mut R) -> Result<Functional> {
    let g = element(q.structure(), rng);
    let a = &g.star() * &g;
    let total = q.integrate(&a)?;
    q.functional_of(&a.scale(C64::new(1.0 / total.re, 0.0)))
}

/// A random orthogonal projection: in each block, the projection onto the span
/// of a random subset of columns of a random matrix.
pub fn projection<R: Rng + ?Sized>(structure: &Arc<BlockStructure>, rng: &mut R) -> AlgebraElement {
    let blocks: Vec<DMatrix<C64>> = structure
        .sizes()
        .iter()
        .map(|&m| {
            let rank = rng.random_range(0..=m);
            if rank == 0 {
                return DMatrix::zeros(m, m);
            }
            let g = DMatrix::from_iterator(m, rank, coeffs(m * rank, rng));
            let q = g.qr().q();
            &q * q.adjoint()
        })
        .collect();
    AlgebraElement::from_blocks(structure, &blocks).expect("blocks match structure")
}
