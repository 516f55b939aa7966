//! Fixtures shared by the benchmarks.

use qwalk_core::models::{sekine, sekine_irreps, sekine_walk_state};
use qwalk_core::{Corepresentation, Functional, QuantumGroup, Result};

/// `Y_n` with its walk state and, for odd `n`, its irrep catalogue.
pub struct SekineFixture {
    pub q: QuantumGroup,
    pub nu: Functional,
    pub irreps: Vec<Corepresentation>,
}

pub fn sekine_fixture(n: usize) -> Result<SekineFixture> {
    let q = sekine(n)?;
    let nu = sekine_walk_state(&q, n)?;
    let irreps = if n % 2 == 1 { sekine_irreps(&q, n)? } else { Vec::new() };
    Ok(SekineFixture { q, nu, irreps })
}
