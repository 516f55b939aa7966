//! Finite quantum groups as finite-dimensional C*-Hopf algebras, random walks
//! driven by states, and the Fourier-analytic bounds on their distance to the
//! Haar state.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: block-diagonal C*-algebras, functionals, Lᵖ norms.
//! - [`hopf`]: comultiplication, counit, antipode, Haar state, convolution.
//! - [`corep`]: corepresentations, Peter–Weyl checks, Fourier transforms.
//! - [`bounds`]: total variation distance, convolution powers, upper and lower
//!   bounds, bound curves.
//! - [`models`]: classical groups, dual groups, Sekine quantum groups, the
//!   states studied on them and their closed-form bounds.

pub mod algebra;
pub mod bounds;
pub mod corep;
pub mod error;
pub mod hopf;
pub mod models;
pub mod random;

pub use algebra::{AlgebraElement, BlockStructure, Functional, HaarWeights, MatrixUnit, Norm, C64};
pub use bounds::{BoundCurve, BoundRow, CsChain, FourierSpectrum, LowerBound, TransferMatrix};
pub use corep::{Corepresentation, FourierMatrix, PeterWeylReport};
pub use error::{Error, Result};
pub use hopf::{Axiom, Comultiplication, HopfReport, LinearMap, QuantumGroup, TensorElement};
pub use models::{GroupTable, Model};
