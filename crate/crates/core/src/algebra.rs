//! Finite-dimensional C*-algebras presented as direct sums of full matrix
//! blocks.
//!
//! Every algebra here is `M_{m_1}(C) ⊕ … ⊕ M_{m_B}(C)` with a fixed canonical
//! basis of matrix units: block-major, then row-major inside each block. An
//! [`AlgebraElement`] is a coefficient vector in that basis and a
//! [`Functional`] is a coefficient vector in the dual basis, so pairing the
//! two is a plain contraction.
//!
//! The block decomposition is always supplied by the caller; nothing here
//! tries to discover it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Tolerance used by positivity and Hermiticity checks unless overridden.
pub const DEFAULT_TOL: f64 = 1e-9;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

/// Position of a basis matrix unit: `E^{(block)}_{row,col}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatrixUnit {
    pub block: usize,
    pub row: usize,
    pub col: usize,
}

/// Ordered list of block side lengths `m_1..m_B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    units: Vec<MatrixUnit>,
}

impl BlockStructure {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidStructure("at least one block is required".into()));
        }
        if let Some(pos) = sizes.iter().position(|&m| m == 0) {
            return Err(Error::InvalidStructure(format!("block {pos} has size zero")));
        }
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut units = Vec::new();
        let mut offset = 0;
        for (block, &m) in sizes.iter().enumerate() {
            offsets.push(offset);
            for row in 0..m {
                for col in 0..m {
                    units.push(MatrixUnit { block, row, col });
                }
            }
            offset += m * m;
        }
        Ok(Self { sizes, offsets, units })
    }

    /// Convenience constructor returning the shared handle elements carry.
    pub fn shared(sizes: Vec<usize>) -> Result<Arc<Self>> {
        Self::new(sizes).map(Arc::new)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn num_blocks(&self) -> usize {
        self.sizes.len()
    }

    /// Total linear dimension `Σ m_b²`.
    pub fn dim(&self) -> usize {
        self.units.len()
    }

    pub fn block_size(&self, block: usize) -> usize {
        self.sizes[block]
    }

    pub fn block_offset(&self, block: usize) -> usize {
        self.offsets[block]
    }

    pub fn is_commutative(&self) -> bool {
        self.sizes.iter().all(|&m| m == 1)
    }

    pub fn index(&self, block: usize, row: usize, col: usize) -> usize {
        debug_assert!(row < self.sizes[block] && col < self.sizes[block]);
        self.offsets[block] + row * self.sizes[block] + col
    }

    pub fn unit(&self, k: usize) -> MatrixUnit {
        self.units[k]
    }

    /// Basis index of `b_k · b_l`, or `None` when the product vanishes.
    pub fn product(&self, k: usize, l: usize) -> Option<usize> {
        let a = self.units[k];
        let b = self.units[l];
        (a.block == b.block && a.col == b.row).then(|| self.index(a.block, a.row, b.col))
    }

    /// Basis index of `b_k*`.
    pub fn star(&self, k: usize) -> usize {
        let u = self.units[k];
        self.index(u.block, u.col, u.row)
    }

    pub fn is_diagonal_unit(&self, k: usize) -> bool {
        let u = self.units[k];
        u.row == u.col
    }

    /// Coefficients of the unit `𝟙 = Σ_b I_{m_b}`.
    pub fn unit_coeffs(&self) -> Vec<C64> {
        (0..self.dim())
            .map(|k| if self.is_diagonal_unit(k) { ONE } else { ZERO })
            .collect()
    }
}

fn ensure_same(a: &Arc<BlockStructure>, b: &Arc<BlockStructure>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a.sizes == b.sizes {
        Ok(())
    } else {
        Err(Error::StructureMismatch {
            expected: a.sizes.clone(),
            found: b.sizes.clone(),
        })
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Positive per-block weights `w_b` with `∫ a = Σ_b w_b Tr(a_b)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HaarWeights {
    weights: Vec<f64>,
}

impl HaarWeights {
    /// Validates positivity and the normalisation `Σ_b w_b m_b = 1`.
    pub fn new(structure: &BlockStructure, weights: Vec<f64>) -> Result<Self> {
        check_len(structure.num_blocks(), weights.len())
            .map_err(|e| Error::InvalidHaarWeights(e.to_string()))?;
        if let Some((b, w)) = weights.iter().enumerate().find(|(_, w)| !w.is_finite() || **w <= 0.0) {
            return Err(Error::InvalidHaarWeights(format!(
                "weight of block {b} is {w}, must be positive"
            )));
        }
        let total: f64 = weights
            .iter()
            .zip(structure.sizes())
            .map(|(w, &m)| w * m as f64)
            .sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidHaarWeights(format!(
                "Σ w_b m_b = {total}, expected 1"
            )));
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, block: usize) -> f64 {
        self.weights[block]
    }
}

/// Which non-commutative Lᵖ norm to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    One,
    Two,
    Infinity,
}

impl Norm {
    pub fn from_exponent(p: f64) -> Result<Self> {
        if p == 1.0 {
            Ok(Norm::One)
        } else if p == 2.0 {
            Ok(Norm::Two)
        } else if p == f64::INFINITY {
            Ok(Norm::Infinity)
        } else {
            Err(Error::UnsupportedNorm(p))
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct AlgebraElement {
    structure: Arc<BlockStructure>,
    coeffs: Vec<C64>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraElement")
            .field("blocks", &self.structure.sizes)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl AlgebraElement {
    pub fn zero(structure: &Arc<BlockStructure>) -> Self {
        Self {
            structure: Arc::clone(structure),
            coeffs: vec![ZERO; structure.dim()],
        }
    }

    pub fn one(structure: &Arc<BlockStructure>) -> Self {
        Self {
            structure: Arc::clone(structure),
            coeffs: structure.unit_coeffs(),
        }
    }

    pub fn basis(structure: &Arc<BlockStructure>, k: usize) -> Self {
        let mut a = Self::zero(structure);
        a.coeffs[k] = ONE;
        a
    }

    pub fn from_coeffs(structure: &Arc<BlockStructure>, coeffs: Vec<C64>) -> Result<Self> {
        check_len(structure.dim(), coeffs.len())?;
        Ok(Self {
            structure: Arc::clone(structure),
            coeffs,
        })
    }

    pub fn from_blocks(structure: &Arc<BlockStructure>, blocks: &[DMatrix<C64>]) -> Result<Self> {
        check_len(structure.num_blocks(), blocks.len())?;
        let mut coeffs = Vec::with_capacity(structure.dim());
        for (b, mat) in blocks.iter().enumerate() {
            let m = structure.block_size(b);
            if mat.nrows() != m || mat.ncols() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: mat.nrows().max(mat.ncols()),
                });
            }
            for r in 0..m {
                for c in 0..m {
                    coeffs.push(mat[(r, c)]);
                }
            }
        }
        Ok(Self {
            structure: Arc::clone(structure),
            coeffs,
        })
    }

    pub fn structure(&self) -> &Arc<BlockStructure> {
        &self.structure
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C64> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs[k]
    }

    fn block_slice(&self, b: usize) -> &[C64] {
        let m = self.structure.block_size(b);
        let off = self.structure.block_offset(b);
        &self.coeffs[off..off + m * m]
    }

    pub fn block(&self, b: usize) -> DMatrix<C64> {
        let m = self.structure.block_size(b);
        DMatrix::from_row_slice(m, m, self.block_slice(b))
    }

    pub fn blocks(&self) -> Vec<DMatrix<C64>> {
        (0..self.structure.num_blocks()).map(|b| self.block(b)).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.structure, &other.structure)?;
        let mut out = vec![ZERO; self.coeffs.len()];
        for b in 0..self.structure.num_blocks() {
            let m = self.structure.block_size(b);
            let off = self.structure.block_offset(b);
            let x = &self.coeffs[off..off + m * m];
            let y = &other.coeffs[off..off + m * m];
            let z = &mut out[off..off + m * m];
            for r in 0..m {
                for t in 0..m {
                    let xrt = x[r * m + t];
                    if xrt == ZERO {
                        continue;
                    }
                    for c in 0..m {
                        z[r * m + c] += xrt * y[t * m + c];
                    }
                }
            }
        }
        Ok(Self {
            structure: Arc::clone(&self.structure),
            coeffs: out,
        })
    }

    /// Blockwise conjugate transpose.
    pub fn star(&self) -> Self {
        let mut out = vec![ZERO; self.coeffs.len()];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = self.coeffs[self.structure.star(k)].conj();
        }
        Self {
            structure: Arc::clone(&self.structure),
            coeffs: out,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.structure, &other.structure)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.structure, &other.structure)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            structure: Arc::clone(&self.structure),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        Self {
            structure: Arc::clone(&self.structure),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// `Σ_b w_b Tr(a_b)`.
    pub fn integrate(&self, haar: &HaarWeights) -> C64 {
        let s = &self.structure;
        (0..s.num_blocks())
            .map(|b| {
                let m = s.block_size(b);
                let x = self.block_slice(b);
                let tr: C64 = (0..m).map(|r| x[r * m + r]).sum();
                tr * haar.weight(b)
            })
            .sum()
    }

    pub fn norm(&self, haar: &HaarWeights, p: Norm) -> f64 {
        let s = &self.structure;
        match p {
            Norm::One => (0..s.num_blocks())
                .map(|b| haar.weight(b) * singular_values(&self.block(b)).iter().sum::<f64>())
                .sum(),
            Norm::Two => {
                // ∫ a*a = Σ_b w_b ‖a_b‖_F²
                (0..s.num_blocks())
                    .map(|b| {
                        haar.weight(b) * self.block_slice(b).iter().map(|c| c.norm_sqr()).sum::<f64>()
                    })
                    .sum::<f64>()
                    .sqrt()
            }
            Norm::Infinity => (0..s.num_blocks())
                .map(|b| singular_values(&self.block(b)).into_iter().fold(0.0, f64::max))
                .fold(0.0, f64::max),
        }
    }

    /// Largest deviation from Hermiticity over all blocks.
    pub fn hermitian_residual(&self) -> f64 {
        (0..self.coeffs.len())
            .map(|k| (self.coeffs[k] - self.coeffs[self.structure.star(k)].conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Smallest eigenvalue of the Hermitian part, over all blocks.
    pub fn min_eigenvalue(&self) -> f64 {
        (0..self.structure.num_blocks())
            .map(|b| {
                let x = self.block(b);
                let h = (&x + x.adjoint()) * C64::new(0.5, 0.0);
                hermitian_eigenvalues(&h).into_iter().fold(f64::INFINITY, f64::min)
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_residual() <= tol
    }

    pub fn is_positive(&self, tol: f64) -> bool {
        self.is_hermitian(tol) && self.min_eigenvalue() >= -tol
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        max_abs(&self.coeffs)
    }

    /// Largest absolute coefficient of `self - other`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        ensure_same(&self.structure, &other.structure)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

pub(crate) fn max_abs(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub(crate) fn singular_values(m: &DMatrix<C64>) -> Vec<f64> {
    if m.nrows() == 1 {
        return vec![m[(0, 0)].norm()];
    }
    m.clone().singular_values().iter().copied().collect()
}

pub(crate) fn hermitian_eigenvalues(h: &DMatrix<C64>) -> Vec<f64> {
    if h.nrows() == 1 {
        return vec![h[(0, 0)].re];
    }
    SymmetricEigen::new(h.clone()).eigenvalues.iter().copied().collect()
}

// Operator impls panic on mismatched structures, the way nalgebra and ndarray
// panic on mismatched shapes. Use the `Result` methods to handle it instead.
impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        AlgebraElement::mul(self, rhs).expect("algebra elements from different structures")
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        AlgebraElement::add(self, rhs).expect("algebra elements from different structures")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        AlgebraElement::sub(self, rhs).expect("algebra elements from different structures")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(-ONE)
    }
}

impl Mul<C64> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: C64) -> AlgebraElement {
        self.scale(rhs)
    }
}

/// A linear functional, stored by its values on the basis matrix units.
#[derive(Clone, PartialEq)]
pub struct Functional {
    structure: Arc<BlockStructure>,
    coeffs: Vec<C64>,
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Functional")
            .field("blocks", &self.structure.sizes)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl Functional {
    pub fn zero(structure: &Arc<BlockStructure>) -> Self {
        Self {
            structure: Arc::clone(structure),
            coeffs: vec![ZERO; structure.dim()],
        }
    }

    /// The dual basis functional picking out coefficient `k`.
    pub fn dual_basis(structure: &Arc<BlockStructure>, k: usize) -> Self {
        let mut f = Self::zero(structure);
        f.coeffs[k] = ONE;
        f
    }

    pub fn from_coeffs(structure: &Arc<BlockStructure>, coeffs: Vec<C64>) -> Result<Self> {
        check_len(structure.dim(), coeffs.len())?;
        Ok(Self {
            structure: Arc::clone(structure),
            coeffs,
        })
    }

    pub fn structure(&self) -> &Arc<BlockStructure> {
        &self.structure
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs[k]
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<C64> {
        ensure_same(&self.structure, &a.structure)?;
        Ok(self.coeffs.iter().zip(&a.coeffs).map(|(f, x)| f * x).sum())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.structure, &other.structure)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.structure, &other.structure)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            structure: Arc::clone(&self.structure),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        Self {
            structure: Arc::clone(&self.structure),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn distance(&self, other: &Self) -> Result<f64> {
        ensure_same(&self.structure, &other.structure)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub(crate) fn ensure_structure(&self, s: &Arc<BlockStructure>) -> Result<()> {
        ensure_same(s, &self.structure)
    }
}

impl AlgebraElement {
    pub(crate) fn ensure_structure(&self, s: &Arc<BlockStructure>) -> Result<()> {
        ensure_same(s, &self.structure)
    }
}

impl Add for &Functional {
    type Output = Functional;
    fn add(self, rhs: Self) -> Functional {
        Functional::add(self, rhs).expect("functionals from different structures")
    }
}

impl Sub for &Functional {
    type Output = Functional;
    fn sub(self, rhs: Self) -> Functional {
        Functional::sub(self, rhs).expect("functionals from different structures")
    }
}

impl Mul<C64> for &Functional {
    type Output = Functional;
    fn mul(self, rhs: C64) -> Functional {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    // Sekine-like carrier: four one-dimensional blocks and one M_3.
    fn mixed() -> Arc<BlockStructure> {
        BlockStructure::shared(vec![1, 1, 1, 1, 3]).unwrap()
    }

    fn uniform(s: &BlockStructure) -> HaarWeights {
        let total: usize = s.sizes().iter().sum();
        HaarWeights::new(s, vec![1.0 / total as f64; s.num_blocks()]).unwrap()
    }

    #[test]
    fn rejects_empty_and_zero_blocks() {
        assert!(BlockStructure::new(vec![]).is_err());
        assert!(BlockStructure::new(vec![2, 0]).is_err());
    }

    #[test]
    fn canonical_indexing() {
        let s = mixed();
        assert_eq!(s.dim(), 4 + 9);
        assert_eq!(s.index(4, 1, 2), 4 + 5);
        assert_eq!(s.unit(9), MatrixUnit { block: 4, row: 1, col: 2 });
        assert_eq!(s.star(9), s.index(4, 2, 1));
    }

    #[test]
    fn one_dimensional_idempotents_are_orthogonal() {
        let s = mixed();
        let e0 = AlgebraElement::basis(&s, 0);
        let e1 = AlgebraElement::basis(&s, 1);
        assert_eq!(&e0 * &e0, e0);
        assert_eq!((&e0 * &e1).max_abs(), 0.0);
    }

    #[test]
    fn matrix_units_multiply() {
        let s = mixed();
        let e12 = AlgebraElement::basis(&s, s.index(4, 0, 1));
        let e23 = AlgebraElement::basis(&s, s.index(4, 1, 2));
        let e13 = AlgebraElement::basis(&s, s.index(4, 0, 2));
        assert_eq!(&e12 * &e23, e13);
        assert_eq!((&e23 * &e12).max_abs(), 0.0);
    }

    #[test]
    fn unit_is_identity() {
        let s = mixed();
        let one = AlgebraElement::one(&s);
        let a = AlgebraElement::from_coeffs(&s, (0..s.dim()).map(|k| c(k as f64, 1.0)).collect()).unwrap();
        assert_eq!(&one * &a, a);
        assert_eq!(&a * &one, a);
    }

    #[test]
    fn mismatched_structures_are_rejected() {
        let a = AlgebraElement::one(&mixed());
        let b = AlgebraElement::one(&BlockStructure::shared(vec![2]).unwrap());
        assert!(matches!(a.mul(&b), Err(Error::StructureMismatch { .. })));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn star_of_matrix_unit_and_scalar() {
        let s = mixed();
        let e = AlgebraElement::basis(&s, s.index(4, 0, 2));
        assert_eq!(e.star(), AlgebraElement::basis(&s, s.index(4, 2, 0)));
        let lambda = c(0.3, -1.7);
        let x = AlgebraElement::one(&s).scale(lambda);
        assert_eq!(x.star(), AlgebraElement::one(&s).scale(lambda.conj()));
    }

    #[test]
    fn star_is_pointwise_conjugation_when_commutative() {
        let s = BlockStructure::shared(vec![1, 1, 1]).unwrap();
        let f = AlgebraElement::from_coeffs(&s, vec![c(1.0, 2.0), c(-3.0, 0.5), c(0.0, -1.0)]).unwrap();
        let conj: Vec<C64> = f.coeffs().iter().map(|z| z.conj()).collect();
        assert_eq!(f.star().coeffs(), conj.as_slice());
    }

    #[test]
    fn integrate_unit_and_point_masses() {
        let s = BlockStructure::shared(vec![1, 1, 1]).unwrap();
        let h = uniform(&s);
        assert!((AlgebraElement::one(&s).integrate(&h) - ONE).norm() < 1e-15);
        for k in 0..3 {
            assert!((AlgebraElement::basis(&s, k).integrate(&h).re - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn haar_weights_are_validated() {
        let s = mixed();
        assert!(HaarWeights::new(&s, vec![0.1; 5]).is_err());
        assert!(HaarWeights::new(&s, vec![0.1, 0.1, 0.1, 0.1, 0.2]).is_ok());
        assert!(HaarWeights::new(&s, vec![0.1, 0.1, 0.1, -0.1, 0.8 / 3.0]).is_err());
    }

    #[test]
    fn norm_exponents() {
        assert_eq!(Norm::from_exponent(1.0).unwrap(), Norm::One);
        assert_eq!(Norm::from_exponent(f64::INFINITY).unwrap(), Norm::Infinity);
        assert!(matches!(Norm::from_exponent(3.0), Err(Error::UnsupportedNorm(_))));
    }

    #[test]
    fn two_norm_of_unit() {
        let s = mixed();
        let h = uniform(&s);
        assert!((AlgebraElement::one(&s).norm(&h, Norm::Two) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_norm_commutative_matches_weighted_abs_sum() {
        let s = BlockStructure::shared(vec![1, 1, 1, 1]).unwrap();
        let h = HaarWeights::new(&s, vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        let f = AlgebraElement::from_coeffs(&s, vec![c(3.0, 4.0), c(-2.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)]).unwrap();
        // each 1x1 block has the single eigenvalue of |f_b|
        let oracle = 0.1 * 5.0 + 0.2 * 2.0 + 0.3 * 0.0 + 0.4 * 1.0;
        assert!((f.norm(&h, Norm::One) - oracle).abs() < 1e-14);
    }

    #[test]
    fn infinity_norm_is_largest_singular_value() {
        let s = BlockStructure::shared(vec![1, 2]).unwrap();
        let a = AlgebraElement::from_blocks(
            &s,
            &[
                DMatrix::from_element(1, 1, c(0.5, 0.0)),
                DMatrix::from_row_slice(2, 2, &[ZERO, c(3.0, 0.0), ZERO, ZERO]),
            ],
        )
        .unwrap();
        let h = HaarWeights::new(&s, vec![1.0 / 3.0, 1.0 / 3.0]).unwrap();
        assert!((a.norm(&h, Norm::Infinity) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn positivity() {
        let s = mixed();
        assert!(AlgebraElement::one(&s).is_positive(DEFAULT_TOL));
        let e12 = AlgebraElement::basis(&s, s.index(4, 0, 1));
        assert!(!e12.is_positive(DEFAULT_TOL));
        let neg = AlgebraElement::basis(&s, 2).scale(-ONE);
        assert!(!neg.is_positive(DEFAULT_TOL));
        // x*x is positive
        let x = AlgebraElement::from_coeffs(&s, (0..s.dim()).map(|k| c(k as f64 - 5.0, 0.3 * k as f64)).collect()).unwrap();
        assert!((&x.star() * &x).is_positive(1e-9));
    }
}
