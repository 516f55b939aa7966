//! Comultiplication, counit, antipode and Haar state of a finite quantum
//! group, together with both convolution products.
//!
//! Δ is stored as sparse structure constants: `Δ(b_k) = Σ c · b_i ⊗ b_j` over
//! the triplets of row `k`. Tensor elements are sparse maps keyed by
//! `(i, j)`; their product uses the matrix-unit multiplication rule so only
//! pairs with a non-zero product are ever visited.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{check_len, max_abs, AlgebraElement, BlockStructure, Functional, HaarWeights, C64, ONE, ZERO};
use crate::error::{Error, Result};

/// Default tolerance of [`verify_hopf`].
pub const HOPF_TOL: f64 = 1e-9;

/// Structure constants of Δ in compressed-row form.
#[derive(Debug, Clone, PartialEq)]
pub struct Comultiplication {
    dim: usize,
    row_ptr: Vec<usize>,
    entries: Vec<(usize, usize, C64)>,
}

impl Comultiplication {
    /// Builds Δ from `(row, left, right, value)` triplets. Duplicates are
    /// summed and exact zeros dropped.
    pub fn from_triplets<I>(dim: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, C64)>,
    {
        let mut acc: BTreeMap<(usize, usize, usize), C64> = BTreeMap::new();
        for (k, i, j, c) in triplets {
            if k >= dim || i >= dim || j >= dim {
                return Err(Error::InvalidStructure(format!(
                    "delta triplet ({k}, {i}, {j}) out of range for dimension {dim}"
                )));
            }
            *acc.entry((k, i, j)).or_insert(ZERO) += c;
        }
        let mut row_ptr = vec![0; dim + 1];
        let mut entries = Vec::with_capacity(acc.len());
        for ((k, i, j), c) in acc {
            if c != ZERO {
                entries.push((i, j, c));
                row_ptr[k + 1] += 1;
            }
        }
        for k in 0..dim {
            row_ptr[k + 1] += row_ptr[k];
        }
        Ok(Self { dim, row_ptr, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Terms `(i, j, c)` of `Δ(b_k)`.
    pub fn row(&self, k: usize) -> &[(usize, usize, C64)] {
        &self.entries[self.row_ptr[k]..self.row_ptr[k + 1]]
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, usize, C64)> + '_ {
        (0..self.dim).flat_map(move |k| self.row(k).iter().map(move |&(i, j, c)| (k, i, j, c)))
    }

    /// Copy with `delta` added to one structure constant.
    pub fn perturbed(&self, k: usize, i: usize, j: usize, delta: C64) -> Result<Self> {
        let triplets: Vec<_> = self.triplets().chain(std::iter::once((k, i, j, delta))).collect();
        Self::from_triplets(self.dim, triplets)
    }
}

/// A sparse linear map on the algebra, stored column by column.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    cols: Vec<Vec<(usize, C64)>>,
}

impl LinearMap {
    /// `(row, col, value)` triplets: the image of `b_col` has coefficient
    /// `value` at `b_row`.
    pub fn from_triplets<I>(dim: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, C64)>,
    {
        let mut acc: BTreeMap<(usize, usize), C64> = BTreeMap::new();
        for (r, c, v) in triplets {
            if r >= dim || c >= dim {
                return Err(Error::InvalidStructure(format!(
                    "linear map entry ({r}, {c}) out of range for dimension {dim}"
                )));
            }
            *acc.entry((c, r)).or_insert(ZERO) += v;
        }
        let mut cols = vec![Vec::new(); dim];
        for ((c, r), v) in acc {
            if v != ZERO {
                cols[c].push((r, v));
            }
        }
        Ok(Self { cols })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            cols: (0..dim).map(|k| vec![(k, ONE)]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, k: usize) -> &[(usize, C64)] {
        &self.cols[k]
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r, c, v)))
    }

    fn apply_coeffs(&self, x: &[C64]) -> Vec<C64> {
        let mut out = vec![ZERO; self.cols.len()];
        for (k, &xk) in x.iter().enumerate() {
            if xk == ZERO {
                continue;
            }
            for &(r, v) in &self.cols[k] {
                out[r] += v * xk;
            }
        }
        out
    }
}

/// Terms `(i, j, c)` keyed by the `(block, row)` of both factors.
type RowIndex = HashMap<((usize, usize), (usize, usize)), Vec<(usize, usize, C64)>>;

/// An element of `F(G) ⊗ F(G)` in the product basis `b_i ⊗ b_j`.
#[derive(Clone, PartialEq)]
pub struct TensorElement {
    structure: Arc<BlockStructure>,
    terms: BTreeMap<(usize, usize), C64>,
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TensorElement").field("terms", &self.terms).finish()
    }
}

impl TensorElement {
    pub fn zero(structure: &Arc<BlockStructure>) -> Self {
        Self {
            structure: Arc::clone(structure),
            terms: BTreeMap::new(),
        }
    }

    /// `a ⊗ b`.
    pub fn product_of(a: &AlgebraElement, b: &AlgebraElement) -> Result<Self> {
        a.ensure_structure(b.structure())?;
        let mut t = Self::zero(a.structure());
        for (i, &x) in a.coeffs().iter().enumerate() {
            if x == ZERO {
                continue;
            }
            for (j, &y) in b.coeffs().iter().enumerate() {
                if y != ZERO {
                    t.add_term(i, j, x * y);
                }
            }
        }
        Ok(t)
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: C64) {
        *self.terms.entry((i, j)).or_insert(ZERO) += c;
    }

    pub fn coeff(&self, i: usize, j: usize) -> C64 {
        self.terms.get(&(i, j)).copied().unwrap_or(ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    /// Dense coefficient vector of length `d²`, index `i·d + j`.
    pub fn coeffs(&self) -> Vec<C64> {
        let d = self.structure.dim();
        let mut v = vec![ZERO; d * d];
        for (&(i, j), &c) in &self.terms {
            v[i * d + j] = c;
        }
        v
    }

    pub fn star(&self) -> Self {
        let s = &self.structure;
        Self {
            structure: Arc::clone(s),
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &c)| ((s.star(i), s.star(j)), c.conj()))
                .collect(),
        }
    }

    /// The flip `a ⊗ b ↦ b ⊗ a`.
    pub fn flip(&self) -> Self {
        Self {
            structure: Arc::clone(&self.structure),
            terms: self.terms.iter().map(|(&(i, j), &c)| ((j, i), c)).collect(),
        }
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn mul(&self, other: &Self) -> Self {
        let s = &self.structure;
        let mut index = RowIndex::new();
        for (&(i, j), &c) in &other.terms {
            let (ui, uj) = (s.unit(i), s.unit(j));
            index
                .entry(((ui.block, ui.row), (uj.block, uj.row)))
                .or_default()
                .push((i, j, c));
        }
        let mut out = Self::zero(s);
        for (&(i, j), &c) in &self.terms {
            let (ui, uj) = (s.unit(i), s.unit(j));
            if let Some(rhs) = index.get(&((ui.block, ui.col), (uj.block, uj.col))) {
                for &(i2, j2, c2) in rhs {
                    let p = s.index(ui.block, ui.row, s.unit(i2).col);
                    let q = s.index(uj.block, uj.row, s.unit(j2).col);
                    out.add_term(p, q, c * c2);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            *out.terms.entry(k).or_insert(ZERO) -= c;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }
}

/// A unital C*-Hopf algebra with block structure, Δ, ε, S and (optionally) its
/// Haar weights.
#[derive(Debug, Clone)]
pub struct QuantumGroup {
    name: String,
    structure: Arc<BlockStructure>,
    delta: Comultiplication,
    counit: Functional,
    antipode: LinearMap,
    haar: Option<HaarWeights>,
    gram: OnceLock<Cholesky<C64, Dyn>>,
}

impl QuantumGroup {
    /// Assembles the structure maps after checking their dimensions. Axioms are
    /// not checked here; see [`verify_hopf`].
    pub fn new(
        name: impl Into<String>,
        structure: Arc<BlockStructure>,
        delta: Comultiplication,
        counit: Functional,
        antipode: LinearMap,
        haar: Option<HaarWeights>,
    ) -> Result<Self> {
        let d = structure.dim();
        check_len(d, delta.dim())?;
        check_len(d, antipode.dim())?;
        counit.ensure_structure(&structure)?;
        if let Some(h) = &haar {
            check_len(structure.num_blocks(), h.weights().len())?;
        }
        Ok(Self {
            name: name.into(),
            structure,
            delta,
            counit,
            antipode,
            haar,
            gram: OnceLock::new(),
        })
    }

    /// Attaches the Haar weights, replacing any present.
    pub fn with_haar(mut self, haar: HaarWeights) -> Result<Self> {
        check_len(self.structure.num_blocks(), haar.weights().len())?;
        self.haar = Some(haar);
        self.gram = OnceLock::new();
        Ok(self)
    }

    /// Solves for the Haar state and attaches it.
    pub fn with_solved_haar(self) -> Result<Self> {
        let h = solve_haar(&self)?;
        self.with_haar(h)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn structure(&self) -> &Arc<BlockStructure> {
        &self.structure
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn delta(&self) -> &Comultiplication {
        &self.delta
    }

    pub fn counit_functional(&self) -> &Functional {
        &self.counit
    }

    pub fn antipode_map(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn haar(&self) -> Option<&HaarWeights> {
        self.haar.as_ref()
    }

    pub fn require_haar(&self) -> Result<&HaarWeights> {
        self.haar.as_ref().ok_or_else(|| Error::MissingHaar(self.name.clone()))
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(&self.structure)
    }

    pub fn basis(&self, k: usize) -> AlgebraElement {
        AlgebraElement::basis(&self.structure, k)
    }

    pub fn comultiply(&self, a: &AlgebraElement) -> Result<TensorElement> {
        a.ensure_structure(&self.structure)?;
        let mut t = TensorElement::zero(&self.structure);
        for (k, &x) in a.coeffs().iter().enumerate() {
            if x == ZERO {
                continue;
            }
            for &(i, j, c) in self.delta.row(k) {
                t.add_term(i, j, x * c);
            }
        }
        Ok(t)
    }

    fn comultiply_basis(&self, k: usize) -> TensorElement {
        let mut t = TensorElement::zero(&self.structure);
        for &(i, j, c) in self.delta.row(k) {
            t.add_term(i, j, c);
        }
        t
    }

    pub fn counit(&self, a: &AlgebraElement) -> Result<C64> {
        self.counit.apply(a)
    }

    pub fn antipode(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        a.ensure_structure(&self.structure)?;
        AlgebraElement::from_coeffs(&self.structure, self.antipode.apply_coeffs(a.coeffs()))
    }

    pub fn integrate(&self, a: &AlgebraElement) -> Result<C64> {
        a.ensure_structure(&self.structure)?;
        Ok(a.integrate(self.require_haar()?))
    }

    /// The Haar state `π` as a functional.
    pub fn haar_functional(&self) -> Result<Functional> {
        let h = self.require_haar()?;
        let s = &self.structure;
        let coeffs = (0..s.dim())
            .map(|k| {
                let u = s.unit(k);
                if u.row == u.col {
                    C64::new(h.weight(u.block), 0.0)
                } else {
                    ZERO
                }
            })
            .collect();
        Functional::from_coeffs(s, coeffs)
    }

    /// `φ₁ ⋆ φ₂ = (φ₁ ⊗ φ₂)∘Δ`.
    pub fn convolve(&self, a: &Functional, b: &Functional) -> Result<Functional> {
        a.ensure_structure(&self.structure)?;
        b.ensure_structure(&self.structure)?;
        let (x, y) = (a.coeffs(), b.coeffs());
        let coeffs = (0..self.dim())
            .map(|k| self.delta.row(k).iter().map(|&(i, j, c)| c * x[i] * y[j]).sum())
            .collect();
        Functional::from_coeffs(&self.structure, coeffs)
    }

    /// The dual involution `φ*(a) = conj(φ(S(a)*))`.
    pub fn functional_star(&self, phi: &Functional) -> Result<Functional> {
        phi.ensure_structure(&self.structure)?;
        let s = &self.structure;
        let coeffs = (0..s.dim())
            .map(|k| {
                self.antipode
                    .column(k)
                    .iter()
                    .map(|&(p, v)| v * phi.coeff(s.star(p)).conj())
                    .sum()
            })
            .collect();
        Functional::from_coeffs(s, coeffs)
    }

    fn gram(&self) -> Result<&Cholesky<C64, Dyn>> {
        if let Some(g) = self.gram.get() {
            return Ok(g);
        }
        let h = self.require_haar()?;
        let s = &self.structure;
        let d = s.dim();
        // H[k][l] = ∫ b_k* b_l
        let mut gram = DMatrix::<C64>::zeros(d, d);
        for k in 0..d {
            let ks = s.star(k);
            for l in 0..d {
                if let Some(m) = s.product(ks, l) {
                    let u = s.unit(m);
                    if u.row == u.col {
                        gram[(k, l)] = C64::new(h.weight(u.block), 0.0);
                    }
                }
            }
        }
        let chol = Cholesky::new(gram)
            .ok_or_else(|| Error::Numerical("Gram matrix of the Haar inner product is not positive definite".into()))?;
        Ok(self.gram.get_or_init(|| chol))
    }

    /// The density `a_φ` with `φ(b) = ∫ a_φ b`.
    pub fn density_of(&self, phi: &Functional) -> Result<AlgebraElement> {
        phi.ensure_structure(&self.structure)?;
        let chol = self.gram()?;
        // a_φ* = Σ c_k b_k with H c = conj(φ)
        let rhs = DVector::from_iterator(self.dim(), phi.coeffs().iter().map(|c| c.conj()));
        let c = chol.solve(&rhs);
        let g = AlgebraElement::from_coeffs(&self.structure, c.iter().copied().collect())?;
        Ok(g.star())
    }

    /// The functional `b ↦ ∫ a b`.
    pub fn functional_of(&self, a: &AlgebraElement) -> Result<Functional> {
        a.ensure_structure(&self.structure)?;
        let h = self.require_haar()?;
        let s = &self.structure;
        // ∫ a E_{rc} = w · a_{cr}
        let coeffs = (0..s.dim())
            .map(|k| a.coeff(s.star(k)) * h.weight(s.unit(k).block))
            .collect();
        Functional::from_coeffs(s, coeffs)
    }

    /// `a ⊛ b = (∫ ⊗ I)(((S ⊗ I)Δ(b))(a ⊗ 𝟙))`.
    pub fn convolve_densities(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        a.ensure_structure(&self.structure)?;
        b.ensure_structure(&self.structure)?;
        let h = self.require_haar()?;
        let s = &self.structure;
        // weight[i] = ∫ S(b_i) a, using ∫ b_p a = w · a_{star(p)}
        let weight: Vec<C64> = (0..s.dim())
            .map(|i| {
                self.antipode
                    .column(i)
                    .iter()
                    .map(|&(p, v)| v * a.coeff(s.star(p)) * h.weight(s.unit(p).block))
                    .sum()
            })
            .collect();
        let mut out = vec![ZERO; s.dim()];
        for (l, &bl) in b.coeffs().iter().enumerate() {
            if bl == ZERO {
                continue;
            }
            for &(i, j, c) in self.delta.row(l) {
                out[j] += bl * c * weight[i];
            }
        }
        AlgebraElement::from_coeffs(s, out)
    }

    /// The dual Haar functional `ĥ(φ) = ε(a_φ)`.
    pub fn dual_haar(&self, phi: &Functional) -> Result<C64> {
        let a = self.density_of(phi)?;
        self.counit(&a)
    }

    /// Checks that `φ` is a state: its density is positive and `φ(𝟙) = 1`.
    pub fn check_state(&self, phi: &Functional, tol: f64) -> Result<()> {
        let total = phi.apply(&self.one())?;
        if (total - ONE).norm() > tol {
            return Err(Error::NotAState(format!("φ(𝟙) = {total}, expected 1")));
        }
        let a = self.density_of(phi)?;
        let herm = a.hermitian_residual();
        if herm > tol {
            return Err(Error::NotAState(format!("density is not self-adjoint (residual {herm:e})")));
        }
        let min = a.min_eigenvalue();
        if min < -tol {
            return Err(Error::NotAState(format!("density has eigenvalue {min:e} < 0")));
        }
        Ok(())
    }

    /// Largest coefficient of `flip∘Δ − Δ` over the basis.
    pub fn cocommutativity_residual(&self) -> f64 {
        (0..self.dim())
            .map(|k| {
                let t = self.comultiply_basis(k);
                t.flip().distance(&t)
            })
            .fold(0.0, f64::max)
    }

    /// Residual of `a_{φ₁⋆φ₂} = a_{φ₁} ⊛ a_{φ₂}` on seeded random functionals,
    /// for the displayed operand order and for the swapped one.
    pub fn density_convolution_residuals(&self, samples: usize, seed: u64) -> Result<(f64, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut direct: f64 = 0.0;
        let mut swapped: f64 = 0.0;
        for _ in 0..samples {
            let p1 = crate::random::functional(&self.structure, &mut rng);
            let p2 = crate::random::functional(&self.structure, &mut rng);
            let target = self.density_of(&self.convolve(&p1, &p2)?)?;
            let (a1, a2) = (self.density_of(&p1)?, self.density_of(&p2)?);
            let scale = 1.0 + target.max_abs();
            direct = direct.max(self.convolve_densities(&a1, &a2)?.distance(&target)? / scale);
            swapped = swapped.max(self.convolve_densities(&a2, &a1)?.distance(&target)? / scale);
        }
        Ok((direct, swapped))
    }

    /// Validates the operand order of [`Self::convolve_densities`]. Fails
    /// loudly, distinguishing a swapped convention from a plain failure.
    pub fn validate_density_convolution(&self) -> Result<()> {
        let (direct, swapped) = self.density_convolution_residuals(3, 0x5eed)?;
        if direct < 1e-8 {
            Ok(())
        } else if swapped < 1e-8 {
            Err(Error::ConvolutionOrder(format!(
                "identity holds only with swapped operands (residual {direct:e} vs {swapped:e})"
            )))
        } else {
            Err(Error::ConvolutionOrder(format!("identity fails (residual {direct:e})")))
        }
    }

    /// Runs [`Self::validate_density_convolution`] when Haar weights are
    /// attached.
    pub fn validated(self) -> Result<Self> {
        if self.haar.is_some() {
            self.validate_density_convolution()?;
        }
        Ok(self)
    }
}

/// Named checks performed by [`verify_hopf`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    LeftAntipode,
    RightAntipode,
    DeltaUnital,
    DeltaMultiplicative,
    DeltaStar,
    CounitHomomorphism,
    AntipodeAntiMultiplicative,
    AntipodeStar,
    AntipodeInvolutive,
    HaarLeftInvariance,
    HaarRightInvariance,
    HaarNormalization,
    DensityConvolution,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "left counit",
            Axiom::RightCounit => "right counit",
            Axiom::LeftAntipode => "left antipode",
            Axiom::RightAntipode => "right antipode",
            Axiom::DeltaUnital => "comultiplication unital",
            Axiom::DeltaMultiplicative => "comultiplication multiplicative",
            Axiom::DeltaStar => "comultiplication *-preserving",
            Axiom::CounitHomomorphism => "counit *-homomorphism",
            Axiom::AntipodeAntiMultiplicative => "antipode anti-multiplicative",
            Axiom::AntipodeStar => "antipode *-preserving",
            Axiom::AntipodeInvolutive => "antipode involutive",
            Axiom::HaarLeftInvariance => "haar left invariance",
            Axiom::HaarRightInvariance => "haar right invariance",
            Axiom::HaarNormalization => "haar normalization",
            Axiom::DensityConvolution => "density convolution theorem",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HopfReport {
    pub tol: f64,
    pub residuals: Vec<(Axiom, f64)>,
}

impl HopfReport {
    pub fn pass(&self) -> bool {
        self.residuals.iter().all(|&(_, r)| r < self.tol)
    }

    pub fn failing(&self) -> Vec<Axiom> {
        self.residuals
            .iter()
            .filter(|&&(_, r)| r.is_nan() || r >= self.tol)
            .map(|&(a, _)| a)
            .collect()
    }

    pub fn residual(&self, axiom: Axiom) -> Option<f64> {
        self.residuals.iter().find(|(a, _)| *a == axiom).map(|&(_, r)| r)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|&(_, r)| r).fold(0.0, f64::max)
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(axiom, r) in &self.residuals {
            let status = if r < self.tol { "ok" } else { "FAIL" };
            writeln!(f, "  {:<34} {:>12.3e}  {}", axiom.name(), r, status)?;
        }
        Ok(())
    }
}

/// Evaluates every Hopf axiom on the basis and reports the largest residual
/// of each. Haar checks are included only when weights are attached.
pub fn verify_hopf(q: &QuantumGroup, tol: f64) -> HopfReport {
    let s = q.structure();
    let d = s.dim();
    let delta = q.delta();
    let eps = q.counit_functional();
    let anti = q.antipode_map();
    let deltas: Vec<TensorElement> = (0..d).map(|k| q.comultiply_basis(k)).collect();
    let mut residuals = Vec::new();

    // (Δ⊗I)Δ = (I⊗Δ)Δ
    let mut coassoc: f64 = 0.0;
    for k in 0..d {
        let mut diff: HashMap<(usize, usize, usize), C64> = HashMap::new();
        for &(i, j, c) in delta.row(k) {
            for &(p, r, c2) in delta.row(i) {
                *diff.entry((p, r, j)).or_insert(ZERO) += c * c2;
            }
            for &(p, r, c2) in delta.row(j) {
                *diff.entry((i, p, r)).or_insert(ZERO) -= c * c2;
            }
        }
        coassoc = coassoc.max(diff.values().map(|c| c.norm()).fold(0.0, f64::max));
    }
    residuals.push((Axiom::Coassociativity, coassoc));

    // (ε⊗I)Δ = I = (I⊗ε)Δ
    let (mut left, mut right): (f64, f64) = (0.0, 0.0);
    for k in 0..d {
        let mut l = vec![ZERO; d];
        let mut r = vec![ZERO; d];
        for &(i, j, c) in delta.row(k) {
            l[j] += c * eps.coeff(i);
            r[i] += c * eps.coeff(j);
        }
        l[k] -= ONE;
        r[k] -= ONE;
        left = left.max(max_abs(&l));
        right = right.max(max_abs(&r));
    }
    residuals.push((Axiom::LeftCounit, left));
    residuals.push((Axiom::RightCounit, right));

    // M(S⊗I)Δ = ηε = M(I⊗S)Δ
    let unit = s.unit_coeffs();
    let (mut left, mut right): (f64, f64) = (0.0, 0.0);
    for k in 0..d {
        let mut l = vec![ZERO; d];
        let mut r = vec![ZERO; d];
        for &(i, j, c) in delta.row(k) {
            for &(p, v) in anti.column(i) {
                if let Some(m) = s.product(p, j) {
                    l[m] += c * v;
                }
            }
            for &(p, v) in anti.column(j) {
                if let Some(m) = s.product(i, p) {
                    r[m] += c * v;
                }
            }
        }
        let e = eps.coeff(k);
        for m in 0..d {
            l[m] -= e * unit[m];
            r[m] -= e * unit[m];
        }
        left = left.max(max_abs(&l));
        right = right.max(max_abs(&r));
    }
    residuals.push((Axiom::LeftAntipode, left));
    residuals.push((Axiom::RightAntipode, right));

    // Δ(𝟙) = 𝟙⊗𝟙
    let one = q.one();
    let unital = q
        .comultiply(&one)
        .and_then(|t| Ok(t.distance(&TensorElement::product_of(&one, &one)?)))
        .unwrap_or(f64::INFINITY);
    residuals.push((Axiom::DeltaUnital, unital));

    // Δ(b_k b_l) = Δ(b_k)Δ(b_l)
    let mut mult: f64 = 0.0;
    for k in 0..d {
        for l in 0..d {
            let prod = deltas[k].mul(&deltas[l]);
            let r = match s.product(k, l) {
                Some(m) => prod.distance(&deltas[m]),
                None => prod.max_abs(),
            };
            mult = mult.max(r);
        }
    }
    residuals.push((Axiom::DeltaMultiplicative, mult));

    // Δ(b*) = Δ(b)*
    let star = (0..d)
        .map(|k| deltas[s.star(k)].distance(&deltas[k].star()))
        .fold(0.0, f64::max);
    residuals.push((Axiom::DeltaStar, star));

    // ε(ab) = ε(a)ε(b), ε(a*) = conj ε(a)
    let mut counit_hom: f64 = 0.0;
    for k in 0..d {
        counit_hom = counit_hom.max((eps.coeff(s.star(k)) - eps.coeff(k).conj()).norm());
        for l in 0..d {
            let lhs = s.product(k, l).map_or(ZERO, |m| eps.coeff(m));
            counit_hom = counit_hom.max((lhs - eps.coeff(k) * eps.coeff(l)).norm());
        }
    }
    residuals.push((Axiom::CounitHomomorphism, counit_hom));

    // S(ab) = S(b)S(a)
    let images: Vec<AlgebraElement> = (0..d)
        .map(|k| AlgebraElement::from_coeffs(s, anti.apply_coeffs(q.basis(k).coeffs())).expect("dimension checked"))
        .collect();
    let mut anti_mult: f64 = 0.0;
    for k in 0..d {
        for l in 0..d {
            let rhs = &images[l] * &images[k];
            let r = match s.product(k, l) {
                Some(m) => images[m].distance(&rhs).unwrap_or(f64::INFINITY),
                None => rhs.max_abs(),
            };
            anti_mult = anti_mult.max(r);
        }
    }
    residuals.push((Axiom::AntipodeAntiMultiplicative, anti_mult));

    // S(a*) = S(a)*
    let anti_star = (0..d)
        .map(|k| images[s.star(k)].distance(&images[k].star()).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    residuals.push((Axiom::AntipodeStar, anti_star));

    // S∘S = id
    let invol = (0..d)
        .map(|k| {
            let mut v = anti.apply_coeffs(images[k].coeffs());
            v[k] -= ONE;
            max_abs(&v)
        })
        .fold(0.0, f64::max);
    residuals.push((Axiom::AntipodeInvolutive, invol));

    if let Ok(pi) = q.haar_functional() {
        let (mut left, mut right): (f64, f64) = (0.0, 0.0);
        for k in 0..d {
            let mut l = vec![ZERO; d];
            let mut r = vec![ZERO; d];
            for &(i, j, c) in delta.row(k) {
                l[i] += c * pi.coeff(j);
                r[j] += c * pi.coeff(i);
            }
            let hk = pi.coeff(k);
            for m in 0..d {
                l[m] -= hk * unit[m];
                r[m] -= hk * unit[m];
            }
            left = left.max(max_abs(&l));
            right = right.max(max_abs(&r));
        }
        residuals.push((Axiom::HaarLeftInvariance, left));
        residuals.push((Axiom::HaarRightInvariance, right));
        let norm = pi.apply(&one).map_or(f64::INFINITY, |v| (v - ONE).norm());
        residuals.push((Axiom::HaarNormalization, norm));
        let conv = q
            .density_convolution_residuals(3, 0x5eed)
            .map_or(f64::INFINITY, |(direct, _)| direct);
        residuals.push((Axiom::DensityConvolution, conv));
    }

    HopfReport { tol, residuals }
}

/// Solves the invariance equations `(I⊗h)Δ(a) = h(a)𝟙 = (h⊗I)Δ(a)`,
/// `h(𝟙) = 1` for the Haar functional, ignoring any weights already attached,
/// and returns it as per-block weights after checking it is a faithful
/// weighted trace.
pub fn solve_haar(q: &QuantumGroup) -> Result<HaarWeights> {
    let s = q.structure();
    let d = s.dim();
    let unit = s.unit_coeffs();
    let delta = q.delta();

    // Stream the homogeneous system through a running QR so only a d×d
    // triangular factor is ever kept.
    let chunk_rows = 2 * d;
    let mut r_factor = DMatrix::<C64>::zeros(0, d);
    let mut chunk: Vec<Vec<C64>> = Vec::with_capacity(chunk_rows);
    let flush = |chunk: &mut Vec<Vec<C64>>, r_factor: &mut DMatrix<C64>| {
        if chunk.is_empty() {
            return;
        }
        let rows = r_factor.nrows() + chunk.len();
        let mut stacked = DMatrix::<C64>::zeros(rows, d);
        stacked.rows_mut(0, r_factor.nrows()).copy_from(r_factor);
        for (n, row) in chunk.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                stacked[(r_factor.nrows() + n, j)] = v;
            }
        }
        chunk.clear();
        let r = stacked.qr().r();
        *r_factor = r;
    };

    for k in 0..d {
        let mut left: BTreeMap<usize, Vec<C64>> = BTreeMap::new();
        let mut right: BTreeMap<usize, Vec<C64>> = BTreeMap::new();
        for &(i, j, c) in delta.row(k) {
            left.entry(i).or_insert_with(|| vec![ZERO; d])[j] += c;
            right.entry(j).or_insert_with(|| vec![ZERO; d])[i] += c;
        }
        for m in (0..d).filter(|&m| unit[m] != ZERO) {
            left.entry(m).or_insert_with(|| vec![ZERO; d])[k] -= unit[m];
            right.entry(m).or_insert_with(|| vec![ZERO; d])[k] -= unit[m];
        }
        for row in left.into_values().chain(right.into_values()) {
            if row.iter().any(|&c| c != ZERO) {
                chunk.push(row);
            }
        }
        if chunk.len() >= chunk_rows {
            flush(&mut chunk, &mut r_factor);
        }
    }
    flush(&mut chunk, &mut r_factor);

    // pad to square so the SVD sees all d columns
    let mut square = DMatrix::<C64>::zeros(d, d);
    let nr = r_factor.nrows().min(d);
    square.rows_mut(0, nr).copy_from(&r_factor.rows(0, nr));
    let svd = square.svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| Error::Numerical("SVD did not return right singular vectors".into()))?;
    let sigma = &svd.singular_values;
    let smax = sigma.iter().copied().fold(0.0, f64::max).max(1.0);
    let null: Vec<usize> = (0..d).filter(|&i| sigma[i] < 1e-8 * smax).collect();
    if null.len() != 1 {
        return Err(Error::HaarNotUnique { dim: null.len() });
    }
    let mut h: Vec<C64> = v_t.row(null[0]).iter().map(|c| c.conj()).collect();

    let total: C64 = h.iter().zip(&unit).map(|(a, b)| a * b).sum();
    if total.norm() < 1e-12 {
        return Err(Error::InvalidHaar("invariant functional vanishes on the unit".into()));
    }
    for x in &mut h {
        *x /= total;
    }

    let mut weights = Vec::with_capacity(s.num_blocks());
    for b in 0..s.num_blocks() {
        let m = s.block_size(b);
        let w = h[s.index(b, 0, 0)];
        for r in 0..m {
            for c in 0..m {
                let v = h[s.index(b, r, c)];
                let expected = if r == c { w } else { ZERO };
                if (v - expected).norm() > 1e-9 {
                    return Err(Error::InvalidHaar(format!(
                        "block {b} entry ({r}, {c}) is {v}, expected {expected}"
                    )));
                }
            }
        }
        if w.im.abs() > 1e-9 || w.re <= 0.0 {
            return Err(Error::InvalidHaar(format!("block {b} has weight {w}, must be positive")));
        }
        weights.push(w.re);
    }
    HaarWeights::new(s, weights)
}
