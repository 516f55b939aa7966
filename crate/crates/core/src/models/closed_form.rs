//! Closed-form scalars for the walks on `Ŝ_n` and on `Y_n`.
//!
//! Anything involving `n^n` is evaluated through `n^{−n}` or logarithms so
//! the full range `n ≤ 50` stays finite.

use std::f64::consts::PI;

use serde::Serialize;

fn ln(n: usize) -> f64 {
    (n as f64).ln()
}

/// `n^{−n}`.
fn inv_nn(n: usize) -> f64 {
    (-(n as f64) * ln(n)).exp()
}

/// `a_i = n^{−i/2}`, `i = 1..=n`.
pub fn a_i(n: usize, i: usize) -> f64 {
    (-(i as f64) * ln(n) / 2.0).exp()
}

/// `S(σ) = Σ_i a_i a_{σ(i)}` for a permutation of `0..n` in one-line form.
pub fn s_of(n: usize, sigma: &[usize]) -> f64 {
    sigma.iter().enumerate().map(|(i, &s)| a_i(n, i + 1) * a_i(n, s + 1)).sum()
}

/// The normalising constant `(n^{n+1} − n^n)/(n^n − 1)` of `u = c₀·S`.
pub fn c0(n: usize) -> f64 {
    (n as f64 - 1.0) / (1.0 - inv_nn(n))
}

/// `f_0 = S((n−1 n))`.
pub fn f0(n: usize) -> f64 {
    let nf = n as f64;
    (1.0 - nf * nf * inv_nn(n)) / (nf - 1.0) + 2.0 * nf.sqrt() * inv_nn(n)
}

/// `f_1 = S((1 2))`.
pub fn f1(n: usize) -> f64 {
    let nf = n as f64;
    2.0 * nf.powf(-1.5) + (1.0 / (nf * nf) - inv_nn(n)) / (nf - 1.0)
}

/// `(n−1)(√n−1)²/(n^n−1)`, so that `u((n−1 n)) = 1 − x_n`.
pub fn x_n(n: usize) -> f64 {
    let nf = n as f64;
    (nf - 1.0) * (nf.sqrt() - 1.0).powi(2) * inv_nn(n) / (1.0 - inv_nn(n))
}

pub fn u_transposition(n: usize) -> f64 {
    1.0 - x_n(n)
}

/// `A_n = (n−1)(√n−1)² n^{n−2}/(n^n−1)`.
pub fn a_n(n: usize) -> f64 {
    let nf = n as f64;
    (nf - 1.0) * (nf.sqrt() - 1.0).powi(2) / (nf * nf) / (1.0 - inv_nn(n))
}

/// `g(n) = (√n−1)² n^{n−1}/(n^n−1)`.
pub fn g_n(n: usize) -> f64 {
    let nf = n as f64;
    (nf.sqrt() - 1.0).powi(2) / nf / (1.0 - inv_nn(n))
}

/// `B_n = (n^n/(n^n−1))(n²/(n^n−1) + 1)`.
pub fn b_n(n: usize) -> f64 {
    let nf = n as f64;
    let r = 1.0 - inv_nn(n);
    (nf * nf * inv_nn(n) / r + 1.0) / r
}

/// `ln(B_n − 1)`; `B_n − 1 = (n^{n+2} + n^n − 1)/(n^n − 1)²` rounds to zero
/// in double precision well before `n = 50`.
pub fn ln_b_n_excess(n: usize) -> f64 {
    let nf = n as f64;
    let t = inv_nn(n);
    (2.0 - nf) * nf.ln() + (1.0 / (nf * nf) - t / (nf * nf)).ln_1p() - 2.0 * (-t).ln_1p()
}

/// `h(n) = n(4/n)^{n² ln(n)/2}`.
pub fn h_n(n: usize) -> f64 {
    let nf = n as f64;
    nf * ((4.0 / nf).ln() * nf * nf * nf.ln() / 2.0).exp()
}

/// Right-hand side of the squared upper bound at step `k`:
/// `¼(1 − x_n)^{2k} sqrt(n−1)(n−1)^{n−1} e^{2−n}[1 + (4/n)^k(n−1)]`.
pub fn snhat_ub_rhs(n: usize, k: usize) -> f64 {
    let nf = n as f64;
    let kf = k as f64;
    let tail = (kf * (4.0 / nf).ln() + (nf - 1.0).ln()).exp();
    let log = 0.25f64.ln()
        + 2.0 * kf * (-x_n(n)).ln_1p()
        + 0.5 * (nf - 1.0).ln()
        + (nf - 1.0) * (nf - 1.0).ln()
        + 2.0
        - nf
        + tail.ln_1p();
    log.exp()
}

/// `k = ⌈α n^{n−1} ln(n)/2 + c n^{n−2}⌉`.
pub fn snhat_k(n: usize, alpha: f64, c: f64) -> usize {
    let nf = n as f64;
    (alpha * nf.powi(n as i32 - 1) * nf.ln() / 2.0 + c * nf.powi(n as i32 - 2)).ceil() as usize
}

/// The upper bound `½e^{−2A_n c}·exp((n−1)ln(n−1) − α(n−1)ln(n)g(n))`.
pub fn snhat_upper(n: usize, alpha: f64, c: f64) -> f64 {
    let nf = n as f64;
    let second = (nf - 1.0) * (nf - 1.0).ln() - alpha * (nf - 1.0) * nf.ln() * g_n(n);
    0.5 * (-2.0 * a_n(n) * c + second).exp()
}

/// The lower bound `½e^{−B_n α}` at `k = α n^{n−2}`.
pub fn snhat_lower(n: usize, alpha: f64) -> f64 {
    0.5 * (-b_n(n) * alpha).exp()
}

#[derive(Debug, Clone, Serialize)]
pub struct SnhatClosedForms {
    pub n: usize,
    pub alpha: f64,
    pub c: f64,
    pub k: usize,
    pub a: Vec<f64>,
    pub f0: f64,
    pub f1: f64,
    pub a_n: f64,
    pub g_n: f64,
    pub b_n: f64,
    pub ln_b_n_excess: f64,
    pub u_transposition: f64,
    pub ub_rhs: f64,
    pub upper: f64,
    pub lower: f64,
    pub warnings: Vec<String>,
}

/// Every displayed scalar for `Ŝ_n` at `(α, c)`. Values are returned even when
/// the parameters are out of the range where the bounds are claimed.
pub fn snhat_closed_forms(n: usize, alpha: f64, c: f64) -> SnhatClosedForms {
    let mut warnings = Vec::new();
    if n < 3 {
        warnings.push(format!("n = {n} is below the range n >= 3"));
    }
    if alpha <= 1.0 {
        warnings.push(format!("alpha = {alpha} <= 1; the upper bound is only claimed for alpha > 1"));
    }
    let k = snhat_k(n, alpha, c);
    SnhatClosedForms {
        n,
        alpha,
        c,
        k,
        a: (1..=n).map(|i| a_i(n, i)).collect(),
        f0: f0(n),
        f1: f1(n),
        a_n: a_n(n),
        g_n: g_n(n),
        b_n: b_n(n),
        ln_b_n_excess: ln_b_n_excess(n),
        u_transposition: u_transposition(n),
        ub_rhs: snhat_ub_rhs(n, k),
        upper: snhat_upper(n, alpha, c),
        lower: snhat_lower(n, alpha),
        warnings,
    }
}

/// `d(n) = (n/4)e^{−(n²−π²/2)/20}`.
pub fn sekine_d(n: usize) -> f64 {
    let nf = n as f64;
    nf / 4.0 * (-(nf * nf - PI * PI / 2.0) / 20.0).exp()
}

/// `c_n = sqrt(1 + d(n) + 2n·d(n))`.
pub fn sekine_c(n: usize) -> f64 {
    let d = sekine_d(n);
    (1.0 + d + 2.0 * n as f64 * d).sqrt()
}

/// `c_n e^{−απ²/4}`.
pub fn sekine_upper(n: usize, alpha: f64) -> f64 {
    sekine_c(n) * (-alpha * PI * PI / 4.0).exp()
}

/// `½e^{−απ²/2}`.
pub fn sekine_lower(alpha: f64) -> f64 {
    0.5 * (-alpha * PI * PI / 2.0).exp()
}

/// `k = round(αn²)`.
pub fn sekine_k(n: usize, alpha: f64) -> usize {
    (alpha * (n * n) as f64).round() as usize
}

#[derive(Debug, Clone, Serialize)]
pub struct SekineClosedForms {
    pub n: usize,
    pub alpha: f64,
    pub d: f64,
    pub c_n: f64,
    pub upper: f64,
    pub lower: f64,
    pub warnings: Vec<String>,
}

pub fn sekine_closed_forms(n: usize, alpha: f64) -> SekineClosedForms {
    let mut warnings = Vec::new();
    if alpha < 0.05 {
        warnings.push(format!("alpha = {alpha} < 1/20; the bounds are only claimed for alpha >= 1/20"));
    }
    if n < 3 {
        warnings.push(format!("n = {n} is below the range n >= 3"));
    }
    SekineClosedForms {
        n,
        alpha,
        d: sekine_d(n),
        c_n: sekine_c(n),
        upper: sekine_upper(n, alpha),
        lower: sekine_lower(alpha),
        warnings,
    }
}
