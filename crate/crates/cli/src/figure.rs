use std::f64::consts::PI;

use anyhow::{bail, Result};
use qwalk_core::bounds::{exact_tv_sequence, tv_distance};
use qwalk_core::models::closed_form::{sekine_c, sekine_k, sekine_lower};
use qwalk_core::models::{sekine, sekine_walk_state};
use serde::Serialize;

use crate::output::{csv_table, num};

/// Largest `n` for which `sekine:n` is built.
pub const MAX_EXACT_N: usize = 15;

#[derive(Debug, Clone)]
pub struct FigureOptions {
    pub n: usize,
    pub alpha_max: f64,
    /// Grid points per unit of `α`; the grid is `α = i / resolution`.
    pub resolution: usize,
    /// Replaces the grid when non-empty.
    pub alphas: Vec<f64>,
    /// Exact distances are computed for `n` up to this value.
    pub exact_max_n: usize,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            n: 5,
            alpha_max: 2.0,
            resolution: 20,
            alphas: Vec::new(),
            exact_max_n: 9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureRow {
    pub alpha: f64,
    pub k: usize,
    /// `e^{−απ²/4}`, the upper bound with `c_n = 1`.
    pub upper: f64,
    /// `½e^{−απ²/2}`.
    pub lower: f64,
    pub c_n: f64,
    /// `c_n e^{−απ²/4}`.
    pub upper_cn: f64,
    pub exact_tv: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Figure {
    pub n: usize,
    pub c_n: f64,
    pub rows: Vec<FigureRow>,
    pub warnings: Vec<String>,
}

impl FigureOptions {
    fn grid(&self) -> Result<Vec<f64>> {
        if !self.alphas.is_empty() {
            if let Some(a) = self.alphas.iter().find(|a| !(a.is_finite() && **a >= 0.0)) {
                bail!("alpha must be finite and non-negative, got {a}");
            }
            return Ok(self.alphas.clone());
        }
        if self.resolution == 0 || !(self.alpha_max.is_finite() && self.alpha_max > 0.0) {
            bail!("need alpha-max > 0 and resolution >= 1");
        }
        let steps = (self.alpha_max * self.resolution as f64 + 1e-9).floor() as usize;
        Ok((1..=steps).map(|i| i as f64 / self.resolution as f64).collect())
    }
}

pub fn figure(opts: &FigureOptions) -> Result<Figure> {
    let n = opts.n;
    if n.is_multiple_of(2) {
        bail!("figure needs odd n, got {n}");
    }
    let alphas = opts.grid()?;
    let c_n = sekine_c(n);
    let mut warnings = Vec::new();
    if n < 3 {
        warnings.push(format!("n = {n} is below the range n >= 3"));
    }
    if let Some(a) = alphas.iter().find(|&&a| a < 0.05) {
        warnings.push(format!("alpha = {a} < 1/20; the bounds are only claimed for alpha >= 1/20"));
    }
    let exact = if n <= opts.exact_max_n.min(MAX_EXACT_N) {
        Some(exact_at(n, alphas.iter().map(|&a| sekine_k(n, a)).max().unwrap_or(0))?)
    } else {
        None
    };
    let rows = alphas
        .iter()
        .map(|&alpha| {
            let k = sekine_k(n, alpha);
            let upper = (-alpha * PI * PI / 4.0).exp();
            FigureRow {
                alpha,
                k,
                upper,
                lower: sekine_lower(alpha),
                c_n,
                upper_cn: c_n * upper,
                exact_tv: exact.as_ref().map(|e| e[k]),
            }
        })
        .collect();
    Ok(Figure { n, c_n, rows, warnings })
}

/// `TV(ν^{⋆k}, π)` for `k = 0..=k_max`, with `ν^{⋆0} = ε`.
fn exact_at(n: usize, k_max: usize) -> Result<Vec<f64>> {
    let q = sekine(n)?;
    let nu = sekine_walk_state(&q, n)?;
    let mut out = vec![tv_distance(&q, q.counit_functional(), &q.haar_functional()?)?];
    if k_max > 0 {
        out.extend(exact_tv_sequence(&q, &nu, k_max)?);
    }
    Ok(out)
}

pub fn figure_csv(fig: &Figure) -> Result<String> {
    let exact = fig.rows.iter().any(|r| r.exact_tv.is_some());
    let mut header = vec!["alpha", "k", "upper", "lower", "c_n", "upper_cn"];
    if exact {
        header.push("exact_tv");
    }
    let rows = fig.rows.iter().map(|r| {
        let mut row = vec![
            num(r.alpha),
            r.k.to_string(),
            num(r.upper),
            num(r.lower),
            num(r.c_n),
            num(r.upper_cn),
        ];
        if exact {
            row.push(r.exact_tv.map(num).unwrap_or_default());
        }
        row
    });
    csv_table(&header, rows)
}
