//! Tables of the closed-form scalars over a range of `n`.

use anyhow::{bail, Result};
use clap::ValueEnum;
use qwalk_core::models::closed_form::{
    a_n, b_n, c0, f0, f1, g_n, h_n, ln_b_n_excess, sekine_c, sekine_d, u_transposition,
};
use serde::Serialize;

use crate::output::{csv_table, num};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// `A_n`, `g(n)`, `B_n`, `f_0`, `f_1` and friends for the walk on `Ŝ_n`.
    Snhat,
    /// `d(n)` and `c_n` for odd `n`.
    Sekine,
}

#[derive(Debug, Clone, Serialize)]
pub struct SnhatRow {
    pub n: usize,
    pub a_n: f64,
    pub g_n: f64,
    pub b_n: f64,
    pub ln_b_n_excess: f64,
    pub c0: f64,
    pub f0: f64,
    pub f1: f64,
    pub u_transposition: f64,
    pub h_n: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SekineRow {
    pub n: usize,
    pub d: f64,
    pub c_n: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Table {
    Snhat(Vec<SnhatRow>),
    Sekine(Vec<SekineRow>),
}

pub fn table(kind: TableKind, n_min: usize, n_max: usize) -> Result<Table> {
    if n_min < 2 || n_max < n_min {
        bail!("need 2 <= n-min <= n-max, got {n_min}..={n_max}");
    }
    Ok(match kind {
        TableKind::Snhat => Table::Snhat(
            (n_min..=n_max)
                .map(|n| SnhatRow {
                    n,
                    a_n: a_n(n),
                    g_n: g_n(n),
                    b_n: b_n(n),
                    ln_b_n_excess: ln_b_n_excess(n),
                    c0: c0(n),
                    f0: f0(n),
                    f1: f1(n),
                    u_transposition: u_transposition(n),
                    h_n: h_n(n),
                })
                .collect(),
        ),
        TableKind::Sekine => Table::Sekine(
            (n_min..=n_max)
                .filter(|n| n % 2 == 1)
                .map(|n| SekineRow {
                    n,
                    d: sekine_d(n),
                    c_n: sekine_c(n),
                })
                .collect(),
        ),
    })
}

pub fn table_csv(t: &Table) -> Result<String> {
    match t {
        Table::Snhat(rows) => csv_table(
            &["n", "a_n", "g_n", "b_n", "ln_b_n_excess", "c0", "f0", "f1", "u_transposition", "h_n"],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    num(r.a_n),
                    num(r.g_n),
                    num(r.b_n),
                    num(r.ln_b_n_excess),
                    num(r.c0),
                    num(r.f0),
                    num(r.f1),
                    num(r.u_transposition),
                    num(r.h_n),
                ]
            }),
        ),
        Table::Sekine(rows) => csv_table(
            &["n", "d", "c_n"],
            rows.iter().map(|r| vec![r.n.to_string(), num(r.d), num(r.c_n)]),
        ),
    }
}
