use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use qwalk_core::bounds::{bound_curve, curve_from_spectrum};
use qwalk_core::models::{sekine_walk_state, snhat_walk_state, ModelKind, SnhatMode};
use qwalk_core::{BoundCurve, Functional, Model};

use crate::document::StateDocument;
use crate::output::num;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StateRef {
    /// The walk `ν` on `sekine:n`.
    SekineWalk,
    /// The walk `u` on `dual:Sn`.
    SnhatWalk,
    Haar,
    Counit,
    Document(PathBuf),
}

impl FromStr for StateRef {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "sekine-walk" => StateRef::SekineWalk,
            "snhat-walk" => StateRef::SnhatWalk,
            "haar" => StateRef::Haar,
            "counit" => StateRef::Counit,
            path => StateRef::Document(PathBuf::from(path)),
        })
    }
}

impl StateRef {
    pub fn label(&self) -> String {
        match self {
            StateRef::SekineWalk => "sekine-walk".into(),
            StateRef::SnhatWalk => "snhat-walk".into(),
            StateRef::Haar => "haar".into(),
            StateRef::Counit => "counit".into(),
            StateRef::Document(p) => p.display().to_string(),
        }
    }
}

fn symmetric_degree(model: &Model) -> Result<usize> {
    let g = model
        .group()
        .filter(|_| model.kind() == ModelKind::Dual)
        .ok_or_else(|| anyhow!("snhat-walk needs a dual:Sn model, got {}", model.name()))?;
    g.name()
        .strip_prefix('S')
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| anyhow!("snhat-walk needs a dual:Sn model, got {}", model.name()))
}

/// The state as a functional on the model.
pub fn resolve_state(model: &Model, state: &StateRef) -> Result<Functional> {
    let q = model.quantum_group()?;
    Ok(match state {
        StateRef::SekineWalk => match model.kind() {
            ModelKind::Sekine(n) => sekine_walk_state(q, n)?,
            _ => bail!("sekine-walk needs a sekine:n model, got {}", model.name()),
        },
        StateRef::SnhatWalk => {
            let n = symmetric_degree(model)?;
            snhat_walk_state(n, SnhatMode::Full)?
                .state
                .ok_or_else(|| anyhow!("no full model of dual:S{n}"))?
        }
        StateRef::Haar => q.haar_functional()?,
        StateRef::Counit => q.counit_functional().clone(),
        StateRef::Document(path) => StateDocument::read(path)?.functional(q)?,
    })
}

pub fn curve(model: &Model, state: &StateRef, k_max: usize, exact: bool) -> Result<BoundCurve> {
    if k_max == 0 {
        bail!("kmax must be >= 1");
    }
    if model.is_bounds_only() {
        if exact {
            let g = model.group().map(|g| g.name().to_string()).unwrap_or_default();
            bail!(
                "exact distances on {} need the Wedderburn blocks of C{g}, and no irrep family of {g} is registered; \
                 drop --exact for bounds only",
                model.name()
            );
        }
        if *state != StateRef::SnhatWalk {
            bail!("{} is bounds-only; only snhat-walk is available on it", model.name());
        }
        let walk = snhat_walk_state(symmetric_degree(model)?, SnhatMode::BoundsOnly)?;
        return Ok(curve_from_spectrum(model.name(), &state.label(), &walk.spectrum()?, k_max)?);
    }
    let q = model.quantum_group()?;
    let irreps = model
        .irreps()
        .ok_or_else(|| anyhow!("{} has no irrep catalogue, so no bounds can be computed", model.name()))?;
    let nu = resolve_state(model, state)?;
    let mut c = bound_curve(q, &nu, irreps, k_max, exact, &state.label())
        .with_context(|| format!("bound curve of {} on {}", state.label(), model.name()))?;
    c.model = model.name().to_string();
    Ok(c)
}

pub fn curve_csv(curve: &BoundCurve) -> Result<String> {
    let exact = curve.rows.iter().any(|r| r.exact_tv.is_some());
    let mut header = vec!["k"];
    if exact {
        header.push("exact_tv");
    }
    header.extend(["ub_sum", "sqrt_ub", "lower"]);
    let rows = curve.rows.iter().map(|r| {
        let mut row = vec![r.k.to_string()];
        if exact {
            row.push(r.exact_tv.map(num).unwrap_or_default());
        }
        row.extend([num(r.ub_sum), num(r.sqrt_ub), num(r.lower)]);
        row
    });
    crate::output::csv_table(&header, rows)
}
