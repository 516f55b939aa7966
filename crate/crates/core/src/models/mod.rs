//! Concrete quantum groups, the states studied on them, and a registry of
//! built-in models addressable by name.

pub mod classical;
pub mod closed_form;
pub mod dual;
pub mod group;
pub mod sekine;

pub use classical::{classical, classical_irreps};
pub use dual::{
    dual, dual_state, dual_state_values, snhat_spec, snhat_walk_state, snhat_xi, DualModel, DualStateSpec, SnhatMode,
    SnhatWalk,
};
pub use group::{cycle_label, permutations, GroupTable, IrrepFamily, UnitaryRep};
pub use sekine::{
    sekine, sekine_haar_weights, sekine_irreps, sekine_rho, sekine_state, sekine_walk_spec, sekine_walk_state,
    SekineStateSpec,
};

use crate::corep::Corepresentation;
use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Classical,
    Dual,
    Sekine(usize),
    /// Loaded from a document rather than the registry.
    Custom,
}

/// A resolved model: the quantum group (absent for bounds-only duals), its
/// irrep catalogue when one is known, and the underlying group for
/// classical and dual models.
#[derive(Debug, Clone)]
pub struct Model {
    name: String,
    kind: ModelKind,
    quantum_group: Option<QuantumGroup>,
    irreps: Option<Vec<Corepresentation>>,
    group: Option<GroupTable>,
    dual: Option<DualModel>,
}

fn family_of(group: &GroupTable, family: char, n: usize) -> Result<IrrepFamily> {
    match family {
        'Z' => IrrepFamily::cyclic(group),
        'D' => IrrepFamily::dihedral(group),
        'S' => IrrepFamily::symmetric(group, n),
        _ => unreachable!("family letter checked by the parser"),
    }
}

fn parse_group(spec: &str) -> Result<(char, usize, GroupTable)> {
    let bad = || Error::Unsupported(format!("unknown group `{spec}`; expected Zn, Dn or Sn"));
    let mut chars = spec.chars();
    let letter = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    let group = match letter {
        'Z' if (1..=64).contains(&n) => GroupTable::cyclic(n)?,
        'D' if (2..=16).contains(&n) => GroupTable::dihedral(n)?,
        'S' => GroupTable::symmetric(n)?,
        'Z' | 'D' => return Err(Error::Unsupported(format!("group `{spec}` is out of range"))),
        _ => return Err(bad()),
    };
    Ok((letter, n, group))
}

impl Model {
    /// Resolves `classical:G`, `dual:G` (for `G` one of `Zn`, `Dn`, `Sn`) or
    /// `sekine:n`. `dual:S5` is bounds-only.
    pub fn resolve(name: &str) -> Result<Self> {
        let (family, arg) = name
            .split_once(':')
            .ok_or_else(|| Error::Unsupported(format!("model `{name}` is not of the form family:parameter")))?;
        match family {
            "classical" => {
                let (letter, n, group) = parse_group(arg)?;
                let q = classical(&group)?;
                let irreps = classical_irreps(&q, &family_of(&group, letter, n)?)?;
                Ok(Self {
                    name: name.to_string(),
                    kind: ModelKind::Classical,
                    quantum_group: Some(q),
                    irreps: Some(irreps),
                    group: Some(group),
                    dual: None,
                })
            }
            "dual" => {
                let (letter, n, group) = parse_group(arg)?;
                let full = !(letter == 'S' && n >= 5);
                let family = if full { Some(family_of(&group, letter, n)?) } else { None };
                let d = dual(&group, family.as_ref())?;
                Ok(Self::from_dual(name, d))
            }
            "sekine" => {
                let n: usize = arg
                    .parse()
                    .map_err(|_| Error::Unsupported(format!("`{arg}` is not a positive integer")))?;
                if !(1..=15).contains(&n) {
                    return Err(Error::Unsupported(format!("sekine:{n}; supported 1..=15")));
                }
                let q = sekine(n)?;
                let irreps = if n % 2 == 1 { Some(sekine_irreps(&q, n)?) } else { None };
                Ok(Self {
                    name: name.to_string(),
                    kind: ModelKind::Sekine(n),
                    quantum_group: Some(q),
                    irreps,
                    group: None,
                    dual: None,
                })
            }
            _ => Err(Error::Unsupported(format!("unknown model family `{family}`"))),
        }
    }

    /// Wraps a dual model, registering the `κ_s` catalogue when it is full.
    pub fn from_dual(name: &str, d: DualModel) -> Self {
        let irreps = d.coreps().ok();
        Self {
            name: name.to_string(),
            kind: ModelKind::Dual,
            quantum_group: d.quantum_group().cloned(),
            irreps,
            group: Some(d.group().clone()),
            dual: Some(d),
        }
    }

    /// A model around an arbitrary quantum group, without a catalogue.
    pub fn from_quantum_group(q: QuantumGroup) -> Self {
        Self {
            name: q.name().to_string(),
            kind: ModelKind::Custom,
            quantum_group: Some(q),
            irreps: None,
            group: None,
            dual: None,
        }
    }

    /// Attaches an irrep catalogue, replacing any present. Not checked; see
    /// [`crate::corep::peter_weyl_check`].
    pub fn with_irreps(mut self, irreps: Vec<Corepresentation>) -> Self {
        self.irreps = Some(irreps);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn is_bounds_only(&self) -> bool {
        self.quantum_group.is_none()
    }

    pub fn quantum_group(&self) -> Result<&QuantumGroup> {
        self.quantum_group.as_ref().ok_or_else(|| {
            Error::Unsupported(format!(
                "{} is bounds-only: no irrep family of the group was supplied",
                self.name
            ))
        })
    }

    pub fn irreps(&self) -> Option<&[Corepresentation]> {
        self.irreps.as_deref()
    }

    pub fn group(&self) -> Option<&GroupTable> {
        self.group.as_ref()
    }

    pub fn dual(&self) -> Option<&DualModel> {
        self.dual.as_ref()
    }
}
