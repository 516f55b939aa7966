//! The library behind the `qwalk` binary: model and state resolution, the
//! document format, and one module per subcommand.

use std::fmt;
use std::path::Path;

use anyhow::Result;
use qwalk_core::Model;

pub mod complex;
pub mod curve;
pub mod document;
pub mod export;
pub mod figure;
pub mod output;
pub mod table;
pub mod verify;

pub use complex::Cx;
pub use document::{IrrepDocument, ModelDocument, StateDocument};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// A check that ran and failed, as opposed to bad input.
#[derive(Debug, Clone)]
pub struct VerificationFailure(pub String);

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerificationFailure {}

/// `1` for failed checks (including a violated bound sandwich), `2` for
/// anything else.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    let failed = err.chain().any(|e| {
        e.is::<VerificationFailure>()
            || matches!(
                e.downcast_ref::<qwalk_core::Error>(),
                Some(qwalk_core::Error::SandwichViolated { .. })
            )
    });
    if failed {
        EXIT_FAIL
    } else {
        EXIT_INPUT
    }
}

/// A registry name such as `sekine:3`, or the path of a model document.
/// Documents must pass every Hopf axiom at `tol`.
pub fn resolve_model(spec: &str, tol: f64) -> Result<Model> {
    let path = Path::new(spec);
    if path.is_file() {
        return document::load_model(path, tol);
    }
    resolve_registry(spec)
}

pub(crate) fn resolve_registry(spec: &str) -> Result<Model> {
    Model::resolve(spec).map_err(|e| {
        anyhow::anyhow!("cannot resolve model `{spec}`: not a registry name ({e}) and not a readable file")
    })
}
