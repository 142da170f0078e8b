use std::path::Path;

use mccoy_core::constructions::expr::{parse_ring_expr, RingExpr};
use mccoy_core::constructions::Limits;
use mccoy_core::fpalg::{
    complete_rewrite, parse_presentation, realize_finite, RewriteSystem, TruncatedAlgebra, DEFAULT_COMPLETION_CAP,
};
use mccoy_core::{Error, FiniteRing, Result};

pub enum LoadedRing {
    Finite(FiniteRing),
    /// A word-length window of an algebra that is not finite-dimensional.
    Truncated(TruncatedAlgebra),
}

impl LoadedRing {
    pub fn label(&self) -> String {
        match self {
            LoadedRing::Finite(r) => r.label().to_string(),
            LoadedRing::Truncated(v) => format!(
                "⟨{}⟩/F{} (window {})",
                v.rewrite_system().generators().join(","),
                v.characteristic(),
                v.max_len()
            ),
        }
    }
}

fn is_ring_path(spec: &str) -> bool {
    spec.trim().ends_with(".ring") && !spec.contains('(')
}

/// Completes a presentation text into a rewrite system.
pub fn rewrite_system_of(text: &str) -> Result<RewriteSystem> {
    complete_rewrite(&parse_presentation(text)?, DEFAULT_COMPLETION_CAP)
}

fn load_presentation(path: &Path, limits: &Limits, window: Option<usize>) -> Result<LoadedRing> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let rs = rewrite_system_of(&text)?;
    match realize_finite(&rs, limits) {
        Ok(a) => Ok(LoadedRing::Finite(a.ring)),
        Err(Error::NotFiniteDimensional(msg)) => match window {
            Some(l) => Ok(LoadedRing::Truncated(TruncatedAlgebra::new(&rs, l)?)),
            None => Err(Error::usage(format!(
                "{}: algebra is not finite-dimensional ({msg}); pass --window",
                path.display()
            ))),
        },
        Err(e) => Err(e),
    }
}

/// Loads a ring expression or `.ring` file; relative paths resolve against
/// `base_dir`.
pub fn load_ring(spec: &str, base_dir: &Path, limits: &Limits, window: Option<usize>) -> Result<LoadedRing> {
    if is_ring_path(spec) {
        return load_presentation(&base_dir.join(spec.trim()), limits, window);
    }
    match parse_ring_expr(spec)? {
        RingExpr::Presentation(path) => load_presentation(&base_dir.join(path), limits, window),
        expr => Ok(LoadedRing::Finite(expr.build(limits, base_dir)?)),
    }
}
