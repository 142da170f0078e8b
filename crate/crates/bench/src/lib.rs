//! Shared fixtures for the criterion benches.

use std::path::Path;

use mccoy_core::constructions::expr::parse_ring_expr;
use mccoy_core::constructions::Limits;
use mccoy_core::FiniteRing;

/// Builds a ring expression; `fp` paths resolve against the workspace root.
pub fn ring(expr: &str) -> FiniteRing {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    parse_ring_expr(expr)
        .and_then(|e| e.build(&Limits::default(), &root))
        .unwrap_or_else(|e| panic!("{expr}: {e}"))
}
