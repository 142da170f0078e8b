//! Finite-ring workbench: exact finite rings, the standard constructions on
//! them, finitely presented algebras over small prime fields, and
//! certificate-producing deciders for McCoy-type ring properties.
//!
//! Every positive verdict is bounded (polynomial degree, and a word-length
//! window for infinite algebras); every refutation carries a certificate that
//! can be re-checked independently of the search that produced it.

pub mod constructions;
pub mod error;
pub mod fpalg;
pub mod linalg;
pub mod properties;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{AlgebraBasis, Element, FiniteRing, RingOps, RingView};
