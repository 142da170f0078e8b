//! Finitely presented algebras over a small prime field.
//!
//! A [`Presentation`] lists generators and relations; [`complete_rewrite`]
//! orients the relations under the length-lexicographic order (generators in
//! declaration order) and runs critical-pair completion. The resulting
//! [`RewriteSystem`] gives normal forms, from which either a finite ring
//! ([`realize_finite`]) or a bounded word-length window ([`TruncatedAlgebra`])
//! is built.

mod poly;
mod presentation;
mod realize;
mod rewrite;

pub use poly::{Word, WordPoly};
pub use presentation::{parse_presentation, Presentation, MAX_CHARACTERISTIC};
pub use realize::{realize_finite, RealizedAlgebra, TruncatedAlgebra, WindowProduct};
pub use rewrite::{complete_rewrite, Completion, Rule, RewriteSystem, DEFAULT_COMPLETION_CAP};
