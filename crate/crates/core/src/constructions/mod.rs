//! Derived rings: matrix families, products, corners, quotients and
//! localizations, all built over arbitrary base [`FiniteRing`]s.
//!
//! The infinite sequence ring `R(C, D)` of eventually-constant sequences has no
//! type of its own: its length-`n` truncation is literally
//! `product([D; n] ++ [C])`, since both are componentwise. Likewise the Laurent
//! ring `R[x, x^-1]` is only recorded through its reduction to localizing
//! `R[x]` at the powers of `x`.

mod basic;
mod corner;
pub mod expr;
mod iso;
mod localize;
mod matrix;
mod product;
mod quotient;

pub use basic::{prime_field, zmod};
pub use corner::corner;
pub use iso::{find_isomorphism, is_injective_homomorphism, iso_check};
pub use localize::{localize, Localization, LocalizationSpec};
pub use matrix::{matrix_ring, Family, MatrixOps, MatrixShape};
pub use product::{product, ProductOps};
pub use quotient::{
    ideal_as_nonunital, quotient_by_ideal, quotient_poly, IdealData, NonunitalRing, TruncatedPolyOps,
};

use crate::error::{Error, Result};

/// Default refusal threshold for materializing a ring.
pub const DEFAULT_MAX_RING_SIZE: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_ring_size: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_ring_size: DEFAULT_MAX_RING_SIZE,
        }
    }
}

impl Limits {
    pub fn with_max_ring_size(max_ring_size: u64) -> Self {
        Self { max_ring_size }
    }

    /// `base^exp` if it fits under the cap.
    pub(crate) fn check_power(&self, what: &str, base: u64, exp: u32) -> Result<u32> {
        let needed = (base as u128).checked_pow(exp).unwrap_or(u128::MAX);
        self.check(what, needed)
    }

    pub(crate) fn check(&self, what: &str, needed: u128) -> Result<u32> {
        let limit = self.max_ring_size.min(u32::MAX as u64) as u128;
        if needed > limit {
            return Err(Error::capacity(format!("ring {what}"), needed, limit));
        }
        Ok(needed as u32)
    }
}
