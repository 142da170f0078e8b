//! Polynomials over finite rings and certificate-producing deciders for the
//! McCoy family of ring properties.
//!
//! Degree-quantified verdicts are bounded: `REFUTED` is exact, `NOT_REFUTED`
//! holds for every polynomial pair of degree at most `d`.

mod elementwise;
mod lattice;
mod mccoy;
mod pairs;
mod poly;
mod transfer;
mod truncated;
mod verdict;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use elementwise::{check_abelian, check_reduced, check_reversible, check_semicommutative};
pub use lattice::{audit_implications, LatticeAudit, LatticeViolation};
pub use mccoy::{
    check, check_armendariz, check_central_armendariz, check_left_central_mccoy, check_left_mccoy,
    check_pair, check_right_central_mccoy, check_right_mccoy, universal_witness, PairCheck,
};
pub use pairs::{zero_divisor_pairs, zero_divisor_pairs_exhaustive};
pub use poly::{poly_mul, Polynomial};
pub use transfer::{check_lifted_pair, flatten_pair, flatten_poly_poly, packing_bound, poly_poly_mul, LiftedCheck};
pub use truncated::{check_on_truncated, check_pair_on_truncated, TruncatedPairCheck, TruncatedSettings};
pub use verdict::{
    verify_certificate, Bounds, Certificate, ElementRecord, Polarity, PolyRecord, SearchStats, Transcript, Verdict,
    WitnessCount, WitnessFailure,
};

/// Default refusal threshold for the estimated number of search steps.
pub const DEFAULT_MAX_SEARCH: u128 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_search: u128,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_search: DEFAULT_MAX_SEARCH,
        }
    }
}

impl SearchLimits {
    pub(crate) fn check(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.max_search {
            return Err(Error::capacity(format!("search {what}"), needed, self.max_search));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    RightMccoy,
    LeftMccoy,
    RightCentralMccoy,
    LeftCentralMccoy,
    Armendariz,
    CentralArmendariz,
    Reversible,
    Semicommutative,
    Abelian,
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::RightMccoy,
        Property::LeftMccoy,
        Property::RightCentralMccoy,
        Property::LeftCentralMccoy,
        Property::Armendariz,
        Property::CentralArmendariz,
        Property::Reversible,
        Property::Semicommutative,
        Property::Abelian,
        Property::Reduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::RightMccoy => "right-mccoy",
            Property::LeftMccoy => "left-mccoy",
            Property::RightCentralMccoy => "right-central-mccoy",
            Property::LeftCentralMccoy => "left-central-mccoy",
            Property::Armendariz => "armendariz",
            Property::CentralArmendariz => "central-armendariz",
            Property::Reversible => "reversible",
            Property::Semicommutative => "semicommutative",
            Property::Abelian => "abelian",
            Property::Reduced => "reduced",
        }
    }

    /// Quantifies over polynomial pairs, so verdicts carry a degree bound.
    pub fn is_degree_bounded(self) -> bool {
        !matches!(
            self,
            Property::Reversible | Property::Semicommutative | Property::Abelian | Property::Reduced
        )
    }

    /// McCoy-type: a witness element is searched for each pair.
    pub fn has_witness(self) -> bool {
        self.witness_shape().is_some()
    }

    /// `(side, central)` for the four McCoy-type properties.
    pub(crate) fn witness_shape(self) -> Option<(Side, bool)> {
        match self {
            Property::RightMccoy => Some((Side::Right, false)),
            Property::LeftMccoy => Some((Side::Left, false)),
            Property::RightCentralMccoy => Some((Side::Right, true)),
            Property::LeftCentralMccoy => Some((Side::Left, true)),
            _ => None,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
                Error::usage(format!("unknown property `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
            assert_eq!(serde_json::to_string(&p).unwrap(), format!("\"{}\"", p.name()));
        }
        assert!("mccoy".parse::<Property>().is_err());
    }
}
