use std::path::PathBuf;

use mccoy_core::constructions::DEFAULT_MAX_RING_SIZE;
use mccoy_core::properties::{Polarity, Property};
use mccoy_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Md,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Ring expression or path to a `.ring` file.
    pub ring: String,
    pub properties: Vec<Property>,
    pub max_degree: usize,
    /// Word-length window for algebras that are not finite-dimensional.
    pub window: Option<usize>,
    pub max_ring_size: u64,
    pub workers: usize,
    pub verify_axioms: bool,
    pub seed: u64,
    pub expect: Option<Polarity>,
    pub out: Option<PathBuf>,
    pub format: Format,
    /// Directory that relative ring paths resolve against.
    pub base_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            ring: String::new(),
            properties: Vec::new(),
            max_degree: 1,
            window: None,
            max_ring_size: DEFAULT_MAX_RING_SIZE,
            workers: 1,
            verify_axioms: false,
            seed: 0,
            expect: None,
            out: None,
            format: Format::Json,
            base_dir: PathBuf::from("."),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::usage("worker count must be at least 1"));
        }
        if self.max_degree == 0 && self.properties.iter().any(|p| p.is_degree_bounded()) {
            return Err(Error::usage("McCoy-type properties need --max-degree >= 1"));
        }
        Ok(())
    }
}

/// Parses `refuted` / `not-refuted`.
pub fn parse_expectation(s: &str) -> Result<Polarity> {
    match s.to_ascii_lowercase().replace('_', "-").as_str() {
        "refuted" => Ok(Polarity::Refuted),
        "not-refuted" => Ok(Polarity::NotRefuted),
        _ => Err(Error::usage(format!(
            "unknown expectation `{s}`; use refuted or not-refuted"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut c = RunConfig {
            properties: vec![Property::RightMccoy],
            ..Default::default()
        };
        assert!(c.validate().is_ok());
        c.max_degree = 0;
        assert!(c.validate().is_err());
        c.properties = vec![Property::Reduced];
        assert!(c.validate().is_ok());
        c.workers = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn expectations() {
        assert_eq!(parse_expectation("not-refuted").unwrap(), Polarity::NotRefuted);
        assert_eq!(parse_expectation("REFUTED").unwrap(), Polarity::Refuted);
        assert!(parse_expectation("maybe").is_err());
    }
}
