use std::collections::BTreeMap;

use mccoy_core::properties::{LatticeAudit, Property, Verdict};
use mccoy_core::ring::AxiomCheck;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::search::SearchRow;
use crate::suite::TraceRow;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "mccoy";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn of(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub label: String,
    /// Absent for a truncated view, which is not a ring.
    pub size: Option<u64>,
    pub fingerprint: Option<String>,
    pub center_size: Option<u64>,
    pub idempotents: Option<u64>,
    pub characteristic: Option<u32>,
    pub basis: Option<Vec<String>>,
    /// Basis words of a truncated view.
    pub window_words: Option<usize>,
    pub axioms: Option<AxiomOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum AxiomOutcome {
    Verified { exhaustive: bool, triples_checked: u64 },
    Violated { law: String, elements: Vec<u32> },
}

impl AxiomOutcome {
    pub fn of(r: &std::result::Result<AxiomCheck, mccoy_core::ring::AxiomViolation>) -> Self {
        match r {
            Ok(c) => AxiomOutcome::Verified {
                exhaustive: c.exhaustive,
                triples_checked: c.triples_checked,
            },
            Err(v) => AxiomOutcome::Violated {
                law: v.law.to_string(),
                elements: v.elements.clone(),
            },
        }
    }
}

/// A named assertion inside a suite entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryReport {
    pub key: String,
    pub title: String,
    pub status: Status,
    pub checks: Vec<CheckRecord>,
    pub verdicts: Vec<Verdict>,
    pub audits: Vec<LatticeAudit>,
    /// Further re-checkable evidence (maps, element lists).
    pub evidence: BTreeMap<String, Value>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rollup {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub status: Status,
}

impl Rollup {
    pub fn of(statuses: impl IntoIterator<Item = Status>) -> Self {
        let (mut total, mut passed) = (0, 0);
        for s in statuses {
            total += 1;
            passed += (s == Status::Pass) as usize;
        }
        Self {
            total,
            passed,
            failed: total - passed,
            status: Status::of(passed == total),
        }
    }
}

/// Configuration echo; excludes the worker count so reports do not depend
/// on it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub ring: Option<String>,
    pub properties: Vec<Property>,
    pub max_degree: Option<usize>,
    pub window: Option<usize>,
    pub max_ring_size: u64,
    pub seed: u64,
    pub expect: Option<String>,
    pub entries: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub config: ConfigEcho,
    pub ring: Option<RingSummary>,
    pub verdicts: Vec<Verdict>,
    pub entries: Vec<EntryReport>,
    pub traceability: Vec<TraceRow>,
    pub search: Vec<SearchRow>,
    pub rollup: Rollup,
}

impl Report {
    pub fn new(command: &str, config: ConfigEcho) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: TOOL.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            config,
            ring: None,
            verdicts: Vec::new(),
            entries: Vec::new(),
            traceability: Vec::new(),
            search: Vec::new(),
            rollup: Rollup::of([]),
        }
    }

    pub fn passed(&self) -> bool {
        self.rollup.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
