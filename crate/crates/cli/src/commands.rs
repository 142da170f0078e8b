use mccoy_core::constructions::Limits;
use mccoy_core::properties::{check, check_on_truncated, Polarity, Property, SearchLimits, TruncatedSettings, Verdict};
use mccoy_core::ring::{center_indices, idempotent_indices};
use mccoy_core::{Error, FiniteRing, Result, RingView};

use crate::config::RunConfig;
use crate::load::{load_ring, LoadedRing};
use crate::report::{AxiomOutcome, ConfigEcho, Report, RingSummary, Rollup, Status};
use crate::search::{expand_family, separators, SearchRow, SearchVerdict};
use crate::suite::{run_suite, traceability, SuiteContext};

pub type BuildSummary = RingSummary;

pub fn ring_summary(r: &FiniteRing, verify_axioms: bool, seed: u64) -> RingSummary {
    RingSummary {
        label: r.label().to_string(),
        size: Some(r.size() as u64),
        fingerprint: Some(r.fingerprint().to_string()),
        center_size: Some(center_indices(r).len() as u64),
        idempotents: Some(idempotent_indices(r).len() as u64),
        characteristic: r.basis().map(|b| b.characteristic),
        basis: r.basis().map(|b| b.names.clone()),
        window_words: None,
        axioms: verify_axioms.then(|| AxiomOutcome::of(&r.verify_axioms(seed))),
    }
}

fn loaded_summary(ring: &LoadedRing, cfg: &RunConfig) -> RingSummary {
    match ring {
        LoadedRing::Finite(r) => ring_summary(r, cfg.verify_axioms, cfg.seed),
        LoadedRing::Truncated(v) => RingSummary {
            label: ring.label(),
            size: None,
            fingerprint: None,
            center_size: None,
            idempotents: None,
            characteristic: Some(v.characteristic()),
            basis: None,
            window_words: Some(v.dim()),
            axioms: None,
        },
    }
}

fn echo(cfg: &RunConfig) -> ConfigEcho {
    ConfigEcho {
        ring: Some(cfg.ring.clone()),
        properties: cfg.properties.clone(),
        max_degree: Some(cfg.max_degree),
        window: cfg.window,
        max_ring_size: cfg.max_ring_size,
        seed: cfg.seed,
        expect: cfg.expect.map(|p| match p {
            Polarity::Refuted => "refuted".into(),
            Polarity::NotRefuted => "not-refuted".into(),
        }),
        entries: Vec::new(),
    }
}

/// Builds a ring and reports its structure. A failed axiom audit fails the
/// roll-up.
pub fn cmd_build(cfg: &RunConfig) -> Result<Report> {
    let limits = Limits::with_max_ring_size(cfg.max_ring_size);
    let ring = load_ring(&cfg.ring, &cfg.base_dir, &limits, cfg.window)?;
    let summary = loaded_summary(&ring, cfg);
    let ok = !matches!(summary.axioms, Some(AxiomOutcome::Violated { .. }));
    let mut report = Report::new("build", echo(cfg));
    report.ring = Some(summary);
    report.rollup = Rollup::of([Status::of(ok)]);
    Ok(report)
}

fn decide(ring: &LoadedRing, p: Property, cfg: &RunConfig) -> Result<Verdict> {
    let search = SearchLimits::default();
    match ring {
        LoadedRing::Finite(r) => check(r, p, cfg.max_degree, &search),
        LoadedRing::Truncated(v) => {
            let window = cfg.window.unwrap_or(v.max_len());
            check_on_truncated(v, p, TruncatedSettings::new(cfg.max_degree, window), &search)
        }
    }
}

/// Runs the selected deciders. With an expectation, each verdict passes iff
/// its polarity matches.
pub fn cmd_check(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let limits = Limits::with_max_ring_size(cfg.max_ring_size);
    let ring = load_ring(&cfg.ring, &cfg.base_dir, &limits, cfg.window)?;
    let properties = if cfg.properties.is_empty() {
        vec![Property::RightCentralMccoy]
    } else {
        cfg.properties.clone()
    };
    let verdicts = properties
        .iter()
        .map(|&p| decide(&ring, p, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut report = Report::new("check", ConfigEcho { properties, ..echo(cfg) });
    report.ring = Some(loaded_summary(&ring, cfg));
    report.rollup = Rollup::of(
        verdicts
            .iter()
            .map(|v| Status::of(cfg.expect.is_none_or(|e| e == v.polarity))),
    );
    report.verdicts = verdicts;
    Ok(report)
}

/// Runs the suite; an empty selection means every entry.
pub fn cmd_paper_verify(selection: &[String], seed: u64) -> Result<Report> {
    let cx = SuiteContext {
        seed,
        ..Default::default()
    };
    let entries = run_suite(selection, &cx)?;
    let mut report = Report::new(
        "paper-verify",
        ConfigEcho {
            seed,
            max_ring_size: cx.limits.max_ring_size,
            entries: selection.to_vec(),
            ..Default::default()
        },
    );
    report.rollup = Rollup::of(entries.iter().map(|e| e.status));
    report.entries = entries;
    report.traceability = traceability();
    Ok(report)
}

/// Checks every member of a family. Rings that fail to build abort the
/// search.
pub fn cmd_search(family: &str, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let limits = Limits::with_max_ring_size(cfg.max_ring_size);
    let properties = if cfg.properties.is_empty() {
        vec![
            Property::RightMccoy,
            Property::RightCentralMccoy,
            Property::LeftMccoy,
            Property::LeftCentralMccoy,
        ]
    } else {
        cfg.properties.clone()
    };
    let mut rows = Vec::new();
    for expr in expand_family(family)? {
        let ring = match load_ring(&expr, &cfg.base_dir, &limits, None)? {
            LoadedRing::Finite(r) => r,
            LoadedRing::Truncated(_) => return Err(Error::usage(format!("{expr} is not a finite ring"))),
        };
        let verdicts = properties
            .iter()
            .map(|&p| {
                check(&ring, p, cfg.max_degree, &SearchLimits::default()).map(|v| SearchVerdict {
                    property: p,
                    polarity: v.polarity,
                    summary: v.summary(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(SearchRow {
            ring: expr,
            label: ring.label().to_string(),
            size: ring.size() as u64,
            fingerprint: ring.fingerprint().to_string(),
            separators: separators(&verdicts),
            verdicts,
        });
    }
    let mut report = Report::new(
        "search",
        ConfigEcho {
            ring: Some(family.to_string()),
            properties,
            ..echo(cfg)
        },
    );
    report.rollup = Rollup::of(rows.iter().map(|_| Status::Pass));
    report.search = rows;
    Ok(report)
}
