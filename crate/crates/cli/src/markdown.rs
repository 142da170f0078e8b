//! Markdown view of a [`Report`]; the JSON form stays authoritative.

use std::fmt::Write;

use mccoy_core::properties::{Certificate, Transcript, Verdict};

use crate::report::{Report, Status};

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn verdict_lines(out: &mut String, v: &Verdict) {
    let _ = writeln!(out, "- **{}** on `{}`: {}", v.property, cell(&v.ring), v.summary());
    match &v.certificate {
        Some(Certificate::Pair { f, g, transcript }) => {
            let _ = writeln!(out, "  - f = `{}` (index {})", f.form, f.index);
            let _ = writeln!(out, "  - g = `{}` (index {})", g.form, g.index);
            match transcript {
                Transcript::Exhaustive { failures } => {
                    let _ = writeln!(out, "  - {} nonzero candidates fail", failures.len());
                }
                Transcript::Linear {
                    window_words,
                    constraints,
                    rank,
                    witness_dim,
                } => {
                    let _ = writeln!(
                        out,
                        "  - linear system: {window_words} unknowns, {constraints} constraints, rank {rank}, witness dimension {witness_dim}"
                    );
                }
                Transcript::Product { i, j, product, .. } => {
                    let _ = writeln!(out, "  - a_{i} b_{j} = `{}`", product.form);
                }
            }
        }
        Some(Certificate::Elements { law, elements }) => {
            let forms: Vec<&str> = elements.iter().map(|e| e.form.as_str()).collect();
            let _ = writeln!(out, "  - {law}: `{}`", forms.join("`, `"));
        }
        None => {}
    }
    if let Some(w) = &v.universal_witness {
        let _ = writeln!(out, "  - universal witness `{}`", w.form);
    }
}

pub fn render(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} {} report ({})\n",
        report.tool,
        report.command,
        status(report.rollup.status)
    );
    let _ = writeln!(
        out,
        "{} of {} passed. Schema {}, tool {}.\n",
        report.rollup.passed, report.rollup.total, report.schema_version, report.tool_version
    );
    if let Some(r) = &report.ring {
        let _ = writeln!(out, "## Ring `{}`\n", cell(&r.label));
        let field = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(out, "| size | center | idempotents | fingerprint |");
        let _ = writeln!(out, "|---|---|---|---|");
        let _ = writeln!(
            out,
            "| {} | {} | {} | `{}` |\n",
            field(r.size),
            field(r.center_size),
            field(r.idempotents),
            r.fingerprint.as_deref().unwrap_or("-")
        );
        if let Some(b) = &r.basis {
            let _ = writeln!(out, "Basis: {}\n", b.join(", "));
        }
    }
    if !report.verdicts.is_empty() {
        let _ = writeln!(out, "## Verdicts\n");
        for v in &report.verdicts {
            verdict_lines(&mut out, v);
        }
        out.push('\n');
    }
    for e in &report.entries {
        let _ = writeln!(out, "## {} ({})\n\n{}\n", e.key, status(e.status), e.title);
        let _ = writeln!(out, "| check | expected | observed | status |");
        let _ = writeln!(out, "|---|---|---|---|");
        for c in &e.checks {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                cell(&c.name),
                cell(&c.expected),
                cell(&c.observed),
                status(c.status)
            );
        }
        out.push('\n');
        for a in &e.audits {
            let _ = writeln!(
                out,
                "- audit `{}`: {} assertions, {} violations",
                cell(&a.ring),
                a.assertions_checked,
                a.violations.len()
            );
        }
        for n in &e.notes {
            let _ = writeln!(out, "> {n}\n");
        }
    }
    if !report.traceability.is_empty() {
        let _ = writeln!(out, "## Traceability\n");
        let _ = writeln!(out, "| anchor | entries | coverage |");
        let _ = writeln!(out, "|---|---|---|");
        for t in &report.traceability {
            let entries = if t.in_scope {
                t.entries.join("; ")
            } else {
                "out of scope".into()
            };
            let _ = writeln!(out, "| {} | {} | {} |", t.anchor, cell(&entries), cell(&t.coverage));
        }
        out.push('\n');
    }
    if !report.search.is_empty() {
        let _ = writeln!(out, "## Search\n");
        let _ = writeln!(out, "| ring | size | verdicts | separator |");
        let _ = writeln!(out, "|---|---|---|---|");
        for row in &report.search {
            let verdicts: Vec<String> = row
                .verdicts
                .iter()
                .map(|v| format!("{}: {}", v.property, v.summary))
                .collect();
            let _ = writeln!(
                out,
                "| `{}` | {} | {} | {} |",
                cell(&row.ring),
                row.size,
                cell(&verdicts.join("; ")),
                row.separators.join(", ")
            );
        }
    }
    out
}
