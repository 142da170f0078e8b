//! Family expansion and the per-ring verdict table of `search`.
//!
//! A family is a ring expression with brace groups: `{a..b}` for an integer
//! range and `{e1|e2|...}` for alternatives, e.g. `V({2..3}, {F2|Z4})`.
//! `{}` and the empty string are the empty family.

use mccoy_core::properties::{Polarity, Property};
use mccoy_core::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchVerdict {
    pub property: Property,
    pub polarity: Polarity,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRow {
    pub ring: String,
    pub label: String,
    pub size: u64,
    pub fingerprint: String,
    pub verdicts: Vec<SearchVerdict>,
    /// Sides on which McCoy is refuted but Central McCoy is not.
    pub separators: Vec<String>,
}

/// Expands every brace group, leftmost first.
pub fn expand_family(family: &str) -> Result<Vec<String>> {
    let family = family.trim();
    if family.is_empty() {
        return Ok(Vec::new());
    }
    let Some(open) = family.find('{') else {
        return Ok(vec![family.to_string()]);
    };
    let mut depth = 0usize;
    let mut close = None;
    for (i, ch) in family[open..].char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    close = Some(open + i);
                    break;
                }
            }
            _ => {}
        }
    }
    let close = close.ok_or_else(|| Error::Parse {
        line: 1,
        col: family[..open].chars().count() + 1,
        msg: "unclosed `{`".into(),
    })?;
    let (head, body, tail) = (&family[..open], &family[open + 1..close], &family[close + 1..]);
    let mut out = Vec::new();
    for choice in alternatives(body)? {
        for rest in expand_family(&format!("{head}{choice}{tail}"))? {
            out.push(rest);
        }
    }
    Ok(out)
}

fn alternatives(body: &str) -> Result<Vec<String>> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((a, b)) = body.split_once("..") {
        if let (Ok(a), Ok(b)) = (a.trim().parse::<u64>(), b.trim().parse::<u64>()) {
            return Ok((a..=b).map(|k| k.to_string()).collect());
        }
    }
    // split on `|` outside nested braces
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, ch) in body.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            '|' if depth == 0 => {
                parts.push(body[start..i].trim().to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(body[start..].trim().to_string());
    Ok(parts)
}

/// Separator sides given the verdicts of one ring.
pub fn separators(verdicts: &[SearchVerdict]) -> Vec<String> {
    let get = |p: Property| verdicts.iter().find(|v| v.property == p).map(|v| v.polarity);
    [
        ("right", Property::RightMccoy, Property::RightCentralMccoy),
        ("left", Property::LeftMccoy, Property::LeftCentralMccoy),
    ]
    .into_iter()
    .filter(|&(_, m, c)| get(m) == Some(Polarity::Refuted) && get(c) == Some(Polarity::NotRefuted))
    .map(|(side, _, _)| side.to_string())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_alternatives() {
        assert_eq!(expand_family("V({2..3}, F2)").unwrap(), ["V(2, F2)", "V(3, F2)"]);
        assert_eq!(
            expand_family("{F2|T(2, {F2|Z4})}").unwrap(),
            ["F2", "T(2, F2)", "T(2, Z4)"]
        );
        assert_eq!(
            expand_family("D({2..3}, {F2|F3})").unwrap(),
            ["D(2, F2)", "D(2, F3)", "D(3, F2)", "D(3, F3)"]
        );
        assert!(expand_family("{}").unwrap().is_empty());
        assert!(expand_family("").unwrap().is_empty());
        assert!(matches!(expand_family("{F2|Z4"), Err(Error::Parse { col: 1, .. })));
    }
}
