use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpalg::poly::{Word, WordPoly};
use crate::fpalg::presentation::Presentation;
use crate::linalg::inv_mod;

/// Critical-pair iterations before completion gives up.
pub const DEFAULT_COMPLETION_CAP: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Completion {
    /// Every overlap resolves; normal forms are unique.
    Complete,
    /// The iteration cap was hit; normal forms are best effort.
    Capped,
}

/// `lhs -> rhs`, every word of `rhs` strictly below `lhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: WordPoly,
}

#[derive(Debug, Clone)]
pub struct RewriteSystem {
    characteristic: u32,
    generators: Vec<String>,
    rules: Vec<Rule>,
    status: Completion,
    iterations: usize,
}

impl RewriteSystem {
    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn status(&self) -> Completion {
        self.status
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn longest_lhs(&self) -> usize {
        self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0)
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.rules.iter().all(|r| w.find(&r.lhs).is_none())
    }

    /// Irreducible form; unique when the system is complete.
    pub fn normal_form(&self, expr: &WordPoly) -> WordPoly {
        reduce(expr, &self.rules, self.characteristic)
    }

    /// Normal form of a product of normal forms.
    pub fn mul(&self, a: &WordPoly, b: &WordPoly) -> WordPoly {
        self.normal_form(&a.mul(b, self.characteristic))
    }

    pub fn render(&self, e: &WordPoly) -> String {
        e.render(&self.generators, "")
    }

    /// Checks that every overlap of leading words reduces to zero.
    pub fn is_locally_confluent(&self) -> bool {
        let p = self.characteristic;
        for a in &self.rules {
            for b in &self.rules {
                for s in overlaps(a, b, p) {
                    if !self.normal_form(&s).is_zero() {
                        return false;
                    }
                }
                if a.lhs != b.lhs && b.lhs.find(&a.lhs).is_some() {
                    return false;
                }
            }
        }
        true
    }
}

fn reduce(expr: &WordPoly, rules: &[Rule], p: u32) -> WordPoly {
    let mut work = expr.clone();
    let mut done = WordPoly::zero();
    while let Some((w, c)) = work.leading().map(|(w, c)| (w.clone(), c)) {
        let hit = rules
            .iter()
            .find_map(|r| w.find(&r.lhs).map(|pos| (r, pos)));
        work.remove(&w);
        match hit {
            Some((rule, pos)) => {
                let left = Word(w.0[..pos].to_vec());
                let right = Word(w.0[pos + rule.lhs.len()..].to_vec());
                work.add_scaled(&rule.rhs.sandwich(&left, &right, p), c, p);
            }
            None => done.add_term(w, c, p),
        }
    }
    done
}

/// S-polynomials of proper overlaps `lhs_a = u·o`, `lhs_b = o·v`.
fn overlaps(a: &Rule, b: &Rule, p: u32) -> Vec<WordPoly> {
    let (la, lb) = (a.lhs.len(), b.lhs.len());
    let mut out = Vec::new();
    for k in 1..la.min(lb) {
        if a.lhs.0[la - k..] == b.lhs.0[..k] {
            let u = Word(a.lhs.0[..la - k].to_vec());
            let v = Word(b.lhs.0[k..].to_vec());
            let s = a
                .rhs
                .sandwich(&Word::empty(), &v, p)
                .sub(&b.rhs.sandwich(&u, &Word::empty(), p), p);
            out.push(s);
        }
    }
    out
}

fn orient(poly: WordPoly, p: u32, generators: &[String]) -> Result<Option<Rule>> {
    let Some((lead, c)) = poly.leading().map(|(w, c)| (w.clone(), c)) else {
        return Ok(None);
    };
    if lead.is_empty() {
        return Err(Error::Inconsistent(format!(
            "relations force {c} = 0 in characteristic {p} (via {})",
            poly.render(generators, "*")
        )));
    }
    let inv = inv_mod(c, p);
    let mut rhs = poly.scaled(p - inv, p);
    rhs.remove(&lead);
    Ok(Some(Rule { lhs: lead, rhs }))
}

/// Orients the relations and completes them by resolving critical pairs.
pub fn complete_rewrite(pres: &Presentation, cap: usize) -> Result<RewriteSystem> {
    let p = pres.characteristic;
    let gens = &pres.generators;
    let mut rules: Vec<(usize, Rule)> = Vec::new();
    let mut next_id = 0usize;
    let mut pending: VecDeque<WordPoly> = pres
        .relations
        .iter()
        .map(|(l, r)| l.sub(r, p))
        .collect();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    let mut iterations = 0usize;
    let mut status = Completion::Complete;

    loop {
        while let Some(poly) = pending.pop_front() {
            let current: Vec<Rule> = rules.iter().map(|(_, r)| r.clone()).collect();
            let reduced = reduce(&poly, &current, p);
            let Some(rule) = orient(reduced, p, gens)? else {
                continue;
            };
            // rules whose leading word contains the new one are re-queued
            let (stale, keep): (Vec<_>, Vec<_>) = rules
                .into_iter()
                .partition(|(_, r)| r.lhs.find(&rule.lhs).is_some());
            rules = keep;
            for (_, r) in stale {
                let mut back = r.rhs.clone();
                back.add_term(r.lhs.clone(), p - 1, p);
                pending.push_back(back);
            }
            let id = next_id;
            next_id += 1;
            for (other, _) in &rules {
                pairs.push_back((id, *other));
                pairs.push_back((*other, id));
            }
            pairs.push_back((id, id));
            rules.push((id, rule));
        }
        let Some((ia, ib)) = pairs.pop_front() else {
            break;
        };
        let (Some(a), Some(b)) = (
            rules.iter().find(|(i, _)| *i == ia).map(|(_, r)| r.clone()),
            rules.iter().find(|(i, _)| *i == ib).map(|(_, r)| r.clone()),
        ) else {
            continue;
        };
        if iterations >= cap {
            status = Completion::Capped;
            break;
        }
        iterations += 1;
        pending.extend(overlaps(&a, &b, p));
    }

    // inter-reduce right-hand sides and fix a canonical rule order
    let lhs_only: Vec<Rule> = rules.iter().map(|(_, r)| r.clone()).collect();
    let mut final_rules: Vec<Rule> = lhs_only
        .iter()
        .map(|r| Rule {
            lhs: r.lhs.clone(),
            rhs: reduce(&r.rhs, &lhs_only, p),
        })
        .collect();
    final_rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    Ok(RewriteSystem {
        characteristic: p,
        generators: gens.clone(),
        rules: final_rules,
        status,
        iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpalg::parse_presentation;

    fn ex22() -> RewriteSystem {
        let p = parse_presentation(
            "field F2\ngenerators x y z\nrelations\nx*x = y*x = x\nz*z = 0\ny*y = x*y = y\nz*x = x*z = y*z = z*y = z",
        )
        .unwrap();
        complete_rewrite(&p, DEFAULT_COMPLETION_CAP).unwrap()
    }

    #[test]
    fn example_two_two_completes_to_length_two_rules() {
        let rs = ex22();
        assert_eq!(rs.status(), Completion::Complete);
        assert!(rs.is_locally_confluent());
        assert_eq!(rs.rules().len(), 9);
        assert!(rs.rules().iter().all(|r| r.lhs.len() == 2));
        let pres = Presentation::free(2, &["x", "y", "z"]);
        let yx = pres.parse_expr("y*x").unwrap();
        assert_eq!(rs.render(&rs.normal_form(&yx)), "x");
        assert!(rs.normal_form(&WordPoly::zero()).is_zero());
    }

    #[test]
    fn free_algebra_has_no_rules() {
        let rs = complete_rewrite(&Presentation::free(3, &["a", "b"]), 10).unwrap();
        assert_eq!(rs.status(), Completion::Complete);
        assert!(rs.rules().is_empty());
    }

    #[test]
    fn inconsistent_presentations_are_rejected() {
        // x = 1 and x = 0 together force 1 = 0
        let p = parse_presentation("field F2\ngenerators x\nrelations x = 1, x = 0").unwrap();
        assert!(matches!(complete_rewrite(&p, 100), Err(Error::Inconsistent(_))));
        let p = parse_presentation("field F3\ngenerators x\nrelations 2 = 0").unwrap();
        assert!(matches!(complete_rewrite(&p, 100), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn completion_adds_missing_consequences() {
        // xy = x and yx = y give x^2 = x by the overlap on xyx
        let p = parse_presentation("field F2\ngenerators x y\nrelations x*y = x, y*x = y").unwrap();
        let rs = complete_rewrite(&p, 100).unwrap();
        assert_eq!(rs.status(), Completion::Complete);
        assert!(rs.is_locally_confluent());
        assert!(rs.rules().iter().any(|r| r.lhs == Word(vec![0, 0])));
    }

    #[test]
    fn cap_is_reported() {
        // aba = bab style braid relation does not finish under deglex quickly
        let p = parse_presentation("field F2\ngenerators a b\nrelations a*b*a = b*a*b").unwrap();
        let rs = complete_rewrite(&p, 3).unwrap();
        assert_eq!(rs.status(), Completion::Capped);
        assert_eq!(rs.iterations(), 3);
    }
}
