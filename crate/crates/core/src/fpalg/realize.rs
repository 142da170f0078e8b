use std::collections::HashMap;
use std::sync::Arc;

use crate::constructions::Limits;
use crate::error::{Error, Result};
use crate::fpalg::poly::{Word, WordPoly};
use crate::fpalg::rewrite::{Completion, RewriteSystem};
use crate::ring::{AlgebraBasis, FiniteRing, RingOps};

/// Irreducible words of each length, grown one letter at a time. Stops at the
/// first empty level or after `max_len`.
fn irreducible_levels(rs: &RewriteSystem, max_len: usize) -> Vec<Vec<Word>> {
    let ngens = rs.generators().len() as u8;
    let mut levels = vec![vec![Word::empty()]];
    for _ in 0..max_len {
        let prev = levels.last().unwrap();
        let mut next: Vec<Word> = prev
            .iter()
            .flat_map(|w| (0..ngens).map(move |g| w.concat(&Word::letter(g))))
            .filter(|w| rs.is_irreducible(w))
            .collect();
        next.sort();
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

/// A finite-dimensional algebra realized as a ring; element index is
/// `sum_k c_k p^k` over the basis words in length-lex order.
pub struct RealizedAlgebra {
    pub ring: FiniteRing,
    pub words: Vec<Word>,
}

struct AlgebraOps {
    p: u32,
    generators: Vec<String>,
    words: Vec<Word>,
    /// `table[i * dim + j]` = coordinates of `words[i] * words[j]`
    table: Vec<Vec<u32>>,
}

impl AlgebraOps {
    fn dim(&self) -> usize {
        self.words.len()
    }

    fn coords(&self, mut index: u32) -> Vec<u32> {
        (0..self.dim())
            .map(|_| {
                let d = index % self.p;
                index /= self.p;
                d
            })
            .collect()
    }

    fn index(&self, coords: &[u32]) -> u32 {
        coords.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }
}

impl RingOps for AlgebraOps {
    fn add(&self, a: u32, b: u32) -> u32 {
        let c: Vec<u32> = self
            .coords(a)
            .iter()
            .zip(self.coords(b))
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        self.index(&c)
    }

    fn neg(&self, a: u32) -> u32 {
        let c: Vec<u32> = self.coords(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.index(&c)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let n = self.dim();
        let mut out = vec![0u32; n];
        for (i, &x) in ca.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &y) in cb.iter().enumerate().filter(|(_, &y)| y != 0) {
                let xy = x * y % self.p;
                for (o, &t) in out.iter_mut().zip(&self.table[i * n + j]) {
                    *o = (*o + xy * t) % self.p;
                }
            }
        }
        self.index(&out)
    }

    fn describe(&self, a: u32) -> String {
        let poly: WordPoly = self
            .coords(a)
            .into_iter()
            .zip(&self.words)
            .map(|(c, w)| (w.clone(), c))
            .collect();
        poly.render(&self.generators, "")
    }
}

/// Builds the finite ring spanned by the irreducible words, if that span is
/// finite. Closure is probed level by level up to twice the longest rule.
pub fn realize_finite(rs: &RewriteSystem, limits: &Limits) -> Result<RealizedAlgebra> {
    if rs.status() == Completion::Capped {
        return Err(Error::usage(
            "rewrite system is CAPPED; normal forms are not unique, use a truncated view",
        ));
    }
    let probe = (2 * rs.longest_lhs()).max(2);
    let levels = irreducible_levels(rs, probe);
    if levels.len() > probe {
        return Err(Error::NotFiniteDimensional(format!(
            "irreducible words still appear at length {probe}; use a truncated view"
        )));
    }
    let words: Vec<Word> = levels.into_iter().flatten().collect();
    let p = rs.characteristic();
    let dim = words.len();
    let label = format!("⟨{}⟩/F{}", rs.generators().join(","), p);
    let size = limits.check_power(&label, p as u64, dim as u32)?;
    let position: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut table = Vec::with_capacity(dim * dim);
    for a in &words {
        for b in &words {
            let nf = rs.normal_form(&WordPoly::monomial(a.concat(b), 1, p));
            let mut coords = vec![0u32; dim];
            for (w, c) in nf.terms() {
                coords[position[w]] = c;
            }
            table.push(coords);
        }
    }
    let names: Vec<String> = words.iter().map(|w| w.render(rs.generators(), "")).collect();
    let ops = AlgebraOps {
        p,
        generators: rs.generators().to_vec(),
        words: words.clone(),
        table,
    };
    // the empty word is first, so 1 has index 1
    let ring = FiniteRing::from_ops(size, 1, label, Some(AlgebraBasis::new(p, names)), Arc::new(ops))?;
    Ok(RealizedAlgebra { ring, words })
}

impl RealizedAlgebra {
    /// Index of a normal-form element.
    pub fn element_of(&self, rs: &RewriteSystem, e: &WordPoly) -> u32 {
        let nf = rs.normal_form(e);
        let p = rs.characteristic();
        let mut coords = vec![0u32; self.words.len()];
        for (w, c) in nf.terms() {
            let k = self
                .words
                .iter()
                .position(|b| b == w)
                .expect("normal forms lie in the basis");
            coords[k] = c;
        }
        coords.iter().rev().fold(0, |acc, &c| acc * p + c)
    }
}

/// Product inside a word-length window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowProduct {
    pub value: WordPoly,
    /// Some word of the exact normal form is longer than the window.
    pub out_of_window: bool,
}

/// The finite `F_p`-span of irreducible words of length at most `max_len`.
pub struct TruncatedAlgebra {
    rs: RewriteSystem,
    max_len: usize,
    words: Vec<Word>,
    position: HashMap<Word, usize>,
}

/// Refuse windows with more basis words than this.
pub const MAX_WINDOW_WORDS: usize = 4096;

impl TruncatedAlgebra {
    pub fn new(rs: &RewriteSystem, max_len: usize) -> Result<Self> {
        let levels = irreducible_levels(rs, max_len);
        let words: Vec<Word> = levels.into_iter().flatten().collect();
        if words.len() > MAX_WINDOW_WORDS {
            return Err(Error::capacity(
                format!("window of length {max_len}"),
                words.len() as u128,
                MAX_WINDOW_WORDS as u128,
            ));
        }
        let position = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        Ok(Self {
            rs: rs.clone(),
            max_len,
            words,
            position,
        })
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.rs
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn characteristic(&self) -> u32 {
        self.rs.characteristic()
    }

    /// Window basis in length-lex order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.position.get(w).copied()
    }

    pub fn in_window(&self, e: &WordPoly) -> bool {
        e.terms().all(|(w, _)| w.len() <= self.max_len)
    }

    pub fn mul(&self, a: &WordPoly, b: &WordPoly) -> WindowProduct {
        let value = self.rs.mul(a, b);
        let out_of_window = !self.in_window(&value);
        WindowProduct {
            value,
            out_of_window,
        }
    }

    pub fn to_coords(&self, e: &WordPoly) -> Option<Vec<u32>> {
        let mut coords = vec![0u32; self.dim()];
        for (w, c) in e.terms() {
            coords[self.position(w)?] = c;
        }
        Some(coords)
    }

    pub fn from_coords(&self, coords: &[u32]) -> WordPoly {
        coords
            .iter()
            .zip(&self.words)
            .map(|(&c, w)| (w.clone(), c))
            .collect()
    }

    pub fn render(&self, e: &WordPoly) -> String {
        self.rs.render(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpalg::{complete_rewrite, parse_presentation, Presentation, DEFAULT_COMPLETION_CAP};
    use crate::ring::RingView;

    #[test]
    fn free_algebra_is_not_finite() {
        let rs = complete_rewrite(&Presentation::free(2, &["t"]), 10).unwrap();
        let err = realize_finite(&rs, &Limits::default()).err().unwrap();
        assert!(matches!(err, Error::NotFiniteDimensional(_)));
    }

    #[test]
    fn field_with_four_elements() {
        let p = parse_presentation("field F2\ngenerators w\nrelations w*w = w + 1").unwrap();
        let rs = complete_rewrite(&p, DEFAULT_COMPLETION_CAP).unwrap();
        let alg = realize_finite(&rs, &Limits::default()).unwrap();
        let r = &alg.ring;
        assert_eq!(r.size(), 4);
        for a in 1..4 {
            assert!((1..4).any(|b| r.mul_idx(a, b) == 1));
        }
        r.verify_axioms(0).unwrap();
    }

    #[test]
    fn window_flags_long_products() {
        let rs = complete_rewrite(&Presentation::free(2, &["a"]), 10).unwrap();
        let w1 = TruncatedAlgebra::new(&rs, 1).unwrap();
        assert_eq!(w1.dim(), 2);
        let a = WordPoly::monomial(Word::letter(0), 1, 2);
        assert!(w1.mul(&a, &a).out_of_window);
        let w2 = TruncatedAlgebra::new(&rs, 2).unwrap();
        assert!(!w2.mul(&a, &a).out_of_window);
    }
}
