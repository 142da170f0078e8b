use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A word in the generators (indices into the declared generator list).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u8) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Position of the leftmost occurrence of `pattern` as a factor.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.len() > self.len() {
            return None;
        }
        (0..=self.len() - pattern.len()).find(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
    }

    pub fn render(&self, names: &[String], sep: &str) -> String {
        if self.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&g| names[g as usize].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// Length first, then lexicographic in generator order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `F_p`-linear combination of words; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WordPoly {
    terms: BTreeMap<Word, u32>,
}

impl WordPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(word: Word, coeff: u32, p: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(word, coeff, p);
        out
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), 1, u32::MAX)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, u32)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &Word) -> u32 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, u32)> {
        self.terms.iter().next_back().map(|(w, &c)| (w, c))
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, word: Word, coeff: u32, p: u32) {
        let c = coeff % p;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (*o.get() + c) % p;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn remove(&mut self, w: &Word) -> Option<u32> {
        self.terms.remove(w)
    }

    pub fn add_scaled(&mut self, other: &WordPoly, coeff: u32, p: u32) {
        for (w, c) in other.terms() {
            self.add_term(w.clone(), c * (coeff % p), p);
        }
    }

    pub fn scaled(&self, coeff: u32, p: u32) -> WordPoly {
        let mut out = WordPoly::zero();
        out.add_scaled(self, coeff, p);
        out
    }

    pub fn sub(&self, other: &WordPoly, p: u32) -> WordPoly {
        let mut out = self.clone();
        out.add_scaled(other, p - 1, p);
        out
    }

    /// `left * self * right` for words.
    pub fn sandwich(&self, left: &Word, right: &Word, p: u32) -> WordPoly {
        let mut out = WordPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(left.concat(w).concat(right), c, p);
        }
        out
    }

    /// Product in the free algebra.
    pub fn mul(&self, other: &WordPoly, p: u32) -> WordPoly {
        let mut out = WordPoly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.concat(b), ca * cb, p);
            }
        }
        out
    }

    pub fn render(&self, names: &[String], sep: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|(w, c)| match (c, w.is_empty()) {
                (1, _) => w.render(names, sep),
                (c, true) => c.to_string(),
                (c, false) => format!("{c}{sep}{}", w.render(names, sep)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<(Word, u32)> for WordPoly {
    /// Coefficients must already be reduced mod the characteristic.
    fn from_iter<I: IntoIterator<Item = (Word, u32)>>(iter: I) -> Self {
        Self {
            terms: iter.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        let x = Word(vec![0]);
        let y = Word(vec![1]);
        let xy = Word(vec![0, 1]);
        let yx = Word(vec![1, 0]);
        assert!(Word::empty() < x && x < y && y < xy && xy < yx);
        assert_eq!(Word(vec![0, 1, 0, 1]).find(&Word(vec![1, 0])), Some(1));
    }

    #[test]
    fn arithmetic_mod_p() {
        let p = 3;
        let mut a = WordPoly::monomial(Word(vec![0]), 2, p);
        a.add_term(Word(vec![0]), 1, p);
        assert!(a.is_zero());
        let x = WordPoly::monomial(Word(vec![0]), 1, p);
        let sq = x.mul(&x, p);
        assert_eq!(sq.leading(), Some((&Word(vec![0, 0]), 1)));
        assert_eq!(x.sub(&x, p), WordPoly::zero());
    }
}
