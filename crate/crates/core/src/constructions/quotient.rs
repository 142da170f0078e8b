use std::sync::Arc;

use crate::constructions::Limits;
use crate::error::{Error, Result};
use crate::ring::{AlgebraBasis, FiniteRing, RingOps, RingView};

/// `R[x]/(x^n)`: coefficient sequences `(a_0, .., a_{n-1})`, `a_0` least
/// significant, multiplied by truncated convolution.
pub struct TruncatedPolyOps {
    base: FiniteRing,
    n: usize,
}

impl TruncatedPolyOps {
    pub fn new(base: FiniteRing, n: usize) -> Self {
        Self { base, n }
    }

    pub fn decode(&self, mut index: u32) -> Vec<u32> {
        let q = self.base.size();
        (0..self.n)
            .map(|_| {
                let d = index % q;
                index /= q;
                d
            })
            .collect()
    }

    pub fn encode(&self, coeffs: &[u32]) -> u32 {
        let q = self.base.size();
        coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }
}

impl RingOps for TruncatedPolyOps {
    fn add(&self, a: u32, b: u32) -> u32 {
        let c: Vec<u32> = self
            .decode(a)
            .iter()
            .zip(self.decode(b))
            .map(|(&x, y)| self.base.add_idx(x, y))
            .collect();
        self.encode(&c)
    }

    fn neg(&self, a: u32) -> u32 {
        let c: Vec<u32> = self.decode(a).iter().map(|&x| self.base.neg_idx(x)).collect();
        self.encode(&c)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let r = &self.base;
        let c: Vec<u32> = (0..self.n)
            .map(|k| (0..=k).fold(0, |acc, i| r.add_idx(acc, r.mul_idx(ca[i], cb[k - i]))))
            .collect();
        self.encode(&c)
    }

    fn describe(&self, a: u32) -> String {
        let terms: Vec<String> = self
            .decode(a)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let coeff = self.base.describe(c);
                match k {
                    0 => coeff,
                    1 => format!("{coeff}·x"),
                    _ => format!("{coeff}·x^{k}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

pub fn quotient_poly(base: &FiniteRing, n: usize, limits: &Limits) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::usage("truncation degree must be at least 1"));
    }
    let label = format!("{}[x]/(x^{n})", base.label());
    let size = limits.check_power(&label, base.size() as u64, n as u32)?;
    let ops = TruncatedPolyOps::new(base.clone(), n);
    let mut one = vec![0u32; n];
    one[0] = base.one_index();
    let one = ops.encode(&one);
    let basis = base.basis().map(|b| {
        let mut names = Vec::new();
        for k in 0..n {
            let power = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            for name in &b.names {
                names.push(match (power.is_empty(), b.dim() == 1 && name == "1") {
                    (true, _) => name.clone(),
                    (false, true) => power.clone(),
                    (false, false) => format!("{power}·{name}"),
                });
            }
        }
        AlgebraBasis::new(b.characteristic, names)
    });
    FiniteRing::from_ops(size, one, label, basis, Arc::new(ops))
}

/// A validated two-sided ideal, members as ascending parent indices.
#[derive(Debug, Clone)]
pub struct IdealData {
    parent: FiniteRing,
    members: Vec<u32>,
}

impl IdealData {
    pub fn new(parent: &FiniteRing, members: &[u32]) -> Result<Self> {
        let n = parent.size();
        let mut mask = vec![false; n as usize];
        for &m in members {
            if m >= n {
                return Err(Error::OutOfRange {
                    index: m as u64,
                    size: n as u64,
                });
            }
            mask[m as usize] = true;
        }
        if !mask[0] {
            return Err(Error::usage("an ideal must contain zero"));
        }
        let set: Vec<u32> = (0..n).filter(|&a| mask[a as usize]).collect();
        for &a in &set {
            for &b in &set {
                if !mask[parent.add_idx(a, b) as usize] {
                    return Err(Error::usage(format!(
                        "not additively closed: {} + {}",
                        parent.describe(a),
                        parent.describe(b)
                    )));
                }
            }
            for r in 0..n {
                if !mask[parent.mul_idx(r, a) as usize] || !mask[parent.mul_idx(a, r) as usize] {
                    return Err(Error::usage(format!(
                        "not absorbing: {} times {}",
                        parent.describe(a),
                        parent.describe(r)
                    )));
                }
            }
        }
        Ok(Self {
            parent: parent.clone(),
            members: set,
        })
    }

    /// Smallest two-sided ideal containing `generators`.
    pub fn generated_by(parent: &FiniteRing, generators: &[u32]) -> Result<Self> {
        let n = parent.size();
        let mut mask = vec![false; n as usize];
        mask[0] = true;
        let mut queue: Vec<u32> = generators.to_vec();
        let mut members = vec![0u32];
        while let Some(x) = queue.pop() {
            if x >= n {
                return Err(Error::OutOfRange {
                    index: x as u64,
                    size: n as u64,
                });
            }
            if mask[x as usize] {
                continue;
            }
            mask[x as usize] = true;
            for &m in &members {
                queue.push(parent.add_idx(m, x));
            }
            for r in 0..n {
                queue.push(parent.mul_idx(r, x));
                queue.push(parent.mul_idx(x, r));
            }
            members.push(x);
        }
        Self::new(parent, &members)
    }

    pub fn parent(&self) -> &FiniteRing {
        &self.parent
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn is_proper(&self) -> bool {
        (self.members.len() as u32) < self.parent.size()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }
}

/// Coset ring; every coset is named by its least parent index.
struct QuotientOps {
    parent: FiniteRing,
    reps: Vec<u32>,
    coset: Vec<u32>,
}

impl QuotientOps {
    fn via(&self, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        self.coset[f(self.reps[a as usize], self.reps[b as usize]) as usize]
    }
}

impl RingOps for QuotientOps {
    fn add(&self, a: u32, b: u32) -> u32 {
        self.via(a, b, |x, y| self.parent.add_idx(x, y))
    }

    fn neg(&self, a: u32) -> u32 {
        self.coset[self.parent.neg_idx(self.reps[a as usize]) as usize]
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.via(a, b, |x, y| self.parent.mul_idx(x, y))
    }

    fn describe(&self, a: u32) -> String {
        format!("{} + I", self.parent.describe(self.reps[a as usize]))
    }
}

/// `R/I`, with the least-index coset representatives (ascending) returned
/// alongside the ring.
pub fn quotient_by_ideal(r: &FiniteRing, ideal: &IdealData) -> Result<(FiniteRing, Vec<u32>)> {
    if ideal.parent.id() != r.id() {
        return Err(Error::usage("ideal belongs to a different ring"));
    }
    let n = r.size();
    let mut rep_of = vec![u32::MAX; n as usize];
    for a in 0..n {
        if rep_of[a as usize] != u32::MAX {
            continue;
        }
        // a is the least element of its coset
        for &i in &ideal.members {
            rep_of[r.add_idx(a, i) as usize] = a;
        }
    }
    let mut reps: Vec<u32> = rep_of.clone();
    reps.sort_unstable();
    reps.dedup();
    let coset: Vec<u32> = rep_of
        .iter()
        .map(|rep| reps.binary_search(rep).unwrap() as u32)
        .collect();
    let one = coset[r.one_index() as usize];
    let size = reps.len() as u32;
    let ops = QuotientOps {
        parent: r.clone(),
        reps: reps.clone(),
        coset,
    };
    let label = format!("{}/I", r.label());
    Ok((FiniteRing::from_ops(size, one, label, None, Arc::new(ops))?, reps))
}

/// An ideal viewed as a ring without identity; local index `k` is the `k`-th
/// member in ascending parent order.
pub struct NonunitalRing {
    parent: FiniteRing,
    members: Vec<u32>,
    local: Vec<Option<u32>>,
}

impl NonunitalRing {
    pub fn parent(&self) -> &FiniteRing {
        &self.parent
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    fn lower(&self, a: u32) -> u32 {
        self.local[a as usize].expect("ideal is closed")
    }
}

impl RingView for NonunitalRing {
    fn size(&self) -> u32 {
        self.members.len() as u32
    }

    fn add_idx(&self, a: u32, b: u32) -> u32 {
        self.lower(
            self.parent
                .add_idx(self.members[a as usize], self.members[b as usize]),
        )
    }

    fn neg_idx(&self, a: u32) -> u32 {
        self.lower(self.parent.neg_idx(self.members[a as usize]))
    }

    fn mul_idx(&self, a: u32, b: u32) -> u32 {
        self.lower(
            self.parent
                .mul_idx(self.members[a as usize], self.members[b as usize]),
        )
    }

    fn one_idx(&self) -> Option<u32> {
        None
    }

    fn label(&self) -> String {
        format!("I ⊂ {}", self.parent.label())
    }

    fn describe(&self, a: u32) -> String {
        self.parent.describe(self.members[a as usize])
    }
}

pub fn ideal_as_nonunital(ideal: &IdealData) -> NonunitalRing {
    let mut local = vec![None; ideal.parent.size() as usize];
    for (k, &m) in ideal.members.iter().enumerate() {
        local[m as usize] = Some(k as u32);
    }
    NonunitalRing {
        parent: ideal.parent.clone(),
        members: ideal.members.clone(),
        local,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{iso_check, matrix_ring, prime_field, product, Family, MatrixShape};
    use crate::ring::verify_axioms;

    fn t2() -> FiniteRing {
        matrix_ring(
            &MatrixShape::new(Family::UpperTriangular, 2, prime_field(2).unwrap()),
            &Limits::default(),
        )
        .unwrap()
    }

    #[test]
    fn truncated_polynomials() {
        let lim = Limits::default();
        let f2 = prime_field(2).unwrap();
        let r1 = quotient_poly(&f2, 1, &lim).unwrap();
        assert!(iso_check(&f2, &r1, &[0, 1]));
        let r3 = quotient_poly(&f2, 3, &lim).unwrap();
        // x^2 * x = 0
        assert_eq!(r3.mul_idx(4, 2), 0);
        assert_eq!(r3.mul_idx(2, 2), 4);
        verify_axioms(&quotient_poly(&prime_field(3).unwrap(), 3, &lim).unwrap(), 0).unwrap();
    }

    #[test]
    fn quotient_by_zero_ideal_is_the_ring() {
        let r = t2();
        let zero = IdealData::new(&r, &[0]).unwrap();
        let (q, reps) = quotient_by_ideal(&r, &zero).unwrap();
        assert_eq!(reps, (0..8).collect::<Vec<_>>());
        assert!(iso_check(&r, &q, &(0..8).collect::<Vec<_>>()));
    }

    #[test]
    fn strictly_upper_ideal() {
        let r = t2();
        let ideal = IdealData::new(&r, &[0, 2]).unwrap();
        assert!(ideal.is_proper() && !ideal.is_zero());
        let (q, reps) = quotient_by_ideal(&r, &ideal).unwrap();
        assert_eq!(q.size(), 4);
        let f2 = prime_field(2).unwrap();
        let ff = product(&[f2.clone(), f2], &Limits::default()).unwrap();
        // coset rep (a11, 0, a22) -> (a11, a22)
        let map: Vec<u32> = reps.iter().map(|&m| diagonal_pair(m)).collect();
        assert!(iso_check(&q, &ff, &map));

        let view = ideal_as_nonunital(&ideal);
        assert_eq!(view.size(), 2);
        assert!(view.one_idx().is_none());
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(view.mul_idx(a, b), 0);
            }
        }
        verify_axioms(&view, 0).unwrap();
    }

    // T2(F2) digits are (a11, a12, a22); F2 x F2 index is a11 + 2*a22
    fn diagonal_pair(m: u32) -> u32 {
        (m & 1) + 2 * ((m >> 2) & 1)
    }

    #[test]
    fn non_ideals_are_rejected() {
        let r = t2();
        // {0, E11} is not closed under multiplication by E12
        assert!(IdealData::new(&r, &[0, 1]).is_err());
        assert!(IdealData::new(&r, &[2]).is_err());
        let generated = IdealData::generated_by(&r, &[2]).unwrap();
        assert_eq!(generated.members(), &[0, 2]);
        let whole = IdealData::generated_by(&r, &[r.one_index()]).unwrap();
        assert!(!whole.is_proper());
        assert_eq!(quotient_by_ideal(&r, &whole).unwrap().0.size(), 1);
    }
}
