//! The finite-ring abstraction.
//!
//! A ring of `n` elements is addressed by canonical indices `0..n`; index 0
//! is always the zero element. Rings up to [`TABLE_LIMIT`] elements keep full
//! operation tables, larger ones evaluate their structural operations on
//! demand. Either way a [`FiniteRing`] is immutable after construction and
//! can be shared freely between threads.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Rings with at most this many elements get materialized operation tables.
pub const TABLE_LIMIT: u32 = 1 << 12;

/// Full triple enumeration for axiom checks up to this size; sampling above.
pub const EXHAUSTIVE_AXIOM_LIMIT: u32 = 64;

const AXIOM_SAMPLES: usize = 200_000;
const FINGERPRINT_SAMPLES: usize = 1 << 14;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Structural definition of a ring's operations on canonical indices.
pub trait RingOps: Send + Sync {
    fn add(&self, a: u32, b: u32) -> u32;
    fn neg(&self, a: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;

    /// Human-readable form of an element (matrix entries, basis combination...).
    fn describe(&self, a: u32) -> String {
        a.to_string()
    }
}

/// Read-only access to a finite ring, with or without identity.
///
/// The deciders are written against this trait so that nonunital
/// substructures (ideals) can be checked with the same code as rings.
pub trait RingView: Sync {
    fn size(&self) -> u32;
    fn add_idx(&self, a: u32, b: u32) -> u32;
    fn neg_idx(&self, a: u32) -> u32;
    fn mul_idx(&self, a: u32, b: u32) -> u32;
    fn one_idx(&self) -> Option<u32>;
    fn label(&self) -> String;
    fn describe(&self, a: u32) -> String;

    fn basis(&self) -> Option<&AlgebraBasis> {
        None
    }

    fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg_idx(b))
    }

    fn commutes(&self, a: u32, b: u32) -> bool {
        self.mul_idx(a, b) == self.mul_idx(b, a)
    }
}

/// Present when the ring is an algebra over a prime field `F_p` whose element
/// indices are exactly the base-`p` digit vectors of basis coordinates:
/// `index = sum_k c_k * p^k`, with addition coordinatewise mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraBasis {
    pub characteristic: u32,
    pub names: Vec<String>,
}

impl AlgebraBasis {
    pub fn new(characteristic: u32, names: Vec<String>) -> Self {
        Self {
            characteristic,
            names,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Base-`p` digits of an element index, least significant first.
    pub fn digits(&self, mut index: u32) -> Vec<u32> {
        let p = self.characteristic;
        (0..self.dim())
            .map(|_| {
                let d = index % p;
                index /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.characteristic + d)
    }

    /// Index of the `k`-th basis element.
    pub fn unit(&self, k: usize) -> u32 {
        self.characteristic.pow(k as u32)
    }
}

/// Handle to an element of a specific ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    ring_id: u64,
    index: u32,
}

impl Element {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn ring_id(self) -> u64 {
        self.ring_id
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}@{}", self.index, self.ring_id)
    }
}

struct Tables {
    add: Vec<u16>,
    neg: Vec<u16>,
    mul: Vec<u16>,
}

struct RingInner {
    id: u64,
    size: u32,
    one: u32,
    label: String,
    basis: Option<AlgebraBasis>,
    structure: Arc<dyn RingOps>,
    tables: Option<Tables>,
    fingerprint: OnceLock<String>,
}

/// An immutable finite ring with identity.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingInner>);

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.0.label)
            .field("size", &self.0.size)
            .field("tabulated", &self.0.tables.is_some())
            .finish()
    }
}

impl FiniteRing {
    /// Wraps structural operations into a ring; tabulates when small enough.
    pub fn from_ops(
        size: u32,
        one: u32,
        label: impl Into<String>,
        basis: Option<AlgebraBasis>,
        structure: Arc<dyn RingOps>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::usage("a ring needs at least one element"));
        }
        if one >= size {
            return Err(Error::OutOfRange {
                index: one as u64,
                size: size as u64,
            });
        }
        let tables = (size <= TABLE_LIMIT).then(|| tabulate(size, structure.as_ref()));
        Ok(Self(Arc::new(RingInner {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            size,
            one,
            label: label.into(),
            basis,
            structure,
            tables,
            fingerprint: OnceLock::new(),
        })))
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn is_tabulated(&self) -> bool {
        self.0.tables.is_some()
    }

    pub fn structure(&self) -> &Arc<dyn RingOps> {
        &self.0.structure
    }

    pub fn zero(&self) -> Element {
        self.handle(0)
    }

    pub fn one(&self) -> Element {
        self.handle(self.0.one)
    }

    pub fn one_index(&self) -> u32 {
        self.0.one
    }

    pub fn element(&self, index: u32) -> Result<Element> {
        if index >= self.0.size {
            return Err(Error::OutOfRange {
                index: index as u64,
                size: self.0.size as u64,
            });
        }
        Ok(self.handle(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.0.size).map(|i| self.handle(i))
    }

    fn handle(&self, index: u32) -> Element {
        Element {
            ring_id: self.0.id,
            index,
        }
    }

    fn own(&self, a: Element) -> Result<u32> {
        if a.ring_id != self.0.id {
            return Err(Error::ForeignElement {
                expected: self.0.id,
                found: a.ring_id,
            });
        }
        Ok(a.index)
    }

    pub fn add(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.handle(self.add_idx(self.own(a)?, self.own(b)?)))
    }

    pub fn neg(&self, a: Element) -> Result<Element> {
        Ok(self.handle(self.neg_idx(self.own(a)?)))
    }

    pub fn sub(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.handle(self.sub_idx(self.own(a)?, self.own(b)?)))
    }

    pub fn mul(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.handle(self.mul_idx(self.own(a)?, self.own(b)?)))
    }

    /// Elements commuting with every element, in canonical order.
    pub fn center(&self) -> Vec<Element> {
        center_indices(self)
            .into_iter()
            .map(|i| self.handle(i))
            .collect()
    }

    pub fn is_central(&self, a: Element) -> Result<bool> {
        let a = self.own(a)?;
        Ok(is_central_idx(self, a))
    }

    pub fn idempotents(&self) -> Vec<Element> {
        idempotent_indices(self)
            .into_iter()
            .map(|i| self.handle(i))
            .collect()
    }

    pub fn central_idempotents(&self) -> Vec<Element> {
        idempotent_indices(self)
            .into_iter()
            .filter(|&e| is_central_idx(self, e))
            .map(|i| self.handle(i))
            .collect()
    }

    /// Neither a left nor a right zero divisor.
    pub fn is_regular(&self, a: Element) -> Result<bool> {
        Ok(is_regular_idx(self, self.own(a)?))
    }

    pub fn is_unit(&self, a: Element) -> Result<bool> {
        Ok(self.inverse_idx(self.own(a)?).is_some())
    }

    /// Two-sided inverse, if any.
    pub fn inverse_idx(&self, a: u32) -> Option<u32> {
        let one = self.0.one;
        (0..self.0.size).find(|&b| self.mul_idx(a, b) == one && self.mul_idx(b, a) == one)
    }

    /// SHA-256 over `(size, zero, one, add table, mul table)` as little-endian
    /// `u32` words. Untabulated rings hash the label and a fixed sample of
    /// products instead of full tables.
    pub fn fingerprint(&self) -> &str {
        self.0.fingerprint.get_or_init(|| self.compute_fingerprint())
    }

    fn compute_fingerprint(&self) -> String {
        let mut h = Sha256::new();
        let n = self.0.size;
        h.update(n.to_le_bytes());
        h.update(0u32.to_le_bytes());
        h.update(self.0.one.to_le_bytes());
        match &self.0.tables {
            Some(t) => {
                for &v in &t.add {
                    h.update((v as u32).to_le_bytes());
                }
                for &v in &t.mul {
                    h.update((v as u32).to_le_bytes());
                }
            }
            None => {
                h.update(self.0.label.as_bytes());
                let mut rng = ChaCha8Rng::seed_from_u64(0x6d63_636f_79);
                for _ in 0..FINGERPRINT_SAMPLES {
                    let a = rng.gen_range(0..n);
                    let b = rng.gen_range(0..n);
                    h.update(self.add_idx(a, b).to_le_bytes());
                    h.update(self.mul_idx(a, b).to_le_bytes());
                }
            }
        }
        hex::encode(h.finalize())
    }

    /// Ring-axiom audit; see [`verify_axioms`].
    pub fn verify_axioms(&self, seed: u64) -> std::result::Result<AxiomCheck, AxiomViolation> {
        verify_axioms(self, seed)
    }
}

impl RingView for FiniteRing {
    fn size(&self) -> u32 {
        self.0.size
    }

    #[inline]
    fn add_idx(&self, a: u32, b: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.add[(a * self.0.size + b) as usize] as u32,
            None => self.0.structure.add(a, b),
        }
    }

    #[inline]
    fn neg_idx(&self, a: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.neg[a as usize] as u32,
            None => self.0.structure.neg(a),
        }
    }

    #[inline]
    fn mul_idx(&self, a: u32, b: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.mul[(a * self.0.size + b) as usize] as u32,
            None => self.0.structure.mul(a, b),
        }
    }

    fn one_idx(&self) -> Option<u32> {
        Some(self.0.one)
    }

    fn label(&self) -> String {
        self.0.label.clone()
    }

    fn describe(&self, a: u32) -> String {
        self.0.structure.describe(a)
    }

    fn basis(&self) -> Option<&AlgebraBasis> {
        self.0.basis.as_ref()
    }
}

fn tabulate(size: u32, ops: &dyn RingOps) -> Tables {
    let n = size as usize;
    let rows = |f: &(dyn Fn(u32, u32) -> u32 + Sync)| -> Vec<u16> {
        let mut out = vec![0u16; n * n];
        out.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = f(a as u32, b as u32) as u16;
            }
        });
        out
    };
    let add = rows(&|a, b| ops.add(a, b));
    let mul = rows(&|a, b| ops.mul(a, b));
    let neg = (0..size).map(|a| ops.neg(a) as u16).collect();
    Tables { add, neg, mul }
}

/// Membership mask of the center.
pub fn center_mask<R: RingView + ?Sized>(r: &R) -> Vec<bool> {
    let n = r.size();
    let probes = commutation_probes(r);
    (0..n)
        .into_par_iter()
        .map(|c| probes.iter().all(|&a| r.commutes(a, c)))
        .collect()
}

pub fn center_indices<R: RingView + ?Sized>(r: &R) -> Vec<u32> {
    center_mask(r)
        .into_iter()
        .enumerate()
        .filter_map(|(i, c)| c.then_some(i as u32))
        .collect()
}

pub fn is_central_idx<R: RingView + ?Sized>(r: &R, a: u32) -> bool {
    commutation_probes(r).into_iter().all(|b| r.commutes(a, b))
}

/// Elements to test commutation against. Multiplication is biadditive, so an
/// additive generating set is exact; the basis is used only for rings too large
/// to tabulate.
fn commutation_probes<R: RingView + ?Sized>(r: &R) -> Vec<u32> {
    match r.basis() {
        Some(b) if r.size() > TABLE_LIMIT => (0..b.dim()).map(|k| b.unit(k)).collect(),
        _ => (0..r.size()).collect(),
    }
}

pub fn idempotent_indices<R: RingView + ?Sized>(r: &R) -> Vec<u32> {
    (0..r.size()).filter(|&e| r.mul_idx(e, e) == e).collect()
}

pub fn is_left_zero_divisor<R: RingView + ?Sized>(r: &R, a: u32) -> bool {
    (1..r.size()).any(|b| r.mul_idx(a, b) == 0)
}

pub fn is_right_zero_divisor<R: RingView + ?Sized>(r: &R, a: u32) -> bool {
    (1..r.size()).any(|b| r.mul_idx(b, a) == 0)
}

pub fn is_regular_idx<R: RingView + ?Sized>(r: &R, a: u32) -> bool {
    !is_left_zero_divisor(r, a) && !is_right_zero_divisor(r, a)
}

/// Outcome of a successful axiom audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub exhaustive: bool,
    pub triples_checked: u64,
}

/// A violated ring law together with the offending elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub elements: Vec<u32>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.elements)
    }
}

/// Checks the ring axioms. Pairwise laws are always exhaustive; triple laws
/// are exhaustive up to [`EXHAUSTIVE_AXIOM_LIMIT`] elements and sampled with
/// a seeded generator above that.
pub fn verify_axioms<R: RingView + ?Sized>(
    r: &R,
    seed: u64,
) -> std::result::Result<AxiomCheck, AxiomViolation> {
    let n = r.size();
    let fail = |law, elements: &[u32]| AxiomViolation {
        law,
        elements: elements.to_vec(),
    };
    for a in 0..n {
        if r.add_idx(a, 0) != a || r.add_idx(0, a) != a {
            return Err(fail("additive identity", &[a]));
        }
        if r.add_idx(a, r.neg_idx(a)) != 0 {
            return Err(fail("additive inverse", &[a]));
        }
        if let Some(one) = r.one_idx() {
            if r.mul_idx(a, one) != a || r.mul_idx(one, a) != a {
                return Err(fail("multiplicative identity", &[a]));
            }
        }
        for b in 0..n {
            if r.add_idx(a, b) != r.add_idx(b, a) {
                return Err(fail("additive commutativity", &[a, b]));
            }
        }
    }
    let check = |a: u32, b: u32, c: u32| -> std::result::Result<(), AxiomViolation> {
        if r.add_idx(r.add_idx(a, b), c) != r.add_idx(a, r.add_idx(b, c)) {
            return Err(fail("additive associativity", &[a, b, c]));
        }
        if r.mul_idx(r.mul_idx(a, b), c) != r.mul_idx(a, r.mul_idx(b, c)) {
            return Err(fail("multiplicative associativity", &[a, b, c]));
        }
        if r.mul_idx(a, r.add_idx(b, c)) != r.add_idx(r.mul_idx(a, b), r.mul_idx(a, c)) {
            return Err(fail("left distributivity", &[a, b, c]));
        }
        if r.mul_idx(r.add_idx(a, b), c) != r.add_idx(r.mul_idx(a, c), r.mul_idx(b, c)) {
            return Err(fail("right distributivity", &[a, b, c]));
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_AXIOM_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
        Ok(AxiomCheck {
            exhaustive: true,
            triples_checked: (n as u64).pow(3),
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..AXIOM_SAMPLES {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            check(a, b, c)?;
        }
        Ok(AxiomCheck {
            exhaustive: false,
            triples_checked: AXIOM_SAMPLES as u64,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, zmod, Family, Limits, MatrixShape};

    fn m2f2() -> FiniteRing {
        matrix_ring(&MatrixShape::new(Family::Full, 2, prime_field(2).unwrap()), &Limits::default()).unwrap()
    }

    fn t2f2() -> FiniteRing {
        matrix_ring(
            &MatrixShape::new(Family::UpperTriangular, 2, prime_field(2).unwrap()),
            &Limits::default(),
        )
        .unwrap()
    }

    #[test]
    fn add_examples() {
        let f2 = prime_field(2).unwrap();
        let one = f2.one();
        assert_eq!(f2.add(one, one).unwrap(), f2.zero());
        let z4 = zmod(4).unwrap();
        let two = z4.element(2).unwrap();
        let three = z4.element(3).unwrap();
        assert_eq!(z4.add(two, three).unwrap().index(), 1);
        for a in z4.elements() {
            assert_eq!(z4.add(a, z4.zero()).unwrap(), a);
        }
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let a = prime_field(2).unwrap();
        let b = prime_field(2).unwrap();
        let err = a.add(a.one(), b.one()).unwrap_err();
        assert!(matches!(err, Error::ForeignElement { .. }));
        assert!(a.element(2).is_err());
    }

    #[test]
    fn matrix_unit_products() {
        let m = m2f2();
        // row-major, first entry least significant: E11=1, E12=2, E21=4, E22=8
        let e12 = m.element(2).unwrap();
        assert_eq!(m.mul(e12, e12).unwrap(), m.zero());
    }

    #[test]
    fn center_of_full_matrices_is_scalars() {
        let m = m2f2();
        let center: Vec<u32> = m.center().into_iter().map(Element::index).collect();
        assert_eq!(center, vec![0, 9]);
        assert_eq!(m.one_index(), 9);
        assert!(!m.is_central(m.element(1).unwrap()).unwrap());
    }

    #[test]
    fn commutative_center_is_everything() {
        let z4 = zmod(4).unwrap();
        assert_eq!(z4.center().len(), 4);
        assert!(z4.is_central(z4.zero()).unwrap());
    }

    #[test]
    fn triangular_idempotents() {
        let t = t2f2();
        assert_eq!(t.idempotents().len(), 6);
        let ci: Vec<u32> = t.central_idempotents().into_iter().map(Element::index).collect();
        assert_eq!(ci, vec![0, t.one_index()]);
        // E12 is index 2 in (a11, a12, a22) order
        assert!(!t.is_central(t.element(2).unwrap()).unwrap());
    }

    #[test]
    fn regular_elements() {
        let z4 = zmod(4).unwrap();
        assert!(z4.is_regular(z4.one()).unwrap());
        assert!(!z4.is_regular(z4.element(2).unwrap()).unwrap());
        for r in [m2f2(), t2f2(), z4] {
            for a in r.elements() {
                assert_eq!(r.is_regular(a).unwrap(), r.is_unit(a).unwrap());
            }
        }
    }

    #[test]
    fn center_is_a_commutative_subring() {
        for r in [m2f2(), t2f2(), zmod(4).unwrap()] {
            let c = center_indices(&r);
            let mask = center_mask(&r);
            for &a in &c {
                for &b in &c {
                    assert!(mask[r.add_idx(a, b) as usize]);
                    assert!(mask[r.mul_idx(a, b) as usize]);
                    assert_eq!(r.mul_idx(a, b), r.mul_idx(b, a));
                }
            }
            for a in r.elements() {
                assert_eq!(r.is_central(a).unwrap(), mask[a.index() as usize]);
            }
        }
    }

    #[test]
    fn axioms_hold_and_violations_are_reported() {
        assert!(m2f2().verify_axioms(7).unwrap().exhaustive);

        struct Broken;
        impl RingOps for Broken {
            fn add(&self, a: u32, b: u32) -> u32 {
                (a + b) % 3
            }
            fn neg(&self, a: u32) -> u32 {
                (3 - a) % 3
            }
            fn mul(&self, a: u32, b: u32) -> u32 {
                // 2*2 = 2 breaks distributivity: 2*(1+1) != 2*1 + 2*1
                if a == 0 || b == 0 {
                    0
                } else if a == 1 {
                    b
                } else if b == 1 {
                    a
                } else {
                    2
                }
            }
        }
        let r = FiniteRing::from_ops(3, 1, "broken", None, Arc::new(Broken)).unwrap();
        let v = r.verify_axioms(1).unwrap_err();
        assert!(v.law.contains("distributivity") || v.law.contains("associativity"));
    }

    #[test]
    fn fingerprint_is_stable_across_rebuilds() {
        assert_eq!(m2f2().fingerprint(), m2f2().fingerprint());
        assert_ne!(m2f2().fingerprint(), t2f2().fingerprint());
    }
}
