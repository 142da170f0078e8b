use std::sync::Arc;

use crate::constructions::Limits;
use crate::error::{Error, Result};
use crate::ring::{AlgebraBasis, FiniteRing, RingOps, RingView};

/// Componentwise operations; component 0 is the least significant digit.
pub struct ProductOps {
    parts: Vec<FiniteRing>,
}

impl ProductOps {
    pub fn new(parts: Vec<FiniteRing>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[FiniteRing] {
        &self.parts
    }

    pub fn decode(&self, mut index: u32) -> Vec<u32> {
        self.parts
            .iter()
            .map(|r| {
                let d = index % r.size();
                index /= r.size();
                d
            })
            .collect()
    }

    pub fn encode(&self, components: &[u32]) -> u32 {
        components
            .iter()
            .zip(&self.parts)
            .rev()
            .fold(0, |acc, (&c, r)| acc * r.size() + c)
    }

    fn zip_with(&self, a: u32, b: u32, f: impl Fn(&FiniteRing, u32, u32) -> u32) -> u32 {
        let (da, db) = (self.decode(a), self.decode(b));
        let c: Vec<u32> = self
            .parts
            .iter()
            .zip(da.iter().zip(&db))
            .map(|(r, (&x, &y))| f(r, x, y))
            .collect();
        self.encode(&c)
    }
}

impl RingOps for ProductOps {
    fn add(&self, a: u32, b: u32) -> u32 {
        self.zip_with(a, b, |r, x, y| r.add_idx(x, y))
    }

    fn neg(&self, a: u32) -> u32 {
        self.zip_with(a, a, |r, x, _| r.neg_idx(x))
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.zip_with(a, b, |r, x, y| r.mul_idx(x, y))
    }

    fn describe(&self, a: u32) -> String {
        let parts: Vec<String> = self
            .decode(a)
            .iter()
            .zip(&self.parts)
            .map(|(&x, r)| r.describe(x))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Direct product of a nonempty sequence of rings.
pub fn product(rings: &[FiniteRing], limits: &Limits) -> Result<FiniteRing> {
    if rings.is_empty() {
        return Err(Error::usage("product of an empty sequence of rings"));
    }
    let label = rings
        .iter()
        .map(|r| r.label().to_string())
        .collect::<Vec<_>>()
        .join(" × ");
    let needed = rings
        .iter()
        .try_fold(1u128, |acc, r| acc.checked_mul(r.size() as u128))
        .unwrap_or(u128::MAX);
    let size = limits.check(&label, needed)?;
    let ops = ProductOps::new(rings.to_vec());
    let one = ops.encode(&rings.iter().map(|r| r.one_index()).collect::<Vec<_>>());
    let basis = product_basis(rings);
    FiniteRing::from_ops(size, one, label, basis, Arc::new(ops))
}

fn product_basis(rings: &[FiniteRing]) -> Option<AlgebraBasis> {
    let p = rings[0].basis()?.characteristic;
    let mut names = Vec::new();
    for (k, r) in rings.iter().enumerate() {
        let b = r.basis()?;
        if b.characteristic != p {
            return None;
        }
        names.extend(b.names.iter().map(|n| format!("π{}:{}", k + 1, n)));
    }
    Some(AlgebraBasis::new(p, names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, zmod, Family, MatrixShape};
    use crate::ring::center_indices;

    #[test]
    fn sizes_identity_and_center() {
        let lim = Limits::default();
        let f2 = prime_field(2).unwrap();
        let t2 = matrix_ring(&MatrixShape::new(Family::UpperTriangular, 2, f2.clone()), &lim).unwrap();
        let m2 = matrix_ring(&MatrixShape::new(Family::Full, 2, f2.clone()), &lim).unwrap();
        let p = product(&[f2.clone(), t2.clone()], &lim).unwrap();
        assert_eq!(p.size(), 16);
        let ops = ProductOps::new(vec![f2.clone(), t2.clone()]);
        assert_eq!(ops.decode(p.one_index()), vec![1, t2.one_index()]);
        assert!(p.basis().is_some());

        // center(A x B) = center(A) x center(B), brute force
        let q = product(&[f2.clone(), m2.clone()], &lim).unwrap();
        let ops = ProductOps::new(vec![f2.clone(), m2.clone()]);
        let mut expected: Vec<u32> = center_indices(&f2)
            .iter()
            .flat_map(|&a| center_indices(&m2).into_iter().map(move |b| (a, b)))
            .map(|(a, b)| ops.encode(&[a, b]))
            .collect();
        expected.sort();
        assert_eq!(center_indices(&q), expected);
        q.verify_axioms(1).unwrap();

        assert!(product(&[f2.clone(), prime_field(3).unwrap()], &lim).unwrap().basis().is_none());
        assert!(product(&[f2, zmod(4).unwrap()], &lim).unwrap().basis().is_none());
        assert!(product(&[], &lim).is_err());
    }
}
