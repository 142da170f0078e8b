use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{is_central_idx, FiniteRing, RingOps, RingView};

/// The subring `eR` (`e` central idempotent), identity `e`.
struct CornerOps {
    parent: FiniteRing,
    members: Vec<u32>,
    local: Vec<Option<u32>>,
}

impl CornerOps {
    fn lift(&self, a: u32) -> u32 {
        self.members[a as usize]
    }

    fn lower(&self, a: u32) -> u32 {
        self.local[a as usize].expect("eR is closed under the ring operations")
    }
}

impl RingOps for CornerOps {
    fn add(&self, a: u32, b: u32) -> u32 {
        self.lower(self.parent.add_idx(self.lift(a), self.lift(b)))
    }

    fn neg(&self, a: u32) -> u32 {
        self.lower(self.parent.neg_idx(self.lift(a)))
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.lower(self.parent.mul_idx(self.lift(a), self.lift(b)))
    }

    fn describe(&self, a: u32) -> String {
        self.parent.describe(self.lift(a))
    }
}

/// Returns `eR` together with its members as parent indices (ascending;
/// local index `k` is `members[k]`).
pub fn corner(r: &FiniteRing, e: u32) -> Result<(FiniteRing, Vec<u32>)> {
    if e >= r.size() {
        return Err(Error::OutOfRange {
            index: e as u64,
            size: r.size() as u64,
        });
    }
    if r.mul_idx(e, e) != e {
        return Err(Error::usage(format!(
            "{} is not idempotent in {}",
            r.describe(e),
            r.label()
        )));
    }
    if !is_central_idx(r, e) {
        return Err(Error::usage(format!(
            "{} is not central in {}",
            r.describe(e),
            r.label()
        )));
    }
    let mut members: Vec<u32> = (0..r.size()).map(|a| r.mul_idx(e, a)).collect();
    members.sort_unstable();
    members.dedup();
    let mut local = vec![None; r.size() as usize];
    for (k, &m) in members.iter().enumerate() {
        local[m as usize] = Some(k as u32);
    }
    let one = local[e as usize].expect("e = e*1 is a member");
    let label = format!("{}·{}", r.describe(e), r.label());
    let size = members.len() as u32;
    let ops = CornerOps {
        parent: r.clone(),
        members: members.clone(),
        local,
    };
    Ok((FiniteRing::from_ops(size, one, label, None, Arc::new(ops))?, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        iso_check, matrix_ring, prime_field, product, Family, Limits, MatrixShape, ProductOps,
    };

    #[test]
    fn trivial_corners() {
        let lim = Limits::default();
        let t2 = matrix_ring(&MatrixShape::new(Family::UpperTriangular, 2, prime_field(2).unwrap()), &lim).unwrap();
        let (whole, members) = corner(&t2, t2.one_index()).unwrap();
        assert_eq!(whole.size(), t2.size());
        assert!(iso_check(&t2, &whole, &(0..8).map(|a| members.binary_search(&a).unwrap() as u32).collect::<Vec<_>>()));
        let (zero, _) = corner(&t2, 0).unwrap();
        assert_eq!(zero.size(), 1);
        // E11 is idempotent but not central
        assert!(corner(&t2, 1).is_err());
        // E12 is not idempotent
        assert!(corner(&t2, 2).is_err());
    }

    #[test]
    fn corner_of_product_projects_a_factor() {
        let lim = Limits::default();
        let f2 = prime_field(2).unwrap();
        let t2 = matrix_ring(&MatrixShape::new(Family::UpperTriangular, 2, f2.clone()), &lim).unwrap();
        let r = product(&[f2.clone(), t2.clone()], &lim).unwrap();
        let ops = ProductOps::new(vec![f2.clone(), t2.clone()]);
        let e = ops.encode(&[1, 0]);
        let (er, members) = corner(&r, e).unwrap();
        assert_eq!(er.size(), 2);
        // local index k -> F2 component of the member
        let map: Vec<u32> = members.iter().map(|&m| ops.decode(m)[0]).collect();
        assert!(iso_check(&er, &f2, &map));
    }
}
