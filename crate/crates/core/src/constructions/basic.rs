use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::is_prime;
use crate::ring::{AlgebraBasis, FiniteRing, RingOps};

struct Zmod(u32);

impl RingOps for Zmod {
    fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    fn neg(&self, a: u32) -> u32 {
        (self.0 - a) % self.0
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.0
    }
}

/// The prime field `F_p`.
pub fn prime_field(p: u32) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::usage(format!("{p} is not prime")));
    }
    FiniteRing::from_ops(
        p,
        1 % p,
        format!("F{p}"),
        Some(AlgebraBasis::new(p, vec!["1".into()])),
        Arc::new(Zmod(p)),
    )
}

/// The residue ring `Z/nZ`; carries an `F_p` basis exactly when `n` is prime.
pub fn zmod(n: u32) -> Result<FiniteRing> {
    if !(1..=1 << 12).contains(&n) {
        return Err(Error::usage(format!("Z{n}: modulus must be in 1..=4096")));
    }
    if is_prime(n) {
        return prime_field(n).and_then(|f| {
            FiniteRing::from_ops(n, 1, format!("Z{n}"), f.basis_cloned(), Arc::new(Zmod(n)))
        });
    }
    FiniteRing::from_ops(n, 1 % n, format!("Z{n}"), None, Arc::new(Zmod(n)))
}

impl FiniteRing {
    pub(crate) fn basis_cloned(&self) -> Option<AlgebraBasis> {
        crate::ring::RingView::basis(self).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingView;

    #[test]
    fn fields_and_residue_rings() {
        assert!(prime_field(4).is_err());
        let f3 = prime_field(3).unwrap();
        assert_eq!(f3.mul_idx(2, 2), 1);
        let z4 = zmod(4).unwrap();
        assert!(z4.basis().is_none());
        assert_eq!(z4.mul_idx(2, 2), 0);
        assert!(zmod(5).unwrap().basis().is_some());
    }
}
