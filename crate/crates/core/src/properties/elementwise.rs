use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::properties::verdict::{Bounds, Certificate, ElementRecord, Polarity, SearchStats, Verdict};
use crate::properties::{Property, SearchLimits};
use crate::ring::{idempotent_indices, RingView};

fn verdict<R: RingView + ?Sized>(
    r: &R,
    property: Property,
    law: &str,
    violation: Option<Vec<u32>>,
    candidates: u64,
    start: Instant,
) -> Verdict {
    let polarity = if violation.is_some() {
        Polarity::Refuted
    } else {
        Polarity::NotRefuted
    };
    Verdict {
        property,
        ring: r.label(),
        polarity,
        bounds: Bounds::exact(),
        certificate: violation.map(|els| Certificate::Elements {
            law: law.into(),
            elements: els.into_iter().map(|a| ElementRecord::of(r, a)).collect(),
        }),
        universal_witness: None,
        stats: SearchStats {
            candidates,
            ..SearchStats::default()
        },
        elapsed: start.elapsed(),
    }
}

fn square_cost<R: RingView + ?Sized>(r: &R, limits: &SearchLimits, what: &str) -> Result<u64> {
    let n = r.size() as u128;
    limits.check(&format!("{what} over {}", r.label()), n * n)?;
    Ok(n as u64 * n as u64)
}

/// `ab = 0` implies `ba = 0`; refutation is the least `(a, b)`.
pub fn check_reversible<R: RingView + ?Sized>(r: &R, limits: &SearchLimits) -> Result<Verdict> {
    let start = Instant::now();
    let scanned = square_cost(r, limits, "reversible")?;
    let n = r.size();
    let bad = (1..n).into_par_iter().find_map_first(|a| {
        (1..n)
            .find(|&b| r.mul_idx(a, b) == 0 && r.mul_idx(b, a) != 0)
            .map(|b| vec![a, b])
    });
    Ok(verdict(r, Property::Reversible, "ab = 0 but ba != 0", bad, scanned, start))
}

/// `ab = 0` implies `atb = 0` for all `t`; refutation is the least `(a, b, t)`.
pub fn check_semicommutative<R: RingView + ?Sized>(r: &R, limits: &SearchLimits) -> Result<Verdict> {
    let start = Instant::now();
    let scanned = square_cost(r, limits, "semicommutative")?;
    let n = r.size();
    let bad = (1..n).into_par_iter().find_map_first(|a| {
        (1..n).filter(|&b| r.mul_idx(a, b) == 0).find_map(|b| {
            (1..n)
                .find(|&t| r.mul_idx(r.mul_idx(a, t), b) != 0)
                .map(|t| vec![a, b, t])
        })
    });
    Ok(verdict(r, Property::Semicommutative, "ab = 0 but atb != 0", bad, scanned, start))
}

/// Every idempotent is central; refutation is the least non-central
/// idempotent and the least element it fails to commute with.
pub fn check_abelian<R: RingView + ?Sized>(r: &R, limits: &SearchLimits) -> Result<Verdict> {
    let start = Instant::now();
    let scanned = square_cost(r, limits, "abelian")?;
    let n = r.size();
    let bad = idempotent_indices(r).into_iter().find_map(|e| {
        (0..n)
            .find(|&t| r.mul_idx(e, t) != r.mul_idx(t, e))
            .map(|t| vec![e, t])
    });
    Ok(verdict(r, Property::Abelian, "e^2 = e but et != te", bad, scanned, start))
}

/// No nonzero nilpotents, i.e. no `a != 0` with `a^2 = 0`.
pub fn check_reduced<R: RingView + ?Sized>(r: &R, _limits: &SearchLimits) -> Result<Verdict> {
    let start = Instant::now();
    let n = r.size();
    let bad = (1..n).find(|&a| r.mul_idx(a, a) == 0).map(|a| vec![a]);
    Ok(verdict(r, Property::Reduced, "a != 0 but a^2 = 0", bad, n as u64, start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, zmod, Family, Limits, MatrixShape};
    use crate::properties::verify_certificate;

    #[test]
    fn small_rings() {
        let l = SearchLimits::default();
        let z4 = zmod(4).unwrap();
        let v = check_reduced(&z4, &l).unwrap();
        assert!(v.is_refuted());
        verify_certificate(&z4, &v).unwrap();
        assert!(!check_reversible(&z4, &l).unwrap().is_refuted());
        assert!(!check_semicommutative(&z4, &l).unwrap().is_refuted());
        assert!(!check_abelian(&z4, &l).unwrap().is_refuted());

        let t2 = matrix_ring(
            &MatrixShape::new(Family::UpperTriangular, 2, prime_field(2).unwrap()),
            &Limits::default(),
        )
        .unwrap();
        for v in [
            check_abelian(&t2, &l).unwrap(),
            check_reversible(&t2, &l).unwrap(),
            check_semicommutative(&t2, &l).unwrap(),
        ] {
            assert!(v.is_refuted(), "{}", v.property);
            verify_certificate(&t2, &v).unwrap();
        }
        let f3 = prime_field(3).unwrap();
        assert!(!check_reduced(&f3, &l).unwrap().is_refuted());
    }
}
