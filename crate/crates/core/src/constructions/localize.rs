use crate::error::{Error, Result};
use crate::ring::{is_central_idx, is_regular_idx, FiniteRing, RingView};

/// Denominator set for `RS^-1`.
#[derive(Debug, Clone)]
pub struct LocalizationSpec {
    pub parent: FiniteRing,
    pub denominators: Vec<u32>,
}

/// Result of localizing a finite ring. Every central regular element of a
/// finite ring is a unit, so `RS^-1` is the parent itself and the canonical
/// map `r -> r/1` is the identity; `inverses` is the collapse certificate.
#[derive(Debug, Clone)]
pub struct Localization {
    pub ring: FiniteRing,
    pub canonical_map: Vec<u32>,
    /// `(s, s^-1)` for each denominator, ascending by `s`.
    pub inverses: Vec<(u32, u32)>,
}

pub fn localize(spec: &LocalizationSpec) -> Result<Localization> {
    let r = &spec.parent;
    let mut s: Vec<u32> = spec.denominators.clone();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&x| x >= r.size()) {
        return Err(Error::OutOfRange {
            index: bad as u64,
            size: r.size() as u64,
        });
    }
    if s.binary_search(&r.one_index()).is_err() {
        return Err(Error::usage("denominator set must contain 1"));
    }
    for &a in &s {
        if !is_central_idx(r, a) {
            return Err(Error::usage(format!(
                "denominator {} is not central",
                r.describe(a)
            )));
        }
        if !is_regular_idx(r, a) {
            return Err(Error::usage(format!(
                "denominator {} is a zero divisor",
                r.describe(a)
            )));
        }
    }
    for &a in &s {
        for &b in &s {
            let ab = r.mul_idx(a, b);
            if s.binary_search(&ab).is_err() {
                return Err(Error::usage(format!(
                    "denominators not multiplicatively closed: {} · {} = {}",
                    r.describe(a),
                    r.describe(b),
                    r.describe(ab)
                )));
            }
        }
    }
    let inverses = s
        .iter()
        .map(|&a| {
            let inv = r
                .inverse_idx(a)
                .expect("central regular elements of a finite ring are units");
            (a, inv)
        })
        .collect();
    Ok(Localization {
        ring: r.clone(),
        canonical_map: (0..r.size()).collect(),
        inverses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{iso_check, matrix_ring, prime_field, zmod, Family, Limits, MatrixShape};

    #[test]
    fn trivial_and_unit_denominators() {
        let z4 = zmod(4).unwrap();
        let l = localize(&LocalizationSpec {
            parent: z4.clone(),
            denominators: vec![1],
        })
        .unwrap();
        assert!(iso_check(&z4, &l.ring, &l.canonical_map));
        let l = localize(&LocalizationSpec {
            parent: z4.clone(),
            denominators: vec![1, 3],
        })
        .unwrap();
        assert_eq!(l.inverses, vec![(1, 1), (3, 3)]);
        let err = localize(&LocalizationSpec {
            parent: z4,
            denominators: vec![1, 2],
        })
        .unwrap_err();
        assert!(err.to_string().contains("zero divisor"));
    }

    #[test]
    fn zero_divisor_denominator_is_named() {
        let m2 = matrix_ring(&MatrixShape::new(Family::Full, 2, prime_field(2).unwrap()), &Limits::default()).unwrap();
        let err = localize(&LocalizationSpec {
            parent: m2.clone(),
            denominators: vec![m2.one_index(), 1],
        })
        .unwrap_err();
        // E11 fails centrality before regularity is even consulted
        assert!(err.to_string().contains("[[1, 0], [0, 0]]"), "{err}");
    }
}
