//! Moving between `(R[x])[t]` and `R[x]` by the substitution `t -> x^k`.

use crate::error::{Error, Result};
use crate::properties::mccoy::check_pair;
use crate::properties::pairs::poly_count;
use crate::properties::poly::{poly_mul, Polynomial};
use crate::properties::{Property, SearchLimits, Side};
use crate::ring::{center_mask, RingView};

fn degree_or_zero(f: &Polynomial) -> usize {
    f.degree().unwrap_or(0)
}

/// `sum deg F_i + sum deg G_j`; packing with any larger `k` keeps the
/// coefficient blocks of the product apart.
pub fn packing_bound(big_f: &[Polynomial], big_g: &[Polynomial]) -> usize {
    big_f.iter().chain(big_g).map(degree_or_zero).sum()
}

/// `F_0 + F_1 x^k + ... + F_m x^(km)`; needs `k > deg F_i` for every `i`.
pub fn flatten_poly_poly<R: RingView + ?Sized>(r: &R, big_f: &[Polynomial], k: usize) -> Result<Polynomial> {
    let need = big_f.iter().map(degree_or_zero).max().unwrap_or(0);
    if k <= need {
        return Err(Error::usage(format!(
            "packing exponent {k} must exceed the largest coefficient degree {need}"
        )));
    }
    Ok(big_f
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (i, fi)| acc.add(r, &fi.shift(k * i))))
}

/// Flattens a pair with the product-safe exponent check.
pub fn flatten_pair<R: RingView + ?Sized>(
    r: &R,
    big_f: &[Polynomial],
    big_g: &[Polynomial],
    k: usize,
) -> Result<(Polynomial, Polynomial)> {
    let bound = packing_bound(big_f, big_g);
    if k <= bound {
        return Err(Error::usage(format!("packing exponent {k} must exceed {bound}")));
    }
    Ok((flatten_poly_poly(r, big_f, k)?, flatten_poly_poly(r, big_g, k)?))
}

/// Product in `(R[x])[t]`.
pub fn poly_poly_mul<R: RingView + ?Sized>(
    r: &R,
    big_f: &[Polynomial],
    big_g: &[Polynomial],
) -> Vec<Polynomial> {
    if big_f.is_empty() || big_g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Polynomial::zero(); big_f.len() + big_g.len() - 1];
    for (i, fi) in big_f.iter().enumerate() {
        for (j, gj) in big_g.iter().enumerate() {
            out[i + j] = out[i + j].add(r, &poly_mul(r, fi, gj));
        }
    }
    while out.last().is_some_and(Polynomial::is_zero) {
        out.pop();
    }
    out
}

/// Outcome of comparing a pair over `R[x]` with its flattening over `R`.
#[derive(Debug, Clone)]
pub struct LiftedCheck {
    pub product_is_zero: bool,
    pub k: usize,
    pub flat_f: Polynomial,
    pub flat_g: Polynomial,
    pub flat_product_is_zero: bool,
    /// Least witness in `R` for the flattened pair.
    pub flat_witness: Option<u32>,
    /// Least witness in `R[x]` of degree at most the searched bound.
    pub lifted_witness: Option<Polynomial>,
    pub witness_degree: usize,
}

/// Checks a pair over `R[x]` both directly (witnesses of degree at most
/// `witness_degree`) and through its flattening to `R`.
pub fn check_lifted_pair<R: RingView + ?Sized>(
    r: &R,
    property: Property,
    big_f: &[Polynomial],
    big_g: &[Polynomial],
    witness_degree: usize,
    limits: &SearchLimits,
) -> Result<LiftedCheck> {
    let (side, central) = property
        .witness_shape()
        .ok_or_else(|| Error::usage(format!("{property} has no witness condition")))?;
    if big_f.iter().all(Polynomial::is_zero) || big_g.iter().all(Polynomial::is_zero) {
        return Err(Error::usage("pair polynomials must be nonzero"));
    }
    let k = packing_bound(big_f, big_g) + 1;
    let (flat_f, flat_g) = flatten_pair(r, big_f, big_g, k)?;
    let flat = check_pair(r, property, &flat_f, &flat_g)?;

    let n = r.size();
    let total = poly_count(n, witness_degree);
    let carrier = match side {
        Side::Right => big_f,
        Side::Left => big_g,
    };
    limits.check("lifted witnesses", total.saturating_mul(carrier.len() as u128))?;
    let center = center_mask(r);
    let accepted = |p: &Polynomial| {
        if central {
            p.coeffs().iter().all(|&c| center[c as usize])
        } else {
            p.is_zero()
        }
    };
    let lifted_witness = (1..total as u64)
        .map(|s| Polynomial::from_index(s as u128, n, witness_degree))
        .find(|s| {
            carrier.iter().all(|c| {
                let prod = match side {
                    Side::Right => poly_mul(r, c, s),
                    Side::Left => poly_mul(r, s, c),
                };
                accepted(&prod)
            })
        });
    Ok(LiftedCheck {
        product_is_zero: poly_poly_mul(r, big_f, big_g).is_empty(),
        k,
        flat_product_is_zero: flat.product_is_zero,
        flat_f,
        flat_g,
        flat_witness: flat.witness,
        lifted_witness,
        witness_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, Family, Limits, MatrixShape};
    use crate::ring::FiniteRing;

    fn m2() -> FiniteRing {
        matrix_ring(
            &MatrixShape::new(Family::Full, 2, prime_field(2).unwrap()),
            &Limits::default(),
        )
        .unwrap()
    }

    #[test]
    fn constant_in_t_is_unchanged() {
        let r = m2();
        let f0 = Polynomial::new(vec![3, 5]);
        assert_eq!(flatten_poly_poly(&r, &[f0.clone()], 2).unwrap(), f0);
    }

    #[test]
    fn degree_one_blocks_do_not_collide() {
        let r = m2();
        let f = [Polynomial::new(vec![1, 2]), Polynomial::new(vec![4, 8])];
        let flat = flatten_poly_poly(&r, &f, 2).unwrap();
        assert_eq!(flat.coeffs(), &[1, 2, 4, 8]);
        assert!(matches!(flatten_poly_poly(&r, &f, 1), Err(Error::Usage(_))));
        assert!(matches!(flatten_pair(&r, &f, &f, 4), Err(Error::Usage(_))));
    }

    #[test]
    fn lifted_matrix_pair_still_refutes() {
        let r = m2();
        let f = [Polynomial::constant(2), Polynomial::constant(1)];
        let g = [Polynomial::constant(2), Polynomial::constant(8)];
        let lc = check_lifted_pair(&r, Property::RightCentralMccoy, &f, &g, 1, &SearchLimits::default()).unwrap();
        assert!(lc.product_is_zero && lc.flat_product_is_zero);
        assert_eq!(lc.flat_f, Polynomial::new(vec![2, 1]));
        assert_eq!(lc.flat_witness, None);
        assert_eq!(lc.lifted_witness, None);
    }
}
