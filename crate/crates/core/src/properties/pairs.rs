use crate::error::{Error, Result};
use crate::linalg::{kernel, vector_index, Subspace};
use crate::properties::poly::{poly_mul, Polynomial};
use crate::properties::{SearchLimits, Side};
use crate::ring::RingView;

/// Number of polynomials of degree at most `d`, i.e. `n^(d+1)`.
pub(crate) fn poly_count(n: u32, d: usize) -> u128 {
    (n as u128).checked_pow(d as u32 + 1).unwrap_or(u128::MAX)
}

/// Carrier count as `u64`, refusing oversized searches.
pub(crate) fn carrier_count<R: RingView + ?Sized>(
    r: &R,
    d: usize,
    cost_per_carrier: u128,
    limits: &SearchLimits,
) -> Result<u64> {
    let n = poly_count(r.size(), d);
    let cost = n.saturating_mul(cost_per_carrier.max(1));
    limits.check(&format!("over {} at degree {d}", r.label()), cost)?;
    u64::try_from(n).map_err(|_| Error::capacity("polynomial index space", n, u64::MAX as u128))
}

/// Per-carrier partner cost: a linear solve when the ring has an `F_p` basis,
/// otherwise a full scan.
pub(crate) fn partner_cost<R: RingView + ?Sized>(r: &R, d: usize) -> u128 {
    match r.basis() {
        Some(b) => ((d + 1) * b.dim()).pow(2) as u128,
        None => poly_count(r.size(), d),
    }
}

/// Zero-divisor partners of one carrier: `g` with `carrier·g = 0` on the
/// right side, `f` with `f·carrier = 0` on the left.
pub(crate) enum Partners {
    Linear { space: Subspace, p: u32 },
    Listed(Vec<u64>),
}

impl Partners {
    /// Nonzero partners in increasing index order.
    pub fn iter(&self) -> Box<dyn Iterator<Item = u64> + '_> {
        match self {
            Partners::Linear { space, p } => Box::new(
                space
                    .iter_sorted()
                    .skip(1)
                    .map(move |v| vector_index(&v, *p) as u64),
            ),
            Partners::Listed(v) => Box::new(v.iter().copied()),
        }
    }

    pub fn least(&self) -> Option<u64> {
        match self {
            Partners::Linear { space, p } => space.least_nonzero().map(|v| vector_index(&v, *p) as u64),
            Partners::Listed(v) => v.first().copied(),
        }
    }

    pub fn count(&self) -> u128 {
        match self {
            Partners::Linear { space, .. } => space.cardinality() - 1,
            Partners::Listed(v) => v.len() as u128,
        }
    }

    /// Spanning partners for linear conditions: the kernel basis, or every
    /// listed partner.
    pub fn generators(&self) -> Vec<u64> {
        match self {
            Partners::Linear { space, p } => space
                .basis()
                .iter()
                .map(|v| vector_index(v, *p) as u64)
                .collect(),
            Partners::Listed(v) => v.clone(),
        }
    }
}

pub(crate) fn partners<R: RingView + ?Sized>(r: &R, d: usize, side: Side, carrier: &Polynomial) -> Partners {
    match r.basis() {
        Some(basis) if (basis.characteristic as u128).pow(basis.dim() as u32) == r.size() as u128 => {
            let p = basis.characteristic;
            let dim = basis.dim();
            // column (j, k) is the image of unit_k x^j, stored at j*dim + k
            let ncols = (d + 1) * dim;
            let nrows = (carrier.coeffs().len() + d) * dim;
            let mut rows = vec![vec![0u32; ncols]; nrows];
            for k in 0..dim {
                let u = basis.unit(k);
                for (i, &a) in carrier.coeffs().iter().enumerate() {
                    let prod = match side {
                        Side::Right => r.mul_idx(a, u),
                        Side::Left => r.mul_idx(u, a),
                    };
                    if prod == 0 {
                        continue;
                    }
                    let digits = basis.digits(prod);
                    for j in 0..=d {
                        for (m, &c) in digits.iter().enumerate() {
                            if c != 0 {
                                let row = &mut rows[(i + j) * dim + m][j * dim + k];
                                *row = (*row + c) % p;
                            }
                        }
                    }
                }
            }
            Partners::Linear {
                space: kernel(p, ncols, &rows),
                p,
            }
        }
        _ => {
            let n = r.size();
            let total = poly_count(n, d) as u64;
            let list = (1..total)
                .filter(|&idx| {
                    let other = Polynomial::from_index(idx as u128, n, d);
                    let prod = match side {
                        Side::Right => poly_mul(r, carrier, &other),
                        Side::Left => poly_mul(r, &other, carrier),
                    };
                    prod.is_zero()
                })
                .collect();
            Partners::Listed(list)
        }
    }
}

/// Every pair of nonzero polynomials of degree at most `d` with `f·g = 0`, in
/// `(f, g)` index order. Partners come from a nullspace when the ring has an
/// `F_p` basis.
pub fn zero_divisor_pairs<'a, R: RingView + ?Sized>(
    r: &'a R,
    d: usize,
    limits: &SearchLimits,
) -> Result<impl Iterator<Item = (Polynomial, Polynomial)> + 'a> {
    let n = r.size();
    let carriers = carrier_count(r, d, partner_cost(r, d), limits)?;
    Ok((1..carriers).flat_map(move |fi| {
        let f = Polynomial::from_index(fi as u128, n, d);
        let gs: Vec<u64> = partners(r, d, Side::Right, &f).iter().collect();
        gs.into_iter()
            .map(move |gi| (f.clone(), Polynomial::from_index(gi as u128, n, d)))
    }))
}

/// The plain double loop, kept as an oracle for [`zero_divisor_pairs`].
pub fn zero_divisor_pairs_exhaustive<'a, R: RingView + ?Sized>(
    r: &'a R,
    d: usize,
    limits: &SearchLimits,
) -> Result<impl Iterator<Item = (Polynomial, Polynomial)> + 'a> {
    let n = r.size();
    let total = carrier_count(r, d, poly_count(n, d), limits)?;
    Ok((1..total).flat_map(move |fi| {
        let f = Polynomial::from_index(fi as u128, n, d);
        (1..total).filter_map(move |gi| {
            let g = Polynomial::from_index(gi as u128, n, d);
            poly_mul(r, &f, &g).is_zero().then(|| (f.clone(), g))
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, zmod, Family, Limits, MatrixShape};

    #[test]
    fn fields_have_no_pairs() {
        let f3 = prime_field(3).unwrap();
        for d in 0..3 {
            assert_eq!(zero_divisor_pairs(&f3, d, &SearchLimits::default()).unwrap().count(), 0);
        }
    }

    #[test]
    fn z4_constant_pairs() {
        let z4 = zmod(4).unwrap();
        let pairs: Vec<_> = zero_divisor_pairs(&z4, 0, &SearchLimits::default())
            .unwrap()
            .map(|(f, g)| (f.index(4), g.index(4)))
            .collect();
        assert_eq!(pairs, vec![(2, 2)]);
    }

    #[test]
    fn matrix_pair_is_streamed() {
        let m2 = matrix_ring(
            &MatrixShape::new(Family::Full, 2, prime_field(2).unwrap()),
            &Limits::default(),
        )
        .unwrap();
        let target = (Polynomial::new(vec![2, 1]), Polynomial::new(vec![2, 8]));
        assert!(zero_divisor_pairs(&m2, 1, &SearchLimits::default())
            .unwrap()
            .any(|p| p == target));
    }

    #[test]
    fn oversized_searches_are_refused() {
        let z4 = zmod(4).unwrap();
        let tiny = SearchLimits { max_search: 10 };
        assert!(zero_divisor_pairs(&z4, 3, &tiny).err().unwrap().is_capacity());
    }
}
