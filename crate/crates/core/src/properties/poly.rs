use crate::ring::RingView;

/// Polynomial over a finite ring by coefficient indices; `coeffs[i]` is the
/// coefficient of `x^i`. Never has trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: u32) -> Self {
        Self::new(vec![c])
    }

    /// Decodes `index = sum c_i n^i` into at most `max_deg + 1` coefficients.
    pub fn from_index(mut index: u128, ring_size: u32, max_deg: usize) -> Self {
        let n = ring_size as u128;
        let coeffs = (0..=max_deg)
            .map(|_| {
                let c = (index % n) as u32;
                index /= n;
                c
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn index(&self, ring_size: u32) -> u128 {
        let n = ring_size as u128;
        self.coeffs.iter().rev().fold(0u128, |acc, &c| acc * n + c as u128)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies every coefficient by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    pub fn add<R: RingView + ?Sized>(&self, r: &R, other: &Polynomial) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| r.add_idx(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn render<R: RingView + ?Sized>(&self, r: &R, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mut s = r.describe(c);
                if s.contains(' ') && i > 0 {
                    s = format!("({s})");
                }
                match i {
                    0 => s,
                    1 => format!("{s}·{var}"),
                    _ => format!("{s}·{var}^{i}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// Convolution product `sum_{i+j=k} a_i b_j`.
pub fn poly_mul<R: RingView + ?Sized>(r: &R, f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() || g.is_zero() {
        return Polynomial::zero();
    }
    let mut out = vec![0u32; f.coeffs.len() + g.coeffs.len() - 1];
    for (i, &a) in f.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
        for (j, &b) in g.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
            let ab = r.mul_idx(a, b);
            if ab != 0 {
                out[i + j] = r.add_idx(out[i + j], ab);
            }
        }
    }
    Polynomial::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, zmod, Family, Limits, MatrixShape};
    use proptest::prelude::*;

    fn m2() -> crate::ring::FiniteRing {
        matrix_ring(
            &MatrixShape::new(Family::Full, 2, prime_field(2).unwrap()),
            &Limits::default(),
        )
        .unwrap()
    }

    #[test]
    fn normalization_and_codec() {
        let f = Polynomial::new(vec![3, 0, 0]);
        assert_eq!(f.coeffs(), &[3]);
        assert_eq!(f.degree(), Some(0));
        assert_eq!(Polynomial::zero().degree(), None);
        let g = Polynomial::new(vec![2, 1]);
        assert_eq!(g.index(16), 18);
        assert_eq!(Polynomial::from_index(18, 16, 1), g);
    }

    #[test]
    fn matrix_pair_annihilates() {
        let r = m2();
        // E11 = 1, E12 = 2, E22 = 8
        let f = Polynomial::new(vec![2, 1]);
        let g = Polynomial::new(vec![2, 8]);
        assert!(poly_mul(&r, &f, &g).is_zero());
        assert_eq!(poly_mul(&r, &f, &Polynomial::constant(9)), f);
        assert_eq!(f.render(&r, "x"), format!("{} + ({})·x", r.describe(2), r.describe(1)));
    }

    proptest! {
        #[test]
        fn associative_over_z4(a in prop::collection::vec(0u32..4, 0..4),
                               b in prop::collection::vec(0u32..4, 0..4),
                               c in prop::collection::vec(0u32..4, 0..4)) {
            let r = zmod(4).unwrap();
            let (a, b, c) = (Polynomial::new(a), Polynomial::new(b), Polynomial::new(c));
            prop_assert_eq!(
                poly_mul(&r, &poly_mul(&r, &a, &b), &c),
                poly_mul(&r, &a, &poly_mul(&r, &b, &c))
            );
            let sum = a.add(&r, &b);
            prop_assert_eq!(
                poly_mul(&r, &sum, &c),
                poly_mul(&r, &a, &c).add(&r, &poly_mul(&r, &b, &c))
            );
        }
    }
}
