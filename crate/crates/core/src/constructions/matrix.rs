use std::fmt;
use std::sync::Arc;

use crate::constructions::Limits;
use crate::error::{Error, Result};
use crate::ring::{AlgebraBasis, FiniteRing, RingOps, RingView};

/// Matrix families over a base ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `M_n(R)`
    Full,
    /// `T_n(R)`
    UpperTriangular,
    /// `S_n(R)`, diagonal matrices
    Diagonal,
    /// `D_n(R)`: upper triangular with a constant main diagonal
    ConstantDiagonal,
    /// `V_n(R)`: upper triangular, constant along every diagonal
    ConstantDiagonals,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Full => "M",
            Family::UpperTriangular => "T",
            Family::Diagonal => "S",
            Family::ConstantDiagonal => "D",
            Family::ConstantDiagonals => "V",
        }
    }

    /// Number of independent entries of an `n x n` member.
    pub fn free_entries(self, n: usize) -> usize {
        match self {
            Family::Full => n * n,
            Family::UpperTriangular => n * (n + 1) / 2,
            Family::Diagonal => n,
            Family::ConstantDiagonal => 1 + n * (n - 1) / 2,
            Family::ConstantDiagonals => n,
        }
    }

    /// Positions holding the free entries, row-major. For the constant
    /// families the free entry stands for its whole diagonal.
    fn free_positions(self, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let free = match self {
                    Family::Full => true,
                    Family::UpperTriangular => i <= j,
                    Family::Diagonal => i == j,
                    Family::ConstantDiagonal => (i == 0 && j == 0) || i < j,
                    Family::ConstantDiagonals => i == 0,
                };
                if free {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[derive(Clone)]
pub struct MatrixShape {
    pub family: Family,
    pub n: usize,
    pub base: FiniteRing,
}

impl fmt::Debug for MatrixShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}({})", self.family.symbol(), self.n, self.base.label())
    }
}

impl MatrixShape {
    pub fn new(family: Family, n: usize, base: FiniteRing) -> Self {
        Self { family, n, base }
    }
}

/// Structural operations of a matrix ring; also the codec between element
/// indices and full `n x n` entry grids (row-major, base-ring indices).
pub struct MatrixOps {
    family: Family,
    n: usize,
    base: FiniteRing,
    positions: Vec<(usize, usize)>,
    q: u32,
}

impl MatrixOps {
    pub fn new(shape: &MatrixShape) -> Result<Self> {
        if shape.n == 0 {
            return Err(Error::usage("matrix dimension must be at least 1"));
        }
        Ok(Self {
            family: shape.family,
            n: shape.n,
            base: shape.base.clone(),
            positions: shape.family.free_positions(shape.n),
            q: shape.base.size(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &FiniteRing {
        &self.base
    }

    fn digits(&self, mut index: u32) -> Vec<u32> {
        self.positions
            .iter()
            .map(|_| {
                let d = index % self.q;
                index /= self.q;
                d
            })
            .collect()
    }

    fn undigits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.q + d)
    }

    /// Full entry grid of an element.
    pub fn decode(&self, index: u32) -> Vec<Vec<u32>> {
        let n = self.n;
        let d = self.digits(index);
        let mut m = vec![vec![0u32; n]; n];
        match self.family {
            Family::ConstantDiagonal => {
                for i in 0..n {
                    m[i][i] = d[0];
                }
                for (k, &(i, j)) in self.positions.iter().enumerate().skip(1) {
                    m[i][j] = d[k];
                }
            }
            Family::ConstantDiagonals => {
                for (k, &digit) in d.iter().enumerate() {
                    for i in 0..n - k {
                        m[i][i + k] = digit;
                    }
                }
            }
            _ => {
                for (k, &(i, j)) in self.positions.iter().enumerate() {
                    m[i][j] = d[k];
                }
            }
        }
        m
    }

    /// Index of a grid that belongs to the family; `None` otherwise.
    pub fn encode(&self, m: &[Vec<u32>]) -> Option<u32> {
        let digits: Vec<u32> = self.positions.iter().map(|&(i, j)| m[i][j]).collect();
        let idx = self.undigits(&digits);
        (self.decode(idx) == m).then_some(idx)
    }

    /// Matrix unit `E_ij` scaled by a base element (1-based `i`, `j`).
    pub fn scaled_unit(&self, i: usize, j: usize, r: u32) -> Option<u32> {
        let mut m = vec![vec![0u32; self.n]; self.n];
        m[i - 1][j - 1] = r;
        self.encode(&m)
    }

    fn size(&self) -> u128 {
        (self.q as u128).pow(self.positions.len() as u32)
    }

    fn basis(&self) -> Option<AlgebraBasis> {
        let base = self.base.basis()?;
        let mut names = Vec::new();
        for (k, &(i, j)) in self.positions.iter().enumerate() {
            let entry = match self.family {
                Family::ConstantDiagonal if k == 0 => "I".to_string(),
                Family::ConstantDiagonals => match k {
                    0 => "I".to_string(),
                    1 => "N".to_string(),
                    _ => format!("N^{k}"),
                },
                _ => format!("E{}{}", i + 1, j + 1),
            };
            for b in &base.names {
                names.push(if base.dim() == 1 && b == "1" {
                    entry.clone()
                } else {
                    format!("{entry}·{b}")
                });
            }
        }
        Some(AlgebraBasis::new(base.characteristic, names))
    }
}

impl RingOps for MatrixOps {
    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| self.base.add_idx(x, y)).collect();
        self.undigits(&s)
    }

    fn neg(&self, a: u32) -> u32 {
        let s: Vec<u32> = self.digits(a).iter().map(|&x| self.base.neg_idx(x)).collect();
        self.undigits(&s)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (ma, mb) = (self.decode(a), self.decode(b));
        let r = &self.base;
        // only the free positions are needed; the family is closed under products
        let digits: Vec<u32> = self
            .positions
            .iter()
            .map(|&(i, j)| {
                (0..self.n).fold(0, |acc, k| r.add_idx(acc, r.mul_idx(ma[i][k], mb[k][j])))
            })
            .collect();
        self.undigits(&digits)
    }

    fn describe(&self, a: u32) -> String {
        let rows: Vec<String> = self
            .decode(a)
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|&e| self.base.describe(e)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// Builds `M_n`, `T_n`, `S_n`, `D_n` or `V_n` over the shape's base ring.
pub fn matrix_ring(shape: &MatrixShape, limits: &Limits) -> Result<FiniteRing> {
    if shape.n == 0 {
        return Err(Error::usage("matrix dimension must be at least 1"));
    }
    let free = shape.family.free_entries(shape.n);
    let label = format!("{}{}({})", shape.family.symbol(), shape.n, shape.base.label());
    let size = limits.check_power(&label, shape.base.size() as u64, free as u32)?;
    let ops = MatrixOps::new(shape)?;
    debug_assert_eq!(ops.size(), size as u128);
    let mut id = vec![vec![0u32; shape.n]; shape.n];
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = shape.base.one_index();
    }
    let one = ops.encode(&id).expect("identity belongs to every family");
    let basis = ops.basis();
    FiniteRing::from_ops(size, one, label, basis, Arc::new(ops))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::prime_field;

    fn build(family: Family, n: usize, p: u32) -> FiniteRing {
        matrix_ring(&MatrixShape::new(family, n, prime_field(p).unwrap()), &Limits::default()).unwrap()
    }

    #[test]
    fn sizes_follow_free_entry_counts() {
        use Family::*;
        for family in [Full, UpperTriangular, Diagonal, ConstantDiagonal, ConstantDiagonals] {
            for n in 1..=3 {
                for p in [2u32, 3] {
                    let free = family.free_entries(n) as u32;
                    if (p as u64).pow(free) > 1 << 16 {
                        continue;
                    }
                    assert_eq!(build(family, n, p).size(), p.pow(free), "{family:?} {n} {p}");
                }
            }
        }
        assert_eq!(build(Full, 2, 2).size(), 16);
        assert_eq!(build(UpperTriangular, 2, 2).size(), 8);
        assert_eq!(build(ConstantDiagonal, 3, 2).size(), 16);
    }

    #[test]
    fn shift_algebra_squares() {
        let v3 = build(Family::ConstantDiagonals, 3, 2);
        // (0,1,0) has index 2, (0,0,1) index 4
        assert_eq!(v3.mul_idx(2, 2), 4);
        assert_eq!(v3.mul_idx(4, 2), 0);
    }

    #[test]
    fn constant_families_are_closed_and_satisfy_axioms() {
        for family in [Family::ConstantDiagonal, Family::ConstantDiagonals, Family::Diagonal] {
            let r = build(family, 3, 2);
            r.verify_axioms(3).unwrap();
        }
        build(Family::UpperTriangular, 2, 3).verify_axioms(3).unwrap();
    }

    #[test]
    fn capacity_is_enforced() {
        let f3 = prime_field(3).unwrap();
        let err = matrix_ring(&MatrixShape::new(Family::Full, 4, f3), &Limits::default()).unwrap_err();
        assert!(err.is_capacity());
    }

    #[test]
    fn encode_rejects_grids_outside_the_family() {
        let ops = MatrixOps::new(&MatrixShape::new(Family::UpperTriangular, 2, prime_field(2).unwrap())).unwrap();
        assert_eq!(ops.encode(&[vec![0, 0], vec![1, 0]]), None);
        assert_eq!(ops.scaled_unit(1, 2, 1), Some(2));
    }
}
