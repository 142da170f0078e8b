//! Dense linear algebra over a prime field `F_p`.
//!
//! Vectors are coordinate slices; a vector's canonical index is
//! `sum_k v[k] * p^k`, so the last coordinate is the most significant.
//! Subspaces are kept in reduced echelon form with respect to each vector's
//! *highest* nonzero coordinate, which makes it cheap to enumerate a subspace
//! in increasing index order and to pick its least nonzero member.

pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    // p is small; Fermat's little theorem.
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Canonical index of a coordinate vector.
pub fn vector_index(v: &[u32], p: u32) -> u128 {
    v.iter().rev().fold(0u128, |acc, &c| acc * p as u128 + c as u128)
}

/// A subspace of `F_p^ambient` in high-pivot reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    p: u32,
    ambient: usize,
    /// Sorted by pivot, highest first. Each vector has coefficient 1 at its
    /// pivot, zeros above it, and every other basis vector is zero there.
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Self {
            p,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of arbitrary generators.
    pub fn span(p: u32, ambient: usize, generators: Vec<Vec<u32>>) -> Self {
        let mut rows: Vec<Vec<u32>> = generators
            .into_iter()
            .map(|mut v| {
                v.iter_mut().for_each(|c| *c %= p);
                v
            })
            .collect();
        let mut basis: Vec<Vec<u32>> = Vec::new();
        let mut pivots = Vec::new();
        for pos in (0..ambient).rev() {
            let Some(k) = rows.iter().position(|r| r[pos] != 0) else {
                continue;
            };
            let mut pivot_row = rows.swap_remove(k);
            let inv = inv_mod(pivot_row[pos], p);
            pivot_row.iter_mut().for_each(|c| *c = *c * inv % p);
            for r in rows.iter_mut().chain(basis.iter_mut()) {
                let factor = r[pos];
                if factor != 0 {
                    for (c, &pc) in r.iter_mut().zip(&pivot_row) {
                        *c = (*c + p - factor * pc % p) % p;
                    }
                }
            }
            basis.push(pivot_row);
            pivots.push(pos);
        }
        Self {
            p,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Number of vectors, `p^dim`, saturating.
    pub fn cardinality(&self) -> u128 {
        (self.p as u128).saturating_pow(self.dim() as u32)
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// The nonzero member of least canonical index.
    pub fn least_nonzero(&self) -> Option<Vec<u32>> {
        self.basis.last().cloned()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w: Vec<u32> = v.iter().map(|c| c % self.p).collect();
        for (b, &pos) in self.basis.iter().zip(&self.pivots) {
            let factor = w[pos];
            if factor != 0 {
                for (c, &bc) in w.iter_mut().zip(b) {
                    *c = (*c + self.p - factor * bc % self.p) % self.p;
                }
            }
        }
        w.iter().all(|&c| c == 0)
    }

    /// All members in increasing canonical index order, zero first.
    pub fn iter_sorted(&self) -> SubspaceIter<'_> {
        SubspaceIter {
            space: self,
            digits: vec![0; self.dim()],
            done: false,
        }
    }
}

pub struct SubspaceIter<'a> {
    space: &'a Subspace,
    /// digits[0] multiplies the highest-pivot basis vector (most significant).
    digits: Vec<u32>,
    done: bool,
}

impl Iterator for SubspaceIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let p = self.space.p;
        let mut v = vec![0u32; self.space.ambient];
        for (b, &d) in self.space.basis.iter().zip(&self.digits) {
            if d != 0 {
                for (c, &bc) in v.iter_mut().zip(b) {
                    *c = (*c + d * bc) % p;
                }
            }
        }
        // increment, least significant digit last
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < p {
                break;
            }
            self.digits[k] = 0;
        }
        Some(v)
    }
}

/// Kernel of the linear map given by `rows` (each of length `ncols`).
pub fn kernel(p: u32, ncols: usize, rows: &[Vec<u32>]) -> Subspace {
    let mut m: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.iter().map(|c| c % p).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(k) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, k);
        let inv = inv_mod(m[rank][col], p);
        m[rank].iter_mut().for_each(|c| *c = *c * inv % p);
        let pivot = m[rank].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != rank && r[col] != 0 {
                let factor = r[col];
                for (c, &pc) in r.iter_mut().zip(&pivot) {
                    *c = (*c + p - factor * pc % p) % p;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let mut is_pivot = vec![false; ncols];
    pivot_cols.iter().for_each(|&c| is_pivot[c] = true);
    let gens = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u32; ncols];
            v[f] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect();
    Subspace::span(p, ncols, gens)
}
