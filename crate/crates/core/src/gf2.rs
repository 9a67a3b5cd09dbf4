//! Dense bit-packed linear algebra over GF(2).
//!
//! Everything downstream (code validation, logical bases, gadget gauge
//! checks, distance search) reduces to rank / kernel / solve calls on
//! [`BitMatrix`]. Elimination always picks the lowest-index pivot column,
//! so reduced forms and kernel bases are reproducible across runs.

use crate::error::Error;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2), packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Vector with ones at the given positions. Positions must be `< len`.
    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len, "length mismatch in and");
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    /// Dot product mod 2.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD_BITS + b);
                w &= w - 1;
            }
        }
        out
    }

    pub fn intersects(&self, other: &BitVector) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Copy of the first `new_len` bits.
    pub fn truncated(&self, new_len: usize) -> BitVector {
        assert!(new_len <= self.len);
        let mut out = BitVector::zeros(new_len);
        for i in self.ones() {
            if i < new_len {
                out.set(i, true);
            }
        }
        out
    }

    /// Copy extended with zeros up to `new_len`.
    pub fn extended(&self, new_len: usize) -> BitVector {
        assert!(new_len >= self.len);
        let mut out = BitVector::zeros(new_len);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

/// A dense GF(2) matrix, row-major, one packed `BitVector` worth of words
/// per row. Dimensions are fixed at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols).max(1);
        BitMatrix {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVector], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            m.words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.bits[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.bits[r * self.stride + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.stride..(r + 1) * self.stride]
    }

    fn words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.bits[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector {
            len: self.cols,
            words: self.words(r).to_vec(),
        }
    }

    pub fn row_vectors(&self) -> Vec<BitVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        let (s, t) = (source * self.stride, target * self.stride);
        for i in 0..self.stride {
            let v = self.bits[s + i];
            self.bits[t + i] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.stride {
            self.bits.swap(a * self.stride + i, b * self.stride + i);
        }
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vector(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vector");
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.words(r).iter().zip(v.words()) {
                acc ^= a & b;
            }
            if acc.count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Row-combination product `x M` (x indexes rows).
    pub fn vector_mul(&self, x: &BitVector) -> BitVector {
        assert_eq!(x.len(), self.rows, "dimension mismatch in vector_mul");
        let mut out = BitVector::zeros(self.cols);
        for r in x.ones() {
            for (o, w) in out.words.iter_mut().zip(self.words(r)) {
                *o ^= w;
            }
        }
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                out.set(c, r, true);
            }
        }
        out
    }

    /// Stack `self` on top of `other` (equal column counts).
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut out = BitMatrix::zeros(self.rows + other.rows, self.cols);
        out.bits[..self.bits.len()].copy_from_slice(&self.bits);
        out.bits[self.bits.len()..].copy_from_slice(&other.bits);
        out
    }

    /// Place `self` and `other` side by side (equal row counts).
    pub fn hstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in self.row(r).ones() {
                out.set(r, c, true);
            }
            for c in other.row(r).ones() {
                out.set(r, self.cols + c, true);
            }
        }
        out
    }

    /// Reduced row echelon form, with pivot columns in ascending order.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            let Some(pivot_row) = (rank..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(rank, pivot_row);
            for r in 0..m.rows {
                if r != rank && m.get(r, c) {
                    m.xor_rows(r, rank);
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows form a basis of `{v : M v = 0}`, ordered by ascending free
    /// column. Row count is `cols - rank`.
    pub fn kernel_basis(&self) -> BitMatrix {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; self.cols];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            (0..self.cols).filter(|&c| !is_pivot[c]).collect()
        };
        let mut basis = BitMatrix::zeros(free.len(), self.cols);
        for (bi, &f) in free.iter().enumerate() {
            basis.set(bi, f, true);
            for (pr, &pc) in pivots.iter().enumerate() {
                if rref.get(pr, f) {
                    basis.set(bi, pc, true);
                }
            }
        }
        basis
    }

    /// Find `x` with `x M = b` (a combination of rows of `M` reproducing
    /// `b`), or `None` when `b` is outside the row space.
    pub fn solve_combination(&self, b: &BitVector) -> Option<BitVector> {
        assert_eq!(b.len(), self.cols, "rhs length must equal cols");
        // Eliminate on [M | I] so the augmented part tracks row operations.
        let aug = self.hstack(&BitMatrix::identity(self.rows));
        let (red, _) = aug.rref();
        let mut x = BitVector::zeros(self.rows);
        let mut residual = b.clone();
        for r in 0..red.rows {
            let row = red.row(r);
            let Some(&pivot) = row.ones().iter().find(|&&c| c < self.cols) else {
                continue;
            };
            if residual.get(pivot) {
                for c in row.ones() {
                    if c < self.cols {
                        residual.flip(c);
                    } else {
                        x.flip(c - self.cols);
                    }
                }
            }
        }
        if residual.is_zero() {
            Some(x)
        } else {
            None
        }
    }

    /// Whether `v` lies in the row space of `M`.
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        self.solve_combination(v).is_some()
    }
}

/// Symplectic-product helper on raw (x, z) halves; see `pauli` for the
/// operator-level wrapper.
pub fn symplectic_product_halves(
    x1: &BitVector,
    z1: &BitVector,
    x2: &BitVector,
    z2: &BitVector,
) -> Result<bool, Error> {
    if x1.len() != x2.len() {
        return Err(Error::LengthMismatch {
            left: x1.len(),
            right: x2.len(),
        });
    }
    Ok(x1.dot(z2) ^ z1.dot(x2))
}
