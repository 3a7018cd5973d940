//! Dense square matrices over GF(2) with word-packed rows.
//!
//! Row `i` occupies `stride` consecutive `u64` words. Column `j` (1-based)
//! of that row is bit `(j - 1) % 64` of word `(j - 1) / 64`, LSB first.
//! Storage bits past column `n` are always zero, so whole-word comparisons
//! and zero tests are exact.
//!
//! All public indices are 1-based to line up with vertex labels of `P_n`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    /// The `n x n` zero matrix.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let stride = n.div_ceil(WORD_BITS);
        Ok(Self {
            n,
            stride,
            words: vec![0; n * stride],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zero(n)?;
        for i in 1..=n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// Builds a matrix whose bit `(i, j)` is `entries(i, j)`, for `1 <= i, j <= n`.
    pub fn from_entries(n: usize, entries: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut m = Self::zero(n)?;
        for i in 1..=n {
            for j in 1..=n {
                if entries(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Bit `(i, j)`, 1-based.
    ///
    /// Panics if either index is outside `1..=n`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.check_index(i, j);
        let (w, b) = Self::locate(j);
        (self.row(i - 1)[w] >> b) & 1 == 1
    }

    /// Sets bit `(i, j)`, 1-based. Panics on out-of-range indices.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        self.check_index(i, j);
        let (w, b) = Self::locate(j);
        let stride = self.stride;
        let word = &mut self.words[(i - 1) * stride + w];
        if bit {
            *word |= 1 << b;
        } else {
            *word &= !(1 << b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.n).all(|i| {
            let (w, b) = Self::locate(i);
            self.row(i - 1)
                .iter()
                .enumerate()
                .all(|(idx, &word)| word == if idx == w { 1 << b } else { 0 })
        })
    }

    /// Number of set bits.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Product over GF(2).
    ///
    /// For every set bit `z` of row `i` of `self`, row `z` of `rhs` is XORed
    /// into row `i` of the result. Cost is one `stride`-word XOR per set bit
    /// of `self`, so sparse left factors are cheap.
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let stride = self.stride;
        let mut out = vec![0u64; self.words.len()];
        for (lhs_row, out_row) in self
            .words
            .chunks_exact(stride)
            .zip(out.chunks_exact_mut(stride))
        {
            for (w, &word) in lhs_row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let z = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    xor_into(out_row, rhs.row(z));
                }
            }
        }
        Ok(Gf2Matrix {
            n: self.n,
            stride,
            words: out,
        })
    }

    /// `self^k` by square-and-multiply; `k = 0` gives the identity.
    pub fn pow(&self, k: u64) -> Gf2Matrix {
        let mut result: Option<Gf2Matrix> = None;
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul_same(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_same(&base);
            }
        }
        result.unwrap_or_else(|| Self::identity(self.n).expect("n >= 1"))
    }

    /// Smallest `k >= 1` with `self^k = 0`, or `None` if the matrix is not
    /// nilpotent.
    ///
    /// Relies on the standard linear-algebra fact that an `n x n` nilpotent
    /// matrix already satisfies `A^n = 0`, so only exponents up to `n` are
    /// examined. Since `A^a = 0` implies `A^b = 0` for all `b >= a`, the
    /// largest `k < n` with `A^k != 0` is found greedily over the binary
    /// powers `A^(2^j)`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.n;
        let mut squares = vec![self.clone()];
        while (1usize << squares.len()) <= n - 1 {
            let last = squares.last().expect("non-empty");
            let next = last.mul_same(last);
            squares.push(next);
        }

        // Invariant: current = A^reached != 0.
        let mut current = Self::identity(n).expect("n >= 1");
        let mut reached = 0usize;
        for (j, square) in squares.iter().enumerate().rev() {
            let step = 1usize << j;
            if reached + step > n - 1 {
                continue;
            }
            let candidate = current.mul_same(square);
            if !candidate.is_zero() {
                current = candidate;
                reached += step;
            }
        }

        if reached < n - 1 {
            // A^(reached + 1) = 0 by maximality.
            return Some(reached + 1);
        }
        current.mul_same(self).is_zero().then_some(n)
    }

    /// Rows as 0/1 vectors, mainly for inspection and tests.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (1..=self.n)
            .map(|i| (1..=self.n).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    fn mul_same(&self, rhs: &Gf2Matrix) -> Gf2Matrix {
        self.mul(rhs).expect("dimensions agree")
    }

    #[inline]
    fn row(&self, i0: usize) -> &[u64] {
        &self.words[i0 * self.stride..(i0 + 1) * self.stride]
    }

    #[inline]
    fn locate(j: usize) -> (usize, usize) {
        ((j - 1) / WORD_BITS, (j - 1) % WORD_BITS)
    }

    #[inline]
    fn check_index(&self, i: usize, j: usize) {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "index ({i}, {j}) outside 1..={}",
            self.n
        );
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

impl Mul for &Gf2Matrix {
    type Output = Gf2Matrix;

    /// Panics on dimension mismatch; use [`Gf2Matrix::mul`] for a checked product.
    fn mul(self, rhs: &Gf2Matrix) -> Gf2Matrix {
        Gf2Matrix::mul(self, rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix({}x{})", self.n, self.n)?;
        if self.n <= 32 {
            write!(f, "\n{self}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let line: String = (1..=self.n)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
