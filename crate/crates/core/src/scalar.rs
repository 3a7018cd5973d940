//! Scalars for walk counting and dense reference matrices.
//!
//! Walk counts only need addition, multiplication, zero and one, so the
//! counting routines are generic over [`Semiring`]. Plugging in
//! [`num_bigint::BigUint`] gives exact counts, `u64` gives fast counts that
//! overflow near length 64, and [`Gf2`] gives parities.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

/// Anything with `+`, `*`, `0` and `1` that can be cloned.
pub trait Semiring: Clone + Zero + One + fmt::Debug {}

impl<T> Semiring for T where T: Clone + Zero + One + fmt::Debug {}

/// An element of Z/2Z. Addition is XOR, multiplication is AND.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    #[inline]
    pub fn bit(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for Gf2 {
    fn from(b: bool) -> Self {
        Gf2(b)
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    #[inline]
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    #[inline]
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2::ONE
    }
}

impl fmt::Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Row-major square matrix over a [`Semiring`], 1-based accessors.
///
/// This is the straightforward triple-loop reference; the packed
/// [`Gf2Matrix`](crate::Gf2Matrix) is the fast path.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Semiring> DenseMatrix<T> {
    pub fn from_entries(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_entries(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based. Panics when out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Panics on dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        Self::from_entries(n, |i, j| {
            (1..=n).fold(T::zero(), |acc, z| {
                acc + self.get(i, z).clone() * rhs.get(z, j).clone()
            })
        })
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u64) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| acc.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.n.max(1)))
            .finish()
    }
}
