//! Polynomials over GF(2) and the characteristic polynomial of `P_n`.

use std::fmt;

/// Polynomial over GF(2); bit `d` of the packed coefficient vector is the
/// coefficient of `λ^d`. Trailing zero words are trimmed so that equal
/// polynomials have equal storage.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `λ^d`.
    pub fn monomial(d: usize) -> Self {
        let mut words = vec![0; d / 64 + 1];
        words[d / 64] = 1 << (d % 64);
        Self { words }
    }

    /// Builds a polynomial from the exponents with coefficient 1. Repeated
    /// exponents cancel in pairs.
    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        exps.into_iter()
            .fold(Self::zero(), |acc, d| acc.add(&Self::monomial(d)))
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, d: usize) -> bool {
        self.words
            .get(d / 64)
            .is_some_and(|w| (w >> (d % 64)) & 1 == 1)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| i * 64 + b)
        })
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Self::normalized(words)
    }

    /// Multiplication by `λ`.
    pub fn shift_mul(&self) -> Gf2Poly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut words = Vec::with_capacity(self.words.len() + 1);
        let mut carry = 0;
        for &w in &self.words {
            words.push((w << 1) | carry);
            carry = w >> 63;
        }
        words.push(carry);
        Self::normalized(words)
    }

    pub fn is_monomial(&self, d: usize) -> bool {
        *self == Self::monomial(d)
    }

    fn normalized(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }
}

pub fn poly_add(p: &Gf2Poly, q: &Gf2Poly) -> Gf2Poly {
    p.add(q)
}

pub fn poly_shift_mul(p: &Gf2Poly) -> Gf2Poly {
    p.shift_mul()
}

/// `det(λI - A)` over GF(2) for the adjacency matrix of `P_n`, via the
/// tridiagonal recurrence `p_t = λ p_{t-1} - p_{t-2}`, in which the minus
/// sign becomes a plus. `p_0 = 1`, `p_1 = λ`.
pub fn charpoly_path(n: usize) -> Gf2Poly {
    let mut prev = Gf2Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Gf2Poly::monomial(1);
    for _ in 2..=n {
        let next = cur.shift_mul().add(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn charpoly_is_monomial(n: usize) -> bool {
    charpoly_path(n).is_monomial(n)
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|d| match d {
                0 => "1".to_owned(),
                1 => "λ".to_owned(),
                d => format!("λ^{d}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}
