//! Reference implementations used only as test oracles. None of these share
//! code paths with the library routines they check.

#![allow(dead_code)]

use std::collections::HashMap;

use nilpath_core::{Gf2Matrix, Gf2Poly};

/// Bit-by-bit triple loop over GF(2).
pub fn naive_gf2_mul(a: &Gf2Matrix, b: &Gf2Matrix) -> Gf2Matrix {
    let n = a.dim();
    Gf2Matrix::from_entries(n, |i, j| {
        (1..=n).fold(false, |acc, z| acc ^ (a.get(i, z) & b.get(z, j)))
    })
    .unwrap()
}

/// Dense integer polynomial, index = degree.
pub type IntPoly = Vec<i64>;

fn poly_mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn poly_add_scaled(acc: &mut IntPoly, p: &IntPoly, sign: i64) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += sign * b;
    }
}

/// `det(λI - A)` for the `n x n` path adjacency matrix, by Laplace expansion
/// along rows over integer polynomials (memoised on the set of used
/// columns). Reduction mod 2 is left to the caller.
pub fn symbolic_charpoly_path(n: usize) -> IntPoly {
    // Entry (i, j) of λI - A, 0-based.
    let entry = |i: usize, j: usize| -> IntPoly {
        if i == j {
            vec![0, 1]
        } else if i.abs_diff(j) == 1 {
            vec![-1]
        } else {
            Vec::new()
        }
    };
    let mut memo: HashMap<u32, IntPoly> = HashMap::new();
    fn expand(
        row: usize,
        used: u32,
        n: usize,
        entry: &dyn Fn(usize, usize) -> IntPoly,
        memo: &mut HashMap<u32, IntPoly>,
    ) -> IntPoly {
        if row == n {
            return vec![1];
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = Vec::new();
        let mut sign = 1;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let e = entry(row, col);
            if !e.is_empty() {
                let minor = expand(row + 1, used | (1 << col), n, entry, memo);
                poly_add_scaled(&mut acc, &poly_mul(&e, &minor), sign);
            }
            sign = -sign;
        }
        memo.insert(used, acc.clone());
        acc
    }
    expand(0, 0, n, &entry, &mut memo)
}

pub fn reduce_mod2(p: &IntPoly) -> Gf2Poly {
    Gf2Poly::from_exponents(
        p.iter()
            .enumerate()
            .filter(|(_, c)| c.rem_euclid(2) == 1)
            .map(|(d, _)| d),
    )
}
