use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Result;
use crate::pathwalks::{check_vertex, step_counts};

/// Exact class sizes for all walks of length `k` from `x` to `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    pub c1: BigUint,
    pub c2: BigUint,
    pub c3: BigUint,
    /// Entry `i` counts class-2 walks whose pivot visit is at position `i`.
    pub per_step_c2: Vec<BigUint>,
    /// Class-3 walks whose first excursion away from the pivot goes below it.
    pub c3_left: BigUint,
    /// Class-3 walks whose first excursion goes above the pivot.
    pub c3_right: BigUint,
}

impl ClassCensus {
    pub fn total(&self) -> BigUint {
        &self.c1 + &self.c2 + &self.c3
    }
}

// Pivot-visit phase. Once a walk has left the pivot after its first visit,
// the side it left towards is remembered; the reflection swaps those sides.
const NONE: usize = 0;
const AT_FIRST: usize = 1;
const ONCE_LEFT: usize = 2;
const ONCE_RIGHT: usize = 3;
const TWICE_LEFT: usize = 4;
const TWICE_RIGHT: usize = 5;
const PHASES: usize = 6;

fn advance(phase: usize, from: usize, to: usize, pivot: usize) -> usize {
    match phase {
        NONE if to == pivot => AT_FIRST,
        AT_FIRST if to < from => ONCE_LEFT,
        AT_FIRST => ONCE_RIGHT,
        ONCE_LEFT if to == pivot => TWICE_LEFT,
        ONCE_RIGHT if to == pivot => TWICE_RIGHT,
        other => other,
    }
}

/// Counts the walks of length `k` from `x` to `y` in `P_n` by class with
/// respect to `pivot`.
///
/// The class sizes come from a DP over (vertex, visit phase); the per-step
/// class-2 counts come separately from first-arrival counts, so
/// `sum(per_step_c2) == c2` is a genuine cross-check.
pub fn class_census(n: usize, pivot: usize, x: usize, y: usize, k: usize) -> Result<ClassCensus> {
    check_vertex(n, pivot)?;
    check_vertex(n, x)?;
    check_vertex(n, y)?;

    let mut table = vec![vec![BigUint::zero(); n + 1]; PHASES];
    table[if x == pivot { AT_FIRST } else { NONE }][x] = BigUint::from(1u8);
    for _ in 0..k {
        let mut next = vec![vec![BigUint::zero(); n + 1]; PHASES];
        for (phase, row) in table.iter().enumerate() {
            for v in 1..=n {
                if row[v].is_zero() {
                    continue;
                }
                for to in [v - 1, v + 1] {
                    if (1..=n).contains(&to) {
                        next[advance(phase, v, to, pivot)][to] += &row[v];
                    }
                }
            }
        }
        table = next;
    }

    let at_y = |phase: usize| table[phase][y].clone();
    let c1 = at_y(NONE);
    let c2 = at_y(AT_FIRST) + at_y(ONCE_LEFT) + at_y(ONCE_RIGHT);
    let c3_left = at_y(TWICE_LEFT);
    let c3_right = at_y(TWICE_RIGHT);
    let c3 = &c3_left + &c3_right;

    let into_pivot = first_arrival_counts(n, pivot, x, k)?;
    let from_pivot = first_arrival_counts(n, pivot, y, k)?;
    let per_step_c2 = (0..=k)
        .map(|i| &into_pivot[i] * &from_pivot[k - i])
        .collect();

    Ok(ClassCensus {
        c1,
        c2,
        c3,
        per_step_c2,
        c3_left,
        c3_right,
    })
}

/// Entry `i` (for `i` in `0..=k`) counts walks of length `i` from `start`
/// to `pivot` that touch the pivot only at their last vertex.
pub fn first_arrival_counts(n: usize, pivot: usize, start: usize, k: usize) -> Result<Vec<BigUint>> {
    check_vertex(n, pivot)?;
    check_vertex(n, start)?;
    let mut out = vec![BigUint::zero(); k + 1];
    if start == pivot {
        out[0] = BigUint::from(1u8);
        return Ok(out);
    }
    // Walks confined to the side of `start`, which is a path of its own.
    let (lo, hi) = if start < pivot {
        (1, pivot - 1)
    } else {
        (pivot + 1, n)
    };
    let neighbour = if start < pivot { pivot - 1 } else { pivot + 1 };
    let mut counts = vec![BigUint::zero(); hi - lo + 1];
    counts[start - lo] = BigUint::from(1u8);
    for slot in out.iter_mut().skip(1) {
        *slot = counts[neighbour - lo].clone();
        counts = step_counts(&counts);
    }
    Ok(out)
}
