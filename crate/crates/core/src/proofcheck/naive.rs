//! The "obvious" single-pivot reflection and where it breaks.
//!
//! Instead of cutting at the fixed midpoint, pick the repeated vertex whose
//! label has the most factors of two and reflect the excursion between its
//! first two visits. Near the ends of the path the reflected excursion can
//! leave the graph.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::pathwalks::{for_each_walk, EnumConfig, Walk};

use super::reflect_segment;

/// The repeated vertex with the largest power of two dividing it.
///
/// Ties go to the vertex whose second visit comes first in the walk, then to
/// the earlier first visit. `None` when no vertex repeats.
pub fn naive_pivot(w: &Walk) -> Option<usize> {
    naive_choice(w).map(|c| c.vertex)
}

struct Choice {
    vertex: usize,
    first: usize,
    second: usize,
}

fn naive_choice(w: &Walk) -> Option<Choice> {
    let vs = w.vertices();
    let top = vs.iter().copied().max()?;
    let mut first = vec![usize::MAX; top + 1];
    let mut second = vec![usize::MAX; top + 1];
    for (t, &v) in vs.iter().enumerate() {
        if first[v] == usize::MAX {
            first[v] = t;
        } else if second[v] == usize::MAX {
            second[v] = t;
        }
    }
    (1..=top)
        .filter(|&v| second[v] != usize::MAX)
        .map(|v| Choice {
            vertex: v,
            first: first[v],
            second: second[v],
        })
        .min_by_key(|c| {
            (
                std::cmp::Reverse(c.vertex.trailing_zeros()),
                c.second,
                c.first,
            )
        })
}

/// Reflects the excursion between the first two visits of [`naive_pivot`].
///
/// [`Error::OutOfBounds`] is the interesting outcome here, not a bug.
pub fn naive_reflect(n: usize, w: &Walk) -> Result<Walk> {
    w.validate(n)?;
    let choice = naive_choice(w).ok_or(Error::NoRepeatedVertex)?;
    reflect_segment(n, w, choice.vertex, choice.first, choice.second)
}

/// Lexicographically first walk of length `k` in `P_n` (any endpoints) on
/// which [`naive_reflect`] leaves the graph.
pub fn find_naive_failure(n: usize, k: usize, config: &EnumConfig) -> Result<Option<Walk>> {
    find_naive_failure_where(n, k, config, |_| true)
}

/// As [`find_naive_failure`], restricted to walks accepted by `filter`.
pub fn find_naive_failure_where(
    n: usize,
    k: usize,
    config: &EnumConfig,
    filter: impl Fn(&Walk) -> bool,
) -> Result<Option<Walk>> {
    for start in 1..=n {
        let flow = for_each_walk(n, start, None, k, config, |vs| {
            let w = Walk::new(vs.to_vec());
            if filter(&w) && matches!(naive_reflect(n, &w), Err(Error::OutOfBounds { .. })) {
                ControlFlow::Break(w)
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if let ControlFlow::Break(w) = flow {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(vs: &[usize]) -> Walk {
        Walk::new(vs.to_vec())
    }

    #[test]
    fn pivot_examples() {
        assert_eq!(naive_pivot(&w(&[1, 2, 3, 4, 3, 2, 1])), Some(2));
        assert_eq!(naive_pivot(&w(&[1, 2, 3, 4, 5, 6, 7])), None);
        assert_eq!(naive_pivot(&w(&[4, 5, 4])), Some(4));
        assert_eq!(naive_pivot(&w(&[3])), None);
    }

    #[test]
    fn pivot_tie_break_uses_second_visit() {
        // 4 repeats and has the largest exponent.
        let walk = w(&[2, 3, 4, 5, 6, 7, 6, 5, 4, 3, 2]);
        assert_eq!(naive_pivot(&walk), Some(4));
        // 2 and 6 tie on exponent 1; 2 repeats first.
        let walk = w(&[2, 3, 2, 3, 4, 5, 6, 5, 6]);
        assert_eq!(naive_pivot(&walk), Some(2));
        let walk = w(&[6, 5, 6, 7, 6, 5, 4, 3, 2, 1, 2]);
        // 4 appears once; among {6, 2} (exponent 1) 6 repeats at step 2.
        assert_eq!(naive_pivot(&walk), Some(6));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(naive_reflect(7, &w(&[4, 5, 4])).unwrap(), w(&[4, 3, 4]));
        assert!(matches!(
            naive_reflect(7, &w(&[6, 5, 4, 5, 6])),
            Err(Error::OutOfBounds { .. })
        ));
        assert_eq!(naive_reflect(7, &w(&[2, 3, 2])).unwrap(), w(&[2, 1, 2]));
        assert_eq!(
            naive_reflect(7, &w(&[1, 2, 3])),
            Err(Error::NoRepeatedVertex)
        );
    }

    #[test]
    fn failure_search() {
        let cfg = EnumConfig::default();
        let witness = find_naive_failure(7, 7, &cfg).unwrap().expect("exists");
        assert_eq!(witness.len(), 7);
        assert!(matches!(
            naive_reflect(7, &witness),
            Err(Error::OutOfBounds { .. })
        ));
        for k in 0..6 {
            assert_eq!(find_naive_failure(1, k, &cfg).unwrap(), None);
        }
        let midpoint_only =
            find_naive_failure_where(7, 4, &cfg, |w| naive_pivot(w) == Some(4)).unwrap();
        assert_eq!(midpoint_only, None);
    }
}
