//! Executable form of the parity argument for walks in `P_{2^m - 1}`.
//!
//! Walks of a fixed length between fixed endpoints are split by how often
//! they visit a pivot vertex (the midpoint `2^l` in the induction):
//!
//! * class 1 never visits the pivot,
//! * class 2 visits it exactly once and factors into two one-sided walks,
//! * class 3 visits it at least twice and is paired off by reflecting the
//!   excursion between the first two visits.
//!
//! [`theorem_check`] runs the induction on `m` with these three cases and
//! records which argument settled each class.

mod census;
mod naive;
mod theorem;

pub use census::{class_census, first_arrival_counts, ClassCensus};
pub use naive::{find_naive_failure, find_naive_failure_where, naive_pivot, naive_reflect};
pub use theorem::{
    theorem_check, theorem_check_with, Certificate, Class1Evidence, Class2Evidence,
    Class3Evidence, Side, TheoremOptions, TheoremOutcome,
};


use crate::error::{Error, Result};
use crate::pathwalks::{check_vertex, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Class1,
    Class2,
    Class3,
}

impl ClassTag {
    pub fn from_visits(visits: usize) -> Self {
        match visits {
            0 => ClassTag::Class1,
            1 => ClassTag::Class2,
            _ => ClassTag::Class3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkClass {
    pub tag: ClassTag,
    pub pivot_visits: usize,
}

/// Class of `w` relative to `pivot`, counting visits at every position
/// including both endpoints.
pub fn classify(n: usize, w: &Walk, pivot: usize) -> Result<WalkClass> {
    w.validate(n)?;
    check_vertex(n, pivot)?;
    let pivot_visits = w.visits(pivot).count();
    Ok(WalkClass {
        tag: ClassTag::from_visits(pivot_visits),
        pivot_visits,
    })
}

fn require_class(n: usize, w: &Walk, pivot: usize, expected: ClassTag) -> Result<()> {
    let found = classify(n, w, pivot)?.tag;
    if found == expected {
        Ok(())
    } else {
        Err(Error::WrongClass {
            pivot,
            expected,
            found,
        })
    }
}

/// A class-2 walk cut at its unique pivot visit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class2Split {
    /// Position of the pivot visit.
    pub step: usize,
    /// Vertices before the pivot; `None` when the walk starts at the pivot.
    pub left: Option<Walk>,
    /// Vertices after the pivot; `None` when the walk ends at the pivot.
    pub right: Option<Walk>,
}

impl Class2Split {
    /// Reassembles `left ++ [pivot] ++ right`.
    pub fn splice(&self, pivot: usize) -> Walk {
        let mut vs = Vec::new();
        if let Some(left) = &self.left {
            vs.extend_from_slice(left.vertices());
        }
        vs.push(pivot);
        if let Some(right) = &self.right {
            vs.extend_from_slice(right.vertices());
        }
        Walk::new(vs)
    }
}

/// Splits a class-2 walk around its single pivot visit. The two pieces have
/// lengths `step - 1` and `k - step - 1`, and each stays on one side of the
/// pivot.
pub fn class2_decompose(n: usize, w: &Walk, pivot: usize) -> Result<Class2Split> {
    require_class(n, w, pivot, ClassTag::Class2)?;
    let vs = w.vertices();
    let step = w.visits(pivot).next().expect("class 2 has one visit");
    let left = (step > 0).then(|| Walk::new(vs[..step].to_vec()));
    let right = (step < w.len()).then(|| Walk::new(vs[step + 1..].to_vec()));
    Ok(Class2Split { step, left, right })
}

/// Reflects the excursion strictly between the first two visits of `pivot`
/// through the pivot (`v -> 2 * pivot - v`), leaving the rest of the walk
/// untouched.
///
/// The excursion has at least one vertex and never touches the pivot, so the
/// image always differs from `w`. Fails with [`Error::OutOfBounds`] when a
/// reflected vertex leaves `1..=n`, which can only happen for off-centre
/// pivots.
pub fn reflect_class3(n: usize, w: &Walk, pivot: usize) -> Result<Walk> {
    require_class(n, w, pivot, ClassTag::Class3)?;
    let mut visits = w.visits(pivot);
    let first = visits.next().expect("class 3");
    let second = visits.next().expect("class 3");
    reflect_segment(n, w, pivot, first, second)
}

pub(crate) fn reflect_segment(
    n: usize,
    w: &Walk,
    pivot: usize,
    first: usize,
    second: usize,
) -> Result<Walk> {
    let mut vs = w.vertices().to_vec();
    for v in &mut vs[first + 1..second] {
        let image = 2 * pivot as i64 - *v as i64;
        if image < 1 || image > n as i64 {
            return Err(Error::OutOfBounds {
                from: *v,
                to: image,
                n,
            });
        }
        *v = image as usize;
    }
    Ok(Walk::new(vs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(vs: &[usize]) -> Walk {
        Walk::new(vs.to_vec())
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(7, &w(&[1, 2, 1]), 4).unwrap().tag, ClassTag::Class1);
        let c2 = classify(7, &w(&[1, 2, 3, 4, 3, 2, 1]), 4).unwrap();
        assert_eq!((c2.tag, c2.pivot_visits), (ClassTag::Class2, 1));
        let c3 = classify(7, &w(&[4, 5, 4]), 4).unwrap();
        assert_eq!((c3.tag, c3.pivot_visits), (ClassTag::Class3, 2));
    }

    #[test]
    fn classify_rejects_invalid() {
        assert!(matches!(
            classify(7, &w(&[1, 3]), 4),
            Err(Error::InvalidWalk { .. })
        ));
        assert!(classify(7, &w(&[1, 2]), 9).is_err());
    }

    #[test]
    fn decompose_examples() {
        let s = class2_decompose(7, &w(&[1, 2, 3, 4, 3, 2, 1]), 4).unwrap();
        assert_eq!(s.step, 3);
        assert_eq!(s.left, Some(w(&[1, 2, 3])));
        assert_eq!(s.right, Some(w(&[3, 2, 1])));

        let s = class2_decompose(7, &w(&[4, 3, 2, 1]), 4).unwrap();
        assert_eq!((s.step, s.left, s.right), (0, None, Some(w(&[3, 2, 1]))));

        let s = class2_decompose(7, &w(&[2, 3, 4]), 4).unwrap();
        assert_eq!(s.splice(4), w(&[2, 3, 4]));
        assert_eq!((s.step, s.left, s.right), (2, Some(w(&[2, 3])), None));
    }

    #[test]
    fn decompose_rejects_other_classes() {
        assert_eq!(
            class2_decompose(7, &w(&[4, 5, 4]), 4),
            Err(Error::WrongClass {
                pivot: 4,
                expected: ClassTag::Class2,
                found: ClassTag::Class3
            })
        );
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect_class3(7, &w(&[4, 5, 4]), 4).unwrap(), w(&[4, 3, 4]));
        let walk = w(&[3, 4, 5, 6, 5, 4, 3, 2]);
        let image = reflect_class3(7, &walk, 4).unwrap();
        assert_eq!(image, w(&[3, 4, 3, 2, 3, 4, 3, 2]));
        assert!(crate::walk_is_valid(7, &image));
        assert_eq!(reflect_class3(7, &image, 4).unwrap(), walk);

        assert_eq!(
            reflect_class3(7, &w(&[6, 5, 4, 5, 6]), 6),
            Err(Error::OutOfBounds { from: 4, to: 8, n: 7 })
        );
    }

    #[test]
    fn reflect_rejects_non_class3() {
        assert!(matches!(
            reflect_class3(7, &w(&[3, 4, 5]), 4),
            Err(Error::WrongClass { .. })
        ));
    }
}
