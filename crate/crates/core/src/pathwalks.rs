//! The path graph `P_n`, its walks, and three independent ways of counting
//! them: brute-force enumeration, a vector dynamic program over any
//! [`Semiring`], and a native bit-vector parity DP.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::scalar::{Gf2, Semiring};

/// Environment variable that overrides [`EnumConfig::DEFAULT_CAP`].
pub const ENUM_CAP_ENV: &str = "NILPATH_ENUM_CAP";

/// Vertex count of a path graph, remembering `m` when `n = 2^m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathSpec {
    m: Option<u32>,
    n: usize,
}

impl PathSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let m = (n + 1)
            .is_power_of_two()
            .then(|| (n + 1).trailing_zeros());
        Ok(Self { m, n })
    }

    pub fn from_exponent(m: u32) -> Result<Self> {
        if !(1..=32).contains(&m) {
            return Err(Error::ExponentRange { m });
        }
        Ok(Self {
            m: Some(m),
            n: (1usize << m) - 1,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `Some(m)` exactly when `n = 2^m - 1`.
    #[inline]
    pub fn m(&self) -> Option<u32> {
        self.m
    }

    pub fn adjacency(&self) -> Gf2Matrix {
        path_adjacency(self.n).expect("n >= 1")
    }
}

/// A sequence of 1-based vertices. Validity against a particular `P_n` is
/// checked separately with [`Walk::validate`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    /// Panics on an empty sequence; a walk always has a start vertex.
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a walk has at least one vertex");
        Self { vertices }
    }

    #[inline]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of steps.
    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    #[inline]
    pub fn end(&self) -> usize {
        *self.vertices.last().expect("non-empty")
    }

    /// Positions `t` with `vertices[t] == v`.
    pub fn visits(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(move |(t, &u)| (u == v).then_some(t))
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::InvalidWalk {
                n,
                reason: format!("vertex {v} outside 1..={n}"),
            });
        }
        if let Some(t) = self
            .vertices
            .windows(2)
            .position(|pair| pair[0].abs_diff(pair[1]) != 1)
        {
            return Err(Error::InvalidWalk {
                n,
                reason: format!(
                    "step {t} goes from {} to {}",
                    self.vertices[t],
                    self.vertices[t + 1]
                ),
            });
        }
        Ok(())
    }
}

impl From<Vec<usize>> for Walk {
    fn from(vertices: Vec<usize>) -> Self {
        Walk::new(vertices)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, v) in self.vertices.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Walk{self}")
    }
}

/// Upper bound on the walk length the brute-force enumerator accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub cap: usize,
}

impl EnumConfig {
    pub const DEFAULT_CAP: usize = 24;

    /// Default cap, overridden by `NILPATH_ENUM_CAP` when it parses.
    pub fn from_env() -> Self {
        std::env::var(ENUM_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(|cap| Self { cap })
            .unwrap_or_default()
    }

    fn admit(&self, k: usize) -> Result<()> {
        if k > self.cap {
            Err(Error::EnumerationCap { k, cap: self.cap })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            cap: Self::DEFAULT_CAP,
        }
    }
}

/// Adjacency matrix of `P_n`: bit `(i, j)` set iff `|i - j| = 1`.
pub fn path_adjacency(n: usize) -> Result<Gf2Matrix> {
    Gf2Matrix::from_entries(n, |i, j| i.abs_diff(j) == 1)
}

pub fn walk_is_valid(n: usize, w: &Walk) -> bool {
    w.validate(n).is_ok()
}

pub(crate) fn check_vertex(n: usize, v: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if (1..=n).contains(&v) {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}

/// Calls `visit` on every walk of length `k` in `P_n` starting at `x`, and
/// ending at `y` when given, in lexicographic order of vertex sequences.
/// Stops early when `visit` breaks.
pub fn for_each_walk<B>(
    n: usize,
    x: usize,
    y: Option<usize>,
    k: usize,
    config: &EnumConfig,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Result<ControlFlow<B>> {
    check_vertex(n, x)?;
    if let Some(y) = y {
        check_vertex(n, y)?;
    }
    config.admit(k)?;

    let mut path = Vec::with_capacity(k + 1);
    path.push(x);
    Ok(extend(n, y, k, &mut path, &mut visit))
}

fn extend<B>(
    n: usize,
    y: Option<usize>,
    k: usize,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let v = *path.last().expect("non-empty");
    let remaining = k + 1 - path.len();
    if let Some(y) = y {
        let gap = v.abs_diff(y);
        if gap > remaining || (remaining - gap) % 2 == 1 {
            return ControlFlow::Continue(());
        }
    }
    if remaining == 0 {
        return visit(path);
    }
    for next in [v.wrapping_sub(1), v + 1] {
        if (1..=n).contains(&next) {
            path.push(next);
            let flow = extend(n, y, k, path, visit);
            path.pop();
            flow?;
        }
    }
    ControlFlow::Continue(())
}

/// All walks of length `k` from `x` to `y` in `P_n`, lexicographically ordered.
pub fn enumerate_walks(
    n: usize,
    x: usize,
    y: usize,
    k: usize,
    config: &EnumConfig,
) -> Result<Vec<Walk>> {
    let mut out = Vec::new();
    let _ = for_each_walk::<()>(n, x, Some(y), k, config, |vs| {
        out.push(Walk::new(vs.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Counts of walks of length `k` from `x` to every vertex, indexed `0..n`
/// (entry `v - 1` for vertex `v`).
///
/// Runs `c_{t+1}[v] = c_t[v-1] + c_t[v+1]` from the indicator of `x`.
pub fn walk_count_vector<T: Semiring>(n: usize, x: usize, k: usize) -> Result<Vec<T>> {
    check_vertex(n, x)?;
    let mut counts = vec![T::zero(); n];
    counts[x - 1] = T::one();
    for _ in 0..k {
        counts = step_counts(&counts);
    }
    Ok(counts)
}

/// One step of the walk-count recurrence on `P_n` (with `n = counts.len()`).
pub(crate) fn step_counts<T: Semiring>(counts: &[T]) -> Vec<T> {
    let n = counts.len();
    (0..n)
        .map(|v| {
            let left = if v > 0 { counts[v - 1].clone() } else { T::zero() };
            let right = if v + 1 < n {
                counts[v + 1].clone()
            } else {
                T::zero()
            };
            left + right
        })
        .collect()
}

/// Number of walks of length `k` from `x` to `y`, in any [`Semiring`].
pub fn count_walks<T: Semiring>(n: usize, x: usize, y: usize, k: usize) -> Result<T> {
    check_vertex(n, y)?;
    let counts = walk_count_vector::<T>(n, x, k)?;
    Ok(counts[y - 1].clone())
}

/// Exact number of walks of length `k` from `x` to `y` in `P_n`.
pub fn count_walks_exact(n: usize, x: usize, y: usize, k: usize) -> Result<BigUint> {
    count_walks::<BigUint>(n, x, y, k)
}

/// Parity of the number of walks of length `k` from `x` to `y` in `P_n`.
///
/// The state is a packed bit vector of reachable-with-odd-multiplicity
/// vertices; one step is `(s << 1) ^ (s >> 1)` truncated to `n` bits.
pub fn count_walks_parity(n: usize, x: usize, y: usize, k: usize) -> Result<Gf2> {
    check_vertex(n, x)?;
    check_vertex(n, y)?;
    let words = n.div_ceil(64);
    let tail_mask = if n % 64 == 0 {
        u64::MAX
    } else {
        (1u64 << (n % 64)) - 1
    };
    let mut state = vec![0u64; words];
    state[(x - 1) / 64] = 1 << ((x - 1) % 64);
    let mut next = vec![0u64; words];
    for _ in 0..k {
        for w in 0..words {
            let up = (state[w] << 1) | if w > 0 { state[w - 1] >> 63 } else { 0 };
            let down = (state[w] >> 1)
                | if w + 1 < words {
                    state[w + 1] << 63
                } else {
                    0
                };
            next[w] = up ^ down;
        }
        next[words - 1] &= tail_mask;
        std::mem::swap(&mut state, &mut next);
    }
    Ok(Gf2((state[(y - 1) / 64] >> ((y - 1) % 64)) & 1 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{ToPrimitive, Zero};
    use proptest::prelude::*;

    fn w(vs: &[usize]) -> Walk {
        Walk::new(vs.to_vec())
    }

    #[test]
    fn path_spec_forms() {
        assert_eq!(PathSpec::new(7).unwrap().m(), Some(3));
        assert_eq!(PathSpec::new(6).unwrap().m(), None);
        assert_eq!(PathSpec::new(1).unwrap().m(), Some(1));
        assert_eq!(PathSpec::from_exponent(4).unwrap().n(), 15);
        assert_eq!(PathSpec::new(0), Err(Error::ZeroDimension));
        assert_eq!(
            PathSpec::from_exponent(0),
            Err(Error::ExponentRange { m: 0 })
        );
    }

    #[test]
    fn adjacency_examples() {
        assert!(path_adjacency(1).unwrap().is_zero());
        assert_eq!(
            path_adjacency(3).unwrap().to_rows(),
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]
        );
        assert!(path_adjacency(0).is_err());
        let a = path_adjacency(9).unwrap();
        for i in 1..=9 {
            assert!(!a.get(i, i));
            for j in 1..=9 {
                assert_eq!(a.get(i, j), a.get(j, i));
            }
        }
    }

    #[test]
    fn walk_validity_examples() {
        assert!(walk_is_valid(7, &w(&[3, 4, 5, 6, 7, 6, 5, 4])));
        assert!(!walk_is_valid(7, &w(&[7, 8])));
        assert!(!walk_is_valid(7, &w(&[3, 3])));
        assert!(!walk_is_valid(7, &w(&[0, 1])));
        assert!(walk_is_valid(1, &w(&[1])));
        assert_eq!(w(&[3, 4, 5]).len(), 2);
    }

    #[test]
    fn enumeration_examples() {
        let cfg = EnumConfig::default();
        assert!(enumerate_walks(1, 1, 1, 1, &cfg).unwrap().is_empty());
        assert_eq!(
            enumerate_walks(7, 1, 7, 6, &cfg).unwrap(),
            vec![w(&[1, 2, 3, 4, 5, 6, 7])]
        );
        assert_eq!(
            enumerate_walks(3, 1, 1, 2, &cfg).unwrap(),
            vec![w(&[1, 2, 1])]
        );
        assert_eq!(enumerate_walks(4, 2, 2, 0, &cfg).unwrap(), vec![w(&[2])]);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let walks = enumerate_walks(6, 3, 4, 9, &EnumConfig::default()).unwrap();
        assert!(!walks.is_empty());
        assert!(walks.windows(2).all(|p| p[0] < p[1]));
        for walk in &walks {
            assert!(walk_is_valid(6, walk));
            assert_eq!((walk.start(), walk.end(), walk.len()), (3, 4, 9));
        }
    }

    #[test]
    fn enumeration_respects_cap() {
        let cfg = EnumConfig { cap: 5 };
        assert_eq!(
            enumerate_walks(3, 1, 1, 6, &cfg),
            Err(Error::EnumerationCap { k: 6, cap: 5 })
        );
        assert_eq!(EnumConfig::default().cap, 24);
    }

    #[test]
    fn rejects_bad_vertices() {
        assert_eq!(
            count_walks_exact(7, 8, 1, 3),
            Err(Error::VertexOutOfRange { vertex: 8, n: 7 })
        );
        assert!(count_walks_parity(7, 1, 0, 3).is_err());
        assert!(enumerate_walks(7, 1, 9, 3, &EnumConfig::default()).is_err());
    }

    #[test]
    fn exact_count_examples() {
        assert_eq!(count_walks_exact(7, 1, 7, 6).unwrap(), BigUint::from(1u8));
        assert!(count_walks_exact(1, 1, 1, 5).unwrap().is_zero());
        // Brute force over all 2^7 step sequences: 28 walks from 3 to 2.
        let mut brute = 0;
        for steps in 0u32..(1 << 7) {
            let mut v = 3i64;
            let mut ok = true;
            for t in 0..7 {
                v += if steps >> t & 1 == 1 { 1 } else { -1 };
                ok &= (1..=7).contains(&v);
            }
            if ok && v == 2 {
                brute += 1;
            }
        }
        assert_eq!(brute, 28);
        assert_eq!(count_walks_exact(7, 3, 2, 7).unwrap(), BigUint::from(28u8));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(count_walks_parity(7, 3, 2, 7).unwrap(), Gf2::ZERO);
        assert_eq!(count_walks_parity(7, 1, 7, 6).unwrap(), Gf2::ONE);
        for x in 1..=7 {
            for y in 1..=7 {
                assert_eq!(count_walks_parity(7, x, y, 7).unwrap(), Gf2::ZERO);
            }
        }
    }

    #[test]
    fn parity_crosses_word_boundaries() {
        let n = 130;
        let a = path_adjacency(n).unwrap().pow(70);
        for (x, y) in [(1, 71), (60, 66), (64, 65), (100, 128), (130, 60)] {
            assert_eq!(
                count_walks_parity(n, x, y, 70).unwrap().0,
                a.get(x, y),
                "({x}, {y})"
            );
        }
    }

    #[test]
    fn exact_counts_do_not_overflow() {
        let c = count_walks_exact(200, 100, 100, 150).unwrap();
        assert!(c.bits() > 64);
        assert!(c.to_u64().is_none());
    }

    proptest! {
        #[test]
        fn parity_consistency(n in 1usize..=16, k in 0usize..=20, xs in (0usize..16, 0usize..16)) {
            let (x, y) = (xs.0 % n + 1, xs.1 % n + 1);
            let exact = count_walks_exact(n, x, y, k).unwrap();
            let parity = count_walks_parity(n, x, y, k).unwrap();
            prop_assert_eq!(parity.0, exact.bit(0));
            prop_assert_eq!(parity.0, path_adjacency(n).unwrap().pow(k as u64).get(x, y));
            prop_assert_eq!(count_walks::<Gf2>(n, x, y, k).unwrap(), parity);
        }

        #[test]
        fn bipartite_zero(n in 1usize..=20, k in 0usize..=30, xs in (0usize..20, 0usize..20)) {
            let (x, y) = (xs.0 % n + 1, xs.1 % n + 1);
            if (k + x.abs_diff(y)) % 2 == 1 {
                prop_assert!(count_walks_exact(n, x, y, k).unwrap().is_zero());
            }
        }

        #[test]
        fn reversal_and_mirror_symmetry(n in 1usize..=20, k in 0usize..=30, xs in (0usize..20, 0usize..20)) {
            let (x, y) = (xs.0 % n + 1, xs.1 % n + 1);
            let c = count_walks_exact(n, x, y, k).unwrap();
            prop_assert_eq!(&c, &count_walks_exact(n, y, x, k).unwrap());
            prop_assert_eq!(&c, &count_walks_exact(n, n + 1 - x, n + 1 - y, k).unwrap());
        }
    }
}
