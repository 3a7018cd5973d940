//! Nilpotency of the path-graph adjacency matrix over GF(2).
//!
//! For `n = 2^m - 1` the adjacency matrix `A` of the path `P_n` satisfies
//! `A^n = 0` over Z/2Z, and `n` is the smallest such exponent. This crate
//! checks that claim along several independent routes:
//!
//! * [`gf2`]: packed GF(2) matrices, square-and-multiply powers and the
//!   nilpotency index,
//! * [`pathwalks`]: walk enumeration and walk-count DPs, which agree
//!   entrywise with adjacency powers,
//! * [`proofcheck`]: the combinatorial parity argument (three-class split,
//!   reflection pairing, induction on `m`) as an executable verifier, plus
//!   the naive reflection that fails,
//! * [`charpoly`]: the characteristic polynomial of `P_n` over GF(2).
//!
//! Walk counting is generic over a [`Semiring`] scalar; the aliases below
//! fix the common choices.

#![forbid(unsafe_code)]

pub mod charpoly;
pub mod error;
pub mod gf2;
pub mod pathwalks;
pub mod proofcheck;
pub mod report;
pub mod scalar;

pub use charpoly::{charpoly_is_monomial, charpoly_path, poly_add, poly_shift_mul, Gf2Poly};
pub use error::{Error, Result};
pub use gf2::Gf2Matrix;
pub use pathwalks::{
    count_walks, count_walks_exact, count_walks_parity, enumerate_walks, for_each_walk,
    path_adjacency, walk_count_vector, walk_is_valid, EnumConfig, PathSpec, Walk,
};
pub use proofcheck::{
    class2_decompose, class_census, classify, find_naive_failure, find_naive_failure_where,
    naive_pivot, naive_reflect, reflect_class3, theorem_check, theorem_check_with, ClassCensus,
    ClassTag, TheoremOptions, TheoremOutcome, WalkClass,
};
pub use report::{Detail, ParamValue, ParityReport, Verdict};
pub use scalar::{DenseMatrix, Gf2, Semiring};

/// Exact walk counts.
pub type ExactCount = num_bigint::BigUint;
/// Integer adjacency powers with exact entries.
pub type IntMatrix = DenseMatrix<num_bigint::BigUint>;
/// Fixed-width integer matrices; entries overflow for long walks.
pub type U64Matrix = DenseMatrix<u64>;
/// Unpacked GF(2) matrices, one `Gf2` per entry.
pub type BitMatrix = DenseMatrix<Gf2>;

/// 0/1 adjacency matrix of `P_n` over any scalar.
pub fn path_adjacency_dense<T: Semiring>(n: usize) -> DenseMatrix<T> {
    DenseMatrix::from_entries(n, |i, j| {
        if i.abs_diff(j) == 1 {
            T::one()
        } else {
            T::zero()
        }
    })
}
