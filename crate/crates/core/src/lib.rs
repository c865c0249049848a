//! Combinatorial invariants of integer partitions built from gcd-symmetric
//! polynomials, and what they decide about the algebra of matrices that
//! commute with a permutation matrix.
//!
//! For a permutation σ of cycle type λ, the invariant algebra S_n(σ, k)
//! over an algebraically closed field whose characteristic divides no part
//! of λ is a product of full matrix algebras, with `h_i(λ)` copies of
//! `M_i(k)`. Isomorphism and Morita equivalence of two such algebras are
//! decided from the `g`-vectors of the cycle types alone.
//!
//! Everything is exact: 64-bit integers with checked arithmetic, widened to
//! 128 bits inside elimination when minors grow.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod gcd_symm;
pub mod linalg;
pub mod oracles;
pub mod partition_poly;
pub mod partitions;
pub mod scalar;

/// The default exact scalar.
pub type Int = i64;
/// Wider scalar used when 64-bit elimination overflows.
pub type WideInt = i128;
pub type IntMatrix = linalg::ExactMatrix<Int>;
pub type WideMatrix = linalg::ExactMatrix<WideInt>;

pub use algebra::{
    cycle_type, dimension, is_semisimple, isomorphic, morita_equivalent, orbit_basis, pair_orbits,
    perm_matrix, wedderburn, FieldSpec, MoritaReport, OrbitBasis, OrbitDecomposition, Permutation,
    WedderburnShape,
};
pub use classify::{classify, self_equivalent, EquivalenceClass, EquivalenceClasses};
pub use error::{Error, Result};
pub use gcd_symm::{
    divisor_matrix, g_vector, gcd_matrix, gcd_matrix_det_and_bounds, gcd_product, h_vector,
    power_norm, DetBounds, DivisorMatrix, GVector, GcdMatrix, HVector,
};
pub use linalg::ExactMatrix;
pub use oracles::{
    brute_g, commutant_dimension, eigenvalue_multiplicities, verify_all, VerificationReport,
    VerifyConfig,
};
pub use partition_poly::{
    distinct_eigenvalue_count, epsilon, epsilon_eval, equivalent, PartitionPolynomial,
};
pub use partitions::{count_partitions, enumerate_partitions, Partition};
pub use scalar::ExactInt;

/// Resource limits shared by the library and the CLI.
pub mod limits {
    /// Largest n accepted by [`crate::classify`].
    pub const MAX_ENUMERATION_N: usize = 60;
    /// Largest n accepted by [`crate::verify_all`].
    pub const MAX_VERIFY_N: usize = 30;
    pub const DEFAULT_MATRIX_CAP: usize = 12;
    pub const MAX_MATRIX_CAP: usize = 16;
    /// Families enumerating all part subsets stop here (2^s work per partition).
    pub const DEFAULT_SUBSET_CAP: usize = 25;
    pub const PAIR_SWEEP_N: usize = 14;
    pub const CONCAT_SWEEP_N: usize = 9;
    pub const MULTISET_SWEEP_N: usize = 18;
}
