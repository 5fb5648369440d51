//! Brute-force verification against explicit representations.

pub mod module;
pub mod multiplicity;
pub mod orbit;
pub mod realization;

pub use module::{build_irrep, HighestWeightModule, DEFAULT_DIM_CAP};
pub use multiplicity::{
    check_w_vector, compare_semigroup, enumerate_semigroup, semi_invariant_dim, semi_invariants, w_vector,
    MultiplicityRecord, SemigroupComparison, WVectorCheck,
};
pub use orbit::{open_orbit_check, OrbitReport};
pub use realization::MatrixRealization;
