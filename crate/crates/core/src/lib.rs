//! Enumeration of irreducible and atomic numerical semigroups with a fixed
//! Frobenius number.
//!
//! A numerical semigroup `S` with Frobenius number `F` is stored as its gap
//! vector `b₁…b_F`, where `bᵢ = 1` exactly when `i ∉ S`.
//!
//! * [`irreducible`] builds I(F) as a rooted tree.
//! * [`atomic`] computes the ANI-semigroups N(F, l) level by level from joins of
//!   gap vectors and assembles A(F) = I(F) ∪ N(F).
//! * [`oracle`] enumerates all of S(F) from the definitions and is used to
//!   referee the two above.
//!
//! The inner loops run on rayon when the `parallel` feature is enabled (the
//! default); [`Execution::Sequential`] is always available.

pub mod atomic;
mod enumerator;
mod error;
mod exec;
pub mod gap_vector;
pub mod irreducible;
pub mod oracle;
pub mod semigroup;

pub use atomic::{
    ani_pair_feasible, ani_semigroups, ani_with_frobenius, atomic_semigroups, join, levels,
    minimals, pad, AniLevelResult, AniStages, EnumerationReport, LevelSet,
};
pub use enumerator::{Enumerator, DEFAULT_MAX_FROBENIUS};
pub use error::{Error, Result};
pub use exec::Execution;
pub use gap_vector::GapVector;
pub use irreducible::{
    canonical_irreducible, children, enumerate_irreducible, irreducible_tree, parent, TreeNode,
};
pub use oracle::Oracle;
pub use semigroup::{ClassLabel, NumericalSemigroup, ParityClass};
