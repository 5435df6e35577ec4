use thiserror::Error;

/// Errors raised by semigroup construction and the enumeration routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested gap set is empty, i.e. the caller asked for the whole of ℕ,
    /// which has no Frobenius number.
    #[error("empty gap set: the semigroup of all non-negative integers has no Frobenius number")]
    EmptyGapSet,
    #[error("0 belongs to every numerical semigroup and cannot be a gap")]
    ZeroGap,
    #[error("not closed under addition: {a} + {b} = {} is a gap", a + b)]
    NotClosed { a: u32, b: u32 },
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generators have gcd {0}, so the complement is infinite")]
    GcdNotOne(u32),
    #[error("{0} is not a special gap")]
    NotSpecialGap(u32),
    #[error("{0} already belongs to the semigroup")]
    NotAGap(u32),
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(u32, u32),
    #[error("invalid bit string {0:?}: expected a non-empty string of '0' and '1'")]
    Parse(String),
    #[error("the last position of a semigroup vector must be a gap")]
    LastBitNotGap,
    #[error("the Frobenius number must be positive")]
    ZeroFrobenius,
    #[error("semigroup is not irreducible with Frobenius number {0}")]
    NotIrreducible(u32),
    #[error("no numerical semigroup has special gaps {{{g1},{g2}}}")]
    InfeasiblePair { g1: u32, g2: u32 },
    #[error("Frobenius number {requested} exceeds the configured limit {limit}")]
    LimitExceeded { requested: u32, limit: u32 },
    #[error("irreducible-by-special-gaps and inclusion-maximal sets disagree for F = {0}")]
    OracleInconsistent(u32),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
