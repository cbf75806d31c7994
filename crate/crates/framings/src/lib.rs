//! Exact classification of mapping-class-group orbits of framings and spin
//! structures on compact oriented surfaces with boundary.
//!
//! A framing is encoded by its rotation numbers on a fixed homology basis;
//! a spin structure by the base values of a quadratic form over GF(2). The
//! crate computes the complete orbit invariants (boundary rotation profile,
//! Arf, the genus-1 gcd invariant, generalized Arf), decides equivalence,
//! produces canonical representatives with generator-word witnesses, and
//! ships brute-force oracles (exhaustive transvection closure, bounded BFS
//! over coordinate lattices) that certify the classification on desk-scale
//! instances.

use num_bigint::BigInt;

pub mod framing;
pub mod json;
pub mod oracle;
pub mod rel;
pub mod spin;
pub mod suites;
pub mod surface;

pub use framing::{Framing, Generator, OrbitKey, Sign};
pub use rel::{BoundaryData, RelFraming, RelGenerator, RelOrbitKey};
pub use spin::{BoundaryFunctional, LinFunctional, QuadForm, SpinOrbitDecision};
pub use surface::{BasisIndex, F2Class, IntClass, SurfaceSig};

/// Default seed for randomized verification suites.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid surface: boundary count must be at least 1, got {boundary}")]
    InvalidSurface { boundary: usize },

    #[error("{what}: expected length {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("operands live on different surfaces")]
    SurfaceMismatch,

    #[error("basis index {index} out of range 1..={max}")]
    BasisIndexOutOfRange { index: usize, max: usize },

    #[error("boundary component index {index} out of range 0..={max}")]
    BoundaryIndexOutOfRange { index: usize, max: usize },

    #[error("coordinate entries must be 0 or 1")]
    NotABit,

    #[error("boundary functional does not kill the boundary fundamental class (component sum is odd)")]
    BoundaryFunctionalOdd,

    #[error("Arf invariant undefined: the form restricts nontrivially to the boundary")]
    ArfUndefinedNonzeroRestriction,

    #[error("Arf invariant of the framing undefined: boundary profile entry nu[{j}] = {nu} is odd")]
    FramingArfUndefined { j: usize, nu: BigInt },

    #[error("generator {generator} is not applicable on a genus-{genus} surface with {boundary} boundary components")]
    GeneratorNotApplicable {
        generator: String,
        genus: usize,
        boundary: usize,
    },

    #[error("infeasible boundary profile: entries must sum to {expected}, got {got}")]
    InfeasibleProfileSum { expected: BigInt, got: BigInt },

    #[error("orbit key variant does not match a genus-{genus} surface")]
    KeyVariantMismatch { genus: usize },

    #[error("infeasible orbit key: a_tilde = {a_tilde} is not a positive divisor of gcd(nu) = {gcd_nu}")]
    InfeasibleATilde { a_tilde: BigInt, gcd_nu: BigInt },

    #[error("infeasible orbit key: Arf must be present exactly when every nu entry is even")]
    InfeasibleArfPresence,

    #[error("a_tilde requires genus >= 1")]
    ATildeNeedsPositiveGenus,

    #[error("relative framings with fixed boundary require the profile to sum to {expected}, got {got}")]
    InfeasibleRelativeBoundary { expected: BigInt, got: BigInt },

    #[error("relative genus-0 orbit classification is unsupported")]
    RelativeGenusZeroUnsupported,

    #[error("operation requires genus 1, surface has genus {genus}")]
    RequiresGenusOne { genus: usize },

    #[error("generator {generator} requires the handle at (A, 0) with A nonzero, found ({rot_a}, {rot_b})")]
    HandleShapeRequired {
        generator: String,
        rot_a: BigInt,
        rot_b: BigInt,
    },

    #[error("generator {generator} requires A = {rot_a} to divide nu[{j}] = {nu}")]
    DivisibilityRequired {
        generator: String,
        rot_a: BigInt,
        j: usize,
        nu: BigInt,
    },

    #[error("unresolved arc parity case: generalized Arf is odd but no boundary component 1..=n has odd nu")]
    UnresolvedArcCase,

    #[error("state space too large: 2g+n = {b1} exceeds the enumeration guard {max}")]
    SizeGuardExceeded { b1: usize, max: usize },
}
