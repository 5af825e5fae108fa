//! Error type shared by the whole crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An entry of an inversion sequence exceeds its positional bound.
    OutOfRange {
        position: usize,
        value: usize,
        bound: usize,
    },
    /// The given word is not a permutation of `1..=n`.
    NotPermutation { detail: String },
    /// A class-spec string could not be parsed. `position` is a byte offset.
    Parse { position: usize, message: String },
    /// The input lies outside the domain class of a bijection. The witness is
    /// the first offending index triple (1-based) and the pattern it forms.
    NotInClass {
        class: String,
        pattern: String,
        positions: (usize, usize, usize),
    },
    /// Single moves are only defined on non-fixed positions.
    NotMovable { position: usize },
    /// Exhaustive search found no permutation with the requested b-code.
    NoPreimage,
    /// A permutation set is not closed under the modified Foata-Strehl action.
    NotInvariant { perm: String, letter: usize },
    /// Gamma-vector extraction requires a symmetric polynomial.
    NotSymmetric { coeffs: String, degree: usize },
    /// A truncated-series identity failed at the given order.
    MismatchAt {
        order: usize,
        expected: String,
        got: String,
    },
    /// Enumeration was requested beyond the configured ceiling.
    ResourceLimit { n: usize, max: usize },
    /// No check is registered under this name.
    UnknownCheck { name: String },
    /// The operation expects the other universe (sequences vs permutations).
    UniverseMismatch { expected: String, got: String },
    /// A structural invariant that should be unbreakable was broken; a bug.
    InternalInvariant { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange {
                position,
                value,
                bound,
            } => write!(
                f,
                "entry {value} at position {position} exceeds the bound {bound}"
            ),
            Error::NotPermutation { detail } => write!(f, "not a permutation: {detail}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at offset {position}: {message}")
            }
            Error::NotInClass {
                class,
                pattern,
                positions: (i, j, k),
            } => write!(
                f,
                "input is not in {class}: positions ({i},{j},{k}) form a {pattern} pattern"
            ),
            Error::NotMovable { position } => {
                write!(f, "position {position} is fixed and cannot be moved")
            }
            Error::NoPreimage => write!(f, "no permutation has the requested b-code"),
            Error::NotInvariant { perm, letter } => write!(
                f,
                "set is not closed under the modified Foata-Strehl action: phi'_{letter}({perm}) escapes"
            ),
            Error::NotSymmetric { coeffs, degree } => write!(
                f,
                "polynomial {coeffs} is not symmetric about degree {degree}/2"
            ),
            Error::MismatchAt {
                order,
                expected,
                got,
            } => write!(
                f,
                "series mismatch at order {order}: expected {expected}, got {got}"
            ),
            Error::ResourceLimit { n, max } => write!(
                f,
                "n = {n} exceeds the resource limit {max} (override with INVSEQ_MAX_N)"
            ),
            Error::UnknownCheck { name } => write!(f, "unknown check: {name}"),
            Error::UniverseMismatch { expected, got } => {
                write!(f, "class universe mismatch: expected {expected}, got {got}")
            }
            Error::InternalInvariant { message } => {
                write!(f, "internal invariant violated: {message}")
            }
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// Stable machine-readable tag, used by the JSON error object and the C API.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OutOfRange { .. } => "out-of-range",
            Error::NotPermutation { .. } => "not-permutation",
            Error::Parse { .. } => "parse",
            Error::NotInClass { .. } => "not-in-class",
            Error::NotMovable { .. } => "not-movable",
            Error::NoPreimage => "no-preimage",
            Error::NotInvariant { .. } => "not-invariant",
            Error::NotSymmetric { .. } => "not-symmetric",
            Error::MismatchAt { .. } => "mismatch-at",
            Error::ResourceLimit { .. } => "resource-limit",
            Error::UnknownCheck { .. } => "unknown-check",
            Error::UniverseMismatch { .. } => "universe-mismatch",
            Error::InternalInvariant { .. } => "internal-invariant",
        }
    }

    /// Process exit code used by the CLI: 2 for usage errors, 3 for the
    /// resource limit, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnknownCheck { .. } | Error::UniverseMismatch { .. } => 2,
            Error::ResourceLimit { .. } => 3,
            _ => 1,
        }
    }
}
