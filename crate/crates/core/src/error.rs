//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An element was combined with a lattice it does not belong to.
    #[error("element {element} does not belong to the {lattice} lattice")]
    DomainMismatch { lattice: &'static str, element: String },

    /// A lattice operation left the representable range.
    #[error("arithmetic overflow computing {op}({a}, {b})")]
    Overflow { op: &'static str, a: u64, b: u64 },

    /// An operation that needs at least one element received none.
    #[error("{op} requires a nonempty input")]
    EmptyInput { op: &'static str },

    /// Brute-force enumeration was asked to run past its configured cap.
    #[error("sequence length {n} exceeds the enumeration cap {cap}; use the distributive fast path or raise the cap")]
    CapExceeded { n: usize, cap: usize },

    /// Subset size outside `[1, n]`.
    #[error("subset size {k} is out of range for n = {n}")]
    SubsetSizeOutOfRange { k: usize, n: usize },

    /// Binomial coefficient arguments outside the supported exact range.
    #[error("binomial({n}, {k}) is outside the supported range (0 <= k <= n <= 62)")]
    BinomialOutOfRange { n: u64, k: u64 },

    /// The distributive fast path was requested on a lattice that does not
    /// declare distributivity.
    #[error("lattice is not declared distributive; the fast path is unsound on non-distributive lattices")]
    NotDistributive,

    /// A comparison sort was requested but two elements are incomparable.
    #[error("elements {a} and {b} are incomparable; the sequence is not totally ordered")]
    NotTotalOrder { a: String, b: String },

    /// Permutation length differs from the sequence length.
    #[error("permutation of length {perm} applied to a sequence of length {seq}")]
    LengthMismatch { perm: usize, seq: usize },

    /// An index mapping that is not a bijection.
    #[error("mapping is not a bijection on [1, n]")]
    NotBijection,

    /// Supplied bounds do not actually bound the input sequence.
    #[error("supplied bounds do not bound every element of the input sequence")]
    BoundsDoNotBound,

    /// Element text that does not parse in the given lattice.
    #[error("cannot parse element '{text}' in the {lattice} lattice: {reason}")]
    ParseElement { text: String, lattice: &'static str, reason: String },

    /// Lattice spec text that does not parse.
    #[error("cannot parse lattice spec '{text}': {reason}")]
    ParseSpec { text: String, reason: String },

    /// A finite-lattice table file that is structurally invalid.
    #[error("malformed lattice table: {0}")]
    MalformedTable(String),

    /// A finite-lattice table whose operations violate a lattice axiom.
    #[error("lattice axiom violated: {0}")]
    AxiomViolation(String),

    /// A powerset universe with more than 64 members.
    #[error("powerset universe has {n} members (maximum 64)")]
    UniverseTooLarge { n: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
