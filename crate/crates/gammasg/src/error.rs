//! Error type shared by every module of the crate.

use thiserror::Error;

/// Unified error type for construction, analysis, enumeration, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// The ternary table violates associativity. The witness is the first
    /// tuple (in lexicographic (a, alpha, b, beta, c) order) with
    /// [[a alpha b] beta c] != [a alpha [b beta c]].
    #[error(
        "table is not associative: witness (a={a}, alpha={alpha}, b={b}, beta={beta}, c={c})"
    )]
    NotAssociative {
        a: usize,
        alpha: usize,
        b: usize,
        beta: usize,
        c: usize,
    },

    /// A table entry is not a valid element index. `position` is the flat
    /// row-major offset ((a*m + gamma)*n + b); `line` is filled in when the
    /// table came from a text file.
    #[error("table entry at position {position} is out of range{}", fmt_line(.line))]
    IndexOutOfRange {
        position: usize,
        line: Option<usize>,
    },

    /// The declared zero element fails its absorption law against the given
    /// element and gamma.
    #[error("declared zero is not absorbing: fails against element {element}, gamma {gamma}")]
    BadZero { element: usize, gamma: usize },

    /// The declared zero index is not a valid element index.
    #[error("zero index {zero} is out of range for carrier size {n}")]
    ZeroOutOfRange { zero: usize, n: usize },

    /// A structural precondition on sizes or lengths failed.
    #[error("bad shape: {detail}")]
    BadShape { detail: String },

    /// An ideal-generation operation was given an empty generating set.
    #[error("generating set is empty")]
    EmptyGenerator,

    /// The ideal catalog exceeded the configured size cap.
    #[error("ideal catalog exceeds the cap of {limit} sets")]
    CatalogTooLarge { limit: usize },

    /// A zero-dependent operation was invoked on an instance without a
    /// designated zero.
    #[error("instance has no designated zero element")]
    NoZero,

    /// The given subset is not closed under the ternary product; the witness
    /// is the first triple whose product escapes the subset.
    #[error("subset is not closed: [{a} {gamma} {b}] falls outside it")]
    NotClosed { a: usize, gamma: usize, b: usize },

    /// The instance is not commutative; the witness is the first triple with
    /// [a gamma b] != [b gamma a].
    #[error("instance is not commutative: [a={a} gamma={gamma} b={b}] != [b gamma a]")]
    NotCommutative { a: usize, gamma: usize, b: usize },

    /// The given subset is not a (two-sided) ideal where one was required.
    #[error("the given subset is not an ideal of the required kind")]
    NotAnIdeal,

    /// The given family of sets is not totally ordered by inclusion; (i, j)
    /// is the first incomparable pair of positions.
    #[error("sets at positions {i} and {j} are incomparable; not a chain")]
    NotAChain { i: usize, j: usize },

    /// A chain member failed the primality precondition; `index` is its
    /// position in the input.
    #[error("chain member at position {index} is not a prime ideal")]
    NotPrime { index: usize },

    /// A chain operation was given no members.
    #[error("chain is empty")]
    EmptyChain,

    /// Exhaustive enumeration was requested beyond the cell cap.
    #[error("exhaustive enumeration of {cells} cells exceeds the cap of {cap}")]
    TooLarge { cells: usize, cap: usize },

    /// Rejection sampling failed to find an associative table in the
    /// allotted number of tries.
    #[error("no associative table found after {tries} tries")]
    ExhaustedTries { tries: usize },

    /// A binary Cayley table is not associative; witness is the first
    /// (a, b, c) with (a*b)*c != a*(b*c).
    #[error("binary table is not associative: witness (a={a}, b={b}, c={c})")]
    NotAssociativeBinary { a: usize, b: usize, c: usize },

    /// Canonicalization was requested beyond the permutation budget.
    #[error("canonicalization budget of {budget} permutation pairs exceeded")]
    TooLargeForCanonicalization { budget: usize },

    /// A text file failed to parse; `line` is 1-based.
    #[error("syntax error at line {line}: {reason}")]
    SyntaxError { line: usize, reason: String },

    /// An unknown conformance check id was requested.
    #[error("unknown check id: {id}")]
    UnknownCheck { id: String },

    /// Filesystem failure while reading or writing corpora.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn fmt_line(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!(" (line {l})"),
        None => String::new(),
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
