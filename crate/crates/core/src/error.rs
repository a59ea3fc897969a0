//! Error type shared by all modules.

/// Everything that can go wrong when constructing or transforming the
/// combinatorial objects of this crate.
///
/// Mathematical preconditions that are documented on the individual
/// operations (e.g. "the input is semistandard") are generally *not*
/// re-checked at every call; the variants here cover malformed data that
/// would make an operation meaningless.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A part sequence that is not weakly decreasing.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// An inner shape that is not contained in its outer shape.
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    /// A column whose values are not strictly increasing positive integers.
    #[error("invalid column: {0}")]
    InvalidColumn(String),

    /// Tableau data inconsistent with its declared shape.
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    /// An entry outside the allowed alphabet `[1, bound]`.
    #[error("entry exceeds {what} at {where_}: {entry} > {bound}")]
    EntryOutOfRange {
        what: &'static str,
        where_: String,
        entry: u32,
        bound: u32,
    },

    /// A semistandardness violation, reported with the offending cell.
    #[error("not semistandard: {0}")]
    NotSemistandard(String),

    /// An operation that requires a straight shape received a skew one.
    #[error("skew shape not allowed: {0}")]
    SkewNotAllowed(String),

    /// An operation that requires a non-empty object received an empty one.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// Shapes that were required to match do not.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A pair that is not in the image of the bijection being inverted.
    #[error("not in image: {0}")]
    NotInImage(String),

    /// A character that cannot be written as a nonnegative integral
    /// combination of irreducible symplectic characters.
    #[error("character is not decomposable: {0}")]
    NonDecomposable(String),

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
