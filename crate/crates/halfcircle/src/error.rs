//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by graph construction, word rewriting, and the
/// semifield/monoid operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The pairing data does not describe a disjoint union of type A/D/E
    /// diagrams (so the Weyl group may be infinite and no longest element
    /// exists).
    #[error("not a simply-laced finite diagram: {0}")]
    NotSimplyLacedFinite(String),

    /// A letter label was not found in the graph.
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    /// A word was required to be reduced and is not.
    #[error("word is not reduced at position {0}")]
    NotReduced(usize),

    /// The requested letter is not a descent on the requested side.
    #[error("letter `{letter}` is not a {side} descent")]
    NotADescent { letter: String, side: &'static str },

    /// Two words passed to `rewrite_plan` represent different group elements.
    #[error("words represent different group elements")]
    DifferentElements,

    /// Enumeration was asked for more words than the configured guard allows.
    #[error("enumeration exceeds guard of {0} words")]
    TooLarge(usize),

    /// Two scalars from different semifields were combined.
    #[error("mixed semifields: {0} vs {1}")]
    MixedSemifields(String, String),

    /// The nonnegative part K+ is only defined for tropical semifields.
    #[error("semifield {0} has no nonnegative part")]
    NoPlusPart(String),

    /// The requested scalar operation is not defined for this semifield.
    #[error("operation `{op}` unsupported for semifield {kind}")]
    Unsupported { op: &'static str, kind: String },

    /// A strictly positive rational was required.
    #[error("value {0} is not strictly positive")]
    NotPositive(String),

    /// Coordinate vector length does not match the word length.
    #[error("coordinate length {got} does not match word length {want}")]
    LengthMismatch { got: usize, want: usize },

    /// An element was required to lie in the nonnegative part.
    #[error("element has a coordinate outside the nonnegative part")]
    NotInPlusPart,

    /// Two elements live over different graphs or semifields.
    #[error("operands disagree on graph or semifield: {0}")]
    SpecMismatch(String),

    /// The closed-form membership test is only available for the built-in
    /// rank-2/3 fixtures.
    #[error("no closed-form image description for this word: {0}")]
    UnsupportedFixture(String),

    /// A postcondition guaranteed by the theory failed; this signals a bug
    /// in the implementation, not bad input.
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
