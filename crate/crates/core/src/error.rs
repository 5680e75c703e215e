use crate::ordinal::Ordinal;
use crate::worm::Worm;

/// Precondition violations and internal-consistency failures.
///
/// Parse errors live in [`crate::textio::ParseError`]; everything else that
/// can go wrong in the calculus is reported here.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// `left_sub(x, y)` asks for the unique `e` with `x + e = y`, which
    /// exists only when `x <= y`.
    #[error("left subtraction -({x}) + ({y}) undefined: {x} > {y}")]
    LeftSubUndefined { x: Ordinal, y: Ordinal },

    /// Downshifting a worm subtracts the level from every entry, so every
    /// entry must be at least the level.
    #[error("cannot shift {worm} down by {level}: entry {entry} is too small")]
    ShiftDownUndefined {
        level: Ordinal,
        entry: Ordinal,
        worm: Worm,
    },

    /// Fundamental sequences are defined for worms of the form `1B` where
    /// every entry of `B` is at least 1.
    #[error("no fundamental sequence for {worm}: expected first entry 1 and the rest >= 1")]
    FundamentalSequenceShape { worm: Worm },

    /// Brute-force enumeration grows as `|alphabet|^len`; the guard keeps
    /// accidental blowups out of test runs.
    #[error("enumeration length {requested} exceeds the guard limit {limit}")]
    LengthGuard { requested: usize, limit: usize },

    /// Worm enumeration over an empty alphabet is almost certainly a bug in
    /// the caller.
    #[error("worm enumeration needs a nonempty alphabet")]
    EmptyAlphabet,

    /// A step-function constructor received steps that do not describe a
    /// finitely supported function on the ordinals.
    #[error("malformed step function: {reason}")]
    MalformedStepFunction { reason: String },

    /// The consistency-sequence driver could not find the next point where
    /// the sequence changes. This means one of the calculus routines is
    /// wrong, so we abort loudly rather than emit a truncated sequence.
    #[error(
        "consistency sequence of {worm} stalled at level {level} with value {value}: \
         no remaining limit breakpoint candidates"
    )]
    SequenceStalled {
        worm: Worm,
        level: Ordinal,
        value: Ordinal,
    },

    /// An emitted sequence value disagreed with a direct recomputation of
    /// the order type at that level.
    #[error(
        "consistency sequence of {worm} is inconsistent at level {level}: \
         emitted {emitted}, recomputed {recomputed}"
    )]
    SequenceMismatch {
        worm: Worm,
        level: Ordinal,
        emitted: Ordinal,
        recomputed: Ordinal,
    },
}
