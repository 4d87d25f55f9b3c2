use thiserror::Error;

/// Errors surfaced by the exact computation layers.
///
/// The `Internal*` variants signal arithmetic cross-checks that can only
/// fail if a computation path has a bug (inexact division where divisibility
/// is guaranteed, negative probability mass, mismatched dual-route sums).
/// They are reported rather than panicked on so callers can distinguish a
/// broken build from bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("cannot parse partition from `{input}`: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("weight mismatch in {context}: expected a partition of {expected}, got one of {found}")]
    WeightMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("closed form for multiplicities only covers 1 <= r <= {max_r} for this shape; got r = {r}")]
    ValidityRange { r: usize, max_r: usize },

    #[error("parameter out of range: {reason}")]
    BadParameter { reason: String },

    #[error("exact computation for n = {n} exceeds the supported ceiling of {max}")]
    Ceiling { n: usize, max: usize },

    #[error("parity mismatch: distributions live on different cosets")]
    ParityMismatch,

    #[error("size mismatch: distributions are over different symmetric groups ({lhs} vs {rhs})")]
    SizeMismatch { lhs: usize, rhs: usize },

    #[error("internal: division expected to be exact left a remainder in {context}")]
    InexactDivision { context: &'static str },

    #[error("internal: multiplicity came out negative in {context}")]
    NegativeMultiplicity { context: &'static str },

    #[error("internal: class `{class}` received negative probability mass")]
    NegativeMass { class: String },

    #[error("internal: probability masses sum to {total} instead of 1")]
    MassSumNotOne { total: String },

    #[error("internal: class `{class}` carries mass on the wrong coset")]
    MassOnWrongCoset { class: String },

    #[error("internal: hook-restricted spectral sum differs from the full sum over nontrivial shapes")]
    HookSumMismatch,

    #[error("internal: decomposition table dimension sum {got} differs from expected {expected}")]
    DimensionSumMismatch { expected: String, got: String },

    #[error("internal: cross-check failed: {context}")]
    Internal { context: &'static str },
}
