use thiserror::Error;

/// Errors surfaced by code construction, gadget synthesis and expansion
/// analysis. Infeasible linear solves are values (`None`), not errors.
#[derive(Error, Debug)]
pub enum Error {
    #[error("operator lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("X check {x_row} and Z check {z_row} anticommute (odd overlap)")]
    CommutationViolation { x_row: usize, z_row: usize },

    #[error("code has no logical qubits")]
    NoLogicals,

    #[error("operator is not a logical operator: {reason}")]
    NotLogical { reason: String },

    #[error("expected a pure {expected}-type operator")]
    WrongPauliType { expected: char },

    #[error("no catalog entry for r = {0} (supported: 5..=8)")]
    NoCatalogEntry(u32),

    #[error("shift {shift} out of range for lift {lift}")]
    ShiftOutOfRange { shift: usize, lift: usize },

    #[error("permutation is not a bijection on [0, {n})")]
    NotAPermutation { n: usize },

    #[error("{v} vertices exceeds the exhaustive scan bound {bound}")]
    ExhaustiveBoundExceeded { v: usize, bound: usize },

    #[error("gadget qubit {qubit} has degree {degree}, contracted form needs degree 2")]
    DegreeNotTwo { qubit: usize, degree: usize },

    #[error("no augmentation within {budget} added edges restores expansion")]
    AugmentationBudgetExceeded { budget: usize },

    #[error("gadgets were built against different base codes")]
    BaseCodeMismatch,

    #[error("cannot bridge a gadget with itself")]
    SelfBridge,

    #[error("empty target list")]
    EmptyTargets,

    #[error("weight surplus between bridged gadgets must be even, got {0}")]
    OddBridgeSurplus(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
