use thiserror::Error;

use crate::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a frame needs at least one element")]
    EmptyFrame,
    #[error("frame element labels must be non-empty")]
    EmptyLabel,
    #[error("duplicate frame element `{0}`")]
    DuplicateLabel(String),
    #[error("frame has {size} elements, more than the cap of {cap}")]
    FrameTooLarge { size: usize, cap: usize },
    #[error("`{0}` is not an element of the frame")]
    UnknownLabel(String),
    #[error("mask {bits:#b} has bits outside a frame of size {size}")]
    MaskOutOfRange { bits: u64, size: usize },
    #[error("operands belong to different frames")]
    FrameMismatch,

    #[error("positive mass {0} assigned to the empty set")]
    MassOnEmptySet(Rational),
    #[error("negative mass {mass} on {set}")]
    NegativeMass { set: String, mass: Rational },
    #[error("masses sum to {0}, expected exactly 1")]
    MassSum(Rational),
    #[error("focal set {0} listed more than once")]
    DuplicateFocalSet(String),

    #[error("total conflict at combination step {step}: the bodies' supports are disjoint (kappa = 1), so no decision set can be formed")]
    TotalConflict { step: usize },
    #[error("no bodies to combine")]
    NoBodies,
    #[error("an audit needs at least two bodies, got {0}")]
    TooFewBodies(usize),

    #[error("table is not a belief function: inverted mass at {set} is {mass}")]
    NotABeliefFunction { set: String, mass: Rational },
    #[error("expected a belief table, got a plausibility table")]
    WrongTableKind,

    #[error("parameter {name} = {value} is out of range")]
    ParameterOutOfRange { name: &'static str, value: Rational },
    #[error("closed-form masses disagree with the combination at {0}")]
    ClosedFormMismatch(String),
    #[error("grid density must be at least 2, got {0}")]
    GridTooCoarse(u32),

    #[error("cannot parse `{0}` as an exact rational")]
    ParseRational(String),
}
