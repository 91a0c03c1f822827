use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the set is empty")]
    EmptySet,
    #[error("point is not a member of the set")]
    NotMember,
    #[error("empty input where at least one element is required")]
    EmptyInput,
    #[error("operation does not support strict inequalities in this representation")]
    UnsupportedStrict,
    #[error("operation does not support rays in this representation")]
    UnsupportedRays,
    #[error("input exceeds desk scale: {0}")]
    TooLarge(String),
    #[error("scaling by zero is not invertible")]
    ZeroScale,
    #[error("the set contains the origin; its positive hull is not representable here")]
    ContainsOrigin,
    #[error("descriptor does not name a proper nonempty face")]
    NotProperFace,
    #[error("no single positive combination of the face's rows cuts it exactly")]
    Unrepresentable,
    #[error("face descriptors refer to different parent sets")]
    ParentMismatch,
    #[error("intrinsic-core methods disagree: {}", fmt_verdicts(.verdicts))]
    MethodDisagreement { verdicts: Vec<(String, bool)> },
    #[error("point lies in the intrinsic core; no proper supporting hyperplane passes through it")]
    IsInteriorPoint,
    #[error("relative interiors intersect; proper separation hypothesis fails")]
    OverlappingInteriors,
    #[error("sets admit no proper separation: every separating hyperplane contains both")]
    NotProperlySeparable,
    #[error("chain is not totally ordered by inclusion")]
    ChainNotNested,
    #[error("composite set is not representable: {0}")]
    UnsupportedComposite(String),
    #[error("format error: {0}")]
    Format(String),
}

fn fmt_verdicts(verdicts: &[(String, bool)]) -> String {
    verdicts
        .iter()
        .map(|(name, v)| format!("{name}={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
