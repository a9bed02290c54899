use crate::coxeter::Diagram;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot reflect through the zero vector")]
    ZeroRoot,
    #[error("operation not supported for diagram {0}")]
    UnsupportedDiagram(Diagram),
    #[error("rank {0} is outside the supported range")]
    InvalidRank(usize),
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not a highest weight: coordinate {index} is negative")]
    NegativeCoordinate { index: usize },
    #[error("vectors belong to different diagrams or bases")]
    IncompatibleVectors,
    #[error("window squared radius must be positive")]
    EmptyWindow,
    #[error("patch squared radius must be positive")]
    EmptyPatch,
    #[error("enumeration box holds {size} points, above the cap of {cap}")]
    ResourceLimit { size: u128, cap: u128 },
    #[error("integer overflow while enumerating lattice points")]
    Overflow,
}
