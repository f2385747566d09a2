//! Error types shared across the crate.

use thiserror::Error;

use crate::num::Scalar;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polyhedron is empty")]
    EmptyPolyhedron,
    #[error("generator set is empty")]
    NoGenerators,
    #[error("expected a cone (nonzero offsets present)")]
    NotACone,
    #[error("expected a pointed polyhedron")]
    NotPointed,
    #[error("point lies outside the polyhedron")]
    PointOutside,
    #[error("ray does not meet the relative interior of the recession cone")]
    RayNotInterior,
    #[error("cannot take the relative-interior ray of the zero cone")]
    ZeroCone,
    #[error("{0} is not a face of {1}")]
    NotAFace(String, String),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("cell {cell} has a face missing from the cell list")]
    FaceClosureViolation { cell: usize, missing: String },
    #[error("cells {first} and {second} meet in a set that is not a common face (witness point {witness:?})")]
    BadIntersection {
        first: usize,
        second: usize,
        witness: Vec<Scalar>,
    },
    #[error("recession cones do not form a fan: cones of cells {first} and {second} intersect badly")]
    NotAFan { first: usize, second: usize },
    #[error("cell {cell} is not a pointed cone")]
    NotAPointedCone { cell: usize },
    #[error("empty cell list")]
    Empty,
    #[error("recession cone of cell {cell} is not in the fan")]
    RecessionNotInFan { cell: usize },
    #[error("fan is not contained in the closed upper half-space")]
    NotInUpperHalfSpace,
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("cell {cell} violates class {class}: {reason}")]
    ClassViolation {
        cell: String,
        class: String,
        reason: String,
    },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeedError {
    #[error("the preserved complex is not a subcomplex: cell {cell} missing")]
    NotSubcomplex { cell: usize },
    #[error("recession cone of preserved cell {cell} is not in the target fan")]
    RecessionNotInSigma { cell: usize },
    #[error("target fan together with recession cones is not a fan")]
    SigmaPrimeNotFan,
    #[error(transparent)]
    ClassViolation(#[from] ClassError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CompletionError {
    #[error("no completion found in dimension {dim} after {attempts} attempts")]
    CompletionNotFound { dim: usize, attempts: usize },
    #[error("support is not a polytope and no star-shape center was found")]
    NoCenterFound,
    #[error("complex is not star-shaped: {reason}")]
    NotStarShaped { reason: String },
    #[error("cell {cell} has a non-centrally-symmetric bounded 2-face")]
    NotZonotopal { cell: String },
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("point is not in the support of the complex")]
    NotInSupport,
    #[error("stratum cone is not a cone of the fan")]
    StratumNotInFan,
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error("the fan of the seed and the recession cone are incompatible")]
    CompatibilityError,
    #[error(transparent)]
    Geometry(#[from] GeomError),
}
