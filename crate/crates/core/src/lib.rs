//! Exact-arithmetic polyhedral geometry: polyhedra, complexes, fans, and the
//! machinery to subdivide and complete polyhedral complexes while restricting
//! recession cones to a prescribed fan.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! tolerances anywhere. The central objects are:
//!
//! * [`Polyhedron`] — canonical irredundant H-representation with a cached
//!   V-representation,
//! * [`Complex`] / [`Fan`] — finite polyhedral complexes given by maximal
//!   cells, validated on construction,
//! * [`SubdivisionSeed`] — finite data generating an infinite, locally finite
//!   subdivision, queryable through bounded windows,
//! * the completion pipelines in [`completion`].

pub mod arrangement;
pub mod classes;
pub mod complex;
pub mod completion;
pub mod error;
pub mod lazy;
pub mod linalg;
pub mod linsys;
pub mod lp;
pub mod num;
pub mod polyhedron;
pub mod quotient;
pub mod star;
pub mod subdivision;
pub mod toric;

mod dd;

pub use classes::{ClassSpec, RayLadder};
pub use complex::{Complex, Fan};
pub use error::{ClassError, ComplexError, CompletionError, GeomError, SeedError};
pub use linsys::{Constraint, LinearSystem};
pub use lp::LpOutcome;
pub use num::Scalar;
pub use polyhedron::{Face, Polyhedron, VRep};
pub use quotient::QuotientMap;
pub use subdivision::{CellId, ChainLink, SubdivisionSeed};
pub use toric::{ExtendedPoint, ToricSpace};
