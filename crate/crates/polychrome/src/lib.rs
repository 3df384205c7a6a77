//! Polychromatic colorings of planar point sets against homothetic triangle
//! ranges.
//!
//! After an affine normalization every homothet of a fixed triangle becomes a
//! region `{x >= a, y >= b, x + y <= s}`. This crate provides:
//!
//! * exact rational planar primitives ([`geom`]),
//! * enumeration of all combinatorially distinct homothet ranges over a point
//!   set ([`ranges`]), which turns "every large homothet is polychromatic"
//!   into a finite, exactly checkable statement,
//! * base 2-coloring strategies and the color-doubling combinator that builds
//!   k-colorings out of them ([`coloring`]),
//! * a verifier and a witness extractor that, given a violation at the
//!   doubled level, mechanically derives a violation one level down
//!   ([`verify`], [`witness`]),
//! * instance generators, file formats, experiment orchestration, and SVG
//!   rendering for the command-line front end ([`gen`], [`io`],
//!   [`experiment`], [`svg`]).
//!
//! All predicates use arbitrary-precision rational arithmetic; no floating
//! point feeds back into any computation (floats appear only in SVG output).

pub mod bits;
pub mod coloring;
pub mod experiment;
pub mod gen;
pub mod geom;
pub mod io;
pub mod ranges;
pub mod svg;
pub mod verify;
pub mod witness;

pub use bits::BitSet;
pub use coloring::{Coloring, Strategy, ThresholdCert};
pub use geom::{AffineMap, Homothet, Point, Quadrant, Scalar, Triangle};
pub use ranges::{PointSet, Range, RangeCatalog};
pub use verify::Violation;
pub use witness::WitnessTrace;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degenerate triangle: vertices are collinear")]
    DegenerateTriangle,
    #[error("singular affine map")]
    SingularMap,
    #[error("unknown strategy `{0}` (expected `exact` or `greedy-sweep`)")]
    UnknownStrategy(String),
    #[error("exact strategy limited to {limit} points, got {got}")]
    ExactCutoff { limit: usize, got: usize },
    #[error("coloring must use at least one color")]
    ZeroColors,
    #[error("merge target {target} exceeds current color count {current}")]
    MergeTarget { target: usize, current: usize },
    #[error("quadrant cover precondition violated: R point ({rx}, {ry}) dominates Q point ({qx}, {qy})")]
    DominancePrecondition { rx: Scalar, ry: Scalar, qx: Scalar, qy: Scalar },
    #[error("witness extraction precondition violated: {0}")]
    WitnessPrecondition(String),
    #[error("internal invariant failure: {0}")]
    InternalInvariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
