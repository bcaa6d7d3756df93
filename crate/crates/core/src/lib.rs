//! Orientable ribbon graphs (combinatorial maps) with partial duality,
//! plane-biseparation decompositions, and the link-diagram pipeline built
//! on top of them: Tait graphs, state ribbon graphs, diagram
//! reconstruction, and summand-flip equivalence. Brute-force reference
//! implementations live in [`oracle`] and back every structural claim at
//! desk scale.

pub mod arrows;
pub mod canon;
pub mod decomp;
pub mod json;
pub mod link;
pub mod map;
pub mod oracle;
pub mod subset;

pub use arrows::{Arrow, ArrowPresentation, Direction};
pub use canon::{CanonicalCode, IsoMode};
pub use map::{
    BoundaryStep, BoundaryWalk, Component, Dart, EdgeId, MapError, RibbonGraph, Sign, VertexId,
    WalkSide,
};
pub use subset::EdgeSubset;
