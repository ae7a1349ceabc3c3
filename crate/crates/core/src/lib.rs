//! Construction, measurement and verification of convex mosaics.
//!
//! Periodic mosaics are described by one representative per translation
//! orbit, which makes every average degree an exact rational. Spherical
//! mosaics come from convex polyhedra, and random mosaics from periodic
//! Delaunay triangulations.

pub mod complex;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod geom;
pub mod periodic;
pub mod random;
pub mod rational;
pub mod spherical;
pub mod tables;

pub use complex::{CellComplex, ValidityReport};
pub use error::{Error, Result};
pub use geom::{ConvexPolytope, RationalPoint, SolidAngle};
pub use periodic::{MosaicStats, NijMatrix, PeriodicMosaic, VertexRef};
pub use rational::Q;
