//! Exact and floating geometric primitives.

pub mod angles;
pub mod decompose;
pub mod exact;
pub(crate) mod hull;
pub mod point;
pub mod polytope;
pub mod radii;
pub(crate) mod sat;

pub use angles::{external_solid_angle, internal_solid_angle, sphere_measure, SolidAngle, VertexCone};
pub use decompose::tetrahedral_decomposition;
pub use point::RationalPoint;
pub use polytope::{convex_hull, tet_volume, ConvexPolytope, FloatPolyhedron};
pub use radii::normality_radii;
