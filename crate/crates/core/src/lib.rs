//! Exact generalized visibility graphs.
//!
//! A *scene* is a set of pairwise disjoint, compact, connected planar regions,
//! each a union of points, segments and convex polygons with rational
//! coordinates. Two regions are adjacent in the visibility graph when some
//! closed segment joining them meets no third region. The crate computes these
//! graphs exactly, checks necessary conditions on abstract graphs, and builds
//! scenes realizing given graphs with round-trip verification.

pub mod construct;
pub mod exec;
pub mod geometry;
pub mod graph;
pub mod harness;
pub mod render;
mod rng;
pub mod scalar;
pub mod visibility;

pub use exec::Exec;
pub use scalar::Scalar;
