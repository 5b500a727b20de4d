//! Exact rational planar primitives: points, pieces, regions and scenes.

mod affine;
mod interval;
mod io;
mod piece;
mod point;
mod scene;

pub use affine::{apply_affine, AffineError, AffineMap};
pub use interval::{line_piece_interval, line_region_intervals, Interval, IntervalSet};
pub use io::{parse_scene, scene_to_json, FormatError};
pub(crate) use io::{coords, parse_value, point_of, Coord};
pub use piece::{
    on_segment, piece_centroid, pieces_intersect, point_in_convex, segment_hits_piece, segments_cross_properly,
    segments_intersect, BBox, Piece, PieceError,
};
pub use point::{orient, point_segment_dist2, pt, Orientation, Point};
pub use scene::{is_identifier, validate_scene, Region, Scene, ValidationReport, Violation};
