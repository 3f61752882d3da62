//! Integer lattice geometry: grids, walks, anti-diagonal levels, the
//! staircase shape family and the walk-maximality predicate.

pub mod geom;
pub mod region;
pub mod s_maximal;
pub mod shape;

pub use geom::{GridSpec, Point, Tour, Walk};
pub use shape::{add_row, classify_shape, Classified, Placed, ShapeTag};
