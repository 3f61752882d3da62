use std::fmt;

use thiserror::Error;

/// A lattice vertex. `x` is the column, `y` is the row.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

impl Point {
    /// The base station: the bottom-left corner of every grid.
    pub const BASE: Point = Point { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Point {
        Point { x, y }
    }

    /// Manhattan distance from the base station; the index of the
    /// anti-diagonal through this vertex.
    pub fn level(self) -> u32 {
        self.x + self.y
    }

    pub fn manhattan(self, other: Point) -> u32 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }

    pub fn transposed(self) -> Point {
        Point { x: self.y, y: self.x }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Dimensions of a rectangular grid graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GridSpec {
    pub cols: u32,
    pub rows: u32,
}

impl GridSpec {
    /// Both dimensions must be at least 1.
    pub fn new(cols: u32, rows: u32) -> GridSpec {
        assert!(cols >= 1 && rows >= 1, "grid dimensions must be positive");
        GridSpec { cols, rows }
    }

    pub fn vertex_count(self) -> u64 {
        self.cols as u64 * self.rows as u64
    }

    pub fn contains(self, p: Point) -> bool {
        p.x < self.cols && p.y < self.rows
    }

    /// Canonical orientation: no more columns than rows.
    pub fn is_canonical(self) -> bool {
        self.cols <= self.rows
    }

    pub fn transposed(self) -> GridSpec {
        GridSpec { cols: self.rows, rows: self.cols }
    }

    /// Highest anti-diagonal index: the far corner's level.
    pub fn max_level(self) -> u32 {
        (self.cols - 1) + (self.rows - 1)
    }

    /// Length of the round trip base station → far corner → base station;
    /// the smallest budget for which any covering exists.
    pub fn min_feasible_len(self) -> u64 {
        2 * (self.cols as u64 + self.rows as u64 - 2)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.cols, self.rows)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WalkError {
    #[error("walk has no points")]
    Empty,
    #[error("walk step {index} is not a unit step")]
    NonUnitStep { index: usize },
}

/// An ordered sequence of vertices where consecutive vertices are adjacent.
/// A single vertex is a walk of length 0; a walk is never empty.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::len_without_is_empty)]
pub struct Walk {
    points: Vec<Point>,
}

impl Walk {
    pub fn new(points: Vec<Point>) -> Result<Walk, WalkError> {
        if points.is_empty() {
            return Err(WalkError::Empty);
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[0].manhattan(w[1]) != 1 {
                return Err(WalkError::NonUnitStep { index: i });
            }
        }
        Ok(Walk { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Number of edges traversed.
    pub fn len(&self) -> u64 {
        self.points.len() as u64 - 1
    }

    pub fn start(&self) -> Point {
        self.points[0]
    }

    pub fn end(&self) -> Point {
        *self.points.last().unwrap()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TourError {
    #[error("tour has no points")]
    Empty,
    #[error("tour does not start at the base station")]
    NotAnchored,
    #[error("tour does not end where it starts")]
    NotClosed,
    #[error("tour step {index} is not a unit step")]
    NonUnitStep { index: usize },
    #[error("tour length {len} is odd")]
    OddLength { len: u64 },
}

/// A closed walk anchored at the base station, of even length. A single
/// point is a zero-length tour; a tour is never empty.
#[derive(Clone, PartialEq, Eq, Debug)]
#[allow(clippy::len_without_is_empty)]
pub struct Tour {
    points: Vec<Point>,
}

impl Tour {
    pub fn new(points: Vec<Point>) -> Result<Tour, TourError> {
        if points.is_empty() {
            return Err(TourError::Empty);
        }
        if points[0] != Point::BASE {
            return Err(TourError::NotAnchored);
        }
        if points.len() > 1 && *points.last().unwrap() != points[0] {
            return Err(TourError::NotClosed);
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[0].manhattan(w[1]) != 1 {
                return Err(TourError::NonUnitStep { index: i });
            }
        }
        let len = points.len() as u64 - 1;
        if len % 2 != 0 {
            return Err(TourError::OddLength { len });
        }
        Ok(Tour { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> u64 {
        self.points.len() as u64 - 1
    }

    pub fn max_level(&self) -> u32 {
        self.points.iter().map(|p| p.level()).max().unwrap()
    }

    pub fn transposed(&self) -> Tour {
        Tour { points: self.points.iter().map(|p| p.transposed()).collect() }
    }
}
