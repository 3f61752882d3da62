//! Anti-diagonal levels and the upper regions they bound.
//!
//! Level `i` of a grid is the set of vertices at Manhattan distance `i` from
//! the base station. The upper region `A_i` keeps every vertex at level `i`
//! or above; its level-`i` vertices form its baseline, enumerated by
//! increasing column.

use thiserror::Error;

use super::geom::{GridSpec, Point};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegionError {
    #[error("level {level} outside grid with max level {max}")]
    LevelOutOfRange { level: u32, max: u32 },
}

/// Number of vertices on anti-diagonal `level`. Zero above the far corner.
pub fn level_size(g: GridSpec, level: u32) -> u64 {
    if level > g.max_level() {
        return 0;
    }
    let hi = level.min(g.cols - 1) as i64;
    let lo = (level as i64 - (g.rows as i64 - 1)).max(0);
    (hi - lo + 1).max(0) as u64
}

/// The vertices at exactly `level`, ordered by increasing column. For an
/// unclipped level this is `(0, i), (1, i-1), …, (i, 0)`.
pub fn level_points(g: GridSpec, level: u32) -> Vec<Point> {
    let hi = level.min(g.cols - 1) as i64;
    let lo = (level as i64 - (g.rows as i64 - 1)).max(0);
    (lo..=hi).map(|x| Point::new(x as u32, level - x as u32)).collect()
}

/// Baseline of the upper region `A_i`: its level-`i` vertices, left to right.
pub fn baseline_points(g: GridSpec, level: u32) -> Vec<Point> {
    level_points(g, level)
}

/// Number of vertices at `min_level` or above.
pub fn region_size(g: GridSpec, min_level: u32) -> Result<u64, RegionError> {
    let max = g.max_level();
    if min_level > max {
        return Err(RegionError::LevelOutOfRange { level: min_level, max });
    }
    Ok((min_level..=max).map(|i| level_size(g, i)).sum())
}
