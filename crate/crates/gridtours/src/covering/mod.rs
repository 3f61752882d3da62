//! Constructive covering procedures: budget-maximal and full-coverage zone
//! walks, the zone drivers that tile an upper region with anchored walks,
//! and the vertical descent that lifts walks to base-station tours.

pub(crate) mod builder;
pub mod descent;
pub mod drivers;
pub mod ops;

use serde::{Deserialize, Serialize};

use crate::grid::geom::{Point, Walk};

/// Which construction produced a covering.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CaseTag {
    /// One tour covers the grid.
    Single,
    /// Plain zone painting over the level-`2k-1` region.
    #[serde(rename = "PA")]
    Pa,
    /// Painting over the level-`2k-2` region with one designated baseline
    /// point left to a singleton tour (odd vertex count).
    #[serde(rename = "PAO")]
    Pao,
    /// Painting over the level-`cols-1` region finished by a single-column
    /// sweep (odd column count at the tour-count ceiling).
    #[serde(rename = "PAR")]
    Par,
    /// Degenerate single-column grid.
    Column,
    /// Produced by the brute-force oracle.
    Oracle,
}

/// A set of walks anchored on the baseline of an upper region, plus an
/// optional designated point covered by a singleton tour after the lift.
#[derive(Clone, Debug)]
pub struct WalkSet {
    pub baseline_level: u32,
    pub case_tag: CaseTag,
    pub walks: Vec<Walk>,
    pub designated: Option<Point>,
    /// Vertex revisits inside the region (0 or 1 for painting).
    pub repeats: u64,
}

/// Walk budgets for the zone drivers: the tour budget minus the cost of the
/// two monotone connections to the baseline.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WalkBudget(pub u64);

impl WalkBudget {
    /// Budget for painting at `r` tours: baseline sits at level `2r - 1`.
    pub fn for_painting(max_len: u64, r: u32) -> Option<WalkBudget> {
        max_len.checked_sub(2 * (2 * r as u64 - 1)).map(WalkBudget)
    }

    /// Budget for the odd-count variant: baseline at level `2r - 2`.
    pub fn for_odd_painting(max_len: u64, r: u32) -> Option<WalkBudget> {
        max_len.checked_sub(2 * (2 * r as u64 - 2)).map(WalkBudget)
    }

    /// Budget for the column-finished variant over the level-`cols-1`
    /// region.
    pub fn for_column_painting(max_len: u64, cols: u32) -> Option<WalkBudget> {
        max_len.checked_sub(2 * (cols as u64 - 1)).map(WalkBudget)
    }
}
