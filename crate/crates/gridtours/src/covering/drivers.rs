//! Zone drivers: tile an upper region of the grid with anchored walks.
//!
//! The region above baseline level `m` is consumed two rows at a time. Each
//! step carves the zone `AddRow(U_i)` out of the remainder, walks it with
//! the budget-maximal builder, and merges what is left with the next
//! baseline row. The final zone is covered completely by a single walk: a
//! plain full-coverage walk, the odd-count variant that leaves one
//! designated baseline vertex to a singleton tour, or a single-column
//! sweep.

use thiserror::Error;

use super::builder::{build_walk, BuildError, CrunchPolicy, Goal, Zone};
use super::{ops, CaseTag, WalkBudget, WalkSet};
use crate::grid::geom::{GridSpec, Point, Walk};
use crate::grid::shape::{classify_widths, rect, Placed, ShapeTag};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DriverError {
    #[error("region cannot be covered this way: {0}")]
    Infeasible(String),
    #[error("invalid driver input: {0}")]
    InvalidInput(&'static str),
}

impl From<BuildError> for DriverError {
    fn from(e: BuildError) -> Self {
        DriverError::Infeasible(e.to_string())
    }
}

enum FinalZone {
    /// One full-coverage walk.
    OneTour,
    /// One full-coverage walk that skips the last baseline vertex.
    OneTourSkipCorner,
    /// Up-and-down sweep of the rightmost column.
    ColumnSweep,
}

/// Cover the region above level `2r - 1` with `r` walks of length at most
/// `l`, anchored at consecutive baseline vertices. At most one vertex is
/// revisited, and only when the grid has an odd vertex count.
pub fn painting(g: GridSpec, r: u32, l: WalkBudget) -> Result<WalkSet, DriverError> {
    if !g.is_canonical() {
        return Err(DriverError::InvalidInput("grid must have cols <= rows"));
    }
    if r < 1 || 2 * r - 1 > g.cols - 1 {
        return Err(DriverError::InvalidInput("tour count out of range for painting"));
    }
    run_zones(g, 2 * r - 1, r, l.0, FinalZone::OneTour, CaseTag::Pa)
}

/// Cover the region above level `2k - 2` with `k - 1` walks plus one
/// designated baseline vertex, all revisit-free. Used when the grid has an
/// odd vertex count and `k` is below the tour-count ceiling.
pub fn pao(g: GridSpec, k: u32, max_len: u64) -> Result<WalkSet, DriverError> {
    if !g.is_canonical() {
        return Err(DriverError::InvalidInput("grid must have cols <= rows"));
    }
    if g.vertex_count() % 2 == 0 {
        return Err(DriverError::InvalidInput("odd vertex count required"));
    }
    if k < 2 || 2 * k - 1 >= g.cols {
        return Err(DriverError::InvalidInput("tour count out of range"));
    }
    let l = WalkBudget::for_odd_painting(max_len, k)
        .ok_or(DriverError::InvalidInput("budget below the baseline lift"))?;
    run_zones(g, 2 * k - 2, k - 1, l.0, FinalZone::OneTourSkipCorner, CaseTag::Pao)
}

/// Cover the region above level `cols - 1` (odd `cols`) with
/// `(cols + 1) / 2` walks, the last being a single-column sweep.
pub fn par(g: GridSpec, max_len: u64) -> Result<WalkSet, DriverError> {
    if !g.is_canonical() {
        return Err(DriverError::InvalidInput("grid must have cols <= rows"));
    }
    if g.cols % 2 == 0 || g.cols < 3 {
        return Err(DriverError::InvalidInput("odd cols >= 3 required"));
    }
    let k = (g.cols + 1) / 2;
    let l = WalkBudget::for_column_painting(max_len, g.cols)
        .ok_or(DriverError::InvalidInput("budget below the baseline lift"))?;
    run_zones(g, g.cols - 1, k, l.0, FinalZone::ColumnSweep, CaseTag::Par)
}

fn run_zones(
    g: GridSpec,
    m: u32,
    walks_n: u32,
    l: u64,
    final_kind: FinalZone,
    case_tag: CaseTag,
) -> Result<WalkSet, DriverError> {
    if l % 2 != 0 {
        return Err(DriverError::InvalidInput("walk budget must be even"));
    }
    debug_assert!(m < g.rows && m < g.cols || matches!(final_kind, FinalZone::ColumnSweep));

    let right = g.cols - 1;
    let mut u = Placed::new(rect(g.cols, g.rows - m), Point::new(0, m));
    let mut walks: Vec<Walk> = Vec::with_capacity(walks_n as usize);
    let mut repeats = 0u64;
    let mut designated = None;

    for i in 1..=walks_n {
        if i < walks_n {
            ensure_zone_shape(&u)?;
            let zone = Zone::of(&u)?;
            let built = build_walk(&zone, &Goal::Maximal { budget: l, policy: CrunchPolicy::Chained })?;
            debug_assert_eq!(built.repeats, 0);
            walks.push(built.walk);
            let row_y = m - 2 * i; // next baseline row
            let row_left = 2 * i;
            u = compose_next(built.residual, row_y, row_left, right)?;
        } else {
            match final_kind {
                FinalZone::OneTour => {
                    ensure_zone_shape(&u)?;
                    let zone = Zone::of(&u)?;
                    if l < zone.vertex_count().saturating_sub(1) {
                        return Err(DriverError::Infeasible(format!(
                            "final zone of {} vertices exceeds walk budget {l}",
                            zone.vertex_count()
                        )));
                    }
                    let built = build_walk(&zone, &Goal::Full { budget: l, dip: None })?;
                    repeats += built.repeats;
                    walks.push(built.walk);
                }
                FinalZone::OneTourSkipCorner => {
                    ensure_zone_shape(&u)?;
                    let (full, skip) = ops::otu_odd_covering(&u, l)
                        .map_err(|e| DriverError::Infeasible(e.to_string()))?;
                    debug_assert_eq!(skip.level(), m);
                    debug_assert_eq!(full.repeats, 0);
                    walks.push(full.walk);
                    designated = Some(skip);
                }
                FinalZone::ColumnSweep => {
                    if !matches!(u.tag, ShapeTag::Rect { a: 1, .. }) {
                        return Err(DriverError::Infeasible(
                            "remainder is not a single column".into(),
                        ));
                    }
                    debug_assert_eq!(u.anchor, Point::new(right, 0));
                    let full = ops::otu_r_covering(&u, l)
                        .map_err(|e| DriverError::Infeasible(e.to_string()))?;
                    repeats += full.repeats;
                    walks.push(full.walk);
                }
            }
        }
    }

    Ok(WalkSet { baseline_level: m, case_tag, walks, designated, repeats })
}

fn ensure_zone_shape(u: &Placed) -> Result<(), DriverError> {
    if !u.tag.in_family() {
        return Err(DriverError::Infeasible("zone shape left the family".into()));
    }
    if u.tag.is_unit_notch() {
        return Err(DriverError::Infeasible(
            "zone shape has a single-column notch".into(),
        ));
    }
    if u.tag.is_single_column() {
        return Err(DriverError::Infeasible("zone shape is a single column".into()));
    }
    Ok(())
}

/// Merge the remainder of the previous zone with the next baseline row.
fn compose_next(
    residual: Option<Placed>,
    row_y: u32,
    row_left: u32,
    right: u32,
) -> Result<Placed, DriverError> {
    let row_width = right - row_left + 1;
    let Some(res) = residual else {
        return Ok(Placed::new(rect(row_width, 1), Point::new(row_left, row_y)));
    };
    if res.anchor.y != row_y + 1 {
        return Err(DriverError::Infeasible("remainder floats above the next row".into()));
    }
    if res.right() != right {
        return Err(DriverError::Infeasible("remainder lost the right edge".into()));
    }
    if res.anchor.x < row_left {
        return Err(DriverError::Infeasible("remainder overhangs the next row".into()));
    }
    let mut widths = vec![row_width];
    widths.extend(res.tag.row_spans().iter().map(|(_, w)| *w));
    match classify_widths(&widths) {
        Some(tag) => Ok(Placed::new(tag, Point::new(row_left, row_y))),
        None => Err(DriverError::Infeasible(
            "remainder does not stack with the next row".into(),
        )),
    }
}
