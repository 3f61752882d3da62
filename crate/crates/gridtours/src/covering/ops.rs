//! The standalone walk-building operations over a single zone.

use thiserror::Error;

use super::builder::{build_walk, BuildError, CrunchPolicy, Dip, Goal, Zone};
use crate::grid::geom::{Point, Walk};
use crate::grid::shape::{Placed, ShapeTag};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OpError {
    #[error("input shape not accepted: {0}")]
    InvalidInput(&'static str),
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// Outcome of a budget-maximal zone walk.
#[derive(Clone, Debug)]
pub struct MaximalWalk {
    pub walk: Walk,
    pub len: u64,
    pub residual: Option<Placed>,
    pub fully_covered_rows: usize,
}

/// Outcome of a full-coverage zone walk.
#[derive(Clone, Debug)]
pub struct FullWalk {
    pub walk: Walk,
    pub len: u64,
    pub repeats: u64,
}

fn check_zone_input(u: &Placed, allow_single_column: bool) -> Result<(), OpError> {
    if !u.tag.in_family() {
        return Err(OpError::InvalidInput("shape must be a family member"));
    }
    if u.tag.is_unit_notch() {
        return Err(OpError::InvalidInput("single-column notch not accepted"));
    }
    if !allow_single_column && u.tag.is_single_column() {
        return Err(OpError::InvalidInput("single-column rectangle not accepted"));
    }
    Ok(())
}

/// Budget-maximal walk over `AddRow(u)` from the bottom-left vertex of `u`
/// to the bottom-left vertex of the zone. The budget must be even and at
/// least the zone perimeter minus two.
pub fn u_covering(u: &Placed, budget: u64) -> Result<MaximalWalk, OpError> {
    check_zone_input(u, false)?;
    let zone = Zone::of(u)?;
    let built = build_walk(
        &zone,
        &Goal::Maximal { budget, policy: CrunchPolicy::Standalone },
    )?;
    Ok(MaximalWalk {
        walk: built.walk,
        len: built.len,
        residual: built.residual,
        fully_covered_rows: built.fully_covered_rows,
    })
}

/// Full covering of `AddRow(u)` by one walk with the same endpoints as
/// [`u_covering`]. Revisits one vertex exactly when both zone dimensions
/// are odd.
pub fn otu_covering(u: &Placed, budget: u64) -> Result<FullWalk, OpError> {
    check_zone_input(u, false)?;
    let zone = Zone::of(u)?;
    if budget < zone.vertex_count() {
        return Err(OpError::InvalidInput("budget below the zone area"));
    }
    let built = build_walk(&zone, &Goal::Full { budget, dip: None })?;
    Ok(FullWalk { walk: built.walk, len: built.len, repeats: built.repeats })
}

/// Full covering of the twice-extended zone `AddRow(AddRow(u))` minus the
/// bottom row's leftmost vertex, for `u` with odd rows and columns. The
/// walk runs from the zone's third-row left end to its second-row left end
/// with no revisits. Returns the walk and the skipped vertex.
pub fn otu_odd_covering(u: &Placed, budget: u64) -> Result<(FullWalk, Point), OpError> {
    check_zone_input(u, false)?;
    if u.tag.width() % 2 == 0 || u.tag.height() % 2 == 0 {
        return Err(OpError::InvalidInput("shape dimensions must both be odd"));
    }
    if u.tag.width() < 3 {
        return Err(OpError::InvalidInput("shape too narrow to extend twice"));
    }
    if u.anchor.y < 2 {
        return Err(OpError::InvalidInput("no room for two added rows"));
    }
    let zone = Zone::of(u)?;
    let designated = Point::new(u.anchor.x + 2, u.anchor.y - 2);
    let dip = Dip { y: designated.y, from_x: designated.x + 1 };
    let area = zone.vertex_count() + (u.right() - designated.x) as u64 + 1;
    if budget + 2 < area {
        return Err(OpError::InvalidInput("budget below the zone area"));
    }
    let built = build_walk(&zone, &Goal::Full { budget, dip: Some(dip) })?;
    debug_assert_eq!(built.repeats, 0);
    Ok((
        FullWalk { walk: built.walk, len: built.len, repeats: built.repeats },
        designated,
    ))
}

/// Covering of a single column by one walk: bottom to top and back down.
/// Needs budget at least twice the column height minus two.
pub fn otu_r_covering(column: &Placed, budget: u64) -> Result<FullWalk, OpError> {
    let ShapeTag::Rect { a: 1, b } = column.tag else {
        return Err(OpError::InvalidInput("shape must be a single column"));
    };
    let need = 2 * (b as u64 - 1);
    if budget < need {
        return Err(OpError::InvalidInput("budget below the up-and-down sweep"));
    }
    let x = column.anchor.x;
    let y0 = column.anchor.y;
    let mut pts = Vec::with_capacity(2 * b as usize - 1);
    for y in y0..y0 + b {
        pts.push(Point::new(x, y));
    }
    for y in (y0..y0 + b - 1).rev() {
        pts.push(Point::new(x, y));
    }
    let walk = Walk::new(pts).expect("column sweep is a walk");
    Ok(FullWalk { walk, len: need, repeats: b as u64 - 1 })
}
