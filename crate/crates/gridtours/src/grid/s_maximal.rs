//! Maximality predicate for covering walks over an extended staircase zone.
//!
//! A walk over a zone `A = AddRow(U)` is maximal when the part of `A` it
//! leaves uncovered is again a family shape, the covered vertices form a
//! left prefix of every row and a top prefix of every column, and the walk
//! either used its whole budget or stopped in one of three terminal
//! remainders (nothing, the bottom row minus its leftmost vertex, or the
//! three-row shape with a 2-wide top).

use std::collections::BTreeSet;

use thiserror::Error;

use super::geom::{Point, Walk};
use super::shape::{classify_shape, s1, Classified, Placed, ShapeTag};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SMaxError {
    #[error("walk visits {0} outside the zone")]
    WalkOutsideZone(Point),
    #[error("zone is not a row extension of a family shape")]
    ZoneNotExtended,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SMaxViolation {
    ResidualNotInFamily,
    RowNotPrefix { y: u32 },
    ColumnNotPrefix { x: u32 },
    SlackWithoutTerminalResidual { residual: ShapeTag, len: u64 },
}

#[derive(Clone, Debug)]
pub struct SMaxReport {
    pub holds: bool,
    pub violations: Vec<SMaxViolation>,
    pub residual: Option<ShapeTag>,
}

/// Check the four maximality conditions of `walk` over `zone` with walk
/// budget `budget`. The zone must be a row extension of a family shape.
pub fn is_s_maximal(walk: &Walk, zone: &Placed, budget: u64) -> Result<SMaxReport, SMaxError> {
    match &zone.tag {
        ShapeTag::AddRow(inner) if inner.in_family() => {}
        _ => return Err(SMaxError::ZoneNotExtended),
    }

    for &p in walk.points() {
        if !zone.contains(p) {
            return Err(SMaxError::WalkOutsideZone(p));
        }
    }

    let covered: BTreeSet<Point> = walk.points().iter().copied().collect();
    let rows = zone.rows();
    let mut violations = Vec::new();

    // Covered vertices form a left prefix of every row.
    for &(y, left, right) in &rows {
        let mut seen_gap = false;
        for x in left..=right {
            let c = covered.contains(&Point::new(x, y));
            if c && seen_gap {
                violations.push(SMaxViolation::RowNotPrefix { y });
                break;
            }
            if !c {
                seen_gap = true;
            }
        }
    }

    // Covered vertices form a top prefix of every column.
    let right_edge = zone.right();
    for x in zone.anchor.x..=right_edge {
        let col: Vec<(u32, bool)> = rows
            .iter()
            .filter(|&&(_, l, r)| x >= l && x <= r)
            .map(|&(y, _, _)| (y, covered.contains(&Point::new(x, y))))
            .collect();
        let mut seen_gap = false;
        for &(_, c) in col.iter().rev() {
            if c && seen_gap {
                violations.push(SMaxViolation::ColumnNotPrefix { x });
                break;
            }
            if !c {
                seen_gap = true;
            }
        }
    }

    // Residual stays in the family.
    let residual_pts: Vec<Point> = zone
        .points()
        .into_iter()
        .filter(|p| !covered.contains(p))
        .collect();
    let residual = match classify_shape(&residual_pts) {
        Classified::InFamily(tag) => Some(tag),
        Classified::NotInFamily => {
            violations.push(SMaxViolation::ResidualNotInFamily);
            None
        }
    };

    // Budget exhausted, or one of the terminal remainders.
    if walk.len() != budget {
        let a = zone.tag.width();
        let terminal = match &residual {
            Some(ShapeTag::Empty) => true,
            Some(tag) => {
                *tag == super::shape::rect(a.saturating_sub(2), 1)
                    || (a >= 4 && *tag == s1(a - 2, 3, 2).unwrap())
            }
            None => false,
        };
        if !terminal {
            violations.push(SMaxViolation::SlackWithoutTerminalResidual {
                residual: residual.clone().unwrap_or(ShapeTag::Empty),
                len: walk.len(),
            });
        }
    }

    Ok(SMaxReport { holds: violations.is_empty(), violations, residual })
}
