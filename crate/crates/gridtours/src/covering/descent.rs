//! Lift baseline-anchored walks to base-station tours.
//!
//! Each walk endpoint is joined to the base station by a monotone
//! connection: horizontal along row 0 then vertical on the way out,
//! vertical then horizontal on the way back. Interior vertices of these
//! connections lie strictly below the baseline, and across a full walk set
//! they cover everything under it. A designated baseline vertex becomes a
//! singleton tour out and back along row 0.

use thiserror::Error;

use super::WalkSet;
use crate::grid::geom::{GridSpec, Point, Tour};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DescentError {
    #[error("walk endpoint {0} is not on baseline level {1}")]
    EndpointOffBaseline(Point, u32),
    #[error("lifted tour of length {len} exceeds the budget {max_len}")]
    BudgetExceeded { len: u64, max_len: u64 },
    #[error("designated vertex {0} is not on row 0")]
    DesignatedOffRow(Point),
}

/// Turn every walk (and the designated vertex, if any) into a tour.
pub fn vertical_descent(
    ws: &WalkSet,
    g: GridSpec,
    max_len: u64,
) -> Result<Vec<Tour>, DescentError> {
    let m = ws.baseline_level;
    let mut tours = Vec::with_capacity(ws.walks.len() + 1);
    for walk in &ws.walks {
        let start = walk.start();
        let end = walk.end();
        for p in [start, end] {
            if p.level() != m || !g.contains(p) {
                return Err(DescentError::EndpointOffBaseline(p, m));
            }
        }
        let len = walk.len() + 2 * m as u64;
        if len > max_len {
            return Err(DescentError::BudgetExceeded { len, max_len });
        }
        let mut pts = Vec::with_capacity(walk.points().len() + 2 * m as usize + 1);
        // Out: along row 0, then up.
        for x in 0..=start.x {
            pts.push(Point::new(x, 0));
        }
        for y in 1..=start.y {
            pts.push(Point::new(start.x, y));
        }
        // The walk itself (its first vertex is already in place).
        pts.extend_from_slice(&walk.points()[1..]);
        // Back: down, then along row 0.
        for y in (0..end.y).rev() {
            pts.push(Point::new(end.x, y));
        }
        for x in (0..end.x).rev() {
            pts.push(Point::new(x, 0));
        }
        let tour = Tour::new(pts).expect("lifted walk is a valid tour");
        debug_assert_eq!(tour.len(), len);
        tours.push(tour);
    }
    if let Some(p) = ws.designated {
        if p.y != 0 {
            return Err(DescentError::DesignatedOffRow(p));
        }
        let len = 2 * p.x as u64;
        if len > max_len {
            return Err(DescentError::BudgetExceeded { len, max_len });
        }
        let mut pts = Vec::with_capacity(2 * p.x as usize + 1);
        for x in 0..=p.x {
            pts.push(Point::new(x, 0));
        }
        for x in (0..p.x).rev() {
            pts.push(Point::new(x, 0));
        }
        tours.push(Tour::new(pts).expect("row sweep is a valid tour"));
    }
    Ok(tours)
}
