//! A max-length greedy baseline: each tour rides the row-serpentine order
//! as far as its budget allows before returning. Valid but not optimal;
//! used to demonstrate the gap to the exact solver.

use crate::grid::geom::{GridSpec, Point, Tour};
use crate::solver::SolveError;

fn serpentine(g: GridSpec) -> Vec<Point> {
    let mut order = Vec::with_capacity(g.vertex_count() as usize);
    for y in 0..g.rows {
        if y % 2 == 0 {
            for x in 0..g.cols {
                order.push(Point::new(x, y));
            }
        } else {
            for x in (0..g.cols).rev() {
                order.push(Point::new(x, y));
            }
        }
    }
    order
}

fn monotone_out(to: Point) -> Vec<Point> {
    let mut pts = Vec::with_capacity((to.x + to.y) as usize + 1);
    for x in 0..=to.x {
        pts.push(Point::new(x, 0));
    }
    for y in 1..=to.y {
        pts.push(Point::new(to.x, y));
    }
    pts
}

/// Cover the grid greedily: every tour runs to the first uncovered vertex
/// in serpentine order, then follows the serpentine while it can still
/// afford the trip home.
pub fn greedy_max_length(g: GridSpec, max_len: u64) -> Result<Vec<Tour>, SolveError> {
    if max_len % 2 != 0 {
        return Err(SolveError::OddL(max_len));
    }
    if max_len < g.min_feasible_len() {
        return Err(SolveError::Infeasible { max_len, need: g.min_feasible_len() });
    }
    if g.vertex_count() == 1 {
        return Ok(vec![Tour::new(vec![Point::BASE]).unwrap()]);
    }
    let order = serpentine(g);
    let mut covered = vec![false; g.vertex_count() as usize];
    let idx = |p: Point| (p.y as usize) * g.cols as usize + p.x as usize;
    let mut tours = Vec::new();
    let mut cursor = 0usize;
    while cursor < order.len() {
        while cursor < order.len() && covered[idx(order[cursor])] {
            cursor += 1;
        }
        if cursor == order.len() {
            break;
        }
        let target = order[cursor];
        let mut pts = monotone_out(target);
        let mut len = (target.x + target.y) as u64;
        let mut at = cursor;
        // Extend while the next serpentine vertex still leaves budget to
        // return home monotonically.
        while at + 1 < order.len() {
            let next = order[at + 1];
            if len + 1 + next.level() as u64 > max_len {
                break;
            }
            pts.push(next);
            len += 1;
            at += 1;
        }
        let end = order[at];
        for y in (0..end.y).rev() {
            pts.push(Point::new(end.x, y));
        }
        for x in (0..end.x).rev() {
            pts.push(Point::new(x, 0));
        }
        for &p in &pts {
            covered[idx(p)] = true;
        }
        tours.push(Tour::new(pts).expect("greedy segment is a tour"));
        cursor = at + 1;
    }
    Ok(tours)
}
