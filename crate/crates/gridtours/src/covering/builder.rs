//! Walk construction over an extended staircase zone.
//!
//! A zone is a family shape `U` with one shortened row added below. Walks
//! are built in one pass: an ascent along the left and top border, a step
//! down from the top-right corner, and a descent back to the zone's
//! bottom-left vertex. On the way down, pairs of rows are eaten left to
//! right with serpentine detours sized by the remaining budget. Near the
//! budget boundary a detour is shortened by one column so the remainder
//! keeps a usable shape. Full-coverage walks finish the last odd row with a
//! comb of downward teeth.

use crate::grid::geom::{Point, Walk};
use crate::grid::shape::{classify_widths, Placed};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("zone bottom row too narrow to extend")]
    ZoneTooNarrow,
    #[error("zone has no room for the added row")]
    NoRoomBelow,
    #[error("walk budget {got} below the border length {need}")]
    BudgetTooSmall { need: u64, got: u64 },
    #[error("walk budget must be even, got {0}")]
    OddBudget(u64),
    #[error("zone geometry unusable: {0}")]
    Irregular(&'static str),
}

/// Zone rows bottom-up. Row 1 is the added row; rows 2.. are the shape `U`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Zone {
    pub y0: u32,
    pub lefts: Vec<u32>,
    pub right: u32,
}

impl Zone {
    /// The zone `AddRow(u)` for a family shape placed with room below it.
    pub fn of(u: &Placed) -> Result<Zone, BuildError> {
        let spans = u.tag.row_spans();
        let (off0, w0) = *spans.first().ok_or(BuildError::Irregular("empty shape"))?;
        if w0 < 2 {
            return Err(BuildError::ZoneTooNarrow);
        }
        if u.anchor.y == 0 {
            return Err(BuildError::NoRoomBelow);
        }
        let mut lefts = Vec::with_capacity(spans.len() + 1);
        lefts.push(u.anchor.x + off0 + 1);
        lefts.extend(spans.iter().map(|(off, _)| u.anchor.x + off));
        Ok(Zone { y0: u.anchor.y - 1, lefts, right: u.right() })
    }

    fn b(&self) -> usize {
        self.lefts.len()
    }

    fn left(&self, r: usize) -> u32 {
        self.lefts[r - 1]
    }

    fn y(&self, r: usize) -> u32 {
        self.y0 + (r as u32 - 1)
    }

    pub fn vertex_count(&self) -> u64 {
        self.lefts.iter().map(|&l| (self.right - l + 1) as u64).sum()
    }

    /// Zone start: bottom-left vertex of `U`.
    pub fn start(&self) -> Point {
        Point::new(self.left(2), self.y(2))
    }

    /// Zone end: leftmost vertex of the added row.
    pub fn end(&self) -> Point {
        Point::new(self.left(1), self.y(1))
    }
}

/// Budget-crunch behaviour when a row pair would be left one short.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum CrunchPolicy {
    /// Keep the walk budget-tight; used by the standalone operation.
    Standalone,
    /// Back off one column on the bottom pair so the remainder composes
    /// with the next zone; used inside the zone drivers.
    Chained,
}

/// A row below the zone reached only by comb teeth.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dip {
    pub y: u32,
    pub from_x: u32,
}

#[derive(Clone, Debug)]
pub(crate) enum Goal {
    /// Budget-maximal walk, remainder kept in the family.
    Maximal { budget: u64, policy: CrunchPolicy },
    /// Cover the whole zone (plus an optional dip row) with one walk.
    Full { budget: u64, dip: Option<Dip> },
}

#[derive(Clone, Debug)]
pub(crate) struct Built {
    pub walk: Walk,
    pub len: u64,
    pub repeats: u64,
    pub residual: Option<Placed>,
    pub fully_covered_rows: usize,
}

pub(crate) fn build_walk(zone: &Zone, goal: &Goal) -> Result<Built, BuildError> {
    let b = zone.b();
    if b < 2 {
        return Err(BuildError::Irregular("zone needs at least two rows"));
    }
    let right = zone.right;
    if zone.left(2) >= right {
        return Err(BuildError::Irregular("zone needs at least two columns"));
    }
    for r in 2..b {
        if zone.left(r + 1) < zone.left(r) {
            return Err(BuildError::Irregular("row lefts must not decrease upward"));
        }
    }

    // Ascent coverage per row, and the descent columns/entries derived
    // from it. `asc[r]` is the rightmost column the ascent visits in row r.
    let mut asc = vec![0u32; b + 1];
    asc[1] = zone.left(1) - 1; // nothing of the added row
    for r in 2..b {
        asc[r] = if zone.left(r + 1) > zone.left(r) { zone.left(r + 1) } else { zone.left(r) };
    }
    asc[b] = right;
    let mut g = vec![0u32; b]; // descent column per row, rows 1..b-1
    for r in 1..b {
        g[r] = asc[r] + 1;
        if g[r] > right {
            return Err(BuildError::Irregular("zone top is a single column"));
        }
    }
    let mut e = vec![0u32; b]; // descent entry per row, rows 1..b-1
    e[b - 1] = right;
    for r in 1..b.saturating_sub(1) {
        e[r] = g[r + 1];
    }

    let ascent_len = (b as u64 - 2) + (right - zone.left(2)) as u64;
    let sweeps: u64 = (1..b).map(|r| (e[r] - g[r]) as u64).sum();
    let border_len = ascent_len + 1 + sweeps + (b as u64 - 2);

    let (budget, full_mode) = match goal {
        Goal::Maximal { budget, .. } => (*budget, false),
        Goal::Full { budget, .. } => (*budget, true),
    };
    if budget % 2 != 0 {
        return Err(BuildError::OddBudget(budget));
    }
    if !full_mode && budget < border_len {
        return Err(BuildError::BudgetTooSmall { need: border_len, got: budget });
    }

    let dip = match goal {
        Goal::Full { dip, .. } => *dip,
        _ => None,
    };
    if dip.is_some() && b % 2 != 0 {
        return Err(BuildError::Irregular("dip row requires an even zone"));
    }

    // Topmost row the border leaves partially uncovered.
    let j0 = (1..b).rev().find(|&r| e[r] < right);
    // Comb handling for full-coverage walks.
    let internal_comb = full_mode && dip.is_none() && b % 2 == 1 && e[1] < right;
    let external_comb = dip.is_some();
    let pair_floor = if internal_comb {
        5
    } else if external_comb {
        4
    } else {
        2
    };
    let is_pair_top = |r: usize| -> bool {
        match j0 {
            Some(j) => r >= pair_floor && r <= j && (j - r) % 2 == 0,
            None => false,
        }
    };

    let mut pts: Vec<Point> = Vec::with_capacity(zone.vertex_count() as usize + 4);
    let mut cov = asc.clone();

    // Ascent: bottom-left of U along the left and top border to the
    // top-right corner.
    pts.push(zone.start());
    for r in 2..b {
        if zone.left(r + 1) > zone.left(r) {
            for x in zone.left(r) + 1..=zone.left(r + 1) {
                pts.push(Point::new(x, zone.y(r)));
            }
        }
        pts.push(Point::new(zone.left(r + 1), zone.y(r + 1)));
    }
    for x in zone.left(b) + 1..=right {
        pts.push(Point::new(x, zone.y(b)));
    }
    // One step down from the top-right corner.
    pts.push(Point::new(right, zone.y(b - 1)));

    let mut committed = border_len;
    let mut repeats = 0u64;
    let mut r = b - 1;
    loop {
        let y = zone.y(r);

        // Full-coverage comb blocks replace the tail of the descent.
        if internal_comb && r == 3.min(b - 1) {
            if r == 3 {
                if e[3] != g[3] {
                    return Err(BuildError::Irregular("comb row misaligned"));
                }
                for x in g[3] + 1..=right {
                    pts.push(Point::new(x, y));
                }
                cov[3] = right;
                pts.push(Point::new(right, zone.y(2)));
            }
            repeats += comb_left(
                &mut pts,
                zone.y(2),
                zone.y(1),
                right,
                g[2],
                g[2] + 1,
                right,
            );
            cov[2] = right;
            pts.push(Point::new(g[2], zone.y(1)));
            for x in (zone.left(1)..g[2]).rev() {
                pts.push(Point::new(x, zone.y(1)));
            }
            cov[1] = right;
            break;
        }
        if external_comb && r == 2.min(b - 1) {
            let d = dip.unwrap();
            if r == 2 {
                if e[2] != g[2] {
                    return Err(BuildError::Irregular("comb row misaligned"));
                }
                for x in g[2] + 1..=right {
                    pts.push(Point::new(x, y));
                }
                cov[2] = right;
                pts.push(Point::new(right, zone.y(1)));
            }
            repeats += comb_left(
                &mut pts,
                zone.y(1),
                d.y,
                right,
                zone.left(1),
                d.from_x,
                right,
            );
            cov[1] = right;
            break;
        }

        // Descent sweep across row r.
        for x in (g[r]..e[r]).rev() {
            pts.push(Point::new(x, y));
        }
        cov[r] = cov[r].max(e[r]);

        if r == 1 {
            break;
        }

        // Paired serpentine detour before stepping down.
        let mut serp = 0u32;
        if is_pair_top(r) && e[r] < right {
            if e[r] != g[r] || e[r - 1] != g[r] {
                return Err(BuildError::Irregular("pair rows misaligned"));
            }
            let n = right - e[r];
            let q = if full_mode {
                n
            } else {
                let avail = ((budget - committed) / 2) as u32;
                let q_raw = n.min(avail);
                if q_raw == n {
                    n
                } else if q_raw + 1 == n {
                    // One column short of the pair. Backing off one column
                    // keeps a two-wide notch: the freed budget moves to the
                    // next pair down when there is one, and the remainder
                    // always stacks with the next baseline row. The
                    // standalone walk instead stays budget-tight whenever
                    // backing off would strand slack on a non-terminal
                    // remainder.
                    let policy = match goal {
                        Goal::Maximal { policy, .. } => *policy,
                        _ => CrunchPolicy::Standalone,
                    };
                    match policy {
                        CrunchPolicy::Chained => n.saturating_sub(2),
                        CrunchPolicy::Standalone => {
                            if n >= 3 && r >= 3 {
                                n - 2
                            } else {
                                q_raw
                            }
                        }
                    }
                } else {
                    q_raw
                }
            };
            if q > 0 {
                let x0 = g[r];
                for d in 1..=q {
                    pts.push(Point::new(x0 + d, y));
                }
                pts.push(Point::new(x0 + q, zone.y(r - 1)));
                for x in (x0..x0 + q).rev() {
                    pts.push(Point::new(x, zone.y(r - 1)));
                }
                cov[r] = x0 + q;
                cov[r - 1] = x0 + q;
                committed += 2 * q as u64;
                serp = q;
            }
        }
        if serp == 0 {
            pts.push(Point::new(g[r], zone.y(r - 1)));
        }
        r -= 1;
    }

    debug_assert_eq!(*pts.last().unwrap(), zone.end());
    let walk = Walk::new(pts).map_err(|_| BuildError::Irregular("construction broke adjacency"))?;
    let len = walk.len();
    if full_mode && len > budget {
        return Err(BuildError::BudgetTooSmall { need: len, got: budget });
    }
    if !full_mode {
        debug_assert_eq!(len, committed);
        debug_assert!(len <= budget);
        debug_assert_eq!(repeats, 0);
    }

    // Remainder of the zone, bottom-anchored and right-aligned.
    let mut widths = Vec::new();
    for rr in 1..=b {
        let w = right - cov[rr];
        if w > 0 {
            if rr != widths.len() + 1 {
                return Err(BuildError::Irregular("remainder not bottom-anchored"));
            }
            widths.push(w);
        }
    }
    let residual = if widths.is_empty() {
        None
    } else {
        if full_mode {
            return Err(BuildError::Irregular("full walk left the zone uncovered"));
        }
        let tag = classify_widths(&widths)
            .ok_or(BuildError::Irregular("remainder left the shape family"))?;
        let anchor = Point::new(right - widths[0] + 1, zone.y(1));
        Some(Placed::new(tag, anchor))
    };
    let fully_covered_rows = (1..=b).filter(|&rr| cov[rr] == right).count();

    Ok(Built { walk, len, repeats, residual, fully_covered_rows })
}

/// Walk left along `row_y` from `from_x` to `end_x`, dipping teeth into
/// `dip_y` to cover its columns `[u_lo, dip_right]`. Returns the number of
/// vertex revisits (0 or 1; one tooth doubles when the count is odd).
#[allow(clippy::too_many_arguments)]
fn comb_left(
    pts: &mut Vec<Point>,
    row_y: u32,
    dip_y: u32,
    from_x: u32,
    end_x: u32,
    u_lo: u32,
    dip_right: u32,
) -> u64 {
    let mut x = from_x;
    let mut repeats = 0;
    if u_lo <= dip_right {
        let m = dip_right - u_lo + 1;
        let mut covered = 0;
        while x > u_lo {
            pts.push(Point::new(x, dip_y));
            pts.push(Point::new(x - 1, dip_y));
            pts.push(Point::new(x - 1, row_y));
            covered += 2;
            x -= 1;
            if x > u_lo {
                pts.push(Point::new(x - 1, row_y));
                x -= 1;
            }
        }
        if covered < m {
            pts.push(Point::new(x, dip_y));
            pts.push(Point::new(x, row_y));
            repeats = 1;
        }
    }
    while x > end_x {
        pts.push(Point::new(x - 1, row_y));
        x -= 1;
    }
    repeats
}
