//! The staircase shape family and the row-extension operator.
//!
//! Every covering walk in this crate eats a zone whose uncovered remainder
//! stays inside a small family of right-aligned staircase shapes: plain
//! rectangles, rectangles with the top two rows shortened from the left
//! (`S1`), and a two-step variant whose top is a 2×2 block (`S2`). Zones are
//! built by extending a family member downward with one shortened row.

use std::collections::BTreeSet;

use thiserror::Error;

use super::geom::Point;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("bottom row has fewer than two vertices")]
    DegenerateShape,
    #[error("invalid shape parameters: {0}")]
    InvalidParams(&'static str),
}

/// A member of the shape family, or a downward row extension of one.
/// Dimensions only; see [`Placed`] for a shape positioned in the grid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ShapeTag {
    Empty,
    /// `a` columns by `b` rows.
    Rect { a: u32, b: u32 },
    /// `Rect(a, b)` with the top-left `(a-c) × 2` block removed: the top two
    /// rows keep only the rightmost `c` columns.
    S1 { a: u32, b: u32, c: u32 },
    /// Two steps: `b-4` rows of width `a`, two rows of width `a-1`, and a
    /// 2-wide pair of rows at the top right.
    S2 { a: u32, b: u32 },
    /// One extra row added below, missing its leftmost vertex.
    AddRow(Box<ShapeTag>),
}

/// Canonical rectangle; zero dimensions collapse to `Empty`.
pub fn rect(a: u32, b: u32) -> ShapeTag {
    if a == 0 || b == 0 {
        ShapeTag::Empty
    } else {
        ShapeTag::Rect { a, b }
    }
}

/// Canonical one-step staircase. Collapses to a rectangle when the step
/// vanishes (`c == a`) or when there is nothing under the step (`b == 2`).
pub fn s1(a: u32, b: u32, c: u32) -> Result<ShapeTag, ShapeError> {
    if c < 1 || c > a {
        return Err(ShapeError::InvalidParams("s1 requires 1 <= c <= a"));
    }
    if b < 2 {
        return Err(ShapeError::InvalidParams("s1 requires b >= 2"));
    }
    if c == a {
        return Ok(rect(a, b));
    }
    if b == 2 {
        return Ok(rect(c, 2));
    }
    Ok(ShapeTag::S1 { a, b, c })
}

/// Canonical two-step staircase. With no full-width bottom row (`b == 4`)
/// it collapses to a one-step shape.
pub fn s2(a: u32, b: u32) -> Result<ShapeTag, ShapeError> {
    if a < 3 {
        return Err(ShapeError::InvalidParams("s2 requires a >= 3"));
    }
    if b < 4 {
        return Err(ShapeError::InvalidParams("s2 requires b >= 4"));
    }
    if b == 4 {
        return s1(a - 1, 4, 2);
    }
    Ok(ShapeTag::S2 { a, b })
}

impl ShapeTag {
    /// Row spans bottom-up as `(left_offset, width)` within the bounding box.
    pub fn row_spans(&self) -> Vec<(u32, u32)> {
        match self {
            ShapeTag::Empty => Vec::new(),
            ShapeTag::Rect { a, b } => (0..*b).map(|_| (0, *a)).collect(),
            ShapeTag::S1 { a, b, c } => {
                let mut rows: Vec<(u32, u32)> = (0..b - 2).map(|_| (0, *a)).collect();
                rows.push((a - c, *c));
                rows.push((a - c, *c));
                rows
            }
            ShapeTag::S2 { a, b } => {
                let mut rows: Vec<(u32, u32)> = (0..b - 4).map(|_| (0, *a)).collect();
                rows.push((1, a - 1));
                rows.push((1, a - 1));
                rows.push((a - 2, 2));
                rows.push((a - 2, 2));
                rows
            }
            ShapeTag::AddRow(inner) => {
                let inner_rows = inner.row_spans();
                let (off0, w0) = inner_rows[0];
                debug_assert!(w0 >= 2, "row extension of a degenerate bottom row");
                let mut rows = vec![(off0 + 1, w0 - 1)];
                rows.extend(inner_rows);
                rows
            }
        }
    }

    /// Bounding-box width.
    pub fn width(&self) -> u32 {
        self.row_spans()
            .iter()
            .map(|(off, w)| off + w)
            .max()
            .unwrap_or(0)
    }

    pub fn height(&self) -> u32 {
        match self {
            ShapeTag::Empty => 0,
            ShapeTag::Rect { b, .. } | ShapeTag::S1 { b, .. } | ShapeTag::S2 { b, .. } => *b,
            ShapeTag::AddRow(inner) => inner.height() + 1,
        }
    }

    pub fn vertex_count(&self) -> u64 {
        self.row_spans().iter().map(|(_, w)| *w as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, ShapeTag::Empty)
    }

    /// `(left_offset, width)` of the bottom row.
    pub fn bottom_row(&self) -> Option<(u32, u32)> {
        self.row_spans().first().copied()
    }

    /// In the family proper, i.e. not a row extension and not empty.
    pub fn in_family(&self) -> bool {
        matches!(
            self,
            ShapeTag::Rect { .. } | ShapeTag::S1 { .. } | ShapeTag::S2 { .. }
        )
    }

    /// One-step shape whose notch is a single column wide. The walk
    /// builders cannot start on one of these.
    pub fn is_unit_notch(&self) -> bool {
        matches!(self, ShapeTag::S1 { c: 1, .. })
    }

    /// Single-column rectangle of any height.
    pub fn is_single_column(&self) -> bool {
        matches!(self, ShapeTag::Rect { a: 1, .. })
    }
}

/// Extend a shape downward by one row; the new row drops its leftmost
/// vertex. Requires a bottom row of at least two vertices.
pub fn add_row(tag: &ShapeTag) -> Result<ShapeTag, ShapeError> {
    match tag.bottom_row() {
        Some((_, w)) if w >= 2 => Ok(ShapeTag::AddRow(Box::new(tag.clone()))),
        _ => Err(ShapeError::DegenerateShape),
    }
}

/// A shape positioned in the grid. `anchor` is the bottom-left corner of the
/// bounding box (not necessarily a vertex of the shape).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Placed {
    pub tag: ShapeTag,
    pub anchor: Point,
}

impl Placed {
    pub fn new(tag: ShapeTag, anchor: Point) -> Placed {
        Placed { tag, anchor }
    }

    /// Absolute row spans bottom-up as `(y, left, right)`.
    pub fn rows(&self) -> Vec<(u32, u32, u32)> {
        self.tag
            .row_spans()
            .iter()
            .enumerate()
            .map(|(i, (off, w))| {
                let y = self.anchor.y + i as u32;
                let left = self.anchor.x + off;
                (y, left, left + w - 1)
            })
            .collect()
    }

    pub fn points(&self) -> Vec<Point> {
        let mut pts = Vec::with_capacity(self.tag.vertex_count() as usize);
        for (y, left, right) in self.rows() {
            for x in left..=right {
                pts.push(Point::new(x, y));
            }
        }
        pts
    }

    pub fn contains(&self, p: Point) -> bool {
        let spans = self.tag.row_spans();
        if p.y < self.anchor.y {
            return false;
        }
        let i = (p.y - self.anchor.y) as usize;
        match spans.get(i) {
            Some((off, w)) => {
                let left = self.anchor.x + off;
                p.x >= left && p.x < left + w
            }
            None => false,
        }
    }

    /// Rightmost column of the bounding box.
    pub fn right(&self) -> u32 {
        self.anchor.x + self.tag.width() - 1
    }
}

/// Result of recognising a vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classified {
    InFamily(ShapeTag),
    NotInFamily,
}

/// Recognise a finite vertex set as a family member up to translation.
/// Row extensions are not in the family.
pub fn classify_shape(points: &[Point]) -> Classified {
    if points.is_empty() {
        return Classified::InFamily(ShapeTag::Empty);
    }
    let set: BTreeSet<Point> = points.iter().copied().collect();
    let y_min = set.iter().map(|p| p.y).min().unwrap();
    let y_max = set.iter().map(|p| p.y).max().unwrap();

    // Per-row extents; every row must be present and contiguous.
    let mut rows: Vec<(u32, u32)> = Vec::with_capacity((y_max - y_min + 1) as usize);
    for y in y_min..=y_max {
        let xs: Vec<u32> = set.iter().filter(|p| p.y == y).map(|p| p.x).collect();
        if xs.is_empty() {
            return Classified::NotInFamily;
        }
        let lo = *xs.iter().min().unwrap();
        let hi = *xs.iter().max().unwrap();
        if (hi - lo + 1) as usize != xs.len() {
            return Classified::NotInFamily;
        }
        rows.push((lo, hi));
    }

    // Common right edge, left edges non-decreasing upward.
    let right = rows[0].1;
    if rows.iter().any(|&(_, hi)| hi != right) {
        return Classified::NotInFamily;
    }
    if rows.windows(2).any(|w| w[1].0 < w[0].0) {
        return Classified::NotInFamily;
    }

    let widths: Vec<u32> = rows.iter().map(|&(lo, hi)| hi - lo + 1).collect();
    match classify_widths(&widths) {
        Some(tag) => Classified::InFamily(tag),
        None => Classified::NotInFamily,
    }
}

/// Recognise a bottom-up profile of right-aligned row widths as a family
/// member. Returns the canonical tag.
pub(crate) fn classify_widths(widths: &[u32]) -> Option<ShapeTag> {
    if widths.is_empty() {
        return Some(ShapeTag::Empty);
    }
    // Run-length encode.
    let mut runs: Vec<(u32, u32)> = Vec::new();
    for &w in widths {
        match runs.last_mut() {
            Some((rw, n)) if *rw == w => *n += 1,
            _ => runs.push((w, 1)),
        }
    }
    if runs.windows(2).any(|r| r[1].0 >= r[0].0) {
        return None; // widths must strictly shrink between runs
    }
    match runs.as_slice() {
        [(a, b)] => Some(rect(*a, *b)),
        [(a, n), (c, 2)] => s1(*a, n + 2, *c).ok(),
        [(3, n), (2, 4)] => s2(3, n + 4).ok(),
        [(a, n), (m, 2), (2, 2)] if *m + 1 == *a && *a >= 4 => s2(*a, n + 4).ok(),
        _ => None,
    }
}
