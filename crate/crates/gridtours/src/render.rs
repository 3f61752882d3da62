//! Deterministic SVG and ASCII renderings of a covering.

use std::fmt::Write;

use crate::grid::geom::{GridSpec, Point};
use crate::solver::Covering;

const CELL: u32 = 40;
const MARGIN: u32 = 30;

/// Fixed palette cycled by tour index.
const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22",
];

fn svg_xy(g: GridSpec, p: Point) -> (u32, u32) {
    // Flip y: row 0 is drawn at the bottom.
    (
        MARGIN + p.x * CELL,
        MARGIN + (g.rows - 1 - p.y) * CELL,
    )
}

/// Byte-stable SVG: one polyline per tour over a lattice of vertex dots,
/// with the base station marked.
pub fn render_svg(c: &Covering, g: GridSpec) -> String {
    let width = 2 * MARGIN + (g.cols - 1) * CELL;
    let height = 2 * MARGIN + (g.rows - 1) * CELL;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");
    for y in 0..g.rows {
        for x in 0..g.cols {
            let (cx, cy) = svg_xy(g, Point::new(x, y));
            let _ = writeln!(out, "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\" fill=\"#444\"/>");
        }
    }
    for (i, tour) in c.tours.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        if tour.points().len() == 1 {
            let (cx, cy) = svg_xy(g, tour.points()[0]);
            let _ = writeln!(
                out,
                "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"7\" fill=\"none\" stroke=\"{color}\" stroke-width=\"3\"/>"
            );
            continue;
        }
        let mut points = String::new();
        for p in tour.points() {
            let (cx, cy) = svg_xy(g, *p);
            let _ = write!(points, "{cx},{cy} ");
        }
        let _ = writeln!(
            out,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"3\" stroke-opacity=\"0.75\" stroke-linejoin=\"round\"/>",
            points.trim_end()
        );
    }
    let (bx, by) = svg_xy(g, Point::BASE);
    let _ = writeln!(
        out,
        "  <rect x=\"{}\" y=\"{}\" width=\"16\" height=\"16\" fill=\"black\"/>",
        bx - 8,
        by - 8
    );
    out.push_str("</svg>\n");
    out
}

/// Text rendering: vertices and traversed edges, with arrows showing the
/// direction of the first traversal of each edge.
pub fn render_ascii(c: &Covering, g: GridSpec) -> String {
    // Edge direction marks keyed by the lower/left endpoint.
    let mut horiz: Vec<Option<char>> = vec![None; (g.cols * g.rows) as usize];
    let mut vert: Vec<Option<char>> = vec![None; (g.cols * g.rows) as usize];
    let idx = |p: Point| (p.y * g.cols + p.x) as usize;
    for tour in &c.tours {
        for w in tour.points().windows(2) {
            let (a, b) = (w[0], w[1]);
            if a.y == b.y {
                let left = if a.x < b.x { a } else { b };
                let mark = if a.x < b.x { '>' } else { '<' };
                let slot = &mut horiz[idx(left)];
                if slot.is_none() {
                    *slot = Some(mark);
                } else if *slot != Some(mark) {
                    *slot = Some('-');
                }
            } else {
                let low = if a.y < b.y { a } else { b };
                let mark = if a.y < b.y { '^' } else { 'v' };
                let slot = &mut vert[idx(low)];
                if slot.is_none() {
                    *slot = Some(mark);
                } else if *slot != Some(mark) {
                    *slot = Some('|');
                }
            }
        }
    }
    let mut covered = vec![false; (g.cols * g.rows) as usize];
    for tour in &c.tours {
        for p in tour.points() {
            covered[idx(*p)] = true;
        }
    }
    let mut out = String::new();
    for y in (0..g.rows).rev() {
        for x in 0..g.cols {
            let p = Point::new(x, y);
            let glyph = if p == Point::BASE {
                'B'
            } else if covered[idx(p)] {
                '+'
            } else {
                '.'
            };
            out.push(glyph);
            if x + 1 < g.cols {
                let mark = horiz[idx(p)].unwrap_or(' ');
                out.push(mark);
                out.push(mark);
            }
        }
        out.push('\n');
        if y > 0 {
            for x in 0..g.cols {
                let below = Point::new(x, y - 1);
                out.push(vert[idx(below)].unwrap_or(' '));
                if x + 1 < g.cols {
                    out.push_str("  ");
                }
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_min_length;

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let g = GridSpec::new(10, 10);
        let c = solve_min_length(g, 36).unwrap();
        let a = render_svg(&c, g);
        let b = render_svg(&c, g);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        assert_eq!(a.matches("<polyline").count(), 4);
    }

    #[test]
    fn svg_single_vertex_grid() {
        let g = GridSpec::new(1, 1);
        let c = solve_min_length(g, 0).unwrap();
        let svg = render_svg(&c, g);
        assert!(svg.contains("<rect x="));
    }

    #[test]
    fn ascii_2x3_has_six_cells() {
        let g = GridSpec::new(2, 3);
        let c = solve_min_length(g, 6).unwrap();
        let art = render_ascii(&c, g);
        let cells = art.chars().filter(|c| matches!(c, 'B' | '+')).count();
        assert_eq!(cells, 6);
        assert!(art.contains('>') || art.contains('<'));
        assert!(art.contains('^') || art.contains('v'));
    }
}
