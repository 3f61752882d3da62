//! Structural properties of the construction, checked across sweeps and
//! randomised instances.

use std::collections::BTreeSet;

use proptest::prelude::*;

use gridtours::covering::descent::vertical_descent;
use gridtours::covering::drivers::{painting, pao, par};
use gridtours::covering::{CaseTag, WalkBudget};
use gridtours::document::{covering_from_document, emit, parse, to_json};
use gridtours::grid::geom::{GridSpec, Point, Tour};
use gridtours::grid::region::{baseline_points, region_size};
use gridtours::solver::{
    kmin, range_level_lower_bound, solve, solve_min_length, solve_min_tours, Objective,
    SolveRequest,
};
use gridtours::verify::verify_covering;

fn region_points(g: GridSpec, m: u32) -> BTreeSet<Point> {
    let mut set = BTreeSet::new();
    for x in 0..g.cols {
        for y in 0..g.rows {
            if x + y >= m {
                set.insert(Point::new(x, y));
            }
        }
    }
    set
}

fn even_budgets(from: u64, to: u64) -> impl Iterator<Item = u64> {
    let from = from + from % 2;
    (from..=to).step_by(2)
}

/// Painting covers its region exactly, with pairwise vertex-disjoint walks
/// anchored at distinct consecutive baseline vertices, and revisits exactly
/// when the grid has an odd vertex count.
#[test]
fn painting_covers_region_exactly() {
    for cols in 2..=30u32 {
        for rows in cols..=30u32 {
            let g = GridSpec::new(cols, rows);
            for r in 1..=(cols / 2).max(1) {
                if 2 * r - 1 > cols - 1 {
                    continue;
                }
                // Generous budget: region size rounded up to even.
                let area = region_size(g, 2 * r - 1).unwrap();
                let budget = area + area % 2;
                let ws = match painting(g, r, WalkBudget(budget)) {
                    Ok(ws) => ws,
                    Err(_) => continue,
                };
                let mut covered = BTreeSet::new();
                let mut dup = 0u64;
                for w in &ws.walks {
                    for p in w.points() {
                        if !covered.insert(*p) {
                            dup += 1;
                        }
                    }
                }
                assert_eq!(covered, region_points(g, 2 * r - 1), "{g} r={r}");
                assert_eq!(dup, ws.repeats, "{g} r={r}");
                assert!(ws.repeats <= 1);
                assert_eq!(ws.repeats == 0, g.vertex_count() % 2 == 0, "{g} r={r}");
                // Endpoints are the first 2r baseline vertices, in order.
                let base = baseline_points(g, 2 * r - 1);
                for (i, w) in ws.walks.iter().enumerate() {
                    assert_eq!(w.start(), base[2 * i], "{g} r={r} walk {i}");
                    assert_eq!(w.end(), base[2 * i + 1], "{g} r={r} walk {i}");
                }
            }
        }
    }
}

/// The lift of a full painting adds exactly `2k^2 - 2k` revisits, all of
/// them strictly below the baseline.
#[test]
fn lift_repeat_count_matches_formula() {
    for cols in 2..=20u32 {
        for rows in cols..=20u32 {
            let g = GridSpec::new(cols, rows);
            for k in 1..=cols / 2 {
                if 2 * k - 1 > cols - 1 {
                    continue;
                }
                let area = region_size(g, 2 * k - 1).unwrap();
                let walk_budget = area + area % 2;
                let Ok(ws) = painting(g, k, WalkBudget(walk_budget)) else {
                    continue;
                };
                let max_len = walk_budget + 2 * (2 * k as u64 - 1);
                let tours = vertical_descent(&ws, g, max_len).unwrap();
                let mut counts = std::collections::BTreeMap::new();
                for t in &tours {
                    let pts = t.points();
                    for &p in &pts[..pts.len() - 1] {
                        *counts.entry(p).or_insert(0u64) += 1;
                    }
                }
                let below: u64 = counts
                    .iter()
                    .filter(|(p, _)| p.level() < 2 * k - 1)
                    .map(|(_, c)| c - 1)
                    .sum();
                let above: u64 = counts
                    .iter()
                    .filter(|(p, _)| p.level() >= 2 * k - 1)
                    .map(|(_, c)| c - 1)
                    .sum();
                let k = k as u64;
                assert_eq!(below, 2 * k * k - 2 * k, "{g} k={k}");
                assert_eq!(above, ws.repeats, "{g} k={k}");
            }
        }
    }
}

/// Both objectives return exactly the minimum tour count, every tour of the
/// min-length answer reaches the required level, and at most one tour stays
/// below the baseline level.
#[test]
fn objectives_agree_on_tour_count_and_levels() {
    for cols in 1..=18u32 {
        for rows in cols..=18u32 {
            let g = GridSpec::new(cols, rows);
            for max_len in even_budgets(g.min_feasible_len(), g.min_feasible_len() + 12) {
                let k = kmin(g, max_len).unwrap();
                let a = solve_min_tours(g, max_len).unwrap();
                let b = solve_min_length(g, max_len).unwrap();
                assert_eq!(a.k, k, "{g} L={max_len}");
                assert_eq!(b.k, k, "{g} L={max_len}");
                if matches!(b.case_tag, CaseTag::Pa | CaseTag::Pao) {
                    let floor = range_level_lower_bound(k);
                    for t in &b.tours {
                        assert!(
                            t.max_level() as u64 >= floor,
                            "{g} L={max_len}: tour peaks below {floor}"
                        );
                    }
                    // At most one tour misses the baseline level.
                    let low = b
                        .tours
                        .iter()
                        .filter(|t| (t.max_level() as u64) < 2 * k - 1)
                        .count();
                    assert!(low <= 1, "{g} L={max_len}: {low} tours below the baseline");
                }
            }
        }
    }
}

/// Solver output verifies cleanly across the sweep, for both objectives.
#[test]
fn solver_output_always_verifies() {
    for cols in 1..=25u32 {
        for rows in cols..=25u32 {
            let g = GridSpec::new(cols, rows);
            for max_len in even_budgets(g.min_feasible_len(), g.min_feasible_len() + 20) {
                for objective in [Objective::MinTours, Objective::MinLength] {
                    let c = solve(&SolveRequest { grid: g, max_len, objective }).unwrap();
                    let report = verify_covering(&c, g, max_len);
                    assert!(
                        report.valid,
                        "{g} L={max_len} {objective:?}: {:?}",
                        report.violations
                    );
                }
            }
        }
    }
}

/// Odd-count painting covers everything except the designated corner
/// vertex, with no revisits inside the region, and its lift lands exactly
/// on the lower repeat bound.
#[test]
fn odd_count_painting_properties() {
    let mut successes = 0;
    for cols in (5..=21u32).step_by(2) {
        for rows in (cols..=21u32).step_by(2) {
            let g = GridSpec::new(cols, rows);
            for k in 2..(cols + 1) / 2 {
                // Walk budget generous enough for the final zone.
                let m = 2 * k - 2;
                let area = region_size(g, m).unwrap();
                let max_len = {
                    let v = area + 2 * m as u64;
                    v + v % 2
                };
                let Ok(ws) = pao(g, k, max_len) else {
                    continue;
                };
                successes += 1;
                assert_eq!(ws.repeats, 0, "{g} k={k}");
                let designated = ws.designated.unwrap();
                assert_eq!(designated.level(), m, "{g} k={k}");
                let mut covered: BTreeSet<Point> =
                    ws.walks.iter().flat_map(|w| w.points().iter().copied()).collect();
                assert!(!covered.contains(&designated));
                covered.insert(designated);
                assert_eq!(covered, region_points(g, m), "{g} k={k}");

                let tours = vertical_descent(&ws, g, max_len).unwrap();
                let mut counts = std::collections::BTreeMap::new();
                for t in &tours {
                    let pts = t.points();
                    let traversed = if pts.len() > 1 { &pts[..pts.len() - 1] } else { pts };
                    for &p in traversed {
                        *counts.entry(p).or_insert(0u64) += 1;
                    }
                }
                let repeats: u64 = counts.values().map(|c| c - 1).sum();
                let k = k as u64;
                assert_eq!(repeats, 2 * k * k - 2 * k - 1, "{g} k={k}");
            }
        }
    }
    assert!(successes > 20, "only {successes} odd-count paintings succeeded");
}

/// Column-finished painting: when the leftover column has more than two
/// vertices, every earlier walk is budget-tight; with an even row count at
/// least one revisit is unavoidable and the construction performs exactly
/// the minimum.
#[test]
fn column_finish_properties() {
    for cols in (3..=15u32).step_by(2) {
        for rows in cols..=17u32 {
            let g = GridSpec::new(cols, rows);
            for max_len in even_budgets(g.min_feasible_len(), g.min_feasible_len() + 16) {
                let Ok(ws) = par(g, max_len) else {
                    continue;
                };
                let l = max_len - 2 * (g.cols as u64 - 1);
                let column = ws.walks.last().unwrap();
                let height = column.len() / 2 + 1;
                if height > 2 {
                    for (i, w) in ws.walks[..ws.walks.len() - 1].iter().enumerate() {
                        assert_eq!(w.len(), l, "{g} L={max_len} walk {i} not budget-tight");
                    }
                }
                if height == 2 && rows % 2 == 0 {
                    assert_eq!(ws.repeats, 1, "{g} L={max_len}");
                }
                // Region revisits are at least half the shortest walk.
                let l_min = ws.walks.iter().map(|w| w.len()).min().unwrap();
                assert!(ws.repeats >= l_min / 2, "{g} L={max_len}");
                // The walk set covers the region exactly.
                let covered: BTreeSet<Point> =
                    ws.walks.iter().flat_map(|w| w.points().iter().copied()).collect();
                assert_eq!(covered, region_points(g, g.cols - 1), "{g} L={max_len}");
            }
        }
    }
}

/// Determinism: solving the same request twice yields byte-identical
/// documents.
#[test]
fn solve_is_deterministic() {
    for (cols, rows, max_len) in [(10, 10, 36), (7, 13, 44), (9, 9, 32), (12, 5, 38)] {
        let g = GridSpec::new(cols, rows);
        let req = SolveRequest { grid: g, max_len, objective: Objective::MinLength };
        let a = to_json(&emit(&solve(&req).unwrap(), g, max_len, req.objective));
        let b = to_json(&emit(&solve(&req).unwrap(), g, max_len, req.objective));
        assert_eq!(a, b);
    }
}

proptest! {
    /// JSON round trip reconstructs the covering exactly on arbitrary
    /// feasible instances.
    #[test]
    fn document_round_trip(cols in 1u32..14, rows in 1u32..14, slack in 0u64..12, min_tours in proptest::bool::ANY) {
        let g = GridSpec::new(cols, rows);
        let max_len = {
            let v = g.min_feasible_len() + 2 * slack;
            v + v % 2
        };
        let objective = if min_tours { Objective::MinTours } else { Objective::MinLength };
        let c = solve(&SolveRequest { grid: g, max_len, objective }).unwrap();
        let doc = emit(&c, g, max_len, objective);
        let parsed = parse(&to_json(&doc)).unwrap();
        prop_assert_eq!(&parsed, &doc);
        let rebuilt = covering_from_document(&parsed).unwrap();
        prop_assert_eq!(rebuilt, c);
    }

    /// Every tour the solver emits is anchored, closed, even and within
    /// budget; lengths always satisfy the revisit identity.
    #[test]
    fn tours_are_well_formed(cols in 1u32..20, rows in 1u32..20, slack in 0u64..10) {
        let g = GridSpec::new(cols, rows);
        let max_len = {
            let v = g.min_feasible_len() + 2 * slack;
            v + v % 2
        };
        let c = solve_min_length(g, max_len).unwrap();
        // Zero-length tours traverse their vertex without an edge.
        let zero_len = c.tours.iter().filter(|t| t.len() == 0).count() as u64;
        prop_assert_eq!(c.total_length + zero_len, g.vertex_count() + c.repeats_total);
        // The base station is shared by every tour.
        let base_repeats = c.repeats_by_vertex.get(&Point::BASE).copied().unwrap_or(0);
        prop_assert!(base_repeats >= c.k - 1);
        for t in &c.tours {
            prop_assert!(t.len() <= max_len);
            prop_assert_eq!(t.len() % 2, 0);
            // Anchoring and unit steps are enforced by construction.
            let _ = Tour::new(t.points().to_vec()).unwrap();
        }
    }
}
