//! Independent validation of coverings. Nothing here trusts solver
//! metadata: lengths, coverage and revisit counts are recomputed from the
//! raw tour point lists.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::covering::CaseTag;
use crate::grid::geom::{GridSpec, Point};
use crate::solver::{range_level_lower_bound, repeat_bounds, Covering};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ViolationCode {
    /// Tour does not start at the base station or does not return to it.
    OpenWalk,
    NonUnitStep,
    OffGrid,
    OddLength,
    BudgetExceeded,
    MissedVertex,
    /// Declared metrics disagree with the recount.
    MetadataMismatch,
    /// Revisit total outside the two-sided bound for the tour count.
    RepeatsOutOfBounds,
    /// A tour stays below the level every tour must reach.
    RangeLevelTooLow,
    EmptyTour,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub detail: String,
}

fn violation(code: ViolationCode, detail: impl Into<String>) -> Violation {
    Violation { code, detail: detail.into() }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub covered_count: u64,
    pub repeats_total: u64,
    pub repeats_by_vertex: BTreeMap<String, u64>,
    pub max_tour_length: u64,
    pub per_tour_max_level: Vec<u32>,
}

/// Structural checks on one tour: anchored, closed, unit steps, in-grid,
/// even length within budget.
pub fn validate_tour(points: &[Point], g: GridSpec, max_len: u64) -> Vec<Violation> {
    let mut v = Vec::new();
    if points.is_empty() {
        v.push(violation(ViolationCode::EmptyTour, "tour has no points"));
        return v;
    }
    if points[0] != Point::BASE {
        v.push(violation(
            ViolationCode::OpenWalk,
            format!("tour starts at {} instead of the base station", points[0]),
        ));
    }
    if points.len() > 1 && points.last() != points.first() {
        v.push(violation(
            ViolationCode::OpenWalk,
            format!("tour ends at {} without closing", points.last().unwrap()),
        ));
    }
    for (i, w) in points.windows(2).enumerate() {
        if w[0].manhattan(w[1]) != 1 {
            v.push(violation(
                ViolationCode::NonUnitStep,
                format!("step {i} jumps from {} to {}", w[0], w[1]),
            ));
            break;
        }
    }
    for p in points {
        if !g.contains(*p) {
            v.push(violation(ViolationCode::OffGrid, format!("{p} is outside {g}")));
            break;
        }
    }
    let len = points.len() as u64 - 1;
    if len % 2 != 0 {
        v.push(violation(ViolationCode::OddLength, format!("tour length {len} is odd")));
    }
    if len > max_len {
        v.push(violation(
            ViolationCode::BudgetExceeded,
            format!("tour length {len} exceeds budget {max_len}"),
        ));
    }
    v
}

/// Coverage and revisit recount. The start/end vertex of a closed tour is
/// one traversal; a vertex's revisits are its traversals minus one.
pub fn coverage_and_repeats(
    tours: &[Vec<Point>],
    g: GridSpec,
) -> (bool, u64, BTreeMap<Point, u64>) {
    let mut counts: BTreeMap<Point, u64> = BTreeMap::new();
    for t in tours {
        if t.is_empty() {
            continue;
        }
        let traversed = if t.len() > 1 && t.first() == t.last() {
            &t[..t.len() - 1]
        } else {
            &t[..]
        };
        for &p in traversed {
            *counts.entry(p).or_insert(0) += 1;
        }
    }
    let is_covering =
        counts.len() as u64 == g.vertex_count() && counts.keys().all(|p| g.contains(*p));
    let repeats: BTreeMap<Point, u64> = counts
        .iter()
        .filter(|(_, &c)| c > 1)
        .map(|(p, &c)| (*p, c - 1))
        .collect();
    (is_covering, repeats.values().sum(), repeats)
}

/// Bound checks tied to the construction case: the two-sided revisit bound
/// and the minimum level every tour must reach. Only the plain and
/// odd-count painting cases are governed by them.
pub fn check_optimality_bounds(
    tours: &[Vec<Point>],
    k: u64,
    repeats_total: u64,
    case_tag: CaseTag,
) -> Vec<Violation> {
    let mut v = Vec::new();
    if !matches!(case_tag, CaseTag::Pa | CaseTag::Pao) {
        return v;
    }
    let (lo, hi) = repeat_bounds(k);
    if repeats_total < lo || repeats_total > hi {
        v.push(violation(
            ViolationCode::RepeatsOutOfBounds,
            format!("{repeats_total} revisits outside [{lo}, {hi}] for k = {k}"),
        ));
    }
    let floor = range_level_lower_bound(k);
    for (i, t) in tours.iter().enumerate() {
        let max_level = t.iter().map(|p| p.level() as u64).max().unwrap_or(0);
        if max_level < floor {
            v.push(violation(
                ViolationCode::RangeLevelTooLow,
                format!("tour {i} peaks at level {max_level}, below {floor}"),
            ));
        }
    }
    v
}

/// Full verification of raw tours against declared metrics.
#[allow(clippy::too_many_arguments)]
pub fn verify_tours(
    tours: &[Vec<Point>],
    g: GridSpec,
    max_len: u64,
    declared_k: u64,
    declared_total: u64,
    declared_repeats: u64,
    case_tag: CaseTag,
) -> VerificationReport {
    let mut violations = Vec::new();
    for t in tours {
        violations.extend(validate_tour(t, g, max_len));
    }
    let (is_covering, repeats_total, repeats_by_vertex) = coverage_and_repeats(tours, g);
    let covered_count = {
        let mut seen: BTreeMap<Point, ()> = BTreeMap::new();
        for t in tours {
            let traversed = if t.len() > 1 && t.first() == t.last() {
                &t[..t.len() - 1]
            } else {
                &t[..]
            };
            for &p in traversed {
                seen.insert(p, ());
            }
        }
        seen.len() as u64
    };
    if !is_covering {
        violations.push(violation(
            ViolationCode::MissedVertex,
            format!("covers {covered_count} of {} vertices", g.vertex_count()),
        ));
    }
    let total_length: u64 = tours
        .iter()
        .map(|t| t.len().saturating_sub(1) as u64)
        .sum();
    if declared_k != tours.len() as u64 {
        violations.push(violation(
            ViolationCode::MetadataMismatch,
            format!("declared k = {declared_k}, found {} tours", tours.len()),
        ));
    }
    if declared_total != total_length {
        violations.push(violation(
            ViolationCode::MetadataMismatch,
            format!("declared total length {declared_total}, recounted {total_length}"),
        ));
    }
    if declared_repeats != repeats_total {
        violations.push(violation(
            ViolationCode::MetadataMismatch,
            format!("declared {declared_repeats} revisits, recounted {repeats_total}"),
        ));
    }
    // Identity: total length = vertices + revisits for any true covering.
    // A zero-length tour traverses its vertex without an edge, so each one
    // lowers the total by one.
    let zero_len = tours.iter().filter(|t| t.len() == 1).count() as u64;
    if is_covering && total_length + zero_len != g.vertex_count() + repeats_total {
        violations.push(violation(
            ViolationCode::MetadataMismatch,
            format!(
                "length identity broken: {total_length} != {} + {repeats_total}",
                g.vertex_count()
            ),
        ));
    }
    violations.extend(check_optimality_bounds(
        tours,
        tours.len() as u64,
        repeats_total,
        case_tag,
    ));
    let max_tour_length = tours
        .iter()
        .map(|t| (t.len() as u64).saturating_sub(1))
        .max()
        .unwrap_or(0);
    let per_tour_max_level = tours
        .iter()
        .map(|t| t.iter().map(|p| p.level()).max().unwrap_or(0))
        .collect();
    VerificationReport {
        valid: violations.is_empty(),
        violations,
        covered_count,
        repeats_total,
        repeats_by_vertex: repeats_by_vertex
            .iter()
            .map(|(p, c)| (p.to_string(), *c))
            .collect(),
        max_tour_length,
        per_tour_max_level,
    }
}

/// Verify a solver covering end to end.
pub fn verify_covering(c: &Covering, g: GridSpec, max_len: u64) -> VerificationReport {
    let raw: Vec<Vec<Point>> = c.tours.iter().map(|t| t.points().to_vec()).collect();
    verify_tours(
        &raw,
        g,
        max_len,
        c.k,
        c.total_length,
        c.repeats_total,
        c.case_tag,
    )
}
