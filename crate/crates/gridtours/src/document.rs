//! The JSON interchange schema for coverings.
//!
//! Coordinates are 0-based `[x, y]` pairs. Every tour lists the closing
//! return to the base station explicitly, so a tour's length is its list
//! length minus one with no ambiguity.

use serde::{Deserialize, Serialize};

use crate::covering::CaseTag;
use crate::grid::geom::{GridSpec, Point, Tour, TourError};
use crate::solver::{Covering, Objective};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GridDims {
    pub cols: u32,
    pub rows: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OutputDocument {
    pub grid: GridDims,
    #[serde(rename = "L")]
    pub max_len: u64,
    pub objective: Objective,
    pub k: u64,
    pub total_length: u64,
    pub repeats_total: u64,
    pub case_tag: CaseTag,
    pub tours: Vec<Vec<(u32, u32)>>,
}

/// Serialise a covering. Tours appear in construction order.
pub fn emit(c: &Covering, grid: GridSpec, max_len: u64, objective: Objective) -> OutputDocument {
    OutputDocument {
        grid: GridDims { cols: grid.cols, rows: grid.rows },
        max_len,
        objective,
        k: c.k,
        total_length: c.total_length,
        repeats_total: c.repeats_total,
        case_tag: c.case_tag,
        tours: c
            .tours
            .iter()
            .map(|t| t.points().iter().map(|p| (p.x, p.y)).collect())
            .collect(),
    }
}

pub fn to_json(doc: &OutputDocument) -> String {
    serde_json::to_string_pretty(doc).expect("document serialises")
}

pub fn parse(s: &str) -> Result<OutputDocument, serde_json::Error> {
    serde_json::from_str(s)
}

impl OutputDocument {
    pub fn grid_spec(&self) -> GridSpec {
        GridSpec::new(self.grid.cols.max(1), self.grid.rows.max(1))
    }

    pub fn tour_points(&self) -> Vec<Vec<Point>> {
        self.tours
            .iter()
            .map(|t| t.iter().map(|&(x, y)| Point::new(x, y)).collect())
            .collect()
    }
}

/// Rebuild the covering a document describes; declared metrics are
/// recomputed from the tours, so a faithful round trip reproduces the
/// original covering exactly.
pub fn covering_from_document(doc: &OutputDocument) -> Result<Covering, TourError> {
    let tours: Result<Vec<Tour>, TourError> = doc
        .tour_points()
        .into_iter()
        .map(Tour::new)
        .collect();
    Ok(Covering::from_tours(doc.grid_spec(), tours?, doc.case_tag))
}
