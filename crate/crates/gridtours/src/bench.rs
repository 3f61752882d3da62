//! Scaling benchmark for the solver's linear-time behaviour.

use std::time::Instant;

use crate::grid::geom::GridSpec;
use crate::solver::{solve, Objective, SolveRequest};

/// How the tour budget is derived from the grid size.
#[derive(Clone, Copy, Debug)]
pub enum LengthPolicy {
    /// `factor` times the far-corner round trip, rounded up to even.
    PerimeterMultiple(f64),
}

impl LengthPolicy {
    pub fn parse(s: &str) -> Option<LengthPolicy> {
        let (name, factor) = match s.split_once('=') {
            Some((n, f)) => (n, f.parse().ok()?),
            None => (s, 2.0),
        };
        match name {
            "perimeter-multiple" => Some(LengthPolicy::PerimeterMultiple(factor)),
            _ => None,
        }
    }

    pub fn budget(&self, g: GridSpec) -> u64 {
        match self {
            LengthPolicy::PerimeterMultiple(f) => {
                let raw = (g.min_feasible_len() as f64 * f).ceil() as u64;
                raw + raw % 2
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub cols: u32,
    pub rows: u32,
    pub vertices: u64,
    pub max_len: u64,
    pub objective: Objective,
    pub millis: f64,
    /// Total points emitted across all tours.
    pub ops: u64,
    /// This row's time over the previous row's.
    pub ratio_vs_prev: Option<f64>,
    pub timestamp_ms: u128,
}

/// Solve square grids of the given sizes, timing each at least `reps`
/// times (and until a sampling floor is reached, so sub-millisecond sizes
/// are sampled often) and reporting the fastest run. Rows carry the time
/// ratio against the previous size.
pub fn run_bench(
    sizes: &[u32],
    policy: LengthPolicy,
    objective: Objective,
    reps: u32,
) -> Vec<BenchRow> {
    let epoch = Instant::now();
    let mut out: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let g = GridSpec::new(size, size);
        let max_len = policy.budget(g);
        let req = SolveRequest { grid: g, max_len, objective };
        let mut best = f64::INFINITY;
        let mut ops = 0;
        let sampling = Instant::now();
        let mut runs = 0;
        while runs < reps.max(1) || sampling.elapsed().as_millis() < 60 {
            let t0 = Instant::now();
            let covering = solve(&req).expect("bench instance must be feasible");
            let dt = t0.elapsed().as_secs_f64() * 1e3;
            ops = covering
                .tours
                .iter()
                .map(|t| t.points().len() as u64)
                .sum();
            if dt < best {
                best = dt;
            }
            runs += 1;
        }
        let ratio = out.last().map(|prev: &BenchRow| best / prev.millis);
        out.push(BenchRow {
            cols: size,
            rows: size,
            vertices: g.vertex_count(),
            max_len,
            objective,
            millis: best,
            ops,
            ratio_vs_prev: ratio,
            timestamp_ms: epoch.elapsed().as_millis(),
        });
    }
    out
}

/// CSV with a header row. The timestamp column is monotonic milliseconds
/// since the harness started and is excluded from determinism checks.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("cols,rows,vertices,max_length,objective,millis,ops,ratio_vs_prev,timestamp_ms\n");
    for r in rows {
        let objective = match r.objective {
            Objective::MinTours => "min-tours",
            Objective::MinLength => "min-length",
        };
        let ratio = r
            .ratio_vs_prev
            .map(|x| format!("{x:.3}"))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{:.3},{},{},{}\n",
            r.cols, r.rows, r.vertices, r.max_len, objective, r.millis, r.ops, ratio, r.timestamp_ms
        ));
    }
    out
}
