//! Brute-force reference oracles for tiny instances.
//!
//! Candidate tours are enumerated by depth-first search over unit steps
//! from the base station, keeping for every coverage set the shortest
//! (then lexicographically smallest) closed walk that achieves it. Optima
//! are then found by branch-and-bound set cover, minimising total length
//! or tour count. A resource guard keeps the state space enumerable.

use std::collections::HashMap;

use thiserror::Error;

use crate::grid::geom::{GridSpec, Point};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance {cells} cells / budget {max_len} exceeds the oracle guard ({guard_cells} cells, budget {guard_len})")]
    ResourceGuard { cells: u64, max_len: u64, guard_cells: u64, guard_len: u64 },
    #[error("no covering exists within the budget")]
    Infeasible,
}

/// Size limits for the exhaustive search. The environment variable
/// `GRIDTOURS_ORACLE_GUARD` (format `cells=N,len=M`) may raise them.
#[derive(Clone, Copy, Debug)]
pub struct OracleGuard {
    pub max_cells: u64,
    pub max_len: u64,
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard { max_cells: 12, max_len: 16 }
    }
}

impl OracleGuard {
    pub fn from_env() -> OracleGuard {
        let mut guard = OracleGuard::default();
        if let Ok(spec) = std::env::var("GRIDTOURS_ORACLE_GUARD") {
            for part in spec.split(',') {
                match part.trim().split_once('=') {
                    Some(("cells", v)) => {
                        if let Ok(v) = v.trim().parse() {
                            guard.max_cells = v;
                        }
                    }
                    Some(("len", v)) => {
                        if let Ok(v) = v.trim().parse() {
                            guard.max_len = v;
                        }
                    }
                    _ => {}
                }
            }
        }
        guard
    }

    fn admit(&self, g: GridSpec, max_len: u64) -> Result<(), OracleError> {
        if g.vertex_count() > self.max_cells || max_len > self.max_len {
            return Err(OracleError::ResourceGuard {
                cells: g.vertex_count(),
                max_len,
                guard_cells: self.max_cells,
                guard_len: self.max_len,
            });
        }
        Ok(())
    }
}

/// An optimal covering found by exhaustive search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleSolution {
    pub tours: Vec<Vec<Point>>,
    pub k: u64,
    pub total_length: u64,
}

#[derive(Clone, Debug)]
struct Candidate {
    mask: u32,
    len: u64,
    path: Vec<Point>,
}

/// All distinct coverage sets reachable by one tour, each with its
/// shortest lexicographically-smallest witness walk.
fn enumerate_tours(g: GridSpec, max_len: u64) -> Vec<Candidate> {
    let cells = g.vertex_count() as usize;
    let idx = |p: Point| (p.y as usize) * g.cols as usize + p.x as usize;
    let full_len = max_len as usize;

    // best coverage-set → (len, path)
    let mut best: HashMap<u32, (u64, Vec<Point>)> = HashMap::new();
    // Visited (pos, steps, mask) states. Flat table for the default guard,
    // hash set when the guard has been raised past its table size.
    let flat_size = cells
        .checked_mul(full_len + 1)
        .and_then(|v| v.checked_mul(1usize << cells.min(32)))
        .filter(|&v| v <= 1 << 25);
    let mut seen_flat = flat_size.map(|n| vec![false; n]);
    let mut seen_hash: std::collections::HashSet<u64> = std::collections::HashSet::new();
    let mut visit = |pos: usize, steps: usize, mask: u32| -> bool {
        match &mut seen_flat {
            Some(table) => {
                let key = (pos * (full_len + 1) + steps) * (1 << cells) + mask as usize;
                let was = table[key];
                table[key] = true;
                !was
            }
            None => seen_hash.insert(((pos * (full_len + 1) + steps) as u64) << 32 | mask as u64),
        }
    };

    let mut stack: Vec<(Point, usize, u32, Vec<Point>)> = Vec::new();
    stack.push((Point::BASE, 0, 1 << idx(Point::BASE), vec![Point::BASE]));
    while let Some((pos, steps, mask, path)) = stack.pop() {
        if pos == Point::BASE && steps > 0 {
            debug_assert_eq!(steps % 2, 0);
            let entry = best.entry(mask).or_insert_with(|| (steps as u64, path.clone()));
            if (steps as u64, &path) < (entry.0, &entry.1) {
                *entry = (steps as u64, path.clone());
            }
        }
        if steps == full_len {
            continue;
        }
        // Neighbours in deterministic order.
        let candidates = [
            (pos.x.wrapping_sub(1), pos.y),
            (pos.x + 1, pos.y),
            (pos.x, pos.y.wrapping_sub(1)),
            (pos.x, pos.y + 1),
        ];
        for (x, y) in candidates {
            let q = Point::new(x, y);
            if !g.contains(q) {
                continue;
            }
            // Must still be able to return in time.
            if steps as u64 + 1 + q.manhattan(Point::BASE) as u64 > max_len {
                continue;
            }
            let nmask = mask | 1 << idx(q);
            if !visit(idx(q), steps + 1, nmask) {
                continue;
            }
            let mut npath = path.clone();
            npath.push(q);
            stack.push((q, steps + 1, nmask, npath));
        }
    }

    let mut cands: Vec<Candidate> = best
        .into_iter()
        .map(|(mask, (len, path))| Candidate { mask, len, path })
        .collect();
    // Drop dominated coverage sets: anything covered no-better by a
    // superset at no extra length.
    cands.sort_by(|a, b| (a.len, &a.path).cmp(&(b.len, &b.path)));
    let mut kept: Vec<Candidate> = Vec::new();
    'outer: for c in cands {
        for k in &kept {
            if k.mask & c.mask == c.mask && k.len <= c.len {
                continue 'outer;
            }
        }
        kept.push(c);
    }
    kept
}

fn covering_search(
    cands: &[Candidate],
    full_mask: u32,
    minimise_count: bool,
) -> Option<(u64, Vec<usize>)> {
    // Branch on the lowest uncovered cell; candidates are pre-sorted so the
    // first solution found at a given cost is the lexicographic winner.
    let mut by_cell: Vec<Vec<usize>> = vec![Vec::new(); 32];
    for (i, c) in cands.iter().enumerate() {
        for cell in 0..32 {
            if c.mask & (1 << cell) != 0 {
                by_cell[cell].push(i);
            }
        }
    }
    let max_cover = cands.iter().map(|c| c.mask.count_ones() as u64).max()?;

    struct Search<'a> {
        cands: &'a [Candidate],
        by_cell: &'a [Vec<usize>],
        full: u32,
        minimise_count: bool,
        max_cover: u64,
        best: Option<(u64, Vec<usize>)>,
    }
    impl Search<'_> {
        fn cost(&self, chosen: &[usize]) -> u64 {
            if self.minimise_count {
                chosen.len() as u64
            } else {
                chosen.iter().map(|&i| self.cands[i].len).sum()
            }
        }
        fn bound(&self, covered: u32) -> u64 {
            let missing = (self.full & !covered).count_ones() as u64;
            if missing == 0 {
                return 0;
            }
            if self.minimise_count {
                missing.div_ceil(self.max_cover)
            } else {
                // Any tour covering m new vertices is at least m long.
                missing
            }
        }
        fn run(&mut self, covered: u32, chosen: &mut Vec<usize>) {
            let cost = self.cost(chosen);
            if let Some((best_cost, _)) = &self.best {
                if cost + self.bound(covered) > *best_cost {
                    return;
                }
            }
            if covered == self.full {
                let pick = chosen.clone();
                let replace = match &self.best {
                    None => true,
                    Some((bc, bp)) => {
                        cost < *bc || (cost == *bc && sorted_paths(self.cands, &pick) < sorted_paths(self.cands, bp))
                    }
                };
                if replace {
                    self.best = Some((cost, pick));
                }
                return;
            }
            let cell = (0..32).find(|&c| self.full & (1 << c) != 0 && covered & (1 << c) == 0).unwrap();
            for &i in &self.by_cell[cell] {
                chosen.push(i);
                self.run(covered | self.cands[i].mask, chosen);
                chosen.pop();
            }
        }
    }
    fn sorted_paths(cands: &[Candidate], pick: &[usize]) -> Vec<Vec<Point>> {
        let mut v: Vec<Vec<Point>> = pick.iter().map(|&i| cands[i].path.clone()).collect();
        v.sort();
        v
    }

    let mut s = Search {
        cands,
        by_cell: &by_cell,
        full: full_mask,
        minimise_count,
        max_cover,
        best: None,
    };
    s.run(0, &mut Vec::new());
    s.best
}

fn solve_exhaustive(
    g: GridSpec,
    max_len: u64,
    guard: OracleGuard,
    minimise_count: bool,
) -> Result<OracleSolution, OracleError> {
    guard.admit(g, max_len)?;
    if g.vertex_count() == 1 {
        // The zero-length tour at the base station.
        return Ok(OracleSolution { tours: vec![vec![Point::BASE]], k: 1, total_length: 0 });
    }
    let cands = enumerate_tours(g, max_len);
    let full_mask: u32 = if g.vertex_count() == 32 {
        u32::MAX
    } else {
        (1u32 << g.vertex_count()) - 1
    };
    let (_, pick) =
        covering_search(&cands, full_mask, minimise_count).ok_or(OracleError::Infeasible)?;
    let mut tours: Vec<Vec<Point>> = pick.iter().map(|&i| cands[i].path.clone()).collect();
    tours.sort();
    let total_length: u64 = tours.iter().map(|t| t.len() as u64 - 1).sum();
    Ok(OracleSolution { k: tours.len() as u64, total_length, tours })
}

/// Exact minimum total length over all covering tour sets.
pub fn brute_force_min_length(g: GridSpec, max_len: u64) -> Result<OracleSolution, OracleError> {
    solve_exhaustive(g, max_len, OracleGuard::from_env(), false)
}

/// Exact minimum number of covering tours.
pub fn brute_force_min_tours(g: GridSpec, max_len: u64) -> Result<u64, OracleError> {
    solve_exhaustive(g, max_len, OracleGuard::from_env(), true).map(|s| s.k)
}

/// As [`brute_force_min_length`], with an explicit guard.
pub fn brute_force_min_length_with(
    g: GridSpec,
    max_len: u64,
    guard: OracleGuard,
) -> Result<OracleSolution, OracleError> {
    solve_exhaustive(g, max_len, guard, false)
}

/// As [`brute_force_min_tours`], with an explicit guard.
pub fn brute_force_min_tours_with(
    g: GridSpec,
    max_len: u64,
    guard: OracleGuard,
) -> Result<u64, OracleError> {
    solve_exhaustive(g, max_len, guard, true).map(|s| s.k)
}
