//! Covering rectangular grid graphs with corner-anchored tours of bounded length.
//!
//! The grid has `cols × rows` vertices with a base station at the bottom-left
//! corner `(0, 0)`. A tour is a closed walk through the base station whose
//! length (number of unit steps) is even and at most a budget `L`. The solver
//! computes coverings of the whole grid that are optimal for one of two
//! objectives:
//!
//! * **min-tours** — fewest tours, and
//! * **min-length** — smallest total length, equivalently fewest vertex
//!   revisits.
//!
//! Both run in time linear in the number of grid vertices. The crate also
//! ships an independent verifier ([`verify`]), brute-force reference oracles
//! for tiny instances ([`oracle`]), a greedy baseline ([`greedy`]), JSON /
//! SVG / ASCII emitters ([`document`], [`render`]) and a scaling benchmark
//! harness ([`bench`]).
//!
//! The construction splits the grid along anti-diagonal levels, covers the
//! upper region with budget-bounded walks anchored on a baseline
//! ([`covering`]), and lifts those walks to full tours with monotone
//! connections to the base station.

pub mod bench;
pub mod covering;
pub mod document;
pub mod greedy;
pub mod grid;
pub mod oracle;
pub mod render;
pub mod solver;
pub mod verify;

pub use grid::geom::{GridSpec, Point, Tour, Walk};
pub use solver::{solve, Covering, Objective, SolveError, SolveRequest};
