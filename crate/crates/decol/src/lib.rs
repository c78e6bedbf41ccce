//! Defect-bounded edge colouring of loopless multigraphs.
//!
//! A *d-defective* edge colouring partitions the edge set so that every
//! vertex is incident with at most `d` edges of each colour; `chi'_d(G)`
//! is the least number of colours required. The library implements the
//! tight constructive bounds
//!
//! * `chi'_d(G) = ceil(Delta/d)` for even `d`, and
//! * `chi'_d(G) <= ceil((3*Delta - 1)/(3*d - 1))` for odd `d`,
//!
//! where `Delta` is the maximum degree. Both are attained by Shannon
//! graphs (triangles with balanced parallel classes). The odd case runs a
//! recursive factor-peeling algorithm built on Euler splits, 2-factor
//! decompositions and f-factor extraction via matchings; every path is
//! deterministic, so colourings are reproducible byte for byte.
//!
//! Module map:
//!
//! * [`graph`] - the [`Multigraph`] type, file format, degrees,
//!   components, bridges, Euler circuits and the two regularisation
//!   constructions (doubling, copy-matching).
//! * [`factor`] - Euler splits, 2-factorisation of even-regular graphs,
//!   general f-factors through a Tutte-style matching reduction, and
//!   k-factors forced through a chosen edge or routed around a bridge.
//! * [`colour`] - the defective colourers: the even-d equality, the odd-d
//!   recursion with its bridge surgeries and base cases, Shannon graph
//!   colourings, and the max-degree-2d parity split.
//! * [`proper`] - fan-recolouring proper edge colouring of simple graphs
//!   with at most `Delta + 1` colours, plus colour binning.
//! * [`bounds`] - the certificate verifier, lower/upper bound
//!   calculators and the exact backtracking oracle for small instances.
//! * [`construct`] - generators: Shannon graphs, the degree-gadget
//!   family, the hardness reduction, the classic 3-vertex gap example
//!   and seeded random regular multigraphs.
//!
//! Everything operates on immutable values and plain functions, so all
//! types are `Send + Sync` and calls can be fanned out across threads
//! freely.
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run -p decol --example shannon_tightness`. The `decol` binary
//! exposes the same operations as a small command line
//! (`colour`, `verify`, `bounds`, `generate`, `reduce`).

pub mod bounds;
pub mod colour;
pub mod construct;
mod error;
pub mod factor;
pub mod graph;
pub mod matching;
pub mod proper;

pub use error::{Error, Result};
pub use graph::{EdgeId, Multigraph, Vertex};

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    debug_assert!(b > 0);
    a.div_ceil(b)
}
