//! Radio labelings of Hamming graphs.
//!
//! * [`graph`]: Hamming graphs as products of complete graphs.
//! * [`labeling`]: the radio condition, graceful orderings and greedy labels.
//! * [`construction`]: consecutive orderings of `K_l □ K_m □ K_n`.
//! * [`exceptional`]: radio numbers of all diameter-3 Hamming graphs, with
//!   explicit labelings for the non-graceful ones.
//! * [`solver`]: exact radio numbers by branch-and-bound.
//! * [`formats`]: CSV layouts and graph arguments.

pub mod construction;
pub mod error;
pub mod exceptional;
pub mod formats;
pub mod graph;
pub mod labeling;
pub mod solver;

pub use construction::{
    build_blocks, build_ordering, construction_params, seed, ConstructionParams, MatrixBlock, Seed,
};
pub use error::{Error, Result};
pub use exceptional::{
    constructive_labeling, jump_lower_bound, labeling_22n, labeling_233, max_consecutive_run,
    ordering_22n, radio_number_formula, radio_number_of, RnCase, RnFormulaResult,
};
pub use formats::GraphSpec;
pub use graph::{HammingGraph, Vertex};
pub use labeling::{
    check_graceful, span_of_ordering, validate, verify_bijection, GracefulReport, GreedyLabeling,
    Ordering, RadioLabeling, ValidationReport, Violation,
};
pub use solver::{minimal_remaining_increment, solve, SolveResult, SolverConfig};
