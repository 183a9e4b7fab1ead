//! Fixtures shared by the benchmarks.

use hamming_radio::{build_ordering, HammingGraph, Ordering, SolverConfig};

pub fn graph(factors: &[usize]) -> HammingGraph {
    HammingGraph::new(factors.to_vec()).expect("valid factors")
}

/// A graph together with its constructed ordering.
pub fn ordered(l: usize, m: usize, n: usize) -> (HammingGraph, Ordering) {
    (
        graph(&[l, m, n]),
        build_ordering(l, m, n).expect("valid triple"),
    )
}

/// Solver settings without the consecutive-run bound.
pub fn search_only() -> SolverConfig {
    SolverConfig {
        run_pruning: false,
        ..SolverConfig::default()
    }
}
