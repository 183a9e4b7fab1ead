//! Exact radio numbers by branch-and-bound over vertex orderings.
//!
//! Every radio labeling is injective, so sorting its vertices by label gives
//! an ordering, and the greedy-gap labeling of that ordering has no larger
//! span (see [`span_of_ordering`]). Minimising over orderings with greedy
//! labels therefore yields the radio number.
//!
//! The search places vertices in label order. With labels strictly
//! increasing, only the last `diam - 1` placed vertices can constrain the
//! next label. A partial ordering is cut when its label plus
//! [`minimal_remaining_increment`] cannot beat the incumbent, using the
//! longest consecutive run of the graph from [`max_consecutive_run`].

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::exceptional::{constructive_labeling, max_consecutive_run};
use crate::graph::HammingGraph;
use crate::labeling::{span_of_ordering, validate, Ordering, RadioLabeling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of search nodes expanded.
    pub node_budget: u64,
    pub time_budget: Duration,
    /// Restrict to orderings whose coordinate values appear in increasing
    /// order on every axis (this also fixes the first vertex to `(1,...,1)`).
    pub symmetry_reduction: bool,
    /// Only look for labelings with span at most this value.
    pub initial_upper_bound: Option<u64>,
    /// Use the consecutive-run bound for pruning. When off, the only bound is
    /// one unit step per remaining vertex.
    pub run_pruning: bool,
    /// Node cap for the run-length search; on exhaustion the bound falls
    /// back to a run as long as the whole graph.
    pub run_search_cap: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            node_budget: 5_000_000_000,
            time_budget: Duration::from_secs(300),
            symmetry_reduction: true,
            initial_upper_bound: None,
            run_pruning: true,
            run_search_cap: 5_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Span of the witness. The radio number when `optimal` is set,
    /// otherwise an upper bound on it.
    pub rn: u64,
    pub witness: RadioLabeling,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Run length used for pruning, if one was computed.
    pub max_run: Option<usize>,
}

/// Lower bound on `final label - current label` when `remaining` vertices,
/// the current one included, are still to be labeled and no run of
/// consecutive labels is longer than `run`: one unit step per vertex after
/// the current one, plus one extra for each forced jump.
pub fn minimal_remaining_increment(remaining: usize, run: usize) -> u64 {
    if remaining == 0 {
        return 0;
    }
    let run = run.max(1);
    ((remaining - 1) + remaining.div_ceil(run) - 1) as u64
}

pub fn solve(graph: &HammingGraph, cfg: &SolverConfig) -> Result<SolveResult> {
    if cfg.node_budget == 0 || cfg.time_budget.is_zero() {
        return Err(Error::InvalidBudget);
    }
    let started = Instant::now();
    let n = graph.vertex_count();
    let diam = graph.diameter();

    if diam <= 1 {
        let ordering = Ordering::new(graph.vertices().collect());
        let witness = RadioLabeling::consecutive(graph, &ordering)?;
        return Ok(SolveResult {
            rn: n as u64,
            witness,
            optimal: true,
            nodes_explored: 0,
            elapsed: started.elapsed(),
            max_run: Some(n),
        });
    }

    let mut witness = match constructive_labeling(graph) {
        Ok(f) => f,
        Err(_) => greedy_witness(graph)?,
    };
    let mut bound = witness.span();
    if let Some(ub) = cfg.initial_upper_bound {
        bound = bound.min(ub + 1);
    }

    // Every radio labeling has span at least n.
    if witness.span() == n as u64 {
        return Ok(SolveResult {
            rn: witness.span(),
            witness,
            optimal: true,
            nodes_explored: 0,
            elapsed: started.elapsed(),
            max_run: None,
        });
    }

    let run = if cfg.run_pruning {
        Some(max_consecutive_run(graph, cfg.run_search_cap).unwrap_or(n))
    } else {
        None
    };

    let mut search = Search {
        n,
        diam,
        dist: graph.distance_matrix(),
        coords: graph.coordinate_table(),
        run: run.unwrap_or(n),
        symmetry: cfg.symmetry_reduction,
        node_budget: cfg.node_budget,
        deadline: started + cfg.time_budget,
        order: Vec::with_capacity(n),
        labels: Vec::with_capacity(n),
        run_lengths: Vec::with_capacity(n),
        used: vec![false; n],
        used_values: vec![0; graph.dimension()],
        bound,
        best: None,
        nodes: 0,
        aborted: false,
    };
    search.dfs();

    if let Some(order) = search.best.take() {
        let ordering = Ordering::new(order.into_iter().map(|r| graph.vertex_at(r)).collect());
        witness = span_of_ordering(graph, &ordering)?.labeling;
        debug_assert_eq!(witness.span(), search.bound);
    }
    let report = validate(graph, &witness)?;
    assert!(
        report.valid,
        "solver produced an invalid witness for {graph}"
    );

    Ok(SolveResult {
        rn: report.span,
        optimal: !search.aborted && search.bound == report.span,
        witness,
        nodes_explored: search.nodes,
        elapsed: started.elapsed(),
        max_run: run,
    })
}

/// Nearest-label greedy ordering from the first vertex, ties to the lowest rank.
fn greedy_witness(graph: &HammingGraph) -> Result<RadioLabeling> {
    let n = graph.vertex_count();
    let diam = graph.diameter() as u64;
    let dist = graph.distance_matrix();
    let mut order: Vec<usize> = vec![0];
    let mut labels: Vec<u64> = vec![1];
    let mut used = vec![false; n];
    used[0] = true;
    while order.len() < n {
        let prev = *labels.last().expect("non-empty");
        let (label, v) = (0..n)
            .filter(|&v| !used[v])
            .map(|v| {
                let label = order.iter().zip(&labels).fold(prev + 1, |acc, (&w, &lw)| {
                    acc.max(lw + diam + 1 - dist[w * n + v] as u64)
                });
                (label, v)
            })
            .min()
            .expect("an unused vertex remains");
        used[v] = true;
        order.push(v);
        labels.push(label);
    }
    let ordering = Ordering::new(order.into_iter().map(|r| graph.vertex_at(r)).collect());
    Ok(span_of_ordering(graph, &ordering)?.labeling)
}

struct Search {
    n: usize,
    diam: usize,
    dist: Vec<u8>,
    coords: Vec<Vec<usize>>,
    run: usize,
    symmetry: bool,
    node_budget: u64,
    deadline: Instant,
    order: Vec<usize>,
    labels: Vec<u64>,
    /// Length of the consecutive-label run ending at each position.
    run_lengths: Vec<usize>,
    used: Vec<bool>,
    used_values: Vec<usize>,
    /// Only orderings with span strictly below this are of interest.
    bound: u64,
    best: Option<Vec<usize>>,
    nodes: u64,
    aborted: bool,
}

impl Search {
    fn next_label(&self, v: usize) -> u64 {
        let pos = self.order.len();
        if pos == 0 {
            return 1;
        }
        let diam = self.diam as u64;
        let mut label = self.labels[pos - 1] + 1;
        for k in 1..self.diam.min(pos + 1) {
            let w = self.order[pos - k];
            let d = self.dist[w * self.n + v] as u64;
            label = label.max(self.labels[pos - k] + diam + 1 - d);
        }
        label
    }

    fn is_canonical(&self, v: usize) -> bool {
        self.coords[v]
            .iter()
            .zip(&self.used_values)
            .all(|(&c, &used)| c <= used)
    }

    fn dfs(&mut self) {
        let pos = self.order.len();
        if pos == self.n {
            let span = self.labels[pos - 1];
            if span < self.bound {
                self.bound = span;
                self.best = Some(self.order.clone());
            }
            return;
        }
        let remaining = self.n - pos;
        for v in 0..self.n {
            if self.used[v] || (self.symmetry && !self.is_canonical(v)) {
                continue;
            }
            let label = self.next_label(v);
            let run_len = match pos {
                0 => 1,
                _ if label == self.labels[pos - 1] + 1 => self.run_lengths[pos - 1] + 1,
                _ => 1,
            };
            // The current run started run_len - 1 positions ago; all jumps
            // it still forces lie in the remaining steps.
            let span_from_run_start = run_len + remaining - 1;
            let forced = minimal_remaining_increment(span_from_run_start, self.run)
                - (span_from_run_start as u64 - 1);
            let lower = label + (remaining as u64 - 1) + forced;
            if lower >= self.bound {
                continue;
            }

            self.nodes += 1;
            if self.nodes > self.node_budget
                || (self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline)
            {
                self.aborted = true;
                return;
            }

            let saved: Vec<usize> = self.used_values.clone();
            for (used, &c) in self.used_values.iter_mut().zip(&self.coords[v]) {
                *used = (*used).max(c + 1);
            }
            self.used[v] = true;
            self.order.push(v);
            self.labels.push(label);
            self.run_lengths.push(run_len);

            self.dfs();

            self.run_lengths.pop();
            self.labels.pop();
            self.order.pop();
            self.used[v] = false;
            self.used_values = saved;
            if self.aborted {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[usize]) -> HammingGraph {
        HammingGraph::new(f.to_vec()).unwrap()
    }

    #[test]
    fn increment_examples() {
        assert_eq!(minimal_remaining_increment(18, 6), 19);
        assert_eq!(minimal_remaining_increment(1, 1), 0);
        assert_eq!(minimal_remaining_increment(1, 7), 0);
        for n in 1..20 {
            assert_eq!(minimal_remaining_increment(4 * n, 2), 6 * n as u64 - 2);
        }
    }

    #[test]
    fn degenerate_graphs() {
        let r = solve(&g(&[1]), &SolverConfig::default()).unwrap();
        assert_eq!((r.rn, r.optimal), (1, true));
        let r = solve(&g(&[5, 1]), &SolverConfig::default()).unwrap();
        assert_eq!((r.rn, r.optimal, r.nodes_explored), (5, true, 0));
    }

    #[test]
    fn small_exceptional_values() {
        let cfg = SolverConfig::default();
        assert_eq!(solve(&g(&[2, 2]), &cfg).unwrap().rn, 5);
        let r = solve(&g(&[2, 2, 2]), &cfg).unwrap();
        assert_eq!((r.rn, r.optimal), (11, true));
    }

    #[test]
    fn rejects_zero_budget() {
        let cfg = SolverConfig {
            node_budget: 0,
            ..SolverConfig::default()
        };
        assert_eq!(solve(&g(&[2, 2]), &cfg), Err(Error::InvalidBudget));
    }

    #[test]
    fn budget_exhaustion_keeps_a_valid_witness() {
        let cfg = SolverConfig {
            node_budget: 5,
            run_pruning: false,
            initial_upper_bound: Some(10),
            ..SolverConfig::default()
        };
        let graph = g(&[2, 2, 3]);
        let r = solve(&graph, &cfg).unwrap();
        assert!(!r.optimal);
        assert!(r.rn >= 17);
        assert!(validate(&graph, &r.witness).unwrap().valid);
    }

    #[test]
    fn greedy_witness_is_valid() {
        for factors in [vec![3, 3], vec![2, 4], vec![2, 2, 2, 2], vec![3, 3, 3]] {
            let graph = g(&factors);
            let f = greedy_witness(&graph).unwrap();
            assert!(validate(&graph, &f).unwrap().valid);
        }
    }
}
