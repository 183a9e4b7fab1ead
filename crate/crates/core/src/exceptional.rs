//! Radio numbers of diameter-3 Hamming graphs, including the two families
//! that are not radio graceful: `K_2 □ K_2 □ K_n` (radio number `6n - 1`) and
//! `K_2 □ K_3 □ K_3` (radio number 20).
//!
//! Lower bounds come from consecutive runs. If no `r + 1` vertices admit
//! consecutive labels, every maximal block of consecutive labels holds at most
//! `r` vertices and consecutive blocks are separated by a jump of at least 2.

use std::collections::HashMap;

use serde::Serialize;

use crate::construction::build_ordering;
use crate::error::{Error, Result};
use crate::graph::{HammingGraph, Vertex};
use crate::labeling::{Ordering, RadioLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RnCase {
    Graceful,
    TwoTwoN,
    TwoThreeThree,
}

impl RnCase {
    pub fn as_str(self) -> &'static str {
        match self {
            RnCase::Graceful => "graceful",
            RnCase::TwoTwoN => "two_two_n",
            RnCase::TwoThreeThree => "two_three_three",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RnFormulaResult {
    pub value: u64,
    #[serde(rename = "case")]
    pub case_tag: RnCase,
}

/// Closed-form radio number of `K_l □ K_m □ K_n` for `2 <= l <= m <= n`.
///
/// `(2, 2, 1)` is accepted as the degenerate `K_2 □ K_2`.
pub fn radio_number_formula(l: usize, m: usize, n: usize) -> Result<RnFormulaResult> {
    if l == 2 && m == 2 && n >= 1 {
        return Ok(RnFormulaResult {
            value: 6 * n as u64 - 1,
            case_tag: RnCase::TwoTwoN,
        });
    }
    if !(2 <= l && l <= m && m <= n) {
        return Err(Error::FormulaDomain(l, m, n));
    }
    if (l, m, n) == (2, 3, 3) {
        return Ok(RnFormulaResult {
            value: 20,
            case_tag: RnCase::TwoThreeThree,
        });
    }
    Ok(RnFormulaResult {
        value: (l * m * n) as u64,
        case_tag: RnCase::Graceful,
    })
}

const TABLE_233: [([usize; 3], i64); 18] = [
    ([1, 1, 1], 1),
    ([2, 2, 2], 2),
    ([1, 3, 3], 3),
    ([2, 1, 1], 4),
    ([1, 2, 2], 5),
    ([2, 3, 3], 6),
    ([1, 1, 2], 8),
    ([2, 2, 3], 9),
    ([1, 3, 1], 10),
    ([2, 1, 2], 11),
    ([1, 2, 3], 12),
    ([2, 3, 1], 13),
    ([1, 1, 3], 15),
    ([2, 2, 1], 16),
    ([1, 3, 2], 17),
    ([2, 1, 3], 18),
    ([1, 2, 1], 19),
    ([2, 3, 2], 20),
];

/// Span-20 radio labeling of `K_2 □ K_3 □ K_3`.
pub fn labeling_233() -> RadioLabeling {
    let graph = HammingGraph::new(vec![2, 3, 3]).expect("valid sizes");
    RadioLabeling::from_pairs(&graph, TABLE_233.iter().map(|&(v, l)| (v.into(), l)))
        .expect("table covers every vertex")
}

/// Base ordering of `K_2 □ K_2 □ K_2`; ends with `(1,1,2), (2,2,1)`.
pub const G2_ORDER: [[usize; 3]; 8] = [
    [1, 1, 1],
    [2, 2, 2],
    [2, 1, 1],
    [1, 2, 2],
    [2, 1, 2],
    [1, 2, 1],
    [1, 1, 2],
    [2, 2, 1],
];

/// Base ordering of `K_2 □ K_2 □ K_3`; ends with `(1,2,3)`.
pub const G3_ORDER: [[usize; 3]; 12] = [
    [1, 1, 1],
    [2, 2, 2],
    [2, 1, 1],
    [1, 2, 2],
    [2, 2, 1],
    [1, 1, 3],
    [1, 2, 1],
    [2, 1, 3],
    [1, 1, 2],
    [2, 2, 3],
    [2, 1, 2],
    [1, 2, 3],
];

/// Labels `1, 2, 4, 5, 7, 8, ...`: pairs of consecutive labels, then a jump.
fn paired_label(position: usize) -> i64 {
    (3 * (position / 2) + position % 2 + 1) as i64
}

/// Vertices added when going from `K_2 □ K_2 □ K_c` to `K_2 □ K_2 □ K_{c+2}`.
fn append_block(c: usize) -> [[usize; 3]; 8] {
    let (a, b) = (c + 1, c + 2);
    [
        [1, 1, a],
        [2, 2, b],
        [2, 1, a],
        [1, 2, b],
        [2, 1, b],
        [1, 2, a],
        [1, 1, b],
        [2, 2, a],
    ]
}

/// Ordering of `K_2 □ K_2 □ K_n` (or `K_2 □ K_2` when `n = 1`) whose paired
/// labeling has span `6n - 1`.
pub fn ordering_22n(n: usize) -> Result<Ordering> {
    if n == 0 {
        return Err(Error::InvalidCopies);
    }
    if n == 1 {
        return Ok(Ordering::new(vec![
            [1, 1].into(),
            [2, 2].into(),
            [2, 1].into(),
            [1, 2].into(),
        ]));
    }
    let (mut rows, mut size) = if n.is_multiple_of(2) {
        (G2_ORDER.to_vec(), 2)
    } else {
        (G3_ORDER.to_vec(), 3)
    };
    while size < n {
        rows.extend(append_block(size));
        size += 2;
    }
    Ok(Ordering::new(rows.into_iter().map(Vertex::from).collect()))
}

/// Span `6n - 1` radio labeling of `K_2 □ K_2 □ K_n`; for `n = 1` the graph is
/// `K_2 □ K_2` with labels `1, 2, 4, 5`.
pub fn labeling_22n(n: usize) -> Result<RadioLabeling> {
    let ordering = ordering_22n(n)?;
    let factors = if n == 1 { vec![2, 2] } else { vec![2, 2, n] };
    let graph = HammingGraph::new(factors)?;
    RadioLabeling::from_pairs(
        &graph,
        ordering
            .into_vertices()
            .into_iter()
            .enumerate()
            .map(|(p, v)| (v, paired_label(p))),
    )
}

/// Axes of the factors with at least two vertices, sorted by size (stable).
pub(crate) fn sorted_nontrivial_axes(graph: &HammingGraph) -> Vec<usize> {
    let mut axes: Vec<usize> = (0..graph.dimension())
        .filter(|&a| graph.factors()[a] >= 2)
        .collect();
    axes.sort_by_key(|&a| graph.factors()[a]);
    axes
}

/// Radio number formula for any graph isomorphic to `K_l □ K_m □ K_n` with
/// `l, m, n >= 2`, or to `K_2 □ K_2`, in any factor order and with any number
/// of `K_1` factors.
pub fn radio_number_of(graph: &HammingGraph) -> Result<RnFormulaResult> {
    let sizes: Vec<usize> = sorted_nontrivial_axes(graph)
        .iter()
        .map(|&a| graph.factors()[a])
        .collect();
    match sizes[..] {
        [l, m, n] => radio_number_formula(l, m, n),
        [2, 2] => radio_number_formula(2, 2, 1),
        _ => Err(Error::InvalidConstruction(graph.factors().to_vec())),
    }
}

/// Labeling of `graph` attaining [`radio_number_of`], when the formula applies.
pub fn constructive_labeling(graph: &HammingGraph) -> Result<RadioLabeling> {
    let axes = sorted_nontrivial_axes(graph);
    let sizes: Vec<usize> = axes.iter().map(|&a| graph.factors()[a]).collect();
    let sorted = match sizes[..] {
        [2, 2] => labeling_22n(1)?,
        [2, 2, n] => labeling_22n(n)?,
        [2, 3, 3] => labeling_233(),
        [l, m, n] => {
            let ordering = build_ordering(l, m, n)?;
            RadioLabeling::consecutive(&HammingGraph::new(vec![l, m, n])?, &ordering)?
        }
        _ => return Err(Error::InvalidConstruction(graph.factors().to_vec())),
    };
    let pairs = sorted.by_label().into_iter().map(|(v, label)| {
        let mut coords = vec![1; graph.dimension()];
        for (&axis, &c) in axes.iter().zip(v.coords()) {
            coords[axis] = c;
        }
        (Vertex::new(coords), label as i64)
    });
    RadioLabeling::from_pairs(graph, pairs)
}

/// `N + ceil(N / r) - 1`: the smallest possible span of a labeling of `N`
/// vertices whose consecutive runs hold at most `r` vertices each.
pub fn jump_lower_bound(vertices: usize, run: usize) -> Result<u64> {
    if run < 1 || run > vertices {
        return Err(Error::InvalidRunLength { run, vertices });
    }
    Ok((vertices + vertices.div_ceil(run) - 1) as u64)
}

/// Longest sequence of distinct vertices that can carry consecutive labels,
/// i.e. satisfies `d(y_i, y_{i+k}) >= diam - k + 1` for all `k < diam`.
///
/// Exhaustive DFS from a fixed first vertex, with coordinate values on each
/// axis introduced in increasing order; both are automorphism reductions.
/// Explored states are memoised on the visited set and the trailing window
/// of `diam - 1` vertices, which is all that constrains an extension.
/// Fails with [`Error::BudgetExhausted`] once more than `cap` nodes are expanded.
pub fn max_consecutive_run(graph: &HammingGraph, cap: u64) -> Result<usize> {
    let n = graph.vertex_count();
    let diam = graph.diameter();
    if diam <= 1 {
        return Ok(n);
    }
    let mut search = RunSearch {
        n,
        diam,
        dist: graph.distance_matrix(),
        coords: graph.coordinate_table(),
        used_values: vec![1; graph.dimension()],
        visited: vec![0u64; n.div_ceil(64)],
        seq: Vec::with_capacity(n),
        memo: HashMap::new(),
        nodes: 0,
        cap,
        best: 1,
    };
    search.visit(0);
    let extra = search.extend()?;
    Ok(1 + extra)
}

struct RunSearch {
    n: usize,
    diam: usize,
    dist: Vec<u8>,
    coords: Vec<Vec<usize>>,
    /// Per axis, values `0..used_values[a]` have appeared.
    used_values: Vec<usize>,
    visited: Vec<u64>,
    seq: Vec<usize>,
    memo: HashMap<(Vec<u64>, Vec<usize>), usize>,
    nodes: u64,
    cap: u64,
    best: usize,
}

impl RunSearch {
    fn visit(&mut self, v: usize) {
        self.visited[v / 64] |= 1 << (v % 64);
        self.seq.push(v);
        self.best = self.best.max(self.seq.len());
    }

    fn unvisit(&mut self, v: usize) {
        self.visited[v / 64] &= !(1 << (v % 64));
        self.seq.pop();
    }

    fn is_visited(&self, v: usize) -> bool {
        self.visited[v / 64] & (1 << (v % 64)) != 0
    }

    fn fits(&self, v: usize) -> bool {
        let len = self.seq.len();
        (1..self.diam.min(len + 1)).all(|k| {
            let d = self.dist[self.seq[len - k] * self.n + v] as usize;
            d + k > self.diam
        })
    }

    /// Maximum number of vertices that can still be appended.
    fn extend(&mut self) -> Result<usize> {
        let len = self.seq.len();
        if len == self.n {
            return Ok(0);
        }
        let window = self.seq[len.saturating_sub(self.diam - 1)..].to_vec();
        let key = (self.visited.clone(), window);
        if let Some(&cached) = self.memo.get(&key) {
            return Ok(cached);
        }
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::BudgetExhausted {
                best: self.best,
                explored: self.nodes - 1,
            });
        }
        let mut best = 0;
        for v in 0..self.n {
            if self.is_visited(v) || !self.fits(v) {
                continue;
            }
            let saved = self.used_values.clone();
            let canonical =
                self.coords[v]
                    .iter()
                    .zip(self.used_values.iter_mut())
                    .all(|(&c, used)| {
                        if c > *used {
                            return false;
                        }
                        *used = (*used).max(c + 1);
                        true
                    });
            if !canonical {
                self.used_values = saved;
                continue;
            }
            self.visit(v);
            let sub = self.extend();
            self.unvisit(v);
            self.used_values = saved;
            best = best.max(1 + sub?);
            if len + best == self.n {
                break;
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }
}
