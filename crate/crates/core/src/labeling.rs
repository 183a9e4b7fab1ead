//! Radio labelings and orderings.
//!
//! A labeling `f` of a graph `G` is a radio labeling when every pair of
//! distinct vertices satisfies `|f(u) - f(v)| >= diam(G) + 1 - d(u, v)`.
//! An ordering `x_1, ..., x_N` is radio graceful when the consecutive labeling
//! `f(x_i) = i` is a radio labeling, which only needs to be checked for pairs
//! fewer than `diam(G)` positions apart.
//!
//! With diameter 3 these are exactly the L(3,2,1)-labelings.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{coord_distance, HammingGraph, Vertex};

/// A total labeling of the vertices of a graph by positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadioLabeling {
    graph: HammingGraph,
    /// Indexed by vertex rank.
    labels: Vec<u64>,
}

impl RadioLabeling {
    /// Builds a labeling from `(vertex, label)` pairs. Every vertex must appear
    /// exactly once and every label must be positive.
    pub fn from_pairs<I>(graph: &HammingGraph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, i64)>,
    {
        let mut labels: Vec<Option<u64>> = vec![None; graph.vertex_count()];
        for (vertex, label) in pairs {
            let rank = graph.index_of(&vertex)?;
            if label < 1 {
                return Err(Error::NonPositiveLabel { vertex, label });
            }
            if labels[rank].replace(label as u64).is_some() {
                return Err(Error::DuplicateVertex(vertex));
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(rank, l)| l.ok_or_else(|| Error::MissingLabel(graph.vertex_at(rank))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            graph: graph.clone(),
            labels,
        })
    }

    /// Labels indexed by vertex rank.
    pub fn from_ranked(graph: &HammingGraph, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != graph.vertex_count() {
            let rank = labels.len().min(graph.vertex_count().saturating_sub(1));
            return Err(Error::MissingLabel(graph.vertex_at(rank)));
        }
        if let Some(rank) = labels.iter().position(|&l| l == 0) {
            return Err(Error::NonPositiveLabel {
                vertex: graph.vertex_at(rank),
                label: 0,
            });
        }
        Ok(Self {
            graph: graph.clone(),
            labels,
        })
    }

    /// The consecutive labeling `f(x_i) = i` of an ordering.
    pub fn consecutive(graph: &HammingGraph, ordering: &Ordering) -> Result<Self> {
        let ranks = ordering_ranks(graph, ordering)?;
        let mut labels = vec![0; ranks.len()];
        for (pos, &r) in ranks.iter().enumerate() {
            labels[r] = pos as u64 + 1;
        }
        Ok(Self {
            graph: graph.clone(),
            labels,
        })
    }

    pub fn graph(&self) -> &HammingGraph {
        &self.graph
    }

    pub fn label(&self, v: &Vertex) -> Result<u64> {
        Ok(self.labels[self.graph.index_of(v)?])
    }

    pub fn ranked_labels(&self) -> &[u64] {
        &self.labels
    }

    /// Largest label.
    pub fn span(&self) -> u64 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    /// `(vertex, label)` pairs sorted by label, ties broken by vertex.
    pub fn by_label(&self) -> Vec<(Vertex, u64)> {
        let mut ranks: Vec<usize> = (0..self.labels.len()).collect();
        ranks.sort_by_key(|&r| (self.labels[r], r));
        ranks
            .into_iter()
            .map(|r| (self.graph.vertex_at(r), self.labels[r]))
            .collect()
    }

    /// The vertices in increasing label order.
    pub fn ordering(&self) -> Ordering {
        Ordering::new(self.by_label().into_iter().map(|(v, _)| v).collect())
    }
}

/// A sequence of vertices, claimed to list each vertex exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ordering(Vec<Vertex>);

impl Ordering {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self(vertices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }
}

impl From<Vec<Vertex>> for Ordering {
    fn from(v: Vec<Vertex>) -> Self {
        Self(v)
    }
}

impl<'a> IntoIterator for &'a Ordering {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A pair of vertices whose labels are too close for their distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub required_gap: u64,
    pub actual_gap: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub span: u64,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GracefulReport {
    pub graceful: bool,
    pub violations: Vec<Violation>,
}

/// Greedy-gap labeling of a fixed ordering, see [`span_of_ordering`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyLabeling {
    pub labeling: RadioLabeling,
    pub span: u64,
}

/// Checks the radio condition on every unordered pair of distinct vertices.
///
/// Violations are reported once per pair, with `u` the vertex holding the
/// smaller label, sorted by `(min label, max label)`.
pub fn validate(graph: &HammingGraph, f: &RadioLabeling) -> Result<ValidationReport> {
    if f.graph != *graph {
        return Err(Error::GraphMismatch {
            expected: graph.to_string(),
            found: f.graph.to_string(),
        });
    }
    let diam = graph.diameter() as u64;
    let coords = graph.coordinate_table();
    let mut ranks: Vec<usize> = (0..f.labels.len()).collect();
    ranks.sort_by_key(|&r| (f.labels[r], r));

    // A pair can only fail when its labels are fewer than `diam` apart.
    let mut violations = Vec::new();
    for (i, &a) in ranks.iter().enumerate() {
        for &b in &ranks[i + 1..] {
            let gap = f.labels[b] - f.labels[a];
            if gap >= diam {
                break;
            }
            let required = diam + 1 - coord_distance(&coords[a], &coords[b]) as u64;
            if gap < required {
                violations.push(Violation {
                    u: graph.vertex_at(a),
                    v: graph.vertex_at(b),
                    required_gap: required,
                    actual_gap: gap,
                });
            }
        }
    }
    Ok(ValidationReport {
        valid: violations.is_empty(),
        span: f.span(),
        violations,
    })
}

/// True iff `ordering` lists every vertex of `graph` exactly once.
pub fn verify_bijection(graph: &HammingGraph, ordering: &Ordering) -> bool {
    ordering_ranks(graph, ordering).is_ok()
}

pub(crate) fn ordering_ranks(graph: &HammingGraph, ordering: &Ordering) -> Result<Vec<usize>> {
    if ordering.len() != graph.vertex_count() {
        return Err(Error::NotAnOrdering(format!(
            "{} entries for {} vertices",
            ordering.len(),
            graph.vertex_count()
        )));
    }
    let mut seen = HashSet::with_capacity(ordering.len());
    ordering
        .iter()
        .map(|v| {
            let r = graph
                .index_of(v)
                .map_err(|e| Error::NotAnOrdering(e.to_string()))?;
            if !seen.insert(r) {
                return Err(Error::NotAnOrdering(format!("{v} appears twice")));
            }
            Ok(r)
        })
        .collect()
}

/// Checks `d(x_i, x_{i+k}) >= diam - k + 1` for every `k < diam`.
///
/// Equivalent to [`validate`] on the consecutive labeling of the ordering;
/// a violation's `actual_gap` is the position difference `k`.
pub fn check_graceful(graph: &HammingGraph, ordering: &Ordering) -> Result<GracefulReport> {
    let ranks = ordering_ranks(graph, ordering)?;
    let diam = graph.diameter();
    let coords = graph.coordinate_table();
    let mut violations = Vec::new();
    for i in 0..ranks.len() {
        for delta in 1..diam {
            let Some(&b) = ranks.get(i + delta) else {
                break;
            };
            let d = coord_distance(&coords[ranks[i]], &coords[b]);
            if d + delta < diam + 1 {
                violations.push(Violation {
                    u: ordering.0[i].clone(),
                    v: ordering.0[i + delta].clone(),
                    required_gap: (diam + 1 - d) as u64,
                    actual_gap: delta as u64,
                });
            }
        }
    }
    Ok(GracefulReport {
        graceful: violations.is_empty(),
        violations,
    })
}

/// Labels the ordering greedily: `f(x_1) = 1`, and each later vertex gets the
/// smallest label above its predecessor's that satisfies the radio condition
/// against every earlier vertex.
///
/// Lowering any label would break a constraint with an earlier vertex, so no
/// radio labeling that increases along this ordering has a smaller span.
pub fn span_of_ordering(graph: &HammingGraph, ordering: &Ordering) -> Result<GreedyLabeling> {
    let ranks = ordering_ranks(graph, ordering)?;
    let diam = graph.diameter() as u64;
    let coords = graph.coordinate_table();
    let mut labels = vec![0u64; ranks.len()];
    let mut prev = 0u64;
    for (pos, &r) in ranks.iter().enumerate() {
        let mut label = prev + 1;
        for &earlier in &ranks[..pos] {
            let required = diam + 1 - coord_distance(&coords[earlier], &coords[r]) as u64;
            label = label.max(labels[earlier] + required);
        }
        labels[r] = label;
        prev = label;
    }
    Ok(GreedyLabeling {
        span: prev,
        labeling: RadioLabeling {
            graph: graph.clone(),
            labels,
        },
    })
}
