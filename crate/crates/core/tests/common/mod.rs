//! Brute-force oracles that share no code with the library's search paths.

#![allow(dead_code)]

use hamming_radio::HammingGraph;
use itertools::Itertools;

pub fn graph(factors: &[usize]) -> HammingGraph {
    HammingGraph::new(factors.to_vec()).unwrap()
}

/// All vertices as 0-based coordinate vectors, lexicographic.
pub fn coords(g: &HammingGraph) -> Vec<Vec<usize>> {
    g.factors()
        .iter()
        .map(|&s| 0..s)
        .multi_cartesian_product()
        .collect()
}

pub fn dist(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn diameter(g: &HammingGraph) -> usize {
    g.factors().iter().filter(|&&s| s > 1).count()
}

/// Radio condition on every pair, straight from the definition.
pub fn is_radio(g: &HammingGraph, labels: &[u64]) -> bool {
    let cs = coords(g);
    let diam = diameter(g) as i64;
    (0..cs.len()).tuple_combinations().all(|(a, b)| {
        let gap = (labels[a] as i64 - labels[b] as i64).abs();
        gap >= diam + 1 - dist(&cs[a], &cs[b]) as i64
    })
}

/// Greedy labels (indexed by position) of an ordering given as vertex ranks.
pub fn greedy_labels(cs: &[Vec<usize>], diam: usize, order: &[usize]) -> Vec<u64> {
    let mut labels: Vec<u64> = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let mut l = labels.last().map_or(1, |p| p + 1);
        for j in 0..i {
            let need = labels[j] + (diam + 1 - dist(&cs[order[j]], &cs[v])) as u64;
            l = l.max(need);
        }
        labels.push(l);
    }
    labels
}

/// Minimum greedy span over all orderings.
pub fn naive_rn(g: &HammingGraph) -> u64 {
    let cs = coords(g);
    let diam = diameter(g);
    (0..cs.len())
        .permutations(cs.len())
        .map(|p| *greedy_labels(&cs, diam, &p).last().unwrap())
        .min()
        .unwrap()
}

/// Smallest `s` such that some injective map into `1..=s` is a radio labeling.
/// Independent of orderings entirely; only practical for a handful of vertices.
pub fn label_assignment_rn(g: &HammingGraph) -> u64 {
    let n = g.vertex_count();
    (n as u64..)
        .find(|&s| (1..=s).permutations(n).any(|labels| is_radio(g, &labels)))
        .unwrap()
}
