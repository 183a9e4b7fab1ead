//! Hamming graphs `K_{n1} □ K_{n2} □ ... □ K_{nd}`.
//!
//! A graph is stored as its factor sizes only. Vertices are coordinate
//! tuples, 1-indexed on every axis, and the distance between two vertices is
//! the number of axes on which they differ. Vertices are ranked
//! lexicographically, which gives the dense index used by the labeling and
//! search code.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HammingGraph {
    factors: Vec<usize>,
    vertex_count: usize,
}

impl HammingGraph {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::NoFactors);
        }
        if let Some(index) = factors.iter().position(|&s| s == 0) {
            return Err(Error::EmptyFactor { index });
        }
        let vertex_count = factors
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
            .ok_or_else(|| Error::VertexCountOverflow {
                factors: factors.clone(),
            })?;
        Ok(Self {
            factors,
            vertex_count,
        })
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// Number of factors, including trivial `K_1` factors.
    pub fn dimension(&self) -> usize {
        self.factors.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Each factor with at least two vertices contributes one to the diameter.
    pub fn diameter(&self) -> usize {
        self.factors.iter().filter(|&&s| s >= 2).count()
    }

    pub fn check_vertex(&self, v: &Vertex) -> Result<()> {
        if v.coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                vertex: v.clone(),
                expected: self.factors.len(),
                found: v.coords.len(),
            });
        }
        for (axis, (&value, &size)) in v.coords.iter().zip(&self.factors).enumerate() {
            if value < 1 || value > size {
                return Err(Error::CoordinateOutOfRange { axis, value, size });
            }
        }
        Ok(())
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.check_vertex(v).is_ok()
    }

    pub fn distance(&self, a: &Vertex, b: &Vertex) -> Result<usize> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        Ok(coord_distance(&a.coords, &b.coords))
    }

    /// Lexicographic rank of `v` in `0..vertex_count`.
    pub fn index_of(&self, v: &Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(v.coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &s)| acc * s + (c - 1)))
    }

    /// Inverse of [`index_of`](Self::index_of). Panics if `index` is out of range.
    pub fn vertex_at(&self, index: usize) -> Vertex {
        assert!(
            index < self.vertex_count,
            "vertex index {index} out of range"
        );
        let mut coords = vec![0; self.factors.len()];
        let mut rest = index;
        for (slot, &size) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = rest % size + 1;
            rest /= size;
        }
        Vertex { coords }
    }

    /// All vertices in lexicographic order.
    pub fn vertices(&self) -> Vertices<'_> {
        Vertices {
            graph: self,
            next: 0,
        }
    }

    /// Coordinates of every vertex, indexed by rank, 0-based per axis.
    pub(crate) fn coordinate_table(&self) -> Vec<Vec<usize>> {
        self.vertices()
            .map(|v| v.coords.iter().map(|c| c - 1).collect())
            .collect()
    }

    /// Dense `vertex_count x vertex_count` distance matrix indexed by rank.
    pub(crate) fn distance_matrix(&self) -> Vec<u8> {
        let table = self.coordinate_table();
        let n = self.vertex_count;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = coord_distance(&table[i], &table[j]) as u8;
                out[i * n + j] = d;
                out[j * n + i] = d;
            }
        }
        out
    }
}

pub(crate) fn coord_distance(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

impl fmt::Display for HammingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for HammingGraph {
    type Err = Error;

    /// Parses `"2x3x3"`. Factor sizes may be separated by `x` or `X`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            what: "graph",
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(parse_err("empty string".into()));
        }
        let factors = trimmed
            .split(['x', 'X'])
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("factor {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }
}

pub struct Vertices<'a> {
    graph: &'a HammingGraph,
    next: usize,
}

impl Iterator for Vertices<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.next >= self.graph.vertex_count {
            return None;
        }
        let v = self.graph.vertex_at(self.next);
        self.next += 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.graph.vertex_count - self.next;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Vertices<'_> {}

/// A vertex as 1-indexed coordinates, one per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    coords: Vec<usize>,
}

impl Vertex {
    pub fn new(coords: Vec<usize>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<usize> {
        self.coords
    }
}

impl<const N: usize> From<[usize; N]> for Vertex {
    fn from(coords: [usize; N]) -> Self {
        Self {
            coords: coords.to_vec(),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Vertex {
    type Err = Error;

    /// Parses `"(1,2,3)"`; whitespace around coordinates is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            what: "vertex",
            input: s.to_string(),
            reason,
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| parse_err("expected parentheses".into()))?;
        if inner.trim().is_empty() {
            return Err(parse_err("no coordinates".into()));
        }
        let coords = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| parse_err(format!("coordinate {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coords })
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
