//! Consecutive ordering of `K_l □ K_m □ K_n` built from cyclic-shift blocks.
//!
//! The vertex list is cut into `lmn / L` blocks of `L = lcm(l, m, n)` rows.
//! Row `r` of a block is its first row with the three coordinates advanced
//! `r - 1` steps along the cycles `(1 2 ... l)`, `(1 2 ... m)` and
//! `(1 2 ... n)`. Block 1 starts at `(1, 1, 1)`. Each later block copies the
//! previous one and then shifts its second column once when
//! `k ≡ 1 (mod λ)`, otherwise its third column, where
//! `λ = n·lcm(l, m) / L`. The first column never changes.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{HammingGraph, Vertex};
use crate::labeling::Ordering;

/// Derived sizes for one `(l, m, n)` instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    pub l: usize,
    pub m: usize,
    pub n: usize,
    /// `lcm(l, m, n)`, the number of rows per block.
    pub lcm: usize,
    /// `lmn / lcm(l, m, n)`.
    pub block_count: usize,
    /// `n·lcm(l, m) / lcm(l, m, n)`: blocks between two shifts of the second column.
    pub lambda: usize,
    /// `gcd(l, m)`.
    pub gamma: usize,
}

impl ConstructionParams {
    pub fn new(l: usize, m: usize, n: usize) -> Result<Self> {
        if l < 2 || m < 2 || n < 2 {
            return Err(Error::InvalidConstruction(vec![l, m, n]));
        }
        let lcm_lm = l.lcm(&m);
        let lcm = lcm_lm.lcm(&n);
        let vertex_count = l
            .checked_mul(m)
            .and_then(|x| x.checked_mul(n))
            .ok_or_else(|| Error::VertexCountOverflow {
                factors: vec![l, m, n],
            })?;
        Ok(Self {
            l,
            m,
            n,
            lcm,
            block_count: vertex_count / lcm,
            // n·lcm(l, m) / lcm(lcm(l, m), n) = gcd(lcm(l, m), n)
            lambda: lcm_lm.gcd(&n),
            gamma: l.gcd(&m),
        })
    }

    pub fn graph(&self) -> HammingGraph {
        HammingGraph::new(vec![self.l, self.m, self.n]).expect("sizes validated")
    }
}

pub fn construction_params(l: usize, m: usize, n: usize) -> Result<ConstructionParams> {
    ConstructionParams::new(l, m, n)
}

/// One `lcm(l, m, n) x 3` block, held column by column with 1-indexed entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixBlock {
    /// 1-based block number `k`.
    pub index: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub third: Vec<usize>,
}

impl MatrixBlock {
    fn from_first_row(index: usize, p: &ConstructionParams, start: [usize; 3]) -> Self {
        let column = |s: usize, size: usize| (0..p.lcm).map(|r| shift(s, r, size)).collect();
        Self {
            index,
            first: column(start[0], p.l),
            second: column(start[1], p.m),
            third: column(start[2], p.n),
        }
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty()
    }

    /// Row `r`, 1-indexed.
    pub fn row(&self, r: usize) -> Vertex {
        let i = r - 1;
        Vertex::new(vec![self.first[i], self.second[i], self.third[i]])
    }

    pub fn rows(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.len()).map(|r| self.row(r))
    }
}

/// The first row of block `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub k: usize,
    pub vertex: Vertex,
}

/// Advances a 1-indexed value `steps` times along the cycle `(1 2 ... size)`.
fn shift(value: usize, steps: usize, size: usize) -> usize {
    (value - 1 + steps) % size + 1
}

/// Closed form for the first row of block `k`: writing `k = (b - 1)λ + c`
/// with `c` in `1..=λ`, the seed is `(1, b, τ^{(b-1)(λ-1) + c - 1}(1))`.
///
/// Computed without reference to the block recurrence so the two can be
/// checked against each other.
pub fn seed(p: &ConstructionParams, k: usize) -> Result<Seed> {
    if k < 1 || k > p.block_count {
        return Err(Error::BlockOutOfRange {
            k,
            count: p.block_count,
        });
    }
    let b = (k - 1) / p.lambda + 1;
    let c = (k - 1) % p.lambda + 1;
    let third = shift(1, (b - 1) * (p.lambda - 1) + c - 1, p.n);
    Ok(Seed {
        k,
        vertex: Vertex::new(vec![1, b, third]),
    })
}

/// All blocks, generated by the column-shift recurrence.
pub fn build_blocks(p: &ConstructionParams) -> Vec<MatrixBlock> {
    let mut blocks = Vec::with_capacity(p.block_count);
    let mut start = [1usize, 1, 1];
    for k in 1..=p.block_count {
        if k > 1 {
            if (k - 1) % p.lambda == 0 {
                start[1] = shift(start[1], 1, p.m);
            } else {
                start[2] = shift(start[2], 1, p.n);
            }
        }
        blocks.push(MatrixBlock::from_first_row(k, p, start));
    }
    blocks
}

/// The vertex list `x_1, ..., x_{lmn}`: block rows in order.
pub fn build_ordering(l: usize, m: usize, n: usize) -> Result<Ordering> {
    let p = ConstructionParams::new(l, m, n)?;
    Ok(Ordering::new(
        build_blocks(&p).iter().flat_map(|b| b.rows()).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        let p = construction_params(3, 3, 6).unwrap();
        assert_eq!((p.lcm, p.block_count, p.lambda, p.gamma), (6, 9, 3, 3));
        let p = construction_params(2, 3, 4).unwrap();
        assert_eq!((p.lcm, p.block_count, p.lambda, p.gamma), (12, 2, 2, 1));
        let p = construction_params(2, 2, 2).unwrap();
        assert_eq!((p.lcm, p.block_count, p.lambda, p.gamma), (2, 4, 2, 2));
    }

    #[test]
    fn params_reject_small_factors() {
        assert_eq!(
            construction_params(1, 3, 3),
            Err(Error::InvalidConstruction(vec![1, 3, 3]))
        );
        assert!(construction_params(3, 3, 0).is_err());
    }

    #[test]
    fn seed_examples() {
        let p = construction_params(3, 3, 6).unwrap();
        assert_eq!(seed(&p, 1).unwrap().vertex, [1, 1, 1].into());
        assert_eq!(seed(&p, 4).unwrap().vertex, [1, 2, 3].into());
        assert_eq!(seed(&p, 7).unwrap().vertex, [1, 3, 5].into());
        assert!(matches!(
            seed(&p, 0),
            Err(Error::BlockOutOfRange { k: 0, count: 9 })
        ));
        assert!(seed(&p, 10).is_err());
    }

    #[test]
    fn block_examples() {
        let p = construction_params(3, 3, 6).unwrap();
        let blocks = build_blocks(&p);
        assert_eq!(blocks.len(), 9);
        assert_eq!(blocks[1].row(1), [1, 1, 2].into());
        assert_eq!(blocks[0].row(2), [2, 2, 2].into());
        assert_eq!(blocks[8].row(6), [3, 2, 6].into());
    }

    #[test]
    fn ordering_2x3x4_prefix() {
        let o = build_ordering(2, 3, 4).unwrap();
        assert_eq!(o.len(), 24);
        let head: Vec<Vertex> = o.vertices()[..4].to_vec();
        assert_eq!(
            head,
            vec![
                [1, 1, 1].into(),
                [2, 2, 2].into(),
                [1, 3, 3].into(),
                [2, 1, 4].into()
            ]
        );
    }
}
