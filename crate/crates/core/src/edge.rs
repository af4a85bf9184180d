//! Edge indexing for the board `E(K_n)`.
//!
//! Edges are ranked lexicographically over pairs `(u, v)` with `u < v`:
//! `(0,1), (0,2), ..., (0,n-1), (1,2), ...`. This rank is the "smallest
//! index" order used whenever a player forfeits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lexicographic rank of an unordered vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Number of edges of `K_n`.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Rank of the pair `{u, v}`; the order of the arguments does not matter.
pub fn edge_index(u: usize, v: usize, n: usize) -> Result<EdgeId> {
    if u == v || u >= n || v >= n {
        return Err(Error::InvalidVertex { u, v, n });
    }
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    Ok(EdgeId(rank(u, v, n) as u32))
}

#[inline]
fn rank(u: usize, v: usize, n: usize) -> usize {
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Precomputed row offsets for fast conversion in both directions.
#[derive(Debug, Clone)]
pub struct EdgeCodec {
    n: usize,
    row_start: Vec<u32>,
}

impl EdgeCodec {
    pub fn new(n: usize) -> Self {
        assert!(
            pair_count(n) < u32::MAX as usize,
            "n = {n} exceeds the 32-bit edge index range"
        );
        let row_start = (0..n).map(|u| (u * n - u * (u + 1) / 2) as u32).collect();
        EdgeCodec { n, row_start }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        pair_count(self.n)
    }

    /// Unchecked rank for distinct in-range vertices in any order.
    #[inline]
    pub fn id(&self, u: usize, v: usize) -> EdgeId {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        EdgeId(self.row_start[u] + (v - u - 1) as u32)
    }

    /// Endpoints `(u, v)` with `u < v`.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        debug_assert!(e.index() < self.edge_count());
        let u = self.row_start.partition_point(|&s| s <= e.0) - 1;
        let v = (e.0 - self.row_start[u]) as usize + u + 1;
        (u, v)
    }
}
