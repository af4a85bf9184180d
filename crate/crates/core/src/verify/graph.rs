use crate::board::{Board, Owner};
use crate::edge::{EdgeCodec, EdgeId};
use crate::error::{Error, Result};

/// Undirected simple graph on `0..n` with adjacency lists and a bit matrix.
/// Equality compares vertex count and edge set.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for SimpleGraph {}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
            words,
            bits: vec![0; words * n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("in range");
            }
        }
        g
    }

    /// Graph from pairs, ignoring duplicates. Panics on invalid pairs.
    pub(crate) fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = SimpleGraph::new(n);
        for (u, v) in pairs {
            g.add_edge(u, v).expect("valid pair");
        }
        g
    }

    /// Graph from an edge list; rejects loops and out-of-range vertices.
    pub fn from_edges(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for (u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_edge_ids(n: usize, ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let codec = EdgeCodec::new(n);
        SimpleGraph::from_pairs(n, ids.into_iter().map(|e| codec.endpoints(e)))
    }

    /// Graph of one player's edges on the board.
    pub fn of_owner(board: &Board, owner: Owner) -> Self {
        SimpleGraph::from_pairs(board.n(), board.edges_of(owner))
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidVertex { u, v, n: self.n });
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        Ok(true)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Bit row of `v`'s neighborhood.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == g.n()
}

pub fn min_degree(g: &SimpleGraph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

pub fn max_degree(g: &SimpleGraph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}
