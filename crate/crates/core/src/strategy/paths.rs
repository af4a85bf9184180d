//! Vertex-disjoint directed paths covering `V`, and the edge surgery that
//! merges them.

use std::ops::Deref;

use super::Matching;
use crate::board::Board;
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// A path `g_0 g_1 ... g_s`, oriented so that `g_0 <= g_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedPath(Vec<usize>);

impl DirectedPath {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        DirectedPath(vertices)
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for DirectedPath {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Edges to add and to delete in one step.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Surgery {
    pub add: Vec<(usize, usize)>,
    pub remove: Vec<(usize, usize)>,
}

impl Surgery {
    pub fn new(add: &[(usize, usize)], remove: &[(usize, usize)]) -> Self {
        Surgery {
            add: add.to_vec(),
            remove: remove.to_vec(),
        }
    }

    pub fn inverse(&self) -> Self {
        Surgery {
            add: self.remove.clone(),
            remove: self.add.clone(),
        }
    }
}

/// Outcome of a surgery, not yet committed to the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spliced {
    Paths {
        removed: Vec<usize>,
        added: Vec<DirectedPath>,
    },
    /// The surgery closed everything into one Hamilton cycle.
    Cycle(Vec<usize>),
}

impl Spliced {
    /// Change in the number of paths.
    pub fn path_delta(&self, family: &PathFamily) -> isize {
        match self {
            Spliced::Paths { removed, added } => added.len() as isize - removed.len() as isize,
            Spliced::Cycle(_) => -(family.len() as isize),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    paths: Vec<DirectedPath>,
    path_of: Vec<u32>,
    pos: Vec<u32>,
}

impl PathFamily {
    /// Family from explicit paths; they must partition `0..n`.
    pub fn from_paths(n: usize, paths: Vec<Vec<usize>>) -> Result<Self> {
        let mut fam = PathFamily {
            paths: Vec::with_capacity(paths.len()),
            path_of: vec![NONE; n],
            pos: vec![NONE; n],
        };
        for p in paths {
            if p.is_empty() {
                return Err(Error::consistency("empty path"));
            }
            let id = fam.paths.len();
            fam.paths.push(DirectedPath::new(p));
            fam.index(id)?;
        }
        if let Some(v) = fam.path_of.iter().position(|&p| p == NONE) {
            return Err(Error::consistency(format!("vertex {v} is on no path")));
        }
        Ok(fam)
    }

    /// One path per matching edge, plus singletons for unmatched vertices.
    pub fn from_matching(m: &Matching) -> Result<Self> {
        let mut paths: Vec<Vec<usize>> = m.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        paths.extend((0..m.n()).filter(|&v| m.mate(v).is_none()).map(|v| vec![v]));
        PathFamily::from_paths(m.n(), paths)
    }

    fn index(&mut self, id: usize) -> Result<()> {
        for (i, &v) in self.paths[id].iter().enumerate() {
            match self.path_of.get(v) {
                None => return Err(Error::consistency(format!("vertex {v} out of range"))),
                Some(&p) if p != NONE && p as usize != id => {
                    return Err(Error::consistency(format!("vertex {v} lies on two paths")));
                }
                Some(_) => {}
            }
            if self.path_of[v] as usize == id && self.pos[v] as usize != i {
                return Err(Error::consistency(format!("vertex {v} repeats on a path")));
            }
            self.path_of[v] = id as u32;
            self.pos[v] = i as u32;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.path_of.len()
    }

    /// Number of paths.
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[DirectedPath] {
        &self.paths
    }

    pub fn path(&self, id: usize) -> &DirectedPath {
        &self.paths[id]
    }

    #[inline]
    pub fn path_of(&self, v: usize) -> usize {
        self.path_of[v] as usize
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v] as usize
    }

    #[inline]
    pub fn pred(&self, v: usize) -> Option<usize> {
        let i = self.position(v);
        (i > 0).then(|| self.paths[self.path_of(v)][i - 1])
    }

    #[inline]
    pub fn succ(&self, v: usize) -> Option<usize> {
        self.paths[self.path_of(v)].get(self.position(v) + 1).copied()
    }

    #[inline]
    pub fn is_path_edge(&self, u: usize, v: usize) -> bool {
        self.path_of[u] == self.path_of[v] && self.pos[u].abs_diff(self.pos[v]) == 1
    }

    /// Path ids ordered by starting vertex.
    pub fn ids_by_start(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.len()).collect();
        ids.sort_unstable_by_key(|&i| self.paths[i].first());
        ids
    }

    /// Vertices `u != a` with `au` neither Breaker's nor a path edge.
    pub fn x_set(&self, board: &Board, a: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&u| u != a && !board.is_breaker(a, u) && !self.is_path_edge(a, u))
            .collect()
    }

    /// Predecessors of the members of `x_set(a)`, without `a`, ascending.
    pub fn x_arrow(&self, board: &Board, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .x_set(board, a)
            .into_iter()
            .filter_map(|u| self.pred(u))
            .filter(|&v| v != a)
            .collect();
        out.sort_unstable();
        out
    }

    /// Result of adding and deleting the given edges. Deleted edges must be
    /// path edges; the outcome must again be a set of paths, or a single
    /// cycle through every vertex. Nothing is changed until [`commit`].
    ///
    /// [`commit`]: PathFamily::commit
    pub fn apply_surgery(&self, s: &Surgery) -> Result<Spliced> {
        let n = self.n();
        let mut ids: Vec<usize> = s
            .add
            .iter()
            .chain(&s.remove)
            .flat_map(|&(u, v)| [u, v])
            .map(|v| {
                if v < n {
                    Ok(self.path_of(v))
                } else {
                    Err(Error::consistency(format!("vertex {v} out of range")))
                }
            })
            .collect::<Result<_>>()?;
        ids.sort_unstable();
        ids.dedup();

        let mut adj = vec![[NONE; 2]; n];
        let link = |adj: &mut Vec<[u32; 2]>, u: usize, v: usize| -> Result<()> {
            for (x, y) in [(u, v), (v, u)] {
                let slot = adj[x]
                    .iter()
                    .position(|&s| s == NONE)
                    .ok_or_else(|| Error::consistency(format!("vertex {x} would get degree 3")))?;
                adj[x][slot] = y as u32;
            }
            Ok(())
        };
        for &id in &ids {
            for w in self.paths[id].windows(2) {
                link(&mut adj, w[0], w[1])?;
            }
        }
        for &(u, v) in &s.remove {
            if !self.is_path_edge(u, v) {
                return Err(Error::consistency(format!("({u}, {v}) is not a path edge")));
            }
            for (x, y) in [(u, v), (v, u)] {
                let slot = adj[x].iter().position(|&s| s == y as u32).expect("path edge linked");
                adj[x][slot] = NONE;
            }
        }
        for &(u, v) in &s.add {
            if u == v || adj[u].contains(&(v as u32)) {
                return Err(Error::consistency(format!("cannot add ({u}, {v})")));
            }
            link(&mut adj, u, v)?;
        }

        let degree = |adj: &Vec<[u32; 2]>, v: usize| adj[v].iter().filter(|&&s| s != NONE).count();
        let mut seen = vec![false; n];
        let walk = |adj: &Vec<[u32; 2]>, seen: &mut Vec<bool>, start: usize| {
            let mut out = vec![start];
            seen[start] = true;
            let mut cur = start;
            loop {
                let next = adj[cur].iter().find(|&&s| s != NONE && !seen[s as usize]);
                match next {
                    Some(&s) => {
                        cur = s as usize;
                        seen[cur] = true;
                        out.push(cur);
                    }
                    None => break,
                }
            }
            out
        };
        let members: Vec<usize> = ids.iter().flat_map(|&id| self.paths[id].iter().copied()).collect();
        let mut added = Vec::new();
        for &v in &members {
            if !seen[v] && degree(&adj, v) <= 1 {
                added.push(DirectedPath::new(walk(&adj, &mut seen, v)));
            }
        }
        if let Some(&v) = members.iter().find(|&&v| !seen[v]) {
            let cycle = walk(&adj, &mut seen, v);
            if added.is_empty() && cycle.len() == n {
                return Ok(Spliced::Cycle(cycle));
            }
            return Err(Error::consistency("surgery closed a cycle that is not Hamiltonian"));
        }
        Ok(Spliced::Paths {
            removed: ids,
            added,
        })
    }

    /// Replace the family by the result of a surgery.
    pub fn commit(&mut self, spliced: Spliced) -> Result<()> {
        let Spliced::Paths { mut removed, added } = spliced else {
            return Err(Error::consistency("a cycle cannot be committed to a path family"));
        };
        removed.sort_unstable_by(|a, b| b.cmp(a));
        for id in removed {
            for &v in self.paths[id].iter() {
                self.path_of[v] = NONE;
            }
            self.paths.swap_remove(id);
            if id < self.paths.len() {
                for (i, &v) in self.paths[id].iter().enumerate() {
                    self.path_of[v] = id as u32;
                    self.pos[v] = i as u32;
                }
            }
        }
        for p in added {
            let id = self.paths.len();
            self.paths.push(p);
            self.index(id)?;
        }
        Ok(())
    }

    /// Family structure plus Maker ownership of every path edge.
    pub fn check_against(&self, board: &Board) -> Result<()> {
        let n = self.n();
        let mut seen = vec![false; n];
        for (id, p) in self.paths.iter().enumerate() {
            if p.first() > p.last() {
                return Err(Error::consistency(format!("path {id} has the wrong orientation")));
            }
            for (i, &v) in p.iter().enumerate() {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::consistency(format!("vertex {v} covered twice")));
                }
                if self.path_of(v) != id || self.position(v) != i {
                    return Err(Error::consistency(format!("index of vertex {v} is stale")));
                }
            }
            for w in p.windows(2) {
                if !board.is_maker(w[0], w[1]) {
                    return Err(Error::consistency(format!(
                        "path edge ({}, {}) is not Maker's",
                        w[0], w[1]
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::consistency(format!("vertex {v} is not covered")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Owner;

    fn fam(n: usize, paths: &[&[usize]]) -> PathFamily {
        PathFamily::from_paths(n, paths.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn sorted(f: &PathFamily) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = f.paths().iter().map(|p| p.to_vec()).collect();
        v.sort();
        v
    }

    fn commit(f: &PathFamily, s: &Surgery) -> PathFamily {
        let mut g = f.clone();
        g.commit(f.apply_surgery(s).unwrap()).unwrap();
        g
    }

    #[test]
    fn matching_gives_length_one_paths() {
        let m = Matching::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        let f = PathFamily::from_matching(&m).unwrap();
        assert_eq!(sorted(&f), vec![vec![0, 1], vec![2, 3]]);
        assert!(f.paths().iter().all(|p| p.len() == 2));
    }

    #[test]
    fn joining_two_paths() {
        let f = fam(4, &[&[0, 1], &[2, 3]]);
        let g = commit(&f, &Surgery::new(&[(0, 2)], &[]));
        assert_eq!(sorted(&g), vec![vec![1, 0, 2, 3]]);
    }

    #[test]
    fn x_arrow_on_a_four_path() {
        let f = fam(6, &[&[0, 1, 2, 3], &[4, 5]]);
        let mut b = Board::new(6).unwrap();
        for (u, v) in [(4, 0), (4, 1), (4, 3)] {
            b.claim(Owner::Breaker, b.codec().id(u, v)).unwrap();
        }
        assert_eq!(f.x_set(&b, 4), vec![2]);
        assert_eq!(f.x_arrow(&b, 4), vec![1]);
        // only path starts in X_a
        let f = fam(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        let mut b = Board::new(6).unwrap();
        for u in [1, 3] {
            b.claim(Owner::Breaker, b.codec().id(4, u)).unwrap();
        }
        assert_eq!(f.x_set(&b, 4), vec![0, 2]);
        assert!(f.x_arrow(&b, 4).is_empty());
    }

    #[test]
    fn double_move_case_one() {
        // alpha = 0-1, beta = 2-3, gamma = 4-5-6-7; u = 6, v = 5
        let f = fam(8, &[&[0, 1], &[2, 3], &[4, 5, 6, 7]]);
        let s = Surgery::new(&[(0, 6), (3, 5)], &[(5, 6)]);
        let g = commit(&f, &s);
        // a_s..a_0 g_j..g_s and g_0..g_{j-1} b_s..b_0
        assert_eq!(sorted(&g), vec![vec![1, 0, 6, 7], vec![2, 3, 5, 4]]);
    }

    #[test]
    fn double_move_case_two() {
        // gamma = alpha = 0-1-2-3-4, j = 3; beta = 5-6
        let f = fam(7, &[&[0, 1, 2, 3, 4], &[5, 6]]);
        let s = Surgery::new(&[(0, 3), (6, 2)], &[(2, 3)]);
        let g = commit(&f, &s);
        // a_s..a_{j+1} a_j a_0 a_1..a_{j-1} b_s..b_0
        assert_eq!(sorted(&g), vec![vec![4, 3, 0, 1, 2, 6, 5]]);
    }

    #[test]
    fn double_move_case_three() {
        // alpha = 0-1, gamma = beta = 2-3-4-5-6, j = 3
        let f = fam(7, &[&[0, 1], &[2, 3, 4, 5, 6]]);
        let s = Surgery::new(&[(0, 5), (6, 4)], &[(4, 5)]);
        let g = commit(&f, &s);
        // a_s..a_0 b_j..b_s b_{j-1}..b_0
        let expect = DirectedPath::new(vec![1, 0, 5, 6, 4, 3, 2]).into_vec();
        assert_eq!(sorted(&g), vec![expect]);
    }

    #[test]
    fn closing_a_hamilton_cycle() {
        // single path 0..7, a = 0, b = 7, u = 3, v = 5: bridge 2-6
        let f = fam(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]);
        let s = Surgery::new(&[(0, 3), (2, 6), (7, 5)], &[(2, 3), (5, 6)]);
        match f.apply_surgery(&s).unwrap() {
            Spliced::Cycle(c) => {
                assert_eq!(c.len(), 8);
                let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 8];
                for i in 0..8 {
                    let (x, y) = (c[i], c[(i + 1) % 8]);
                    adj[x].push(y);
                    adj[y].push(x);
                }
                let mut nb = adj[0].clone();
                nb.sort();
                assert_eq!(nb, vec![1, 3]);
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn invalid_surgeries_are_errors() {
        let f = fam(6, &[&[0, 1, 2], &[3, 4, 5]]);
        // closing a short cycle
        assert!(f.apply_surgery(&Surgery::new(&[(0, 2)], &[])).is_err());
        // degree three
        assert!(f.apply_surgery(&Surgery::new(&[(1, 4)], &[])).is_err());
        // removing a non-path edge
        assert!(f.apply_surgery(&Surgery::new(&[], &[(0, 2)])).is_err());
    }

    #[test]
    fn surgery_then_inverse_restores_the_family() {
        let f = fam(8, &[&[0, 1], &[2, 3], &[4, 5, 6, 7]]);
        let s = Surgery::new(&[(0, 6), (3, 5)], &[(5, 6)]);
        let g = commit(&f, &s);
        let h = commit(&g, &s.inverse());
        assert_eq!(sorted(&h), sorted(&f));
    }

    #[test]
    fn commit_keeps_indices_consistent() {
        let mut f = fam(10, &[&[0, 1], &[2, 3], &[4, 5], &[6, 7], &[8, 9]]);
        let mut b = Board::new(10).unwrap();
        for p in f.paths().to_vec() {
            b.claim(Owner::Maker, b.codec().id(p[0], p[1])).unwrap();
        }
        for (u, v) in [(1, 2), (5, 9), (3, 4)] {
            let s = f.apply_surgery(&Surgery::new(&[(u, v)], &[])).unwrap();
            assert_eq!(s.path_delta(&f), -1);
            f.commit(s).unwrap();
            b.claim(Owner::Maker, b.codec().id(u, v)).unwrap();
            f.check_against(&b).unwrap();
        }
        assert_eq!(f.len(), 2);
    }
}
