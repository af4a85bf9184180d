//! Incremental detection of the first Maker move at which Maker's graph
//! contains a winning set.

use crate::board::Board;
use crate::game::{Certificate, GameKind, MakerStrategy};
use crate::verify::{maximum_matching_size, SimpleGraph};

pub(crate) struct GoalTracker {
    kind: GameKind,
    n: usize,
    degree: Vec<u32>,
    deg1: usize,
    deg2: usize,
    parent: Vec<u32>,
    components: usize,
    edges: Vec<(usize, usize)>,
    // largest prefix length known not to win, and next prefix to test
    last_fail: usize,
    next_probe: usize,
    gap: usize,
}

impl GoalTracker {
    pub(crate) fn new(kind: GameKind, n: usize) -> Self {
        GoalTracker {
            kind,
            n,
            degree: vec![0; n],
            deg1: 0,
            deg2: 0,
            parent: (0..n as u32).collect(),
            components: n,
            edges: Vec::new(),
            last_fail: 0,
            next_probe: 0,
            gap: 1,
        }
    }

    pub(crate) fn add_maker_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
        for x in [u, v] {
            self.degree[x] += 1;
            match self.degree[x] {
                1 => self.deg1 += 1,
                2 => self.deg2 += 1,
                _ => {}
            }
        }
        if self.kind == GameKind::Connectivity {
            let (a, b) = (self.find(u), self.find(v));
            if a != b {
                self.parent[a] = b as u32;
                self.components -= 1;
            }
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    /// Winning Maker move (1-based), if the goal has been reached.
    pub(crate) fn check(&mut self, board: &Board, maker: &dyn MakerStrategy) -> Option<u32> {
        let m = self.edges.len();
        match self.kind {
            GameKind::MinDegree1 => (self.deg1 == self.n).then_some(m as u32),
            GameKind::MinDegree2 => (self.deg2 == self.n).then_some(m as u32),
            GameKind::Connectivity => (self.components == 1).then_some(m as u32),
            GameKind::Hamiltonicity => match maker.certificate() {
                Some(Certificate::HamiltonCycle(c)) if cycle_holds(board, &c) => Some(m as u32),
                _ => None,
            },
            GameKind::PerfectMatching => self.check_matching(board, maker, false),
        }
    }

    /// Final test once the board is full or the game stopped.
    pub(crate) fn finish(&mut self, board: &Board, maker: &dyn MakerStrategy) -> Option<u32> {
        match self.kind {
            GameKind::PerfectMatching => self.check_matching(board, maker, true),
            _ => self.check(board, maker),
        }
    }

    fn check_matching(
        &mut self,
        board: &Board,
        maker: &dyn MakerStrategy,
        force: bool,
    ) -> Option<u32> {
        let m = self.edges.len();
        if self.deg1 < self.n {
            self.last_fail = m;
            self.next_probe = m + 1;
            self.gap = 1;
            return None;
        }
        let certified = matches!(
            maker.certificate(),
            Some(Certificate::PerfectMatching(ref p)) if matching_holds(board, self.n, p)
        );
        if certified {
            return Some(self.first_win(m));
        }
        if m < self.next_probe && !force {
            return None;
        }
        if self.prefix_has_pm(m) {
            Some(self.first_win(m))
        } else {
            self.last_fail = m;
            self.gap *= 2;
            self.next_probe = m + self.gap;
            None
        }
    }

    // least winning prefix in (last_fail, hi], given that hi wins
    fn first_win(&self, hi: usize) -> u32 {
        let (mut lo, mut hi) = (self.last_fail, hi);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.prefix_has_pm(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi as u32
    }

    fn prefix_has_pm(&self, len: usize) -> bool {
        let g = SimpleGraph::from_pairs(self.n, self.edges[..len].iter().copied());
        2 * maximum_matching_size(&g) == self.n
    }
}

fn matching_holds(board: &Board, n: usize, pairs: &[(usize, usize)]) -> bool {
    if 2 * pairs.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    pairs.iter().all(|&(u, v)| {
        let fresh = u != v && !seen[u] && !seen[v];
        seen[u] = true;
        seen[v] = true;
        fresh && board.is_maker(u, v)
    })
}

fn cycle_holds(board: &Board, cycle: &[usize]) -> bool {
    let n = board.n();
    if cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| board.is_maker(cycle[i], cycle[(i + 1) % n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Owner;
    use crate::edge::EdgeId;
    use crate::error::Result;

    struct NoCertificate;

    impl MakerStrategy for NoCertificate {
        fn next_move(&mut self, board: &Board) -> Result<EdgeId> {
            Ok(board.smallest_free().unwrap())
        }
    }

    fn feed(t: &mut GoalTracker, b: &mut Board, edges: &[(usize, usize)]) -> Option<u32> {
        let mut won = None;
        for &(u, v) in edges {
            b.claim(Owner::Maker, b.codec().id(u, v)).unwrap();
            t.add_maker_edge(u, v);
            if won.is_none() {
                won = t.check(b, &NoCertificate);
            }
        }
        won.or_else(|| t.finish(b, &NoCertificate))
    }

    #[test]
    fn matching_found_without_certificate() {
        let mut b = Board::new(6).unwrap();
        let mut t = GoalTracker::new(GameKind::PerfectMatching, 6);
        // covers everything at move 4, perfect matching only at move 5
        let edges = [(0, 1), (1, 2), (1, 3), (4, 5), (2, 3), (0, 5)];
        assert_eq!(feed(&mut t, &mut b, &edges), Some(5));
    }

    #[test]
    fn late_probe_is_narrowed_to_first_win() {
        let n = 40;
        let mut edges = Vec::new();
        // a star at 0 covers everything but has matching number 1
        for v in 1..n {
            edges.push((0, v));
        }
        for v in (1..n - 2).step_by(2) {
            edges.push((v, v + 1));
        }
        edges.push((n - 1, 2));
        let mut b = Board::new(n).unwrap();
        let mut t = GoalTracker::new(GameKind::PerfectMatching, n);
        // first perfect matching: 0-(n-1) plus pairs (1,2),(3,4),..,(n-3,n-2)
        assert_eq!(feed(&mut t, &mut b, &edges), Some((n - 1 + (n - 2) / 2) as u32));
    }

    #[test]
    fn connectivity_and_degree_goals() {
        let path = [(0, 1), (1, 2), (2, 3), (3, 4)];
        let mut b = Board::new(5).unwrap();
        let mut t = GoalTracker::new(GameKind::Connectivity, 5);
        assert_eq!(feed(&mut t, &mut b, &path), Some(4));
        let mut b = Board::new(5).unwrap();
        let mut t = GoalTracker::new(GameKind::MinDegree1, 5);
        assert_eq!(feed(&mut t, &mut b, &path), Some(4));
        let mut b = Board::new(5).unwrap();
        let mut t = GoalTracker::new(GameKind::MinDegree2, 5);
        assert_eq!(feed(&mut t, &mut b, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]), Some(5));
    }

    #[test]
    fn hamilton_needs_a_certificate() {
        let mut b = Board::new(4).unwrap();
        let mut t = GoalTracker::new(GameKind::Hamiltonicity, 4);
        assert_eq!(feed(&mut t, &mut b, &[(0, 1), (1, 2), (2, 3), (0, 3)]), None);
        assert!(cycle_holds(&b, &[0, 1, 2, 3]));
        assert!(!cycle_holds(&b, &[0, 2, 1, 3]));
    }
}
