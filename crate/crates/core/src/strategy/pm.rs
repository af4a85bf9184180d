//! Maker's perfect-matching strategy: single moves between isolated
//! vertices, then length-3 and length-5 augmenting paths claimed as double
//! and triple moves.

use std::collections::BTreeSet;
use std::fmt;

use super::{Plan, PlanKind, PlanStats, Step, StrategyParams};
use crate::board::Board;
use crate::edge::EdgeId;
use crate::error::{Error, Result};
use crate::game::{Certificate, MakerStrategy};

const UNMATCHED: u32 = u32::MAX;

/// A matching on `0..n` stored as a mate array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<u32>,
    size: usize,
}

impl Matching {
    pub fn new(n: usize) -> Self {
        Matching {
            mate: vec![UNMATCHED; n],
            size: 0,
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Matching::new(n);
        for &(u, v) in pairs {
            m.insert(u, v)?;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.mate.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_perfect(&self) -> bool {
        2 * self.size == self.n()
    }

    #[inline]
    pub fn mate(&self, v: usize) -> Option<usize> {
        let m = self.mate[v];
        (m != UNMATCHED).then_some(m as usize)
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.mate[u] == v as u32
    }

    pub fn insert(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || self.mate(u).is_some() || self.mate(v).is_some() {
            return Err(Error::consistency(format!("cannot add ({u}, {v}) to the matching")));
        }
        self.mate[u] = v as u32;
        self.mate[v] = u as u32;
        self.size += 1;
        Ok(())
    }

    pub fn remove(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.contains(u, v) {
            return Err(Error::consistency(format!("({u}, {v}) is not a matching edge")));
        }
        self.mate[u] = UNMATCHED;
        self.mate[v] = UNMATCHED;
        self.size -= 1;
        Ok(())
    }

    /// Edges `(u, v)` with `u < v` in edge-index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .filter_map(|u| self.mate(u).filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }
}

/// Vertices joined to `a` by a vacant edge: not Breaker's and not in the matching.
pub fn x_set(board: &Board, m: &Matching, a: usize) -> Vec<usize> {
    (0..board.n())
        .filter(|&u| u != a && !board.is_breaker(a, u) && !m.contains(a, u))
        .collect()
}

/// Matching partners of the members of `x_set(a)`, in the same order.
pub fn x_plus(board: &Board, m: &Matching, a: usize) -> Vec<usize> {
    x_set(board, m, a).into_iter().filter_map(|u| m.mate(u)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PmStage {
    Stage1,
    Stage2,
    Stage3,
    Done,
}

impl fmt::Display for PmStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PmStage::Stage1 => "pm-stage1",
            PmStage::Stage2 => "pm-stage2",
            PmStage::Stage3 => "pm-stage3",
            PmStage::Done => "pm-done",
        })
    }
}

#[derive(Debug, Clone, Copy)]
enum Update {
    Single(usize, usize),
    // a, u, v, b: replace uv by au, bv
    Double([usize; 4]),
    // a, u, w, z, v, b: replace uw, zv by au, wz, vb
    Triple([usize; 6]),
}

#[derive(Debug, Clone)]
pub struct PerfectMatchingMaker {
    params: StrategyParams,
    matching: Matching,
    uncovered: BTreeSet<usize>,
    plan: Option<Plan<Update>>,
    forfeit: Option<PmStage>,
    stats: PlanStats,
}

impl PerfectMatchingMaker {
    pub fn new(n: usize, epsilon: f64) -> Result<Self> {
        Ok(PerfectMatchingMaker::with_params(StrategyParams::new(n, epsilon)?))
    }

    pub fn with_params(params: StrategyParams) -> Self {
        PerfectMatchingMaker {
            params,
            matching: Matching::new(params.n),
            uncovered: (0..params.n).collect(),
            plan: None,
            forfeit: None,
            stats: PlanStats::default(),
        }
    }

    pub fn params(&self) -> &StrategyParams {
        &self.params
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    /// Vertices not covered by the matching.
    pub fn uncovered(&self) -> &BTreeSet<usize> {
        &self.uncovered
    }

    /// Stage by matching size; the stage a forfeit happened in stays put.
    pub fn stage(&self) -> PmStage {
        if let Some(s) = self.forfeit {
            return s;
        }
        let size = self.matching.size();
        if size < self.params.stage1_bound {
            PmStage::Stage1
        } else if size < self.params.stage2_bound {
            PmStage::Stage2
        } else if size < self.params.target {
            PmStage::Stage3
        } else {
            PmStage::Done
        }
    }

    pub fn forfeited(&self) -> bool {
        self.forfeit.is_some()
    }

    /// The matching has reached `floor(n/2)` edges.
    pub fn is_done(&self) -> bool {
        self.forfeit.is_none() && self.matching.size() == self.params.target
    }

    fn give_up(&mut self, board: &Board) -> Result<EdgeId> {
        self.forfeit = Some(self.stage());
        self.plan = None;
        board.smallest_free().ok_or(Error::EmptyBoard)
    }

    fn advance(&mut self, plan: Plan<Update>, board: &Board) -> Result<EdgeId> {
        match plan.step(board, &mut self.stats)? {
            (Step::Claim(e, done), rest) => {
                self.plan = rest;
                if let Some(update) = done {
                    self.apply(update)?;
                }
                Ok(e)
            }
            (Step::Failed, _) => self.give_up(board),
        }
    }

    fn apply(&mut self, update: Update) -> Result<()> {
        let m = &mut self.matching;
        let (a, b) = match update {
            Update::Single(a, b) => {
                m.insert(a, b)?;
                (a, b)
            }
            Update::Double([a, u, v, b]) => {
                m.remove(u, v)?;
                m.insert(a, u)?;
                m.insert(b, v)?;
                (a, b)
            }
            Update::Triple([a, u, w, z, v, b]) => {
                m.remove(u, w)?;
                m.remove(z, v)?;
                m.insert(a, u)?;
                m.insert(w, z)?;
                m.insert(v, b)?;
                (a, b)
            }
        };
        self.uncovered.remove(&a);
        self.uncovered.remove(&b);
        Ok(())
    }

    fn vacant(&self, board: &Board, x: usize, y: usize) -> bool {
        !board.is_breaker(x, y) && !self.matching.contains(x, y)
    }

    fn find_single(&self, board: &Board) -> Option<(usize, usize)> {
        for &a in &self.uncovered {
            for &b in self.uncovered.range(a + 1..) {
                if !board.is_breaker(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    fn find_double(&self, board: &Board) -> Option<[usize; 4]> {
        for (u, v) in self.matching.edges() {
            let au: Vec<usize> = self.uncovered.iter().copied().filter(|&a| self.vacant(board, a, u)).collect();
            if au.is_empty() {
                continue;
            }
            let bv: Vec<usize> = self.uncovered.iter().copied().filter(|&b| self.vacant(board, b, v)).collect();
            for &a in &au {
                if let Some(&b) = bv.iter().find(|&&b| b != a) {
                    return Some([a, u, v, b]);
                }
            }
        }
        None
    }

    fn find_triple(&self, board: &Board) -> Option<[usize; 6]> {
        let plus: Vec<(usize, Vec<usize>)> = self
            .uncovered
            .iter()
            .map(|&a| {
                let mut xp = x_plus(board, &self.matching, a);
                xp.sort_unstable();
                (a, xp)
            })
            .collect();
        for (i, (a, xa)) in plus.iter().enumerate() {
            for (b, xb) in &plus[i + 1..] {
                for &w in xa {
                    for &z in xb {
                        if w != z && self.vacant(board, w, z) {
                            let u = self.matching.mate(w)?;
                            let v = self.matching.mate(z)?;
                            return Some([*a, u, w, z, v, *b]);
                        }
                    }
                }
            }
        }
        None
    }
}

impl MakerStrategy for PerfectMatchingMaker {
    fn next_move(&mut self, board: &Board) -> Result<EdgeId> {
        if self.forfeit.is_some() {
            return board.smallest_free().ok_or(Error::EmptyBoard);
        }
        if let Some(plan) = self.plan.take() {
            return self.advance(plan, board);
        }
        let id = |x, y| board.codec().id(x, y);
        let eps = self.params.epsilon;
        let plan = match self.stage() {
            PmStage::Done => return board.smallest_free().ok_or(Error::EmptyBoard),
            PmStage::Stage1 => self.find_single(board).map(|(a, b)| {
                Plan::new(PlanKind::Single, &[id(a, b)], board, eps, &mut self.stats, Update::Single(a, b))
            }),
            PmStage::Stage2 => self.find_double(board).map(|[a, u, v, b]| {
                let edges = [id(a, u), id(b, v)];
                Plan::new(PlanKind::Double, &edges, board, eps, &mut self.stats, Update::Double([a, u, v, b]))
            }),
            PmStage::Stage3 => self.find_triple(board).map(|t| {
                let [a, u, w, z, v, b] = t;
                let edges = [id(a, u), id(w, z), id(v, b)];
                Plan::new(PlanKind::Triple, &edges, board, eps, &mut self.stats, Update::Triple(t))
            }),
        };
        match plan {
            Some(plan) => self.advance(plan, board),
            None => self.give_up(board),
        }
    }

    fn forfeit_stage(&self) -> Option<String> {
        self.forfeit.map(|s| s.to_string())
    }

    fn certificate(&self) -> Option<Certificate> {
        self.matching
            .is_perfect()
            .then(|| Certificate::PerfectMatching(self.matching.edges()))
    }

    fn plan_stats(&self) -> PlanStats {
        self.stats
    }

    fn structure_size(&self) -> Option<usize> {
        Some(self.matching.size())
    }

    fn check_invariants(&self, board: &Board) -> Result<()> {
        let m = &self.matching;
        let mut size = 0;
        for v in 0..m.n() {
            match m.mate(v) {
                Some(u) => {
                    if m.mate(u) != Some(v) || u == v {
                        return Err(Error::consistency(format!("mate array broken at {v}")));
                    }
                    if !board.is_maker(u, v) {
                        return Err(Error::consistency(format!("matching edge ({u}, {v}) is not Maker's")));
                    }
                    if self.uncovered.contains(&v) {
                        return Err(Error::consistency(format!("matched vertex {v} listed as isolated")));
                    }
                    size += 1;
                }
                None => {
                    if !self.uncovered.contains(&v) {
                        return Err(Error::consistency(format!("unmatched vertex {v} missing from the isolated set")));
                    }
                }
            }
        }
        if size != 2 * m.size() {
            return Err(Error::consistency("matching size out of sync"));
        }
        Ok(())
    }
}
