//! Maker's Hamilton-cycle strategy: a perfect matching first, then a path
//! family merged one path at a time until a Hamilton path remains, which
//! is closed into a cycle.

use std::fmt;

use super::{PathFamily, PerfectMatchingMaker, Plan, PlanKind, PlanStats, Spliced, Step, StrategyParams, Surgery};
use crate::board::Board;
use crate::edge::EdgeId;
use crate::error::{Error, Result};
use crate::game::{Certificate, MakerStrategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum HamStage {
    Matching,
    Absorb,
    Stage1,
    Stage2,
    Stage3,
    Stage4,
    Done,
}

impl fmt::Display for HamStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HamStage::Matching => "pm",
            HamStage::Absorb => "ham-stage0",
            HamStage::Stage1 => "ham-stage1",
            HamStage::Stage2 => "ham-stage2",
            HamStage::Stage3 => "ham-stage3",
            HamStage::Stage4 => "ham-stage4",
            HamStage::Done => "ham-done",
        })
    }
}

/// A triple-move candidate: `w` precedes or follows its anchor `u` on a path.
type Anchored = (usize, usize);

/// One endpoint's view in the triple-move stage.
struct EndInfo {
    path: usize,
    a: usize,
    member: Vec<bool>,
    gamma: usize,
}

#[derive(Debug, Clone)]
pub struct HamiltonMaker {
    params: StrategyParams,
    pm: PerfectMatchingMaker,
    family: Option<PathFamily>,
    absorbed: bool,
    plan: Option<Plan<Spliced>>,
    forfeit: Option<String>,
    cycle: Option<Vec<usize>>,
    stats: PlanStats,
}

impl HamiltonMaker {
    pub fn new(n: usize, epsilon: f64) -> Result<Self> {
        Ok(HamiltonMaker::with_params(StrategyParams::new(n, epsilon)?))
    }

    pub fn with_params(params: StrategyParams) -> Self {
        HamiltonMaker {
            params,
            pm: PerfectMatchingMaker::with_params(params),
            family: None,
            absorbed: params.n.is_multiple_of(2),
            plan: None,
            forfeit: None,
            cycle: None,
            stats: PlanStats::default(),
        }
    }

    pub fn params(&self) -> &StrategyParams {
        &self.params
    }

    pub fn family(&self) -> Option<&PathFamily> {
        self.family.as_ref()
    }

    pub fn matching_strategy(&self) -> &PerfectMatchingMaker {
        &self.pm
    }

    pub fn cycle(&self) -> Option<&[usize]> {
        self.cycle.as_deref()
    }

    pub fn stage(&self) -> HamStage {
        if self.cycle.is_some() {
            return HamStage::Done;
        }
        let Some(f) = &self.family else {
            return HamStage::Matching;
        };
        let i = f.len();
        if !self.absorbed {
            HamStage::Absorb
        } else if i > self.params.k_prime {
            HamStage::Stage1
        } else if i > self.params.l {
            HamStage::Stage2
        } else if i > 1 {
            HamStage::Stage3
        } else {
            HamStage::Stage4
        }
    }

    fn give_up(&mut self, board: &Board) -> Result<EdgeId> {
        self.forfeit = Some(self.stage().to_string());
        self.plan = None;
        board.smallest_free().ok_or(Error::EmptyBoard)
    }

    fn advance(&mut self, plan: Plan<Spliced>, board: &Board) -> Result<EdgeId> {
        match plan.step(board, &mut self.stats)? {
            (Step::Claim(e, done), rest) => {
                self.plan = rest;
                match done {
                    Some(Spliced::Cycle(c)) => self.cycle = Some(c),
                    Some(spliced) => {
                        self.family
                            .as_mut()
                            .ok_or_else(|| Error::consistency("surgery without a path family"))?
                            .commit(spliced)?;
                        self.absorbed = true;
                    }
                    None => {}
                }
                Ok(e)
            }
            (Step::Failed, _) => self.give_up(board),
        }
    }

    fn vacant(f: &PathFamily, board: &Board, x: usize, y: usize) -> bool {
        x != y && !board.is_breaker(x, y) && !f.is_path_edge(x, y)
    }

    // dry run; the surgery must merge exactly two paths into one
    fn try_surgery(&mut self, f: &PathFamily, s: &Surgery, closing: bool) -> Option<Spliced> {
        match f.apply_surgery(s) {
            Ok(sp @ Spliced::Cycle(_)) if closing => Some(sp),
            Ok(sp) if !closing && sp.path_delta(f) == -1 => Some(sp),
            _ => {
                self.stats.rejected_surgeries += 1;
                None
            }
        }
    }

    fn find_absorb(&mut self, f: &PathFamily, board: &Board) -> Option<(Vec<(usize, usize)>, Spliced)> {
        let x = f.paths().iter().find(|p| p.len() == 1)?.first();
        for y in 0..f.n() {
            if Self::vacant(f, board, x, y) {
                let s = Surgery::new(&[(x, y)], &[]);
                if let Some(sp) = self.try_surgery(f, &s, false) {
                    return Some((s.add, sp));
                }
            }
        }
        None
    }

    fn find_single(&mut self, f: &PathFamily, board: &Board) -> Option<(Vec<(usize, usize)>, Spliced)> {
        let mut ends: Vec<usize> = f.paths().iter().flat_map(|p| [p.first(), p.last()]).collect();
        ends.sort_unstable();
        ends.dedup();
        for (i, &a) in ends.iter().enumerate() {
            for &b in &ends[i + 1..] {
                if f.path_of(a) != f.path_of(b) && !board.is_breaker(a, b) {
                    let s = Surgery::new(&[(a, b)], &[]);
                    if let Some(sp) = self.try_surgery(f, &s, false) {
                        return Some((s.add, sp));
                    }
                }
            }
        }
        None
    }

    fn find_double(&mut self, f: &PathFamily, board: &Board) -> Option<(Vec<(usize, usize)>, Spliced)> {
        let i = f.len();
        for alpha in f.ids_by_start() {
            let a = f.path(alpha).first();
            let xa = f.x_set(board, a);
            let arrow = f.x_arrow(board, a);
            if arrow.len() + i + 1 < xa.len() {
                self.stats.bound_violations += 1;
            }
            let mut ends: Vec<usize> = (0..i).filter(|&id| id != alpha).map(|id| f.path(id).last()).collect();
            ends.sort_unstable();
            for &v in &arrow {
                let u = f.succ(v).expect("a predecessor has a successor");
                for &b in &ends {
                    if Self::vacant(f, board, b, v) {
                        let s = Surgery::new(&[(a, u), (b, v)], &[(v, u)]);
                        if let Some(sp) = self.try_surgery(f, &s, false) {
                            return Some((s.add, sp));
                        }
                    }
                }
            }
        }
        None
    }

    fn end_info(f: &PathFamily, board: &Board, path: usize, min_vertex: &[usize]) -> EndInfo {
        let a = f.path(path).first();
        let mut member = vec![false; f.n()];
        let mut count = vec![0usize; f.len()];
        for u in f.x_set(board, a) {
            member[u] = true;
            count[f.path_of(u)] += 1;
        }
        let gamma = (0..f.len())
            .max_by(|&x, &y| count[x].cmp(&count[y]).then(min_vertex[y].cmp(&min_vertex[x])))
            .expect("family is not empty");
        EndInfo { path, a, member, gamma }
    }

    // X^* for Case 1: predecessors of X_a members on gamma^a, anchored at them
    fn star_simple(&mut self, f: &PathFamily, e: &EndInfo) -> Vec<Anchored> {
        let path = f.path(e.gamma);
        let on_gamma = path.iter().filter(|&&u| e.member[u]).count();
        let mut out: Vec<Anchored> = path
            .windows(2)
            .filter(|w| e.member[w[1]] && w[0] != e.a)
            .map(|w| (w[0], w[1]))
            .collect();
        self.check_size(out.len(), on_gamma);
        out.sort_unstable();
        out
    }

    // X^* for Case 2, both endpoints' best path being the path starting at p
    fn star_split(&mut self, f: &PathFamily, p: &EndInfo, q: &EndInfo) -> (Vec<Anchored>, Vec<Anchored>) {
        let path = f.path(p.path);
        let e: Vec<usize> = (0..path.len()).filter(|&j| p.member[path[j]]).collect();
        let g: Vec<usize> = (0..path.len()).filter(|&j| q.member[path[j]]).collect();
        if e.is_empty() || g.is_empty() {
            return (Vec::new(), Vec::new());
        }
        let (qq, r) = (e.len() - 1, g.len() - 1);
        let (hq, hr) = (qq / 2, r / 2);
        let before = |j: usize| (j >= 1).then(|| (path[j - 1], path[j]));
        let after = |j: usize| path.get(j + 1).map(|&x| (x, path[j]));
        let (mut xp, mut xq): (Vec<Anchored>, Vec<Anchored>) = if e[hq] < g[hr] {
            (
                (1..=hq).filter_map(|j| before(e[j])).collect(),
                (hr..r).filter_map(|j| after(g[j])).collect(),
            )
        } else {
            (
                (hq..=qq).filter_map(|j| before(e[j])).collect(),
                (1..=hr).filter_map(|j| before(g[j])).collect(),
            )
        };
        self.check_size(xp.len(), e.len());
        self.check_size(xq.len(), g.len());
        xp.sort_unstable();
        xq.sort_unstable();
        (xp, xq)
    }

    fn check_size(&mut self, got: usize, on_path: usize) {
        if 2 * got + 2 < on_path {
            self.stats.bound_violations += 1;
        }
    }

    fn find_triple(&mut self, f: &PathFamily, board: &Board) -> Option<(Vec<(usize, usize)>, Spliced)> {
        let mut min_vertex = vec![usize::MAX; f.len()];
        for (id, p) in f.paths().iter().enumerate() {
            min_vertex[id] = p.iter().copied().min().expect("non-empty path");
        }
        let infos: Vec<EndInfo> = f
            .ids_by_start()
            .into_iter()
            .map(|id| Self::end_info(f, board, id, &min_vertex))
            .collect();
        let mut simple: Vec<Option<Vec<Anchored>>> = vec![None; infos.len()];
        for x in 0..infos.len() {
            for y in x + 1..infos.len() {
                let (ia, ib) = (&infos[x], &infos[y]);
                let shared = ia.gamma == ib.gamma;
                let (xa, xb) = if shared && ia.gamma == ia.path {
                    self.star_split(f, ia, ib)
                } else if shared && ia.gamma == ib.path {
                    let (sb, sa) = self.star_split(f, ib, ia);
                    (sa, sb)
                } else {
                    for k in [x, y] {
                        if simple[k].is_none() {
                            simple[k] = Some(self.star_simple(f, &infos[k]));
                        }
                    }
                    (simple[x].clone().unwrap_or_default(), simple[y].clone().unwrap_or_default())
                };
                let (a, b) = (ia.a, ib.a);
                for &(w, u) in &xa {
                    for &(z, v) in &xb {
                        if w == z || !Self::vacant(f, board, w, z) {
                            continue;
                        }
                        let add = [(a, u), (b, v), (w, z)];
                        if !distinct(&add) {
                            continue;
                        }
                        let s = Surgery::new(&add, &[(w, u), (z, v)]);
                        if let Some(sp) = self.try_surgery(f, &s, false) {
                            return Some((s.add, sp));
                        }
                    }
                }
            }
        }
        None
    }

    fn find_closing(&mut self, f: &PathFamily, board: &Board) -> Option<(Vec<(usize, usize)>, Spliced)> {
        let path = f.path(0).to_vec();
        let n = path.len();
        let (a, b) = (path[0], path[n - 1]);
        let positions = |x: usize| -> Vec<usize> {
            let member = f.x_set(board, x);
            let mut pos: Vec<usize> = member.into_iter().map(|u| f.position(u)).collect();
            pos.sort_unstable();
            pos
        };
        let (ii, jj) = (positions(a), positions(b));
        if ii.is_empty() || jj.is_empty() {
            return None;
        }
        let (mi, mj) = (ii[(ii.len() - 1) / 2], jj[(jj.len() - 1) / 2]);
        let forward = mi < mj;
        for &i in &ii {
            for &j in &jj {
                let (x, y, cut_a, cut_b) = if forward {
                    if i > mi || j < mj || i == 0 || j + 1 >= n || i >= j {
                        continue;
                    }
                    (i - 1, j + 1, (i - 1, i), (j, j + 1))
                } else {
                    if i < mi || j >= mj || j == 0 || i + 1 >= n || j >= i {
                        continue;
                    }
                    (i + 1, j - 1, (i, i + 1), (j - 1, j))
                };
                if !Self::vacant(f, board, path[x], path[y]) {
                    continue;
                }
                let add = [(a, path[i]), (path[x], path[y]), (b, path[j])];
                if !distinct(&add) {
                    continue;
                }
                let remove = [(path[cut_a.0], path[cut_a.1]), (path[cut_b.0], path[cut_b.1])];
                let s = Surgery::new(&add, &remove);
                if let Some(sp) = self.try_surgery(f, &s, true) {
                    return Some((s.add, sp));
                }
            }
        }
        None
    }
}

fn distinct(edges: &[(usize, usize)]) -> bool {
    let key = |&(u, v): &(usize, usize)| (u.min(v), u.max(v));
    edges
        .iter()
        .enumerate()
        .all(|(i, e)| edges[i + 1..].iter().all(|o| key(o) != key(e)))
}

impl MakerStrategy for HamiltonMaker {
    fn next_move(&mut self, board: &Board) -> Result<EdgeId> {
        if self.forfeit.is_some() {
            return board.smallest_free().ok_or(Error::EmptyBoard);
        }
        if let Some(plan) = self.plan.take() {
            return self.advance(plan, board);
        }
        if self.family.is_none() {
            if !self.pm.is_done() {
                let e = self.pm.next_move(board)?;
                self.forfeit = self.pm.forfeit_stage();
                return Ok(e);
            }
            self.family = Some(PathFamily::from_matching(self.pm.matching())?);
        }
        let stage = self.stage();
        let f = self.family.take().expect("family initialized");
        let found = match stage {
            HamStage::Absorb => self.find_absorb(&f, board).map(|x| (PlanKind::Single, x)),
            HamStage::Stage1 => self.find_single(&f, board).map(|x| (PlanKind::Single, x)),
            HamStage::Stage2 => self.find_double(&f, board).map(|x| (PlanKind::Double, x)),
            HamStage::Stage3 => self.find_triple(&f, board).map(|x| (PlanKind::Triple, x)),
            HamStage::Stage4 => self.find_closing(&f, board).map(|x| (PlanKind::Triple, x)),
            HamStage::Matching | HamStage::Done => None,
        };
        self.family = Some(f);
        if stage == HamStage::Done {
            return board.smallest_free().ok_or(Error::EmptyBoard);
        }
        match found {
            Some((kind, (edges, spliced))) => {
                let ids: Vec<EdgeId> = edges.iter().map(|&(u, v)| board.codec().id(u, v)).collect();
                let plan = Plan::new(kind, &ids, board, self.params.epsilon, &mut self.stats, spliced);
                self.advance(plan, board)
            }
            None => self.give_up(board),
        }
    }

    fn forfeit_stage(&self) -> Option<String> {
        self.forfeit.clone()
    }

    fn certificate(&self) -> Option<Certificate> {
        self.cycle.clone().map(Certificate::HamiltonCycle)
    }

    fn plan_stats(&self) -> PlanStats {
        let mut s = self.pm.plan_stats();
        s.merge(&self.stats);
        s
    }

    fn structure_size(&self) -> Option<usize> {
        self.family.as_ref().map(|f| f.len())
    }

    fn check_invariants(&self, board: &Board) -> Result<()> {
        match &self.family {
            None => self.pm.check_invariants(board),
            Some(f) => {
                if let Some(c) = &self.cycle {
                    let n = c.len();
                    if (0..n).any(|i| !board.is_maker(c[i], c[(i + 1) % n])) {
                        return Err(Error::consistency("cycle edge is not Maker's"));
                    }
                    return Ok(());
                }
                f.check_against(board)
            }
        }
    }
}
