//! Maker's strategies and the pending-move mechanism they share.

mod greedy;
mod ham;
mod params;
mod paths;
mod pm;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

pub use greedy::GreedyMaker;
pub use ham::{HamStage, HamiltonMaker};
pub use params::StrategyParams;
pub use paths::{DirectedPath, PathFamily, Spliced, Surgery};
pub use pm::{x_plus, x_set, Matching, PerfectMatchingMaker, PmStage};

use crate::board::{Board, Cell};
use crate::edge::EdgeId;
use crate::error::{Error, Result};

/// Counts for one kind of multi-edge move.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MoveStats {
    pub planned: u64,
    pub failed: u64,
    /// Moves planned while at least `eps n^2 / 4` edges were free.
    pub eligible_planned: u64,
    pub eligible_failed: u64,
}

impl MoveStats {
    pub fn merge(&mut self, other: &MoveStats) {
        self.planned += other.planned;
        self.failed += other.failed;
        self.eligible_planned += other.eligible_planned;
        self.eligible_failed += other.eligible_failed;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlanStats {
    pub double: MoveStats,
    pub triple: MoveStats,
    /// Planned edges Maker already owned, taken into use without a claim.
    pub adoptions: u64,
    /// Candidate moves discarded because the path surgery was invalid.
    pub rejected_surgeries: u64,
    /// Constructed helper sets smaller than the size guarantee.
    pub bound_violations: u64,
}

impl PlanStats {
    pub fn merge(&mut self, other: &PlanStats) {
        self.double.merge(&other.double);
        self.triple.merge(&other.triple);
        self.adoptions += other.adoptions;
        self.rejected_surgeries += other.rejected_surgeries;
        self.bound_violations += other.bound_violations;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PlanKind {
    Single,
    Double,
    Triple,
}

/// Edges committed for the coming turns, with the update to apply once
/// the last one is taken.
#[derive(Debug, Clone)]
pub(crate) struct Plan<T> {
    kind: PlanKind,
    eligible: bool,
    pending: VecDeque<EdgeId>,
    pub(crate) update: T,
}

pub(crate) enum Step<T> {
    /// Claim this edge; `Some(update)` when the plan is complete.
    Claim(EdgeId, Option<T>),
    /// A planned edge was taken by Breaker.
    Failed,
}

impl<T> Plan<T> {
    /// A plan for `edges`, recorded in `stats`. Eligible plans start with
    /// at least `eps n^2 / 4` free edges.
    pub(crate) fn new(
        kind: PlanKind,
        edges: &[EdgeId],
        board: &Board,
        epsilon: f64,
        stats: &mut PlanStats,
        update: T,
    ) -> Self {
        let n = board.n() as f64;
        let plan = Plan {
            kind,
            eligible: board.free_count() as f64 >= epsilon * n * n / 4.0,
            pending: edges.iter().copied().collect(),
            update,
        };
        if let Some(s) = plan.stats_mut(stats) {
            s.planned += 1;
            if plan.eligible {
                s.eligible_planned += 1;
            }
        }
        plan
    }

    fn stats_mut<'s>(&self, stats: &'s mut PlanStats) -> Option<&'s mut MoveStats> {
        match self.kind {
            PlanKind::Single => None,
            PlanKind::Double => Some(&mut stats.double),
            PlanKind::Triple => Some(&mut stats.triple),
        }
    }

    /// Next edge of the plan. A planned edge Maker already owns is adopted
    /// and the least-index free edge is claimed in its place.
    pub(crate) fn step(mut self, board: &Board, stats: &mut PlanStats) -> Result<(Step<T>, Option<Self>)> {
        let e = self
            .pending
            .pop_front()
            .ok_or_else(|| Error::consistency("step on an exhausted plan"))?;
        let claim = match board.cell(e) {
            Cell::Breaker => {
                let eligible = self.eligible;
                if let Some(s) = self.stats_mut(stats) {
                    s.failed += 1;
                    if eligible {
                        s.eligible_failed += 1;
                    }
                }
                return Ok((Step::Failed, None));
            }
            Cell::Maker => {
                stats.adoptions += 1;
                board.smallest_free().ok_or(Error::EmptyBoard)?
            }
            Cell::Free => e,
        };
        if self.pending.is_empty() {
            Ok((Step::Claim(claim, Some(self.update)), None))
        } else {
            Ok((Step::Claim(claim, None), Some(self)))
        }
    }
}
