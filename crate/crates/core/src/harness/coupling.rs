//! Batch checks relating permutation play to the random graph `G(n, m)`.

use rand::SeedableRng;
use serde::Serialize;

use super::seeds::trial_seed;
use super::trials::run_indexed;
use crate::board::{Board, Owner};
use crate::error::{Error, Result};
use crate::game::{play_observed, BreakerMode, BreakerStrategy, GameConfig, GameObserver, GameRng, StopPolicy};
use crate::verify::{sample_gnm, SimpleGraph};

/// Checks after every round `i` that each Breaker edge has permutation
/// index below `i (b + 1)`.
#[derive(Debug, Clone, Default)]
pub struct CouplingObserver {
    pub bias: usize,
    pub rounds: u64,
    pub violations: u64,
}

impl CouplingObserver {
    pub fn new(bias: usize) -> Self {
        CouplingObserver { bias, ..Default::default() }
    }
}

impl GameObserver for CouplingObserver {
    fn after_round(&mut self, board: &Board, round: u32, breaker: &dyn BreakerStrategy) -> Result<()> {
        let perm = breaker
            .permutation()
            .ok_or_else(|| Error::consistency("coupling check needs permutation play"))?;
        let limit = round as usize * (self.bias + 1);
        let codec = board.codec();
        self.rounds += 1;
        self.violations += board
            .edges_of(Owner::Breaker)
            .filter(|&(u, v)| perm.index_of(codec.id(u, v)) >= limit)
            .count() as u64;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CouplingReport {
    pub games: u64,
    pub rounds: u64,
    pub violations: u64,
}

/// Play `games` permutation games of `cfg` to the full board and count
/// coupling violations.
pub fn coupling_check(cfg: &GameConfig, games: u64, master: u64, workers: usize) -> Result<CouplingReport> {
    let cfg = cfg
        .clone()
        .with_breaker(BreakerMode::Permutation)
        .with_stop(StopPolicy::PlayToFull);
    let per_game = run_indexed(games, workers, |j| {
        let mut c = cfg.clone();
        c.seed = trial_seed(master, j);
        let mut obs = CouplingObserver::new(c.bias);
        play_observed(&c, &mut obs)?;
        Ok((obs.rounds, obs.violations))
    })?;
    Ok(CouplingReport {
        games,
        rounds: per_game.iter().map(|p| p.0).sum(),
        violations: per_game.iter().map(|p| p.1).sum(),
    })
}

/// Snapshot of Breaker's graph after a fixed round.
struct Snapshot {
    round: u32,
    graph: Option<SimpleGraph>,
}

impl GameObserver for Snapshot {
    fn after_round(&mut self, board: &Board, round: u32, _: &dyn BreakerStrategy) -> Result<()> {
        if round == self.round {
            self.graph = Some(SimpleGraph::of_owner(board, Owner::Breaker));
        }
        Ok(())
    }
}

/// Breaker's graph after round `round` of a full game of `cfg`.
pub fn breaker_graph_at(cfg: &GameConfig, round: u32) -> Result<SimpleGraph> {
    let cfg = cfg.clone().with_stop(StopPolicy::PlayToFull);
    let mut snap = Snapshot { round, graph: None };
    play_observed(&cfg, &mut snap)?;
    snap.graph
        .ok_or_else(|| Error::param(format!("the game ends before round {round}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DominationReport {
    pub trials: u64,
    pub round: u32,
    pub edges: usize,
    pub breaker_freq: f64,
    pub gnm_freq: f64,
    /// Standard error of the difference of the two frequencies.
    pub std_err: f64,
    /// `breaker_freq <= gnm_freq + 3 std_err`.
    pub holds: bool,
}

/// Compare how often the increasing property `prop` holds for Breaker's
/// graph after `round` rounds and for `G(n, round (b + 1))`.
pub fn domination_check(
    cfg: &GameConfig,
    round: u32,
    prop: &(dyn Fn(&SimpleGraph) -> bool + Sync),
    trials: u64,
    master: u64,
    workers: usize,
) -> Result<DominationReport> {
    let m = (round as usize * (cfg.bias + 1)).min(crate::edge::pair_count(cfg.n));
    let hits = run_indexed(trials, workers, |j| {
        let mut c = cfg.clone();
        c.seed = trial_seed(master, j);
        let breaker = prop(&breaker_graph_at(&c, round)?);
        let mut rng = GameRng::seed_from_u64(trial_seed(!master, j));
        let random = prop(&sample_gnm(c.n, m, &mut rng)?);
        Ok((breaker, random))
    })?;
    let t = trials as f64;
    let p = hits.iter().filter(|h| h.0).count() as f64 / t;
    let q = hits.iter().filter(|h| h.1).count() as f64 / t;
    let se = ((p * (1.0 - p) + q * (1.0 - q)) / t).sqrt();
    Ok(DominationReport {
        trials,
        round,
        edges: m,
        breaker_freq: p,
        gnm_freq: q,
        std_err: se,
        holds: p <= q + 3.0 * se,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::GameKind;
    use crate::verify::max_degree;

    #[test]
    fn permutation_games_satisfy_coupling() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 12, 4, 0.45, 0);
        let r = coupling_check(&cfg, 20, 5, 1).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.rounds >= 20 * 66 / 5);
    }

    #[test]
    fn coupling_needs_permutation_breaker() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 6, 1, 0.45, 0);
        let mut obs = CouplingObserver::new(1);
        assert!(play_observed(&cfg, &mut obs).is_err());
    }

    #[test]
    fn snapshot_has_round_edges() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 20, 5, 0.45, 9);
        let g = breaker_graph_at(&cfg, 3).unwrap();
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn degree_domination() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 30, 10, 0.45, 0);
        let r = domination_check(&cfg, 8, &|g| max_degree(g) >= 12, 200, 1, 1).unwrap();
        assert!(r.holds, "{r:?}");
    }
}
