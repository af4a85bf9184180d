//! Game configuration, records and the turn engine for `(1:b)` games.
//!
//! Maker always moves first. A round is one Maker move followed by `b`
//! Breaker moves; Breaker's last turn is truncated when the board runs out.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::board::{Board, Claim, Owner};
use crate::breaker::{sample_permutation, PermutationBreaker, PermutationState, UniformBreaker};
use crate::edge::{pair_count, EdgeId};
use crate::error::{Error, Result};
use crate::goal::GoalTracker;
use crate::strategy::{HamiltonMaker, PerfectMatchingMaker, PlanStats};

/// RNG driving Breaker. Seeded from `GameConfig::seed`.
pub type GameRng = ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameKind {
    #[serde(rename = "pm")]
    PerfectMatching,
    #[serde(rename = "ham")]
    Hamiltonicity,
    #[serde(rename = "conn")]
    Connectivity,
    #[serde(rename = "mindeg1")]
    MinDegree1,
    #[serde(rename = "mindeg2")]
    MinDegree2,
}

impl GameKind {
    pub const ALL: [GameKind; 5] = [
        GameKind::PerfectMatching,
        GameKind::Hamiltonicity,
        GameKind::Connectivity,
        GameKind::MinDegree1,
        GameKind::MinDegree2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            GameKind::PerfectMatching => "pm",
            GameKind::Hamiltonicity => "ham",
            GameKind::Connectivity => "conn",
            GameKind::MinDegree1 => "mindeg1",
            GameKind::MinDegree2 => "mindeg2",
        }
    }

    /// Edges in a minimal winning set.
    pub fn winning_set_size(self, n: usize) -> usize {
        match self {
            GameKind::PerfectMatching | GameKind::MinDegree1 => n / 2,
            GameKind::Hamiltonicity | GameKind::MinDegree2 => n,
            GameKind::Connectivity => n - 1,
        }
    }

    /// Games played with the Hamiltonicity strategy.
    pub fn uses_hamilton_strategy(self) -> bool {
        matches!(
            self,
            GameKind::Hamiltonicity | GameKind::Connectivity | GameKind::MinDegree2
        )
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GameKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GameKind::ALL
            .into_iter()
            .find(|g| g.label() == s)
            .ok_or_else(|| Error::param(format!("unknown game '{s}' (pm|ham|conn|mindeg1|mindeg2)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BreakerMode {
    /// Uniformly random free edge every move.
    #[default]
    Uniform,
    /// Scan a uniformly random permutation of all edges.
    #[serde(rename = "perm")]
    Permutation,
}

impl FromStr for BreakerMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(BreakerMode::Uniform),
            "perm" => Ok(BreakerMode::Permutation),
            _ => Err(Error::param(format!("unknown breaker mode '{s}' (uniform|perm)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StopPolicy {
    #[default]
    #[serde(rename = "goal")]
    StopAtGoal,
    #[serde(rename = "full")]
    PlayToFull,
}

impl FromStr for StopPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "goal" => Ok(StopPolicy::StopAtGoal),
            "full" => Ok(StopPolicy::PlayToFull),
            _ => Err(Error::param(format!("unknown stop policy '{s}' (goal|full)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GameConfig {
    pub game: GameKind,
    pub n: usize,
    pub bias: usize,
    /// Strategy parameter; independent of the bias actually played.
    pub epsilon: f64,
    pub breaker_mode: BreakerMode,
    pub stop_policy: StopPolicy,
    pub seed: u64,
    /// Keep the play-sequence in the record.
    #[serde(default)]
    pub record_sequence: bool,
}

impl GameConfig {
    pub fn new(game: GameKind, n: usize, bias: usize, epsilon: f64, seed: u64) -> Self {
        GameConfig {
            game,
            n,
            bias,
            epsilon,
            breaker_mode: BreakerMode::Uniform,
            stop_policy: StopPolicy::StopAtGoal,
            seed,
            record_sequence: false,
        }
    }

    pub fn with_breaker(mut self, mode: BreakerMode) -> Self {
        self.breaker_mode = mode;
        self
    }

    pub fn with_stop(mut self, stop: StopPolicy) -> Self {
        self.stop_policy = stop;
        self
    }

    pub fn with_sequence(mut self, record: bool) -> Self {
        self.record_sequence = record;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::param(format!("n must be at least 3, got {}", self.n)));
        }
        if self.bias < 1 {
            return Err(Error::param("breaker bias must be at least 1"));
        }
        if self.game == GameKind::PerfectMatching && !self.n.is_multiple_of(2) {
            return Err(Error::param(format!(
                "the perfect-matching game needs even n, got {}",
                self.n
            )));
        }
        if !(self.epsilon > 0.0 && self.epsilon <= 0.5) {
            return Err(Error::param(format!(
                "epsilon must lie in (0, 1/2], got {}",
                self.epsilon
            )));
        }
        Ok(())
    }

    /// Upper bound on Maker's moves in any game with this `n` and bias.
    pub fn maker_move_budget(&self) -> usize {
        pair_count(self.n).div_ceil(self.bias + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    MakerWin,
    MakerLoss,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GameRecord {
    pub outcome: Outcome,
    pub win_round: Option<u32>,
    pub maker_moves: u32,
    pub forfeited: bool,
    pub forfeit_stage: Option<String>,
    pub seed: u64,
    pub plans: PlanStats,
    #[serde(skip)]
    pub play_sequence: Option<Vec<Claim>>,
}

impl GameRecord {
    pub fn is_win(&self) -> bool {
        self.outcome == Outcome::MakerWin
    }
}

/// Structure a strategy claims to have built inside Maker's graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    PerfectMatching(Vec<(usize, usize)>),
    HamiltonCycle(Vec<usize>),
}

pub trait MakerStrategy {
    /// Maker's next edge. Must be free on `board`.
    fn next_move(&mut self, board: &Board) -> Result<EdgeId>;

    /// Label of the stage in which the strategy forfeited, if it did.
    fn forfeit_stage(&self) -> Option<String> {
        None
    }

    fn certificate(&self) -> Option<Certificate> {
        None
    }

    fn plan_stats(&self) -> PlanStats {
        PlanStats::default()
    }

    /// Size of the maintained structure: matching edges, or number of paths.
    fn structure_size(&self) -> Option<usize> {
        None
    }

    /// Check the strategy's internal structure against the board.
    fn check_invariants(&self, _board: &Board) -> Result<()> {
        Ok(())
    }
}

pub trait BreakerStrategy {
    fn next_move(&mut self, board: &Board, rng: &mut GameRng) -> Result<EdgeId>;

    /// Scan state, for permutation play.
    fn permutation(&self) -> Option<&PermutationState> {
        None
    }
}

/// Hooks called by the engine; used by invariant and coupling checks.
pub trait GameObserver {
    fn after_maker_move(&mut self, _board: &Board, _maker: &dyn MakerStrategy) -> Result<()> {
        Ok(())
    }

    fn after_round(
        &mut self,
        _board: &Board,
        _round: u32,
        _breaker: &dyn BreakerStrategy,
    ) -> Result<()> {
        Ok(())
    }
}

/// Observer that ignores everything.
pub struct NoObserver;

impl GameObserver for NoObserver {}

/// Play one game to completion with the given players.
pub fn run_game(
    cfg: &GameConfig,
    maker: &mut dyn MakerStrategy,
    breaker: &mut dyn BreakerStrategy,
    rng: &mut GameRng,
    observer: &mut dyn GameObserver,
) -> Result<GameRecord> {
    cfg.validate()?;
    let mut board = Board::new(cfg.n)?;
    let mut goal = GoalTracker::new(cfg.game, cfg.n);
    // position of every Maker claim in the play-sequence
    let mut maker_positions: Vec<usize> = Vec::new();
    let mut forfeit_at: Option<(u32, String)> = None;
    let mut win: Option<u32> = None;

    'game: while !board.is_full() {
        board.start_round();

        let e = maker.next_move(&board)?;
        maker_positions.push(board.play_sequence().len());
        board.claim(Owner::Maker, e)?;
        let moves = maker_positions.len() as u32;
        if forfeit_at.is_none() {
            if let Some(stage) = maker.forfeit_stage() {
                forfeit_at = Some((moves, stage));
            }
        }
        observer.after_maker_move(&board, maker)?;

        if win.is_none() {
            let (u, v) = board.codec().endpoints(e);
            goal.add_maker_edge(u, v);
            if let Some(w) = goal.check(&board, maker) {
                win = Some(w);
                if cfg.stop_policy == StopPolicy::StopAtGoal {
                    break 'game;
                }
            }
        }

        for _ in 0..cfg.bias {
            if board.is_full() {
                break;
            }
            let e = breaker.next_move(&board, rng)?;
            board.claim(Owner::Breaker, e)?;
        }
        observer.after_round(&board, board.round(), breaker)?;
    }
    if win.is_none() {
        win = goal.finish(&board, maker);
    }

    let total_moves = maker_positions.len() as u32;
    let maker_moves = match (cfg.stop_policy, win) {
        (StopPolicy::StopAtGoal, Some(w)) => w,
        _ => total_moves,
    };
    let forfeit = forfeit_at.filter(|(at, _)| *at <= maker_moves);
    let play_sequence = cfg.record_sequence.then(|| {
        let seq = board.play_sequence();
        if maker_moves < total_moves {
            seq[..=maker_positions[maker_moves as usize - 1]].to_vec()
        } else {
            seq.to_vec()
        }
    });

    Ok(GameRecord {
        outcome: if win.is_some() {
            Outcome::MakerWin
        } else {
            Outcome::MakerLoss
        },
        win_round: win,
        maker_moves,
        forfeited: forfeit.is_some(),
        forfeit_stage: forfeit.map(|(_, s)| s),
        seed: cfg.seed,
        plans: maker.plan_stats(),
        play_sequence,
    })
}

/// Build Maker's strategy for `cfg.game`.
pub fn maker_for(cfg: &GameConfig) -> Result<Box<dyn MakerStrategy>> {
    if cfg.game.uses_hamilton_strategy() {
        Ok(Box::new(HamiltonMaker::new(cfg.n, cfg.epsilon)?))
    } else {
        Ok(Box::new(PerfectMatchingMaker::new(cfg.n, cfg.epsilon)?))
    }
}

/// Play a game between the strategy for `cfg.game` and `RandomBreaker` in
/// the configured mode. Everything random derives from `cfg.seed`.
pub fn play(cfg: &GameConfig) -> Result<GameRecord> {
    play_observed(cfg, &mut NoObserver)
}

pub fn play_observed(cfg: &GameConfig, observer: &mut dyn GameObserver) -> Result<GameRecord> {
    cfg.validate()?;
    let mut rng = GameRng::seed_from_u64(cfg.seed);
    let mut maker = maker_for(cfg)?;
    match cfg.breaker_mode {
        BreakerMode::Uniform => {
            run_game(cfg, maker.as_mut(), &mut UniformBreaker, &mut rng, observer)
        }
        BreakerMode::Permutation => {
            let state = sample_permutation(&mut rng, cfg.n);
            let mut breaker = PermutationBreaker::new(state);
            run_game(cfg, maker.as_mut(), &mut breaker, &mut rng, observer)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::GreedyMaker;

    fn budget_oracle(n: usize, b: usize) -> usize {
        // Maker's turns sit at positions 1, b+2, 2b+3, ... of the sequence
        let total = pair_count(n);
        (0..).take_while(|r| r * (b + 1) < total).count()
    }

    #[test]
    fn breaker_truncation_fills_board_in_round_one() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 4, 5, 0.5, 3)
            .with_stop(StopPolicy::PlayToFull)
            .with_sequence(true);
        let rec = play(&cfg).unwrap();
        assert_eq!(rec.maker_moves, 1);
        assert_eq!(rec.play_sequence.unwrap().len(), 6);
        assert_eq!(rec.outcome, Outcome::MakerLoss);
    }

    #[test]
    fn counting_budget_forces_pm_loss() {
        assert_eq!(budget_oracle(100, 120), 41);
        for seed in 0..5 {
            let cfg = GameConfig::new(GameKind::PerfectMatching, 100, 120, 0.5, seed)
                .with_stop(StopPolicy::PlayToFull);
            let rec = play(&cfg).unwrap();
            assert_eq!(rec.maker_moves, 41);
            assert_eq!(rec.outcome, Outcome::MakerLoss);
        }
    }

    #[test]
    fn counting_budget_forces_ham_loss() {
        assert_eq!(budget_oracle(100, 75), 66);
        for seed in 0..5 {
            let cfg = GameConfig::new(GameKind::Hamiltonicity, 100, 75, 0.5, seed);
            let rec = play(&cfg).unwrap();
            assert!(rec.maker_moves <= 66);
            assert_eq!(rec.outcome, Outcome::MakerLoss);
        }
    }

    #[test]
    fn turn_schedule_holds_each_round() {
        struct Schedule {
            b: usize,
        }
        impl GameObserver for Schedule {
            fn after_round(&mut self, board: &Board, round: u32, _: &dyn BreakerStrategy) -> Result<()> {
                let i = round as usize;
                if !board.is_full() {
                    assert_eq!(board.maker_count(), i);
                    assert_eq!(board.breaker_count(), i * self.b);
                }
                Ok(())
            }
        }
        let cfg = GameConfig::new(GameKind::MinDegree1, 30, 7, 0.5, 11).with_stop(StopPolicy::PlayToFull);
        let mut maker = GreedyMaker;
        let mut rng = GameRng::seed_from_u64(5);
        let rec = run_game(&cfg, &mut maker, &mut UniformBreaker, &mut rng, &mut Schedule { b: 7 }).unwrap();
        assert_eq!(rec.maker_moves as usize, budget_oracle(30, 7));
    }

    #[test]
    fn replay_is_deterministic() {
        let cfg = GameConfig::new(GameKind::Hamiltonicity, 60, 6, 0.5, 99).with_sequence(true);
        assert_eq!(play(&cfg).unwrap(), play(&cfg).unwrap());
        let perm = cfg.clone().with_breaker(BreakerMode::Permutation);
        assert_eq!(play(&perm).unwrap(), play(&perm).unwrap());
    }

    #[test]
    fn config_validation() {
        assert!(GameConfig::new(GameKind::PerfectMatching, 7, 1, 0.5, 0).validate().is_err());
        assert!(GameConfig::new(GameKind::Hamiltonicity, 7, 1, 0.5, 0).validate().is_ok());
        assert!(GameConfig::new(GameKind::Hamiltonicity, 7, 0, 0.5, 0).validate().is_err());
        assert!(GameConfig::new(GameKind::Hamiltonicity, 7, 1, 0.7, 0).validate().is_err());
        assert_eq!("mindeg2".parse::<GameKind>().unwrap(), GameKind::MinDegree2);
        assert!("foo".parse::<GameKind>().is_err());
    }
}
