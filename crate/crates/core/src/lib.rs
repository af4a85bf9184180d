//! Half-random biased Maker-Breaker games on the edges of `K_n`.
//!
//! A deterministic Maker plays against a Breaker that claims uniformly
//! random free edges. Maker's strategies build a perfect matching or a
//! Hamilton cycle in `n/2 + O(log n)` or `n + O(log n)` moves; the harness
//! estimates win probabilities across biases.

pub mod board;
pub mod breaker;
pub mod edge;
pub mod error;
pub mod game;
mod goal;
pub mod harness;
pub mod strategy;
pub mod verify;

pub use board::{Board, Cell, Claim, Owner};
pub use breaker::{PermutationBreaker, PermutationState, SmallestFreeBreaker, UniformBreaker};
pub use edge::{edge_index, pair_count, EdgeCodec, EdgeId};
pub use error::{Error, Result};
pub use game::{
    maker_for, play, play_observed, run_game, BreakerMode, BreakerStrategy, Certificate, GameConfig, GameKind,
    GameObserver, GameRecord, GameRng, MakerStrategy, NoObserver, Outcome, StopPolicy,
};
pub use strategy::{GreedyMaker, HamiltonMaker, PerfectMatchingMaker, PlanStats, StrategyParams};
