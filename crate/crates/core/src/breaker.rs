//! RandomBreaker in its two equivalent forms, plus a deterministic
//! smallest-free player used as a contrast in equivalence tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::board::Board;
use crate::edge::{pair_count, EdgeId};
use crate::error::{Error, Result};
use crate::game::{BreakerStrategy, GameRng};

/// Uniform random free edge.
pub fn uniform_breaker_move<R: Rng + ?Sized>(board: &Board, rng: &mut R) -> Result<EdgeId> {
    board.sample_free(rng).ok_or(Error::EmptyBoard)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct UniformBreaker;

impl BreakerStrategy for UniformBreaker {
    fn next_move(&mut self, board: &Board, rng: &mut GameRng) -> Result<EdgeId> {
        uniform_breaker_move(board, rng)
    }
}

/// A permutation `sigma` of all edges together with a scan cursor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationState {
    sigma: Vec<EdgeId>,
    // index of each edge in sigma
    rank: Vec<u32>,
    cursor: usize,
}

impl PermutationState {
    pub fn from_sigma(sigma: Vec<EdgeId>) -> Result<Self> {
        let mut rank = vec![u32::MAX; sigma.len()];
        for (i, e) in sigma.iter().enumerate() {
            match rank.get_mut(e.index()) {
                Some(r) if *r == u32::MAX => *r = i as u32,
                _ => return Err(Error::param("sigma is not a permutation of the edge set")),
            }
        }
        Ok(PermutationState {
            sigma,
            rank,
            cursor: 0,
        })
    }

    pub fn identity(n: usize) -> Self {
        let sigma = (0..pair_count(n) as u32).map(EdgeId).collect();
        PermutationState::from_sigma(sigma).expect("identity is a permutation")
    }

    pub fn sigma(&self) -> &[EdgeId] {
        &self.sigma
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    /// Position of `e` in `sigma`.
    pub fn index_of(&self, e: EdgeId) -> usize {
        self.rank[e.index()] as usize
    }

    /// Index in `sigma` of the last edge emitted.
    pub fn last_taken_index(&self) -> Option<usize> {
        self.cursor.checked_sub(1)
    }

    /// Text dump of `sigma` as a space-separated list of edge indices.
    pub fn dump(&self) -> String {
        let items: Vec<String> = self.sigma.iter().map(|e| e.0.to_string()).collect();
        items.join(" ")
    }
}

/// Uniformly random permutation of the edges of `K_n`.
pub fn sample_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PermutationState {
    let mut sigma: Vec<EdgeId> = (0..pair_count(n) as u32).map(EdgeId).collect();
    sigma.shuffle(rng);
    PermutationState::from_sigma(sigma).expect("a shuffle is a permutation")
}

/// First free edge of `sigma` at or after the cursor; advances the cursor past it.
pub fn permutation_breaker_move(state: &mut PermutationState, board: &Board) -> Result<EdgeId> {
    if board.is_full() {
        return Err(Error::EmptyBoard);
    }
    while let Some(&e) = state.sigma.get(state.cursor) {
        state.cursor += 1;
        if board.is_free(e) {
            return Ok(e);
        }
    }
    Err(Error::consistency(
        "permutation exhausted while free edges remain",
    ))
}

#[derive(Debug, Clone)]
pub struct PermutationBreaker {
    state: PermutationState,
}

impl PermutationBreaker {
    pub fn new(state: PermutationState) -> Self {
        PermutationBreaker { state }
    }

    pub fn state(&self) -> &PermutationState {
        &self.state
    }
}

impl BreakerStrategy for PermutationBreaker {
    fn next_move(&mut self, board: &Board, _rng: &mut GameRng) -> Result<EdgeId> {
        permutation_breaker_move(&mut self.state, board)
    }

    fn permutation(&self) -> Option<&PermutationState> {
        Some(&self.state)
    }
}

/// Always the least-index free edge. Not random; only a contrast model.
#[derive(Debug, Clone, Copy, Default)]
pub struct SmallestFreeBreaker;

impl BreakerStrategy for SmallestFreeBreaker {
    fn next_move(&mut self, board: &Board, _rng: &mut GameRng) -> Result<EdgeId> {
        board.smallest_free().ok_or(Error::EmptyBoard)
    }
}
