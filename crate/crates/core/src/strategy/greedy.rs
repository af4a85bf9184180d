use crate::board::{Board, Owner};
use crate::edge::EdgeId;
use crate::error::{Error, Result};
use crate::game::MakerStrategy;

/// Deterministic Maker that claims the free edge whose endpoints have the
/// smallest total Maker degree, least index first.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyMaker;

impl MakerStrategy for GreedyMaker {
    fn next_move(&mut self, board: &Board) -> Result<EdgeId> {
        let mut degree = vec![0usize; board.n()];
        for (u, v) in board.edges_of(Owner::Maker) {
            degree[u] += 1;
            degree[v] += 1;
        }
        board
            .free_edges()
            .min_by_key(|&e| {
                let (u, v) = board.codec().endpoints(e);
                (degree[u] + degree[v], e)
            })
            .ok_or(Error::EmptyBoard)
    }
}
