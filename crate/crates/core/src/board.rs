//! Board state: occupancy of every edge of `K_n` plus the play-sequence.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::edge::{EdgeCodec, EdgeId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Owner {
    Maker,
    Breaker,
}

impl fmt::Display for Owner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Owner::Maker => "M",
            Owner::Breaker => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Cell {
    Free = 0,
    Maker = 1,
    Breaker = 2,
}

impl From<Owner> for Cell {
    fn from(o: Owner) -> Self {
        match o {
            Owner::Maker => Cell::Maker,
            Owner::Breaker => Cell::Breaker,
        }
    }
}

/// One entry of the play-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub edge: EdgeId,
    pub owner: Owner,
}

const ABSENT: u32 = u32::MAX;

/// Dense array of free edges with O(1) uniform sampling and O(1) removal
/// (swap-with-last).
#[derive(Debug, Clone)]
struct FreeSet {
    items: Vec<u32>,
    pos: Vec<u32>,
}

impl FreeSet {
    fn full(len: usize) -> Self {
        FreeSet {
            items: (0..len as u32).collect(),
            pos: (0..len as u32).collect(),
        }
    }

    #[inline]
    fn remove(&mut self, e: u32) {
        let p = self.pos[e as usize];
        debug_assert_ne!(p, ABSENT);
        let last = *self.items.last().expect("free set not empty");
        self.items[p as usize] = last;
        self.pos[last as usize] = p;
        self.items.pop();
        self.pos[e as usize] = ABSENT;
    }

    #[inline]
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<u32> {
        if self.items.is_empty() {
            None
        } else {
            Some(self.items[rng.gen_range(0..self.items.len())])
        }
    }
}

#[derive(Debug, Clone)]
pub struct Board {
    codec: EdgeCodec,
    cells: Vec<Cell>,
    free: FreeSet,
    sequence: Vec<Claim>,
    maker_count: usize,
    breaker_count: usize,
    round: u32,
    // every edge below the cursor is occupied
    cursor: usize,
}

impl Board {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::param(format!("board needs n >= 2, got {n}")));
        }
        let codec = EdgeCodec::new(n);
        let m = codec.edge_count();
        Ok(Board {
            codec,
            cells: vec![Cell::Free; m],
            free: FreeSet::full(m),
            sequence: Vec::new(),
            maker_count: 0,
            breaker_count: 0,
            round: 0,
            cursor: 0,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.codec.n()
    }

    #[inline]
    pub fn codec(&self) -> &EdgeCodec {
        &self.codec
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    pub fn cell(&self, e: EdgeId) -> Cell {
        self.cells[e.index()]
    }

    #[inline]
    pub fn cell_at(&self, u: usize, v: usize) -> Cell {
        self.cells[self.codec.id(u, v).index()]
    }

    #[inline]
    pub fn is_free(&self, e: EdgeId) -> bool {
        self.cell(e) == Cell::Free
    }

    #[inline]
    pub fn is_breaker(&self, u: usize, v: usize) -> bool {
        self.cell_at(u, v) == Cell::Breaker
    }

    #[inline]
    pub fn is_maker(&self, u: usize, v: usize) -> bool {
        self.cell_at(u, v) == Cell::Maker
    }

    #[inline]
    pub fn free_count(&self) -> usize {
        self.free.items.len()
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.free.items.is_empty()
    }

    pub fn maker_count(&self) -> usize {
        self.maker_count
    }

    pub fn breaker_count(&self) -> usize {
        self.breaker_count
    }

    /// Index of the current round (1-based once the first round started).
    pub fn round(&self) -> u32 {
        self.round
    }

    pub(crate) fn start_round(&mut self) {
        self.round += 1;
    }

    pub fn play_sequence(&self) -> &[Claim] {
        &self.sequence
    }

    pub fn claim(&mut self, owner: Owner, e: EdgeId) -> Result<()> {
        let idx = e.index();
        if idx >= self.cells.len() || self.cells[idx] != Cell::Free {
            return Err(Error::IllegalMove(e));
        }
        self.cells[idx] = owner.into();
        self.free.remove(e.0);
        self.sequence.push(Claim { edge: e, owner });
        match owner {
            Owner::Maker => self.maker_count += 1,
            Owner::Breaker => self.breaker_count += 1,
        }
        if idx == self.cursor {
            while self.cursor < self.cells.len() && self.cells[self.cursor] != Cell::Free {
                self.cursor += 1;
            }
        }
        Ok(())
    }

    /// Free edge of least index, the forfeit move.
    #[inline]
    pub fn smallest_free(&self) -> Option<EdgeId> {
        (self.cursor < self.cells.len()).then_some(EdgeId(self.cursor as u32))
    }

    /// Uniformly random free edge.
    #[inline]
    pub fn sample_free<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<EdgeId> {
        self.free.sample(rng).map(EdgeId)
    }

    pub fn free_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.free.items.iter().map(|&e| EdgeId(e))
    }

    pub fn edges_of(&self, owner: Owner) -> impl Iterator<Item = (usize, usize)> + '_ {
        let want: Cell = owner.into();
        self.cells
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c == want)
            .map(|(i, _)| self.codec.endpoints(EdgeId(i as u32)))
    }

    /// Degree of `v` in the graph of `owner`.
    pub fn degree(&self, owner: Owner, v: usize) -> usize {
        let want: Cell = owner.into();
        (0..self.n())
            .filter(|&u| u != v && self.cell_at(u, v) == want)
            .count()
    }

    /// Text dump of the play-sequence as `u-v:owner` tokens.
    pub fn sequence_text(&self) -> String {
        sequence_text(&self.codec, &self.sequence)
    }
}

pub fn sequence_text(codec: &EdgeCodec, claims: &[Claim]) -> String {
    let mut out = String::with_capacity(claims.len() * 10);
    for (i, c) in claims.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let (u, v) = codec.endpoints(c.edge);
        out.push_str(&format!("{u}-{v}:{}", c.owner));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn first_claim_is_recorded() {
        let mut b = Board::new(5).unwrap();
        b.claim(Owner::Maker, EdgeId(0)).unwrap();
        assert_eq!(
            b.play_sequence(),
            &[Claim {
                edge: EdgeId(0),
                owner: Owner::Maker
            }]
        );
        assert_eq!(b.sequence_text(), "0-1:M");
    }

    #[test]
    fn double_claim_is_illegal() {
        let mut b = Board::new(5).unwrap();
        b.claim(Owner::Maker, EdgeId(3)).unwrap();
        assert_eq!(b.claim(Owner::Breaker, EdgeId(3)), Err(Error::IllegalMove(EdgeId(3))));
    }

    #[test]
    fn full_board_rejects_claims() {
        let mut b = Board::new(4).unwrap();
        for e in 0..6 {
            b.claim(Owner::Breaker, EdgeId(e)).unwrap();
        }
        assert!(b.is_full());
        assert_eq!(b.smallest_free(), None);
        for e in 0..6 {
            assert!(b.claim(Owner::Maker, EdgeId(e)).is_err());
        }
    }

    #[test]
    fn smallest_free_tracks_claims() {
        let mut b = Board::new(5).unwrap();
        b.claim(Owner::Breaker, EdgeId(1)).unwrap();
        assert_eq!(b.smallest_free(), Some(EdgeId(0)));
        b.claim(Owner::Maker, EdgeId(0)).unwrap();
        assert_eq!(b.smallest_free(), Some(EdgeId(2)));
    }

    #[test]
    fn sampling_only_returns_free_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut b = Board::new(6).unwrap();
        while let Some(e) = b.sample_free(&mut rng) {
            assert!(b.is_free(e));
            b.claim(Owner::Breaker, e).unwrap();
        }
        assert_eq!(b.breaker_count(), 15);
    }
}
