//! Exact comparison of play-sequence distributions on tiny boards.
//!
//! The uniform side is computed by walking the game tree: a Breaker claim
//! at sequence position `j` (1-based) has probability `1 / (N - j + 1)`.
//! The permutation side plays every one of the `N!` orders once.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::board::{Board, Claim, Owner};
use crate::breaker::{PermutationBreaker, PermutationState, SmallestFreeBreaker};
use crate::edge::{pair_count, EdgeId};
use crate::error::{Error, Result};
use crate::game::{run_game, BreakerStrategy, GameConfig, GameKind, GameRng, MakerStrategy, NoObserver, StopPolicy};

use rand::SeedableRng;

pub type Prob = Ratio<i128>;
pub type MakerFactory<'a> = dyn Fn() -> Result<Box<dyn MakerStrategy>> + 'a;

/// Largest `n` accepted by the enumeration.
pub const EQUIV_MAX_N: usize = 4;

/// Distribution the uniform model is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alternative {
    Permutation,
    SmallestFree,
}

type Sequence = Vec<(u32, Owner)>;

fn key(claims: &[Claim]) -> Sequence {
    claims.iter().map(|c| (c.edge.0, c.owner)).collect()
}

fn sequence_length(n: usize, b: usize, rounds: Option<usize>) -> usize {
    let total = pair_count(n);
    rounds.map_or(total, |r| (r * (b + 1)).min(total))
}

/// Maker's move after `prefix`, replaying a fresh strategy along it.
fn maker_after(n: usize, factory: &MakerFactory, prefix: &[Claim]) -> Result<EdgeId> {
    let mut maker = factory()?;
    let mut board = Board::new(n)?;
    for c in prefix {
        if c.owner == Owner::Maker {
            let e = maker.next_move(&board)?;
            if e != c.edge {
                return Err(Error::consistency("maker strategy is not deterministic"));
            }
        }
        board.claim(c.owner, c.edge)?;
    }
    maker.next_move(&board)
}

fn uniform_tree(
    n: usize,
    b: usize,
    len: usize,
    factory: &MakerFactory,
    board: &mut Board,
    prob: Prob,
    out: &mut BTreeMap<Sequence, Prob>,
) -> Result<()> {
    let pos = board.play_sequence().len();
    if pos == len {
        *out.entry(key(board.play_sequence())).or_insert_with(Prob::zero) += prob;
        return Ok(());
    }
    if pos.is_multiple_of(b + 1) {
        let e = maker_after(n, factory, board.play_sequence())?;
        let mut next = board.clone();
        next.claim(Owner::Maker, e)?;
        return uniform_tree(n, b, len, factory, &mut next, prob, out);
    }
    let free: Vec<EdgeId> = board.free_edges().collect();
    let p = prob / Prob::from_integer(free.len() as i128);
    for e in free {
        let mut next = board.clone();
        next.claim(Owner::Breaker, e)?;
        uniform_tree(n, b, len, factory, &mut next, p, out)?;
    }
    Ok(())
}

/// Play-sequence distribution under uniform Breaker play.
pub fn uniform_distribution(n: usize, b: usize, rounds: Option<usize>, factory: &MakerFactory) -> Result<BTreeMap<Sequence, Prob>> {
    guard(n, b)?;
    let mut out = BTreeMap::new();
    let mut board = Board::new(n)?;
    uniform_tree(n, b, sequence_length(n, b, rounds), factory, &mut board, Prob::one(), &mut out)?;
    Ok(out)
}

fn played_sequence(n: usize, b: usize, len: usize, factory: &MakerFactory, breaker: &mut dyn BreakerStrategy) -> Result<Sequence> {
    let cfg = GameConfig::new(GameKind::MinDegree1, n, b, 0.5, 0)
        .with_stop(StopPolicy::PlayToFull)
        .with_sequence(true);
    let mut maker = factory()?;
    let mut rng = GameRng::seed_from_u64(0);
    let rec = run_game(&cfg, maker.as_mut(), breaker, &mut rng, &mut NoObserver)?;
    let seq = rec.play_sequence.expect("sequence recorded");
    Ok(key(&seq[..len]))
}

fn permutations(items: &mut Vec<EdgeId>, k: usize, visit: &mut dyn FnMut(&[EdgeId]) -> Result<()>) -> Result<()> {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit)?;
        items.swap(k, i);
    }
    Ok(())
}

/// Play-sequence distribution of the alternative Breaker model.
pub fn alternative_distribution(
    n: usize,
    b: usize,
    rounds: Option<usize>,
    factory: &MakerFactory,
    alt: Alternative,
) -> Result<BTreeMap<Sequence, Prob>> {
    guard(n, b)?;
    let len = sequence_length(n, b, rounds);
    let mut out = BTreeMap::new();
    match alt {
        Alternative::SmallestFree => {
            let s = played_sequence(n, b, len, factory, &mut SmallestFreeBreaker)?;
            out.insert(s, Prob::one());
        }
        Alternative::Permutation => {
            let mut edges: Vec<EdgeId> = (0..pair_count(n) as u32).map(EdgeId).collect();
            let mut count: i128 = 0;
            permutations(&mut edges, 0, &mut |sigma| {
                let state = PermutationState::from_sigma(sigma.to_vec())?;
                let s = played_sequence(n, b, len, factory, &mut PermutationBreaker::new(state))?;
                *out.entry(s).or_insert_with(Prob::zero) += Prob::one();
                count += 1;
                Ok(())
            })?;
            for p in out.values_mut() {
                *p /= Prob::from_integer(count);
            }
        }
    }
    Ok(out)
}

/// Total-variation distance `1/2 sum |P(s) - Q(s)|`.
pub fn total_variation(p: &BTreeMap<Sequence, Prob>, q: &BTreeMap<Sequence, Prob>) -> Prob {
    let zero = Prob::zero();
    let mut sum = Prob::zero();
    for (s, a) in p {
        sum += (a - q.get(s).unwrap_or(&zero)).abs();
    }
    for (s, b) in q {
        if !p.contains_key(s) {
            sum += b.abs();
        }
    }
    sum / Prob::from_integer(2)
}

/// Exact distance between uniform play and `alt`, over the first `rounds`
/// rounds or the full game.
pub fn equivalence_test(n: usize, b: usize, rounds: Option<usize>, factory: &MakerFactory, alt: Alternative) -> Result<Prob> {
    let p = uniform_distribution(n, b, rounds, factory)?;
    let q = alternative_distribution(n, b, rounds, factory, alt)?;
    Ok(total_variation(&p, &q))
}

fn guard(n: usize, b: usize) -> Result<()> {
    if n > EQUIV_MAX_N {
        return Err(Error::Scope(format!(
            "exact enumeration supports n <= {EQUIV_MAX_N}, got {n}"
        )));
    }
    if n < 3 {
        return Err(Error::param(format!("n must be at least 3, got {n}")));
    }
    if b < 1 {
        return Err(Error::param("breaker bias must be at least 1"));
    }
    Ok(())
}
