//! Observer asserting strategy invariants after every Maker move, and a
//! strategy-blind re-check of recorded wins.

use halfgame::verify::{is_hamilton_cycle, is_perfect_matching, SimpleGraph};
use halfgame::{
    Board, BreakerStrategy, Certificate, GameConfig, GameKind, GameObserver, GameRecord, MakerStrategy, Owner, Result,
};

#[derive(Debug, Default)]
pub struct InvariantObserver {
    pub hamilton: bool,
    pub last_size: Option<usize>,
    pub violations: Vec<String>,
    pub certificate: Option<Certificate>,
    pub moves: u32,
}

impl InvariantObserver {
    pub fn new(game: GameKind) -> Self {
        InvariantObserver { hamilton: game.uses_hamilton_strategy(), ..Default::default() }
    }
}

impl GameObserver for InvariantObserver {
    fn after_maker_move(&mut self, board: &Board, maker: &dyn MakerStrategy) -> Result<()> {
        self.moves += 1;
        if let Err(e) = maker.check_invariants(board) {
            self.violations.push(format!("move {}: {e}", self.moves));
        }
        let size = maker.structure_size();
        if let (Some(prev), Some(now)) = (self.last_size, size) {
            // the path cover loses one path per completed plan; the matching
            // gains one edge
            let ok = if self.hamilton { now == prev || now + 1 == prev } else { now == prev || now == prev + 1 };
            if !ok {
                self.violations.push(format!("move {}: structure size {prev} -> {now}", self.moves));
            }
        }
        if size.is_some() {
            self.last_size = size;
        }
        if let Some(c) = maker.certificate() {
            self.certificate = Some(c);
        }
        Ok(())
    }

    fn after_round(&mut self, _: &Board, _: u32, _: &dyn BreakerStrategy) -> Result<()> {
        Ok(())
    }
}

/// Maker's graph from a recorded play-sequence.
pub fn maker_graph(cfg: &GameConfig, record: &GameRecord) -> SimpleGraph {
    let codec = halfgame::EdgeCodec::new(cfg.n);
    let seq = record.play_sequence.as_ref().expect("sequence recorded");
    SimpleGraph::from_edges(
        cfg.n,
        seq.iter().filter(|c| c.owner == Owner::Maker).map(|c| codec.endpoints(c.edge)),
    )
    .expect("valid edges")
}

/// Problems found when re-checking a finished game without trusting the
/// strategy: a PM outcome must agree with an exact matching, a Hamilton win
/// needs a cycle certificate contained in Maker's graph.
pub fn recheck(cfg: &GameConfig, record: &GameRecord, obs: &InvariantObserver) -> Vec<String> {
    let g = maker_graph(cfg, record);
    let mut out = Vec::new();
    match cfg.game {
        GameKind::PerfectMatching => {
            let has = is_perfect_matching(&g).expect("even n");
            if has != record.is_win() {
                out.push(format!("seed {}: matching checker says {has}", record.seed));
            }
            if record.is_win() {
                // the win is detected at the first Maker move that completes one
                let seq = record.play_sequence.as_ref().expect("sequence recorded");
                let last = seq.iter().rposition(|c| c.owner == Owner::Maker).expect("maker moved");
                let codec = halfgame::EdgeCodec::new(cfg.n);
                let before = SimpleGraph::from_edges(
                    cfg.n,
                    seq[..last].iter().filter(|c| c.owner == Owner::Maker).map(|c| codec.endpoints(c.edge)),
                )
                .expect("valid edges");
                if is_perfect_matching(&before).expect("even n") {
                    out.push(format!("seed {}: win detected late", record.seed));
                }
            }
        }
        GameKind::Hamiltonicity if record.is_win() => match &obs.certificate {
            Some(Certificate::HamiltonCycle(c)) if is_hamilton_cycle(&g, c) => {}
            _ => out.push(format!("seed {}: win without a valid cycle", record.seed)),
        },
        _ => {}
    }
    if record.is_win() && obs.hamilton && !record.forfeited && obs.last_size != Some(1) {
        out.push(format!("seed {}: path cover did not shrink to one path", record.seed));
    }
    out
}
