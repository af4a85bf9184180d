mod support;

use proptest::prelude::*;

use halfgame::{play, play_observed, BreakerMode, GameConfig, GameKind, StopPolicy};
use support::observe::{maker_graph, recheck, InvariantObserver};

fn game_config() -> impl Strategy<Value = GameConfig> {
    (
        prop_oneof![Just(GameKind::PerfectMatching), Just(GameKind::Hamiltonicity)],
        3usize..60,
        any::<u64>(),
        prop_oneof![Just(0.2), Just(0.3), Just(0.45), Just(0.5)],
        prop_oneof![Just(BreakerMode::Uniform), Just(BreakerMode::Permutation)],
        0.0f64..1.2,
    )
        .prop_map(|(game, n, seed, eps, mode, frac)| {
            let n = if game == GameKind::PerfectMatching { n + n % 2 } else { n };
            let bias = ((frac * n as f64) as usize).max(1);
            GameConfig::new(game, n, bias, eps, seed)
                .with_breaker(mode)
                .with_sequence(true)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn strategies_keep_their_invariants(cfg in game_config()) {
        let mut obs = InvariantObserver::new(cfg.game);
        let rec = play_observed(&cfg, &mut obs).unwrap();
        prop_assert!(obs.violations.is_empty(), "{:?}", obs.violations);
        let problems = recheck(&cfg, &rec, &obs);
        prop_assert!(problems.is_empty(), "{:?}", problems);
    }

    #[test]
    fn moves_stay_within_the_budget(cfg in game_config()) {
        let rec = play(&cfg).unwrap();
        prop_assert!(rec.maker_moves as usize <= cfg.maker_move_budget());
        prop_assert_eq!(rec.win_round.is_some(), rec.is_win());
        if rec.forfeited {
            prop_assert!(rec.forfeit_stage.is_some());
        }
        let g = maker_graph(&cfg, &rec);
        prop_assert_eq!(g.edge_count(), rec.maker_moves as usize);
    }

    #[test]
    fn full_play_claims_every_edge(cfg in game_config()) {
        let cfg = cfg.with_stop(StopPolicy::PlayToFull);
        let rec = play(&cfg).unwrap();
        let seq = rec.play_sequence.unwrap();
        let total = cfg.n * (cfg.n - 1) / 2;
        prop_assert_eq!(seq.len(), total);
        let mut ids: Vec<u32> = seq.iter().map(|c| c.edge.0).collect();
        ids.sort_unstable();
        ids.dedup();
        prop_assert_eq!(ids.len(), total);
    }

    #[test]
    fn echoed_config_replays_the_record(cfg in game_config()) {
        let cfg = cfg.with_sequence(false);
        let text = serde_json::to_string(&cfg).unwrap();
        let back: GameConfig = serde_json::from_str(&text).unwrap();
        let a = serde_json::to_string(&play(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&play(&back).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn unopposed_strategies_win_on_schedule() {
    for n in [10usize, 24, 50] {
        let cfg = GameConfig::new(GameKind::PerfectMatching, n, 1, 0.5, 3).with_sequence(true);
        let mut obs = InvariantObserver::new(cfg.game);
        let rec = play_observed(&cfg, &mut obs).unwrap();
        assert!(rec.is_win() && obs.violations.is_empty());
        assert!(recheck(&cfg, &rec, &obs).is_empty());
    }
}
