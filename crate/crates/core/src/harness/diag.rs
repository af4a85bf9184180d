//! Frequencies of the four structural properties on sampled Breaker graphs.

use serde::Serialize;

use super::coupling::breaker_graph_at;
use super::seeds::trial_seed;
use super::trials::run_indexed;
use crate::edge::pair_count;
use crate::error::Result;
use crate::game::GameConfig;
use crate::strategy::StrategyParams;
use crate::verify::properties::{check_properties, PropertySizes};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiagReport {
    pub n: usize,
    pub epsilon: f64,
    pub bias: usize,
    /// Round after which Breaker's graph is inspected.
    pub round: u32,
    pub trials: u64,
    pub sizes: PropertySizes,
    /// Graphs failing each property, in the order degree, dense set,
    /// wide bipartite, balanced bipartite.
    pub violations: [u64; 4],
    pub frequencies: [f64; 4],
}

/// Inspection round `min(t, floor(p C(n,2) / (b + 1)))`, where `t` is the
/// strategy's full move count.
pub fn inspection_round(cfg: &GameConfig, params: &StrategyParams) -> u32 {
    let t = if cfg.game.uses_hamilton_strategy() {
        params.ham_moves()
    } else {
        params.pm_moves()
    };
    let cap = (params.p * pair_count(cfg.n) as f64 / (cfg.bias + 1) as f64).floor() as usize;
    t.min(cap).max(1) as u32
}

pub fn property_diagnostics(
    cfg: &GameConfig,
    trials: u64,
    master: u64,
    workers: usize,
    k: Option<usize>,
    l: Option<usize>,
) -> Result<DiagReport> {
    cfg.validate()?;
    let params = StrategyParams::new(cfg.n, cfg.epsilon)?;
    let sizes = PropertySizes::new(&params, k, l);
    let round = inspection_round(cfg, &params);
    let reports = run_indexed(trials, workers, |j| {
        let mut c = cfg.clone();
        c.seed = trial_seed(master, j);
        check_properties(&breaker_graph_at(&c, round)?, &sizes)
    })?;
    let mut violations = [0u64; 4];
    for r in &reports {
        let ok = [r.degree_bounded, r.no_dense_set, r.no_wide_bipartite, r.no_balanced_bipartite];
        for (v, good) in violations.iter_mut().zip(ok) {
            *v += u64::from(!good);
        }
    }
    Ok(DiagReport {
        n: cfg.n,
        epsilon: cfg.epsilon,
        bias: cfg.bias,
        round,
        trials,
        sizes,
        violations,
        frequencies: violations.map(|v| v as f64 / trials.max(1) as f64),
    })
}
