use std::collections::BTreeMap;

use serde::Serialize;

use crate::game::GameRecord;
use crate::strategy::PlanStats;

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959964;

/// Wilson score interval for `wins` successes in `trials`.
pub fn wilson(wins: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = wins as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0).min(p), (center + half).min(1.0).max(p))
}

/// Weighted least-squares fit that is non-increasing (pool adjacent violators).
pub fn isotonic_decreasing(values: &[f64], weights: &[f64]) -> Vec<f64> {
    assert_eq!(values.len(), weights.len());
    // blocks of (mean, weight, count)
    let mut blocks: Vec<(f64, f64, usize)> = Vec::with_capacity(values.len());
    for (&v, &w) in values.iter().zip(weights) {
        blocks.push((v, w, 1));
        while blocks.len() > 1 {
            let (m2, w2, c2) = blocks[blocks.len() - 1];
            let (m1, w1, c1) = blocks[blocks.len() - 2];
            if m1 >= m2 {
                break;
            }
            let w = w1 + w2;
            let m = if w > 0.0 { (m1 * w1 + m2 * w2) / w } else { (m1 + m2) / 2.0 };
            blocks.truncate(blocks.len() - 2);
            blocks.push((m, w, c1 + c2));
        }
    }
    blocks.into_iter().flat_map(|(m, _, c)| std::iter::repeat_n(m, c)).collect()
}

/// Bias at which a non-increasing curve crosses `level`, interpolated
/// linearly between the last point at or above it and the next point.
pub fn crossing(grid: &[usize], fitted: &[f64], level: f64) -> Option<f64> {
    if grid.len() < 2 {
        return None;
    }
    let i = (0..grid.len() - 1).find(|&i| fitted[i] >= level && fitted[i + 1] < level)?;
    let (x0, x1) = (grid[i] as f64, grid[i + 1] as f64);
    let (y0, y1) = (fitted[i], fitted[i + 1]);
    Some(x0 + (y0 - level) / (y0 - y1) * (x1 - x0))
}

/// Aggregate over the games of one configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialStats {
    pub trials: u64,
    pub wins: u64,
    pub win_rate: f64,
    pub wilson_lo: f64,
    pub wilson_hi: f64,
    /// Over winning games only.
    pub rounds_mean: Option<f64>,
    pub rounds_max: Option<u32>,
    pub forfeits: u64,
    pub forfeit_by_stage: BTreeMap<String, u64>,
    /// Smallest and largest move count among wins without a forfeit.
    pub clean_win_moves: Option<(u32, u32)>,
    pub plans: PlanStats,
}

impl TrialStats {
    pub fn from_records(records: &[GameRecord]) -> Self {
        let trials = records.len() as u64;
        let wins: Vec<&GameRecord> = records.iter().filter(|r| r.is_win()).collect();
        let (lo, hi) = wilson(wins.len() as u64, trials);
        let rounds: Vec<u32> = wins.iter().filter_map(|r| r.win_round).collect();
        let mut forfeit_by_stage = BTreeMap::new();
        let mut plans = PlanStats::default();
        for r in records {
            if let Some(s) = &r.forfeit_stage {
                *forfeit_by_stage.entry(s.clone()).or_insert(0) += 1;
            }
            plans.merge(&r.plans);
        }
        let clean = wins.iter().filter(|r| !r.forfeited).map(|r| r.maker_moves);
        let clean_win_moves = clean.clone().min().zip(clean.max());
        TrialStats {
            trials,
            wins: wins.len() as u64,
            win_rate: if trials == 0 { 0.0 } else { wins.len() as f64 / trials as f64 },
            wilson_lo: lo,
            wilson_hi: hi,
            rounds_mean: (!rounds.is_empty())
                .then(|| rounds.iter().map(|&r| r as f64).sum::<f64>() / rounds.len() as f64),
            rounds_max: rounds.iter().copied().max(),
            forfeits: records.iter().filter(|r| r.forfeited).count() as u64,
            forfeit_by_stage,
            clean_win_moves,
            plans,
        }
    }
}
