use rayon::prelude::*;
use serde::Serialize;

use super::seeds::trial_seed;
use super::stats::{crossing, isotonic_decreasing, TrialStats};
use crate::edge::pair_count;
use crate::error::{Error, Result};
use crate::game::{play, GameConfig, GameKind, GameRecord};

/// Run `f(j)` for `j in 0..count` on a pool of `workers` threads and return
/// the results in index order.
pub fn run_indexed<T, F>(count: u64, workers: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync,
{
    if workers <= 1 {
        return (0..count).map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))?;
    pool.install(|| (0..count).into_par_iter().map(&f).collect())
}

/// Play `trials` games of `cfg`, trial `j` seeded from `(master, j)`.
pub fn run_records(cfg: &GameConfig, trials: u64, master: u64, workers: usize) -> Result<Vec<GameRecord>> {
    if trials == 0 {
        return Err(Error::param("trials must be at least 1"));
    }
    cfg.validate()?;
    run_indexed(trials, workers, |j| {
        let mut c = cfg.clone();
        c.seed = trial_seed(master, j);
        play(&c)
    })
}

pub fn run_trials(cfg: &GameConfig, trials: u64, master: u64, workers: usize) -> Result<TrialStats> {
    Ok(TrialStats::from_records(&run_records(cfg, trials, master, workers)?))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepResult {
    pub game: GameKind,
    pub n: usize,
    pub epsilon: f64,
    pub trials: u64,
    pub seed: u64,
    pub bias_grid: Vec<usize>,
    pub stats_per_bias: Vec<TrialStats>,
    /// Isotonic (non-increasing) fit of the win rates.
    pub fitted: Vec<f64>,
    pub estimated_threshold: Option<f64>,
    /// Some later grid point beats an earlier one beyond both Wilson intervals.
    pub non_monotone: bool,
}

/// Win rates over a bias grid. Every grid point reuses the same trial
/// seeds, so neighboring points are positively correlated.
pub fn bias_sweep(base: &GameConfig, grid: &[usize], trials: u64, master: u64, workers: usize) -> Result<SweepResult> {
    if grid.is_empty() {
        return Err(Error::param("bias grid is empty"));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param("bias grid must be strictly increasing"));
    }
    let max = pair_count(base.n);
    if grid[0] < 1 || grid[grid.len() - 1] > max {
        return Err(Error::param(format!("bias grid must lie within [1, {max}]")));
    }
    let mut stats = Vec::with_capacity(grid.len());
    for &b in grid {
        let mut cfg = base.clone();
        cfg.bias = b;
        stats.push(run_trials(&cfg, trials, master, workers)?);
    }
    let rates: Vec<f64> = stats.iter().map(|s| s.win_rate).collect();
    let weights: Vec<f64> = stats.iter().map(|s| s.trials as f64).collect();
    let fitted = isotonic_decreasing(&rates, &weights);
    let non_monotone = stats
        .iter()
        .enumerate()
        .any(|(i, a)| stats[i + 1..].iter().any(|b| b.wilson_lo > a.wilson_hi));
    Ok(SweepResult {
        game: base.game,
        n: base.n,
        epsilon: base.epsilon,
        trials,
        seed: master,
        bias_grid: grid.to_vec(),
        estimated_threshold: crossing(grid, &fitted, 0.5),
        stats_per_bias: stats,
        fitted,
        non_monotone,
    })
}

/// Largest bias at which Maker can still claim a winning set's worth of
/// edges: `floor(C(n,2) / k) - 1`.
pub fn trivial_bound(game: GameKind, n: usize) -> usize {
    (pair_count(n) / game.winning_set_size(n)).saturating_sub(1)
}

/// Parse `start:stop:step`; both ends are included when on the lattice.
pub fn parse_grid(spec: &str) -> Result<Vec<usize>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::param(format!("bias grid '{spec}' is not start:stop:step"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step == 0 || stop < start {
        return Err(bad());
    }
    Ok((start..=stop).step_by(step).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_bounds() {
        assert_eq!(trivial_bound(GameKind::PerfectMatching, 100), 98);
        assert_eq!(trivial_bound(GameKind::Hamiltonicity, 100), 48);
        assert_eq!(trivial_bound(GameKind::Connectivity, 100), 49);
        assert_eq!(trivial_bound(GameKind::MinDegree1, 100), 98);
        assert_eq!(trivial_bound(GameKind::MinDegree2, 100), 48);
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("800:1200:50").unwrap().len(), 9);
        assert_eq!(parse_grid("1:10:4").unwrap(), vec![1, 5, 9]);
        assert_eq!(parse_grid("5:5:1").unwrap(), vec![5]);
        assert!(parse_grid("5:4:1").is_err());
        assert!(parse_grid("1:4:0").is_err());
        assert!(parse_grid("1:4").is_err());
    }

    #[test]
    fn same_seed_same_stats() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 40, 15, 0.45, 0);
        let a = run_trials(&cfg, 8, 3, 1).unwrap();
        let b = run_trials(&cfg, 8, 3, 2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hard_zero_and_easy_win() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 100, 120, 0.45, 0);
        let s = run_trials(&cfg, 20, 1, 1).unwrap();
        assert_eq!(s.wins, 0);
        let cfg = GameConfig::new(GameKind::PerfectMatching, 100, 1, 0.45, 0);
        let s = run_trials(&cfg, 100, 1, 1).unwrap();
        assert_eq!(s.win_rate, 1.0);
    }

    #[test]
    fn single_point_sweep_has_no_threshold() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 20, 1, 0.45, 0);
        let r = bias_sweep(&cfg, &[3], 4, 0, 1).unwrap();
        assert_eq!(r.estimated_threshold, None);
        assert!(bias_sweep(&cfg, &[3, 3], 4, 0, 1).is_err());
    }
}
