//! Sweep output formats.
//!
//! CSV, version 1: UTF-8, `\n` line endings, one header row
//!
//! ```text
//! bias,trials,wins,winRate,wilsonLo,wilsonHi,roundsMean,roundsMax,forfeits
//! ```
//!
//! then one row per grid point in increasing bias. Integers are written in
//! decimal, reals with exactly six fractional digits. `roundsMean` and
//! `roundsMax` are empty when no trial was won.
//!
//! The JSON sidecar is one object: `schema` (`"halfgame-sweep/1"`), `csv`
//! (the CSV header), `config` (game, n, epsilon, trials, seed, breakerMode,
//! stopPolicy, workers), `biasGrid`, `estimatedThreshold` (number or null),
//! `nonMonotone`, `fitted`, `trivialBound` and `statsPerBias`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::trials::{trivial_bound, SweepResult};
use super::stats::TrialStats;
use crate::game::{BreakerMode, StopPolicy};

pub const CSV_HEADER: &str = "bias,trials,wins,winRate,wilsonLo,wilsonHi,roundsMean,roundsMax,forfeits";
pub const SWEEP_SCHEMA: &str = "halfgame-sweep/1";

pub fn csv_row(bias: usize, s: &TrialStats) -> String {
    format!(
        "{},{},{},{:.6},{:.6},{:.6},{},{},{}",
        bias,
        s.trials,
        s.wins,
        s.win_rate,
        s.wilson_lo,
        s.wilson_hi,
        s.rounds_mean.map(|m| format!("{m:.6}")).unwrap_or_default(),
        s.rounds_max.map(|m| m.to_string()).unwrap_or_default(),
        s.forfeits
    )
}

pub fn sweep_csv(r: &SweepResult) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for (b, s) in r.bias_grid.iter().zip(&r.stats_per_bias) {
        writeln!(out, "{}", csv_row(*b, s)).unwrap();
    }
    out
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct SweepConfigEcho {
    game: String,
    n: usize,
    epsilon: f64,
    trials: u64,
    seed: u64,
    breaker_mode: BreakerMode,
    stop_policy: StopPolicy,
    workers: usize,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct Sidecar<'a> {
    schema: &'static str,
    csv: &'static str,
    config: SweepConfigEcho,
    bias_grid: &'a [usize],
    estimated_threshold: Option<f64>,
    non_monotone: bool,
    fitted: &'a [f64],
    trivial_bound: usize,
    stats_per_bias: &'a [TrialStats],
}

pub fn sweep_json(r: &SweepResult, mode: BreakerMode, stop: StopPolicy, workers: usize) -> serde_json::Value {
    let sidecar = Sidecar {
        schema: SWEEP_SCHEMA,
        csv: CSV_HEADER,
        config: SweepConfigEcho {
            game: r.game.label().to_string(),
            n: r.n,
            epsilon: r.epsilon,
            trials: r.trials,
            seed: r.seed,
            breaker_mode: mode,
            stop_policy: stop,
            workers,
        },
        bias_grid: &r.bias_grid,
        estimated_threshold: r.estimated_threshold,
        non_monotone: r.non_monotone,
        fitted: &r.fitted,
        trivial_bound: trivial_bound(r.game, r.n),
        stats_per_bias: &r.stats_per_bias,
    };
    serde_json::to_value(sidecar).expect("sidecar serializes")
}

/// Sidecar path for a CSV path: `x.csv` becomes `x.json`.
pub fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("json")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{GameConfig, GameKind};
    use crate::harness::trials::bias_sweep;

    #[test]
    fn csv_layout() {
        let cfg = GameConfig::new(GameKind::PerfectMatching, 20, 1, 0.45, 0);
        let r = bias_sweep(&cfg, &[1, 150], 4, 0, 1).unwrap();
        let csv = sweep_csv(&r);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[2], "150,4,0,0.000000,0.000000,0.489891,,,0");
        assert!(lines[1].starts_with("1,4,4,1.000000,0.510109,1.000000,"));
        let json = sweep_json(&r, BreakerMode::Uniform, StopPolicy::StopAtGoal, 1);
        assert_eq!(json["schema"], SWEEP_SCHEMA);
        assert_eq!(json["config"]["game"], "pm");
        assert_eq!(json["biasGrid"][1], 150);
        assert_eq!(json["trivialBound"], 18);
        assert_eq!(sidecar_path(Path::new("out/pm.csv")), PathBuf::from("out/pm.json"));
    }
}
