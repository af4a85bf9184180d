//! Monte Carlo harness: seeded trial farming, bias sweeps with threshold
//! estimation, exact equivalence checks, coupling checks and structural
//! diagnostics.

pub mod coupling;
pub mod diag;
pub mod equiv;
pub mod output;
pub mod seeds;
pub mod stats;
pub mod trials;

pub use coupling::{breaker_graph_at, coupling_check, domination_check, CouplingObserver, CouplingReport, DominationReport};
pub use diag::{inspection_round, property_diagnostics, DiagReport};
pub use equiv::{equivalence_test, Alternative, MakerFactory, Prob, EQUIV_MAX_N};
pub use output::{sidecar_path, sweep_csv, sweep_json, CSV_HEADER, SWEEP_SCHEMA};
pub use seeds::{splitmix64, trial_seed};
pub use stats::{crossing, isotonic_decreasing, wilson, TrialStats};
pub use trials::{bias_sweep, parse_grid, run_indexed, run_records, run_trials, trivial_bound, SweepResult};
