//! Strategy-blind checkers for the winning structures and for the
//! random-graph properties Breaker's graph is expected to have.

mod biclique;
mod dense;
mod gnm;
mod graph;
mod hamilton;
pub mod properties;
mod matching;

pub use biclique::has_complete_bipartite;
pub use dense::has_dense_kset;
pub use gnm::sample_gnm;
pub use graph::{is_connected, max_degree, min_degree, SimpleGraph};
pub use hamilton::{is_hamilton_cycle, is_hamiltonian, EXACT_HAMILTON_LIMIT};
pub use matching::{is_perfect_matching, maximum_matching, maximum_matching_size};

use crate::error::{Error, Result};

/// Largest number of candidate subsets an exact search may enumerate.
pub const SEARCH_LIMIT: u128 = 10_000_000;

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u128::MAX / (n as u128 + 1) {
            return u128::MAX;
        }
    }
    acc
}

pub(crate) fn guard_subsets(n: usize, k: usize, what: &str) -> Result<()> {
    let count = binomial(n, k);
    if count > SEARCH_LIMIT {
        return Err(Error::Scope(format!(
            "{what}: C({n}, {k}) = {count} subsets exceeds the limit of {SEARCH_LIMIT}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(30, 0), 1);
        assert_eq!(binomial(4, 7), 0);
        assert_eq!(binomial(50, 25), 126_410_606_437_752);
    }

    #[test]
    fn guard_refuses_large_searches() {
        assert!(guard_subsets(30, 5, "x").is_ok());
        assert!(matches!(guard_subsets(60, 10, "x"), Err(Error::Scope(_))));
    }
}
