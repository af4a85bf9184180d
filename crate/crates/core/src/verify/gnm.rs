use rand::Rng;

use super::graph::SimpleGraph;
use crate::edge::{pair_count, EdgeId};
use crate::error::{Error, Result};

/// Uniformly random graph with exactly `m` edges.
pub fn sample_gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<SimpleGraph> {
    let total = pair_count(n);
    if m > total {
        return Err(Error::param(format!("m = {m} exceeds C({n}, 2) = {total}")));
    }
    let ids = rand::seq::index::sample(rng, total, m);
    Ok(SimpleGraph::from_edge_ids(n, ids.into_iter().map(|i| EdgeId(i as u32))))
}
