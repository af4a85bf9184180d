use super::graph::SimpleGraph;
use super::guard_subsets;
use crate::error::Result;

/// Whether some `k` vertices induce at least `C(k,2) - k/2` edges.
/// Exact search; refused when `C(n,k)` exceeds the search limit.
pub fn has_dense_kset(g: &SimpleGraph, k: usize) -> Result<bool> {
    let n = g.n();
    if k > n {
        return Ok(false);
    }
    guard_subsets(n, k, "dense k-set search")?;
    // 2 * edges >= k(k-1) - k
    let need2 = (k * k.saturating_sub(1)).saturating_sub(k);
    let mut chosen = Vec::with_capacity(k);
    Ok(search(g, k, need2, 0, 0, &mut chosen))
}

fn search(
    g: &SimpleGraph,
    k: usize,
    need2: usize,
    from: usize,
    edges: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let c = chosen.len();
    if c == k {
        return 2 * edges >= need2;
    }
    let r = k - c;
    // best case: every remaining vertex adjacent to everything chosen later
    if 2 * (edges + r * (r - 1) / 2 + r * c) < need2 {
        return false;
    }
    for v in from..=g.n() - r {
        let gained = chosen.iter().filter(|&&u| g.has_edge(u, v)).count();
        // edges lost so far by this choice can never be regained
        if 2 * (edges + gained + (r - 1) * r.saturating_sub(2) / 2 + (r - 1) * (c + 1)) < need2 {
            continue;
        }
        chosen.push(v);
        let found = search(g, k, need2, v + 1, edges + gained, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn examples() {
        assert!(has_dense_kset(&SimpleGraph::complete(5), 4).unwrap());
        let pm = SimpleGraph::from_edges(8, (0..4).map(|i| (2 * i, 2 * i + 1))).unwrap();
        assert!(!has_dense_kset(&pm, 4).unwrap());
        let mut k4 = SimpleGraph::complete(4);
        k4 = SimpleGraph::from_edges(4, k4.edges().into_iter().filter(|&e| e != (0, 1))).unwrap();
        assert_eq!(k4.edge_count(), 5);
        assert!(has_dense_kset(&k4, 4).unwrap());
    }

    #[test]
    fn too_large_is_refused() {
        assert!(matches!(has_dense_kset(&SimpleGraph::new(200), 8), Err(Error::Scope(_))));
    }
}
