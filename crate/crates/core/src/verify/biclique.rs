use super::graph::SimpleGraph;
use super::guard_subsets;
use crate::error::Result;

/// Whether `g` contains `K_{r,q}` on disjoint vertex sets of sizes `r` and `q`.
///
/// Enumerates every `min(r,q)`-subset and intersects neighborhoods; the
/// common neighborhood of a set never meets the set itself.
pub fn has_complete_bipartite(g: &SimpleGraph, r: usize, q: usize) -> Result<bool> {
    let n = g.n();
    let (small, large) = if r <= q { (r, q) } else { (q, r) };
    if small + large > n {
        return Ok(false);
    }
    if small == 0 {
        return Ok(true);
    }
    guard_subsets(n, small, "complete bipartite search")?;
    let words = g.row(0).len();
    let mut common = vec![vec![0u64; words]; small + 1];
    common[0].iter_mut().for_each(|w| *w = u64::MAX);
    Ok(search(g, small, large, 0, 0, &mut common))
}

fn search(
    g: &SimpleGraph,
    small: usize,
    large: usize,
    depth: usize,
    from: usize,
    common: &mut [Vec<u64>],
) -> bool {
    if depth == small {
        let count: u32 = common[depth].iter().map(|w| w.count_ones()).sum();
        return count as usize >= large;
    }
    let remaining = small - depth;
    for v in from..=g.n() - remaining {
        if g.degree(v) < large {
            continue;
        }
        let (done, rest) = common.split_at_mut(depth + 1);
        let next = &mut rest[0];
        let mut count = 0;
        for ((o, &c), &b) in next.iter_mut().zip(&done[depth]).zip(g.row(v)) {
            *o = c & b;
            count += o.count_ones();
        }
        if (count as usize) < large {
            continue;
        }
        if search(g, small, large, depth + 1, v + 1, common) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_k33() {
        let star = SimpleGraph::from_edges(6, (1..6).map(|v| (0, v))).unwrap();
        assert!(has_complete_bipartite(&star, 1, 5).unwrap());
        assert!(has_complete_bipartite(&star, 5, 1).unwrap());
        assert!(!has_complete_bipartite(&star, 2, 2).unwrap());
        let k33 = SimpleGraph::from_edges(
            6,
            (0..3).flat_map(|a| (3..6).map(move |b| (a, b))),
        )
        .unwrap();
        assert!(has_complete_bipartite(&k33, 3, 3).unwrap());
        assert!(!has_complete_bipartite(&k33, 3, 4).unwrap());
    }

    #[test]
    fn clique_contains_balanced_bicliques() {
        let k6 = SimpleGraph::complete(6);
        assert!(has_complete_bipartite(&k6, 3, 3).unwrap());
        assert!(!has_complete_bipartite(&k6, 3, 4).unwrap());
    }
}
