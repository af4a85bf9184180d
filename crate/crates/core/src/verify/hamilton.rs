use super::graph::SimpleGraph;
use crate::error::{Error, Result};

/// Largest `n` for the exact (exponential) Hamiltonicity search.
pub const EXACT_HAMILTON_LIMIT: usize = 20;

/// Exact Hamiltonicity by dynamic programming over vertex subsets.
/// Refused above [`EXACT_HAMILTON_LIMIT`]; use [`is_hamilton_cycle`] there.
pub fn is_hamiltonian(g: &SimpleGraph) -> Result<bool> {
    let n = g.n();
    if n > EXACT_HAMILTON_LIMIT {
        return Err(Error::Scope(format!(
            "exact Hamiltonicity is limited to n <= {EXACT_HAMILTON_LIMIT}, got {n}; supply a cycle certificate"
        )));
    }
    if n < 3 {
        return Ok(false);
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    // ends[mask]: vertices at which a path from 0 covering `mask` can end
    let full = (1usize << n) - 1;
    let mut ends = vec![0u32; 1 << n];
    ends[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 || ends[mask] == 0 {
            continue;
        }
        let mut e = ends[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = nbr[v] & !(mask as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << u] |= 1 << u;
            }
        }
    }
    Ok(ends[full] & nbr[0] != 0)
}

/// Whether `cycle` lists every vertex exactly once with all consecutive
/// pairs, including the closing one, being edges of `g`.
pub fn is_hamilton_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let n = g.n();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}
