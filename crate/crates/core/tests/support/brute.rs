//! Exhaustive reference implementations for small graphs.

use halfgame::verify::SimpleGraph;

/// All perfect matchings of `K_n` as edge lists, `n` even.
pub fn all_perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn has_perfect_matching(g: &SimpleGraph, pms: &[Vec<(usize, usize)>]) -> bool {
    pms.iter().any(|m| m.iter().all(|&(a, b)| g.has_edge(a, b)))
}

/// Largest matching by trying every edge subset recursively.
pub fn max_matching_size(g: &SimpleGraph) -> usize {
    fn rec(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(a, b), rest)) => {
                let skip = rec(rest, used);
                if used[a] || used[b] {
                    return skip;
                }
                used[a] = true;
                used[b] = true;
                let take = 1 + rec(rest, used);
                used[a] = false;
                used[b] = false;
                skip.max(take)
            }
        }
    }
    rec(&g.edges(), &mut vec![false; g.n()])
}

/// Try every cyclic order starting at vertex 0.
pub fn is_hamiltonian(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut perm: Vec<usize> = (1..n).collect();
    loop {
        let mut ok = g.has_edge(0, perm[0]) && g.has_edge(perm[n - 2], 0);
        for w in perm.windows(2) {
            if !ok {
                break;
            }
            ok = g.has_edge(w[0], w[1]);
        }
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Assign every vertex to A, B or neither and look for complete `A x B`
/// with `|A| = r`, `|B| = q`.
pub fn has_complete_bipartite(g: &SimpleGraph, r: usize, q: usize) -> bool {
    let n = g.n();
    let total = 3usize.pow(n as u32);
    (0..total).any(|mut code| {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for v in 0..n {
            match code % 3 {
                1 => a.push(v),
                2 => b.push(v),
                _ => {}
            }
            code /= 3;
        }
        a.len() == r && b.len() == q && a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y)))
    })
}

/// Some `k`-subset inducing at least `C(k,2) - k/2` edges.
pub fn has_dense_kset(g: &SimpleGraph, k: usize) -> bool {
    let n = g.n();
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        let mut e = 0usize;
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                e += usize::from(g.has_edge(x, y));
            }
        }
        2 * e + k >= k * k.saturating_sub(1)
    })
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for (w, s) in seen.iter_mut().enumerate() {
            if !*s && g.has_edge(v, w) {
                *s = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}
