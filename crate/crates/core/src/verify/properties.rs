//! Exact checks of the four structural properties expected of Breaker's
//! graph while Maker's strategies run: bounded maximum degree, no dense
//! `k`-set, and two forbidden complete bipartite subgraphs.

use serde::Serialize;

use super::{has_complete_bipartite, has_dense_kset, max_degree, SimpleGraph};
use crate::error::Result;
use crate::strategy::StrategyParams;

/// Sizes the properties are evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PropertySizes {
    /// Largest allowed degree, `(1 - eps/4) n`.
    pub max_degree: f64,
    /// Size of the forbidden dense set.
    pub k: usize,
    /// `K_{r,q}` of property (iii): `ceil(eps n / 8) x l`.
    pub bipartite_wide: (usize, usize),
    /// Balanced `K_{s,s}` of property (iv), `s = ceil(eps n / (32 l))`.
    pub bipartite_balanced: usize,
}

impl PropertySizes {
    /// Sizes from the strategy parameters, optionally overriding `k` and `l`.
    pub fn new(params: &StrategyParams, k: Option<usize>, l: Option<usize>) -> Self {
        let n = params.n as f64;
        let eps = params.epsilon;
        let k = k.unwrap_or(params.k);
        let l = l.unwrap_or(params.l).max(1);
        let wide = ((eps * n / 8.0).ceil() as usize).max(1);
        let balanced = ((eps * n / (32.0 * l as f64)).ceil() as usize).max(1);
        PropertySizes {
            max_degree: (1.0 - eps / 4.0) * n,
            k,
            bipartite_wide: (wide, l),
            bipartite_balanced: balanced,
        }
    }
}

/// Which properties hold; `true` means the graph has the good behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PropertyReport {
    pub degree_bounded: bool,
    pub no_dense_set: bool,
    pub no_wide_bipartite: bool,
    pub no_balanced_bipartite: bool,
}

impl PropertyReport {
    pub fn all(&self) -> bool {
        self.degree_bounded && self.no_dense_set && self.no_wide_bipartite && self.no_balanced_bipartite
    }
}

/// Evaluate all four properties exactly. Fails with a scope error when a
/// search would be too large.
pub fn check_properties(g: &SimpleGraph, sizes: &PropertySizes) -> Result<PropertyReport> {
    let (r, q) = sizes.bipartite_wide;
    let s = sizes.bipartite_balanced;
    Ok(PropertyReport {
        degree_bounded: max_degree(g) as f64 <= sizes.max_degree,
        no_dense_set: !has_dense_kset(g, sizes.k)?,
        no_wide_bipartite: !has_complete_bipartite(g, r, q)?,
        no_balanced_bipartite: !has_complete_bipartite(g, s, s)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_follow_parameters() {
        let p = StrategyParams::new(2000, 0.5).unwrap();
        let s = PropertySizes::new(&p, None, None);
        assert_eq!(s.k, 108);
        assert_eq!(s.bipartite_wide, (125, 56));
        assert_eq!(s.bipartite_balanced, 1);
        assert_eq!(s.max_degree, 1750.0);
        let s = PropertySizes::new(&p, Some(4), Some(3));
        assert_eq!((s.k, s.bipartite_wide.1), (4, 3));
    }

    #[test]
    fn empty_and_complete_graphs() {
        let p = StrategyParams::new(12, 0.45).unwrap();
        let sizes = PropertySizes::new(&p, Some(4), Some(2));
        assert!(check_properties(&SimpleGraph::new(12), &sizes).unwrap().all());
        let r = check_properties(&SimpleGraph::complete(12), &sizes).unwrap();
        assert!(!r.degree_bounded && !r.no_dense_set && !r.no_wide_bipartite && !r.no_balanced_bipartite);
    }
}
