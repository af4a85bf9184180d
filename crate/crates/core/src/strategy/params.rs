use serde::Serialize;

use crate::error::{Error, Result};

/// Constants driving both of Maker's strategies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StrategyParams {
    pub n: usize,
    pub epsilon: f64,
    /// `1 - eps/2`.
    pub p: f64,
    /// `4 ceil(ln n / ln(1/p))`.
    pub k: usize,
    /// `8 ceil(1 / (eps ln(1/p)))`.
    pub l: usize,
    /// `max(k, l + 2)`; keeps the double-move stage well defined when `k <= l`.
    pub k_prime: usize,
    /// Single moves build the matching up to this size.
    pub stage1_bound: usize,
    /// Double moves build the matching up to this size.
    pub stage2_bound: usize,
    /// `floor(n/2)`, the size of a (near-)perfect matching.
    pub target: usize,
}

impl StrategyParams {
    pub fn new(n: usize, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon <= 0.5) {
            return Err(Error::param(format!("epsilon must lie in (0, 1/2], got {epsilon}")));
        }
        if n < 3 {
            return Err(Error::param(format!("n must be at least 3, got {n}")));
        }
        let p = 1.0 - epsilon / 2.0;
        let inv = (1.0 / p).ln();
        let k = 4 * ((n as f64).ln() / inv).ceil() as usize;
        let l = 8 * (1.0 / (epsilon * inv)).ceil() as usize;
        let k_prime = k.max(l + 2);
        let target = n / 2;
        let stage1_bound = (n.saturating_sub(k_prime) / 2).clamp(target.min(2), target);
        let stage2_bound = (n.saturating_sub(l) / 2).clamp(stage1_bound, target);
        Ok(StrategyParams {
            n,
            epsilon,
            p,
            k,
            l,
            k_prime,
            stage1_bound,
            stage2_bound,
            target,
        })
    }

    /// Maker moves of the matching strategy when nothing fails.
    pub fn pm_moves(&self) -> usize {
        self.stage1_bound
            + 2 * (self.stage2_bound - self.stage1_bound)
            + 3 * (self.target - self.stage2_bound)
    }

    /// Maker moves of the Hamilton-cycle strategy when nothing fails.
    pub fn ham_moves(&self) -> usize {
        let i0 = self.target;
        let odd = self.n % 2;
        let single = i0.saturating_sub(self.k_prime);
        let double = i0.min(self.k_prime).saturating_sub(self.l);
        let triple = i0.min(self.l).saturating_sub(1);
        self.pm_moves() + odd + single + 2 * double + 3 * triple + 3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let p = StrategyParams::new(500, 0.4).unwrap();
        assert!((p.p - 0.8).abs() < 1e-12);
        assert_eq!((p.k, p.l), (112, 96));

        let p = StrategyParams::new(2000, 0.5).unwrap();
        assert!((p.p - 0.75).abs() < 1e-12);
        assert_eq!((p.k, p.l, p.k_prime), (108, 56, 108));
        assert_eq!((p.stage1_bound, p.stage2_bound), (946, 972));
        assert_eq!(p.pm_moves(), 1082);
        assert_eq!(p.pm_moves(), (2000 + 108 + 56) / 2);
        assert_eq!(p.ham_moves(), 1082 + (1000 - 108) + 2 * (108 - 56) + 3 * (56 - 1) + 3);
        assert_eq!(p.ham_moves(), 2246);
    }

    #[test]
    fn small_epsilon_degeneracy() {
        let p = StrategyParams::new(1000, 0.2).unwrap();
        assert_eq!((p.k, p.l), (264, 384));
        assert!(p.k < p.l);
        assert_eq!(p.k_prime, 386);
        assert!(p.stage2_bound - p.stage1_bound <= 1);
    }

    #[test]
    fn bounds_are_ordered() {
        for n in 3..300 {
            for eps in [0.05, 0.2, 0.45, 0.5] {
                let p = StrategyParams::new(n, eps).unwrap();
                assert!(p.p >= 0.75 && p.p < 1.0);
                assert!(p.k > 0 && p.l > 0 && p.l.is_multiple_of(8));
                assert!(p.stage1_bound <= p.stage2_bound && p.stage2_bound <= p.target);
                assert!(p.stage1_bound >= p.target.min(2));
            }
        }
    }

    #[test]
    fn rejects_bad_epsilon() {
        assert!(StrategyParams::new(100, 0.0).is_err());
        assert!(StrategyParams::new(100, 0.6).is_err());
        assert!(StrategyParams::new(100, f64::NAN).is_err());
    }
}
