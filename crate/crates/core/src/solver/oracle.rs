//! Exact subset-sum procedures used as oracles, fallbacks and baselines.

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::instance::{normalize, Instance, Normalized};
use crate::set::SumSet;

/// Largest target the bitset DP will allocate for (1 GiB of bits).
pub const DP_TARGET_LIMIT: u64 = 1 << 33;

/// Largest `n` accepted by [`brute_force`].
pub const BRUTE_FORCE_LIMIT: usize = 25;

/// `S(items) ∩ [0, cap_hi]`, exactly, by word-packed DP.
pub fn bounded_subset_sums(items: &[u64], cap_hi: u64) -> SumSet {
    let mut bits = Bitset::new(cap_hi as usize + 1);
    bits.set(0);
    for &x in items {
        if x <= cap_hi {
            bits.or_shifted(x as usize);
        }
    }
    SumSet::from_sorted(bits.ones().map(|i| i as u64).collect())
}

/// Exact decision by bitset DP over `[0, t]` after normalization.
pub fn fallback_dp(instance: &Instance) -> Result<bool> {
    let inst = match normalize(instance) {
        Normalized::TriviallyYes => return Ok(true),
        Normalized::TriviallyNo => return Ok(false),
        Normalized::Reduced { instance, .. } => instance,
    };
    if inst.target() > DP_TARGET_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "bitset DP over t = {} exceeds {DP_TARGET_LIMIT}",
            inst.target()
        )));
    }
    Ok(bitset_dp_raw(inst.items(), inst.target()))
}

/// Bitset DP with no normalization and no size guard.
pub fn bitset_dp_raw(items: &[u64], t: u64) -> bool {
    let mut bits = Bitset::new(t as usize + 1);
    bits.set(0);
    for &x in items {
        bits.or_shifted(x as usize);
        if bits.get(t as usize) {
            return true;
        }
    }
    bits.get(t as usize)
}

/// Bellman's table, one boolean per reachable sum.
pub fn textbook_dp(items: &[u64], t: u64) -> bool {
    let t = t as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for &x in items {
        let x = x as usize;
        if x > t {
            continue;
        }
        for s in (x..=t).rev() {
            if reach[s - x] {
                reach[s] = true;
            }
        }
    }
    reach[t]
}

fn all_sums(items: &[u64]) -> Vec<u64> {
    let mut sums = Vec::with_capacity(1 << items.len());
    sums.push(0);
    for &x in items {
        for i in 0..sums.len() {
            sums.push(sums[i] + x);
        }
    }
    sums
}

/// Exhaustive decision; meet-in-the-middle above 20 items.
pub fn brute_force(instance: &Instance) -> Result<bool> {
    let items = instance.items();
    let t = instance.target();
    if items.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "brute force needs n <= {BRUTE_FORCE_LIMIT}, got {}",
            items.len()
        )));
    }
    if items.len() <= 20 {
        return Ok(all_sums(items).contains(&t));
    }
    let (left, right) = items.split_at(items.len() / 2);
    let mut r = all_sums(right);
    r.sort_unstable();
    Ok(all_sums(left)
        .into_iter()
        .any(|s| s <= t && r.binary_search(&(t - s)).is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(items: &[u64], t: u64) -> Instance {
        Instance::new(items.to_vec(), t).unwrap()
    }

    #[test]
    fn bounded_examples() {
        assert_eq!(
            bounded_subset_sums(&[3, 5, 8], 16),
            SumSet::new(vec![0, 3, 5, 8, 11, 13, 16])
        );
        assert_eq!(bounded_subset_sums(&[], 10), SumSet::zero());
        assert_eq!(bounded_subset_sums(&[2, 2], 4), SumSet::new(vec![0, 2, 4]));
        assert_eq!(bounded_subset_sums(&[7, 1], 5), SumSet::new(vec![0, 1]));
    }

    #[test]
    fn decision_examples() {
        assert!(!fallback_dp(&inst(&[1, 2, 5], 4)).unwrap());
        assert!(fallback_dp(&inst(&[1, 2, 5], 8)).unwrap());
        assert!(fallback_dp(&inst(&[3, 5, 8], 8)).unwrap());
        assert!(!fallback_dp(&inst(&[2, 4, 6], 5)).unwrap());
        assert!(!brute_force(&inst(&[1, 2, 5], 4)).unwrap());
        assert!(brute_force(&inst(&[1, 2, 5], 8)).unwrap());
        assert!(brute_force(&inst(&[1; 26], 3)).is_err());
    }

    #[test]
    fn oracles_agree() {
        let mut rng = crate::rng::RngStream::new(13, b"oracles");
        for _ in 0..300 {
            let n = rng.below(24) as usize;
            let w = 1 + rng.below(60);
            let items: Vec<u64> = (0..n).map(|_| 1 + rng.below(w)).collect();
            let sigma: u64 = items.iter().sum();
            let t = rng.below(sigma + 3);
            let i = inst(&items, t);
            let want = brute_force(&i).unwrap();
            assert_eq!(fallback_dp(&i).unwrap(), want);
            assert_eq!(bitset_dp_raw(&items, t), want);
            assert_eq!(textbook_dp(&items, t), want);
        }
    }
}
