use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::math::{ceil_sqrt_ratio, floor_sqrt_wt_lg, lg};

use super::divisor::peel_divisors;
use super::residue::{extract_residue_set, split_residue_set};

/// `X = G ⊎ R ⊎ D` with every element of `R ∪ D` divisible by `d`.
///
/// `G` and `R` are small in total; the subset sums of `R / d` reach every
/// residue modulo every `b <= alpha`; `D` carries the bulk of the mass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrdPartition {
    pub d: u64,
    pub alpha: u64,
    pub g_part: Vec<u64>,
    pub r_part: Vec<u64>,
    pub d_part: Vec<u64>,
}

/// Outcome of checking a partition against its guarantees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub multiset_ok: bool,
    pub divisible_ok: bool,
    pub sigma_g: u64,
    /// `sqrt(wt) lg w + w lg w`: the ceiling on `alpha` costs one extra
    /// `w lg w`.
    pub sigma_g_bound: u64,
    pub sigma_r: u64,
    /// `4 ceil(sqrt(t/w)) w lg w`.
    pub sigma_r_bound: u64,
    /// Smallest `b <= alpha` whose residues `S(R/d)` fails to cover.
    pub uncovered_modulus: Option<u64>,
}

impl PartitionReport {
    pub fn holds(&self) -> bool {
        self.multiset_ok
            && self.divisible_ok
            && self.sigma_g <= self.sigma_g_bound
            && self.sigma_r <= self.sigma_r_bound
            && self.uncovered_modulus.is_none()
    }
}

/// Builds the partition with `alpha = ceil(sqrt(t/w))`. With `checked`, the
/// residue-set precondition is verified.
pub fn partition_grd(instance: &Instance, checked: bool) -> Result<GrdPartition> {
    if instance.n() == 0 {
        return Err(Error::EmptyOperand);
    }
    let alpha = ceil_sqrt_ratio(instance.target(), instance.w());
    let peeled = peel_divisors(instance.items(), alpha);
    let d = peeled.d;
    let (r, rest) = if checked && peeled.peeled.len() as u64 > alpha {
        let r = extract_residue_set(&peeled.peeled, alpha, true)?;
        let (r2, rest) = split_residue_set(&peeled.peeled, alpha);
        debug_assert_eq!(r, r2);
        (r2, rest)
    } else {
        split_residue_set(&peeled.peeled, alpha)
    };
    Ok(GrdPartition {
        d,
        alpha,
        g_part: peeled.leftovers,
        r_part: r.into_iter().map(|x| x * d).collect(),
        d_part: rest.into_iter().map(|x| x * d).collect(),
    })
}

impl GrdPartition {
    pub fn sigma_g(&self) -> u64 {
        self.g_part.iter().sum()
    }

    pub fn sigma_r(&self) -> u64 {
        self.r_part.iter().sum()
    }

    pub fn sigma_d(&self) -> u64 {
        self.d_part.iter().sum()
    }

    /// Checks every guarantee against the instance it was built from.
    pub fn check(&self, instance: &Instance) -> PartitionReport {
        let (w, t) = (instance.w(), instance.target());
        let mut all: Vec<u64> = self
            .g_part
            .iter()
            .chain(&self.r_part)
            .chain(&self.d_part)
            .copied()
            .collect();
        all.sort_unstable();
        let mut orig = instance.items().to_vec();
        orig.sort_unstable();
        let divisible_ok = self
            .r_part
            .iter()
            .chain(&self.d_part)
            .all(|x| x % self.d == 0);
        let uncovered_modulus = if divisible_ok {
            let r: Vec<u64> = self.r_part.iter().map(|x| x / self.d).collect();
            (2..=self.alpha).find(|&b| !residue_coverage(&r, b))
        } else {
            None
        };
        let l = lg(w);
        PartitionReport {
            multiset_ok: all == orig,
            divisible_ok,
            sigma_g: self.sigma_g(),
            sigma_g_bound: floor_sqrt_wt_lg(w, t) + w * l,
            sigma_r: self.sigma_r(),
            sigma_r_bound: 4 * ceil_sqrt_ratio(t, w) * w * l,
            uncovered_modulus,
        }
    }
}

/// Whether the subset sums of `items` hit every residue class modulo `b`.
pub fn residue_coverage(items: &[u64], b: u64) -> bool {
    if b <= 1 {
        return true;
    }
    let b = b as usize;
    let mut reach = vec![false; b];
    reach[0] = true;
    let mut count = 1;
    for &x in items {
        let s = (x % b as u64) as usize;
        if s == 0 {
            continue;
        }
        let prev = reach.clone();
        for (r, &on) in prev.iter().enumerate() {
            if on {
                let k = (r + s) % b;
                if !reach[k] {
                    reach[k] = true;
                    count += 1;
                }
            }
        }
        if count == b {
            return true;
        }
    }
    count == b
}
