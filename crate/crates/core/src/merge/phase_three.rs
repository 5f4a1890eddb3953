use serde::Serialize;

use crate::colorcoding::{GroupFamily, GroupSumsets, TripRecord, TripSource};
use crate::error::Result;
use crate::math::{ceil_u64, lg, sqrt_wt};
use crate::rng::RngStream;
use crate::set::SumSet;
use crate::sumset::{cap, sum_if_sparse, LevelBudgetResult};

use crate::colorcoding::PhaseTwoParams;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseThreeParams {
    /// Capping radius, `ceil(eta_mult * (2304 sqrt(wt) lg^2 w L^3 + 5 sqrt(wt) lg w))`
    /// with `L = log2(2n/q)`.
    pub eta: u64,
    pub u_prime: u64,
    pub rho: u64,
    pub g: u64,
    pub extra: u64,
}

impl PhaseThreeParams {
    pub fn new(t: u64, w: u64, two: &PhaseTwoParams, c_ap: f64, eta_mult: f64) -> Self {
        let l = lg(w) as f64;
        let s = sqrt_wt(w, t);
        let lt = two.log_term;
        let eta = ceil_u64(eta_mult * (2304.0 * s * l * l * lt * lt * lt + 5.0 * s * l));
        let window = ceil_u64(5.0 * s * l);
        // Sets entering a merge are either phase-two outputs (diameter at most
        // g w + 1) or capped nodes (at most 2 eta + 4 wide); their sums bound
        // the diameters of every tripped level.
        let u_prime = eta
            .saturating_mul(4)
            .saturating_add(7)
            .max(2 * two.g * w + 1)
            .max(window);
        let rho = 10 * two.g * lg(w);
        PhaseThreeParams {
            eta,
            u_prime,
            rho,
            g: two.g,
            extra: crate::colorcoding::extra_budget_for(c_ap, rho, u_prime),
        }
    }

    /// `[floor(t/l_h) - eta - 1, ceil(t/l_h) + eta + 1]`, saturating at 0.
    pub fn window(&self, t: u64, l_h: u64) -> (u64, u64) {
        let lo = (t / l_h).saturating_sub(self.eta + 1);
        let hi = t.div_ceil(l_h).saturating_add(self.eta + 1);
        (lo, hi)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum PhaseThreeOutcome {
    Sparse(SumSet),
    Dense(TripRecord),
}

/// Merges the per-group sets in a random order, capping every level to the
/// window around its share of `t`.
pub fn phase_three(
    sets: &GroupSumsets,
    groups: &GroupFamily,
    t: u64,
    params: &PhaseThreeParams,
    rng: &mut RngStream,
) -> Result<PhaseThreeOutcome> {
    let l = sets.sets.len();
    let perm = rng.permutation(l);
    let mut level: Vec<SumSet> = perm.iter().map(|&i| sets.sets[i].clone()).collect();
    let mut f: Vec<u64> = level.iter().map(SumSet::max_or_zero).collect();
    let mut sigma: Vec<u64> = perm.iter().map(|&i| groups.sigma_of(i)).collect();
    let mut h = 0u32;
    while level.len() > 1 {
        h += 1;
        let l_h = (level.len() / 2) as u64;
        f = f.chunks(2).map(|c| c[0] + c[1]).collect();
        sigma = sigma.chunks(2).map(|c| c[0] + c[1]).collect();
        let budget = l_h.saturating_add(params.extra);
        match sum_if_sparse(&level, budget)? {
            LevelBudgetResult::Dense(sig) => {
                let computed = sig.computed;
                return Ok(PhaseThreeOutcome::Dense(TripRecord {
                    source: TripSource::PhaseThree,
                    level: h,
                    observed_total: sig.observed_total_size,
                    threshold: budget,
                    extra: params.extra,
                    rho: params.rho,
                    u_prime: params.u_prime,
                    g: params.g,
                    num_sets: l_h,
                    trivial_sets: 0,
                    uncomputed_sets: l_h - computed.len() as u64,
                    set_sizes: computed.iter().map(|s| s.len() as u64).collect(),
                    set_maxima: computed.iter().map(SumSet::max_or_zero).collect(),
                    max_diameter: computed.iter().map(SumSet::diameter).max().unwrap_or(1),
                    f_values: f,
                    sigma_values: sigma,
                }));
            }
            LevelBudgetResult::Levels(next) => {
                let (lo, hi) = params.window(t, l_h);
                let mut capped = Vec::with_capacity(next.len());
                for b in &next {
                    let c = cap(b, lo, hi)?;
                    if c.is_empty() {
                        return Ok(PhaseThreeOutcome::Sparse(SumSet::empty()));
                    }
                    capped.push(c);
                }
                level = capped;
            }
        }
    }
    Ok(PhaseThreeOutcome::Sparse(
        level.pop().unwrap_or_else(SumSet::zero),
    ))
}
