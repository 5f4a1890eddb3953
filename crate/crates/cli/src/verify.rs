//! Oracle sweeps: random instances through the solver and the exact DP.

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Result};
use serde::Serialize;
use ssum_core::{fallback_dp, rng_stream, solve, Branch, Instance, SolverConfig};

use crate::gen::{draw_items, pick_target, Profile, TargetRule};

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySpec {
    pub count: usize,
    pub n_range: (usize, usize),
    pub w_range: (u64, u64),
    pub profile: Profile,
    pub target: TargetRule,
    /// Largest `n * t` the oracle may be asked for.
    pub oracle_budget: u64,
}

impl Default for VerifySpec {
    fn default() -> Self {
        VerifySpec {
            count: 1000,
            n_range: (1, 14),
            w_range: (1, 40),
            profile: Profile::Uniform,
            target: TargetRule::Random,
            oracle_budget: 1 << 32,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerifySummary {
    pub count: usize,
    pub seed: u64,
    pub oracle_yes: usize,
    pub solver_yes: usize,
    pub false_positives_sparse: usize,
    pub false_positives_dense: usize,
    pub false_positives_other: usize,
    pub false_negatives: usize,
    /// False negatives over oracle-yes instances.
    pub false_negative_rate: f64,
    pub false_negative_stderr: f64,
    pub branches: BTreeMap<String, usize>,
    /// Dense-branch yes answers re-verified by the oracle.
    pub checked_fired: usize,
    pub checked_disagreements: usize,
}

impl VerifySummary {
    pub fn false_positives(&self) -> usize {
        self.false_positives_sparse + self.false_positives_dense + self.false_positives_other
    }
}

/// Parses `lo..hi`, `lo..=hi` or a single value into an inclusive range.
pub fn parse_range<T: std::str::FromStr + PartialOrd + Copy>(s: &str) -> Result<(T, T)>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (a.trim().parse()?, b.trim().parse()?)
    } else if let Some((a, b)) = s.split_once("..") {
        (a.trim().parse()?, b.trim().parse()?)
    } else if let Some((a, b)) = s.split_once('-') {
        (a.trim().parse()?, b.trim().parse()?)
    } else {
        let v = s.trim().parse()?;
        (v, v)
    };
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo, hi))
}

/// Draws the `i`-th sweep instance and the seed its solve uses.
pub fn sweep_instance(spec: &VerifySpec, seed: u64, i: usize) -> Result<(Instance, u64)> {
    let mut rng = rng_stream(
        seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
        b"verify",
    );
    let n = rng.range_inclusive(spec.n_range.0 as u64, spec.n_range.1 as u64) as usize;
    let w = rng.range_inclusive(spec.w_range.0, spec.w_range.1);
    let items = draw_items(spec.profile, n, w, &mut rng)?;
    let t = pick_target(spec.target, &items, &mut rng);
    Ok((Instance::new(items, t)?, rng.below(u64::MAX)))
}

pub fn run_verify(spec: &VerifySpec, config: &SolverConfig) -> Result<VerifySummary> {
    ensure!(spec.n_range.0 >= 1, "n range must start at 1 or above");
    ensure!(spec.w_range.0 >= 1, "w range must start at 1 or above");
    let mut s = VerifySummary {
        count: spec.count,
        seed: config.seed,
        ..Default::default()
    };
    for i in 0..spec.count {
        let (inst, solve_seed) = sweep_instance(spec, config.seed, i)?;
        let nt = (inst.n() as u128) * (inst.target().min(inst.sigma()) as u128);
        if nt > spec.oracle_budget as u128 {
            bail!(
                "oracle budget exceeded on instance {i}: n*t = {nt} > {}",
                spec.oracle_budget
            );
        }
        let truth = fallback_dp(&inst)?;
        let cfg = SolverConfig {
            seed: solve_seed,
            ..config.clone()
        };
        let out = solve(&inst, &cfg)?;
        let said = out.decision.is_yes();
        *s.branches
            .entry(out.report.branch.as_str().to_string())
            .or_default() += 1;
        if let Some(c) = &out.checked {
            s.checked_fired += 1;
            s.checked_disagreements += c.disagreement as usize;
        }
        s.oracle_yes += truth as usize;
        s.solver_yes += said as usize;
        match (truth, said) {
            (false, true) => match out.report.branch {
                Branch::Sparse => s.false_positives_sparse += 1,
                Branch::Dense => s.false_positives_dense += 1,
                _ => s.false_positives_other += 1,
            },
            (true, false) => s.false_negatives += 1,
            _ => {}
        }
    }
    if s.oracle_yes > 0 {
        let p = s.false_negatives as f64 / s.oracle_yes as f64;
        s.false_negative_rate = p;
        s.false_negative_stderr = (p * (1.0 - p) / s.oracle_yes as f64).sqrt();
    }
    Ok(s)
}
