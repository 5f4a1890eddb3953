use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Knobs for [`crate::solve`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Stand-in for the additive-combinatorics constant in the dense
    /// budgets. The true constant is not known; fractional values make the
    /// dense branch reachable on small inputs.
    pub c_ap: f64,
    /// Error parameter `q`; `None` means `min(0.01, 1/(n+t))`.
    pub error_q: Option<f64>,
    pub seed: u64,
    /// Cross-check dense-branch answers and internal invariants.
    pub checked_mode: bool,
    /// Skip the pipeline and answer with the bitset DP.
    pub fallback_only: bool,
    /// Multiplier on the phase-three capping radius.
    pub eta_mult: f64,
    /// Route `t < 100 * w * lg(w)^2` to the exact DP.
    pub small_t_gate: bool,
    /// Largest `n * t` for which checked mode runs the DP oracle.
    pub checked_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            c_ap: 1.0,
            error_q: None,
            seed: 0,
            checked_mode: false,
            fallback_only: false,
            eta_mult: 1.0,
            small_t_gate: true,
            checked_budget: 100_000_000,
        }
    }
}

impl SolverConfig {
    pub fn with_seed(seed: u64) -> Self {
        SolverConfig {
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c_ap.is_finite() && self.c_ap > 0.0) {
            return Err(Error::Config(format!(
                "c_ap must be > 0, got {}",
                self.c_ap
            )));
        }
        if let Some(q) = self.error_q {
            if !(q > 0.0 && q < 1.0) {
                return Err(Error::Config(format!("q must lie in (0, 1), got {q}")));
            }
        }
        if !(self.eta_mult.is_finite() && self.eta_mult > 0.0) {
            return Err(Error::Config(format!(
                "eta multiplier must be > 0, got {}",
                self.eta_mult
            )));
        }
        Ok(())
    }

    pub fn q_for(&self, n: usize, t: u64) -> f64 {
        self.error_q
            .unwrap_or_else(|| f64::min(0.01, 1.0 / (n as f64 + t as f64).max(1.0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_q_rule() {
        let c = SolverConfig::default();
        assert_eq!(c.q_for(10, 40), 0.01);
        assert!((c.q_for(100, 900) - 0.001).abs() < 1e-15);
        let c = SolverConfig {
            error_q: Some(0.2),
            ..c
        };
        assert_eq!(c.q_for(100, 900), 0.2);
    }

    #[test]
    fn validation() {
        assert!(SolverConfig::default().validate().is_ok());
        let bad = SolverConfig {
            error_q: Some(1.0),
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = SolverConfig {
            c_ap: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
