use std::time::Instant;

use serde::Serialize;

use crate::colorcoding::{phase_one, phase_two, PhaseTwoOutcome, PhaseTwoParams};
use crate::config::SolverConfig;
use crate::error::Result;
use crate::instance::{normalize, Instance, Normalized};
use crate::math::{ceil_u64, floor_sqrt_wt_lg, lg, sqrt_wt};
use crate::merge::{
    assemble_dense_evidence, phase_three, DenseEvidence, PhaseThreeOutcome, PhaseThreeParams,
};
use crate::rng::RngStream;
use crate::set::SumSet;
use crate::structure::partition_grd;
use crate::sumset::{cap, sparse_sumset};

use super::oracle::{bounded_subset_sums, fallback_dp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Trivial,
    FallbackDp,
    Sparse,
    Dense,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Trivial => "trivial",
            Branch::FallbackDp => "fallback-dp",
            Branch::Sparse => "sparse",
            Branch::Dense => "dense",
        }
    }
}

/// Which branch decided, and the sizes of the candidate sets it combined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchReport {
    pub branch: Branch,
    pub s_g_size: Option<usize>,
    pub s_r_size: Option<usize>,
    pub s_d_size: Option<usize>,
    pub s_rd_size: Option<usize>,
    /// Size of the final candidate set `S`.
    pub candidate_size: Option<usize>,
    pub evidence: Option<DenseEvidence>,
    pub note: Option<String>,
}

impl BranchReport {
    fn bare(branch: Branch) -> Self {
        BranchReport {
            branch,
            s_g_size: None,
            s_r_size: None,
            s_d_size: None,
            s_rd_size: None,
            candidate_size: None,
            evidence: None,
            note: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionSummary {
    pub d: u64,
    pub alpha: u64,
    pub g_len: usize,
    pub r_len: usize,
    pub d_len: usize,
    pub sigma_g: u64,
    pub sigma_r: u64,
    pub sigma_d: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsSummary {
    pub q: f64,
    pub groups: usize,
    pub phase_two: PhaseTwoParams,
    pub phase_three: PhaseThreeParams,
}

/// Dense-branch cross-check against the exact DP.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckedReport {
    pub raw_decision: Decision,
    pub oracle_decision: Decision,
    pub disagreement: bool,
}

/// Wall-clock time per stage, in nanoseconds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub partition_ns: u64,
    pub small_sets_ns: u64,
    pub phase_one_ns: u64,
    pub phase_two_ns: u64,
    pub phase_three_ns: u64,
    pub combine_ns: u64,
    pub total_ns: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveOutcome {
    pub decision: Decision,
    pub n: usize,
    pub w: u64,
    pub t: u64,
    /// Target actually solved after normalization.
    pub t_reduced: u64,
    pub complemented: bool,
    pub seed: u64,
    pub report: BranchReport,
    pub partition: Option<PartitionSummary>,
    pub params: Option<ParamsSummary>,
    pub checked: Option<CheckedReport>,
    pub timings: Option<Timings>,
}

/// `100 w lg(w)^2`: targets below this go to the exact DP.
pub fn small_t_threshold(w: u64) -> u64 {
    let l = lg(w);
    100u64.saturating_mul(w).saturating_mul(l * l)
}

/// `ceil(5 sqrt(wt) lg w)`, the depth below `t` that `D` must cover.
pub fn window_reach(w: u64, t: u64) -> u64 {
    ceil_u64(5.0 * sqrt_wt(w, t) * lg(w) as f64)
}

/// `[t - floor(sqrt(wt) lg w), t] ∩ dN`.
pub fn dense_interval_set(d: u64, t: u64, w: u64) -> SumSet {
    let lo = t.saturating_sub(floor_sqrt_wt_lg(w, t));
    SumSet::multiples_in(d, lo, t)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum DWindow {
    Sparse(SumSet),
    Dense(DenseEvidence),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DWindowReport {
    pub outcome: DWindow,
    pub params: ParamsSummary,
    pub phase_one_ns: u64,
    pub phase_two_ns: u64,
    pub phase_three_ns: u64,
}

/// Runs phases one to three on `D`. The sparse result is capped to
/// `[t - max(window_reach(w, t), min_reach), t]`.
pub fn solve_d_window(
    d_part: &[u64],
    t: u64,
    w: u64,
    n: usize,
    config: &SolverConfig,
    min_reach: u64,
) -> Result<DWindowReport> {
    let q = config.q_for(n, t);
    let two = PhaseTwoParams::new(n, t, w, q, config.c_ap);
    let three = PhaseThreeParams::new(t, w, &two, config.c_ap, config.eta_mult);

    let clock = Instant::now();
    let mut rng = RngStream::new(config.seed, b"phase-one");
    let groups = phase_one(d_part, t, &mut rng)?;
    let phase_one_ns = clock.elapsed().as_nanos() as u64;
    let params = ParamsSummary {
        q,
        groups: groups.len(),
        phase_two: two.clone(),
        phase_three: three.clone(),
    };

    let clock = Instant::now();
    let mut rng = RngStream::new(config.seed, b"phase-two");
    let sets = match phase_two(&groups, &two, &mut rng)? {
        PhaseTwoOutcome::Sparse(s) => s,
        PhaseTwoOutcome::Dense(trip) => {
            let ev = assemble_dense_evidence(&trip, t, w)?;
            return Ok(DWindowReport {
                outcome: DWindow::Dense(ev),
                params,
                phase_one_ns,
                phase_two_ns: clock.elapsed().as_nanos() as u64,
                phase_three_ns: 0,
            });
        }
    };
    let phase_two_ns = clock.elapsed().as_nanos() as u64;

    let clock = Instant::now();
    let mut rng = RngStream::new(config.seed, b"phase-three");
    let outcome = match phase_three(&sets, &groups, t, &three, &mut rng)? {
        PhaseThreeOutcome::Sparse(root) => {
            let lo = t.saturating_sub(window_reach(w, t).max(min_reach));
            DWindow::Sparse(cap(&root, lo, t)?)
        }
        PhaseThreeOutcome::Dense(trip) => DWindow::Dense(assemble_dense_evidence(&trip, t, w)?),
    };
    Ok(DWindowReport {
        outcome,
        params,
        phase_one_ns,
        phase_two_ns,
        phase_three_ns: clock.elapsed().as_nanos() as u64,
    })
}

fn elapsed_ns(clock: &Instant) -> u64 {
    clock.elapsed().as_nanos() as u64
}

/// Decides whether some subset of the items sums to the target.
///
/// A "yes" from the sparse branch is always correct. A "yes" from the dense
/// branch relies on the density certificate; `checked_mode` re-verifies it
/// with the exact DP when `n * t` is within budget.
pub fn solve(instance: &Instance, config: &SolverConfig) -> Result<SolveOutcome> {
    config.validate()?;
    let start = Instant::now();
    let mut timings = Timings::default();
    let mut out = SolveOutcome {
        decision: Decision::No,
        n: instance.n(),
        w: instance.w(),
        t: instance.target(),
        t_reduced: instance.target(),
        complemented: false,
        seed: config.seed,
        report: BranchReport::bare(Branch::Trivial),
        partition: None,
        params: None,
        checked: None,
        timings: None,
    };
    let inst = match normalize(instance) {
        Normalized::TriviallyYes => {
            out.decision = Decision::Yes;
            return Ok(finish(out, timings, &start));
        }
        Normalized::TriviallyNo => return Ok(finish(out, timings, &start)),
        Normalized::Reduced {
            instance,
            complemented,
        } => {
            out.complemented = complemented;
            instance
        }
    };
    let (t, w, n) = (inst.target(), inst.w(), inst.n());
    out.t_reduced = t;

    if config.fallback_only || (config.small_t_gate && t < small_t_threshold(w)) {
        out.decision = Decision::from_bool(fallback_dp(&inst)?);
        out.report = BranchReport::bare(Branch::FallbackDp);
        out.report.note = Some(if config.fallback_only {
            "fallback requested".to_string()
        } else {
            "small target".to_string()
        });
        return Ok(finish(out, timings, &start));
    }

    let clock = Instant::now();
    let part = partition_grd(&inst, config.checked_mode)?;
    timings.partition_ns = elapsed_ns(&clock);
    let (sigma_g, sigma_r, sigma_d) = (part.sigma_g(), part.sigma_r(), part.sigma_d());
    out.partition = Some(PartitionSummary {
        d: part.d,
        alpha: part.alpha,
        g_len: part.g_part.len(),
        r_len: part.r_part.len(),
        d_len: part.d_part.len(),
        sigma_g,
        sigma_r,
        sigma_d,
    });

    let clock = Instant::now();
    let s_g = bounded_subset_sums(&part.g_part, sigma_g.min(t));
    timings.small_sets_ns = elapsed_ns(&clock);

    let reach = window_reach(w, t).max(sigma_g + sigma_r);
    let lo = t.saturating_sub(reach);

    let mut report = BranchReport::bare(Branch::Sparse);
    report.s_g_size = Some(s_g.len());
    let s_rest_window: Option<SumSet>;
    if 2 * sigma_d < 3 * t {
        // Not enough mass in D for phase one; take S(D) in the window exactly.
        let s_d = cap(&bounded_subset_sums(&part.d_part, t), lo, t)?;
        report.branch = Branch::FallbackDp;
        report.note = Some(format!(
            "sigma(D) = {sigma_d} < 3t/2; window of S(D) computed exactly"
        ));
        report.s_d_size = Some(s_d.len());
        s_rest_window = Some(s_d);
    } else {
        let dw = solve_d_window(&part.d_part, t, w, instance.n(), config, sigma_g + sigma_r)?;
        timings.phase_one_ns = dw.phase_one_ns;
        timings.phase_two_ns = dw.phase_two_ns;
        timings.phase_three_ns = dw.phase_three_ns;
        out.params = Some(dw.params);
        match dw.outcome {
            DWindow::Sparse(s_d) => {
                report.s_d_size = Some(s_d.len());
                s_rest_window = Some(s_d);
            }
            DWindow::Dense(ev) => {
                report.branch = Branch::Dense;
                report.evidence = Some(ev);
                s_rest_window = None;
            }
        }
    }

    let clock = Instant::now();
    let candidate = match s_rest_window {
        Some(s_d) => {
            let s_r = bounded_subset_sums(&part.r_part, sigma_r.min(t));
            report.s_r_size = Some(s_r.len());
            combine(&[&s_g, &s_r, &s_d])?
        }
        None => {
            let s_rd = dense_interval_set(part.d, t, w);
            report.s_rd_size = Some(s_rd.len());
            combine(&[&s_g, &s_rd])?
        }
    };
    timings.combine_ns = elapsed_ns(&clock);
    report.candidate_size = Some(candidate.len());
    let raw = Decision::from_bool(candidate.contains(t));
    out.decision = raw;

    if config.checked_mode
        && report.branch == Branch::Dense
        && raw.is_yes()
        && (n as u128) * (t as u128) <= config.checked_budget as u128
    {
        let oracle = Decision::from_bool(fallback_dp(&inst)?);
        out.checked = Some(CheckedReport {
            raw_decision: raw,
            oracle_decision: oracle,
            disagreement: oracle != raw,
        });
        out.decision = oracle;
    }
    out.report = report;
    Ok(finish(out, timings, &start))
}

/// `A_1 + ... + A_k` restricted to `[0, t]` is all the decision needs, but
/// the full sumset is kept for the size report.
fn combine(parts: &[&SumSet]) -> Result<SumSet> {
    let mut acc = SumSet::zero();
    for p in parts {
        if p.is_empty() {
            return Ok(SumSet::empty());
        }
        acc = sparse_sumset(&acc, p)?;
    }
    Ok(acc)
}

fn finish(mut out: SolveOutcome, mut timings: Timings, start: &Instant) -> SolveOutcome {
    timings.total_ns = elapsed_ns(start);
    out.timings = Some(timings);
    out
}
