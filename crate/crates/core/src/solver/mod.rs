//! End-to-end decision procedure and exact oracles.

mod oracle;
mod pipeline;

pub use oracle::{
    bitset_dp_raw, bounded_subset_sums, brute_force, fallback_dp, textbook_dp, BRUTE_FORCE_LIMIT,
    DP_TARGET_LIMIT,
};
pub use pipeline::{
    dense_interval_set, small_t_threshold, solve, solve_d_window, window_reach, Branch,
    BranchReport, CheckedReport, DWindow, DWindowReport, Decision, ParamsSummary, PartitionSummary,
    SolveOutcome, Timings,
};
