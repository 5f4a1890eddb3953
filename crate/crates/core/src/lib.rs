//! Randomized subset-sum decision in roughly `sqrt(w t)` time, with the
//! exact procedures it is checked against.
//!
//! The pipeline normalizes the instance, splits the items into a small part
//! `G`, a residue part `R` and a bulk part `D`, and then either computes the
//! subset sums of `D` near `t` through color coding and capped merging, or
//! certifies that `D` is dense, in which case every multiple of the common
//! divisor close to `t` is reachable.

pub mod bitset;
pub mod colorcoding;
pub mod config;
pub mod error;
pub mod instance;
pub mod math;
pub mod merge;
pub mod rng;
pub mod set;
pub mod solver;
pub mod structure;
pub mod sumset;

pub use config::SolverConfig;
pub use error::{Error, Result};
pub use instance::{normalize, Instance, Normalized};
pub use rng::{rng_stream, RngStream};
pub use set::SumSet;
pub use solver::{
    bounded_subset_sums, brute_force, fallback_dp, solve, Branch, BranchReport, Decision,
    SolveOutcome,
};
pub use sumset::{
    cap, dense_sumset, scale, sparse_sumset, sum_if_sparse, sumset_with, unscale,
    LevelBudgetResult, SumsetKernel,
};
