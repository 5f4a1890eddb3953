//! Phase one (layered random grouping of `D`) and phase two (per-group
//! color coding under a dense-or-sparse budget).

mod phase_one;
mod phase_two;

pub use phase_one::{phase_one, GroupFamily};
pub use phase_two::{
    extra_budget_for, phase_two, random_coloring, GroupSumsets, PhaseTwoOutcome, PhaseTwoParams,
    TripRecord, TripSource,
};
