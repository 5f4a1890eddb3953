//! Phase three (permuted tree merging with interval capping), dense
//! evidence assembly and the diagnostic generator selector.

mod evidence;
mod phase_three;
mod selector;

pub use evidence::{assemble_dense_evidence, DenseEvidence};
pub use phase_three::{phase_three, PhaseThreeOutcome, PhaseThreeParams};
pub use selector::select_ap_generators;
