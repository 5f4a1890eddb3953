//! Number-theoretic preprocessing: factorization, almost divisors, divisor
//! peeling, residue sets and the `G ∪ R ∪ D` partition.

mod divisor;
mod factor;
mod partition;
mod residue;

pub use divisor::{find_almost_divisor, non_divisible_count, peel_divisors, Peeled};
pub use factor::{factorize_all, FactorTable};
pub use partition::{partition_grd, residue_coverage, GrdPartition, PartitionReport};
pub use residue::{extract_residue_set, split_residue_set};
