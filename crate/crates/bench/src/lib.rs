//! Seeded inputs shared by the benchmarks.

use ssum_core::{rng_stream, Instance, SumSet};

/// `len` distinct-ish values drawn uniformly from `[0, max]`.
pub fn random_set(seed: u64, len: usize, max: u64) -> SumSet {
    let mut rng = rng_stream(seed, b"bench-set");
    SumSet::new((0..len).map(|_| rng.range_inclusive(0, max)).collect())
}

/// `n` items uniform in `[1, w]` with one item pinned to `w`.
pub fn uniform_instance(seed: u64, n: usize, w: u64, t: u64) -> Instance {
    let mut rng = rng_stream(seed, b"bench-instance");
    let mut items: Vec<u64> = (0..n).map(|_| rng.range_inclusive(1, w)).collect();
    items[0] = w;
    Instance::new(items, t).expect("bench instance is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_seeded() {
        assert_eq!(random_set(1, 50, 1000), random_set(1, 50, 1000));
        let inst = uniform_instance(2, 30, 64, 100);
        assert_eq!((inst.n(), inst.w()), (30, 64));
    }
}
