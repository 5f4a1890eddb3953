//! Sumset primitives: FFT sumset, output-sensitive sumset, the budgeted
//! level step of the dense-or-sparse framework, capping and scaling.

mod fft;
mod hashed;
mod ntt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::SumSet;

pub use fft::convolve_real;
pub use hashed::hashed_sumset;

/// Output hulls up to this size go through the dense FFT in [`sparse_sumset`].
pub const DENSE_HULL_LIMIT: u64 = 1 << 22;

/// Which kernel computes a sumset. All of them return the same set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumsetKernel {
    /// Cost-based choice between the three below.
    Auto,
    Pairwise,
    DenseFft,
    Hashed,
}

fn check_operands(a: &SumSet, b: &SumSet) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        Err(Error::EmptyOperand)
    } else {
        Ok(())
    }
}

/// `A + B` by convolving offset-shifted indicator vectors.
pub fn dense_sumset(a: &SumSet, b: &SumSet) -> Result<SumSet> {
    check_operands(a, b)?;
    let (amin, bmin) = (a.min().unwrap(), b.min().unwrap());
    let mut ia = vec![0.0; a.diameter() as usize];
    let mut ib = vec![0.0; b.diameter() as usize];
    for x in a.iter() {
        ia[(x - amin) as usize] = 1.0;
    }
    for y in b.iter() {
        ib[(y - bmin) as usize] = 1.0;
    }
    let c = convolve_real(&ia, &ib);
    let base = amin + bmin;
    Ok(SumSet::from_sorted(
        c.iter()
            .enumerate()
            .filter(|(_, &v)| v > 0.5)
            .map(|(i, _)| base + i as u64)
            .collect(),
    ))
}

/// `A + B` by enumerating all pairs.
pub fn pairwise_sumset(a: &SumSet, b: &SumSet) -> Result<SumSet> {
    check_operands(a, b)?;
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        out.extend(b.iter().map(|y| x + y));
    }
    Ok(SumSet::new(out))
}

/// `A + B` with running time driven by the output size rather than the
/// diameter of the operands.
pub fn sparse_sumset(a: &SumSet, b: &SumSet) -> Result<SumSet> {
    sumset_with(a, b, SumsetKernel::Auto)
}

pub fn sumset_with(a: &SumSet, b: &SumSet, kernel: SumsetKernel) -> Result<SumSet> {
    check_operands(a, b)?;
    match kernel {
        SumsetKernel::Pairwise => pairwise_sumset(a, b),
        SumsetKernel::DenseFft => dense_sumset(a, b),
        SumsetKernel::Hashed => hashed_sumset(a, b),
        SumsetKernel::Auto => {
            if a.len() == 1 || b.len() == 1 {
                let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
                let s = single.min().unwrap();
                return Ok(SumSet::from_sorted(other.iter().map(|y| y + s).collect()));
            }
            let pairs = a.len() as f64 * b.len() as f64;
            let hull = a.diameter() + b.diameter() - 1;
            if pairs <= 4096.0 {
                return pairwise_sumset(a, b);
            }
            if hull <= DENSE_HULL_LIMIT {
                let h = hull as f64;
                if pairs * pairs.log2() <= 2.0 * h * h.log2() {
                    pairwise_sumset(a, b)
                } else {
                    dense_sumset(a, b)
                }
            } else if pairs <= (1u64 << 20) as f64 {
                pairwise_sumset(a, b)
            } else {
                hashed_sumset(a, b)
            }
        }
    }
}

/// `A ∩ [lo, hi]`.
pub fn cap(a: &SumSet, lo: u64, hi: u64) -> Result<SumSet> {
    if lo > hi {
        return Err(Error::InvalidInterval { lo, hi });
    }
    let v = a.values();
    let start = v.partition_point(|&x| x < lo);
    let end = v.partition_point(|&x| x <= hi);
    Ok(SumSet::from_sorted(v[start..end].to_vec()))
}

/// `d * A`.
pub fn scale(a: &SumSet, d: u64) -> Result<SumSet> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    Ok(SumSet::from_sorted(a.iter().map(|x| x * d).collect()))
}

/// `A / d`; every element must be divisible by `d`.
pub fn unscale(a: &SumSet, d: u64) -> Result<SumSet> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    if let Some(x) = a.iter().find(|x| x % d != 0) {
        return Err(Error::NotDivisible {
            value: x,
            divisor: d,
        });
    }
    Ok(SumSet::from_sorted(a.iter().map(|x| x / d).collect()))
}

/// Outcome of one budgeted level step.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum LevelBudgetResult {
    Levels(Vec<SumSet>),
    Dense(DenseSignal),
}

/// The level's total size reached the budget (or the budget was at most
/// half the number of input sets, which forces that).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DenseSignal {
    pub observed_total_size: u64,
    pub budget_k: u64,
    /// Index of the last `B_i` computed, `None` when nothing was computed.
    pub last_index_computed: Option<usize>,
    /// The sets `B_0..=B_last` that were computed before stopping.
    #[serde(skip)]
    pub computed: Vec<SumSet>,
}

/// Computes `B_i = A_{2i} + A_{2i+1}` left to right, stopping as soon as the
/// accumulated size reaches `budget_k`.
pub fn sum_if_sparse(sets: &[SumSet], budget_k: u64) -> Result<LevelBudgetResult> {
    if !sets.len().is_multiple_of(2) {
        return Err(Error::OddLevel(sets.len()));
    }
    if sets.iter().any(SumSet::is_empty) {
        return Err(Error::EmptyOperand);
    }
    let half = (sets.len() / 2) as u64;
    if budget_k <= half {
        return Ok(LevelBudgetResult::Dense(DenseSignal {
            observed_total_size: 0,
            budget_k,
            last_index_computed: None,
            computed: Vec::new(),
        }));
    }
    let mut total = 0u64;
    let mut out = Vec::with_capacity(sets.len() / 2);
    for (i, pair) in sets.chunks_exact(2).enumerate() {
        let b = sparse_sumset(&pair[0], &pair[1])?;
        total += b.len() as u64;
        out.push(b);
        if total >= budget_k {
            return Ok(LevelBudgetResult::Dense(DenseSignal {
                observed_total_size: total,
                budget_k,
                last_index_computed: Some(i),
                computed: out,
            }));
        }
    }
    Ok(LevelBudgetResult::Levels(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> SumSet {
        SumSet::new(v.to_vec())
    }

    fn brute(a: &SumSet, b: &SumSet) -> SumSet {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| x + y))
            .collect()
    }

    #[test]
    fn dense_examples() {
        assert_eq!(
            dense_sumset(&s(&[0, 1]), &s(&[0, 2])).unwrap(),
            s(&[0, 1, 2, 3])
        );
        assert_eq!(dense_sumset(&s(&[5]), &s(&[7])).unwrap(), s(&[12]));
        let a = s(&[1, 3, 4]);
        let b = s(&[0, 10]);
        assert_eq!(dense_sumset(&a, &b).unwrap(), brute(&a, &b));
        assert_eq!(brute(&a, &b), s(&[1, 3, 4, 11, 13, 14]));
        assert_eq!(dense_sumset(&SumSet::empty(), &b), Err(Error::EmptyOperand));
    }

    #[test]
    fn sparse_examples() {
        let got = sparse_sumset(&s(&[0, 1_000_000]), &s(&[0, 1])).unwrap();
        assert_eq!(got, s(&[0, 1, 1_000_000, 1_000_001]));
        let b = s(&[3, 17, 400]);
        assert_eq!(sparse_sumset(&s(&[0]), &b).unwrap(), b);
        assert_eq!(
            sparse_sumset(&b, &SumSet::empty()),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn kernels_agree_on_random_inputs() {
        let mut rng = crate::rng::RngStream::new(11, b"kernels");
        for _ in 0..40 {
            let la = 1 + rng.below(50) as usize;
            let lb = 1 + rng.below(50) as usize;
            let a: SumSet = (0..la).map(|_| rng.below(1_000_001)).collect();
            let b: SumSet = (0..lb).map(|_| rng.below(1_000_001)).collect();
            let want = brute(&a, &b);
            for k in [
                SumsetKernel::Auto,
                SumsetKernel::Pairwise,
                SumsetKernel::DenseFft,
                SumsetKernel::Hashed,
            ] {
                assert_eq!(sumset_with(&a, &b, k).unwrap(), want, "{k:?}");
            }
        }
    }

    #[test]
    fn sum_if_sparse_examples() {
        let sets = vec![s(&[0, 1]), s(&[0, 2]), s(&[0, 4]), s(&[0, 8])];
        match sum_if_sparse(&sets, 100).unwrap() {
            LevelBudgetResult::Levels(l) => {
                assert_eq!(l, vec![s(&[0, 1, 2, 3]), s(&[0, 4, 8, 12])]);
            }
            other => panic!("{other:?}"),
        }
        match sum_if_sparse(&sets, 2).unwrap() {
            LevelBudgetResult::Dense(d) => {
                assert_eq!(d.last_index_computed, None);
                assert_eq!(d.budget_k, 2);
            }
            other => panic!("{other:?}"),
        }
        // |B_1| = 4 < 5, |B_1| + |B_2| = 8 >= 5: stops after the second set.
        match sum_if_sparse(&sets, 5).unwrap() {
            LevelBudgetResult::Dense(d) => {
                assert_eq!(d.observed_total_size, 8);
                assert_eq!(d.last_index_computed, Some(1));
            }
            other => panic!("{other:?}"),
        }
        // With budget 4 the trip happens on B_1 alone.
        match sum_if_sparse(&sets, 4).unwrap() {
            LevelBudgetResult::Dense(d) => {
                assert_eq!(d.observed_total_size, 4);
                assert_eq!(d.last_index_computed, Some(0));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(sum_if_sparse(&sets[..3], 100), Err(Error::OddLevel(3)));
    }

    #[test]
    fn cap_and_scale() {
        assert_eq!(cap(&s(&[1, 5, 9]), 4, 9).unwrap(), s(&[5, 9]));
        assert!(cap(&s(&[1, 2]), 5, 6).unwrap().is_empty());
        assert_eq!(
            cap(&s(&[1]), 6, 5),
            Err(Error::InvalidInterval { lo: 6, hi: 5 })
        );
        let a = s(&[0, 3, 7, 10, 15, 22]);
        let nested = cap(&cap(&a, 2, 20).unwrap(), 5, 16).unwrap();
        assert_eq!(nested, cap(&a, 5, 16).unwrap());
        assert_eq!(scale(&s(&[1, 2, 3]), 3).unwrap(), s(&[3, 6, 9]));
        assert_eq!(unscale(&s(&[4, 8]), 4).unwrap(), s(&[1, 2]));
        assert_eq!(
            unscale(&s(&[3, 4]), 2),
            Err(Error::NotDivisible {
                value: 3,
                divisor: 2
            })
        );
    }
}
