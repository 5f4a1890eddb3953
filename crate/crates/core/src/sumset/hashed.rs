//! Output-sensitive sumset by residue hashing.
//!
//! Both operands are bucketed modulo a random prime `p`. Convolving the
//! per-bucket count, quotient sum and squared quotient sum tells, for every
//! residue class of the output, how many pairs land there and whether they
//! all share one quotient. A class whose quotient variance is zero holds a
//! single sum together with its exact multiplicity. Rounds with fresh primes
//! continue until the recovered multiplicities account for every pair, or
//! until the few collided classes are cheaper to enumerate than another
//! round, so the result is always exact.

use std::collections::BTreeMap;

use super::ntt::{moment_convolution, Moments, EXACT_BOUND};
use crate::error::{Error, Result};
use crate::math::is_prime;
use crate::rng::RngStream;
use crate::set::SumSet;

const SEED: u64 = 0x5eed_5e75;
const MAX_PRIME: u64 = 1 << 22;

/// `A + B`, exact, in time roughly proportional to `|A + B|` up to polylog
/// factors.
pub fn hashed_sumset(a: &SumSet, b: &SumSet) -> Result<SumSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let mut rng = RngStream::new(SEED, b"hashed-sumset");
    let (amin, bmin) = (a.min().unwrap(), b.min().unwrap());
    let a0: Vec<u64> = a.iter().map(|x| x - amin).collect();
    let b0: Vec<u64> = b.iter().map(|y| y - bmin).collect();
    let mut out = Vec::new();
    shifted(&a0, &b0, &mut rng, &mut out);
    let base = amin + bmin;
    Ok(SumSet::new(out.into_iter().map(|v| v + base).collect()))
}

fn shifted(a: &[u64], b: &[u64], rng: &mut RngStream, out: &mut Vec<u64>) {
    if a.len() == 1 || b.len() == 1 {
        let (s, other) = if a.len() == 1 { (a[0], b) } else { (b[0], a) };
        out.extend(other.iter().map(|y| y + s));
        return;
    }
    let hull = a[a.len() - 1] + b[b.len() - 1] + 1;
    let pairs = a.len() as u128 * b.len() as u128;
    let mut est = (a.len() + b.len()).max(16) as u64;
    let mut found: BTreeMap<u64, u128> = BTreeMap::new();
    let mut covered = 0u128;
    loop {
        let lo = 2 * est;
        if lo >= hull && hull <= MAX_PRIME {
            // The prime would not wrap anything: plain convolution.
            let p = hull.max(2);
            round(a, b, p, &mut found, &mut covered);
            debug_assert_eq!(covered, pairs);
            break;
        }
        let qmax = (a[a.len() - 1] / lo + b[b.len() - 1] / lo + 2) as u128;
        if lo > MAX_PRIME || pairs * qmax * qmax >= EXACT_BOUND {
            split(a, b, rng, out);
            return;
        }
        let hi = (2 * lo).min(MAX_PRIME);
        let p = random_prime(rng, lo, hi);
        let (nonzero, collided, collided_pairs) = round(a, b, p, &mut found, &mut covered);
        if covered == pairs {
            break;
        }
        // Every sum not yet isolated lies in a collided class of this round.
        let small = a.len().min(b.len()) as u128;
        let direct = small * collided.len() as u128 + collided_pairs;
        if direct <= 8 * p as u128 * (64 - p.leading_zeros()) as u128 {
            enumerate_classes(a, b, p, &collided, &mut found);
            break;
        }
        if collided.len() as u64 * 8 > nonzero {
            est *= 2;
        }
    }
    out.extend(found.keys().copied());
}

fn split(a: &[u64], b: &[u64], rng: &mut RngStream, out: &mut Vec<u64>) {
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mid = big.len() / 2;
    shifted(&big[..mid], small, rng, out);
    // Re-base the upper half so quotients stay small.
    let base = big[mid];
    let upper: Vec<u64> = big[mid..].iter().map(|x| x - base).collect();
    let start = out.len();
    shifted(&upper, small, rng, out);
    for v in &mut out[start..] {
        *v += base;
    }
}

fn random_prime(rng: &mut RngStream, lo: u64, hi: u64) -> u64 {
    loop {
        let c = rng.range_inclusive(lo, hi);
        if is_prime(c) {
            return c;
        }
    }
}

fn moments(xs: &[u64], p: u64) -> Moments {
    let n = p as usize;
    let mut m = Moments {
        m0: vec![0; n],
        m1: vec![0; n],
        m2: vec![0; n],
    };
    for &x in xs {
        let (r, q) = ((x % p) as usize, (x / p) as u128);
        m.m0[r] += 1;
        m.m1[r] += q;
        m.m2[r] += q * q;
    }
    m
}

/// Adds every sum whose residue modulo `p` is in `classes`.
fn enumerate_classes(
    a: &[u64],
    b: &[u64],
    p: u64,
    classes: &[u64],
    found: &mut BTreeMap<u64, u128>,
) {
    let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut keyed: Vec<(u64, u64)> = big.iter().map(|&x| (x % p, x)).collect();
    keyed.sort_unstable();
    for &y in small {
        let ry = y % p;
        for &c in classes {
            let want = (c + p - ry) % p;
            let start = keyed.partition_point(|&(r, _)| r < want);
            for &(_, x) in keyed[start..].iter().take_while(|&&(r, _)| r == want) {
                found.entry(x + y).or_insert(0);
            }
        }
    }
}

/// One hashing round. Records isolated sums in `found` and returns the
/// number of nonzero classes, the collided classes and the number of pairs
/// they hold.
fn round(
    a: &[u64],
    b: &[u64],
    p: u64,
    found: &mut BTreeMap<u64, u128>,
    covered: &mut u128,
) -> (u64, Vec<u64>, u128) {
    let c = moment_convolution(&moments(a, p), &moments(b, p));
    let n = p as usize;
    let mut nonzero = 0u64;
    let mut collided = Vec::new();
    let mut collided_pairs = 0u128;
    for r in 0..n {
        let (mut m0, mut m1, mut m2) = (c.m0[r], c.m1[r], c.m2[r]);
        if r + n < c.m0.len() {
            // Pairs whose residues overflow p carry one into the quotient.
            let (h0, h1, h2) = (c.m0[r + n], c.m1[r + n], c.m2[r + n]);
            m0 += h0;
            m1 += h1 + h0;
            m2 += h2 + 2 * h1 + h0;
        }
        if m0 == 0 {
            continue;
        }
        nonzero += 1;
        if m1 % m0 == 0 && m2 == (m1 / m0) * m1 {
            let v = r as u64 + (m1 / m0) as u64 * p;
            if let std::collections::btree_map::Entry::Vacant(e) = found.entry(v) {
                e.insert(m0);
                *covered += m0;
            }
        } else {
            collided.push(r as u64);
            collided_pairs += m0;
        }
    }
    (nonzero, collided, collided_pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_sparse_operands() {
        let a = SumSet::new(vec![0, 1, 1 << 30, (1 << 30) + 7, 1 << 40]);
        let b = SumSet::new(vec![3, 1 << 35, (1 << 35) + 1]);
        let want: SumSet = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x + y))
            .collect();
        assert_eq!(hashed_sumset(&a, &b).unwrap(), want);
    }

    #[test]
    fn many_collisions_in_output() {
        let a: SumSet = (0..300u64).map(|i| i * 1_000_003).collect();
        let b: SumSet = (0..300u64).map(|i| i * 1_000_003 + (i % 3)).collect();
        let want: SumSet = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x + y))
            .collect();
        assert_eq!(hashed_sumset(&a, &b).unwrap(), want);
    }
}
