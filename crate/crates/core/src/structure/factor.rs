use crate::error::{Error, Result};
use crate::math::{isqrt, primes_up_to};

/// Prime factorizations of a list of items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTable {
    /// `factors[i]` lists `(prime, exponent)` for item `i`, primes ascending.
    pub factors: Vec<Vec<(u64, u32)>>,
    /// Every prime dividing at least one item, ascending.
    pub primes: Vec<u64>,
}

impl FactorTable {
    /// Number of items each prime of `primes` divides.
    pub fn divisible_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.primes.len()];
        for f in &self.factors {
            for &(p, _) in f {
                let k = self.primes.binary_search(&p).expect("prime listed");
                counts[k] += 1;
            }
        }
        counts
    }
}

/// Factorizes every item of `items`, which must lie in `[1, w]`.
pub fn factorize_all(items: &[u64], w: u64) -> Result<FactorTable> {
    if let Some(&bad) = items.iter().find(|&&x| x == 0 || x > w) {
        return Err(Error::ItemOutOfRange { value: bad, max: w });
    }
    let small = primes_up_to(isqrt(w as u128) as u64);
    let mut factors = Vec::with_capacity(items.len());
    let mut all = Vec::new();
    for &x in items {
        let mut rest = x;
        let mut f = Vec::new();
        for &p in &small {
            if p * p > rest {
                break;
            }
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                f.push((p, e));
            }
        }
        if rest > 1 {
            f.push((rest, 1));
        }
        all.extend(f.iter().map(|&(p, _)| p));
        factors.push(f);
    }
    all.sort_unstable();
    all.dedup();
    Ok(FactorTable {
        factors,
        primes: all,
    })
}
