use super::factor::factorize_all;

/// Number of items not divisible by `d`.
pub fn non_divisible_count(items: &[u64], d: u64) -> usize {
    items.iter().filter(|&&x| x % d != 0).count()
}

/// Smallest prime `p` dividing all but at most `alpha` items, if any.
///
/// A composite almost divisor implies each of its prime factors is one, so
/// primes suffice. With at most `alpha` items every `d` qualifies and 2 is
/// returned.
pub fn find_almost_divisor(items: &[u64], alpha: u64) -> Option<u64> {
    let n = items.len() as u64;
    if n <= alpha {
        return Some(2);
    }
    let w = items.iter().copied().max().unwrap_or(1);
    let table = factorize_all(items, w).ok()?;
    let counts = table.divisible_counts();
    table
        .primes
        .iter()
        .zip(counts)
        .find(|&(_, c)| n - c as u64 <= alpha)
        .map(|(&p, _)| p)
}

/// Result of repeatedly dividing out almost divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peeled {
    pub d: u64,
    /// `X(d) / d`.
    pub peeled: Vec<u64>,
    /// Items dropped along the way, at their original scale.
    pub leftovers: Vec<u64>,
}

/// Divides out almost divisors until none remains (or at most `alpha`
/// items are left).
pub fn peel_divisors(items: &[u64], alpha: u64) -> Peeled {
    let mut d = 1u64;
    let mut cur = items.to_vec();
    let mut leftovers = Vec::new();
    while cur.len() as u64 > alpha {
        let Some(p) = find_almost_divisor(&cur, alpha) else {
            break;
        };
        let mut next = Vec::with_capacity(cur.len());
        for x in cur {
            if x % p == 0 {
                next.push(x / p);
            } else {
                leftovers.push(x * d);
            }
        }
        cur = next;
        d *= p;
    }
    Peeled {
        d,
        peeled: cur,
        leftovers,
    }
}
