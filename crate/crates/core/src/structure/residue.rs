use crate::error::{Error, Result};
use crate::math::primes_up_to;

use super::divisor::{find_almost_divisor, non_divisible_count};

/// Splits `items` into a residue set `R` and the rest.
///
/// `R` starts as the first `min(2 alpha, n)` items. For each prime
/// `p <= alpha` that divides all but at most `alpha` of those, `alpha`
/// further items not divisible by `p` are added. When `items` has no
/// `alpha`-almost divisor this leaves at least `b` items of `R` outside
/// `bZ` for every `1 < b <= alpha`.
pub fn split_residue_set(items: &[u64], alpha: u64) -> (Vec<u64>, Vec<u64>) {
    let n = items.len();
    let base = (2 * alpha).min(n as u64) as usize;
    let mut chosen = vec![false; n];
    chosen[..base].iter_mut().for_each(|c| *c = true);
    for p in primes_up_to(alpha) {
        if non_divisible_count(&items[..base], p) as u64 > alpha {
            continue;
        }
        let picks = items
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x % p != 0)
            .take(alpha as usize);
        for (i, _) in picks {
            chosen[i] = true;
        }
    }
    let mut r = Vec::new();
    let mut rest = Vec::new();
    for (&x, c) in items.iter().zip(chosen) {
        if c {
            r.push(x);
        } else {
            rest.push(x);
        }
    }
    (r, rest)
}

/// The residue set of `items`. With `checked`, first verifies that `items`
/// has no `alpha`-almost divisor.
pub fn extract_residue_set(items: &[u64], alpha: u64, checked: bool) -> Result<Vec<u64>> {
    if checked && items.len() as u64 > alpha {
        if let Some(divisor) = find_almost_divisor(items, alpha) {
            return Err(Error::HasAlmostDivisor { alpha, divisor });
        }
    }
    Ok(split_residue_set(items, alpha).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::lg;
    use crate::structure::residue_coverage;

    #[test]
    fn examples() {
        let r = extract_residue_set(&[5, 7, 9], 1, false).unwrap();
        assert_eq!(r, vec![5, 7]);
        let r = extract_residue_set(&[1, 2, 3, 4, 5, 6, 7], 2, true).unwrap();
        assert!(r.iter().filter(|&&x| x % 2 == 1).count() >= 2);
        assert!(residue_coverage(&r, 2));
        assert_eq!(
            extract_residue_set(&[2, 4, 6, 8, 3], 1, true),
            Err(Error::HasAlmostDivisor {
                alpha: 1,
                divisor: 2
            })
        );
    }

    #[test]
    fn covers_residues_on_random_inputs() {
        let mut rng = crate::rng::RngStream::new(9, b"residue-set");
        let mut tested = 0;
        while tested < 200 {
            let w = 2 + rng.below(300);
            let alpha = 1 + rng.below(8);
            let n = 1 + rng.below(60) as usize;
            let base = 2 + rng.below(4);
            let items: Vec<u64> = (0..n)
                .map(|_| {
                    if rng.below(3) == 0 {
                        1 + rng.below(w)
                    } else {
                        base * (1 + rng.below((w / base).max(1)))
                    }
                })
                .collect();
            if n as u64 <= alpha || find_almost_divisor(&items, alpha).is_some() {
                continue;
            }
            tested += 1;
            let (r, rest) = split_residue_set(&items, alpha);
            assert_eq!(r.len() + rest.len(), items.len());
            let bound = 4 * alpha * lg(*items.iter().max().unwrap());
            assert!(r.len() as u64 <= bound, "|R|={} > {bound}", r.len());
            for b in 2..=alpha {
                assert!(non_divisible_count(&r, b) as u64 >= b, "b={b} {items:?}");
                assert!(residue_coverage(&r, b), "b={b} {items:?}");
            }
        }
    }
}
