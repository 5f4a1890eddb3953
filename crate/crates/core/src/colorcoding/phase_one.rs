use serde::Serialize;

use crate::error::{Error, Result};
use crate::math::floor_log2;
use crate::rng::RngStream;

/// Groups `D_1..D_l` of `D`, padded with empty groups to a power of two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFamily {
    pub groups: Vec<Vec<u64>>,
    /// `Some(j)` when `2^j <= max(D_i) < 2^(j+1)`, `None` for padding.
    pub layers: Vec<Option<u32>>,
}

impl GroupFamily {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn max_of(&self, i: usize) -> u64 {
        self.groups[i].iter().copied().max().unwrap_or(0)
    }

    pub fn sigma_of(&self, i: usize) -> u64 {
        self.groups[i].iter().sum()
    }

    pub fn sum_of_maxima(&self) -> u64 {
        (0..self.len()).map(|i| self.max_of(i)).sum()
    }
}

/// Splits `D` by magnitude into layers `D^j = [2^j, 2^(j+1))` and each layer
/// into `min(ceil(t / 2^(j-1)), |D^j|)` non-empty random groups.
pub fn phase_one(d_part: &[u64], t: u64, rng: &mut RngStream) -> Result<GroupFamily> {
    let sigma: u64 = d_part.iter().sum();
    if 2 * sigma < 3 * t {
        return Err(Error::InsufficientMass { sigma, t });
    }
    let mut layers: Vec<Vec<u64>> = Vec::new();
    for &x in d_part {
        let j = floor_log2(x) as usize;
        if layers.len() <= j {
            layers.resize(j + 1, Vec::new());
        }
        layers[j].push(x);
    }
    let mut groups = Vec::new();
    let mut layer_of = Vec::new();
    for (j, layer) in layers.into_iter().enumerate() {
        if layer.is_empty() {
            continue;
        }
        let cap = (2 * t as u128).div_ceil(1u128 << j);
        let alpha = cap.min(layer.len() as u128) as usize;
        let parts = if alpha == layer.len() {
            layer.into_iter().map(|x| vec![x]).collect()
        } else {
            spread(layer, alpha, rng)
        };
        layer_of.extend(std::iter::repeat_n(Some(j as u32), parts.len()));
        groups.extend(parts);
    }
    let l = groups.len().max(1).next_power_of_two();
    groups.resize(l, Vec::new());
    layer_of.resize(l, None);
    Ok(GroupFamily {
        groups,
        layers: layer_of,
    })
}

/// Uniform assignment into `parts` bins, then moves elements out of bins
/// holding two or more until no bin is empty. Needs `parts < items.len()`.
fn spread(items: Vec<u64>, parts: usize, rng: &mut RngStream) -> Vec<Vec<u64>> {
    let mut bins: Vec<Vec<u64>> = vec![Vec::new(); parts];
    for x in items {
        bins[rng.below(parts as u64) as usize].push(x);
    }
    let empty: Vec<usize> = (0..parts).filter(|&i| bins[i].is_empty()).collect();
    let mut donor = 0;
    for e in empty {
        while bins[donor].len() < 2 {
            donor += 1;
        }
        let x = bins[donor].pop().unwrap();
        bins[e].push(x);
    }
    bins
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::lg;

    #[test]
    fn singleton_layers() {
        let mut rng = RngStream::new(1, b"p1");
        let f = phase_one(&[1, 1, 2, 3, 5, 8], 10, &mut rng).unwrap();
        assert_eq!(f.len(), 8);
        let mut real: Vec<Vec<u64>> = f.groups.iter().filter(|g| !g.is_empty()).cloned().collect();
        real.sort();
        assert_eq!(
            real,
            vec![vec![1], vec![1], vec![2], vec![3], vec![5], vec![8]]
        );
        assert_eq!(f.layers.iter().filter(|l| l.is_none()).count(), 2);
    }

    #[test]
    fn rejects_light_input() {
        let mut rng = RngStream::new(1, b"p1");
        assert_eq!(
            phase_one(&[1, 2], 3, &mut rng),
            Err(Error::InsufficientMass { sigma: 3, t: 3 })
        );
    }

    #[test]
    fn invariants_on_random_inputs() {
        let mut rng = RngStream::new(2, b"p1-inv");
        for _ in 0..300 {
            let w = 1 + rng.below(200);
            let n = 1 + rng.below(300) as usize;
            let d: Vec<u64> = (0..n).map(|_| 1 + rng.below(w)).collect();
            let sigma: u64 = d.iter().sum();
            let t = 1 + rng.below((2 * sigma / 3).max(1));
            let f = phase_one(&d, t, &mut rng).unwrap();
            assert!(f.len().is_power_of_two() && f.len() <= 2 * n);
            let mut all: Vec<u64> = f.groups.concat();
            all.sort_unstable();
            let mut want = d.clone();
            want.sort_unstable();
            assert_eq!(all, want);
            for (g, l) in f.groups.iter().zip(&f.layers) {
                match l {
                    Some(j) => {
                        assert!(!g.is_empty());
                        assert!(g.iter().all(|&x| floor_log2(x) == *j));
                    }
                    None => assert!(g.is_empty()),
                }
            }
            let top = f.layers.iter().flatten().max().copied().unwrap_or(0);
            for j in 0..=top {
                let count = f.layers.iter().filter(|&&l| l == Some(j)).count() as u128;
                assert!(count * (1u128 << j) <= 2 * t as u128 + (1u128 << j));
            }
            let m = f.sum_of_maxima();
            assert!(2 * m >= 3 * t, "sum of maxima {m} < 3t/2, t={t}");
            // Each present layer j contributes fewer than ceil(2t/2^j) * 2^(j+1)
            // <= 4t + 2^(j+1); asymptotically this is the 5t log w bound.
            let layers = floor_log2(w) as u64 + 1;
            assert!(m <= layers * 4 * t + 4 * w, "sum of maxima {m} too large");
            if t >= 32 * w && w >= 32 {
                assert!(m <= 5 * t * lg(w.max(2)), "sum of maxima {m} above 5t lg w");
            }
        }
    }
}
