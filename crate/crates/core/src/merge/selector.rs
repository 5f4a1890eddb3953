use crate::error::{Error, Result};

/// Picks the sets an arithmetic progression would be built from.
///
/// Finds the smallest `k >= 2` such that at least `2 c rho u' / k` sets have
/// size `>= k`, then returns the `ceil(c u' / k)` of those with the smallest
/// `f`. Their `f` values sum to at most a `1/rho` share of the total.
pub fn select_ap_generators(
    set_sizes: &[u64],
    f_values: &[u64],
    rho: u64,
    u_prime: u64,
    c_ap: f64,
) -> Result<Vec<usize>> {
    let need = 2.0 * c_ap * rho as f64 * u_prime as f64;
    let mut desc: Vec<u64> = set_sizes.to_vec();
    desc.sort_unstable_by(|a, b| b.cmp(a));
    let max_k = desc.first().copied().unwrap_or(0);
    let mut chosen_k = None;
    for k in 2..=max_k {
        let count = desc.partition_point(|&s| s >= k);
        if count as f64 * k as f64 >= need {
            chosen_k = Some(k);
            break;
        }
    }
    let k = chosen_k.ok_or(Error::ThresholdNotMet { max_k })?;
    let take = (c_ap * u_prime as f64 / k as f64).ceil() as usize;
    let mut eligible: Vec<usize> = (0..set_sizes.len())
        .filter(|&i| set_sizes[i] >= k)
        .collect();
    eligible.sort_by_key(|&i| (f_values[i], i));
    eligible.truncate(take);
    eligible.sort_unstable();
    Ok(eligible)
}
