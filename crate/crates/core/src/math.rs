//! Integer helpers shared by the threshold computations.

/// `max(1, ceil(log2 x))`, the logarithm used for every `log w` count.
pub fn lg(x: u64) -> u64 {
    if x <= 2 {
        1
    } else {
        u64::from(64 - (x - 1).leading_zeros())
    }
}

/// `floor(log2 x)` for `x >= 1`.
pub fn floor_log2(x: u64) -> u32 {
    debug_assert!(x >= 1);
    63 - x.leading_zeros()
}

pub fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Smallest `a >= 0` with `a * a * w >= t`, i.e. `ceil(sqrt(t / w))`.
pub fn ceil_sqrt_ratio(t: u64, w: u64) -> u64 {
    assert!(w >= 1);
    let (t, w) = (t as u128, w as u128);
    let mut a = isqrt(t / w);
    while a * a * w < t {
        a += 1;
    }
    a as u64
}

/// `floor(sqrt(w * t) * lg(w))`, computed exactly.
pub fn floor_sqrt_wt_lg(w: u64, t: u64) -> u64 {
    let l = lg(w) as u128;
    let v = isqrt(w as u128 * t as u128 * l * l);
    v.min(u64::MAX as u128) as u64
}

/// `ceil(x)` for a non-negative real, saturating at `u64::MAX`.
pub fn ceil_u64(x: f64) -> u64 {
    if x.is_nan() || x <= 0.0 {
        0
    } else if x >= u64::MAX as f64 {
        u64::MAX
    } else {
        x.ceil() as u64
    }
}

pub fn sqrt_wt(w: u64, t: u64) -> f64 {
    (w as f64 * t as f64).sqrt()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Sieve of Eratosthenes: all primes `<= limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lg_values() {
        assert_eq!(lg(1), 1);
        assert_eq!(lg(2), 1);
        assert_eq!(lg(3), 2);
        assert_eq!(lg(4), 2);
        assert_eq!(lg(5), 3);
        assert_eq!(lg(1024), 10);
        assert_eq!(lg(1025), 11);
    }

    #[test]
    fn sqrt_helpers() {
        for x in 0u128..2000 {
            let r = isqrt(x);
            assert!(r * r <= x && (r + 1) * (r + 1) > x);
        }
        assert_eq!(ceil_sqrt_ratio(36, 4), 3);
        assert_eq!(ceil_sqrt_ratio(37, 4), 4);
        assert_eq!(ceil_sqrt_ratio(0, 4), 0);
        assert_eq!(floor_sqrt_wt_lg(4, 100), 40);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieve = primes_up_to(500);
        let trial: Vec<u64> = (0..=500).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieve, trial);
    }
}
