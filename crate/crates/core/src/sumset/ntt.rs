//! Exact convolution over three NTT primes with CRT reconstruction.
//!
//! Results are exact whenever the true coefficients are below the product
//! of the primes (about 2^86).

const PRIMES: [u64; 3] = [998_244_353, 167_772_161, 469_762_049];
const ROOT: u64 = 3;

/// Longest transform supported by every prime.
pub const MAX_LEN: usize = 1 << 23;

/// Bound below which reconstructed values are exact.
pub const EXACT_BOUND: u128 = 1 << 85;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn ntt<const M: u64>(a: &mut [u64], invert: bool) {
    let m = M;
    let n = a.len();
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j ^= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w = pow_mod(ROOT, (m - 1) / len as u64, m);
        if invert {
            w = pow_mod(w, m - 2, m);
        }
        for chunk in a.chunks_mut(len) {
            let mut wn = 1u64;
            let (lo, hi) = chunk.split_at_mut(len / 2);
            for (u, v) in lo.iter_mut().zip(hi.iter_mut()) {
                let x = *u;
                let y = *v * wn % m;
                *u = if x + y >= m { x + y - m } else { x + y };
                *v = if x >= y { x - y } else { x + m - y };
                wn = wn * w % m;
            }
        }
        len <<= 1;
    }
    if invert {
        let inv_n = pow_mod(n as u64, m - 2, m);
        for x in a.iter_mut() {
            *x = *x * inv_n % m;
        }
    }
}

/// Moments of a residue-bucketed operand: per bucket the count, the sum of
/// quotients and the sum of squared quotients.
pub struct Moments {
    pub m0: Vec<u128>,
    pub m1: Vec<u128>,
    pub m2: Vec<u128>,
}

fn reduce(v: &[u128], m: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n];
    for (o, &x) in out.iter_mut().zip(v) {
        *o = if x >> 64 == 0 {
            x as u64 % m
        } else {
            (x % m as u128) as u64
        };
    }
    out
}

// The modulus is a const parameter so the compiler can strength-reduce `%`.
fn convolve_mod<const M: u64>(a: &Moments, b: &Moments, n: usize) -> [Vec<u64>; 3] {
    let m = M;
    let mut fa: Vec<Vec<u64>> = [&a.m0, &a.m1, &a.m2]
        .iter()
        .map(|v| reduce(v, m, n))
        .collect();
    let mut fb: Vec<Vec<u64>> = [&b.m0, &b.m1, &b.m2]
        .iter()
        .map(|v| reduce(v, m, n))
        .collect();
    for v in fa.iter_mut().chain(fb.iter_mut()) {
        ntt::<M>(v, false);
    }
    let mut c0 = vec![0u64; n];
    let mut c1 = vec![0u64; n];
    let mut c2 = vec![0u64; n];
    for i in 0..n {
        let (a0, a1, a2) = (fa[0][i], fa[1][i], fa[2][i]);
        let (b0, b1, b2) = (fb[0][i], fb[1][i], fb[2][i]);
        c0[i] = a0 * b0 % m;
        c1[i] = (a1 * b0 % m + a0 * b1 % m) % m;
        c2[i] = (a2 * b0 % m + 2 * (a1 * b1 % m) % m + a0 * b2 % m) % m;
    }
    ntt::<M>(&mut c0, true);
    ntt::<M>(&mut c1, true);
    ntt::<M>(&mut c2, true);
    [c0, c1, c2]
}

/// Computes the moment convolution: for every output bucket, the number of
/// pairs, the sum of `qa + qb` and the sum of `(qa + qb)^2`.
pub fn moment_convolution(a: &Moments, b: &Moments) -> Moments {
    let out_len = a.m0.len() + b.m0.len() - 1;
    let n = out_len.next_power_of_two();
    assert!(n <= MAX_LEN, "NTT length {n} exceeds {MAX_LEN}");
    let per_prime = [
        convolve_mod::<{ PRIMES[0] }>(a, b, n),
        convolve_mod::<{ PRIMES[1] }>(a, b, n),
        convolve_mod::<{ PRIMES[2] }>(a, b, n),
    ];
    let garner = Garner::new();
    let rebuild = |k: usize| -> Vec<u128> {
        (0..out_len)
            .map(|i| garner.crt(per_prime[0][k][i], per_prime[1][k][i], per_prime[2][k][i]))
            .collect()
    };
    Moments {
        m0: rebuild(0),
        m1: rebuild(1),
        m2: rebuild(2),
    }
}

struct Garner {
    inv_p0_mod_p1: u64,
    inv_p0p1_mod_p2: u64,
}

impl Garner {
    fn new() -> Self {
        let [p0, p1, p2] = PRIMES;
        let p0p1_mod_p2 = (p0 % p2) * (p1 % p2) % p2;
        Garner {
            inv_p0_mod_p1: pow_mod(p0 % p1, p1 - 2, p1),
            inv_p0p1_mod_p2: pow_mod(p0p1_mod_p2, p2 - 2, p2),
        }
    }

    /// x = r0 + p0 * (y1 + p1 * y2)
    fn crt(&self, r0: u64, r1: u64, r2: u64) -> u128 {
        let [p0, p1, p2] = PRIMES;
        let y1 = ((r1 + p1 - r0 % p1) % p1) * self.inv_p0_mod_p1 % p1;
        let partial = (r0 % p2 + (p0 % p2) * (y1 % p2)) % p2;
        let y2 = ((r2 + p2 - partial) % p2) * self.inv_p0p1_mod_p2 % p2;
        r0 as u128 + p0 as u128 * (y1 as u128 + p1 as u128 * y2 as u128)
    }
}
