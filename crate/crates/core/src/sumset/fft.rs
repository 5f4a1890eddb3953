//! Floating-point linear convolution on top of `rustfft`.

use std::cell::RefCell;

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Linear convolution of two real sequences (length `a.len() + b.len() - 1`).
///
/// Both inputs are packed into one complex transform; the spectra are
/// separated using conjugate symmetry.
pub fn convolve_real(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let out_len = a.len() + b.len() - 1;
    let n = out_len.next_power_of_two().max(2);
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| {
            Complex64::new(
                a.get(i).copied().unwrap_or(0.0),
                b.get(i).copied().unwrap_or(0.0),
            )
        })
        .collect();
    let (fwd, inv) = PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        (p.plan_fft_forward(n), p.plan_fft_inverse(n))
    });
    fwd.process(&mut z);
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n {
        let zk = z[k];
        let zn = z[(n - k) % n].conj();
        let fa = (zk + zn) * 0.5;
        let fb = (zk - zn) * Complex64::new(0.0, -0.5);
        c[k] = fa * fb;
    }
    inv.process(&mut c);
    let scale = 1.0 / n as f64;
    c.truncate(out_len);
    c.into_iter().map(|v| v.re * scale).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    fn naive(a: &[f64], b: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn indicator_counts_round_to_exact_integers() {
        let mut rng = RngStream::new(3, b"fft-test");
        for _ in 0..30 {
            let la = 1 + rng.below(3000) as usize;
            let lb = 1 + rng.below(3000) as usize;
            let a: Vec<f64> = (0..la).map(|_| rng.below(2) as f64).collect();
            let b: Vec<f64> = (0..lb).map(|_| rng.below(2) as f64).collect();
            let got = convolve_real(&a, &b);
            let want = naive(&a, &b);
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 0.25, "{g} vs {w}");
            }
        }
    }
}
