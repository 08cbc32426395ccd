//! Prime and prime-power sums over the correction window around `x`.

mod sieve;
mod weight;

pub use sieve::{
    base_primes, enumerate_prime_powers, iroot, is_prime, isqrt, sieve_segment, SegmentMoments, MAX_SIEVE_SPAN,
    SEGMENT_LEN,
};
pub use weight::{m_derivs, m_eval_error, m_third_bound, m_weight};

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::kernel::LoganKernel;
use crate::sum::CompensatedSum;

/// Default absolute tolerance for the interpolation remainder of a whole window.
pub const DEFAULT_INTERP_TOL: f64 = 1e-10;

/// Integers `n` with `e^{−αε}x ≤ n ≤ e^{αε}x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub x: f64,
    pub epsilon: f64,
    pub alpha: f64,
    pub lo: u64,
    pub hi: u64,
}

impl Window {
    pub fn new(x: f64, epsilon: f64, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return domain(format!("alpha must lie in (0, 1], got {alpha}"));
        }
        if !(epsilon > 0.0 && epsilon <= 0.01) {
            return domain(format!("epsilon must lie in (0, 0.01], got {epsilon}"));
        }
        if !(x > 4.0) || x >= (1u64 << 52) as f64 {
            return domain(format!("x must lie in (4, 2^52), got {x}"));
        }
        let lo = (x * (-alpha * epsilon).exp()).ceil().max(2.0) as u64;
        let hi = (x * (alpha * epsilon).exp()).floor() as u64;
        if hi < lo {
            return domain("empty window");
        }
        Ok(Self {
            x,
            epsilon,
            alpha,
            lo,
            hi,
        })
    }

    /// The window split at `x`, so the weight is smooth on each piece.
    fn sides(&self) -> Vec<(u64, u64)> {
        let below = self.x.ceil() as u64 - 1;
        let mut out = Vec::new();
        if self.lo <= below.min(self.hi) {
            out.push((self.lo, below.min(self.hi)));
        }
        let above = self.x.floor() as u64 + 1;
        if above.max(self.lo) <= self.hi {
            out.push((above.max(self.lo), self.hi));
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct WindowSum {
    pub value: f64,
    /// Bound on the quadratic-interpolation remainder (0 for direct evaluation).
    pub interp_error: f64,
    /// Bound on rounding and kernel-series errors.
    pub numerical_error: f64,
    pub primes: u64,
    pub segments: u64,
}

#[derive(Default)]
struct Acc {
    sum: CompensatedSum<f64>,
    interp: f64,
    numer: f64,
    primes: u64,
    segments: u64,
}

impl Acc {
    fn merge(&mut self, o: &Acc) {
        self.sum.merge(&o.sum);
        self.interp += o.interp;
        self.numer += o.numer;
        self.primes += o.primes;
        self.segments += o.segments;
    }
}

struct Ctx<'a> {
    x: f64,
    kernel: &'a LoganKernel<f64>,
    e_m: f64,
    tol_density: f64,
}

impl Ctx<'_> {
    fn direct(&self, primes: &[u64], acc: &mut Acc) {
        for &p in primes {
            acc.sum.add(m_weight(self.x, self.kernel, p as f64));
        }
        acc.numer += primes.len() as f64 * self.e_m;
        acc.primes += primes.len() as u64;
    }

    /// Taylor expansion at `a` on `[a, b]`, bisected until the cubic remainder fits its share.
    fn interpolate(&self, a: u64, b: u64, primes: &[u64], acc: &mut Acc) {
        if primes.is_empty() {
            acc.segments += 1;
            return;
        }
        let m = SegmentMoments::from_primes(a, b, primes);
        let s = m.s.map(|v| v as f64);
        let width = (b - a) as f64;
        let bound = m_third_bound(self.x, self.kernel, a as f64, b as f64) / 6.0 * s[2] * width;
        if bound > self.tol_density * (width + 1.0) {
            if b - a < 64 {
                self.direct(primes, acc);
                acc.segments += 1;
                return;
            }
            let mid = a + (b - a) / 2;
            let split = primes.partition_point(|&p| p <= mid);
            self.interpolate(a, mid, &primes[..split], acc);
            self.interpolate(mid + 1, b, &primes[split..], acc);
            return;
        }
        let [m0, m1, m2] = m_derivs(self.x, self.kernel, a as f64);
        let terms = [m0 * s[0], m1 * s[1], 0.5 * m2 * s[2]];
        for t in terms {
            acc.sum.add(t);
        }
        let scale = terms.iter().map(|t| t.abs()).sum::<f64>();
        acc.interp += bound;
        acc.numer += s[0] * self.e_m + 1e-13 * (terms[1].abs() + terms[2].abs()) + 8.0 * f64::EPSILON * scale;
        acc.primes += primes.len() as u64;
        acc.segments += 1;
    }
}

/// `Σ_{p ∈ window} M_{x,c,ε}(p)` over primes, directly or by per-segment moments.
pub fn window_prime_sum(window: &Window, kernel: &LoganKernel<f64>, use_interpolation: bool) -> Result<WindowSum> {
    window_prime_sum_tol(window, kernel, use_interpolation, DEFAULT_INTERP_TOL)
}

/// As [`window_prime_sum`] with an explicit absolute budget for the interpolation remainder.
pub fn window_prime_sum_tol(
    window: &Window,
    kernel: &LoganKernel<f64>,
    use_interpolation: bool,
    tol: f64,
) -> Result<WindowSum> {
    check_kernel(window, kernel)?;
    if !(tol > 0.0) {
        return domain("interpolation tolerance must be positive");
    }
    if window.hi - window.lo > MAX_SIEVE_SPAN {
        return domain(format!("window of {} integers is too wide to sieve", window.hi - window.lo));
    }
    let base = base_primes(isqrt(window.hi));
    let ctx = Ctx {
        x: window.x,
        kernel,
        e_m: m_eval_error(kernel),
        tol_density: tol / (window.hi - window.lo + 1) as f64,
    };
    let mut blocks = Vec::new();
    for (lo, hi) in window.sides() {
        let mut a = lo;
        while a <= hi {
            let b = (a + SEGMENT_LEN - 1).min(hi);
            blocks.push((a, b));
            a = b + 1;
        }
    }
    let parts: Vec<Acc> = blocks
        .par_iter()
        .map(|&(a, b)| {
            let primes = sieve::sieve_block(a, b, &base);
            let mut acc = Acc::default();
            if use_interpolation {
                ctx.interpolate(a, b, &primes, &mut acc);
            } else {
                ctx.direct(&primes, &mut acc);
                acc.segments += 1;
            }
            acc
        })
        .collect();
    let mut total = Acc::default();
    for p in &parts {
        total.merge(p);
    }
    let value = total.sum.total();
    Ok(WindowSum {
        value,
        interp_error: total.interp,
        numerical_error: total.numer + 2.0 * f64::EPSILON * value.abs(),
        primes: total.primes,
        segments: total.segments,
    })
}

fn check_kernel(window: &Window, kernel: &LoganKernel<f64>) -> Result<()> {
    if kernel.epsilon() != window.epsilon {
        return domain("window and kernel use different epsilon");
    }
    Ok(())
}

/// Bound on `Σ_{p^m ∈ [e^{−ε}x, e^{ε}x], m≥2} 1/m`.
pub fn power_count_bound(x: f64, epsilon: f64) -> f64 {
    4.01 * epsilon * x.sqrt() + (2.0 * x * x).ln().ln()
}

/// `Σ_{p^m ∈ window, m≥2} M_{x,c,ε}(p^m)/m`.
pub fn window_power_sum(window: &Window, kernel: &LoganKernel<f64>) -> Result<WindowSum> {
    check_kernel(window, kernel)?;
    let powers = enumerate_prime_powers(window.lo, window.hi)?;
    let weight: f64 = powers.iter().map(|&(_, _, m)| 1.0 / m as f64).sum();
    if window.x >= 100.0 && weight > power_count_bound(window.x, window.epsilon) {
        return Err(Error::Domain(format!(
            "prime-power count {weight} exceeds its a priori bound; enumeration is inconsistent"
        )));
    }
    let mut sum = CompensatedSum::new();
    for &(v, _, m) in &powers {
        sum.add(m_weight(window.x, kernel, v as f64) / m as f64);
    }
    let value = sum.total();
    Ok(WindowSum {
        value,
        interp_error: 0.0,
        numerical_error: weight * m_eval_error(kernel) + 2.0 * f64::EPSILON * value.abs(),
        primes: powers.len() as u64,
        segments: 1,
    })
}

/// One-sided bound on the prime-power sum over `e^{αε}x < t ≤ e^{ε}x` (or its mirror image).
pub fn alpha_truncation_bound(x: f64, c: f64, epsilon: f64, alpha: f64) -> Result<f64> {
    if !(x >= 100.0) || !(epsilon > 0.0 && epsilon <= 0.01) || !(c >= 1.0) {
        return domain(format!("needs x >= 100, 0 < epsilon <= 0.01, c >= 1 (got {x}, {epsilon}, {c})"));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return domain(format!("alpha must lie in (0, 1], got {alpha}"));
    }
    if alpha == 1.0 {
        return Ok(0.0);
    }
    let k = LoganKernel::new(c, epsilon)?;
    let (mu, nu) = (k.mu(alpha), k.nu(alpha).abs());
    let b = epsilon * x * (-epsilon).exp() * nu / (2.0 * mu);
    if !(b > 1.0) {
        return Err(Error::Infeasible {
            reason: format!("window reduction alpha = {alpha} is too aggressive for x = {x} (B = {b} <= 1); raise alpha"),
            zeros_needed_to: None,
        });
    }
    Ok(2.0 * epsilon * x * (2.0 * epsilon).exp() * nu / b.ln()
        + epsilon.exp() * mu * power_count_bound(x, epsilon))
}

/// Writes `a b s0 s1 s2` for each `2^20` segment of the window.
pub fn dump_moments(window: &Window, path: impl AsRef<Path>) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(out, "# a b s0 s1 s2")?;
    for m in sieve_segment(window.lo, window.hi)? {
        writeln!(out, "{} {} {} {} {}", m.a, m.b, m.s[0], m.s[1], m.s[2])?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_bounds() {
        let w = Window::new(1e5 + 0.5, 1e-3, 1.0).unwrap();
        assert_eq!(w.lo, ((1e5 + 0.5) * (-1e-3f64).exp()).ceil() as u64);
        assert_eq!(w.sides(), vec![(w.lo, 100_000), (100_001, w.hi)]);
        assert!(Window::new(1e5, 1e-3, 0.0).is_err());
        assert!(Window::new(1e5, 0.02, 1.0).is_err());
    }

    #[test]
    fn interpolation_tracks_direct_sum() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let w = Window::new(1e6 + 0.5, 1e-3, 1.0).unwrap();
        let d = window_prime_sum(&w, &k, false).unwrap();
        let i = window_prime_sum(&w, &k, true).unwrap();
        assert_eq!(d.primes, i.primes);
        assert!((d.value - i.value).abs() <= i.interp_error + i.numerical_error + d.numerical_error);
    }

    #[test]
    fn power_sum_matches_factorization() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let x = 1e5 + 0.5;
        let w = Window::new(x, 1e-3, 1.0).unwrap();
        let got = window_power_sum(&w, &k).unwrap().value;
        let mut brute = 0.0;
        for n in w.lo..=w.hi {
            for m in 2..=17u32 {
                let r = iroot(n, m);
                if r.pow(m) == n && is_prime(r) {
                    brute += m_weight(x, &k, n as f64) / m as f64;
                }
            }
        }
        assert!((got - brute).abs() < 1e-14);
    }

    #[test]
    fn alpha_bound_reference() {
        let v = alpha_truncation_bound(1e8, 20.0, 1e-4, 0.84).unwrap();
        // μ_c(0.84) ≈ 7.8e-6 comes out of a cancelling series with ~1e-15 absolute error
        assert!(((v - 9.040406646505066541e-4) / v).abs() < 1e-9, "{v}");
        assert_eq!(alpha_truncation_bound(1e8, 20.0, 1e-4, 1.0).unwrap(), 0.0);
        let b: Vec<f64> = [0.7, 0.8, 0.9]
            .iter()
            .map(|&a| alpha_truncation_bound(1e8, 20.0, 1e-4, a).unwrap())
            .collect();
        assert!(b[0] > b[1] && b[1] > b[2]);
    }
}
