//! Reference implementations that share no code path with the analytic engine:
//! an odd-only sieve for `π(n)`, brute-force `π*(x)`, adaptive Gauss–Kronrod
//! quadrature, and direct quadrature of `Ẽ_k` and of the smoothed test function `φ`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::kernel::LoganKernel;
use crate::sum::CompensatedSum;

/// Largest argument [`oracle_pi`] accepts.
pub const ORACLE_PI_CAP: u64 = 1_000_000_000;

/// `π(n)` by an odd-only segmented sieve.
pub fn oracle_pi(n: u64) -> Result<u64> {
    if n > ORACLE_PI_CAP {
        return domain(format!("oracle_pi is capped at {ORACLE_PI_CAP}, got {n}"));
    }
    if n < 2 {
        return Ok(0);
    }
    // odd numbers 2i+1, i ≥ 1
    let limit = (n - 1) / 2;
    let root = (n as f64).sqrt() as u64 + 1;
    let small: Vec<u64> = {
        let mut flags = vec![true; (root / 2 + 1) as usize];
        let mut out = Vec::new();
        for i in 1..flags.len() {
            if flags[i] {
                let p = 2 * i as u64 + 1;
                out.push(p);
                let mut j = (p * p / 2) as usize;
                while j < flags.len() {
                    flags[j] = false;
                    j += p as usize;
                }
            }
        }
        out
    };
    const SEG: u64 = 1 << 18;
    let mut count = 1u64; // the prime 2
    let mut start = 1u64;
    let mut seg = vec![true; SEG as usize];
    while start <= limit {
        let end = (start + SEG - 1).min(limit);
        let len = (end - start + 1) as usize;
        seg[..len].fill(true);
        for &p in &small {
            let sq = p * p;
            if sq > 2 * end + 1 {
                break;
            }
            // first odd multiple of p that is ≥ max(p², 2·start+1)
            let lo_val = 2 * start + 1;
            let mut m = if sq >= lo_val { sq } else { lo_val.div_ceil(p) * p };
            if m % 2 == 0 {
                m += p;
            }
            let mut idx = (m / 2 - start) as usize;
            while idx < len {
                seg[idx] = false;
                idx += p as usize;
            }
        }
        count += seg[..len].iter().filter(|&&b| b).count() as u64;
        start = end + 1;
    }
    Ok(count)
}

/// `π(n)` by trial division; only for cross-checking small ranges.
pub fn trial_division_pi(n: u64) -> u64 {
    (2..=n).filter(|&k| (2..).take_while(|d| d * d <= k).all(|d| k % d != 0)).count() as u64
}

fn floor_root(n: u64, m: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / m as f64).round() as u64;
    while r > 0 && r.checked_pow(m).map_or(true, |v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(m).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}

/// `π*(x) = Σ_{m≥1} π(x^{1/m})/m` at a half-integer `x`.
pub fn oracle_pi_star(x: f64) -> Result<f64> {
    let twice = 2.0 * x;
    if !(x > 0.0) || twice.fract() != 0.0 || (twice as u64) % 2 != 1 {
        return domain(format!("oracle_pi_star needs a half-integer argument, got {x}"));
    }
    let n = x.floor() as u64;
    let mut acc = CompensatedSum::new();
    let mut m = 1u32;
    loop {
        let r = floor_root(n, m);
        if r < 2 {
            break;
        }
        acc.add(oracle_pi(r)? as f64 / m as f64);
        m += 1;
    }
    Ok(acc.total())
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let (f1, f2) = (f(c - dx), f(c + dx));
        k += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            g += WG[j / 2] * (f1 + f2);
        }
    }
    (k * h, ((k - g) * h).abs())
}

struct Piece {
    a: f64,
    b: f64,
    val: f64,
    err: f64,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// Result of [`integrate`]: value and estimated absolute error.
#[derive(Clone, Copy, Debug)]
pub struct Quad {
    pub value: f64,
    pub error: f64,
}

/// Globally adaptive 7/15-point Gauss–Kronrod quadrature.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> Result<Quad> {
    if a == b {
        return Ok(Quad { value: 0.0, error: 0.0 });
    }
    let (v, e) = gk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, val: v, err: e });
    let (mut total, mut err) = (v, e);
    for _ in 0..20_000 {
        if err <= abs_tol.max(rel_tol * total.abs()) {
            let value = heap.iter().fold(CompensatedSum::new(), |mut s, p| {
                s.add(p.val);
                s
            });
            return Ok(Quad {
                value: value.total(),
                error: err,
            });
        }
        let p = heap.pop().unwrap();
        let m = 0.5 * (p.a + p.b);
        let (v1, e1) = gk15(&f, p.a, m);
        let (v2, e2) = gk15(&f, m, p.b);
        total += v1 + v2 - p.val;
        err += e1 + e2 - p.err;
        heap.push(Piece { a: p.a, b: m, val: v1, err: e1 });
        heap.push(Piece { a: m, b: p.b, val: v2, err: e2 });
        // recompute the running error now and then to shed cancellation
        if heap.len() % 64 == 0 {
            err = heap.iter().map(|p| p.err).sum();
        }
    }
    Err(Error::Quadrature(format!("no convergence on [{a}, {b}], error estimate {err}")))
}

/// `Ẽ_k(z) = ∫_0^∞ e^{z−t}/(z−t)^k dt` by quadrature, for `Im z ≠ 0`.
pub fn e_tilde(k: u32, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return domain("e_tilde needs Im z != 0");
    }
    // e^z ∫_0^T e^{−t}(z−t)^{−k} dt; beyond T = 60 the integrand is below e^{−60}|Im z|^{−k}
    let g = |t: f64| (-t).exp() * (z - t).powi(-(k as i32));
    let tol = 1e-17 * z.im.abs().powi(-(k as i32));
    let re = integrate(|t| g(t).re, 0.0, 60.0, tol, 1e-16)?;
    let im = integrate(|t| g(t).im, 0.0, 60.0, tol, 1e-16)?;
    Ok(z.exp() * Complex64::new(re.value, im.value))
}

/// Direct evaluation of `φ_{x,c,ε}(t) = λ⁻¹(χ_{(−∞,log x]}(f₁ + A(f₂ − 2f₃))) ∗ η_{c,ε}(t)`.
#[derive(Clone, Debug)]
pub struct PhiDirect {
    pub x: f64,
    pub kernel: LoganKernel<f64>,
    pub tol: f64,
}

impl PhiDirect {
    pub fn new(x: f64, kernel: LoganKernel<f64>, tol: f64) -> Self {
        Self { x, kernel, tol }
    }

    fn f(&self, s: f64) -> f64 {
        let a = self.kernel.a_ce();
        let e = (0.5 * s).exp();
        e / s + a * (e / (s * s) - 2.0 * e / (s * s * s))
    }

    /// `φ(t)` and the quadrature error estimate, for `|t| > ε`.
    pub fn phi(&self, t: f64) -> Result<Quad> {
        let eps = self.kernel.epsilon();
        if !(t.abs() > eps) {
            return domain(format!("phi is defined for |t| > epsilon, got {t}"));
        }
        let log_x = self.x.ln();
        // ∫_{−1}^{1} η_c(y)·χ(t − εy ≤ log x)·F(t − εy) dy
        let lo = ((t - log_x) / eps).max(-1.0);
        if lo >= 1.0 {
            return Ok(Quad { value: 0.0, error: 0.0 });
        }
        let q = integrate(|y| self.kernel.eta(y) * self.f(t - eps * y), lo, 1.0, self.tol, 1e-15)?;
        let inv = 1.0 / self.kernel.lambda_ce();
        Ok(Quad {
            value: q.value * inv,
            error: q.error * inv,
        })
    }

    /// `π*_{c,ε}(x) = Σ_{p^m} (log p/p^{m/2})·φ(m log p)` and its quadrature error.
    pub fn pi_star_smoothed(&self) -> Result<Quad> {
        let eps = self.kernel.epsilon();
        let top = (self.x * eps.exp()).floor() as u64;
        if top > 100_000_000 {
            return domain("prime-side oracle limited to x <= 1e8");
        }
        let n = top as usize;
        let mut composite = vec![false; n + 1];
        let mut sum = CompensatedSum::new();
        let mut err = 0.0;
        for p in 2..=n {
            if composite[p] {
                continue;
            }
            let mut j = p * p;
            while j <= n {
                composite[j] = true;
                j += p;
            }
            let lp = (p as f64).ln();
            let mut pm = p as f64;
            let mut m = 1.0;
            while pm <= top as f64 {
                let q = self.phi(m * lp)?;
                let w = lp / pm.sqrt();
                sum.add(w * q.value);
                err += w * q.error;
                pm *= p as f64;
                m += 1.0;
            }
        }
        Ok(Quad {
            value: sum.total(),
            error: err,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_counts() {
        assert_eq!(oracle_pi(0).unwrap(), 0);
        assert_eq!(oracle_pi(10).unwrap(), 4);
        assert_eq!(oracle_pi(1_000_000).unwrap(), 78_498);
        assert_eq!(oracle_pi(10_000_000).unwrap(), 664_579);
        assert!(oracle_pi(ORACLE_PI_CAP + 1).is_err());
        for n in [2u64, 3, 4, 100, 997, 1_000, 10_000, 65_537] {
            assert_eq!(oracle_pi(n).unwrap(), trial_division_pi(n), "n = {n}");
        }
    }

    #[test]
    fn agrees_with_trial_division_to_1e5() {
        let mut count = 0u64;
        for n in 0..=100_000u64 {
            if n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0) {
                count += 1;
            }
            if n % 9_973 == 0 || n == 100_000 {
                assert_eq!(oracle_pi(n).unwrap(), count, "n = {n}");
            }
        }
    }

    #[test]
    fn pi_star_examples() {
        assert!((oracle_pi_star(10.5).unwrap() - (4.0 + 1.0 + 1.0 / 3.0)).abs() < 1e-15);
        assert_eq!(oracle_pi_star(2.5).unwrap(), 1.0);
        assert!(oracle_pi_star(10.0).is_err());
    }

    #[test]
    fn quadrature_basics() {
        let q = integrate(|t| t.sin(), 0.0, std::f64::consts::PI, 1e-14, 1e-14).unwrap();
        assert!((q.value - 2.0).abs() < 1e-13);
        let q = integrate(|t| 1.0 / t.ln(), 2.0, 10.0, 1e-13, 1e-14).unwrap();
        let li = crate::expint::li(10.0).unwrap() - crate::expint::li(2.0).unwrap();
        assert!((q.value - li).abs() < 1e-10);
    }

    #[test]
    fn phi_vanishes_past_log_x() {
        let k = LoganKernel::new(12.0, 5e-3).unwrap();
        let p = PhiDirect::new(5e4, k, 1e-13);
        assert_eq!(p.phi(5e4f64.ln() + 6e-3).unwrap().value, 0.0);
        // well inside, φ is close to f₁
        let t = 5.0f64;
        let f1 = (0.5 * t).exp() / t;
        assert!((p.phi(t).unwrap().value - f1).abs() < 1e-5 * f1);
    }
}
