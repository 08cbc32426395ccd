//! Hardy's `Z(t)` with explicit error bounds.
//!
//! Two evaluators are available: the Riemann–Siegel formula with four
//! correction terms for large `t`, and Euler–Maclaurin summation of
//! `ζ(1/2 + it)` when a tighter or low-height value is needed. Every phase
//! `θ(t) − t·log n` is formed in double-double arithmetic before reduction.

use std::sync::OnceLock;

use num_complex::Complex64;

use super::tables::{BERNOULLI_OVER_FACT, C0, C1, C2, C3, C4};
use crate::dd::{DoubleDouble, LN_2PI, PI, PI_OVER_8};

const LOG_TABLE_LEN: usize = 4096;

fn log_table() -> &'static [DoubleDouble] {
    static TABLE: OnceLock<Vec<DoubleDouble>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..LOG_TABLE_LEN)
            .map(|n| if n == 0 { DoubleDouble::default() } else { DoubleDouble::ln(n as f64) })
            .collect()
    })
}

#[inline]
fn ln_n(n: usize) -> DoubleDouble {
    if n < LOG_TABLE_LEN {
        log_table()[n]
    } else {
        DoubleDouble::ln(n as f64)
    }
}

/// `(1 − 2^{1−2k})·|B_{2k}|/(4k(2k−1))` for the asymptotic series of `θ`.
fn theta_coeffs() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut fact = 1.0_f64;
        (1..=BERNOULLI_OVER_FACT.len())
            .map(|k| {
                fact *= ((2 * k - 1) * (2 * k)) as f64;
                let b = BERNOULLI_OVER_FACT[k - 1].abs() * fact;
                (1.0 - 2f64.powi(1 - 2 * k as i32)) * b / ((4 * k * (2 * k - 1)) as f64)
            })
            .collect()
    })
}

/// Riemann–Siegel theta `θ(t)` in double-double precision, for `t ≥ 9`.
pub fn theta_dd(t: f64) -> DoubleDouble {
    debug_assert!(t >= 9.0);
    let half = 0.5 * t;
    let main = (DoubleDouble::ln(t) - LN_2PI) * half - DoubleDouble::from(half) - PI_OVER_8;
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    let mut pw = inv;
    let mut corr = 0.0;
    let mut last = f64::INFINITY;
    for &c in theta_coeffs() {
        let term = c * pw;
        if term >= last || term < 1e-34 * t {
            break;
        }
        corr += term;
        last = term;
        pw *= inv2;
    }
    main.add_f64(corr)
}

pub fn theta(t: f64) -> f64 {
    theta_dd(t).to_f64()
}

/// `θ'(t)`, enough for Newton steps on Gram points.
pub fn theta_prime(t: f64) -> f64 {
    0.5 * (t / (2.0 * std::f64::consts::PI)).ln()
}

/// Gabcke-type bound on the Riemann–Siegel remainder after the `C_4` term, valid for `t ≥ 200`.
pub fn rs_truncation_bound(t: f64) -> f64 {
    0.017 * t.powf(-2.75)
}

fn poly(c: &[f64], z: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &v| acc * z + v)
}

/// Riemann–Siegel value and error bound; `t ≥ 200`.
pub fn z_riemann_siegel(t: f64) -> (f64, f64) {
    let th = theta_dd(t);
    let a = (t / (2.0 * std::f64::consts::PI)).sqrt();
    let n_max = a.floor() as usize;
    let p = a - n_max as f64;
    let mut sum = 0.0;
    let mut comp = 0.0;
    for n in 1..=n_max {
        let phase = (th - ln_n(n) * t).rem_two_pi();
        let term = phase.cos() / (n as f64).sqrt();
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    let z = p - 0.5;
    let inv_a = 1.0 / a;
    let corr = poly(&C0, z)
        + inv_a * (poly(&C1, z) + inv_a * (poly(&C2, z) + inv_a * (poly(&C3, z) + inv_a * poly(&C4, z))));
    let sign = if n_max % 2 == 1 { 1.0 } else { -1.0 };
    let value = 2.0 * sum + sign * corr / a.sqrt();
    let roundoff = 2e-15 * (n_max as f64).sqrt() + 1e-15;
    (value, rs_truncation_bound(t) + roundoff)
}

/// Euler–Maclaurin value and error bound, aiming for `target`; `t ≥ 9`.
pub fn z_euler_maclaurin(t: f64, target: f64) -> (f64, f64) {
    let m_max = BERNOULLI_OVER_FACT.len() - 1;
    let n = (((t + 2.0 * m_max as f64 + 2.0) / std::f64::consts::PI).ceil() as usize).max(16);
    let th = theta_dd(t);
    let mut sum = 0.0;
    let mut comp = 0.0;
    for k in 1..n {
        let phase = (th - ln_n(k) * t).rem_two_pi();
        let term = phase.cos() / (k as f64).sqrt();
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    let nf = n as f64;
    let s = Complex64::new(0.5, t);
    let (sn, cn) = (th - ln_n(n) * t).rem_two_pi().sin_cos();
    // w = e^{iθ}·N^{−s}
    let w = Complex64::new(cn, sn) / nf.sqrt();
    let mut tail = Complex64::new(nf, 0.0) / (s - 1.0) + 0.5;
    // poch = s(s+1)···(s+2k−2)
    let mut poch = s;
    let mut npow = 1.0 / nf;
    let mut bound = f64::INFINITY;
    for k in 1..=m_max {
        tail += poch * (BERNOULLI_OVER_FACT[k - 1] * npow);
        poch *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        npow /= nf * nf;
        // |R_k| ≤ |s + 2k + 1|/(σ + 2k + 1)·|T_{k+1}|
        let next = (BERNOULLI_OVER_FACT[k] * npow).abs() * poch.norm() / nf.sqrt();
        bound = next * (s + (2 * k + 1) as f64).norm() / (0.5 + (2 * k + 1) as f64);
        if bound < 0.1 * target {
            break;
        }
    }
    let value = sum + (w * tail).re;
    let roundoff = 2e-15 * nf.sqrt() + 1e-15;
    (value, bound + roundoff)
}

/// `Z(t)` with a rigorous error bound, using the cheaper method that meets `target`.
pub fn z_with_bound(t: f64, target: f64) -> (f64, f64) {
    if t >= 200.0 && rs_truncation_bound(t) <= 0.1 * target {
        z_riemann_siegel(t)
    } else {
        z_euler_maclaurin(t, target)
    }
}

/// `Z(t)` to about 1e-12.
pub fn z(t: f64) -> f64 {
    z_with_bound(t, 1e-12).0
}

/// Gram point `g_n`, the solution of `θ(g) = nπ`, for `n ≥ −1`.
pub fn gram_point(n: i64) -> f64 {
    let target = PI * n as f64;
    // θ(t) ≈ (t/2)·log(t/2πe) − π/8 gives a start within a few percent
    let mut g = if n < 5 {
        9.666908056130192 + 8.0 * (n + 1) as f64
    } else {
        let y = (n as f64 + 0.125) / std::f64::consts::E;
        let mut w = y.ln() - y.ln().ln().max(0.0);
        for _ in 0..20 {
            let ew = w.exp();
            w -= (w * ew - y) / (ew * (w + 1.0));
        }
        2.0 * std::f64::consts::PI * (1.0 + w).exp()
    };
    for _ in 0..60 {
        let diff = (theta_dd(g) - target).to_f64();
        let step = diff / theta_prime(g);
        g -= step;
        if step.abs() <= 1e-15 * g {
            break;
        }
    }
    g
}
