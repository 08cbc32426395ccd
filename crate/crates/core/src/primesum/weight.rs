//! The window weight `M_{x,c,ε}(t)` and the derivative data used to interpolate it.

use crate::kernel::LoganKernel;

/// `log(t/x)`, exact up to rounding when `t − x` is representable.
#[inline]
fn log_ratio(x: f64, t: f64) -> f64 {
    ((t - x) / x).ln_1p()
}

/// `M_{x,c,ε}(t) = λ⁻¹[μ_{c,ε}(u) + (1/log t − 1/2)(u·μ_{c,ε}(u) − ν_{c,ε}(u))]`, `u = log(t/x)`.
pub fn m_weight(x: f64, kernel: &LoganKernel<f64>, t: f64) -> f64 {
    let eps = kernel.epsilon();
    let u = log_ratio(x, t);
    let y = u / eps;
    if y.abs() >= 1.0 {
        return 0.0;
    }
    let mu = kernel.mu(y);
    let nu = eps * kernel.nu(y);
    let g = 1.0 / t.ln() - 0.5;
    (mu + g * (u * mu - nu)) / kernel.lambda_ce()
}

/// `(M, M', M'')` in `t`, for `t ≠ x`.
pub fn m_derivs(x: f64, kernel: &LoganKernel<f64>, t: f64) -> [f64; 3] {
    let eps = kernel.epsilon();
    let u = log_ratio(x, t);
    let y = u / eps;
    if y.abs() >= 1.0 {
        return [0.0; 3];
    }
    let [eta, eta1, _] = kernel.eta_derivs(y);
    let f = kernel.mu(y);
    let f1 = -eta / eps;
    let f2 = -eta1 / (eps * eps);
    let g_ = u * f - eps * kernel.nu(y);
    let g1 = u * f1;
    let g2 = f1 + u * f2;
    let l = t.ln();
    let w = 1.0 / l - 0.5;
    let w1 = -1.0 / (t * l * l);
    let w2 = (l + 2.0) / (t * t * l * l * l);
    let inv = 1.0 / kernel.lambda_ce();
    let m = (f + w * g_) * inv;
    let m1 = (f1 / t + w1 * g_ + w * g1 / t) * inv;
    let m2 = ((f2 - f1) / (t * t) + w2 * g_ + 2.0 * w1 * g1 / t + w * (g2 - g1) / (t * t)) * inv;
    [m, m1, m2]
}

/// Upper bounds for `I₀(c√s)` and its first two `s`-derivatives, from the
/// positive power series in `s`.
fn i0_series_bounds(c: f64, s: f64) -> [f64; 3] {
    let q = 0.25 * c * c;
    let s = s.clamp(0.0, 1.0);
    let mut a = 1.0; // (c²/4)^n / (n!)²
    let mut out = [0.0f64; 3];
    for n in 0..10_000usize {
        let nf = n as f64;
        let t0 = a * s.powi(n as i32);
        let t1 = if n >= 1 { nf * a * s.powi(n as i32 - 1) } else { 0.0 };
        let t2 = if n >= 2 { nf * (nf - 1.0) * a * s.powi(n as i32 - 2) } else { 0.0 };
        out[0] += t0;
        out[1] += t1;
        out[2] += t2;
        // past the peak the terms fall faster than geometrically
        if nf > c + 4.0 && t0 <= 1e-18 * out[0] && t1 <= 1e-18 * out[1] && t2 <= 1e-18 * out[2] {
            break;
        }
        a *= q / ((n + 1) as f64 * (n + 1) as f64);
    }
    out.map(|v| v * (1.0 + 1e-15))
}

/// Upper bound on `|M'''(t)|` for `t ∈ [t1, t2]`, an interval on one side of `x`.
pub fn m_third_bound(x: f64, kernel: &LoganKernel<f64>, t1: f64, t2: f64) -> f64 {
    let eps = kernel.epsilon();
    let c = kernel.c();
    let (y1, y2) = (log_ratio(x, t1) / eps, log_ratio(x, t2) / eps);
    let ymax = y1.abs().max(y2.abs()).min(1.0);
    let ymin = if y1 * y2 <= 0.0 { 0.0 } else { y1.abs().min(y2.abs()).min(1.0) };
    if ymin >= 1.0 {
        return 0.0;
    }
    let smax = 1.0 - ymin * ymin;
    let k = c / (2.0 * kernel.sinh_c());
    let [s0, s1, s2] = i0_series_bounds(c, smax);
    // |η|, |η'|, |η''| on the interval
    let e0 = k * s0;
    let e1 = 2.0 * ymax * k * s1;
    let e2 = 2.0 * k * s1 + 4.0 * ymax * ymax * k * s2;
    let d1 = e0 / eps;
    let d2 = e1 / (eps * eps);
    let d3 = e2 / (eps * eps * eps);
    let ub = eps * ymax;
    // G = uF − ν_{c,ε}, G' = uF', G'' = F' + uF'', G''' = 2F'' + uF'''
    let g0 = 1.5 * eps;
    let g1 = ub * d1;
    let g2 = d1 + ub * d2;
    let g3 = 2.0 * d2 + ub * d3;
    let t = t1.min(t2);
    let l = t.ln();
    let (t2p, t3p) = (t * t, t * t * t);
    // (d/dt)^k of H(u(t)) from u-derivatives, u' = 1/t
    let h_t = |h1: f64| h1 / t;
    let h_tt = |h1: f64, h2: f64| (h2 + h1) / t2p;
    let h_ttt = |h1: f64, h2: f64, h3: f64| (h3 + 3.0 * h2 + 2.0 * h1) / t3p;
    let w0 = 0.5;
    let w1 = 1.0 / (t * l * l);
    let w2 = (l + 2.0) / (t2p * l * l * l);
    let w3 = (2.0 * l * l + 6.0 * l + 6.0) / (t3p * l.powi(4));
    let f3 = h_ttt(d1, d2, d3);
    let gg = w3 * g0 + 3.0 * w2 * h_t(g1) + 3.0 * w1 * h_tt(g1, g2) + w0 * h_ttt(g1, g2, g3);
    (f3 + gg) / kernel.lambda_ce() * (1.0 + 1e-12)
}

/// Absolute error bound for one evaluation of [`m_weight`].
pub fn m_eval_error(kernel: &LoganKernel<f64>) -> f64 {
    kernel.series_roundoff() * 2.0 + 8.0 * f64::EPSILON
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_value() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let v = m_weight(1e5 + 0.5, &k, 1e5 + 7.0);
        assert!((v - 0.4063469494212875228).abs() < 1e-9, "{v}");
    }

    #[test]
    fn support_and_jump() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let x = 1e5 + 0.5;
        assert_eq!(m_weight(x, &k, x * (1e-3f64).exp() * 1.0001), 0.0);
        assert_eq!(m_weight(x, &k, x * (-1e-3f64).exp() * 0.9999), 0.0);
        let (below, above) = (m_weight(x, &k, x - 1e-7), m_weight(x, &k, x + 1e-7));
        assert!((above - below - 1.0 / k.lambda_ce()).abs() < 1e-6);
    }

    #[test]
    fn derivatives_match_differences() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let x = 1e5 + 0.5;
        for &t in &[99_920.0, 99_990.0, 100_003.0, 100_070.0] {
            let [m, m1, m2] = m_derivs(x, &k, t);
            assert!((m - m_weight(x, &k, t)).abs() < 1e-14);
            let h = 0.004;
            let fd1 = (m_weight(x, &k, t + h) - m_weight(x, &k, t - h)) / (2.0 * h);
            let fd2 = (m_derivs(x, &k, t + h)[1] - m_derivs(x, &k, t - h)[1]) / (2.0 * h);
            assert!((fd1 - m1).abs() < 1e-6 * m1.abs().max(1e-4), "{t}: {fd1} {m1}");
            assert!((fd2 - m2).abs() < 1e-5 * m2.abs().max(1e-6), "{t}: {fd2} {m2}");
        }
    }

    #[test]
    fn third_derivative_bound_holds() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let x = 1e5 + 0.5;
        for &(a, b) in &[(99_905.0, 99_960.0), (99_980.0, 100_000.0), (100_001.0, 100_040.0)] {
            let bound = m_third_bound(x, &k, a, b);
            let h = 0.25;
            let mut t = a + h;
            while t < b - h {
                let d3 = (m_derivs(x, &k, t + h)[2] - m_derivs(x, &k, t - h)[2]) / (2.0 * h);
                assert!(d3.abs() <= bound, "{t}: {d3} > {bound}");
                t += 1.0;
            }
        }
    }
}
