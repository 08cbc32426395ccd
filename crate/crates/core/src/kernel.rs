//! Logan kernel `ℓ_c`, its transform `η_c`, and the window antiderivatives `μ_c`, `ν_c`.
//!
//! All quantities are evaluated in forms that never build `sinh c` or
//! `I_k(c)` on their own, so large `c` stays finite in `f32` as well.

use crate::error::{domain, Result};
use crate::scalar::Scalar;
use crate::sum::CompensatedSum;

/// Modified Bessel function `I_k(z)` by its power series.
pub fn bessel_i<T: Scalar>(k: u32, z: T) -> T {
    if z == T::zero() {
        return if k == 0 { T::one() } else { T::zero() };
    }
    let half = z / T::lit(2.0);
    let q = half * half;
    let mut term = T::one();
    for j in 1..=k {
        term = term * half / T::lit(j as f64);
    }
    let stop = T::lit(1e-18).max(T::epsilon() * T::lit(1e-2));
    let mut acc = CompensatedSum::new();
    acc += term;
    let mut n = 1u32;
    loop {
        term = term * q / T::lit((n as f64) * ((n + k) as f64));
        acc += term;
        if term <= stop * acc.total() {
            break;
        }
        n += 1;
    }
    acc.total()
}

/// `e^{-z}·I_k(z)/z^k`, smooth at `z = 0` where it equals `1/(2^k k!)`.
pub fn bessel_i_scaled_over_pow<T: Scalar>(k: u32, z: T) -> T {
    let mut term = (-z).exp();
    for j in 1..=k {
        term = term / T::lit(2.0 * j as f64);
    }
    let half = z / T::lit(2.0);
    let q = half * half;
    let mut acc = CompensatedSum::new();
    acc += term;
    let mut n = 1u32;
    while q > T::zero() {
        term = term * q / T::lit((n as f64) * ((n + k) as f64));
        acc += term;
        if term <= T::epsilon() * T::lit(1e-3) * acc.total() {
            break;
        }
        n += 1;
    }
    acc.total()
}

/// `e^{-z}·I_0(z)`.
pub fn bessel_i0_scaled<T: Scalar>(z: T) -> T {
    bessel_i_scaled_over_pow(0, z)
}

/// Normalization constants `(λ_{c,ε}, A_{c,ε})`.
pub fn lambda_a_constants<T: Scalar>(c: T, epsilon: T) -> Result<(T, T)> {
    check_params(c, epsilon)?;
    let (lm1, a) = lambda_a_parts(c, epsilon);
    Ok((T::one() + lm1, a))
}

fn check_params<T: Scalar>(c: T, epsilon: T) -> Result<()> {
    if !(c >= T::one()) || !c.is_finite() {
        return domain(format!("kernel sharpness c must be at least 1, got {c}"));
    }
    if !(epsilon > T::zero() && epsilon <= T::lit(0.01)) {
        return domain(format!("dilation epsilon must lie in (0, 0.01], got {epsilon}"));
    }
    Ok(())
}

/// Returns `(λ_{c,ε} − 1, A_{c,ε})` without cancellation.
fn lambda_a_parts<T: Scalar>(c: T, epsilon: T) -> (T, T) {
    let two = T::lit(2.0);
    let quarter_e2 = epsilon * epsilon / T::lit(4.0);
    let r = (c * c + quarter_e2).sqrt();
    let r_minus_c = quarter_e2 / (r + c);
    // log λ = −½·log(1 + ε²/4c²) + (r − c) + log((1 − e^{−2r})/(1 − e^{−2c}))
    let e2c = (-two * c).exp();
    let ratio_log = (-(e2c * (-two * r_minus_c).exp_m1()) / (T::one() - e2c)).ln_1p();
    let log_lambda = -(quarter_e2 / (c * c)).ln_1p() / two + r_minus_c + ratio_log;
    let lambda_m1 = log_lambda.exp_m1();
    let coth = (T::one() + e2c) / (T::one() - e2c);
    let a = epsilon * epsilon / (two * c) * (coth - T::one() / c);
    (lambda_m1, a)
}

#[derive(Clone, Debug)]
pub struct LoganKernel<T> {
    c: T,
    epsilon: T,
    lambda_ce: T,
    lambda_m1: T,
    a_ce: T,
    sinh_c: T,
    /// `c/(1 − e^{−2c})`; multiplied by `e^{w−c}` this gives `c·e^w/(2 sinh c)`.
    scale: T,
    coeffs: Vec<T>,
    abs_coeff_sum: T,
    nu0: T,
    k_max: usize,
}

impl<T: Scalar> LoganKernel<T> {
    pub fn new(c: T, epsilon: T) -> Result<Self> {
        check_params(c, epsilon)?;
        let (lambda_m1, a_ce) = lambda_a_parts(c, epsilon);
        let two = T::lit(2.0);
        let scale = c / -(-two * c).exp_m1();
        let k_max = (c.to_f64().unwrap() * std::f64::consts::E).ceil() as usize;

        // Ratios I_k(c)/I_{k−1}(c) by backward recurrence of the continued fraction.
        let top = k_max + 40 + c.to_f64().unwrap() as usize;
        let mut ratios = vec![T::zero(); k_max + 1];
        let mut r = T::zero();
        for k in (1..=top).rev() {
            r = T::one() / (two * T::lit(k as f64) / c + r);
            if k <= k_max {
                ratios[k] = r;
            }
        }
        let i0e = bessel_i0_scaled(c);
        // λ_k = (−1)^k (c/2)^{k+1} I_k(c) / (k! sinh c)
        let mut coeffs = Vec::with_capacity(k_max + 1);
        let mut lam = scale * i0e;
        coeffs.push(lam);
        for (k, &ratio) in ratios.iter().enumerate().skip(1) {
            lam = -lam * (c / two) / T::lit(k as f64) * ratio;
            coeffs.push(lam);
        }
        let abs_coeff_sum = coeffs.iter().fold(T::zero(), |s, v| s + v.abs());
        let nu0 = -scale * i0e * ratios.get(1).copied().unwrap_or(T::zero()) / c;
        Ok(Self {
            c,
            epsilon,
            lambda_ce: T::one() + lambda_m1,
            lambda_m1,
            a_ce,
            sinh_c: c.sinh(),
            scale,
            coeffs,
            abs_coeff_sum,
            nu0,
            k_max,
        })
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn epsilon(&self) -> T {
        self.epsilon
    }

    /// `λ_{c,ε} = ℓ_{c,ε}(i/2)`.
    pub fn lambda_ce(&self) -> T {
        self.lambda_ce
    }

    /// `λ_{c,ε} − 1`, accurate even when it is below the unit roundoff.
    pub fn lambda_ce_minus_one(&self) -> T {
        self.lambda_m1
    }

    pub fn a_ce(&self) -> T {
        self.a_ce
    }

    pub fn sinh_c(&self) -> T {
        self.sinh_c
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn nu0(&self) -> T {
        self.nu0
    }

    /// Series truncation index `⌈c·e⌉`.
    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `c·e^{w}/(2 sinh c)` evaluated as `scale·e^{w−c}`.
    #[inline]
    fn half_csch_exp(&self, w: T) -> T {
        self.scale * (w - self.c).exp()
    }

    /// `ℓ_c(u)` at the already-dilated argument `u = ε·t`.
    pub fn ell(&self, u: T) -> T {
        let c = self.c;
        let q = u * u - c * c;
        if q.abs() < T::lit(1e-6) * c * c {
            // sin√q/√q = Σ (−q)^k/(2k+1)!
            let mut term = T::one();
            let mut acc = T::one();
            for k in 1..6 {
                term = -term * q / T::lit(((2 * k) * (2 * k + 1)) as f64);
                acc = acc + term;
            }
            return self.half_csch_exp(T::zero()) * T::lit(2.0) * acc;
        }
        if q > T::zero() {
            let s = q.sqrt();
            T::lit(2.0) * self.half_csch_exp(T::zero()) * s.sin() / s
        } else {
            let w = (-q).sqrt();
            // (c/sinh c)·sinh w / w
            self.half_csch_exp(w) * -(-T::lit(2.0) * w).exp_m1() / w
        }
    }

    /// `ℓ_{c,ε}(γ) = ℓ_c(εγ)`.
    pub fn ell_dilated(&self, gamma: T) -> T {
        self.ell(self.epsilon * gamma)
    }

    /// `dℓ_c/du` at `u`.
    pub fn ell_deriv(&self, u: T) -> T {
        let c = self.c;
        let two = T::lit(2.0);
        let q = u * u - c * c;
        let k_c = two * self.half_csch_exp(T::zero());
        // S(q) = sin√q/√q, dℓ/du = (c/sinh c)·2u·S'(q)
        let s_prime = if q.abs() < T::one() {
            let mut acc = T::zero();
            let mut qp = T::one();
            let mut fact = T::lit(6.0);
            for k in 1..16 {
                let sign = if k % 2 == 1 { -T::one() } else { T::one() };
                acc = acc + sign * T::lit(k as f64) * qp / fact;
                qp = qp * q;
                fact = fact * T::lit(((2 * k + 2) * (2 * k + 3)) as f64);
            }
            k_c * acc
        } else if q > T::zero() {
            let s = q.sqrt();
            k_c * (s * s.cos() - s.sin()) / (two * s * s * s)
        } else {
            let w = (-q).sqrt();
            let e = self.half_csch_exp(w);
            let em = (-two * w).exp();
            let cosh_part = e * (T::one() + em);
            let sinh_part = e * (T::one() - em);
            -(w * cosh_part - sinh_part) / (two * w * w * w)
        };
        two * u * s_prime
    }

    /// `η_c(y)`, supported on `[−1, 1]` with half value at the endpoints.
    pub fn eta(&self, y: T) -> T {
        let ay = y.abs();
        if ay > T::one() {
            T::zero()
        } else if ay == T::one() {
            self.half_csch_exp(T::zero()) / T::lit(2.0)
        } else {
            let z = self.c * ((T::one() - ay) * (T::one() + ay)).sqrt();
            self.half_csch_exp(z) * bessel_i0_scaled(z)
        }
    }

    /// `(η_c, η_c', η_c'')` at an interior point, or zeros outside `(−1, 1)`.
    pub fn eta_derivs(&self, y: T) -> [T; 3] {
        let ay = y.abs();
        if ay >= T::one() {
            return [T::zero(); 3];
        }
        let c = self.c;
        let c2 = c * c;
        let z = c * ((T::one() - ay) * (T::one() + ay)).sqrt();
        let p = self.half_csch_exp(z);
        let i0 = bessel_i_scaled_over_pow(0, z);
        let g = bessel_i_scaled_over_pow(1, z);
        let h = bessel_i_scaled_over_pow(2, z);
        [p * i0, -p * c2 * y * g, -p * c2 * (g - c2 * y * y * h)]
    }

    fn odd_series(&self, u: T) -> T {
        // Σ λ_k u^{2k+1}/(2k+1)
        let u2 = u * u;
        let mut pw = u;
        let mut acc = CompensatedSum::new();
        for (k, &lam) in self.coeffs.iter().enumerate() {
            acc += lam * pw / T::lit((2 * k + 1) as f64);
            pw = pw * u2;
        }
        acc.total()
    }

    fn even_series(&self, u: T) -> T {
        // Σ λ_k u^{2k+2}/((2k+1)(2k+2))
        let u2 = u * u;
        let mut pw = u2;
        let mut acc = CompensatedSum::new();
        for (k, &lam) in self.coeffs.iter().enumerate() {
            acc += lam * pw / T::lit(((2 * k + 1) * (2 * k + 2)) as f64);
            pw = pw * u2;
        }
        acc.total()
    }

    /// `μ_c(u)`: odd, `1/2` as `u → 0⁺`, zero for `|u| ≥ 1`.
    pub fn mu(&self, u: T) -> T {
        let au = u.abs();
        if u == T::zero() || au >= T::one() {
            return T::zero();
        }
        let v = T::lit(0.5) - self.odd_series(au);
        if u < T::zero() {
            -v
        } else {
            v
        }
    }

    /// `ν_c(u)`: even, `ν_c' = μ_c`, zero for `|u| ≥ 1`.
    pub fn nu(&self, u: T) -> T {
        let au = u.abs();
        if au >= T::one() {
            return T::zero();
        }
        self.nu0 + au / T::lit(2.0) - self.even_series(au)
    }

    /// `μ_{c,ε}(t) = μ_c(t/ε)`.
    pub fn mu_scaled(&self, t: T) -> T {
        self.mu(t / self.epsilon)
    }

    /// `ν_{c,ε}(t) = ε·ν_c(t/ε)`.
    pub fn nu_scaled(&self, t: T) -> T {
        self.epsilon * self.nu(t / self.epsilon)
    }

    /// Absolute rounding-error bound for one `μ` or `ν` series evaluation.
    pub fn series_roundoff(&self) -> T {
        T::lit(4.0) * T::lit(self.k_max as f64 + 4.0) * T::unit_roundoff() * (self.abs_coeff_sum + T::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn bessel_values() {
        assert_eq!(bessel_i(0, 0.0_f64), 1.0);
        assert_eq!(bessel_i(1, 0.0_f64), 0.0);
        assert!(close(bessel_i(0, 2.0_f64), 2.279585302336067267437204, 1e-14));
        let z = 7.5_f64;
        for k in 0..4 {
            let scaled = bessel_i_scaled_over_pow(k, z) * z.powi(k as i32) * z.exp();
            assert!(close(scaled, bessel_i(k, z), 1e-14));
        }
    }

    #[test]
    fn ell_reference_points() {
        let k = LoganKernel::new(10.0_f64, 1e-3).unwrap();
        assert!((k.ell(0.0) - 1.0).abs() < 1e-15);
        assert!(close(k.ell(10.0), 10.0 / 10f64.sinh(), 1e-14));
        assert!(close(k.ell(20.0), -5.237764484236709903318472e-5, 1e-12));
    }

    #[test]
    fn mu_nu_reference_points() {
        let k = LoganKernel::new(10.0_f64, 1e-3).unwrap();
        assert!((k.mu(0.5) - 0.04832579786759265940269388).abs() < 1e-13);
        assert!((k.nu(0.3) - -0.02499112480431683200342682).abs() < 1e-13);
        assert!((k.nu(0.0) - -0.121262681634396534236305).abs() < 1e-14);
        assert!((k.mu(1e-12) - 0.5).abs() < 1e-10);
        assert_eq!(k.mu(1.0), 0.0);
        assert_eq!(k.nu(1.0), 0.0);
        assert_eq!(k.k_max(), 28);
    }

    #[test]
    fn coefficient_signs_alternate() {
        let k = LoganKernel::new(13.0_f64, 1e-3).unwrap();
        for (i, w) in k.coeffs().windows(2).enumerate() {
            assert!(w[0] * w[1] < 0.0, "index {i}");
        }
        assert!(k.coeffs()[0] > 0.0);
    }

    #[test]
    fn constants_at_record_parameters() {
        let (lam, a) = lambda_a_constants(62.0_f64, 6.2e-10).unwrap();
        let k = LoganKernel::new(62.0_f64, 6.2e-10).unwrap();
        assert!(close(k.lambda_ce_minus_one(), 7.625e-22, 1e-3));
        assert!(lam >= 1.0 && lam <= (6.2e-10_f64 / 2.0).exp());
        assert!(close(a, 3.05e-21, 2e-3));
        assert!(a <= 6.2e-10 * 6.2e-10 / 124.0);
        assert!(lambda_a_constants(0.5_f64, 1e-3).is_err());
        assert!(lambda_a_constants(10.0_f64, 0.02).is_err());
    }

    #[test]
    fn single_precision_agrees() {
        let k32 = LoganKernel::new(13.0_f32, 1e-3).unwrap();
        let k64 = LoganKernel::new(13.0_f64, 1e-3).unwrap();
        for &u in &[0.05, 0.3, 0.7, 0.95] {
            assert!((k32.mu(u as f32) as f64 - k64.mu(u)).abs() < 1e-5);
            assert!((k32.nu(u as f32) as f64 - k64.nu(u)).abs() < 1e-5);
            assert!((k32.eta(u as f32) as f64 - k64.eta(u)).abs() < 1e-5);
        }
        for &u in &[0.0, 5.0, 12.9, 13.0, 20.0] {
            assert!((k32.ell(u as f32) as f64 - k64.ell(u)).abs() < 1e-6);
        }
    }

    proptest! {
        #[test]
        fn parity_and_bounds(c in 1.0f64..40.0, u in 0.0f64..1.2) {
            let k = LoganKernel::new(c, 1e-3).unwrap();
            prop_assert_eq!(k.mu(-u), -k.mu(u));
            prop_assert_eq!(k.nu(-u), k.nu(u));
            prop_assert!(k.mu(u).abs() <= 0.5 + 1e-12);
            prop_assert!(k.nu_scaled(u * 1e-3).abs() <= 1e-3);
            prop_assert!(k.eta(u) >= 0.0);
        }

        #[test]
        fn derivative_relations(c in 2.0f64..30.0, u in 0.01f64..0.99) {
            let k = LoganKernel::new(c, 1e-3).unwrap();
            let h = 1e-5;
            let dmu = (k.mu(u + h) - k.mu(u - h)) / (2.0 * h);
            prop_assert!((dmu + k.eta(u)).abs() <= 1e-6);
            let dnu = (k.nu(u + h) - k.nu(u - h)) / (2.0 * h);
            prop_assert!((dnu - k.mu(u)).abs() <= 1e-6);
            let d = k.eta_derivs(u);
            let deta = (k.eta(u + h) - k.eta(u - h)) / (2.0 * h);
            prop_assert!((deta - d[1]).abs() <= 1e-6 * (1.0 + d[1].abs()));
            let d2 = (k.eta_derivs(u + h)[1] - k.eta_derivs(u - h)[1]) / (2.0 * h);
            prop_assert!((d2 - d[2]).abs() <= 1e-5 * (1.0 + d[2].abs()));
        }

        #[test]
        fn ell_derivative_matches_differences(c in 2.0f64..60.0, frac in 0.0f64..1.5) {
            let k = LoganKernel::new(c, 1e-3).unwrap();
            let u = c * frac;
            let h = 1e-5 * c.max(1.0);
            let fd = (k.ell(u + h) - k.ell(u - h)) / (2.0 * h);
            prop_assert!((fd - k.ell_deriv(u)).abs() <= 1e-6);
        }

        #[test]
        fn lambda_invariants(c in 1.0f64..100.0, eps in 1e-12f64..0.01) {
            let k = LoganKernel::new(c, eps).unwrap();
            prop_assert!(k.lambda_ce_minus_one() > 0.0);
            prop_assert!(k.lambda_ce() <= (eps / 2.0).exp() * (1.0 + 1e-15));
            prop_assert!(k.a_ce() > 0.0 && k.a_ce() <= eps * eps / (2.0 * c));
        }
    }
}
