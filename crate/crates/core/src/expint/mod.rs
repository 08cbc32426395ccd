//! Exponential integrals and the per-zero term of the explicit formula.

mod accel;

pub use accel::{build_accelerator, PsiAccelerator};

use num_complex::Complex64;

use crate::dd::DoubleDouble;
use crate::error::{domain, Result};
use crate::kernel::LoganKernel;
use crate::scalar::Scalar;
use crate::sum::CompensatedSum;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `E₁(w) = ∫_w^∞ e^{−s}/s ds`.
pub fn e1<T: Scalar>(w: T) -> Result<T> {
    if !(w > T::zero()) {
        return domain(format!("E1 needs a positive argument, got {w}"));
    }
    let eps = T::epsilon();
    if w <= T::one() {
        // −γ − ln w − Σ (−w)^n/(n·n!)
        let mut acc = CompensatedSum::new();
        acc += -T::lit(EULER_GAMMA);
        acc += -w.ln();
        let mut term = T::one();
        let mut n = 1;
        loop {
            term = -term * w / T::lit(n as f64);
            let t = term / T::lit(n as f64);
            acc += -t;
            if t.abs() < eps * T::lit(1e-3) {
                break;
            }
            n += 1;
        }
        Ok(acc.total())
    } else {
        // modified Lentz on the continued fraction for e^w E₁(w)
        let tiny = T::min_positive_value() / eps;
        let mut b = w + T::one();
        let mut c = T::one() / tiny;
        let mut d = T::one() / b;
        let mut h = d;
        for i in 1..10_000 {
            let an = -T::lit((i * i) as f64);
            b = b + T::lit(2.0);
            d = T::one() / (an * d + b);
            c = b + an / c;
            let del = c * d;
            h = h * del;
            if (del - T::one()).abs() < eps {
                break;
            }
        }
        Ok(h * (-w).exp())
    }
}

/// `Ei(y)` for real `y ≠ 0`, principal value.
pub fn ei<T: Scalar>(y: T) -> Result<T> {
    if y == T::zero() || y.is_nan() {
        return domain("Ei is singular at 0");
    }
    if y < T::zero() {
        return e1(-y).map(|v| -v);
    }
    let eps = T::epsilon();
    if y < T::lit(40.0) {
        let mut acc = CompensatedSum::new();
        acc += T::lit(EULER_GAMMA);
        acc += y.ln();
        let mut term = T::one();
        let mut n = 1;
        loop {
            term = term * y / T::lit(n as f64);
            let t = term / T::lit(n as f64);
            acc += t;
            if t < eps * T::lit(1e-3) * acc.total().abs() {
                break;
            }
            n += 1;
        }
        Ok(acc.total())
    } else {
        // e^y/y · Σ n!/y^n, stopped at the smallest term
        let mut acc = CompensatedSum::new();
        acc += T::one();
        let mut term = T::one();
        let mut n = 1;
        loop {
            let next = term * T::lit(n as f64) / y;
            if next > term || next < eps * T::lit(1e-3) {
                break;
            }
            term = next;
            acc += term;
            n += 1;
        }
        Ok(y.exp() / y * acc.total())
    }
}

/// Logarithmic integral `li(x) = Ei(log x)`.
pub fn li<T: Scalar>(x: T) -> Result<T> {
    if !(x > T::one()) {
        return domain(format!("li needs x > 1, got {x}"));
    }
    ei(x.ln())
}

/// `∫_x^∞ dt/(t·log t·(t² − 1)) = Σ_{j≥1} E₁(2j·log x)`.
pub fn tail_integral<T: Scalar>(x: T) -> Result<T> {
    if !(x > T::lit(30000.0)) {
        return domain(format!("tail integral is defined here for x > 30000, got {x}"));
    }
    tail_sum(x)
}

pub(crate) fn tail_sum<T: Scalar>(x: T) -> Result<T> {
    let l = x.ln();
    let ratio = T::one() / (x * x);
    let mut acc = CompensatedSum::new();
    let mut j = 1;
    loop {
        let term = e1(T::lit(2.0 * j as f64) * l)?;
        acc += term;
        // later terms shrink at least geometrically by x^{-2}
        let dropped = term * ratio / (T::one() - ratio);
        if dropped < T::lit(1e-20) && dropped < T::epsilon() * acc.total() {
            break;
        }
        j += 1;
    }
    Ok(acc.total())
}

/// Fixed data for evaluating `ψ_{x,c,ε}(ρ)` and `Ψ_{x,c,ε}(ρ)` at many zeros.
#[derive(Clone, Debug)]
pub struct PsiContext {
    x: f64,
    log_x: DoubleDouble,
    sqrt_x: f64,
    kernel: LoganKernel<f64>,
    n_terms: usize,
    alpha: Vec<f64>,
    inv_lambda: f64,
}

impl PsiContext {
    /// Context with the default order `⌊log x⌋`; requires `x > 30000`.
    pub fn new(x: f64, kernel: &LoganKernel<f64>) -> Result<Self> {
        if !(x > 30000.0) {
            return domain(format!("zero-sum context needs x > 30000, got {x}"));
        }
        Self::with_terms(x, kernel, x.ln().floor() as usize)
    }

    /// Context for exploratory runs down to `x = 10⁴`.
    pub fn new_relaxed(x: f64, kernel: &LoganKernel<f64>) -> Result<Self> {
        if !(x >= 1e4) {
            return domain(format!("zero-sum context needs x >= 10^4, got {x}"));
        }
        Self::with_terms(x, kernel, x.ln().floor() as usize)
    }

    pub fn with_terms(x: f64, kernel: &LoganKernel<f64>, n_terms: usize) -> Result<Self> {
        if !(x > std::f64::consts::E) || !x.is_finite() {
            return domain(format!("x out of range: {x}"));
        }
        let log_x = DoubleDouble::ln(x);
        let l = log_x.hi;
        if (n_terms + 2) as f64 > 10.0 * l {
            return domain(format!("asymptotic order {n_terms} too large for log x = {l}"));
        }
        let a = kernel.a_ce();
        // f_j = (j−1)!/L^j
        let mut f = Vec::with_capacity(n_terms + 3);
        let mut v = 1.0 / l;
        for j in 1..=n_terms + 2 {
            f.push(v);
            v *= j as f64 / l;
        }
        let alpha = (0..n_terms).map(|i| f[i] + a * (f[i + 1] - f[i + 2])).collect();
        Ok(Self {
            x,
            log_x,
            sqrt_x: x.sqrt(),
            kernel: kernel.clone(),
            n_terms,
            alpha,
            inv_lambda: 1.0 / kernel.lambda_ce(),
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn log_x(&self) -> f64 {
        self.log_x.hi
    }

    pub fn kernel(&self) -> &LoganKernel<f64> {
        &self.kernel
    }

    pub fn n_terms(&self) -> usize {
        self.n_terms
    }

    pub fn alpha_coeffs(&self) -> &[f64] {
        &self.alpha
    }

    fn check_gamma(gamma: f64) -> Result<()> {
        if !(gamma.abs() > 14.0) || !gamma.is_finite() {
            return domain(format!("zero ordinate must satisfy |gamma| > 14, got {gamma}"));
        }
        Ok(())
    }

    /// `Σ α_j/ρ^j` at `ρ = 1/2 + iγ`, without the `x^ρ` factor.
    pub(crate) fn series(&self, gamma: f64) -> Complex64 {
        let inv_rho = Complex64::new(0.5, gamma).inv();
        let mut s = Complex64::new(0.0, 0.0);
        for &a in self.alpha.iter().rev() {
            s = (s + a) * inv_rho;
        }
        s
    }

    /// `x^{iγ}` with the phase reduced in double-double arithmetic.
    pub(crate) fn oscillation(&self, gamma: f64) -> Complex64 {
        let phase = (self.log_x * gamma).rem_two_pi();
        let (s, c) = phase.sin_cos();
        Complex64::new(c, s)
    }

    pub(crate) fn sqrt_x(&self) -> f64 {
        self.sqrt_x
    }

    /// `ℓ_c(εγ)/λ_{c,ε}`, the real factor applied to `ψ` in the zero sum.
    pub(crate) fn weight(&self, gamma: f64) -> f64 {
        self.kernel.ell_dilated(gamma) * self.inv_lambda
    }

    /// `ψ_{x,c,ε}(1/2 + iγ) ≈ Σ_{j=1}^{n} α_j x^ρ/ρ^j`.
    pub fn psi(&self, gamma: f64) -> Result<Complex64> {
        Self::check_gamma(gamma)?;
        Ok(self.oscillation(gamma) * self.series(gamma) * self.sqrt_x)
    }

    /// Bound on what the truncated expansion in [`psi`](Self::psi) leaves out.
    pub fn psi_remainder(&self, gamma: f64) -> f64 {
        let gl = gamma.abs() * self.log_x.hi;
        let mut r = 1.01 * self.sqrt_x / gl;
        for k in 1..=self.n_terms {
            r *= k as f64 / gl;
        }
        r
    }

    /// `2·Re Ψ(ρ) = 2·Re(ψ(ρ))·ℓ_c(εγ)/λ_{c,ε}`, the joint contribution of `ρ` and `ρ̄`.
    pub fn psi_summand(&self, gamma: f64) -> Result<f64> {
        Ok(2.0 * self.psi(gamma)?.re * self.weight(gamma))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn e1_reference_values() {
        assert!(rel(e1(1.0).unwrap(), 0.2193839343955202736771638) < 1e-14);
        assert!(rel(e1(10.0).unwrap(), 4.15696892968532427740286e-6) < 1e-14);
        assert!(e1(0.0_f64).is_err());
        assert!(e1(-1.0_f64).is_err());
        let small = e1(1.0_f32).unwrap() as f64;
        assert!(rel(small, 0.2193839343955202736771638) < 1e-6);
    }

    #[test]
    fn li_reference_values() {
        assert!(rel(li(std::f64::consts::E).unwrap(), 1.895117816355936755466521) < 1e-14);
        assert!(li(1.451369234883381050283968_f64).unwrap().abs() < 1e-14);
        assert!(rel(li(10.0).unwrap() - li(2.0).unwrap(), 5.120435724669805152678393) < 1e-14);
        assert!(rel(li(1e7).unwrap(), 664918.4050485689123292129) < 1e-14);
        assert!(li(1.0_f64).is_err());
    }

    #[test]
    fn tail_reference_value() {
        let t = tail_integral(1e5).unwrap();
        assert!(rel(t, 4.168887750232272419511831e-12) < 1e-12);
        assert!(tail_integral(3e4_f64).is_err());
        let mut prev = f64::INFINITY;
        for x in [1e5, 1e6, 1e7] {
            let v = tail_integral(x).unwrap();
            assert!(v < prev);
            assert!(v < 1.01 / (2.0 * x * x * x.ln()));
            prev = v;
        }
    }

    #[test]
    fn psi_reference_value() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let ctx = PsiContext::new(1e5, &k).unwrap();
        let g1 = 14.134725141734693790;
        let p = ctx.psi(g1).unwrap() / k.lambda_ce();
        assert!((p.re - -1.099230378033692554).abs() < 1e-12);
        assert!((p.im - -1.601366642686185431).abs() < 1e-12);
        let s = ctx.psi_summand(g1).unwrap();
        assert!((s - -2.198445162101623382).abs() < 1e-12);
        assert!(ctx.psi(14.0).is_err());
        assert!(ctx.psi_remainder(g1) < 1e-9);
    }

    #[test]
    fn empty_expansion_is_covered_by_remainder() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let ctx = PsiContext::with_terms(1e5, &k, 0).unwrap();
        let g = 30.0;
        assert_eq!(ctx.psi(g).unwrap().norm(), 0.0);
        let full = PsiContext::new(1e5, &k).unwrap();
        assert!(full.psi(g).unwrap().norm() <= ctx.psi_remainder(g) * (1.0 + 1e-12));
    }

    proptest! {
        #[test]
        fn conjugate_symmetry(g in 14.5f64..1e4) {
            let k = LoganKernel::new(13.0, 1e-3).unwrap();
            let ctx = PsiContext::new(1e6, &k).unwrap();
            let a = ctx.psi(g).unwrap();
            let b = ctx.psi(-g).unwrap();
            prop_assert!((a.conj() - b).norm() <= 1e-13 * a.norm().max(1e-300));
        }

        #[test]
        fn summand_magnitude_bound(g in 14.5f64..1.3e4, x in 3.1e4f64..1e8) {
            let k = LoganKernel::new(13.0, 1e-3).unwrap();
            let ctx = PsiContext::new(x, &k).unwrap();
            let s = ctx.psi_summand(g).unwrap();
            let bound = 2.0 * 1.001 * x.sqrt() / x.ln() * k.ell_dilated(g).abs() / g;
            prop_assert!(s.abs() <= bound);
        }
    }
}
