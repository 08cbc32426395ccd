//! Piecewise Chebyshev model of the slowly varying part of the zero summand.
//!
//! Writing `Ψ(1/2 + it) = x^{1/2}·x^{it}·g(t)`, the factor `g` is smooth and
//! non-oscillatory, so after the model is built each zero costs one phase
//! reduction, one `sin_cos` and a short Clenshaw recurrence.

use num_complex::Complex64;

use super::PsiContext;
use crate::error::{domain, Result};

const NODES: usize = 32;
const MAX_DEPTH: u32 = 48;

#[derive(Clone, Debug)]
struct Panel {
    lo: f64,
    hi: f64,
    re: Vec<f64>,
    im: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct PsiAccelerator {
    ctx: PsiContext,
    panels: Vec<Panel>,
    tol: f64,
}

fn slow_part(ctx: &PsiContext, t: f64) -> Complex64 {
    ctx.series(t) * ctx.weight(t)
}

fn fit(ctx: &PsiContext, lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
    let n = NODES;
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let vals: Vec<Complex64> = (0..n)
        .map(|j| {
            let th = std::f64::consts::PI * (j as f64 + 0.5) / n as f64;
            slow_part(ctx, mid + half * th.cos())
        })
        .collect();
    let mut re = vec![0.0; n];
    let mut im = vec![0.0; n];
    for k in 0..n {
        let (mut sr, mut si) = (0.0, 0.0);
        for (j, v) in vals.iter().enumerate() {
            let w = (std::f64::consts::PI * k as f64 * (j as f64 + 0.5) / n as f64).cos();
            sr += v.re * w;
            si += v.im * w;
        }
        let scale = if k == 0 { 1.0 } else { 2.0 } / n as f64;
        re[k] = sr * scale;
        im[k] = si * scale;
    }
    (re, im)
}

fn clenshaw(coeffs: &[f64], s: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &c in coeffs.iter().skip(1).rev() {
        let b0 = 2.0 * s * b1 - b2 + c;
        b2 = b1;
        b1 = b0;
    }
    s * b1 - b2 + coeffs[0]
}

/// Builds a model with `|P(t)·x^{it} − Ψ(1/2+it)| ≤ tol·√x/(t·log x)` on `[t_lo, t_hi]`.
pub fn build_accelerator(ctx: &PsiContext, t_lo: f64, t_hi: f64, tol: f64) -> Result<PsiAccelerator> {
    if !(tol > 0.0) {
        return domain("accelerator tolerance must be positive");
    }
    if !(t_lo > 14.0 && t_lo < t_hi) {
        return domain(format!("empty or invalid accelerator range [{t_lo}, {t_hi}]"));
    }
    let cap = ctx.kernel().c() / ctx.kernel().epsilon();
    if t_hi > cap * (1.0 + 1e-12) {
        return domain(format!("accelerator range ends above c/epsilon = {cap}"));
    }
    let mut panels = Vec::new();
    let mut stack = vec![(t_lo, t_hi, 0u32)];
    while let Some((lo, hi, depth)) = stack.pop() {
        let (re, im) = fit(ctx, lo, hi);
        // the upper half of the spectrum estimates what the lower half misses;
        // doubling that covers the full-degree model with room to spare
        let tail: f64 = re[NODES / 2..]
            .iter()
            .zip(&im[NODES / 2..])
            .map(|(a, b)| a.abs() + b.abs())
            .sum();
        let target = tol / (hi * ctx.log_x());
        if 2.0 * tail <= target || depth >= MAX_DEPTH {
            if 2.0 * tail > target {
                return domain("accelerator refinement did not converge");
            }
            panels.push(Panel { lo, hi, re, im });
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi, depth + 1));
            stack.push((lo, mid, depth + 1));
        }
    }
    Ok(PsiAccelerator {
        ctx: ctx.clone(),
        panels,
        tol,
    })
}

impl PsiAccelerator {
    pub fn panel_count(&self) -> usize {
        self.panels.len()
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn range(&self) -> (f64, f64) {
        (self.panels[0].lo, self.panels[self.panels.len() - 1].hi)
    }

    fn slow(&self, t: f64) -> Complex64 {
        let i = self.panels.partition_point(|p| p.hi < t).min(self.panels.len() - 1);
        let p = &self.panels[i];
        let s = (2.0 * t - p.lo - p.hi) / (p.hi - p.lo);
        Complex64::new(clenshaw(&p.re, s), clenshaw(&p.im, s))
    }

    /// Modelled `Ψ(1/2 + iγ)`.
    pub fn psi_kernel_product(&self, gamma: f64) -> Complex64 {
        self.ctx.oscillation(gamma) * self.slow(gamma) * self.ctx.sqrt_x()
    }

    /// Modelled `2·Re Ψ(1/2 + iγ)`.
    pub fn summand(&self, gamma: f64) -> f64 {
        2.0 * self.psi_kernel_product(gamma).re
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::LoganKernel;

    #[test]
    fn constant_function_is_exact() {
        let c = [1.0, 0.0, 0.0, 0.0];
        for s in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            assert_eq!(clenshaw(&c, s), 1.0);
        }
    }

    #[test]
    fn matches_direct_evaluation() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let ctx = PsiContext::new(1e6, &k).unwrap();
        let tol = 1e-12;
        let acc = build_accelerator(&ctx, 14.1, 1.3e4, tol).unwrap();
        let mut rng = 0x2545f4914f6cdd1d_u64;
        for _ in 0..1000 {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            let g = 14.1 + (1.3e4 - 14.1) * (rng >> 11) as f64 / (1u64 << 53) as f64;
            let direct = ctx.psi_summand(g).unwrap();
            let fast = acc.summand(g);
            let bound = tol * ctx.x().sqrt() / (g * ctx.log_x());
            assert!((direct - fast).abs() <= bound, "g = {g}");
        }
    }

    #[test]
    fn tighter_tolerance_needs_more_panels() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let ctx = PsiContext::new(1e6, &k).unwrap();
        let coarse = build_accelerator(&ctx, 14.1, 1.3e4, 1e-8).unwrap();
        let fine = build_accelerator(&ctx, 14.1, 1.3e4, 1e-9).unwrap();
        assert!(fine.panel_count() >= coarse.panel_count());
        assert!(build_accelerator(&ctx, 14.1, 1.3e4, 0.0).is_err());
        assert!(build_accelerator(&ctx, 20.0, 20.0, 1e-8).is_err());
    }
}
