//! The truncated sum over zeros and the bounds for what it leaves out.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::expint::{PsiAccelerator, PsiContext};
use crate::sum::CompensatedSum;
use crate::zeros::ZeroList;

/// Zeros per reduction block. Fixed so the summation order never depends on scheduling.
pub const BLOCK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroSumResult {
    pub value: f64,
    /// Roundoff, asymptotic remainders and the effect of ordinate errors.
    pub numerical_error: f64,
    /// The part of `numerical_error` due to ordinate inaccuracy.
    pub ordinate_error: f64,
    pub zeros_used: usize,
    pub highest_gamma: f64,
}

#[derive(Default, Clone, Copy)]
struct BlockSum {
    sum: CompensatedSum<f64>,
    abs: f64,
    eval_err: f64,
    remainder: f64,
    sensitivity: f64,
}

/// `Σ_{0<γ≤cap} 2·Re Ψ(1/2 + iγ)` over the listed ordinates.
pub fn sum_over_zeros(ctx: &PsiContext, zl: &ZeroList, gamma_cap: f64) -> Result<ZeroSumResult> {
    sum_over_zeros_with(ctx, zl, gamma_cap, None)
}

/// As [`sum_over_zeros`], optionally evaluating the summands through a Chebyshev model.
pub fn sum_over_zeros_with(
    ctx: &PsiContext,
    zl: &ZeroList,
    gamma_cap: f64,
    accel: Option<&PsiAccelerator>,
) -> Result<ZeroSumResult> {
    if gamma_cap > zl.height() {
        return domain(format!(
            "zero list covers height {} but the sum needs {}",
            zl.height(),
            gamma_cap
        ));
    }
    let k = ctx.kernel();
    if gamma_cap > k.c() / k.epsilon() * (1.0 + 1e-12) {
        return domain(format!("cap {gamma_cap} exceeds c/epsilon = {}", k.c() / k.epsilon()));
    }
    let gammas = &zl.gammas()[..zl.count_below(gamma_cap)];
    if let Some(a) = accel {
        let (lo, hi) = a.range();
        if let (Some(&f), Some(&l)) = (gammas.first(), gammas.last()) {
            if f < lo || l > hi {
                return domain("accelerator does not cover the zero range");
            }
        }
    }
    let u = f64::EPSILON * 0.5;
    let per_term = (4 * ctx.n_terms() + 40) as f64 * u;
    let delta = zl.accuracy();
    let x = ctx.x();

    let blocks: Vec<BlockSum> = gammas
        .par_chunks(BLOCK)
        .map(|chunk| {
            let mut b = BlockSum::default();
            for &g in chunk {
                let w = ctx.weight(g);
                let term = match accel {
                    Some(a) => a.summand(g),
                    None => 2.0 * (ctx.oscillation(g) * ctx.series(g) * ctx.sqrt_x()).re * w,
                };
                b.sum.add(term);
                let scale = 2.0 * ctx.series(g).norm() * ctx.sqrt_x() * w.abs();
                b.abs += scale;
                b.eval_err += per_term * scale;
                b.remainder += 2.0 * ctx.psi_remainder(g) * w.abs();
                if delta > 0.0 {
                    b.sensitivity += crate::zeros::summand_sensitivity(x, k, g);
                }
            }
            if let Some(a) = accel {
                let l = ctx.log_x();
                b.eval_err += chunk.iter().map(|&g| 2.0 * a.tolerance() * ctx.sqrt_x() / (g * l)).sum::<f64>();
            }
            b
        })
        .collect();

    let mut total = CompensatedSum::new();
    let (mut abs, mut eval_err, mut rem, mut sens) = (0.0, 0.0, 0.0, 0.0);
    for b in &blocks {
        total.merge(&b.sum);
        abs += b.abs;
        eval_err += b.eval_err;
        rem += b.remainder;
        sens += b.sensitivity;
    }
    let value = total.total();
    let n = gammas.len() as f64;
    let roundoff = 2.0 * u * value.abs() + 4.0 * (n + 2.0) * u * u * abs;
    let ordinate_error = delta * sens * (1.0 + 1e-6) * (1.0 + 1e-10);
    let numerical_error = if gammas.is_empty() {
        0.0
    } else {
        (roundoff + eval_err + rem) * (1.0 + 1e-10) + ordinate_error
    };
    Ok(ZeroSumResult {
        value,
        numerical_error,
        ordinate_error: if gammas.is_empty() { 0.0 } else { ordinate_error },
        zeros_used: gammas.len(),
        highest_gamma: gammas.last().copied().unwrap_or(0.0),
    })
}

fn check_rigorous(c: f64, epsilon: f64, x: f64) -> Result<()> {
    if !(c >= 10.0) || !(epsilon > 0.0 && epsilon <= 1e-5) || !(x >= std::f64::consts::E) {
        return domain(format!(
            "rigorous truncation bound needs c >= 10, 0 < epsilon <= 1e-5, x >= e (got c = {c}, epsilon = {epsilon}, x = {x})"
        ));
    }
    Ok(())
}

/// Bound on `Σ_{|γ|>c/ε} |Ψ(ρ)|`; `h = 1/2` under RH, `h = 1` otherwise.
pub fn truncation_bound(x: f64, c: f64, epsilon: f64, h: f64) -> Result<f64> {
    check_rigorous(c, epsilon, x)?;
    if h != 0.5 && h != 1.0 {
        return domain(format!("h must be 1/2 or 1, got {h}"));
    }
    Ok(truncation_formula(x, c, epsilon, h))
}

fn truncation_formula(x: f64, c: f64, epsilon: f64, h: f64) -> f64 {
    0.66 * (c * (epsilon.sqrt() / 4.0 - 1.0)).exp()
        * (3.0 * c).ln()
        * (c / epsilon).ln()
        * (x.powf(h) + 1.0)
        / (2.0 * h * x.ln())
}

/// Bound on `Σ_{ac/ε<|γ|≤c/ε} |Ψ(ρ)|`, valid when RH holds up to `c/ε`.
pub fn partial_bound(x: f64, c: f64, epsilon: f64, a: f64) -> Result<f64> {
    if !(a > 0.0 && a < 1.0) {
        return domain(format!("a must lie in (0, 1), got {a}"));
    }
    if !(a * c / epsilon >= 1e3) {
        return domain(format!("a*c/epsilon = {} is below 1000", a * c / epsilon));
    }
    Ok(partial_formula(x, c, epsilon, a))
}

fn partial_formula(x: f64, c: f64, epsilon: f64, a: f64) -> f64 {
    // cosh(c√(1−a²))/sinh(c) without overflow
    let s = c * (1.0 - a * a).sqrt();
    let ratio = ((s - c).exp() + (-s - c).exp()) / (1.0 - (-2.0 * c).exp());
    (0.33 + 3.6 * c * epsilon) / (c * a * a) * (c / epsilon).ln() * ratio * x.sqrt() / x.ln()
}

/// `Σ_{|γ|>c/ε} |Ψ(ρ)|` as estimated from the optimal tail mass of the Logan kernel.
///
/// Not a bound; used for exploratory parameter choices outside the range of
/// [`truncation_bound`].
pub fn heuristic_tail(x: f64, c: f64, epsilon: f64, h: f64) -> f64 {
    let e = (-c).exp();
    let logan_tail = 2.0 * ((1.0 + e) / (1.0 - e)).ln();
    let scale = if h == 1.0 { x } else { x.sqrt() };
    scale / (std::f64::consts::PI * x.ln()) * (c / (2.0 * std::f64::consts::PI * epsilon)).ln().max(1.0) * logan_tail
}

/// Partial-sum formula without its preconditions, for exploratory plans.
pub fn heuristic_partial(x: f64, c: f64, epsilon: f64, a: f64) -> f64 {
    partial_formula(x, c, epsilon, a)
}
