//! Parameter planning, assembly of `π*(x)` from the explicit formula, and certified rounding to `π(x)`.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::expint::{li, tail_integral, tail_sum, PsiContext};
use crate::kernel::LoganKernel;
use crate::oracle::{oracle_pi, ORACLE_PI_CAP};
use crate::primesum::{alpha_truncation_bound, iroot, window_power_sum, window_prime_sum, Window, WindowSum};
use crate::sum::CompensatedSum;
use crate::zeros::{ZeroList, ZeroSource};
use crate::zerosum::{heuristic_partial, heuristic_tail, partial_bound, sum_over_zeros, truncation_bound, ZeroSumResult};

/// Height to which all zeros are known to lie on the critical line.
pub const RH_VERIFIED_HEIGHT: f64 = 3.0001753e12;

/// Multiplier applied to the heuristic tail estimates.
pub const HEURISTIC_SAFETY: f64 = 2.0;

/// Certification needs `total < 1/2 − SAFETY_MARGIN`.
pub const SAFETY_MARGIN: f64 = 0.01;

pub const DEFAULT_BUDGET: f64 = 0.45;

/// `π(10²⁵)`.
pub const PI_10_25: u128 = 176_846_309_399_143_769_411_680;

/// Largest `x_raw` the evaluation path handles (window arithmetic is in binary64).
pub const MAX_X_RAW: u64 = 1 << 51;

const C_CEILING: f64 = 300.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Riemann hypothesis assumed, `h = 1/2`.
    Rh,
    /// `h = 1/2`, zeros used must lie below the verified height.
    PartialRh,
    /// `h = 1`.
    Unconditional,
}

impl Mode {
    pub fn h(self) -> f64 {
        match self {
            Mode::Rh | Mode::PartialRh => 0.5,
            Mode::Unconditional => 1.0,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Rh => "rh",
            Mode::PartialRh => "partial-rh",
            Mode::Unconditional => "unconditional",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rh" => Ok(Mode::Rh),
            "partial-rh" => Ok(Mode::PartialRh),
            "unconditional" => Ok(Mode::Unconditional),
            _ => Err(format!("unknown mode {s:?} (expected rh, partial-rh or unconditional)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rigor {
    Certified,
    Heuristic,
}

impl fmt::Display for Rigor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rigor::Certified => "certified",
            Rigor::Heuristic => "heuristic",
        })
    }
}

impl std::str::FromStr for Rigor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "certified" => Ok(Rigor::Certified),
            "heuristic" => Ok(Rigor::Heuristic),
            _ => Err(format!("unknown rigor {s:?} (expected certified or heuristic)")),
        }
    }
}

/// Fractions of the budget target given to each group of error items.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Shares {
    pub zero_truncation: f64,
    pub window: f64,
    pub alpha: f64,
    pub numerics: f64,
}

impl Default for Shares {
    fn default() -> Self {
        Self {
            zero_truncation: 0.4,
            window: 0.2,
            alpha: 0.2,
            numerics: 0.2,
        }
    }
}

impl Shares {
    fn validate(&self) -> Result<()> {
        let v = [self.zero_truncation, self.window, self.alpha, self.numerics];
        if v.iter().any(|s| !(*s >= 0.0)) || v.iter().sum::<f64>() > 1.0 + 1e-12 {
            return domain(format!("budget shares must be nonnegative and sum to at most 1, got {v:?}"));
        }
        Ok(())
    }
}

/// Everything [`make_plan_with`] needs besides the zero-table height.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanRequest {
    pub x_raw: u128,
    pub mode: Mode,
    pub rigor: Rigor,
    pub budget_target: f64,
    pub shares: Shares,
    pub c: Option<f64>,
    pub epsilon: Option<f64>,
    pub a: Option<f64>,
    pub alpha: Option<f64>,
}

impl PlanRequest {
    pub fn new(x_raw: u128, mode: Mode, rigor: Rigor) -> Self {
        Self {
            x_raw,
            mode,
            rigor,
            budget_target: DEFAULT_BUDGET,
            shares: Shares::default(),
            c: None,
            epsilon: None,
            a: None,
            alpha: None,
        }
    }
}

/// Bounds the planner predicted for the items it controls.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanBounds {
    pub zero_truncation: f64,
    pub zero_partial: f64,
    pub explicit_formula_theta: f64,
    pub window_remainder_r: f64,
    pub alpha_truncation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Plan {
    pub x_raw: u128,
    /// `x_raw + 1/2`.
    pub x: f64,
    pub mode: Mode,
    pub rigor: Rigor,
    pub h: f64,
    pub c: f64,
    pub epsilon: f64,
    pub a: f64,
    pub alpha: f64,
    /// Height the zero table covers.
    pub zero_height: f64,
    /// Zeros with `γ ≤ a·c/ε` enter the sum.
    pub zero_cap: f64,
    pub budget_target: f64,
    pub shares: Shares,
    pub predicted: PlanBounds,
    /// Integers in the (possibly reduced) prime window.
    pub window_width: f64,
    pub r_bound_form: String,
}

impl Plan {
    pub fn kernel(&self) -> Result<LoganKernel<f64>> {
        LoganKernel::new(self.c, self.epsilon)
    }

    /// Expected number of zeros below the cap, from the Riemann–von Mangoldt main term.
    pub fn predicted_zeros(&self) -> f64 {
        crate::zeros::rosser_main_term(self.zero_cap).max(0.0)
    }
}

/// `R(x, c, ε)` with the `39ε⁴x/c²` middle term.
pub fn window_remainder_bound(x: f64, c: f64, epsilon: f64) -> Result<f64> {
    let ex = epsilon * x;
    if !(ex > 1.0) || !(c > 0.0) {
        return domain(format!("remainder bound needs epsilon * x > 1 and c > 0 (got {ex}, {c})"));
    }
    Ok(0.57 * epsilon.powi(3) * x / (c * ex.ln())
        + 39.0 * epsilon.powi(4) * x / (c * c)
        + 0.13 * epsilon * epsilon * (2.0 * x * x).ln().ln() / c)
}

fn infeasible<T>(reason: impl Into<String>, zeros_needed_to: Option<f64>) -> Result<T> {
    Err(Error::Infeasible {
        reason: reason.into(),
        zeros_needed_to: zeros_needed_to.map(f64::ceil),
    })
}

/// Plan with default shares and no overrides.
pub fn make_plan(x_raw: u128, mode: Mode, rigor: Rigor, zero_height: f64, budget_target: f64) -> Result<Plan> {
    let mut req = PlanRequest::new(x_raw, mode, rigor);
    req.budget_target = budget_target;
    make_plan_with(&req, zero_height)
}

pub fn make_plan_with(req: &PlanRequest, zero_height: f64) -> Result<Plan> {
    let target = req.budget_target;
    if !(target > 0.0 && target < 0.5) {
        return domain(format!("budget target must lie in (0, 0.5), got {target}"));
    }
    req.shares.validate()?;
    let certified = req.rigor == Rigor::Certified;
    let min_x = if certified { 30_001 } else { 10_000 };
    if req.x_raw < min_x {
        return domain(format!("{} rigor needs x >= {min_x}, got {}", req.rigor, req.x_raw));
    }
    if !(zero_height > 0.0) {
        return infeasible("no zeros available", None);
    }
    let a = req.a.unwrap_or(1.0);
    if !(a > 0.0 && a <= 1.0) {
        return domain(format!("a must lie in (0, 1], got {a}"));
    }
    if a < 1.0 && req.mode == Mode::Unconditional {
        return domain("a < 1 needs zeros verified on the critical line; use --mode rh or partial-rh");
    }
    let x = req.x_raw as f64 + 0.5;
    let h = req.mode.h();
    let l = x.ln();
    let c_floor = {
        let g = h * l + l.ln().ln();
        if certified {
            g.max(10.0)
        } else {
            g.max(1.0)
        }
    };
    let eps_max = match (certified, req.epsilon.is_some()) {
        (true, _) => 1e-5,
        (false, false) => 1e-3,
        (false, true) => 1e-2,
    };
    let share_zero = req.shares.zero_truncation * target;
    let share_window = req.shares.window * target;
    let share_alpha = req.shares.alpha * target;

    let zero_items = |c: f64, eps: f64| -> Result<(f64, f64)> {
        let trunc = if certified {
            truncation_bound(x, c, eps, h)?
        } else {
            HEURISTIC_SAFETY * heuristic_tail(x, c, eps, h)
        };
        let partial = if a < 1.0 {
            if certified {
                partial_bound(x, c, eps, a)?
            } else {
                HEURISTIC_SAFETY * heuristic_partial(x, c, eps, a)
            }
        } else {
            0.0
        };
        Ok((trunc, partial))
    };
    let eps_of = |c: f64| req.epsilon.unwrap_or(a * c / zero_height);
    let fits = |c: f64| zero_items(c, eps_of(c)).map(|(t, p)| t + p <= share_zero).unwrap_or(false);

    let c = match req.c {
        Some(c) => c,
        None => {
            let eps0 = eps_of(c_floor);
            if eps0 > eps_max {
                return infeasible(
                    format!(
                        "zero table to {zero_height} is too short: c = {c_floor:.3} would need epsilon = {eps0:.3e} > {eps_max:.0e}"
                    ),
                    Some(a * c_floor / eps_max),
                );
            }
            let c_hi = match req.epsilon {
                Some(_) => C_CEILING,
                None => C_CEILING.min(eps_max * zero_height / a),
            };
            if fits(c_floor) {
                c_floor
            } else if !fits(c_hi) {
                return infeasible(
                    format!(
                        "no c in [{c_floor:.3}, {c_hi:.3}] brings the zero truncation under {share_zero:.3e} with zeros to {zero_height}"
                    ),
                    None,
                );
            } else {
                let (mut lo, mut hi) = (c_floor, c_hi);
                while hi - lo > 1e-6 * hi {
                    let mid = 0.5 * (lo + hi);
                    if fits(mid) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                hi
            }
        }
    };
    let epsilon = eps_of(c);
    if !(c >= 1.0) || !c.is_finite() {
        return domain(format!("c must be at least 1, got {c}"));
    }
    if !(epsilon > 0.0 && epsilon <= eps_max) {
        return infeasible(
            format!("epsilon = {epsilon:.3e} outside (0, {eps_max:.0e}] for {} rigor", req.rigor),
            Some(a * c / eps_max),
        );
    }
    if certified {
        if c < 10.0 {
            return domain(format!("certified rigor needs c >= 10, got {c}"));
        }
        if !(epsilon > 1.0 / x) {
            return infeasible(format!("certified rigor needs epsilon > 1/x, got {epsilon:.3e}"), None);
        }
    }
    let zero_cap = a * c / epsilon;
    if zero_cap > zero_height * (1.0 + 1e-12) {
        return infeasible(
            format!("zero table reaches {zero_height} but the plan needs zeros to {zero_cap}"),
            Some(zero_cap),
        );
    }
    let zero_cap = zero_cap.min(zero_height);
    if req.mode != Mode::Rh && zero_cap > RH_VERIFIED_HEIGHT {
        return infeasible(
            format!("zeros are verified on the critical line only to {RH_VERIFIED_HEIGHT:e}; use --mode rh"),
            None,
        );
    }
    if a < 1.0 {
        if c / epsilon > RH_VERIFIED_HEIGHT && req.mode != Mode::Rh {
            return infeasible("a < 1 needs c/epsilon below the verified height", None);
        }
        if a * c / epsilon < 1e3 {
            return domain(format!("a < 1 needs a*c/epsilon >= 1000, got {zero_cap}"));
        }
    }
    let (zero_truncation, zero_partial) = zero_items(c, epsilon)?;
    if req.c.is_some() && zero_truncation + zero_partial > share_zero {
        return infeasible(
            format!(
                "zero truncation {:.3e} exceeds its share {share_zero:.3e}",
                zero_truncation + zero_partial
            ),
            None,
        );
    }
    let theta = 35.0 * epsilon;
    let r = window_remainder_bound(x, c, epsilon)?;
    if theta + r > share_window {
        // 35ε ≤ share needs ε ≤ share/35, i.e. zeros to a·c·35/share
        return infeasible(
            format!("35*epsilon + R = {:.3e} exceeds its share {share_window:.3e}", theta + r),
            Some(a * c * 35.0 / share_window),
        );
    }
    let alpha_item = |al: f64| alpha_truncation_bound(x, c, epsilon, al).map(|b| 2.0 * b);
    let alpha = match req.alpha {
        Some(al) => al,
        None => {
            let ok = |al: f64| alpha_item(al).map(|b| b <= share_alpha).unwrap_or(false);
            let (mut lo, mut hi) = (0.05, 1.0);
            if ok(lo) {
                lo
            } else {
                for _ in 0..50 {
                    let mid = 0.5 * (lo + hi);
                    if ok(mid) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                hi
            }
        }
    };
    let alpha_truncation = alpha_item(alpha)?;
    if alpha_truncation > share_alpha {
        return infeasible(
            format!("alpha = {alpha} leaves {alpha_truncation:.3e}, above its share {share_alpha:.3e}"),
            None,
        );
    }
    let window_width = x * ((alpha * epsilon).exp() - (-alpha * epsilon).exp());
    Ok(Plan {
        x_raw: req.x_raw,
        x,
        mode: req.mode,
        rigor: req.rigor,
        h,
        c,
        epsilon,
        a,
        alpha,
        zero_height,
        zero_cap,
        budget_target: target,
        shares: req.shares,
        predicted: PlanBounds {
            zero_truncation,
            zero_partial,
            explicit_formula_theta: theta,
            window_remainder_r: r,
            alpha_truncation,
        },
        window_width,
        r_bound_form: "0.57e^3x/(c log(ex)) + 39e^4x/c^2 + 0.13e^2 loglog(2x^2)/c".into(),
    })
}

/// Itemized error budget. `total` is the sum of the items.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ErrorBudget {
    pub explicit_formula_theta: f64,
    pub window_remainder_r: f64,
    pub zero_truncation: f64,
    pub zero_partial: f64,
    pub alpha_truncation: f64,
    pub zero_accuracy: f64,
    pub summation_numerics: f64,
    pub interpolation: f64,
    pub special_function_numerics: f64,
    pub total: f64,
}

impl ErrorBudget {
    pub fn items(&self) -> [(&'static str, f64); 9] {
        [
            ("explicit_formula_theta", self.explicit_formula_theta),
            ("window_remainder_r", self.window_remainder_r),
            ("zero_truncation", self.zero_truncation),
            ("zero_partial", self.zero_partial),
            ("alpha_truncation", self.alpha_truncation),
            ("zero_accuracy", self.zero_accuracy),
            ("summation_numerics", self.summation_numerics),
            ("interpolation", self.interpolation),
            ("special_function_numerics", self.special_function_numerics),
        ]
    }

    /// Recomputes `total`, rounded up so it never understates the sum.
    pub fn finalize(mut self) -> Self {
        let s: f64 = self.items().iter().map(|(_, v)| v).sum();
        self.total = s * (1.0 + 4.0 * f64::EPSILON);
        self
    }

    pub fn items_sum(&self) -> f64 {
        self.items().iter().map(|(_, v)| v).sum()
    }
}

/// `π*_{c,ε}(x)` from the zero side, with the items it contributes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Smoothed {
    pub value: f64,
    pub li: f64,
    pub a_term: f64,
    pub tail: f64,
    pub zero_sum: ZeroSumResult,
    pub budget: ErrorBudget,
}

fn context(plan: &Plan, kernel: &LoganKernel<f64>) -> Result<PsiContext> {
    if plan.x > 30000.0 {
        PsiContext::new(plan.x, kernel)
    } else {
        PsiContext::new_relaxed(plan.x, kernel)
    }
}

/// `li(x) + A·x/log²x − Σ_{0<γ≤cap} 2·Re Ψ(ρ) − log 2 + ∫_x^∞ dt/(t log t (t² − 1))`.
pub fn pi_star_smoothed(plan: &Plan, zl: &ZeroList) -> Result<Smoothed> {
    let kernel = plan.kernel()?;
    let ctx = context(plan, &kernel)?;
    let x = plan.x;
    let l = x.ln();
    let li_x = li(x)?;
    let a_term = kernel.a_ce() * x / (l * l);
    let tail = if x > 30000.0 { tail_integral(x)? } else { tail_sum(x)? };
    let zs = sum_over_zeros(&ctx, zl, plan.zero_cap.min(zl.height()))?;
    let mut acc = CompensatedSum::new();
    for t in [li_x, a_term, -zs.value, -std::f64::consts::LN_2, tail] {
        acc.add(t);
    }
    let value = acc.total();
    let u = 0.5 * f64::EPSILON;
    let special = 32.0 * u * (li_x.abs() + a_term.abs() + 1.0) + 8.0 * u * value.abs();
    let budget = ErrorBudget {
        explicit_formula_theta: 35.0 * plan.epsilon,
        zero_truncation: plan.predicted.zero_truncation,
        zero_partial: plan.predicted.zero_partial,
        zero_accuracy: zs.ordinate_error,
        summation_numerics: zs.numerical_error - zs.ordinate_error,
        special_function_numerics: special,
        ..Default::default()
    }
    .finalize();
    Ok(Smoothed {
        value,
        li: li_x,
        a_term,
        tail,
        zero_sum: zs,
        budget,
    })
}

/// `π*(x) = π*_{c,ε}(x) − Σ_{window} M(p^m)/m − R`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PiStar {
    pub value: f64,
    pub smoothed: Smoothed,
    pub window: Window,
    pub prime_sum: WindowSum,
    pub power_sum: WindowSum,
    pub budget: ErrorBudget,
    pub zero_seconds: f64,
    pub window_seconds: f64,
}

pub fn pi_star(plan: &Plan, zl: &ZeroList) -> Result<PiStar> {
    if plan.x_raw > MAX_X_RAW as u128 {
        return domain(format!("evaluation is limited to x <= 2^51, got {}", plan.x_raw));
    }
    let t0 = Instant::now();
    let smoothed = pi_star_smoothed(plan, zl)?;
    let zero_seconds = t0.elapsed().as_secs_f64();
    let t1 = Instant::now();
    let kernel = plan.kernel()?;
    let window = Window::new(plan.x, plan.epsilon, plan.alpha)?;
    let prime_sum = window_prime_sum(&window, &kernel, true)?;
    let power_sum = window_power_sum(&window, &kernel)?;
    let window_seconds = t1.elapsed().as_secs_f64();
    let value = smoothed.value - prime_sum.value - power_sum.value;
    let s = &smoothed.budget;
    let budget = ErrorBudget {
        window_remainder_r: plan.predicted.window_remainder_r,
        alpha_truncation: plan.predicted.alpha_truncation,
        summation_numerics: s.summation_numerics + prime_sum.numerical_error + power_sum.numerical_error,
        interpolation: prime_sum.interp_error,
        special_function_numerics: s.special_function_numerics + 4.0 * f64::EPSILON * value.abs(),
        ..*s
    }
    .finalize();
    Ok(PiStar {
        value,
        smoothed,
        window,
        prime_sum,
        power_sum,
        budget,
        zero_seconds,
        window_seconds,
    })
}

/// `Σ_{m≥2} π(⌊x^{1/m}⌋)/m`, the higher-power part of `π*(x_raw + 1/2)`.
pub fn higher_power_correction(x_raw: u64) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    let mut m = 2u32;
    loop {
        let r = iroot(x_raw, m);
        if r < 2 {
            break;
        }
        if r > ORACLE_PI_CAP {
            return domain(format!("x = {x_raw} needs pi({r}), above the sieve cap"));
        }
        acc.add(oracle_pi(r)? as f64 / m as f64);
        m += 1;
    }
    Ok(acc.total())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub zero_sum_seconds: f64,
    pub window_seconds: f64,
    pub total_seconds: f64,
}

/// Outcome of [`pi`]; serializes to the JSON certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PiResult {
    pub x: u64,
    pub pi: u64,
    /// Rigor was certified, the budget is below `1/2 − SAFETY_MARGIN`, and rounding is unambiguous.
    pub certified: bool,
    /// `distance + budget.total < 1/2`, whatever the rigor.
    pub rounding_within_budget: bool,
    pub pi_star_estimate: f64,
    pub pi_star_smoothed: f64,
    pub window_prime_sum: f64,
    pub window_power_sum: f64,
    pub higher_power_correction: f64,
    pub pi_estimate: f64,
    pub distance_to_integer: f64,
    pub budget: ErrorBudget,
    pub plan: Plan,
    pub zeros_used: usize,
    pub zero_source: ZeroSource,
    pub primes_sieved: u64,
    pub timings: Timings,
}

impl PiResult {
    /// Copy with wall-clock data cleared, for reproducibility comparisons.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.timings = Timings {
            zero_sum_seconds: 0.0,
            window_seconds: 0.0,
            total_seconds: 0.0,
        };
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

pub fn pi(plan: &Plan, zl: &ZeroList) -> Result<PiResult> {
    let t0 = Instant::now();
    let ps = pi_star(plan, zl)?;
    let x_raw = plan.x_raw as u64;
    let higher = higher_power_correction(x_raw)?;
    let estimate = ps.value - higher;
    if !estimate.is_finite() || estimate < -0.5 {
        return Err(Error::Domain(format!("estimate {estimate} is not a prime count")));
    }
    let rounded = estimate.round().max(0.0);
    let distance = (estimate - rounded).abs();
    // the higher-power sum is a rational with exact numerators; charge its rounding
    let budget = ErrorBudget {
        special_function_numerics: ps.budget.special_function_numerics + 4.0 * f64::EPSILON * (higher + estimate.abs()),
        ..ps.budget
    }
    .finalize();
    let within = distance + budget.total < 0.5;
    let certified = plan.rigor == Rigor::Certified && budget.total < 0.5 - SAFETY_MARGIN && within;
    Ok(PiResult {
        x: x_raw,
        pi: rounded as u64,
        certified,
        rounding_within_budget: within,
        pi_star_estimate: ps.value,
        pi_star_smoothed: ps.smoothed.value,
        window_prime_sum: ps.prime_sum.value,
        window_power_sum: ps.power_sum.value,
        higher_power_correction: higher,
        pi_estimate: estimate,
        distance_to_integer: distance,
        budget,
        plan: plan.clone(),
        zeros_used: ps.smoothed.zero_sum.zeros_used,
        zero_source: zl.source(),
        primes_sieved: ps.prime_sum.primes,
        timings: Timings {
            zero_sum_seconds: ps.zero_seconds,
            window_seconds: ps.window_seconds,
            total_seconds: t0.elapsed().as_secs_f64(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_pi_star;
    use crate::zeros::compute_zeros;

    #[test]
    fn budget_target_validated() {
        assert!(make_plan(1_000_000, Mode::Rh, Rigor::Heuristic, 2e4, 0.5).is_err());
        assert!(make_plan(1_000_000, Mode::Rh, Rigor::Heuristic, 2e4, 0.0).is_err());
        assert!(make_plan(100, Mode::Rh, Rigor::Heuristic, 2e4, 0.45).is_err());
        assert!(make_plan(20_000, Mode::Rh, Rigor::Certified, 2e6, 0.45).is_err());
    }

    #[test]
    fn record_plan_is_feasible() {
        let mut req = PlanRequest::new(10u128.pow(24), Mode::Unconditional, Rigor::Certified);
        req.c = Some(62.0);
        req.epsilon = Some(6.2e-10);
        req.alpha = Some(1.0);
        let p = make_plan_with(&req, 1e11).unwrap();
        assert!((p.zero_cap - 1e11).abs() < 1.0);
        assert!(p.predicted.zero_truncation < 0.5);
        // automatic choice lands near the same place
        let p = make_plan(10u128.pow(24), Mode::Unconditional, Rigor::Certified, 1e11, DEFAULT_BUDGET).unwrap();
        assert!(p.c > 56.0 && p.c < 64.0, "{}", p.c);
    }

    #[test]
    fn heuristic_plan_at_1e6() {
        let p = make_plan(1_000_000, Mode::PartialRh, Rigor::Heuristic, 1.5e4, DEFAULT_BUDGET).unwrap();
        assert!(p.c > 8.0 && p.c < 14.0, "{}", p.c);
        assert!(p.epsilon > 5e-4 && p.epsilon <= 1e-3, "{}", p.epsilon);
        let mut req = PlanRequest::new(1_000_000, Mode::PartialRh, Rigor::Heuristic);
        req.c = Some(13.0);
        let p = make_plan_with(&req, 1.5e4).unwrap();
        assert!((p.epsilon - 13.0 / 1.5e4).abs() < 1e-15);
    }

    #[test]
    fn certified_plan_at_1e6() {
        let p = make_plan(1_000_000, Mode::Rh, Rigor::Certified, 1.3e6, DEFAULT_BUDGET).unwrap();
        assert!(p.c >= 10.0 && p.epsilon <= 1e-5 && p.epsilon > 1e-6);
        match make_plan(1_000_000, Mode::Rh, Rigor::Certified, 5e5, DEFAULT_BUDGET) {
            Err(Error::Infeasible { zeros_needed_to, .. }) => assert!(zeros_needed_to.unwrap() >= 1e6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn overrides_are_checked() {
        let mut req = PlanRequest::new(1_000_000, Mode::Unconditional, Rigor::Heuristic);
        req.a = Some(0.8);
        assert!(make_plan_with(&req, 2e4).is_err());
        let mut req = PlanRequest::new(1_000_000, Mode::Rh, Rigor::Certified);
        req.epsilon = Some(0.5e-6);
        req.c = Some(0.4);
        assert!(make_plan_with(&req, 1e12).is_err());
        // ε at or below 1/x fails the precondition
        let mut req = PlanRequest::new(50_000, Mode::Rh, Rigor::Certified);
        req.c = Some(10.0);
        req.epsilon = Some(1.0 / 60_000.0);
        assert!(make_plan_with(&req, 1e12).is_err());
    }

    #[test]
    fn remainder_bound_value() {
        let r = window_remainder_bound(1e7, 13.0, 1e-3).unwrap();
        let want = 0.57e-9 * 1e7 / (13.0 * 1e4f64.ln()) + 39e-12 * 1e7 / 169.0 + 0.13e-6 * (2e14f64).ln().ln() / 13.0;
        assert!((r - want).abs() < 1e-15 * want.max(1.0));
        assert!(window_remainder_bound(1e5, 13.0, 1e-6).is_err());
    }

    #[test]
    fn higher_powers() {
        // π*(10.5) − π(10) = 1 + 1/3
        assert!((higher_power_correction(10).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(higher_power_correction(3).unwrap(), 0.0);
    }

    #[test]
    fn budget_items_sum() {
        let b = ErrorBudget {
            explicit_formula_theta: 0.1,
            zero_truncation: 0.2,
            interpolation: 1e-12,
            ..Default::default()
        }
        .finalize();
        assert!(b.total >= b.items_sum());
        assert!(b.total - b.items_sum() < 1e-15);
    }

    #[test]
    fn end_to_end_1e5() {
        let zl = compute_zeros(2e4, 1e-10).unwrap();
        let plan = make_plan(100_000, Mode::PartialRh, Rigor::Heuristic, zl.height(), DEFAULT_BUDGET).unwrap();
        let r = pi(&plan, &zl).unwrap();
        assert_eq!(r.pi, 9592);
        let ps = oracle_pi_star(100_000.5).unwrap();
        assert!((r.pi_star_estimate - ps).abs() < r.budget.total, "{} {}", r.pi_star_estimate, ps);
        assert!(!r.certified);
        assert!(r.rounding_within_budget);
    }
}
