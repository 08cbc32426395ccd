use super::siegel;
use super::tables::SMALL_ZEROS;
use super::ZeroList;
use crate::kernel::LoganKernel;

/// `Ñ(t) = (t/2π)·log(t/(2πe))`.
pub fn rosser_main_term(t: f64) -> f64 {
    let u = t / (2.0 * std::f64::consts::PI);
    u * (u.ln() - 1.0)
}

/// Completeness check of an ascending ordinate list up to `t`.
///
/// Below 1000 the count must equal the built-in exact table. From 1000 on it
/// must lie within `0.5·log t + 2` of `Ñ(t)` and, when the sign of `Z(t)` can be
/// certified, have the parity that sign forces (`Z` changes sign at every simple
/// zero and is negative just above 0).
pub fn count_check(gammas: &[f64], t: f64) -> bool {
    if gammas.windows(2).any(|w| !(w[0] < w[1])) {
        return false;
    }
    let n = gammas.partition_point(|&g| g <= t);
    if t < 1000.0 {
        return n == SMALL_ZEROS.partition_point(|&g| g <= t);
    }
    if (n as f64 - rosser_main_term(t)).abs() > 0.5 * t.ln() + 2.0 {
        return false;
    }
    let (z, err) = siegel::z_with_bound(t, 1e-10);
    if z.abs() > err {
        let expected_negative = n % 2 == 0;
        return (z < 0.0) == expected_negative;
    }
    true
}

/// Per-zero bound on `|d/dγ 2·Re Ψ(1/2 + iγ)|` used to propagate ordinate errors.
pub fn summand_sensitivity(x: f64, kernel: &LoganKernel<f64>, gamma: f64) -> f64 {
    let l = x.ln();
    let eps = kernel.epsilon();
    let u = eps * gamma;
    2.002 * x.sqrt() / (gamma * l)
        * ((l + 1.1) * kernel.ell(u).abs() + eps * kernel.ell_deriv(u).abs())
        / kernel.lambda_ce()
}

/// Largest uniform ordinate error `δ` whose effect on the zero sum stays below `budget`.
pub fn required_zero_accuracy(x: f64, kernel: &LoganKernel<f64>, zl: &ZeroList, budget: f64) -> f64 {
    let cap = kernel.c() / kernel.epsilon();
    let total: f64 = zl
        .gammas()
        .iter()
        .take_while(|&&g| g <= cap)
        .map(|&g| summand_sensitivity(x, kernel, g))
        .sum();
    if total > 0.0 {
        // the sensitivity is evaluated at the listed ordinate, not the true one;
        // δ is tiny compared to the scale on which it varies
        budget / (total * (1.0 + 1e-6))
    } else {
        f64::INFINITY
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_heights_use_exact_table() {
        let zl = ZeroList::builtin(999.9).unwrap();
        assert!(count_check(zl.gammas(), 100.0));
        assert!(count_check(zl.gammas(), 30.0));
        let mut missing = zl.gammas().to_vec();
        missing.remove(10);
        assert!(!count_check(&missing, 100.0));
        let mut dup = zl.gammas().to_vec();
        dup.insert(5, dup[5]);
        assert!(!count_check(&dup, 100.0));
    }

    #[test]
    fn rosser_term_values() {
        assert!((rosser_main_term(1e4) - 10141.6).abs() < 0.5);
    }

    #[test]
    fn accuracy_is_linear_in_budget() {
        let k = LoganKernel::new(13.0, 1e-3).unwrap();
        let zl = ZeroList::builtin(999.9).unwrap();
        let d1 = required_zero_accuracy(1e6, &k, &zl, 1e-3);
        let d2 = required_zero_accuracy(1e6, &k, &zl, 2e-3);
        assert!((d2 / d1 - 2.0).abs() < 1e-12);
        assert_eq!(required_zero_accuracy(1e6, &k, &zl, 0.0), 0.0);
    }
}
