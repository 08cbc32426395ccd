//! Scalar abstraction for the special-function layer.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

use crate::dd::DoubleDouble;

/// Floating-point type the kernel and exponential-integral code is generic over.
///
/// Implemented for `f32` and `f64`. The certified pipeline runs on `f64`; `f32`
/// is useful for cheap previews and for checking that nothing silently depends
/// on a particular width.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal. Never fails for finite inputs.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    /// Unit roundoff `u` of the format.
    #[inline]
    fn unit_roundoff() -> Self {
        Self::epsilon() / Self::lit(2.0)
    }

    /// Natural logarithm split into a leading part and a correction term,
    /// `ln(self) ≈ hi + lo` to roughly twice the working precision.
    fn ln_split(self) -> (Self, Self);

    /// Computes `t * (hi + lo)` reduced modulo 2π into `[-π, π]`.
    fn mul_mod_two_pi(t: Self, hi: Self, lo: Self) -> Self;
}

impl Scalar for f64 {
    fn ln_split(self) -> (f64, f64) {
        let l = DoubleDouble::ln(self);
        (l.hi, l.lo)
    }

    fn mul_mod_two_pi(t: f64, hi: f64, lo: f64) -> f64 {
        DoubleDouble::new(hi, lo).mul_f64(t).rem_two_pi()
    }
}

impl Scalar for f32 {
    fn ln_split(self) -> (f32, f32) {
        let l = (self as f64).ln();
        let hi = l as f32;
        (hi, (l - hi as f64) as f32)
    }

    fn mul_mod_two_pi(t: f32, hi: f32, lo: f32) -> f32 {
        let phase = DoubleDouble::from(hi as f64)
            .add_f64(lo as f64)
            .mul_f64(t as f64);
        phase.rem_two_pi() as f32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_log_recovers_more_digits() {
        let (hi, lo) = 1e7_f64.ln_split();
        assert_eq!(hi, 1e7_f64.ln());
        assert!(lo.abs() < 1e-15);
        let (hi32, lo32) = 10.0_f32.ln_split();
        assert!(((hi32 as f64 + lo32 as f64) - 10f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn reduction_matches_plain_product_for_small_phases() {
        let (hi, lo) = 1e5_f64.ln_split();
        let direct = 14.134725141734694 * hi;
        let reduced = f64::mul_mod_two_pi(14.134725141734694, hi, lo);
        assert!((direct.sin() - reduced.sin()).abs() < 1e-13);
        assert!((direct.cos() - reduced.cos()).abs() < 1e-13);
        assert!(reduced.abs() <= std::f64::consts::PI);
    }
}
