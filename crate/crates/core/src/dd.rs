//! Double-double arithmetic, used for phases `t·log n` and `γ·log x` whose
//! size would otherwise eat most of the significand before reduction mod 2π.

use std::ops::{Add, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

pub const LN2: DoubleDouble = DoubleDouble::new(std::f64::consts::LN_2, 2.3190468138462996e-17);
pub const PI: DoubleDouble = DoubleDouble::new(std::f64::consts::PI, 1.2246467991473532e-16);
pub const TWO_PI: DoubleDouble = DoubleDouble::new(std::f64::consts::TAU, 2.4492935982947064e-16);
pub const LN_2PI: DoubleDouble = DoubleDouble::new(1.8378770664093456, -7.756588316134483e-17);
pub const PI_OVER_8: DoubleDouble =
    DoubleDouble::new(std::f64::consts::FRAC_PI_8, 1.5308084989341915e-17);

#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const fn new(hi: f64, lo: f64) -> Self {
        Self { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Self { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Self { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self - DoubleDouble::from(b) * q1;
        let q2 = r.hi / b;
        let r = r - DoubleDouble::from(b) * q2;
        let q3 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }.add_f64(q3)
    }

    /// `exp` to about 95 bits while the result's low word stays normal
    /// (roughly `|x| < 650`).
    pub fn exp(self) -> Self {
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2 * k;
        // exp(r) = exp(r/512)^512
        let r = r * (1.0 / 512.0);
        let mut term = r;
        let mut acc = DoubleDouble::from(1.0) + r;
        for i in 2..=14 {
            term = (term * r).div_f64(i as f64);
            acc = acc + term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        for _ in 0..9 {
            acc = acc * acc;
        }
        let scale = 2f64.powi(k as i32);
        Self::new(acc.hi * scale, acc.lo * scale)
    }

    /// `ln x` for positive finite `x`, to about 100 bits.
    pub fn ln(x: f64) -> Self {
        assert!(x > 0.0 && x.is_finite(), "ln of non-positive value");
        let y0 = x.ln();
        // Newton on exp(y) = x: y1 = y0 + x·exp(-y0) - 1
        let corr = DoubleDouble::from(x) * DoubleDouble::from(-y0).exp();
        let corr = corr.add_f64(-1.0);
        DoubleDouble::from(y0) + corr
    }

    /// Reduces into `[-π, π]` and rounds to `f64`.
    pub fn rem_two_pi(self) -> f64 {
        let k = (self.hi / TWO_PI.hi).round();
        if k == 0.0 {
            return self.to_f64();
        }
        let r = self - TWO_PI * k;
        let mut v = r.to_f64();
        // the quotient estimate can be off by one near ±π
        if v > PI.hi {
            v = (r - TWO_PI).to_f64();
        } else if v < -PI.hi {
            v = (r + TWO_PI).to_f64();
        }
        v
    }
}

impl From<f64> for DoubleDouble {
    fn from(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }
}

impl Add for DoubleDouble {
    type Output = Self;

    #[inline]
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;

    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.hi, -self.lo)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;

    #[inline]
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;

    #[inline]
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Mul<f64> for DoubleDouble {
    type Output = Self;

    #[inline]
    fn mul(self, b: f64) -> Self {
        self.mul_f64(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constants_are_consistent() {
        let two_pi = PI * 2.0;
        assert_eq!(two_pi, TWO_PI);
        let ln2pi = DoubleDouble::ln(2.0) + DoubleDouble::ln(std::f64::consts::PI) + DoubleDouble::from(PI.lo / PI.hi);
        assert!((ln2pi - LN_2PI).to_f64().abs() < 1e-28);
        assert!((DoubleDouble::ln(2.0) - LN2).to_f64().abs() < 1e-29);
    }

    #[test]
    fn exp_of_one() {
        // e = 2.718281828459045 + 1.4456468917292502e-16
        let e = DoubleDouble::from(1.0).exp();
        assert_eq!(e.hi, std::f64::consts::E);
        assert!((e.lo - 1.4456468917292502e-16).abs() < 1e-28);
    }

    #[test]
    fn reduction_of_large_phase() {
        // 1e15·ln 10 mod 2π, reference from a 50-digit evaluation
        let phase = DoubleDouble::ln(10.0) * 1e15;
        let r = phase.rem_two_pi();
        assert!((r - (-0.814_072_147_362_215_1)).abs() < 1e-14, "{r}");
    }

    proptest! {
        #[test]
        fn ln_inverts_exp(x in 1e-200f64..1e200) {
            let back = DoubleDouble::ln(x).exp();
            prop_assert!(((back.hi - x) + back.lo).abs() <= 1e-27 * x);
        }

        #[test]
        fn remainder_lies_in_range(v in -1e15f64..1e15) {
            let r = DoubleDouble::from(v).rem_two_pi();
            prop_assert!(r.abs() <= PI.hi + 1e-15);
            prop_assert!((r.sin() - v.sin()).abs() < 1e-12);
            prop_assert!((r.cos() - v.cos()).abs() < 1e-12);
        }
    }
}
