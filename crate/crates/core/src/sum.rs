//! Compensated (Kahan–Babuška–Neumaier) accumulation.

use std::iter::Sum;
use std::ops::{Add, AddAssign};

use crate::scalar::Scalar;

/// Running sum with an error-free-transformation correction term.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CompensatedSum<T> {
    sum: T,
    comp: T,
}

impl<T: Scalar> CompensatedSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            comp: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, value: T) {
        let (s, e) = two_sum(self.sum, value);
        self.sum = s;
        self.comp = self.comp + e;
    }

    /// Folds another accumulator into this one, keeping both correction terms.
    pub fn merge(&mut self, other: &Self) {
        self.add(other.sum);
        self.add(other.comp);
    }

    #[inline]
    pub fn total(&self) -> T {
        self.sum + self.comp
    }
}

#[inline]
fn two_sum<T: Scalar>(a: T, b: T) -> (T, T) {
    let s = a + b;
    if a.abs() >= b.abs() {
        (s, (a - s) + b)
    } else {
        (s, (b - s) + a)
    }
}

impl<T: Scalar> AddAssign<T> for CompensatedSum<T> {
    #[inline]
    fn add_assign(&mut self, rhs: T) {
        CompensatedSum::add(self, rhs);
    }
}

impl<T: Scalar> Add<T> for CompensatedSum<T> {
    type Output = Self;

    fn add(mut self, rhs: T) -> Self {
        self += rhs;
        self
    }
}

impl<T: Scalar> Sum<T> for CompensatedSum<T> {
    fn sum<I: Iterator<Item = T>>(iter: I) -> Self {
        let mut acc = Self::new();
        for v in iter {
            acc += v;
        }
        acc
    }
}

/// Sums an iterator with compensation and returns the rounded total.
pub fn compensated_sum<T: Scalar, I: IntoIterator<Item = T>>(values: I) -> T {
    values.into_iter().sum::<CompensatedSum<T>>().total()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn recovers_small_terms_next_to_large_ones() {
        let mut s = CompensatedSum::<f64>::new();
        s += 1e100;
        s += 1.0;
        s += -1e100;
        assert_eq!(s.total(), 1.0);
    }

    #[test]
    fn alternating_harmonic_is_accurate() {
        let naive: f64 = (1..=1_000_000)
            .map(|k| if k % 2 == 1 { 1.0 / k as f64 } else { -1.0 / k as f64 })
            .sum();
        let comp = compensated_sum(
            (1..=1_000_000).map(|k| if k % 2 == 1 { 1.0 / k as f64 } else { -1.0 / k as f64 }),
        );
        let reference = 0.693_146_680_560_195_3_f64;
        assert!((comp - reference).abs() <= (naive - reference).abs() + 1e-15);
        assert!((comp - reference).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn merge_matches_sequential(values in proptest::collection::vec(-1e6f64..1e6, 0..200), split in 0usize..200) {
            let split = split.min(values.len());
            let mut left: CompensatedSum<f64> = values[..split].iter().copied().sum();
            let right: CompensatedSum<f64> = values[split..].iter().copied().sum();
            left.merge(&right);
            let whole: CompensatedSum<f64> = values.iter().copied().sum();
            let scale: f64 = values.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
            prop_assert!((left.total() - whole.total()).abs() <= 4.0 * f64::EPSILON * scale);
        }
    }
}
