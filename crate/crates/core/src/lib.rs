// `!(a > b)` is used throughout so NaN arguments are rejected
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod dd;
pub mod error;
pub mod expint;
pub mod assemble;
pub mod kernel;
pub mod oracle;
pub mod primesum;
pub mod scalar;
pub mod sum;
pub mod zeros;
pub mod zerosum;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use assemble::{make_plan, pi, ErrorBudget, Mode, PiResult, Plan, Rigor};
pub use zeros::ZeroList;

/// Binary64 instances of the generic special-function layer.
pub type Kernel = kernel::LoganKernel<f64>;
pub type Kernel32 = kernel::LoganKernel<f32>;
pub type Sum = sum::CompensatedSum<f64>;
