//! Scalar abstraction for series coefficients.

use std::fmt;

use num_traits::{Float, NumCast};

/// Coefficient scalar: `f32` or `f64` (or any other IEEE-like float).
///
/// All solver arithmetic is written against this trait; concrete aliases
/// for the common instantiations live at the crate root.
pub trait Scalar: Float + NumCast + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> Scalar for T where T: Float + NumCast + fmt::Debug + fmt::Display + Send + Sync + 'static {}

/// Converts an `f64` constant into the working scalar type.
pub(crate) fn real<F: Scalar>(x: f64) -> F {
    F::from(x).expect("constant representable in scalar type")
}

/// Converts a small nonnegative integer into the working scalar type.
pub(crate) fn real_of<F: Scalar>(k: usize) -> F {
    F::from(k).expect("index representable in scalar type")
}

/// Lossy view of a scalar as `f64`, for error reporting.
pub(crate) fn as_f64<F: Scalar>(x: F) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
