//! Scalar abstraction shared by every algebraic type in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static {
    /// Relative tolerance used when the caller does not supply one.
    fn default_tolerance() -> Self;

    /// Converts an `f64` literal, which is always representable up to rounding.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }
}

impl Real for f32 {
    fn default_tolerance() -> Self {
        1e-4
    }
}

impl Real for f64 {
    fn default_tolerance() -> Self {
        1e-9
    }
}

/// Euclidean norm of a coefficient slice.
pub(crate) fn norm<T: Real>(xs: &[T]) -> T {
    xs.iter().map(|&x| x * x).sum::<T>().sqrt()
}

/// `|a - b| / max(|a|, |b|)` over coefficient slices; zero when both are zero.
pub fn relative_difference<T: Real>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    let diff: Vec<T> = a.iter().zip(b).map(|(&x, &y)| x - y).collect();
    let scale = norm(a).max(norm(b));
    if scale == T::zero() {
        T::zero()
    } else {
        norm(&diff) / scale
    }
}
