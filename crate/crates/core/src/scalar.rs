use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the numeric layers are generic over.
///
/// `f32` and `f64` satisfy the bound out of the box; any other type that
/// implements the listed traits works as well. The blanket implementation
/// means downstream code never implements this trait by hand.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl<T> Real for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

/// Lifts an `f64` constant into the generic scalar.
///
/// Panics if the scalar cannot represent the value at all (no mainstream
/// float type rejects plain constants, so this is effectively infallible).
pub(crate) fn real<F: Real>(value: f64) -> F {
    F::from_f64(value).expect("f64 constant must be representable in the scalar type")
}

/// Lifts a vertex count or index into the generic scalar.
pub(crate) fn real_from_usize<F: Real>(value: usize) -> F {
    F::from_usize(value).expect("usize must be representable in the scalar type")
}

/// Converts a generic scalar to `f64` for error payloads and reports.
pub(crate) fn lossy_f64<F: Real>(value: F) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
