//! Floating-point scalar abstraction for the evolution engine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar backing complex amplitudes and schedules: `f32` or `f64`.
///
/// All engine code is generic over this trait; the crate root exports
/// double-precision aliases, which are what the command-line tools and the
/// reported tolerances assume.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for converting an `f64` constant into a generic scalar.
pub(crate) fn real<R: Real>(value: f64) -> R {
    R::from_f64(value).expect("finite f64 constant converts to any Real")
}
