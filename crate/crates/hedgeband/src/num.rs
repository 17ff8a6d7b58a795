//! Scalar abstraction for the numeric core.
//!
//! Everything in this crate that does arithmetic is generic over [`Real`],
//! so the same code runs in `f32` or `f64`. The experiment harness pins
//! `f64`; table-level reproduction needs the extra mantissa bits.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable throughout the engine.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum + Send + Sync + Debug + Display + 'static
{
    /// Lossless-enough conversion from `f64` (rounds once for `f32`).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to any Real")
    }

    /// Widening conversion to `f64`.
    fn to64(self) -> f64 {
        self.to_f64().expect("Real converts to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrips_f64() {
        let x = 0.1234567890123456_f64;
        assert_eq!(f64::of(x), x);
        assert_eq!(x.to64(), x);
    }

    #[test]
    fn f32_rounds_once() {
        let x = 0.1_f64;
        assert_eq!(f32::of(x), 0.1_f64 as f32);
    }
}
