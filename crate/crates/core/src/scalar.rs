//! Scalar abstraction shared by the algebra.
//!
//! Ring operations on [`Biquaternion`](crate::Biquaternion) only need
//! [`num_traits::Num`] and negation, so they also work over exact rationals.
//! Anything involving square roots, trigonometry or tolerances needs [`Real`].

use core::fmt::Debug;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar: `f32` or `f64`.
pub trait Real: Ring + Float + FloatConst + FromPrimitive + Debug + Default + Send + Sync + 'static {
    /// Allowed deviation of `N(L)` from one for a value accepted as a rotor.
    fn rotor_tolerance() -> Self;

    /// Tolerance for "is this a unit real vector" checks on axes.
    fn axis_tolerance() -> Self;

    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Real for f32 {
    fn rotor_tolerance() -> Self {
        1e-5
    }

    fn axis_tolerance() -> Self {
        1e-5
    }
}

impl Real for f64 {
    fn rotor_tolerance() -> Self {
        1e-9
    }

    fn axis_tolerance() -> Self {
        1e-9
    }
}

/// Coefficient ring for biquaternion arithmetic.
///
/// Implemented for the two float widths and for `Ratio<i64>`, so the algebraic
/// laws can be checked exactly as well as in floating point.
pub trait Ring: Copy + num_traits::Num + core::ops::Neg<Output = Self> + num_traits::ToPrimitive + Debug {
    /// `true` when arithmetic is exact and zero tests need no tolerance.
    const EXACT: bool;

    fn magnitude(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }
}

impl Ring for f32 {
    const EXACT: bool = false;
}

impl Ring for f64 {
    const EXACT: bool = false;
}

impl Ring for num_rational::Ratio<i64> {
    const EXACT: bool = true;
}
