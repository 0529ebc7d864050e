//! Biquaternion formulations of the Maxwell and Dirac-Lanczos equations,
//! with executable checks of how the two differ.

pub mod algebra;
pub mod dirac;
pub mod error;
pub mod fields;
pub mod maxwell;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod spinor;

pub use algebra::{exp_along, sqrt_principal, Biquaternion, Involution, Mat2, Rotor};
pub use error::{Error, Result};
pub use scalar::{Real, Ring};

/// Double-precision complex number.
pub type C64 = num_complex::Complex<f64>;
/// Double-precision biquaternion, the carrier used by the field modules.
pub type Bq = Biquaternion<f64>;
pub type Bq32 = Biquaternion<f32>;
/// Exact biquaternion over 64-bit rationals.
pub type RationalBq = Biquaternion<num_rational::Ratio<i64>>;
pub type Rotor64 = Rotor<f64>;
