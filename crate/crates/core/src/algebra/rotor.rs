use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Biquaternion;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Unit biquaternion `L` with `L·bar(L) = 1`, acting as a Lorentz
/// transformation through `q ↦ L q bar(L)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Rotor<T> {
    value: Biquaternion<T>,
}

impl<T: Real> Rotor<T> {
    pub fn new(value: Biquaternion<T>) -> Result<Self> {
        let defect = (value.semi_norm() - Complex::one()).norm();
        if !(defect <= T::rotor_tolerance()) {
            return Err(Error::Domain(format!(
                "rotor semi-norm deviates from 1 by {:e}",
                defect.to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(Self { value })
    }

    pub fn identity() -> Self {
        Self { value: Biquaternion::one() }
    }

    /// Rescale a non-null biquaternion onto the unit shell, `q / √N(q)`.
    pub fn normalize(q: Biquaternion<T>) -> Result<Self> {
        let n = q.semi_norm();
        let scale: T = q.coeffs().iter().fold(T::zero(), |a, c| a + c.norm_sqr());
        if n.norm() <= T::lit(1e-12) * scale || scale.is_zero() {
            return Err(Error::NullElement);
        }
        Self::new(q / super::sqrt_principal(n))
    }

    pub fn value(&self) -> Biquaternion<T> {
        self.value
    }

    /// `L q bar(L)`.
    pub fn apply(&self, q: &Biquaternion<T>) -> Biquaternion<T> {
        self.value * *q * self.value.bar()
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self { value: self.value * other.value }
    }

    pub fn reverse(&self) -> Self {
        Self { value: self.value.bar() }
    }
}

impl<T: Real> Default for Rotor<T> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<T: Real> From<Rotor<T>> for Biquaternion<T> {
    fn from(r: Rotor<T>) -> Self {
        r.value
    }
}

/// Check that `u` is a real pure vector with `u·u = 1`.
pub(crate) fn require_unit_axis<T: Real>(u: &Biquaternion<T>) -> Result<()> {
    let tol = T::axis_tolerance();
    let real = u.coeffs().iter().all(|c| c.im.abs() <= tol);
    let pure = u.w.norm() <= tol;
    let len2 = u.x.re * u.x.re + u.y.re * u.y.re + u.z.re * u.z.re;
    if real && pure && (len2 - T::one()).abs() <= tol {
        Ok(())
    } else {
        Err(Error::Domain("axis must be a real unit vector".into()))
    }
}

/// `exp(c·u) = cos c + u sin c` for a real unit vector `u` and complex `c`.
///
/// Since `u² = −1` the series splits exactly like Euler's formula; with
/// complex `c` it mixes a rotation about `u` with a boost along it.
pub fn exp_along<T: Real>(u: &Biquaternion<T>, c: Complex<T>) -> Result<Biquaternion<T>> {
    require_unit_axis(u)?;
    if c.is_zero() {
        return Ok(Biquaternion::one());
    }
    Ok(Biquaternion::scalar(c.cos()) + u.vector_part().scale(c.sin()))
}
