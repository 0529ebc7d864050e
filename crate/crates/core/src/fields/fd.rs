use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Bq;

/// Settings for the fourth-order central-difference stencil.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FdParams {
    /// Base step; the step actually used at coordinate `x` is `step · max(1, |x|)`.
    pub step: f64,
    pub tolerance: f64,
}

impl Default for FdParams {
    fn default() -> Self {
        Self { step: 1e-5, tolerance: 1e-6 }
    }
}

impl FdParams {
    pub fn validate(&self) -> Result<()> {
        if self.step > 0.0 && self.tolerance > 0.0 {
            Ok(())
        } else {
            Err(Error::Domain("finite-difference step and tolerance must be positive".into()))
        }
    }
}

/// Step scaled to the magnitude of the coordinate.
pub fn fd_step(base: f64, at: f64) -> f64 {
    base * at.abs().max(1.0)
}

/// `(−f(x+2h) + 8f(x+h) − 8f(x−h) + f(x−2h)) / 12h`, error `O(h⁴)`.
pub fn central_diff4<F>(f: F, x: f64, h: f64) -> Result<Bq>
where
    F: Fn(f64) -> Result<Bq>,
{
    let p2 = f(x + 2.0 * h)?;
    let p1 = f(x + h)?;
    let m1 = f(x - h)?;
    let m2 = f(x - 2.0 * h)?;
    Ok(((p1 - m1).scale_real(8.0) - (p2 - m2)).scale_real(1.0 / (12.0 * h)))
}
