//! Analytic spacetime fields with closed-form partial derivatives.
//!
//! Every field supplies exact partials `∂_μ` (μ = 0 is time, 1..=3 space, natural
//! units with c = 1). The residual checks in [`crate::maxwell`] and
//! [`crate::dirac`] run on those exact partials; [`fd_validate`] cross-checks
//! them against a fourth-order central difference of `eval`.

mod catalog;
mod fd;
mod synthetic;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maxwell::SourceDensity;
use crate::report::Report;
use crate::Bq;

pub use catalog::{catalog, CatalogName, ConstantField, CoulombField, FieldSpec, PlaneWave, Superposition};
pub use fd::{central_diff4, fd_step, FdParams};
pub use synthetic::{PolynomialField, TrigField};

/// Spacetime point `(t, x₁, x₂, x₃)`.
///
/// Serializes as a four-element array.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Event {
    pub t: f64,
    pub x: [f64; 3],
}

impl Event {
    pub const fn new(t: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { t, x: [x1, x2, x3] }
    }

    pub fn coord(&self, mu: usize) -> f64 {
        match mu {
            0 => self.t,
            k => self.x[k - 1],
        }
    }

    pub fn with_coord(&self, mu: usize, value: f64) -> Self {
        let mut e = *self;
        match mu {
            0 => e.t = value,
            k => e.x[k - 1] = value,
        }
        e
    }

    pub fn radius(&self) -> f64 {
        self.x.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn time_reversed(&self) -> Self {
        Self { t: -self.t, x: self.x }
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.x.iter().all(|v| v.is_finite())
    }

    pub(crate) fn singular(&self) -> Error {
        Error::SingularPoint { t: self.t, x1: self.x[0], x2: self.x[1], x3: self.x[2] }
    }
}

impl From<[f64; 4]> for Event {
    fn from(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }
}

impl From<Event> for [f64; 4] {
    fn from(e: Event) -> Self {
        [e.t, e.x[0], e.x[1], e.x[2]]
    }
}

/// A biquaternion-valued function on spacetime with exact first partials.
pub trait SpacetimeField: Send + Sync {
    fn eval(&self, e: &Event) -> Result<Bq>;

    /// `∂_μ` of [`SpacetimeField::eval`], `μ ∈ 0..4`.
    fn partial(&self, mu: usize, e: &Event) -> Result<Bq>;
}

/// Electromagnetic field `F = E + iB` together with its declared source.
pub trait EmField: SpacetimeField {
    fn source(&self, e: &Event) -> Result<SourceDensity>;
}

/// Spinor field `ψ(x)` for the Dirac-Lanczos equation.
pub trait SpinorField: SpacetimeField {
    /// `∂_μ ∂_ν ψ`. Fields without closed-form second partials keep the default.
    fn second_partial(&self, _mu: usize, _nu: usize, _e: &Event) -> Result<Bq> {
        Err(Error::MissingDerivative)
    }
}

macro_rules! forward_field {
    ($($ptr:ty),*) => {$(
        impl<F: SpacetimeField + ?Sized> SpacetimeField for $ptr {
            fn eval(&self, e: &Event) -> Result<Bq> {
                (**self).eval(e)
            }
            fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
                (**self).partial(mu, e)
            }
        }
        impl<F: EmField + ?Sized> EmField for $ptr {
            fn source(&self, e: &Event) -> Result<SourceDensity> {
                (**self).source(e)
            }
        }
        impl<F: SpinorField + ?Sized> SpinorField for $ptr {
            fn second_partial(&self, mu: usize, nu: usize, e: &Event) -> Result<Bq> {
                (**self).second_partial(mu, nu, e)
            }
        }
    )*};
}

forward_field!(&F, Box<F>, Arc<F>);

/// All four partials at once.
pub fn gradient<F: SpacetimeField + ?Sized>(field: &F, e: &Event) -> Result<[Bq; 4]> {
    Ok([
        field.partial(0, e)?,
        field.partial(1, e)?,
        field.partial(2, e)?,
        field.partial(3, e)?,
    ])
}

/// Compare exact partials with fourth-order central differences of `eval`.
///
/// The report carries the largest deviation over all events and all four
/// directions; it passes when that stays within `fd.tolerance`.
pub fn fd_validate<F: SpacetimeField + ?Sized>(
    field: &F,
    events: &[Event],
    fd: &FdParams,
) -> Result<Report> {
    fd.validate()?;
    let mut samples = Vec::with_capacity(events.len());
    for e in events {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            let exact = field.partial(mu, e)?;
            let h = fd_step(fd.step, e.coord(mu));
            let approx = central_diff4(|s| field.eval(&e.with_coord(mu, s)), e.coord(mu), h)?;
            let dev = exact.distance(&approx);
            worst = if dev.is_nan() { f64::NAN } else { worst.max(dev) };
        }
        samples.push((format!("{:?}", <[f64; 4]>::from(*e)), worst));
    }
    Ok(Report::from_samples("fd_validate", fd.tolerance, samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    /// Coulomb field with a deliberately wrong x₁-partial.
    struct Corrupted(CoulombField);

    impl SpacetimeField for Corrupted {
        fn eval(&self, e: &Event) -> Result<Bq> {
            self.0.eval(e)
        }
        fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
            let p = self.0.partial(mu, e)?;
            Ok(if mu == 1 { p + Bq::e1().scale(C64::new(0.1, 0.0)) } else { p })
        }
    }

    fn shell_events(n: usize) -> Vec<Event> {
        (0..n)
            .map(|k| {
                let a = k as f64 * 0.7;
                let r = 0.5 + 1.5 * (k as f64 / n as f64);
                Event::new(0.3 * a, r * a.cos() * 0.6, r * a.sin() * 0.6, r * 0.8)
            })
            .collect()
    }

    #[test]
    fn event_json_is_array() {
        let e: Event = serde_json::from_str("[1.0,2.0,3.0,4.0]").unwrap();
        assert_eq!(e, Event::new(1.0, 2.0, 3.0, 4.0));
    }

    #[test]
    fn constant_field_has_zero_deviation() {
        let f = ConstantField::new(Bq::from_fields([1.0, -2.0, 0.5], [0.0, 3.0, 1.0]));
        let r = fd_validate(&f, &shell_events(10), &FdParams::default()).unwrap();
        assert_eq!(r.max_abs, 0.0);
        assert!(r.pass);
    }

    #[test]
    fn coulomb_passes_fd_check() {
        let f = CoulombField::new(1.0);
        let fd = FdParams { step: 1e-5, tolerance: 1e-6 };
        let r = fd_validate(&f, &shell_events(50), &fd).unwrap();
        assert!(r.pass, "max deviation {}", r.max_abs);
    }

    #[test]
    fn injected_error_is_detected() {
        let f = Corrupted(CoulombField::new(1.0));
        let r = fd_validate(&f, &shell_events(20), &FdParams::default()).unwrap();
        assert!(!r.pass);
        assert!((r.max_abs - 0.1).abs() < 1e-6, "deviation {}", r.max_abs);
    }

    #[test]
    fn singular_event_is_an_error() {
        let f = CoulombField::new(1.0);
        let err = fd_validate(&f, &[Event::new(0.0, 0.0, 0.0, 1e-4)], &FdParams::default());
        assert!(matches!(err, Err(Error::SingularPoint { .. })));
    }
}
