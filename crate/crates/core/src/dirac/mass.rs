use serde::{Deserialize, Serialize};

use super::dirac_operator;
use crate::error::Result;
use crate::fields::{central_diff4, fd_step, EmField, Event, SpacetimeField, SpinorField};
use crate::spinor::decompose;
use crate::{Bq, C64};

/// Effective mass `M = −i (D̄ψ)(ψ* u)⁻¹` at one event.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassSample {
    pub event: Event,
    pub mass: Bq,
    pub scalar_part: C64,
    /// `|M − scalar_part|`, the size of the non-scalar remainder.
    pub deviation_from_scalar: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MassSummary {
    pub mean: Bq,
    pub max_deviation_from_mean: f64,
    /// `max |M − mean| / |mean|`; zero for an exactly constant profile.
    pub relative_variation: f64,
    pub max_deviation_from_scalar: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassProfile {
    pub samples: Vec<MassSample>,
    pub summary: MassSummary,
}

/// Evaluate `M` at each event.
///
/// `M` is a constant real scalar `m` exactly when `ψ` solves the Dirac-Lanczos
/// equation with mass `m`.
pub fn effective_mass<F: SpacetimeField + ?Sized>(psi: &F, u: &Bq, events: &[Event]) -> Result<MassProfile> {
    let mut samples = Vec::with_capacity(events.len());
    for e in events {
        let dpsi = dirac_operator(psi, e)?;
        let slot = (psi.eval(e)?.star() * *u).inverse()?;
        let mass = dpsi * slot * C64::new(0.0, -1.0);
        let scalar_part = mass.scalar_part();
        samples.push(MassSample {
            event: *e,
            mass,
            scalar_part,
            deviation_from_scalar: mass.vector_part().norm(),
        });
    }

    let n = samples.len().max(1) as f64;
    let mean = samples.iter().map(|s| s.mass).sum::<Bq>().scale_real(1.0 / n);
    let spread = samples.iter().map(|s| s.mass.distance(&mean)).fold(0.0, f64::max);
    let relative_variation = match (spread, mean.norm()) {
        (s, _) if s == 0.0 => 0.0,
        (s, m) => s / m,
    };
    let summary = MassSummary {
        mean,
        max_deviation_from_mean: spread,
        relative_variation,
        max_deviation_from_scalar: samples.iter().map(|s| s.deviation_from_scalar).fold(0.0, f64::max),
    };
    Ok(MassProfile { samples, summary })
}

/// Effective mass of the spinor obtained by decomposing `field` pointwise.
pub fn effective_mass_field<F: EmField>(field: F, u: &Bq, events: &[Event]) -> Result<MassProfile> {
    effective_mass(&SpinorizedField::new(field, *u), u, events)
}

/// `ψ(x) = √ρ e^{iβ/2} L` from the decomposition of `F(x)` along a fixed axis,
/// with partials by fourth-order central differences.
#[derive(Debug, Clone)]
pub struct SpinorizedField<F> {
    pub field: F,
    pub axis: Bq,
    /// Relative step; see [`fd_step`].
    pub step: f64,
}

impl<F> SpinorizedField<F> {
    pub fn new(field: F, axis: Bq) -> Self {
        Self { field, axis, step: 1e-4 }
    }
}

impl<F: SpacetimeField> SpacetimeField for SpinorizedField<F> {
    fn eval(&self, e: &Event) -> Result<Bq> {
        Ok(decompose(&self.field.eval(e)?, &self.axis)?.spinor())
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        let centre = self.eval(e)?;
        let x = e.coord(mu);
        // ψ is fixed only up to sign; keep stencil points on the centre's sheet
        central_diff4(
            |s| {
                let v = self.eval(&e.with_coord(mu, s))?;
                Ok(if v.distance(&centre) > (-v).distance(&centre) { -v } else { v })
            },
            x,
            fd_step(self.step, x),
        )
    }
}

impl<F: SpacetimeField> SpinorField for SpinorizedField<F> {}
