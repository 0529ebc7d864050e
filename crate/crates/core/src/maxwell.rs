//! Maxwell's equations as a pair of biquaternion operator identities.
//!
//! With `D = i∂_t − Σ eₖ∂ₖ` acting from the left on `F = E + iB` and the same
//! derivative units acting from the right on the conjugated field `F*`,
//!
//! ```text
//! left  = D F    = i∂_tF + Σ (−eₖ)(∂ₖF)
//! right = F* D_r = i∂_tF* + Σ (∂ₖF*)(−eₖ)
//! ```
//!
//! the difference and the mean of the two orderings are
//!
//! ```text
//! left − right       = 2i ∇·B − 2(∂_tB + ∇×E)
//! (left + right)/2 − J = ∇·E − ρ + i(∂_tE − ∇×B + j),   J = ρ − i j
//! ```
//!
//! so `left − right = 0` is the homogeneous pair and `left + right = 2J` the
//! sourced pair. The right-hand ordering uses coefficient conjugation `F*` of the
//! pure vector `F`. Note that `tilde(F) = star(bar(F)) = −F*` on vectors; that
//! overall sign is what decides which of the two combinations is called
//! homogeneous, and [`equivalence_check`] pins the assignment against textbook
//! div/curl.

use core::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{gradient, EmField, Event, SpacetimeField};
use crate::{Bq, C64};

pub use crate::report::{Detail, Report};

/// Default tolerance for residuals computed from exact partials.
pub const RESIDUAL_TOL: f64 = 1e-10;
/// Tolerance when the partials come from finite differences.
pub const RESIDUAL_TOL_FD: f64 = 1e-6;

/// Charge and current density, packaged as `J = ρ − i j`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SourceDensity {
    pub charge: f64,
    pub current: [f64; 3],
}

impl SourceDensity {
    pub fn new(charge: f64, current: [f64; 3]) -> Self {
        Self { charge, current }
    }

    pub fn to_biquaternion(&self) -> Bq {
        let j = self.current;
        Bq::new(
            C64::new(self.charge, 0.0),
            C64::new(0.0, -j[0]),
            C64::new(0.0, -j[1]),
            C64::new(0.0, -j[2]),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.charge == 0.0 && self.current.iter().all(|c| *c == 0.0)
    }
}

impl Add for SourceDensity {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        let c = self.current;
        let d = o.current;
        Self::new(self.charge + o.charge, [c[0] + d[0], c[1] + d[1], c[2] + d[2]])
    }
}

impl Neg for SourceDensity {
    type Output = Self;

    fn neg(self) -> Self {
        let c = self.current;
        Self::new(-self.charge, [-c[0], -c[1], -c[2]])
    }
}

/// The two operator orderings `(D F, F* D_r)` at one event.
pub fn dstar_products<F: EmField + ?Sized>(field: &F, e: &Event) -> Result<(Bq, Bq)> {
    let d = gradient(field, e)?;
    let i = Bq::i();
    let mut left = i * d[0];
    let mut right = i * d[0].star();
    for k in 1..=3 {
        left -= Bq::e(k) * d[k];
        right -= d[k].star() * Bq::e(k);
    }
    Ok((left, right))
}

/// `(hom, src)`: `left − right` and `(left + right)/2 − J`.
pub fn maxwell_residual<F: EmField + ?Sized>(field: &F, e: &Event) -> Result<(Bq, Bq)> {
    let (left, right) = dstar_products(field, e)?;
    let j = field.source(e)?.to_biquaternion();
    Ok((left - right, (left + right).scale_real(0.5) - j))
}

/// Textbook residuals, computed component by component from the partials.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ClassicalResidual {
    /// `∇·E − ρ`
    pub gauss_e: f64,
    /// `∇×B − ∂_tE − j`
    pub ampere: [f64; 3],
    /// `∇·B`
    pub gauss_b: f64,
    /// `∇×E + ∂_tB`
    pub faraday: [f64; 3],
}

impl ClassicalResidual {
    /// `[gauss_e, ampere.., gauss_b, faraday..]`.
    pub fn to_array(&self) -> [f64; 8] {
        let a = self.ampere;
        let f = self.faraday;
        [self.gauss_e, a[0], a[1], a[2], self.gauss_b, f[0], f[1], f[2]]
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

pub fn classical_residual<F: EmField + ?Sized>(field: &F, e: &Event) -> Result<ClassicalResidual> {
    let d = gradient(field, e)?;
    // de[mu][i] = ∂_mu E_i, db likewise
    let de: Vec<[f64; 3]> = d.iter().map(|p| p.real_vector_part()).collect();
    let db: Vec<[f64; 3]> = d.iter().map(|p| p.imag_vector_part()).collect();
    let src = field.source(e)?;

    let div = |g: &[[f64; 3]]| g[1][0] + g[2][1] + g[3][2];
    let curl = |g: &[[f64; 3]]| {
        [
            g[2][2] - g[3][1],
            g[3][0] - g[1][2],
            g[1][1] - g[2][0],
        ]
    };
    let curl_e = curl(&de);
    let curl_b = curl(&db);
    let j = src.current;
    Ok(ClassicalResidual {
        gauss_e: div(&de) - src.charge,
        ampere: [
            curl_b[0] - de[0][0] - j[0],
            curl_b[1] - de[0][1] - j[1],
            curl_b[2] - de[0][2] - j[2],
        ],
        gauss_b: div(&db),
        faraday: [
            curl_e[0] + db[0][0],
            curl_e[1] + db[0][1],
            curl_e[2] + db[0][2],
        ],
    })
}

/// The biquaternion residuals predicted from the classical ones:
/// `hom = 2i (∇·B) − 2 (∇×E + ∂_tB)`, `src = (∇·E − ρ) − i (∇×B − ∂_tE − j)`.
pub fn predicted_residual(c: &ClassicalResidual) -> (Bq, Bq) {
    let f = c.faraday;
    let a = c.ampere;
    let hom = Bq::new(
        C64::new(0.0, 2.0 * c.gauss_b),
        C64::new(-2.0 * f[0], 0.0),
        C64::new(-2.0 * f[1], 0.0),
        C64::new(-2.0 * f[2], 0.0),
    );
    let src = Bq::new(
        C64::new(c.gauss_e, 0.0),
        C64::new(0.0, -a[0]),
        C64::new(0.0, -a[1]),
        C64::new(0.0, -a[2]),
    );
    (hom, src)
}

/// Check at every event that the biquaternion residuals equal the fixed linear
/// combination of classical residuals given by [`predicted_residual`].
///
/// This is an identity of expressions, so it holds for fields that violate
/// Maxwell's equations too.
pub fn equivalence_check<F: EmField + ?Sized>(field: &F, events: &[Event]) -> Result<Report> {
    equivalence_check_tol(field, events, RESIDUAL_TOL)
}

pub fn equivalence_check_tol<F: EmField + ?Sized>(field: &F, events: &[Event], tol: f64) -> Result<Report> {
    let mut samples = Vec::with_capacity(events.len());
    for e in events {
        let (hom, src) = maxwell_residual(field, e)?;
        let (ph, ps) = predicted_residual(&classical_residual(field, e)?);
        let mismatch = hom.distance(&ph).max(src.distance(&ps));
        samples.push((format!("{:?}", <[f64; 4]>::from(*e)), mismatch));
    }
    Ok(Report::from_samples("maxwell_equivalence", tol, samples))
}

/// Worst `max(|hom|, |src|)` over the events.
pub fn residual_sweep<F: EmField + ?Sized>(field: &F, events: &[Event], tol: f64) -> Result<Report> {
    let mut samples = Vec::with_capacity(events.len());
    for e in events {
        let (hom, src) = maxwell_residual(field, e)?;
        samples.push((format!("{:?}", <[f64; 4]>::from(*e)), hom.norm().max(src.norm())));
    }
    Ok(Report::from_samples("maxwell_residual", tol, samples))
}

/// Electromagnetic time reversal `E(t) ↦ E(−t)`, `B(t) ↦ −B(−t)`,
/// i.e. `F ↦ F*(−t)`, with `ρ ↦ ρ(−t)`, `j ↦ −j(−t)`.
#[derive(Debug, Clone)]
pub struct TimeReversedEm<F> {
    inner: F,
}

pub fn time_reversal_em<F: EmField>(field: F) -> TimeReversedEm<F> {
    TimeReversedEm { inner: field }
}

impl<F> TimeReversedEm<F> {
    pub fn into_inner(self) -> F {
        self.inner
    }
}

impl<F: EmField> SpacetimeField for TimeReversedEm<F> {
    fn eval(&self, e: &Event) -> Result<Bq> {
        Ok(self.inner.eval(&e.time_reversed())?.star())
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        let d = self.inner.partial(mu, &e.time_reversed())?.star();
        Ok(if mu == 0 { -d } else { d })
    }
}

impl<F: EmField> EmField for TimeReversedEm<F> {
    fn source(&self, e: &Event) -> Result<SourceDensity> {
        let s = self.inner.source(&e.time_reversed())?;
        let j = s.current;
        Ok(SourceDensity::new(s.charge, [-j[0], -j[1], -j[2]]))
    }
}

/// Duality rotation `F ↦ e^{iθ} F`, which rotates `E` into `B`.
///
/// Only defined for source-free fields: a rotated electric source would need
/// magnetic charge, which [`SourceDensity`] cannot express.
#[derive(Debug, Clone)]
pub struct DualityRotated<F> {
    inner: F,
    phase: C64,
}

impl<F: EmField> DualityRotated<F> {
    pub fn new(inner: F, angle: f64) -> Self {
        Self { inner, phase: C64::from_polar(1.0, angle) }
    }
}

impl<F: EmField> SpacetimeField for DualityRotated<F> {
    fn eval(&self, e: &Event) -> Result<Bq> {
        Ok(self.inner.eval(e)?.scale(self.phase))
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        Ok(self.inner.partial(mu, e)?.scale(self.phase))
    }
}

impl<F: EmField> EmField for DualityRotated<F> {
    fn source(&self, e: &Event) -> Result<SourceDensity> {
        let s = self.inner.source(e)?;
        if s.is_zero() {
            Ok(s)
        } else {
            Err(Error::Domain("duality rotation of a sourced field needs magnetic charge".into()))
        }
    }
}
