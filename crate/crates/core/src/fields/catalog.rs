use serde::{Deserialize, Serialize};

use super::{EmField, Event, SpacetimeField};
use crate::error::{Error, Result};
use crate::maxwell::SourceDensity;
use crate::Bq;

/// Events closer than this to the charge are rejected by [`CoulombField`].
pub const COULOMB_GUARD_RADIUS: f64 = 1e-3;

/// The named source-free electromagnetic fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogName {
    Constant,
    Parallel,
    Coulomb,
    PlaneWave,
    TwoWave,
}

impl CatalogName {
    pub const ALL: [CatalogName; 5] = [
        CatalogName::Constant,
        CatalogName::Parallel,
        CatalogName::Coulomb,
        CatalogName::PlaneWave,
        CatalogName::TwoWave,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CatalogName::Constant => "constant",
            CatalogName::Parallel => "parallel",
            CatalogName::Coulomb => "coulomb",
            CatalogName::PlaneWave => "plane_wave",
            CatalogName::TwoWave => "two_wave",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == name)
            .ok_or_else(|| Error::UnknownField(name.to_string()))
    }

    /// Representative parameters used by the sweeps.
    pub fn default_spec(&self) -> FieldSpec {
        match self {
            CatalogName::Constant => FieldSpec::Constant { e: [1.0, -0.5, 0.25], b: [0.3, 0.0, -0.7] },
            CatalogName::Parallel => FieldSpec::Parallel { e0: 1.0, b0: 0.5 },
            CatalogName::Coulomb => FieldSpec::Coulomb { q: 1.0 },
            CatalogName::PlaneWave => FieldSpec::PlaneWave { k: 1.0, amplitude: 1.0 },
            CatalogName::TwoWave => FieldSpec::TwoWave { k1: 1.0, k2: 1.7 },
        }
    }
}

fn one() -> f64 {
    1.0
}

/// JSON description of a catalog field: `{"name": "...", "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", content = "params", rename_all = "snake_case")]
pub enum FieldSpec {
    Constant {
        #[serde(rename = "E", default)]
        e: [f64; 3],
        #[serde(rename = "B", default)]
        b: [f64; 3],
    },
    Parallel {
        #[serde(rename = "E0", default = "one")]
        e0: f64,
        #[serde(rename = "B0", default = "one")]
        b0: f64,
    },
    Coulomb {
        #[serde(default = "one")]
        q: f64,
    },
    PlaneWave {
        #[serde(default = "one")]
        k: f64,
        #[serde(default = "one")]
        amplitude: f64,
    },
    TwoWave {
        #[serde(default = "one")]
        k1: f64,
        #[serde(default = "one")]
        k2: f64,
    },
}

impl FieldSpec {
    pub fn name(&self) -> CatalogName {
        match self {
            FieldSpec::Constant { .. } => CatalogName::Constant,
            FieldSpec::Parallel { .. } => CatalogName::Parallel,
            FieldSpec::Coulomb { .. } => CatalogName::Coulomb,
            FieldSpec::PlaneWave { .. } => CatalogName::PlaneWave,
            FieldSpec::TwoWave { .. } => CatalogName::TwoWave,
        }
    }

    pub fn build(&self) -> Result<Box<dyn EmField>> {
        let finite = |vals: &[f64]| {
            if vals.iter().all(|v| v.is_finite()) {
                Ok(())
            } else {
                Err(Error::InvalidParams("non-finite parameter".into()))
            }
        };
        Ok(match *self {
            FieldSpec::Constant { e, b } => {
                finite(&e)?;
                finite(&b)?;
                Box::new(ConstantField::new(Bq::from_fields(e, b)))
            }
            FieldSpec::Parallel { e0, b0 } => {
                finite(&[e0, b0])?;
                Box::new(ConstantField::new(Bq::from_fields([0.0, 0.0, e0], [0.0, 0.0, b0])))
            }
            FieldSpec::Coulomb { q } => {
                finite(&[q])?;
                Box::new(CoulombField::new(q))
            }
            FieldSpec::PlaneWave { k, amplitude } => {
                finite(&[k, amplitude])?;
                Box::new(PlaneWave::new(k, amplitude, [0.0, 0.0, 1.0], [1.0, 0.0, 0.0])?)
            }
            FieldSpec::TwoWave { k1, k2 } => {
                finite(&[k1, k2])?;
                Box::new(Superposition::new(vec![
                    Box::new(PlaneWave::new(k1, 1.0, [0.0, 0.0, 1.0], [1.0, 0.0, 0.0])?),
                    Box::new(PlaneWave::new(k2, 1.0, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0])?),
                ]))
            }
        })
    }
}

/// Build a catalog field from its name and a flat parameter list.
///
/// | name         | params                      |
/// |--------------|-----------------------------|
/// | `constant`   | `E₁ E₂ E₃ B₁ B₂ B₃`         |
/// | `parallel`   | `E₀ B₀` (both along e₃)     |
/// | `coulomb`    | `q`                         |
/// | `plane_wave` | `k` or `k amplitude`        |
/// | `two_wave`   | `k₁ k₂`                     |
pub fn catalog(name: &str, params: &[f64]) -> Result<Box<dyn EmField>> {
    let kind = CatalogName::parse(name)?;
    let wrong = || Error::InvalidParams(format!("`{name}` does not take {} parameters", params.len()));
    let spec = match (kind, params) {
        (CatalogName::Constant, &[e1, e2, e3, b1, b2, b3]) => FieldSpec::Constant { e: [e1, e2, e3], b: [b1, b2, b3] },
        (CatalogName::Parallel, &[e0, b0]) => FieldSpec::Parallel { e0, b0 },
        (CatalogName::Coulomb, &[q]) => FieldSpec::Coulomb { q },
        (CatalogName::PlaneWave, &[k]) => FieldSpec::PlaneWave { k, amplitude: 1.0 },
        (CatalogName::PlaneWave, &[k, amplitude]) => FieldSpec::PlaneWave { k, amplitude },
        (CatalogName::TwoWave, &[k1, k2]) => FieldSpec::TwoWave { k1, k2 },
        _ => return Err(wrong()),
    };
    spec.build()
}

/// Uniform field, source-free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantField {
    value: Bq,
}

impl ConstantField {
    pub fn new(value: Bq) -> Self {
        Self { value }
    }
}

impl SpacetimeField for ConstantField {
    fn eval(&self, _e: &Event) -> Result<Bq> {
        Ok(self.value)
    }

    fn partial(&self, _mu: usize, _e: &Event) -> Result<Bq> {
        Ok(Bq::zero())
    }
}

impl EmField for ConstantField {
    fn source(&self, _e: &Event) -> Result<SourceDensity> {
        Ok(SourceDensity::default())
    }
}

/// Static point charge at the origin, `E = q x/|x|³`, `B = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombField {
    q: f64,
}

impl CoulombField {
    pub fn new(q: f64) -> Self {
        Self { q }
    }

    fn guard(&self, e: &Event) -> Result<f64> {
        let r = e.radius();
        if r < COULOMB_GUARD_RADIUS || !e.is_finite() {
            Err(e.singular())
        } else {
            Ok(r)
        }
    }
}

impl SpacetimeField for CoulombField {
    fn eval(&self, e: &Event) -> Result<Bq> {
        let r = self.guard(e)?;
        let s = self.q / (r * r * r);
        Ok(Bq::real_vector([s * e.x[0], s * e.x[1], s * e.x[2]]))
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        let r = self.guard(e)?;
        if mu == 0 {
            return Ok(Bq::zero());
        }
        let j = mu - 1;
        let r2 = r * r;
        let r5 = r2 * r2 * r;
        let mut d = [0.0; 3];
        for (i, di) in d.iter_mut().enumerate() {
            let delta = if i == j { r2 } else { 0.0 };
            *di = self.q * (delta - 3.0 * e.x[i] * e.x[j]) / r5;
        }
        Ok(Bq::real_vector(d))
    }
}

impl EmField for CoulombField {
    fn source(&self, e: &Event) -> Result<SourceDensity> {
        self.guard(e)?;
        Ok(SourceDensity::default())
    }
}

/// Linearly polarized vacuum wave `E = a cos(k(n·x − t)) ε`, `B = n × E`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    k: f64,
    /// Constant complex polarization `a (ε + i n×ε)`.
    polarization: Bq,
    n: [f64; 3],
}

impl PlaneWave {
    /// `n` and `eps` must be orthonormal.
    pub fn new(k: f64, amplitude: f64, n: [f64; 3], eps: [f64; 3]) -> Result<Self> {
        let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        if (dot(n, n) - 1.0).abs() > 1e-12 || (dot(eps, eps) - 1.0).abs() > 1e-12 || dot(n, eps).abs() > 1e-12 {
            return Err(Error::InvalidParams("plane wave needs orthonormal direction and polarization".into()));
        }
        let b = [
            n[1] * eps[2] - n[2] * eps[1],
            n[2] * eps[0] - n[0] * eps[2],
            n[0] * eps[1] - n[1] * eps[0],
        ];
        let polarization = Bq::from_fields(eps, b).scale_real(amplitude);
        Ok(Self { k, polarization, n })
    }

    fn phase(&self, e: &Event) -> f64 {
        self.k * (self.n[0] * e.x[0] + self.n[1] * e.x[1] + self.n[2] * e.x[2] - e.t)
    }
}

impl SpacetimeField for PlaneWave {
    fn eval(&self, e: &Event) -> Result<Bq> {
        Ok(self.polarization.scale_real(self.phase(e).cos()))
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        // d(phase)/dt = −k, d(phase)/dx_j = k n_j
        let dphase = if mu == 0 { -self.k } else { self.k * self.n[mu - 1] };
        Ok(self.polarization.scale_real(-self.phase(e).sin() * dphase))
    }
}

impl EmField for PlaneWave {
    fn source(&self, _e: &Event) -> Result<SourceDensity> {
        Ok(SourceDensity::default())
    }
}

/// Pointwise sum of fields; sources add.
pub struct Superposition {
    parts: Vec<Box<dyn EmField>>,
}

impl Superposition {
    pub fn new(parts: Vec<Box<dyn EmField>>) -> Self {
        Self { parts }
    }
}

impl SpacetimeField for Superposition {
    fn eval(&self, e: &Event) -> Result<Bq> {
        self.parts.iter().map(|p| p.eval(e)).sum()
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        self.parts.iter().map(|p| p.partial(mu, e)).sum()
    }
}

impl EmField for Superposition {
    fn source(&self, e: &Event) -> Result<SourceDensity> {
        self.parts
            .iter()
            .try_fold(SourceDensity::default(), |acc, p| Ok(acc + p.source(e)?))
    }
}
