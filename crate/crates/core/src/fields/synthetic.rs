//! Fields that need not satisfy Maxwell's equations.
//!
//! They exist to show that the biquaternion and vector-calculus residuals are
//! the same expressions in the partials, not merely both zero on solutions.

use super::{EmField, Event, SpacetimeField};
use crate::error::Result;
use crate::maxwell::SourceDensity;
use crate::{Bq, C64};

/// `F = F₀ + Σ_μ x^μ G_μ + Σ x^a x^b H_ab` with a declared (constant) source.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialField {
    offset: Bq,
    linear: [Bq; 4],
    quadratic: Vec<(usize, usize, Bq)>,
    source: SourceDensity,
}

impl PolynomialField {
    pub fn affine(offset: Bq, linear: [Bq; 4]) -> Self {
        Self { offset, linear, quadratic: Vec::new(), source: SourceDensity::default() }
    }

    /// `F = x₁ e₁`: a uniform charge density of one, declared as zero.
    pub fn x1_e1() -> Self {
        let z = Bq::zero();
        Self::affine(z, [z, Bq::e1(), z, z])
    }

    /// Add `x^a x^b h`.
    pub fn with_quadratic(mut self, a: usize, b: usize, h: Bq) -> Self {
        self.quadratic.push((a, b, h));
        self
    }

    pub fn with_source(mut self, source: SourceDensity) -> Self {
        self.source = source;
        self
    }
}

impl SpacetimeField for PolynomialField {
    fn eval(&self, e: &Event) -> Result<Bq> {
        let mut f = self.offset;
        for (mu, g) in self.linear.iter().enumerate() {
            f += g.scale_real(e.coord(mu));
        }
        for (a, b, h) in &self.quadratic {
            f += h.scale_real(e.coord(*a) * e.coord(*b));
        }
        Ok(f)
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        let mut d = self.linear[mu];
        for (a, b, h) in &self.quadratic {
            if *a == mu {
                d += h.scale_real(e.coord(*b));
            }
            if *b == mu {
                d += h.scale_real(e.coord(*a));
            }
        }
        Ok(d)
    }
}

impl EmField for PolynomialField {
    fn source(&self, _e: &Event) -> Result<SourceDensity> {
        Ok(self.source)
    }
}

/// `E = (sin(t + x₂), x₁ cos x₃, 0)`, `B = (t x₃, 0, sin(x₁ x₂))`, declared source-free.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TrigField;

impl SpacetimeField for TrigField {
    fn eval(&self, e: &Event) -> Result<Bq> {
        let (t, [x1, x2, x3]) = (e.t, e.x);
        Ok(Bq::vector(
            C64::new((t + x2).sin(), t * x3),
            C64::new(x1 * x3.cos(), 0.0),
            C64::new(0.0, (x1 * x2).sin()),
        ))
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        let (t, [x1, x2, x3]) = (e.t, e.x);
        let z = C64::new(0.0, 0.0);
        Ok(match mu {
            0 => Bq::vector(C64::new((t + x2).cos(), x3), z, z),
            1 => Bq::vector(z, C64::new(x3.cos(), 0.0), C64::new(0.0, x2 * (x1 * x2).cos())),
            2 => Bq::vector(C64::new((t + x2).cos(), 0.0), z, C64::new(0.0, x1 * (x1 * x2).cos())),
            _ => Bq::vector(C64::new(0.0, t), C64::new(-x1 * x3.sin(), 0.0), z),
        })
    }
}

impl EmField for TrigField {
    fn source(&self, _e: &Event) -> Result<SourceDensity> {
        Ok(SourceDensity::default())
    }
}
