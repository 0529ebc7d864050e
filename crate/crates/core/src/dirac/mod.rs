//! The Dirac-Lanczos equation `D̄ψ = i m ψ* u`.
//!
//! `D̄ = i∂_t + Σ eₖ∂ₖ` is the bar of the Maxwell operator `D` and shares its
//! conventions; `D D̄ = −(∂_t² − ∇²)`, so every solution also satisfies the
//! Klein-Gordon equation. The right-hand side couples `ψ` to its complex
//! conjugate `ψ*`. That makes the equation real-linear but not complex-linear:
//! `e^{iθ}ψ` is not a solution when `ψ` is, unlike the Maxwell case where
//! `e^{iθ}F` (a duality rotation) is.

mod kernel;
mod mass;
mod treverse;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{gradient, Event, SpacetimeField, SpinorField};
use crate::{Bq, C64};

pub use kernel::{construct_solution, momentum_symbol_kernel, symbol_matrix, KernelAnalysis, KERNEL_REL_TOL};
pub use mass::{effective_mass, effective_mass_field, MassProfile, MassSample, MassSummary, SpinorizedField};
pub use treverse::{
    time_reversal_search, time_reversal_search_with, SearchConfig, TimeReversalEntry, TimeReversalSearch,
};

/// Tolerance for `|E² − |p|² − m²|` on the mass shell.
pub const SHELL_TOL: f64 = 1e-9;

/// Plane-wave parameters `(E, p, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Momentum {
    pub energy: f64,
    pub p: [f64; 3],
    pub mass: f64,
}

impl Momentum {
    pub fn new(energy: f64, p: [f64; 3], mass: f64) -> Self {
        Self { energy, p, mass }
    }

    /// Positive-energy momentum on the shell of `mass`.
    pub fn on_shell_positive(p: [f64; 3], mass: f64) -> Self {
        let e = (p.iter().map(|v| v * v).sum::<f64>() + mass * mass).sqrt();
        Self::new(e, p, mass)
    }

    pub fn shell_defect(&self) -> f64 {
        self.energy * self.energy - self.p.iter().map(|v| v * v).sum::<f64>() - self.mass * self.mass
    }

    pub fn on_shell(&self) -> bool {
        self.shell_defect().abs() <= SHELL_TOL
    }
}

/// Amplitudes of `A e^{−i(Et − p·x)} + B e^{+i(Et − p·x)}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AmplitudePair {
    pub a: Bq,
    pub b: Bq,
}

impl AmplitudePair {
    pub fn to_reals(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        out[..8].copy_from_slice(&self.a.to_reals());
        out[8..].copy_from_slice(&self.b.to_reals());
        out
    }

    pub fn from_reals(r: &[f64]) -> Self {
        let mut a = [0.0; 8];
        let mut b = [0.0; 8];
        a.copy_from_slice(&r[..8]);
        b.copy_from_slice(&r[8..16]);
        Self { a: Bq::from_reals(a), b: Bq::from_reals(b) }
    }
}

/// `D̄ψ = i∂_tψ + Σ eₖ ∂ₖψ` from the field's partials.
pub fn dirac_operator<F: SpacetimeField + ?Sized>(psi: &F, e: &Event) -> Result<Bq> {
    let d = gradient(psi, e)?;
    Ok(Bq::i() * d[0] + Bq::e1() * d[1] + Bq::e2() * d[2] + Bq::e3() * d[3])
}

/// `D̄ψ − i m ψ* u`; zero exactly where `ψ` solves the equation.
pub fn lanczos_residual<F: SpacetimeField + ?Sized>(psi: &F, m: f64, u: &Bq, e: &Event) -> Result<Bq> {
    let lhs = dirac_operator(psi, e)?;
    let mass_term = psi.eval(e)?.star() * *u * C64::new(0.0, m);
    Ok(lhs - mass_term)
}

/// `∂_t²ψ − ∇²ψ + m²ψ`.
pub fn klein_gordon_residual<F: SpinorField + ?Sized>(psi: &F, m: f64, e: &Event) -> Result<Bq> {
    let mut r = psi.second_partial(0, 0, e)?;
    for k in 1..=3 {
        r -= psi.second_partial(k, k, e)?;
    }
    Ok(r + psi.eval(e)?.scale_real(m * m))
}

/// `ψ(x) = A e^{−iφ} + B e^{iφ}`, `φ = Et − p·x`, with closed-form partials.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveSpinor {
    pub momentum: Momentum,
    pub amplitudes: AmplitudePair,
}

impl PlaneWaveSpinor {
    pub fn new(momentum: Momentum, amplitudes: AmplitudePair) -> Self {
        Self { momentum, amplitudes }
    }

    /// `∂_μ φ`.
    fn phase_gradient(&self, mu: usize) -> f64 {
        match mu {
            0 => self.momentum.energy,
            k => -self.momentum.p[k - 1],
        }
    }

    fn waves(&self, e: &Event) -> (Bq, Bq) {
        let p = self.momentum.p;
        let phi = self.momentum.energy * e.t - (p[0] * e.x[0] + p[1] * e.x[1] + p[2] * e.x[2]);
        let minus = C64::from_polar(1.0, -phi);
        (self.amplitudes.a.scale(minus), self.amplitudes.b.scale(minus.conj()))
    }
}

impl SpacetimeField for PlaneWaveSpinor {
    fn eval(&self, e: &Event) -> Result<Bq> {
        let (a, b) = self.waves(e);
        Ok(a + b)
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        let (a, b) = self.waves(e);
        let k = self.phase_gradient(mu);
        Ok((b - a).scale(C64::new(0.0, k)))
    }
}

impl SpinorField for PlaneWaveSpinor {
    fn second_partial(&self, mu: usize, nu: usize, e: &Event) -> Result<Bq> {
        let (a, b) = self.waves(e);
        Ok((a + b).scale_real(-self.phase_gradient(mu) * self.phase_gradient(nu)))
    }
}

/// Spacetime-independent spinor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantSpinor(pub Bq);

impl SpacetimeField for ConstantSpinor {
    fn eval(&self, _e: &Event) -> Result<Bq> {
        Ok(self.0)
    }

    fn partial(&self, _mu: usize, _e: &Event) -> Result<Bq> {
        Ok(Bq::zero())
    }
}

impl SpinorField for ConstantSpinor {
    fn second_partial(&self, _mu: usize, _nu: usize, _e: &Event) -> Result<Bq> {
        Ok(Bq::zero())
    }
}

/// Conjugation applied by a [`SpinorTransform`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjugation {
    None,
    Star,
    /// `bar ∘ star`
    BarStar,
}

impl Conjugation {
    pub fn apply(&self, q: &Bq) -> Bq {
        match self {
            Conjugation::None => *q,
            Conjugation::Star => q.star(),
            Conjugation::BarStar => q.star().bar(),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Conjugation::None => "none",
            Conjugation::Star => "star",
            Conjugation::BarStar => "bar-star",
        }
    }
}

/// `ψ(t, x) ↦ a · σ(ψ(±t, x)) · b`.
///
/// Every piece is real-linear, so partials transform the same way (with a sign
/// per time derivative when time is reversed).
#[derive(Debug, Clone)]
pub struct SpinorTransform<F> {
    pub inner: F,
    pub left: Bq,
    pub right: Bq,
    pub conjugation: Conjugation,
    pub reverse_time: bool,
}

impl<F> SpinorTransform<F> {
    /// `ψ ↦ c ψ`.
    pub fn left_multiply(inner: F, c: Bq) -> Self {
        Self { inner, left: c, right: Bq::one(), conjugation: Conjugation::None, reverse_time: false }
    }

    /// `ψ ↦ ψ c`.
    pub fn right_multiply(inner: F, c: Bq) -> Self {
        Self { inner, left: Bq::one(), right: c, conjugation: Conjugation::None, reverse_time: false }
    }

    fn at(&self, e: &Event) -> Event {
        if self.reverse_time {
            e.time_reversed()
        } else {
            *e
        }
    }

    fn sign(&self, mu: usize) -> f64 {
        if self.reverse_time && mu == 0 {
            -1.0
        } else {
            1.0
        }
    }

    fn wrap(&self, q: &Bq) -> Bq {
        self.left * self.conjugation.apply(q) * self.right
    }
}

impl<F: SpacetimeField> SpacetimeField for SpinorTransform<F> {
    fn eval(&self, e: &Event) -> Result<Bq> {
        Ok(self.wrap(&self.inner.eval(&self.at(e))?))
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        Ok(self.wrap(&self.inner.partial(mu, &self.at(e))?).scale_real(self.sign(mu)))
    }
}

impl<F: SpinorField> SpinorField for SpinorTransform<F> {
    fn second_partial(&self, mu: usize, nu: usize, e: &Event) -> Result<Bq> {
        let s = self.sign(mu) * self.sign(nu);
        Ok(self.wrap(&self.inner.second_partial(mu, nu, &self.at(e))?).scale_real(s))
    }
}

/// Real-linear combination of spinor fields.
pub struct SpinorSum {
    terms: Vec<(f64, Box<dyn SpinorField>)>,
}

impl SpinorSum {
    pub fn new(terms: Vec<(f64, Box<dyn SpinorField>)>) -> Self {
        Self { terms }
    }
}

impl SpacetimeField for SpinorSum {
    fn eval(&self, e: &Event) -> Result<Bq> {
        self.terms.iter().map(|(c, f)| Ok(f.eval(e)?.scale_real(*c))).sum()
    }

    fn partial(&self, mu: usize, e: &Event) -> Result<Bq> {
        self.terms.iter().map(|(c, f)| Ok(f.partial(mu, e)?.scale_real(*c))).sum()
    }
}

impl SpinorField for SpinorSum {
    fn second_partial(&self, mu: usize, nu: usize, e: &Event) -> Result<Bq> {
        self.terms.iter().map(|(c, f)| Ok(f.second_partial(mu, nu, e)?.scale_real(*c))).sum()
    }
}

pub(crate) fn off_shell(m: &Momentum) -> Error {
    Error::OffShell { defect: m.shell_defect() }
}
