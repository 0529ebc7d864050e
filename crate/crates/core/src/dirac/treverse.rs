//! Exhaustive search for time reversals of the Dirac-Lanczos equation.
//!
//! Candidates are `T ψ(t, x) = a · σ(ψ(−t, x)) · b` with `σ` one of the two
//! antilinear involutions and `a, b` signed units. A candidate is kept when it
//! maps a spanning set of plane-wave solutions to solutions.
//!
//! Solution preservation alone also admits maps that commute with the charge
//! phase `ψ ↦ ψ e^{θu}` (for example `ψ ↦ ψ*(−t, x) i`). Those compose time
//! reversal with charge conjugation, and their square has no fixed sign. A
//! time reversal proper must reverse the phase generator, `T(ψu) = −T(ψ)u`,
//! which is what antiunitarity means for the right-acting complex structure.
//! Both classes are reported; only the second is subject to the `T² = −1` law.

use serde::{Deserialize, Serialize};

use super::kernel::construct_solution;
use super::{lanczos_residual, Conjugation, Momentum, PlaneWaveSpinor, SpinorTransform};
use crate::algebra::require_unit_axis;
use crate::error::{Error, Result};
use crate::fields::{Event, SpacetimeField};
use crate::Bq;

/// Parameters of [`time_reversal_search_with`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    /// Spatial momenta of the spanning solutions; energies are put on shell.
    pub momenta: Vec<[f64; 3]>,
    pub events: Vec<Event>,
    pub residual_tol: f64,
    pub square_tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        let events = (0..50)
            .map(|k| {
                let s = k as f64;
                Event::new(
                    2.0 * (0.91 * s).sin(),
                    1.5 * (1.37 * s + 0.2).cos(),
                    1.5 * (0.53 * s + 1.1).sin(),
                    1.5 * (2.11 * s + 0.7).cos(),
                )
            })
            .collect();
        Self {
            momenta: vec![[0.0, 0.0, 0.0], [0.3, -0.2, 0.5], [-0.7, 0.4, 0.1]],
            events,
            residual_tol: 1e-9,
            square_tol: 1e-10,
        }
    }
}

/// A solution-preserving candidate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeReversalEntry {
    pub descriptor: String,
    pub left: Bq,
    pub right: Bq,
    pub conjugation: Conjugation,
    /// Worst Lanczos residual of a transformed solution.
    pub residual: f64,
    /// `T(ψu) = −T(ψ)u` on the solution span.
    pub reverses_charge_phase: bool,
    /// `s` with `T²ψ = sψ`, or 0 when neither sign fits.
    pub t_square_sign: i8,
    /// `max |T²ψ − ψ|` over the solution span and events.
    pub plus_one_defect: f64,
    /// `max |T²ψ + ψ|` over the solution span and events.
    pub minus_one_defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeReversalSearch {
    pub candidates: usize,
    /// Solution-preserving candidates that reverse the charge phase.
    pub time_reversals: Vec<TimeReversalEntry>,
    /// Solution-preserving candidates that commute with the charge phase.
    pub charge_conjugate: Vec<TimeReversalEntry>,
}

impl TimeReversalSearch {
    pub fn all_square_to_minus_one(&self) -> bool {
        !self.time_reversals.is_empty() && self.time_reversals.iter().all(|t| t.t_square_sign == -1)
    }
}

fn signed_units() -> Vec<(String, Bq)> {
    let i = Bq::i();
    let base = [
        ("1", Bq::one()),
        ("i", i),
        ("e1", Bq::e1()),
        ("e2", Bq::e2()),
        ("e3", Bq::e3()),
        ("ie1", i * Bq::e1()),
        ("ie2", i * Bq::e2()),
        ("ie3", i * Bq::e3()),
    ];
    let mut out = Vec::with_capacity(16);
    for (name, q) in base {
        out.push((format!("+{name}"), q));
        out.push((format!("-{name}"), -q));
    }
    out
}

fn transform<F>(inner: F, a: Bq, b: Bq, sigma: Conjugation) -> SpinorTransform<F> {
    SpinorTransform { inner, left: a, right: b, conjugation: sigma, reverse_time: true }
}

/// Worst residual of `T ψ` over the solutions, stopping early past `tol`.
fn preservation_residual(
    sols: &[PlaneWaveSpinor],
    a: Bq,
    b: Bq,
    sigma: Conjugation,
    m: f64,
    u: &Bq,
    cfg: &SearchConfig,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for psi in sols {
        let t = transform(*psi, a, b, sigma);
        for e in &cfg.events {
            worst = worst.max(lanczos_residual(&t, m, u, e)?.norm());
            if !(worst <= cfg.residual_tol) {
                return Ok(worst);
            }
        }
    }
    Ok(worst)
}

fn max_over<F: Fn(&PlaneWaveSpinor, &Event) -> Result<f64>>(
    sols: &[PlaneWaveSpinor],
    events: &[Event],
    f: F,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for psi in sols {
        for e in events {
            worst = worst.max(f(psi, e)?);
        }
    }
    Ok(worst)
}

/// [`time_reversal_search_with`] under the default configuration.
pub fn time_reversal_search(m: f64, u: &Bq) -> Result<TimeReversalSearch> {
    time_reversal_search_with(m, u, &SearchConfig::default())
}

/// Scan all 512 candidates `a · σ(ψ(−t, x)) · b`.
///
/// Errors with `SearchExhausted` when no candidate both preserves solutions and
/// reverses the charge phase.
pub fn time_reversal_search_with(m: f64, u: &Bq, cfg: &SearchConfig) -> Result<TimeReversalSearch> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidParams(format!("mass must be positive, got {m}")));
    }
    require_unit_axis(u)?;

    let mut sols = Vec::new();
    for p in &cfg.momenta {
        let mom = Momentum::on_shell_positive(*p, m);
        for k in 0..8 {
            let mut coeffs = [0.0; 8];
            coeffs[k] = 1.0;
            sols.push(construct_solution(&mom, u, &coeffs)?);
        }
    }

    let units = signed_units();
    let mut out = TimeReversalSearch { candidates: 0, time_reversals: Vec::new(), charge_conjugate: Vec::new() };
    for sigma in [Conjugation::Star, Conjugation::BarStar] {
        for (an, a) in &units {
            for (bn, b) in &units {
                out.candidates += 1;
                let residual = preservation_residual(&sols, *a, *b, sigma, m, u, cfg)?;
                if !(residual <= cfg.residual_tol) {
                    continue;
                }

                let phase_defect = max_over(&sols, &cfg.events, |psi, e| {
                    let t_of_phased = transform(SpinorTransform::right_multiply(*psi, *u), *a, *b, sigma).eval(e)?;
                    let phased_t = transform(*psi, *a, *b, sigma).eval(e)? * *u;
                    Ok((t_of_phased + phased_t).norm())
                })?;
                let reverses_charge_phase = phase_defect <= cfg.square_tol;

                let mut defects = [0.0f64; 2];
                for (slot, s) in [1.0, -1.0].into_iter().enumerate() {
                    defects[slot] = max_over(&sols, &cfg.events, |psi, e| {
                        let twice = transform(transform(*psi, *a, *b, sigma), *a, *b, sigma).eval(e)?;
                        Ok((twice - psi.eval(e)?.scale_real(s)).norm())
                    })?;
                }
                let t_square_sign = if defects[1] <= cfg.square_tol {
                    -1
                } else if defects[0] <= cfg.square_tol {
                    1
                } else {
                    0
                };

                let entry = TimeReversalEntry {
                    descriptor: format!("a={an} b={bn} sigma={}", sigma.as_str()),
                    left: *a,
                    right: *b,
                    conjugation: sigma,
                    residual,
                    reverses_charge_phase,
                    t_square_sign,
                    plus_one_defect: defects[0],
                    minus_one_defect: defects[1],
                };
                if reverses_charge_phase {
                    out.time_reversals.push(entry);
                } else {
                    out.charge_conjugate.push(entry);
                }
            }
        }
    }
    if out.time_reversals.is_empty() {
        return Err(Error::SearchExhausted);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maxwell::time_reversal_em;
    use crate::fields::catalog;

    fn tilted() -> Bq {
        Bq::real_vector([0.6, 0.0, 0.8])
    }

    #[test]
    fn every_time_reversal_squares_to_minus_one() {
        for u in [Bq::e3(), tilted()] {
            let r = time_reversal_search(1.0, &u).unwrap();
            assert_eq!(r.candidates, 512);
            assert!(r.all_square_to_minus_one());
            for t in &r.time_reversals {
                assert_ne!(t.conjugation, Conjugation::None);
                assert!(t.minus_one_defect <= 1e-10);
            }
        }
    }

    #[test]
    fn charge_conjugate_maps_have_both_signs() {
        let r = time_reversal_search(1.0, &Bq::e3()).unwrap();
        let signs: Vec<i8> = r.charge_conjugate.iter().map(|t| t.t_square_sign).collect();
        assert!(signs.contains(&1));
        assert!(signs.contains(&-1));
    }

    #[test]
    fn applying_twice_negates_a_solution() {
        let u = Bq::e3();
        let r = time_reversal_search(1.0, &u).unwrap();
        let t = &r.time_reversals[0];
        let mom = Momentum::on_shell_positive([0.4, 0.1, -0.9], 1.0);
        let psi = construct_solution(&mom, &u, &[0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let twice = transform(transform(psi, t.left, t.right, t.conjugation), t.left, t.right, t.conjugation);
        for e in &SearchConfig::default().events {
            assert!((twice.eval(e).unwrap() + psi.eval(e).unwrap()).norm() <= 1e-10);
        }
    }

    #[test]
    fn electromagnetic_reversal_squares_to_plus_one() {
        let f = catalog("plane_wave", &[1.0]).unwrap();
        let twice = time_reversal_em(time_reversal_em(&f));
        for e in &SearchConfig::default().events {
            assert!((twice.eval(e).unwrap() - f.eval(e).unwrap()).norm() <= 1e-15);
        }
    }

    #[test]
    fn mass_must_be_positive() {
        assert!(matches!(time_reversal_search(0.0, &Bq::e3()), Err(Error::InvalidParams(_))));
    }
}
