use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{off_shell, AmplitudePair, Momentum, PlaneWaveSpinor};
use crate::algebra::require_unit_axis;
use crate::error::{Error, Result};
use crate::{Bq, C64};

/// Singular values at or below this fraction of the largest count as zero.
pub const KERNEL_REL_TOL: f64 = 1e-8;

/// Null space of the plane-wave symbol.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelAnalysis {
    pub dim: usize,
    /// Orthonormal in the real 16-dimensional amplitude space.
    pub basis: Vec<AmplitudePair>,
    /// Descending.
    pub singular_values: Vec<f64>,
}

impl KernelAnalysis {
    /// Ratio of the smallest retained singular value to the largest discarded
    /// one; infinite when nothing was discarded.
    pub fn gap(&self) -> f64 {
        let rank = self.singular_values.len() - self.dim;
        match (rank, self.dim) {
            (0, _) => 0.0,
            (_, 0) => f64::INFINITY,
            (r, _) => self.singular_values[r - 1] / self.singular_values[r],
        }
    }
}

fn apply_symbol(mom: &Momentum, u: &Bq, amp: &AmplitudePair) -> [f64; 16] {
    let [p1, p2, p3] = mom.p;
    let forward = Bq::new(
        C64::new(mom.energy, 0.0),
        C64::new(0.0, p1),
        C64::new(0.0, p2),
        C64::new(0.0, p3),
    );
    let im = C64::new(0.0, mom.mass);
    let top = forward * amp.a - amp.b.star() * *u * im;
    let bottom = -(forward * amp.b) - amp.a.star() * *u * im;
    AmplitudePair { a: top, b: bottom }.to_reals()
}

/// Real 16 × 16 matrix of `(A, B) ↦ ((E + i p)A − i m B* u, −(E + i p)B − i m A* u)`,
/// whose null space holds the amplitudes of plane-wave solutions.
pub fn symbol_matrix(mom: &Momentum, u: &Bq) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(16, 16);
    for j in 0..16 {
        let mut unit = [0.0; 16];
        unit[j] = 1.0;
        let col = apply_symbol(mom, u, &AmplitudePair::from_reals(&unit));
        for (i, v) in col.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

/// Kernel of the plane-wave symbol at `mom` for charge axis `u`.
///
/// Off the mass shell the kernel is trivial; the shell condition is not
/// imposed here so that this can be observed.
pub fn momentum_symbol_kernel(mom: &Momentum, u: &Bq) -> Result<KernelAnalysis> {
    require_unit_axis(u)?;
    if !(mom.energy.is_finite() && mom.mass.is_finite() && mom.p.iter().all(|v| v.is_finite())) {
        return Err(Error::InvalidParams("momentum components must be finite".into()));
    }
    let svd = symbol_matrix(mom, u).svd(false, true);
    let v_t = svd.v_t.as_ref().expect("requested right singular vectors");
    let mut order: Vec<usize> = (0..16).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let singular_values: Vec<f64> = order.iter().map(|&k| svd.singular_values[k]).collect();
    let threshold = KERNEL_REL_TOL * singular_values[0];
    let basis: Vec<AmplitudePair> = order
        .iter()
        .filter(|&&k| svd.singular_values[k] <= threshold)
        .map(|&k| {
            let row: Vec<f64> = v_t.row(k).iter().copied().collect();
            AmplitudePair::from_reals(&row)
        })
        .collect();
    Ok(KernelAnalysis { dim: basis.len(), basis, singular_values })
}

/// The plane-wave solution `Σ cₖ (Aₖ, Bₖ)` over the kernel basis at `mom`.
pub fn construct_solution(mom: &Momentum, u: &Bq, coeffs: &[f64]) -> Result<PlaneWaveSpinor> {
    if !mom.on_shell() {
        return Err(off_shell(mom));
    }
    let kernel = momentum_symbol_kernel(mom, u)?;
    if coeffs.len() != kernel.dim {
        return Err(Error::InvalidParams(format!(
            "expected {} coefficients, got {}",
            kernel.dim,
            coeffs.len()
        )));
    }
    let mut amp = AmplitudePair::default();
    for (c, basis) in coeffs.iter().zip(&kernel.basis) {
        amp.a += basis.a.scale_real(*c);
        amp.b += basis.b.scale_real(*c);
    }
    Ok(PlaneWaveSpinor::new(*mom, amp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::{klein_gordon_residual, lanczos_residual};
    use crate::fields::Event;

    fn events() -> Vec<Event> {
        (0..20)
            .map(|k| {
                let s = k as f64 * 0.71;
                Event::new(3.0 * s.sin(), s.cos(), 1.5 * (0.4 * s).sin(), s - 7.0)
            })
            .collect()
    }

    fn tilted() -> Bq {
        Bq::real_vector([0.6, 0.0, 0.8])
    }

    #[test]
    fn rest_frame_kernel_is_eight_dimensional() {
        let k = momentum_symbol_kernel(&Momentum::new(1.0, [0.0; 3], 1.0), &Bq::e3()).unwrap();
        assert_eq!(k.dim, 8);
        assert!(k.gap() >= 1e6);
    }

    #[test]
    fn moving_frame_kernel_for_both_axes() {
        for u in [Bq::e3(), tilted()] {
            for p in [[0.3, -0.4, 1.2], [2.0, 0.1, -0.5]] {
                let mom = Momentum::on_shell_positive(p, 0.7);
                let k = momentum_symbol_kernel(&mom, &u).unwrap();
                assert_eq!(k.dim, 8);
                assert!(k.gap() >= 1e6, "gap {}", k.gap());
            }
        }
    }

    #[test]
    fn off_shell_kernel_is_trivial() {
        let k = momentum_symbol_kernel(&Momentum::new(1.5, [0.0; 3], 1.0), &Bq::e3()).unwrap();
        assert_eq!(k.dim, 0);
    }

    #[test]
    fn off_shell_construction_rejected() {
        let r = construct_solution(&Momentum::new(1.5, [0.0; 3], 1.0), &Bq::e3(), &[1.0; 8]);
        assert!(matches!(r, Err(Error::OffShell { .. })));
    }

    #[test]
    fn coefficient_count_checked() {
        let r = construct_solution(&Momentum::new(1.0, [0.0; 3], 1.0), &Bq::e3(), &[1.0; 3]);
        assert!(matches!(r, Err(Error::InvalidParams(_))));
    }

    #[test]
    fn constructed_solutions_solve_both_equations() {
        let coeffs = [0.3, -1.0, 0.25, 0.8, -0.6, 0.1, 0.9, -0.2];
        for u in [Bq::e3(), tilted()] {
            let mom = Momentum::on_shell_positive([0.5, -0.2, 0.9], 1.3);
            let psi = construct_solution(&mom, &u, &coeffs).unwrap();
            for e in events() {
                assert!(lanczos_residual(&psi, mom.mass, &u, &e).unwrap().norm() <= 1e-10);
                assert!(klein_gordon_residual(&psi, mom.mass, &e).unwrap().norm() <= 1e-10);
            }
        }
    }

    #[test]
    fn basis_is_orthonormal() {
        let k = momentum_symbol_kernel(&Momentum::on_shell_positive([0.1, 0.2, 0.3], 1.0), &Bq::e3()).unwrap();
        for (i, a) in k.basis.iter().enumerate() {
            for (j, b) in k.basis.iter().enumerate() {
                let dot: f64 = a.to_reals().iter().zip(b.to_reals()).map(|(x, y)| x * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
    }
}
