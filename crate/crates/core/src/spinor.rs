//! Spinor form of a non-null electromagnetic field.
//!
//! Any non-null `F` can be written `F = ψ u bar(ψ)` with a fixed real unit
//! axis `u` and `ψ = √ρ e^{iβ/2} L`, where `ρ e^{iβ}` is the principal square
//! root of the invariant `F·F` and `L` is the rotor
//!
//! ```text
//! L = (f + u) / √(2(1 + f·u)),   f = F / (ρ e^{iβ})
//! ```
//!
//! The representation is not unique: `L ↦ L exp(c u)` for any complex `c`
//! leaves `F` unchanged, so the eight real components of `ψ` carry only six
//! real degrees of freedom of the field. [`dof_rank`] measures that directly.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::algebra::{exp_along, require_unit_axis, sqrt_principal};
use crate::error::{Error, Result};
use crate::fields::{central_diff4, fd_step};
use crate::{Bq, Rotor64, C64};

/// Relative threshold below which `|F·F| / |F|²` counts as null.
pub const NULL_EPS: f64 = 1e-9;
/// Threshold on `|1 + f·u|` below which the axis is antipodal to the field.
pub const DEGENERATE_EPS: f64 = 1e-8;
/// Singular values below this fraction of the largest count as zero.
pub const RANK_REL_TOL: f64 = 1e-8;

/// `(ρ, β, L, u)` with `F = ρ e^{iβ} L u bar(L)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinorDecomposition {
    pub rho: f64,
    /// Duality angle. [`decompose`] returns it in `(−π, π]`; other values are
    /// accepted and enter the spinor as `e^{iβ/2}`.
    pub beta: f64,
    pub rotor: Rotor64,
    pub axis: Bq,
}

impl SpinorDecomposition {
    pub fn new(rho: f64, beta: f64, rotor: Rotor64, axis: Bq) -> Result<Self> {
        require_unit_axis(&axis)?;
        if !(rho > 0.0 && rho.is_finite()) || !beta.is_finite() {
            return Err(Error::Domain("amplitude must be positive and the angle finite".into()));
        }
        Ok(Self { rho, beta, rotor, axis })
    }

    /// `ψ = √ρ e^{iβ/2} L`.
    pub fn spinor(&self) -> Bq {
        self.rotor.value().scale(C64::from_polar(self.rho.sqrt(), self.beta / 2.0))
    }
}

/// `(ρ, β)` with `ρ e^{iβ} = sqrt_principal(F·F)`.
pub fn invariant_scale(f: &Bq) -> Result<(f64, f64)> {
    let inv = f.cdot(f)?;
    let scale = f.norm().powi(2);
    let threshold = NULL_EPS * scale;
    if !(inv.norm() > threshold) {
        return Err(Error::NullField { invariant: inv.norm(), threshold });
    }
    let lambda = sqrt_principal(inv);
    Ok((lambda.norm(), lambda.arg()))
}

/// `ψ u bar(ψ)`.
pub fn compose(dec: &SpinorDecomposition) -> Bq {
    let psi = dec.spinor();
    psi * dec.axis * psi.bar()
}

/// Split `F` into amplitude, duality angle and rotor relative to axis `u`.
pub fn decompose(f: &Bq, u: &Bq) -> Result<SpinorDecomposition> {
    require_unit_axis(u)?;
    let (rho, beta) = invariant_scale(f)?;
    let dir = f.vector_part() / C64::from_polar(rho, beta);
    let one_plus = C64::new(1.0, 0.0) + dir.cdot(u)?;
    if one_plus.norm() <= DEGENERATE_EPS {
        return Err(Error::DegenerateAxis { gap: one_plus.norm() });
    }
    let l = (dir + *u) / sqrt_principal(one_plus * 2.0);
    SpinorDecomposition::new(rho, beta, Rotor64::new(l)?, *u)
}

/// Replace `L` by `L exp(c u)`; the composed field does not change.
pub fn gauge_shift(dec: &SpinorDecomposition, c: C64) -> SpinorDecomposition {
    let g = exp_along(&dec.axis, c).expect("axis validated at construction");
    // exp(cu) bar(exp(cu)) = exp(cu) exp(−cu) = 1, so the product stays unit
    let rotor = Rotor64::new(dec.rotor.value() * g).expect("gauge factor is unit");
    SpinorDecomposition { rotor, ..*dec }
}

/// Recover `c` with `L₂ = L₁ exp(c u)`.
///
/// `bar(L₁) L₂ = cos c + u sin c` must lie in `span{1, u}`; then
/// `c = −i log(cos c + i sin c)` with the principal logarithm.
pub fn gauge_log(l1: &Rotor64, l2: &Rotor64, u: &Bq) -> Result<C64> {
    require_unit_axis(u)?;
    let q = l1.value().bar() * l2.value();
    let cos = q.w;
    let sin = q.vector_part().cdot(u)?;
    let residue = (q - Bq::scalar(cos) - u.scale(sin)).norm();
    if residue > 1e-9 {
        return Err(Error::NotOnOrbit { residue });
    }
    let i = C64::new(0.0, 1.0);
    Ok(-i * (cos + i * sin).ln())
}

/// Rank analysis of the parameter-to-field map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DofAnalysis {
    pub rank: usize,
    pub nullity: usize,
    /// Descending.
    pub singular_values: Vec<f64>,
    /// Cosine of the largest principal angle between the numerical null space
    /// and the tangent plane of the gauge orbit (1 means identical).
    pub gauge_overlap: f64,
}

/// Number of real parameters: `ρ`, `β` and six chart coordinates of the rotor.
pub const DOF_PARAMS: usize = 8;

/// Real orthonormal frame `(v₁, v₂, u)`.
fn frame(u: &Bq) -> [Bq; 3] {
    let uv = u.real_vector_part();
    // cross with the basis axis least aligned with u
    let k = (0..3)
        .min_by(|&a, &b| uv[a].abs().total_cmp(&uv[b].abs()))
        .unwrap();
    let mut a = [0.0; 3];
    a[k] = 1.0;
    let cross = |p: [f64; 3], q: [f64; 3]| {
        [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]
    };
    let v1 = cross(a, uv);
    let n = (v1[0] * v1[0] + v1[1] * v1[1] + v1[2] * v1[2]).sqrt();
    let v1 = [v1[0] / n, v1[1] / n, v1[2] / n];
    let v2 = cross(uv, v1);
    [Bq::real_vector(v1), Bq::real_vector(v2), *u]
}

/// Chart on the unit shell around `L₀`:
/// `L(ξ) = P(L₀ (1 + Σ_a ξ_a v_a + Σ_a ξ_{a+3} i v_a))`, `P(q) = q/√N(q)`.
fn chart_rotor(l0: &Rotor64, frame: &[Bq; 3], xi: &[f64]) -> Result<Rotor64> {
    let mut t = Bq::one();
    for a in 0..3 {
        t += frame[a].scale(C64::new(xi[a], xi[a + 3]));
    }
    Rotor64::normalize(l0.value() * t)
}

/// Inverse of [`chart_rotor`] as a biquaternion whose vector coefficients along
/// the frame are `ξ_a + i ξ_{a+3}`.
fn chart_coords(l0: &Rotor64, l: &Rotor64) -> Bq {
    let q = l0.value().bar() * l.value();
    q.vector_part() / q.w
}

fn field_reals(f: &Bq) -> [f64; 6] {
    [f.x.re, f.x.im, f.y.re, f.y.im, f.z.re, f.z.im]
}

/// Real Jacobian `∂F/∂p` (6 × 8) at `dec`, by fourth-order central differences,
/// in the parameters `p = (ρ, β, ξ₁..ξ₆)`.
pub fn dof_jacobian(dec: &SpinorDecomposition) -> Result<DMatrix<f64>> {
    let fr = frame(&dec.axis);
    let base = [dec.rho, dec.beta, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    let eval = |p: &[f64; 8]| -> Result<Bq> {
        let rotor = chart_rotor(&dec.rotor, &fr, &p[2..])?;
        let d = SpinorDecomposition { rho: p[0], beta: p[1], rotor, axis: dec.axis };
        Ok(compose(&d))
    };
    let mut jac = DMatrix::zeros(6, DOF_PARAMS);
    for a in 0..DOF_PARAMS {
        // F is linear in ρ; a relative step keeps ρ − 2h positive
        let h = if a == 0 { 1e-3 * dec.rho } else { fd_step(1e-3, base[a]) };
        let col = central_diff4(
            |s| {
                let mut p = base;
                p[a] = s;
                eval(&p)
            },
            base[a],
            h,
        )?;
        for (r, v) in field_reals(&col).into_iter().enumerate() {
            jac[(r, a)] = v;
        }
    }
    Ok(jac)
}

/// Tangent directions of `c ↦ gauge_shift(dec, c)` at `c = 0` along `Re c`
/// and `Im c`, expressed in the parameters of [`dof_jacobian`].
pub fn gauge_tangents(dec: &SpinorDecomposition) -> Result<[DVector<f64>; 2]> {
    let fr = frame(&dec.axis);
    let mut out = [DVector::zeros(DOF_PARAMS), DVector::zeros(DOF_PARAMS)];
    for (slot, dir) in [C64::new(1.0, 0.0), C64::new(0.0, 1.0)].into_iter().enumerate() {
        let d = central_diff4(|s| Ok(chart_coords(&dec.rotor, &gauge_shift(dec, dir * s).rotor)), 0.0, 1e-3)?;
        for a in 0..3 {
            let c = d.vector_part().cdot(&fr[a])?;
            out[slot][2 + a] = c.re;
            out[slot][5 + a] = c.im;
        }
    }
    Ok(out)
}

/// Numerical rank of the map `(ρ, β, L) ↦ F` at `dec`.
///
/// The Jacobian is padded to 8 × 8 so that the singular value list has one entry
/// per parameter. Expected: rank 6, nullity 2, and the two null directions
/// spanning the gauge orbit `L exp(c u)`.
pub fn dof_rank(dec: &SpinorDecomposition) -> Result<DofAnalysis> {
    let jac = dof_jacobian(dec)?;
    let mut padded = DMatrix::zeros(DOF_PARAMS, DOF_PARAMS);
    padded.view_mut((0, 0), (6, DOF_PARAMS)).copy_from(&jac);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.as_ref().expect("requested right singular vectors");

    let mut order: Vec<usize> = (0..DOF_PARAMS).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let singular_values: Vec<f64> = order.iter().map(|&k| svd.singular_values[k]).collect();
    let smax = singular_values[0];
    let rank = singular_values.iter().filter(|&&s| s > RANK_REL_TOL * smax).count();
    let nullity = DOF_PARAMS - rank;

    let null: Vec<DVector<f64>> = order[rank..].iter().map(|&k| v_t.row(k).transpose()).collect();
    let gauge_overlap = if null.is_empty() {
        0.0
    } else {
        let n = DMatrix::from_columns(&null);
        let [g1, g2] = gauge_tangents(dec)?;
        let g = DMatrix::from_columns(&[g1, g2]).qr().q();
        let m = n.transpose() * g;
        if m.nrows() < 2 {
            0.0
        } else {
            m.singular_values().min()
        }
    };
    Ok(DofAnalysis { rank, nullity, singular_values, gauge_overlap })
}

/// Which bilinear pairing [`phase_probe`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairingConvention {
    /// `ψ u bar(ψ)`, the field pairing.
    Bar,
    /// `ψ u bar(star(ψ))`.
    BarStar,
}

/// Evaluate the pairing with `ψ` replaced by `e^{iθ} ψ`.
///
/// Under `Bar` the phase comes out squared, `e^{2iθ} F`: a duality rotation.
/// Under `BarStar` it cancels against its conjugate.
pub fn phase_probe(dec: &SpinorDecomposition, theta: f64, convention: PairingConvention) -> Bq {
    let psi = dec.spinor().scale(C64::from_polar(1.0, theta));
    let partner = match convention {
        PairingConvention::Bar => psi.bar(),
        PairingConvention::BarStar => psi.star().bar(),
    };
    psi * dec.axis * partner
}
