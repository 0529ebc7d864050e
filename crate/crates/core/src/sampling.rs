//! Random inputs for the property checks.
//!
//! Every sampler draws from a caller-supplied generator so that a single seed
//! fixes an entire run.

use std::f64::consts::PI;

use rand::Rng;

use crate::dirac::Momentum;
use crate::fields::Event;
use crate::spinor::{decompose, SpinorDecomposition};
use crate::{exp_along, Bq, Rotor64, C64};

/// Spatial radii of sampled events; keeps clear of the Coulomb singularity.
pub const EVENT_SHELL: (f64, f64) = (0.5, 2.0);
/// Times of sampled events.
pub const EVENT_TIME: (f64, f64) = (-2.0, 2.0);

pub fn complex<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> C64 {
    C64::new(rng.random_range(-scale..=scale), rng.random_range(-scale..=scale))
}

/// Coefficients uniform in `[−scale, scale]`.
pub fn biquaternion<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Bq {
    Bq::new(complex(rng, scale), complex(rng, scale), complex(rng, scale), complex(rng, scale))
}

pub fn complex_vector<R: Rng + ?Sized>(rng: &mut R, scale: f64) -> Bq {
    Bq::vector(complex(rng, scale), complex(rng, scale), complex(rng, scale))
}

/// Uniform time, spatial point uniform in direction with radius in [`EVENT_SHELL`].
pub fn event<R: Rng + ?Sized>(rng: &mut R) -> Event {
    let t = rng.random_range(EVENT_TIME.0..=EVENT_TIME.1);
    loop {
        let x: [f64; 3] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        let n = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        if !(0.05..=1.0).contains(&n) {
            continue;
        }
        let r = rng.random_range(EVENT_SHELL.0..=EVENT_SHELL.1);
        return Event::new(t, r * x[0] / n, r * x[1] / n, r * x[2] / n);
    }
}

pub fn events<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Event> {
    (0..n).map(|_| event(rng)).collect()
}

/// Product of `exp(c eₖ)` with `Re c` over a full turn and `|Im c| ≤ 1`,
/// so boosts as well as rotations are covered.
pub fn rotor<R: Rng + ?Sized>(rng: &mut R) -> Rotor64 {
    let mut q = Bq::one();
    for k in 1..=3 {
        let c = C64::new(rng.random_range(-PI..PI), rng.random_range(-1.0..=1.0));
        q = q * exp_along(&Bq::e(k), c).expect("basis vectors are unit axes");
    }
    Rotor64::normalize(q).expect("products of exponentials are unit")
}

/// Pure-vector field with `|F·F| ≥ 0.05 |F|²` that decomposes along `u`
/// at least `1e-2` away from the degenerate direction.
pub fn field<R: Rng + ?Sized>(rng: &mut R, u: &Bq) -> Bq {
    loop {
        let f = complex_vector(rng, 1.0);
        let ff = f.cdot(&f).expect("pure vector").norm();
        if ff < 0.05 * f.norm().powi(2) {
            continue;
        }
        let rho = ff.sqrt();
        let beta = f.cdot(&f).expect("pure vector").arg() / 2.0;
        let dir = f / C64::from_polar(rho, beta);
        if (C64::new(1.0, 0.0) + dir.cdot(u).expect("pure vector")).norm() < 1e-2 {
            continue;
        }
        return f;
    }
}

/// Decomposition with `ρ ∈ [0.2, 3]`, `β ∈ (−π, π)` and a random rotor.
pub fn decomposition<R: Rng + ?Sized>(rng: &mut R, u: &Bq) -> SpinorDecomposition {
    loop {
        let rho = rng.random_range(0.2..=3.0);
        let beta = rng.random_range(-PI..PI);
        if let Ok(d) = SpinorDecomposition::new(rho, beta, rotor(rng), *u) {
            return d;
        }
    }
}

/// Like [`decomposition`], but obtained from [`field`] so that it is canonical.
pub fn decomposed_field<R: Rng + ?Sized>(rng: &mut R, u: &Bq) -> SpinorDecomposition {
    loop {
        if let Ok(d) = decompose(&field(rng, u), u) {
            return d;
        }
    }
}

/// Positive-energy momentum with `|pₖ| ≤ 2` on the shell of `mass`.
pub fn on_shell<R: Rng + ?Sized>(rng: &mut R, mass: f64) -> Momentum {
    let p = std::array::from_fn(|_| rng.random_range(-2.0..=2.0));
    Momentum::on_shell_positive(p, mass)
}

/// Momentum whose energy misses the shell by `0.1` to `1` in either direction.
pub fn off_shell<R: Rng + ?Sized>(rng: &mut R, mass: f64) -> Momentum {
    let mut m = on_shell(rng, mass);
    let shift = rng.random_range(0.1..=1.0);
    m.energy += if rng.random_bool(0.5) { shift } else { -shift };
    m
}
