//! Biquaternions: quaternions with complex coefficients.
//!
//! A biquaternion is `q = w + x e₁ + y e₂ + z e₃` with `w, x, y, z ∈ ℂ`. The
//! basis obeys `eᵢ eⱼ = −δᵢⱼ + εᵢⱼₖ eₖ`, and the complex unit `i` commutes with
//! everything. Three involutions are used throughout:
//!
//! * `bar`   negates the vector part (anti-automorphism),
//! * `star`  conjugates all four complex coefficients (automorphism),
//! * `tilde` is `star ∘ bar` (anti-automorphism).
//!
//! `q·bar(q)` is a complex scalar, the semi-norm `N(q)`. Elements with
//! `N(q) = 0` but `q ≠ 0` (null elements, e.g. `1 + i e₃`) are ordinary values
//! here; only [`Biquaternion::inverse`] refuses them.
//!
//! Ring operations are available for any [`Ring`] coefficient type, including
//! exact rationals. Transcendental operations require [`Real`].

mod matrix;
mod rotor;

use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Real, Ring};

pub use matrix::Mat2;
pub use rotor::{exp_along, Rotor};
pub(crate) use rotor::require_unit_axis;

/// Which involution to apply, see [`Biquaternion::involution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Involution {
    Bar,
    Star,
    Tilde,
}

/// Complexified quaternion `w + x e₁ + y e₂ + z e₃`.
///
/// Serializes as `{"w":[re,im],"x":[re,im],"y":[re,im],"z":[re,im]}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Biquaternion<T> {
    pub w: Complex<T>,
    pub x: Complex<T>,
    pub y: Complex<T>,
    pub z: Complex<T>,
}

impl<T> Biquaternion<T> {
    pub const fn new(w: Complex<T>, x: Complex<T>, y: Complex<T>, z: Complex<T>) -> Self {
        Self { w, x, y, z }
    }
}

impl<T: Ring> Biquaternion<T> {
    pub fn zero() -> Self {
        let z = Complex::zero();
        Self::new(z, z, z, z)
    }

    pub fn one() -> Self {
        Self::scalar(Complex::one())
    }

    /// The central complex unit `i` (not a quaternion unit).
    pub fn i() -> Self {
        Self::scalar(Complex::i())
    }

    pub fn scalar(w: Complex<T>) -> Self {
        let z = Complex::zero();
        Self::new(w, z, z, z)
    }

    pub fn real_scalar(w: T) -> Self {
        Self::scalar(Complex::new(w, T::zero()))
    }

    pub fn vector(x: Complex<T>, y: Complex<T>, z: Complex<T>) -> Self {
        Self::new(Complex::zero(), x, y, z)
    }

    pub fn real_vector(v: [T; 3]) -> Self {
        let c = |a: T| Complex::new(a, T::zero());
        Self::vector(c(v[0]), c(v[1]), c(v[2]))
    }

    /// `E + iB` for real 3-vectors `E` and `B`.
    pub fn from_fields(e: [T; 3], b: [T; 3]) -> Self {
        Self::vector(
            Complex::new(e[0], b[0]),
            Complex::new(e[1], b[1]),
            Complex::new(e[2], b[2]),
        )
    }

    /// Basis unit `e_k` for `k ∈ {1, 2, 3}`.
    ///
    /// # Panics
    /// For any other `k`.
    pub fn e(k: usize) -> Self {
        let mut v = [T::zero(); 3];
        v[k - 1] = T::one();
        Self::real_vector(v)
    }

    pub fn e1() -> Self {
        Self::e(1)
    }

    pub fn e2() -> Self {
        Self::e(2)
    }

    pub fn e3() -> Self {
        Self::e(3)
    }

    /// Coefficients in the order `[w, x, y, z]`.
    pub fn coeffs(&self) -> [Complex<T>; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_coeffs(c: [Complex<T>; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    /// The eight real components `[Re w, Im w, Re x, Im x, ...]`.
    pub fn to_reals(&self) -> [T; 8] {
        let c = self.coeffs();
        [c[0].re, c[0].im, c[1].re, c[1].im, c[2].re, c[2].im, c[3].re, c[3].im]
    }

    pub fn from_reals(r: [T; 8]) -> Self {
        Self::new(
            Complex::new(r[0], r[1]),
            Complex::new(r[2], r[3]),
            Complex::new(r[4], r[5]),
            Complex::new(r[6], r[7]),
        )
    }

    pub fn scalar_part(&self) -> Complex<T> {
        self.w
    }

    pub fn vector_part(&self) -> Self {
        Self::new(Complex::zero(), self.x, self.y, self.z)
    }

    pub fn vector_coeffs(&self) -> [Complex<T>; 3] {
        [self.x, self.y, self.z]
    }

    /// Real parts of the vector coefficients (the `E` of `E + iB`).
    pub fn real_vector_part(&self) -> [T; 3] {
        [self.x.re, self.y.re, self.z.re]
    }

    /// Imaginary parts of the vector coefficients (the `B` of `E + iB`).
    pub fn imag_vector_part(&self) -> [T; 3] {
        [self.x.im, self.y.im, self.z.im]
    }

    pub fn bar(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn star(&self) -> Self {
        Self::new(self.w.conj(), self.x.conj(), self.y.conj(), self.z.conj())
    }

    pub fn tilde(&self) -> Self {
        self.bar().star()
    }

    pub fn involution(&self, kind: Involution) -> Self {
        match kind {
            Involution::Bar => self.bar(),
            Involution::Star => self.star(),
            Involution::Tilde => self.tilde(),
        }
    }

    /// `N(q) = q·bar(q) = w² + x² + y² + z²` (no complex conjugation).
    pub fn semi_norm(&self) -> Complex<T> {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self::new(self.w * c, self.x * c, self.y * c, self.z * c)
    }

    pub fn scale_real(&self, r: T) -> Self {
        self.scale(Complex::new(r, T::zero()))
    }

    /// Scalar part vanishes, exactly for exact rings and relative to the
    /// vector magnitude otherwise.
    pub fn is_pure_vector(&self) -> bool {
        if T::EXACT {
            return self.w.is_zero();
        }
        let w = cmag(&self.w);
        let v = self.vector_coeffs().iter().map(|c| cmag(c)).fold(0.0, f64::max);
        w <= 1e-10 * (1.0 + v)
    }

    /// Complex Euclidean dot product `Σ aₖ bₖ` of two pure vectors.
    ///
    /// Symmetric and bilinear; nothing is conjugated, so null vectors such as
    /// `e₁ + i e₂` have `cdot(v, v) = 0`.
    pub fn cdot(&self, other: &Self) -> Result<Complex<T>> {
        if !self.is_pure_vector() || !other.is_pure_vector() {
            return Err(Error::Domain("cdot expects pure vectors".into()));
        }
        Ok(self.x * other.x + self.y * other.y + self.z * other.z)
    }

    /// `bar(q) / N(q)`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.semi_norm();
        let null = if T::EXACT {
            n.is_zero()
        } else {
            let scale: f64 = self.coeffs().iter().map(|c| cmag(c).powi(2)).sum();
            cmag(&n) <= 1e-12 * scale
        };
        if null {
            return Err(Error::NullElement);
        }
        Ok(self.bar() / n)
    }
}

fn cmag<T: Ring>(c: &Complex<T>) -> f64 {
    c.re.magnitude().hypot(c.im.magnitude())
}

impl<T: Real> Biquaternion<T> {
    /// Euclidean norm of the eight real components.
    pub fn norm(&self) -> T {
        self.coeffs()
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm_sqr())
            .sqrt()
    }

    pub fn distance(&self, other: &Self) -> T {
        (*self - *other).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs().iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn to_matrix(&self) -> Mat2<T> {
        Mat2::from_biquaternion(self)
    }
}

impl<T: Ring> Add for Biquaternion<T> {
    type Output = Self;

    fn add(self, r: Self) -> Self {
        Self::new(self.w + r.w, self.x + r.x, self.y + r.y, self.z + r.z)
    }
}

impl<T: Ring> Sub for Biquaternion<T> {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Self::new(self.w - r.w, self.x - r.x, self.y - r.y, self.z - r.z)
    }
}

impl<T: Ring> AddAssign for Biquaternion<T> {
    fn add_assign(&mut self, r: Self) {
        *self = *self + r;
    }
}

impl<T: Ring> SubAssign for Biquaternion<T> {
    fn sub_assign(&mut self, r: Self) {
        *self = *self - r;
    }
}

impl<T: Ring> Neg for Biquaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<T: Ring> Mul for Biquaternion<T> {
    type Output = Self;

    /// Hamilton product with complex coefficients.
    fn mul(self, r: Self) -> Self {
        let (a0, a1, a2, a3) = (self.w, self.x, self.y, self.z);
        let (b0, b1, b2, b3) = (r.w, r.x, r.y, r.z);
        Self::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl<T: Ring> Mul<Complex<T>> for Biquaternion<T> {
    type Output = Self;

    fn mul(self, c: Complex<T>) -> Self {
        self.scale(c)
    }
}

impl<T: Ring> Div<Complex<T>> for Biquaternion<T> {
    type Output = Self;

    fn div(self, c: Complex<T>) -> Self {
        Self::new(self.w / c, self.x / c, self.y / c, self.z / c)
    }
}

impl<T: Ring> core::iter::Sum for Biquaternion<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

/// Principal complex square root.
///
/// The result has non-negative real part; on the boundary `Re = 0` the root
/// with non-negative imaginary part is returned, so `sqrt_principal(−1) = i`
/// regardless of the sign of a zero imaginary part.
pub fn sqrt_principal<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.im.is_zero() {
        return if z.re >= T::zero() {
            Complex::new(z.re.sqrt(), T::zero())
        } else {
            Complex::new(T::zero(), (-z.re).sqrt())
        };
    }
    let r = z.norm();
    let half = T::one() / T::two();
    // Take the root of the larger component first to avoid cancellation.
    let (re, im) = if z.re >= T::zero() {
        let re = ((r + z.re) * half).sqrt();
        (re, z.im / (T::two() * re))
    } else {
        let im = ((r - z.re) * half).sqrt();
        let im = if z.im < T::zero() { -im } else { im };
        (z.im / (T::two() * im), im)
    };
    let root = Complex::new(re, im);
    if root.re < T::zero() || (root.re.is_zero() && root.im < T::zero()) {
        -root
    } else {
        root
    }
}
