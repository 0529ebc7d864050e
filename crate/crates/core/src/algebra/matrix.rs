//! The isomorphism between biquaternions and 2×2 complex matrices.
//!
//! `eₖ ↦ −i σₖ` with the Pauli matrices `σₖ`, so that `N(q) = det(to_matrix(q))`.

use core::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use super::Biquaternion;
use crate::scalar::{Real, Ring};

/// Row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<T> {
    pub m: [[Complex<T>; 2]; 2],
}

impl<T: Ring> Mat2<T> {
    pub fn identity() -> Self {
        let (o, z) = (Complex::one(), Complex::zero());
        Self { m: [[o, z], [z, o]] }
    }

    pub fn det(&self) -> Complex<T> {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn from_biquaternion(q: &Biquaternion<T>) -> Self {
        let i = Complex::<T>::i();
        Self {
            m: [
                [q.w - i * q.z, -i * q.x - q.y],
                [-i * q.x + q.y, q.w + i * q.z],
            ],
        }
    }

    /// Inverse of [`Mat2::from_biquaternion`]; every matrix has a preimage.
    pub fn to_biquaternion(&self) -> Biquaternion<T> {
        let i = Complex::<T>::i();
        let two = T::one() + T::one();
        let m = &self.m;
        Biquaternion::new(
            (m[0][0] + m[1][1]) / two,
            i * (m[0][1] + m[1][0]) / two,
            (m[1][0] - m[0][1]) / two,
            -i * (m[1][1] - m[0][0]) / two,
        )
    }
}

impl<T: Real> Mat2<T> {
    /// Largest entry-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.m[r][c] - other.m[r][c]).norm());
            }
        }
        worst
    }
}

impl<T: Ring> Mul for Mat2<T> {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let a = &self.m;
        let b = &o.m;
        let mut out = [[Complex::zero(); 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Self { m: out }
    }
}

impl<T: Ring> Add for Mat2<T> {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        let mut m = self.m;
        for r in 0..2 {
            for c in 0..2 {
                m[r][c] = m[r][c] + o.m[r][c];
            }
        }
        Self { m }
    }
}

impl<T: Ring> Sub for Mat2<T> {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        let mut m = self.m;
        for r in 0..2 {
            for c in 0..2 {
                m[r][c] = m[r][c] - o.m[r][c];
            }
        }
        Self { m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Bq = Biquaternion<f64>;

    #[test]
    fn identity_maps_to_identity() {
        assert_eq!(Bq::one().to_matrix(), Mat2::identity());
    }

    #[test]
    fn basis_images_are_minus_i_pauli() {
        let i = Complex::new(0.0, 1.0);
        let z = Complex::new(0.0, 0.0);
        let o = Complex::new(1.0, 0.0);
        let sigma = [
            [[z, o], [o, z]],
            [[z, -i], [i, z]],
            [[o, z], [z, -o]],
        ];
        for (k, s) in sigma.iter().enumerate() {
            let expected = Mat2 {
                m: [[-i * s[0][0], -i * s[0][1]], [-i * s[1][0], -i * s[1][1]]],
            };
            assert_eq!(Bq::e(k + 1).to_matrix(), expected);
        }
    }

    #[test]
    fn product_of_images() {
        assert_eq!(Bq::e1().to_matrix() * Bq::e2().to_matrix(), Bq::e3().to_matrix());
    }

    #[test]
    fn round_trip() {
        let q = Bq::new(
            Complex::new(0.3, -1.0),
            Complex::new(2.0, 0.5),
            Complex::new(-0.7, 0.1),
            Complex::new(0.0, 4.0),
        );
        let back = q.to_matrix().to_biquaternion();
        assert!(back.distance(&q) < 1e-15);
        assert!((q.to_matrix().det() - q.semi_norm()).norm() < 1e-13);
    }
}
