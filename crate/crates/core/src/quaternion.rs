//! Quaternions over the golden field.
//!
//! `w + x*i + y*j + z*k` with [`GoldenNum`] coefficients and the Hamilton
//! relations `i^2 = j^2 = k^2 = ijk = -1`. The reduced norm
//! `w^2 + x^2 + y^2 + z^2` is multiplicative and vanishes only at zero, so
//! this is a division algebra: every nonzero element has an exact inverse.

use crate::error::{Error, Result};
use crate::golden::GoldenNum;
use crate::words::GroupLike;
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: GoldenNum,
    pub x: GoldenNum,
    pub y: GoldenNum,
    pub z: GoldenNum,
}

impl Quaternion {
    pub fn new(w: GoldenNum, x: GoldenNum, y: GoldenNum, z: GoldenNum) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Quaternion::from_scalar(GoldenNum::zero())
    }

    pub fn one() -> Self {
        Quaternion::from_scalar(GoldenNum::one())
    }

    pub fn from_scalar(w: GoldenNum) -> Self {
        Quaternion::new(w, GoldenNum::zero(), GoldenNum::zero(), GoldenNum::zero())
    }

    pub fn basis_i() -> Self {
        Quaternion::new(
            GoldenNum::zero(),
            GoldenNum::one(),
            GoldenNum::zero(),
            GoldenNum::zero(),
        )
    }

    pub fn basis_j() -> Self {
        Quaternion::new(
            GoldenNum::zero(),
            GoldenNum::zero(),
            GoldenNum::one(),
            GoldenNum::zero(),
        )
    }

    pub fn basis_k() -> Self {
        Quaternion::new(
            GoldenNum::zero(),
            GoldenNum::zero(),
            GoldenNum::zero(),
            GoldenNum::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Reduced norm `w^2 + x^2 + y^2 + z^2`.
    pub fn norm(&self) -> GoldenNum {
        let ww = &self.w * &self.w;
        let xx = &self.x * &self.x;
        let yy = &self.y * &self.y;
        let zz = &self.z * &self.z;
        &(&ww + &xx) + &(&yy + &zz)
    }

    /// Componentwise scaling by a central scalar.
    pub fn scale(&self, c: &GoldenNum) -> Self {
        Quaternion::new(c * &self.w, c * &self.x, c * &self.y, c * &self.z)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&GoldenNum::from_int(n))
    }

    /// Exact inverse `conj / norm`; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("quaternion inverse of zero"));
        }
        let n = self.norm().inv()?;
        Ok(self.conj().scale(&n))
    }

    /// Integer power, using the inverse for negative exponents.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Quaternion::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})*i + ({})*j + ({})*k",
            self.w, self.x, self.y, self.z
        )
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion[{}]", self)
    }
}

impl Serialize for Quaternion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion::new(
            &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2)),
            &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2)),
            &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2)),
            &(&(a1 * d2) + &(b1 * c2)) - &(&(c1 * b2) - &(d1 * a2)),
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        &self + &rhs
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        &self - &rhs
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

/// Multiplicative context for evaluating words on invertible quaternions.
pub struct UnitQuaternions;

impl GroupLike for UnitQuaternions {
    type Elem = Quaternion;

    fn one(&self) -> Quaternion {
        Quaternion::one()
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a * b
    }

    fn inv(&self, a: &Quaternion) -> Quaternion {
        a.inv().expect("word evaluation requires invertible images")
    }
}
