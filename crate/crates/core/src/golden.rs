//! Exact arithmetic in the golden field.
//!
//! A [`GoldenNum`] is `a + b*phi` with rational `a`, `b`, where `phi` is the
//! golden ratio, subject to `phi^2 = phi + 1`. All operations are exact: the
//! coefficients are arbitrary-precision rationals kept in lowest terms, and
//! equality is coefficient equality. Because `phi` is irrational, two numbers
//! are equal as reals iff their coefficient pairs agree, so this is also a
//! decision procedure for the real embedding.

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNum {
    a: BigRational,
    b: BigRational,
}

impl GoldenNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenNum { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        GoldenNum::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den`, panicking on a zero denominator (construction helper).
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GoldenNum::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    /// `(an + bn*phi) / den`.
    pub fn from_parts(an: i64, bn: i64, den: i64) -> Self {
        GoldenNum::new(
            BigRational::new(an.into(), den.into()),
            BigRational::new(bn.into(), den.into()),
        )
    }

    pub fn zero() -> Self {
        GoldenNum::from_int(0)
    }

    pub fn one() -> Self {
        GoldenNum::from_int(1)
    }

    pub fn phi() -> Self {
        GoldenNum::new(BigRational::zero(), BigRational::one())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn phi_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Image under the nontrivial field automorphism `phi -> 1 - phi`
    /// (equivalently `sqrt5 -> -sqrt5`): `a + b*phi -> (a + b) - b*phi`.
    pub fn galois_conj(&self) -> Self {
        GoldenNum::new(&self.a + &self.b, -self.b.clone())
    }

    /// Field norm `x * galois_conj(x) = a^2 + ab - b^2`, a rational.
    pub fn field_norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact multiplicative inverse via the Galois conjugate.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("golden-field inverse of zero"));
        }
        let n = self.field_norm();
        let conj = self.galois_conj();
        Ok(GoldenNum::new(conj.a / &n, conj.b / &n))
    }

    /// Sign of the number in the real embedding `phi = (1 + sqrt5)/2`,
    /// decided exactly: returns -1, 0 or 1.
    pub fn sign_real(&self) -> i32 {
        // a + b*phi = (u + v*sqrt5)/2 with u = 2a + b, v = b.
        let u: BigRational = &self.a * BigRational::from_integer(2.into()) + &self.b;
        let v = &self.b;
        let su = rational_sign(&u);
        let sv = rational_sign(v);
        if sv == 0 {
            return su;
        }
        if su == 0 || su == sv {
            return sv;
        }
        // Opposite signs: compare u^2 with 5 v^2; sqrt5 is irrational so
        // equality cannot occur for v != 0.
        let u2 = &u * &u;
        let v2 = v * v * BigRational::from_integer(5.into());
        if u2 > v2 {
            su
        } else {
            sv
        }
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*phi", self.a, self.b)
    }
}

impl fmt::Debug for GoldenNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNum({})", self)
    }
}

impl Serialize for GoldenNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: &GoldenNum) -> GoldenNum {
        GoldenNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: &GoldenNum) -> GoldenNum {
        // (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1.
        let bb = &self.b * &rhs.b;
        GoldenNum::new(
            &self.a * &rhs.a + &bb,
            &self.a * &rhs.b + &self.b * &rhs.a + &bb,
        )
    }
}

impl Neg for &GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        GoldenNum::new(-self.a.clone(), -self.b.clone())
    }
}

impl Add for GoldenNum {
    type Output = GoldenNum;
    fn add(self, rhs: GoldenNum) -> GoldenNum {
        &self + &rhs
    }
}

impl Sub for GoldenNum {
    type Output = GoldenNum;
    fn sub(self, rhs: GoldenNum) -> GoldenNum {
        &self - &rhs
    }
}

impl Mul for GoldenNum {
    type Output = GoldenNum;
    fn mul(self, rhs: GoldenNum) -> GoldenNum {
        &self * &rhs
    }
}

impl Neg for GoldenNum {
    type Output = GoldenNum;
    fn neg(self) -> GoldenNum {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GoldenNum {
        GoldenNum::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = GoldenNum::phi();
        assert_eq!(&phi * &phi, g(1, 1));
    }

    #[test]
    fn product_lands_back_in_the_field() {
        // (1 + 2 phi)(2 - phi) = 2 + 3 phi - 2 phi^2 = phi.
        assert_eq!(&g(1, 2) * &g(2, -1), GoldenNum::phi());
    }

    #[test]
    fn inverse_of_one_plus_phi() {
        // 1 + phi = phi^2, so its inverse is phi^{-2} = (phi - 1)^2 = 2 - phi.
        assert_eq!(g(1, 1).inv().unwrap(), g(2, -1));
        assert_eq!(GoldenNum::phi().inv().unwrap(), g(-1, 1));
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert!(matches!(
            GoldenNum::zero().inv(),
            Err(Error::DivisionByZero(_))
        ));
    }

    #[test]
    fn galois_conjugation_fixes_rationals_and_flips_phi() {
        assert_eq!(g(3, 0).galois_conj(), g(3, 0));
        assert_eq!(GoldenNum::phi().galois_conj(), g(1, -1));
    }

    #[test]
    fn norm_of_phi_is_minus_one() {
        assert_eq!(
            GoldenNum::phi().field_norm(),
            BigRational::from_integer((-1).into())
        );
    }

    #[test]
    fn signs_in_the_real_embedding() {
        // phi = 1.618..., so phi - 1 > 0 > phi - 2 and 2 - phi > 0.
        assert_eq!(g(-1, 1).sign_real(), 1);
        assert_eq!(g(-2, 1).sign_real(), -1);
        assert_eq!(g(2, -1).sign_real(), 1);
        assert_eq!(g(1, -1).sign_real(), -1);
        assert_eq!(GoldenNum::zero().sign_real(), 0);
        assert_eq!(g(-5, 3).sign_real(), -1); // 3 phi = 4.854 < 5
        assert_eq!(g(-4, 3).sign_real(), 1);
        assert_eq!(g(1, -2).sign_real(), -1); // 2a + b = 0, sign rides on b
        assert_eq!(g(-1, 2).sign_real(), 1);
    }

    #[test]
    fn display_keeps_reduced_fractions() {
        let x = GoldenNum::new(
            BigRational::new(2.into(), 4.into()),
            BigRational::new((-3).into(), 6.into()),
        );
        assert_eq!(x.to_string(), "1/2 + -1/2*phi");
        assert_eq!(GoldenNum::zero().to_string(), "0 + 0*phi");
    }

    fn arb_golden() -> impl Strategy<Value = GoldenNum> {
        (-20i64..=20, -20i64..=20, 1i64..=9, 1i64..=9).prop_map(|(an, bn, ad, bd)| {
            GoldenNum::new(
                BigRational::new(an.into(), ad.into()),
                BigRational::new(bn.into(), bd.into()),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_is_commutative_and_associative(x in arb_golden(), y in arb_golden(), z in arb_golden()) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn mul_distributes_over_add(x in arb_golden(), y in arb_golden(), z in arb_golden()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn inverse_really_inverts(x in arb_golden()) {
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), GoldenNum::one());
            }
        }

        #[test]
        fn galois_conjugation_is_a_ring_map(x in arb_golden(), y in arb_golden()) {
            prop_assert_eq!((&x * &y).galois_conj(), &x.galois_conj() * &y.galois_conj());
            prop_assert_eq!((&x + &y).galois_conj(), &x.galois_conj() + &y.galois_conj());
        }

        #[test]
        fn sign_is_multiplicative(x in arb_golden(), y in arb_golden()) {
            prop_assert_eq!((&x * &y).sign_real(), x.sign_real() * y.sign_real());
        }

        #[test]
        fn norm_matches_conjugate_product(x in arb_golden()) {
            let p = &x * &x.galois_conj();
            prop_assert_eq!(p.phi_part(), &BigRational::zero());
            prop_assert_eq!(p.rational_part(), &x.field_norm());
        }
    }
}
