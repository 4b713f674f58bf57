//! Two-bridge knot group presentations, Dehn fillings, and first homology.
//!
//! For an odd `p` and `0 < q < p` coprime to `p`, the knot group of the
//! two-bridge knot `K(p, q)` has the presentation
//! `< x, y | w x w^-1 y^-1 >` where `w = x^e1 y^e2 x^e3 ... y^e(p-1)` and
//! `e_i = (-1)^floor(i*q/p)`. The meridian is `x`; the longitude is
//! `x^(-2*sigma) w* w` with `sigma` the exponent sum of `w` and `w*` the
//! word `w` with the two generators swapped. Filling the `1/n` surgery
//! slope adds the relator `x (longitude)^n`.
//!
//! The sign vector satisfies `e_(p-i) = (-1)^(q-1) * e_i`: palindromic for
//! odd `q`, antipalindromic for even `q`.

use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, IntMat};
use crate::words::{Presentation, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

const X: usize = 0;
const Y: usize = 1;

/// The knots of crossing number 6 to 9 whose `1/n` fillings the A5
/// nonsurjection table covers, as `(name, p, q)`. Parameters repeat under
/// distinct names; the pair is the input, the name is a label.
pub const LOW_CROSSING_KNOTS: &[(&str, u64, u64)] = &[
    ("6_1", 9, 4),
    ("6_2", 11, 3),
    ("7_2", 11, 5),
    ("7_3", 13, 3),
    ("7_5", 17, 5),
    ("7_6", 19, 7),
    ("7_7", 21, 8),
    ("8_1", 13, 6),
    ("8_2", 17, 3),
    ("8_3", 17, 4),
    ("8_4", 19, 14),
    ("8_9", 13, 6),
    ("8_11", 17, 3),
    ("8_12", 17, 4),
    ("8_13", 19, 14),
    ("8_14", 31, 12),
    ("9_2", 15, 7),
    ("9_3", 19, 3),
    ("9_4", 21, 5),
    ("9_7", 29, 9),
    ("9_9", 31, 7),
    ("9_10", 33, 23),
    ("9_11", 33, 14),
    ("9_12", 35, 13),
    ("9_14", 37, 8),
    ("9_15", 39, 16),
    ("9_17", 39, 14),
    ("9_18", 41, 17),
    ("9_19", 41, 16),
    ("9_21", 43, 12),
    ("9_26", 47, 18),
    ("9_27", 49, 19),
];

fn validate(p: u64, q: u64) -> Result<()> {
    let reject = |reason: &str| Error::InvalidKnot {
        p,
        q,
        reason: reason.to_string(),
    };
    if p.is_multiple_of(2) {
        return Err(reject("p must be odd"));
    }
    if q == 0 || q >= p {
        return Err(reject("q must satisfy 0 < q < p"));
    }
    if p.gcd(&q) != 1 {
        return Err(reject("p and q must be coprime"));
    }
    Ok(())
}

/// The sign vector `e_i = (-1)^floor(i*q/p)` for `i = 1 .. p-1`.
pub fn epsilon_vector(p: u64, q: u64) -> Result<Vec<i8>> {
    validate(p, q)?;
    Ok((1..p)
        .map(|i| {
            let f = (i as u128 * q as u128) / p as u128;
            if f.is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .collect())
}

/// Exponent sum of `w`, i.e. the sum of the sign vector.
pub fn sigma(p: u64, q: u64) -> Result<i64> {
    Ok(epsilon_vector(p, q)?.iter().map(|&e| e as i64).sum())
}

/// Everything the constructions downstream need about one two-bridge knot.
#[derive(Clone, Debug)]
pub struct TwoBridgeData {
    pub p: u64,
    pub q: u64,
    pub e: Vec<i8>,
    pub sigma: i64,
    pub w: Word,
    pub w_star: Word,
    pub meridian: Word,
    pub longitude: Word,
}

#[derive(Clone, Debug)]
pub struct TwoBridgeKnot {
    pub presentation: Presentation,
    pub data: TwoBridgeData,
}

fn gen_names() -> Vec<String> {
    vec!["x".to_string(), "y".to_string()]
}

impl TwoBridgeKnot {
    /// Builds the knot group presentation `< x, y | w x w^-1 y^-1 >`.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let e = epsilon_vector(p, q)?;
        let sigma: i64 = e.iter().map(|&s| s as i64).sum();
        // letters alternate x, y, x, ... in w and y, x, y, ... in w*
        let w = Word::from_runs(
            2,
            e.iter()
                .enumerate()
                .map(|(idx, &s)| (if idx % 2 == 0 { X } else { Y }, s as i64)),
        );
        let w_star = Word::from_runs(
            2,
            e.iter()
                .enumerate()
                .map(|(idx, &s)| (if idx % 2 == 0 { Y } else { X }, s as i64)),
        );
        let meridian = Word::generator(2, X);
        let longitude = Word::gen_pow(2, X, -2 * sigma)
            .mul(&w_star)?
            .mul(&w)?;
        let relator = w.mul(&meridian)?.mul(&w.inv())?.mul(&Word::gen_pow(2, Y, -1))?;
        let presentation = Presentation::new(gen_names(), vec![relator])?;
        Ok(TwoBridgeKnot {
            presentation,
            data: TwoBridgeData {
                p,
                q,
                e,
                sigma,
                w,
                w_star,
                meridian,
                longitude,
            },
        })
    }

    /// Presentation of the `1/n` Dehn filling: the knot relator plus
    /// `meridian * longitude^n`.
    pub fn filled(&self, n: i64) -> Result<Presentation> {
        if n == 0 {
            return Err(Error::InvalidSurgery(
                "surgery coefficient n must be nonzero (1/0 is the unfilled manifold)".to_string(),
            ));
        }
        let filling = self.data.meridian.mul(&self.data.longitude.pow(n))?;
        let mut relators = self.presentation.relators().to_vec();
        relators.push(filling);
        Presentation::new(gen_names(), relators)
    }
}

/// One member of the surgered knot family: `K(40N + 27, 20N + 13)` with
/// `1/n` surgery, `n = (10k - 1)/7`.
#[derive(Clone, Debug)]
pub struct FamilyFilling {
    pub n_family: u64,
    pub k: u64,
    pub surgery: i64,
    pub knot: TwoBridgeKnot,
    pub filled: Presentation,
}

pub fn family_filling(n_family: u64, k: u64) -> Result<FamilyFilling> {
    let numerator = 10 * k as i64 - 1;
    if numerator % 7 != 0 {
        return Err(Error::InvalidFamily {
            n_family,
            k,
            numerator,
        });
    }
    let surgery = numerator / 7;
    let p = 40 * n_family + 27;
    let q = 20 * n_family + 13;
    let knot = TwoBridgeKnot::new(p, q)?;
    let filled = knot.filled(surgery)?;
    Ok(FamilyFilling {
        n_family,
        k,
        surgery,
        knot,
        filled,
    })
}

/// Exponent-sum matrix of the relators, one row per relator.
pub fn relator_matrix(p: &Presentation) -> IntMat {
    let mut m = IntMat::zeros(p.relators().len(), p.arity());
    for (i, r) in p.relators().iter().enumerate() {
        for (j, s) in r.exponent_sums().into_iter().enumerate() {
            m.set(i, j, s.into());
        }
    }
    m
}

/// Invariant factors of the abelianization: an empty list is the trivial
/// group, a factor `0` is a free Z summand, and factors bigger than one are
/// torsion in divisibility order.
pub fn first_homology(p: &Presentation) -> Vec<BigInt> {
    let gens = p.arity();
    let rels = p.relators().len();
    if rels == 0 {
        return vec![BigInt::zero(); gens];
    }
    let snf = smith_normal_form(&relator_matrix(p));
    let kmax = rels.min(gens);
    let mut factors: Vec<BigInt> = (0..kmax)
        .map(|i| snf.d.at(i, i).clone())
        .filter(|d| !d.is_one())
        .collect();
    for _ in 0..gens - kmax {
        factors.push(BigInt::zero());
    }
    factors
}
