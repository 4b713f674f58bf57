//! The affine extension: translations of quaternion space by a finite
//! quaternion group, and its two-parameter symbolic form.
//!
//! A concrete element is a pair `(vec, grp)` acting as `p -> vec + grp * p`,
//! so products compose as `(v, g)(v', g') = (v + g v', g g')` and the
//! inverse is `(-g^-1 v, g^-1)`. Pairs `(v, 1)` are translations and satisfy
//! `(v, 1)^n = (n v, 1)`, which is what makes nonzero translation
//! coefficients certify infinite order.
//!
//! The symbolic form tracks a translation vector `c_u * u + c_v * v` with
//! unknown base vectors `u`, `v` and quaternion coefficients acting on the
//! left. Evaluating a word on symbolic generator lifts `x -> (u, f(x))`,
//! `y -> (v, f(y))` yields the exact coefficient pair of the lifted word for
//! every choice of `u`, `v` at once; substituting concrete vectors recovers
//! the concrete evaluation.

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::words::{eval_word, GroupLike, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineElement {
    pub vec: Quaternion,
    pub grp: Quaternion,
}

impl AffineElement {
    pub fn new(vec: Quaternion, grp: Quaternion) -> Self {
        AffineElement { vec, grp }
    }

    pub fn identity() -> Self {
        AffineElement::new(Quaternion::zero(), Quaternion::one())
    }

    pub fn translation(vec: Quaternion) -> Self {
        AffineElement::new(vec, Quaternion::one())
    }

    pub fn is_identity(&self) -> bool {
        self.vec.is_zero() && self.grp == Quaternion::one()
    }

    /// A translation is `(v, 1)` with `v != 0`.
    pub fn is_translation(&self) -> bool {
        self.grp == Quaternion::one() && !self.vec.is_zero()
    }

    pub fn mul(&self, rhs: &AffineElement) -> AffineElement {
        AffineElement::new(&self.vec + &(&self.grp * &rhs.vec), &self.grp * &rhs.grp)
    }

    pub fn inv(&self) -> Result<AffineElement> {
        let ginv = self.grp.inv()?;
        Ok(AffineElement::new(-&(&ginv * &self.vec), ginv))
    }

    pub fn pow(&self, n: i64) -> Result<AffineElement> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = AffineElement::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

/// Word-evaluation context for affine elements with invertible group parts.
pub struct AffineMaps;

impl GroupLike for AffineMaps {
    type Elem = AffineElement;

    fn one(&self) -> AffineElement {
        AffineElement::identity()
    }

    fn mul(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        a.mul(b)
    }

    fn inv(&self, a: &AffineElement) -> AffineElement {
        a.inv().expect("affine inverse requires an invertible group part")
    }
}

/// Translation part `coeff_u * u + coeff_v * v` with symbolic `u`, `v`,
/// paired with a concrete group part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolicAffine {
    pub coeff_u: Quaternion,
    pub coeff_v: Quaternion,
    pub grp: Quaternion,
}

impl SymbolicAffine {
    pub fn new(coeff_u: Quaternion, coeff_v: Quaternion, grp: Quaternion) -> Self {
        SymbolicAffine {
            coeff_u,
            coeff_v,
            grp,
        }
    }

    pub fn identity() -> Self {
        SymbolicAffine::new(Quaternion::zero(), Quaternion::zero(), Quaternion::one())
    }

    /// The lift of a generator: translation by one base vector, group part
    /// as given.
    pub fn generator_lift(which: usize, grp: Quaternion) -> Self {
        match which {
            0 => SymbolicAffine::new(Quaternion::one(), Quaternion::zero(), grp),
            1 => SymbolicAffine::new(Quaternion::zero(), Quaternion::one(), grp),
            other => panic!("two base vectors only, got index {}", other),
        }
    }

    pub fn has_zero_vector(&self) -> bool {
        self.coeff_u.is_zero() && self.coeff_v.is_zero()
    }

    pub fn mul(&self, rhs: &SymbolicAffine) -> SymbolicAffine {
        SymbolicAffine::new(
            &self.coeff_u + &(&self.grp * &rhs.coeff_u),
            &self.coeff_v + &(&self.grp * &rhs.coeff_v),
            &self.grp * &rhs.grp,
        )
    }

    pub fn inv(&self) -> Result<SymbolicAffine> {
        let ginv = self.grp.inv()?;
        Ok(SymbolicAffine::new(
            -&(&ginv * &self.coeff_u),
            -&(&ginv * &self.coeff_v),
            ginv,
        ))
    }

    pub fn pow(&self, n: i64) -> Result<SymbolicAffine> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = SymbolicAffine::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Substitutes concrete base vectors.
    pub fn specialize(&self, u: &Quaternion, v: &Quaternion) -> AffineElement {
        AffineElement::new(
            &(&self.coeff_u * u) + &(&self.coeff_v * v),
            self.grp.clone(),
        )
    }
}

pub struct SymbolicMaps;

impl GroupLike for SymbolicMaps {
    type Elem = SymbolicAffine;

    fn one(&self) -> SymbolicAffine {
        SymbolicAffine::identity()
    }

    fn mul(&self, a: &SymbolicAffine, b: &SymbolicAffine) -> SymbolicAffine {
        a.mul(b)
    }

    fn inv(&self, a: &SymbolicAffine) -> SymbolicAffine {
        a.inv().expect("symbolic inverse requires an invertible group part")
    }
}

/// Evaluates a two-generator word on the symbolic lifts `x -> (u, x_img)`,
/// `y -> (v, y_img)`.
pub fn symbolic_eval(w: &Word, x_img: &Quaternion, y_img: &Quaternion) -> Result<SymbolicAffine> {
    for (name, img) in [("x", x_img), ("y", y_img)] {
        if img.is_zero() {
            return Err(Error::InvalidInput(format!(
                "image of {} must be invertible",
                name
            )));
        }
    }
    let images = [
        SymbolicAffine::generator_lift(0, x_img.clone()),
        SymbolicAffine::generator_lift(1, y_img.clone()),
    ];
    eval_word(w, &images, &SymbolicMaps)
}

/// Per-relator lift data: the symbolic coefficients of the relator's affine
/// evaluation. The group part must already die in the finite group.
#[derive(Clone, Debug)]
pub struct RelatorLift {
    pub relator: Word,
    pub coeff_u: Quaternion,
    pub coeff_v: Quaternion,
}

impl RelatorLift {
    pub fn vanishes(&self) -> bool {
        self.coeff_u.is_zero() && self.coeff_v.is_zero()
    }
}

/// Evaluates every relator symbolically. The homomorphism lifts to the
/// affine extension (for base vectors `u`, `v`) iff every coefficient pair
/// vanishes; a relator whose group part is not 1 is a precondition failure,
/// not a lift failure.
pub fn relators_lift(
    relators: &[Word],
    gen_names: &[String],
    x_img: &Quaternion,
    y_img: &Quaternion,
) -> Result<Vec<RelatorLift>> {
    let mut out = Vec::with_capacity(relators.len());
    for r in relators {
        let sym = symbolic_eval(r, x_img, y_img)?;
        if sym.grp != Quaternion::one() {
            return Err(Error::LiftPrecondition {
                relator: r.render(gen_names),
            });
        }
        out.push(RelatorLift {
            relator: r.clone(),
            coeff_u: sym.coeff_u,
            coeff_v: sym.coeff_v,
        });
    }
    Ok(out)
}

/// Symbolic coefficients of the commutator `[a, b]` under the same lifts.
/// Errors unless the group part is the identity (a pure translation for
/// every specialization).
pub struct CommutatorTranslation {
    pub word: Word,
    pub coeff_u: Quaternion,
    pub coeff_v: Quaternion,
}

impl CommutatorTranslation {
    pub fn is_nonzero(&self) -> bool {
        !self.coeff_u.is_zero() || !self.coeff_v.is_zero()
    }
}

pub fn commutator_translation(
    x_img: &Quaternion,
    y_img: &Quaternion,
    a: &Word,
    b: &Word,
) -> Result<CommutatorTranslation> {
    let word = Word::commutator(a, b)?;
    let sym = symbolic_eval(&word, x_img, y_img)?;
    if sym.grp != Quaternion::one() {
        return Err(Error::NotATranslation(sym.grp.to_string()));
    }
    Ok(CommutatorTranslation {
        word,
        coeff_u: sym.coeff_u,
        coeff_v: sym.coeff_v,
    })
}
