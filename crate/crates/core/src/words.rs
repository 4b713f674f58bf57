//! Words in a free group, presentations, and word evaluation.
//!
//! A [`Word`] is stored freely reduced as runs `(generator, exponent)` with
//! nonzero exponents and no two adjacent runs on the same generator. All
//! constructors and operations preserve that invariant, so equality of words
//! is equality in the free group.
//!
//! Evaluation is generic over [`GroupLike`], a minimal multiplicative
//! context (identity, product, inverse). The same evaluation path serves
//! finite groups given by index tables, unit quaternions, and the affine and
//! symbolic-affine algebras.

use crate::error::{Error, Result};
use std::fmt;

/// Identity, product and inverse over some element type. Implementors are
/// lightweight context values, not the elements themselves, so that table
/// groups can carry their multiplication data.
pub trait GroupLike {
    type Elem: Clone;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// `base^e` by binary powering; negative exponents go through `inv`.
pub fn pow_elem<G: GroupLike>(ctx: &G, base: &G::Elem, e: i64) -> G::Elem {
    let b = if e < 0 { ctx.inv(base) } else { base.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = ctx.one();
    let mut sq = b;
    while n > 0 {
        if n & 1 == 1 {
            acc = ctx.mul(&acc, &sq);
        }
        n >>= 1;
        if n > 0 {
            sq = ctx.mul(&sq, &sq);
        }
    }
    acc
}

/// A freely reduced word over `arity` generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    arity: usize,
    runs: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity(arity: usize) -> Self {
        Word { arity, runs: Vec::new() }
    }

    pub fn generator(arity: usize, g: usize) -> Self {
        Word::gen_pow(arity, g, 1)
    }

    pub fn gen_pow(arity: usize, g: usize, e: i64) -> Self {
        assert!(g < arity, "generator index {} out of range {}", g, arity);
        let mut w = Word::identity(arity);
        w.push_run(g, e);
        w
    }

    /// Builds a word from a run sequence, freely reducing as it goes.
    pub fn from_runs<I>(arity: usize, runs: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut w = Word::identity(arity);
        for (g, e) in runs {
            assert!(g < arity, "generator index {} out of range {}", g, arity);
            w.push_run(g, e);
        }
        w
    }

    fn push_run(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.runs.pop();
                }
                return;
            }
        }
        self.runs.push((g, e));
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Word length counted in letters (sum of |exponent|).
    pub fn letter_len(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn mul(&self, rhs: &Word) -> Result<Word> {
        if self.arity != rhs.arity {
            return Err(Error::AlphabetMismatch(self.arity, rhs.arity));
        }
        let mut out = self.clone();
        for &(g, e) in &rhs.runs {
            out.push_run(g, e);
        }
        Ok(out)
    }

    pub fn inv(&self) -> Word {
        Word {
            arity: self.arity,
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut out = Word::identity(self.arity);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base).expect("same alphabet");
        }
        out
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Result<Word> {
        a.mul(b)?.mul(&a.inv())?.mul(&b.inv())
    }

    /// Exponent sum per generator (the image in the free abelianization).
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.arity];
        for &(g, e) in &self.runs {
            sums[g] += e;
        }
        sums
    }

    /// Renders as space-separated `gen` / `gen^e` tokens; the empty word
    /// renders as `1`.
    pub fn render(&self, gens: &[String]) -> String {
        assert_eq!(gens.len(), self.arity, "generator name count mismatch");
        if self.runs.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(self.runs.len());
        for &(g, e) in &self.runs {
            if e == 1 {
                parts.push(gens[g].clone());
            } else {
                parts.push(format!("{}^{}", gens[g], e));
            }
        }
        parts.join(" ")
    }

    /// Parses a word in the `render` syntax over the given generator names.
    /// Errors carry the byte offset of the offending token.
    pub fn parse(text: &str, gens: &[String]) -> Result<Word> {
        let mut w = Word::identity(gens.len());
        let mut pos = 0;
        let bytes = text.as_bytes();
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let start = pos;
            while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let token = &text[start..pos];
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.find('^') {
                None => (token, 1i64),
                Some(caret) => {
                    let name = &token[..caret];
                    let exp_text = &token[caret + 1..];
                    let exp = exp_text.parse::<i64>().map_err(|_| Error::Parse {
                        pos: start + caret + 1,
                        msg: format!("malformed exponent {:?}", exp_text),
                    })?;
                    if exp == 0 {
                        return Err(Error::Parse {
                            pos: start + caret + 1,
                            msg: "zero exponent".to_string(),
                        });
                    }
                    (name, exp)
                }
            };
            let g = gens
                .iter()
                .position(|cand| cand == name)
                .ok_or_else(|| Error::Parse {
                    pos: start,
                    msg: format!("unknown generator {:?}", name),
                })?;
            w.push_run(g, exp);
        }
        Ok(w)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.runs)
    }
}

/// Evaluates a word on a slice of generator images, one image per generator.
pub fn eval_word<G: GroupLike>(w: &Word, images: &[G::Elem], ctx: &G) -> Result<G::Elem> {
    if images.len() != w.arity() {
        return Err(Error::ImageCount {
            expected: w.arity(),
            got: images.len(),
        });
    }
    let mut acc = ctx.one();
    for &(g, e) in w.runs() {
        let factor = pow_elem(ctx, &images[g], e);
        acc = ctx.mul(&acc, &factor);
    }
    Ok(acc)
}

/// A finite presentation: named generators plus relator words.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidPresentation("no generators".to_string()));
        }
        for (i, name) in gens.iter().enumerate() {
            if name.is_empty()
                || name == "1"
                || name.contains(|c: char| c.is_whitespace() || c == ',' || c == ';' || c == '^')
            {
                return Err(Error::InvalidPresentation(format!(
                    "bad generator name {:?}",
                    name
                )));
            }
            if gens[..i].contains(name) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate generator {:?}",
                    name
                )));
            }
        }
        for r in &relators {
            if r.arity() != gens.len() {
                return Err(Error::AlphabetMismatch(gens.len(), r.arity()));
            }
        }
        Ok(Presentation { gens, relators })
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn arity(&self) -> usize {
        self.gens.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Renders in the `gens: x, y ; rels: w1 , w2` syntax.
    pub fn render(&self) -> String {
        let rels: Vec<String> = self.relators.iter().map(|r| r.render(&self.gens)).collect();
        format!("gens: {} ; rels: {}", self.gens.join(", "), rels.join(" , "))
    }

    /// Parses the `render` syntax.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let gens_at = text
            .find("gens:")
            .ok_or_else(|| err(0, "missing 'gens:' section"))?;
        let semi = text[gens_at..]
            .find(';')
            .map(|i| gens_at + i)
            .ok_or_else(|| err(gens_at, "missing ';' after generator list"))?;
        let gens: Vec<String> = text[gens_at + 5..semi]
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        let rest = &text[semi + 1..];
        let rels_at = rest
            .find("rels:")
            .map(|i| semi + 1 + i)
            .ok_or_else(|| err(semi, "missing 'rels:' section"))?;
        let rel_text = &text[rels_at + 5..];
        let mut relators = Vec::new();
        for chunk in rel_text.split(',') {
            if chunk.trim().is_empty() {
                continue;
            }
            relators.push(Word::parse(chunk, &gens)?);
        }
        Presentation::new(gens, relators)
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation({})", self.render())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    fn x() -> Word {
        Word::generator(2, 0)
    }

    fn y() -> Word {
        Word::generator(2, 1)
    }

    #[test]
    fn free_reduction_cancels_across_runs() {
        // x y y^-1 x -> x^2
        let w = Word::from_runs(2, [(0, 1), (1, 1), (1, -1), (0, 1)]);
        assert_eq!(w, Word::gen_pow(2, 0, 2));
        // x y x^-1 x y^-1 x^-1 -> empty
        let v = Word::from_runs(2, [(0, 1), (1, 1), (0, -1), (0, 1), (1, -1), (0, -1)]);
        assert!(v.is_identity());
    }

    #[test]
    fn product_with_inverse_is_identity() {
        let w = Word::from_runs(2, [(0, 3), (1, -2), (0, 1), (1, 5)]);
        assert!(w.mul(&w.inv()).unwrap().is_identity());
        assert!(w.inv().mul(&w).unwrap().is_identity());
    }

    #[test]
    fn commutator_of_a_generator_with_itself_dies() {
        let c = Word::commutator(&x(), &Word::gen_pow(2, 0, 5)).unwrap();
        assert!(c.is_identity());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = Word::generator(2, 0);
        let b = Word::generator(3, 0);
        assert!(matches!(a.mul(&b), Err(Error::AlphabetMismatch(2, 3))));
    }

    #[test]
    fn render_and_parse_round_trip() {
        let w = Word::from_runs(2, [(0, 2), (1, -1), (0, 1)]);
        let text = w.render(&names());
        assert_eq!(text, "x^2 y^-1 x");
        assert_eq!(Word::parse(&text, &names()).unwrap(), w);
        assert_eq!(Word::identity(2).render(&names()), "1");
        assert_eq!(Word::parse("1", &names()).unwrap(), Word::identity(2));
    }

    #[test]
    fn parse_reports_positions() {
        match Word::parse("x q", &names()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {:?}", other),
        }
        match Word::parse("x y^z", &names()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {:?}", other),
        }
        assert!(matches!(
            Word::parse("x^0", &names()),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn presentation_round_trip() {
        let r1 = Word::commutator(&x(), &y()).unwrap();
        let p = Presentation::new(names(), vec![r1.clone(), Word::gen_pow(2, 1, 3)]).unwrap();
        let text = p.render();
        assert_eq!(text, "gens: x, y ; rels: x y x^-1 y^-1 , y^3");
        let back = Presentation::parse(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn presentation_rejects_junk() {
        assert!(Presentation::new(vec![], vec![]).is_err());
        assert!(Presentation::new(vec!["a b".into()], vec![]).is_err());
        assert!(Presentation::new(vec!["x".into(), "x".into()], vec![]).is_err());
        assert!(Presentation::new(vec!["x".into()], vec![Word::identity(2)]).is_err());
        assert!(Presentation::parse("rels: x").is_err());
    }

    /// Evaluation check against the free abelianization: exponent sums are a
    /// homomorphism to Z^2, realized here as a GroupLike over (i64, i64).
    struct FreeAbelian;

    impl GroupLike for FreeAbelian {
        type Elem = (i64, i64);
        fn one(&self) -> (i64, i64) {
            (0, 0)
        }
        fn mul(&self, a: &(i64, i64), b: &(i64, i64)) -> (i64, i64) {
            (a.0 + b.0, a.1 + b.1)
        }
        fn inv(&self, a: &(i64, i64)) -> (i64, i64) {
            (-a.0, -a.1)
        }
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..2, -4i64..=4), 0..12)
            .prop_map(|runs| Word::from_runs(2, runs))
    }

    proptest! {
        #[test]
        fn reduction_invariant_holds(w in arb_word()) {
            for &(_, e) in w.runs() {
                prop_assert!(e != 0);
            }
            for pair in w.runs().windows(2) {
                prop_assert!(pair[0].0 != pair[1].0);
            }
        }

        #[test]
        fn eval_respects_products(a in arb_word(), b in arb_word()) {
            let imgs = [(1i64, 0i64), (0, 1)];
            let ab = a.mul(&b).unwrap();
            let ea = eval_word(&ab, &imgs, &FreeAbelian).unwrap();
            let (ma, mb) = (
                eval_word(&a, &imgs, &FreeAbelian).unwrap(),
                eval_word(&b, &imgs, &FreeAbelian).unwrap(),
            );
            prop_assert_eq!(ea, FreeAbelian.mul(&ma, &mb));
            prop_assert_eq!(ea, {
                let s = ab.exponent_sums();
                (s[0], s[1])
            });
        }

        #[test]
        fn round_trip_parse(w in arb_word()) {
            let text = w.render(&names());
            prop_assert_eq!(Word::parse(&text, &names()).unwrap(), w);
        }

        #[test]
        fn pow_matches_repeated_mul(w in arb_word(), n in -5i64..=5) {
            let mut acc = Word::identity(2);
            let base = if n < 0 { w.inv() } else { w.clone() };
            for _ in 0..n.unsigned_abs() {
                acc = acc.mul(&base).unwrap();
            }
            prop_assert_eq!(w.pow(n), acc);
        }
    }
}
