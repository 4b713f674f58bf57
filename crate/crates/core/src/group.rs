//! Finite groups as index tables, plus the generic structure algorithms
//! used downstream: orders, closures, conjugacy classes, simplicity.
//!
//! Elements are `usize` indices in `0..order()`. Everything here is
//! deterministic: closures enumerate in BFS insertion order with a fixed
//! generator order, and conjugacy classes are listed by smallest member.

use crate::error::{Error, Result};
use crate::words::GroupLike;
use std::collections::HashSet;

pub trait FiniteGroup: Sync {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
}

/// Adapter viewing a [`FiniteGroup`] as a word-evaluation context over
/// element indices.
pub struct Indexed<'g, G: FiniteGroup + ?Sized>(pub &'g G);

impl<G: FiniteGroup + ?Sized> GroupLike for Indexed<'_, G> {
    type Elem = usize;

    fn one(&self) -> usize {
        self.0.identity()
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.0.mul(*a, *b)
    }

    fn inv(&self, a: &usize) -> usize {
        self.0.inv(*a)
    }
}

fn check_member<G: FiniteGroup + ?Sized>(g: &G, x: usize) -> Result<()> {
    if x >= g.order() {
        return Err(Error::Membership {
            element: x,
            order: g.order(),
        });
    }
    Ok(())
}

/// Multiplicative order of an element.
pub fn element_order<G: FiniteGroup + ?Sized>(g: &G, x: usize) -> Result<usize> {
    check_member(g, x)?;
    let mut acc = x;
    let mut n = 1;
    while acc != g.identity() {
        acc = g.mul(acc, x);
        n += 1;
        if n > g.order() {
            return Err(Error::InternalConsistency(format!(
                "element {} has order exceeding the group order {}",
                x,
                g.order()
            )));
        }
    }
    Ok(n)
}

/// Subgroup generated by `seeds`, in BFS insertion order (identity first,
/// then products with the seeds in their given order).
pub fn subgroup_closure<G: FiniteGroup + ?Sized>(g: &G, seeds: &[usize]) -> Result<Vec<usize>> {
    for &s in seeds {
        check_member(g, s)?;
    }
    let mut seen = vec![false; g.order()];
    let mut out = vec![g.identity()];
    seen[g.identity()] = true;
    let mut head = 0;
    while head < out.len() {
        let cur = out[head];
        head += 1;
        for &s in seeds {
            let next = g.mul(cur, s);
            if !seen[next] {
                seen[next] = true;
                out.push(next);
            }
        }
    }
    Ok(out)
}

/// Whether `seeds` generate the whole group.
pub fn generates<G: FiniteGroup + ?Sized>(g: &G, seeds: &[usize]) -> Result<bool> {
    Ok(subgroup_closure(g, seeds)?.len() == g.order())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// Conjugacy classes, ordered by smallest member; each class representative
/// is that smallest member and `members` is sorted.
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(g: &G) -> Vec<ConjugacyClass> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut members: Vec<usize> = (0..n)
            .map(|c| g.mul(g.mul(c, x), g.inv(c)))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        members.sort_unstable();
        for &m in &members {
            assigned[m] = true;
        }
        classes.push(ConjugacyClass { rep: x, members });
    }
    classes
}

/// Smallest normal subgroup containing `seeds`: the closure of all
/// conjugates of the seeds.
pub fn normal_closure<G: FiniteGroup + ?Sized>(g: &G, seeds: &[usize]) -> Result<Vec<usize>> {
    for &s in seeds {
        check_member(g, s)?;
    }
    let mut conjugates = Vec::new();
    let mut seen = HashSet::new();
    for &s in seeds {
        for c in 0..g.order() {
            let conj = g.mul(g.mul(c, s), g.inv(c));
            if seen.insert(conj) {
                conjugates.push(conj);
            }
        }
    }
    subgroup_closure(g, &conjugates)
}

/// A group is simple when every nontrivial element normally generates the
/// whole group. Checked one conjugacy class at a time.
pub fn is_simple<G: FiniteGroup + ?Sized>(g: &G) -> bool {
    if g.order() == 1 {
        return false;
    }
    for class in conjugacy_classes(g) {
        if class.rep == g.identity() {
            continue;
        }
        let closure = normal_closure(g, &[class.rep]).expect("class rep is a member");
        if closure.len() != g.order() {
            return false;
        }
    }
    true
}

pub fn is_abelian<G: FiniteGroup + ?Sized>(g: &G) -> bool {
    let n = g.order();
    (0..n).all(|a| (a..n).all(|b| g.mul(a, b) == g.mul(b, a)))
}

/// Elements commuting with everything.
pub fn center<G: FiniteGroup + ?Sized>(g: &G) -> Vec<usize> {
    let n = g.order();
    (0..n)
        .filter(|&a| (0..n).all(|b| g.mul(a, b) == g.mul(b, a)))
        .collect()
}

/// Full axiom audit of the multiplication data: closure bounds, identity,
/// two-sided inverses, and associativity over every triple. Quadratic to
/// cubic in the order, meant for orders up to a few hundred.
pub fn check_axioms<G: FiniteGroup + ?Sized>(g: &G) -> std::result::Result<(), String> {
    let n = g.order();
    if n == 0 {
        return Err("empty carrier".to_string());
    }
    let e = g.identity();
    if e >= n {
        return Err(format!("identity index {} out of range", e));
    }
    for a in 0..n {
        for b in 0..n {
            if g.mul(a, b) >= n {
                return Err(format!("product {}*{} escapes the carrier", a, b));
            }
        }
    }
    for a in 0..n {
        if g.mul(e, a) != a || g.mul(a, e) != a {
            return Err(format!("identity fails at {}", a));
        }
        let ai = g.inv(a);
        if ai >= n || g.mul(a, ai) != e || g.mul(ai, a) != e {
            return Err(format!("inverse fails at {}", a));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            for c in 0..n {
                if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                    return Err(format!("associativity fails at ({}, {}, {})", a, b, c));
                }
            }
        }
    }
    Ok(())
}

/// A finite group given by an explicit multiplication table.
pub struct TableGroup {
    order: usize,
    identity: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl TableGroup {
    /// Builds from a row-major `order x order` table. Verifies the table is
    /// a group table (identity, inverses, associativity).
    pub fn new(order: usize, identity: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::InternalConsistency(format!(
                "table size {} does not match order {}",
                table.len(),
                order
            )));
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let p = table[a * order + b];
                if p >= order {
                    return Err(Error::InternalConsistency(
                        "table entry out of range".to_string(),
                    ));
                }
                if p == identity && inv[a] == usize::MAX {
                    inv[a] = b;
                }
            }
        }
        let tg = TableGroup {
            order,
            identity,
            table,
            inv,
        };
        check_axioms(&tg).map_err(Error::InternalConsistency)?;
        Ok(tg)
    }
}

impl FiniteGroup for TableGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

/// The cyclic group Z/m under addition, element `i` standing for the
/// residue `i`.
pub struct CyclicGroup {
    modulus: usize,
}

impl CyclicGroup {
    pub fn new(modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput(
                "cyclic group modulus must be positive".to_string(),
            ));
        }
        Ok(CyclicGroup { modulus })
    }
}

impl FiniteGroup for CyclicGroup {
    fn order(&self) -> usize {
        self.modulus
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        (a + b) % self.modulus
    }

    fn inv(&self, a: usize) -> usize {
        (self.modulus - a) % self.modulus
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{eval_word, Word};

    #[test]
    fn cyclic_group_basics() {
        let c6 = CyclicGroup::new(6).unwrap();
        assert!(check_axioms(&c6).is_ok());
        assert_eq!(element_order(&c6, 1).unwrap(), 6);
        assert_eq!(element_order(&c6, 2).unwrap(), 3);
        assert_eq!(element_order(&c6, 0).unwrap(), 1);
        assert!(is_abelian(&c6));
        assert!(!is_simple(&c6));
        assert_eq!(conjugacy_classes(&c6).len(), 6);
        assert!(CyclicGroup::new(0).is_err());
    }

    #[test]
    fn membership_errors() {
        let c3 = CyclicGroup::new(3).unwrap();
        assert!(matches!(
            element_order(&c3, 5),
            Err(Error::Membership { element: 5, order: 3 })
        ));
        assert!(subgroup_closure(&c3, &[7]).is_err());
    }

    #[test]
    fn closure_order_is_bfs() {
        let c6 = CyclicGroup::new(6).unwrap();
        assert_eq!(subgroup_closure(&c6, &[2]).unwrap(), vec![0, 2, 4]);
        assert_eq!(subgroup_closure(&c6, &[5]).unwrap(), vec![0, 5, 4, 3, 2, 1]);
        assert!(generates(&c6, &[5]).unwrap());
        assert!(!generates(&c6, &[2, 4]).unwrap());
    }

    #[test]
    fn simplicity_of_small_cyclic_groups() {
        // Z/p is simple exactly for prime p.
        assert!(is_simple(&CyclicGroup::new(5).unwrap()));
        assert!(is_simple(&CyclicGroup::new(2).unwrap()));
        assert!(!is_simple(&CyclicGroup::new(4).unwrap()));
        assert!(!is_simple(&CyclicGroup::new(1).unwrap()));
    }

    /// S3 as an explicit table: elements e, r, r^2, f, fr, fr^2 with
    /// r^3 = f^2 = e and r f = f r^2.
    fn s3() -> TableGroup {
        let mul = |a: usize, b: usize| -> usize {
            // encode a = (flip_a, rot_a) as index 3*flip + rot
            let (fa, ra) = (a / 3, a % 3);
            let (fb, rb) = (b / 3, b % 3);
            // (f^fa r^ra)(f^fb r^rb) = f^(fa+fb) r^(ra', rb) with
            // r^ra f = f r^(3 - ra)
            let ra2 = if fb == 1 { (3 - ra) % 3 } else { ra };
            let f = (fa + fb) % 2;
            let r = (ra2 + rb) % 3;
            3 * f + r
        };
        let mut table = vec![0; 36];
        for a in 0..6 {
            for b in 0..6 {
                table[a * 6 + b] = mul(a, b);
            }
        }
        TableGroup::new(6, 0, table).unwrap()
    }

    #[test]
    fn table_group_structure() {
        let g = s3();
        assert!(!is_abelian(&g));
        assert!(!is_simple(&g));
        assert_eq!(center(&g), vec![0]);
        let classes = conjugacy_classes(&g);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        // the rotation subgroup is the unique proper normal closure
        assert_eq!(normal_closure(&g, &[1]).unwrap().len(), 3);
        assert_eq!(normal_closure(&g, &[3]).unwrap().len(), 6);
    }

    #[test]
    fn words_evaluate_through_the_index_adapter() {
        let g = s3();
        // [r, f] = r f r^-1 f^-1 = r * (f r^-1 f^-1) = r * r = r^2
        let c = Word::commutator(&Word::generator(2, 0), &Word::generator(2, 1)).unwrap();
        let img = eval_word(&c, &[1usize, 3usize], &Indexed(&g)).unwrap();
        assert_eq!(img, 2);
        assert!(matches!(
            eval_word(&c, &[1usize], &Indexed(&g)),
            Err(Error::ImageCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn bad_tables_are_rejected() {
        // wrong size
        assert!(TableGroup::new(2, 0, vec![0, 1, 1]).is_err());
        // left-zero semigroup: not a group
        assert!(TableGroup::new(2, 0, vec![0, 0, 1, 1]).is_err());
    }
}
