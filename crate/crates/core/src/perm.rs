//! Permutation groups on five points, primarily the alternating group A5.
//!
//! Permutations are arrays `[u8; 5]` mapping position to image, composed as
//! functions: `(p * q)(i) = p(q(i))`. A5 is generated from the standard
//! 3-cycle and 5-cycle and closed by BFS, giving a deterministic element
//! order just like the quaternion construction.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use std::collections::HashMap;

pub type Perm5 = [u8; 5];

pub const PERM_IDENTITY: Perm5 = [0, 1, 2, 3, 4];

pub fn perm_mul(p: &Perm5, q: &Perm5) -> Perm5 {
    let mut out = PERM_IDENTITY;
    for i in 0..5 {
        out[i] = p[q[i] as usize];
    }
    out
}

pub fn perm_inv(p: &Perm5) -> Perm5 {
    let mut out = PERM_IDENTITY;
    for i in 0..5 {
        out[p[i] as usize] = i as u8;
    }
    out
}

/// Disjoint cycle notation on points 1..5, fixed points omitted; the
/// identity renders as `()`.
pub fn cycle_notation(p: &Perm5) -> String {
    let mut seen = [false; 5];
    let mut out = String::new();
    for start in 0..5usize {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut cur = start;
        loop {
            seen[cur] = true;
            out.push_str(&(cur + 1).to_string());
            cur = p[cur] as usize;
            if cur == start {
                break;
            }
            out.push(' ');
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

pub struct PermGroup {
    elements: Vec<Perm5>,
    index: HashMap<Perm5, usize>,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl PermGroup {
    /// A5 generated by `(1 2 3)` and `(1 2 3 4 5)`.
    pub fn alternating_5() -> Result<Self> {
        let c3: Perm5 = [1, 2, 0, 3, 4];
        let c5: Perm5 = [1, 2, 3, 4, 0];
        let group = PermGroup::closure(&[c3, c5, perm_inv(&c3), perm_inv(&c5)])?;
        if group.elements.len() != 60 {
            return Err(Error::InternalConsistency(format!(
                "A5 closure stopped at {} elements",
                group.elements.len()
            )));
        }
        Ok(group)
    }

    fn closure(gens: &[Perm5]) -> Result<Self> {
        let mut elements = vec![PERM_IDENTITY];
        let mut index = HashMap::new();
        index.insert(PERM_IDENTITY, 0usize);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head];
            head += 1;
            for g in gens {
                let next = perm_mul(&cur, g);
                if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(next) {
                    slot.insert(elements.len());
                    elements.push(next);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = perm_mul(&elements[a], &elements[b]);
                table[a * n + b] = *index.get(&prod).ok_or_else(|| {
                    Error::InternalConsistency("permutation product escapes closure".to_string())
                })?;
            }
        }
        let inv = elements.iter().map(|p| index[&perm_inv(p)]).collect();
        Ok(PermGroup {
            elements,
            index,
            table,
            inv,
        })
    }

    pub fn element(&self, i: usize) -> &Perm5 {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm5) -> Option<usize> {
        self.index.get(p).copied()
    }
}

impl FiniteGroup for PermGroup {
    fn order(&self) -> usize {
        self.elements.len()
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{check_axioms, conjugacy_classes, element_order, is_simple};

    #[test]
    fn a5_is_the_simple_group_of_order_60() {
        let g = PermGroup::alternating_5().unwrap();
        assert_eq!(g.order(), 60);
        assert!(check_axioms(&g).is_ok());
        assert!(is_simple(&g));
        let mut sizes: Vec<usize> = conjugacy_classes(&g)
            .iter()
            .map(|c| c.members.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn element_orders_come_in_1_2_3_5() {
        let g = PermGroup::alternating_5().unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..60 {
            seen.insert(element_order(&g, i).unwrap());
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![1, 2, 3, 5]);
    }

    #[test]
    fn composition_convention() {
        // (1 2) after (2 3): first swap 2,3 then 1,2 -- sends 1->2->... in
        // function order p(q(i)).
        let p: Perm5 = [1, 0, 2, 3, 4]; // (1 2)
        let q: Perm5 = [0, 2, 1, 3, 4]; // (2 3)
        assert_eq!(perm_mul(&p, &q), [1, 2, 0, 3, 4]); // (1 2 3)
        assert_eq!(perm_mul(&q, &p), [2, 0, 1, 3, 4]); // (1 3 2)
        assert_eq!(perm_mul(&p, &perm_inv(&p)), PERM_IDENTITY);
    }

    #[test]
    fn cycle_rendering() {
        assert_eq!(cycle_notation(&PERM_IDENTITY), "()");
        assert_eq!(cycle_notation(&[1, 2, 0, 3, 4]), "(1 2 3)");
        assert_eq!(cycle_notation(&[1, 0, 3, 2, 4]), "(1 2)(3 4)");
        assert_eq!(cycle_notation(&[1, 2, 3, 4, 0]), "(1 2 3 4 5)");
    }

    #[test]
    fn even_permutations_only() {
        let g = PermGroup::alternating_5().unwrap();
        for i in 0..60 {
            let p = g.element(i);
            let mut inversions = 0;
            for a in 0..5 {
                for b in (a + 1)..5 {
                    if p[a] > p[b] {
                        inversions += 1;
                    }
                }
            }
            assert_eq!(inversions % 2, 0, "odd permutation {:?} in A5", p);
        }
    }
}
