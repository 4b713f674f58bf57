//! The binary icosahedral group 2I as explicit unit quaternions.
//!
//! The group is generated by
//! `s = (1 + i + j + k)/2` and `t = (phi + (phi - 1)i + j)/2`,
//! closed by breadth-first multiplication. Construction fails rather than
//! truncating if the closure ever leaves the expected 120 elements, so a
//! successfully built [`IcosianGroup`] is the genuine group with a
//! deterministic element order: identity first, then BFS layers with the
//! generator order `s, t, s^-1, t^-1`.

use crate::error::{Error, Result};
use crate::golden::GoldenNum;
use crate::group::{FiniteGroup, TableGroup};
use crate::quaternion::Quaternion;
use std::collections::HashMap;

pub const ICOSIAN_ORDER: usize = 120;

/// `s = (1 + i + j + k)/2`.
pub fn generator_s() -> Quaternion {
    Quaternion::new(
        GoldenNum::from_ratio(1, 2),
        GoldenNum::from_ratio(1, 2),
        GoldenNum::from_ratio(1, 2),
        GoldenNum::from_ratio(1, 2),
    )
}

/// `t = (phi + (phi - 1)i + j)/2`.
pub fn generator_t() -> Quaternion {
    Quaternion::new(
        GoldenNum::from_parts(0, 1, 2),
        GoldenNum::from_parts(-1, 1, 2),
        GoldenNum::from_ratio(1, 2),
        GoldenNum::zero(),
    )
}

pub struct IcosianGroup {
    elements: Vec<Quaternion>,
    index: HashMap<Quaternion, usize>,
    table: Vec<usize>,
    inv: Vec<usize>,
    gen_s: usize,
    gen_t: usize,
    neg_one: usize,
}

/// Result of collapsing the center: the 60-element quotient, the projection
/// from 2I indices, and a representative in 2I for each quotient element.
pub struct CentralQuotient {
    pub group: TableGroup,
    pub projection: Vec<usize>,
    pub reps: Vec<usize>,
}

impl IcosianGroup {
    /// Generates 2I from scratch. Errors if the closure does not come out
    /// at exactly 120 unit quaternions.
    pub fn generate() -> Result<Self> {
        let s = generator_s();
        let t = generator_t();
        for (name, g) in [("s", &s), ("t", &t)] {
            if !g.norm().is_one() {
                return Err(Error::InternalConsistency(format!(
                    "generator {} is not a unit quaternion",
                    name
                )));
            }
        }
        // For unit quaternions the inverse is the conjugate.
        let gens = [s.clone(), t.clone(), s.conj(), t.conj()];
        let mut elements = vec![Quaternion::one()];
        let mut index = HashMap::new();
        index.insert(Quaternion::one(), 0usize);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for g in &gens {
                let next = &cur * g;
                if !index.contains_key(&next) {
                    if elements.len() == ICOSIAN_ORDER {
                        return Err(Error::InternalConsistency(
                            "closure of s, t exceeds 120 elements".to_string(),
                        ));
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        if elements.len() != ICOSIAN_ORDER {
            return Err(Error::InternalConsistency(format!(
                "closure of s, t stopped at {} elements",
                elements.len()
            )));
        }

        let n = elements.len();
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = &elements[a] * &elements[b];
                let idx = *index.get(&prod).ok_or_else(|| {
                    Error::InternalConsistency("product escapes the closure".to_string())
                })?;
                table[a * n + b] = idx;
            }
        }
        let mut inv = vec![0usize; n];
        for a in 0..n {
            inv[a] = *index.get(&elements[a].conj()).ok_or_else(|| {
                Error::InternalConsistency("inverse escapes the closure".to_string())
            })?;
        }
        let neg_one = *index
            .get(&-Quaternion::one())
            .ok_or_else(|| Error::InternalConsistency("-1 missing from closure".to_string()))?;
        let gen_s = index[&s];
        let gen_t = index[&t];
        Ok(IcosianGroup {
            elements,
            index,
            table,
            inv,
            gen_s,
            gen_t,
            neg_one,
        })
    }

    pub fn element(&self, i: usize) -> &Quaternion {
        &self.elements[i]
    }

    pub fn index_of(&self, q: &Quaternion) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn s_index(&self) -> usize {
        self.gen_s
    }

    pub fn t_index(&self) -> usize {
        self.gen_t
    }

    pub fn neg_one_index(&self) -> usize {
        self.neg_one
    }

    /// Index of `-q` given the index of `q`.
    pub fn negate(&self, i: usize) -> usize {
        self.table[self.neg_one * ICOSIAN_ORDER + i]
    }

    /// Collapses the center `{1, -1}` to a 60-element table group. The
    /// representative of a pair `{q, -q}` is the smaller index.
    pub fn central_quotient(&self) -> Result<CentralQuotient> {
        let n = ICOSIAN_ORDER;
        let mut pair_rep = vec![0usize; n];
        let mut reps = Vec::with_capacity(n / 2);
        let mut proj = vec![usize::MAX; n];
        for (i, rep) in pair_rep.iter_mut().enumerate() {
            *rep = i.min(self.negate(i));
        }
        for i in 0..n {
            if pair_rep[i] == i {
                proj[i] = reps.len();
                reps.push(i);
            }
        }
        for i in 0..n {
            if proj[i] == usize::MAX {
                proj[i] = proj[pair_rep[i]];
            }
        }
        let m = reps.len();
        let mut qtable = vec![0usize; m * m];
        for a in 0..m {
            for b in 0..m {
                qtable[a * m + b] = proj[self.mul(reps[a], reps[b])];
            }
        }
        let group = TableGroup::new(m, proj[self.identity()], qtable)?;
        Ok(CentralQuotient {
            group,
            projection: proj,
            reps,
        })
    }
}

impl FiniteGroup for IcosianGroup {
    fn order(&self) -> usize {
        ICOSIAN_ORDER
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * ICOSIAN_ORDER + b]
    }

    fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        center, check_axioms, conjugacy_classes, element_order, generates, is_simple,
    };

    fn the_group() -> IcosianGroup {
        IcosianGroup::generate().unwrap()
    }

    #[test]
    fn order_is_120_and_axioms_hold() {
        let g = the_group();
        assert_eq!(g.order(), 120);
        assert!(check_axioms(&g).is_ok());
        assert!(generates(&g, &[g.s_index(), g.t_index()]).unwrap());
    }

    #[test]
    fn generator_orders_and_central_powers() {
        let g = the_group();
        let minus_one = -Quaternion::one();
        assert_eq!(element_order(&g, g.s_index()).unwrap(), 6);
        assert_eq!(element_order(&g, g.t_index()).unwrap(), 10);
        assert_eq!(generator_s().pow(3).unwrap(), minus_one);
        assert_eq!(generator_t().pow(5).unwrap(), minus_one);
        assert_eq!(generator_s().norm(), GoldenNum::one());
        assert_eq!(generator_t().norm(), GoldenNum::one());
    }

    #[test]
    fn center_is_plus_minus_one() {
        let g = the_group();
        let z = center(&g);
        assert_eq!(z.len(), 2);
        assert!(z.contains(&g.identity()));
        assert!(z.contains(&g.neg_one_index()));
        assert_eq!(g.negate(g.identity()), g.neg_one_index());
        assert_eq!(g.negate(g.neg_one_index()), g.identity());
    }

    #[test]
    fn conjugacy_class_sizes() {
        let g = the_group();
        let mut sizes: Vec<usize> = conjugacy_classes(&g)
            .iter()
            .map(|c| c.members.len())
            .collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 12, 12, 12, 12, 20, 20, 30]);
    }

    #[test]
    fn central_quotient_is_simple_of_order_60() {
        let g = the_group();
        let q = g.central_quotient().unwrap();
        assert_eq!(q.group.order(), 60);
        assert!(is_simple(&q.group));
        assert_eq!(q.reps.len(), 60);
        // the projection is a 2-to-1 homomorphism
        for a in 0..120 {
            assert_eq!(q.projection[a], q.projection[g.negate(a)]);
            for b in 0..120 {
                assert_eq!(
                    q.projection[g.mul(a, b)],
                    q.group.mul(q.projection[a], q.projection[b])
                );
            }
        }
    }

    #[test]
    fn inverses_are_conjugates() {
        let g = the_group();
        for a in 0..120 {
            assert_eq!(g.element(g.inv(a)), &g.element(a).conj());
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
    }

    #[test]
    fn element_lookup_round_trips() {
        let g = the_group();
        for idx in [0, 1, 17, 119] {
            assert_eq!(g.index_of(g.element(idx)), Some(idx));
        }
        assert_eq!(g.index_of(&Quaternion::basis_i().scale_int(2)), None);
    }

    #[test]
    fn bfs_order_is_stable() {
        let g = the_group();
        assert_eq!(g.element(0), &Quaternion::one());
        assert_eq!(g.element(1), &generator_s());
        assert_eq!(g.element(2), &generator_t());
        assert_eq!(g.element(3), &generator_s().conj());
        assert_eq!(g.element(4), &generator_t().conj());
    }
}
