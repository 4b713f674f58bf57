//! Homomorphism search from two-generator presentations into finite groups.
//!
//! The search space is all pairs of images `(f(x), f(y))`; a pair is a
//! homomorphism exactly when every relator evaluates to the identity. By
//! default the first image only ranges over conjugacy class representatives:
//! conjugating a homomorphism by `c` is a bijection on homomorphisms that
//! moves `f(x)` across its class and preserves surjectivity, so existence is
//! decided losslessly and the full count is the class-size-weighted sum.
//! The exact mode scans all pairs and must agree with the weighted count.

use crate::error::{Error, Result};
use crate::group::{
    conjugacy_classes, element_order, generates, subgroup_closure, FiniteGroup, Indexed,
};
use crate::icosian::IcosianGroup;
use crate::quaternion::Quaternion;
use crate::twobridge::FamilyFilling;
use crate::words::{eval_word, Presentation};

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Keep only surjections.
    pub surjective_only: bool,
    /// Scan all |G|^2 pairs instead of class representatives.
    pub exact: bool,
    /// Worker threads; 0 and 1 both mean serial.
    pub jobs: usize,
    /// Refuse targets larger than this.
    pub max_order: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            surjective_only: false,
            exact: false,
            jobs: 1,
            max_order: 360,
        }
    }
}

/// A verified homomorphism, stored as generator images (element indices in
/// the target).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub target: String,
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn is_surjective<G: FiniteGroup + ?Sized>(&self, g: &G) -> Result<bool> {
        generates(g, &self.images)
    }

    /// Order of the subgroup generated by the images.
    pub fn image_size<G: FiniteGroup + ?Sized>(&self, g: &G) -> Result<usize> {
        Ok(subgroup_closure(g, &self.images)?.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSearch {
    pub target: String,
    /// Homomorphisms found among the scanned candidates, in scan order.
    pub homs: Vec<GroupHom>,
    /// Number of candidates scanned.
    pub candidates: u64,
    /// Homomorphisms found in the scan.
    pub found_count: u64,
    /// Count over all |G|^2 pairs: class-size weighted in the default scan,
    /// literal in the exact scan.
    pub total_count: u64,
    pub exact: bool,
}

pub fn enumerate_homs(
    pres: &Presentation,
    target: &dyn FiniteGroup,
    target_name: &str,
    opts: &SearchOptions,
) -> Result<HomSearch> {
    if pres.arity() != 2 {
        return Err(Error::UnsupportedArity(pres.arity()));
    }
    let n = target.order();
    if n > opts.max_order {
        return Err(Error::ResourceBound {
            order: n,
            bound: opts.max_order,
        });
    }

    // (first image candidates, weight of each first image)
    let (firsts, weights): (Vec<usize>, Vec<u64>) = if opts.exact {
        ((0..n).collect(), vec![1; n])
    } else {
        let classes = conjugacy_classes(target);
        (
            classes.iter().map(|c| c.rep).collect(),
            classes.iter().map(|c| c.members.len() as u64).collect(),
        )
    };
    let total_candidates = firsts.len() * n;

    let scan = |lo: usize, hi: usize| -> Result<Vec<(usize, GroupHom)>> {
        let ctx = Indexed(target);
        let mut found = Vec::new();
        'cand: for c in lo..hi {
            let images = [firsts[c / n], c % n];
            for r in pres.relators() {
                if eval_word(r, &images, &ctx)? != target.identity() {
                    continue 'cand;
                }
            }
            if opts.surjective_only && !generates(target, &images)? {
                continue;
            }
            found.push((
                c,
                GroupHom {
                    target: target_name.to_string(),
                    images: images.to_vec(),
                },
            ));
        }
        Ok(found)
    };

    let jobs = opts.jobs.max(1).min(total_candidates.max(1));
    let mut found: Vec<(usize, GroupHom)> = if jobs <= 1 {
        scan(0, total_candidates)?
    } else {
        let chunk = total_candidates.div_ceil(jobs);
        let mut parts: Vec<Result<Vec<(usize, GroupHom)>>> = Vec::with_capacity(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let lo = j * chunk;
                    let hi = ((j + 1) * chunk).min(total_candidates);
                    let scan = &scan;
                    scope.spawn(move || scan(lo, hi))
                })
                .collect();
            for h in handles {
                parts.push(h.join().expect("search worker panicked"));
            }
        });
        let mut all = Vec::new();
        for part in parts {
            all.extend(part?);
        }
        all
    };
    found.sort_by_key(|&(c, _)| c);

    let mut total = 0u64;
    for &(c, _) in &found {
        total += weights[c / n];
    }
    let homs: Vec<GroupHom> = found.into_iter().map(|(_, h)| h).collect();
    Ok(HomSearch {
        target: target_name.to_string(),
        found_count: homs.len() as u64,
        candidates: total_candidates as u64,
        total_count: total,
        exact: opts.exact,
        homs,
    })
}

/// Quaternion images of `x` and `y` for the family homomorphism onto 2I:
/// `x -> -t^2`, `y -> s^2 t^2 s`.
pub fn family_images() -> (Quaternion, Quaternion) {
    let s = crate::icosian::generator_s();
    let t = crate::icosian::generator_t();
    let t2 = &t * &t;
    let x_img = -&t2;
    let y_img = &(&(&s * &s) * &t2) * &s;
    (x_img, y_img)
}

/// The canonical surjection of a family filling's group onto 2I, verified
/// relator by relator. Errors are integrity failures: for valid family
/// parameters this map always exists.
pub fn family_hom(fam: &FamilyFilling, ico: &IcosianGroup) -> Result<GroupHom> {
    let (x_quat, y_quat) = family_images();
    let images: Vec<usize> = [&x_quat, &y_quat]
        .iter()
        .map(|q| {
            ico.index_of(q).ok_or_else(|| {
                Error::InternalConsistency("canonical image missing from 2I".to_string())
            })
        })
        .collect::<Result<_>>()?;
    let ctx = Indexed(ico);
    let names = fam.filled.gens();
    for r in fam.filled.relators() {
        if eval_word(r, &images, &ctx)? != ico.identity() {
            return Err(Error::CertificateIntegrity(format!(
                "relator {} does not die under the canonical images",
                r.render(names)
            )));
        }
    }
    let hom = GroupHom {
        target: "2I".to_string(),
        images,
    };
    if !hom.is_surjective(ico)? {
        return Err(Error::CertificateIntegrity(
            "canonical images fail to generate 2I".to_string(),
        ));
    }
    Ok(hom)
}

/// Fallback search: the first surjection onto 2I whose meridian image has
/// order 10, in deterministic scan order.
pub fn find_order10_surjection(
    pres: &Presentation,
    ico: &IcosianGroup,
) -> Result<Option<GroupHom>> {
    let opts = SearchOptions {
        surjective_only: true,
        ..SearchOptions::default()
    };
    let search = enumerate_homs(pres, ico, "2I", &opts)?;
    for hom in search.homs {
        if element_order(ico, hom.images[0])? == 10 {
            return Ok(Some(hom));
        }
    }
    Ok(None)
}
