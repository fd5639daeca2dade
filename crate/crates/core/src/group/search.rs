//! Backtracking search over generator images.
//!
//! Candidate images for each source generator are the target elements with
//! the same element order and conjugacy-class size, tried in increasing
//! class-size order with ties broken by element index. When source and
//! target are the same group, each generator is first tried as its own
//! image so the identity automorphism is always the first hit. Partial
//! assignments are pruned by the orders of `s_i s_j` and `s_i s_j^-1`.

use std::sync::Arc;

use super::{FiniteGroup, Homomorphism};
use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// Prescribed images `source element -> target element` an isomorphism
/// must respect.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoConstraint {
    pub prescribed: Vec<(usize, usize)>,
}

impl IsoConstraint {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn prescribe(mut self, from: usize, to: usize) -> Self {
        self.prescribed.push((from, to));
        self
    }

    fn holds(&self, hom: &Homomorphism) -> bool {
        self.prescribed.iter().all(|&(x, y)| hom.apply(x) == y)
    }
}

struct Search<'a> {
    source: &'a Arc<FiniteGroup>,
    target: &'a Arc<FiniteGroup>,
    constraint: &'a IsoConstraint,
    candidates: Vec<Vec<usize>>,
    pair_orders: Vec<Vec<(u32, u32)>>,
    budget: u64,
    tried: u64,
}

impl<'a> Search<'a> {
    fn new(source: &'a Arc<FiniteGroup>, target: &'a Arc<FiniteGroup>, constraint: &'a IsoConstraint, budget: u64) -> Self {
        let same = Arc::ptr_eq(source, target);
        let gens = source.generators();
        let (sc, tc) = (source.conjugacy_classes(), target.conjugacy_classes());
        let (so, to) = (source.element_orders(), target.element_orders());
        let candidates = gens
            .iter()
            .map(|&s| {
                let mut c: Vec<usize> = (0..target.order())
                    .filter(|&y| to[y] == so[s] && tc.class_size(y) == sc.class_size(s))
                    .collect();
                c.sort_by_key(|&y| (tc.class_size(y), y));
                if same {
                    if let Some(pos) = c.iter().position(|&y| y == s) {
                        c.remove(pos);
                        c.insert(0, s);
                    }
                }
                if let Some(&(_, img)) = constraint.prescribed.iter().find(|&&(x, _)| x == s) {
                    c.retain(|&y| y == img);
                }
                c
            })
            .collect();
        let pair_orders = gens
            .iter()
            .enumerate()
            .map(|(j, &b)| {
                gens[..j]
                    .iter()
                    .map(|&a| (so[source.mul(a, b)], so[source.mul(a, source.inv(b))]))
                    .collect()
            })
            .collect();
        Search { source, target, constraint, candidates, pair_orders, budget, tried: 0 }
    }

    fn consistent(&self, imgs: &[usize]) -> bool {
        let j = imgs.len() - 1;
        let b = imgs[j];
        let to = self.target.element_orders();
        imgs[..j].iter().zip(&self.pair_orders[j]).all(|(&a, &(p, q))| {
            to[self.target.mul(a, b)] == p && to[self.target.mul(a, self.target.inv(b))] == q
        })
    }

    /// Depth-first search; `on_hit` returns true to stop.
    fn run(&mut self, imgs: &mut Vec<usize>, on_hit: &mut dyn FnMut(Homomorphism) -> bool) -> Result<bool> {
        let depth = imgs.len();
        if depth == self.candidates.len() {
            if let Ok(hom) = Homomorphism::extend(self.source, self.target, imgs) {
                if hom.is_bijective() && self.constraint.holds(&hom) {
                    return Ok(on_hit(hom));
                }
            }
            return Ok(false);
        }
        for idx in 0..self.candidates[depth].len() {
            self.tried += 1;
            if self.tried > self.budget {
                return Err(Error::SearchBudgetExceeded { tried: self.tried - 1 });
            }
            imgs.push(self.candidates[depth][idx]);
            if self.consistent(imgs) && self.run(imgs, on_hit)? {
                imgs.pop();
                return Ok(true);
            }
            imgs.pop();
        }
        Ok(false)
    }
}

/// Find an isomorphism `g -> h` satisfying `constraint`; `Ok(None)` once
/// every candidate has been exhausted.
pub fn search_isomorphism(
    g: &Arc<FiniteGroup>,
    h: &Arc<FiniteGroup>,
    constraint: &IsoConstraint,
    budget: u64,
) -> Result<Option<Homomorphism>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    let mut search = Search::new(g, h, constraint, budget);
    let mut found = None;
    search.run(&mut Vec::new(), &mut |hom| {
        found = Some(hom);
        true
    })?;
    Ok(found)
}

/// All automorphisms of `g`, in search order.
pub fn enumerate_automorphisms(g: &Arc<FiniteGroup>, budget: u64) -> Result<Vec<Homomorphism>> {
    let none = IsoConstraint::none();
    let mut search = Search::new(g, g, &none, budget);
    let mut all = Vec::new();
    search.run(&mut Vec::new(), &mut |hom| {
        all.push(hom);
        false
    })?;
    Ok(all)
}

/// An automorphism of the quasisimple group `k` inverting every element of
/// its center, or `Ok(None)` if none exists.
pub fn search_inverting_automorphism(k: &Arc<FiniteGroup>, budget: u64) -> Result<Option<Homomorphism>> {
    if !FiniteGroup::is_quasisimple(k) {
        return Err(Error::NotQuasisimple(k.label().to_string()));
    }
    let constraint = IsoConstraint {
        prescribed: k.center().elements().iter().map(|&z| (z, k.inv(z))).collect(),
    };
    search_isomorphism(k, k, &constraint, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 10).unwrap())
    }

    #[test]
    fn identity_found_first() {
        let g = s3();
        let hom = search_isomorphism(&g, &g, &IsoConstraint::none(), 1000).unwrap().unwrap();
        assert!(hom.is_identity());
    }

    #[test]
    fn aut_s3_has_six_elements() {
        let g = s3();
        assert_eq!(enumerate_automorphisms(&g, 10_000).unwrap().len(), 6);
    }

    #[test]
    fn different_orders_not_found() {
        let g = s3();
        let z = Arc::new(FiniteGroup::cyclic(6).unwrap());
        let z5 = Arc::new(FiniteGroup::cyclic(5).unwrap());
        assert!(search_isomorphism(&g, &z5, &IsoConstraint::none(), 1000).unwrap().is_none());
        // same order, not isomorphic: exhausted
        assert!(search_isomorphism(&g, &z, &IsoConstraint::none(), 1000).unwrap().is_none());
    }

    #[test]
    fn budget_reported() {
        let g = s3();
        let err = enumerate_automorphisms(&g, 2).unwrap_err();
        assert_eq!(err, Error::SearchBudgetExceeded { tried: 2 });
    }

    #[test]
    fn prescribed_images_respected() {
        let z = Arc::new(FiniteGroup::cyclic(5).unwrap());
        let c = IsoConstraint::none().prescribe(1, 4);
        let hom = search_isomorphism(&z, &z, &c, 1000).unwrap().unwrap();
        assert_eq!(hom.apply(1), 4);
        assert_eq!(hom.apply(2), 3);
    }
}
