use std::collections::HashSet;
use std::sync::Arc;

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Partition of a group into conjugacy classes. Classes are ordered by
/// their least element, so the class of the identity comes first.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    class_of: Vec<u32>,
    classes: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x] as usize
    }

    pub fn class_size(&self, x: usize) -> usize {
        self.classes[self.class_of(x)].len()
    }
}

impl FiniteGroup {
    /// Orbits of conjugation by the generators.
    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                let mut class = vec![x];
                class_of[x] = id;
                let mut head = 0;
                while head < class.len() {
                    let y = class[head];
                    for &s in self.generators() {
                        let c = self.conj(y, s);
                        if class_of[c] == u32::MAX {
                            class_of[c] = id;
                            class.push(c);
                        }
                    }
                    head += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            ConjugacyClasses { class_of, classes }
        })
    }

    /// Every normal subgroup: the subgroups generated by single conjugacy
    /// classes, closed under joins. Sorted by order, then by element list.
    pub fn normal_subgroups(&self, max_count_guard: usize) -> Result<Vec<Subgroup>> {
        let trivial = self.trivial();
        let mut lattice: Vec<Subgroup> = vec![trivial.clone()];
        let mut seen: HashSet<Vec<usize>> = HashSet::from([trivial.elements().to_vec()]);
        for class in self.conjugacy_classes().classes().iter().skip(1) {
            let sub = self.generated_by(&trivial, class.iter().copied());
            if seen.insert(sub.elements().to_vec()) {
                lattice.push(sub);
                if lattice.len() > max_count_guard {
                    return Err(Error::GuardExceeded(max_count_guard));
                }
            }
        }
        let mut i = 0;
        while i < lattice.len() {
            for j in 0..i {
                if lattice[i].is_subgroup_of(&lattice[j]) || lattice[j].is_subgroup_of(&lattice[i]) {
                    continue;
                }
                let joined = self.join(&lattice[i], &lattice[j]);
                if seen.insert(joined.elements().to_vec()) {
                    lattice.push(joined);
                    if lattice.len() > max_count_guard {
                        return Err(Error::GuardExceeded(max_count_guard));
                    }
                }
            }
            i += 1;
        }
        lattice.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
        Ok(lattice)
    }
}

impl FiniteGroup {
    /// Perfect, nontrivial, and the quotient by the center has exactly two
    /// normal subgroups.
    pub fn is_quasisimple(g: &Arc<FiniteGroup>) -> bool {
        if g.order() == 1 || !g.is_perfect() {
            return false;
        }
        match FiniteGroup::quotient(g, g.center()) {
            Ok(q) => q.order() > 1 && matches!(q.normal_subgroups(64), Ok(v) if v.len() == 2),
            Err(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_classes_are_singletons() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let cc = g.conjugacy_classes();
        assert_eq!(cc.len(), 4);
        assert!(cc.classes().iter().all(|c| c.len() == 1));
        assert_eq!(cc.classes()[0], vec![0]);
    }

    #[test]
    fn s3_classes_and_normal_subgroups() {
        let g = FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 10).unwrap();
        let sizes: Vec<usize> = g.conjugacy_classes().classes().iter().map(Vec::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 6);
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        let normals = g.normal_subgroups(100).unwrap();
        let orders: Vec<usize> = normals.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 3, 6]);
        assert!(normals.iter().all(|n| g.is_normal(n)));
    }

    #[test]
    fn guard_is_enforced() {
        let g = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(g.normal_subgroups(2), Err(Error::GuardExceeded(2)));
        assert_eq!(g.normal_subgroups(100).unwrap().len(), 6);
    }
}
