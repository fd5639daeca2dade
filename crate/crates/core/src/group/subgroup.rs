use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{bfs_extend, FiniteGroup};

/// A subgroup of an element-indexed group: membership bitset, sorted
/// element list and a generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: FixedBitSet,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl Subgroup {
    pub(crate) fn from_sorted(universe: usize, elements: Vec<usize>, generators: Vec<usize>) -> Self {
        let mut members = FixedBitSet::with_capacity(universe);
        for &x in &elements {
            members.insert(x);
        }
        Subgroup { members, elements, generators }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// Elements in increasing index order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Least non-identity element, or 0 for the trivial subgroup.
    pub fn least_nonidentity(&self) -> usize {
        self.elements.get(1).copied().unwrap_or(0)
    }

    pub fn intersection(&self, other: &Subgroup) -> Vec<usize> {
        self.elements.iter().copied().filter(|&x| other.contains(x)).collect()
    }
}

impl FiniteGroup {
    /// Smallest subgroup containing `gens`; the generator list is kept as given.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(0);
        let mut elements = vec![0];
        let mut queue = VecDeque::from([0]);
        bfs_extend(self, &mut members, &mut elements, &mut queue, gens);
        elements.sort_unstable();
        Subgroup { members, elements, generators: gens.to_vec() }
    }

    /// Add one generator to a subgroup, reusing the elements already closed
    /// under the old generators.
    pub fn extend(&self, sub: &Subgroup, t: usize) -> Subgroup {
        if sub.contains(t) {
            return sub.clone();
        }
        let mut members = sub.members.clone();
        let mut elements = sub.elements.clone();
        let mut gens = sub.generators.clone();
        gens.push(t);
        let mut queue = VecDeque::new();
        for i in 0..elements.len() {
            let y = self.mul(elements[i], t);
            if !members.contains(y) {
                members.insert(y);
                elements.push(y);
                queue.push_back(y);
            }
        }
        bfs_extend(self, &mut members, &mut elements, &mut queue, &gens);
        elements.sort_unstable();
        Subgroup { members, elements, generators: gens }
    }

    /// Subgroup generated by `start` and the candidate elements; only
    /// candidates not already present become generators.
    pub fn generated_by<I: IntoIterator<Item = usize>>(&self, start: &Subgroup, candidates: I) -> Subgroup {
        let mut sub = start.clone();
        for c in candidates {
            if !sub.contains(c) {
                sub = self.extend(&sub, c);
                if sub.order() == self.order() {
                    break;
                }
            }
        }
        sub
    }

    /// Join of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let (big, small) = if a.order() >= b.order() { (a, b) } else { (b, a) };
        self.generated_by(big, small.generators.iter().copied())
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> &Subgroup {
        self.center.get_or_init(|| {
            let elements: Vec<usize> = (0..self.order())
                .filter(|&x| self.generators().iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
                .collect();
            let sub = Subgroup::from_sorted(self.order(), elements, Vec::new());
            let gens = self.small_generators(&sub);
            Subgroup { generators: gens, ..sub }
        })
    }

    /// Elements of `sub` commuting with every generator of `sub`.
    pub fn center_of(&self, sub: &Subgroup) -> Subgroup {
        let elements: Vec<usize> = sub
            .elements()
            .iter()
            .copied()
            .filter(|&x| sub.generators().iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
            .collect();
        let z = Subgroup::from_sorted(self.order(), elements, Vec::new());
        let gens = self.small_generators(&z);
        Subgroup { generators: gens, ..z }
    }

    /// A generating set for `sub` obtained by sifting its elements in index order.
    pub fn small_generators(&self, sub: &Subgroup) -> Vec<usize> {
        self.generated_by(&self.trivial(), sub.elements().iter().copied()).generators
    }

    /// Normal closure in `ambient` of the subgroup generated by `seeds`,
    /// where `ambient` is given by its generators.
    pub fn normal_closure(&self, seeds: &[usize], ambient: &[usize]) -> Subgroup {
        let mut sub = self.generated_by(&self.trivial(), seeds.iter().copied());
        let mut i = 0;
        while i < sub.generators.len() {
            let h = sub.generators[i];
            for &g in ambient {
                let c = self.conj(h, g);
                if !sub.contains(c) {
                    sub = self.extend(&sub, c);
                }
            }
            i += 1;
        }
        sub
    }

    /// Derived subgroup: normal closure of the commutators of generator pairs.
    pub fn derived_subgroup(&self) -> &Subgroup {
        self.derived.get_or_init(|| self.derived_of(&self.whole()))
    }

    /// Derived subgroup of a subgroup, computed inside the subgroup.
    pub fn derived_of(&self, sub: &Subgroup) -> Subgroup {
        let gens = sub.generators();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        self.normal_closure(&comms, gens)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Invariant under conjugation by every generator of the group.
    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        sub.generators()
            .iter()
            .all(|&h| self.generators().iter().all(|&g| sub.contains(self.conj(h, g))))
    }

    /// Whether every pair of generators of `a` and `b` commutes.
    pub fn commute(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.generators()
            .iter()
            .all(|&x| b.generators().iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// A two-element generating set for `sub` if one is found among
    /// `attempts` seeded random pairs, else a sifted generating set.
    pub fn two_generators(&self, sub: &Subgroup, attempts: usize, seed: u64) -> Vec<usize> {
        use rand::{Rng, SeedableRng};
        let elems = sub.elements();
        if elems.len() <= 1 {
            return Vec::new();
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let max_order = elems.iter().map(|&x| self.element_order(x)).max().unwrap_or(1);
        let tops: Vec<usize> = elems.iter().copied().filter(|&x| self.element_order(x) == max_order).collect();
        for _ in 0..attempts {
            let a = tops[rng.gen_range(0..tops.len())];
            let b = elems[rng.gen_range(0..elems.len())];
            if self.closure(&[a, b]).order() == sub.order() {
                return vec![a, b];
            }
        }
        self.small_generators(sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 10).unwrap()
    }

    #[test]
    fn identity_closure() {
        let g = s3();
        assert_eq!(g.closure(&[0]).elements(), &[0]);
    }

    #[test]
    fn closure_is_idempotent_and_extend_agrees() {
        let g = s3();
        let t = g.generators()[0];
        let c = g.generators()[1];
        let h = g.closure(&[c]);
        assert_eq!(h.order(), 3);
        assert_eq!(g.closure(h.elements()), h);
        assert_eq!(g.extend(&h, t).order(), 6);
    }

    #[test]
    fn s3_center_and_derived() {
        let g = s3();
        assert!(g.center().is_trivial());
        assert_eq!(g.derived_subgroup().order(), 3);
        assert!(!g.is_perfect());
        assert!(g.is_normal(g.derived_subgroup()));
        assert!(!g.is_normal(&g.closure(&[g.generators()[0]])));
    }

    #[test]
    fn abelian_group_center_is_whole() {
        let g = Arc::new(FiniteGroup::cyclic(4).unwrap());
        assert_eq!(g.center().order(), 4);
        assert!(g.derived_subgroup().is_trivial());
    }
}
