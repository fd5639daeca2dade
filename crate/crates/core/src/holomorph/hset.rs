use std::collections::BTreeMap;

use super::{FactorSet, Family, PermOnG};
use crate::abelian::AbelianInvariants;
use crate::catalog::{Catalog, QuasisimpleDescriptor};
use crate::central::CentralDecomposition;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// What the H-set depends on: the descriptor of each factor's components
/// and the pairwise intersections `A_r ∩ A_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionShape {
    pub descriptors: Vec<QuasisimpleDescriptor>,
    pub intersections: BTreeMap<(usize, usize), AbelianInvariants>,
}

impl DecompositionShape {
    pub fn new(descriptors: Vec<QuasisimpleDescriptor>) -> Self {
        DecompositionShape { descriptors, intersections: BTreeMap::new() }
    }

    pub fn with_intersection(mut self, r: usize, s: usize, inv: AbelianInvariants) -> Self {
        self.intersections.insert((r.min(s), r.max(s)), inv);
        self
    }

    pub fn from_decomposition(g: &FiniteGroup, d: &CentralDecomposition) -> Self {
        let intersections = d
            .intersections
            .iter()
            .map(|(r, s, sub)| ((*r, *s), AbelianInvariants::of_subgroup(g, sub)))
            .collect();
        DecompositionShape { descriptors: d.descriptors.clone(), intersections }
    }

    pub fn n(&self) -> usize {
        self.descriptors.len()
    }

    pub fn in_l(&self) -> Result<Vec<bool>> {
        let catalog = Catalog::builtin();
        self.descriptors.iter().map(|d| catalog.in_l(d)).collect()
    }

    fn intersection(&self, r: usize, s: usize) -> AbelianInvariants {
        self.intersections.get(&(r.min(s), r.max(s))).cloned().unwrap_or_else(AbelianInvariants::trivial)
    }
}

/// The subsets `R` with `G_R ∈ H(G)`; `|members| = 2^h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSet {
    pub n: usize,
    pub l: usize,
    pub members: Vec<FactorSet>,
    pub h: u32,
}

/// `R` belongs unless some `r ∈ R` and `s ∉ R`, both with components in
/// `L`, have `A_r ∩ A_s` containing an L-critical subgroup of the
/// components of `A_r` or of `A_s`. With no factor in `L` every subset
/// belongs.
pub fn compute_h_set(shape: &DecompositionShape) -> Result<HSet> {
    let n = shape.n();
    if n == 0 || n >= 64 {
        return Err(Error::InvalidCounts { n, l: 0 });
    }
    let catalog = Catalog::builtin();
    let in_l = shape.in_l()?;
    let l = in_l.iter().filter(|&&b| b).count();
    let mut linked = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            if in_l[r] && in_l[s] {
                let inter = shape.intersection(r, s);
                if catalog.l_critical_check(&inter, &shape.descriptors[r])?
                    || catalog.l_critical_check(&inter, &shape.descriptors[s])?
                {
                    linked.push((r, s));
                }
            }
        }
    }
    let members: Vec<FactorSet> = FactorSet::all(n)
        .filter(|j| linked.iter().all(|&(r, s)| j.contains(r) == j.contains(s)))
        .collect();
    debug_assert!(members.len().is_power_of_two());
    let h = members.len().trailing_zeros();
    Ok(HSet { n, l, members, h })
}

/// The permutation action of the conjugators on the family `{G_K : K ∈ H}`
/// and the group it generates.
#[derive(Clone, Debug)]
pub struct TGroupReport {
    pub members: Vec<FactorSet>,
    /// `(label, action)` with `action[k]` the position of the conjugate of the `k`-th member
    pub actions: Vec<(String, Vec<usize>)>,
    pub order: usize,
    pub rank: u32,
    pub elementary_abelian: bool,
    pub regular: bool,
    pub squares_trivial: bool,
}

impl TGroupReport {
    pub fn passed(&self) -> bool {
        self.elementary_abelian
            && self.regular
            && self.squares_trivial
            && self.order == self.members.len()
            && self.order == 1 << self.rank
    }
}

/// Conjugate each member's generators by each conjugator, locate the
/// image among the members, and analyse the induced permutation group.
pub fn t_group(family: &Family, members: &[FactorSet], conjugators: &[(String, PermOnG)]) -> Result<TGroupReport> {
    let gens: Vec<_> = members.iter().map(|&k| family.build_gj(k)).collect();
    let mut actions = Vec::with_capacity(conjugators.len());
    for (label, c) in conjugators {
        let mut action = Vec::with_capacity(members.len());
        for m in &gens {
            let conj: Vec<PermOnG> = m.generators.iter().map(|p| p.conjugate_by(c)).collect();
            let target = members
                .iter()
                .position(|&k| conj.iter().all(|p| family.gj_membership(p, k)))
                .ok_or_else(|| Error::ActionLeavesFamily { conjugator: label.clone(), subset: m.j.to_string() })?;
            action.push(target);
        }
        actions.push((label.clone(), action));
    }
    let d = members.len();
    let perms: Vec<Vec<u32>> = actions.iter().map(|(_, a)| a.iter().map(|&x| x as u32).collect()).collect();
    let perms = if perms.is_empty() { vec![(0..d as u32).collect()] } else { perms };
    let t = FiniteGroup::from_permutations("T", d, &perms, 1 << 20)?;
    let order = t.order();
    let elementary_abelian = t.is_abelian() && t.element_orders().iter().all(|&o| o <= 2);
    let start = members.iter().position(|&k| k == family.full()).unwrap_or(0);
    let mut orbit = vec![false; d];
    for x in 0..order {
        orbit[t.permutation(x).expect("permutation group")[start] as usize] = true;
    }
    let regular = orbit.iter().all(|&b| b) && order == d;
    let squares_trivial = actions.iter().all(|(_, a)| (0..d).all(|k| a[a[k]] == k));
    Ok(TGroupReport {
        members: members.to_vec(),
        actions,
        order,
        rank: order.trailing_zeros(),
        elementary_abelian,
        regular,
        squares_trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::h_bounds;

    fn u62() -> QuasisimpleDescriptor {
        QuasisimpleDescriptor::new("U6_2", &[2, 2, 3])
    }

    #[test]
    fn no_l_factors_gives_all_subsets() {
        let shape = DecompositionShape::new(vec![
            QuasisimpleDescriptor::new("A5", &[2]),
            QuasisimpleDescriptor::new("PSL2_7", &[2]),
        ])
        .with_intersection(0, 1, AbelianInvariants::from_cyclic_orders(&[2]));
        let h = compute_h_set(&shape).unwrap();
        assert_eq!((h.members.len(), h.h, h.l), (4, 2, 0));
    }

    #[test]
    fn amalgamated_l_pair_halves_the_family() {
        let shape = DecompositionShape::new(vec![u62(), u62()])
            .with_intersection(0, 1, AbelianInvariants::from_cyclic_orders(&[2, 2, 3]));
        let h = compute_h_set(&shape).unwrap();
        assert_eq!(h.members, vec![FactorSet(0), FactorSet(3)]);
        assert_eq!(h.h, 1);
        assert_eq!(h_bounds(2, 2).unwrap().m, 1);
    }

    #[test]
    fn disjoint_l_pair_keeps_everything() {
        let h = compute_h_set(&DecompositionShape::new(vec![u62(), u62()])).unwrap();
        assert_eq!(h.h, 2);
    }

    #[test]
    fn single_factor() {
        let h = compute_h_set(&DecompositionShape::new(vec![u62()])).unwrap();
        assert_eq!(h.members, vec![FactorSet(0), FactorSet(1)]);
    }
}
