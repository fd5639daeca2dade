use super::{FactorSet, Family, HolGroup, PermOnG};
use crate::error::{Error, Result};

/// Largest holomorph the oracle will enumerate.
pub const DEFAULT_MAX_HOL_ORDER: usize = 20_000;
pub const DEFAULT_LATTICE_GUARD: usize = 1_000_000;

/// The regular normal subgroups of `Hol(G)` found by enumeration.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub hol_order: usize,
    pub normal_subgroups: usize,
    /// For each regular normal subgroup of order `|G|`, the `J` it equals, if any.
    pub regular_normal: Vec<Option<FactorSet>>,
}

impl OracleReport {
    /// Every regular normal subgroup is some `G_J` and each `G_J` occurs once.
    pub fn matches_family(&self, n: usize) -> bool {
        let mut found: Vec<FactorSet> = self.regular_normal.iter().flatten().copied().collect();
        found.sort();
        found.dedup();
        self.regular_normal.iter().all(Option::is_some)
            && found.len() == self.regular_normal.len()
            && found == FactorSet::all(n).collect::<Vec<_>>()
    }
}

/// Enumerate `Hol(G)` as a permutation group, list its normal subgroups,
/// keep those of order `|G|` with trivial point stabilizer, and match each
/// against the family by generator membership.
pub fn brute_force_j_oracle(family: &Family, hol: &HolGroup, max_hol_order: usize, lattice_guard: usize) -> Result<OracleReport> {
    let g = &family.group;
    let perm_group = match hol.as_permutation_group(max_hol_order) {
        Ok(p) => p,
        Err(Error::TooLarge(_)) => return Err(Error::GuardExceeded(max_hol_order)),
        Err(e) => return Err(e),
    };
    let normals = perm_group.normal_subgroups(lattice_guard)?;
    let mut regular_normal = Vec::new();
    for sub in &normals {
        if sub.order() != g.order() {
            continue;
        }
        let fixes_zero = sub
            .elements()
            .iter()
            .filter(|&&x| perm_group.permutation(x).expect("permutation group")[0] == 0)
            .count();
        if fixes_zero != 1 {
            continue;
        }
        let gens: Vec<PermOnG> = perm_group
            .small_generators(sub)
            .iter()
            .map(|&x| PermOnG::from_images_unchecked(perm_group.permutation(x).expect("permutation group").to_vec()))
            .collect();
        let j = family.subsets().find(|&j| gens.iter().all(|p| family.gj_membership(p, j)));
        regular_normal.push(j);
    }
    Ok(OracleReport { hol_order: perm_group.order(), normal_subgroups: normals.len(), regular_normal })
}
