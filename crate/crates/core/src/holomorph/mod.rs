//! The holomorph of a semisimple group and the family of regular subgroups
//! `G_J = ρ(A_J) λ(A_{J^c})` sharing it.

mod checks;
mod hset;
mod oracle;
mod perm;

pub use checks::{identity_suite, phi_certificate, Check, PhiCertificate};
pub use hset::{compute_h_set, t_group, DecompositionShape, HSet, TGroupReport};
pub use oracle::{brute_force_j_oracle, OracleReport, DEFAULT_LATTICE_GUARD, DEFAULT_MAX_HOL_ORDER};
pub use perm::{automorphism_perm, hol_membership, inversion_perm, lambda, rho, PermOnG};

use std::fmt;
use std::sync::Arc;

use crate::central::CentralDecomposition;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Homomorphism, Subgroup};

/// A subset `J` of the factor indices, bit `i` standing for `A_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorSet(pub u64);

impl FactorSet {
    pub const EMPTY: FactorSet = FactorSet(0);

    pub fn full(n: usize) -> Self {
        FactorSet((1u64 << n) - 1)
    }

    pub fn complement(self, n: usize) -> Self {
        FactorSet(!self.0 & Self::full(n).0)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// All subsets of `n` factors in increasing bit order.
    pub fn all(n: usize) -> impl Iterator<Item = FactorSet> {
        (0..1u64 << n).map(FactorSet)
    }
}

impl fmt::Display for FactorSet {
    /// One-based factor indices, e.g. `{1,2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Generators of `Hol(G) = Aut(G) ⋉ ρ(G)` as permutations of `G`.
#[derive(Clone, Debug)]
pub struct HolGroup {
    pub base: Arc<FiniteGroup>,
    pub rho_generators: Vec<PermOnG>,
    pub lambda_generators: Vec<PermOnG>,
    pub automorphism_generators: Vec<PermOnG>,
}

impl HolGroup {
    /// Generators of the whole holomorph (`λ(G)` lies in the group they
    /// generate once inner automorphisms are supplied).
    pub fn generators(&self) -> impl Iterator<Item = &PermOnG> {
        self.rho_generators.iter().chain(&self.automorphism_generators)
    }

    /// The holomorph as a permutation group of degree `|G|`.
    pub fn as_permutation_group(&self, limit: usize) -> Result<FiniteGroup> {
        let gens: Vec<Vec<u32>> = self.generators().map(|p| p.images().to_vec()).collect();
        FiniteGroup::from_permutations(format!("Hol({})", self.base.label()), self.base.order(), &gens, limit)
    }
}

pub fn holomorph_group(g: &Arc<FiniteGroup>, automorphisms: &[Homomorphism]) -> Result<HolGroup> {
    let mut auts = Vec::with_capacity(automorphisms.len());
    for a in automorphisms {
        if !Arc::ptr_eq(a.source(), g) || !Arc::ptr_eq(a.target(), g) || !a.is_automorphism() {
            return Err(Error::CertificateRejected("holomorph generator is not an automorphism of the group".into()));
        }
        auts.push(automorphism_perm(a));
    }
    let rho_generators: Vec<PermOnG> = g.generators().iter().map(|&s| rho(g, s)).collect();
    let lambda_generators: Vec<PermOnG> = g.generators().iter().map(|&s| lambda(g, s)).collect();
    if !rho_generators.iter().all(|r| lambda_generators.iter().all(|l| r.commutes_with(l))) {
        return Err(Error::CertificateRejected("left and right translations do not commute".into()));
    }
    Ok(HolGroup { base: Arc::clone(g), rho_generators, lambda_generators, automorphism_generators: auts })
}

/// The splitting `g = g_J g_{J^c}` with `g_J ∈ A_J`, `g_{J^c} ∈ A_{J^c}`,
/// taking the least possible index for `g_J`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub j: FactorSet,
    pub a_j: Subgroup,
    pub a_jc: Subgroup,
    part_j: Vec<u32>,
    part_jc: Vec<u32>,
}

impl Splitting {
    fn new(g: &FiniteGroup, j: FactorSet, a_j: Subgroup, a_jc: Subgroup) -> Result<Self> {
        let n = g.order();
        let mut part_j = vec![u32::MAX; n];
        let mut part_jc = vec![u32::MAX; n];
        for &a in a_j.elements() {
            for &b in a_jc.elements() {
                let x = g.mul(a, b);
                if part_j[x] == u32::MAX {
                    part_j[x] = a as u32;
                    part_jc[x] = b as u32;
                }
            }
        }
        if let Some(x) = part_j.iter().position(|&p| p == u32::MAX) {
            return Err(Error::NotSemisimple(format!("element {x} is not a product over {j} and its complement")));
        }
        Ok(Splitting { j, a_j, a_jc, part_j, part_jc })
    }

    #[inline]
    pub fn part_j(&self, x: usize) -> usize {
        self.part_j[x] as usize
    }

    #[inline]
    pub fn part_jc(&self, x: usize) -> usize {
        self.part_jc[x] as usize
    }
}

/// A member `G_J` of the family, given by generators.
#[derive(Clone, Debug)]
pub struct RegularSubgroup {
    pub j: FactorSet,
    pub generators: Vec<PermOnG>,
}

/// The factors `A_1 … A_n` of a group together with the splittings for
/// every `J ⊆ I`.
#[derive(Clone, Debug)]
pub struct Family {
    pub group: Arc<FiniteGroup>,
    pub n: usize,
    pub factors: Vec<Subgroup>,
    splits: Vec<Splitting>,
}

impl Family {
    pub fn new(g: &Arc<FiniteGroup>, factors: Vec<Subgroup>) -> Result<Self> {
        let n = factors.len();
        if n == 0 || n > 16 {
            return Err(Error::InvalidCounts { n, l: 0 });
        }
        let join = |j: FactorSet| j.indices().fold(g.trivial(), |acc, i| g.join(&acc, &factors[i]));
        let splits = FactorSet::all(n)
            .map(|j| Splitting::new(g, j, join(j), join(j.complement(n))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Family { group: Arc::clone(g), n, factors, splits })
    }

    pub fn from_decomposition(g: &Arc<FiniteGroup>, d: &CentralDecomposition) -> Result<Self> {
        Self::new(g, d.factors.clone())
    }

    pub fn subsets(&self) -> impl Iterator<Item = FactorSet> {
        FactorSet::all(self.n)
    }

    pub fn full(&self) -> FactorSet {
        FactorSet::full(self.n)
    }

    pub fn splitting(&self, j: FactorSet) -> &Splitting {
        &self.splits[j.0 as usize]
    }

    /// Generators `ρ(a)` for `a` generating `A_J` and `λ(b)` for `b`
    /// generating `A_{J^c}`.
    pub fn build_gj(&self, j: FactorSet) -> RegularSubgroup {
        let g = &self.group;
        let s = self.splitting(j);
        let generators = s
            .a_j
            .generators()
            .iter()
            .map(|&a| rho(g, a))
            .chain(s.a_jc.generators().iter().map(|&b| lambda(g, b)))
            .collect();
        RegularSubgroup { j, generators }
    }

    /// Whether `σ = ρ(x_J) λ(x_{J^c})` where `0^σ = x_J x_{J^c}`. Other
    /// factorizations differ by a central element and give the same map.
    pub fn gj_membership(&self, sigma: &PermOnG, j: FactorSet) -> bool {
        let g = &self.group;
        if sigma.degree() != g.order() {
            return false;
        }
        let s = self.splitting(j);
        let t = sigma.apply(0);
        let (a, b) = (s.part_j(t), s.part_jc(t));
        (0..g.order()).all(|y| sigma.apply(y) == g.mul(g.mul(b, y), a))
    }

    /// `φ_J(x_J x_{J^c}) = x_J α(x_{J^c})⁻¹` for an automorphism `α` of `G`
    /// preserving `A_{J^c}`. Checked on every alternative factorization.
    pub fn phi(&self, j: FactorSet, alpha: &Homomorphism) -> Result<PermOnG> {
        let g = &self.group;
        let s = self.splitting(j);
        if s.a_jc.generators().iter().any(|&b| !s.a_jc.contains(alpha.apply(b))) {
            return Err(Error::CertificateRejected(format!("automorphism does not preserve the complement of {j}")));
        }
        let overlap = s.a_j.intersection(&s.a_jc);
        let value = |a: usize, b: usize| g.mul(a, g.inv(alpha.apply(b)));
        let mut images = Vec::with_capacity(g.order());
        for x in 0..g.order() {
            let (a, b) = (s.part_j(x), s.part_jc(x));
            let v = value(a, b);
            for &z in &overlap {
                if value(g.mul(a, z), g.mul(g.inv(z), b)) != v {
                    return Err(Error::IllDefined { element: x });
                }
            }
            images.push(v as u32);
        }
        PermOnG::from_images(images).ok_or(Error::IllDefined { element: 0 })
    }

    /// `G` with the multiplication `g ∘_J h = (g_J h_J)(h_{J^c} g_{J^c})`.
    pub fn circ_group(&self, j: FactorSet) -> Result<FiniteGroup> {
        let s = self.splitting(j);
        let mut gens: Vec<usize> = s.a_j.generators().iter().chain(s.a_jc.generators()).copied().filter(|&x| x != 0).collect();
        let mut seen = std::collections::BTreeSet::new();
        gens.retain(|&x| seen.insert(x));
        if gens.is_empty() {
            gens.push(0);
        }
        FiniteGroup::twisted(
            &self.group,
            s.part_j.clone(),
            s.part_jc.clone(),
            gens,
            format!("({}, o_{})", self.group.label(), j),
        )
    }
}

/// Whether the group generated by `gens` acts regularly on `G`.
///
/// The generators must lie in `Hol(G)`. An element of `Hol(G)` fixing the
/// identity is an automorphism, trivial iff it fixes the generators `B` of
/// `G`. So along a breadth-first tree from 0 record where each transversal
/// element sends `B`; every Schreier generator is trivial iff each edge
/// `p -s-> q` carries the record of `p` to the record of `q`.
pub fn acts_regularly(g: &FiniteGroup, gens: &[PermOnG]) -> bool {
    let n = g.order();
    let base = g.generators();
    let k = base.len();
    let mut record = vec![0u32; n * k];
    let mut seen = vec![false; n];
    seen[0] = true;
    for (i, &b) in base.iter().enumerate() {
        record[i] = b as u32;
    }
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut moved = vec![0u32; k];
    let mut count = 1;
    while let Some(p) = queue.pop_front() {
        for s in gens {
            let q = s.apply(p);
            for i in 0..k {
                moved[i] = s.images()[record[p * k + i] as usize];
            }
            if !seen[q] {
                seen[q] = true;
                count += 1;
                record[q * k..(q + 1) * k].copy_from_slice(&moved);
                queue.push_back(q);
            } else if record[q * k..(q + 1) * k] != moved[..] {
                return false;
            }
        }
    }
    count == n
}
