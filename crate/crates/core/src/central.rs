//! Central products of quasisimple groups, their components and the
//! decomposition into Aut-indecomposable central factors.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use crate::abelian::AbelianInvariants;
use crate::catalog::{Catalog, QuasisimpleDescriptor};
use crate::error::{Error, Result};
use crate::group::{search_isomorphism, FiniteGroup, Homomorphism, IsoConstraint, Subgroup, DEFAULT_ELEMENT_LIMIT};

/// Identify the central element `left.1` of factor `left.0` with the
/// central element `right.1` of factor `right.0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub left: (usize, usize),
    pub right: (usize, usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AmalgamationSpec {
    pub identifications: Vec<Identification>,
}

impl AmalgamationSpec {
    pub fn direct() -> Self {
        Self::default()
    }

    pub fn identify(mut self, left: (usize, usize), right: (usize, usize)) -> Self {
        self.identifications.push(Identification { left, right });
        self
    }

    /// Identify the centers of factors `i` and `j` wholesale through the
    /// isomorphism given by `pairs` (images of generators of `Z(X_i)`).
    pub fn full(mut self, i: usize, j: usize, pairs: &[(usize, usize)]) -> Self {
        for &(a, b) in pairs {
            self.identifications.push(Identification { left: (i, a), right: (j, b) });
        }
        self
    }
}

/// A central product together with the images of its factors.
#[derive(Clone, Debug)]
pub struct CentralProduct {
    pub group: Arc<FiniteGroup>,
    pub factors: Vec<Arc<FiniteGroup>>,
    /// `embeddings[i][x]` is the image of element `x` of factor `i`.
    pub embeddings: Vec<Vec<usize>>,
    pub factor_subgroups: Vec<Subgroup>,
    /// The amalgamated subgroup `N` of the direct product, as coordinate tuples.
    pub kernel: Vec<Vec<usize>>,
}

impl CentralProduct {
    /// `[K_i, K_j] = 1` on generators and `K_i ∩ K_j ≤ Z(G)` for `i != j`.
    pub fn check_invariants(&self) -> Result<()> {
        let g = &self.group;
        for i in 0..self.factor_subgroups.len() {
            for j in i + 1..self.factor_subgroups.len() {
                let (a, b) = (&self.factor_subgroups[i], &self.factor_subgroups[j]);
                if !g.commute(a, b) {
                    return Err(Error::InvalidAmalgamation(format!("factors {i} and {j} do not commute")));
                }
                if a.intersection(b).iter().any(|&x| !g.center().contains(x)) {
                    return Err(Error::InvalidAmalgamation(format!("factors {i} and {j} meet outside the center")));
                }
            }
        }
        Ok(())
    }
}

/// The direct product of `factors` modulo the central subgroup generated by
/// the identifications.
pub fn central_product(factors: &[Arc<FiniteGroup>], amalgamation: &AmalgamationSpec) -> Result<CentralProduct> {
    central_product_with_limit(factors, amalgamation, DEFAULT_ELEMENT_LIMIT)
}

pub fn central_product_with_limit(
    factors: &[Arc<FiniteGroup>],
    amalgamation: &AmalgamationSpec,
    limit: usize,
) -> Result<CentralProduct> {
    let k = factors.len();
    if k == 0 {
        return Err(Error::NoGenerators);
    }
    let check = |(f, z): (usize, usize)| -> Result<()> {
        let factor = factors
            .get(f)
            .ok_or_else(|| Error::InvalidAmalgamation(format!("no factor {f}")))?;
        if z >= factor.order() {
            return Err(Error::InvalidAmalgamation(format!("element {z} out of range for factor {f}")));
        }
        if !factor.center().contains(z) {
            return Err(Error::InvalidAmalgamation(format!("element {z} of factor {f} is not central")));
        }
        Ok(())
    };
    let mut gens: Vec<Vec<usize>> = Vec::new();
    for id in &amalgamation.identifications {
        check(id.left)?;
        check(id.right)?;
        let mut t = vec![0; k];
        if id.left.0 == id.right.0 {
            let f = &factors[id.left.0];
            t[id.left.0] = f.mul(id.left.1, f.inv(id.right.1));
        } else {
            t[id.left.0] = id.left.1;
            t[id.right.0] = factors[id.right.0].inv(id.right.1);
        }
        gens.push(t);
    }
    let kernel = tuple_closure(factors, &gens);
    for (i, _) in factors.iter().enumerate() {
        if kernel.iter().any(|t| t[i] != 0 && t.iter().enumerate().all(|(j, &x)| j == i || x == 0)) {
            return Err(Error::InvalidAmalgamation(format!("identifications collapse part of factor {i}")));
        }
    }
    let label = factors
        .iter()
        .map(|f| f.label().to_string())
        .collect::<Vec<_>>()
        .join(if kernel.len() > 1 { " o " } else { " x " });
    let group = Arc::new(FiniteGroup::product_quotient(label, factors.to_vec(), &kernel, limit)?);
    let mut embeddings = Vec::with_capacity(k);
    let mut factor_subgroups = Vec::with_capacity(k);
    for (i, f) in factors.iter().enumerate() {
        let emb: Vec<usize> = (0..f.order())
            .map(|x| {
                let mut t = vec![0; k];
                t[i] = x;
                group.product_index(&t).expect("factor element lies in the product")
            })
            .collect();
        let gens: Vec<usize> = f.generators().iter().map(|&s| emb[s]).collect();
        factor_subgroups.push(group.closure(&gens));
        embeddings.push(emb);
    }
    let cp = CentralProduct { group, factors: factors.to_vec(), embeddings, factor_subgroups, kernel };
    cp.check_invariants()?;
    Ok(cp)
}

fn tuple_closure(factors: &[Arc<FiniteGroup>], gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let identity = vec![0; factors.len()];
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(t) = queue.pop_front() {
        for s in gens {
            let u: Vec<usize> = t.iter().zip(s).zip(factors).map(|((&a, &b), f)| f.mul(a, b)).collect();
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen.into_iter().collect()
}

/// A component realized as a group in its own right.
#[derive(Clone, Debug)]
pub struct Component {
    pub subgroup: Subgroup,
    pub group: Arc<FiniteGroup>,
    /// local index -> index in the ambient group
    pub embedding: Vec<usize>,
    /// ambient index -> local index, `u32::MAX` outside the component
    local: Vec<u32>,
    pub descriptor: QuasisimpleDescriptor,
}

impl Component {
    pub fn local(&self, x: usize) -> Option<usize> {
        match self.local[x] {
            u32::MAX => None,
            v => Some(v as usize),
        }
    }

    /// Transport an automorphism of the component group to a map on the
    /// ambient elements of the component.
    pub fn transport(&self, hom: &Homomorphism) -> impl Fn(usize) -> usize + '_ {
        let images = hom.images().to_vec();
        move |x| self.embedding[images[self.local[x] as usize] as usize]
    }
}

/// The components of a semisimple group, sorted by order and then by least
/// non-identity element.
///
/// A normal subgroup of `G` properly containing `Z = Z(G)` contains some
/// conjugacy class outside `Z`, so the minimal normal subgroups of `G/Z` are
/// the minimal members of `{<C>Z : C a class outside Z}`. Each component is
/// the derived subgroup of such a preimage.
pub fn components(g: &Arc<FiniteGroup>) -> Result<Vec<Component>> {
    if !g.is_perfect() {
        return Err(Error::NotSemisimple(format!(
            "{} is not perfect: derived subgroup has order {}",
            g.label(),
            g.derived_subgroup().order()
        )));
    }
    let z = g.center().clone();
    let mut candidates: Vec<Subgroup> = Vec::new();
    for class in g.conjugacy_classes().classes() {
        if z.contains(class[0]) {
            continue;
        }
        let m = g.generated_by(&z, class.iter().copied());
        if !candidates.contains(&m) {
            candidates.push(m);
        }
    }
    let minimal: Vec<&Subgroup> = candidates
        .iter()
        .filter(|m| !candidates.iter().any(|o| o != *m && o.is_subgroup_of(m)))
        .collect();
    let catalog = Catalog::builtin();
    let mut out = Vec::new();
    for m in minimal {
        let gens = m.generators();
        if gens.iter().all(|&a| gens.iter().all(|&b| z.contains(g.commutator(a, b)))) {
            return Err(Error::NotSemisimple(format!(
                "minimal normal subgroup of order {} over the center is abelian",
                m.order() / z.order()
            )));
        }
        let derived = g.derived_of(m);
        let sub = g.closure(&g.small_generators(&derived));
        let (cg, embedding) = FiniteGroup::from_subgroup(g, &sub, None)?;
        let cg = Arc::new(cg);
        if !FiniteGroup::is_quasisimple(&cg) {
            return Err(Error::NotSemisimple(format!("component candidate of order {} is not quasisimple", sub.order())));
        }
        let mut local = vec![u32::MAX; g.order()];
        for (i, &x) in embedding.iter().enumerate() {
            local[x] = i as u32;
        }
        let center = AbelianInvariants::of_subgroup(&cg, cg.center());
        let simple_order = (cg.order() / cg.center().order()) as u64;
        let descriptor = catalog.identify(simple_order, center)?;
        out.push(Component { subgroup: sub, group: cg, embedding, local, descriptor });
    }
    out.sort_by_key(|c| (c.subgroup.order(), c.subgroup.least_nonidentity()));
    let joined = out
        .iter()
        .fold(g.trivial(), |acc, c| g.join(&acc, &c.subgroup));
    if joined.order() != g.order() {
        return Err(Error::NotSemisimple(format!(
            "components generate a subgroup of order {} of {}",
            joined.order(),
            g.order()
        )));
    }
    Ok(out)
}

/// Unique factorization `g = c_1 c_2 ... c_t` with `c_k` in the `k`-th
/// subgroup, choosing the least index at each step.
#[derive(Clone, Debug)]
pub struct ComponentFactorization {
    parts: Vec<Subgroup>,
    /// `tails[k]` = product of `parts[k..]`
    tails: Vec<Subgroup>,
}

impl ComponentFactorization {
    pub fn new(g: &FiniteGroup, parts: Vec<Subgroup>) -> Self {
        let mut tails = vec![g.trivial(); parts.len() + 1];
        for k in (0..parts.len()).rev() {
            tails[k] = g.join(&parts[k], &tails[k + 1]);
        }
        ComponentFactorization { parts, tails }
    }

    pub fn of_components(g: &FiniteGroup, comps: &[Component]) -> Self {
        Self::new(g, comps.iter().map(|c| c.subgroup.clone()).collect())
    }

    pub fn factor(&self, g: &FiniteGroup, x: usize) -> Option<Vec<usize>> {
        if !self.tails[0].contains(x) {
            return None;
        }
        let mut rest = x;
        let mut out = Vec::with_capacity(self.parts.len());
        for k in 0..self.parts.len() {
            let c = *self.parts[k]
                .elements()
                .iter()
                .find(|&&c| self.tails[k + 1].contains(g.mul(g.inv(c), rest)))?;
            out.push(c);
            rest = g.mul(g.inv(c), rest);
        }
        Some(out)
    }
}

/// The automorphism acting as `maps[k]` on the `k`-th factorization part,
/// verified on all Cayley edges and for bijectivity.
pub fn componentwise_automorphism(
    g: &Arc<FiniteGroup>,
    fac: &ComponentFactorization,
    maps: &[&dyn Fn(usize) -> usize],
) -> Result<Homomorphism> {
    let images = g
        .generators()
        .iter()
        .map(|&s| {
            let parts = fac
                .factor(g, s)
                .ok_or_else(|| Error::CertificateRejected(format!("generator {s} does not factor")))?;
            Ok(parts.iter().zip(maps).fold(0, |acc, (&c, f)| g.mul(acc, f(c))))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = Homomorphism::extend(g, g, &images).map_err(|e| Error::CertificateRejected(e.to_string()))?;
    if !hom.is_bijective() {
        return Err(Error::CertificateRejected("componentwise map is not bijective".into()));
    }
    Ok(hom)
}

/// Automorphism generators: inner automorphisms by the generators of `G`,
/// each component certificate extended by the identity on the other
/// components, and component swaps found by isomorphism search fixing the
/// shared central elements. Certificates that do not extend are dropped.
pub fn standard_automorphism_generators(
    g: &Arc<FiniteGroup>,
    comps: &[Component],
    certificates: &[Vec<Homomorphism>],
    budget: u64,
) -> Result<Vec<Homomorphism>> {
    let fac = ComponentFactorization::of_components(g, comps);
    let id = |x: usize| x;
    let mut out: Vec<Homomorphism> = g
        .generators()
        .iter()
        .map(|&s| Homomorphism::inner(g, s))
        .collect::<Result<_>>()?;
    for (k, certs) in certificates.iter().enumerate().take(comps.len()) {
        for cert in certs {
            let moved = comps[k].transport(cert);
            let maps: Vec<&dyn Fn(usize) -> usize> =
                (0..comps.len()).map(|i| if i == k { &moved as &dyn Fn(usize) -> usize } else { &id as &dyn Fn(usize) -> usize }).collect();
            if let Ok(h) = componentwise_automorphism(g, &fac, &maps) {
                out.push(h);
            }
        }
    }
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            if let Some(h) = component_swap(g, comps, &fac, i, j, budget)? {
                out.push(h);
            }
        }
    }
    Ok(out)
}

/// An automorphism exchanging components `i` and `j` and fixing the others
/// pointwise, if an isomorphism between them fixing `C_i ∩ C_j` extends.
pub fn component_swap(
    g: &Arc<FiniteGroup>,
    comps: &[Component],
    fac: &ComponentFactorization,
    i: usize,
    j: usize,
    budget: u64,
) -> Result<Option<Homomorphism>> {
    let (a, b) = (&comps[i], &comps[j]);
    if a.group.order() != b.group.order() || a.descriptor != b.descriptor {
        return Ok(None);
    }
    let mut constraint = IsoConstraint::none();
    for z in a.subgroup.intersection(&b.subgroup) {
        constraint = constraint.prescribe(a.local(z).unwrap(), b.local(z).unwrap());
    }
    let Some(psi) = search_isomorphism(&a.group, &b.group, &constraint, budget)? else {
        return Ok(None);
    };
    let psi_inv = psi.inverse().expect("isomorphism is invertible");
    let forward = |x: usize| b.embedding[psi.apply(a.local(x).unwrap())];
    let backward = |x: usize| a.embedding[psi_inv.apply(b.local(x).unwrap())];
    let id = |x: usize| x;
    let maps: Vec<&dyn Fn(usize) -> usize> = (0..comps.len())
        .map(|k| {
            if k == i {
                &forward as &dyn Fn(usize) -> usize
            } else if k == j {
                &backward as &dyn Fn(usize) -> usize
            } else {
                &id as &dyn Fn(usize) -> usize
            }
        })
        .collect();
    Ok(componentwise_automorphism(g, fac, &maps).ok())
}

/// The factors `A_1 … A_n` of the unique decomposition of a semisimple group
/// into perfect, Aut-invariant, centrally indecomposable central factors.
#[derive(Clone, Debug)]
pub struct CentralDecomposition {
    pub n: usize,
    pub factors: Vec<Subgroup>,
    /// indices into `components` for each factor
    pub factor_components: Vec<Vec<usize>>,
    pub components: Vec<Component>,
    /// `(r, s, A_r ∩ A_s)` for `r < s`
    pub intersections: Vec<(usize, usize, Subgroup)>,
    pub descriptors: Vec<QuasisimpleDescriptor>,
    pub l: usize,
}

impl CentralDecomposition {
    pub fn intersection(&self, r: usize, s: usize) -> Option<&Subgroup> {
        let (r, s) = if r < s { (r, s) } else { (s, r) };
        self.intersections.iter().find(|(a, b, _)| *a == r && *b == s).map(|(_, _, x)| x)
    }
}

/// Orbits of the components under the automorphism generators give the
/// factors: an Aut-invariant perfect central factor is a product of
/// components, so the finest Aut-invariant splitting groups the components
/// by orbit.
pub fn aut_indecomposable_decomposition(
    g: &Arc<FiniteGroup>,
    comps: &[Component],
    aut_generators: &[Homomorphism],
) -> Result<CentralDecomposition> {
    let t = comps.len();
    let z = g.center();
    let mut parent: Vec<usize> = (0..t).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for alpha in aut_generators {
        for (k, c) in comps.iter().enumerate() {
            let witness = c
                .subgroup
                .generators()
                .iter()
                .copied()
                .find(|&x| !z.contains(x))
                .ok_or_else(|| Error::NotSemisimple("component inside the center".into()))?;
            let image = alpha.apply(witness);
            let m = comps
                .iter()
                .position(|d| d.subgroup.contains(image))
                .ok_or_else(|| Error::CertificateRejected("automorphism does not permute the components".into()))?;
            if !c.subgroup.generators().iter().all(|&x| comps[m].subgroup.contains(alpha.apply(x))) {
                return Err(Error::CertificateRejected("automorphism does not permute the components".into()));
            }
            let (a, b) = (find(&mut parent, k), find(&mut parent, m));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<usize> = Vec::new();
    for k in 0..t {
        let r = find(&mut parent, k);
        match root_of.iter().position(|&x| x == r) {
            Some(i) => orbits[i].push(k),
            None => {
                root_of.push(r);
                orbits.push(vec![k]);
            }
        }
    }
    let mut factors: Vec<(Subgroup, Vec<usize>)> = orbits
        .into_iter()
        .map(|orb| {
            let a = orb.iter().fold(g.trivial(), |acc, &k| g.join(&acc, &comps[k].subgroup));
            (a, orb)
        })
        .collect();
    factors.sort_by_key(|(a, _)| (a.order(), a.least_nonidentity()));
    let catalog = Catalog::builtin();
    let descriptors: Vec<QuasisimpleDescriptor> =
        factors.iter().map(|(_, orb)| comps[orb[0]].descriptor.clone()).collect();
    let l = descriptors
        .iter()
        .map(|d| catalog.in_l(d))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    let mut intersections = Vec::new();
    for r in 0..factors.len() {
        for s in r + 1..factors.len() {
            let elems = factors[r].0.intersection(&factors[s].0);
            intersections.push((r, s, g.generated_by(&g.trivial(), elems)));
        }
    }
    let (factors, factor_components): (Vec<Subgroup>, Vec<Vec<usize>>) = factors.into_iter().unzip();
    Ok(CentralDecomposition {
        n: factors.len(),
        factors,
        factor_components,
        components: comps.to_vec(),
        intersections,
        descriptors,
        l,
    })
}

/// Components, standard automorphism generators and the decomposition in one step.
pub fn decompose(
    g: &Arc<FiniteGroup>,
    certificates: &[Vec<Homomorphism>],
    budget: u64,
) -> Result<(CentralDecomposition, Vec<Homomorphism>)> {
    let comps = components(g)?;
    let gens = standard_automorphism_generators(g, &comps, certificates, budget)?;
    let d = aut_indecomposable_decomposition(g, &comps, &gens)?;
    Ok((d, gens))
}

/// Match per-factor certificates of a central product to its components.
pub fn component_certificates(cp: &CentralProduct, comps: &[Component], per_factor: &[Vec<Homomorphism>]) -> Vec<Vec<Homomorphism>> {
    comps
        .iter()
        .map(|c| {
            let Some(i) = cp.factor_subgroups.iter().position(|s| *s == c.subgroup) else {
                return Vec::new();
            };
            per_factor
                .get(i)
                .into_iter()
                .flatten()
                .filter_map(|cert| {
                    let imgs: Vec<usize> = c
                        .group
                        .generators()
                        .iter()
                        .map(|&s| {
                            let x = cp.embeddings[i].iter().position(|&e| e == c.embedding[s]).unwrap();
                            c.local(cp.embeddings[i][cert.apply(x)]).unwrap()
                        })
                        .collect();
                    Homomorphism::extend(&c.group, &c.group, &imgs).ok()
                })
                .collect()
        })
        .collect()
}

/// Fails with `ComponentInL` if any descriptor lies in `L`.
pub fn ensure_outside_l(descriptors: &[QuasisimpleDescriptor]) -> Result<()> {
    let catalog = Catalog::builtin();
    for d in descriptors {
        if catalog.in_l(d)? {
            return Err(Error::ComponentInL(d.to_string()));
        }
    }
    Ok(())
}

/// An inverting certificate for a component: the identity when its center
/// has exponent at most 2, otherwise a searched automorphism.
pub fn inverting_certificate(comp: &Component, budget: u64) -> Result<Homomorphism> {
    let z = comp.group.center();
    if comp.group.exponent(z.elements()) <= 2 {
        return Ok(Homomorphism::identity(&comp.group));
    }
    crate::group::search_inverting_automorphism(&comp.group, budget)?
        .ok_or_else(|| Error::CertificateRejected(format!("no automorphism of {} inverts its center", comp.descriptor)))
}

/// Assemble an automorphism acting as the given center-inverting
/// certificate on each component, and check it inverts all of `Z(G)`.
pub fn inverting_automorphism(
    g: &Arc<FiniteGroup>,
    comps: &[Component],
    per_component: &[Homomorphism],
) -> Result<Homomorphism> {
    ensure_outside_l(&comps.iter().map(|c| c.descriptor.clone()).collect::<Vec<_>>())?;
    if per_component.len() != comps.len() {
        return Err(Error::GeneratorCount { expected: comps.len(), got: per_component.len() });
    }
    let fac = ComponentFactorization::of_components(g, comps);
    let moved: Vec<_> = comps.iter().zip(per_component).map(|(c, h)| c.transport(h)).collect();
    let maps: Vec<&dyn Fn(usize) -> usize> = moved.iter().map(|f| f as &dyn Fn(usize) -> usize).collect();
    let alpha = componentwise_automorphism(g, &fac, &maps)?;
    for &z in g.center().elements() {
        if g.mul(alpha.apply(z), z) != 0 {
            return Err(Error::CertificateRejected(format!("central element {z} is not inverted")));
        }
    }
    Ok(alpha)
}
