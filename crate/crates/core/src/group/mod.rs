//! Element-indexed finite groups.
//!
//! Every group stores its elements as dense indices `0..order` with the
//! identity at index 0. Small groups carry a full multiplication table;
//! larger ones multiply lazily through whatever structure they were built
//! from (a direct product modulo a central kernel, a permutation group keyed
//! by base images, a subgroup or quotient of another group).

mod classes;
mod hom;
mod search;
mod subgroup;

pub use classes::ConjugacyClasses;
pub use hom::Homomorphism;
pub use search::{
    enumerate_automorphisms, search_inverting_automorphism, search_isomorphism, IsoConstraint,
    DEFAULT_SEARCH_BUDGET,
};
pub use subgroup::Subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Groups at or below this order get a full multiplication table.
pub const TABLE_LIMIT: usize = 5000;

/// Default cap on the number of elements any closure may produce.
pub const DEFAULT_ELEMENT_LIMIT: usize = 2_000_000;

const NO_GEN: u32 = u32::MAX;
const ABSENT: u32 = u32::MAX;

/// Multiplication for a group whose elements are coded as `u32` keys.
pub type CodeMul = Arc<dyn Fn(u32, u32) -> u32 + Send + Sync>;

/// One breadth-first step: `element = pred * generators[gen]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CayleyStep {
    pub pred: u32,
    pub gen: u32,
}

enum MulKind {
    Table {
        table: Vec<u32>,
    },
    Coded {
        codes: Vec<u32>,
        lookup: Vec<u32>,
        mul: CodeMul,
    },
    Product {
        factors: Vec<Arc<FiniteGroup>>,
        strides: Vec<usize>,
        coords: Vec<u32>,
        lookup: Vec<u32>,
    },
    Quotient {
        parent: Arc<FiniteGroup>,
        reps: Vec<u32>,
        coset: Vec<u32>,
    },
    Embedded {
        parent: Arc<FiniteGroup>,
        elems: Vec<u32>,
        local: HashMap<u32, u32>,
    },
    Perm {
        degree: usize,
        perms: Vec<u32>,
        base: Vec<u32>,
        lookup: HashMap<Box<[u32]>, u32>,
    },
    Twisted {
        base: Arc<FiniteGroup>,
        part_j: Vec<u32>,
        part_jc: Vec<u32>,
    },
}

/// A finite group on the index set `0..order`, identity at 0.
pub struct FiniteGroup {
    label: String,
    order: usize,
    kind: MulKind,
    generators: Vec<usize>,
    words: Vec<CayleyStep>,
    bfs_order: Vec<u32>,
    inv: Vec<u32>,
    orders: OnceLock<Vec<u32>>,
    center: OnceLock<Subgroup>,
    derived: OnceLock<Subgroup>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Result of a breadth-first enumeration over arbitrary element keys.
struct Enumeration<K> {
    keys: Vec<K>,
    words: Vec<CayleyStep>,
}

fn enumerate<K, F>(identity: K, gens: &[K], mul: F, limit: usize) -> Result<Enumeration<K>>
where
    K: Clone + Eq + Hash,
    F: Fn(&K, &K) -> K,
{
    let mut index: HashMap<K, u32> = HashMap::new();
    let mut keys = vec![identity.clone()];
    let mut words = vec![CayleyStep { pred: 0, gen: NO_GEN }];
    index.insert(identity, 0);
    let mut head = 0;
    while head < keys.len() {
        for (gi, g) in gens.iter().enumerate() {
            let y = mul(&keys[head], g);
            if !index.contains_key(&y) {
                if keys.len() >= limit {
                    return Err(Error::TooLarge(limit));
                }
                index.insert(y.clone(), keys.len() as u32);
                keys.push(y);
                words.push(CayleyStep { pred: head as u32, gen: gi as u32 });
            }
        }
        head += 1;
    }
    Ok(Enumeration { keys, words })
}

impl FiniteGroup {
    fn assemble(label: String, order: usize, kind: MulKind, generators: Vec<usize>) -> Result<Self> {
        let mut g = FiniteGroup {
            label,
            order,
            kind,
            generators,
            words: Vec::new(),
            bfs_order: Vec::new(),
            inv: Vec::new(),
            orders: OnceLock::new(),
            center: OnceLock::new(),
            derived: OnceLock::new(),
            classes: OnceLock::new(),
        };
        g.compute_words()?;
        g.compute_inverses()?;
        Ok(g)
    }

    /// Breadth-first search over the existing index set; fails if the
    /// generators do not reach every element.
    fn compute_words(&mut self) -> Result<()> {
        if self.generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let n = self.order;
        let mut words = vec![CayleyStep { pred: ABSENT, gen: NO_GEN }; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[0] = true;
        words[0] = CayleyStep { pred: 0, gen: NO_GEN };
        order.push(0u32);
        let mut head = 0;
        while head < order.len() {
            let x = order[head] as usize;
            for (gi, &s) in self.generators.iter().enumerate() {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    words[y] = CayleyStep { pred: x as u32, gen: gi as u32 };
                    order.push(y as u32);
                }
            }
            head += 1;
        }
        if order.len() != n {
            return Err(Error::AxiomViolation(format!(
                "generators reach {} of {} elements",
                order.len(),
                n
            )));
        }
        self.words = words;
        self.bfs_order = order;
        Ok(())
    }

    fn compute_inverses(&mut self) -> Result<()> {
        let n = self.order;
        let gen_inv: Vec<usize> = self
            .generators
            .iter()
            .map(|&s| {
                let mut prev = 0;
                let mut cur = s;
                let mut steps = 0;
                while cur != 0 {
                    prev = cur;
                    cur = self.mul(cur, s);
                    steps += 1;
                    if steps > n {
                        return Err(Error::AxiomViolation(format!("generator {s} has no finite order")));
                    }
                }
                // s^k = 1 with prev = s^(k-1); for s = 1 this leaves prev = 0.
                Ok(if s == 0 { 0 } else { prev })
            })
            .collect::<Result<_>>()?;
        let mut inv = vec![ABSENT; n];
        inv[0] = 0;
        for &x in &self.bfs_order[1..] {
            let step = self.words[x as usize];
            // (p s)^-1 = s^-1 p^-1
            let s_inv = gen_inv[step.gen as usize];
            inv[x as usize] = self.mul(s_inv, inv[step.pred as usize] as usize) as u32;
        }
        for x in 0..n {
            if self.mul(x, inv[x] as usize) != 0 {
                return Err(Error::AxiomViolation(format!("inverse law fails at {x}")));
            }
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::AxiomViolation(format!("identity law fails at {x}")));
            }
        }
        self.inv = inv;
        Ok(())
    }

    fn build_table(order: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<u32> {
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = mul(a, b) as u32;
            }
        }
        table
    }

    /// Group given by an explicit multiplication table (row-major, identity at 0).
    pub fn from_table(label: impl Into<String>, order: usize, table: Vec<u32>, generators: Vec<usize>) -> Result<Self> {
        if table.len() != order * order || table.iter().any(|&v| v as usize >= order) {
            return Err(Error::AxiomViolation("malformed multiplication table".into()));
        }
        if let Some(&bad) = generators.iter().find(|&&s| s >= order) {
            return Err(Error::BadIndex(bad));
        }
        Self::assemble(label.into(), order, MulKind::Table { table }, generators)
    }

    /// Cyclic group of order `n` (element `k` is the `k`-th power of the generator).
    pub fn cyclic(n: usize) -> Result<Self> {
        let table = Self::build_table(n, |a, b| (a + b) % n);
        Self::from_table(format!("Z{n}"), n, table, vec![1 % n])
    }

    /// Closure of coded generators under `mul`. Element indices follow the
    /// breadth-first discovery order; `code_space` bounds the codes. Also
    /// returns the code of every element.
    pub fn from_codes(
        label: impl Into<String>,
        identity: u32,
        gens: &[u32],
        code_space: usize,
        mul: CodeMul,
        limit: usize,
    ) -> Result<(Self, Vec<u32>)> {
        let en = enumerate(identity, gens, |a, b| mul(*a, *b), limit)?;
        let order = en.keys.len();
        let mut lookup = vec![ABSENT; code_space];
        for (i, &c) in en.keys.iter().enumerate() {
            lookup[c as usize] = i as u32;
        }
        let generators = gens.iter().map(|&c| lookup[c as usize] as usize).collect();
        let codes = en.keys.clone();
        let kind = if order <= TABLE_LIMIT {
            let table = Self::build_table(order, |a, b| lookup[mul(en.keys[a], en.keys[b]) as usize] as usize);
            MulKind::Table { table }
        } else {
            MulKind::Coded { codes: en.keys, lookup, mul }
        };
        let mut g = Self::assemble(label.into(), order, kind, generators)?;
        g.words = en.words;
        Ok((g, codes))
    }

    /// The direct product of `factors` modulo the subgroup `kernel`, given as
    /// coordinate tuples. The kernel must be a subgroup of the product; its
    /// centrality is the caller's responsibility. Each element is stored by
    /// its lexicographically least coset representative.
    pub fn product_quotient(
        label: impl Into<String>,
        factors: Vec<Arc<FiniteGroup>>,
        kernel: &[Vec<usize>],
        limit: usize,
    ) -> Result<Self> {
        let k = factors.len();
        if k == 0 {
            return Err(Error::NoGenerators);
        }
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].order();
        }
        let space = strides[0] * factors[0].order();
        if space > limit.saturating_mul(kernel.len().max(1)) {
            return Err(Error::TooLarge(limit));
        }
        let code_of = |t: &[usize]| -> usize { t.iter().zip(&strides).map(|(a, s)| a * s).sum() };
        let mul_tuple = |a: &[usize], b: &[usize]| -> Vec<usize> {
            a.iter().zip(b).zip(&factors).map(|((&x, &y), f)| f.mul(x, y)).collect()
        };
        let canon = |t: Vec<usize>| -> Vec<usize> {
            let mut best = t.clone();
            let mut best_code = code_of(&best);
            for n in kernel {
                let c = mul_tuple(&t, n);
                let cc = code_of(&c);
                if cc < best_code {
                    best_code = cc;
                    best = c;
                }
            }
            best
        };
        let mut gens = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            for &s in f.generators() {
                let mut t = vec![0; k];
                t[i] = s;
                gens.push(canon(t));
            }
        }
        let en = enumerate(vec![0usize; k], &gens, |a, b| canon(mul_tuple(a, b)), limit)?;
        let order = en.keys.len();
        let mut lookup = vec![ABSENT; space];
        let mut coords = Vec::with_capacity(order * k);
        for (i, t) in en.keys.iter().enumerate() {
            coords.extend(t.iter().map(|&x| x as u32));
            lookup[code_of(t)] = i as u32;
            for n in kernel {
                lookup[code_of(&mul_tuple(t, n))] = i as u32;
            }
        }
        let generators: Vec<usize> = gens.iter().map(|t| lookup[code_of(t)] as usize).collect();
        let mut g = Self::assemble(
            label.into(),
            order,
            MulKind::Product { factors, strides, coords, lookup },
            generators,
        )?;
        g.words = en.words;
        Ok(g)
    }

    /// Index of the element with the given factor coordinates (product groups only).
    pub fn product_index(&self, coords: &[usize]) -> Option<usize> {
        match &self.kind {
            MulKind::Product { strides, lookup, factors, .. } => {
                if coords.len() != strides.len() || coords.iter().zip(factors).any(|(&c, f)| c >= f.order()) {
                    return None;
                }
                let code: usize = coords.iter().zip(strides).map(|(a, s)| a * s).sum();
                match lookup[code] {
                    ABSENT => None,
                    v => Some(v as usize),
                }
            }
            _ => None,
        }
    }

    /// Factor coordinates of an element of a product group (canonical representative).
    pub fn product_coords(&self, x: usize) -> Option<Vec<usize>> {
        match &self.kind {
            MulKind::Product { strides, coords, .. } => {
                let k = strides.len();
                Some(coords[x * k..(x + 1) * k].iter().map(|&c| c as usize).collect())
            }
            _ => None,
        }
    }

    /// Quotient by a normal subgroup. Each coset is keyed by its least index.
    pub fn quotient(parent: &Arc<FiniteGroup>, normal: &Subgroup) -> Result<Self> {
        let n = parent.order();
        let mut coset_min = vec![ABSENT; n];
        for x in 0..n {
            if coset_min[x] != ABSENT {
                continue;
            }
            for &m in normal.elements() {
                coset_min[parent.mul(x, m)] = x as u32;
            }
        }
        let gens: Vec<u32> = parent.generators().iter().map(|&s| coset_min[s]).collect();
        let en = enumerate(0u32, &gens, |a, b| coset_min[parent.mul(*a as usize, *b as usize)], n)?;
        let order = en.keys.len();
        let mut local_of_min = HashMap::with_capacity(order);
        for (i, &key) in en.keys.iter().enumerate() {
            local_of_min.insert(key, i as u32);
        }
        let coset: Vec<u32> = coset_min.iter().map(|m| local_of_min[m]).collect();
        let generators = gens.iter().map(|g| local_of_min[g] as usize).collect();
        let reps = en.keys;
        let kind = if order <= TABLE_LIMIT {
            let table = Self::build_table(order, |a, b| coset[parent.mul(reps[a] as usize, reps[b] as usize)] as usize);
            MulKind::Table { table }
        } else {
            MulKind::Quotient { parent: Arc::clone(parent), reps, coset }
        };
        let mut g = Self::assemble(format!("{}/N{}", parent.label(), normal.order()), order, kind, generators)?;
        g.words = en.words;
        Ok(g)
    }

    /// Realize a subgroup as a group in its own right, generated by `gens`
    /// (defaults to the subgroup's generator list). Returns the group and
    /// the embedding `local index -> parent index`.
    pub fn from_subgroup(parent: &Arc<FiniteGroup>, sub: &Subgroup, gens: Option<&[usize]>) -> Result<(Self, Vec<usize>)> {
        let gens: Vec<u32> = gens.unwrap_or(sub.generators()).iter().map(|&g| g as u32).collect();
        let gens = if gens.is_empty() { vec![0] } else { gens };
        let en = enumerate(0u32, &gens, |a, b| parent.mul(*a as usize, *b as usize) as u32, sub.order() + 1)?;
        if en.keys.len() != sub.order() {
            return Err(Error::AxiomViolation(format!(
                "supplied generators produce {} of {} subgroup elements",
                en.keys.len(),
                sub.order()
            )));
        }
        let order = en.keys.len();
        let local: HashMap<u32, u32> = en.keys.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect();
        let generators = gens.iter().map(|g| local[g] as usize).collect();
        let embedding: Vec<usize> = en.keys.iter().map(|&p| p as usize).collect();
        let kind = if order <= TABLE_LIMIT {
            let table =
                Self::build_table(order, |a, b| local[&(parent.mul(embedding[a], embedding[b]) as u32)] as usize);
            MulKind::Table { table }
        } else {
            MulKind::Embedded { parent: Arc::clone(parent), elems: en.keys, local }
        };
        let mut g = Self::assemble(format!("{}<{}>", parent.label(), order), order, kind, generators)?;
        g.words = en.words;
        Ok((g, embedding))
    }

    /// Permutation group on `0..degree` generated by `gens` (composition
    /// left to right: `x^(ab) = (x^a)^b`). Elements are looked up by the
    /// images of a base chosen greedily after enumeration.
    pub fn from_permutations(label: impl Into<String>, degree: usize, gens: &[Vec<u32>], limit: usize) -> Result<Self> {
        let identity: Vec<u32> = (0..degree as u32).collect();
        let en = enumerate(
            identity,
            gens,
            |a, b| a.iter().map(|&x| b[x as usize]).collect::<Vec<u32>>(),
            limit,
        )?;
        let order = en.keys.len();
        let mut base = Vec::new();
        let mut distinct = 1usize;
        for p in 0..degree as u32 {
            if distinct == order {
                break;
            }
            let mut trial = base.clone();
            trial.push(p);
            let count = en
                .keys
                .iter()
                .map(|perm| trial.iter().map(|&b| perm[b as usize]).collect::<Vec<u32>>())
                .collect::<std::collections::HashSet<_>>()
                .len();
            if count > distinct {
                distinct = count;
                base = trial;
            }
        }
        let lookup: HashMap<Box<[u32]>, u32> = en
            .keys
            .iter()
            .enumerate()
            .map(|(i, perm)| (base.iter().map(|&b| perm[b as usize]).collect::<Box<[u32]>>(), i as u32))
            .collect();
        let perms: Vec<u32> = en.keys.iter().flatten().copied().collect();
        let generators = gens
            .iter()
            .map(|g| lookup[&base.iter().map(|&b| g[b as usize]).collect::<Box<[u32]>>()] as usize)
            .collect();
        let mut g =
            Self::assemble(label.into(), order, MulKind::Perm { degree, perms, base, lookup }, generators)?;
        g.words = en.words;
        Ok(g)
    }

    /// The permutation of element `x` of a permutation group.
    pub fn permutation(&self, x: usize) -> Option<&[u32]> {
        match &self.kind {
            MulKind::Perm { degree, perms, .. } => Some(&perms[x * degree..(x + 1) * degree]),
            _ => None,
        }
    }

    /// Index of a permutation in a permutation group, if it is a member.
    pub fn permutation_index(&self, perm: &[u32]) -> Option<usize> {
        match &self.kind {
            MulKind::Perm { base, lookup, degree, .. } => {
                let key: Box<[u32]> = base.iter().map(|&b| perm[b as usize]).collect();
                let idx = *lookup.get(&key)? as usize;
                (&self.permutation(idx)?[..*degree] == perm).then_some(idx)
            }
            _ => None,
        }
    }

    /// Same element set as `base`, multiplied by
    /// `g * h = (g_J h_J)(h_Jc g_Jc)` for the supplied splitting `g = g_J g_Jc`.
    pub fn twisted(base: &Arc<FiniteGroup>, part_j: Vec<u32>, part_jc: Vec<u32>, generators: Vec<usize>, label: impl Into<String>) -> Result<Self> {
        let order = base.order();
        if part_j.len() != order || part_jc.len() != order {
            return Err(Error::AxiomViolation("splitting tables have the wrong length".into()));
        }
        let kind = MulKind::Twisted { base: Arc::clone(base), part_j, part_jc };
        Self::assemble(label.into(), order, kind, generators)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn cayley_step(&self, x: usize) -> CayleyStep {
        self.words[x]
    }

    /// Elements in breadth-first order from the identity.
    pub fn bfs_order(&self) -> &[u32] {
        &self.bfs_order
    }

    pub fn has_table(&self) -> bool {
        matches!(self.kind, MulKind::Table { .. })
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.kind {
            MulKind::Table { table } => table[a * self.order + b] as usize,
            MulKind::Coded { codes, lookup, mul } => lookup[mul(codes[a], codes[b]) as usize] as usize,
            MulKind::Product { factors, strides, coords, lookup } => {
                let k = strides.len();
                let (ca, cb) = (&coords[a * k..(a + 1) * k], &coords[b * k..(b + 1) * k]);
                let mut code = 0;
                for i in 0..k {
                    code += factors[i].mul(ca[i] as usize, cb[i] as usize) * strides[i];
                }
                lookup[code] as usize
            }
            MulKind::Quotient { parent, reps, coset } => coset[parent.mul(reps[a] as usize, reps[b] as usize)] as usize,
            MulKind::Embedded { parent, elems, local } => {
                local[&(parent.mul(elems[a] as usize, elems[b] as usize) as u32)] as usize
            }
            MulKind::Perm { degree, perms, base, lookup } => {
                let (pa, pb) = (&perms[a * degree..], &perms[b * degree..]);
                let key: Box<[u32]> = base.iter().map(|&x| pb[pa[x as usize] as usize]).collect();
                lookup[&key] as usize
            }
            MulKind::Twisted { base, part_j, part_jc } => {
                let left = base.mul(part_j[a] as usize, part_j[b] as usize);
                let right = base.mul(part_jc[b] as usize, part_jc[a] as usize);
                base.mul(left, right)
            }
        }
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn inverse_table(&self) -> &[u32] {
        &self.inv
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let mut acc = 0;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            (0..self.order)
                .map(|x| {
                    let mut k = 1;
                    let mut cur = x;
                    while cur != 0 {
                        cur = self.mul(cur, x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, x: usize) -> u32 {
        self.element_orders()[x]
    }

    pub fn exponent(&self, elements: &[usize]) -> u64 {
        elements.iter().fold(1u64, |acc, &x| lcm(acc, self.element_order(x) as u64))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, (0..self.order).collect(), self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, vec![0], Vec::new())
    }

    /// Check associativity on `samples` random triples drawn from a seeded stream.
    /// Returns the first failing triple.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> Option<(usize, usize, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).find_map(|_| {
            let (a, b, c) = (
                rng.gen_range(0..self.order),
                rng.gen_range(0..self.order),
                rng.gen_range(0..self.order),
            );
            (self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))).then_some((a, b, c))
        })
    }

    /// Whether every element commutes with every generator.
    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Breadth-first queue helper shared by the subgroup routines.
pub(crate) fn bfs_extend(
    g: &FiniteGroup,
    members: &mut fixedbitset::FixedBitSet,
    elements: &mut Vec<usize>,
    queue: &mut VecDeque<usize>,
    gens: &[usize],
) {
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !members.contains(y) {
                members.insert(y);
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
}
