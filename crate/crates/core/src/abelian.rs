//! Finite abelian groups up to isomorphism, stored by primary decomposition.

use std::collections::BTreeMap;
use std::fmt;

use crate::group::{FiniteGroup, Subgroup};

/// Isomorphism type of a finite abelian group: for each prime, the
/// exponents of the cyclic `p`-power factors in decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianInvariants {
    primary: BTreeMap<u64, Vec<u32>>,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Direct product of cyclic groups of the given orders (order 1 entries
    /// are ignored).
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            for (p, e) in factorize(n) {
                primary.entry(p).or_default().push(e);
            }
        }
        for exps in primary.values_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        AbelianInvariants { primary }
    }

    /// Invariants of an abelian subgroup, from counts of elements of
    /// order dividing `p^k`.
    pub fn of_subgroup(g: &FiniteGroup, sub: &Subgroup) -> Self {
        let orders: Vec<u64> = sub.elements().iter().map(|&x| g.element_order(x) as u64).collect();
        let mut primary = BTreeMap::new();
        for (p, _) in factorize(sub.order() as u64) {
            let mut at_least = Vec::new();
            let mut prev = 1u64;
            let mut pk = 1u64;
            loop {
                pk *= p;
                let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
                if count == prev {
                    break;
                }
                let mut ratio = count / prev;
                let mut r = 0;
                while ratio > 1 {
                    ratio /= p;
                    r += 1;
                }
                at_least.push(r);
                prev = count;
            }
            // at_least[k] = number of cyclic factors of exponent > k
            let max = at_least.first().copied().unwrap_or(0);
            let exps: Vec<u32> = (0..max)
                .map(|i| at_least.iter().filter(|&&c| c > i).count() as u32)
                .collect();
            if !exps.is_empty() {
                primary.insert(p, exps);
            }
        }
        AbelianInvariants { primary }
    }

    pub fn order(&self) -> u64 {
        self.primary
            .iter()
            .map(|(&p, exps)| exps.iter().map(|&e| p.pow(e)).product::<u64>())
            .product()
    }

    pub fn is_trivial(&self) -> bool {
        self.primary.is_empty()
    }

    pub fn exponent(&self) -> u64 {
        self.primary.iter().map(|(&p, exps)| p.pow(exps[0])).product()
    }

    /// Whether a group of this type has a subgroup isomorphic to `shape`.
    pub fn contains_shape(&self, shape: &AbelianInvariants) -> bool {
        shape.primary.iter().all(|(p, small)| match self.primary.get(p) {
            Some(big) => small.len() <= big.len() && small.iter().zip(big).all(|(s, b)| s <= b),
            None => small.is_empty(),
        })
    }

    /// Cyclic prime-power orders, sorted increasingly.
    pub fn prime_power_orders(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .primary
            .iter()
            .flat_map(|(&p, exps)| exps.iter().map(move |&e| p.pow(e)))
            .collect();
        v.sort_unstable();
        v
    }

    /// Invariant factors `d_1 | d_2 | ... | d_r`.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let rank = self.primary.values().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![1u64; rank];
        for (&p, exps) in &self.primary {
            for (i, &e) in exps.iter().enumerate() {
                out[rank - 1 - i] *= p.pow(e);
            }
        }
        out
    }

    /// Every isomorphism type of subgroup `U` with `lower <= U <= self`.
    pub fn shapes_between(&self, lower: &AbelianInvariants) -> Vec<AbelianInvariants> {
        let mut per_prime: Vec<(u64, Vec<Vec<u32>>)> = Vec::new();
        for (&p, big) in &self.primary {
            let small = lower.primary.get(&p).cloned().unwrap_or_default();
            let mut options = Vec::new();
            partitions_between(big, &small, 0, &mut Vec::new(), &mut options);
            per_prime.push((p, options));
        }
        let mut out = vec![AbelianInvariants::trivial()];
        for (p, options) in per_prime {
            let mut next = Vec::new();
            for base in &out {
                for opt in &options {
                    let mut a = base.clone();
                    if !opt.is_empty() {
                        a.primary.insert(p, opt.clone());
                    }
                    next.push(a);
                }
            }
            out = next;
        }
        out.retain(|a| a.contains_shape(lower));
        out.sort();
        out
    }
}

/// Partitions `mu` with `lower <= mu <= upper` componentwise (all decreasing).
fn partitions_between(upper: &[u32], lower: &[u32], i: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == upper.len() {
        let trimmed: Vec<u32> = cur.iter().copied().filter(|&e| e > 0).collect();
        out.push(trimmed);
        return;
    }
    let lo = lower.get(i).copied().unwrap_or(0);
    let hi = cur.last().map_or(upper[i], |&prev| prev.min(upper[i]));
    for e in lo..=hi {
        cur.push(e);
        partitions_between(upper, lower, i + 1, cur, out);
        cur.pop();
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.prime_power_orders();
        if parts.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = parts.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", s.join(" x "))
    }
}
