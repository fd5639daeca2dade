//! The exceptional list of quasisimple groups admitting no automorphism that
//! inverts the center, their critical central subgroups, and the counting
//! bounds for the regular subgroups sharing the holomorph.
//!
//! The rule table ships as `data/catalog_l.toml`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::abelian::AbelianInvariants;
use crate::error::{Error, Result};

const CATALOG_TOML: &str = include_str!("../data/catalog_l.toml");

/// A quasisimple group described by its simple quotient and the abelian
/// invariants of its center. `variant` tells apart non-isomorphic covers
/// with equal centers; no predicate here depends on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuasisimpleDescriptor {
    pub simple: String,
    pub center: AbelianInvariants,
    pub variant: Option<String>,
}

impl QuasisimpleDescriptor {
    pub fn new(simple: &str, center_cyclic_orders: &[u64]) -> Self {
        QuasisimpleDescriptor {
            simple: simple.to_string(),
            center: AbelianInvariants::from_cyclic_orders(center_cyclic_orders),
            variant: None,
        }
    }

    pub fn with_variant(mut self, tag: &str) -> Self {
        self.variant = Some(tag.to_string());
        self
    }
}

impl fmt::Display for QuasisimpleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (center {})", self.simple, self.center)?;
        if let Some(v) = &self.variant {
            write!(f, " [{v}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    Contains,
    Universal,
}

#[derive(Debug, Deserialize)]
struct RawSimple {
    name: String,
    order: Option<u64>,
    multiplier: Vec<u64>,
}

#[derive(Debug, Deserialize)]
struct RawRule {
    simple: String,
    kind: RuleKind,
    #[serde(default)]
    critical: Vec<u64>,
}

#[derive(Debug, Deserialize)]
struct RawCoverCount {
    simple: String,
    center: Vec<u64>,
    count: u64,
}

#[derive(Debug, Deserialize)]
struct RawCatalog {
    version: u32,
    simple: Vec<RawSimple>,
    rule: Vec<RawRule>,
    #[serde(default)]
    cover_count: Vec<RawCoverCount>,
}

/// Critical shape required of a central subgroup, per simple quotient.
#[derive(Debug, Clone)]
pub struct LCriticalRule {
    pub simple: String,
    pub kind: RuleKind,
    pub critical: AbelianInvariants,
}

#[derive(Debug, Clone)]
struct SimpleEntry {
    order: Option<u64>,
    multiplier: AbelianInvariants,
}

#[derive(Debug)]
pub struct Catalog {
    pub version: u32,
    simple: BTreeMap<String, SimpleEntry>,
    rules: Vec<LCriticalRule>,
    cover_counts: BTreeMap<(String, AbelianInvariants), u64>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawCatalog = toml::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        if raw.version != 1 {
            return Err(Error::Catalog(format!("unsupported catalog version {}", raw.version)));
        }
        let simple: BTreeMap<String, SimpleEntry> = raw
            .simple
            .into_iter()
            .map(|s| {
                let multiplier = AbelianInvariants::from_cyclic_orders(&s.multiplier);
                (s.name, SimpleEntry { order: s.order, multiplier })
            })
            .collect();
        let mut rules = Vec::new();
        for r in raw.rule {
            let entry = simple
                .get(&r.simple)
                .ok_or_else(|| Error::Catalog(format!("rule for unknown simple group {}", r.simple)))?;
            let critical = match r.kind {
                RuleKind::Contains => AbelianInvariants::from_cyclic_orders(&r.critical),
                RuleKind::Universal => entry.multiplier.clone(),
            };
            if !entry.multiplier.contains_shape(&critical) {
                return Err(Error::Catalog(format!("critical shape for {} exceeds its multiplier", r.simple)));
            }
            rules.push(LCriticalRule { simple: r.simple, kind: r.kind, critical });
        }
        let cover_counts = raw
            .cover_count
            .into_iter()
            .map(|c| ((c.simple, AbelianInvariants::from_cyclic_orders(&c.center)), c.count))
            .collect();
        Ok(Catalog { version: raw.version, simple, rules, cover_counts })
    }

    /// The catalog shipped with the crate.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::parse(CATALOG_TOML).expect("shipped catalog parses"))
    }

    pub fn rules(&self) -> &[LCriticalRule] {
        &self.rules
    }

    pub fn multiplier(&self, simple: &str) -> Result<&AbelianInvariants> {
        self.simple
            .get(simple)
            .map(|e| &e.multiplier)
            .ok_or_else(|| Error::UnknownName(simple.to_string()))
    }

    fn validate(&self, d: &QuasisimpleDescriptor) -> Result<()> {
        let m = self.multiplier(&d.simple)?;
        if !m.contains_shape(&d.center) {
            return Err(Error::InvalidDescriptor(format!("center {} does not embed in the multiplier {m} of {}", d.center, d.simple)));
        }
        Ok(())
    }

    fn rule_for(&self, simple: &str) -> Option<&LCriticalRule> {
        self.rules.iter().find(|r| r.simple == simple)
    }

    pub fn in_l(&self, d: &QuasisimpleDescriptor) -> Result<bool> {
        self.validate(d)?;
        Ok(match self.rule_for(&d.simple) {
            None => false,
            Some(r) => match r.kind {
                RuleKind::Contains => d.center.contains_shape(&r.critical),
                RuleKind::Universal => d.center == r.critical,
            },
        })
    }

    /// Shape of the critical subgroups of `d`, if `d` lies in the list.
    pub fn critical_shape(&self, d: &QuasisimpleDescriptor) -> Result<Option<&AbelianInvariants>> {
        Ok(if self.in_l(d)? { self.rule_for(&d.simple).map(|r| &r.critical) } else { None })
    }

    /// Whether a central subgroup with the given invariants contains a
    /// critical subgroup of the component `d`.
    pub fn l_critical_check(&self, intersection: &AbelianInvariants, d: &QuasisimpleDescriptor) -> Result<bool> {
        Ok(match self.critical_shape(d)? {
            Some(shape) => intersection.contains_shape(shape),
            None => false,
        })
    }

    /// Members of the list up to isomorphism: (simple quotient, center, number of covers).
    pub fn members(&self) -> Vec<(String, AbelianInvariants, u64)> {
        let mut out = Vec::new();
        for r in &self.rules {
            let m = &self.simple[&r.simple].multiplier;
            let centers = match r.kind {
                RuleKind::Contains => m.shapes_between(&r.critical),
                RuleKind::Universal => vec![m.clone()],
            };
            for c in centers {
                let count = self.cover_counts.get(&(r.simple.clone(), c.clone())).copied().unwrap_or(1);
                out.push((r.simple.clone(), c, count));
            }
        }
        out
    }

    pub fn count_l_up_to_iso(&self) -> u64 {
        self.members().iter().map(|(_, _, c)| c).sum()
    }

    /// Descriptor of a realized quasisimple group from the order of its
    /// simple quotient and its center.
    pub fn identify(&self, simple_order: u64, center: AbelianInvariants) -> Result<QuasisimpleDescriptor> {
        let mut hits = self
            .simple
            .iter()
            .filter(|(_, e)| e.order == Some(simple_order) && e.multiplier.contains_shape(&center));
        match (hits.next(), hits.next()) {
            (Some((name, _)), None) => Ok(QuasisimpleDescriptor { simple: name.clone(), center, variant: None }),
            _ => Err(Error::UnknownName(format!("simple group of order {simple_order}"))),
        }
    }
}

pub fn in_l(d: &QuasisimpleDescriptor) -> Result<bool> {
    Catalog::builtin().in_l(d)
}

pub fn count_l_up_to_iso() -> u64 {
    Catalog::builtin().count_l_up_to_iso()
}

pub fn l_critical_check(intersection: &AbelianInvariants, d: &QuasisimpleDescriptor) -> Result<bool> {
    Catalog::builtin().l_critical_check(intersection, d)
}

/// `m = min(n - l + 1, n)` together with the count bounds `2^m <= |H| <= 2^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HBounds {
    pub m: usize,
    pub n: usize,
    pub min_count: u64,
    pub max_count: u64,
}

pub fn h_bounds(n: usize, l: usize) -> Result<HBounds> {
    if n == 0 || l > n || n >= 64 {
        return Err(Error::InvalidCounts { n, l });
    }
    let m = (n - l + 1).min(n);
    Ok(HBounds { m, n, min_count: 1 << m, max_count: 1 << n })
}

/// Count when all factor centers are amalgamated: `2^m`.
pub fn amalgamated_count(n: usize, l: usize) -> Result<u64> {
    Ok(h_bounds(n, l)?.min_count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(name: &str, c: &[u64]) -> QuasisimpleDescriptor {
        QuasisimpleDescriptor::new(name, c)
    }

    #[test]
    fn in_l_examples() {
        assert!(in_l(&d("PSL3_4", &[2, 2, 3])).unwrap());
        assert!(!in_l(&d("PSL3_4", &[4, 3])).unwrap());
        assert!(!in_l(&d("A5", &[2])).unwrap());
        assert!(in_l(&d("U6_2", &[2, 2, 3])).unwrap());
        assert!(!in_l(&d("U6_2", &[2, 3])).unwrap());
    }

    #[test]
    fn unknown_and_invalid_descriptors() {
        assert_eq!(in_l(&d("M24", &[])), Err(Error::UnknownName("M24".into())));
        assert!(matches!(in_l(&d("A5", &[3])), Err(Error::InvalidDescriptor(_))));
    }

    #[test]
    fn variant_does_not_matter() {
        let a = d("PSL3_4", &[2, 4, 3]);
        let b = a.clone().with_variant("b");
        assert_eq!(in_l(&a).unwrap(), in_l(&b).unwrap());
    }

    #[test]
    fn list_has_nine_members() {
        let cat = Catalog::builtin();
        assert_eq!(cat.rules().len(), 4);
        assert_eq!(count_l_up_to_iso(), 9);
        let universal: Vec<_> = cat.members().into_iter().filter(|(s, _, _)| s == "U6_2" || s == "TWO_E6_2").collect();
        assert_eq!(universal.len(), 2);
        assert!(universal.iter().all(|(_, _, c)| *c == 1));
    }

    #[test]
    fn critical_checks() {
        let cover = d("PSL3_4", &[2, 2, 3]);
        assert!(l_critical_check(&AbelianInvariants::from_cyclic_orders(&[2, 2, 3]), &cover).unwrap());
        assert!(!l_critical_check(&AbelianInvariants::from_cyclic_orders(&[2]), &cover).unwrap());
        let u62 = d("U6_2", &[2, 2, 3]);
        assert!(l_critical_check(&u62.center, &u62).unwrap());
        // not in the list: nothing is critical
        assert!(!l_critical_check(&AbelianInvariants::from_cyclic_orders(&[4, 3]), &d("PSL3_4", &[4, 3])).unwrap());
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(h_bounds(2, 0).unwrap(), HBounds { m: 2, n: 2, min_count: 4, max_count: 4 });
        assert_eq!(amalgamated_count(1, 1).unwrap(), 2);
        let b = h_bounds(3, 2).unwrap();
        assert_eq!((b.m, b.min_count, b.max_count), (2, 4, 8));
        assert_eq!(h_bounds(1, 2), Err(Error::InvalidCounts { n: 1, l: 2 }));
        assert_eq!(h_bounds(0, 0), Err(Error::InvalidCounts { n: 0, l: 0 }));
    }

    #[test]
    fn identify_builtin_components() {
        let cat = Catalog::builtin();
        let z2 = AbelianInvariants::from_cyclic_orders(&[2]);
        assert_eq!(cat.identify(60, z2.clone()).unwrap().simple, "A5");
        assert_eq!(cat.identify(168, z2).unwrap().simple, "PSL2_7");
        assert_eq!(cat.identify(360, AbelianInvariants::from_cyclic_orders(&[3])).unwrap().simple, "A6");
    }

    fn center_strategy() -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(prop::sample::select(vec![1u64, 2, 3, 4]), 0..4)
    }

    proptest! {
        #[test]
        fn in_l_is_monotone_in_the_center(small in center_strategy(), extra in center_strategy()) {
            for name in ["PSL3_4", "U4_3"] {
                let mut big = small.clone();
                big.extend(&extra);
                let ds = d(name, &small);
                let db = d(name, &big);
                // only compare descriptors that embed in the multiplier
                if let (Ok(a), Ok(b)) = (in_l(&ds), in_l(&db)) {
                    prop_assert!(!a || b);
                }
            }
        }

        #[test]
        fn bounds_are_ordered(n in 1usize..20, l in 0usize..20) {
            prop_assume!(l <= n);
            let b = h_bounds(n, l).unwrap();
            prop_assert!(b.min_count <= b.max_count);
            prop_assert!(b.m <= n);
            if l == 0 {
                prop_assert_eq!(b.m, n);
            }
        }
    }
}
