use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use semihol_core::central::{central_product, components, AmalgamationSpec};
use semihol_core::constructors::{builtin, diagonal_automorphism_certificate, BuiltinName, Matrix};
use semihol_core::group::{search_isomorphism, IsoConstraint, DEFAULT_SEARCH_BUDGET};
use semihol_core::{FiniteGroup, Homomorphism};

fn cached(name: BuiltinName) -> Arc<FiniteGroup> {
    static CACHE: OnceLock<Vec<Arc<FiniteGroup>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| BuiltinName::ALL.iter().map(|&n| Arc::clone(builtin(n).unwrap().group())).collect());
    Arc::clone(&all[BuiltinName::ALL.iter().position(|&n| n == name).unwrap()])
}

fn sl2_5() -> Arc<FiniteGroup> {
    Arc::clone(builtin(BuiltinName::Sl2_5).unwrap().group())
}

fn amalgamated() -> Arc<FiniteGroup> {
    let a = sl2_5();
    let b = Arc::clone(builtin(BuiltinName::Sl2_7).unwrap().group());
    let spec = AmalgamationSpec::direct().identify((0, a.center().least_nonidentity()), (1, b.center().least_nonidentity()));
    central_product(&[a, b], &spec).unwrap().group
}

fn random_pairs_multiplicative(h: &Homomorphism, seed: u64) -> bool {
    let (s, t) = (h.source(), h.target());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..10_000).all(|_| {
        let (x, y) = (rng.gen_range(0..s.order()), rng.gen_range(0..s.order()));
        h.apply(s.mul(x, y)) == t.mul(h.apply(x), h.apply(y))
    })
}

#[test]
fn sl2_5_structure() {
    let f = builtin(BuiltinName::Sl2_5).unwrap();
    let g = f.group();
    assert_eq!(g.center().order(), 2);
    assert_eq!(g.conjugacy_classes().len(), 9);
    assert_eq!(g.derived_subgroup().order(), 120);
    let minus_i = f.matrices.index_of(&Matrix::diagonal(&[4, 4])).unwrap();
    assert_eq!(g.closure(&[minus_i]).order(), 2);
    let orders: Vec<usize> = g.normal_subgroups(1000).unwrap().iter().map(|s| s.order()).collect();
    assert_eq!(orders, vec![1, 2, 120]);
}

#[test]
fn associativity_on_built_groups() {
    let groups = [
        sl2_5(),
        Arc::clone(builtin(BuiltinName::Sl2_7).unwrap().group()),
        Arc::clone(builtin(BuiltinName::ThreeA6).unwrap().group()),
        amalgamated(),
    ];
    for g in &groups {
        assert_eq!(g.check_associativity(10_000, 3), None, "{}", g.label());
        assert!((0..g.order()).all(|x| g.mul(x, g.inv(x)) == 0 && g.mul(0, x) == x && g.mul(x, 0) == x));
    }
}

#[test]
fn extended_homomorphisms_are_multiplicative() {
    let f = builtin(BuiltinName::Sl2_7).unwrap();
    let cert = diagonal_automorphism_certificate(&f).unwrap();
    assert!(random_pairs_multiplicative(&cert, 1));
    let g = amalgamated();
    let inner = Homomorphism::inner(&g, 12_345).unwrap();
    assert!(random_pairs_multiplicative(&inner, 2));
}

#[test]
fn normal_subgroups_are_normal() {
    let a = sl2_5();
    let g = central_product(&[Arc::clone(&a), a], &AmalgamationSpec::direct()).unwrap().group;
    let normals = g.normal_subgroups(1000).unwrap();
    assert!(normals.iter().all(|n| g.is_normal(n)));
    // lattice oracle: the quasisimple normal subgroups are the components
    let mut quasisimple: Vec<usize> = normals
        .iter()
        .filter(|n| n.order() > 1 && n.order() < g.order())
        .filter(|n| {
            let (h, _) = FiniteGroup::from_subgroup(&g, n, None).unwrap();
            FiniteGroup::is_quasisimple(&Arc::new(h))
        })
        .map(|n| n.least_nonidentity())
        .collect();
    quasisimple.sort();
    let mut comps: Vec<usize> = components(&g).unwrap().iter().map(|c| c.subgroup.least_nonidentity()).collect();
    comps.sort();
    assert_eq!(quasisimple, comps);
}

#[test]
fn amalgamated_components_match_lattice() {
    let g = amalgamated();
    let comps = components(&g).unwrap();
    let normals = g.normal_subgroups(1000).unwrap();
    for c in &comps {
        assert!(normals.contains(&c.subgroup));
    }
    assert_eq!(comps.iter().map(|c| c.subgroup.order()).collect::<Vec<_>>(), vec![120, 336]);
}

#[test]
fn isomorphism_search_examples() {
    let a = sl2_5();
    let id = search_isomorphism(&a, &a, &IsoConstraint::none(), DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
    assert!(id.is_identity());
    let b = Arc::clone(builtin(BuiltinName::Sl2_7).unwrap().group());
    assert!(search_isomorphism(&a, &b, &IsoConstraint::none(), DEFAULT_SEARCH_BUDGET).unwrap().is_none());
    let v = Arc::clone(builtin(BuiltinName::ThreeA6).unwrap().group());
    let z = v.center().least_nonidentity();
    let c = IsoConstraint::none().prescribe(z, v.inv(z));
    let found = search_isomorphism(&v, &v, &c, DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
    assert_eq!(found.apply(z), v.inv(z));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_idempotent(gens in proptest::collection::vec(0usize..336, 1..4)) {
        let g = cached(BuiltinName::Sl2_7);
        let once = g.closure(&gens);
        let twice = g.closure(once.elements());
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(g.order() % once.order(), 0);
    }

    #[test]
    fn power_laws(x in 0usize..1080, a in 0u64..50, b in 0u64..50) {
        let g = cached(BuiltinName::ThreeA6);
        prop_assert_eq!(g.mul(g.pow(x, a), g.pow(x, b)), g.pow(x, a + b));
        prop_assert_eq!(g.pow(x, g.element_order(x) as u64), 0);
    }
}
