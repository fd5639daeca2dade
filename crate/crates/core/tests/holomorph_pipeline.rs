use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use semihol_core::central::{
    central_product, component_certificates, components, decompose, inverting_automorphism, inverting_certificate,
    standard_automorphism_generators, aut_indecomposable_decomposition, AmalgamationSpec,
};
use semihol_core::constructors::{builtin, BuiltinName};
use semihol_core::group::{enumerate_automorphisms, DEFAULT_SEARCH_BUDGET};
use semihol_core::holomorph::{
    brute_force_j_oracle, compute_h_set, holomorph_group, identity_suite, inversion_perm, lambda, phi_certificate, rho,
    t_group, DecompositionShape, FactorSet, Family, DEFAULT_LATTICE_GUARD, DEFAULT_MAX_HOL_ORDER,
};
use semihol_core::{FiniteGroup, Homomorphism};

struct Pipeline {
    family: Family,
    hol: semihol_core::holomorph::HolGroup,
    alpha: Homomorphism,
    shape: DecompositionShape,
}

fn pipeline(g: &Arc<FiniteGroup>, certs: &[Vec<Homomorphism>]) -> Pipeline {
    let comps = components(g).unwrap();
    let gens = standard_automorphism_generators(g, &comps, certs, DEFAULT_SEARCH_BUDGET).unwrap();
    let d = aut_indecomposable_decomposition(g, &comps, &gens).unwrap();
    let inv: Vec<_> = comps.iter().map(|c| inverting_certificate(c, DEFAULT_SEARCH_BUDGET).unwrap()).collect();
    let alpha = inverting_automorphism(g, &comps, &inv).unwrap();
    let hol = holomorph_group(g, &gens).unwrap();
    let family = Family::from_decomposition(g, &d).unwrap();
    let shape = DecompositionShape::from_decomposition(g, &d);
    Pipeline { family, hol, alpha, shape }
}

fn assert_suite(p: &Pipeline) {
    for c in identity_suite(&p.family, &p.hol, &p.alpha, 7).unwrap() {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

fn t_report(p: &Pipeline) -> semihol_core::holomorph::TGroupReport {
    let h = compute_h_set(&p.shape).unwrap();
    let mut conj: Vec<(String, _)> = h
        .members
        .iter()
        .map(|&j| (format!("phi_{j}"), p.family.phi(j, &p.alpha).unwrap()))
        .collect();
    conj.push(("inv".into(), inversion_perm(&p.family.group)));
    t_group(&p.family, &h.members, &conj).unwrap()
}

#[test]
fn sl2_5_holomorph_and_oracle() {
    let t = Instant::now();
    let f = builtin(BuiltinName::Sl2_5).unwrap();
    let g = Arc::clone(f.group());
    let p = pipeline(&g, &[f.certificates().unwrap()]);
    assert_eq!(p.family.n, 1);
    assert_eq!(enumerate_automorphisms(&g, DEFAULT_SEARCH_BUDGET).unwrap().len(), 120);
    let report = brute_force_j_oracle(&p.family, &p.hol, DEFAULT_MAX_HOL_ORDER, DEFAULT_LATTICE_GUARD).unwrap();
    assert_eq!(report.hol_order, 14400);
    assert_eq!(report.regular_normal.len(), 2);
    assert!(report.matches_family(1));
    assert_suite(&p);
    let tr = t_report(&p);
    assert!(tr.passed());
    assert_eq!(tr.order, 2);
    eprintln!("sl2_5 pipeline: {:?}", t.elapsed());
}

#[test]
fn amalgamated_pipeline() {
    let t = Instant::now();
    let a = builtin(BuiltinName::Sl2_5).unwrap();
    let b = builtin(BuiltinName::Sl2_7).unwrap();
    let spec = AmalgamationSpec::direct()
        .identify((0, a.group().center().least_nonidentity()), (1, b.group().center().least_nonidentity()));
    let cp = central_product(&[Arc::clone(a.group()), Arc::clone(b.group())], &spec).unwrap();
    let comps = components(&cp.group).unwrap();
    let certs = component_certificates(&cp, &comps, &[a.certificates().unwrap(), b.certificates().unwrap()]);
    let p = pipeline(&cp.group, &certs);
    eprintln!("built: {:?}", t.elapsed());
    assert_eq!(p.family.n, 2);
    let h = compute_h_set(&p.shape).unwrap();
    assert_eq!(h.members.len(), 4);
    for j in p.family.subsets() {
        let c = phi_certificate(&p.family, &p.hol, j, &p.alpha).unwrap();
        assert!(c.passed(p.family.full()), "{j}");
    }
    eprintln!("certificates: {:?}", t.elapsed());
    assert_suite(&p);
    eprintln!("suite: {:?}", t.elapsed());
    let tr = t_report(&p);
    assert!(tr.passed());
    assert_eq!(tr.order, 4);
    eprintln!("amalgamated pipeline: {:?}", t.elapsed());
}

#[test]
fn direct_square_pipeline() {
    let a = builtin(BuiltinName::Sl2_5).unwrap();
    let cp = central_product(&[Arc::clone(a.group()), Arc::clone(a.group())], &AmalgamationSpec::direct()).unwrap();
    let (d, _) = decompose(&cp.group, &[], DEFAULT_SEARCH_BUDGET).unwrap();
    assert_eq!(d.n, 1);
    let shape = DecompositionShape::from_decomposition(&cp.group, &d);
    assert_eq!(compute_h_set(&shape).unwrap().members, vec![FactorSet(0), FactorSet(1)]);
}

#[test]
fn translations_on_random_pairs() {
    let f = builtin(BuiltinName::Sl2_7).unwrap();
    let g = f.group();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let (x, y) = (rng.gen_range(0..g.order()), rng.gen_range(0..g.order()));
        let z = rng.gen_range(0..g.order());
        // pointwise form of rho(x)rho(y) = rho(xy) and lambda(x)lambda(y) = lambda(yx)
        assert_eq!(rho(g, y).apply(rho(g, x).apply(z)), g.mul(z, g.mul(x, y)));
        assert_eq!(lambda(g, y).apply(lambda(g, x).apply(z)), g.mul(g.mul(y, x), z));
    }
    for x in 0..20 {
        for y in 0..20 {
            assert_eq!(rho(g, x).then(&rho(g, y)), rho(g, g.mul(x, y)));
            assert_eq!(lambda(g, x).then(&lambda(g, y)), lambda(g, g.mul(y, x)));
        }
    }
}

#[test]
fn valentiner_pipeline() {
    let f = builtin(BuiltinName::ThreeA6).unwrap();
    let g = Arc::clone(f.group());
    let p = pipeline(&g, &[f.certificates().unwrap()]);
    assert_eq!(p.family.n, 1);
    assert!(!p.alpha.is_identity());
    assert_suite(&p);
    let tr = t_report(&p);
    assert!(tr.passed());
    assert_eq!(tr.order, 2);
}
