//! Runs the analysis stages on a spec file.

use std::sync::Arc;
use std::time::{Duration, Instant};

use semihol_core::abelian::AbelianInvariants;
use semihol_core::catalog::{h_bounds, Catalog, QuasisimpleDescriptor};
use semihol_core::central::{
    aut_indecomposable_decomposition, central_product, component_certificates, components, inverting_automorphism,
    inverting_certificate, standard_automorphism_generators, AmalgamationSpec, CentralDecomposition, CentralProduct,
    Component,
};
use semihol_core::constructors::{builtin, special_linear, BuiltinName};
use semihol_core::group::DEFAULT_SEARCH_BUDGET;
use semihol_core::holomorph::{
    brute_force_j_oracle, compute_h_set, holomorph_group, identity_suite, inversion_perm, phi_certificate, t_group,
    DecompositionShape, Family, DEFAULT_LATTICE_GUARD, DEFAULT_MAX_HOL_ORDER,
};
use semihol_core::{Error, FiniteGroup, Homomorphism, Result};

use crate::report::*;
use crate::spec::{FactorEntry, GroupSpecFile, Selector};

/// How far to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Build,
    Decompose,
    Holomorph,
    HSet,
    TGroup,
    Full,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub oracle: bool,
    pub guard: Option<usize>,
}

/// A factor ready for the product, with its outer-automorphism certificates.
pub struct Factor {
    pub label: String,
    pub group: Arc<FiniteGroup>,
    pub certificates: Vec<Homomorphism>,
    pub descriptor: QuasisimpleDescriptor,
}

pub fn build_factor(entry: FactorEntry) -> Result<Factor> {
    let from_builtin = |name: BuiltinName| -> Result<Factor> {
        let f = builtin(name)?;
        Ok(Factor {
            label: name.to_string(),
            group: Arc::clone(f.group()),
            certificates: f.certificates()?,
            descriptor: f.descriptor.clone(),
        })
    };
    match entry {
        FactorEntry::Builtin(name) => from_builtin(name),
        FactorEntry::SpecialLinear { dim: 2, q: 5 } => from_builtin(BuiltinName::Sl2_5),
        FactorEntry::SpecialLinear { dim: 2, q: 7 } => from_builtin(BuiltinName::Sl2_7),
        FactorEntry::SpecialLinear { dim, q } => {
            let m = special_linear(dim, q)?;
            let g = m.group;
            if !FiniteGroup::is_quasisimple(&g) {
                return Err(Error::NotQuasisimple(g.label().to_string()));
            }
            let center = AbelianInvariants::of_subgroup(&g, g.center());
            let descriptor = Catalog::builtin().identify((g.order() / g.center().order()) as u64, center)?;
            Ok(Factor { label: g.label().to_string(), group: g, certificates: Vec::new(), descriptor })
        }
    }
}

/// Least element of largest order in the center.
pub fn canonical_central_generator(g: &FiniteGroup) -> usize {
    let z = g.center();
    let top = z.elements().iter().map(|&x| g.element_order(x)).max().unwrap_or(1);
    z.elements().iter().copied().find(|&x| g.element_order(x) == top).unwrap_or(0)
}

pub fn build_product(spec: &GroupSpecFile) -> Result<(Vec<Factor>, CentralProduct)> {
    let factors = spec.factors.iter().map(|&e| build_factor(e)).collect::<Result<Vec<_>>>()?;
    let mut amalgamation = AmalgamationSpec::direct();
    let pick = |i: usize, sel: Selector| {
        let g = &factors[i].group;
        match sel {
            Selector::Power(k) => g.pow(canonical_central_generator(g), k),
            Selector::Element(x) => x,
        }
    };
    for a in &spec.amalgamations {
        amalgamation = amalgamation.identify((a.factors.0, pick(a.factors.0, a.elements.0)), (a.factors.1, pick(a.factors.1, a.elements.1)));
    }
    let groups: Vec<Arc<FiniteGroup>> = factors.iter().map(|f| Arc::clone(&f.group)).collect();
    let product = central_product(&groups, &amalgamation)?;
    Ok((factors, product))
}

fn check(name: &str, failures: Vec<String>, total: usize) -> CheckSection {
    CheckSection {
        name: name.to_string(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() { format!("{total} cases") } else { failures.join("; ") },
    }
}

/// Perfect, pairwise commuting, generating, invariant under every automorphism generator.
fn decomposition_check(g: &FiniteGroup, d: &CentralDecomposition, gens: &[Homomorphism]) -> CheckSection {
    let mut fails = Vec::new();
    for (i, a) in d.factors.iter().enumerate() {
        if g.derived_of(a) != *a {
            fails.push(format!("A_{} not perfect", i + 1));
        }
        for (k, alpha) in gens.iter().enumerate() {
            if a.generators().iter().any(|&x| !a.contains(alpha.apply(x))) {
                fails.push(format!("A_{} moved by automorphism {k}", i + 1));
            }
        }
        for (j, b) in d.factors.iter().enumerate().skip(i + 1) {
            if !g.commute(a, b) {
                fails.push(format!("A_{} and A_{} do not commute", i + 1, j + 1));
            }
        }
    }
    let all = d.factors.iter().fold(g.trivial(), |acc, a| g.join(&acc, a));
    if all.order() != g.order() {
        fails.push(format!("factors generate order {}", all.order()));
    }
    check("decomposition factors are perfect, commuting, Aut-invariant and generate G", fails, d.n)
}

pub struct Outcome {
    pub report: Report,
    pub timings: Vec<(&'static str, Duration)>,
}

pub fn run(spec: &GroupSpecFile, stage: Stage, options: &Options) -> Result<Outcome> {
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str, timings: &mut Vec<(&'static str, Duration)>| {
        timings.push((name, clock.elapsed()));
        clock = Instant::now();
    };

    let (factors, product) = build_product(spec)?;
    let g = Arc::clone(&product.group);
    let mut report = Report {
        schema: SCHEMA,
        group: GroupSection {
            label: g.label().to_string(),
            order: g.order(),
            center_order: g.center().order(),
            amalgamated_order: product.kernel.len(),
            factors: factors
                .iter()
                .map(|f| FactorSection { label: f.label.clone(), order: f.group.order(), descriptor: f.descriptor.to_string() })
                .collect(),
        },
        decomposition: None,
        inverting_automorphism: None,
        hset: None,
        phi_certificates: Vec::new(),
        tgroup: None,
        checks: Vec::new(),
        oracle: None,
        passed: true,
    };
    let seed = spec.analysis.seed;
    let mut assoc = Vec::new();
    if let Some(t) = g.check_associativity(10_000, seed) {
        assoc.push(format!("{t:?}"));
    }
    report.checks.push(check("associativity on sampled triples", assoc, 10_000));
    lap("build", &mut timings);
    if stage == Stage::Build {
        return Ok(finish(report, timings));
    }

    let comps: Vec<Component> = components(&g)?;
    let per_factor: Vec<Vec<Homomorphism>> = factors.iter().map(|f| f.certificates.clone()).collect();
    let certs = component_certificates(&product, &comps, &per_factor);
    let aut_gens = standard_automorphism_generators(&g, &comps, &certs, DEFAULT_SEARCH_BUDGET)?;
    let d = aut_indecomposable_decomposition(&g, &comps, &aut_gens)?;
    let bounds = h_bounds(d.n, d.l)?;
    let catalog = Catalog::builtin();
    report.decomposition = Some(DecompositionSection {
        n: d.n,
        l: d.l,
        m: bounds.m,
        components: comps
            .iter()
            .map(|c| ComponentSection { order: c.group.order(), descriptor: c.descriptor.to_string() })
            .collect(),
        factors: d
            .factors
            .iter()
            .zip(&d.factor_components)
            .zip(&d.descriptors)
            .map(|((a, cs), desc)| AutFactorSection {
                order: a.order(),
                components: cs.iter().map(|k| k + 1).collect(),
                descriptor: desc.to_string(),
                in_l: catalog.in_l(desc).unwrap_or(false),
            })
            .collect(),
        intersections: d
            .intersections
            .iter()
            .map(|(r, s, x)| IntersectionSection {
                r: r + 1,
                s: s + 1,
                order: x.order(),
                invariants: AbelianInvariants::of_subgroup(&g, x).to_string(),
            })
            .collect(),
        automorphism_generators: aut_gens.len(),
    });
    report.checks.push(decomposition_check(&g, &d, &aut_gens));
    lap("decompose", &mut timings);
    if stage == Stage::Decompose {
        return Ok(finish(report, timings));
    }

    let inverting: Vec<Homomorphism> = comps
        .iter()
        .map(|c| inverting_certificate(c, DEFAULT_SEARCH_BUDGET))
        .collect::<Result<_>>()?;
    let alpha = inverting_automorphism(&g, &comps, &inverting)?;
    let inverted = g.center().elements().iter().filter(|&&z| g.mul(alpha.apply(z), z) == 0).count();
    report.inverting_automorphism = Some(InvertingSection {
        identity: alpha.is_identity(),
        inverted_central_elements: inverted,
        center_order: g.center().order(),
    });
    let hol = holomorph_group(&g, &aut_gens)?;
    let family = Family::from_decomposition(&g, &d)?;
    if spec.analysis.identities {
        for c in identity_suite(&family, &hol, &alpha, seed)? {
            report.checks.push(CheckSection { name: c.name, passed: c.passed, detail: c.detail });
        }
    }
    lap("holomorph", &mut timings);
    if stage == Stage::Holomorph {
        return Ok(finish(report, timings));
    }

    let shape = DecompositionShape::from_decomposition(&g, &d);
    let hset = compute_h_set(&shape)?;
    let size = hset.members.len() as u64;
    report.hset = Some(HSetSection {
        h: hset.h,
        size: hset.members.len(),
        members: hset.members.iter().map(|j| j.to_string()).collect(),
        count_bounds: [bounds.min_count, bounds.max_count],
        within_bounds: bounds.min_count <= size && size <= bounds.max_count,
    });
    for &j in &hset.members {
        let c = phi_certificate(&family, &hol, j, &alpha)?;
        report.phi_certificates.push(PhiSection {
            j: j.to_string(),
            conjugates_rho: c.conjugates_rho,
            formula: c.formula,
            normalizes_hol: c.normalizes_hol,
            square_in_hol: c.square_in_hol,
            in_hol: c.in_hol,
            passed: c.passed(family.full()),
        });
    }
    lap("hset", &mut timings);
    if stage == Stage::HSet {
        return Ok(finish(report, timings));
    }

    let mut conjugators: Vec<(String, _)> = hset
        .members
        .iter()
        .map(|&j| Ok((format!("phi_{j}"), family.phi(j, &alpha)?)))
        .collect::<Result<_>>()?;
    conjugators.push(("inv".to_string(), inversion_perm(&g)));
    let t = t_group(&family, &hset.members, &conjugators)?;
    let t_passed = t.passed();
    report.tgroup = Some(TGroupSection {
        order: t.order,
        rank: t.rank,
        invariants: if t.elementary_abelian {
            AbelianInvariants::from_cyclic_orders(&vec![2; t.rank as usize]).to_string()
        } else {
            format!("order {} (not elementary abelian)", t.order)
        },
        elementary_abelian: t.elementary_abelian,
        regular: t.regular,
        squares_trivial: t.squares_trivial,
        actions: t
            .actions
            .iter()
            .map(|(label, a)| ActionSection {
                conjugator: label.clone(),
                images: a.iter().map(|&k| t.members[k].to_string()).collect(),
            })
            .collect(),
    });
    report.checks.push(check(
        "T acts regularly on H as an elementary abelian 2-group",
        if t_passed { vec![] } else { vec!["T group".into()] },
        1,
    ));
    lap("tgroup", &mut timings);
    if stage == Stage::TGroup && !options.oracle {
        return Ok(finish(report, timings));
    }

    if options.oracle || spec.analysis.oracle {
        let guard = options.guard.or(spec.analysis.guard).unwrap_or(DEFAULT_LATTICE_GUARD);
        let o = brute_force_j_oracle(&family, &hol, DEFAULT_MAX_HOL_ORDER, guard)?;
        let matches = o.matches_family(family.n);
        report.oracle = Some(OracleSection {
            hol_order: o.hol_order,
            normal_subgroups: o.normal_subgroups,
            regular_normal: o.regular_normal.iter().map(|j| j.map(|j| j.to_string())).collect(),
            matches_family: matches,
        });
        report.checks.push(check(
            "regular normal subgroups of Hol(G) are exactly the G_J",
            if matches { vec![] } else { vec![format!("{:?}", o.regular_normal)] },
            1,
        ));
        lap("oracle", &mut timings);
    }
    Ok(finish(report, timings))
}

/// Run only the oracle stage on top of the holomorph.
pub fn run_oracle(spec: &GroupSpecFile, options: &Options) -> Result<Outcome> {
    run(spec, Stage::TGroup, &Options { oracle: true, ..options.clone() })
}

fn finish(mut report: Report, timings: Vec<(&'static str, Duration)>) -> Outcome {
    report.passed = report.checks.iter().all(|c| c.passed)
        && report.phi_certificates.iter().all(|p| p.passed)
        && report.hset.as_ref().map_or(true, |h| h.within_bounds)
        && report
            .inverting_automorphism
            .as_ref()
            .map_or(true, |a| a.inverted_central_elements == a.center_order);
    Outcome { report, timings }
}

/// Exit status for an error: 2 for bad input, 4 for guard limits, 3 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidAmalgamation(_)
        | Error::UnsupportedName(_)
        | Error::UnsupportedParameters { .. }
        | Error::UnknownName(_)
        | Error::InvalidCounts { .. } => 2,
        Error::GuardExceeded(_) | Error::TooLarge(_) | Error::SearchBudgetExceeded { .. } => 4,
        _ => 3,
    }
}
