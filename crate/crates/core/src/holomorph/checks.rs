use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{acts_regularly, hol_membership, inversion_perm, lambda, rho, Family, FactorSet, HolGroup, PermOnG};
use crate::error::Result;
use crate::group::{FiniteGroup, Homomorphism};

const PAIR_SAMPLES: usize = 10_000;

/// Outcome of one verified property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_failures(name: &str, failures: Vec<String>, total: usize) -> Self {
        let detail = if failures.is_empty() {
            format!("{total} cases")
        } else {
            format!("{} of {total} failed: {}", failures.len(), failures.iter().take(4).cloned().collect::<Vec<_>>().join("; "))
        };
        Check { name: name.to_string(), passed: failures.is_empty(), detail }
    }
}

/// The conjugator `φ_J` with the outcome of each claim about it.
#[derive(Clone, Debug)]
pub struct PhiCertificate {
    pub j: FactorSet,
    pub phi: PermOnG,
    /// `ρ(g)^φ` lies in `G_J` for every generator `g` of `G`.
    pub conjugates_rho: bool,
    /// `ρ(g)^φ = ρ(g_J) λ(α(g_{J^c})⁻¹)` as arrays.
    pub formula: bool,
    /// `h^φ ∈ Hol(G)` for every holomorph generator `h`.
    pub normalizes_hol: bool,
    pub square_in_hol: bool,
    pub in_hol: bool,
}

impl PhiCertificate {
    /// All claims hold, and `φ_J` lies in `Hol(G)` exactly when `J = I`.
    pub fn passed(&self, full: FactorSet) -> bool {
        self.conjugates_rho
            && self.formula
            && self.normalizes_hol
            && self.square_in_hol
            && self.in_hol == (self.j == full)
    }
}

pub fn phi_certificate(family: &Family, hol: &HolGroup, j: FactorSet, alpha: &Homomorphism) -> Result<PhiCertificate> {
    let g = &family.group;
    let phi = family.phi(j, alpha)?;
    let s = family.splitting(j);
    let mut conjugates_rho = true;
    let mut formula = true;
    for &x in g.generators() {
        let c = rho(g, x).conjugate_by(&phi);
        conjugates_rho &= family.gj_membership(&c, j);
        let expected = rho(g, s.part_j(x)).then(&lambda(g, g.inv(alpha.apply(s.part_jc(x)))));
        formula &= c == expected;
    }
    let normalizes_hol = hol
        .generators()
        .chain(&hol.lambda_generators)
        .all(|h| hol_membership(g, &h.conjugate_by(&phi)).is_some());
    let square_in_hol = hol_membership(g, &phi.then(&phi)).is_some();
    let in_hol = hol_membership(g, &phi).is_some();
    Ok(PhiCertificate { j, phi, conjugates_rho, formula, normalizes_hol, square_in_hol, in_hol })
}

fn sample_pairs(n: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..PAIR_SAMPLES).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
}

/// Whether `f` is a homomorphism from `source` to `target` on the same
/// index set, by the Cayley-edge check on the generators of `source`.
fn edge_hom(source: &FiniteGroup, target: &FiniteGroup, f: impl Fn(usize) -> usize) -> bool {
    (0..source.order()).all(|x| {
        source
            .generators()
            .iter()
            .all(|&s| f(source.mul(x, s)) == target.mul(f(x), f(s)))
    })
}

/// Every structural identity of the family `{G_J}`, the twisted
/// multiplications and the conjugators `φ_J` built from `alpha`.
pub fn identity_suite(family: &Family, hol: &HolGroup, alpha: &Homomorphism, seed: u64) -> Result<Vec<Check>> {
    let g = &family.group;
    let n = family.n;
    let full = family.full();
    let inv = inversion_perm(g);
    let mut checks = Vec::new();

    let mut fails = Vec::new();
    for (i, r) in hol.rho_generators.iter().enumerate() {
        for (k, l) in hol.lambda_generators.iter().enumerate() {
            if !r.commutes_with(l) {
                fails.push(format!("rho {i} / lambda {k}"));
            }
        }
    }
    checks.push(Check::from_failures("translations commute", fails, hol.rho_generators.len() * hol.lambda_generators.len()));

    let fails: Vec<String> = g
        .generators()
        .iter()
        .filter(|&&x| rho(g, x).conjugate_by(&inv) != lambda(g, g.inv(x)))
        .map(|x| format!("generator {x}"))
        .collect();
    checks.push(Check::from_failures("inversion conjugates rho(g) to lambda(g^-1)", fails, g.generators().len()));
    checks.push(Check::from_failures(
        "inversion is an involution fixing the identity",
        if inv.then(&inv).is_identity() && inv.apply(0) == 0 { vec![] } else { vec!["inv".into()] },
        1,
    ));
    let fails: Vec<String> = hol
        .automorphism_generators
        .iter()
        .enumerate()
        .filter(|(_, a)| a.apply(0) != 0)
        .map(|(i, _)| format!("automorphism {i}"))
        .collect();
    checks.push(Check::from_failures("automorphism generators fix the identity", fails, hol.automorphism_generators.len()));

    let members: Vec<_> = family.subsets().map(|j| family.build_gj(j)).collect();
    let total = members.len();

    let mut fails = Vec::new();
    for m in &members {
        if m.generators.iter().any(|p| hol_membership(g, p).is_none()) {
            fails.push(m.j.to_string());
        }
    }
    checks.push(Check::from_failures("G_J lies in the holomorph", fails, total));

    let fails = members
        .iter()
        .filter(|m| !acts_regularly(g, &m.generators))
        .map(|m| m.j.to_string())
        .collect();
    checks.push(Check::from_failures("G_J acts regularly", fails, total));

    let fails = members
        .iter()
        .filter(|m| {
            !m.generators.iter().all(|p| hol.generators().all(|h| family.gj_membership(&p.conjugate_by(h), m.j)))
        })
        .map(|m| m.j.to_string())
        .collect();
    checks.push(Check::from_failures("G_J is normalized by the holomorph", fails, total));

    let fails = members
        .iter()
        .filter(|m| !m.generators.iter().all(|p| family.gj_membership(&p.conjugate_by(&inv), m.j.complement(n))))
        .map(|m| m.j.to_string())
        .collect();
    checks.push(Check::from_failures("inversion conjugates G_J to G_(J^c)", fails, total));

    let mut fails = Vec::new();
    for a in &members {
        for b in &members {
            if a.j != b.j && a.generators.iter().all(|p| family.gj_membership(p, b.j)) {
                fails.push(format!("{} inside {}", a.j, b.j));
            }
        }
    }
    checks.push(Check::from_failures("G_J pairwise distinct", fails, total * total.saturating_sub(1)));

    let canonical = [
        (full, family.build_gj(full), hol.rho_generators.clone(), "G_I = rho(G)"),
        (FactorSet::EMPTY, family.build_gj(FactorSet::EMPTY), hol.lambda_generators.clone(), "G_empty = lambda(G)"),
    ];
    for (j, _, gens, name) in &canonical {
        let ok = gens.iter().all(|p| family.gj_membership(p, *j));
        checks.push(Check::from_failures(name, if ok { vec![] } else { vec![j.to_string()] }, 1));
    }

    let pairs = sample_pairs(g.order(), seed);
    let circ_full = family.circ_group(full)?;
    let circ_empty = family.circ_group(FactorSet::EMPTY)?;
    let fails: Vec<String> = pairs
        .iter()
        .filter(|&&(x, y)| circ_full.mul(x, y) != g.mul(x, y))
        .map(|(x, y)| format!("({x},{y})"))
        .collect();
    checks.push(Check::from_failures("o_I is the group multiplication", fails, pairs.len()));
    let fails: Vec<String> = pairs
        .iter()
        .filter(|&&(x, y)| circ_empty.mul(x, y) != g.mul(y, x))
        .map(|(x, y)| format!("({x},{y})"))
        .collect();
    checks.push(Check::from_failures("o_empty is the opposite multiplication", fails, pairs.len()));

    let mut assoc = Vec::new();
    let mut iso = Vec::new();
    let mut auts = Vec::new();
    let mut certs = Vec::new();
    for j in family.subsets() {
        let circ = family.circ_group(j)?;
        if let Some(t) = circ.check_associativity(PAIR_SAMPLES, seed) {
            assoc.push(format!("{j}: {t:?}"));
        }
        let phi = family.phi(j, alpha)?;
        if !edge_hom(g, &circ, |x| phi.apply(x)) {
            iso.push(j.to_string());
        }
        for (i, a) in hol.automorphism_generators.iter().enumerate() {
            if !edge_hom(&circ, &circ, |x| a.apply(x)) {
                auts.push(format!("{j}: automorphism {i}"));
            }
        }
        let cert = phi_certificate(family, hol, j, alpha)?;
        if !cert.passed(full) {
            certs.push(format!("{j}: {cert:?}", cert = CertSummary(&cert)));
        }
    }
    checks.push(Check::from_failures("o_J is associative", assoc, total));
    checks.push(Check::from_failures("phi_J is an isomorphism (G, o_I) -> (G, o_J)", iso, total));
    checks.push(Check::from_failures(
        "automorphisms of G respect o_J",
        auts,
        total * hol.automorphism_generators.len(),
    ));
    checks.push(Check::from_failures("phi_J conjugates rho(G) to G_J, normalizes Hol, squares into Hol", certs, total));
    Ok(checks)
}

struct CertSummary<'a>(&'a PhiCertificate);

impl std::fmt::Debug for CertSummary<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = self.0;
        write!(
            f,
            "conjugates={} formula={} normalizes={} square={} in_hol={}",
            c.conjugates_rho, c.formula, c.normalizes_hol, c.square_in_hol, c.in_hol
        )
    }
}
