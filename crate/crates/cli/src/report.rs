//! The machine-readable report and its text rendering.

use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub group: GroupSection,
    pub decomposition: Option<DecompositionSection>,
    pub inverting_automorphism: Option<InvertingSection>,
    pub hset: Option<HSetSection>,
    pub phi_certificates: Vec<PhiSection>,
    pub tgroup: Option<TGroupSection>,
    pub checks: Vec<CheckSection>,
    pub oracle: Option<OracleSection>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorSection {
    pub label: String,
    pub order: usize,
    pub descriptor: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSection {
    pub label: String,
    pub order: usize,
    pub center_order: usize,
    pub amalgamated_order: usize,
    pub factors: Vec<FactorSection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSection {
    pub order: usize,
    pub descriptor: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutFactorSection {
    pub order: usize,
    pub components: Vec<usize>,
    pub descriptor: String,
    pub in_l: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionSection {
    pub r: usize,
    pub s: usize,
    pub order: usize,
    pub invariants: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionSection {
    pub n: usize,
    pub l: usize,
    pub m: usize,
    pub components: Vec<ComponentSection>,
    pub factors: Vec<AutFactorSection>,
    pub intersections: Vec<IntersectionSection>,
    pub automorphism_generators: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvertingSection {
    pub identity: bool,
    pub inverted_central_elements: usize,
    pub center_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HSetSection {
    pub h: u32,
    pub size: usize,
    pub members: Vec<String>,
    pub count_bounds: [u64; 2],
    pub within_bounds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiSection {
    pub j: String,
    pub conjugates_rho: bool,
    pub formula: bool,
    pub normalizes_hol: bool,
    pub square_in_hol: bool,
    pub in_hol: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionSection {
    pub conjugator: String,
    pub images: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TGroupSection {
    pub order: usize,
    pub rank: u32,
    pub invariants: String,
    pub elementary_abelian: bool,
    pub regular: bool,
    pub squares_trivial: bool,
    pub actions: Vec<ActionSection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSection {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSection {
    pub hol_order: usize,
    pub normal_subgroups: usize,
    pub regular_normal: Vec<Option<String>>,
    pub matches_family: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let g = &self.group;
        let _ = writeln!(out, "group            {} (order {}, center {})", g.label, g.order, g.center_order);
        for (i, f) in g.factors.iter().enumerate() {
            let _ = writeln!(out, "factor {:<9} {} order {} [{}]", i + 1, f.label, f.order, f.descriptor);
        }
        if let Some(d) = &self.decomposition {
            let _ = writeln!(out, "components       {}", d.components.len());
            let _ = writeln!(out, "n, l, m          {}, {}, {}", d.n, d.l, d.m);
            for (i, a) in d.factors.iter().enumerate() {
                let _ = writeln!(out, "A_{:<14} order {} components {:?} [{}]", i + 1, a.order, a.components, a.descriptor);
            }
        }
        if let Some(a) = &self.inverting_automorphism {
            let _ = writeln!(
                out,
                "inverting aut    {} ({} of {} central elements inverted)",
                if a.identity { "identity" } else { "nontrivial" },
                a.inverted_central_elements,
                a.center_order
            );
        }
        if let Some(h) = &self.hset {
            let _ = writeln!(out, "H-set            h = {}, |H| = {}: {}", h.h, h.size, h.members.join(" "));
        }
        if !self.phi_certificates.is_empty() {
            let ok = self.phi_certificates.iter().filter(|p| p.passed).count();
            let _ = writeln!(out, "phi_J            {ok}/{} certified", self.phi_certificates.len());
        }
        if let Some(t) = &self.tgroup {
            let _ = writeln!(
                out,
                "T                {} (order {}, regular {}, elementary abelian {})",
                t.invariants, t.order, t.regular, t.elementary_abelian
            );
        }
        if let Some(o) = &self.oracle {
            let found: Vec<String> = o.regular_normal.iter().map(|j| j.clone().unwrap_or_else(|| "?".into())).collect();
            let _ = writeln!(
                out,
                "oracle           |Hol| = {}, {} normal subgroups, regular normal: {} (matches family: {})",
                o.hol_order,
                o.normal_subgroups,
                found.join(" "),
                o.matches_family
            );
        }
        for c in &self.checks {
            let _ = writeln!(out, "[{}] {} ({})", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        let _ = writeln!(out, "result           {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}
