//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use semihol::pipeline::{run, Options, Stage};
use semihol::report::Report;
use semihol::spec::GroupSpecFile;
use semihol_core::abelian::AbelianInvariants;
use semihol_core::catalog::{amalgamated_count, count_l_up_to_iso, h_bounds, in_l, QuasisimpleDescriptor};
use semihol_core::constructors::{builtin, BuiltinName};
use semihol_core::group::{enumerate_automorphisms, search_inverting_automorphism, DEFAULT_SEARCH_BUDGET};

type Outcome = Result<String, String>;

fn spec_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn report(name: &str, oracle: bool) -> Result<(Report, Duration), String> {
    let spec = GroupSpecFile::read(&spec_path(name)).map_err(|e| e.to_string())?;
    let t = Instant::now();
    let out = run(&spec, Stage::Full, &Options { oracle, guard: None }).map_err(|e| e.to_string())?;
    Ok((out.report, t.elapsed()))
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn members(r: &Report) -> Vec<String> {
    r.hset.as_ref().map(|h| h.members.clone()).unwrap_or_default()
}

fn n_of(r: &Report) -> usize {
    r.decomposition.as_ref().map_or(0, |d| d.n)
}

fn t_order(r: &Report) -> (usize, bool) {
    r.tgroup.as_ref().map_or((0, false), |t| (t.order, t.elementary_abelian && t.regular))
}

fn check_passed(r: &Report, name: &str) -> bool {
    r.checks.iter().any(|c| c.name == name && c.passed)
}

fn sl2_5_end_to_end() -> Outcome {
    let (r, elapsed) = report("sl2_5.spec", true)?;
    ensure(r.group.order == 120, format!("order {}", r.group.order))?;
    ensure(n_of(&r) == 1, "n != 1")?;
    ensure(members(&r) == ["{}", "{1}"], format!("H = {:?}", members(&r)))?;
    ensure(t_order(&r) == (2, true), "T is not Z2")?;
    let g = builtin(BuiltinName::Sl2_5).map_err(|e| e.to_string())?;
    let auts = enumerate_automorphisms(g.group(), DEFAULT_SEARCH_BUDGET).map_err(|e| e.to_string())?.len();
    let o = r.oracle.as_ref().ok_or("oracle not run")?;
    ensure(o.hol_order == 120 * auts && auts == 120, format!("|Hol| = {}, |Aut| = {auts}", o.hol_order))?;
    let mut found: Vec<String> = o.regular_normal.iter().flatten().cloned().collect();
    found.sort();
    ensure(
        o.regular_normal.len() == 2 && found == ["{1}", "{}"] && o.matches_family,
        format!("regular normal subgroups {:?}", o.regular_normal),
    )?;
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok(format!("|Hol| = {}, oracle found rho(G) and lambda(G) only, {:.2}s", o.hol_order, elapsed.as_secs_f64()))
}

fn two_factor(name: &str, order: usize, limit: Duration) -> Outcome {
    let (r, elapsed) = report(name, false)?;
    ensure(r.group.order == order, format!("order {}", r.group.order))?;
    ensure(n_of(&r) == 2, format!("n = {}", n_of(&r)))?;
    ensure(members(&r).len() == 4, format!("|H| = {}", members(&r).len()))?;
    ensure(t_order(&r) == (4, true), "T is not elementary abelian of order 4")?;
    for name in ["G_J pairwise distinct", "G_J acts regularly", "G_J is normalized by the holomorph"] {
        ensure(check_passed(&r, name), format!("check failed: {name}"))?;
    }
    ensure(
        r.phi_certificates.len() == 4 && r.phi_certificates.iter().all(|p| p.passed),
        "phi_J certificates incomplete",
    )?;
    ensure(elapsed < limit, format!("took {elapsed:?}"))?;
    Ok(format!("order {order}, n = 2, |H| = 4, T = Z2 x Z2, {:.2}s", elapsed.as_secs_f64()))
}

fn amalgamated() -> Outcome {
    // closure order of the quotient against the product formula
    two_factor("sl2_5_central_sl2_7.spec", 120 * 336 / 2, Duration::from_secs(600))
}

fn direct() -> Outcome {
    two_factor("sl2_5_times_sl2_7.spec", 120 * 336, Duration::from_secs(900))
}

fn square() -> Outcome {
    let (r, _) = report("sl2_5_times_sl2_5.spec", false)?;
    let d = r.decomposition.as_ref().ok_or("no decomposition")?;
    ensure(d.components.len() == 2, format!("{} components", d.components.len()))?;
    ensure(d.n == 1, format!("n = {}", d.n))?;
    ensure(members(&r).len() == 2, format!("|H| = {}", members(&r).len()))?;
    Ok("2 components, n = 1, |H| = 2".into())
}

fn valentiner() -> Outcome {
    let f = builtin(BuiltinName::ThreeA6).map_err(|e| e.to_string())?;
    let g = f.group();
    ensure(g.order() == 1080, format!("order {}", g.order()))?;
    ensure(f.center == AbelianInvariants::from_cyclic_orders(&[3]), format!("center {}", f.center))?;
    let alpha = search_inverting_automorphism(g, DEFAULT_SEARCH_BUDGET)
        .map_err(|e| e.to_string())?
        .ok_or("no inverting automorphism")?;
    ensure(g.center().elements().iter().all(|&z| g.mul(alpha.apply(z), z) == 0), "search result does not invert")?;
    let (r, _) = report("three_a6.spec", false)?;
    let inv = r.inverting_automorphism.as_ref().ok_or("no assembly")?;
    ensure(inv.inverted_central_elements == 3 && !inv.identity, "assembly does not invert all 3 central elements")?;
    ensure(members(&r).len() == 2, "|H| != 2")?;
    ensure(t_order(&r) == (2, true), "T is not Z2")?;
    Ok("order 1080, center Z3, inverting automorphism found and assembled, |H| = 2, T = Z2".into())
}

const SUITE: [&str; 16] = [
    "translations commute",
    "inversion conjugates rho(g) to lambda(g^-1)",
    "inversion is an involution fixing the identity",
    "G_J lies in the holomorph",
    "G_J acts regularly",
    "G_J is normalized by the holomorph",
    "inversion conjugates G_J to G_(J^c)",
    "G_J pairwise distinct",
    "G_I = rho(G)",
    "G_empty = lambda(G)",
    "o_I is the group multiplication",
    "o_empty is the opposite multiplication",
    "o_J is associative",
    "phi_J is an isomorphism (G, o_I) -> (G, o_J)",
    "automorphisms of G respect o_J",
    "phi_J conjugates rho(G) to G_J, normalizes Hol, squares into Hol",
];

fn identity_suites() -> Outcome {
    let mut total = 0;
    for spec in [
        "sl2_5.spec",
        "sl2_5_central_sl2_7.spec",
        "sl2_5_times_sl2_7.spec",
        "sl2_5_times_sl2_5.spec",
        "three_a6.spec",
    ] {
        let (r, _) = report(spec, false)?;
        for name in SUITE {
            ensure(check_passed(&r, name), format!("{spec}: {name}"))?;
        }
        if let Some(c) = r.checks.iter().find(|c| !c.passed) {
            return Err(format!("{spec}: {} ({})", c.name, c.detail));
        }
        total += r.checks.len();
    }
    Ok(format!("5 groups, {total} checks, zero failures"))
}

fn formula_suite() -> Outcome {
    let d = QuasisimpleDescriptor::new;
    let positives = [d("PSL3_4", &[2, 2, 3]), d("U4_3", &[3, 4]), d("U6_2", &[2, 2, 3]), d("TWO_E6_2", &[2, 2, 3])];
    let negatives = [
        d("PSL3_4", &[4, 3]),
        d("PSL3_4", &[2, 3]),
        d("A5", &[2]),
        d("A6", &[3]),
        d("U4_3", &[3, 3]),
        d("U6_2", &[2]),
    ];
    for p in &positives {
        ensure(in_l(p).map_err(|e| e.to_string())?, format!("{p} should be in L"))?;
    }
    for q in &negatives {
        ensure(!in_l(q).map_err(|e| e.to_string())?, format!("{q} should not be in L"))?;
    }
    ensure(count_l_up_to_iso() == 9, format!("|L| = {}", count_l_up_to_iso()))?;
    // m = min(n - l + 1, n), worked by hand
    for (n, l, m) in [(1, 0, 1), (1, 1, 1), (2, 1, 2), (3, 2, 2), (5, 5, 1)] {
        let b = h_bounds(n, l).map_err(|e| e.to_string())?;
        ensure(b.m == m, format!("m({n},{l}) = {}", b.m))?;
        ensure(b.min_count == 1 << m && b.max_count == 1 << n, format!("bounds({n},{l})"))?;
        ensure(amalgamated_count(n, l).map_err(|e| e.to_string())? == 1 << m, format!("count({n},{l})"))?;
    }
    Ok("4 positive and 6 negative descriptors, |L| = 9, 5 (n, l) pairs".into())
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_semihol");
    let dirs = [tempfile::tempdir().map_err(|e| e.to_string())?, tempfile::tempdir().map_err(|e| e.to_string())?];
    let mut outputs = Vec::new();
    for d in &dirs {
        let status = Command::new(exe)
            .args(["report", "--spec"])
            .arg(spec_path("sl2_5_central_sl2_7.spec"))
            .arg("--out")
            .arg(d.path())
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), format!("exit {:?}", status.status.code()))?;
        outputs.push(std::fs::read(d.path().join("report.json")).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], "report.json differs between runs")?;
    Ok(format!("two runs, {} identical bytes", outputs[0].len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 SL(2,5) end to end with regular-subgroup oracle", sl2_5_end_to_end),
        ("2 SL(2,5) o SL(2,7), amalgamated centers", amalgamated),
        ("3 SL(2,5) x SL(2,7), direct product", direct),
        ("4 SL(2,5) x SL(2,5), swapped components", square),
        ("5 3.A6 center inversion", valentiner),
        ("6 identity suites on every built group", identity_suites),
        ("7 descriptor and counting formulas", formula_suite),
        ("8 report.json byte-identical across runs", determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let t = Instant::now();
        match f() {
            Ok(detail) => println!("PASS  criterion {name}: {detail} [{:.1}s]", t.elapsed().as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why} [{:.1}s]", t.elapsed().as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
