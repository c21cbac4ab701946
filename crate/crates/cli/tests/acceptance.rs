//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Every criterion compares the closed-form side against exhaustive
//! enumeration. Criterion 9 has a known, documented failure at f = 8 (the
//! hyperbolic plane over GF(8) has diameter 3, not 4); it is reported as
//! FAIL and the run only aborts if the data deviate from that known profile.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use repgraph::counts::*;
use repgraph::graph::{Extended, GraphJob};
use repgraph::predict::*;
use repgraph::qform::{QuadraticForm, VectorSpace};
use repgraph::{parse_form, DEFAULT_MAX_VERTICES};
use serde_json::Value;

enum Verdict {
    Pass(String),
    /// Expected failure with its reason.
    KnownFail(String),
}

fn cli(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_repgraph"))
        .args(args)
        .env_remove("REPGRAPH_MAX_VERTICES")
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn graph(form: &QuadraticForm, a: u32) -> repgraph::graph::Graph {
    GraphJob::new(form.clone(), a).build().unwrap()
}

fn within(elapsed: Duration, limit_s: f64, what: &str) {
    assert!(
        elapsed.as_secs_f64() < limit_s,
        "{what} took {elapsed:?}, limit {limit_s} s"
    );
}

fn c1_triangles_of_four_squares() -> Verdict {
    let start = Instant::now();
    let args = ["-q", "q=5", "-f", "diag(1,1,1,1)", "-a", "1", "--no-timing"];
    let predicted = cli(&[&["predict"], &args[..]].concat());
    let verified = cli(&[&["verify"], &args[..]].concat());
    within(start.elapsed(), 5.0, "predict + verify");
    for report in [&predicted, &verified] {
        let t = &report["predicted"]["triangles"];
        assert_eq!(t["total"], 250000);
        assert_eq!(t["c2"], 1200);
        assert_eq!(t["c2_diag"], 1200, "diagonal route");
        assert_eq!(t["c2_binary"], 1200, "binary route");
    }
    let census = &verified["bruteforce"]["triangles"];
    assert_eq!(
        (census["total"].as_u64(), census["c2"].as_u64()),
        (Some(250000), Some(1200))
    );
    assert_eq!(verified["matches"]["triangles"], true);
    Verdict::Pass(format!(
        "250000 triangles, c2 = 1200 by both routes and by census, {:.2?}",
        start.elapsed()
    ))
}

fn c2_four_cycles_over_f2() -> Verdict {
    let start = Instant::now();
    let f = field(2);
    let form = parse_form(&f, "H + bin(1,1)").unwrap();
    let census = graph(&form, 1).four_cycle_census();
    let predicted = predict_four_cycles(&form, 1).total();
    within(start.elapsed(), 1.0, "census");
    assert_eq!((census.through_origin, census.total), (225, 900));
    assert_eq!(predicted, Some(900));
    // and once more on the explicit 16-vertex graph
    assert_eq!(triangles_and_squares(&adjacency(&form, 1)).1, 900);
    Verdict::Pass(format!(
        "225 through the origin, 900 total, predictor = census, {:.2?}",
        start.elapsed()
    ))
}

fn c3_diameter_grid() -> Verdict {
    let mut cells = 0;
    for (q, src, form) in grid() {
        for a in grid_values(form.field()) {
            let g = graph(&form, a);
            let d = g.distance_spectrum().diameter;
            let p = predict_diameter(&form, a);
            assert!(
                p.value.contains(d),
                "GF({q}) {src} a={a}: predicted {:?} ({}), oracle {d}",
                p.value,
                p.clause
            );
            if g.vertex_count() <= 300 {
                assert_eq!(
                    d.finite(),
                    diameter_all_roots(&adjacency(&form, a)),
                    "GF({q}) {src} a={a}"
                );
            }
            cells += 1;
        }
    }
    Verdict::Pass(format!("{cells} (form, a) cells, zero mismatches"))
}

fn c4_girth_grid() -> Verdict {
    let (mut cells, mut f2_zero_rows, mut dim1_rows) = (0, 0, 0);
    for (q, src, form) in grid() {
        let f = form.field().clone();
        for a in grid_values(&f) {
            let g = graph(&form, a);
            let girth = g.girth();
            let p = predict_girth(&form, a);
            assert_eq!(p.value, girth, "GF({q}) {src} a={a} ({})", p.clause);
            if g.vertex_count() <= 2_000 {
                assert_eq!(
                    girth.finite(),
                    girth_all_roots(&adjacency(&form, a)),
                    "GF({q}) {src} a={a}"
                );
            }
            if q == 2 && a == 0 {
                // H and H + [1,1] are the exceptions; every other isotropic form has girth 3
                let h = QuadraticForm::hyperbolic(&f);
                let h_aniso = h.orth_sum(&QuadraticForm::binary(&f, 1, 1).unwrap()).unwrap();
                if [h.classify(), h_aniso.classify()].contains(&form.classify()) {
                    assert_eq!(girth, Extended::Finite(4), "GF(2) {src} a=0");
                    f2_zero_rows += 1;
                }
            }
            if form.dim() == 1 && f.degree() == 1 && a != 0 && represents(&form, a) {
                assert_eq!(
                    girth,
                    Extended::Finite(f.characteristic() as u64),
                    "GF({q}) {src} a={a}"
                );
                dim1_rows += 1;
            }
            cells += 1;
        }
    }
    assert_eq!(f2_zero_rows, 2, "the two exceptional F2 rows");
    assert!(dim1_rows > 0);
    Verdict::Pass(format!(
        "{cells} cells, both F2 a=0 rows give 4, {dim1_rows} dim-1 rows give p"
    ))
}

fn c5_preimage_counts() -> Verdict {
    let mut checked = 0;
    for (q, src, form) in grid() {
        if form.space().size().unwrap() > 100_000 {
            continue;
        }
        for a in form.field().elements() {
            assert_eq!(
                count_preimage(&form, a).unwrap(),
                preimage_count(&form, a),
                "GF({q}) {src} a={a}"
            );
            checked += 1;
        }
    }
    Verdict::Pass(format!("{checked} (form, a) counts equal enumeration"))
}

/// Both plane classes over `q`, each also in a sheared coordinate system.
fn plane_forms(q: u64) -> Vec<QuadraticForm> {
    let f = field(q);
    let mut out = Vec::new();
    for src in class_sources(&f, 2) {
        let base = parse_form(&f, &src).unwrap();
        let sheared = base.restrict(&[vec![1, 1].into(), vec![0, 1].into()]).unwrap();
        out.extend([base, sheared]);
    }
    out
}

fn c6_sumset_tables() -> Verdict {
    let mut pairs = 0;
    for &q in &GRID_FIELDS {
        for form in plane_forms(q) {
            let f = form.field().clone();
            let space = form.space();
            let vectors = all_vectors(&form);
            let level = |c: u32| -> Vec<&Vec<u32>> { vectors.iter().filter(|v| form.eval(v) == c).collect() };
            for a in 1..f.order() {
                for b in 1..f.order() {
                    // direct enumeration of u + v
                    let mut hits = vec![0u32; vectors.len()];
                    for u in level(a) {
                        for v in level(b) {
                            hits[space.index(&space.add(u, v)) as usize] += 1;
                        }
                    }
                    let unique_direct = hits.iter().skip(1).filter(|&&h| h == 1).count() as u64;
                    let size_direct = hits.iter().filter(|&&h| h > 0).count() as u64;
                    // aggregation of the solver
                    let (mut unique, mut size) = (0u64, u64::from(a == b));
                    for w in vectors.iter().filter(|w| !VectorSpace::is_zero(w)) {
                        let n = decompose_sum(&form, w, a, b).unwrap().len();
                        unique += u64::from(n == 1);
                        size += u64::from(n > 0);
                    }
                    assert_eq!((unique, size), (unique_direct, size_direct), "GF({q}) a={a} b={b}");
                    assert_eq!(
                        unique_decomposition_count(&form, a, b).unwrap(),
                        unique,
                        "GF({q}) {form:?} a={a} b={b}"
                    );
                    assert_eq!(sumset_size(&form, a, b).unwrap(), size, "GF({q}) {form:?} a={a} b={b}");
                    pairs += 1;
                }
            }
        }
    }
    Verdict::Pass(format!("{pairs} (form, a, b) cases, zero mismatches"))
}

fn c7_four_cycle_table() -> Verdict {
    let mut cells = 0;
    for &q in &GRID_FIELDS {
        let f = field(q);
        for src in class_sources(&f, 2) {
            let form = parse_form(&f, &src).unwrap();
            for a in grid_values(&f) {
                let Some(total) = predict_four_cycles(&form, a).total() else {
                    assert!(!represents(&form, a), "GF({q}) {src} a={a} should be covered");
                    continue;
                };
                let g = graph(&form, a);
                assert_eq!(total, g.four_cycle_census().total, "GF({q}) {src} a={a}");
                if g.vertex_count() <= 200 {
                    assert_eq!(
                        total,
                        triangles_and_squares(&adjacency(&form, a)).1,
                        "GF({q}) {src} a={a}"
                    );
                }
                cells += 1;
            }
        }
    }
    Verdict::Pass(format!("{cells} covered cells, zero mismatches"))
}

fn c8_connectedness_exceptions() -> Verdict {
    for (q, expected) in [(2u64, 2u64), (3, 3), (4, 4)] {
        let g = graph(&QuadraticForm::hyperbolic(&field(q)), 1);
        assert_eq!(g.component_count().unwrap(), expected, "H over GF({q})");
        assert!(!predict_connected(g.form(), 1).value);
    }
    assert_eq!(
        graph(&QuadraticForm::hyperbolic(&field(5)), 1)
            .component_count()
            .unwrap(),
        1
    );
    let mut isolated = 0;
    for (q, src, form) in grid() {
        if form.is_isotropic() {
            continue;
        }
        let g = graph(&form, 0);
        assert_eq!(g.degree(), 0, "GF({q}) {src}");
        assert_eq!(g.component_count().unwrap(), g.vertex_count(), "GF({q}) {src}");
        assert!(!predict_connected(&form, 0).value);
        isolated += 1;
    }
    Verdict::Pass(format!(
        "H over F2/F3/F4 has 2/3/4 components, {isolated} anisotropic a=0 graphs are isolated points"
    ))
}

fn c9_hyperbolic_sweep() -> Verdict {
    let start = Instant::now();
    let report = cli(&["sweep", "-f", "H", "--fields", "5..101", "-a", "1", "--no-timing"]);
    within(start.elapsed(), 120.0, "sweep");
    assert_eq!(report["mismatches"], 0);
    assert_eq!(report["errors"], 0);
    let rows: Vec<(u64, u64)> = report["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["f"].as_u64().unwrap(), r["oracle"].as_u64().unwrap()))
        .collect();
    let expected_orders: Vec<u64> = (5..=101).filter(|&q| repgraph::gf::prime_power(q).is_some()).collect();
    assert_eq!(rows.iter().map(|r| r.0).collect::<Vec<_>>(), expected_orders);
    let claimed = |q: u64| if [5, 7, 8, 9].contains(&q) { 4 } else { 3 };
    let off: Vec<(u64, u64)> = rows.iter().copied().filter(|&(q, d)| d != claimed(q)).collect();
    if off.is_empty() {
        return Verdict::Pass(format!("{} fields, {:.2?}", rows.len(), start.elapsed()));
    }
    // anything beyond the known GF(8) discrepancy aborts the run
    assert_eq!(off, [(8, 3)], "unexpected sweep deviations");
    Verdict::KnownFail(format!(
        "GF(8) has diameter 3, the criterion expects 4; all other {} fields match (4 for 5, 7, 9; 3 for 11..101), {:.2?}",
        rows.len() - 1,
        start.elapsed()
    ))
}

fn c10_property_suites() -> Verdict {
    // value-distance well-definedness
    for (q, src, form) in grid() {
        if form.space().size().unwrap() > 100_000 {
            continue;
        }
        for a in grid_values(form.field()) {
            assert!(graph(&form, a).distance_spectrum().uniform, "GF({q}) {src} a={a}");
        }
    }
    // diagonal perpendicularity on every enumerated 4-cycle
    let mut cycles = 0u64;
    for (q, src, form) in grid() {
        if form.space().size().unwrap() > 3_000 {
            continue;
        }
        let space = form.space();
        for a in grid_values(form.field()) {
            graph(&form, a).for_each_four_cycle(|u, w, v| {
                cycles += 1;
                assert_eq!(form.polar(w, &space.sub(u, v)), 0, "GF({q}) {src} a={a}");
            });
        }
    }
    // (V_a + V_a) ∩ V_0 = {0} in dimension 2
    for &q in &GRID_FIELDS {
        for form in plane_forms(q) {
            let space = form.space();
            let vectors = all_vectors(&form);
            for a in 1..form.field().order() {
                let level: Vec<&Vec<u32>> = vectors.iter().filter(|v| form.eval(v) == a).collect();
                for u in &level {
                    for v in &level {
                        let s = space.add(u, v);
                        assert!(VectorSpace::is_zero(&s) || form.eval(&s) != 0, "GF({q}) a={a}");
                    }
                }
            }
        }
    }
    // isotropic forms are no wider than the hyperbolic plane
    for (q, src, form) in grid() {
        if form.dim() < 2 || !form.is_isotropic() {
            continue;
        }
        for a in grid_values(form.field()) {
            let d = graph(&form, a).distance_spectrum().diameter;
            let h = graph(&QuadraticForm::hyperbolic(form.field()), a)
                .distance_spectrum()
                .diameter;
            assert!(d <= h, "GF({q}) {src} a={a}");
        }
    }
    // V1 + V1 reachability and orthogonal group orders
    for &q in &GRID_FIELDS {
        for form in plane_forms(q) {
            for a in 1..form.field().order() {
                assert_eq!(v1v1_reachable(&form, a).unwrap(), v1v1_hits(&form, a), "GF({q}) a={a}");
            }
        }
    }
    let mut groups = 0;
    for &q in &GRID_FIELDS {
        let f = field(q);
        for n in 1..=3u32 {
            if q.pow(n) > 512 {
                continue;
            }
            for src in class_sources(&f, n as usize) {
                let form = parse_form(&f, &src).unwrap();
                assert_eq!(
                    orthogonal_group_order(&form).unwrap(),
                    isometry_count(&form),
                    "GF({q}) {src}"
                );
                groups += 1;
            }
        }
    }
    Verdict::Pass(format!(
        "all six suites hold; {cycles} four-cycles, {groups} group orders"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("triangle count of <1,1,1,1> over GF(5)", c1_triangles_of_four_squares),
        ("four-cycles of H + [1,1] over GF(2)", c2_four_cycles_over_f2),
        ("diameter table on the grid", c3_diameter_grid),
        ("girth table on the grid", c4_girth_grid),
        ("preimage counts", c5_preimage_counts),
        ("sum-set tables", c6_sumset_tables),
        ("four-cycle table in dimension 2", c7_four_cycle_table),
        ("connectedness exceptions", c8_connectedness_exceptions),
        ("hyperbolic diameter sweep 5..101", c9_hyperbolic_sweep),
        ("property suites", c10_property_suites),
    ];
    assert!(DEFAULT_MAX_VERTICES >= 13u64.pow(4));
    let total = Instant::now();
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Verdict::Pass(detail)) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1} s]", i + 1),
            Ok(Verdict::KnownFail(reason)) => println!("criterion {:>2} FAIL  {name}: {reason} [{secs:.1} s]", i + 1),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: unexpected: {msg} [{secs:.1} s]", i + 1);
                unexpected += 1;
            }
        }
    }
    println!("acceptance finished in {:.1} s", total.elapsed().as_secs_f64());
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
