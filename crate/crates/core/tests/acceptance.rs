//! Acceptance checks, one line per criterion.
//!
//! Run with `cargo test --release --test acceptance`. Criteria listed in
//! `KNOWN_FAILURES` print FAIL but do not make the process exit nonzero;
//! any other failure does. The README explains each known failure.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hessgkm::classify::{classify, Verdict};
use hessgkm::cohomology::poincare_polynomial;
use hessgkm::graph::{build_hessenberg_graph, interval_graph};
use hessgkm::hessenberg::{
    all_hessenberg_functions, cell_dimension, enumerate_admissible, is_admissible,
    HessenbergFunction,
};
use hessgkm::patterns::HPattern;
use hessgkm::perm::{all_permutations, bruhat_interval, Permutation};
use hessgkm::roots::{
    build_root_system, partition_classes, validate_hessenberg_space, weyl_type_subsets, z_and_w,
    CartanType, HessenbergSpace, RootSet, WeylGroup,
};
use hessgkm::verify::{oracle_bruhat, sweep, Suite, SweepOptions};

mod common;

/// Criteria expected to fail. See the README.
const KNOWN_FAILURES: &[&str] = &["5", "7d"];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

struct Runner {
    unexpected: Vec<String>,
}

impl Runner {
    fn check(&mut self, id: &str, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let in_time = took <= limit;
        let ok = out.ok && in_time;
        let status = if ok { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {id:<3} {title}: {} [{:.3}s, limit {}s]",
            out.detail,
            took.as_secs_f64(),
            limit.as_secs()
        );
        if !in_time {
            line.push_str(" (over time limit)");
        }
        let known = KNOWN_FAILURES.contains(&id);
        if !ok && known {
            line.push_str(" (known failure)");
        }
        if ok && known {
            line.push_str(" (listed as known failure but passed)");
        }
        println!("{line}");
        if !ok && !known {
            self.unexpected.push(id.to_string());
        }
    }
}

fn h(s: &str) -> HessenbergFunction {
    s.parse().unwrap()
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn perm_set(items: &[&str]) -> BTreeSet<Permutation> {
    items.iter().map(|s| p(s)).collect()
}

/// h-window inversions, counted directly.
fn oracle_h_length(w: &Permutation, h: &HessenbergFunction) -> usize {
    let n = w.n();
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=h.at(i) {
            if w.at(i) > w.at(j) {
                count += 1;
            }
        }
    }
    count
}

/// Admissibility straight from the definition.
fn oracle_admissible(w: &Permutation, h: &HessenbergFunction) -> bool {
    let n = w.n();
    (1..=n).all(|j| w.at(j) == n || w.position_of(w.at(j) + 1) <= h.at(j))
}

fn criterion_1() -> Outcome {
    let hf = h("3,3,4,4");
    let got = enumerate_admissible(&hf);
    let want = perm_set(&[
        "1234", "1423", "2134", "2341", "2431", "3241", "3412", "3421", "4123", "4231", "4312",
        "4321",
    ]);
    let got_set: BTreeSet<_> = got.iter().cloned().collect();
    let oracle: BTreeSet<_> = all_permutations(4)
        .into_iter()
        .filter(|w| oracle_admissible(w, &hf))
        .collect();
    let sorted = got.windows(2).all(|x| x[0] < x[1]);
    outcome(
        got_set == want && oracle == want && sorted,
        format!(
            "{} permutations, matches listed set = {}, matches definition = {}",
            got.len(),
            got_set == want,
            oracle == want
        ),
    )
}

fn criterion_2() -> Outcome {
    let r = classify(&p("3214"), &h("3,3,4,4")).unwrap();
    let fixed: BTreeSet<_> = r.fixed_points.iter().cloned().collect();
    let lower: BTreeSet<_> = r.component_lower_bound.iter().cloned().collect();
    let checks = [
        ("admissible=false", !r.admissible),
        ("w~=4312", r.representative.w_tilde == p("4312")),
        ("u=1423", r.representative.u == p("1423")),
        (
            "fixed points {3214,3241}",
            fixed == perm_set(&["3214", "3241"]),
        ),
        (
            "irreducible=no",
            r.verdicts.intersection_irreducible.value == Verdict::No,
        ),
        (
            "closure smooth=yes",
            r.verdicts.hess_schubert_smooth.value == Verdict::Yes,
        ),
        (
            "lower bound within {3214,3412,3241,4213}",
            lower.is_subset(&perm_set(&["3214", "3412", "3241", "4213"])),
        ),
        (
            "lower bound contains {3214,3412}",
            lower.is_superset(&perm_set(&["3214", "3412"])),
        ),
    ];
    summarize(&checks)
}

fn criterion_3() -> Outcome {
    let r = classify(&p("2134"), &h("3,3,4,4")).unwrap();
    let witness = r
        .pattern_witnesses
        .witnesses
        .iter()
        .any(|x| x.pattern == HPattern::P2134 && x.indices == [1, 2, 3, 4]);
    let checks = [
        ("admissible=true", r.admissible),
        ("connected", r.graph_stats.connected),
        ("not regular", !r.graph_stats.regular),
        (
            "intersection smooth=no",
            r.verdicts.intersection_smooth.value == Verdict::No,
        ),
        ("h-2134 at (1,2,3,4)", witness),
        (
            "closure smooth=unknown",
            r.verdicts.hess_schubert_smooth.value == Verdict::Unknown,
        ),
    ];
    summarize(&checks)
}

fn edge_set(g: &hessgkm::graph::GkmGraph) -> BTreeSet<(String, String, (usize, usize))> {
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.vertices()[e.u].to_string(), g.vertices()[e.v].to_string());
            let (x, y) = e.val;
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            (a, b, (x.min(y), x.max(y)))
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let full = build_hessenberg_graph(&h("2,2,3")).unwrap();
    let want_full: BTreeSet<_> = [
        ("123", "213", (1, 2)),
        ("132", "312", (1, 3)),
        ("231", "321", (2, 3)),
    ]
    .into_iter()
    .map(|(a, b, v)| (a.to_string(), b.to_string(), v))
    .collect();
    let g = interval_graph(&h("2,3,3"), &p("213")).unwrap();
    let want_interval: BTreeSet<_> = [
        ("213", "231", (1, 3)),
        ("231", "321", (2, 3)),
        ("312", "321", (1, 2)),
    ]
    .into_iter()
    .map(|(a, b, v)| (a.to_string(), b.to_string(), v))
    .collect();
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    let checks = [
        (
            "h=(2,2,3) has the 3 pictured edges",
            edge_set(&full) == want_full,
        ),
        ("interval has 4 vertices", g.vertex_count() == 4),
        (
            "interval has the 3 pictured edges",
            edge_set(&g) == want_interval,
        ),
        ("degrees (1,1,2,2)", degrees == [1, 1, 2, 2]),
    ];
    summarize(&checks)
}

fn criterion_5() -> Outcome {
    let hf = h("3,4,5,6,6,6");
    let w = p("236451");
    let lw = oracle_h_length(&w, &hf);
    let above: Vec<Permutation> = all_permutations(6)
        .into_iter()
        .filter(|u| *u != w && oracle_bruhat(&w, u).unwrap())
        .collect();
    let interval: BTreeSet<_> = bruhat_interval(&w)
        .into_iter()
        .filter(|u| *u != w)
        .collect();
    let agree = interval == above.iter().cloned().collect();
    let offenders: Vec<String> = above
        .iter()
        .filter(|u| oracle_h_length(u, &hf) <= lw)
        .map(|u| format!("{u} (l_h = {})", oracle_h_length(u, &hf)))
        .collect();
    let dim = cell_dimension(&w, &hf).unwrap();
    let regular = interval_graph(&hf, &w).unwrap().is_regular(dim).regular;
    let mut detail = summarize(&[
        (
            "admissible=true",
            is_admissible(&w, &hf).unwrap() && oracle_admissible(&w, &hf),
        ),
        ("interval matches chain oracle", agree),
        ("l_h(u) > l_h(w) above w", offenders.is_empty()),
        ("interval graph not regular", !regular),
    ]);
    if !offenders.is_empty() {
        detail.detail.push_str(&format!(
            "; l_h(w) = {lw}, counterexamples: {}",
            offenders.join(", ")
        ));
    }
    detail
}

fn format_sets(group: &WeylGroup, items: &[hessgkm::roots::ElementId]) -> String {
    let names: Vec<String> = items.iter().map(|&x| group.display(x)).collect();
    format!("{{{}}}", names.join(", "))
}

/// Type A rows name elements in one-line notation, the others by words.
fn element(group: &WeylGroup, name: &str) -> hessgkm::roots::ElementId {
    match name.parse::<Permutation>() {
        Ok(w) if w.n() == group.root_system().rank() + 1 => group.from_one_line(&w).unwrap(),
        _ => group.parse_element(name).unwrap(),
    }
}

struct TableCase {
    rows_n: &'static [(&'static str, &'static str, &'static str)],
    rows_s: &'static [(&'static str, &'static str, &'static str, &'static str)],
    not_weyl: &'static [&'static str],
}

fn check_tables(group: &WeylGroup, hs: &HessenbergSpace, case: &TableCase) -> Vec<String> {
    let rs = group.root_system();
    let mut bad = Vec::new();
    for (w, n, nm) in case.rows_n {
        let x = element(group, w);
        let inv = group.inversion_set(x);
        let got = (rs.format_set(inv), rs.format_set(inv.intersect(hs.roots())));
        if got != (n.to_string(), nm.to_string()) {
            bad.push(format!("N({w}) = {} / {}", got.0, got.1));
        }
    }
    let classes = partition_classes(group, hs);
    let subsets: BTreeSet<RootSet> = weyl_type_subsets(group, hs).into_iter().collect();
    if subsets.len() != case.rows_s.len() {
        bad.push(format!("{} Weyl-type subsets", subsets.len()));
    }
    for (s, class, z, ws) in case.rows_s {
        let key = rs.parse_root_list(s).unwrap();
        if !subsets.contains(&key) {
            bad.push(format!("{s} missing"));
            continue;
        }
        let (zs, wss) = z_and_w(group, hs, key).unwrap();
        let got = (
            format_sets(group, &classes[&key]),
            group.display(zs),
            group.display(wss),
        );
        if got != (class.to_string(), z.to_string(), ws.to_string()) {
            bad.push(format!("S = {s}: {} {} {}", got.0, got.1, got.2));
        }
    }
    for s in case.not_weyl {
        if subsets.contains(&rs.parse_root_list(s).unwrap()) {
            bad.push(format!("{s} reported as Weyl type"));
        }
    }
    // Partition of W, and each class equal to the left weak interval [z_S, w_S].
    let total: usize = classes.values().map(Vec::len).sum();
    if total != group.len() || classes.keys().copied().collect::<BTreeSet<_>>() != subsets {
        bad.push("classes do not partition W".into());
    }
    for (s, members) in &classes {
        let (z, w) = z_and_w(group, hs, *s).unwrap();
        let interval: Vec<_> = group
            .elements()
            .filter(|&x| group.left_weak_leq(z, x) && group.left_weak_leq(x, w))
            .collect();
        if &interval != members {
            bad.push(format!(
                "class of {} is not a weak interval",
                rs.format_set(*s)
            ));
        }
    }
    bad
}

const A2: TableCase = TableCase {
    rows_n: &[
        ("123", "∅", "∅"),
        ("132", "{α2}", "{α2}"),
        ("213", "{α1}", "{α1}"),
        ("231", "{α2, α1+α2}", "{α2}"),
        ("312", "{α1, α1+α2}", "{α1}"),
        ("321", "{α1, α2, α1+α2}", "{α1, α2}"),
    ],
    // The row for {α1, α2} reads 321: it is the only element whose N(w) ∩ M
    // is {α1, α2} in the N(w) table above.
    rows_s: &[
        ("", "{123}", "123", "123"),
        ("a1", "{213, 312}", "213", "312"),
        ("a2", "{132, 231}", "132", "231"),
        ("a1,a2", "{321}", "321", "321"),
    ],
    not_weyl: &[],
};

const C2: TableCase = TableCase {
    rows_n: &[
        ("e", "∅", "∅"),
        ("s1", "{α1}", "{α1}"),
        ("s2", "{α2}", "{α2}"),
        ("s2s1", "{α1, 2α1+α2}", "{α1}"),
        ("s1s2", "{α2, α1+α2}", "{α2, α1+α2}"),
        ("s1s2s1", "{α1, α1+α2, 2α1+α2}", "{α1, α1+α2}"),
        ("s2s1s2", "{α2, α1+α2, 2α1+α2}", "{α2, α1+α2}"),
        ("s1s2s1s2", "{α1, α2, α1+α2, 2α1+α2}", "{α1, α2, α1+α2}"),
    ],
    rows_s: &[
        ("", "{e}", "e", "e"),
        ("a1", "{s1, s2s1}", "s1", "s2s1"),
        ("a2", "{s2}", "s2", "s2"),
        ("a1,a1+a2", "{s1s2s1}", "s1s2s1", "s1s2s1"),
        ("a2,a1+a2", "{s1s2, s2s1s2}", "s1s2", "s2s1s2"),
        ("a1,a2,a1+a2", "{s1s2s1s2}", "s1s2s1s2", "s1s2s1s2"),
    ],
    not_weyl: &["a1+a2"],
};

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for (t, m, case) in [
        (CartanType::A, "a1,a2", &A2),
        (CartanType::C, "a1,a2,a1+a2", &C2),
    ] {
        let rs = build_root_system(t, 2).unwrap();
        let set = rs.parse_root_list(m).unwrap();
        let hs = validate_hessenberg_space(&rs, set).unwrap();
        let group = WeylGroup::new(rs).unwrap();
        bad.extend(
            check_tables(&group, &hs, case)
                .into_iter()
                .map(|b| format!("{t}2: {b}")),
        );
    }
    if bad.is_empty() {
        outcome(
            true,
            "A2 and C2 tables, partition and weak intervals reproduced",
        )
    } else {
        outcome(false, bad.join("; "))
    }
}

fn run_suite(suite: Suite, n_max: usize) -> (bool, String) {
    let opts = SweepOptions {
        n_max,
        budget: None,
        parallel: false,
    };
    let r = sweep(suite, &opts).unwrap();
    let mut detail = format!("{} cases, {} violations", r.w_count, r.violations.len());
    if let Some(v) = r.violations.first() {
        detail.push_str(&format!(
            "; first: h=({}) w={}: {}",
            v.h.as_deref().unwrap_or("-"),
            v.w.as_deref().unwrap_or("-"),
            v.detail
        ));
    }
    (r.passed() && r.complete, detail)
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    for (hs, want) in [("2,3,3", vec![1, 4, 1]), ("3,3,3", vec![1, 2, 2, 1])] {
        if poincare_polynomial(&h(hs)) != want {
            bad.push(format!("({hs}) gave {:?}", poincare_polynomial(&h(hs))));
        }
    }
    let mut count = 0;
    for n in 1..=5 {
        let fact: usize = (1..=n).product();
        for hf in all_hessenberg_functions(n) {
            count += 1;
            let b = poincare_polynomial(&hf);
            let d: usize = (1..=n).map(|i| hf.at(i) - i).sum();
            let mut oracle = vec![0; d + 1];
            for w in all_permutations(n) {
                oracle[d - oracle_h_length(&w, &hf)] += 1;
            }
            let palindromic = b.iter().eq(b.iter().rev());
            if b != oracle || !palindromic || b.iter().sum::<usize>() != fact {
                bad.push(format!("({hf}) gave {b:?}"));
            }
        }
    }
    if bad.is_empty() {
        outcome(
            true,
            format!("(1,4,1), (1,2,2,1); {count} functions palindromic with sum n!"),
        )
    } else {
        outcome(false, bad.join("; "))
    }
}

fn criterion_10() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut bad = Vec::new();
    for (file, args) in common::GOLDEN {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_hessgkm"))
                .args(*args)
                .output()
                .unwrap()
                .stdout
        };
        let first = run();
        if run() != first {
            bad.push(format!("{file}: reruns differ"));
        }
        match std::fs::read(dir.join(file)) {
            Ok(want) if want == first => {}
            Ok(_) => bad.push(format!("{file}: differs from golden file")),
            Err(e) => bad.push(format!("{file}: {e}")),
        }
    }
    if bad.is_empty() {
        outcome(
            true,
            format!(
                "{} outputs byte-identical across reruns and to golden files",
                common::GOLDEN.len()
            ),
        )
    } else {
        outcome(false, bad.join("; "))
    }
}

fn summarize(checks: &[(&str, bool)]) -> Outcome {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    if failed.is_empty() {
        outcome(
            true,
            checks.iter().map(|c| c.0).collect::<Vec<_>>().join(", "),
        )
    } else {
        outcome(false, format!("failed: {}", failed.join(", ")))
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut r = Runner {
        unexpected: Vec::new(),
    };
    r.check(
        "1",
        "admissible enumeration, h=(3,3,4,4)",
        secs(1),
        criterion_1,
    );
    r.check("2", "classify 3214 in h=(3,3,4,4)", secs(1), criterion_2);
    r.check("3", "classify 2134 in h=(3,3,4,4)", secs(1), criterion_3);
    r.check("4", "graph figures", secs(1), criterion_4);
    r.check("5", "h=(3,4,5,6,6,6), w=236451", secs(5), criterion_5);
    r.check("6", "A2 and C2 root tables", secs(1), criterion_6);

    let sweeps = [
        ("7a", "pattern avoidance iff regularity", Suite::Patterns),
        (
            "7b",
            "w0 shortcut iff full regularity scan",
            Suite::Shortcut,
        ),
        ("7c", "phi injectivity", Suite::PhiInjective),
        ("7d", "phi surjectivity", Suite::PhiSurjective),
        (
            "7e",
            "admissible iff fixed points = [w, w0]",
            Suite::FixedPoints,
        ),
        ("7f", "connectivity criterion", Suite::Connectivity),
        ("7g", "Bruhat criterion iff chain oracle", Suite::Bruhat),
    ];
    let start = Instant::now();
    for (id, title, suite) in sweeps {
        r.check(id, &format!("{title}, n<=5"), secs(60), || {
            let (ok, detail) = run_suite(suite, 5);
            outcome(ok, detail)
        });
    }
    let total = start.elapsed();
    r.check("7", "sweeps at n<=5, total", secs(60), || {
        outcome(
            total <= secs(60),
            format!("{:.3}s single-threaded", total.as_secs_f64()),
        )
    });

    r.check("8", "Poincare polynomials", secs(1), criterion_8);
    r.check("9", "GKM cohomology classes, n<=4", secs(10), || {
        let (ok, detail) = run_suite(Suite::Cohomology, 4);
        outcome(ok, detail)
    });
    r.check("10", "deterministic CLI output", secs(10), criterion_10);

    if r.unexpected.is_empty() {
        println!(
            "acceptance: no unexpected failures (known failures: {})",
            KNOWN_FAILURES.join(", ")
        );
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: unexpected failures: {}",
            r.unexpected.join(", ")
        );
        ExitCode::FAILURE
    }
}
