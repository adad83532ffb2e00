//! Brute-force oracles and exhaustive sweeps over all Hessenberg functions
//! and permutations of small rank.
//!
//! Each suite returns a [`SweepResult`] whose violation list is empty when
//! every checked statement held. The Bruhat oracle walks length-increasing
//! transposition chains and shares no code with [`crate::perm::bruhat_leq`].

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, Citation, Verdict};
use crate::cohomology::{localized_class_candidate, poincare_polynomial};
use crate::error::{Error, Result};
use crate::graph::{
    edge_set_at, fixed_point_induced_graph, interval_graph, phi_formula, phi_map,
    regularity_via_w0, translation_is_isomorphism,
};
use crate::hessenberg::{
    admissible_representative, all_hessenberg_functions, cell_dimension, h_bruhat_covers,
    h_bruhat_leq, h_length, hess_schubert_fixed_points, is_admissible, same_window_order,
    HessenbergFunction,
};
use crate::patterns::{avoids_all_associated, HPattern};
use crate::perm::{all_permutations, bruhat_interval, bruhat_leq, compose, Permutation};
use crate::roots::{
    all_hessenberg_spaces, build_root_system, partition_classes, weyl_type_subsets, z_and_w,
    CartanType, WeylGroup,
};

/// Largest rank a sweep accepts.
pub const MAX_SWEEP_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Bruhat,
    Representative,
    FixedPoints,
    Connectivity,
    Patterns,
    Shortcut,
    PhiInjective,
    PhiSurjective,
    HBruhat,
    Classify,
    UpperLength,
    Poincare,
    Cohomology,
    Weyl,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Bruhat,
        Suite::Representative,
        Suite::FixedPoints,
        Suite::Connectivity,
        Suite::Patterns,
        Suite::Shortcut,
        Suite::PhiInjective,
        Suite::PhiSurjective,
        Suite::HBruhat,
        Suite::Classify,
        Suite::UpperLength,
        Suite::Poincare,
        Suite::Cohomology,
        Suite::Weyl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bruhat => "bruhat",
            Suite::Representative => "representative",
            Suite::FixedPoints => "fixed-points",
            Suite::Connectivity => "connectivity",
            Suite::Patterns => "patterns",
            Suite::Shortcut => "shortcut",
            Suite::PhiInjective => "phi-injective",
            Suite::PhiSurjective => "phi-surjective",
            Suite::HBruhat => "h-bruhat",
            Suite::Classify => "classify",
            Suite::UpperLength => "upper-length",
            Suite::Poincare => "poincare",
            Suite::Cohomology => "cohomology",
            Suite::Weyl => "weyl",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// `"all"` or a single suite name.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s.trim() == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        s.split(',').map(|x| x.trim().parse()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub h: Option<String>,
    pub w: Option<String>,
    pub detail: String,
}

impl Violation {
    fn new(
        h: Option<&HessenbergFunction>,
        w: Option<&Permutation>,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            h: h.map(ToString::to_string),
            w: w.map(ToString::to_string),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub suite: String,
    pub n_max: usize,
    /// Hessenberg functions (or root systems, for `weyl`) fully processed.
    pub h_count: usize,
    /// Individual cases checked.
    pub w_count: usize,
    pub jobs_total: usize,
    pub jobs_done: usize,
    /// False when the time budget stopped the sweep early.
    pub complete: bool,
    pub violations: Vec<Violation>,
    pub elapsed_seconds: f64,
}

impl SweepResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub n_max: usize,
    pub budget: Option<Duration>,
    pub parallel: bool,
}

impl SweepOptions {
    pub fn new(n_max: usize) -> Self {
        Self {
            n_max,
            budget: None,
            parallel: false,
        }
    }
}

/// `u <= v` by breadth-first search from `u` over `u -> u (i, j)` with
/// `u(i) < u(j)`.
pub fn oracle_bruhat(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::RankMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let target: Vec<u8> = v.entries().to_vec();
    Ok(oracle_upset(u).contains(&target))
}

fn inversions(x: &[u8]) -> usize {
    let mut c = 0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if x[i] > x[j] {
                c += 1;
            }
        }
    }
    c
}

/// Everything reachable from `u` by length-increasing transposition steps.
fn oracle_upset(u: &Permutation) -> HashSet<Vec<u8>> {
    let start: Vec<u8> = u.entries().to_vec();
    let n = start.len();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        let lx = inversions(&x);
        for i in 0..n {
            for j in i + 1..n {
                let mut y = x.clone();
                y.swap(i, j);
                if inversions(&y) > lx && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

#[derive(Default)]
struct JobOut {
    items: usize,
    violations: Vec<Violation>,
    tags: BTreeSet<&'static str>,
}

impl JobOut {
    fn check(
        &mut self,
        ok: bool,
        h: &HessenbergFunction,
        w: &Permutation,
        detail: impl FnOnce() -> String,
    ) {
        self.items += 1;
        if !ok {
            self.violations
                .push(Violation::new(Some(h), Some(w), detail()));
        }
    }

    fn error(&mut self, h: &HessenbergFunction, w: &Permutation, e: Error) {
        self.violations
            .push(Violation::new(Some(h), Some(w), format!("error: {e}")));
    }
}

fn run_jobs<J, F>(
    suite: Suite,
    opts: &SweepOptions,
    jobs: Vec<J>,
    f: F,
) -> (SweepResult, BTreeSet<&'static str>)
where
    J: Sync,
    F: Fn(&J) -> JobOut + Sync,
{
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let run = |j: &J| {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            None
        } else {
            Some(f(j))
        }
    };
    let outs: Vec<Option<JobOut>> = if opts.parallel {
        jobs.par_iter().map(run).collect()
    } else {
        jobs.iter().map(run).collect()
    };
    let mut result = SweepResult {
        suite: suite.name().to_string(),
        n_max: opts.n_max,
        h_count: 0,
        w_count: 0,
        jobs_total: jobs.len(),
        jobs_done: 0,
        complete: true,
        violations: Vec::new(),
        elapsed_seconds: 0.0,
    };
    let mut tags = BTreeSet::new();
    for out in outs {
        match out {
            Some(o) => {
                result.jobs_done += 1;
                result.h_count += 1;
                result.w_count += o.items;
                result.violations.extend(o.violations);
                tags.extend(o.tags);
            }
            None => result.complete = false,
        }
    }
    result.elapsed_seconds = start.elapsed().as_secs_f64();
    (result, tags)
}

fn hessenberg_jobs(n_max: usize) -> Vec<HessenbergFunction> {
    (1..=n_max).flat_map(all_hessenberg_functions).collect()
}

/// Runs one suite. `n_max` above [`MAX_SWEEP_N`] is rejected.
pub fn sweep(suite: Suite, opts: &SweepOptions) -> Result<SweepResult> {
    if opts.n_max > MAX_SWEEP_N {
        return Err(Error::TooLarge {
            n: opts.n_max,
            cap: MAX_SWEEP_N,
        });
    }
    let hs = || hessenberg_jobs(opts.n_max);
    let (mut result, tags) = match suite {
        Suite::Bruhat => {
            let jobs: Vec<Permutation> = (1..=opts.n_max).flat_map(all_permutations).collect();
            run_jobs(suite, opts, jobs, check_bruhat)
        }
        Suite::Representative => run_jobs(suite, opts, hs(), check_representative),
        Suite::FixedPoints => run_jobs(suite, opts, hs(), check_fixed_points),
        Suite::Connectivity => run_jobs(suite, opts, hs(), check_connectivity),
        Suite::Patterns => run_jobs(suite, opts, hs(), check_patterns),
        Suite::Shortcut => run_jobs(suite, opts, hs(), check_shortcut),
        Suite::PhiInjective => run_jobs(suite, opts, hs(), check_phi_injective),
        Suite::PhiSurjective => run_jobs(suite, opts, hs(), check_phi_surjective),
        Suite::HBruhat => run_jobs(suite, opts, hs(), check_h_bruhat),
        Suite::Classify => run_jobs(suite, opts, hs(), check_classify),
        Suite::UpperLength => run_jobs(suite, opts, vec![()], |_| check_upper_length()),
        Suite::Poincare => run_jobs(suite, opts, hs(), check_poincare),
        Suite::Cohomology => {
            let jobs = hessenberg_jobs(opts.n_max.min(4));
            run_jobs(suite, opts, jobs, check_cohomology)
        }
        Suite::Weyl => {
            let jobs = vec![
                (CartanType::A, 1),
                (CartanType::A, 2),
                (CartanType::A, 3),
                (CartanType::B, 2),
                (CartanType::C, 2),
                (CartanType::B, 3),
                (CartanType::C, 3),
                (CartanType::D, 4),
                (CartanType::G, 2),
                (CartanType::F, 4),
            ];
            run_jobs(suite, opts, jobs, |&(t, r)| check_weyl(t, r))
        }
    };
    if suite == Suite::Patterns && result.complete && opts.n_max >= 5 {
        for p in HPattern::ALL {
            if !tags.contains(p.name()) {
                result.violations.push(Violation::new(
                    None,
                    None,
                    format!("{p} never occurs among admissible permutations"),
                ));
            }
        }
    }
    Ok(result)
}

/// Runs several suites in order.
pub fn sweep_all(suites: &[Suite], opts: &SweepOptions) -> Result<Vec<SweepResult>> {
    let start = Instant::now();
    let mut out = Vec::new();
    for &s in suites {
        let remaining = opts.budget.map(|b| b.saturating_sub(start.elapsed()));
        out.push(sweep(
            s,
            &SweepOptions {
                budget: remaining,
                ..*opts
            },
        )?);
    }
    Ok(out)
}

fn check_bruhat(u: &Permutation) -> JobOut {
    let mut out = JobOut::default();
    let up = oracle_upset(u);
    let h = HessenbergFunction::full(u.n());
    for v in all_permutations(u.n()) {
        let fast = bruhat_leq(u, &v).unwrap();
        let slow = up.contains(v.entries());
        out.check(fast == slow, &h, u, || {
            format!("bruhat_leq({u}, {v}) = {fast}, chain oracle says {slow}")
        });
    }
    out
}

fn check_representative(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        match admissible_representative(&w, h) {
            Ok((rep, u)) => {
                let adm = is_admissible(&w, h).unwrap();
                let ok = is_admissible(&rep, h).unwrap()
                    && compose(&u, &rep).unwrap() == w
                    && same_window_order(&w, &rep, h)
                    && bruhat_leq(&w, &rep).unwrap()
                    && (!adm || (rep == w && u.is_identity()));
                out.check(ok, h, &w, || {
                    format!("representative {rep} with u = {u} is inconsistent")
                });
            }
            Err(e) => out.error(h, &w, e),
        }
    }
    out
}

fn check_fixed_points(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        let interval: BTreeSet<Permutation> = bruhat_interval(&w).into_iter().collect();
        let fixed: BTreeSet<Permutation> = hess_schubert_fixed_points(&w, h)
            .unwrap()
            .into_iter()
            .collect();
        out.check(fixed.is_subset(&interval), h, &w, || {
            "fixed points leave [w, w0]".into()
        });
        let adm = is_admissible(&w, h).unwrap();
        out.check(adm == (fixed == interval), h, &w, || {
            format!(
                "admissible = {adm}, but fixed points == [w, w0] is {}",
                fixed == interval
            )
        });
        let sub = fixed_point_induced_graph(h, &w).unwrap();
        let whole = interval_graph(h, &w).unwrap();
        out.check(
            sub.edge_pairs().is_subset(&whole.edge_pairs()),
            h,
            &w,
            || "fixed-point graph has an edge outside the interval graph".into(),
        );
        let (rep, u) = admissible_representative(&w, h).unwrap();
        let rep_graph = fixed_point_induced_graph(h, &rep).unwrap();
        out.check(
            translation_is_isomorphism(&rep_graph, &sub, &u),
            h,
            &w,
            || format!("translation by {u} is not an isomorphism from the graph of {rep}"),
        );
    }
    out
}

fn check_connectivity(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        let adm = is_admissible(&w, h).unwrap();
        if adm || h.is_connected() {
            let g = interval_graph(h, &w).unwrap();
            out.check(g.is_connected(), h, &w, || {
                format!("interval graph disconnected (admissible = {adm})")
            });
        }
    }
    out
}

fn check_patterns(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        if !is_admissible(&w, h).unwrap() {
            continue;
        }
        let a = avoids_all_associated(&w, h).unwrap();
        let regular = interval_graph(h, &w)
            .unwrap()
            .is_regular(cell_dimension(&w, h).unwrap())
            .regular;
        out.tags
            .extend(a.witnesses.iter().map(|x| x.pattern.name()));
        out.check(a.avoids == regular, h, &w, || {
            format!("avoids = {}, regular = {regular}", a.avoids)
        });
    }
    out
}

fn check_shortcut(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        if !is_admissible(&w, h).unwrap() {
            continue;
        }
        let quick = regularity_via_w0(h, &w).unwrap();
        let full = interval_graph(h, &w)
            .unwrap()
            .is_regular(cell_dimension(&w, h).unwrap())
            .regular;
        out.check(quick == full, h, &w, || {
            format!("shortcut = {quick}, full scan = {full}")
        });
    }
    out
}

/// `E_{w,h}(u)` for every `u ∈ [w, w0]`.
fn edge_sets(
    h: &HessenbergFunction,
    w: &Permutation,
) -> BTreeMap<Permutation, BTreeSet<(usize, usize)>> {
    bruhat_interval(w)
        .into_iter()
        .map(|u| {
            let e = edge_set_at(h, w, &u).unwrap();
            (u, e)
        })
        .collect()
}

fn check_phi_injective(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        if !is_admissible(&w, h).unwrap() {
            continue;
        }
        let sets = edge_sets(h, &w);
        for (u, eu) in &sets {
            for &(a, b) in eu {
                if u.at(a) > u.at(b) {
                    continue;
                }
                let v = u.swapped(a, b);
                let ev = &sets[&v];
                let phi = phi_map(h, &w, u, a, b).unwrap();
                let image: BTreeSet<_> = phi.values().copied().collect();
                out.check(
                    image.len() == phi.len() && image.is_subset(ev),
                    h,
                    &w,
                    || format!("phi from {u} to {v} is not an injection into E({v})"),
                );
                out.check(eu.len() <= ev.len(), h, &w, || {
                    format!("deg({u}) = {} > deg({v}) = {}", eu.len(), ev.len())
                });
            }
        }
    }
    out
}

fn check_phi_surjective(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    let n = h.n();
    for w in all_permutations(n) {
        if !is_admissible(&w, h).unwrap() {
            continue;
        }
        let dim = cell_dimension(&w, h).unwrap();
        let ew = edge_set_at(h, &w, &w).unwrap();
        for a in 1..=h.n() {
            for b in a + 1..=h.n() {
                if w.at(a) > w.at(b) {
                    continue;
                }
                let v = w.swapped(a, b);
                let ev = edge_set_at(h, &w, &v).unwrap();
                let kind = if h.in_window(a, b) {
                    "edge"
                } else {
                    "non-edge"
                };
                out.check(ev.len() == dim, h, &w, || {
                    format!("{kind} reflection ({a},{b}): deg({v}) = {} but the cell dimension is {dim}", ev.len())
                });
                let image: BTreeSet<_> = phi_formula(&ew, a, b).into_values().collect();
                out.check(image == ev, h, &w, || {
                    let missing: Vec<String> = ev
                        .difference(&image)
                        .map(|(i, j)| format!("({i},{j})"))
                        .collect();
                    format!(
                        "{kind} reflection ({a},{b}): phi from {w} to {v} misses {}",
                        missing.join(" ")
                    )
                });
            }
        }
    }
    out
}

fn check_h_bruhat(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    let w0 = Permutation::longest(h.n());
    let below_top: BTreeMap<Permutation, bool> = all_permutations(h.n())
        .into_iter()
        .map(|u| {
            let ok = h_bruhat_leq(&u, &w0, h).unwrap();
            (u, ok)
        })
        .collect();
    for w in all_permutations(h.n()) {
        if !is_admissible(&w, h).unwrap() {
            continue;
        }
        // Upward closure of w under h-Bruhat covers.
        let mut reach = BTreeSet::from([w.clone()]);
        let mut stack = vec![w.clone()];
        while let Some(x) = stack.pop() {
            for y in h_bruhat_covers(&x, h) {
                if reach.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        for u in bruhat_interval(&w) {
            out.check(reach.contains(&u) && below_top[&u], h, &w, || {
                format!("{u} is not between w and w0 in h-Bruhat order")
            });
        }
    }
    out
}

fn check_classify(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        let r = match classify(&w, h) {
            Ok(r) => r,
            Err(e) => {
                out.error(h, &w, e);
                continue;
            }
        };
        let v = &r.verdicts;
        if v.intersection_smooth.value == Verdict::Yes {
            let dim = cell_dimension(&w, h).unwrap();
            let all = bruhat_interval(&w)
                .iter()
                .all(|u| edge_set_at(h, &w, u).unwrap().len() == dim);
            out.check(all, h, &w, || {
                "smooth verdict but a degree differs from dim".into()
            });
        }
        if v.intersection_irreducible.value == Verdict::No
            && v.intersection_irreducible
                .by
                .contains(&Citation::FixedPointsAdmissibility)
        {
            let fixed = hess_schubert_fixed_points(&w, h).unwrap();
            out.check(fixed != bruhat_interval(&w), h, &w, || {
                "reducible by fixed points, but the fixed points fill [w, w0]".into()
            });
        }
        if r.admissible {
            let avoids = avoids_all_associated(&w, h).unwrap().avoids;
            out.check(
                (v.hess_schubert_smooth.value == Verdict::Yes) == avoids,
                h,
                &w,
                || {
                    format!(
                        "closure verdict {:?} vs avoidance {avoids}",
                        v.hess_schubert_smooth.value
                    )
                },
            );
        }
    }
    out
}

/// An admissible `w` put forward as having larger h-length at every element
/// strictly above it while its interval graph is not regular. The length
/// part fails at 263451 and 623451.
pub const UPPER_LENGTH_H: [usize; 6] = [3, 4, 5, 6, 6, 6];
pub const UPPER_LENGTH_W: &str = "236451";

fn check_upper_length() -> JobOut {
    let mut out = JobOut::default();
    let h = HessenbergFunction::new(UPPER_LENGTH_H.to_vec()).unwrap();
    let w: Permutation = UPPER_LENGTH_W.parse().unwrap();
    out.check(is_admissible(&w, &h).unwrap(), &h, &w, || {
        "not admissible".into()
    });
    let lw = h_length(&w, &h).unwrap();
    for u in bruhat_interval(&w) {
        if u != w {
            let lu = h_length(&u, &h).unwrap();
            out.check(lu > lw, &h, &w, || {
                format!("h-length of {u} is {lu} <= {lw}")
            });
        }
    }
    let g = interval_graph(&h, &w).unwrap();
    let reg = g.is_regular(cell_dimension(&w, &h).unwrap());
    out.check(!reg.regular, &h, &w, || "interval graph is regular".into());
    out
}

fn check_poincare(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    let b = poincare_polynomial(h);
    let total: usize = (1..=h.n()).product();
    let mut rev = b.clone();
    rev.reverse();
    let w = Permutation::identity(h.n());
    out.check(b == rev && b.iter().sum::<usize>() == total, h, &w, || {
        format!("Betti numbers {b:?} are not palindromic with sum {total}")
    });
    out
}

fn check_cohomology(h: &HessenbergFunction) -> JobOut {
    let mut out = JobOut::default();
    for w in all_permutations(h.n()) {
        let g = interval_graph(h, &w).unwrap();
        let dim = cell_dimension(&w, h).unwrap();
        if !(g.is_regular(dim).regular && g.is_connected()) {
            continue;
        }
        match localized_class_candidate(h, &w) {
            Ok(_) => out.items += 1,
            Err(e) => out.error(h, &w, e),
        }
    }
    out
}

fn check_weyl(t: CartanType, rank: usize) -> JobOut {
    let mut out = JobOut::default();
    let label = format!("{t}{rank}");
    let fail = |out: &mut JobOut, detail: String| {
        out.violations
            .push(Violation::new(None, None, format!("{label}: {detail}")));
    };
    let group = match build_root_system(t, rank).and_then(WeylGroup::new) {
        Ok(g) => g,
        Err(e) => {
            fail(&mut out, e.to_string());
            return out;
        }
    };
    for hs in all_hessenberg_spaces(group.root_system()) {
        out.items += 1;
        let classes = partition_classes(&group, &hs);
        let total: usize = classes.values().map(Vec::len).sum();
        let keys: Vec<_> = classes.keys().copied().collect();
        if total != group.len() || keys != weyl_type_subsets(&group, &hs) {
            fail(
                &mut out,
                format!(
                    "partition fails for M = {}",
                    group.root_system().format_set(hs.roots())
                ),
            );
            continue;
        }
        for (s, members) in &classes {
            match z_and_w(&group, &hs, *s) {
                Ok((z, w)) => {
                    let interval: Vec<_> = group
                        .elements()
                        .filter(|&x| group.left_weak_leq(z, x) && group.left_weak_leq(x, w))
                        .collect();
                    if &interval != members {
                        fail(
                            &mut out,
                            format!(
                                "class of {} is not [z_S, w_S]",
                                group.root_system().format_set(*s)
                            ),
                        );
                    }
                }
                Err(e) => fail(&mut out, e.to_string()),
            }
        }
    }
    out
}
