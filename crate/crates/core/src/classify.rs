//! Verdicts on `Ω_w ∩ Hess(s, h)` and `Ω_{w,h}` assembled from graph data.
//!
//! Every verdict records which criterion produced it. A verdict is `Unknown`
//! whenever none of the implemented criteria decides the question; nothing
//! is extrapolated.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{self, interval_graph, GkmGraph};
use crate::hessenberg::{
    self, admissible_representative, cell_dimension, h_length, is_admissible, HessenbergFunction,
};
use crate::patterns::{avoids_all_associated, Witness};
use crate::perm::{self, bruhat_interval, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Criterion tags attached to verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// Regular GKM graph of the intersection iff the intersection is smooth;
    /// regular and connected forces it to equal the cell closure.
    RegularIffSmooth,
    /// Regular and connected graph implies the intersection is irreducible.
    RegularConnectedIrreducible,
    /// Regular graph at the admissible representative implies `Ω_{w,h}` smooth.
    RepresentativeRegularSmooth,
    /// `Ω_{w,h}` is smooth at every fixed point `w t`, `t` a transposition.
    ReflectionPointsSmooth,
    /// Degree equal to the cell dimension at `u` gives smoothness at every
    /// `v` with `w <=_h v <=_h u`.
    DegreeChainSmooth,
    /// `w` admissible iff `Ω_{w,h}^T = [w, w0]`; otherwise the intersection
    /// has extra components.
    FixedPointsAdmissibility,
    /// Connected `Hess(s, h)` and non-admissible `w` give a reducible
    /// intersection.
    ConnectedHessNonAdmissible,
    /// Admissible `w` or connected `Hess(s, h)` gives a connected graph.
    ConnectivityCriterion,
    /// Regularity of the admissible graph iff the seven patterns are avoided.
    PatternAvoidance,
    /// A disconnected variety is reducible.
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub value: Verdict,
    pub by: Vec<Citation>,
}

impl Claim {
    fn new(value: Verdict, by: impl IntoIterator<Item = Citation>) -> Self {
        Self {
            value,
            by: by.into_iter().collect(),
        }
    }

    fn unknown() -> Self {
        Self::new(Verdict::Unknown, [])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representative {
    pub w_tilde: Permutation,
    pub u: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub regular: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub violating_vertex: Option<Permutation>,
}

impl GraphStats {
    fn of(g: &GkmGraph, expected: usize) -> Self {
        let degrees = g.degrees();
        let reg = g.is_regular(expected);
        Self {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            connected: g.is_connected(),
            regular: reg.regular,
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            violating_vertex: reg.violating,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub intersection_smooth: Claim,
    pub intersection_irreducible: Claim,
    pub intersection_equals_closure: Claim,
    pub hess_schubert_smooth: Claim,
    pub smooth_fixed_points: Vec<Permutation>,
    pub reducible_reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    /// The admissible element the scan ran on (`w̃`).
    pub subject: Permutation,
    pub avoids: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub h: HessenbergFunction,
    pub w: Permutation,
    pub admissible: bool,
    pub hess_connected: bool,
    pub representative: Representative,
    pub h_length: usize,
    pub cell_dimension: usize,
    pub interval_size: usize,
    pub fixed_points: Vec<Permutation>,
    pub graph_stats: GraphStats,
    pub representative_graph_stats: GraphStats,
    pub verdicts: Verdicts,
    pub pattern_witnesses: PatternReport,
    pub component_lower_bound: Vec<Permutation>,
    pub citations: Vec<Citation>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let list = |v: &[Permutation]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let claim = |c: &Claim| {
            let value = match c.value {
                Verdict::Yes => "yes",
                Verdict::No => "no",
                Verdict::Unknown => "unknown",
            };
            if c.by.is_empty() {
                value.to_string()
            } else {
                let tags: Vec<String> =
                    c.by.iter()
                        .map(|t| {
                            serde_json::to_value(t)
                                .unwrap()
                                .as_str()
                                .unwrap()
                                .to_string()
                        })
                        .collect();
                format!("{value} [{}]", tags.join(", "))
            }
        };
        let mut s = String::new();
        let _ = writeln!(s, "h = ({}), w = {}", self.h, self.w);
        let _ = writeln!(s, "admissible: {}", self.admissible);
        let _ = writeln!(
            s,
            "representative: w~ = {}, u = {}",
            self.representative.w_tilde, self.representative.u
        );
        let _ = writeln!(s, "h-length: {}", self.h_length);
        let _ = writeln!(s, "cell dimension: {}", self.cell_dimension);
        let _ = writeln!(s, "interval size: {}", self.interval_size);
        let _ = writeln!(
            s,
            "fixed points of the closure: {{{}}}",
            list(&self.fixed_points)
        );
        let g = &self.graph_stats;
        let _ = writeln!(
            s,
            "interval graph: {} vertices, {} edges, connected = {}, regular = {}, degrees {}..{}",
            g.vertices, g.edges, g.connected, g.regular, g.min_degree, g.max_degree
        );
        if let Some(v) = &g.violating_vertex {
            let _ = writeln!(s, "  first vertex off the cell dimension: {v}");
        }
        let v = &self.verdicts;
        let _ = writeln!(s, "intersection smooth: {}", claim(&v.intersection_smooth));
        let _ = writeln!(
            s,
            "intersection irreducible: {}",
            claim(&v.intersection_irreducible)
        );
        let _ = writeln!(
            s,
            "intersection equals closure: {}",
            claim(&v.intersection_equals_closure)
        );
        let _ = writeln!(s, "closure smooth: {}", claim(&v.hess_schubert_smooth));
        let _ = writeln!(
            s,
            "smooth fixed points: {{{}}}",
            list(&v.smooth_fixed_points)
        );
        if let Some(r) = &v.reducible_reason {
            let _ = writeln!(s, "reducible because: {r}");
        }
        let p = &self.pattern_witnesses;
        if p.witnesses.is_empty() {
            let _ = writeln!(s, "patterns ({}): all avoided", p.subject);
        } else {
            for x in &p.witnesses {
                let [i, j, k, l] = x.indices;
                let _ = writeln!(
                    s,
                    "patterns ({}): {} at ({i},{j},{k},{l})",
                    p.subject, x.pattern
                );
            }
        }
        let _ = writeln!(
            s,
            "component generators (lower bound): {{{}}}",
            list(&self.component_lower_bound)
        );
        s
    }
}

pub fn classify(w: &Permutation, h: &HessenbergFunction) -> Result<ClassificationReport> {
    let admissible = is_admissible(w, h)?;
    let (rep, u) = admissible_representative(w, h)?;
    let ell = h_length(w, h)?;
    let dim = cell_dimension(w, h)?;
    let interval = bruhat_interval(w);
    let fixed = hessenberg::hess_schubert_fixed_points(w, h)?;

    let g = interval_graph(h, w)?;
    let stats = GraphStats::of(&g, dim);
    let rep_graph = interval_graph(h, &rep)?;
    let rep_dim = cell_dimension(&rep, h)?;
    let rep_stats = GraphStats::of(&rep_graph, rep_dim);

    let intersection_smooth = Claim::new(
        if stats.regular {
            Verdict::Yes
        } else {
            Verdict::No
        },
        [Citation::RegularIffSmooth],
    );

    let mut reducible_reason = None;
    let intersection_irreducible = if stats.regular && stats.connected {
        Claim::new(Verdict::Yes, [Citation::RegularConnectedIrreducible])
    } else if !admissible {
        let mut by = vec![Citation::FixedPointsAdmissibility];
        let mut reason =
            format!(
            "w is not h-admissible, so the fixed points {{{}}} of the closure miss part of [w, w0]",
            fixed.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        );
        if h.is_connected() {
            by.push(Citation::ConnectedHessNonAdmissible);
            reason.push_str("; Hess(s, h) is connected");
        }
        if !stats.connected {
            by.push(Citation::Disconnected);
            reason.push_str("; the interval graph is disconnected");
        }
        reducible_reason = Some(reason);
        Claim::new(Verdict::No, by)
    } else if !stats.connected {
        reducible_reason = Some("the interval graph is disconnected".into());
        Claim::new(Verdict::No, [Citation::Disconnected])
    } else {
        Claim::unknown()
    };

    let intersection_equals_closure = if stats.regular && stats.connected {
        Claim::new(Verdict::Yes, [Citation::RegularIffSmooth])
    } else {
        Claim::unknown()
    };

    let hess_schubert_smooth = if rep_stats.regular {
        Claim::new(
            Verdict::Yes,
            [
                Citation::RepresentativeRegularSmooth,
                Citation::PatternAvoidance,
            ],
        )
    } else {
        Claim::unknown()
    };

    let avoidance = avoids_all_associated(&rep, h)?;
    let smooth_fixed_points = smooth_fixed_points(w, h, &rep, &u)?;

    let component_lower_bound = component_lower_bound(w, h)?;

    let mut citations: BTreeSet<Citation> = [
        &intersection_smooth,
        &intersection_irreducible,
        &intersection_equals_closure,
        &hess_schubert_smooth,
    ]
    .iter()
    .flat_map(|c| c.by.iter().copied())
    .collect();
    citations.insert(Citation::ReflectionPointsSmooth);
    citations.insert(Citation::DegreeChainSmooth);
    if admissible || h.is_connected() {
        citations.insert(Citation::ConnectivityCriterion);
    }

    Ok(ClassificationReport {
        n: w.n(),
        h: h.clone(),
        w: w.clone(),
        admissible,
        hess_connected: h.is_connected(),
        representative: Representative {
            w_tilde: rep.clone(),
            u,
        },
        h_length: ell,
        cell_dimension: dim,
        interval_size: interval.len(),
        fixed_points: fixed,
        graph_stats: stats,
        representative_graph_stats: rep_stats,
        verdicts: Verdicts {
            intersection_smooth,
            intersection_irreducible,
            intersection_equals_closure,
            hess_schubert_smooth,
            smooth_fixed_points,
            reducible_reason,
        },
        pattern_witnesses: PatternReport {
            subject: rep,
            avoids: avoidance.avoids,
            witnesses: avoidance.witnesses,
        },
        component_lower_bound,
        citations: citations.into_iter().collect(),
    })
}

/// Points of `Ω_{w,h}^T` where `Ω_{w,h}` is certified smooth: the reflection
/// points, plus the translate by `u` of the vertices of `Γ(Ω_{w̃} ∩ Hess)`
/// whose degree equals the cell dimension.
fn smooth_fixed_points(
    w: &Permutation,
    h: &HessenbergFunction,
    rep: &Permutation,
    u: &Permutation,
) -> Result<Vec<Permutation>> {
    let mut out: BTreeSet<Permutation> = smooth_points_theorem(w, h)?.into_iter().collect();
    let dim = cell_dimension(rep, h)?;
    // Degrees are monotone along h-Bruhat steps and every v in [w̃, w0] lies
    // above w̃, so degree == dim at v already certifies the whole chain below v.
    for v in bruhat_interval(rep) {
        if graph::edge_set_unchecked(h, rep, &v).len() == dim {
            out.insert(perm::compose(u, &v)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// `{z ∈ Ω_{w,h}^T : z = w t, t a transposition} ∪ {w}`.
pub fn smooth_points_theorem(w: &Permutation, h: &HessenbergFunction) -> Result<Vec<Permutation>> {
    let fixed: BTreeSet<Permutation> = hessenberg::fixed_point_set(w, h)?;
    let n = w.n();
    let mut out = BTreeSet::from([w.clone()]);
    for i in 1..=n {
        for j in i + 1..=n {
            let z = w.swapped(i, j);
            if fixed.contains(&z) {
                out.insert(z);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Elements of `[w, w0]` that cannot lie in the closure of any other cell
/// of the intersection, plus `w`. Each such `v` indexes an irreducible
/// component, so the result is a lower bound on the component generators.
pub fn component_lower_bound(w: &Permutation, h: &HessenbergFunction) -> Result<Vec<Permutation>> {
    let interval = bruhat_interval(w);
    let mut covered: BTreeSet<Permutation> = BTreeSet::new();
    for u in &interval {
        for v in hessenberg::hess_schubert_fixed_points(u, h)? {
            if &v != u {
                covered.insert(v);
            }
        }
    }
    let mut out: Vec<Permutation> = interval
        .into_iter()
        .filter(|v| !covered.contains(v))
        .collect();
    if !out.contains(w) {
        out.push(w.clone());
        out.sort();
    }
    Ok(out)
}
