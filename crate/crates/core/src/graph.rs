//! GKM graphs of regular semisimple Hessenberg varieties and of their
//! intersections with Schubert varieties.
//!
//! Edges are stored undirected. Each edge keeps its position pair `(i, j)`,
//! `i < j`, and its value pair `(a, b)`, `a < b`, with `{a, b}` the values
//! swapped by the edge; the directed weight `t_{u(i)} - t_{u(j)}` is
//! recovered from those on demand.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessenberg::{self, cell_dimension, HessenbergFunction};
use crate::perm::{all_permutations, bruhat_interval, Permutation};

/// Default cap on `n` for graphs with all of `S_n` as vertex set (8! = 40320).
pub const DEFAULT_MAX_N: usize = 8;

/// Transposition position pair `(i, j)` with `i < j`.
pub type Position = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Endpoint indices into [`GkmGraph::vertices`], `u < v`.
    pub u: usize,
    pub v: usize,
    pub pos: Position,
    pub val: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct GkmGraph {
    h: HessenbergFunction,
    w: Option<Permutation>,
    vertices: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

/// Outcome of a regularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    /// First vertex (lexicographic) whose degree differs from the target.
    pub violating: Option<Permutation>,
}

impl GkmGraph {
    /// Subgraph of `Γ(Hess(s, h))` induced on `vertices`.
    pub fn induced(
        h: &HessenbergFunction,
        w: Option<Permutation>,
        vertices: impl IntoIterator<Item = Permutation>,
    ) -> Result<Self> {
        let mut vertices: Vec<Permutation> = vertices.into_iter().collect();
        vertices.sort();
        vertices.dedup();
        for v in &vertices {
            if v.n() != h.n() {
                return Err(Error::RankMismatch {
                    left: v.n(),
                    right: h.n(),
                });
            }
        }
        let index: HashMap<_, _> = vertices.iter().cloned().zip(0..).collect();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (ui, u) in vertices.iter().enumerate() {
            for (i, j) in h.windows() {
                let v = u.swapped(i, j);
                if let Some(&vi) = index.get(&v) {
                    if ui < vi {
                        let (a, b) = (u.at(i), u.at(j));
                        edges.push(Edge {
                            u: ui,
                            v: vi,
                            pos: (i, j),
                            val: (a.min(b), a.max(b)),
                        });
                        adjacency[ui].push(vi);
                        adjacency[vi].push(ui);
                    }
                }
            }
        }
        edges.sort_by_key(|e| (e.u, e.v));
        Ok(Self {
            h: h.clone(),
            w,
            vertices,
            index,
            edges,
            adjacency,
        })
    }

    pub fn hessenberg(&self) -> &HessenbergFunction {
        &self.h
    }

    pub fn origin(&self) -> Option<&Permutation> {
        self.w.as_ref()
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: &Permutation) -> bool {
        self.index.contains_key(v)
    }

    pub fn index_of(&self, v: &Permutation) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn vertex_degree(&self, v: &Permutation) -> Option<usize> {
        self.index_of(v).map(|k| self.adjacency[k].len())
    }

    pub fn neighbors(&self, k: usize) -> &[usize] {
        &self.adjacency[k]
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Edges as unordered vertex pairs, each pair sorted, lexicographic.
    pub fn edge_pairs(&self) -> BTreeSet<(Permutation, Permutation)> {
        self.edges
            .iter()
            .map(|e| (self.vertices[e.u].clone(), self.vertices[e.v].clone()))
            .collect()
    }

    pub fn is_regular(&self, expected: usize) -> Regularity {
        let violating = self
            .adjacency
            .iter()
            .position(|adj| adj.len() != expected)
            .map(|k| self.vertices[k].clone());
        Regularity {
            regular: violating.is_none(),
            violating,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.vertices.len()
    }

    /// Left translation `v ↦ u v` of every vertex, keeping `h`. Edges are
    /// recomputed as an induced subgraph so the result is checked, not assumed.
    pub fn translate(&self, u: &Permutation, w: Option<Permutation>) -> Result<Self> {
        let image = self
            .vertices
            .iter()
            .map(|v| crate::perm::compose(u, v))
            .collect::<Result<Vec<_>>>()?;
        Self::induced(&self.h, w, image)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let hs: String = self.h.values().iter().map(|v| v.to_string()).collect();
        let name = match &self.w {
            Some(w) => format!("gkm_h{hs}_w{w}"),
            None => format!("gkm_h{hs}"),
        };
        let _ = writeln!(out, "graph \"{name}\" {{");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{v}\" [label=\"{v}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [weight=\"t{}-t{}\"];",
                self.vertices[e.u], self.vertices[e.v], e.val.0, e.val.1
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct EdgeOut<'a> {
            u: &'a Permutation,
            v: &'a Permutation,
            pos: [usize; 2],
            val: [usize; 2],
        }
        #[derive(Serialize)]
        struct GraphOut<'a> {
            n: usize,
            h: &'a HessenbergFunction,
            w: Option<&'a Permutation>,
            vertices: &'a [Permutation],
            edges: Vec<EdgeOut<'a>>,
        }
        let out = GraphOut {
            n: self.h.n(),
            h: &self.h,
            w: self.w.as_ref(),
            vertices: &self.vertices,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeOut {
                    u: &self.vertices[e.u],
                    v: &self.vertices[e.v],
                    pos: [e.pos.0, e.pos.1],
                    val: [e.val.0, e.val.1],
                })
                .collect(),
        };
        serde_json::to_value(out).expect("graph serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("graph serializes") + "\n"
    }
}

/// `Γ(Hess(s, h))` with the default size cap.
pub fn build_hessenberg_graph(h: &HessenbergFunction) -> Result<GkmGraph> {
    build_hessenberg_graph_capped(h, DEFAULT_MAX_N)
}

pub fn build_hessenberg_graph_capped(h: &HessenbergFunction, max_n: usize) -> Result<GkmGraph> {
    if h.n() > max_n {
        return Err(Error::TooLarge {
            n: h.n(),
            cap: max_n,
        });
    }
    GkmGraph::induced(h, None, all_permutations(h.n()))
}

/// `Γ(Ω_w ∩ Hess(s, h))`: induced on `[w, w0]`.
pub fn interval_graph(h: &HessenbergFunction, w: &Permutation) -> Result<GkmGraph> {
    check_rank(h, w)?;
    GkmGraph::induced(h, Some(w.clone()), bruhat_interval(w))
}

fn check_rank(h: &HessenbergFunction, w: &Permutation) -> Result<()> {
    if h.n() != w.n() {
        return Err(Error::RankMismatch {
            left: w.n(),
            right: h.n(),
        });
    }
    Ok(())
}

/// `E_{w,h}(u) = {(i, j) : u (i, j) >= w, i < j <= h(i)}`.
pub fn edge_set_at(
    h: &HessenbergFunction,
    w: &Permutation,
    u: &Permutation,
) -> Result<BTreeSet<Position>> {
    check_rank(h, w)?;
    check_rank(h, u)?;
    if !crate::perm::bruhat_leq_unchecked(w, u) {
        return Err(Error::NotInInterval {
            u: u.clone(),
            w: w.clone(),
        });
    }
    Ok(edge_set_unchecked(h, w, u))
}

pub(crate) fn edge_set_unchecked(
    h: &HessenbergFunction,
    w: &Permutation,
    u: &Permutation,
) -> BTreeSet<Position> {
    h.windows()
        .filter(|&(i, j)| crate::perm::bruhat_leq_unchecked(w, &u.swapped(i, j)))
        .collect()
}

/// `deg_{w,h}(u) = |E_{w,h}(u)|`.
pub fn degree(h: &HessenbergFunction, w: &Permutation, u: &Permutation) -> Result<usize> {
    edge_set_at(h, w, u).map(|e| e.len())
}

pub fn is_regular(g: &GkmGraph, expected: usize) -> Regularity {
    g.is_regular(expected)
}

pub fn is_connected(g: &GkmGraph) -> bool {
    g.is_connected()
}

/// Regularity shortcut for admissible `w`: `deg_{w,h}(w0) == d_h - ℓ_h(w)`.
pub fn regularity_via_w0(h: &HessenbergFunction, w: &Permutation) -> Result<bool> {
    check_rank(h, w)?;
    if !hessenberg::is_admissible(w, h)? {
        return Err(Error::NotAdmissible(w.clone()));
    }
    let w0 = Permutation::longest(w.n());
    Ok(degree(h, w, &w0)? == cell_dimension(w, h)?)
}

/// The map `φ_{uv}: E_{w,h}(u) -> E_{w,h}(v)` for `v = u (a, b)`:
///
/// * `(i, j) ↦ (b, j)` if `i = a`, `j > b` and `(b, j) ∉ E_{w,h}(u)`;
/// * `(i, j) ↦ (i, a)` if `i < a`, `j = b` and `(i, a) ∉ E_{w,h}(u)`;
/// * `(i, j) ↦ (i, j)` otherwise.
///
/// Requires `w` admissible, `u ∈ [w, w0]`, `(a, b) ∈ E_{w,h}(u)` and
/// `ℓ(u (a, b)) > ℓ(u)`.
pub fn phi_map(
    h: &HessenbergFunction,
    w: &Permutation,
    u: &Permutation,
    a: usize,
    b: usize,
) -> Result<BTreeMap<Position, Position>> {
    if !hessenberg::is_admissible(w, h)? {
        return Err(Error::NotAdmissible(w.clone()));
    }
    let source = edge_set_at(h, w, u)?;
    if !source.contains(&(a, b)) {
        return Err(Error::Precondition(format!(
            "({a}, {b}) is not in E_w,h({u})"
        )));
    }
    if u.at(a) > u.at(b) {
        return Err(Error::Precondition(format!(
            "{u} (a, b) does not increase length"
        )));
    }
    Ok(phi_formula(&source, a, b))
}

/// The three-case rule of [`phi_map`] applied to an arbitrary source set.
pub(crate) fn phi_formula(
    source: &BTreeSet<Position>,
    a: usize,
    b: usize,
) -> BTreeMap<Position, Position> {
    source
        .iter()
        .map(|&(i, j)| {
            let image = if i == a && j > b && !source.contains(&(b, j)) {
                (b, j)
            } else if i < a && j == b && !source.contains(&(i, a)) {
                (i, a)
            } else {
                (i, j)
            };
            ((i, j), image)
        })
        .collect()
}

/// `Γ_{w,h}`: induced on `Ω_{w,h}^T`.
pub fn fixed_point_induced_graph(h: &HessenbergFunction, w: &Permutation) -> Result<GkmGraph> {
    let fixed = hessenberg::hess_schubert_fixed_points(w, h)?;
    GkmGraph::induced(h, Some(w.clone()), fixed)
}

/// Image of `Γ_{w̃,h}` under left translation by `u = w w̃^{-1}`.
///
/// Only the vertex set and the unlabeled adjacency carry meaning; edge data
/// is recomputed in `Γ(Hess(s, h))` after translation.
pub fn translated_unlabeled_graph(h: &HessenbergFunction, w: &Permutation) -> Result<GkmGraph> {
    let (rep, u) = hessenberg::admissible_representative(w, h)?;
    let source = fixed_point_induced_graph(h, &rep)?;
    source.translate(&u, Some(w.clone()))
}

/// Whether left translation by `u` carries the edges of `from` bijectively
/// onto the edges of `to`.
pub fn translation_is_isomorphism(from: &GkmGraph, to: &GkmGraph, u: &Permutation) -> bool {
    if from.vertex_count() != to.vertex_count() || from.edge_count() != to.edge_count() {
        return false;
    }
    let map = |v: &Permutation| crate::perm::compose(u, v).ok();
    from.vertices()
        .iter()
        .all(|v| map(v).is_some_and(|x| to.contains(&x)))
        && from
            .edge_pairs()
            .iter()
            .all(|(x, y)| match (map(x), map(y)) {
                (Some(mx), Some(my)) => {
                    let key = if mx < my { (mx, my) } else { (my, mx) };
                    to.edge_pairs().contains(&key)
                }
                _ => false,
            })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::{
        all_hessenberg_functions, complexity_dimension, h_length, is_admissible,
    };

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn hf(s: &str) -> HessenbergFunction {
        s.parse().unwrap()
    }

    fn pairs(g: &GkmGraph) -> Vec<(String, String)> {
        g.edge_pairs()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn sp(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn hessenberg_graph_examples() {
        let g = build_hessenberg_graph(&hf("2,2,3")).unwrap();
        assert_eq!(
            pairs(&g),
            vec![sp("123", "213"), sp("132", "312"), sp("231", "321")]
        );
        let g = build_hessenberg_graph(&hf("2,3,3")).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_regular(2).regular);
        for n in 1..=5 {
            let g = build_hessenberg_graph(&HessenbergFunction::full(n)).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(g.edge_count(), fact * n * (n - 1) / 4);
        }
        assert!(matches!(
            build_hessenberg_graph_capped(&HessenbergFunction::full(4), 3),
            Err(Error::TooLarge { n: 4, cap: 3 })
        ));
    }

    #[test]
    fn interval_graph_examples() {
        let g = interval_graph(&hf("2,3,3"), &p("213")).unwrap();
        let verts: Vec<String> = g.vertices().iter().map(ToString::to_string).collect();
        assert_eq!(verts, ["213", "231", "312", "321"]);
        assert_eq!(
            pairs(&g),
            vec![sp("213", "231"), sp("231", "321"), sp("312", "321")]
        );
        let g = interval_graph(&hf("3,3,4,4"), &p("4321")).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let full = HessenbergFunction::full(4);
        let g = interval_graph(&full, &Permutation::identity(4)).unwrap();
        assert_eq!(
            g.edge_count(),
            build_hessenberg_graph(&full).unwrap().edge_count()
        );
    }

    #[test]
    fn edge_set_examples() {
        let h = hf("3,3,4,4");
        let w = p("2134");
        let e: Vec<_> = edge_set_at(&h, &w, &p("3142"))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(e, [(1, 3), (2, 3), (3, 4)]);
        let e: Vec<_> = edge_set_at(&h, &w, &p("3412"))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(e, [(1, 2), (2, 3), (3, 4)]);
        assert!(edge_set_at(&h, &p("4321"), &p("4321")).unwrap().is_empty());
        assert!(matches!(
            edge_set_at(&h, &w, &p("1234")),
            Err(Error::NotInInterval { .. })
        ));
    }

    #[test]
    fn degree_examples() {
        let h = hf("2,3,3");
        assert_eq!(degree(&h, &p("213"), &p("213")).unwrap(), 1);
        assert_eq!(degree(&h, &p("213"), &p("321")).unwrap(), 2);
        let h = hf("3,3,4,4");
        assert_eq!(degree(&h, &p("4312"), &p("4321")).unwrap(), 1);
        assert_eq!(cell_dimension(&p("4312"), &h).unwrap(), 1);
    }

    #[test]
    fn regularity_examples() {
        let g = interval_graph(&hf("2,3,3"), &p("213")).unwrap();
        let r = g.is_regular(1);
        assert!(!r.regular);
        assert_eq!(r.violating, Some(p("231")));
        assert!(
            interval_graph(&hf("3,3,4,4"), &p("4312"))
                .unwrap()
                .is_regular(1)
                .regular
        );
        assert!(
            interval_graph(&hf("3,3,4,4"), &p("4321"))
                .unwrap()
                .is_regular(0)
                .regular
        );

        assert!(regularity_via_w0(&hf("3,3,4,4"), &p("4312")).unwrap());
        assert!(!regularity_via_w0(&hf("3,3,4,4"), &p("2134")).unwrap());
        assert!(regularity_via_w0(&hf("2,3,3"), &p("321")).unwrap());
        assert!(matches!(
            regularity_via_w0(&hf("3,3,4,4"), &p("3214")),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn connectivity_examples() {
        assert!(interval_graph(&hf("2,3,3"), &p("213"))
            .unwrap()
            .is_connected());
        assert!(!build_hessenberg_graph(&hf("2,2,3")).unwrap().is_connected());
        assert!(interval_graph(&hf("2,2,3"), &p("321"))
            .unwrap()
            .is_connected());
    }

    #[test]
    fn phi_example() {
        let h = hf("3,3,4,4");
        let phi = phi_map(&h, &p("2134"), &p("3142"), 2, 3).unwrap();
        let got: Vec<_> = phi.into_iter().collect();
        assert_eq!(got, [((1, 3), (1, 2)), ((2, 3), (2, 3)), ((3, 4), (3, 4))]);
        assert!(phi_map(&h, &p("2134"), &p("3142"), 1, 2).is_err());
        assert!(phi_map(&h, &p("3214"), &p("3214"), 3, 4).is_err());
    }

    #[test]
    fn fixed_point_graph_examples() {
        let h = hf("3,3,4,4");
        let g = fixed_point_induced_graph(&h, &p("3214")).unwrap();
        assert_eq!(pairs(&g), vec![sp("3214", "3241")]);
        let adm = fixed_point_induced_graph(&h, &p("2134")).unwrap();
        let iv = interval_graph(&h, &p("2134")).unwrap();
        assert_eq!(adm.edge_pairs(), iv.edge_pairs());
        assert_eq!(
            fixed_point_induced_graph(&h, &p("4321"))
                .unwrap()
                .vertex_count(),
            1
        );
    }

    #[test]
    fn translated_graph_examples() {
        let h = hf("3,3,4,4");
        let t = translated_unlabeled_graph(&h, &p("3214")).unwrap();
        let verts: Vec<String> = t.vertices().iter().map(ToString::to_string).collect();
        assert_eq!(verts, ["3214", "3241"]);
        assert_eq!(t.edge_count(), 1);
        let same = translated_unlabeled_graph(&h, &p("2134")).unwrap();
        assert_eq!(
            same.edge_pairs(),
            fixed_point_induced_graph(&h, &p("2134"))
                .unwrap()
                .edge_pairs()
        );
    }

    #[test]
    fn degree_at_minimum_is_cell_dimension() {
        for n in 1..=5 {
            for h in all_hessenberg_functions(n) {
                let d = complexity_dimension(&h);
                for w in all_permutations(n) {
                    assert_eq!(
                        degree(&h, &w, &w).unwrap(),
                        d - h_length(&w, &h).unwrap(),
                        "{w} {h:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn graph_inclusions_hold() {
        for h in all_hessenberg_functions(4) {
            for w in all_permutations(4) {
                let iv = interval_graph(&h, &w).unwrap();
                let fp = fixed_point_induced_graph(&h, &w).unwrap();
                assert!(fp.vertices().iter().all(|v| iv.contains(v)));
                assert!(fp.edge_pairs().is_subset(&iv.edge_pairs()));
                let adm = is_admissible(&w, &h).unwrap();
                assert_eq!(
                    adm,
                    fp.edge_pairs() == iv.edge_pairs() && fp.vertex_count() == iv.vertex_count()
                );
            }
        }
    }

    #[test]
    fn translation_gives_isomorphism() {
        for h in all_hessenberg_functions(4) {
            for w in all_permutations(4) {
                let (rep, u) = hessenberg::admissible_representative(&w, &h).unwrap();
                let src = fixed_point_induced_graph(&h, &rep).unwrap();
                let dst = translated_unlabeled_graph(&h, &w).unwrap();
                assert!(translation_is_isomorphism(&src, &dst, &u), "{w} {h:?}");
                let fp: Vec<_> = hessenberg::hess_schubert_fixed_points(&w, &h).unwrap();
                assert_eq!(dst.vertices(), fp.as_slice());
            }
        }
    }

    #[test]
    fn exports_are_deterministic() {
        let g = interval_graph(&hf("2,3,3"), &p("213")).unwrap();
        assert_eq!(g.to_dot(), g.to_dot());
        let dot = g.to_dot();
        assert!(dot.contains("\"213\" -- \"231\" [weight=\"t1-t3\"];"));
        let json: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(json["n"], 3);
        assert_eq!(json["w"], "213");
        assert_eq!(json["h"], serde_json::json!([2, 3, 3]));
        assert_eq!(json["edges"][0]["pos"], serde_json::json!([2, 3]));
    }
}
