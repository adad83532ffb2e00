//! Equivariant cohomology checks on GKM graphs: edge compatibility of
//! localized classes, Betti numbers from the affine paving, and candidate
//! localizations of the classes of smooth `Ω_w ∩ Hess(s, h)`.
//!
//! Divisibility of `p(u) - p(v)` by `t_a - t_b` is tested by substituting
//! `t_a := t_b` and checking for zero.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{build_hessenberg_graph, interval_graph, GkmGraph};
use crate::hessenberg::{cell_dimension, cell_dimension_counts, HessenbergFunction};
use crate::perm::Permutation;

/// Integer linear form in `t_1, ..., t_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<i64>,
}

impl LinearForm {
    /// `t_a - t_b`, 1-indexed.
    pub fn difference(n: usize, a: usize, b: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[a - 1] += 1;
        coeffs[b - 1] -= 1;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Weight of the edge `v -> v(i, j)`: `t_{v(i)} - t_{v(j)}`.
pub fn edge_weight(v: &Permutation, i: usize, j: usize) -> LinearForm {
    LinearForm::difference(v.n(), v.at(i), v.at(j))
}

/// Sparse polynomial with integer coefficients, keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn variable(nvars: usize, a: usize) -> Self {
        let mut e = vec![0; nvars];
        e[a - 1] = 1;
        Self {
            nvars,
            terms: BTreeMap::from([(e, 1)]),
        }
    }

    pub fn linear(form: &LinearForm) -> Self {
        let n = form.coeffs.len();
        let mut p = Self::zero(n);
        for (k, &c) in form.coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; n];
                e[k] = 1;
                p.terms.insert(e, c);
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, e: Vec<u32>, c: i64) {
        let slot = self.terms.entry(e.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        if k != 0 {
            out.terms = self
                .terms
                .iter()
                .map(|(e, &c)| (e.clone(), c * k))
                .collect();
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Result of substituting `t_a := t_b`.
    pub fn substitute(&self, a: usize, b: usize) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            e[b - 1] += e[a - 1];
            e[a - 1] = 0;
            out.add_term(e, c);
        }
        out
    }

    /// Whether `t_a - t_b` divides the polynomial.
    pub fn divisible_by_difference(&self, a: usize, b: usize) -> bool {
        self.substitute(a, b).is_zero()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| {
                    if x == 1 {
                        format!("t{}", v + 1)
                    } else {
                        format!("t{}^{x}", v + 1)
                    }
                })
                .collect();
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (a, monomial.is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", monomial.join("*"))?,
                _ => write!(f, "{a}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Serialized as a list of `[exponents, coefficient]` pairs.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

/// A polynomial at every vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVector {
    values: BTreeMap<Permutation, Polynomial>,
}

impl ClassVector {
    pub fn new(values: BTreeMap<Permutation, Polynomial>) -> Self {
        Self { values }
    }

    /// The same polynomial at every vertex of `g`.
    pub fn constant(g: &GkmGraph, p: &Polynomial) -> Self {
        Self {
            values: g
                .vertices()
                .iter()
                .map(|v| (v.clone(), p.clone()))
                .collect(),
        }
    }

    pub fn get(&self, v: &Permutation) -> Option<&Polynomial> {
        self.values.get(v)
    }

    pub fn values(&self) -> &BTreeMap<Permutation, Polynomial> {
        &self.values
    }

    /// Vertices with a nonzero value.
    pub fn support(&self) -> Vec<Permutation> {
        self.values
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(v, _)| v.clone())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeViolation {
    pub u: Permutation,
    pub v: Permutation,
    /// Unordered value pair `(a, b)` of the edge weight `±(t_a - t_b)`.
    pub val: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Compatibility {
    pub compatible: bool,
    pub violations: Vec<EdgeViolation>,
}

/// Checks `p(u) ≡ p(v) mod α(u -> v)` on every edge of `g`.
pub fn check_compatibility(g: &GkmGraph, c: &ClassVector) -> Result<Compatibility> {
    if c.values.len() != g.vertex_count() || g.vertices().iter().any(|v| !c.values.contains_key(v))
    {
        return Err(Error::DomainMismatch);
    }
    let vs = g.vertices();
    let violations: Vec<EdgeViolation> = g
        .edges()
        .iter()
        .filter(|e| {
            let (a, b) = e.val;
            let d = c.values[&vs[e.u]].sub(&c.values[&vs[e.v]]);
            !d.divisible_by_difference(a, b)
        })
        .map(|e| EdgeViolation {
            u: vs[e.u].clone(),
            v: vs[e.v].clone(),
            val: e.val,
        })
        .collect();
    Ok(Compatibility {
        compatible: violations.is_empty(),
        violations,
    })
}

/// Betti numbers `(b_0, b_2, ..., b_{2 d_h})` from the cell dimensions.
pub fn poincare_polynomial(h: &HessenbergFunction) -> Vec<usize> {
    cell_dimension_counts(h)
}

/// A localized class on `Γ(Hess(s, h))` supported on `[w, w0]`, together
/// with the sign convention used to fix it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalizedClass {
    pub w: Permutation,
    pub class: ClassVector,
    /// Vertex whose sign is fixed to `+1`.
    pub root: Permutation,
    /// Sign `ε_v` chosen at each vertex of `[w, w0]`, in vertex order.
    pub signs: BTreeMap<Permutation, i8>,
}

/// Candidate for `[Ω_w ∩ Hess(s, h)]_T`, for regular interval graphs.
///
/// At `v ∈ [w, w0]` the value is `ε_v ∏ α(v -> v')` over the edges of
/// `Γ(Hess(s, h))` at `v` that leave `[w, w0]`; outside it is zero. The
/// classes are determined only up to these constants, so the signs are fixed
/// by propagation along a spanning tree from `w` with `ε_w = +1`. A cycle
/// that admits no consistent choice is reported as an error.
pub fn localized_class_candidate(
    h: &HessenbergFunction,
    w: &Permutation,
) -> Result<LocalizedClass> {
    let dim = cell_dimension(w, h)?;
    let sub = interval_graph(h, w)?;
    let reg = sub.is_regular(dim);
    if !reg.regular {
        return Err(Error::Precondition(format!(
            "the interval graph of {w} is not regular (vertex {} has degree != {dim})",
            reg.violating.map(|v| v.to_string()).unwrap_or_default()
        )));
    }
    let full = build_hessenberg_graph(h)?;
    let n = h.n();
    let normal: Vec<Polynomial> = sub
        .vertices()
        .iter()
        .map(|v| {
            let mut p = Polynomial::constant(n, 1);
            for (i, j) in h.windows() {
                let target = v.swapped(i, j);
                if !sub.contains(&target) {
                    p = p.mul(&Polynomial::linear(&edge_weight(v, i, j)));
                }
            }
            p
        })
        .collect();

    let root = sub.index_of(w).expect("w lies in its interval");
    let mut sign: Vec<Option<i64>> = vec![None; sub.vertex_count()];
    sign[root] = Some(1);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in sub.neighbors(x) {
            if sign[y].is_some() {
                continue;
            }
            let (a, b) = edge_values(&sub.vertices()[x], &sub.vertices()[y]);
            let px = normal[x].scale(sign[x].unwrap());
            let choice = [1, -1]
                .into_iter()
                .find(|&e| px.sub(&normal[y].scale(e)).divisible_by_difference(a, b));
            match choice {
                Some(e) => {
                    sign[y] = Some(e);
                    queue.push_back(y);
                }
                None => {
                    return Err(Error::SignInconsistency(format!(
                        "no sign at {} is compatible with {} across t{a}-t{b}",
                        sub.vertices()[y],
                        sub.vertices()[x]
                    )))
                }
            }
        }
    }

    let mut values: BTreeMap<Permutation, Polynomial> = full
        .vertices()
        .iter()
        .map(|v| (v.clone(), Polynomial::zero(n)))
        .collect();
    let mut signs = BTreeMap::new();
    for (k, v) in sub.vertices().iter().enumerate() {
        let e = sign[k].ok_or_else(|| {
            Error::Internal(format!(
                "{v} is not reachable from {w} in its interval graph"
            ))
        })?;
        values.insert(v.clone(), normal[k].scale(e));
        signs.insert(v.clone(), e as i8);
    }
    let class = ClassVector::new(values);
    let check = check_compatibility(&full, &class)?;
    if let Some(bad) = check.violations.first() {
        return Err(Error::SignInconsistency(format!(
            "edge {} -- {} fails after sign propagation",
            bad.u, bad.v
        )));
    }
    Ok(LocalizedClass {
        w: w.clone(),
        class,
        root: w.clone(),
        signs,
    })
}

/// The two values exchanged between adjacent permutations.
fn edge_values(u: &Permutation, v: &Permutation) -> (usize, usize) {
    let diff: Vec<usize> = (1..=u.n()).filter(|&i| u.at(i) != v.at(i)).collect();
    let (a, b) = (u.at(diff[0]), u.at(diff[1]));
    (a.min(b), a.max(b))
}
