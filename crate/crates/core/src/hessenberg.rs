//! Hessenberg functions, h-lengths, h-admissibility and the admissible
//! representative of an arbitrary permutation.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{self, all_permutations, bruhat_interval, Permutation};

/// A nondecreasing `h: [n] -> [n]` with `h(i) >= i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        validate(&values)
    }

    /// `h = (n, ..., n)`: the full flag variety.
    pub fn full(n: usize) -> Self {
        Self { values: vec![n; n] }
    }

    /// `h = (1, 2, ..., n)`: a finite set of points.
    pub fn minimal(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `h(i)` for 1-indexed `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// `1 <= i < j <= h(i)`.
    #[inline]
    pub fn in_window(&self, i: usize, j: usize) -> bool {
        i < j && j <= self.at(i)
    }

    /// All window pairs `(i, j)` with `i < j <= h(i)`, lexicographic.
    pub fn windows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n()).flat_map(move |i| (i + 1..=self.at(i)).map(move |j| (i, j)))
    }

    /// `Hess(s, h)` is connected iff `h(i) > i` for every `i < n`.
    pub fn is_connected(&self) -> bool {
        (1..self.n()).all(|i| self.at(i) > i)
    }

    fn check_rank(&self, w: &Permutation) -> Result<()> {
        if w.n() != self.n() {
            return Err(Error::RankMismatch {
                left: w.n(),
                right: self.n(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h=({self})")
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidHessenberg(format!("cannot parse {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        validate(&values)
    }
}

impl Serialize for HessenbergFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

pub fn validate(values: &[usize]) -> Result<HessenbergFunction> {
    let n = values.len();
    if n == 0 {
        return Err(Error::InvalidHessenberg("empty".into()));
    }
    for (k, &v) in values.iter().enumerate() {
        let i = k + 1;
        if v < i {
            return Err(Error::InvalidHessenberg(format!("h({i}) = {v} < {i}")));
        }
        if v > n {
            return Err(Error::InvalidHessenberg(format!("h({i}) = {v} > n = {n}")));
        }
        if k > 0 && values[k - 1] > v {
            return Err(Error::InvalidHessenberg(format!(
                "not nondecreasing: h({}) = {} > h({i}) = {v}",
                i - 1,
                values[k - 1]
            )));
        }
    }
    Ok(HessenbergFunction {
        values: values.to_vec(),
    })
}

/// `d_h = Σ (h(i) - i)`, the complex dimension of `Hess(s, h)`.
pub fn complexity_dimension(h: &HessenbergFunction) -> usize {
    h.values.iter().enumerate().map(|(k, &v)| v - (k + 1)).sum()
}

/// `ℓ_h(w)`: inversions `(i, j)` of `w` with `j <= h(i)`.
pub fn h_length(w: &Permutation, h: &HessenbergFunction) -> Result<usize> {
    h.check_rank(w)?;
    Ok(h.windows().filter(|&(i, j)| w.at(i) > w.at(j)).count())
}

/// Complex dimension `d_h - ℓ_h(w)` of the Hessenberg Schubert cell.
pub fn cell_dimension(w: &Permutation, h: &HessenbergFunction) -> Result<usize> {
    Ok(complexity_dimension(h) - h_length(w, h)?)
}

/// `w^{-1}(w(j) + 1) <= h(j)` for every `j` with `w(j) <= n - 1`.
pub fn is_admissible(w: &Permutation, h: &HessenbergFunction) -> Result<bool> {
    h.check_rank(w)?;
    let inv = w.inverse();
    let n = w.n();
    Ok((1..=n).all(|j| {
        let a = w.at(j);
        a == n || inv.at(a + 1) <= h.at(j)
    }))
}

/// All h-admissible permutations, lexicographic.
pub fn enumerate_admissible(h: &HessenbergFunction) -> Vec<Permutation> {
    all_permutations(h.n())
        .into_iter()
        .filter(|w| is_admissible(w, h).unwrap())
        .collect()
}

/// `w̃` agrees with `w` on the relative order of every window pair.
pub fn same_window_order(w: &Permutation, v: &Permutation, h: &HessenbergFunction) -> bool {
    h.windows()
        .all(|(i, j)| (w.at(i) < w.at(j)) == (v.at(i) < v.at(j)))
}

/// The unique h-admissible `w̃ >= w` with the same relative order as `w` on
/// every window pair, together with `u = w w̃^{-1}`.
///
/// Found by exhaustive search of `[w, w0]`; the search asserts uniqueness and
/// reports an internal error if zero or several candidates turn up.
pub fn admissible_representative(
    w: &Permutation,
    h: &HessenbergFunction,
) -> Result<(Permutation, Permutation)> {
    h.check_rank(w)?;
    if is_admissible(w, h)? {
        return Ok((w.clone(), Permutation::identity(w.n())));
    }
    let mut candidates = bruhat_interval(w)
        .into_iter()
        .filter(|v| same_window_order(w, v, h) && is_admissible(v, h).unwrap());
    let rep = candidates.next().ok_or_else(|| {
        Error::Internal(format!("no admissible representative for {w} under {h:?}"))
    })?;
    if let Some(other) = candidates.next() {
        return Err(Error::Internal(format!(
            "multiple admissible representatives for {w} under {h:?}: {rep}, {other}"
        )));
    }
    let u = perm::compose(w, &rep.inverse())?;
    Ok((rep, u))
}

/// `Ω_{w,h}^T = u [w̃, w0]`, sorted lexicographically.
pub fn hess_schubert_fixed_points(
    w: &Permutation,
    h: &HessenbergFunction,
) -> Result<Vec<Permutation>> {
    let (rep, u) = admissible_representative(w, h)?;
    let mut out = bruhat_interval(&rep)
        .iter()
        .map(|v| perm::compose(&u, v))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// One step of the h-Bruhat order: `v = u (i, j)` with `j <= h(i)` and
/// `ℓ(v) > ℓ(u)`.
pub fn h_bruhat_covers(u: &Permutation, h: &HessenbergFunction) -> Vec<Permutation> {
    h.windows()
        .filter(|&(i, j)| u.at(i) < u.at(j))
        .map(|(i, j)| u.swapped(i, j))
        .collect()
}

/// Reflexive-transitive closure of [`h_bruhat_covers`].
pub fn h_bruhat_leq(u: &Permutation, v: &Permutation, h: &HessenbergFunction) -> Result<bool> {
    h.check_rank(u)?;
    h.check_rank(v)?;
    if u == v {
        return Ok(true);
    }
    let target_len = v.length();
    let mut seen = HashSet::from([u.clone()]);
    let mut queue = VecDeque::from([u.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in h_bruhat_covers(&x, h) {
            if &y == v {
                return Ok(true);
            }
            // h-steps refine Bruhat steps, so anything not below v is a dead end.
            if y.length() < target_len
                && perm::bruhat_leq_unchecked(&y, v)
                && seen.insert(y.clone())
            {
                queue.push_back(y);
            }
        }
    }
    Ok(false)
}

/// Every Hessenberg function on `[n]`, in lexicographic order of values.
/// There are Catalan-many of them.
pub fn all_hessenberg_functions(n: usize) -> Vec<HessenbergFunction> {
    fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        let i = prefix.len() + 1;
        if i > n {
            out.push(HessenbergFunction {
                values: prefix.clone(),
            });
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            prefix.push(v);
            extend(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Poincaré-duality check helper: the cell-dimension generating function
/// `Σ_w x^{d_h - ℓ_h(w)}` as a coefficient list.
pub(crate) fn cell_dimension_counts(h: &HessenbergFunction) -> Vec<usize> {
    let d = complexity_dimension(h);
    let mut counts = vec![0usize; d + 1];
    for w in all_permutations(h.n()) {
        counts[d - h_length(&w, h).unwrap()] += 1;
    }
    counts
}

/// Permutations of `[w, w0]` that lie in `Ω_{w,h}^T`, as a set.
pub(crate) fn fixed_point_set(
    w: &Permutation,
    h: &HessenbergFunction,
) -> Result<BTreeSet<Permutation>> {
    Ok(hess_schubert_fixed_points(w, h)?.into_iter().collect())
}
