//! Root systems, Weyl groups and Hessenberg spaces in arbitrary (finite,
//! crystallographic) type.
//!
//! Roots are integer coordinate vectors in the basis of simple roots, with
//! Bourbaki labelling. In particular for `C2` the root `α2` is long and
//! `Φ⁺ = {α1, α2, α1+α2, 2α1+α2}`; for `G2` the root `α1` is short.
//!
//! A Hessenberg space is encoded by a subset `M ⊆ Φ⁺` closed under
//! subtracting positive roots: if `α ∈ M`, `β ∈ Φ⁺` and `α - β ∈ Φ⁺` then
//! `α - β ∈ M`. This is the root-level form of being stable under the
//! Borel subalgebra.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessenberg::HessenbergFunction;
use crate::perm::Permutation;

/// Default cap on `|W|`.
pub const DEFAULT_GROUP_CAP: usize = 50_000;

/// Above this size Weyl-type subsets are collected as the sets `N(w) ∩ M`
/// instead of by testing every subset of `M`.
const SUBSET_SCAN_MAX: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl CartanType {
    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A | CartanType::D)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            other => Err(Error::UnsupportedRootSystem(format!("type {other:?}"))),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Coordinates in the simple-root basis.
pub type Root = Vec<i32>;

/// Subset of positive roots as a bitmask over positive-root indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSet(pub u64);

impl RootSet {
    pub fn contains(self, p: usize) -> bool {
        self.0 >> p & 1 == 1
    }

    pub fn insert(&mut self, p: usize) {
        self.0 |= 1 << p;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn minus(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&p| self.contains(p))
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::default();
        for p in iter {
            s.insert(p);
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    /// `(α_i, α_j)` for simple roots.
    form: Vec<Vec<i64>>,
    /// Positive roots first (by height, then reverse-lexicographic), then
    /// their negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    positive_count: usize,
    /// `sum[p][q] = Some(r)` when `Φ⁺[p] + Φ⁺[q] = Φ⁺[r]`.
    sum: Vec<Vec<Option<usize>>>,
    /// `diff[p][q] = Some(r)` when `Φ⁺[p] - Φ⁺[q] = Φ⁺[r]`.
    diff: Vec<Vec<Option<usize>>>,
}

fn bilinear_form(t: CartanType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::UnsupportedRootSystem(format!("{t}{rank}"));
    let min_rank = match t {
        CartanType::A => 1,
        CartanType::B | CartanType::C => 2,
        CartanType::D => 4,
        CartanType::F => 4,
        CartanType::G => 2,
    };
    if rank < min_rank
        || (t == CartanType::F && rank != 4)
        || (t == CartanType::G && rank != 2)
        || rank > 16
    {
        return Err(bad());
    }
    let mut f = vec![vec![0i64; rank]; rank];
    let chain = |f: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        f[i][j] = v;
        f[j][i] = v;
    };
    match t {
        CartanType::A => {
            for i in 0..rank {
                f[i][i] = 2;
                if i + 1 < rank {
                    chain(&mut f, i, i + 1, -1);
                }
            }
        }
        CartanType::B => {
            // α_i = e_i - e_{i+1}, α_n = e_n.
            for i in 0..rank {
                f[i][i] = 2;
                if i + 1 < rank {
                    chain(&mut f, i, i + 1, -1);
                }
            }
            f[rank - 1][rank - 1] = 1;
        }
        CartanType::C => {
            // α_i = e_i - e_{i+1}, α_n = 2 e_n.
            for i in 0..rank {
                f[i][i] = 2;
                if i + 1 < rank {
                    chain(&mut f, i, i + 1, -1);
                }
            }
            f[rank - 1][rank - 1] = 4;
            chain(&mut f, rank - 2, rank - 1, -2);
        }
        CartanType::D => {
            // α_i = e_i - e_{i+1} (i < n), α_n = e_{n-1} + e_n.
            for i in 0..rank {
                f[i][i] = 2;
            }
            for i in 0..rank - 2 {
                chain(&mut f, i, i + 1, -1);
            }
            chain(&mut f, rank - 3, rank - 1, -1);
        }
        CartanType::F => {
            f[0][0] = 4;
            f[1][1] = 4;
            f[2][2] = 2;
            f[3][3] = 2;
            chain(&mut f, 0, 1, -2);
            chain(&mut f, 1, 2, -2);
            chain(&mut f, 2, 3, -1);
        }
        CartanType::G => {
            f[0][0] = 2;
            f[1][1] = 6;
            chain(&mut f, 0, 1, -3);
        }
    }
    Ok(f)
}

/// Order of the Weyl group, from the classification.
pub fn weyl_group_order(t: CartanType, rank: usize) -> usize {
    let fact = |k: usize| (1..=k).product::<usize>();
    match t {
        CartanType::A => fact(rank + 1),
        CartanType::B | CartanType::C => (1 << rank) * fact(rank),
        CartanType::D => (1 << (rank - 1)) * fact(rank),
        CartanType::F => 1152,
        CartanType::G => 12,
    }
}

impl RootSystem {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let form = bilinear_form(cartan_type, rank)?;
        let simple: Vec<Root> = (0..rank)
            .map(|i| {
                let mut r = vec![0; rank];
                r[i] = 1;
                r
            })
            .collect();
        // Orbit of the simple roots under the simple reflections.
        let mut found: BTreeSet<Root> = simple.iter().cloned().collect();
        let mut frontier: Vec<Root> = simple.clone();
        while let Some(beta) = frontier.pop() {
            for i in 0..rank {
                let image = reflect_simple(&form, &beta, i);
                if found.insert(image.clone()) {
                    frontier.push(image);
                }
            }
        }
        let mut positive: Vec<Root> = found
            .into_iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .collect();
        positive.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let positive_count = positive.len();
        if positive_count > 64 {
            return Err(Error::UnsupportedRootSystem(format!(
                "{cartan_type}{rank} has {positive_count} positive roots, at most 64 are supported"
            )));
        }
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|r| r.iter().map(|c| -c).collect::<Root>()),
        );
        let index: HashMap<Root, usize> = roots.iter().cloned().zip(0..).collect();
        let mut sum = vec![vec![None; positive_count]; positive_count];
        let mut diff = vec![vec![None; positive_count]; positive_count];
        for p in 0..positive_count {
            for q in 0..positive_count {
                let s: Root = positive[p]
                    .iter()
                    .zip(&positive[q])
                    .map(|(a, b)| a + b)
                    .collect();
                let d: Root = positive[p]
                    .iter()
                    .zip(&positive[q])
                    .map(|(a, b)| a - b)
                    .collect();
                sum[p][q] = index.get(&s).copied();
                diff[p][q] = index.get(&d).copied().filter(|&r| r < positive_count);
            }
        }
        Ok(Self {
            cartan_type,
            rank,
            form,
            roots,
            index,
            positive_count,
            sum,
            diff,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, r: usize) -> &Root {
        &self.roots[r]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.positive_count]
    }

    /// Index of a root vector in the full root list, if it is a root.
    pub fn root_index(&self, r: &[i32]) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of a positive root.
    pub fn positive_index(&self, r: &[i32]) -> Option<usize> {
        self.root_index(r).filter(|&k| k < self.positive_count)
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.positive_count
    }

    pub fn negate(&self, r: usize) -> usize {
        if r < self.positive_count {
            r + self.positive_count
        } else {
            r - self.positive_count
        }
    }

    /// Index of the simple root `α_{i+1}`.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut r = vec![0; self.rank];
        r[i] = 1;
        self.index[&r]
    }

    pub fn simple_roots(&self) -> RootSet {
        (0..self.rank).map(|i| self.simple_index(i)).collect()
    }

    pub fn all_positive(&self) -> RootSet {
        (0..self.positive_count).collect()
    }

    pub fn positive_sum(&self, p: usize, q: usize) -> Option<usize> {
        self.sum[p][q]
    }

    fn inner(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] as i64 * b[j] as i64 * self.form[i][j];
            }
        }
        s
    }

    /// `s_α(β) = β - <β, α^∨> α`, on root indices.
    pub fn reflect(&self, alpha: usize, beta: usize) -> usize {
        let a = &self.roots[alpha];
        let b = &self.roots[beta];
        let k = 2 * self.inner(b, a) / self.inner(a, a);
        let image: Root = b.iter().zip(a).map(|(x, y)| x - (k as i32) * y).collect();
        self.index[&image]
    }

    pub fn format_root(&self, r: usize) -> String {
        format_coords(&self.roots[r])
    }

    pub fn format_set(&self, s: RootSet) -> String {
        if s.is_empty() {
            return "∅".into();
        }
        let parts: Vec<String> = s.iter().map(|p| self.format_root(p)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Parses `"a1+a2"`, `"2α1+α2"` or `"[1,1]"` into a positive root index.
    pub fn parse_root(&self, s: &str) -> Result<usize> {
        let coords = parse_coords(s, self.rank)?;
        self.positive_index(&coords).ok_or_else(|| {
            Error::InvalidRoot(format!("{s:?} is not a positive root of {}", self.label()))
        })
    }

    /// Comma-separated list of roots; commas inside brackets do not split.
    pub fn parse_root_list(&self, s: &str) -> Result<RootSet> {
        let mut out = RootSet::default();
        for item in split_top_level(s) {
            if !item.trim().is_empty() {
                out.insert(self.parse_root(item)?);
            }
        }
        Ok(out)
    }
}

fn reflect_simple(form: &[Vec<i64>], beta: &[i32], i: usize) -> Root {
    let pairing: i64 = beta
        .iter()
        .enumerate()
        .map(|(j, &b)| b as i64 * form[j][i])
        .sum();
    let k = 2 * pairing / form[i][i];
    let mut out = beta.to_vec();
    out[i] -= k as i32;
    out
}

fn format_coords(r: &[i32]) -> String {
    let mut s = String::new();
    let neg = r.iter().all(|&c| c <= 0);
    if neg {
        s.push('-');
        if r.iter().filter(|&&c| c != 0).count() > 1 {
            s.push('(');
        }
    }
    let mut first = true;
    for (i, &c) in r.iter().enumerate() {
        let c = c.abs();
        if c == 0 {
            continue;
        }
        if !first {
            s.push('+');
        }
        first = false;
        if c != 1 {
            s.push_str(&c.to_string());
        }
        s.push_str(&format!("α{}", i + 1));
    }
    if neg && r.iter().filter(|&&c| c != 0).count() > 1 {
        s.push(')');
    }
    s
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..k]);
                start = k + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_coords(s: &str, rank: usize) -> Result<Root> {
    let t = s.trim();
    let bad = || Error::InvalidRoot(format!("cannot parse {s:?}"));
    if let Some(inner) = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<i32>().map_err(|_| bad()))
            .collect::<Result<Root>>()?;
        if coords.len() != rank {
            return Err(Error::InvalidRoot(format!(
                "{s:?} needs {rank} coordinates"
            )));
        }
        return Ok(coords);
    }
    let mut coords = vec![0; rank];
    for term in t.split('+') {
        let term = term.trim();
        let pos = term.find(['a', 'α']).ok_or_else(bad)?;
        let coef = match term[..pos].trim() {
            "" => 1,
            c => c.trim_end_matches('*').parse::<i32>().map_err(|_| bad())?,
        };
        let letter_len = term[pos..].chars().next().unwrap().len_utf8();
        let idx: usize = term[pos + letter_len..].trim().parse().map_err(|_| bad())?;
        if idx == 0 || idx > rank {
            return Err(Error::InvalidRoot(format!(
                "{s:?}: index {idx} out of range"
            )));
        }
        coords[idx - 1] += coef;
    }
    Ok(coords)
}

/// `Φ⁺` with simple roots, addition table and conventions as documented on
/// the module.
pub fn build_root_system(cartan_type: CartanType, rank: usize) -> Result<RootSystem> {
    RootSystem::new(cartan_type, rank)
}

/// An element of `W`, stored as its action on the full root list together
/// with the lexicographically smallest reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    action: Vec<u16>,
    word: Vec<u8>,
}

impl WeylElement {
    /// `ℓ(w) = |N(w)|`.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Reduced word as 1-indexed simple reflection labels.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize + 1).collect()
    }

    /// Image of root index `r`.
    pub fn apply(&self, r: usize) -> usize {
        self.action[r] as usize
    }

    pub fn name(&self) -> String {
        if self.word.is_empty() {
            "e".into()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect()
        }
    }
}

/// Element handle into a [`WeylGroup`].
pub type ElementId = usize;

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u16>, ElementId>,
    right: Vec<Vec<ElementId>>,
    left: Vec<Vec<ElementId>>,
    longest: ElementId,
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        Self::with_cap(rs, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(rs: RootSystem, cap: usize) -> Result<Self> {
        let order = weyl_group_order(rs.cartan_type, rs.rank);
        if order > cap {
            return Err(Error::TooLarge { n: order, cap });
        }
        let nroots = rs.root_count();
        let simple_actions: Vec<Vec<u16>> = (0..rs.rank)
            .map(|i| {
                let a = rs.simple_index(i);
                (0..nroots).map(|r| rs.reflect(a, r) as u16).collect()
            })
            .collect();
        let identity = WeylElement {
            action: (0..nroots as u16).collect(),
            word: Vec::new(),
        };
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity.action.clone(), 0)]);
        // Level-by-level growth by right multiplication keeps each level
        // sorted by lexicographically least reduced word.
        let mut level = vec![0usize];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &x in &level {
                for i in 0..rs.rank {
                    let ai = rs.simple_index(i);
                    if !rs.is_positive(elements[x].apply(ai)) {
                        continue;
                    }
                    let action: Vec<u16> = simple_actions[i]
                        .iter()
                        .map(|&r| elements[x].action[r as usize])
                        .collect();
                    if index.contains_key(&action) {
                        continue;
                    }
                    let mut word = elements[x].word.clone();
                    word.push(i as u8);
                    let id = elements.len();
                    index.insert(action.clone(), id);
                    elements.push(WeylElement { action, word });
                    next.push(id);
                }
            }
            level = next;
        }
        if elements.len() != order {
            return Err(Error::Internal(format!(
                "enumerated {} elements of {}, expected {order}",
                elements.len(),
                rs.label()
            )));
        }
        let mut group = Self {
            rs,
            elements,
            index,
            right: Vec::new(),
            left: Vec::new(),
            longest: 0,
        };
        let size = group.elements.len();
        group.right = (0..group.rs.rank)
            .map(|i| {
                (0..size)
                    .map(|x| group.mul_action(x, &simple_actions[i], false))
                    .collect()
            })
            .collect();
        group.left = (0..group.rs.rank)
            .map(|i| {
                (0..size)
                    .map(|x| group.mul_action(x, &simple_actions[i], true))
                    .collect()
            })
            .collect();
        group.longest = (0..size)
            .max_by_key(|&x| group.elements[x].length())
            .unwrap();
        Ok(group)
    }

    fn mul_action(&self, x: ElementId, s: &[u16], left: bool) -> ElementId {
        let ax = &self.elements[x].action;
        let action: Vec<u16> = if left {
            ax.iter().map(|&r| s[r as usize]).collect()
        } else {
            s.iter().map(|&r| ax[r as usize]).collect()
        };
        self.index[&action]
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, x: ElementId) -> &WeylElement {
        &self.elements[x]
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        0..self.elements.len()
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn longest(&self) -> ElementId {
        self.longest
    }

    pub fn length(&self, x: ElementId) -> usize {
        self.elements[x].length()
    }

    pub fn name(&self, x: ElementId) -> String {
        self.elements[x].name()
    }

    /// `x s_i` for 0-indexed `i`.
    pub fn right_simple(&self, x: ElementId, i: usize) -> ElementId {
        self.right[i][x]
    }

    /// `s_i x` for 0-indexed `i`.
    pub fn left_simple(&self, x: ElementId, i: usize) -> ElementId {
        self.left[i][x]
    }

    /// `x y` (apply `y` first).
    pub fn multiply(&self, x: ElementId, y: ElementId) -> ElementId {
        let ax = &self.elements[x].action;
        let action: Vec<u16> = self.elements[y]
            .action
            .iter()
            .map(|&r| ax[r as usize])
            .collect();
        self.index[&action]
    }

    pub fn inverse(&self, x: ElementId) -> ElementId {
        let ax = &self.elements[x].action;
        let mut inv = vec![0u16; ax.len()];
        for (r, &img) in ax.iter().enumerate() {
            inv[img as usize] = r as u16;
        }
        self.index[&inv]
    }

    /// `x s_α` for a positive root index `alpha`.
    pub fn right_reflection(&self, x: ElementId, alpha: usize) -> ElementId {
        let ax = &self.elements[x].action;
        let action: Vec<u16> = (0..self.rs.root_count())
            .map(|r| ax[self.rs.reflect(alpha, r)])
            .collect();
        self.index[&action]
    }

    /// Element with the given 1-indexed reduced (or any) word.
    pub fn from_word(&self, word: &[usize]) -> Result<ElementId> {
        let mut x = self.identity();
        for &i in word {
            if i == 0 || i > self.rs.rank {
                return Err(Error::InvalidRoot(format!("no simple reflection s{i}")));
            }
            x = self.right_simple(x, i - 1);
        }
        Ok(x)
    }

    /// Parses `"e"`, `"s2s1"`, `"s2 s1"` or `"2,1"`.
    pub fn parse_element(&self, s: &str) -> Result<ElementId> {
        let t = s.trim();
        if t == "e" || t.is_empty() {
            return Ok(self.identity());
        }
        let bad = || Error::InvalidRoot(format!("cannot parse Weyl group element {s:?}"));
        let word: Vec<usize> = if t.contains('s') {
            t.split('s')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            t.split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        self.from_word(&word)
    }

    /// `N(x) = {α ∈ Φ⁺ : x(α) ∈ -Φ⁺}`.
    pub fn inversion_set(&self, x: ElementId) -> RootSet {
        let e = &self.elements[x];
        (0..self.rs.positive_count)
            .filter(|&p| !self.rs.is_positive(e.apply(p)))
            .collect()
    }

    /// Left descents as 0-indexed simple reflections.
    fn left_descent(&self, x: ElementId) -> Option<usize> {
        (0..self.rs.rank).find(|&i| self.length(self.left[i][x]) < self.length(x))
    }

    /// Strong Bruhat order by descent recursion: for a left descent `s` of
    /// `v`, `u <= v` iff `su <= sv` (when `s` is a descent of `u`) or
    /// `u <= sv` (otherwise).
    pub fn bruhat_leq(&self, mut u: ElementId, mut v: ElementId) -> bool {
        loop {
            if self.length(u) > self.length(v) {
                return false;
            }
            if self.length(u) == 0 {
                return true;
            }
            let Some(s) = self.left_descent(v) else {
                return u == v;
            };
            let su = self.left[s][u];
            if self.length(su) < self.length(u) {
                u = su;
            }
            v = self.left[s][v];
        }
    }

    /// `u <=_L v` iff `ℓ(v) = ℓ(u) + ℓ(v u^{-1})`.
    pub fn left_weak_leq(&self, u: ElementId, v: ElementId) -> bool {
        let vu = self.multiply(v, self.inverse(u));
        self.length(v) == self.length(u) + self.length(vu)
    }

    /// `[w, w0]` in the strong order.
    pub fn bruhat_interval(&self, w: ElementId) -> Vec<ElementId> {
        self.elements().filter(|&v| self.bruhat_leq(w, v)).collect()
    }

    /// One-line notation for type `A`: `s_i` is the transposition `(i, i+1)`.
    pub fn one_line(&self, x: ElementId) -> Option<Permutation> {
        if self.rs.cartan_type != CartanType::A {
            return None;
        }
        let n = self.rs.rank + 1;
        let mut w = Permutation::identity(n);
        for i in self.elements[x].word() {
            w = w.swapped(i, i + 1);
        }
        Some(w)
    }

    /// Inverse of [`WeylGroup::one_line`].
    pub fn from_one_line(&self, w: &Permutation) -> Result<ElementId> {
        if self.rs.cartan_type != CartanType::A || w.n() != self.rs.rank + 1 {
            return Err(Error::UnsupportedRootSystem(format!(
                "{} cannot hold a permutation of {}",
                self.rs.label(),
                w.n()
            )));
        }
        // Right descents peel off: w = w' s_i with w(i) > w(i+1).
        let mut word = Vec::new();
        let mut cur = w.clone();
        while let Some(i) = (1..cur.n()).find(|&i| cur.at(i) > cur.at(i + 1)) {
            word.push(i);
            cur = cur.swapped(i, i + 1);
        }
        word.reverse();
        self.from_word(&word)
    }

    pub fn display(&self, x: ElementId) -> String {
        match self.one_line(x) {
            Some(p) => p.to_string(),
            None => self.name(x),
        }
    }
}

/// A validated Hessenberg space `M ⊆ Φ⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HessenbergSpace {
    m: RootSet,
}

impl HessenbergSpace {
    pub fn roots(&self) -> RootSet {
        self.m
    }
}

pub fn validate_hessenberg_space(rs: &RootSystem, m: RootSet) -> Result<HessenbergSpace> {
    if !m.is_subset(rs.all_positive()) {
        return Err(Error::InvalidHessenbergSpace(
            "M must consist of positive roots".into(),
        ));
    }
    for a in m.iter() {
        for b in 0..rs.positive_count {
            if let Some(d) = rs.diff[a][b] {
                if !m.contains(d) {
                    return Err(Error::InvalidHessenbergSpace(format!(
                        "{} ∈ M and {} ∈ Φ⁺, but their difference {} ∉ M",
                        rs.format_root(a),
                        rs.format_root(b),
                        rs.format_root(d)
                    )));
                }
            }
        }
    }
    Ok(HessenbergSpace { m })
}

/// The type-A Hessenberg space of `h`: `e_i - e_j ∈ M` iff `j <= h(i)`.
pub fn hessenberg_space_of(rs: &RootSystem, h: &HessenbergFunction) -> Result<HessenbergSpace> {
    if rs.cartan_type != CartanType::A || rs.rank + 1 != h.n() {
        return Err(Error::UnsupportedRootSystem(format!(
            "{} does not match n = {}",
            rs.label(),
            h.n()
        )));
    }
    let m = h
        .windows()
        .map(|(i, j)| {
            let mut r = vec![0; rs.rank];
            for c in &mut r[i - 1..j - 1] {
                *c = 1;
            }
            rs.positive_index(&r).expect("e_i - e_j is a positive root")
        })
        .collect();
    validate_hessenberg_space(rs, m)
}

/// All Hessenberg spaces of `rs`, i.e. subsets of `Φ⁺` closed under
/// subtracting positive roots.
pub fn all_hessenberg_spaces(rs: &RootSystem) -> Vec<HessenbergSpace> {
    let n = rs.positive_count;
    let below: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter_map(|b| rs.diff[a][b]).collect())
        .collect();
    let mut out = Vec::new();
    // Positive roots are stored by height, so every root below `a` is decided first.
    fn go(k: usize, n: usize, below: &[Vec<usize>], cur: RootSet, out: &mut Vec<HessenbergSpace>) {
        if k == n {
            out.push(HessenbergSpace { m: cur });
            return;
        }
        go(k + 1, n, below, cur, out);
        if below[k].iter().all(|&d| cur.contains(d)) {
            let mut with = cur;
            with.insert(k);
            go(k + 1, n, below, with, out);
        }
    }
    go(0, n, &below, RootSet::default(), &mut out);
    out
}

/// `S` is `R`-closed: `α + β ∈ S` whenever `α, β ∈ S` and `α + β ∈ R`.
pub fn is_closed_in(rs: &RootSystem, s: RootSet, r: RootSet) -> bool {
    for a in s.iter() {
        for b in s.iter() {
            if let Some(c) = rs.sum[a][b] {
                if r.contains(c) && !s.contains(c) {
                    return false;
                }
            }
        }
    }
    true
}

/// `S ⊆ M` with both `S` and `M \ S` closed in `M`.
pub fn is_weyl_type(rs: &RootSystem, hs: &HessenbergSpace, s: RootSet) -> bool {
    s.is_subset(hs.m) && is_closed_in(rs, s, hs.m) && is_closed_in(rs, hs.m.minus(s), hs.m)
}

/// All Weyl-type subsets of `M`, sorted.
pub fn weyl_type_subsets(group: &WeylGroup, hs: &HessenbergSpace) -> Vec<RootSet> {
    let rs = group.root_system();
    let members: Vec<usize> = hs.m.iter().collect();
    if members.len() <= SUBSET_SCAN_MAX {
        let mut out: Vec<RootSet> = (0u64..1 << members.len())
            .map(|mask| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect::<RootSet>()
            })
            .filter(|&s| is_weyl_type(rs, hs, s))
            .collect();
        out.sort();
        out
    } else {
        // Every Weyl-type subset is N(w) ∩ M for some w, and conversely.
        let set: BTreeSet<RootSet> = group
            .elements()
            .map(|x| group.inversion_set(x).intersect(hs.m))
            .collect();
        set.into_iter().collect()
    }
}

/// `𝒲(S, H) = {w : N(w) ∩ M = S}` for every `S`; members sorted by id
/// (i.e. by length, then reduced word).
pub fn partition_classes(
    group: &WeylGroup,
    hs: &HessenbergSpace,
) -> BTreeMap<RootSet, Vec<ElementId>> {
    let mut out: BTreeMap<RootSet, Vec<ElementId>> = BTreeMap::new();
    for x in group.elements() {
        out.entry(group.inversion_set(x).intersect(hs.m))
            .or_default()
            .push(x);
    }
    out
}

/// `z_S`: the unique `w` with `N(w) ∩ M = S` and
/// `{α ∈ Φ⁺ : w(α) ∈ -Π} ⊆ M`.
fn z_element(
    group: &WeylGroup,
    hs: &HessenbergSpace,
    class: &[ElementId],
    s: RootSet,
) -> Result<ElementId> {
    let rs = group.root_system();
    let neg_simple: BTreeSet<usize> = rs.simple_roots().iter().map(|p| rs.negate(p)).collect();
    let candidates: Vec<ElementId> = class
        .iter()
        .copied()
        .filter(|&x| {
            let e = group.element(x);
            (0..rs.positive_count)
                .filter(|&p| neg_simple.contains(&e.apply(p)))
                .all(|p| hs.m.contains(p))
        })
        .collect();
    match candidates.as_slice() {
        [z] => Ok(*z),
        _ => Err(Error::Internal(format!(
            "{} candidates for z_S with S = {}",
            candidates.len(),
            rs.format_set(s)
        ))),
    }
}

/// `(z_S, w_S)`, the minimum and maximum of `𝒲(S, H)` in left weak order,
/// with `w_S = w0 z_{M \ S}`. Both extremal properties are checked.
pub fn z_and_w(
    group: &WeylGroup,
    hs: &HessenbergSpace,
    s: RootSet,
) -> Result<(ElementId, ElementId)> {
    z_and_w_with(group, hs, &partition_classes(group, hs), s)
}

fn z_and_w_with(
    group: &WeylGroup,
    hs: &HessenbergSpace,
    classes: &BTreeMap<RootSet, Vec<ElementId>>,
    s: RootSet,
) -> Result<(ElementId, ElementId)> {
    let rs = group.root_system();
    if !is_weyl_type(rs, hs, s) {
        return Err(Error::NotWeylType(rs.format_set(s)));
    }
    let class = |t: RootSet| classes.get(&t).map(Vec::as_slice).unwrap_or(&[]);
    let z = z_element(group, hs, class(s), s)?;
    let complement = hs.m.minus(s);
    let zc = z_element(group, hs, class(complement), complement)?;
    let w = group.multiply(group.longest(), zc);
    let members = class(s);
    let extremal = members.contains(&w)
        && members
            .iter()
            .all(|&x| group.left_weak_leq(z, x) && group.left_weak_leq(x, w));
    if !extremal {
        return Err(Error::Internal(format!(
            "z_S = {}, w_S = {} do not bound the class of {}",
            group.name(z),
            group.name(w),
            rs.format_set(s)
        )));
    }
    Ok((z, w))
}

/// `{w_S : S of Weyl type}`, sorted by id.
pub fn h_admissible_elements(group: &WeylGroup, hs: &HessenbergSpace) -> Result<Vec<ElementId>> {
    let classes = partition_classes(group, hs);
    let mut out = weyl_type_subsets(group, hs)
        .into_iter()
        .map(|s| z_and_w_with(group, hs, &classes, s).map(|(_, w)| w))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylEdge {
    pub u: ElementId,
    pub v: ElementId,
    /// The root `α ∈ M` with `v = u s_α`.
    pub alpha: usize,
    /// Positive representative of the label `±u(α)`.
    pub label: usize,
}

/// `Γ(Hess(s, H))` over `W`, or an induced subgraph of it.
#[derive(Debug, Clone)]
pub struct WeylGkmGraph {
    pub vertices: Vec<ElementId>,
    pub edges: Vec<WeylEdge>,
}

impl WeylGkmGraph {
    pub fn degree(&self, x: ElementId) -> usize {
        self.edges.iter().filter(|e| e.u == x || e.v == x).count()
    }

    pub fn degrees(&self) -> BTreeMap<ElementId, usize> {
        let mut d: BTreeMap<ElementId, usize> = self.vertices.iter().map(|&x| (x, 0)).collect();
        for e in &self.edges {
            *d.get_mut(&e.u).unwrap() += 1;
            *d.get_mut(&e.v).unwrap() += 1;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return true;
        };
        let mut adj: HashMap<ElementId, Vec<ElementId>> = HashMap::new();
        for e in &self.edges {
            adj.entry(e.u).or_default().push(e.v);
            adj.entry(e.v).or_default().push(e.u);
        }
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

fn induced_weyl_graph(
    group: &WeylGroup,
    hs: &HessenbergSpace,
    vertices: Vec<ElementId>,
) -> WeylGkmGraph {
    let rs = group.root_system();
    let members: BTreeSet<ElementId> = vertices.iter().copied().collect();
    let mut edges = Vec::new();
    for &x in &vertices {
        for alpha in hs.m.iter() {
            let y = group.right_reflection(x, alpha);
            if x < y && members.contains(&y) {
                let image = group.element(x).apply(alpha);
                let label = if rs.is_positive(image) {
                    image
                } else {
                    rs.negate(image)
                };
                edges.push(WeylEdge {
                    u: x,
                    v: y,
                    alpha,
                    label,
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.u, e.v));
    WeylGkmGraph { vertices, edges }
}

/// Vertices `W`; edges `{w, w s_α}` for `α ∈ M`.
pub fn arbitrary_gkm_graph(group: &WeylGroup, hs: &HessenbergSpace) -> WeylGkmGraph {
    induced_weyl_graph(group, hs, group.elements().collect())
}

/// `Γ(Ω_w ∩ Hess(s, H))`: induced on the strong interval `[w, w0]`.
pub fn arbitrary_interval_graph(
    group: &WeylGroup,
    hs: &HessenbergSpace,
    w: ElementId,
) -> WeylGkmGraph {
    induced_weyl_graph(group, hs, group.bruhat_interval(w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArbitraryReport {
    pub root_system: String,
    pub w: String,
    pub s: Vec<String>,
    pub representative: String,
    pub interval_size: usize,
    pub cell_dimension: usize,
    pub regular: bool,
    pub violating_vertex: Option<String>,
    pub connected: bool,
    pub simply_laced: bool,
    pub hess_schubert_smooth: crate::classify::Verdict,
    pub reason: String,
}

/// Regularity of `Γ(Ω_{w̃} ∩ Hess(s, H))` for `w̃ = w_S`, `S = N(w) ∩ M`,
/// and the smoothness verdict it licenses (simply-laced types only).
pub fn classify_arbitrary(
    group: &WeylGroup,
    hs: &HessenbergSpace,
    w: ElementId,
) -> Result<ArbitraryReport> {
    use crate::classify::Verdict;
    let rs = group.root_system();
    let s = group.inversion_set(w).intersect(hs.m);
    let (_, rep) = z_and_w(group, hs, s)?;
    let dim = hs.m.minus(s).len();
    let g = arbitrary_interval_graph(group, hs, rep);
    let degrees = g.degrees();
    let violating = degrees
        .iter()
        .find(|(_, &d)| d != dim)
        .map(|(&x, _)| group.display(x));
    let regular = violating.is_none();
    let simply_laced = rs.cartan_type.is_simply_laced();
    let (verdict, reason) = match (regular, simply_laced) {
        (true, true) => (
            Verdict::Yes,
            "regular graph at the admissible representative, simply-laced type".to_string(),
        ),
        (true, false) => (
            Verdict::Unknown,
            "regular graph, but smoothness is withheld: non-simply-laced".to_string(),
        ),
        (false, _) => (
            Verdict::Unknown,
            "graph at the admissible representative is not regular".to_string(),
        ),
    };
    Ok(ArbitraryReport {
        root_system: rs.label(),
        w: group.display(w),
        s: s.iter().map(|p| rs.format_root(p)).collect(),
        representative: group.display(rep),
        interval_size: g.vertices.len(),
        cell_dimension: dim,
        regular,
        violating_vertex: violating,
        connected: g.is_connected(),
        simply_laced,
        hess_schubert_smooth: verdict,
        reason,
    })
}

/// UTF-8 tables: `N(w)` and `N(w) ∩ M` per element, then `S ↦ (𝒲(S, H), z_S, w_S)`.
pub fn tables(group: &WeylGroup, hs: &HessenbergSpace) -> Result<String> {
    use std::fmt::Write as _;
    let rs = group.root_system();
    let mut order: Vec<ElementId> = group.elements().collect();
    if rs.cartan_type == CartanType::A {
        order.sort_by_key(|&x| group.one_line(x));
    }
    let elem_label = |x: ElementId| match group.one_line(x) {
        Some(p) if x == group.identity() => format!("{p} = e"),
        Some(p) => format!("{p} = {}", group.name(x)),
        None => group.name(x),
    };
    let mut out = String::new();
    let _ = writeln!(out, "{}  M = {}", rs.label(), rs.format_set(hs.m));
    let _ = writeln!(out);
    let rows: Vec<[String; 3]> = order
        .iter()
        .map(|&x| {
            let n = group.inversion_set(x);
            [
                elem_label(x),
                rs.format_set(n),
                rs.format_set(n.intersect(hs.m)),
            ]
        })
        .collect();
    write_table(&mut out, ["w", "N(w)", "N(w) ∩ M"], &rows);
    let _ = writeln!(out);

    let weyl = weyl_type_subsets(group, hs);
    let classes = partition_classes(group, hs);
    let mut rows = Vec::new();
    for s in &weyl {
        let (z, w) = z_and_w_with(group, hs, &classes, *s)?;
        let mut members = classes.get(s).cloned().unwrap_or_default();
        if rs.cartan_type == CartanType::A {
            members.sort_by_key(|&x| group.one_line(x));
        }
        let members: Vec<String> = members.iter().map(|&x| group.display(x)).collect();
        rows.push([
            rs.format_set(*s),
            format!("{{{}}}", members.join(", ")),
            group.display(z),
            group.display(w),
        ]);
    }
    write_table(&mut out, ["S", "W(S,H)", "z_S", "w_S"], &rows);
    let members: Vec<usize> = hs.m.iter().collect();
    if members.len() <= SUBSET_SCAN_MAX {
        let rejected: Vec<String> = (0u64..1 << members.len())
            .map(|mask| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect::<RootSet>()
            })
            .filter(|s| !weyl.contains(s))
            .map(|s| rs.format_set(s))
            .collect();
        let _ = writeln!(out);
        if rejected.is_empty() {
            let _ = writeln!(out, "every subset of M is of Weyl type");
        } else {
            for s in rejected {
                let _ = writeln!(out, "{s} is not of Weyl type");
            }
        }
    }
    Ok(out)
}

fn write_table<const K: usize>(out: &mut String, header: [&str; K], rows: &[[String; K]]) {
    use std::fmt::Write as _;
    let width = |s: &str| s.chars().count();
    let mut widths: [usize; K] = header.map(width);
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(width(cell));
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, c) in cells.iter().enumerate() {
            if k > 0 {
                s.push_str(" | ");
            }
            s.push_str(c);
            if k + 1 < K {
                s.push_str(&" ".repeat(widths[k] - width(c)));
            }
        }
        s
    };
    let _ = writeln!(out, "{}", line(header.to_vec()));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    let _ = writeln!(out, "{}", rule.join("-+-"));
    for row in rows {
        let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
    }
}
