//! Permutations in one-line notation and the strong Bruhat order on `S_n`.
//!
//! Positions and values are 1-indexed throughout. Composition is right to
//! left: `compose(u, v)(i) = u(v(i))`, and `apply_transposition(w, i, j)` is
//! right multiplication by the transposition `(i, j)`, i.e. it swaps the
//! entries at positions `i` and `j`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest `n` for which [`bruhat_interval`] scans all of `S_n`; above it the
/// interval is grown by breadth-first search over Bruhat covers.
pub const INTERVAL_SCAN_MAX_N: usize = 8;

/// An element of `S_n` in one-line notation.
///
/// The derived `Ord` is lexicographic on the entries, which is the ordering
/// used for every deterministic listing in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("n = {n} is too large")));
        }
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidPermutation(format!(
                    "{entries:?} is not a bijection of 1..={n}"
                )));
            }
            seen[e] = true;
        }
        Ok(Self { entries })
    }

    pub fn from_slice(entries: &[usize]) -> Result<Self> {
        let bytes = entries
            .iter()
            .map(|&e| u8::try_from(e).map_err(|_| Error::InvalidPermutation(format!("{e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(bytes)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: (1..=n as u8).collect(),
        }
    }

    /// `w0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Self {
            entries: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// `w(i)` for a 1-indexed position.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    /// Position of value `a`, i.e. `w^{-1}(a)`.
    pub fn position_of(&self, a: usize) -> usize {
        self.entries.iter().position(|&e| e as usize == a).unwrap() + 1
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &e)| e as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (k, &e) in self.entries.iter().enumerate() {
            inv[e as usize - 1] = (k + 1) as u8;
        }
        Self { entries: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let e = &self.entries;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Swap the entries at positions `i < j`; panics on bad positions.
    /// See [`apply_transposition`] for the checked variant.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, j - 1);
        Self { entries }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
        } else {
            for (k, e) in self.entries.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let entries: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Self::new(entries)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn check_rank(u: &Permutation, v: &Permutation) -> Result<()> {
    if u.n() != v.n() {
        return Err(Error::RankMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(())
}

/// `(u ∘ v)(i) = u(v(i))`.
pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    check_rank(u, v)?;
    Ok(Permutation {
        entries: v
            .entries
            .iter()
            .map(|&k| u.entries[k as usize - 1])
            .collect(),
    })
}

pub fn inverse(w: &Permutation) -> Permutation {
    w.inverse()
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

/// `w (i, j)`: swaps the values at positions `i` and `j`, `1 <= i < j <= n`.
pub fn apply_transposition(w: &Permutation, i: usize, j: usize) -> Result<Permutation> {
    if i == 0 || i >= j || j > w.n() {
        return Err(Error::PositionOutOfRange { i, j, n: w.n() });
    }
    Ok(w.swapped(i, j))
}

pub fn longest_element(n: usize) -> Permutation {
    Permutation::longest(n)
}

/// Tableau criterion: `u <= v` iff for every `k` the sorted prefix
/// `{u(1..k)}↑` is entrywise at most `{v(1..k)}↑`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    check_rank(u, v)?;
    Ok(bruhat_leq_unchecked(u, v))
}

pub(crate) fn bruhat_leq_unchecked(u: &Permutation, v: &Permutation) -> bool {
    let n = u.n();
    // Equivalent count form: for all k and all thresholds t,
    // #{i <= k : u(i) >= t} <= #{i <= k : v(i) >= t}.
    let mut cu = vec![0i32; n + 2];
    let mut cv = vec![0i32; n + 2];
    for k in 0..n {
        cu[u.entries[k] as usize] += 1;
        cv[v.entries[k] as usize] += 1;
        let mut su = 0;
        let mut sv = 0;
        for t in (1..=n).rev() {
            su += cu[t];
            sv += cv[t];
            if su > sv {
                return false;
            }
        }
    }
    true
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation {
            entries: current.clone(),
        });
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Upper Bruhat covers of `w`: `w (i, j)` with `w(i) < w(j)` and no position
/// strictly between carrying a value strictly between.
pub fn upper_covers(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = (w.at(i), w.at(j));
            if a < b && !(i + 1..j).any(|k| a < w.at(k) && w.at(k) < b) {
                out.push(w.swapped(i, j));
            }
        }
    }
    out
}

/// `[w, w0] = {v : w <= v}`, sorted lexicographically.
pub fn bruhat_interval(w: &Permutation) -> Vec<Permutation> {
    if w.n() <= INTERVAL_SCAN_MAX_N {
        all_permutations(w.n())
            .into_iter()
            .filter(|v| bruhat_leq_unchecked(w, v))
            .collect()
    } else {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w.clone());
        while let Some(x) = queue.pop_front() {
            for y in upper_covers(&x) {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }
}
