//! The seven h-decorated patterns whose avoidance characterizes regularity
//! of `Γ(Ω_w ∩ Hess(s, h))` for h-admissible `w`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hessenberg::{is_admissible, HessenbergFunction};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HPattern {
    P2143,
    P1324,
    P1243,
    P2134,
    P1423,
    P2314,
    P2413,
}

impl HPattern {
    pub const ALL: [HPattern; 7] = [
        HPattern::P2143,
        HPattern::P1324,
        HPattern::P1243,
        HPattern::P2134,
        HPattern::P1423,
        HPattern::P2314,
        HPattern::P2413,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HPattern::P2143 => "h-2143",
            HPattern::P1324 => "h-1324",
            HPattern::P1243 => "h-1243",
            HPattern::P2134 => "h-2134",
            HPattern::P1423 => "h-1423",
            HPattern::P2314 => "h-2314",
            HPattern::P2413 => "h-2413",
        }
    }

    /// Relative order of `(w(i), w(j), w(k), w(l))`, e.g. `[2, 1, 4, 3]`.
    pub fn value_order(self) -> [usize; 4] {
        match self {
            HPattern::P2143 => [2, 1, 4, 3],
            HPattern::P1324 => [1, 3, 2, 4],
            HPattern::P1243 => [1, 2, 4, 3],
            HPattern::P2134 => [2, 1, 3, 4],
            HPattern::P1423 => [1, 4, 2, 3],
            HPattern::P2314 => [2, 3, 1, 4],
            HPattern::P2413 => [2, 4, 1, 3],
        }
    }

    /// Window constraints on `i < j < k < l`.
    fn windows_hold(self, h: &HessenbergFunction, [i, j, k, l]: [usize; 4]) -> bool {
        let hh = |x: usize| h.at(x);
        match self {
            HPattern::P2143 => l <= hh(i),
            HPattern::P1324 => l <= hh(j) && k <= hh(i),
            HPattern::P1243 => l <= hh(j) && j <= hh(i) && hh(i) < l,
            HPattern::P2134 => l <= hh(k) && k <= hh(i) && hh(i) < l,
            HPattern::P1423 => l <= hh(j) && k <= hh(i) && hh(i) < l,
            HPattern::P2314 => l <= hh(j) && k <= hh(i) && hh(i) < l,
            HPattern::P2413 => j <= hh(i) && hh(i) < k && k <= hh(j) && hh(j) < l && l <= hh(k),
        }
    }

    fn values_hold(self, w: &Permutation, idx: [usize; 4]) -> bool {
        let order = self.value_order();
        // Each consecutive pair in rank order must increase.
        let mut by_rank = [0usize; 4];
        for (slot, &r) in order.iter().enumerate() {
            by_rank[r - 1] = w.at(idx[slot]);
        }
        by_rank.windows(2).all(|p| p[0] < p[1])
    }
}

impl fmt::Display for HPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().trim_start_matches("h-");
        HPattern::ALL
            .into_iter()
            .find(|p| &p.name()[2..] == key)
            .ok_or_else(|| Error::Precondition(format!("unknown pattern {s:?}")))
    }
}

impl Serialize for HPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// An occurrence of a pattern at 1-indexed positions `i < j < k < l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pattern: HPattern,
    pub indices: [usize; 4],
}

/// Result of a single pattern scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternMatch {
    pub witness: Option<Witness>,
    /// False when `w` is not h-admissible, where the equivalence with
    /// regularity makes no claim.
    pub in_scope: bool,
}

/// Lexicographically first occurrence of `pattern` in `w`.
pub fn contains_hpattern(
    w: &Permutation,
    h: &HessenbergFunction,
    pattern: HPattern,
) -> Result<PatternMatch> {
    let in_scope = is_admissible(w, h)?;
    let n = w.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let idx = [i, j, k, l];
                    if pattern.windows_hold(h, idx) && pattern.values_hold(w, idx) {
                        return Ok(PatternMatch {
                            witness: Some(Witness {
                                pattern,
                                indices: idx,
                            }),
                            in_scope,
                        });
                    }
                }
            }
        }
    }
    Ok(PatternMatch {
        witness: None,
        in_scope,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Avoidance {
    pub avoids: bool,
    pub witnesses: Vec<Witness>,
}

/// Scans all seven patterns; `w` must be h-admissible.
pub fn avoids_all_associated(w: &Permutation, h: &HessenbergFunction) -> Result<Avoidance> {
    if !is_admissible(w, h)? {
        return Err(Error::NotAdmissible(w.clone()));
    }
    let witnesses = HPattern::ALL
        .into_iter()
        .map(|p| contains_hpattern(w, h, p).map(|m| m.witness))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    Ok(Avoidance {
        avoids: witnesses.is_empty(),
        witnesses,
    })
}
