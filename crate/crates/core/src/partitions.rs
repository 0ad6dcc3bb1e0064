//! Integer partitions with the Young-lattice metric, the cyclic action on
//! `Y_N`, and the two model spaces `X_N` (rectangles) and `C_N` (staircase
//! orbit).
//!
//! Corner rows are 1-based throughout: row `r` refers to the part `λ_r`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty partition is
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Canonicalizes `raw`: zeros are dropped, the remaining entries must be
    /// weakly decreasing.
    pub fn new(raw: impl Into<Vec<u32>>) -> Result<Self> {
        let raw = raw.into();
        let parts: Vec<u32> = raw.iter().copied().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(raw));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    /// Strips zero parts from a weakly decreasing sequence.
    pub(crate) fn from_padded(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::from_sorted(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The 1-based part `λ_row`, zero past the last part.
    pub fn part(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// `λ_1 + length - 1`, or 0 for the empty partition.
    pub fn max_hook(&self) -> usize {
        if self.0.is_empty() {
            0
        } else {
            self.0[0] as usize + self.0.len() - 1
        }
    }

    pub fn in_yn(&self, n: usize) -> bool {
        self.max_hook() < n
    }

    pub(crate) fn check_yn(&self, n: usize) -> Result<()> {
        if self.in_yn(n) {
            Ok(())
        } else {
            Err(Error::NotInYN {
                partition: self.clone(),
                n,
            })
        }
    }

    /// The diagram intersection `λ ∩ μ`.
    pub fn intersection(&self, other: &Partition) -> Partition {
        Partition(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// Removes the last box of row `row` if that box is an inner corner.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) == self.part(row + 1) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Some(Partition::from_padded(parts))
    }

    /// Adds a box at the end of row `row` if the result is a partition.
    /// `row = len + 1` starts a new row.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 {
            return None;
        }
        if row > 1 && self.part(row - 1) == self.part(row) {
            return None;
        }
        let mut parts = self.0.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition::from_sorted(parts))
    }

    /// Rows carrying an inner (removable) corner.
    pub fn inner_corner_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let raw = trimmed
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u32>().map_err(|e| Error::ParsePartition {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(raw)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Young-lattice distance `|λ| + |μ| - 2|λ ∩ μ|`.
pub fn young_distance(a: &Partition, b: &Partition) -> u64 {
    a.size() + b.size() - 2 * a.intersection(b).size()
}

/// All partitions with maximal hook length below `n`, in lexicographic order
/// of their parts. There are `2^(n-1)` of them.
pub fn enumerate_yn(n: usize) -> Vec<Partition> {
    fn grow(prefix: &mut Vec<u32>, cap: u32, n: usize, out: &mut Vec<Partition>) {
        out.push(Partition(prefix.clone()));
        for p in 1..=cap {
            prefix.push(p);
            if prefix[0] as usize + prefix.len() - 1 < n {
                grow(prefix, p, n, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1usize << n.saturating_sub(1));
    if n >= 1 {
        grow(&mut Vec::new(), n as u32 - 1, n, &mut out);
    }
    out.sort();
    out
}

/// The cyclic action `(λ_1,…,λ_m) ↦ (N-m-1, λ_1-1, …, λ_m-1)`.
pub fn tau(lambda: &Partition, n: usize) -> Result<Partition> {
    lambda.check_yn(n)?;
    Ok(tau_unchecked(lambda, n))
}

pub(crate) fn tau_unchecked(lambda: &Partition, n: usize) -> Partition {
    let m = lambda.len();
    let mut parts = Vec::with_capacity(m + 1);
    parts.push((n - m - 1) as u32);
    parts.extend(lambda.parts().iter().map(|&p| p - 1));
    Partition::from_padded(parts)
}

/// `tau` applied `power` times.
pub fn tau_pow(lambda: &Partition, n: usize, power: usize) -> Result<Partition> {
    lambda.check_yn(n)?;
    let mut out = lambda.clone();
    for _ in 0..power % n.max(1) {
        out = tau_unchecked(&out, n);
    }
    Ok(out)
}

/// The orbit sizes `|τ^j(λ)|` for `j = 0..N`.
pub fn orbit_sizes(lambda: &Partition, n: usize) -> Result<Vec<u64>> {
    lambda.check_yn(n)?;
    let mut cur = lambda.clone();
    let mut sizes = Vec::with_capacity(n);
    for _ in 0..n {
        sizes.push(cur.size());
        cur = tau_unchecked(&cur, n);
    }
    Ok(sizes)
}

fn check_index(j: usize, n: usize) -> Result<()> {
    if j <= n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: j, max: n })
    }
}

/// The rectangle `R_j = (j^(N-j))`; `R_N` is an alias of `R_0`.
pub fn rectangular(j: usize, n: usize) -> Result<Partition> {
    check_index(j, n)?;
    if j == 0 || j == n {
        return Ok(Partition::empty());
    }
    Ok(Partition(vec![j as u32; n - j]))
}

/// `d(R_i, R_j) = |j-i| (N - |j-i|)`.
pub fn xn_distance(i: usize, j: usize, n: usize) -> Result<u64> {
    check_index(i, n)?;
    check_index(j, n)?;
    let gap = i.abs_diff(j) as u64;
    Ok(gap * (n as u64 - gap))
}

/// The staircase `(s, s-1, …, 1)`.
pub fn staircase(s: usize) -> Partition {
    Partition((1..=s as u32).rev().collect())
}

/// `α_j = τ^j(α_0)` with `α_0 = (k-1, …, 1)`, `k = ⌊N/2⌋`.
pub fn alpha(j: usize, n: usize) -> Result<Partition> {
    check_index(j, n)?;
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let base = staircase((n / 2).saturating_sub(1));
    tau_pow(&base, n, j)
}

/// Step length `d(α_0, α_1)` of the cycle `C_N`.
pub fn cycle_step(n: usize) -> u64 {
    if n % 2 == 1 {
        2
    } else {
        1
    }
}

/// `d(α_i, α_j) = min(|j-i|, N-|j-i|) · d(α_0, α_1)`.
pub fn cycle_distance(i: usize, j: usize, n: usize) -> Result<u64> {
    check_index(i, n)?;
    check_index(j, n)?;
    let gap = i.abs_diff(j);
    Ok(gap.min(n - gap) as u64 * cycle_step(n))
}

/// Inner and outer corners of a partition in `Y_N`, as 1-based rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corners {
    pub inner: Vec<usize>,
    /// Rows where a box can be added without leaving `Y_N`.
    pub outer: Vec<usize>,
}

pub fn corners(lambda: &Partition, n: usize) -> Result<Corners> {
    lambda.check_yn(n)?;
    let inner = lambda.inner_corner_rows();
    let outer = (1..=lambda.len() + 1)
        .filter(|&r| lambda.add_box(r).is_some_and(|p| p.in_yn(n)))
        .collect();
    Ok(Corners { inner, outer })
}

/// `‖λ‖₁ = Σ_j |τ^j(λ)|` over one full period.
pub fn norm1(lambda: &Partition, n: usize) -> Result<u64> {
    Ok(orbit_sizes(lambda, n)?.iter().sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    /// The rectangles `R_0, …, R_{N-1}`.
    Xn,
    /// The staircase orbit `α_0, …, α_{N-1}`.
    Cycle,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::Xn => "xn",
            SpaceKind::Cycle => "cycle",
        })
    }
}

impl FromStr for SpaceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "xn" => Ok(SpaceKind::Xn),
            "cycle" => Ok(SpaceKind::Cycle),
            other => Err(format!("unknown space {other:?}, expected cycle or xn")),
        }
    }
}

/// One of the two `N`-point model spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelSpace {
    pub kind: SpaceKind,
    pub n: usize,
}

impl ModelSpace {
    pub fn new(kind: SpaceKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        Ok(ModelSpace { kind, n })
    }

    pub fn distance(&self, i: usize, j: usize) -> Result<u64> {
        match self.kind {
            SpaceKind::Xn => xn_distance(i, j, self.n),
            SpaceKind::Cycle => cycle_distance(i, j, self.n),
        }
    }

    pub fn distance_matrix(&self) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.distance(i, j).expect("indices below n"))
                    .collect()
            })
            .collect()
    }

    /// The point indexed `j` as a partition.
    pub fn point(&self, j: usize) -> Result<Partition> {
        match self.kind {
            SpaceKind::Xn => rectangular(j, self.n),
            SpaceKind::Cycle => alpha(j, self.n),
        }
    }
}
