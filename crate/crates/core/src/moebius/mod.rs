//! The discrete Möbius strip `𝔛_N`, outer rims of partitions, and the band
//! subspaces `𝔛_N^(m)`.
//!
//! Sites are pairs `(i,j)` with `0 ≤ i ≤ j ≤ N`, glued by `(i,N) = (0,i)`.
//! Canonically a site is an unordered pair of residues mod `N`, stored sorted.
//! The band `𝔛_N^(m)` holds the sites with `k-m ≤ j-i ≤ N-k+m`, `k = ⌊N/2⌋`,
//! and `𝔛_N° = 𝔛_N^(1)`.

mod cover;
mod embed;
mod fibre;
mod fold;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_yn, Partition};

pub(crate) use cover::Loop;
pub use embed::{double_embed, DeltaEpsilon};
pub use fibre::{enumerate_circcirc, fibre_catalan, fibre_size, fold_fibre, CatalanWord};
pub use fold::{fold, fold_with_trace, FoldPart, FoldStep, FoldResult};

/// A canonical site of `𝔛_N`: `0 ≤ i ≤ j < N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub i: usize,
    pub j: usize,
}

impl Site {
    /// Canonicalizes a triangle position `0 ≤ i ≤ j ≤ N`.
    pub fn new(i: usize, j: usize, n: usize) -> Result<Site> {
        if i > j || j > n {
            return Err(Error::InvalidRim(format!(
                "({i},{j}) is not a site of the strip for N={n}"
            )));
        }
        Ok(Site::from_lift(i as i64, j as i64, n))
    }

    /// Canonical site of any lattice point of the universal cover.
    pub fn from_lift(i: i64, j: i64, n: usize) -> Site {
        let n = n as i64;
        let a = i.rem_euclid(n) as usize;
        let b = j.rem_euclid(n) as usize;
        Site {
            i: a.min(b),
            j: a.max(b),
        }
    }

    /// `j - i` on the canonical representative.
    pub fn width(&self) -> usize {
        self.j - self.i
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Serialize for Site {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The outer rim `ℒ_λ`. Serializes as the array of its sites in lift order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimPath {
    pub n: usize,
    /// `N+1` points from `(0, λ_1)` to `(λ_1, N)`.
    pub lift: Vec<(usize, usize)>,
    /// The first `N` lift points, canonicalized.
    pub sites: Vec<Site>,
}

impl Serialize for RimPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.sites.serialize(serializer)
    }
}

/// Builds the rim by padding `λ` to `N - λ_1` parts and walking from
/// `(0, λ_1)`: for `r = N-λ_1, …, 1`, take `λ_r - λ_{r+1}` i-steps and then
/// one j-step.
pub fn outer_rim(lambda: &Partition, n: usize) -> Result<RimPath> {
    lambda.check_yn(n)?;
    let c = lambda.first() as usize;
    let mut lift = Vec::with_capacity(n + 1);
    let (mut i, mut j) = (0usize, c);
    lift.push((i, j));
    for r in (1..=n - c).rev() {
        for _ in 0..lambda.part(r) - lambda.part(r + 1) {
            i += 1;
            lift.push((i, j));
        }
        j += 1;
        lift.push((i, j));
    }
    let sites = lift[..n]
        .iter()
        .map(|&(i, j)| Site::from_lift(i as i64, j as i64, n))
        .collect();
    Ok(RimPath { n, lift, sites })
}

/// Inverse of [`outer_rim`]. Checks the lift before decoding it.
pub fn rim_to_partition(rim: &RimPath, n: usize) -> Result<Partition> {
    let lift = &rim.lift;
    if lift.len() != n + 1 {
        return Err(Error::InvalidRim(format!(
            "lift has {} points, expected {}",
            lift.len(),
            n + 1
        )));
    }
    let (i0, c) = lift[0];
    if i0 != 0 || c >= n.max(1) {
        return Err(Error::InvalidRim(format!("lift starts at ({i0},{c})")));
    }
    if lift[n] != (c, n) {
        return Err(Error::InvalidRim(format!(
            "lift ends at {:?}, expected ({c},{n})",
            lift[n]
        )));
    }
    let mut runs = Vec::with_capacity(n - c);
    let mut count = 0u32;
    for w in lift.windows(2) {
        let ((ai, aj), (bi, bj)) = (w[0], w[1]);
        if bi > bj {
            return Err(Error::InvalidRim(format!(
                "({bi},{bj}) leaves the strip"
            )));
        }
        if (bi, bj) == (ai + 1, aj) {
            count += 1;
        } else if (bi, bj) == (ai, aj + 1) {
            runs.push(count);
            count = 0;
        } else {
            return Err(Error::InvalidRim(format!(
                "({ai},{aj}) -> ({bi},{bj}) is not a unit step"
            )));
        }
    }
    if count != 0 {
        return Err(Error::InvalidRim("lift does not end with a j-step".into()));
    }
    let mut parts = Vec::with_capacity(runs.len());
    let mut acc = 0u32;
    for &a in &runs {
        acc += a;
        parts.push(acc);
    }
    parts.reverse();
    let lambda = Partition::from_padded(parts);
    let expected = outer_rim(&lambda, n)?;
    if expected.sites != rim.sites {
        return Err(Error::InvalidRim("site list does not match the lift".into()));
    }
    Ok(lambda)
}

fn band_index(n: usize, m: usize) -> Result<()> {
    let k = n / 2;
    if m == 0 || m > k {
        return Err(Error::BadBandIndex { n, m, k });
    }
    Ok(())
}

/// Height bounds `[k-m, N-k+m]` of the band `𝔛_N^(m)`.
pub(crate) fn band_bounds(n: usize, m: usize) -> (i64, i64) {
    let (n, k, m) = (n as i64, (n / 2) as i64, m as i64);
    (k - m, n - k + m)
}

pub fn in_band(site: Site, n: usize, m: usize) -> Result<bool> {
    band_index(n, m)?;
    let (lo, hi) = band_bounds(n, m);
    let w = site.width() as i64;
    Ok(lo <= w && w <= hi)
}

/// All canonical sites of `𝔛_N^(m)`.
pub fn band_sites(n: usize, m: usize) -> Result<Vec<Site>> {
    band_index(n, m)?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let s = Site { i, j };
            if in_band(s, n, m)? {
                out.push(s);
            }
        }
    }
    Ok(out)
}

pub(crate) fn loop_in_band(lp: &Loop, n: usize, m: usize) -> bool {
    let (lo, hi) = band_bounds(n, m);
    lp.h.iter().all(|&h| lo <= h && h <= hi)
}

/// `λ ∈ 𝕐_N°`. For `N ≤ 3` the band is the whole strip.
pub fn in_circ(lambda: &Partition, n: usize) -> bool {
    lambda.in_yn(n) && loop_in_band(&Loop::of_partition(lambda, n), n, 1)
}

pub(crate) fn check_circ(lambda: &Partition, n: usize) -> Result<()> {
    if in_circ(lambda, n) {
        Ok(())
    } else {
        Err(Error::NotInYNCirc {
            partition: lambda.clone(),
            n,
        })
    }
}

/// `𝕐_N^(m)`: partitions whose rim lies in the band `𝔛_N^(m)`.
pub fn enumerate_band_partitions(n: usize, m: usize) -> Result<Vec<Partition>> {
    band_index(n, m)?;
    Ok(enumerate_yn(n)
        .into_iter()
        .filter(|lam| loop_in_band(&Loop::of_partition(lam, n), n, m))
        .collect())
}

/// `𝕐_N°`, for every `N ≥ 1`.
pub fn enumerate_circ(n: usize) -> Vec<Partition> {
    enumerate_yn(n)
        .into_iter()
        .filter(|lam| loop_in_band(&Loop::of_partition(lam, n), n, 1))
        .collect()
}

/// Inner corners of `λ ∈ 𝕐_N°` whose removal stays in `𝕐_N°`.
pub fn circ_inner_corners(lambda: &Partition, n: usize) -> Result<Vec<usize>> {
    check_circ(lambda, n)?;
    Ok(lambda
        .inner_corner_rows()
        .into_iter()
        .filter(|&r| {
            lambda
                .remove_box(r)
                .is_some_and(|smaller| in_circ(&smaller, n))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{cycle_distance, tau, xn_distance};

    fn rim_sites(s: &str, n: usize) -> Vec<Site> {
        let mut v = outer_rim(&s.parse().unwrap(), n).unwrap().sites;
        v.sort();
        v
    }

    fn sites(pairs: &[(usize, usize)]) -> Vec<Site> {
        let mut v: Vec<Site> = pairs.iter().map(|&(i, j)| Site { i, j }).collect();
        v.sort();
        v
    }

    #[test]
    fn rim_examples() {
        assert_eq!(
            rim_sites("", 5),
            sites(&[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)])
        );
        assert_eq!(
            rim_sites("5,5,2,1", 9),
            sites(&[
                (0, 5),
                (1, 5),
                (1, 6),
                (2, 6),
                (2, 7),
                (3, 7),
                (4, 7),
                (5, 7),
                (5, 8)
            ])
        );
        assert_eq!(
            rim_sites("3", 7),
            sites(&[(0, 3), (0, 4), (0, 5), (0, 6), (1, 6), (2, 6), (3, 6)])
        );
        let rim = outer_rim(&"3".parse().unwrap(), 7).unwrap();
        assert_eq!(
            rim.lift,
            vec![(0, 3), (0, 4), (0, 5), (0, 6), (1, 6), (2, 6), (3, 6), (3, 7)]
        );
    }

    #[test]
    fn rim_inverse() {
        let rim = outer_rim(&Partition::empty(), 6).unwrap();
        assert_eq!(rim_to_partition(&rim, 6).unwrap(), Partition::empty());
        for n in 1..=9 {
            for lam in enumerate_yn(n) {
                let rim = outer_rim(&lam, n).unwrap();
                assert_eq!(rim_to_partition(&rim, n).unwrap(), lam);
            }
        }
    }

    #[test]
    fn bad_rims_are_rejected() {
        let mut rim = outer_rim(&"3".parse().unwrap(), 7).unwrap();
        rim.lift[2] = (1, 4);
        assert!(matches!(rim_to_partition(&rim, 7), Err(Error::InvalidRim(_))));
        let rim = outer_rim(&"3".parse().unwrap(), 7).unwrap();
        assert!(rim_to_partition(&rim, 8).is_err());
    }

    #[test]
    fn rim_loop_agree() {
        for n in 1..=9 {
            for lam in enumerate_yn(n) {
                let rim = outer_rim(&lam, n).unwrap();
                assert_eq!(rim.sites, Loop::of_partition(&lam, n).sites());
            }
        }
    }

    #[test]
    fn band_examples() {
        assert!(in_band(Site { i: 0, j: 6 }, 9, 1).unwrap());
        assert!(!in_band(Site { i: 0, j: 7 }, 9, 1).unwrap());
        assert!(!in_band(Site { i: 0, j: 6 }, 7, 1).unwrap());
        assert!(in_band(Site { i: 1, j: 6 }, 7, 1).unwrap());
        for i in 0..9 {
            for j in i..9 {
                assert!(in_band(Site { i, j }, 9, 4).unwrap());
            }
        }
        assert!(matches!(
            in_band(Site { i: 0, j: 0 }, 9, 5),
            Err(Error::BadBandIndex { .. })
        ));
        assert!(in_band(Site { i: 0, j: 0 }, 9, 0).is_err());
    }

    #[test]
    fn band_site_counts() {
        for n in 2..=14 {
            let expected = if n % 2 == 1 { 2 * n } else { 3 * n / 2 };
            assert_eq!(band_sites(n, 1).unwrap().len(), expected, "n={n}");
            let k = n / 2;
            assert_eq!(band_sites(n, k).unwrap().len(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn band_matches_cycle_distance() {
        for n in (3..=13).step_by(2) {
            let k = n / 2;
            for i in 0..n {
                for j in i..n {
                    let inside = in_band(Site { i, j }, n, 1).unwrap();
                    let d = cycle_distance(i, j, n).unwrap();
                    assert_eq!(inside, d >= 2 * (k as u64 - 1), "n={n} ({i},{j})");
                    if inside {
                        let shift = (k * k - k) as u64;
                        assert_eq!(xn_distance(i, j, n).unwrap(), d + shift);
                    }
                }
            }
        }
    }

    #[test]
    fn band_membership_by_sites() {
        for n in 3..=11 {
            for m in 1..=n / 2 {
                for lam in enumerate_yn(n) {
                    let by_sites = outer_rim(&lam, n)
                        .unwrap()
                        .sites
                        .iter()
                        .all(|&s| in_band(s, n, m).unwrap());
                    let by_heights = loop_in_band(&Loop::of_partition(&lam, n), n, m);
                    assert_eq!(by_sites, by_heights);
                }
            }
        }
    }

    #[test]
    fn circ_counts() {
        assert_eq!(enumerate_band_partitions(5, 1).unwrap().len(), 11);
        let y7 = enumerate_band_partitions(7, 1).unwrap();
        assert_eq!(y7.len(), 29);
        assert!(!y7.contains(&"3".parse().unwrap()));
        let y9 = enumerate_band_partitions(9, 1).unwrap();
        assert_eq!(y9.len(), 76);
        assert!(!y9.contains(&"4,3".parse().unwrap()));
        assert_eq!(enumerate_circ(1).len(), 1);
        assert_eq!(enumerate_circ(3).len(), 4);
        assert_eq!(enumerate_circ(6).len(), 8);
    }

    #[test]
    fn circ_is_tau_closed_and_contains_alpha0() {
        for n in 3..=11 {
            let set = enumerate_circ(n);
            assert!(set.contains(&crate::partitions::alpha(0, n).unwrap()));
            for lam in &set {
                assert!(set.binary_search(&tau(lam, n).unwrap()).is_ok());
            }
        }
    }

    #[test]
    fn circ_corner_examples() {
        assert!(circ_inner_corners(&"2,1".parse().unwrap(), 7)
            .unwrap()
            .is_empty());
        assert!(matches!(
            circ_inner_corners(&"3".parse().unwrap(), 7),
            Err(Error::NotInYNCirc { .. })
        ));
        let mut hist = [0usize; 4];
        for lam in enumerate_circ(7) {
            hist[circ_inner_corners(&lam, 7).unwrap().len()] += 1;
        }
        assert_eq!(hist, [1, 7, 14, 7]);
        let st = crate::partitions::staircase(5);
        assert_eq!(circ_inner_corners(&st, 11).unwrap().len(), 5);
    }
}
