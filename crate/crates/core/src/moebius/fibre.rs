//! Fibres of the folding map and their Catalan factorization.
//!
//! Folding clamps the rim heights between two zigzags, so a preimage of `λ°`
//! agrees with the rim of `λ°` wherever that rim is strictly inside the band,
//! and may dip below (or rise above) it where it touches the boundary. The
//! preimages are enumerated by a depth-first walk over the heights.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::partitions::Partition;

use super::{check_circ, enumerate_circ, Loop};

/// Admissible heights at each time for a preimage of `target`.
fn candidates(target: &Loop, n: usize) -> Vec<Vec<i64>> {
    let ni = n as i64;
    let k = (n / 2) as i64;
    let (lo, hi) = (k - 1, ni - k + 1);
    target
        .h
        .iter()
        .map(|&v| {
            let zl = if (v - lo).rem_euclid(2) == 0 { lo } else { lo + 1 };
            let zh = if (v - hi).rem_euclid(2) == 0 { hi } else { hi - 1 };
            let parity_range = |a: i64, b: i64| -> Vec<i64> {
                (a.max(0)..=b.min(ni))
                    .filter(|x| (x - v).rem_euclid(2) == 0)
                    .collect()
            };
            if zl >= zh {
                parity_range(0, ni)
            } else if v <= zl {
                parity_range(0, v)
            } else if v >= zh {
                parity_range(v, ni)
            } else {
                vec![v]
            }
        })
        .collect()
}

/// Walks all height sequences with unit steps that close up antiperiodically.
fn walk(cands: &[Vec<i64>], n: i64, visit: &mut dyn FnMut(&[i64])) {
    fn go(cands: &[Vec<i64>], n: i64, cur: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
        let t = cur.len();
        if t == cands.len() {
            if (n - cur[0] - cur[t - 1]).abs() == 1 {
                visit(cur);
            }
            return;
        }
        for &v in &cands[t] {
            if t > 0 && (v - cur[t - 1]).abs() != 1 {
                continue;
            }
            cur.push(v);
            go(cands, n, cur, visit);
            cur.pop();
        }
    }
    go(cands, n, &mut Vec::with_capacity(cands.len()), visit);
}

/// All `μ ∈ 𝕐_N` with `μ° = λ°`, sorted.
pub fn fold_fibre(lambda_circ: &Partition, n: usize) -> Result<Vec<Partition>> {
    check_circ(lambda_circ, n)?;
    let target = Loop::of_partition(lambda_circ, n);
    let cands = candidates(&target, n);
    let mut loops = Vec::new();
    walk(&cands, n as i64, &mut |h| loops.push(h.to_vec()));
    let mut out = loops
        .into_iter()
        .map(|h| Loop { s0: target.s0, h }.to_partition())
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `|fold_fibre(λ°)|` without materializing the partitions.
pub fn fibre_size(lambda_circ: &Partition, n: usize) -> Result<u64> {
    check_circ(lambda_circ, n)?;
    let target = Loop::of_partition(lambda_circ, n);
    let cands = candidates(&target, n);
    let mut count = 0u64;
    walk(&cands, n as i64, &mut |_| count += 1);
    Ok(count)
}

/// A cyclic word of Catalan factors `C_{n_1}·C_{n_2}·…`, one factor per
/// boundary slot run. Stored in the lexicographically largest rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CatalanWord {
    pub factors: Vec<usize>,
}

fn catalan(n: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

impl CatalanWord {
    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&f| catalan(f)).product()
    }
}

impl fmt::Display for CatalanWord {
    /// Repeated factors are grouped, e.g. `C_2·C_0^9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut idx = 0;
        let mut first = true;
        while idx < self.factors.len() {
            let mut end = idx;
            while end < self.factors.len() && self.factors[end] == self.factors[idx] {
                end += 1;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            write!(f, "C_{}", self.factors[idx])?;
            if end - idx > 1 {
                write!(f, "^{}", end - idx)?;
            }
            idx = end;
        }
        Ok(())
    }
}

/// Factorizes the fibre over `λ°` by the runs of rim sites on the band
/// boundary.
///
/// The boundary of `𝔛_N°` is cut into `N` slots: slot `a` is the pair of
/// sites `{a, a+k-1}` (mod `N`). Each maximal cyclic run of `n` slots touched
/// by the rim contributes `C_n`, and each untouched slot contributes `C_0`.
pub fn fibre_catalan(lambda_circ: &Partition, n: usize) -> Result<CatalanWord> {
    check_circ(lambda_circ, n)?;
    let k = n / 2;
    let mut touched = vec![false; n];
    if k >= 1 {
        for s in Loop::of_partition(lambda_circ, n).sites() {
            let w = s.width();
            if w + 1 == k {
                touched[s.i] = true;
            } else if n - w + 1 == k {
                touched[s.j] = true;
            }
        }
    }
    let Some(start) = touched.iter().position(|&x| !x) else {
        return Ok(CatalanWord { factors: vec![n] });
    };
    let mut seq = Vec::new();
    let mut run = 0;
    for step in 1..=n {
        if touched[(start + step) % n] {
            run += 1;
        } else {
            if run > 0 {
                seq.push(run);
                run = 0;
            }
            seq.push(0);
        }
    }
    if run > 0 {
        seq.push(run);
    }
    let best = (0..seq.len())
        .map(|r| {
            let mut rot = seq[r..].to_vec();
            rot.extend_from_slice(&seq[..r]);
            rot
        })
        .max()
        .unwrap_or_default();
    Ok(CatalanWord { factors: best })
}

/// `𝕐_N°°`: the partitions of `𝕐_N°` that are the only point of their fibre.
pub fn enumerate_circcirc(n: usize) -> Vec<Partition> {
    enumerate_circ(n)
        .into_iter()
        .filter(|lam| fibre_size(lam, n).expect("member of the band set") == 1)
        .collect()
}
