//! The folding retraction `λ ↦ λ°` of `𝕐_N` onto `𝕐_N°`.
//!
//! Sites outside the band are scanned from the periphery inwards, one width
//! class `h = 0, …, k-2` at a time: first the upper positions `(i, i+h)`,
//! then the lower positions `(i, i+N-h)`. Whenever the current rim passes
//! through the scanned site, the turn there is flipped. In the upper part that
//! removes an inner corner, in the lower part it adds an outer corner.

use serde::Serialize;

use crate::error::Result;
use crate::partitions::Partition;

use super::{Loop, Site};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FoldPart {
    Upper,
    Lower,
}

/// One flip of the rim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldStep {
    pub part: FoldPart,
    /// The scanned triangle position `(i,j)`, `0 ≤ i ≤ j ≤ N`.
    pub position: (usize, usize),
    pub site: Site,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldResult {
    pub partition: Partition,
    pub trace: Vec<FoldStep>,
}

pub fn fold(lambda: &Partition, n: usize) -> Result<Partition> {
    Ok(fold_with_trace(lambda, n)?.partition)
}

pub fn fold_with_trace(lambda: &Partition, n: usize) -> Result<FoldResult> {
    lambda.check_yn(n)?;
    let mut lp = Loop::of_partition(lambda, n);
    let k = n / 2;
    let ni = n as i64;
    let mut trace = Vec::new();
    for h in 0..k.saturating_sub(1) {
        let upper = (1..n - h).map(|i| (FoldPart::Upper, (i, i + h)));
        let lower = (0..=h).map(|i| (FoldPart::Lower, (i, i + n - h)));
        for (part, position) in upper.chain(lower) {
            let site = Site::from_lift(position.0 as i64, position.1 as i64, n);
            let hit = (0..ni).find(|&t| lp.site(t) == site);
            let Some(t) = hit else { continue };
            let cur = &mut lp.h[t as usize];
            if *cur == h as i64 {
                *cur += 2;
            } else if *cur == ni - h as i64 {
                *cur -= 2;
            } else {
                continue;
            }
            trace.push(FoldStep {
                part,
                position,
                site,
            });
        }
    }
    debug_assert!(super::loop_in_band(&lp, n, 1) || n < 2);
    Ok(FoldResult {
        partition: lp.to_partition()?,
        trace,
    })
}
