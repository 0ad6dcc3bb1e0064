//! Rims lifted to the universal cover of the strip.
//!
//! A loop is stored by its anti-diagonal index `s0 = i + j` at time 0 and the
//! heights `h_t = j - i` for one period `t = 0..N`. The point at time `t` is
//! `((s0+t-h_t)/2, (s0+t+h_t)/2)`, and the deck transformation
//! `(i,j) ↦ (j, i+N)` makes the heights antiperiodic: `h_{t+N} = N - h_t`.

use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::Site;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Loop {
    pub s0: i64,
    pub h: Vec<i64>,
}

impl Loop {
    /// The rim of `λ`, starting at the point `(0, λ_1)`.
    pub fn of_partition(lambda: &Partition, n: usize) -> Loop {
        let c = lambda.first() as usize;
        let mut h = Vec::with_capacity(n);
        let mut cur = c as i64;
        h.push(cur);
        for r in (1..=n - c).rev() {
            let run = lambda.part(r) - lambda.part(r + 1);
            for _ in 0..run {
                cur -= 1;
                h.push(cur);
            }
            cur += 1;
            h.push(cur);
        }
        debug_assert_eq!(h.len(), n + 1);
        debug_assert_eq!(h[n], (n - c) as i64);
        h.truncate(n);
        Loop { s0: c as i64, h }
    }

    pub fn n(&self) -> i64 {
        self.h.len() as i64
    }

    pub fn height(&self, t: i64) -> i64 {
        let n = self.n();
        let v = self.h[t.rem_euclid(n) as usize];
        if t.div_euclid(n) % 2 == 0 {
            v
        } else {
            n - v
        }
    }

    pub fn point(&self, t: i64) -> (i64, i64) {
        let h = self.height(t);
        ((self.s0 + t - h) / 2, (self.s0 + t + h) / 2)
    }

    pub fn site(&self, t: i64) -> Site {
        let (i, j) = self.point(t);
        Site::from_lift(i, j, self.h.len())
    }

    pub fn sites(&self) -> Vec<Site> {
        (0..self.n()).map(|t| self.site(t)).collect()
    }

    /// Reads the partition back off the loop: find the time where the loop
    /// enters the line `i ≡ 0 (mod N)` through an i-step, then decode the
    /// next `N` steps as in the rim construction.
    pub fn to_partition(&self) -> Result<Partition> {
        let n = self.n();
        let start = (1..=2 * n)
            .find(|&t| {
                self.height(t) == self.height(t - 1) - 1 && self.point(t).0.rem_euclid(n) == 0
            })
            .ok_or_else(|| Error::InvalidRim("loop never enters the edge i = 0".into()))?;
        let c = self.height(start);
        let mut runs = Vec::with_capacity((n - c).max(0) as usize);
        let mut count = 0u32;
        for u in 0..n {
            let t = start + u;
            if self.height(t + 1) > self.height(t) {
                runs.push(count);
                count = 0;
            } else {
                count += 1;
            }
        }
        if count != 0 || runs.len() as i64 != n - c {
            return Err(Error::InvalidRim(format!(
                "loop of height {c} does not close up after {n} steps"
            )));
        }
        // runs[0] belongs to row N-c, the last entry to row 1.
        let mut parts = Vec::with_capacity(runs.len());
        let mut acc = 0u32;
        for &a in &runs {
            acc += a;
            parts.push(acc);
        }
        parts.reverse();
        Ok(Partition::from_padded(parts))
    }
}
