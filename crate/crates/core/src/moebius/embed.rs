//! The doubling embedding `𝕐_N° → 𝕐_{2N}°` for odd `N = 2k+1`.
//!
//! Every `λ ∈ 𝕐_N°` is `α_0` plus a 0/1/2 pattern: writing
//! `λ = (α_0 +̇ (δ_1+ε_1, …, δ_k+ε_k) ε_{k+1})`, the image interleaves the two
//! bit strings on top of the staircase `(2k, …, 1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::check_circ;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaEpsilon {
    /// `δ_1, …, δ_k`.
    pub delta: Vec<u8>,
    /// `ε_1, …, ε_{k+1}`.
    pub epsilon: Vec<u8>,
}

impl DeltaEpsilon {
    pub fn of(lambda: &Partition, n: usize) -> Result<DeltaEpsilon> {
        if n.is_multiple_of(2) {
            return Err(Error::BadParity(n));
        }
        check_circ(lambda, n)?;
        let fail = || Error::ParameterizationFailure {
            partition: lambda.clone(),
            n,
        };
        let k = n / 2;
        if lambda.len() > k + 1 {
            return Err(fail());
        }
        let mut delta = Vec::with_capacity(k);
        let mut epsilon = Vec::with_capacity(k + 1);
        for i in 1..=k {
            let base = if i < k { (k - i) as u32 } else { 0 };
            let extra = lambda.part(i).checked_sub(base).ok_or_else(fail)?;
            if extra > 2 {
                return Err(fail());
            }
            delta.push(u8::from(extra >= 1));
            epsilon.push(u8::from(extra == 2));
        }
        let last = lambda.part(k + 1);
        if last > 1 {
            return Err(fail());
        }
        epsilon.push(last as u8);
        let gaps_ok = (0..k).all(|i| delta[i] == 1 || (epsilon[i] == 0 && epsilon[i + 1] == 0));
        if !gaps_ok || epsilon[0] + epsilon[k] > 1 {
            return Err(fail());
        }
        Ok(DeltaEpsilon { delta, epsilon })
    }
}

/// `λ ↦ λ^(2) = ((2k, …, 1) +̇ (ε_1, δ_1, …, ε_k, δ_k) ε_{k+1})`.
pub fn double_embed(lambda: &Partition, n: usize) -> Result<Partition> {
    let de = DeltaEpsilon::of(lambda, n)?;
    let k = n / 2;
    let mut parts = Vec::with_capacity(2 * k + 1);
    for i in 0..k {
        parts.push((2 * k - 2 * i) as u32 + u32::from(de.epsilon[i]));
        parts.push((2 * k - 2 * i - 1) as u32 + u32::from(de.delta[i]));
    }
    parts.push(u32::from(de.epsilon[k]));
    Ok(Partition::from_padded(parts))
}
