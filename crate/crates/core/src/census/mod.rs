//! Exact enumeration: the transfer matrices for `𝕐_N°`, the corner and face
//! polynomials of `E(C_N)`, band counts, and the accompanying integer
//! sequences. All arithmetic is over arbitrary-precision integers.

mod matrix;
mod poly;

pub use matrix::TMatrix;
pub use poly::TPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Binomial with a possibly negative top, zero there.
fn binom_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 {
        BigInt::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

fn exact_div(num: BigInt, den: impl Into<BigInt>) -> BigInt {
    let (q, r) = num.div_rem(&den.into());
    assert!(r.is_zero(), "inexact division in a closed form");
    q
}

pub fn lucas(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(2), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn catalan(n: u64) -> BigInt {
    exact_div(binomial(2 * n, n), n + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequences {
    pub lucas: BigInt,
    pub fibonacci: BigInt,
    pub catalan: BigInt,
}

pub fn sequences(n: u64) -> Sequences {
    Sequences {
        lucas: lucas(n),
        fibonacci: fibonacci(n),
        catalan: catalan(n),
    }
}

fn poly_matrix(rows: &[&[&[i64]]]) -> TMatrix {
    TMatrix::new(
        rows.iter()
            .map(|r| r.iter().map(|c| TPoly::from_ints(c)).collect())
            .collect(),
    )
}

/// Base case `Z` for odd `N`.
pub fn odd_z() -> TMatrix {
    poly_matrix(&[
        &[&[0], &[0], &[1]],
        &[&[0, 1], &[0, 1], &[0]],
        &[&[0, 0, 1], &[0, 1], &[0]],
    ])
}

/// Induction step `S` for odd `N`.
pub fn odd_s() -> TMatrix {
    poly_matrix(&[
        &[&[1], &[1], &[0]],
        &[&[0, 1], &[0, 1], &[1]],
        &[&[0, 1], &[0, 1], &[0, 1]],
    ])
}

/// Closing matrix `A` for odd `N`.
pub fn odd_a() -> TMatrix {
    TMatrix::from_ints(&[&[1, 1, 0], &[1, 1, 1], &[1, 1, 1]])
}

pub fn even_z() -> TMatrix {
    poly_matrix(&[&[&[0], &[1]], &[&[0, 1], &[0]]])
}

pub fn even_s() -> TMatrix {
    poly_matrix(&[&[&[1], &[1]], &[&[0, 1], &[0, 1]]])
}

pub fn even_a() -> TMatrix {
    TMatrix::from_ints(&[&[1, 1], &[1, 1]])
}

fn odd_k(n: usize) -> Result<u64> {
    if n.is_multiple_of(2) {
        return Err(Error::BadParity(n));
    }
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    Ok((n / 2) as u64)
}

/// `Σ_{λ∈𝕐_N°} t^{#◦-inner corners}` as the trace `tr(A S^{k-1} Z)`.
pub fn corner_enumerator(n: usize) -> Result<TPoly> {
    let k = odd_k(n)?;
    Ok((&(&odd_a() * &odd_s().pow(k - 1)) * &odd_z()).trace())
}

/// The same polynomial from `Σ_s N/(N-s) · C(N-s,s) · t^s`.
pub fn corner_enumerator_closed(n: usize) -> Result<TPoly> {
    odd_k(n)?;
    let n = n as u64;
    Ok(TPoly::new(
        (0..=(n - 1) / 2)
            .map(|s| exact_div(binomial(n - s, s) * n, n - s))
            .collect(),
    ))
}

/// The same polynomial as `U = a_{k+2} - t² a_k`.
pub fn corner_enumerator_u(n: usize) -> Result<TPoly> {
    let k = odd_k(n)? as usize;
    let (a_k2, _) = an_bn(k + 2)?;
    let (a_k, _) = an_bn(k)?;
    Ok(&a_k2 - &(&TPoly::monomial(1, 2) * &a_k))
}

/// The corner enumerator of `𝕐_{2k}°` as `tr(A S^{k-1} Z)` over the 2×2
/// matrices; equals `(1+t)^k`.
pub fn corner_enumerator_even(n: usize) -> Result<TPoly> {
    if n % 2 == 1 {
        return Err(Error::BadParity(n));
    }
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let k = (n / 2) as u64;
    Ok((&(&even_a() * &even_s().pow(k - 1)) * &even_z()).trace())
}

/// The polynomials of `S^n = a_n S + b_n (S² - (1+t)S)`.
pub fn an_bn(n: usize) -> Result<(TPoly, TPoly)> {
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let m = n as i64 - 1;
    let a = TPoly::new((0..n as i64).map(|j| binom_i(2 * m - j, j)).collect());
    let b = TPoly::new(
        (0..n as i64 - 1)
            .map(|j| binom_i(2 * m - j - 1, j))
            .collect(),
    );
    Ok((a, b))
}

/// `Σ_v #(v-faces of E(C_N)) t^v`.
pub fn face_polynomial(n: usize) -> Result<TPoly> {
    match n {
        0 => Err(Error::TooSmall { n, min: 1 }),
        1 => Ok(TPoly::one()),
        _ if n.is_multiple_of(2) => Ok(TPoly::from_ints(&[2, 1]).pow((n / 2) as u32)),
        _ => Ok(corner_enumerator(n)?.compose(&TPoly::from_ints(&[1, 1]))),
    }
}

fn odd_n(n: usize) -> Result<u64> {
    if n.is_multiple_of(2) {
        return Err(Error::BadParity(n));
    }
    Ok(n as u64)
}

/// `2^{-(N-2v-1)} Σ_{s≥v} C(N,2s) C(s,v) 5^{s-v}`.
pub fn face_count_binomial5(n: usize, v: u64) -> Result<BigInt> {
    let n = odd_n(n)?;
    let k = (n - 1) / 2;
    if v > k {
        return Ok(BigInt::zero());
    }
    let sum = (v..=k).fold(BigInt::zero(), |acc, s| {
        acc + binomial(n, 2 * s) * binomial(s, v) * BigInt::from(5).pow((s - v) as u32)
    });
    Ok(exact_div(sum, BigInt::one() << (n - 2 * v - 1)))
}

/// `Σ_s N/(N-s) C(N-s,s) C(s,v)`.
pub fn face_count_lucas(n: usize, v: u64) -> Result<BigInt> {
    let n = odd_n(n)?;
    Ok((v..=(n - 1) / 2).fold(BigInt::zero(), |acc, s| {
        acc + exact_div(binomial(n - s, s) * n, n - s) * binomial(s, v)
    }))
}

/// Number of `v`-dimensional faces of `E(C_N)` for odd `N`.
pub fn face_count(n: usize, v: u64) -> Result<BigInt> {
    face_count_lucas(n, v)
}

/// `S_m`: the `(m+1)×(m+1)` 0/1 matrix with ones where `r+c ∈ {m, m+1}`.
pub fn band_matrix_s(m: usize) -> TMatrix {
    TMatrix::new(
        (0..=m)
            .map(|r| {
                (0..=m)
                    .map(|c| TPoly::constant(i64::from(r + c == m || r + c == m + 1)))
                    .collect()
            })
            .collect(),
    )
}

/// `T_m`: tridiagonal with diagonal `(1, 2, …, 2, 1)` and unit off-diagonals.
pub fn band_matrix_t(m: usize) -> TMatrix {
    TMatrix::new(
        (0..=m)
            .map(|r| {
                (0..=m)
                    .map(|c| {
                        let v = if r == c {
                            if r == 0 || r == m {
                                1
                            } else {
                                2
                            }
                        } else {
                            i64::from(r.abs_diff(c) == 1)
                        };
                        TPoly::constant(v)
                    })
                    .collect()
            })
            .collect(),
    )
}

/// `J_m`: ones on the antidiagonal.
pub fn band_matrix_j(m: usize) -> TMatrix {
    TMatrix::new(
        (0..=m)
            .map(|r| {
                (0..=m)
                    .map(|c| TPoly::constant(i64::from(r + c == m)))
                    .collect()
            })
            .collect(),
    )
}

/// `|𝕐_N^(m)|` as `tr(S_m^N)` for odd `N` and `tr(J_m T_m^k)` for `N = 2k`.
pub fn count_band(n: usize, m: usize) -> Result<BigInt> {
    let k = n / 2;
    if m == 0 || m > k {
        return Err(Error::BadBandIndex { n, m, k });
    }
    let tr = if n % 2 == 1 {
        band_matrix_s(m).pow(n as u64).trace()
    } else {
        (&band_matrix_j(m) * &band_matrix_t(m).pow(k as u64)).trace()
    };
    Ok(tr.coeff(0))
}

/// `|𝕐_{2k+1}°°|` as `[q^k] (1+3q)/(1-q-2q²-q³)`.
pub fn circcirc_count(k: usize) -> BigInt {
    let mut u: Vec<BigInt> = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let mut v = match i {
            0 => BigInt::one(),
            1 => BigInt::from(3),
            _ => BigInt::zero(),
        };
        for (lag, weight) in [(1, 1), (2, 2), (3, 1)] {
            if i >= lag {
                v += &u[i - lag] * weight;
            }
        }
        u.push(v);
    }
    u.pop().expect("nonempty")
}

/// `|𝕐_{2k+1}°°|` as the trace `tr(M^k B)`.
pub fn circcirc_count_trace(k: usize) -> BigInt {
    let m = TMatrix::from_ints(&[&[0, 1, 0], &[1, 1, 1], &[1, 1, 0]]);
    let b = TMatrix::from_ints(&[&[0, 0, 1], &[1, 1, 0], &[0, 1, 0]]);
    (&m.pow(k as u64) * &b).trace().coeff(0)
}

/// Product of power series in `q` with `TPoly` coefficients, truncated.
fn series_mul(a: &[TPoly], b: &[TPoly], order: usize) -> Vec<TPoly> {
    let mut out = vec![TPoly::zero(); order];
    for (i, x) in a.iter().enumerate().take(order) {
        for (j, y) in b.iter().enumerate() {
            if i + j < order {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn pad(mut s: Vec<TPoly>, order: usize) -> Vec<TPoly> {
    s.resize(order, TPoly::zero());
    s.truncate(order);
    s
}

/// Checks the generating functions of `tr(S^k)` and `tr(S^{k+1} - tS^k)`
/// and the even analogue `tr(S^k) = (1+t)^k` for `k ≥ 1`, up to `q^{k_max}`.
pub fn generating_series_check(k_max: usize) -> bool {
    let order = k_max + 1;
    let s = odd_s();
    let t = TPoly::t();
    let powers: Vec<TMatrix> = (0..=order + 1).map(|e| s.pow(e as u64)).collect();
    let denom = vec![
        TPoly::one(),
        -&TPoly::from_ints(&[1, 2]),
        TPoly::monomial(1, 2),
    ];

    let traces: Vec<TPoly> = powers[..order].iter().map(TMatrix::trace).collect();
    let lhs = series_mul(&traces, &denom, order);
    let numerator = pad(
        vec![
            TPoly::constant(3),
            -&TPoly::from_ints(&[2, 4]),
            TPoly::monomial(1, 2),
        ],
        order,
    );
    if lhs != numerator {
        return false;
    }

    let mut shifted = vec![TPoly::one()];
    for k in 1..order {
        shifted.push((&powers[k + 1] - &powers[k].scale(&t)).trace());
    }
    let lhs = series_mul(&shifted, &denom, order);
    if lhs != pad(vec![TPoly::one(), t.clone()], order) {
        return false;
    }

    let even = even_s();
    let one_plus_t = TPoly::from_ints(&[1, 1]);
    (1..=order).all(|k| even.pow(k as u64).trace() == one_plus_t.pow(k as u32))
}

/// `S^n = a_n S + b_n (S² - (1+t)S)` as an exact matrix identity.
pub fn s_power_decomposition(n: usize) -> Result<bool> {
    let (a, b) = an_bn(n)?;
    let s = odd_s();
    let s2 = &s * &s;
    let tail = &s2 - &s.scale(&TPoly::from_ints(&[1, 1]));
    let rhs = &s.scale(&a) + &tail.scale(&b);
    Ok(s.pow(n as u64) == rhs)
}

/// `a_{n+1} = (1+t) a_n + t b_n` and `b_{n+1} = a_n + t b_n`.
pub fn ab_recursion(n: usize) -> Result<bool> {
    let (a, b) = an_bn(n)?;
    let (a1, b1) = an_bn(n + 1)?;
    let t = TPoly::t();
    let tb = &t * &b;
    Ok(a1 == &(&TPoly::from_ints(&[1, 1]) * &a) + &tb && b1 == &a + &tb)
}

/// `Z A = S² - t S`.
pub fn za_identity() -> bool {
    let s = odd_s();
    &odd_z() * &odd_a() == &(&s * &s) - &s.scale(&TPoly::t())
}

/// `C(2(k+1)-s, s) - C(2(k-1)-(s-2), s-2) = C(2k-s, s-1) + C(2k+1-s, s)`
/// for `2 ≤ s ≤ k`.
pub fn pascal_identity(k: i64) -> bool {
    (2..=k).all(|s| {
        binom_i(2 * (k + 1) - s, s) - binom_i(2 * (k - 1) - (s - 2), s - 2)
            == binom_i(2 * k - s, s - 1) + binom_i(2 * k + 1 - s, s)
    })
}

/// `L_p ≡ 1 (mod p)`.
pub fn lucas_congruence(p: u64) -> bool {
    (lucas(p) % BigInt::from(p)).is_one()
}
