use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use super::TPoly;

/// A square matrix over `TPoly`. Serializes row-major as polynomial strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TMatrix {
    rows: Vec<Vec<TPoly>>,
}

impl TMatrix {
    pub fn new(rows: Vec<Vec<TPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        TMatrix { rows }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        TMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| TPoly::constant(c)).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        TMatrix::new(vec![vec![TPoly::zero(); n]; n])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = TMatrix::zero(n);
        for i in 0..n {
            m.rows[i][i] = TPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &TPoly {
        &self.rows[i][j]
    }

    pub fn trace(&self) -> TPoly {
        (0..self.dim()).fold(TPoly::zero(), |acc, i| &acc + &self.rows[i][i])
    }

    pub fn scale(&self, c: &TPoly) -> TMatrix {
        TMatrix::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u64) -> TMatrix {
        let mut base = self.clone();
        let mut out = TMatrix::identity(self.dim());
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(TPoly::is_zero)
    }
}

impl Add for &TMatrix {
    type Output = TMatrix;
    fn add(self, rhs: &TMatrix) -> TMatrix {
        assert_eq!(self.dim(), rhs.dim());
        TMatrix::new(
            self.rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        )
    }
}

impl Sub for &TMatrix {
    type Output = TMatrix;
    fn sub(self, rhs: &TMatrix) -> TMatrix {
        assert_eq!(self.dim(), rhs.dim());
        TMatrix::new(
            self.rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        )
    }
}

impl Mul for &TMatrix {
    type Output = TMatrix;
    fn mul(self, rhs: &TMatrix) -> TMatrix {
        let n = self.dim();
        assert_eq!(n, rhs.dim());
        let mut out = TMatrix::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = &self.rows[i][l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * &rhs.rows[l][j];
                    out.rows[i][j] = &out.rows[i][j] + &prod;
                }
            }
        }
        out
    }
}
