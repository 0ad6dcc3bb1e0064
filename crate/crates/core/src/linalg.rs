//! Exact linear algebra over the rationals.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i128>;

/// Row echelon form built one equation at a time. Each stored row has a unit
/// pivot and zeros in the pivot columns of the rows stored before it, so
/// [`Echelon::pop`] undoes the last [`Echelon::push`] exactly.
#[derive(Debug, Clone)]
pub struct Echelon {
    cols: usize,
    rows: Vec<(usize, Vec<Rational>, Rational)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::with_capacity(cols),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: Vec<Rational>, mut rhs: Rational) -> (Vec<Rational>, Rational) {
        for (pivot, r, b) in &self.rows {
            let factor = row[*pivot];
            if factor.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(r) {
                *x -= factor * y;
            }
            rhs -= factor * b;
        }
        (row, rhs)
    }

    /// Adds `row · x = rhs` if it is independent of the stored rows. Returns
    /// whether it was added. A dependent row is rejected whatever its
    /// right-hand side.
    pub fn push(&mut self, row: Vec<Rational>, rhs: Rational) -> bool {
        assert_eq!(row.len(), self.cols);
        let (mut row, mut rhs) = self.reduce(row, rhs);
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[pivot].recip();
        for x in row.iter_mut() {
            *x *= inv;
        }
        rhs *= inv;
        self.rows.push((pivot, row, rhs));
        true
    }

    /// Whether `row` lies in the span of the stored rows.
    pub fn is_dependent(&self, row: &[Rational]) -> bool {
        let (row, _) = self.reduce(row.to_vec(), Rational::zero());
        row.iter().all(|x| x.is_zero())
    }

    pub fn pop(&mut self) {
        self.rows.pop();
    }

    /// The unique solution once the rank equals the number of columns.
    pub fn solution(&self) -> Option<Vec<Rational>> {
        if self.rows.len() != self.cols {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (pivot, row, rhs) in self.rows.iter().rev() {
            let mut v = *rhs;
            for (c, a) in row.iter().enumerate() {
                if c != *pivot && !a.is_zero() {
                    v -= a * x[c];
                }
            }
            x[*pivot] = v;
        }
        Some(x)
    }
}

/// Solves the square system `a x = b`, returning `None` unless it is regular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut ech = Echelon::new(cols);
    for (row, &rhs) in a.iter().zip(b) {
        ech.push(row.clone(), rhs);
    }
    ech.solution()
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut ech = Echelon::new(cols);
    for row in rows {
        ech.push(row.clone(), Rational::zero());
    }
    ech.rank()
}

/// The row with ones in columns `i` and `j` (a two in column `i` if `i = j`).
pub fn pair_row(n: usize, i: usize, j: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    row[i] += Rational::one();
    row[j] += Rational::one();
    row
}

pub fn integer(x: i64) -> Rational {
    Rational::from_integer(i128::from(x))
}
