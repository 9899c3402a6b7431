//! Exact linear algebra over the rationals.
//!
//! Every rank, kernel and eigenspace computation in this crate goes through
//! [`RationalMatrix`]. Arithmetic is exact (arbitrary-precision rationals),
//! so there are no tolerances anywhere: two dimensions are equal or they are
//! not.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational number, always in canonical form
/// (positive denominator, fully reduced).
pub type Rational = num::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactlaError {
    /// An operation that requires a square matrix was given a rectangular one.
    NotSquare { rows: usize, cols: usize },
    /// Two matrices have incompatible shapes for the requested operation.
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}

impl fmt::Display for ExactlaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactlaError::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows} rows, {cols} columns")
            }
            ExactlaError::ShapeMismatch { left, right } => write!(
                f,
                "matrix shapes {}x{} and {}x{} do not match",
                left.0, left.1, right.0, right.1
            ),
        }
    }
}

impl std::error::Error for ExactlaError {}

/// Dense matrix of rationals, stored row-major. Vectors are columns and
/// matrices act on the left, so a matrix representing a linear map
/// `V -> W` has `dim W` rows and `dim V` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-entry convenience constructor, mostly for tests and fixtures.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: Vec<Vec<Rational>>) -> Self {
        let ncols = cols.len();
        let mut m = Self::zeros(rows, ncols);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column of wrong height");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ExactlaError> {
        if self.cols != rhs.rows {
            return Err(ExactlaError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    if !self.get(r, k).is_zero() && !rhs.get(k, c).is_zero() {
                        acc += self.get(r, k) * rhs.get(k, c);
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactlaError> {
        if v.len() != self.cols {
            return Err(ExactlaError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !v[c].is_zero())
                    .map(|c| self.get(r, c) * &v[c])
                    .sum()
            })
            .collect())
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn augment(&self, right: &Self) -> Result<Self, ExactlaError> {
        if self.rows != right.rows {
            return Err(ExactlaError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (right.rows, right.cols),
            });
        }
        let mut out = Self::zeros(self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..right.cols {
                out.set(r, self.cols + c, right.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// The pivot within a column is chosen among the candidate rows as the
    /// nonzero entry with the smallest numerator magnitude (lowest row index
    /// on ties). That keeps intermediate fractions small; the result does
    /// not depend on the choice.
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let mut best: Option<usize> = None;
            for r in next_row..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(r),
                    Some(b) => {
                        if m.get(r, col).numer().abs() < m.get(b, col).numer().abs() {
                            best = Some(r);
                        }
                    }
                }
            }
            let Some(pivot_row) = best else { continue };
            m.swap_rows(next_row, pivot_row);
            let inv = m.get(next_row, col).recip();
            for c in col..m.cols {
                let v = m.get(next_row, c) * &inv;
                m.set(next_row, c, v);
            }
            for r in 0..m.rows {
                if r == next_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &factor * m.get(next_row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Dimension of the column space.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the kernel (null space), as column vectors. The basis is
    /// the standard one read off the reduced echelon form: one vector per
    /// free column, with a 1 in that coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `self * x = b`, if one exists. Free variables are
    /// set to zero, so the answer is deterministic.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side of wrong height");
        let rhs = Self::from_columns(self.rows, vec![b.to_vec()]);
        let aug = self.augment(&rhs).expect("heights match");
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Dimension of the eigenspace `ker(m - eigenvalue * I)`.
pub fn eigenspace_dim(m: &RationalMatrix, eigenvalue: &Rational) -> Result<usize, ExactlaError> {
    if m.rows() != m.cols() {
        return Err(ExactlaError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let mut shifted = m.clone();
    for i in 0..m.rows() {
        let v = shifted.get(i, i) - eigenvalue;
        shifted.set(i, i, v);
    }
    Ok(shifted.cols() - shifted.rank())
}
