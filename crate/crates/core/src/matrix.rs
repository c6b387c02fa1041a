use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Rational};

/// A point (or vector) with exact rational coordinates.
pub type Point = Vec<Rational>;

/// Dense row-major matrix of exact rationals.
///
/// Holds the basis-vector matrix `B` of an M- or C-representation, the
/// generator matrix `G` of a Z-representation, and transformation matrices.
/// Basis vectors and generators are the *columns*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                context: "matrix rows must all have the same length",
            });
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `dim x n` matrix whose columns are the given vectors.
    pub fn from_columns(dim: usize, columns: &[Point]) -> Result<Self, Error> {
        if columns.iter().any(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch {
                context: "column length must equal the matrix row count",
            });
        }
        let mut m = Matrix::zeros(dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                *m.entry_mut(i, j) = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut Rational {
        &mut self.entries[row * self.cols + col]
    }

    pub fn column(&self, col: usize) -> Point {
        (0..self.rows).map(|i| self.entry(i, col).clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_point(&self, v: &[Rational]) -> Result<Point, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product needs cols == vector length",
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    acc += &(self.entry(i, j) * &v[j]);
                }
                acc
            })
            .collect())
    }

    /// Matrix product `self * rhs`.
    pub fn mul_matrix(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if rhs.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix product needs lhs cols == rhs rows",
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += &(self.entry(i, k) * rhs.entry(k, j));
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Column concatenation `[self, rhs]`.
    pub fn hcat(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "column concatenation needs equal row counts",
            });
        }
        let mut out = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.entry_mut(i, j) = self.entry(i, j).clone();
            }
            for j in 0..rhs.cols {
                *out.entry_mut(i, self.cols + j) = rhs.entry(i, j).clone();
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Sum of all columns; the zero vector for an empty matrix.
    pub fn column_sum(&self) -> Point {
        let mut acc = vec![Rational::zero(); self.rows];
        for j in 0..self.cols {
            for (i, slot) in acc.iter_mut().enumerate() {
                *slot += self.entry(i, j);
            }
        }
        acc
    }

    pub fn scalar_count(&self) -> usize {
        self.entries.len()
    }
}

pub(crate) fn point_add(a: &[Rational], b: &[Rational]) -> Point {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn point_sub(a: &[Rational], b: &[Rational]) -> Point {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn point_scale(a: &[Rational], s: &Rational) -> Point {
    a.iter().map(|x| x * s).collect()
}

pub(crate) fn point_is_zero(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}
