//! Dense exact integer matrices with fraction-free (Bareiss) elimination.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// A dense row-major matrix over a checked integer type.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: ExactInt> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Builds a matrix from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("ragged matrix rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = T> + '_ {
        self.data.iter().copied()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let acc = out.get(i, j).add_c(a.mul_c(rhs.get(k, j))?)?;
                    out.set(i, j, acc);
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, T::add_c)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, T::sub_c)
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(T, T) -> Result<T>) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Precondition("matrix shapes differ".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| op(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Sum of all entries.
    pub fn total(&self) -> Result<T> {
        self.data.iter().try_fold(T::zero(), |acc, &x| acc.add_c(x))
    }

    /// Converts every entry into a wider (or narrower) integer type.
    pub fn cast<U: ExactInt>(&self) -> Result<ExactMatrix<U>> {
        let data = self
            .data
            .iter()
            .map(|&x| U::from(x).ok_or_else(|| Error::overflow("matrix cast")))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Rank by fraction-free row reduction.
    ///
    /// After the k-th pivot every updated entry is a (k+1)-minor of the
    /// input, so each division by the previous pivot is exact.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.clone().bareiss()?.rank)
    }

    /// Determinant by fraction-free elimination with row pivoting.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Precondition(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(T::one());
        }
        let echelon = self.clone().bareiss()?;
        if echelon.rank < self.rows {
            return Ok(T::zero());
        }
        let last = echelon.matrix.get(self.rows - 1, self.cols - 1);
        Ok(if echelon.negated { -last } else { last })
    }

    fn bareiss(mut self) -> Result<Echelon<T>> {
        let mut prev = T::one();
        let mut rank = 0;
        let mut negated = false;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != rank {
                self.swap_rows(p, rank);
                negated = !negated;
            }
            let pivot = self.get(rank, col);
            for i in rank + 1..self.rows {
                let lead = self.get(i, col);
                for j in col + 1..self.cols {
                    let num = self
                        .get(i, j)
                        .mul_c(pivot)?
                        .sub_c(lead.mul_c(self.get(rank, j))?)?;
                    self.set(i, j, num.div_exactly(prev)?);
                }
                self.set(i, col, T::zero());
            }
            prev = pivot;
            rank += 1;
        }
        Ok(Echelon {
            matrix: self,
            rank,
            negated,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

struct Echelon<T> {
    matrix: ExactMatrix<T>,
    rank: usize,
    negated: bool,
}

impl<T: ExactInt> fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Runs `op` at 64 bits and retries at 128 bits on overflow.
///
/// The overflow error of the wide attempt names both widths so callers can
/// see what precision the computation would have needed.
pub fn with_widening<R>(
    narrow: impl FnOnce() -> Result<R>,
    wide: impl FnOnce() -> Result<R>,
) -> Result<R> {
    match narrow() {
        Err(Error::Overflow(_)) => wide().map_err(|e| match e {
            Error::Overflow(ctx) => {
                Error::Overflow(format!("{ctx}; more than 128 bits required"))
            }
            other => other,
        }),
        other => other,
    }
}
