//! Rectangular integer matrices used as two-dimensional sequences.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::laurent::{LaurentPoly1, LaurentPoly2};
use crate::seq::Seq;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("matrix dimensions must be positive (got {rows}x{cols})")]
    EmptyShape { rows: usize, cols: usize },
    #[error("expected {expected} entries for the given shape, got {found}")]
    DataLength { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("arithmetic overflow in matrix entry")]
    Overflow,
}

/// Row-major `rows x cols` integer matrix, 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self, MatError> {
        if rows == 0 || cols == 0 {
            return Err(MatError::EmptyShape { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(MatError::DataLength {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self, MatError> {
        Self::new(rows, cols, vec![0; rows * cols])
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, MatError> {
        let cols = rows.first().map_or(0, Vec::len);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(MatError::Ragged {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// The sequence as a `1 x n` matrix.
    pub fn row_of(seq: &Seq) -> Self {
        Self {
            rows: 1,
            cols: seq.len(),
            data: seq.entries().to_vec(),
        }
    }

    /// The sequence as an `n x 1` matrix (its transpose).
    pub fn column_of(seq: &Seq) -> Self {
        Self {
            rows: seq.len(),
            cols: 1,
            data: seq.entries().to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_seq(&self, i: usize) -> Seq {
        Seq::from_slice(self.row(i))
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    fn zip_with(&self, other: &Self, op: fn(i64, i64) -> Option<i64>) -> Result<Self, MatError> {
        if self.shape() != other.shape() {
            return Err(MatError::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&x, &y)| op(x, y).ok_or(MatError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self { data, ..*self })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, MatError> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, MatError> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.rows {
            return Err(MatError::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = vec![0i64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.get(i, k);
                if lhs == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let slot = &mut data[i * other.cols + j];
                    *slot = lhs
                        .checked_mul(other.get(k, j))
                        .and_then(|p| slot.checked_add(p))
                        .ok_or(MatError::Overflow)?;
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            data: self.data.iter().map(|v| -v).collect(),
            ..*self
        }
    }

    /// `psi_A(x, y) = sum_i psi_{row i}(x) * y^(2i + 1 - rows)`.
    pub fn psi2(&self) -> LaurentPoly2 {
        let shift = 1 - self.rows as i64;
        LaurentPoly2::from_terms((0..self.rows).flat_map(|i| {
            let y_exp = 2 * i as i64 + shift;
            self.row_seq(i)
                .psi()
                .terms()
                .map(move |(x_exp, c)| ((x_exp, y_exp), c))
                .collect::<Vec<_>>()
        }))
        .expect("rows occupy distinct y-exponents")
    }

    /// `seq(A)`: rows concatenated in order.
    pub fn flatten(&self) -> Seq {
        Seq::from_slice(&self.data)
    }

    /// Indices `(i, j)` of nonzero entries.
    pub fn support(&self) -> BTreeSet<(usize, usize)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(k, _)| (k / self.cols, k % self.cols))
            .collect()
    }

    pub fn is_full_support(&self) -> bool {
        self.data.iter().all(|&v| v != 0)
    }

    pub fn is_pm1(&self) -> bool {
        self.data.iter().all(|&v| v == 1 || v == -1)
    }

    pub fn is_ternary(&self) -> bool {
        self.data.iter().all(|&v| (-1..=1).contains(&v))
    }

    /// Positions of zero entries.
    pub fn zero_positions(&self) -> Vec<(usize, usize)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(k, _)| (k / self.cols, k % self.cols))
            .collect()
    }
}

/// `f^t a`: the `len(f) x len(a)` matrix with entries `f_i a_j`.
pub fn outer(f: &Seq, a: &Seq) -> IntMat {
    let data = f
        .entries()
        .iter()
        .flat_map(|&fi| a.entries().iter().map(move |&aj| fi * aj))
        .collect();
    IntMat {
        rows: f.len(),
        cols: a.len(),
        data,
    }
}

/// Whether `A` and `B` have no nonzero position in common.
pub fn disjoint(a: &IntMat, b: &IntMat) -> Result<bool, MatError> {
    if a.shape() != b.shape() {
        return Err(MatError::ShapeMismatch {
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(a.data.iter().zip(&b.data).all(|(&x, &y)| x == 0 || y == 0))
}

/// `psi_a(x) * psi_f(y)`, the expected value of `psi2(outer(f, a))`.
pub fn psi_product(f: &Seq, a: &Seq) -> LaurentPoly2 {
    a.psi().in_x() * f.psi().in_y()
}

/// `+`, `-`, `0` rows when ternary; otherwise space-separated integers.
impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ternary = self.is_ternary();
        for i in 0..self.rows {
            let row = self.row(i);
            if ternary {
                for &v in row {
                    f.write_str(match v {
                        1 => "+",
                        -1 => "-",
                        _ => "0",
                    })?;
                }
            } else {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                f.write_str(&cells.join(" "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Collapses `psi_A(x, y)` at `y = x^cols`, which equals `psi` of the
/// flattened matrix.
pub fn collapsed_psi(a: &IntMat) -> LaurentPoly1 {
    a.psi2()
        .collapse(a.cols as i64)
        .expect("exponents stay small for in-memory matrices")
}
