//! T-sequences from `BS(s, s)` and Hadamard matrices from T-sequences.
//!
//! From `(a, b, c, d)` in `BS(s, s)` the T-sequences of length `2s` are
//!
//! ```text
//! t1 = ((a+b)/2 | 0^s)    t3 = (0^s | (c+d)/2)
//! t2 = ((a-b)/2 | 0^s)    t4 = (0^s | (c-d)/2)
//! ```
//!
//! Four `+-1` sequences with vanishing periodic correlation sum are taken as
//! `t1 +- t2 +- t3 +- t4` with signs from the rows of a Sylvester matrix of
//! order 4, and their circulants `A, B, C, D` are placed in the
//! Goethals-Seidel array
//!
//! ```text
//! [  A     BR     CR     DR  ]
//! [ -BR    A     D^tR  -C^tR ]
//! [ -CR  -D^tR    A     B^tR ]
//! [ -DR   C^tR  -B^tR    A   ]
//! ```
//!
//! with `R` the back-diagonal permutation. A result is only returned after
//! `H H^t = 4t I` has been checked exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{IntMat, MatError};
use crate::seq::{npaf_sum, BaseSeqQuad, Seq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HadamardError {
    #[error("T-sequences need a quadruple in BS(s,s), got BS({m},{n})")]
    UnequalLengths { m: usize, n: usize },
    #[error("T-sequences must share one length (got {lens:?})")]
    LengthMismatch { lens: [usize; 4] },
    #[error("entry {value} at position {position} of t{index} is not in {{-1, 0, 1}}")]
    NotTernary { index: usize, position: usize, value: i64 },
    #[error("position {position} has {count} nonzero entries across the four sequences, expected exactly 1")]
    Coverage { position: usize, count: usize },
    #[error("NPAF sum at lag {lag} is {sum}, expected {expected}")]
    NotComplementary { lag: usize, sum: i64, expected: i64 },
    #[error("internal error: odd value {value} while halving at position {position}")]
    OddHalf { position: usize, value: i64 },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix entry ({row}, {col}) is {value}, expected +1 or -1")]
    NotPlusMinusOne { row: usize, col: usize, value: i64 },
    #[error("Goethals-Seidel layout produced H H^t != {order} I; the array variant is wrong")]
    Construction { order: usize },
    #[error(transparent)]
    Matrix(#[from] MatError),
}

/// Four `{-1, 0, 1}` sequences of common length `t` with exactly one nonzero
/// entry per position across the four, complementary with weight `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeqQuad {
    seqs: [Seq; 4],
}

impl TSeqQuad {
    pub fn new(t1: Seq, t2: Seq, t3: Seq, t4: Seq) -> Result<Self, HadamardError> {
        let seqs = [t1, t2, t3, t4];
        let lens = seqs.each_ref().map(Seq::len);
        let len = lens[0];
        if lens.iter().any(|&l| l != len) {
            return Err(HadamardError::LengthMismatch { lens });
        }
        for (index, s) in seqs.iter().enumerate() {
            if let Some((position, &value)) =
                s.entries().iter().enumerate().find(|(_, v)| !(-1..=1).contains(*v))
            {
                return Err(HadamardError::NotTernary {
                    index: index + 1,
                    position,
                    value,
                });
            }
        }
        for position in 0..len {
            let count = seqs.iter().filter(|s| s.entries()[position] != 0).count();
            if count != 1 {
                return Err(HadamardError::Coverage { position, count });
            }
        }
        let refs = seqs.each_ref();
        for (lag, &sum) in npaf_sum(&refs).iter().enumerate() {
            let expected = if lag == 0 { len as i64 } else { 0 };
            if sum != expected {
                return Err(HadamardError::NotComplementary { lag, sum, expected });
            }
        }
        Ok(Self { seqs })
    }

    pub fn len(&self) -> usize {
        self.seqs[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn seqs(&self) -> &[Seq; 4] {
        &self.seqs
    }

    /// `A, B, C, D`: signed sums of `t1..t4` with sign rows
    /// `(+ + + +), (+ + - -), (+ - + -), (+ - - +)`.
    pub fn plus_minus_sequences(&self) -> [Seq; 4] {
        const SIGNS: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
        SIGNS.map(|row| {
            let entries = (0..self.len())
                .map(|i| {
                    row.iter()
                        .zip(&self.seqs)
                        .map(|(sign, s)| sign * s.entries()[i])
                        .sum()
                })
                .collect();
            Seq::new(entries).expect("T-sequences are nonempty")
        })
    }

    /// Renders as four lines over `+`, `-`, `0`.
    pub fn to_text(&self) -> String {
        self.seqs.iter().map(|s| format!("{s}\n")).collect()
    }
}

fn halve(values: impl Iterator<Item = i64>) -> Result<Vec<i64>, HadamardError> {
    values
        .enumerate()
        .map(|(position, value)| {
            if value % 2 != 0 {
                Err(HadamardError::OddHalf { position, value })
            } else {
                Ok(value / 2)
            }
        })
        .collect()
}

/// T-sequences of length `2s` from a quadruple in `BS(s, s)`.
pub fn t_from_bs(quad: &BaseSeqQuad) -> Result<TSeqQuad, HadamardError> {
    if quad.m() != quad.n() {
        return Err(HadamardError::UnequalLengths {
            m: quad.m(),
            n: quad.n(),
        });
    }
    let s = quad.m();
    let zeros = vec![0; s];
    let pair = |x: &Seq, y: &Seq, sign: i64| {
        halve(x.entries().iter().zip(y.entries()).map(|(p, q)| p + sign * q))
    };
    let front = |half: Vec<i64>| Seq::from_slice(&[half, zeros.clone()].concat());
    let back = |half: Vec<i64>| Seq::from_slice(&[zeros.clone(), half].concat());
    TSeqQuad::new(
        front(pair(quad.a(), quad.b(), 1)?),
        front(pair(quad.a(), quad.b(), -1)?),
        back(pair(quad.c(), quad.d(), 1)?),
        back(pair(quad.c(), quad.d(), -1)?),
    )
}

/// Circulant whose row `i` is the first row shifted right by `i`.
pub fn circulant(first_row: &Seq) -> IntMat {
    let t = first_row.len();
    let x = first_row.entries();
    let data = (0..t)
        .flat_map(|i| (0..t).map(move |j| x[(j + t - i) % t]))
        .collect();
    IntMat::new(t, t, data).expect("nonempty square")
}

/// Back-diagonal permutation matrix of order `t`.
pub fn back_diagonal(t: usize) -> IntMat {
    let data = (0..t)
        .flat_map(|i| (0..t).map(move |j| i64::from(i + j == t - 1)))
        .collect();
    IntMat::new(t, t, data).expect("nonempty square")
}

/// Assembles a block matrix from a grid of equally sized square blocks.
fn block_matrix(blocks: &[Vec<IntMat>]) -> IntMat {
    let t = blocks[0][0].rows();
    let k = blocks.len();
    let order = k * t;
    let mut data = vec![0; order * order];
    for (bi, row) in blocks.iter().enumerate() {
        for (bj, block) in row.iter().enumerate() {
            for i in 0..t {
                for j in 0..t {
                    data[(bi * t + i) * order + bj * t + j] = block.get(i, j);
                }
            }
        }
    }
    IntMat::new(order, order, data).expect("nonempty square")
}

/// Exact check of `H H^t = order * I` for a square `+-1` matrix.
pub fn verify_hadamard(h: &IntMat) -> Result<bool, HadamardError> {
    let (rows, cols) = h.shape();
    if rows != cols {
        return Err(HadamardError::NotSquare { rows, cols });
    }
    for i in 0..rows {
        if let Some((col, &value)) = h.row(i).iter().enumerate().find(|(_, v)| v.abs() != 1) {
            return Err(HadamardError::NotPlusMinusOne { row: i, col, value });
        }
    }
    let gram = h.checked_mul(&h.transpose())?;
    Ok((0..rows).all(|i| {
        (0..rows).all(|j| gram.get(i, j) == if i == j { rows as i64 } else { 0 })
    }))
}

/// A verified Hadamard matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMat {
    mat: IntMat,
}

impl HadamardMat {
    pub fn new(mat: IntMat) -> Result<Self, HadamardError> {
        if verify_hadamard(&mat)? {
            Ok(Self { mat })
        } else {
            Err(HadamardError::Construction { order: mat.rows() })
        }
    }

    pub fn order(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &IntMat {
        &self.mat
    }

    pub fn rows_text(&self) -> Vec<String> {
        (0..self.order())
            .map(|i| self.mat.row_seq(i).to_string())
            .collect()
    }

    pub fn to_record(&self) -> HadamardRecord {
        HadamardRecord {
            order: self.order(),
            rows: self.rows_text(),
        }
    }
}

/// JSON form of a Hadamard matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HadamardRecord {
    pub order: usize,
    pub rows: Vec<String>,
}

/// Hadamard matrix of order `4t` from T-sequences of length `t`.
pub fn hadamard_from_t(ts: &TSeqQuad) -> Result<HadamardMat, HadamardError> {
    let t = ts.len();
    let [a, b, c, d] = ts.plus_minus_sequences().map(|s| circulant(&s));
    let r = back_diagonal(t);
    let mul = |x: &IntMat, y: &IntMat| x.checked_mul(y);
    let br = mul(&b, &r)?;
    let cr = mul(&c, &r)?;
    let dr = mul(&d, &r)?;
    let btr = mul(&b.transpose(), &r)?;
    let ctr = mul(&c.transpose(), &r)?;
    let dtr = mul(&d.transpose(), &r)?;
    let h = block_matrix(&[
        vec![a.clone(), br.clone(), cr.clone(), dr.clone()],
        vec![br.neg(), a.clone(), dtr.clone(), ctr.neg()],
        vec![cr.neg(), dtr.neg(), a.clone(), btr.clone()],
        vec![dr.neg(), ctr, btr.neg(), a],
    ]);
    HadamardMat::new(h)
}
