//! Yang multiplication of base sequences.
//!
//! Given `(a, b, c, d)` in `BS(n+1, n)` and `(f, g, h, e)` in `BS(m+1, m)`,
//! the eight sequences are spread out by interleaving with zeros,
//!
//! ```text
//! a' = a/0   b' = b/0   c' = 0/c   d' = 0/d      (length 2n+1)
//! f' = f/0   g' = g/0   h' = 0/h   e' = 0/e      (length 2m+1)
//! ```
//!
//! and assembled into four `(2m+1) x (2n+1)` matrices from outer products:
//!
//! ```text
//! Q = f'*^t a' + g'^t c'  - e'^t b'* + h'^t d'
//! R = f'*^t b' + g'*^t d' + e'^t a'* - h'*^t c'
//! S = g'*^t a' - f'^t c'  - h'^t b'  - e'^t d'*
//! T = g'^t b'  - f'^t d'  + h'*^t a' + e'^t c'*
//! ```
//!
//! The four summands of each matrix have disjoint supports covering every
//! cell, so `Q, R, S, T` are `+-1` matrices. Their row-concatenations form an
//! element of `BS(m', m')` with `m' = (2m+1)(2n+1)`. Stars are always applied
//! to the interleaved sequences.
//!
//! Input convention: both quadruples are given long-long-short-short. The
//! first maps to `(a, b, c, d)`, the second to `(f, g, h, e)`.

use serde::Serialize;
use thiserror::Error;

use crate::laurent::{norm_sum, LaurentError, LaurentPoly1, LaurentPoly2};
use crate::matrix::{outer, IntMat, MatError};
use crate::seq::{bs_verify, BaseSeqQuad, CertError, QuadRecord, Seq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YangError {
    #[error("sequence {name} has length {found}, expected {expected}")]
    Length {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("input {which} is in BS({m},{n}); composition needs BS(k+1,k) with k >= 1")]
    NotAdjacent { which: usize, m: usize, n: usize },
    #[error("sequence {name} is not a +-1 sequence")]
    NotPlusMinusOne { name: &'static str },
    #[error("internal error: matrix {matrix} has a zero entry at ({row}, {col})")]
    ZeroEntry { matrix: char, row: usize, col: usize },
    #[error("internal error: composed quadruple failed certification: {0}")]
    Certification(#[from] CertError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Matrix(#[from] MatError),
}

/// Eight sequences `a, b, c, d` (the x-side) and `e, f, g, h` (the y-side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Octuple {
    pub a: Seq,
    pub b: Seq,
    pub c: Seq,
    pub d: Seq,
    pub e: Seq,
    pub f: Seq,
    pub g: Seq,
    pub h: Seq,
}

const X_NAMES: [&str; 4] = ["a", "b", "c", "d"];
const Y_NAMES: [&str; 4] = ["e", "f", "g", "h"];

impl Octuple {
    /// Builds the octuple from two long-long-short-short quadruples:
    /// `(a, b, c, d)` from the first, `(f, g, h, e)` from the second.
    pub fn from_quads(x_side: [Seq; 4], y_side: [Seq; 4]) -> Self {
        let [a, b, c, d] = x_side;
        let [f, g, h, e] = y_side;
        Self { a, b, c, d, e, f, g, h }
    }

    pub fn x_side(&self) -> [&Seq; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn y_side(&self) -> [&Seq; 4] {
        [&self.e, &self.f, &self.g, &self.h]
    }

    fn named(&self) -> impl Iterator<Item = (&'static str, &Seq)> {
        X_NAMES
            .into_iter()
            .zip(self.x_side())
            .chain(Y_NAMES.into_iter().zip(self.y_side()))
    }

    /// `(n, m)` for the shapes `a, b: n+1`, `c, d: n`, `f, g: m+1`, `h, e: m`.
    pub fn adjacent_shape(&self) -> Result<(usize, usize), YangError> {
        let n = self.c.len();
        let m = self.h.len();
        let expected = [
            ("a", &self.a, n + 1),
            ("b", &self.b, n + 1),
            ("d", &self.d, n),
            ("f", &self.f, m + 1),
            ("g", &self.g, m + 1),
            ("e", &self.e, m),
        ];
        for (name, seq, len) in expected {
            if seq.len() != len {
                return Err(YangError::Length {
                    name,
                    expected: len,
                    found: seq.len(),
                });
            }
        }
        Ok((n, m))
    }

    /// The interleaved octuple `a/0, b/0, 0/c, 0/d, 0/e, f/0, g/0, 0/h`.
    pub fn interleaved(&self) -> Result<Octuple, YangError> {
        self.adjacent_shape()?;
        Ok(Octuple {
            a: self.a.interleave_left(),
            b: self.b.interleave_left(),
            c: self.c.interleave_right(),
            d: self.d.interleave_right(),
            e: self.e.interleave_right(),
            f: self.f.interleave_left(),
            g: self.g.interleave_left(),
            h: self.h.interleave_right(),
        })
    }

    fn check_uniform_lengths(&self) -> Result<(usize, usize), YangError> {
        let n = self.a.len();
        let m = self.e.len();
        for (name, seq) in self.named() {
            let expected = if X_NAMES.contains(&name) { n } else { m };
            if seq.len() != expected {
                return Err(YangError::Length {
                    name,
                    expected,
                    found: seq.len(),
                });
            }
        }
        Ok((n, m))
    }
}

/// A signed outer-product summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub sign: i64,
    pub product: IntMat,
}

/// The four signed summands of each of `Q, R, S, T`, in formula order.
pub fn qrst_summands(oct: &Octuple) -> Result<[[Summand; 4]; 4], YangError> {
    oct.check_uniform_lengths()?;
    let Octuple { a, b, c, d, e, f, g, h } = oct;
    let term = |sign: i64, left: Seq, right: Seq| Summand {
        sign,
        product: outer(&left, &right),
    };
    Ok([
        [
            term(1, f.star(), a.clone()),
            term(1, g.clone(), c.clone()),
            term(-1, e.clone(), b.star()),
            term(1, h.clone(), d.clone()),
        ],
        [
            term(1, f.star(), b.clone()),
            term(1, g.star(), d.clone()),
            term(1, e.clone(), a.star()),
            term(-1, h.star(), c.clone()),
        ],
        [
            term(1, g.star(), a.clone()),
            term(-1, f.clone(), c.clone()),
            term(-1, h.clone(), b.clone()),
            term(-1, e.clone(), d.star()),
        ],
        [
            term(1, g.clone(), b.clone()),
            term(-1, f.clone(), d.clone()),
            term(1, h.star(), a.clone()),
            term(1, e.clone(), c.star()),
        ],
    ])
}

fn sum_summands(parts: &[Summand; 4]) -> Result<IntMat, YangError> {
    let (rows, cols) = parts[0].product.shape();
    let mut acc = IntMat::zeros(rows, cols)?;
    for part in parts {
        acc = if part.sign > 0 {
            acc.checked_add(&part.product)?
        } else {
            acc.checked_sub(&part.product)?
        };
    }
    Ok(acc)
}

/// `Q, R, S, T` for arbitrary integer inputs with `a..d` of one length `n`
/// and `e..h` of one length `m`. Each matrix is `m x n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QrstRaw {
    pub q: IntMat,
    pub r: IntMat,
    pub s: IntMat,
    pub t: IntMat,
}

impl QrstRaw {
    pub fn mats(&self) -> [&IntMat; 4] {
        [&self.q, &self.r, &self.s, &self.t]
    }

    /// `sum psi_X psi_X*` over `X = Q, R, S, T`.
    pub fn norm_sum(&self) -> Result<LaurentPoly2, LaurentError> {
        let polys = self.mats().map(IntMat::psi2);
        norm_sum(&polys)
    }
}

pub fn qrst_raw(oct: &Octuple) -> Result<QrstRaw, YangError> {
    let [q, r, s, t] = qrst_summands(oct)?;
    Ok(QrstRaw {
        q: sum_summands(&q)?,
        r: sum_summands(&r)?,
        s: sum_summands(&s)?,
        t: sum_summands(&t)?,
    })
}

/// Both sides of the two-variable factorization
/// `sum psi_X psi_X* (x, y) = (sum over a..d)(x) * (sum over e..h)(y)`.
pub fn factorization_sides(oct: &Octuple) -> Result<(LaurentPoly2, LaurentPoly2), YangError> {
    let lhs = qrst_raw(oct)?.norm_sum()?;
    let x_side = norm_sum(&oct.x_side().map(Seq::psi))?;
    let y_side = norm_sum(&oct.y_side().map(Seq::psi))?;
    Ok((lhs, x_side.in_x().checked_mul(&y_side.in_y())?))
}

/// Certified `(2m+1) x (2n+1)` matrices `Q, R, S, T` with every entry `+-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YangQuadMat {
    mats: QrstRaw,
    n: usize,
    m: usize,
}

impl YangQuadMat {
    pub fn q(&self) -> &IntMat {
        &self.mats.q
    }

    pub fn r(&self) -> &IntMat {
        &self.mats.r
    }

    pub fn s(&self) -> &IntMat {
        &self.mats.s
    }

    pub fn t(&self) -> &IntMat {
        &self.mats.t
    }

    pub fn mats(&self) -> [&IntMat; 4] {
        self.mats.mats()
    }

    pub fn raw(&self) -> &QrstRaw {
        &self.mats
    }

    /// `n` of the x-side input `BS(n+1, n)`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `m` of the y-side input `BS(m+1, m)`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `(2m+1)(2n+1)`
    pub fn composed_length(&self) -> usize {
        (2 * self.m + 1) * (2 * self.n + 1)
    }

    /// `seq(Q), seq(R), seq(S), seq(T)`.
    pub fn flatten(&self) -> [Seq; 4] {
        self.mats().map(IntMat::flatten)
    }
}

/// Interleaves a `+-1` octuple of shape `(n+1, n+1, n, n)` / `(m+1, m+1, m, m)`
/// and assembles `Q, R, S, T`, certifying that no entry is zero.
///
/// Complementarity of the inputs is not required for this step.
pub fn qrst_interleaved_octuple(oct: &Octuple) -> Result<YangQuadMat, YangError> {
    // Sequences are nonempty, so n, m >= 1 here.
    let (n, m) = oct.adjacent_shape()?;
    for (name, seq) in oct.named() {
        if !seq.is_pm1() {
            return Err(YangError::NotPlusMinusOne { name });
        }
    }
    let mats = qrst_raw(&oct.interleaved()?)?;
    for (matrix, mat) in ['Q', 'R', 'S', 'T'].into_iter().zip(mats.mats()) {
        debug_assert_eq!(mat.shape(), (2 * m + 1, 2 * n + 1));
        if let Some(&(row, col)) = mat.zero_positions().first() {
            return Err(YangError::ZeroEntry { matrix, row, col });
        }
    }
    Ok(YangQuadMat { mats, n, m })
}

fn check_adjacent(which: usize, quad: &BaseSeqQuad) -> Result<(), YangError> {
    if quad.m() != quad.n() + 1 || quad.n() == 0 {
        return Err(YangError::NotAdjacent {
            which,
            m: quad.m(),
            n: quad.n(),
        });
    }
    Ok(())
}

/// `Q, R, S, T` from `bs1` in `BS(n+1, n)` and `bs2` in `BS(m+1, m)`.
pub fn qrst_interleaved(bs1: &BaseSeqQuad, bs2: &BaseSeqQuad) -> Result<YangQuadMat, YangError> {
    check_adjacent(1, bs1)?;
    check_adjacent(2, bs2)?;
    qrst_interleaved_octuple(&Octuple::from_quads(bs1.seqs().clone(), bs2.seqs().clone()))
}

/// Composes `BS(n+1, n)` and `BS(m+1, m)` into a certified `BS(m', m')`,
/// `m' = (2m+1)(2n+1)`.
pub fn yang_compose(bs1: &BaseSeqQuad, bs2: &BaseSeqQuad) -> Result<BaseSeqQuad, YangError> {
    Ok(compose_with_matrices(bs1, bs2)?.0)
}

/// [`yang_compose`], also returning the intermediate matrices.
pub fn compose_with_matrices(
    bs1: &BaseSeqQuad,
    bs2: &BaseSeqQuad,
) -> Result<(BaseSeqQuad, YangQuadMat), YangError> {
    let mats = qrst_interleaved(bs1, bs2)?;
    let len = mats.composed_length();
    let [q, r, s, t] = mats.flatten();
    let quad = bs_verify(q, r, s, t, len, len)?;
    Ok((quad, mats))
}

/// Both sides of
/// `sum phi phi* (q..t)(x) = (sum phi phi* (a..d))(x^2) * (sum phi phi* (e..h))(x^step)`.
///
/// For complementary inputs the `e..h` factor is a constant, so the identity
/// holds for any `step`. Without complementarity it holds for
/// `step = 2(2n+1)`, the row width of the doubled grid.
pub fn hall_identity_sides(
    oct: &Octuple,
    composed: [&Seq; 4],
    step: i64,
) -> Result<(LaurentPoly1, LaurentPoly1), YangError> {
    let lhs = norm_sum(&composed.map(Seq::hall_poly))?;
    let x_factor = norm_sum(&oct.x_side().map(Seq::hall_poly))?.substitute(2)?;
    let y_factor = norm_sum(&oct.y_side().map(Seq::hall_poly))?.substitute(step)?;
    Ok((lhs, x_factor.checked_mul(&y_factor)?))
}

/// Both sides of `sum psi_X psi_X* (x, y) = A(x^2) E(y^2)` for the
/// interleaved matrices, where `A`, `E` are the `psi`-norm sums of the
/// un-interleaved x- and y-side inputs.
pub fn interleaved_factorization_sides(
    oct: &Octuple,
    mats: &YangQuadMat,
) -> Result<(LaurentPoly2, LaurentPoly2), YangError> {
    let lhs = mats.raw().norm_sum()?;
    let x_side = norm_sum(&oct.x_side().map(Seq::psi))?.substitute(2)?;
    let y_side = norm_sum(&oct.y_side().map(Seq::psi))?.substitute(2)?;
    Ok((lhs, x_side.in_x().checked_mul(&y_side.in_y())?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputSummary {
    pub quad: QuadRecord,
    pub long_len: usize,
    pub short_len: usize,
}

/// Structured certificate of one composition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub bs1: InputSummary,
    pub bs2: InputSummary,
    pub n: usize,
    pub m: usize,
    pub m_prime: usize,
    pub expected_weight_formula: &'static str,
    pub expected_weight: i64,
    pub weight: i64,
    pub npaf_sums: Vec<i64>,
    pub matrices: [Vec<String>; 4],
    pub checks: Vec<IdentityCheck>,
    pub output: QuadRecord,
    pub certified: bool,
}

impl CertificationReport {
    pub fn all_hold(&self) -> bool {
        self.certified && self.checks.iter().all(|c| c.holds)
    }
}

/// Composes and re-derives every identity the construction rests on.
pub fn certify_composition(
    bs1: &BaseSeqQuad,
    bs2: &BaseSeqQuad,
) -> Result<(BaseSeqQuad, CertificationReport), YangError> {
    let (out, mats) = compose_with_matrices(bs1, bs2)?;
    let oct = Octuple::from_quads(bs1.seqs().clone(), bs2.seqs().clone());
    let (n, m) = (mats.n(), mats.m());
    let m_prime = mats.composed_length();
    let expected_weight = 4 * m_prime as i64;
    let mut checks = Vec::new();

    checks.push(IdentityCheck {
        name: "full-support",
        statement: "Q, R, S, T have no zero entry".into(),
        holds: mats.mats().iter().all(|x| x.is_pm1()),
    });

    let (lhs, rhs) = interleaved_factorization_sides(&oct, &mats)?;
    checks.push(IdentityCheck {
        name: "two-variable-factorization",
        statement: "sum psi_X psi_X*(x,y) = (sum psi psi* of a..d)(x^2) * (sum psi psi* of e..h)(y^2)".into(),
        holds: lhs == rhs,
    });
    let grid_constant = (2 * (2 * n + 1) * 2 * (2 * m + 1)) as i64;
    checks.push(IdentityCheck {
        name: "two-variable-constant",
        statement: format!("sum psi_X psi_X*(x,y) = 2(2n+1) * 2(2m+1) = {grid_constant}"),
        holds: lhs == LaurentPoly2::constant(grid_constant),
    });

    let cols = (2 * n + 1) as i64;
    let collapse_ok = mats
        .mats()
        .iter()
        .all(|x| x.psi2().collapse(cols).ok() == Some(x.flatten().psi()));
    checks.push(IdentityCheck {
        name: "collapse",
        statement: "psi_seq(X)(x) = psi_X(x, x^(2n+1)) for X = Q, R, S, T".into(),
        holds: collapse_ok,
    });

    for (name, step) in [
        ("hall-identity-2(2m+1)", 2 * (2 * m as i64 + 1)),
        ("hall-identity-2(2n+1)", 2 * cols),
    ] {
        let (lhs, rhs) = hall_identity_sides(&oct, out.refs(), step)?;
        checks.push(IdentityCheck {
            name,
            statement: format!(
                "sum phi phi*(q..t)(x) = (sum phi phi* of a..d)(x^2) * (sum phi phi* of e..h)(x^{step})"
            ),
            holds: lhs == rhs,
        });
    }

    let psi_norm = norm_sum(&out.refs().map(Seq::psi))?;
    checks.push(IdentityCheck {
        name: "weight",
        statement: format!("sum psi psi*(q..t) = 4(2m+1)(2n+1) = {expected_weight}"),
        holds: psi_norm == LaurentPoly1::constant(expected_weight),
    });

    let summary = |q: &BaseSeqQuad| InputSummary {
        quad: QuadRecord::from(q),
        long_len: q.m(),
        short_len: q.n(),
    };
    let report = CertificationReport {
        bs1: summary(bs1),
        bs2: summary(bs2),
        n,
        m,
        m_prime,
        expected_weight_formula: "4(2m+1)(2n+1)",
        expected_weight,
        weight: out.weight(),
        npaf_sums: out.npaf_sums(),
        matrices: mats
            .mats()
            .map(|x| x.to_string().lines().map(str::to_owned).collect()),
        checks,
        output: QuadRecord::from(&out),
        certified: out.weight() == expected_weight,
    };
    Ok((out, report))
}
