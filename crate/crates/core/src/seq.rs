//! Finite integer sequences and their correlation data.
//!
//! Entries are plain signed integers; the `{-1, +1}` alphabet is only
//! enforced where a result is certified (see [`bs_verify`]). Intermediate
//! values such as `(a + b) / 2` legitimately contain zeros.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly1};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("sequences must have at least one entry")]
    Empty,
    #[error("invalid symbol {symbol:?} at position {position} (expected '+', '-' or '0')")]
    BadSymbol { symbol: char, position: usize },
    #[error("entry {value} at position {position} has no sign symbol")]
    Unrenderable { value: i64, position: usize },
}

/// A nonempty finite sequence of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq(Vec<i64>);

impl Seq {
    pub fn new(entries: Vec<i64>) -> Result<Self, SeqError> {
        if entries.is_empty() {
            return Err(SeqError::Empty);
        }
        Ok(Self(entries))
    }

    /// Builds a sequence from a slice; panics if it is empty.
    pub fn from_slice(entries: &[i64]) -> Self {
        Self::new(entries.to_vec()).expect("empty sequence")
    }

    pub fn zeros(len: usize) -> Result<Self, SeqError> {
        Self::new(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always `false`; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn is_pm1(&self) -> bool {
        self.0.iter().all(|&v| v == 1 || v == -1)
    }

    pub fn is_ternary(&self) -> bool {
        self.0.iter().all(|&v| (-1..=1).contains(&v))
    }

    /// Indices of nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i)
    }

    /// `a*`: the reversal (the coefficient involution on `Z` is trivial).
    pub fn star(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|v| -v).collect())
    }

    /// Concatenation `self | other`.
    pub fn concat(&self, other: &Seq) -> Self {
        let mut entries = self.0.clone();
        entries.extend_from_slice(&other.0);
        Self(entries)
    }

    /// Non-periodic autocorrelation `N(j) = sum_i a_i a_{i+j}` for `j = 0..l`.
    pub fn npaf(&self) -> CorrelationProfile {
        let a = &self.0;
        let values = (0..a.len())
            .map(|j| a.iter().zip(&a[j..]).map(|(x, y)| x * y).sum())
            .collect();
        CorrelationProfile { values }
    }

    /// Hall polynomial `sum_i a_i x^i`.
    pub fn hall_poly(&self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(self.0.iter().enumerate().map(|(i, &c)| (i as i64, c)))
            .expect("sequence entries are distinct monomials")
    }

    /// `x^(1-l) * phi(x^2)`, whose exponents are `2i + 1 - l`. This is the
    /// normalization under which reversal matches the involution.
    pub fn psi(&self) -> LaurentPoly1 {
        let shift = 1 - self.len() as i64;
        LaurentPoly1::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &c)| (2 * i as i64 + shift, c)),
        )
        .expect("sequence entries are distinct monomials")
    }

    /// `a/0 = (a_0, 0, a_1, ..., 0, a_{l-1})`, length `2l - 1`.
    pub fn interleave_left(&self) -> Self {
        let mut out = vec![0; 2 * self.len() - 1];
        for (i, &v) in self.0.iter().enumerate() {
            out[2 * i] = v;
        }
        Self(out)
    }

    /// `0/a = (0, a_0, 0, ..., a_{l-1}, 0)`, length `2l + 1`.
    pub fn interleave_right(&self) -> Self {
        let mut out = vec![0; 2 * self.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            out[2 * i + 1] = v;
        }
        Self(out)
    }
}

/// Renders with `+`, `-` and `0`. Other values fall back to a bracketed list.
impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_sign_string() {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "{:?}", self.0),
        }
    }
}

impl Seq {
    pub fn to_sign_string(&self) -> Result<String, SeqError> {
        self.0
            .iter()
            .enumerate()
            .map(|(position, &value)| match value {
                1 => Ok('+'),
                -1 => Ok('-'),
                0 => Ok('0'),
                _ => Err(SeqError::Unrenderable { value, position }),
            })
            .collect()
    }
}

impl FromStr for Seq {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = s
            .trim()
            .chars()
            .enumerate()
            .map(|(position, symbol)| match symbol {
                '+' => Ok(1),
                '-' => Ok(-1),
                '0' => Ok(0),
                _ => Err(SeqError::BadSymbol { symbol, position }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Seq::new(entries)
    }
}

/// `[N(0), ..., N(l-1)]`; lags past the end read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    values: Vec<i64>,
}

impl CorrelationProfile {
    pub fn get(&self, lag: usize) -> i64 {
        self.values.get(lag).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Lag-by-lag sum of the NPAFs, up to the longest sequence.
pub fn npaf_sum(seqs: &[&Seq]) -> Vec<i64> {
    let profiles: Vec<_> = seqs.iter().map(|s| s.npaf()).collect();
    let max_len = seqs.iter().map(|s| s.len()).max().unwrap_or(0);
    (0..max_len)
        .map(|j| profiles.iter().map(|p| p.get(j)).sum())
        .collect()
}

/// The three equivalent ways of testing complementarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementarityRoute {
    /// Lag-wise NPAF sums.
    Npaf,
    /// `sum phi phi* = w`.
    Hall,
    /// `sum psi psi* = w`.
    Psi,
}

pub fn is_complementary_by(
    route: ComplementarityRoute,
    seqs: &[&Seq],
    weight: i64,
) -> Result<bool, LaurentError> {
    match route {
        ComplementarityRoute::Npaf => {
            let sums = npaf_sum(seqs);
            Ok(sums.first() == Some(&weight) && sums[1..].iter().all(|&v| v == 0))
        }
        ComplementarityRoute::Hall => {
            let polys: Vec<_> = seqs.iter().map(|s| s.hall_poly()).collect();
            let total = crate::laurent::norm_sum(&polys)?;
            Ok(total == LaurentPoly1::constant(weight))
        }
        ComplementarityRoute::Psi => {
            let polys: Vec<_> = seqs.iter().map(|s| s.psi()).collect();
            let total = crate::laurent::norm_sum(&polys)?;
            Ok(total == LaurentPoly1::constant(weight))
        }
    }
}

/// Whether the sequences are complementary with weight `weight`, by NPAF sums.
pub fn is_complementary(seqs: &[&Seq], weight: i64) -> bool {
    is_complementary_by(ComplementarityRoute::Npaf, seqs, weight).expect("NPAF route is infallible")
}

/// Names used in diagnostics for the four members of a quadruple.
pub const QUAD_NAMES: [&str; 4] = ["a", "b", "c", "d"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("sequence {name} has length {found}, expected {expected}")]
    LengthMismatch {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("sequence {name} has entry {value} at position {position}, expected +1 or -1")]
    NotPlusMinusOne {
        name: &'static str,
        position: usize,
        value: i64,
    },
    #[error(
        "NPAF sum at lag {lag} is {sum} (a: {}, b: {}, c: {}, d: {})",
        contributions[0], contributions[1], contributions[2], contributions[3]
    )]
    NonzeroCorrelation {
        lag: usize,
        sum: i64,
        contributions: [i64; 4],
    },
}

/// A certified element of `BS(m, n)`: `+-1` sequences of lengths `m, m, n, n`
/// whose NPAFs sum to zero at every positive lag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseSeqQuad {
    seqs: [Seq; 4],
    m: usize,
    n: usize,
}

impl BaseSeqQuad {
    pub fn a(&self) -> &Seq {
        &self.seqs[0]
    }

    pub fn b(&self) -> &Seq {
        &self.seqs[1]
    }

    pub fn c(&self) -> &Seq {
        &self.seqs[2]
    }

    pub fn d(&self) -> &Seq {
        &self.seqs[3]
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seqs(&self) -> &[Seq; 4] {
        &self.seqs
    }

    pub fn refs(&self) -> [&Seq; 4] {
        [&self.seqs[0], &self.seqs[1], &self.seqs[2], &self.seqs[3]]
    }

    /// `2(m + n)`
    pub fn weight(&self) -> i64 {
        2 * (self.m + self.n) as i64
    }

    /// Lag-wise NPAF sums; entry 0 is the weight, the rest are zero.
    pub fn npaf_sums(&self) -> Vec<i64> {
        npaf_sum(&self.refs())
    }

    pub fn into_seqs(self) -> [Seq; 4] {
        self.seqs
    }
}

/// Certifies `(a, b, c, d)` as an element of `BS(m, n)`.
///
/// Checks lengths, then the alphabet, then every positive lag in increasing
/// order, so the reported lag is the smallest failing one.
pub fn bs_verify(a: Seq, b: Seq, c: Seq, d: Seq, m: usize, n: usize) -> Result<BaseSeqQuad, CertError> {
    let seqs = [a, b, c, d];
    let expected = [m, m, n, n];
    for ((seq, &len), name) in seqs.iter().zip(&expected).zip(QUAD_NAMES) {
        if seq.len() != len {
            return Err(CertError::LengthMismatch {
                name,
                expected: len,
                found: seq.len(),
            });
        }
    }
    for (seq, name) in seqs.iter().zip(QUAD_NAMES) {
        if let Some((position, &value)) = seq
            .entries()
            .iter()
            .enumerate()
            .find(|(_, &v)| v != 1 && v != -1)
        {
            return Err(CertError::NotPlusMinusOne { name, position, value });
        }
    }
    // N(0) sums to 2(m + n) for any +-1 quadruple, so only j >= 1 is checked.
    let profiles = seqs.each_ref().map(|s| s.npaf());
    for lag in 1..m.max(n) {
        let contributions = profiles.each_ref().map(|p| p.get(lag));
        let sum: i64 = contributions.iter().sum();
        if sum != 0 {
            return Err(CertError::NonzeroCorrelation {
                lag,
                sum,
                contributions,
            });
        }
    }
    Ok(BaseSeqQuad { seqs, m, n })
}

/// Certifies a quadruple, reading `m` and `n` off the lengths of `a` and `c`.
pub fn bs_verify_inferred(a: Seq, b: Seq, c: Seq, d: Seq) -> Result<BaseSeqQuad, CertError> {
    let (m, n) = (a.len(), c.len());
    bs_verify(a, b, c, d, m, n)
}

/// JSON form of a quadruple: `{"a": "++", "b": "+-", "c": "+", "d": "+"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadRecord {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
}

impl QuadRecord {
    pub fn from_seqs(seqs: [&Seq; 4]) -> Self {
        let [a, b, c, d] = seqs.map(|s| s.to_string());
        Self { a, b, c, d }
    }

    pub fn to_seqs(&self) -> Result<[Seq; 4], SeqError> {
        Ok([self.a.parse()?, self.b.parse()?, self.c.parse()?, self.d.parse()?])
    }
}

impl From<&BaseSeqQuad> for QuadRecord {
    fn from(q: &BaseSeqQuad) -> Self {
        Self::from_seqs(q.refs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Seq {
        text.parse().unwrap()
    }

    #[test]
    fn star_reverses() {
        assert_eq!(Seq::from_slice(&[1, 1, -1]).star(), Seq::from_slice(&[-1, 1, 1]));
        let a = s("+--+0-");
        assert_eq!(a.star().star(), a);
        assert_eq!(s("+").star(), s("+"));
    }

    #[test]
    fn npaf_examples() {
        assert_eq!(s("++").npaf().values(), &[2, 1]);
        assert_eq!(s("+-").npaf().values(), &[2, -1]);
        let a = s("+-++-+--");
        assert_eq!(a.npaf().get(0), 8);
        assert_eq!(a.npaf().get(8), 0);
        assert_eq!(a.npaf().get(100), 0);
    }

    #[test]
    fn hall_and_psi() {
        let a = Seq::from_slice(&[1, -1, 1]);
        assert_eq!(
            a.hall_poly(),
            LaurentPoly1::from_terms([(0, 1), (1, -1), (2, 1)]).unwrap()
        );
        assert_eq!(Seq::from_slice(&[7]).hall_poly(), LaurentPoly1::constant(7));
        assert_eq!(Seq::from_slice(&[0, 1]).hall_poly(), LaurentPoly1::x());

        assert_eq!(s("+").psi(), LaurentPoly1::one());
        assert_eq!(s("++").psi(), LaurentPoly1::from_terms([(-1, 1), (1, 1)]).unwrap());
        assert_eq!(a.psi(), LaurentPoly1::from_terms([(-2, 1), (0, -1), (2, 1)]).unwrap());
    }

    #[test]
    fn interleaving() {
        let a = s("+-");
        assert_eq!(a.interleave_left(), Seq::from_slice(&[1, 0, -1]));
        assert_eq!(a.interleave_right(), Seq::from_slice(&[0, 1, 0, -1, 0]));
        assert_eq!(s("+").interleave_left(), s("+"));
        assert_eq!(s("+").interleave_right(), s("0+0"));
        let doubled = a.psi().substitute(2).unwrap();
        assert_eq!(a.interleave_left().psi(), doubled);
        assert_eq!(a.interleave_right().psi(), doubled);
    }

    #[test]
    fn complementarity_examples() {
        let (p, m) = (s("++"), s("+-"));
        assert!(is_complementary(&[&p, &m], 4));
        assert!(!is_complementary(&[&p], 2));
        let (c, d) = (s("+"), s("+"));
        assert!(is_complementary(&[&p, &m, &c, &d], 6));
        assert!(!is_complementary(&[&p, &m, &c, &d], 5));
        for route in [ComplementarityRoute::Hall, ComplementarityRoute::Psi] {
            assert!(is_complementary_by(route, &[&p, &m, &c, &d], 6).unwrap());
            assert!(!is_complementary_by(route, &[&p], 2).unwrap());
        }
    }

    #[test]
    fn bs_verify_accepts_bs21() {
        let q = bs_verify(s("++"), s("+-"), s("+"), s("+"), 2, 1).unwrap();
        assert_eq!(q.weight(), 6);
        assert_eq!(q.npaf_sums(), vec![6, 0]);
    }

    #[test]
    fn bs_verify_reports_smallest_lag() {
        let err = bs_verify(s("++"), s("++"), s("+"), s("+"), 2, 1).unwrap_err();
        assert_eq!(
            err,
            CertError::NonzeroCorrelation {
                lag: 1,
                sum: 2,
                contributions: [1, 1, 0, 0]
            }
        );
        // lag 1 passes, lag 2 fails
        let err = bs_verify(s("+++"), s("+-+"), s("++"), s("+-"), 3, 2).unwrap_err();
        assert_eq!(
            err,
            CertError::NonzeroCorrelation {
                lag: 2,
                sum: 2,
                contributions: [1, 1, 0, 0]
            }
        );
    }

    #[test]
    fn bs_verify_shape_and_alphabet_errors() {
        let err = bs_verify(s("++"), s("+-"), s("+"), s("+"), 2, 2).unwrap_err();
        assert_eq!(
            err,
            CertError::LengthMismatch {
                name: "c",
                expected: 2,
                found: 1
            }
        );
        let err = bs_verify(s("+0"), s("+-"), s("+"), s("+"), 2, 1).unwrap_err();
        assert_eq!(
            err,
            CertError::NotPlusMinusOne {
                name: "a",
                position: 1,
                value: 0
            }
        );
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(s("+-0").entries(), &[1, -1, 0]);
        assert_eq!(s(" ++-\n").to_string(), "++-");
        assert_eq!(
            "+x-".parse::<Seq>().unwrap_err(),
            SeqError::BadSymbol {
                symbol: 'x',
                position: 1
            }
        );
        assert_eq!("".parse::<Seq>().unwrap_err(), SeqError::Empty);
        assert!(Seq::new(vec![]).is_err());
        assert!(Seq::from_slice(&[2, 1]).to_sign_string().is_err());
    }

    #[test]
    fn alphabet_predicates() {
        assert!(s("+-+").is_pm1());
        assert!(!s("+0+").is_pm1());
        assert!(s("+0-").is_ternary());
        assert!(!Seq::from_slice(&[2]).is_ternary());
    }

    #[test]
    fn quad_record_json() {
        let q = bs_verify(s("++"), s("+-"), s("+"), s("+"), 2, 1).unwrap();
        let json = serde_json::to_string(&QuadRecord::from(&q)).unwrap();
        assert_eq!(json, r#"{"a":"++","b":"+-","c":"+","d":"+"}"#);
        let back: QuadRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_seqs().unwrap(), q.seqs().clone());
    }
}
