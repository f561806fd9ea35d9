//! Independent reference computations for tests.
//!
//! Nothing here calls the library's arithmetic: polynomials are raw term
//! lists multiplied term by term into a `HashMap`, correlations are plain
//! double loops, enumeration walks every sign pattern.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use yangmul::Laurent;
use yangmul::laurent::Monomial;

/// A polynomial as an unsorted list of `(exponent, coefficient)` terms.
pub type Terms<E> = Vec<(E, i64)>;

pub trait Exp: Copy + Eq + Hash {
    fn plus(self, other: Self) -> Self;
    fn minus(self) -> Self;
}

impl Exp for i64 {
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn minus(self) -> Self {
        -self
    }
}

impl Exp for (i64, i64) {
    fn plus(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
    fn minus(self) -> Self {
        (-self.0, -self.1)
    }
}

pub fn terms_of<E: Monomial>(p: &Laurent<E>) -> Terms<E> {
    p.terms().collect()
}

/// Collects like terms and drops zeros.
pub fn normalize<E: Exp>(t: &Terms<E>) -> HashMap<E, i64> {
    let mut out: HashMap<E, i64> = HashMap::new();
    for &(e, c) in t {
        *out.entry(e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn add<E: Exp>(p: &Terms<E>, q: &Terms<E>) -> Terms<E> {
    p.iter().chain(q).copied().collect()
}

pub fn sub<E: Exp>(p: &Terms<E>, q: &Terms<E>) -> Terms<E> {
    p.iter().copied().chain(q.iter().map(|&(e, c)| (e, -c))).collect()
}

pub fn mul<E: Exp>(p: &Terms<E>, q: &Terms<E>) -> Terms<E> {
    let mut out = Vec::with_capacity(p.len() * q.len());
    for &(e1, c1) in p {
        for &(e2, c2) in q {
            out.push((e1.plus(e2), c1 * c2));
        }
    }
    out
}

pub fn star<E: Exp>(p: &Terms<E>) -> Terms<E> {
    p.iter().map(|&(e, c)| (e.minus(), c)).collect()
}

pub fn same<E: Exp>(p: &Terms<E>, q: &Terms<E>) -> bool {
    normalize(p) == normalize(q)
}

pub fn matches<E: Monomial + Exp>(lib: &Laurent<E>, oracle: &Terms<E>) -> bool {
    normalize(&terms_of(lib)) == normalize(oracle)
}

/// Both sides of the Lagrange identity, expanded term by term.
pub fn lagrange_sides<E: Exp>(x: [&Terms<E>; 8]) -> (Terms<E>, Terms<E>) {
    let [a, b, c, d, e, f, g, h] = x;
    let s = star::<E>;
    let q = add(&sub(&add(&mul(a, &s(f)), &mul(c, g)), &mul(&s(b), e)), &mul(d, h));
    let r = sub(&add(&add(&mul(b, &s(f)), &mul(d, &s(g))), &mul(&s(a), e)), &mul(c, &s(h)));
    let ss = sub(&sub(&sub(&mul(a, &s(g)), &mul(c, f)), &mul(b, h)), &mul(&s(d), e));
    let t = add(&add(&sub(&mul(b, g), &mul(d, f)), &mul(a, &s(h))), &mul(&s(c), e));
    let norm = |p: &Terms<E>| mul(p, &s(p));
    let lhs = [q, r, ss, t].iter().fold(Vec::new(), |acc, p| add(&acc, &norm(p)));
    let left = [a, b, c, d].iter().fold(Vec::new(), |acc, p| add(&acc, &norm(p)));
    let right = [e, f, g, h].iter().fold(Vec::new(), |acc, p| add(&acc, &norm(p)));
    (lhs, mul(&left, &right))
}

/// `N(j)` by the defining double sum, for every `j` in `0..len`.
pub fn npaf(a: &[i64]) -> Vec<i64> {
    let l = a.len();
    let mut out = vec![0; l];
    for (j, slot) in out.iter_mut().enumerate() {
        for i in 0..l - j {
            *slot += a[i] * a[i + j];
        }
    }
    out
}

/// `psi_a` straight from `x^(1-l) phi(x^2)`: build `phi`, square the
/// variable, multiply by the shift monomial.
pub fn psi(a: &[i64]) -> Terms<i64> {
    let phi: Terms<i64> = a.iter().enumerate().map(|(i, &c)| (i as i64, c)).collect();
    let phi_sq: Terms<i64> = phi.iter().map(|&(e, c)| (2 * e, c)).collect();
    mul(&vec![(1 - a.len() as i64, 1)], &phi_sq)
}

pub fn hall(a: &[i64]) -> Terms<i64> {
    a.iter().enumerate().map(|(i, &c)| (i as i64, c)).collect()
}

/// `psi_A(x, y)` for a matrix given as rows.
pub fn psi2(rows: &[Vec<i64>]) -> Terms<(i64, i64)> {
    let m = rows.len() as i64;
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let y = 2 * i as i64 + 1 - m;
        for (x, c) in psi(row) {
            out.push(((x, y), c));
        }
    }
    out
}

/// Every quadruple in `BS(m, n)`, as a set.
pub fn enumerate_bs(m: usize, n: usize) -> BTreeSet<[Vec<i64>; 4]> {
    let lens = [m, m, n, n];
    let total: usize = lens.iter().sum();
    let mut out = BTreeSet::new();
    for code in 0u64..(1 << total) {
        let mut bits = (0..total).map(|k| if code >> k & 1 == 1 { -1 } else { 1 });
        let quad: [Vec<i64>; 4] = lens.map(|l| bits.by_ref().take(l).collect());
        let profiles: Vec<Vec<i64>> = quad.iter().map(|s| npaf(s)).collect();
        let ok = (1..m.max(n)).all(|j| profiles.iter().map(|p| p.get(j).copied().unwrap_or(0)).sum::<i64>() == 0);
        if ok {
            out.insert(quad);
        }
    }
    out
}

/// `H H^t` by nested loops.
pub fn gram(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| rows.iter().map(|s| r.iter().zip(s).map(|(x, y)| x * y).sum()).collect())
        .collect()
}

pub fn is_scaled_identity(g: &[Vec<i64>], scale: i64) -> bool {
    g.iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, &v)| v == if i == j { scale } else { 0 }))
}

/// Periodic autocorrelation at shift `j`.
pub fn paf(a: &[i64], j: usize) -> i64 {
    let l = a.len();
    (0..l).map(|i| a[i] * a[(i + j) % l]).sum()
}
