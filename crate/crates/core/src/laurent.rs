//! Exact Laurent polynomials with integer coefficients in one and two
//! variables, together with the involution `*` that inverts every variable.
//!
//! Polynomials are stored sparsely as a map from monomial exponent to a
//! nonzero coefficient. Every constructor and operation canonicalizes, so
//! structural equality is polynomial equality. Arithmetic is checked: an
//! overflowing coefficient or exponent is reported as [`LaurentError`] by the
//! `checked_*` methods and panics in the operator impls. Nothing ever wraps.
//!
//! The coefficient ring is `Z` with the identity involution, so `p*` only
//! negates exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("coefficient overflow")]
    CoefficientOverflow,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("substitution x -> x^0 is not a ring automorphism")]
    ZeroSubstitution,
}

pub type Result<T> = std::result::Result<T, LaurentError>;

/// Exponent of a monomial in a Laurent ring. Monomials form a free abelian
/// group under exponent addition.
pub trait Monomial: Copy + Ord + fmt::Debug {
    fn unit() -> Self;
    fn checked_combine(self, other: Self) -> Option<Self>;
    fn checked_invert(self) -> Option<Self>;
    /// Writes the variable part (`x^2*y^-1`); returns `false` for the unit
    /// monomial, which has no variable part.
    fn write_vars(self, f: &mut fmt::Formatter<'_>) -> std::result::Result<bool, fmt::Error>;
}

impl Monomial for i64 {
    fn unit() -> Self {
        0
    }

    fn checked_combine(self, other: Self) -> Option<Self> {
        self.checked_add(other)
    }

    fn checked_invert(self) -> Option<Self> {
        self.checked_neg()
    }

    fn write_vars(self, f: &mut fmt::Formatter<'_>) -> std::result::Result<bool, fmt::Error> {
        write_power(f, "x", self)
    }
}

impl Monomial for (i64, i64) {
    fn unit() -> Self {
        (0, 0)
    }

    fn checked_combine(self, other: Self) -> Option<Self> {
        Some((self.0.checked_add(other.0)?, self.1.checked_add(other.1)?))
    }

    fn checked_invert(self) -> Option<Self> {
        Some((self.0.checked_neg()?, self.1.checked_neg()?))
    }

    fn write_vars(self, f: &mut fmt::Formatter<'_>) -> std::result::Result<bool, fmt::Error> {
        let wrote_x = write_power(f, "x", self.0)?;
        if self.1 != 0 && wrote_x {
            f.write_str("*")?;
        }
        let wrote_y = write_power(f, "y", self.1)?;
        Ok(wrote_x || wrote_y)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, e: i64) -> std::result::Result<bool, fmt::Error> {
    match e {
        0 => Ok(false),
        1 => f.write_str(var).map(|_| true),
        _ => write!(f, "{var}^{e}").map(|_| true),
    }
}

/// A Laurent polynomial over `Z` whose monomials are indexed by `E`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<E: Monomial> {
    terms: BTreeMap<E, i64>,
}

/// `Z[x, x^-1]`
pub type LaurentPoly1 = Laurent<i64>;
/// `Z[x, x^-1, y, y^-1]`
pub type LaurentPoly2 = Laurent<(i64, i64)>;

impl<E: Monomial> Laurent<E> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, E::unit())
    }

    pub fn monomial(coeff: i64, exp: E) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, i64)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.accumulate(e, c)?;
        }
        Ok(p)
    }

    fn accumulate(&mut self, exp: E, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot = slot
            .checked_add(coeff)
            .ok_or(LaurentError::CoefficientOverflow)?;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: E) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (E, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// The value if `self` is a constant (including zero).
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&E::unit()).copied(),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.accumulate(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.accumulate(e, c.checked_neg().ok_or(LaurentError::CoefficientOverflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        Self::zero().checked_sub(self)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1
                    .checked_combine(e2)
                    .ok_or(LaurentError::ExponentOverflow)?;
                let c = c1
                    .checked_mul(c2)
                    .ok_or(LaurentError::CoefficientOverflow)?;
                out.accumulate(e, c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_star(&self) -> Result<Self> {
        let terms = self
            .terms()
            .map(|(e, c)| Ok((e.checked_invert().ok_or(LaurentError::ExponentOverflow)?, c)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    /// The involution `*`: every variable is inverted, coefficients are kept.
    ///
    /// Panics only if an exponent equals `i64::MIN`.
    pub fn star(&self) -> Self {
        self.checked_star().expect("exponent overflow in involution")
    }

    /// `p * p^*`, the form whose sums encode complementarity.
    pub fn norm(&self) -> Result<Self> {
        self.checked_mul(&self.checked_star()?)
    }
}

impl LaurentPoly1 {
    /// `x`
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// Returns `p(x^k)`.
    pub fn substitute(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(LaurentError::ZeroSubstitution);
        }
        let terms = self
            .terms()
            .map(|(e, c)| Ok((e.checked_mul(k).ok_or(LaurentError::ExponentOverflow)?, c)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    /// `x^shift * p`.
    pub fn shift(&self, shift: i64) -> Result<Self> {
        let terms = self
            .terms()
            .map(|(e, c)| Ok((e.checked_add(shift).ok_or(LaurentError::ExponentOverflow)?, c)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { terms })
    }

    /// Embeds `p(x)` as a polynomial in `x` only.
    pub fn in_x(&self) -> LaurentPoly2 {
        Laurent {
            terms: self.terms().map(|(e, c)| ((e, 0), c)).collect(),
        }
    }

    /// Embeds `p(x)` as the polynomial `p(y)`.
    pub fn in_y(&self) -> LaurentPoly2 {
        Laurent {
            terms: self.terms().map(|(e, c)| ((0, e), c)).collect(),
        }
    }
}

impl LaurentPoly2 {
    /// `y`
    pub fn y() -> Self {
        Self::monomial(1, (0, 1))
    }

    /// Substitutes `y = x^k`, giving a one-variable polynomial. `k = 0` is
    /// allowed here and sends `y` to `1`.
    pub fn collapse(&self, k: i64) -> Result<LaurentPoly1> {
        let mut out = LaurentPoly1::zero();
        for ((i, j), c) in self.terms() {
            let e = k
                .checked_mul(j)
                .and_then(|kj| kj.checked_add(i))
                .ok_or(LaurentError::ExponentOverflow)?;
            out.accumulate(e, c)?;
        }
        Ok(out)
    }
}

impl<E: Monomial> fmt::Display for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let magnitude = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if e == E::unit() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if magnitude != 1 {
                write!(f, "{magnitude}*")?;
            }
            e.write_vars(f)?;
        }
        Ok(())
    }
}

impl<E: Monomial> fmt::Debug for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<E: Monomial> $tr<&Laurent<E>> for &Laurent<E> {
            type Output = Laurent<E>;
            fn $method(self, rhs: &Laurent<E>) -> Laurent<E> {
                self.$checked(rhs).expect("Laurent polynomial overflow")
            }
        }

        impl<E: Monomial> $tr<Laurent<E>> for Laurent<E> {
            type Output = Laurent<E>;
            fn $method(self, rhs: Laurent<E>) -> Laurent<E> {
                (&self).$method(&rhs)
            }
        }

        impl<E: Monomial> $tr<&Laurent<E>> for Laurent<E> {
            type Output = Laurent<E>;
            fn $method(self, rhs: &Laurent<E>) -> Laurent<E> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<E: Monomial> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        self.checked_neg().expect("Laurent polynomial overflow")
    }
}

impl<E: Monomial> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        -&self
    }
}

/// The four sums `q, r, s, t` built from eight ring elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeForms<E: Monomial> {
    pub q: Laurent<E>,
    pub r: Laurent<E>,
    pub s: Laurent<E>,
    pub t: Laurent<E>,
}

/// Forms
///
/// ```text
/// q = a f* + c g  - b* e + d h
/// r = b f* + d g* + a* e - c h*
/// s = a g* - c f  - b h  - d* e
/// t = b g  - d f  + a h* + c* e
/// ```
#[allow(clippy::too_many_arguments)]
pub fn lagrange_forms<E: Monomial>(
    a: &Laurent<E>,
    b: &Laurent<E>,
    c: &Laurent<E>,
    d: &Laurent<E>,
    e: &Laurent<E>,
    f: &Laurent<E>,
    g: &Laurent<E>,
    h: &Laurent<E>,
) -> Result<LagrangeForms<E>> {
    let (as_, bs, cs, ds) = (a.checked_star()?, b.checked_star()?, c.checked_star()?, d.checked_star()?);
    let (fs, gs, hs) = (f.checked_star()?, g.checked_star()?, h.checked_star()?);
    let sum = |parts: [(i64, &Laurent<E>, &Laurent<E>); 4]| -> Result<Laurent<E>> {
        let mut acc = Laurent::zero();
        for (sign, l, r) in parts {
            let prod = l.checked_mul(r)?;
            acc = if sign > 0 {
                acc.checked_add(&prod)?
            } else {
                acc.checked_sub(&prod)?
            };
        }
        Ok(acc)
    };
    Ok(LagrangeForms {
        q: sum([(1, a, &fs), (1, c, g), (-1, &bs, e), (1, d, h)])?,
        r: sum([(1, b, &fs), (1, d, &gs), (1, &as_, e), (-1, c, &hs)])?,
        s: sum([(1, a, &gs), (-1, c, f), (-1, b, h), (-1, &ds, e)])?,
        t: sum([(1, b, g), (-1, d, f), (1, a, &hs), (1, &cs, e)])?,
    })
}

/// Sum of `p p*` over the given polynomials.
pub fn norm_sum<'a, E: Monomial + 'a>(polys: impl IntoIterator<Item = &'a Laurent<E>>) -> Result<Laurent<E>> {
    polys
        .into_iter()
        .try_fold(Laurent::zero(), |acc, p| acc.checked_add(&p.norm()?))
}

/// Checks `qq* + rr* + ss* + tt* = (aa* + bb* + cc* + dd*)(ee* + ff* + gg* + hh*)`
/// as an exact polynomial identity.
#[allow(clippy::too_many_arguments)]
pub fn lagrange_check<E: Monomial>(
    a: &Laurent<E>,
    b: &Laurent<E>,
    c: &Laurent<E>,
    d: &Laurent<E>,
    e: &Laurent<E>,
    f: &Laurent<E>,
    g: &Laurent<E>,
    h: &Laurent<E>,
) -> Result<bool> {
    let forms = lagrange_forms(a, b, c, d, e, f, g, h)?;
    let lhs = norm_sum([&forms.q, &forms.r, &forms.s, &forms.t])?;
    let rhs = norm_sum([a, b, c, d])?.checked_mul(&norm_sum([e, f, g, h])?)?;
    Ok(lhs == rhs)
}
