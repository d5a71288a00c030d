//! Sparse Laurent polynomials in `x1..xm, y` with arbitrary-precision
//! integer coefficients.
//!
//! Every character and symmetric function in this crate is a
//! [`LaurentPoly`]. Terms live in a `BTreeMap` keyed by [`Monomial`], so
//! two polynomials are equal exactly when their term maps are equal, and
//! iterating the map backwards yields the canonical descending
//! lexicographic order used for rendering.

mod det;
mod division;
mod render;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub use det::PolyMatrix;
pub use render::{PolyJson, TermJson};

pub type Exponents = SmallVec<[i64; 6]>;

/// Exponent vector `(a1, .., am, b)` standing for `x1^a1 * .. * xm^am * y^b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = i64>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    /// The constant monomial for `m` even variables.
    pub fn one(m: usize) -> Self {
        Monomial(SmallVec::from_elem(0, m + 1))
    }

    /// `x_i`, 1-based.
    pub fn x(m: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= m, "x index {i} out of range 1..={m}");
        let mut e = Self::one(m);
        e.0[i - 1] = 1;
        e
    }

    pub fn y(m: usize) -> Self {
        let mut e = Self::one(m);
        e.0[m] = 1;
        e
    }

    /// Builds `x^xs * y^ye`.
    pub fn from_parts(xs: &[i64], ye: i64) -> Self {
        let mut e: Exponents = xs.iter().copied().collect();
        e.push(ye);
        Monomial(e)
    }

    /// Number of even variables.
    pub fn m(&self) -> usize {
        self.0.len() - 1
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn x_exponents(&self) -> &[i64] {
        &self.0[..self.0.len() - 1]
    }

    pub fn y_exponent(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|a| -a).collect())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    /// Componentwise `self >= other`, i.e. `other | self` in the polynomial ring.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Applies a permutation of the even variables: `x_i` is sent to `x_{perm[i]}`
    /// (0-based), `y` is fixed.
    pub fn permute_x(&self, perm: &[usize]) -> Monomial {
        let m = self.m();
        let mut e = Self::one(m);
        for (i, &p) in perm.iter().enumerate() {
            e.0[p] = self.0[i];
        }
        e.0[m] = self.0[m];
        e
    }
}

/// Exact sparse Laurent polynomial. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    m: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(m: usize) -> Self {
        LaurentPoly { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, 1)
    }

    pub fn constant(m: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::one(m), c)
    }

    pub fn monomial(mono: Monomial, c: impl Into<BigInt>) -> Self {
        let m = mono.m();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        LaurentPoly { m, terms }
    }

    /// The variable `x_i` (1-based).
    pub fn x(m: usize, i: usize) -> Self {
        Self::monomial(Monomial::x(m, i), 1)
    }

    pub fn y(m: usize) -> Self {
        Self::monomial(Monomial::y(m), 1)
    }

    /// Sums the given terms, dropping anything that cancels.
    pub fn from_terms<I, C>(m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(m);
        for (mono, c) in terms {
            if mono.m() != m {
                return Err(Error::AmbientMismatch { left: m, right: mono.m() });
            }
            p.add_term(mono, c.into());
        }
        Ok(p)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(k, c)| k.is_one() && c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Leading term under descending lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum of all exponent vectors; `None` for zero.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, k| acc.meet(k)))
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &LaurentPoly) -> Result<()> {
        if self.m != other.m {
            return Err(Error::AmbientMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ambient(other)?;
        let mut out = LaurentPoly::zero(self.m);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.mul(kb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.m);
        }
        LaurentPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplication by a monomial only shifts exponents.
    pub fn mul_monomial(&self, mono: &Monomial) -> LaurentPoly {
        assert_eq!(mono.m(), self.m, "ambient mismatch");
        LaurentPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.mul(mono), v.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one(self.m);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `x_i -> 1/x_i` and `y -> 1/y`. An involutive ring
    /// automorphism.
    pub fn invert_vars(&self) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.inv(), v.clone())).collect(),
        }
    }

    /// Value at `x_i = y = 1`, the sum of all coefficients.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies a permutation of the even variables (see [`Monomial::permute_x`]).
    pub fn permute_x(&self, perm: &[usize]) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.permute_x(perm), v.clone())).collect(),
        }
    }

    /// Sets `y = 0`. Only defined when no term carries a negative power of `y`.
    pub fn specialize_y_zero(&self) -> Option<LaurentPoly> {
        if self.terms.keys().any(|k| k.y_exponent() < 0) {
            return None;
        }
        Some(LaurentPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.y_exponent() == 0)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        })
    }

    /// Coefficient of `y^d`, as a polynomial in the `x` variables.
    pub fn y_coefficient(&self, d: i64) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.y_exponent() == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator impls panic on ambient mismatch; use the `checked_*` methods
// when mixing polynomials of unknown provenance.

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("ambient mismatch in add")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("ambient mismatch in sub")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("ambient mismatch in mul")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.m, rhs.m, "ambient mismatch in add");
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.m, rhs.m, "ambient mismatch in sub");
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}
