//! Irreducible characters of `gl(m|1)`.
//!
//! Three independent routes produce the same polynomial for every special
//! weight:
//!
//! * [`Route::Lemma21`]: the closed typical formula and the strip sum over
//!   `A_{k,i}` for atypical weights, built from Schur functions;
//! * [`Route::SuZhang`]: the alternating Weyl-group sum over the odd-root
//!   product, divided by the Vandermonde, with no Schur functions involved;
//! * [`Route::Determinant`]: the composite super Schur determinant of the
//!   composite partition attached to the weight.
//!
//! Arbitrary integral dominant weights reduce to special ones by adding a
//! multiple of `sigma = (1, .., 1; -1)`, which multiplies the character by a
//! power of `y^-1 x1 .. xm`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::DominantWeight;
use crate::perm::signed_permutations;
use crate::ring::{LaurentPoly, Monomial};
use crate::superschur::composite_super_schur;
use crate::symfun::{alternant_reduce, elementary, schur, vandermonde};
use crate::weights::{atypical_roots, phi, reduce_to_special, rho0, special_kind, SuperWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Lemma21,
    SuZhang,
    Determinant,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Lemma21, Route::SuZhang, Route::Determinant];

    pub fn name(self) -> &'static str {
        match self {
            Route::Lemma21 => "lemma21",
            Route::SuZhang => "suzhang",
            Route::Determinant => "determinant",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma21" => Ok(Route::Lemma21),
            "suzhang" => Ok(Route::SuZhang),
            "determinant" => Ok(Route::Determinant),
            other => Err(Error::Parse(format!("unknown route {other:?}"))),
        }
    }
}

/// A character value together with the weight and route that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub value: LaurentPoly,
    pub weight: SuperWeight,
    pub route: Route,
}

/// How [`suzhang_with`] turns the Weyl-group sum into a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuZhangStrategy {
    /// Sum over all `m!` permutations, then divide by the Vandermonde.
    Raw,
    /// Sort each exponent vector into an alternant `+- a_{w+delta}` and
    /// replace the quotient by the Schur function `s_w`.
    AlternantReduce,
}

/// `y^mu / e_m` as a monomial.
fn prefactor(w: &SuperWeight) -> Monomial {
    Monomial::from_parts(&vec![-1; w.m()], w.mu())
}

fn y_power(m: usize, d: i64) -> Monomial {
    let mut e = vec![0; m];
    e.push(d);
    Monomial::new(e)
}

/// The set `A_{k,i}`: dominant `alpha` with `alpha_j - lambda_j` in `{0,1}`,
/// `|alpha| - |lambda| = i + 1` and `alpha_k - lambda_k = 1`.
pub fn enumerate_a(lambda: &DominantWeight, k: usize, i: i64) -> Result<Vec<DominantWeight>> {
    let m = lambda.m();
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, m });
    }
    let mut out = Vec::new();
    if i < 0 {
        return Ok(out);
    }
    for mask in 0u32..(1 << m) {
        if mask & (1 << (k - 1)) == 0 || mask.count_ones() as i64 != i + 1 {
            continue;
        }
        let e = lambda.entries().iter().enumerate().map(|(j, v)| v + ((mask >> j) & 1) as i64);
        if let Ok(alpha) = DominantWeight::new(e) {
            out.push(alpha);
        }
    }
    out.sort();
    Ok(out)
}

/// `(y^mu / e_m) s_lambda(x) sum_{i=0}^m e_i(x) y^{m-i}`.
pub fn char_typical(w: &SuperWeight) -> Result<Character> {
    if !atypical_roots(w).is_empty() {
        return Err(Error::Atypical(w.to_string()));
    }
    let m = w.m();
    let mut odd = LaurentPoly::zero(m);
    for i in 0..=m {
        odd += &elementary(i as i64, m).mul_monomial(&y_power(m, (m - i) as i64));
    }
    let value = (&schur(w.lambda()) * &odd).mul_monomial(&prefactor(w));
    Ok(Character { value, weight: w.clone(), route: Route::Lemma21 })
}

/// `(y^mu / e_m) sum_{i=0}^{m-1} (sum_{alpha in A_{k,i}} s_alpha(x)) y^{m-1-i}`
/// where `eps_k - delta` is the atypical root.
pub fn char_atypical(w: &SuperWeight) -> Result<Character> {
    let k = match atypical_roots(w).as_slice() {
        [k] => *k,
        _ => return Err(Error::Typical(w.to_string())),
    };
    let m = w.m();
    let mut sum = LaurentPoly::zero(m);
    for i in 0..m as i64 {
        let ypow = y_power(m, m as i64 - 1 - i);
        for alpha in enumerate_a(w.lambda(), k, i)? {
            sum += &schur(&alpha).mul_monomial(&ypow);
        }
    }
    let value = sum.mul_monomial(&prefactor(w));
    Ok(Character { value, weight: w.clone(), route: Route::Lemma21 })
}

/// Dispatches to [`char_typical`] or [`char_atypical`].
pub fn char_special(w: &SuperWeight) -> Result<Character> {
    if atypical_roots(w).is_empty() {
        char_typical(w)
    } else {
        char_atypical(w)
    }
}

/// The composite super Schur function of `phi(w)`; requires `w` special.
pub fn char_determinant(w: &SuperWeight) -> Result<Character> {
    let value = composite_super_schur(&phi(w)?, w.m())?;
    Ok(Character { value, weight: w.clone(), route: Route::Determinant })
}

pub fn suzhang_oracle(w: &SuperWeight) -> Result<Character> {
    suzhang_with(w, SuZhangStrategy::Raw)
}

/// Expands `(1/L0) sum_w sign(w) w(e^{Lambda+rho0} prod (1 + e^{-beta}))`
/// over the odd positive roots that are not atypical for `w`.
///
/// `e^{Lambda+rho0}` has half-integral `x` exponents for even `m`. The
/// symmetric factor `(x1..xm)^{(m-1)/2}` is pulled out of the Weyl sum,
/// where it cancels the same factor in `1/L0 = (x1..xm)^{(m-1)/2} / D`;
/// what remains has integer exponents and is divided by the Vandermonde `D`.
pub fn suzhang_with(w: &SuperWeight, strategy: SuZhangStrategy) -> Result<Character> {
    let m = w.m();
    let shifted = w.to_half().add(&rho0(m));
    let d = shifted.doubled();
    let mut xs = Vec::with_capacity(m);
    for &c in &d[..m] {
        let v = c + (m as i64 - 1);
        debug_assert!(v % 2 == 0, "integral after absorbing the rho0 offset");
        xs.push(v / 2);
    }
    debug_assert!(d[m] % 2 == 0);
    let leading = LaurentPoly::monomial(Monomial::from_parts(&xs, d[m] / 2), 1);

    // e^{-(eps_i - delta)} = y / x_i
    let atypical = atypical_roots(w);
    let y = LaurentPoly::y(m);
    let mut integrand = leading;
    for i in (1..=m).filter(|i| !atypical.contains(i)) {
        let factor = &LaurentPoly::one(m) + &(&y * &LaurentPoly::x(m, i).invert_vars());
        integrand = &integrand * &factor;
    }

    let value = match strategy {
        SuZhangStrategy::Raw => {
            let mut alt = LaurentPoly::zero(m);
            for (perm, s) in signed_permutations(m) {
                let t = integrand.permute_x(&perm);
                if s > 0 {
                    alt += &t;
                } else {
                    alt -= &t;
                }
            }
            alt.exact_div(&vandermonde(m))?
        }
        SuZhangStrategy::AlternantReduce => {
            let mut acc = LaurentPoly::zero(m);
            for (mono, coef) in integrand.terms() {
                if let (s, Some(dom)) = alternant_reduce(mono.x_exponents()) {
                    let c: BigInt = coef * s;
                    acc += &schur(&dom).mul_monomial(&y_power(m, mono.y_exponent())).scale(&c);
                }
            }
            acc
        }
    };
    Ok(Character { value, weight: w.clone(), route: Route::SuZhang })
}

/// `e^sigma = y^-1 x1 .. xm`.
pub fn e_sigma(m: usize) -> Monomial {
    Monomial::from_parts(&vec![1; m], -1)
}

/// Character of any integral dominant weight through the Schur-function route:
/// reduce to the special weight `w + j sigma` and multiply by `(e^sigma)^-j`.
pub fn char_full(w: &SuperWeight) -> Result<Character> {
    char_full_route(w, Route::Lemma21)
}

/// Character of any integral dominant weight along the chosen route. The
/// Su-Zhang route applies directly; the other two go through the sigma
/// reduction.
pub fn char_full_route(w: &SuperWeight, route: Route) -> Result<Character> {
    let value = match route {
        Route::SuZhang => suzhang_oracle(w)?.value,
        Route::Lemma21 | Route::Determinant => {
            let (j, special) = reduce_to_special(w)?;
            let base = match route {
                Route::Lemma21 => char_special(&special)?,
                _ => char_determinant(&special)?,
            };
            base.value.mul_monomial(&e_sigma(w.m()).pow(-j))
        }
    };
    Ok(Character { value, weight: w.clone(), route })
}

/// Total dimension: the character evaluated at all variables equal to 1.
pub fn dimension(w: &SuperWeight) -> Result<BigInt> {
    Ok(char_full(w)?.value.eval_ones())
}

/// Three-way equality for a special weight: closed Schur formula, composite
/// super Schur determinant, and the Su-Zhang sum.
pub fn verify_theorem(w: &SuperWeight) -> Result<bool> {
    if special_kind(w).is_none() {
        return Err(Error::NotSpecial(w.to_string()));
    }
    let lemma = char_special(w)?.value;
    let det = char_determinant(w)?.value;
    if lemma != det {
        return Ok(false);
    }
    Ok(lemma == suzhang_oracle(w)?.value)
}
