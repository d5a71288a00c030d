//! Classical symmetric functions of `x1..xm` as [`LaurentPoly`] values.
//!
//! Schur functions come in three flavours that are checked against each
//! other in the tests: the Jacobi-Trudi determinant ([`schur_jacobi_trudi`]),
//! the bialternant quotient ([`schur_bialternant`], plus the direct Laurent
//! variant [`schur_bialternant_laurent`]), and the memoized fast path
//! [`schur`] used by the character formulas.

use std::collections::{BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partitions::{DominantWeight, Partition};
use crate::perm::{sign, signed_permutations};
use crate::ring::{LaurentPoly, Monomial, PolyMatrix};

type Cache = RwLock<HashMap<(usize, i64), LaurentPoly>>;

fn cached(cache: &'static OnceLock<Cache>, key: (usize, i64), f: impl FnOnce() -> LaurentPoly) -> LaurentPoly {
    let cache = cache.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&key) {
        return p.clone();
    }
    let p = f();
    cache.write().unwrap().entry(key).or_insert(p).clone()
}

/// The staircase `(m-1, .., 1, 0)`.
pub fn staircase(m: usize) -> Vec<i64> {
    (0..m as i64).rev().collect()
}

/// `e_m = x1 * .. * xm` raised to `t`, as a monomial.
pub fn e_top_power(m: usize, t: i64) -> Monomial {
    Monomial::from_parts(&vec![t; m], 0)
}

/// `e_i(x1..xm)`; zero outside `0..=m`.
pub fn elementary(i: i64, m: usize) -> LaurentPoly {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    if i < 0 || i > m as i64 {
        return LaurentPoly::zero(m);
    }
    cached(&CACHE, (m, i), || subset_sum(m, i as usize, None))
}

/// `e_i` of the `m - 1` variables other than `x_k` (1-based).
pub fn elementary_omit(i: i64, m: usize, k: usize) -> Result<LaurentPoly> {
    if k == 0 || k > m {
        return Err(Error::IndexOutOfRange { index: k, m });
    }
    if i < 0 || i > m as i64 - 1 {
        return Ok(LaurentPoly::zero(m));
    }
    Ok(subset_sum(m, i as usize, Some(k - 1)))
}

fn subset_sum(m: usize, size: usize, skip: Option<usize>) -> LaurentPoly {
    let mut p = LaurentPoly::zero(m);
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != size || skip.is_some_and(|s| mask & (1 << s) != 0) {
            continue;
        }
        let exps: Vec<i64> = (0..m).map(|b| ((mask >> b) & 1) as i64).collect();
        p.add_term(Monomial::from_parts(&exps, 0), 1.into());
    }
    p
}

/// `h_r(x1..xm)`, the sum of all degree-`r` monomials; zero for `r < 0`.
pub fn complete(r: i64, m: usize) -> LaurentPoly {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    if r < 0 {
        return LaurentPoly::zero(m);
    }
    cached(&CACHE, (m, r), || {
        let mut p = LaurentPoly::zero(m);
        let mut exps = vec![0i64; m];
        compositions(&mut exps, 0, r, &mut |e| p.add_term(Monomial::from_parts(e, 0), 1.into()));
        p
    })
}

fn compositions(exps: &mut [i64], pos: usize, left: i64, emit: &mut impl FnMut(&[i64])) {
    if pos + 1 >= exps.len() {
        if let Some(last) = exps.last_mut() {
            *last = left;
            emit(exps);
        } else if left == 0 {
            emit(exps);
        }
        return;
    }
    for v in (0..=left).rev() {
        exps[pos] = v;
        compositions(exps, pos + 1, left - v, emit);
    }
    exps[pos] = 0;
}

/// `a_alpha = sum_w sign(w) w(x^alpha)`.
pub fn alternant(alpha: &[i64], m: usize) -> Result<LaurentPoly> {
    if alpha.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: alpha.len() });
    }
    let base = Monomial::from_parts(alpha, 0);
    let mut p = LaurentPoly::zero(m);
    for (perm, s) in signed_permutations(m) {
        p.add_term(base.permute_x(&perm), s.into());
    }
    Ok(p)
}

/// The Vandermonde `prod_{i<j} (x_i - x_j)`, equal to `a_delta`.
pub fn vandermonde(m: usize) -> LaurentPoly {
    let mut p = LaurentPoly::one(m);
    for i in 1..=m {
        for j in i + 1..=m {
            p = &p * &(&LaurentPoly::x(m, i) - &LaurentPoly::x(m, j));
        }
    }
    p
}

/// Rewrites `a_beta` as `sign * a_{w + delta}` with `w` dominant; `(0, None)`
/// when `beta` has a repeated entry and the alternant vanishes.
pub fn alternant_reduce(beta: &[i64]) -> (i32, Option<DominantWeight>) {
    let m = beta.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| beta[b].cmp(&beta[a]));
    let sorted: Vec<i64> = order.iter().map(|&i| beta[i]).collect();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return (0, None);
    }
    let w: Vec<i64> = sorted.iter().zip(staircase(m)).map(|(b, d)| b - d).collect();
    (sign(&order), Some(DominantWeight::new(w).expect("strictly decreasing minus staircase")))
}

fn require_len(w: &DominantWeight, m: usize) -> Result<()> {
    if w.m() != m {
        return Err(Error::LengthMismatch { expected: m, got: w.m() });
    }
    Ok(())
}

/// `a_{w+delta} / a_delta` for a dominant weight `w`. Negative entries are
/// handled by the shift identity `s_w = e_m^t s_{w - (t^m)}`, so the
/// alternant division always happens in the polynomial subring.
pub fn schur_bialternant(w: &DominantWeight, m: usize) -> Result<LaurentPoly> {
    require_len(w, m)?;
    if m == 0 {
        return Ok(LaurentPoly::one(0));
    }
    let t = w.entries().last().copied().unwrap().min(0);
    let shifted = w.shift(-t);
    let alpha: Vec<i64> = shifted.entries().iter().zip(staircase(m)).map(|(a, d)| a + d).collect();
    let s = alternant(&alpha, m)?.exact_div(&vandermonde(m))?;
    Ok(s.mul_monomial(&e_top_power(m, t)))
}

/// `a_{w+delta} / a_delta` computed directly with Laurent exponents.
pub fn schur_bialternant_laurent(w: &DominantWeight, m: usize) -> Result<LaurentPoly> {
    require_len(w, m)?;
    let alpha: Vec<i64> = w.entries().iter().zip(staircase(m)).map(|(a, d)| a + d).collect();
    alternant(&alpha, m)?.exact_div(&vandermonde(m))
}

/// `det(h_{p_i - i + j})` over `1 <= i, j <= l(p)`.
pub fn schur_jacobi_trudi(p: &Partition, m: usize) -> LaurentPoly {
    let n = p.length();
    PolyMatrix::from_fn(m, n, |r, c| complete(p.part(r + 1) - (r as i64 + 1) + (c as i64 + 1), m))
        .det()
}

/// Schur function of a dominant weight, via Jacobi-Trudi on the shifted
/// partition. Memoized per weight.
pub fn schur(w: &DominantWeight) -> LaurentPoly {
    static CACHE: OnceLock<RwLock<HashMap<DominantWeight, LaurentPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(w) {
        return p.clone();
    }
    let m = w.m();
    let t = w.entries().last().copied().unwrap_or(0).min(0);
    let part = w.shift(-t).to_partition().expect("shifted weight is non-negative");
    let s = schur_jacobi_trudi(&part, m).mul_monomial(&e_top_power(m, t));
    cache.write().unwrap().entry(w.clone()).or_insert(s).clone()
}

/// Partitions obtained from `p` by adding a vertical `i`-strip, keeping at
/// most `m` rows.
pub fn pieri_vertical(p: &Partition, i: usize, m: usize) -> Vec<Partition> {
    let base = match p.to_weight(m) {
        Ok(w) => w,
        Err(_) => return Vec::new(),
    };
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != i {
            continue;
        }
        let e: Vec<i64> =
            base.entries().iter().enumerate().map(|(j, v)| v + ((mask >> j) & 1) as i64).collect();
        if let Ok(q) = Partition::new(e) {
            out.insert(q);
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(m: usize, i: usize) -> LaurentPoly {
        LaurentPoly::x(m, i)
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn w(e: &[i64]) -> DominantWeight {
        DominantWeight::new(e.iter().copied()).unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(1, 2), &x(2, 1) + &x(2, 2));
        assert!(elementary(0, 3).is_one());
        assert!(elementary(3, 2).is_zero());
        assert!(elementary(-1, 2).is_zero());
    }

    #[test]
    fn complete_examples() {
        let (a, b) = (x(2, 1), x(2, 2));
        assert_eq!(complete(2, 2), &(&a.pow(2) + &(&a * &b)) + &b.pow(2));
        assert!(complete(-1, 2).is_zero());
        assert_eq!(complete(3, 1), x(1, 1).pow(3));
        assert!(complete(0, 4).is_one());
    }

    #[test]
    fn omitted_elementary_examples() {
        assert_eq!(elementary_omit(1, 2, 1).unwrap(), x(2, 2));
        assert!(elementary_omit(0, 3, 2).unwrap().is_one());
        assert_eq!(elementary_omit(2, 3, 1).unwrap(), &x(3, 2) * &x(3, 3));
        assert!(elementary_omit(1, 2, 3).is_err());
    }

    #[test]
    fn omitted_elementary_generating_function() {
        // (x_k + y) * sum_i e_i^(k) y^(m-1-i) = prod_i (x_i + y)
        for m in 1..=4 {
            let y = LaurentPoly::y(m);
            let full = (1..=m).fold(LaurentPoly::one(m), |acc, i| &acc * &(&x(m, i) + &y));
            for k in 1..=m {
                let mut partial = LaurentPoly::zero(m);
                for i in 0..m as i64 {
                    partial += &(&elementary_omit(i, m, k).unwrap() * &y.pow((m as i64 - 1 - i) as u32));
                }
                assert_eq!(&(&x(m, k) + &y) * &partial, full);
            }
        }
    }

    #[test]
    fn alternant_examples() {
        assert_eq!(alternant(&[1, 0], 2).unwrap(), &x(2, 1) - &x(2, 2));
        assert_eq!(alternant(&[2, 0], 2).unwrap(), &x(2, 1).pow(2) - &x(2, 2).pow(2));
        assert!(alternant(&[1, 1], 2).unwrap().is_zero());
        assert_eq!(alternant(&staircase(3), 3).unwrap(), vandermonde(3));
    }

    #[test]
    fn bialternant_examples() {
        let (a, b) = (x(2, 1), x(2, 2));
        assert_eq!(schur_bialternant(&w(&[1, 0]), 2).unwrap(), &a + &b);
        let s21 = &(&a.pow(2) * &b) + &(&a * &b.pow(2));
        assert_eq!(schur_bialternant(&w(&[2, 1]), 2).unwrap(), s21);
        assert_eq!(schur_jacobi_trudi(&p(&[2, 1]), 2), s21);
        let inv = &a.invert_vars() + &b.invert_vars();
        assert_eq!(schur_bialternant(&w(&[0, -1]), 2).unwrap(), inv);
        assert_eq!(schur_bialternant_laurent(&w(&[0, -1]), 2).unwrap(), inv);
        assert_eq!(schur(&w(&[0, -1])), inv);
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(schur_jacobi_trudi(&p(&[2]), 1), x(1, 1).pow(2));
        assert_eq!(schur_jacobi_trudi(&p(&[1, 1]), 2), &x(2, 1) * &x(2, 2));
        assert!(schur_jacobi_trudi(&Partition::empty(), 3).is_one());
        // more rows than variables
        assert!(schur_jacobi_trudi(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn alternant_reduce_examples() {
        assert_eq!(alternant_reduce(&[3, 1]), (1, Some(w(&[2, 1]))));
        assert_eq!(alternant_reduce(&[1, 3]), (-1, Some(w(&[2, 1]))));
        assert_eq!(alternant_reduce(&[2, 2]), (0, None));
        assert_eq!(alternant_reduce(&[0, 2, -1]), (-1, Some(w(&[0, -1, -1]))));
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_vertical(&p(&[1]), 1, 2), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(pieri_vertical(&Partition::empty(), 0, 2), vec![Partition::empty()]);
        assert_eq!(pieri_vertical(&p(&[1, 1]), 2, 2), vec![p(&[2, 2])]);
        // polynomial identities behind the examples
        let s = |q: &[i64]| schur_jacobi_trudi(&p(q), 2);
        assert_eq!(&s(&[1]) * &elementary(1, 2), &s(&[2]) + &s(&[1, 1]));
        assert_eq!(&s(&[1, 1]) * &elementary(2, 2), s(&[2, 2]));
    }
}
