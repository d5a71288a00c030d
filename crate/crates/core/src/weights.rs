//! Weights of `gl(m|1)`: the distinguished root data, atypicality,
//! special weights and the bijection onto composite partitions, and the
//! sigma-shift reduction of an arbitrary integral dominant weight.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::partitions::{cup_m, CompositePartition, DominantWeight, Partition};

/// Integral dominant weight `(lambda_1, .., lambda_m; mu)`, i.e.
/// `sum lambda_i eps_i + mu delta_1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperWeight {
    lambda: DominantWeight,
    mu: i64,
}

impl SuperWeight {
    pub fn new(lambda: impl IntoIterator<Item = i64>, mu: i64) -> Result<Self> {
        let lambda = DominantWeight::new(lambda)?;
        if lambda.m() == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(SuperWeight { lambda, mu })
    }

    pub fn from_parts(lambda: DominantWeight, mu: i64) -> Result<Self> {
        if lambda.m() == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(SuperWeight { lambda, mu })
    }

    /// Parses `"l1,..,lm;mu"`, whitespace-insensitive, requiring exactly `m`
    /// even entries.
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (lam, mu) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"l1,..,lm;mu\", got {s:?}")))?;
        let lambda = lam
            .split(',')
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let mu = mu.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {mu:?}")))?;
        if lambda.len() != m {
            return Err(Error::LengthMismatch { expected: m, got: lambda.len() });
        }
        SuperWeight::new(lambda, mu)
    }

    pub fn m(&self) -> usize {
        self.lambda.m()
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    /// `lambda_i`, 1-based.
    pub fn entry(&self, i: usize) -> i64 {
        self.lambda.entries()[i - 1]
    }

    /// `self + j * sigma`.
    pub fn add_sigma(&self, j: i64) -> SuperWeight {
        SuperWeight { lambda: self.lambda.shift(j), mu: self.mu - j }
    }

    pub fn to_half(&self) -> HalfWeight {
        let mut doubled: Vec<i64> = self.lambda.entries().iter().map(|v| 2 * v).collect();
        doubled.push(2 * self.mu);
        HalfWeight { doubled }
    }
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.lambda.entries().iter().map(|v| v.to_string()).collect();
        write!(f, "{};{}", s.join(","), self.mu)
    }
}

/// A weight with half-integral coordinates, stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfWeight {
    doubled: Vec<i64>,
}

impl HalfWeight {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        assert!(doubled.len() >= 2, "need at least one even and the odd coordinate");
        HalfWeight { doubled }
    }

    pub fn epsilon(m: usize, i: usize) -> Self {
        let mut d = vec![0; m + 1];
        d[i - 1] = 2;
        HalfWeight { doubled: d }
    }

    pub fn delta(m: usize) -> Self {
        let mut d = vec![0; m + 1];
        d[m] = 2;
        HalfWeight { doubled: d }
    }

    pub fn m(&self) -> usize {
        self.doubled.len() - 1
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn add(&self, other: &HalfWeight) -> HalfWeight {
        assert_eq!(self.m(), other.m());
        HalfWeight { doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &HalfWeight) -> HalfWeight {
        assert_eq!(self.m(), other.m());
        HalfWeight { doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b).collect() }
    }

    /// Exact coordinates as rationals.
    pub fn coords(&self) -> Vec<Ratio<i64>> {
        self.doubled.iter().map(|&d| Ratio::new(d, 2)).collect()
    }
}

/// Half the sum of the positive even roots: `(m-1, m-3, .., 1-m; 0) / 2`.
pub fn rho0(m: usize) -> HalfWeight {
    let m = m as i64;
    let mut d: Vec<i64> = (1..=m).map(|i| m + 1 - 2 * i).collect();
    d.push(0);
    HalfWeight { doubled: d }
}

/// Half the sum of the positive odd roots: `(1, .., 1; -m) / 2`.
pub fn rho1(m: usize) -> HalfWeight {
    let mut d = vec![1; m];
    d.push(-(m as i64));
    HalfWeight { doubled: d }
}

/// `(m, .., 2, 1; -1)`, the shift used in the atypicality test.
pub fn rho(m: usize) -> HalfWeight {
    let mi = m as i64;
    let mut d: Vec<i64> = (1..=mi).map(|i| 2 * (mi + 1 - i)).collect();
    d.push(-2);
    HalfWeight { doubled: d }
}

/// The form with `(eps_i, eps_j) = delta_ij`, `(eps_i, delta) = 0`,
/// `(delta, delta) = -1`.
pub fn bilinear_form(a: &HalfWeight, b: &HalfWeight) -> Result<Ratio<i64>> {
    if a.m() != b.m() {
        return Err(Error::LengthMismatch { expected: a.m(), got: b.m() });
    }
    let m = a.m();
    let even: i64 = (0..m).map(|i| a.doubled[i] * b.doubled[i]).sum();
    let odd = a.doubled[m] * b.doubled[m];
    Ok(Ratio::new(even - odd, 4))
}

/// Indices `i` (1-based) with `lambda_i + m + 1 - i = 1 - mu`, i.e. the
/// odd roots `eps_i - delta` orthogonal to `Lambda + rho`. At most one.
pub fn atypical_roots(w: &SuperWeight) -> Vec<usize> {
    let m = w.m() as i64;
    (1..=w.m())
        .filter(|&i| w.entry(i) + m + 1 - i as i64 == 1 - w.mu())
        .collect()
}

pub fn is_typical(w: &SuperWeight) -> bool {
    atypical_roots(w).is_empty()
}

/// `Some(k)` when `w` lies in `P_k`: `mu = -k` with `0 <= k <= m` and
/// `lambda_{m-k} >= 0 >= lambda_{m-k+1}`, reading `lambda_0 = +inf` and
/// `lambda_{m+1} = -inf`.
pub fn special_kind(w: &SuperWeight) -> Option<usize> {
    let m = w.m();
    if w.mu() > 0 || -w.mu() > m as i64 {
        return None;
    }
    let k = (-w.mu()) as usize;
    let upper_ok = k == m || w.entry(m - k) >= 0;
    let lower_ok = k == 0 || w.entry(m - k + 1) <= 0;
    (upper_ok && lower_ok).then_some(k)
}

/// The bijection `P -> Q`: `mu = (lambda_1, .., lambda_{m-k})`,
/// `nu = (1 - lambda_m, .., 1 - lambda_{m-k+1})`.
pub fn phi(w: &SuperWeight) -> Result<CompositePartition> {
    let k = special_kind(w).ok_or_else(|| Error::NotSpecial(w.to_string()))?;
    let m = w.m();
    let mu = Partition::new((1..=m - k).map(|i| w.entry(i)))?;
    let nu = Partition::new((m - k + 1..=m).rev().map(|i| 1 - w.entry(i)))?;
    Ok(CompositePartition::new(nu, mu))
}

/// Inverse of [`phi`]: `(mu_1, .., mu_{m-k}, 1 - nu_k, .., 1 - nu_1; -k)`
/// with `k = l(nu)`.
pub fn phi_inv(cp: &CompositePartition, m: usize) -> Result<SuperWeight> {
    cp.require_m_standard(m)?;
    if m == 0 {
        return Err(Error::ZeroRank);
    }
    let k = cp.nu.length();
    let base = cup_m(&cp.mu, &cp.nu, m)?;
    let lambda: Vec<i64> = base
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &v)| if i >= m - k { v + 1 } else { v })
        .collect();
    SuperWeight::new(lambda, -(k as i64))
}

/// The super-determinantal weight `(1, .., 1; -1)`.
pub fn sigma(m: usize) -> SuperWeight {
    SuperWeight::new(vec![1; m], -1).expect("constant tuple is dominant")
}

/// Finds the unique `j` with `w + j * sigma` special.
///
/// The odd coordinate of `w + j sigma` is `mu - j`, which must equal `-k`
/// for some `0 <= k <= m`, so only `j` in `mu..=mu + m` can work. Every
/// candidate is tested; anything other than exactly one hit is an error.
pub fn reduce_to_special(w: &SuperWeight) -> Result<(i64, SuperWeight)> {
    let mu = w.mu();
    let hits: Vec<(i64, SuperWeight)> = (mu..=mu + w.m() as i64)
        .map(|j| (j, w.add_sigma(j)))
        .filter(|(_, s)| special_kind(s).is_some())
        .collect();
    match <[_; 1]>::try_from(hits) {
        Ok([hit]) => Ok(hit),
        Err(hits) => Err(Error::Reduction { weight: w.to_string(), hits: hits.len() }),
    }
}

/// All special weights with `|lambda_i| <= bound`, ordered
/// lexicographically by `lambda` and then by `k`.
pub fn special_weights(m: usize, bound: i64) -> Vec<SuperWeight> {
    let mut out = Vec::new();
    for lambda in DominantWeight::all_in_range(m, -bound, bound) {
        for k in 0..=m {
            let w = SuperWeight::from_parts(lambda.clone(), -(k as i64)).expect("m >= 1");
            if special_kind(&w) == Some(k) {
                out.push(w);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(l: &[i64], mu: i64) -> SuperWeight {
        SuperWeight::new(l.iter().copied(), mu).unwrap()
    }

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn half(v: &[i64]) -> HalfWeight {
        HalfWeight::from_doubled(v.to_vec())
    }

    #[test]
    fn rho_vectors() {
        assert_eq!(rho(2), half(&[4, 2, -2]));
        assert_eq!(rho0(2), half(&[1, -1, 0]));
        assert_eq!(rho1(1), half(&[1, -1]));
        assert_eq!(rho0(3), half(&[2, 0, -2, 0]));
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        // rho0 and rho1 summed directly from the positive root lists.
        for m in 1..=5 {
            let mut even = vec![0i64; m + 1];
            for i in 0..m {
                for j in i + 1..m {
                    even[i] += 1;
                    even[j] -= 1;
                }
            }
            assert_eq!(rho0(m), half(&even));
            let mut odd = vec![1i64; m];
            odd.push(-(m as i64));
            assert_eq!(rho1(m), half(&odd));
        }
    }

    #[test]
    fn form_on_basis() {
        let m = 2;
        let e1 = HalfWeight::epsilon(m, 1);
        let d = HalfWeight::delta(m);
        assert_eq!(bilinear_form(&e1, &e1).unwrap(), Ratio::from_integer(1));
        assert_eq!(bilinear_form(&e1, &d).unwrap(), Ratio::from_integer(0));
        assert_eq!(bilinear_form(&d, &d).unwrap(), Ratio::from_integer(-1));
        assert_eq!(bilinear_form(&e1, &HalfWeight::epsilon(m, 2)).unwrap(), Ratio::from_integer(0));
        assert!(bilinear_form(&e1, &HalfWeight::delta(3)).is_err());
    }

    #[test]
    fn atypicality_examples() {
        assert_eq!(atypical_roots(&sw(&[1, 0], 0)), vec![2]);
        assert!(atypical_roots(&sw(&[2], 0)).is_empty());
        for m in 1..=4 {
            assert_eq!(atypical_roots(&sw(&vec![0; m], 0)), vec![m]);
        }
        assert!(is_typical(&sw(&[2], 0)));
        assert!(!is_typical(&sw(&[1, 0], 0)));
        assert!(is_typical(&sw(&[1, 1], 0)));
    }

    #[test]
    fn atypicality_agrees_with_the_form() {
        for m in 1..=3 {
            for lambda in DominantWeight::all_in_range(m, -3, 3) {
                for mu in -4..=4 {
                    let w = SuperWeight::from_parts(lambda.clone(), mu).unwrap();
                    let shifted = w.to_half().add(&rho(m));
                    let by_form: Vec<usize> = (1..=m)
                        .filter(|&i| {
                            let beta = HalfWeight::epsilon(m, i).sub(&HalfWeight::delta(m));
                            bilinear_form(&shifted, &beta).unwrap() == Ratio::from_integer(0)
                        })
                        .collect();
                    assert_eq!(atypical_roots(&w), by_form, "{w}");
                    assert!(by_form.len() <= 1);
                }
            }
        }
    }

    #[test]
    fn special_kind_examples() {
        assert_eq!(special_kind(&sw(&[1, 0], 0)), Some(0));
        assert_eq!(special_kind(&sw(&[2, 0], -1)), Some(1));
        assert_eq!(special_kind(&sw(&[0, -2], 3)), None);
        assert_eq!(special_kind(&sw(&[0, 0], -2)), Some(2));
        assert_eq!(special_kind(&sw(&[1, 0], -2)), None);
        assert_eq!(special_kind(&sw(&[0, -1], 0)), None);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&sw(&[2, 0], -1)).unwrap(), CompositePartition::new(p(&[1]), p(&[2])));
        assert_eq!(phi(&sw(&[1, 0], 0)).unwrap(), CompositePartition::new(p(&[]), p(&[1])));
        assert_eq!(phi(&sw(&[0, 0, -1], -2)).unwrap(), CompositePartition::new(p(&[2, 1]), p(&[])));
        assert!(matches!(phi(&sw(&[0, -2], 3)), Err(Error::NotSpecial(_))));
    }

    #[test]
    fn phi_inv_examples() {
        let cp = |nu: &[i64], mu: &[i64]| CompositePartition::new(p(nu), p(mu));
        assert_eq!(phi_inv(&cp(&[2, 1], &[]), 3).unwrap(), sw(&[0, 0, -1], -2));
        assert_eq!(phi_inv(&cp(&[1], &[2]), 2).unwrap(), sw(&[2, 0], -1));
        assert_eq!(phi_inv(&cp(&[], &[]), 2).unwrap(), sw(&[0, 0], 0));
        assert!(matches!(phi_inv(&cp(&[1, 1, 1], &[1]), 2), Err(Error::NotMStandard { .. })));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(1), sw(&[1], -1));
        assert_eq!(sigma(2), sw(&[1, 1], -1));
        assert_eq!(sigma(3), sw(&[1, 1, 1], -1));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_to_special(&sw(&[0, -2], 3)).unwrap(), (3, sw(&[3, 1], 0)));
        assert_eq!(reduce_to_special(&sw(&[1, 0], 0)).unwrap(), (0, sw(&[1, 0], 0)));
        assert_eq!(reduce_to_special(&sw(&[-1, -1], 0)).unwrap(), (1, sw(&[0, 0], -1)));
        assert_eq!(reduce_to_special(&sw(&[2, 1], -2)).unwrap(), (-1, sw(&[1, 0], -1)));
    }

    #[test]
    fn reduce_agrees_with_rank_one_closed_form() {
        // For m = 1 the weight (l; -u) reduces to (l - u; 0) when l >= u
        // and to (l - u + 1; -1) otherwise.
        for l in -6..=6 {
            for u in -6..=6 {
                let (_, s) = reduce_to_special(&sw(&[l], -u)).unwrap();
                let expected = if l >= u { sw(&[l - u], 0) } else { sw(&[l - u + 1], -1) };
                assert_eq!(s, expected);
            }
        }
    }

    #[test]
    fn phi_is_a_bijection_onto_standard_composites() {
        for m in 1..=4 {
            let bound = 4;
            for w in special_weights(m, bound) {
                let cp = phi(&w).unwrap();
                let k = special_kind(&w).unwrap();
                assert_eq!(cp.nu.length(), k);
                assert!(cp.mu.length() <= m - k);
                assert_eq!(phi_inv(&cp, m).unwrap(), w);
                // typical exactly when the composite fills all m slots
                assert_eq!(is_typical(&w), cp.nu.length() + cp.mu.length() == m, "{w}");
            }
            for cp in CompositePartition::all_standard(m, 3) {
                let w = phi_inv(&cp, m).unwrap();
                assert!(special_kind(&w).is_some());
                assert_eq!(phi(&w).unwrap(), cp);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let w = SuperWeight::parse(" 1, 0 ; -2", 2).unwrap();
        assert_eq!(w, sw(&[1, 0], -2));
        assert_eq!(w.to_string(), "1,0;-2");
        assert!(matches!(SuperWeight::parse("0,1;0", 2), Err(Error::NotDominant(_))));
        assert!(matches!(SuperWeight::parse("0;0", 2), Err(Error::LengthMismatch { .. })));
        assert!(matches!(SuperWeight::parse("0,0", 2), Err(Error::Parse(_))));
        assert!(matches!(SuperWeight::parse("x,0;0", 2), Err(Error::Parse(_))));
    }
}
