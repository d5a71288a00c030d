//! Partitions, dominant weights of `gl(m)`, and composite partitions.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing tuple of positive integers. Trailing zeros are
/// stripped on construction, so `(1, 0)` and `(1)` are the same partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut parts: Vec<i64> = parts.into_iter().collect();
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NotPartition(format!("negative part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parses the CLI syntax: comma-separated parts, the empty string for the
    /// empty partition. Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Number of positive parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn contents(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based), zero past the length.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Pads to a dominant weight of length `m`.
    pub fn to_weight(&self, m: usize) -> Result<DominantWeight> {
        if self.length() > m {
            return Err(Error::TooLong { len: self.length(), m });
        }
        let mut e = self.0.clone();
        e.resize(m, 0);
        Ok(DominantWeight(e))
    }

    /// Comma-separated parts, matching [`Partition::parse`].
    pub fn to_cli_string(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }

    /// All partitions with at most `max_len` parts, each at most `max_part`,
    /// in lexicographic order of their parts.
    pub fn all_in_box(max_len: usize, max_part: i64) -> Vec<Partition> {
        fn rec(prefix: &mut Vec<i64>, max_len: usize, cap: i64, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            if prefix.len() == max_len {
                return;
            }
            for p in 1..=cap {
                prefix.push(p);
                rec(prefix, max_len, p, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), max_len, max_part, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_cli_string())
    }
}

/// Weakly decreasing integer tuple of fixed length `m`; negative entries
/// are allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: impl IntoIterator<Item = i64>) -> Result<Self> {
        let entries: Vec<i64> = entries.into_iter().collect();
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(DominantWeight(entries))
    }

    pub fn zero(m: usize) -> Self {
        DominantWeight(vec![0; m])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn contents(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &DominantWeight) -> Result<DominantWeight> {
        if self.m() != other.m() {
            return Err(Error::LengthMismatch { expected: self.m(), got: other.m() });
        }
        Ok(DominantWeight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// Adds `t` to every entry.
    pub fn shift(&self, t: i64) -> DominantWeight {
        DominantWeight(self.0.iter().map(|a| a + t).collect())
    }

    /// `Some` when every entry is non-negative.
    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.0.iter().copied()).ok()
    }

    /// All dominant weights of length `m` with entries in `lo..=hi`, in
    /// lexicographic order.
    pub fn all_in_range(m: usize, lo: i64, hi: i64) -> Vec<DominantWeight> {
        fn rec(prefix: &mut Vec<i64>, m: usize, lo: i64, cap: i64, out: &mut Vec<DominantWeight>) {
            if prefix.len() == m {
                out.push(DominantWeight(prefix.clone()));
                return;
            }
            for v in lo..=cap {
                prefix.push(v);
                rec(prefix, m, lo, v, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), m, lo, hi, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A pair `(nu; mu)` of partitions; `nu` carries the contravariant part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositePartition {
    pub nu: Partition,
    pub mu: Partition,
}

impl CompositePartition {
    pub fn new(nu: Partition, mu: Partition) -> Self {
        CompositePartition { nu, mu }
    }

    pub fn is_m_standard(&self, m: usize) -> bool {
        self.nu.length() + self.mu.length() <= m
    }

    pub(crate) fn require_m_standard(&self, m: usize) -> Result<()> {
        if !self.is_m_standard(m) {
            return Err(Error::NotMStandard { m, total: self.nu.length() + self.mu.length() });
        }
        Ok(())
    }

    /// Swaps the roles of the two partitions.
    pub fn dual(&self) -> CompositePartition {
        CompositePartition { nu: self.mu.clone(), mu: self.nu.clone() }
    }

    /// All `m`-standard composite partitions with parts at most `max_part`.
    pub fn all_standard(m: usize, max_part: i64) -> Vec<CompositePartition> {
        let parts = Partition::all_in_box(m, max_part);
        let mut out = Vec::new();
        for nu in &parts {
            for mu in &parts {
                let cp = CompositePartition::new(nu.clone(), mu.clone());
                if cp.is_m_standard(m) {
                    out.push(cp);
                }
            }
        }
        out
    }
}

impl fmt::Display for CompositePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.nu, self.mu)
    }
}

/// The opposite weight `(0, .., 0, -p_l, .., -p_1)` of length `m`.
pub fn opposite(p: &Partition, m: usize) -> Result<DominantWeight> {
    cup_m(&Partition::empty(), p, m)
}

/// The `m`-composition `(mu_1, .., mu_p, 0, .., 0, -nu_q, .., -nu_1)`.
pub fn cup_m(mu: &Partition, nu: &Partition, m: usize) -> Result<DominantWeight> {
    let total = mu.length() + nu.length();
    if total > m {
        return Err(Error::NotMStandard { m, total });
    }
    let mut e = Vec::with_capacity(m);
    e.extend_from_slice(mu.parts());
    e.resize(m - nu.length(), 0);
    e.extend(nu.parts().iter().rev().map(|p| -p));
    Ok(DominantWeight(e))
}
