use std::collections::HashMap;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Above this size the bitmask-memoized Laplace expansion gets expensive
/// (`n * 2^n` products), so [`PolyMatrix::det`] switches to Bareiss.
const LAPLACE_MAX: usize = 12;

/// Square matrix of Laurent polynomials sharing one ambient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    m: usize,
    rows: Vec<Vec<LaurentPoly>>,
}

impl PolyMatrix {
    pub fn new(m: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
            }
            if let Some(bad) = row.iter().find(|p| p.m() != m) {
                return Err(Error::AmbientMismatch { left: m, right: bad.m() });
            }
        }
        Ok(PolyMatrix { m, rows })
    }

    /// Builds the `n x n` matrix whose `(r, c)` entry (0-based) is `f(r, c)`.
    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let rows = (0..n).map(|r| (0..n).map(|c| f(r, c)).collect()).collect();
        PolyMatrix::new(m, rows).expect("entries built in the wrong ambient ring")
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.rows[r][c]
    }

    /// Exact determinant; the empty matrix has determinant 1.
    pub fn det(&self) -> LaurentPoly {
        if self.size() <= LAPLACE_MAX {
            self.det_laplace()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along rows, memoized on the set of columns still
    /// available. `minors[mask]` is the determinant of the last
    /// `popcount(mask)` rows restricted to the columns in `mask`.
    pub fn det_laplace(&self) -> LaurentPoly {
        let n = self.size();
        if n == 0 {
            return LaurentPoly::one(self.m);
        }
        assert!(n <= 20, "Laplace expansion on a {n}x{n} matrix");
        let mut minors: HashMap<u32, LaurentPoly> = HashMap::new();
        minors.insert(0, LaurentPoly::one(self.m));

        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for mask in 1u32..(1 << n) {
            by_size[mask.count_ones() as usize].push(mask);
        }
        for (size, masks) in by_size.iter().enumerate().skip(1) {
            let row = n - size;
            for &mask in masks {
                let mut acc = LaurentPoly::zero(self.m);
                let mut pos = 0;
                for c in 0..n {
                    if mask & (1 << c) == 0 {
                        continue;
                    }
                    let a = &self.rows[row][c];
                    if !a.is_zero() {
                        let minor = &minors[&(mask & !(1 << c))];
                        if !minor.is_zero() {
                            let t = a * minor;
                            if pos % 2 == 0 {
                                acc += &t;
                            } else {
                                acc -= &t;
                            }
                        }
                    }
                    pos += 1;
                }
                minors.insert(mask, acc);
            }
        }
        minors.remove(&((1u32 << n) - 1)).unwrap()
    }

    /// Fraction-free (Bareiss) elimination. Every division is exact over
    /// the integral domain, so [`LaurentPoly::exact_div`] never fails here.
    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.size();
        if n == 0 {
            return LaurentPoly::one(self.m);
        }
        let mut a = self.rows.clone();
        let mut sign_flip = false;
        let mut prev = LaurentPoly::one(self.m);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return LaurentPoly::zero(self.m),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss step is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            -&d
        } else {
            d
        }
    }
}
