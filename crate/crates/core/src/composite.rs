//! Schur functions indexed by `m`-standard composite partitions.

use crate::error::Result;
use crate::partitions::{cup_m, CompositePartition};
use crate::ring::{LaurentPoly, PolyMatrix};
use crate::symfun::{complete, schur_bialternant};

/// The `(q+p) x (q+p)` block matrix shared by the classical and super
/// composite determinants, with `q = l(nu)` and `p = l(mu)`.
///
/// Rows `1..=q` carry `k = q - r + 1`, rows `q+1..=q+p` carry `i = r - q`;
/// columns `1..=q` carry `l = q - c + 1`, columns `q+1..=q+p` carry
/// `j = c - q`. The blocks are
///
/// ```text
/// | hdot(nu_l + k - l)      h(mu_j - k - j + 1) |
/// | hdot(nu_l - i - l + 1)  h(mu_j + i - j)     |
/// ```
pub(crate) fn composite_matrix(
    cp: &CompositePartition,
    m: usize,
    h: impl Fn(i64) -> LaurentPoly,
    hdot: impl Fn(i64) -> LaurentPoly,
) -> PolyMatrix {
    let q = cp.nu.length();
    let p = cp.mu.length();
    let nu = |l: i64| cp.nu.part(l as usize);
    let mu = |j: i64| cp.mu.part(j as usize);
    let qi = q as i64;
    PolyMatrix::from_fn(m, q + p, |r, c| {
        let (r, c) = (r as i64 + 1, c as i64 + 1);
        match (r <= qi, c <= qi) {
            (true, true) => {
                let (k, l) = (qi - r + 1, qi - c + 1);
                hdot(nu(l) + k - l)
            }
            (true, false) => {
                let (k, j) = (qi - r + 1, c - qi);
                h(mu(j) - k - j + 1)
            }
            (false, true) => {
                let (i, l) = (r - qi, qi - c + 1);
                hdot(nu(l) - i - l + 1)
            }
            (false, false) => {
                let (i, j) = (r - qi, c - qi);
                h(mu(j) + i - j)
            }
        }
    })
}

/// `s_{(nu;mu)}(x)` by definition: the Schur function of `mu cup_m nu-bar`.
pub fn composite_schur_def(cp: &CompositePartition, m: usize) -> Result<LaurentPoly> {
    cp.require_m_standard(m)?;
    schur_bialternant(&cup_m(&cp.mu, &cp.nu, m)?, m)
}

/// `s_{(nu;mu)}(x)` as the block determinant in `h` and `hdot`, where
/// `hdot_r(x) = h_r(1/x)`.
pub fn composite_schur_det(cp: &CompositePartition, m: usize) -> Result<LaurentPoly> {
    cp.require_m_standard(m)?;
    Ok(composite_matrix(cp, m, |r| complete(r, m), |r| complete(r, m).invert_vars()).det())
}
