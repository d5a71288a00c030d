//! Super-symmetric functions in `x1..xm` and the single odd variable `y`.

use crate::composite::{composite_matrix, composite_schur_def};
use crate::error::Result;
use crate::partitions::{CompositePartition, Partition};
use crate::ring::{LaurentPoly, PolyMatrix};
use crate::symfun::complete;

/// `h_r(x/y) = sum_k h_k(x) e_{r-k}(y)`. With one odd variable only
/// `e_0(y) = 1` and `e_1(y) = y` survive, so this is `h_r(x) + h_{r-1}(x) y`.
pub fn super_complete(r: i64, m: usize) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(m);
    }
    &complete(r, m) + &(&complete(r - 1, m) * &LaurentPoly::y(m))
}

/// `hdot_r(x/y) = h_r(1/x / 1/y)`.
pub fn super_complete_dot(r: i64, m: usize) -> LaurentPoly {
    super_complete(r, m).invert_vars()
}

/// `det(h_{p_i - i + j}(x/y))`.
pub fn super_schur(p: &Partition, m: usize) -> LaurentPoly {
    let n = p.length();
    PolyMatrix::from_fn(m, n, |r, c| {
        super_complete(p.part(r + 1) - (r as i64 + 1) + (c as i64 + 1), m)
    })
    .det()
}

/// `s_{(nu;mu)}(x/y)`: the composite block determinant with every entry
/// replaced by its super analogue.
pub fn composite_super_schur(cp: &CompositePartition, m: usize) -> Result<LaurentPoly> {
    cp.require_m_standard(m)?;
    Ok(composite_matrix(cp, m, |r| super_complete(r, m), |r| super_complete_dot(r, m)).det())
}

/// All partitions `alpha` with `p_i - alpha_i` in `{0, 1}`, paired with
/// `|p - alpha|`. Decrements that break weak monotonicity are skipped.
fn strip_removals(p: &Partition) -> Vec<(Partition, i64)> {
    let n = p.length();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let parts: Vec<i64> = (0..n).map(|i| p.parts()[i] - ((mask >> i) & 1) as i64).collect();
        if let Ok(alpha) = Partition::new(parts) {
            out.push((alpha, mask.count_ones() as i64));
        }
    }
    out
}

/// Expands `s_{(nu;mu)}(x/y)` as `sum s_{(beta;alpha)}(x) y^{a-b}` over
/// vertical-strip removals `alpha` from `mu` and `beta` from `nu`, with
/// `a = |mu - alpha|` and `b = |nu - beta|`.
pub fn expand_lemma32(cp: &CompositePartition, m: usize) -> Result<LaurentPoly> {
    cp.require_m_standard(m)?;
    let y = LaurentPoly::y(m);
    let ybar = y.invert_vars();
    let mut total = LaurentPoly::zero(m);
    for (alpha, a) in strip_removals(&cp.mu) {
        for (beta, b) in strip_removals(&cp.nu) {
            let s = composite_schur_def(&CompositePartition::new(beta, alpha.clone()), m)?;
            let d = a - b;
            let ypow = if d >= 0 { y.pow(d as u32) } else { ybar.pow((-d) as u32) };
            total += &(&s * &ypow);
        }
    }
    Ok(total)
}
