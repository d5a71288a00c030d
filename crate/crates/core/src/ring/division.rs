use num_integer::Integer;
use num_traits::Zero;

use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

impl LaurentPoly {
    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are first shifted by a monomial so that they become
    /// ordinary polynomials with no monomial factor on the divisor; then
    /// ordinary multivariate division under descending lex order runs
    /// against the single divisor. Any remainder is reported as
    /// [`Error::InexactDivision`].
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ambient(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.m));
        }

        let div_shift = divisor.min_exponents().unwrap();
        let num_shift = self.min_exponents().unwrap();
        let divisor = divisor.mul_monomial(&div_shift.inv());
        let mut rem = self.mul_monomial(&num_shift.inv());

        let (lead_mono, lead_coef) = {
            let (k, c) = divisor.leading_term().unwrap();
            (k.clone(), c.clone())
        };

        let mut quot = LaurentPoly::zero(self.m);
        while let Some((mono, coef)) = rem.leading_term() {
            // Under lex order every later leading term is smaller, so a
            // leading term the divisor cannot reach stays in the remainder.
            if !mono.dominates(&lead_mono) {
                return Err(Error::InexactDivision);
            }
            let (q, r) = coef.div_rem(&lead_coef);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let t = mono.div(&lead_mono);
            for (k, c) in divisor.terms.iter() {
                rem.add_term(k.mul(&t), -(c * &q));
            }
            quot.add_term(t, q);
        }

        Ok(quot.mul_monomial(&num_shift.div(&div_shift)))
    }

    /// Divides by a single monomial with unit coefficient.
    pub fn div_monomial(&self, mono: &Monomial) -> LaurentPoly {
        self.mul_monomial(&mono.inv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tests::arb_poly;
    use proptest::prelude::*;

    fn x(i: usize) -> LaurentPoly {
        LaurentPoly::x(2, i)
    }

    #[test]
    fn difference_of_squares_divides() {
        let p = &x(1).pow(2) - &x(2).pow(2);
        let q = &x(1) - &x(2);
        assert_eq!(p.exact_div(&q).unwrap(), &x(1) + &x(2));
    }

    #[test]
    fn zero_numerator() {
        let q = &x(1) - &x(2);
        assert!(LaurentPoly::zero(2).exact_div(&q).unwrap().is_zero());
    }

    #[test]
    fn monomial_divisor_is_termwise() {
        let p = &x(1) + &x(2);
        let q = &x(1) * &x(2);
        let expected = &x(1).invert_vars() + &x(2).invert_vars();
        assert_eq!(p.exact_div(&q).unwrap(), expected);
    }

    #[test]
    fn remainder_is_reported() {
        let p = &x(1) + &LaurentPoly::one(2);
        let q = &x(1) - &x(2);
        assert_eq!(p.exact_div(&q), Err(Error::InexactDivision));
        let two = LaurentPoly::constant(2, 2);
        assert_eq!(x(1).exact_div(&two), Err(Error::InexactDivision));
        assert_eq!(p.exact_div(&LaurentPoly::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn laurent_operands() {
        // (x1^-1 - x2^-1) = (x2 - x1)/(x1 x2)
        let p = &x(1).invert_vars() - &x(2).invert_vars();
        let q = &x(2) - &x(1);
        assert_eq!(p.exact_div(&q).unwrap(), (&x(1) * &x(2)).invert_vars());
    }

    proptest! {
        #[test]
        fn div_inverts_mul(p in arb_poly(2), q in arb_poly(2)) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
        }
    }
}
