use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

/// JSON form: `{"m": m, "terms": [{"exp": [a1, .., am, b], "coef": "<decimal>"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub m: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub coef: String,
}

fn write_monomial(out: &mut String, mono: &Monomial) {
    let m = mono.m();
    let mut first = true;
    for (i, &e) in mono.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        if i < m {
            write!(out, "x{}", i + 1).unwrap();
        } else {
            out.push('y');
        }
        if e != 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

impl LaurentPoly {
    /// Text rendering, e.g. `x1^2*x2 - 2*x1*y^-1 + 1`. The zero
    /// polynomial renders as `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (mono, coef)) in self.terms().enumerate() {
            let neg = coef.is_negative();
            match (idx, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = coef.abs();
            if mono.is_one() {
                write!(out, "{abs}").unwrap();
            } else {
                if !abs.is_one() {
                    write!(out, "{abs}*").unwrap();
                }
                write_monomial(&mut out, mono);
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            m: self.m,
            terms: self
                .terms()
                .map(|(k, c)| TermJson { exp: k.exponents().to_vec(), coef: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero(json.m);
        for t in &json.terms {
            if t.exp.len() != json.m + 1 {
                return Err(Error::LengthMismatch { expected: json.m + 1, got: t.exp.len() });
            }
            let c: BigInt = t
                .coef
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coef)))?;
            if c.is_zero() {
                return Err(Error::Parse("zero coefficient in term list".into()));
            }
            p.add_term(Monomial::new(t.exp.iter().copied()), c);
        }
        Ok(p)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<LaurentPoly> {
        let json: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&json)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tests::arb_poly;
    use proptest::prelude::*;

    #[test]
    fn text_examples() {
        let x1 = LaurentPoly::x(2, 1);
        let x2 = LaurentPoly::x(2, 2);
        let y = LaurentPoly::y(2);
        assert_eq!((&(&x1 + &x2) + &y).to_text(), "x1 + x2 + y");
        assert_eq!(LaurentPoly::zero(2).to_text(), "0");
        assert_eq!(LaurentPoly::one(2).to_text(), "1");
        let p = &(&x1.pow(2) * &x2) - &(&LaurentPoly::constant(2, 2) * &(&x1 * &y.invert_vars()));
        assert_eq!(p.to_text(), "x1^2*x2 - 2*x1*y^-1");
        let q = &LaurentPoly::constant(2, -3) + &x2.invert_vars();
        assert_eq!(q.to_text(), "-3 + x2^-1");
    }

    #[test]
    fn json_shape() {
        let p = &LaurentPoly::x(1, 1) + &LaurentPoly::constant(1, -2);
        assert_eq!(
            p.to_json_string(),
            r#"{"m":1,"terms":[{"exp":[1,0],"coef":"1"},{"exp":[0,0],"coef":"-2"}]}"#
        );
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(LaurentPoly::from_json_str(r#"{"m":1,"terms":[{"exp":[1],"coef":"1"}]}"#).is_err());
        assert!(LaurentPoly::from_json_str(r#"{"m":1,"terms":[{"exp":[1,0],"coef":"0"}]}"#).is_err());
        assert!(LaurentPoly::from_json_str(r#"{"m":1,"terms":[{"exp":[1,0],"coef":"z"}]}"#).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(p in arb_poly(3)) {
            let back = LaurentPoly::from_json_str(&p.to_json_string()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
