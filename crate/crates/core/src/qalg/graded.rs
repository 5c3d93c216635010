//! Scalars `q^r · f` with a rational exponent offset `r`.

use super::format::{self, Term};
use super::int::Int;
use super::laurent::Laurent;
use super::ratfunc::RatFunc;
use crate::error::Error;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `q^offset · body`; the offset is reduced into `[0, 1/2)` by moving whole
/// powers of `v = q^{1/2}` into the body.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradedScalar {
    offset: Rational64,
    body: RatFunc,
}

impl Default for GradedScalar {
    fn default() -> Self {
        GradedScalar::zero()
    }
}

impl GradedScalar {
    pub fn zero() -> GradedScalar {
        GradedScalar { offset: Rational64::zero(), body: RatFunc::zero() }
    }

    pub fn one() -> GradedScalar {
        GradedScalar::from(RatFunc::one())
    }

    pub fn new(offset: Rational64, body: RatFunc) -> GradedScalar {
        if body.is_zero() {
            return GradedScalar::zero();
        }
        // offset = k/2 + r with r in [0, 1/2)
        let twice = offset * Rational64::from_integer(2);
        let k = twice.floor().to_integer();
        let r = offset - Rational64::new(k, 2);
        GradedScalar { offset: r, body: body.shift(k) }
    }

    /// `q^{num/den}`.
    pub fn q_frac(num: i64, den: i64) -> GradedScalar {
        GradedScalar::new(Rational64::new(num, den), RatFunc::one())
    }

    pub fn offset(&self) -> Rational64 {
        self.offset
    }

    pub fn body(&self) -> &RatFunc {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn checked_add(&self, rhs: &GradedScalar) -> Result<GradedScalar, Error> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.offset != rhs.offset {
            return Err(Error::IncommensurableOffsets(self.offset.to_string(), rhs.offset.to_string()));
        }
        Ok(GradedScalar::new(self.offset, &self.body + &rhs.body))
    }

    pub fn inv(&self) -> GradedScalar {
        GradedScalar::new(-self.offset, self.body.inv())
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> GradedScalar {
        GradedScalar::new(-self.offset, self.body.bar())
    }

    pub fn pow(&self, e: i32) -> GradedScalar {
        GradedScalar::new(self.offset * Rational64::from_integer(e as i64), self.body.pow(e))
    }

    /// Strip an overall sign so that the leading coefficient is positive.
    pub fn sign_stripped(&self) -> GradedScalar {
        if self.is_zero() {
            return self.clone();
        }
        if self.body.num().leading().signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Render terms, available when the body is a Laurent polynomial over ℚ.
    pub fn terms(&self) -> Option<Vec<Term>> {
        if !self.body.is_laurent_over_int() {
            return None;
        }
        let (on, od) = (*self.offset.numer(), *self.offset.denom());
        Some(format::terms(self.body.num(), on, od, self.body.den().trailing()))
    }

    /// JSON: a term list for polynomials, `{"num": .., "den": ..}` otherwise.
    pub fn to_json(&self) -> serde_json::Value {
        if let Some(ts) = self.terms() {
            return format::terms_json(&ts);
        }
        let (on, od) = (*self.offset.numer(), *self.offset.denom());
        serde_json::json!({
            "num": format::terms_json(&format::terms(self.body.num(), on, od, &Int::ONE)),
            "den": format::terms_json(&format::terms(self.body.den(), 0, 1, &Int::ONE)),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<GradedScalar> {
        if let Some(obj) = v.as_object() {
            let num = from_terms(&format::parse_terms_json(obj.get("num")?)?)?;
            let den = from_terms(&format::parse_terms_json(obj.get("den")?)?)?;
            if den.is_zero() {
                return None;
            }
            return Some(&num * &den.inv());
        }
        from_terms(&format::parse_terms_json(v)?)
    }
}

fn from_terms(ts: &[Term]) -> Option<GradedScalar> {
    let mut acc = GradedScalar::zero();
    for t in ts {
        if t.ed <= 0 || t.cd.is_zero() {
            return None;
        }
        let c = RatFunc::new(Laurent::constant(t.cn.clone()), Laurent::constant(t.cd.clone()));
        let term = GradedScalar::new(Rational64::new(t.en, t.ed), c);
        acc = acc.checked_add(&term).ok()?;
    }
    Some(acc)
}

impl From<RatFunc> for GradedScalar {
    fn from(body: RatFunc) -> GradedScalar {
        GradedScalar { offset: Rational64::zero(), body }
    }
}

impl From<Laurent> for GradedScalar {
    fn from(p: Laurent) -> GradedScalar {
        GradedScalar::from(RatFunc::from(p))
    }
}

impl From<i64> for GradedScalar {
    fn from(k: i64) -> GradedScalar {
        GradedScalar::from(RatFunc::from_int(k))
    }
}

impl Add<&GradedScalar> for &GradedScalar {
    type Output = GradedScalar;
    fn add(self, rhs: &GradedScalar) -> GradedScalar {
        self.checked_add(rhs).expect("adding scalars with incommensurable q-offsets")
    }
}

impl Sub<&GradedScalar> for &GradedScalar {
    type Output = GradedScalar;
    fn sub(self, rhs: &GradedScalar) -> GradedScalar {
        self + &(-rhs)
    }
}

impl Mul<&GradedScalar> for &GradedScalar {
    type Output = GradedScalar;
    fn mul(self, rhs: &GradedScalar) -> GradedScalar {
        GradedScalar::new(self.offset + rhs.offset, &self.body * &rhs.body)
    }
}

impl Neg for &GradedScalar {
    type Output = GradedScalar;
    fn neg(self) -> GradedScalar {
        GradedScalar { offset: self.offset, body: -&self.body }
    }
}

impl Neg for GradedScalar {
    type Output = GradedScalar;
    fn neg(self) -> GradedScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GradedScalar> for GradedScalar {
            type Output = GradedScalar;
            fn $m(self, rhs: GradedScalar) -> GradedScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GradedScalar> for GradedScalar {
            type Output = GradedScalar;
            fn $m(self, rhs: &GradedScalar) -> GradedScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for GradedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (on, od) = (*self.offset.numer(), *self.offset.denom());
        if self.body.is_laurent_over_int() {
            return format::write_terms(f, self.body.num(), on, od, self.body.den().trailing());
        }
        if !self.offset.is_zero() {
            let g = on.gcd(&od);
            write!(f, "q^{{{}/{}}}·", on / g, od / g)?;
        }
        write!(f, "{}", self.body)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offset_reduction() {
        let a = GradedScalar::q_frac(3, 4);
        // q^{3/4} = q^{1/4} · v
        assert_eq!(a.offset(), Rational64::new(1, 4));
        assert_eq!(a.body(), &RatFunc::v(1));
        let b = GradedScalar::q_frac(-1, 4);
        assert_eq!(&a * &b, GradedScalar::q_frac(1, 2));
        assert_eq!(a.to_string(), "q^{3/4}");
        let j = a.to_json();
        assert_eq!(GradedScalar::from_json(&j), Some(a));
    }

    #[test]
    fn incommensurable_add_is_error() {
        let a = GradedScalar::q_frac(1, 3);
        let b = GradedScalar::one();
        assert!(a.checked_add(&b).is_err());
    }
}
