//! Rational functions in `v = q^{1/2}` over ℚ, kept in lowest terms.

use super::int::Int;
use super::laurent::Laurent;
use num_rational::BigRational;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `num / den` with `den` primitive-up-to-content-sharing, lowest exponent 0,
/// positive leading coefficient, and no common factor with `num`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Laurent,
    den: Laurent,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc { num: Laurent::one(), den: Laurent::one() }
    }

    pub fn from_int(k: impl Into<Int>) -> RatFunc {
        RatFunc { num: Laurent::constant(k), den: Laurent::one() }
    }

    pub fn q(k: i64) -> RatFunc {
        RatFunc::from(Laurent::q(k))
    }

    pub fn v(e: i64) -> RatFunc {
        RatFunc::from(Laurent::v(e))
    }

    pub fn new(num: Laurent, den: Laurent) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let s = den.low();
        if s != 0 {
            num = num.shift(-s);
            den = den.shift(-s);
        }
        if den.leading().signum() < 0 {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&Laurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// True when the denominator is a nonzero integer constant.
    pub fn is_laurent_over_int(&self) -> bool {
        self.den.is_constant()
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let n = e.unsigned_abs();
        RatFunc { num: base.num.pow(n), den: base.den.pow(n) }.renorm()
    }

    fn renorm(self) -> RatFunc {
        RatFunc::new(self.num, self.den)
    }

    pub fn shift(&self, k: i64) -> RatFunc {
        RatFunc { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn bar(&self) -> RatFunc {
        RatFunc::new(self.num.bar(), self.den.bar())
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Cross-multiplication equality, valid for unnormalized pairs as well.
    pub fn frac_eq(an: &Laurent, ad: &Laurent, bn: &Laurent, bd: &Laurent) -> bool {
        an * bd == bn * ad
    }
}

impl From<Laurent> for RatFunc {
    fn from(p: Laurent) -> RatFunc {
        RatFunc { num: p, den: Laurent::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(k: i64) -> RatFunc {
        RatFunc::from_int(k)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: Laurent::one() };
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return super::format::write_terms(f, &self.num, 0, 1, self.den.trailing());
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_common_factors() {
        let two = Laurent::q(1) + Laurent::q(-1);
        let r = RatFunc::new(&two * &Laurent::q(3), two.scale(&Int::from(-2)));
        assert_eq!(r.num(), &Laurent::monomial(-1, 6));
        assert_eq!(r.den(), &Laurent::constant(2));
        let x = RatFunc::new(Laurent::q(2) + Laurent::one(), two.clone());
        assert!((&x * &x.inv()).is_one());
        assert!((&x - &x).is_zero());
    }
}
