//! Arbitrary-precision integers with an inline `i64` fast path.
//!
//! Almost every coefficient met in practice fits in a machine word, so the
//! heap-backed representation is only used after a checked operation overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Clone, Debug)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(s) => Int::Small(s),
            None => Int::Big(Box::new(b)),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(s) => BigInt::from(*s),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(s) => Some(*s),
            Int::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(s) => s.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                let g = (a.unsigned_abs()).gcd(&b.unsigned_abs());
                match i64::try_from(g) {
                    Ok(g) => Int::Small(g),
                    Err(_) => Int::from_big(BigInt::from(g)),
                }
            }
            _ => Int::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Exact division; panics in debug builds if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Int) -> Int {
        match (self, d) {
            (Int::Small(a), Int::Small(b)) => match a.checked_div(*b) {
                Some(q) => {
                    debug_assert_eq!(a % b, 0);
                    Int::Small(q)
                }
                None => Int::from_big(BigInt::from(*a) / BigInt::from(*b)),
            },
            _ => {
                let (q, r) = self.to_big().div_rem(&d.to_big());
                debug_assert!(r.is_zero());
                Int::from_big(q)
            }
        }
    }

    /// Truncating division with remainder.
    pub fn div_rem(&self, d: &Int) -> (Int, Int) {
        match (self, d) {
            (Int::Small(a), Int::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                (Int::Small(a / b), Int::Small(a % b))
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&d.to_big());
                (Int::from_big(q), Int::from_big(r))
            }
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn parse(s: &str) -> Option<Int> {
        s.trim().parse::<BigInt>().ok().map(Int::from_big)
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Int {
        Int::Small(v as i64)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Int) -> bool {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a == b,
            // Canonical form: a Big never holds a value that fits in i64.
            (Int::Big(a), Int::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl std::hash::Hash for Int {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self {
            Int::Small(s) => s.hash(state),
            Int::Big(b) => b.hash(state),
        }
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Int) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(s) => write!(f, "{s}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl<'a> Add<&'a Int> for &'a Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Int> for &'a Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Int> for &'a Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::Small(s);
            }
        }
        Int::from_big(self.to_big() * rhs.to_big())
    }
}

impl Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        &self + &rhs
    }
}

impl Sub for Int {
    type Output = Int;
    fn sub(self, rhs: Int) -> Int {
        &self - &rhs
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        &self * &rhs
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(s) => match s.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(s)),
            },
            Int::Big(b) => Int::from_big(-*b),
        }
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        -self.clone()
    }
}

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, rhs: &Int) {
        *self = &*self * rhs;
    }
}

impl Int {
    /// `self += a * b`, the inner loop of polynomial multiplication.
    #[inline]
    pub fn add_mul(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(s), Int::Small(x), Int::Small(y)) = (&*self, a, b) {
            if let Some(p) = x.checked_mul(*y) {
                if let Some(t) = s.checked_add(p) {
                    *self = Int::Small(t);
                    return;
                }
            }
        }
        *self = &*self + &(a * b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let a = Int::from(i64::MAX);
        let b = &a + &Int::ONE;
        assert!(matches!(b, Int::Big(_)));
        let c = &b - &Int::ONE;
        assert_eq!(c, a);
        assert!(matches!(c, Int::Small(_)));
        let sq = &a * &a;
        assert_eq!(sq.div_exact(&a), a);
    }

    #[test]
    fn gcd_and_sign() {
        assert_eq!(Int::from(-12).gcd(&Int::from(18)), Int::from(6));
        assert_eq!(Int::from(-5).signum(), -1);
        assert_eq!(Int::from(-5).abs(), Int::from(5));
        assert_eq!(Int::from(i64::MIN).abs().to_big(), -BigInt::from(i64::MIN));
    }
}
