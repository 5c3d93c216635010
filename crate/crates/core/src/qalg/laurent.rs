//! Dense Laurent polynomials in `v = q^{1/2}` with integer coefficients.
//!
//! Exponents are stored in units of `v`, so `q^k` has stored exponent `2k`.
//! Rational constants are carried by [`RatFunc`](super::RatFunc) denominators.

use super::int::Int;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent {
    lo: i64,
    c: Vec<Int>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent { lo: 0, c: Vec::new() }
    }

    pub fn one() -> Laurent {
        Laurent::constant(1)
    }

    pub fn constant(k: impl Into<Int>) -> Laurent {
        Laurent::monomial(k, 0)
    }

    /// `coeff · v^e`.
    pub fn monomial(coeff: impl Into<Int>, e: i64) -> Laurent {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Laurent::zero();
        }
        Laurent { lo: e, c: vec![coeff] }
    }

    /// `q^k = v^{2k}`.
    pub fn q(k: i64) -> Laurent {
        Laurent::monomial(1, 2 * k)
    }

    /// `v^e`.
    pub fn v(e: i64) -> Laurent {
        Laurent::monomial(1, e)
    }

    /// Build from `(v_exponent, coeff)` pairs; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, Int)>>(terms: I) -> Laurent {
        let terms: Vec<(i64, Int)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Laurent::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut c = vec![Int::ZERO; (hi - lo + 1) as usize];
        for (e, k) in terms {
            c[(e - lo) as usize] += &k;
        }
        Laurent::trimmed(lo, c)
    }

    fn trimmed(mut lo: i64, mut c: Vec<Int>) -> Laurent {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        let skip = c.iter().take_while(|x| x.is_zero()).count();
        if skip == c.len() {
            return Laurent::zero();
        }
        if skip > 0 {
            c.drain(..skip);
            lo += skip as i64;
        }
        Laurent { lo, c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.c.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.lo == 0 && self.c.len() == 1)
    }

    /// Lowest stored `v`-exponent (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.lo
    }

    /// Highest stored `v`-exponent.
    pub fn high(&self) -> i64 {
        self.lo + self.c.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> Int {
        let i = e - self.lo;
        if i < 0 || i >= self.c.len() as i64 {
            Int::ZERO
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn leading(&self) -> &Int {
        self.c.last().expect("leading coefficient of zero")
    }

    pub fn trailing(&self) -> &Int {
        &self.c[0]
    }

    /// Nonzero terms as `(v_exponent, coeff)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Int)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, k)| !k.is_zero())
            .map(move |(i, k)| (self.lo + i as i64, k))
    }

    pub fn num_terms(&self) -> usize {
        self.c.iter().filter(|k| !k.is_zero()).count()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn scale(&self, k: &Int) -> Laurent {
        if k.is_zero() {
            return Laurent::zero();
        }
        Laurent { lo: self.lo, c: self.c.iter().map(|x| x * k).collect() }
    }

    pub fn pow(&self, e: u32) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Bar involution `v ↦ v^{-1}`.
    pub fn bar(&self) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        let mut c = self.c.clone();
        c.reverse();
        Laurent { lo: -self.high(), c }
    }

    /// Substitute `v ↦ v^s` for `s ≥ 1`, e.g. `s = 2` turns a polynomial in `q` into one in `q^2`.
    pub fn stretch(&self, s: i64) -> Laurent {
        assert!(s >= 1);
        Laurent::from_terms(self.terms().map(|(e, k)| (e * s, k.clone())))
    }

    /// True when only even `v`-exponents occur, i.e. the value lies in `ℤ[q^{±1}]`.
    pub fn is_q_integral(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for k in &self.c {
            if !k.is_zero() {
                g = g.gcd(k);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    pub fn div_int_exact(&self, k: &Int) -> Laurent {
        Laurent { lo: self.lo, c: self.c.iter().map(|x| x.div_exact(k)).collect() }
    }

    /// Evaluate at `v = x`.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut acc = BigRational::zero();
        for k in self.c.iter().rev() {
            acc = acc * x + BigRational::from_integer(k.to_big());
        }
        acc * pow_rat(x, self.lo)
    }

    /// Evaluate at `v = x` modulo a prime, `x` nonzero mod `p`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        if self.is_zero() {
            return 0;
        }
        let mut acc: u128 = 0;
        let pp = p as u128;
        for k in self.c.iter().rev() {
            let r = int_mod(k, p) as u128;
            acc = (acc * x as u128 + r) % pp;
        }
        let xi = if self.lo >= 0 { pow_mod(x, self.lo as u64, p) } else { pow_mod(inv_mod(x, p), (-self.lo) as u64, p) };
        ((acc * xi as u128) % pp) as u64
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in `ℤ[v^{±1}]`.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        if d.c.len() == 1 {
            let k = &d.c[0];
            let mut out = Vec::with_capacity(self.c.len());
            for x in &self.c {
                let (qq, r) = x.div_rem(k);
                if !r.is_zero() {
                    return None;
                }
                out.push(qq);
            }
            return Some(Laurent { lo: self.lo - d.lo, c: out });
        }
        let (qc, r) = poly_divrem(&self.c, &d.c)?;
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Laurent::trimmed(self.lo - d.lo, qc))
    }

    /// Greatest common divisor: primitive, positive leading coefficient, lowest exponent 0,
    /// times the gcd of contents. Monomial factors `v^k` are units and ignored.
    pub fn gcd(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.normalized_unit();
        }
        if other.is_zero() {
            return self.normalized_unit();
        }
        let ca = self.content();
        let cb = other.content();
        let cg = ca.gcd(&cb);
        let mut a: Vec<Int> = self.c.iter().map(|x| x.div_exact(&ca)).collect();
        let mut b: Vec<Int> = other.c.iter().map(|x| x.div_exact(&cb)).collect();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = poly_prem(&a, &b);
            let r = strip(r);
            if r.is_empty() {
                break;
            }
            a = b;
            b = primitive(r);
        }
        if b.len() == 1 {
            return Laurent::constant(cg);
        }
        let mut g = primitive(b);
        if g.last().unwrap().signum() < 0 {
            g = g.into_iter().map(|x| -x).collect();
        }
        let g = Laurent::trimmed(0, g);
        let g = Laurent { lo: 0, c: g.c };
        g.scale(&cg)
    }

    fn normalized_unit(&self) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        let mut g = Laurent { lo: 0, c: self.c.clone() };
        if g.leading().signum() < 0 {
            g = -g;
        }
        g
    }
}

fn strip(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

fn primitive(v: Vec<Int>) -> Vec<Int> {
    let mut g = Int::ZERO;
    for k in &v {
        g = g.gcd(k);
    }
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x.div_exact(&g)).collect()
}

/// Pseudo-remainder of `a` by `b` (ascending coefficient vectors, trimmed).
fn poly_prem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut r: Vec<Int> = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        let off = dr - db;
        for (i, bi) in b.iter().enumerate() {
            let t = bi * &lr;
            r[off + i] -= &t;
        }
        r = strip(r);
    }
    r
}

/// Exact long division over ℤ; `None` when a leading-coefficient step is not integral.
fn poly_divrem(a: &[Int], b: &[Int]) -> Option<(Vec<Int>, Vec<Int>)> {
    let mut r: Vec<Int> = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Some((Vec::new(), r));
    }
    let mut qv = vec![Int::ZERO; r.len() - db];
    let lb = &b[db];
    for dr in (db..r.len()).rev() {
        if r[dr].is_zero() {
            continue;
        }
        let (qq, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let off = dr - db;
        for (i, bi) in b.iter().enumerate() {
            let t = bi * &qq;
            r[off + i] -= &t;
        }
        qv[off] = qq;
    }
    Some((qv, strip(r)))
}

fn pow_rat(x: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    let base = if e >= 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

pub(crate) fn int_mod(k: &Int, p: u64) -> u64 {
    match k {
        Int::Small(s) => s.rem_euclid(p as i64) as u64,
        Int::Big(b) => {
            let pb = BigInt::from(p);
            let r = ((&**b % &pb) + &pb) % &pb;
            u64::try_from(r).unwrap()
        }
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb = (b % p) as u128;
    let pp = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % pp;
        }
        bb = bb * bb % pp;
        e >>= 1;
    }
    b = acc as u64;
    b
}

pub(crate) fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.high().max(rhs.high());
        let mut c = vec![Int::ZERO; (hi - lo + 1) as usize];
        for (i, k) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += k;
        }
        for (i, k) in rhs.c.iter().enumerate() {
            c[(rhs.lo - lo) as usize + i] += k;
        }
        Laurent::trimmed(lo, c)
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut c = vec![Int::ZERO; self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j].add_mul(a, b);
            }
        }
        Laurent::trimmed(self.lo + rhs.lo, c)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { lo: self.lo, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: &Laurent) -> Laurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Laurent {
    /// `self += a * b` without reallocating when the span already fits.
    pub fn add_mul(&mut self, a: &Laurent, b: &Laurent) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let plo = a.lo + b.lo;
        let phi = a.high() + b.high();
        if self.is_zero() {
            *self = a * b;
            return;
        }
        if plo < self.lo || phi > self.high() {
            *self = &*self + &(a * b);
            return;
        }
        let off = (plo - self.lo) as usize;
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                self.c[off + i + j].add_mul(x, y);
            }
        }
        let c = std::mem::take(&mut self.c);
        *self = Laurent::trimmed(self.lo, c);
    }
}

/// Render an exponent given in units of `1/den` of `q`.
pub(crate) fn fmt_exp(num: i64, den: i64) -> String {
    let g = num_integer::gcd(num, den).max(1);
    let (n, d) = (num / g, den / g);
    if d == 1 {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_terms(f, self, 0, 1, &Int::ONE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(e, k)| (e, Int::from(k))))
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(2, 1), (-2, 1)]);
        let b = &a * &a;
        assert_eq!(b, p(&[(4, 1), (0, 2), (-4, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.bar(), a);
        assert_eq!(p(&[(3, 2)]).bar(), p(&[(-3, 2)]));
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p(&[(2, 1), (-2, 1)]);
        let b = p(&[(4, 1), (0, 1), (-4, 1)]);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(a.div_exact(&b), None);
        let g = (&ab * &p(&[(0, 3)])).gcd(&(&a * &p(&[(1, 6)])));
        // gcd is a·3 normalized to lowest exponent 0
        assert_eq!(g, p(&[(0, 3), (4, 3)]));
    }

    #[test]
    fn add_mul_in_place() {
        let mut acc = p(&[(-4, 1), (4, 1)]);
        acc.add_mul(&p(&[(1, 1)]), &p(&[(-1, 1)]));
        assert_eq!(acc, p(&[(-4, 1), (0, 1), (4, 1)]));
        acc.add_mul(&p(&[(10, 1)]), &p(&[(0, 1)]));
        assert_eq!(acc.high(), 10);
    }
}
