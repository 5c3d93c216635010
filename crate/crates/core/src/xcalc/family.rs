//! The operators `X^{(k)}` on `S ⊗ S` and the braiding built from them.

use crate::qalg::{devil, qint, Int, Laurent, RatFunc};
use crate::rep::trivalent::h_op;
use crate::rep::{Factor, LinOp};

/// `X^{(0..=n)}` on `S ⊗ S`, each reduced to lowest terms.
#[derive(Clone, Debug)]
pub struct XFamily {
    pub n: usize,
    pub x: Vec<LinOp>,
}

fn sgn(e: usize) -> Int {
    if e % 2 == 0 {
        Int::ONE
    } else {
        Int::from(-1)
    }
}

/// `X = H − 1/[2]`.
pub fn x_one(n: usize) -> LinOp {
    let id = LinOp::identity(n, vec![Factor::S, Factor::S]);
    h_op(n).sub(&id.scale(&RatFunc::new(Laurent::one(), qint(2)))).reduced()
}

/// One step of the recursion `X^{(i+1)} = (−1)^i/"[i+1]²" (X^{(i)}X − (−1)^i "[i][i+1]" X^{(i)})`.
pub fn x_step(xi: &LinOp, x: &LinOp, i: usize) -> LinOp {
    let shift = devil(i as i64, i as i64 + 1).scale(&sgn(i));
    let prod = xi.compose(x).sub(&xi.scale(&RatFunc::from(shift)));
    prod.scale(&RatFunc::new(Laurent::constant(sgn(i)), devil(i as i64 + 1, i as i64 + 1))).reduced()
}

/// Recursion route, also returning the step past `n` (which must vanish).
pub fn build_x_with_overflow(n: usize) -> (XFamily, LinOp) {
    let x = x_one(n);
    let mut out = vec![LinOp::identity(n, vec![Factor::S, Factor::S]), x.clone()];
    for i in 1..=n {
        let next = x_step(&out[i], &x, i);
        out.push(next);
    }
    let over = out.pop().expect("n + 2 entries");
    (XFamily { n, x: out }, over)
}

pub fn build_x(n: usize) -> XFamily {
    build_x_with_overflow(n).0
}

/// Univariate polynomial in `X` with `ℚ(q^{1/2})` coefficients, constant term first.
pub type XPoly = Vec<RatFunc>;

/// `X^{(k)}` as a polynomial in `X`: the product `∏_{i<k} (−1)^i/"[i+1]²" (x − (−1)^i "[i][i+1]")`.
pub fn x_poly(k: usize) -> XPoly {
    let mut p: XPoly = vec![RatFunc::one()];
    for i in 0..k {
        let root = RatFunc::from(devil(i as i64, i as i64 + 1).scale(&sgn(i)));
        let scale = RatFunc::new(Laurent::constant(sgn(i)), devil(i as i64 + 1, i as i64 + 1));
        let mut next = vec![RatFunc::zero(); p.len() + 1];
        for (d, c) in p.iter().enumerate() {
            next[d + 1] = &next[d + 1] + &(c * &scale);
            next[d] = &next[d] - &(&(c * &scale) * &root);
        }
        p = next;
    }
    p
}

pub fn eval_poly_at(p: &XPoly, x: &RatFunc) -> RatFunc {
    p.iter().rev().fold(RatFunc::zero(), |acc, c| &(&acc * x) + c)
}

/// Polynomial route: evaluate `x_poly(k)` at the matrix `X` via shared powers.
pub fn build_x_poly(n: usize) -> XFamily {
    let x = x_one(n);
    let id = LinOp::identity(n, vec![Factor::S, Factor::S]);
    let mut powers = vec![id.clone()];
    for d in 1..=n {
        let next = powers[d - 1].compose(&x).reduced();
        powers.push(next);
    }
    let mut out = Vec::new();
    for k in 0..=n {
        let p = x_poly(k);
        let mut acc = LinOp::zero(n, id.dom.clone(), id.cod.clone());
        for (d, c) in p.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&powers[d].scale(c));
            }
        }
        out.push(acc.reduced());
    }
    XFamily { n, x: out }
}

/// Eigenvalue of `X` on each summand: index `0` is the top summand `V(2ϖ_n)` with value `0`,
/// index `k ≥ 1` is `V_{n−k}` with value `(−1)^k "[k][k+1]"`.
pub fn x_eigenvalues(n: usize) -> Vec<Laurent> {
    let mut out = vec![Laurent::zero()];
    for k in 1..=n as i64 {
        out.push(devil(k, k + 1).scale(&sgn(k as usize)));
    }
    out
}

/// `R = q^{n/2} Σ q^{−k} X^{(k)}`, or its claimed inverse `q^{−n/2} Σ q^{k} X^{(k)}`.
/// The half-integer power is an honest power of `v = q^{1/2}`.
pub fn braiding(fam: &XFamily, inverse: bool) -> LinOp {
    let n = fam.n as i64;
    let s = if inverse { -1 } else { 1 };
    let mut acc = LinOp::zero(fam.n, fam.x[0].dom.clone(), fam.x[0].cod.clone());
    for (k, xk) in fam.x.iter().enumerate() {
        let c = RatFunc::v(s * n - s * 2 * k as i64);
        acc = acc.add(&xk.scale(&c));
    }
    acc.reduced()
}

/// `R` on strands `i, i+1` of `S^{⊗m}` (`1 ≤ i ≤ m−1`), materialized.
pub fn r_on_strands(r: &LinOp, i: usize, m: usize) -> Result<LinOp, crate::Error> {
    if i == 0 || i >= m {
        return Err(crate::Error::IndexOutOfRange { index: i, max: m.saturating_sub(1) });
    }
    Ok(crate::rep::linop::embed(r, i - 1, &vec![Factor::S; m]))
}

/// `ν = (−1)^{C(n+1,2)} q^{n(2n+1)/2}`, the inverse of the curl factor of `R`, as a `v`-monomial.
pub fn nu(n: usize) -> Laurent {
    let s = if (n * (n + 1) / 2) % 2 == 0 { 1 } else { -1 };
    Laurent::monomial(s, (n * (2 * n + 1)) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_poly_matches_recursion_shape() {
        // X^{(1)} = x, X^{(2)} = −x(x + [2])/[2]_{q²}
        let p1 = x_poly(1);
        assert!(p1[0].is_zero() && p1[1].is_one());
        let p2 = x_poly(2);
        let d = devil(2, 2);
        assert_eq!(p2[2], RatFunc::new(Laurent::constant(-1), d.clone()));
        assert_eq!(p2[1], RatFunc::new(-qint(2), d));
    }

    #[test]
    fn family_routes_agree_and_overflow_vanishes() {
        for n in 1..=3 {
            let (a, over) = build_x_with_overflow(n);
            let b = build_x_poly(n);
            assert!(over.is_zero(), "X^(n+1) nonzero for n = {n}");
            for k in 0..=n {
                assert!(a.x[k].same(&b.x[k]), "route mismatch n = {n}, k = {k}");
            }
        }
    }
}
