//! Colored `sl_N` polynomials of braid closures and a Kauffman-bracket oracle.

use super::algebra::{Gen, GlWeight, SchurElement};
use super::form::FormEvaluator;
use crate::error::Error;
use crate::qalg::{sign, GradedScalar, Laurent, RatFunc};
use crate::spinpoly::BraidWord;
use num_rational::Rational64;

/// `c_i^± 1_a = Σ_{s ≥ 0} (−q)^{±(s − a_{i+1})} f_i^{(α_i^∨(a)+s)} e_i^{(s)} 1_a`, truncated
/// to the terms alive in the `N`-bounded quotient.
pub fn c_pm(i: usize, a: &GlWeight, n_bound: i64, positive: bool) -> SchurElement {
    let mut out = SchurElement::zero(a.clone());
    if !a.alive(n_bound) {
        return out;
    }
    let alpha = a.coroot(i);
    let dir = if positive { 1 } else { -1 };
    for s in 0..=n_bound {
        let fpow = alpha + s;
        if fpow < 0 {
            continue;
        }
        let e = dir * (s - a.0[i]);
        let c = RatFunc::from(Laurent::monomial(sign(e), 2 * e));
        let w: Vec<Gen> = [Gen::f(i, fpow), Gen::e(i, s)].into_iter().filter(|g| g.r > 0).collect();
        out.add_term(w, c);
    }
    out.reduce(n_bound)
}

/// `c_{i_1}^{ε_1} ⋯ c_{i_d}^{ε_d} 1_a` and the colored exponent sum `ε(β, a)`.
pub fn braid_element(b: &BraidWord, colors: &GlWeight, n_bound: i64) -> Result<(SchurElement, i64), Error> {
    if colors.m() != b.strands {
        return Err(Error::Unbalanced(format!("{} colors for {} strands", colors.m(), b.strands)));
    }
    let mut elem = SchurElement::idempotent(colors.clone());
    let mut cur = colors.clone();
    let mut eps = 0;
    for &(i, s) in b.letters.iter().rev() {
        eps += s as i64 * cur.0[i - 1] * cur.0[i];
        elem = c_pm(i, &cur, n_bound, s > 0).compose(&elem).reduce(n_bound);
        cur = cur.reflected(i);
    }
    if &cur != colors {
        return Err(Error::Unbalanced(format!("braid carries colors {colors} to {cur}")));
    }
    Ok((elem, eps))
}

/// `(−q^{1/N})^{ε(β,a)} (1_a, c_{i_1}^{ε_1} ⋯ c_{i_d}^{ε_d} 1_a)_N`.
pub fn eval_sln(b: &BraidWord, colors: &GlWeight, n_bound: i64) -> Result<GradedScalar, Error> {
    eval_sln_with(&mut FormEvaluator::new(n_bound), b, colors)
}

/// As [`eval_sln`], reusing the memo of `ev` across calls.
pub fn eval_sln_with(ev: &mut FormEvaluator, b: &BraidWord, colors: &GlWeight) -> Result<GradedScalar, Error> {
    let (elem, eps) = braid_element(b, colors, ev.n_bound)?;
    let body = ev.trace(&elem)?;
    let pre = GradedScalar::new(Rational64::new(eps, ev.n_bound), RatFunc::from_int(sign(eps)));
    Ok(pre * GradedScalar::from(body))
}

/// Kauffman bracket of the closure in `A = q^{1/2}`, with `σ_i ↦ A + A^{−1} U_i`, loop value
/// `−A² − A^{−2}` (the empty closure of one strand counts as one loop), times `(−A³)^{−w}`.
pub fn kauffman_oracle(b: &BraidWord) -> RatFunc {
    let m = b.strands;
    let len = b.letters.len();
    let delta = -&Laurent::from_terms([(2, 1.into()), (-2, 1.into())]);
    let mut total = Laurent::zero();
    for state in 0..(1u64 << len) {
        let mut uf: Vec<usize> = (0..m * (len + 1)).collect();
        let mut exp = 0i64;
        for (layer, &(i, s)) in b.letters.iter().enumerate() {
            let smooth = state >> layer & 1 == 1;
            // the A-smoothing of σ_i is the identity, of σ_i^{-1} it is U_i
            let a_side = smooth != (s > 0);
            exp += if a_side { 1 } else { -1 };
            let node = |l: usize, p: usize| l * m + p;
            for p in 0..m {
                if !smooth || (p != i - 1 && p != i) {
                    union(&mut uf, node(layer, p), node(layer + 1, p));
                }
            }
            if smooth {
                union(&mut uf, node(layer, i - 1), node(layer, i));
                union(&mut uf, node(layer + 1, i - 1), node(layer + 1, i));
            }
        }
        for p in 0..m {
            union(&mut uf, p, len * m + p);
        }
        let loops = (0..uf.len()).filter(|&x| find(&mut uf, x) == x).count();
        total = &total + &(&delta.pow(loops as u32) * &Laurent::v(exp));
    }
    let w = b.exponent_sum();
    let twist = Laurent::monomial(sign(w), -3 * w);
    RatFunc::from(&total * &twist)
}

fn find(uf: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    let mut y = x;
    while uf[y] != r {
        let next = uf[y];
        uf[y] = r;
        y = next;
    }
    r
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        uf[ra] = rb;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::qbinom;
    use crate::spinpoly::parse_braid;

    #[test]
    fn unknots() {
        for n in 1..=5 {
            for a in 0..=n {
                let u = parse_braid("", Some(1)).unwrap();
                let v = eval_sln(&u, &GlWeight(vec![a]), n).unwrap();
                assert_eq!(v, GradedScalar::from(qbinom(n, a)));
            }
        }
        let u = parse_braid("", Some(1)).unwrap();
        assert_eq!(kauffman_oracle(&u), RatFunc::from(-&Laurent::from_terms([(2, 1.into()), (-2, 1.into())])));
    }

    #[test]
    fn c_pm_small() {
        // a = (1,0): α^∨ = 1, only s = 0 survives, c^± = (−q)^0 f 1_a
        let c = c_pm(1, &GlWeight(vec![1, 0]), 3, true);
        assert_eq!(c, SchurElement::word(GlWeight(vec![1, 0]), vec![Gen::f(1, 1)]));
        assert!(c_pm(1, &GlWeight(vec![4, 0]), 3, true).is_zero());
    }

    #[test]
    fn mirror_oracle_is_bar() {
        for text in ["1 1 1", "1 -2 1 -2", "1 2 1 2"] {
            let b = parse_braid(text, None).unwrap();
            assert_eq!(kauffman_oracle(&b.mirror()), kauffman_oracle(&b).bar());
        }
    }
}
