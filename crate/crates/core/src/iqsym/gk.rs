//! The Gavrilik–Klimyk presentation, the ι-Weyl elements, and the parity-dependent ι-divided powers.

use super::algebra::AlgElement;
use super::engine::Engine;
use crate::qalg::{qint, sign, Laurent, RatFunc};
use crate::report::Report;
use crate::rep::{Factor, LinOp};
use crate::xcalc::family::braiding;
use crate::xcalc::relations::{compare_on_dominant, Combo};
use serde_json::json;
use std::collections::BTreeMap;

/// Noncommutative polynomials in two letters `1, 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreePoly(pub BTreeMap<Vec<u8>, RatFunc>);

impl FreePoly {
    pub fn constant(c: RatFunc) -> FreePoly {
        let mut p = FreePoly::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn letter(l: u8) -> FreePoly {
        let mut p = FreePoly::default();
        p.add_term(vec![l], RatFunc::one());
        p
    }

    fn add_term(&mut self, w: Vec<u8>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let s = &self.0.get(&w).cloned().unwrap_or_default() + &c;
        if s.is_zero() {
            self.0.remove(&w);
        } else {
            self.0.insert(w, s);
        }
    }

    pub fn add(&self, o: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &o.0 {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &RatFunc) -> FreePoly {
        let mut out = FreePoly::default();
        for (w, c) in &self.0 {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, o: &FreePoly) -> FreePoly {
        let mut out = FreePoly::default();
        for (a, ca) in &self.0 {
            for (b, cb) in &o.0 {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    /// Substitute a polynomial for each letter.
    pub fn subst(&self, f: impl Fn(u8) -> FreePoly) -> FreePoly {
        let mut out = FreePoly::default();
        for (w, c) in &self.0 {
            let t = w.iter().fold(FreePoly::constant(c.clone()), |acc, l| acc.mul(&f(*l)));
            out = out.add(&t);
        }
        out
    }
}

fn prod(ps: &[&FreePoly]) -> FreePoly {
    ps.iter().fold(FreePoly::constant(RatFunc::one()), |acc, p| acc.mul(p))
}

fn inv_two() -> RatFunc {
    RatFunc::new(Laurent::one(), qint(2))
}

fn q2int(k: i64) -> RatFunc {
    RatFunc::from(qint(k).stretch(2))
}

/// `b_1²b_2 + b_2b_1² − [2]_{−q²} b_1b_2b_1 − b_2`, with `[2]_{−q²} = −[2]_{q²}`.
pub fn gk_relation() -> FreePoly {
    let (b1, b2) = (FreePoly::letter(1), FreePoly::letter(2));
    prod(&[&b1, &b1, &b2])
        .add(&prod(&[&b2, &b1, &b1]))
        .add(&prod(&[&b1, &b2, &b1]).scale(&q2int(2)))
        .add(&b2.scale(&RatFunc::from_int(-1)))
}

/// `x^{(2)} = −x(x + [2])/[2]_{q²}` in the free algebra.
pub fn x2_of(x: &FreePoly) -> FreePoly {
    let shifted = x.add(&FreePoly::constant(RatFunc::from(qint(2))));
    x.mul(&shifted).scale(&(-&q2int(2).inv()))
}

/// `x_1x_2x_1 − x_1^{(2)}x_2 − x_2x_1^{(2)} − [2]x_1^{(2)} − x_1`.
pub fn iserre_relation() -> FreePoly {
    let (x1, x2) = (FreePoly::letter(1), FreePoly::letter(2));
    let d = x2_of(&x1);
    let neg = RatFunc::from_int(-1);
    prod(&[&x1, &x2, &x1])
        .add(&d.mul(&x2).scale(&neg))
        .add(&x2.mul(&d).scale(&neg))
        .add(&d.scale(&RatFunc::from(-qint(2))))
        .add(&x1.scale(&neg))
}

/// `ιT_i = Σ_{k ≤ n} q^{−k} x_i^{(k)}`, or with `q^{k}` for the candidate inverse.
pub fn iota_t(i: usize, n: usize, inverse: bool) -> AlgElement {
    let s = if inverse { 1 } else { -1 };
    let mut e = AlgElement::zero();
    for k in 0..=n {
        let w = if k == 0 { Vec::new() } else { vec![(i, k)] };
        e.add_term(w, RatFunc::q(s * k as i64));
    }
    e
}

/// `[k]` at `−q²`, i.e. `(−1)^{k−1}[k]_{q²}`.
fn qint_neg_q2(k: i64) -> RatFunc {
    &RatFunc::from_int(sign(k - 1)) * &q2int(k)
}

/// ι-divided powers `b_ε^{(0..=kmax)}` as polynomials in `b` (constant term first), from
/// `b^{(k)}b = [k+1]b^{(k+1)} + δ_{k̄,ε}[k]b^{(k−1)}` with quantum parameter `−q²`.
pub fn idp_basis(eps: usize, kmax: usize) -> Vec<Vec<RatFunc>> {
    let mut out: Vec<Vec<RatFunc>> = vec![vec![RatFunc::one()]];
    if kmax >= 1 {
        out.push(vec![RatFunc::zero(), RatFunc::one()]);
    }
    for k in 1..kmax {
        let mut next = vec![RatFunc::zero(); k + 2];
        for (d, c) in out[k].iter().enumerate() {
            next[d + 1] = &next[d + 1] + c;
        }
        if k % 2 == eps % 2 {
            let lower = &out[k - 1];
            let f = qint_neg_q2(k as i64);
            for (d, c) in lower.iter().enumerate() {
                next[d] = &next[d] - &(c * &f);
            }
        }
        let inv = qint_neg_q2(k as i64 + 1).inv();
        out.push(next.iter().map(|c| c * &inv).collect());
    }
    out
}

/// Devil's divided powers `x^{(k)}` as polynomials in `b`, through `x = b − 1/[2]`.
pub fn devil_in_b(k: usize) -> Vec<RatFunc> {
    let p = crate::xcalc::family::x_poly(k);
    // compose with x = b − 1/[2]
    let mut out = vec![RatFunc::zero(); p.len()];
    let mut pow = vec![RatFunc::one()];
    let shift = -&inv_two();
    for c in &p {
        for (d, e) in pow.iter().enumerate() {
            out[d] = &out[d] + &(c * e);
        }
        let mut next = vec![RatFunc::zero(); pow.len() + 1];
        for (d, e) in pow.iter().enumerate() {
            next[d + 1] = &next[d + 1] + e;
            next[d] = &next[d] + &(e * &shift);
        }
        pow = next;
    }
    out
}

fn fp_witness(p: &FreePoly) -> String {
    p.0.iter().take(3).map(|(w, c)| format!("{w:?}: {c}")).collect::<Vec<_>>().join("; ")
}

/// GK ↔ devil's Serre substitution, matrix check with Wenzl's `C`, `ιT`, and the ι-divided powers.
pub fn iq_suite(n: usize) -> Report {
    let mut rep = Report::new();
    let p = json!({"n": n});

    // (a) b = x + 1/[2] carries GK to [2]_{q²} times the devil's Serre relation, and back
    let to_x = |l: u8| FreePoly::letter(l).add(&FreePoly::constant(inv_two()));
    let to_b = |l: u8| FreePoly::letter(l).add(&FreePoly::constant(-&inv_two()));
    let gk_x = gk_relation().subst(to_x);
    let target = iserre_relation().scale(&q2int(2));
    let diff = gk_x.add(&target.scale(&RatFunc::from_int(-1)));
    rep.push("GK-to-iSerre", json!({}), diff.0.is_empty(), || fp_witness(&diff));
    let back = target.subst(to_b);
    let diff = back.add(&gk_relation().scale(&RatFunc::from_int(-1)));
    rep.push("iSerre-to-GK", json!({}), diff.0.is_empty(), || fp_witness(&diff));

    // the GK relation holds for b_i ↦ C_i on S^{⊗3}
    let c = crate::clifford::wenzl_c(n);
    let two = RatFunc::from(qint(2).stretch(2)).num().clone();
    for (pi, pj) in [(0usize, 1usize), (1, 0)] {
        let lhs: Combo = vec![
            (Laurent::one(), vec![(pi, &c), (pi, &c), (pj, &c)]),
            (Laurent::one(), vec![(pj, &c), (pi, &c), (pi, &c)]),
            (two.clone(), vec![(pi, &c), (pj, &c), (pi, &c)]),
        ];
        let rhs: Combo = vec![(Laurent::one(), vec![(pj, &c)])];
        let bad = compare_on_dominant(&lhs, &rhs, 3, n);
        rep.push("GK-via-C", json!({"n": n, "i": pi + 1, "j": pj + 1}), bad.is_none(), || format!("{bad:?}"));
    }

    // (b) ιT and its inverse
    if let Ok(engine) = Engine::new(n) {
        let prod = engine.canon(&iota_t(1, n, false).mul(&iota_t(1, n, true)));
        rep.push("iotaT-inverse", p.clone(), prod == AlgElement::one(), || format!("{prod}"));
        let prod = engine.canon(&iota_t(1, n, true).mul(&iota_t(1, n, false)));
        rep.push("iotaT-inverse-left", p.clone(), prod == AlgElement::one(), || format!("{prod}"));
    }
    let fam = crate::xcalc::family::build_x(n);
    let mut img = LinOp::zero(n, vec![Factor::S; 2], vec![Factor::S; 2]);
    for (w, coef) in &iota_t(1, n, false).terms {
        let k = w.first().map_or(0, |l| l.1);
        img = img.add(&fam.x[k].scale(coef));
    }
    let want = braiding(&fam, false).scale(&RatFunc::v(-(n as i64)));
    let d = img.first_difference(&want);
    rep.push("iotaT-image", p.clone(), d.is_none(), || format!("{d:?}"));

    // (c) ι-divided powers: x^{(0)} = 1, x^{(1)} = b − 1/[2], and b_ε^{(2)} ≠ x^{(2)}
    let x0 = devil_in_b(0);
    rep.push("devil-x0", json!({}), x0 == vec![RatFunc::one()], || format!("{x0:?}"));
    let x1 = devil_in_b(1);
    rep.push("devil-x1", json!({}), x1 == vec![-&inv_two(), RatFunc::one()], || format!("{x1:?}"));
    let x2 = devil_in_b(2);
    for eps in 0..2 {
        let b2 = &idp_basis(eps, 2)[2];
        let differs = b2 != &x2;
        rep.push("idp-differs-from-devil", json!({"epsilon": eps, "k": 2}), differs, || "b^(2) equals x^(2)".into());
    }
    let (e0, e1) = (idp_basis(0, 4), idp_basis(1, 4));
    rep.push("idp-depends-on-parity", json!({"k": 2}), e0[2] != e1[2], String::new);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iota_divided_powers() {
        // b_0^{(2)} = b²/[2], b_1^{(2)} = (b² − 1)/[2], with [2] at −q²
        let two = qint_neg_q2(2).inv();
        let e0 = idp_basis(0, 2);
        assert_eq!(e0[2], vec![RatFunc::zero(), RatFunc::zero(), two.clone()]);
        let e1 = idp_basis(1, 2);
        assert_eq!(e1[2], vec![-&two, RatFunc::zero(), two]);
    }

    #[test]
    fn suite_passes() {
        for n in 1..=3 {
            let r = iq_suite(n);
            assert!(r.all_pass(), "{r}");
        }
    }
}
