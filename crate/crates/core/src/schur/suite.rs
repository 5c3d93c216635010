//! Frozen normalization dictionary between the Kauffman bracket, `sl_2`, and the spin `n = 1`
//! polynomial, plus the `sl_N` verification battery.

use super::algebra::{Gen, GlWeight, SchurElement};
use super::form::FormEvaluator;
use super::link::{c_pm, eval_sln_with, kauffman_oracle};
use crate::qalg::{sign, GradedScalar, RatFunc};
use crate::report::Report;
use crate::spinpoly::{all_words, eval_raw, BraidWord};
use num_rational::Rational64;
use serde_json::json;

/// `to(β)(q) = strand_sign^m · (writhe_sign · q^{writhe_exp})^{w(β)} · from(β)(q^{±1})`,
/// with `q ↦ q^{−1}` applied to `from` when `bar` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DictEntry {
    pub from: &'static str,
    pub to: &'static str,
    pub strand_sign: i64,
    pub writhe_sign: i64,
    pub writhe_exp: (i64, i64),
    pub bar: bool,
}

/// Derived once by matching the unknot, the Hopf link, and both trefoils; frozen thereafter.
pub const DICTIONARY: [DictEntry; 2] = [
    DictEntry { from: "kauffman", to: "sl2", strand_sign: -1, writhe_sign: -1, writhe_exp: (-3, 2), bar: true },
    DictEntry { from: "sl2", to: "spin1-raw", strand_sign: -1, writhe_sign: 1, writhe_exp: (0, 1), bar: true },
];

impl DictEntry {
    pub fn apply(&self, value: &GradedScalar, b: &BraidWord) -> GradedScalar {
        let v = if self.bar { value.bar() } else { value.clone() };
        let w = b.exponent_sum();
        let s = if self.strand_sign < 0 { sign(b.strands as i64) } else { 1 };
        let ws = if self.writhe_sign < 0 { sign(w) } else { 1 };
        let shift = Rational64::new(self.writhe_exp.0 * w, self.writhe_exp.1);
        GradedScalar::new(shift, RatFunc::from_int(s * ws)) * v
    }
}

pub fn dictionary(from: &str, to: &str) -> Option<&'static DictEntry> {
    DICTIONARY.iter().find(|d| d.from == from && d.to == to)
}

/// Twist of an `a`-colored strand for the form above: `q^{∓a(N−a)(N+1)/N}`, no sign.
pub fn sln_twist(a: i64, n_bound: i64, positive: bool) -> GradedScalar {
    let e = Rational64::new(a * (n_bound - a) * (n_bound + 1), n_bound);
    GradedScalar::new(if positive { -e } else { e }, RatFunc::one())
}

fn box_weights(m: usize, n_bound: i64) -> Vec<GlWeight> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..=n_bound).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().map(GlWeight).collect()
}

/// Unlink values, the `c^+ c^- = 1` check, trace-likeness of the form, and stabilization.
pub fn form_suite(n_max: i64, m_max: usize) -> Report {
    let mut rep = Report::new();
    for n in 1..=n_max {
        let mut ev = FormEvaluator::new(n);
        for m in 1..=m_max {
            for a in box_weights(m, n) {
                let p = json!({"N": n, "a": a.0});
                let got = ev.trace(&SchurElement::idempotent(a.clone())).expect("balanced");
                let want = a.0.iter().fold(RatFunc::one(), |acc, &x| &acc * &RatFunc::from(crate::qalg::qbinom(n, x)));
                rep.push("unlink-value", p.clone(), got == want, || format!("got {got}"));
                for i in 1..m {
                    let down = c_pm(i, &a, n, false);
                    let up = c_pm(i, &a.reflected(i), n, true);
                    let v = ev.trace(&up.compose(&down).reduce(n)).expect("balanced");
                    rep.push("c-plus-c-minus", json!({"N": n, "a": a.0, "i": i}), v == want, || format!("got {v}"));
                }
            }
        }
    }
    rep.extend(cyclicity_suite());
    rep.extend(stabilization_suite(4));
    rep
}

/// `(x e_i 1_a, y 1_a) = (x 1_{a+α_i}, y f_i 1_{a+α_i})` and the `f` analogue, on short words.
pub fn cyclicity_suite() -> Report {
    let mut rep = Report::new();
    for (m, n) in [(2usize, 2i64), (2, 3), (3, 2)] {
        let mut ev = FormEvaluator::new(n);
        let gens: Vec<Gen> = (1..m).flat_map(|i| [Gen::e(i, 1), Gen::f(i, 1)]).collect();
        let mut words: Vec<Vec<Gen>> = vec![vec![]];
        for g in &gens {
            words.push(vec![*g]);
            for h in &gens {
                words.push(vec![*g, *h]);
            }
        }
        for a in box_weights(m, n) {
            for g in &gens {
                let moved = g.act(&a);
                if !moved.alive(n) {
                    continue;
                }
                for x in &words {
                    for y in &words {
                        // (x g 1_a, y 1_a)  vs  (x 1_{g a}, y ḡ 1_{g a})
                        let mut xg = x.clone();
                        xg.push(*g);
                        let lhs = ev.pair(&SchurElement::word(a.clone(), xg), &SchurElement::word(a.clone(), y.clone()));
                        let mut yg = y.clone();
                        yg.push(g.bar());
                        let rhs = ev.pair(&SchurElement::word(moved.clone(), x.clone()), &SchurElement::word(moved.clone(), yg));
                        let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
                        if !ok {
                            rep.fail("form-trace-like", json!({"N": n, "a": a.0, "g": g.to_string()}), format!("{lhs:?} vs {rhs:?}"));
                            return rep;
                        }
                    }
                }
            }
        }
        rep.pass("form-trace-like", json!({"N": n, "m": m}));
    }
    rep
}

/// `a`-colored stabilization multiplies the value by `sln_twist`.
pub fn stabilization_suite(n_max: i64) -> Report {
    let mut rep = Report::new();
    let base_words = ["", "1 1 1", "1 -1 1"];
    for n in 1..=n_max {
        let mut ev = FormEvaluator::new(n);
        for a in 0..=n {
            for text in base_words {
                let strands = if text.is_empty() { 1 } else { 2 };
                let b = crate::spinpoly::parse_braid(text, Some(strands)).expect("fixed word");
                let colors = GlWeight(vec![a; strands]);
                let base = eval_sln_with(&mut ev, &b, &colors).expect("balanced");
                for s in [1i8, -1] {
                    let st = b.stabilize(s);
                    let got = eval_sln_with(&mut ev, &st, &GlWeight(vec![a; strands + 1])).expect("balanced");
                    let want = sln_twist(a, n, s > 0) * base.clone();
                    let p = json!({"N": n, "a": a, "braid": text, "sign": s});
                    rep.push("sln-stabilization", p, got == want, || format!("got {got}, want {want}"));
                }
                let conj = BraidWord { strands: 2, letters: vec![(1, 1)] };
                if strands == 2 {
                    let w = conj.then(&b).then(&conj.inverse());
                    let got = eval_sln_with(&mut ev, &w, &colors).expect("balanced");
                    rep.push("sln-conjugation", json!({"N": n, "a": a, "braid": text}), got == base, || format!("{got}"));
                }
            }
        }
    }
    rep
}

/// `eval_slN(N = 2)` against the Kauffman oracle, and spin `n = 1` against `sl_2`, on every word
/// with at most `max_strands` strands and `max_len` letters.
pub fn oracle_suite(max_strands: usize, max_len: usize) -> Report {
    let mut rep = Report::new();
    let k2s = dictionary("kauffman", "sl2").expect("frozen entry");
    let s2p = dictionary("sl2", "spin1-raw").expect("frozen entry");
    let mut ev = FormEvaluator::new(2);
    let (mut bad_k, mut bad_s, mut total) = (Vec::new(), Vec::new(), 0usize);
    for strands in 1..=max_strands {
        for b in all_words(strands, max_len) {
            total += 1;
            let sl2 = eval_sln_with(&mut ev, &b, &GlWeight(vec![1; strands])).expect("colors all 1 are balanced");
            let k = k2s.apply(&GradedScalar::from(kauffman_oracle(&b)), &b);
            if k != sl2 {
                bad_k.push(format!("[{b}] on {strands}: sl2 {sl2}, oracle {k}"));
            }
            let spin = GradedScalar::from(eval_raw(&b, 1));
            if s2p.apply(&sl2, &b) != spin {
                bad_s.push(format!("[{b}] on {strands}: spin {spin}"));
            }
        }
    }
    let p = json!({"strands": max_strands, "length": max_len, "words": total});
    rep.push("sl2-equals-kauffman", p.clone(), bad_k.is_empty(), || bad_k.iter().take(3).cloned().collect::<Vec<_>>().join("; "));
    rep.push("spin1-equals-sl2", p, bad_s.is_empty(), || bad_s.iter().take(3).cloned().collect::<Vec<_>>().join("; "));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_form_battery() {
        let r = form_suite(3, 2);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn short_oracle_words() {
        let r = oracle_suite(3, 3);
        assert!(r.all_pass(), "{r}");
    }
}
