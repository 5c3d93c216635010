//! The bilinear form `(−,−)_N` on the `N`-bounded quotient, computed by annular evaluation.
//!
//! `(1_a, x)_N` is trace-like, so a word `F⋯F E⋯E 1_a` may be rotated to `E⋯E F⋯F 1_b`
//! with `b` strictly higher in dominance order. Moving every `E` to the right of every `F`
//! only produces words of the same length at the same weight or shorter words, so the
//! alternation terminates once `b` leaves the box `[0, N]^m`.

use super::algebra::{ef_commute, merge_letters, target, GlWeight, Kind, SWord, SchurElement};
use crate::error::Error;
use crate::qalg::RatFunc;
use std::collections::HashMap;

pub struct FormEvaluator {
    pub n_bound: i64,
    memo: HashMap<(GlWeight, SWord), RatFunc>,
}

impl FormEvaluator {
    pub fn new(n_bound: i64) -> FormEvaluator {
        FormEvaluator { n_bound, memo: HashMap::new() }
    }

    /// `(1_a, x)_N` for `x ∈ 1_a Ṡ 1_a`.
    pub fn trace(&mut self, x: &SchurElement) -> Result<RatFunc, Error> {
        let m = x.source.m() as u32;
        let bound = (self.n_bound as usize + 1).pow(m);
        let mut acc = RatFunc::zero();
        for (w, c) in &x.terms {
            match target(w, &x.source, self.n_bound) {
                None => continue,
                Some(t) if t != x.source => return Err(Error::Unbalanced(format!("word ends at {t}, starts at {}", x.source))),
                Some(_) => {}
            }
            let limit = w.len().max(1) * bound;
            let v = self.trace_word(&x.source, w, limit)?;
            acc = &acc + &(c * &v);
        }
        Ok(acc)
    }

    /// `(x, y)_N = (1_a, x̄ y)_N`, where the bar reverses words and swaps `e` with `f`.
    pub fn pair(&mut self, x: &SchurElement, y: &SchurElement) -> Result<RatFunc, Error> {
        if x.source != y.source {
            return Ok(RatFunc::zero());
        }
        let mut prod = SchurElement::zero(x.source.clone());
        for (wx, cx) in &x.terms {
            let tx = target(wx, &x.source, self.n_bound);
            for (wy, cy) in &y.terms {
                // (5): different targets pair to zero
                if tx.is_none() || tx != target(wy, &y.source, self.n_bound) {
                    continue;
                }
                let mut w: SWord = wx.iter().rev().map(|g| g.bar()).collect();
                w.extend_from_slice(wy);
                prod.add_term(w, cx * cy);
            }
        }
        self.trace(&prod)
    }

    fn trace_word(&mut self, a: &GlWeight, w: &[super::algebra::Gen], budget: usize) -> Result<RatFunc, Error> {
        let Some((w, k)) = merge_letters(w) else { return Ok(RatFunc::zero()) };
        if target(&w, a, self.n_bound).is_none() {
            return Ok(RatFunc::zero());
        }
        if w.is_empty() {
            return Ok(&k * &a.unlink_value(self.n_bound));
        }
        let key = (a.clone(), w.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(&k * v);
        }
        // rightmost E-before-F inversion
        let inv = (0..w.len() - 1).rev().find(|&p| w[p].kind == Kind::E && w[p + 1].kind == Kind::F);
        let v = match inv {
            Some(p) => {
                let below = target(&w[p + 2..], a, self.n_bound).expect("path checked alive");
                let mut acc = RatFunc::zero();
                for (mid, c) in ef_commute(w[p], w[p + 1], &below) {
                    let mut nw = w[..p].to_vec();
                    nw.extend(mid);
                    nw.extend_from_slice(&w[p + 2..]);
                    acc = &acc + &(&c * &self.trace_word(a, &nw, budget)?);
                }
                acc
            }
            None => {
                // F⋯F E⋯E 1_a  ↦  E⋯E F⋯F 1_b
                if budget == 0 {
                    return Err(Error::DepthExceeded(w.len()));
                }
                let split = w.iter().position(|g| g.kind == Kind::E).unwrap_or(w.len());
                let (fs, es) = w.split_at(split);
                let b = target(es, a, self.n_bound).expect("path checked alive");
                let mut nw = es.to_vec();
                nw.extend_from_slice(fs);
                self.trace_word(&b, &nw, budget - 1)?
            }
        };
        self.memo.insert(key, v.clone());
        Ok(&k * &v)
    }
}

/// `(1_a, x)_N` with a fresh evaluator.
pub fn bilinear_form(x: &SchurElement, n_bound: i64) -> Result<RatFunc, Error> {
    FormEvaluator::new(n_bound).trace(x)
}

#[cfg(test)]
mod tests {
    use super::super::algebra::Gen;
    use super::*;
    use crate::qalg::{qbinom, qint, Laurent};

    #[test]
    fn base_case() {
        let a = GlWeight(vec![2, 2]);
        let got = bilinear_form(&SchurElement::idempotent(a), 4).unwrap();
        let b = qbinom(4, 2);
        assert_eq!(got, RatFunc::from(&b * &b));
        assert_eq!(b, Laurent::from_terms([(8, 1.into()), (4, 1.into()), (0, 2.into()), (-4, 1.into()), (-8, 1.into())]));
    }

    #[test]
    fn rotation_contract() {
        // (1_a, f e 1_a) = (1_{a+α}, e f 1_{a+α})
        for n in 1..=4 {
            for a0 in 0..=n {
                for a1 in 0..=n {
                    let a = GlWeight(vec![a0, a1]);
                    let b = a.shifted(1, 1);
                    if !b.alive(n) {
                        continue;
                    }
                    let lhs = bilinear_form(&SchurElement::word(a, vec![Gen::f(1, 1), Gen::e(1, 1)]), n).unwrap();
                    let rhs = bilinear_form(&SchurElement::word(b, vec![Gen::e(1, 1), Gen::f(1, 1)]), n).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // f e 1_{(0,1)} at N = 2 traces to [2]
        let v = bilinear_form(&SchurElement::word(GlWeight(vec![0, 1]), vec![Gen::f(1, 1), Gen::e(1, 1)]), 2).unwrap();
        assert_eq!(v, RatFunc::from(qint(2)));
    }

    #[test]
    fn unbalanced_is_an_error() {
        let x = SchurElement::word(GlWeight(vec![0, 1]), vec![Gen::e(1, 1)]);
        assert!(matches!(bilinear_form(&x, 2), Err(Error::Unbalanced(_))));
    }
}
