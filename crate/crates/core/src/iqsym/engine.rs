//! Rewriting evaluator: reduce every word so the top strand letter occurs at most once, strip it
//! with the trace rule, and recurse on one strand fewer.

use super::algebra::{x_mult_table, AlgElement, Letter, MultTable, XWord};
use super::tables::{self, Rule, Side};
use crate::error::Error;
use crate::qalg::{circle_value, GradedScalar, RatFunc};
use crate::spinpoly::BraidWord;
use crate::xcalc::relations::trx_coeff;
use std::collections::HashMap;

pub struct Engine {
    pub n: usize,
    pub table: MultTable,
    rules: Vec<Rule>,
    trx: Vec<RatFunc>,
    circle: RatFunc,
    reduce_cache: HashMap<(XWord, usize), AlgElement>,
    trace_cache: HashMap<(XWord, usize), RatFunc>,
}

fn commute(a: Letter, b: Letter) -> bool {
    a.0.abs_diff(b.0) >= 2
}

/// Lexicographically least word equal to `w` up to far commutation: repeatedly take the least
/// letter that commutes with everything before it.
pub fn lex_normal(w: &[Letter]) -> XWord {
    let mut rest: Vec<Letter> = w.to_vec();
    let mut out = Vec::with_capacity(w.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..rest.len() {
            if rest[..p].iter().all(|&x| commute(x, rest[p])) && best.map_or(true, |b| rest[p] < rest[b]) {
                best = Some(p);
            }
        }
        let b = best.expect("the first letter is always available");
        out.push(rest.remove(b));
    }
    out
}

impl Engine {
    pub fn new(n: usize) -> Result<Engine, Error> {
        if !(1..=3).contains(&n) {
            return Err(Error::SymbolicRankTooLarge(n));
        }
        Ok(Engine {
            n,
            table: x_mult_table(n),
            rules: tables::rules(n),
            trx: (0..=n).map(|k| trx_coeff(n, k)).collect(),
            circle: RatFunc::from(circle_value(n as i64)),
            reduce_cache: HashMap::new(),
            trace_cache: HashMap::new(),
        })
    }

    /// `X_i^{(a)} X_i^{(b)}` as a combination of single letters (the empty word for power 0).
    fn merge(&self, i: usize, a: usize, b: usize) -> Vec<(Option<Letter>, RatFunc)> {
        self.table[a][b]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| ((k > 0).then_some((i, k)), c.clone()))
            .collect()
    }

    /// Far-commutation normal form with adjacent equal-index letters merged, to a fixed point.
    pub fn canon(&self, e: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        let mut work: Vec<(XWord, RatFunc)> = e.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = work.pop() {
            let w = lex_normal(&w);
            match (1..w.len()).find(|&p| w[p - 1].0 == w[p].0) {
                None => out.add_term(w, c),
                Some(p) => {
                    for (l, k) in self.merge(w[p].0, w[p - 1].1, w[p].1) {
                        let mut nw = w[..p - 1].to_vec();
                        nw.extend(l);
                        nw.extend_from_slice(&w[p + 1..]);
                        work.push((nw, &c * &k));
                    }
                }
            }
        }
        out
    }

    fn rule(&self, a: usize, b: usize, c: usize) -> Result<&Rule, Error> {
        tables::find(&self.rules, a, b, c).ok_or(Error::MissingRule(a, b, c))
    }

    /// Rewrite a single word until index `t` occurs at most once in every word.
    fn reduce_word(&mut self, w: &XWord, t: usize) -> Result<AlgElement, Error> {
        if w.iter().filter(|l| l.0 == t).count() <= 1 {
            return Ok(AlgElement::word(w.clone()));
        }
        if let Some(r) = self.reduce_cache.get(&(w.clone(), t)) {
            return Ok(r.clone());
        }
        let mut out = AlgElement::zero();
        let mut work: Vec<(XWord, RatFunc)> = vec![(w.clone(), RatFunc::one())];
        while let Some((w, c)) = work.pop() {
            let ps: Vec<usize> = (0..w.len()).filter(|&p| w[p].0 == t).collect();
            if ps.len() <= 1 {
                out.add_term(w, c);
                continue;
            }
            let (p1, p2) = (ps[0], ps[1]);
            let (a, cc) = (w[p1].1, w[p2].1);
            let (pre, post) = (&w[..p1], &w[p2 + 1..]);
            let seg: XWord = w[p1 + 1..p2].to_vec();
            let segs = if seg.is_empty() || t == 1 {
                AlgElement::word(seg)
            } else {
                self.reduce_word(&seg, t - 1)?
            };
            for (s, sc) in segs.terms {
                let c = &c * &sc;
                match s.iter().position(|l| l.0 == t - 1) {
                    None => {
                        // everything in the segment commutes with X_t
                        for (l, k) in self.merge(t, a, cc) {
                            let mut nw = pre.to_vec();
                            nw.extend_from_slice(&s);
                            nw.extend(l);
                            nw.extend_from_slice(post);
                            work.push((nw, &c * &k));
                        }
                    }
                    Some(j) => {
                        let b = s[j].1;
                        let rule = self.rule(a, b, cc)?.clone();
                        for term in &rule.rhs {
                            let coef = RatFunc::from(term.coef.value().scale(&term.sign.into()));
                            let mut nw = pre.to_vec();
                            nw.extend_from_slice(&s[..j]);
                            nw.extend(term.word.iter().map(|&(side, p)| (if side == Side::I { t } else { t - 1 }, p)));
                            nw.extend_from_slice(&s[j + 1..]);
                            nw.extend_from_slice(post);
                            work.push((nw, &c * &coef));
                        }
                    }
                }
            }
        }
        self.reduce_cache.insert((w.clone(), t), out.clone());
        Ok(out)
    }

    /// Canonical form in which the top index `m − 1` appears at most once per word.
    pub fn normalize(&mut self, e: &AlgElement, m: usize) -> Result<AlgElement, Error> {
        let e = self.canon(e);
        if m < 2 {
            return Ok(e);
        }
        let mut out = AlgElement::zero();
        for (w, c) in &e.terms {
            out = out.add(&self.reduce_word(w, m - 1)?.scale(c));
        }
        Ok(self.canon(&out))
    }

    fn trace_word(&mut self, w: &XWord, m: usize) -> Result<RatFunc, Error> {
        if m <= 1 {
            debug_assert!(w.is_empty());
            return Ok(self.circle.clone());
        }
        if let Some(v) = self.trace_cache.get(&(w.clone(), m)) {
            return Ok(v.clone());
        }
        let t = m - 1;
        let red = self.reduce_word(w, t)?;
        let mut acc = RatFunc::zero();
        for (w2, c) in red.terms {
            let (factor, rest) = match w2.iter().position(|l| l.0 == t) {
                Some(p) => {
                    let mut r = w2[p + 1..].to_vec();
                    r.extend_from_slice(&w2[..p]);
                    (self.trx[w2[p].1].clone(), r)
                }
                None => (self.circle.clone(), w2),
            };
            let rest = self.canon(&AlgElement::word(rest));
            for (rw, rc) in rest.terms {
                let v = self.trace_word(&rw, m - 1)?;
                acc = &acc + &(&(&c * &rc) * &(&factor * &v));
            }
        }
        self.trace_cache.insert((w.clone(), m), acc.clone());
        Ok(acc)
    }

    /// Quantum trace of an element of the `m`-strand algebra.
    pub fn trace_eval(&mut self, e: &AlgElement, m: usize) -> Result<RatFunc, Error> {
        let mut acc = RatFunc::zero();
        for (w, c) in &e.terms {
            if w.iter().any(|l| l.0 == 0 || l.0 >= m.max(1) || l.1 == 0 || l.1 > self.n) {
                return Err(Error::Usage(format!("word {w:?} does not live on {m} strands at n = {}", self.n)));
            }
            acc = &acc + &(c * &self.trace_word(w, m)?);
        }
        Ok(acc)
    }

    /// `q^{±n/2} Σ_k q^{∓k} X_i^{(k)}`.
    pub fn crossing(&self, i: usize, s: i8) -> AlgElement {
        let n = self.n as i64;
        let s = s as i64;
        let mut e = AlgElement::zero();
        for k in 0..=self.n {
            let w = if k == 0 { Vec::new() } else { vec![(i, k)] };
            e.add_term(w, RatFunc::v(s * n - s * 2 * k as i64));
        }
        e
    }

    /// Product of the crossings of `b`, normalized after each letter.
    pub fn braid_element(&mut self, b: &BraidWord) -> Result<AlgElement, Error> {
        let mut e = AlgElement::one();
        for &(i, s) in &b.letters {
            e = self.normalize(&e.mul(&self.crossing(i, s)), b.strands)?;
        }
        Ok(e)
    }

    pub fn eval_braid(&mut self, b: &BraidWord) -> Result<RatFunc, Error> {
        let e = self.braid_element(b)?;
        self.trace_eval(&e, b.strands)
    }
}

/// Symbolic route for the raw spin polynomial.
pub fn eval_spin_symbolic(b: &BraidWord, n: usize) -> Result<GradedScalar, Error> {
    Ok(GradedScalar::from(Engine::new(n)?.eval_braid(b)?))
}

/// Raw values of every word in `words`, sharing normalized prefixes in a depth-first walk.
pub fn eval_all_prefix(engine: &mut Engine, strands: usize, max_len: usize) -> Result<Vec<(BraidWord, RatFunc)>, Error> {
    let gens: Vec<(usize, i8)> = (1..strands).flat_map(|i| [(i, 1i8), (i, -1i8)]).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<(usize, i8)>, AlgElement)> = vec![(Vec::new(), AlgElement::one())];
    while let Some((word, e)) = stack.pop() {
        let v = engine.trace_eval(&e, strands)?;
        out.push((BraidWord { strands, letters: word.clone() }, v));
        if word.len() == max_len {
            continue;
        }
        for &g in &gens {
            let next = engine.normalize(&e.mul(&engine.crossing(g.0, g.1)), strands)?;
            let mut w = word.clone();
            w.push(g);
            stack.push((w, next));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::qint;
    use crate::spinpoly::{eval_raw, parse_braid};

    #[test]
    fn lex_normal_form() {
        assert_eq!(lex_normal(&[(3, 1), (1, 1)]), vec![(1, 1), (3, 1)]);
        assert_eq!(lex_normal(&[(2, 1), (1, 1)]), vec![(2, 1), (1, 1)]);
        assert_eq!(lex_normal(&[(3, 1), (2, 1), (1, 1), (4, 1)]), vec![(3, 1), (2, 1), (1, 1), (4, 1)]);
        assert_eq!(lex_normal(&[(4, 1), (2, 1), (1, 1)]), vec![(2, 1), (1, 1), (4, 1)]);
    }

    #[test]
    fn iserre_rewrite() {
        let mut e = Engine::new(2).unwrap();
        // the top index is 2, so X1X2X1 is already normal and X2X1X2 is rewritten
        let lhs = AlgElement::word(vec![(1, 1), (2, 1), (1, 1)]);
        assert_eq!(e.normalize(&lhs, 3).unwrap(), e.canon(&lhs));
        let top = AlgElement::word(vec![(2, 1), (1, 1), (2, 1)]);
        let mut want = AlgElement::zero();
        want.add_term(vec![(2, 2), (1, 1)], RatFunc::one());
        want.add_term(vec![(1, 1), (2, 2)], RatFunc::one());
        want.add_term(vec![(2, 2)], RatFunc::from(qint(2)));
        want.add_term(vec![(2, 1)], RatFunc::one());
        assert_eq!(e.normalize(&top, 3).unwrap(), want);
        // n = 1 truncation: X2 X1 X2 = X2
        let mut e1 = Engine::new(1).unwrap();
        assert_eq!(e1.normalize(&top, 3).unwrap(), AlgElement::word(vec![(2, 1)]));
    }

    #[test]
    fn far_commutation_and_idempotence() {
        let mut e = Engine::new(2).unwrap();
        let w = AlgElement::word(vec![(3, 1), (1, 1)]);
        assert_eq!(e.normalize(&w, 4).unwrap(), AlgElement::word(vec![(1, 1), (3, 1)]));
        let x = AlgElement::word(vec![(3, 1), (2, 2), (1, 1), (3, 2), (2, 1), (3, 1)]);
        let once = e.normalize(&x, 4).unwrap();
        assert_eq!(e.normalize(&once, 4).unwrap(), once);
    }

    #[test]
    fn trace_base_cases() {
        for n in 1..=3 {
            let mut e = Engine::new(n).unwrap();
            let c = RatFunc::from(circle_value(n as i64));
            assert_eq!(e.trace_eval(&AlgElement::one(), 1).unwrap(), c);
            assert_eq!(e.trace_eval(&AlgElement::word(vec![(1, n)]), 2).unwrap(), c);
        }
        assert!(matches!(Engine::new(4), Err(Error::SymbolicRankTooLarge(4))));
    }

    #[test]
    fn matches_matrix_route() {
        for n in 1..=3 {
            let mut e = Engine::new(n).unwrap();
            for text in ["", "s1", "s1 s1 s1", "1 -2 1 -2", "1 2 1 2 1", "-1 -1 2 -1 2 2"] {
                let b = parse_braid(text, Some(3)).unwrap();
                assert_eq!(e.eval_braid(&b).unwrap(), eval_raw(&b, n), "n = {n}, braid {text:?}");
            }
            let b = parse_braid("1 2 3 -2 1 3", Some(4)).unwrap();
            assert_eq!(e.eval_braid(&b).unwrap(), eval_raw(&b, n), "n = {n}, four strands");
        }
    }
}
