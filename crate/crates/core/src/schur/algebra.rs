//! Divided-power words in idempotented quantum `gl_m` and the `N`-bounded quotient.

use crate::qalg::{gen_binom, qbinom, RatFunc};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlWeight(pub Vec<i64>);

impl GlWeight {
    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Nonzero in the `N`-bounded quotient.
    pub fn alive(&self, n_bound: i64) -> bool {
        self.0.iter().all(|&x| (0..=n_bound).contains(&x))
    }

    /// `α_i^∨(a) = a_i − a_{i+1}` for `1 ≤ i < m`.
    pub fn coroot(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }

    /// `a + r α_i`.
    pub fn shifted(&self, i: usize, r: i64) -> GlWeight {
        let mut a = self.0.clone();
        a[i - 1] += r;
        a[i] -= r;
        GlWeight(a)
    }

    /// `s_i(a)`: swap the entries `i` and `i+1`.
    pub fn reflected(&self, i: usize) -> GlWeight {
        let mut a = self.0.clone();
        a.swap(i - 1, i);
        GlWeight(a)
    }

    /// `(1_a, 1_a)_N = ∏ [N, a_i]`.
    pub fn unlink_value(&self, n_bound: i64) -> RatFunc {
        self.0.iter().fold(RatFunc::one(), |acc, &x| &acc * &RatFunc::from(qbinom(n_bound, x)))
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    E,
    F,
}

/// `e_i^{(r)}` or `f_i^{(r)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub kind: Kind,
    pub i: usize,
    pub r: i64,
}

impl Gen {
    pub fn e(i: usize, r: i64) -> Gen {
        Gen { kind: Kind::E, i, r }
    }

    pub fn f(i: usize, r: i64) -> Gen {
        Gen { kind: Kind::F, i, r }
    }

    /// Weight after acting on `a`.
    pub fn act(&self, a: &GlWeight) -> GlWeight {
        match self.kind {
            Kind::E => a.shifted(self.i, self.r),
            Kind::F => a.shifted(self.i, -self.r),
        }
    }

    /// The anti-involution `e_i ↔ f_i`.
    pub fn bar(&self) -> Gen {
        let kind = if self.kind == Kind::E { Kind::F } else { Kind::E };
        Gen { kind, ..*self }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = if self.kind == Kind::E { 'e' } else { 'f' };
        if self.r == 1 {
            write!(f, "{k}{}", self.i)
        } else {
            write!(f, "{k}{}^({})", self.i, self.r)
        }
    }
}

/// Written as an operator product: the last letter acts first.
pub type SWord = Vec<Gen>;

/// Weight reached by `w 1_a`, or `None` when the path leaves `[0, N]^m`.
pub fn target(w: &[Gen], a: &GlWeight, n_bound: i64) -> Option<GlWeight> {
    if !a.alive(n_bound) {
        return None;
    }
    let mut cur = a.clone();
    for g in w.iter().rev() {
        cur = g.act(&cur);
        if !cur.alive(n_bound) {
            return None;
        }
    }
    Some(cur)
}

/// `Σ c_w · w 1_a` with a fixed source weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurElement {
    pub source: GlWeight,
    pub terms: BTreeMap<SWord, RatFunc>,
}

impl SchurElement {
    pub fn zero(source: GlWeight) -> SchurElement {
        SchurElement { source, terms: BTreeMap::new() }
    }

    pub fn idempotent(source: GlWeight) -> SchurElement {
        let mut e = SchurElement::zero(source);
        e.terms.insert(Vec::new(), RatFunc::one());
        e
    }

    pub fn word(source: GlWeight, w: SWord) -> SchurElement {
        let mut e = SchurElement::zero(source);
        e.add_term(w, RatFunc::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: SWord, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let s = &self.terms.get(&w).cloned().unwrap_or_default() + &c;
        if s.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, s);
        }
    }

    pub fn add(&self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &RatFunc) -> SchurElement {
        let mut out = SchurElement::zero(self.source.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// `self ∘ rhs`; the caller guarantees that `self.source` is the target of `rhs`.
    pub fn compose(&self, rhs: &SchurElement) -> SchurElement {
        let mut out = SchurElement::zero(rhs.source.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    /// Drop words through dead weights and merge adjacent equal generators.
    pub fn reduce(&self, n_bound: i64) -> SchurElement {
        let mut out = SchurElement::zero(self.source.clone());
        for (w, c) in &self.terms {
            if let Some((w, k)) = merge_letters(w) {
                if target(&w, &self.source, n_bound).is_some() {
                    out.add_term(w, c * &k);
                }
            }
        }
        out
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w.iter().map(|g| g.to_string()).collect();
                format!("({c}) {} 1_{}", word.join(" "), self.source)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `e^{(s)} e^{(r)} = [r+s, r] e^{(r+s)}` (same for `f`), and drop `r = 0` letters.
/// Returns `None` when a letter has negative power, which is zero by convention.
pub fn merge_letters(w: &[Gen]) -> Option<(SWord, RatFunc)> {
    let mut out: SWord = Vec::with_capacity(w.len());
    let mut coeff = RatFunc::one();
    for g in w {
        if g.r < 0 {
            return None;
        }
        if g.r == 0 {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.kind == g.kind && last.i == g.i => {
                coeff = &coeff * &RatFunc::from(qbinom(last.r + g.r, g.r));
                last.r += g.r;
            }
            _ => out.push(*g),
        }
    }
    Some((out, coeff))
}

/// `e_i^{(r)} f_j^{(s)} 1_a` rewritten with `f` to the left:
/// `Σ_t [α_i^∨(a) + r − s, t] f_i^{(s−t)} e_i^{(r−t)} 1_a` when `i = j`, a plain swap otherwise.
pub fn ef_commute(e: Gen, f: Gen, a: &GlWeight) -> Vec<(SWord, RatFunc)> {
    debug_assert!(e.kind == Kind::E && f.kind == Kind::F);
    if e.i != f.i {
        return vec![(vec![f, e], RatFunc::one())];
    }
    let top = a.coroot(e.i) + e.r - f.r;
    (0..=e.r.min(f.r))
        .filter_map(|t| {
            let c = gen_binom(top, t);
            if c.is_zero() {
                return None;
            }
            let w: SWord = [Gen::f(f.i, f.r - t), Gen::e(e.i, e.r - t)].into_iter().filter(|g| g.r > 0).collect();
            Some((w, RatFunc::from(c)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::qint;

    #[test]
    fn ef_commute_rank_one() {
        // e f 1_a = f e 1_a + [α^∨(a)] 1_a
        let a = GlWeight(vec![3, 1]);
        let got = ef_commute(Gen::e(1, 1), Gen::f(1, 1), &a);
        assert_eq!(got, vec![(vec![Gen::f(1, 1), Gen::e(1, 1)], RatFunc::one()), (vec![], RatFunc::from(qint(2)))]);
        // distinct colors commute
        let got = ef_commute(Gen::e(1, 2), Gen::f(2, 1), &GlWeight(vec![1, 1, 1]));
        assert_eq!(got, vec![(vec![Gen::f(2, 1), Gen::e(1, 2)], RatFunc::one())]);
    }

    #[test]
    fn dead_weights() {
        let a = GlWeight(vec![2, 1]);
        assert!(target(&[Gen::e(1, 1)], &a, 2).is_none());
        assert!(target(&[Gen::e(1, 1)], &a, 3).is_some());
        assert!(target(&[Gen::f(1, 3)], &a, 5).is_none());
    }

    #[test]
    fn merging() {
        let (w, c) = merge_letters(&[Gen::e(1, 1), Gen::e(1, 1), Gen::f(2, 0)]).unwrap();
        assert_eq!(w, vec![Gen::e(1, 2)]);
        assert_eq!(c, RatFunc::from(qint(2)));
        assert!(merge_letters(&[Gen::f(1, -1)]).is_none());
    }
}
