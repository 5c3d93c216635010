//! Words in the letters `X_i^{(k)}` and their linear combinations.

use crate::qalg::{devil, sign, GradedScalar, Int, RatFunc};
use crate::xcalc::family::x_poly;
use std::collections::BTreeMap;
use std::fmt;

/// `(strand index i ≥ 1, power 1 ≤ k ≤ n)`, read left to right as a composition.
pub type Letter = (usize, usize);
pub type XWord = Vec<Letter>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgElement {
    pub terms: BTreeMap<XWord, RatFunc>,
}

impl AlgElement {
    pub fn zero() -> AlgElement {
        AlgElement::default()
    }

    pub fn one() -> AlgElement {
        AlgElement::word(Vec::new())
    }

    pub fn word(w: XWord) -> AlgElement {
        AlgElement::term(w, RatFunc::one())
    }

    pub fn term(w: XWord, c: RatFunc) -> AlgElement {
        let mut e = AlgElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: XWord, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &RatFunc) -> AlgElement {
        let mut out = AlgElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Concatenation product, no simplification.
    pub fn mul(&self, rhs: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    pub fn coeff(&self, w: &[Letter]) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn graded_terms(&self) -> impl Iterator<Item = (&XWord, GradedScalar)> {
        self.terms.iter().map(|(w, c)| (w, GradedScalar::from(c.clone())))
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|(i, k)| format!("X{i}^({k})")).collect::<Vec<_>>().join(" ")
                };
                format!("({c}) {word}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `table[a][b][c]`: coefficient of `X^{(c)}` in `X^{(a)} X^{(b)}` on a single strand.
pub type MultTable = Vec<Vec<Vec<RatFunc>>>;

fn sgn(k: usize) -> Int {
    Int::from(sign(k as i64))
}

/// Multiply a combination of `X^{(0..=n)}` on the right by `X`, using
/// `X^{(k)}X = (−1)^k "[k][k+1]" X^{(k)} + (−1)^k "[k+1]²" X^{(k+1)}` and `X^{(n+1)} = 0`.
fn times_x(v: &[RatFunc], n: usize) -> Vec<RatFunc> {
    let mut out = vec![RatFunc::zero(); n + 1];
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let ki = k as i64;
        let same = RatFunc::from(devil(ki, ki + 1).scale(&sgn(k)));
        out[k] = &out[k] + &(c * &same);
        if k < n {
            let up = RatFunc::from(devil(ki + 1, ki + 1).scale(&sgn(k)));
            out[k + 1] = &out[k + 1] + &(c * &up);
        }
    }
    out
}

/// The multiplication table of `span{X^{(0..=n)}}`: `X^{(b)}` is expanded as a polynomial in `X`
/// and each factor of `X` is absorbed with the recursion.
pub fn x_mult_table(n: usize) -> MultTable {
    let mut table = vec![vec![vec![RatFunc::zero(); n + 1]; n + 1]; n + 1];
    for a in 0..=n {
        // X^{(a)} X^d for d = 0..=n
        let mut pow = vec![RatFunc::zero(); n + 1];
        pow[a] = RatFunc::one();
        let mut powers = vec![pow.clone()];
        for _ in 1..=n {
            pow = times_x(&pow, n);
            powers.push(pow.clone());
        }
        for b in 0..=n {
            let p = x_poly(b);
            let mut acc = vec![RatFunc::zero(); n + 1];
            for (d, coef) in p.iter().enumerate() {
                if coef.is_zero() || d > n {
                    continue;
                }
                for c in 0..=n {
                    acc[c] = &acc[c] + &(coef * &powers[d][c]);
                }
            }
            table[a][b] = acc;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xcalc::family::{eval_poly_at, x_eigenvalues};

    #[test]
    fn table_matches_spectrum() {
        for n in 1..=4 {
            let t = x_mult_table(n);
            let eigs: Vec<RatFunc> = x_eigenvalues(n).into_iter().map(RatFunc::from).collect();
            let val = |k: usize, mu: &RatFunc| eval_poly_at(&x_poly(k), mu);
            for a in 0..=n {
                for b in 0..=n {
                    for mu in &eigs {
                        let lhs = &val(a, mu) * &val(b, mu);
                        let rhs = (0..=n).fold(RatFunc::zero(), |s, c| &s + &(&t[a][b][c] * &val(c, mu)));
                        assert_eq!(lhs, rhs, "n = {n}, a = {a}, b = {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn structure_examples() {
        let n = 3;
        let t = x_mult_table(n);
        for k in 0..=n {
            let ki = k as i64;
            let s = RatFunc::from_int(sign(ki));
            assert_eq!(t[k][1][k], &s * &RatFunc::from(devil(ki, ki + 1)));
            if k < n {
                assert_eq!(t[k][1][k + 1], &s * &RatFunc::from(devil(ki + 1, ki + 1)));
            }
            for j in 0..=n {
                let want: Vec<RatFunc> = (0..=n).map(|c| if c == j { RatFunc::one() } else { RatFunc::zero() }).collect();
                assert_eq!(t[0][j], want);
            }
        }
    }
}
