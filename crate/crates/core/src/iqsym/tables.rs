//! The three-letter relations among `X_i^{(a)} X_j^{(b)} X_i^{(c)}`, `|i − j| = 1`, as data.
//!
//! A rule rewrites `I^a J^b I^c`, where `I` is the outer strand and `J` its neighbour. Rules for
//! `n = 2` come from the `n = 3` rules by dropping every term that contains a cube; for `n = 1`
//! only `I J I = I` remains. Order-reversed rules are produced mechanically.

use crate::qalg::{devil, qint, Laurent};

/// Which of the two strands a letter sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    I,
    J,
}

/// Coefficient expression of a rule term.
#[derive(Clone, Copy, Debug)]
pub enum Coef {
    One,
    /// `[k]`
    QInt(i64),
    /// the devil's product `"[a][b]"`
    Devil(i64, i64),
    /// explicit `Σ c·q^e` given as `(e, c)` pairs
    Poly(&'static [(i64, i64)]),
}

impl Coef {
    pub fn value(self) -> Laurent {
        match self {
            Coef::One => Laurent::one(),
            Coef::QInt(k) => qint(k),
            Coef::Devil(a, b) => devil(a, b),
            Coef::Poly(ts) => Laurent::from_terms(ts.iter().map(|&(e, c)| (2 * e, c.into()))),
        }
    }
}

/// One term `sign · coef · word`.
#[derive(Clone, Debug)]
pub struct Term {
    pub sign: i64,
    pub coef: Coef,
    pub word: Vec<(Side, usize)>,
}

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: (usize, usize, usize),
    pub rhs: Vec<Term>,
}

impl Rule {
    pub fn lhs_word(&self) -> Vec<(Side, usize)> {
        let (a, b, c) = self.lhs;
        vec![(Side::I, a), (Side::J, b), (Side::I, c)]
    }

    pub fn reversed(&self) -> Rule {
        let (a, b, c) = self.lhs;
        Rule {
            lhs: (c, b, a),
            rhs: self
                .rhs
                .iter()
                .map(|t| Term { word: t.word.iter().rev().copied().collect(), ..t.clone() })
                .collect(),
        }
    }

    pub fn max_power(&self) -> usize {
        let (a, b, c) = self.lhs;
        a.max(b).max(c)
    }
}

const I: Side = Side::I;
const J: Side = Side::J;

fn t(sign: i64, coef: Coef, word: &[(Side, usize)]) -> Term {
    Term { sign, coef, word: word.to_vec() }
}

const P_212: &[(i64, i64)] = &[(6, 1), (4, -2), (-4, -2), (-6, 1)];
const P_312A: &[(i64, i64)] = &[(4, 1), (2, 1), (-2, 1), (-4, 1)];
const P_312B: &[(i64, i64)] = &[(7, 1), (5, -1), (-5, -1), (-7, 1)];
const P_313: &[(i64, i64)] = &[(8, 1), (2, 1), (-2, 1), (-8, 1)];

/// The rules for `n = 3`, before reversal. `(2,3,2)` is not printed and is taken from the
/// `(1,3,1)` rule with the roles of the two strands exchanged; `(3,1,2)` is corrected, see
/// [`printed_errata`].
pub fn base_rules() -> Vec<Rule> {
    use Coef::*;
    vec![
        Rule {
            lhs: (1, 1, 1),
            rhs: vec![t(1, One, &[(I, 2), (J, 1)]), t(1, One, &[(J, 1), (I, 2)]), t(1, QInt(2), &[(I, 2)]), t(1, One, &[(I, 1)])],
        },
        Rule {
            lhs: (2, 1, 1),
            rhs: vec![
                t(1, One, &[(J, 1), (I, 3)]),
                t(-1, Devil(2, 2), &[(I, 3), (J, 1)]),
                t(-1, QInt(2), &[(I, 2), (J, 1)]),
                t(-1, Devil(2, 2), &[(I, 2)]),
                t(-1, Devil(2, 3), &[(I, 3)]),
            ],
        },
        Rule {
            lhs: (2, 1, 2),
            rhs: vec![
                t(1, Devil(2, 3), &[(J, 1), (I, 3)]),
                t(1, Devil(2, 3), &[(I, 3), (J, 1)]),
                t(1, Devil(2, 3), &[(I, 2)]),
                t(-1, Poly(P_212), &[(I, 3)]),
            ],
        },
        Rule { lhs: (3, 1, 1), rhs: vec![t(1, Devil(2, 3), &[(I, 3), (J, 1)]), t(1, Devil(3, 3), &[(I, 3)])] },
        Rule { lhs: (3, 1, 2), rhs: vec![t(-1, Poly(P_312A), &[(I, 3), (J, 1)]), t(1, Poly(P_312B), &[(I, 3)])] },
        Rule { lhs: (3, 1, 3), rhs: vec![t(-1, Poly(P_313), &[(I, 3)])] },
        Rule { lhs: (1, 2, 1), rhs: vec![t(1, One, &[(J, 1), (I, 2), (J, 1)])] },
        Rule {
            lhs: (2, 2, 1),
            rhs: vec![
                t(1, One, &[(J, 1), (I, 3), (J, 1)]),
                t(1, One, &[(I, 3), (J, 2)]),
                t(1, QInt(2), &[(I, 3), (J, 1)]),
                t(1, One, &[(I, 2), (J, 1)]),
            ],
        },
        Rule {
            lhs: (2, 2, 2),
            rhs: vec![
                t(-1, QInt(2), &[(J, 1), (I, 3), (J, 1)]),
                t(1, One, &[(I, 2)]),
                t(-1, Devil(2, 2), &[(J, 1), (I, 3)]),
                t(-1, Devil(2, 2), &[(I, 3), (J, 1)]),
                t(-1, Devil(2, 3), &[(I, 3)]),
            ],
        },
        Rule { lhs: (3, 2, 1), rhs: vec![t(-1, Devil(2, 2), &[(I, 3), (J, 1)]), t(-1, QInt(2), &[(I, 3), (J, 2)])] },
        Rule { lhs: (3, 2, 2), rhs: vec![t(1, Devil(2, 3), &[(I, 3), (J, 1)]), t(1, Devil(3, 3), &[(I, 3)])] },
        Rule { lhs: (3, 2, 3), rhs: vec![t(-1, Devil(3, 4), &[(I, 3)])] },
        Rule { lhs: (1, 3, 1), rhs: vec![t(1, One, &[(J, 2), (I, 3), (J, 2)])] },
        Rule { lhs: (2, 3, 1), rhs: vec![t(1, One, &[(J, 1), (I, 3), (J, 2)])] },
        Rule { lhs: (3, 3, 1), rhs: vec![t(1, One, &[(I, 3), (J, 2)])] },
        Rule { lhs: (3, 3, 2), rhs: vec![t(1, One, &[(I, 3), (J, 1)])] },
        Rule { lhs: (3, 3, 3), rhs: vec![t(1, One, &[(I, 3)])] },
        Rule { lhs: (2, 3, 2), rhs: vec![t(1, One, &[(J, 1), (I, 3), (J, 1)])] },
    ]
}

/// Lines whose printed form does not hold; [`base_rules`] carries the corrected form. For
/// `I³JI²` the printed sign of the `I³J` term is `+`; both the matrix model and the derivation
/// from `I³JI` times `I` give `−`.
pub fn printed_errata() -> Vec<Rule> {
    use Coef::*;
    vec![Rule { lhs: (3, 1, 2), rhs: vec![t(1, Poly(P_312A), &[(I, 3), (J, 1)]), t(1, Poly(P_312B), &[(I, 3)])] }]
}

/// Whether the rule is one of those printed (as opposed to derived by us).
pub fn is_printed(lhs: (usize, usize, usize)) -> bool {
    lhs != (2, 3, 2)
}

/// Full rule set for rank `n ≤ 3`, including reversals and truncations.
pub fn rules(n: usize) -> Vec<Rule> {
    assert!((1..=3).contains(&n), "relation tables exist only for n ≤ 3");
    let mut out: Vec<Rule> = Vec::new();
    for r in truncated_base(n) {
        let rev = r.reversed();
        let symmetric = r.lhs.0 == r.lhs.2;
        out.push(r);
        if !symmetric {
            out.push(rev);
        }
    }
    out
}

/// Truncated rules for rank `n` without adding reversals, for verification.
pub fn truncated_base(n: usize) -> Vec<Rule> {
    base_rules()
        .into_iter()
        .filter(|r| r.max_power() <= n)
        .map(|mut r| {
            r.rhs.retain(|t| t.word.iter().all(|&(_, p)| p <= n));
            r
        })
        .collect()
}

/// The rule whose left side is `I^a J^b I^c`.
pub fn find(rules: &[Rule], a: usize, b: usize, c: usize) -> Option<&Rule> {
    rules.iter().find(|r| r.lhs == (a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_for_each_rank() {
        for n in 1..=3 {
            let rs = rules(n);
            for a in 1..=n {
                for b in 1..=n {
                    for c in 1..=n {
                        assert!(find(&rs, a, b, c).is_some(), "missing ({a},{b},{c}) for n = {n}");
                    }
                }
            }
        }
        let r1 = rules(1);
        assert_eq!(r1.len(), 1);
        assert_eq!(r1[0].rhs.len(), 1);
    }
}
