//! The devil's-product identity suite and the alternating `A/B` sums.

use super::laurent::Laurent;
use super::qnum::{d_value, devil, qbinom, qbinom_at, qint, qint_at, qtwo, rho, selfconj_sum, sign};
use super::ratfunc::RatFunc;
use crate::report::Report;
use serde_json::json;

/// First `d` factors of `[2]_{c+1}[2]_{c−1}[2]_{c+3}[2]_{c−3}⋯`.
pub fn paren2(c: i64, d: i64) -> Laurent {
    let mut acc = Laurent::one();
    for j in 0..d {
        let off = 2 * (j / 2) + 1;
        let k = if j % 2 == 0 { c + off } else { c - off };
        acc = &acc * &qtwo(k);
    }
    acc
}

/// First `d` factors of `[2]_{c−1}[2]_{c+1}[2]_{c−3}[2]_{c+3}⋯`.
pub fn brace2(c: i64, d: i64) -> Laurent {
    let mut acc = Laurent::one();
    for j in 0..d {
        let off = 2 * (j / 2) + 1;
        let k = if j % 2 == 0 { c - off } else { c + off };
        acc = &acc * &qtwo(k);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Paren,
    Brace,
}

fn prod2(f: Family, c: i64, d: i64) -> Laurent {
    match f {
        Family::Paren => paren2(c, d),
        Family::Brace => brace2(c, d),
    }
}

fn alt_sum(f: Family, a: i64, b: i64, eps: i64, odd: bool) -> Laurent {
    let mut acc = Laurent::zero();
    for i in 0..=b.max(0) {
        let k = 2 * i + odd as i64;
        let bin = qbinom_at(b + i, k, 2);
        if bin.is_zero() {
            continue;
        }
        let t = (&prod2(f, a, k) * &bin).shift(4 * i * eps);
        acc = if i % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

pub fn sum_a(a: i64, b: i64, eps: i64) -> Laurent {
    alt_sum(Family::Paren, a, b, eps, false)
}

pub fn sum_b(a: i64, b: i64, eps: i64) -> Laurent {
    alt_sum(Family::Paren, a, b, eps, true)
}

pub fn sum_a_prime(a: i64, b: i64, eps: i64) -> Laurent {
    alt_sum(Family::Brace, a, b, eps, false)
}

pub fn sum_b_prime(a: i64, b: i64, eps: i64) -> Laurent {
    alt_sum(Family::Brace, a, b, eps, true)
}

fn q(k: i64) -> Laurent {
    Laurent::q(k)
}

fn check(r: &mut Report, id: &str, params: serde_json::Value, lhs: &Laurent, rhs: &Laurent) {
    r.push(id, params, lhs == rhs, || format!("lhs = {lhs}; rhs = {rhs}"));
}

/// `ρ_1^{(ℓ)}` written through the `A/B` sums with parameter `k`, for `ℓ = 4n + r`.
pub fn rho_difference(l: i64, k: i64) -> Laurent {
    let n = l / 4;
    let base = |e: i64| -> Laurent { q(-e).scale(&(-1i64).into()).pow(k as u32) };
    match l % 4 {
        0 => &base(8 * n + 2) * &(&sum_a(4 * n, 2 * n - k, -1) + &(&q(2 * k - 1) * &sum_b(4 * n, 2 * n - k, -1))),
        1 => {
            &base(8 * n + 2)
                * &(&(-sum_a_prime(4 * n + 2, 2 * n - k, -1))
                    + &(&q(-2 * k - 1) * &sum_b_prime(4 * n + 2, 2 * n + 1 - k, -1)))
        }
        2 => {
            &base(8 * n + 6)
                * &(&(-sum_a(4 * n + 2, 2 * n + 1 - k, -1))
                    - &(&q(2 * k - 1) * &sum_b(4 * n + 2, 2 * n + 1 - k, -1)))
        }
        _ => {
            &base(8 * n + 6)
                * &(&sum_a_prime(4 * n + 4, 2 * n + 1 - k, -1)
                    - &(&q(-2 * k - 1) * &sum_b_prime(4 * n + 4, 2 * n + 2 - k, -1)))
        }
    }
}

/// Largest admissible `k` in the `ρ`-difference family for `ℓ`.
pub fn rho_difference_kmax(l: i64) -> i64 {
    let n = l / 4;
    if l % 4 < 2 {
        2 * n
    } else {
        2 * n + 1
    }
}

/// Run every identity for all parameters up to `bound`.
pub fn appendix_suite(bound: i64) -> Report {
    let mut r = Report::new();
    for n in 1..=bound {
        for m in 1..=n {
            let lhs = &qint(2) * &devil(m, n);
            let rhs = &qint(n + m) + &qint(n - m).scale(&sign(m - 1).into());
            check(&mut r, "devil-times-two", json!({"m": m, "n": n}), &lhs, &rhs);
        }
        check(&mut r, "devil-square", json!({"n": n}), &devil(n, n), &qint_at(n, 2));
    }
    for n in 1..=bound {
        for k in 0..=n {
            let l1 = &(&q(k) * &qbinom(n - 1, k)) + &(&q(k - n) * &qbinom(n - 1, k - 1));
            let l2 = &(&q(-k) * &qbinom(n - 1, k)) + &(&q(n - k) * &qbinom(n - 1, k - 1));
            check(&mut r, "q-pascal", json!({"n": n, "k": k}), &qbinom(n, k), &l1);
            check(&mut r, "q-pascal-2", json!({"n": n, "k": k}), &qbinom(n, k), &l2);
        }
    }
    for a in 0..=bound {
        for eps in [-1i64, 1] {
            check(&mut r, "special-A", json!({"a": a, "eps": eps}), &sum_a(a, 0, eps), &Laurent::one());
            check(&mut r, "special-A'", json!({"a": a, "eps": eps}), &sum_a_prime(a, 0, eps), &Laurent::one());
            check(&mut r, "special-B", json!({"a": a, "eps": eps}), &sum_b(a, 0, eps), &Laurent::zero());
            check(&mut r, "special-B'", json!({"a": a, "eps": eps}), &sum_b_prime(a, 0, eps), &Laurent::zero());
            check(&mut r, "special-B'1", json!({"a": a, "eps": eps}), &sum_b_prime(a, 1, eps), &qtwo(a - 1));
        }
        for b in 1..=bound {
            let p = json!({"a": a, "b": b});
            let lhs = sum_a(a, b, -1);
            let rhs = &(&sum_a(a, b - 1, 1) - &(&q(a - 2 * b - 1) * &sum_b(a, b, -1))) - &(&q(-a - 2 * b + 1) * &sum_b(a, b, 1));
            check(&mut r, "AB1", p.clone(), &lhs, &rhs);
            let lhs = sum_b(a, b, 1);
            let rhs = &(&(&q(-2) * &sum_b(a, b - 1, -1)) + &(&q(a + 2 * b - 1) * &sum_a(a, b - 1, 1))) + &(&q(-a + 2 * b - 3) * &sum_a(a, b - 1, -1));
            check(&mut r, "AB-1", p.clone(), &lhs, &rhs);
            let lhs = sum_a_prime(a, b, 1);
            let rhs = &(&sum_a_prime(a, b - 1, -1) - &(&q(a + 2 * b + 1) * &sum_b_prime(a, b, 1))) - &(&q(-a + 2 * b - 1) * &sum_b_prime(a, b, -1));
            check(&mut r, "A'B'1", p.clone(), &lhs, &rhs);
            let lhs = sum_b_prime(a, b, -1);
            let rhs = &(&(&q(2) * &sum_b_prime(a, b - 1, 1)) + &(&q(a - 2 * b + 1) * &sum_a_prime(a, b - 1, -1))) + &(&q(-a - 2 * b + 3) * &sum_a_prime(a, b - 1, 1));
            check(&mut r, "A'B'-1", p, &lhs, &rhs);
        }
    }
    for l in 1..=bound {
        let target = q(-l * (l + 1));
        let got = rho(l);
        r.push("rho-closed-form", json!({"l": l}), got == RatFunc::from(target.clone()), || format!("rho = {got}"));
        for k in 0..=rho_difference_kmax(l) {
            check(&mut r, "rho-difference", json!({"l": l, "k": k}), &rho_difference(l, k), &target);
        }
    }
    for n in 0..=bound.min(8) {
        let lhs = selfconj_sum(n as usize);
        let rhs = &q(n * n) * &d_value(n);
        check(&mut r, "selfconj-sum", json!({"n": n}), &lhs, &rhs);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        assert_eq!(&qint(2) * &devil(3, 5), &qint(8) + &qint(2));
        assert_eq!(devil(2, 2), qtwo(2));
        for a in 0..6 {
            assert!(sum_a(a, 0, 1).is_one());
            assert!(sum_a(a, 0, -1).is_one());
        }
    }

    #[test]
    fn small_suite_passes() {
        let r = appendix_suite(5);
        assert!(r.all_pass(), "{}", r.first_failure().unwrap().witness.clone().unwrap_or_default());
    }
}
