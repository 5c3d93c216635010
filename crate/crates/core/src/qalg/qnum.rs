//! Quantum integers, binomials and the devil's product.

use super::int::Int;
use super::laurent::Laurent;
use super::ratfunc::RatFunc;

/// `[n] = (q^n − q^{-n})/(q − q^{-1})`.
pub fn qint(n: i64) -> Laurent {
    if n == 0 {
        return Laurent::zero();
    }
    if n < 0 {
        return -qint(-n);
    }
    Laurent::from_terms((0..n).map(|i| (2 * (n - 1 - 2 * i), Int::ONE)))
}

/// `[n]_{q^k}`.
pub fn qint_at(n: i64, k: i64) -> Laurent {
    qint(n).stretch(k)
}

/// `[2]_k = q^k + q^{-k}`; negative `k` gives the same value.
pub fn qtwo(k: i64) -> Laurent {
    let k = k.abs();
    if k == 0 {
        return Laurent::constant(2);
    }
    &Laurent::q(k) + &Laurent::q(-k)
}

pub fn qfact(n: i64) -> Laurent {
    let mut acc = Laurent::one();
    for i in 1..=n {
        acc = &acc * &qint(i);
    }
    acc
}

/// Balanced quantum binomial; zero outside `0 ≤ k ≤ n`.
pub fn qbinom(n: i64, k: i64) -> Laurent {
    if k < 0 || n < 0 || k > n {
        return Laurent::zero();
    }
    let k = k.min(n - k);
    gen_binom(n, k)
}

/// `∏_{j<t} [n − j] / [t]!`, defined for any integer `n` and `t ≥ 0`.
pub fn gen_binom(n: i64, t: i64) -> Laurent {
    if t < 0 {
        return Laurent::zero();
    }
    let mut num = Laurent::one();
    for j in 0..t {
        num = &num * &qint(n - j);
    }
    num.div_exact(&qfact(t)).expect("quantum binomial is a Laurent polynomial")
}

/// `[n, k]_{q^s}`.
pub fn qbinom_at(n: i64, k: i64, s: i64) -> Laurent {
    qbinom(n, k).stretch(s)
}

/// The devil's product `"[m][n]" = Σ_{i<m} (−1)^i [n + m − 2i − 1]`, symmetric by sorting.
pub fn devil(m: i64, n: i64) -> Laurent {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    let mut acc = Laurent::zero();
    for i in 0..m {
        let t = qint(n + m - 2 * i - 1);
        acc = if i % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// `d_i = ∏_{ℓ=1}^{i} (q^{2ℓ−1} + q^{1−2ℓ})`.
pub fn d_value(i: i64) -> Laurent {
    let mut acc = Laurent::one();
    for l in 1..=i {
        acc = &acc * &qtwo(2 * l - 1);
    }
    acc
}

pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `ρ_t^{(ℓ)}` for all `1 ≤ t ≤ ℓ + 1`, by unrolling the recurrence downward from `ρ_{ℓ+1} = 1`.
pub fn rho_all(l: i64) -> Vec<RatFunc> {
    assert!(l >= 1);
    let mut out = vec![RatFunc::zero(); (l + 2) as usize];
    out[(l + 1) as usize] = RatFunc::one();
    for t in (1..=l).rev() {
        let coeff = RatFunc::new(devil(l + 1 - t, l + t).shift(-2), devil(t, t));
        let next = &out[(t + 1) as usize];
        out[t as usize] = &RatFunc::from_int(sign(binom(l + 2 - t, 2))) + &(&coeff * next);
    }
    out
}

/// `ρ_1^{(ℓ)}`.
pub fn rho(l: i64) -> RatFunc {
    rho_all(l).swap_remove(1)
}

/// Partitions inside the `n × n` box, as weakly decreasing row lengths.
fn box_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for p in 0..=max {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn transpose(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    (0..n).map(|j| p.iter().filter(|&&r| r > j).count()).collect()
}

/// `Σ q^{2|λ|}` over self-transpose partitions in the `n × n` box, by enumeration.
pub fn selfconj_sum(n: usize) -> Laurent {
    let mut acc = Laurent::zero();
    for p in box_partitions(n) {
        if transpose(&p) == p {
            let size: usize = p.iter().sum();
            acc = &acc + &Laurent::q(2 * size as i64);
        }
    }
    if n == 0 {
        return Laurent::one();
    }
    acc
}

/// The sign-stripped unknot value `∏ (q^{2i−1} + q^{1−2i})` with the pivotal sign.
pub fn circle_value(n: i64) -> Laurent {
    d_value(n).scale(&Int::from(sign(binom(n + 1, 2))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().map(|&(e, k)| (2 * e, Int::from(k))))
    }

    #[test]
    fn qint_examples() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(2), p(&[(1, 1), (-1, 1)]));
        assert_eq!(qint(3), p(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn qtwo_examples() {
        assert_eq!(qtwo(0), Laurent::constant(2));
        assert_eq!(qtwo(1), qint(2));
        assert_eq!(qtwo(3), p(&[(3, 1), (-3, 1)]));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1), qint(2));
        assert_eq!(qbinom(4, 2), p(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        assert!(qbinom(3, 5).is_zero());
        // negative top: [-2, 2] = [3, 2]
        assert_eq!(gen_binom(-2, 2), qbinom(3, 2));
    }

    #[test]
    fn devil_examples() {
        assert_eq!(devil(3, 4), p(&[(5, 1), (1, 1), (-1, 1), (-5, 1)]));
        assert!(devil(0, 5).is_zero());
        for n in 1..8 {
            assert_eq!(devil(n, n), qint_at(n, 2));
        }
        assert_eq!(devil(4, 3), devil(3, 4));
    }

    #[test]
    fn d_value_examples() {
        assert!(d_value(0).is_one());
        assert_eq!(d_value(1), qint(2));
        assert_eq!(d_value(2), &qint(2) * &qtwo(3));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(1), RatFunc::q(-2));
        assert_eq!(rho(2), RatFunc::q(-6));
        assert_eq!(rho(5), RatFunc::q(-30));
    }

    #[test]
    fn selfconj_examples() {
        assert!(selfconj_sum(0).is_one());
        assert_eq!(selfconj_sum(1), p(&[(0, 1), (2, 1)]));
        assert_eq!(selfconj_sum(2), p(&[(0, 1), (2, 1), (6, 1), (8, 1)]));
    }
}
