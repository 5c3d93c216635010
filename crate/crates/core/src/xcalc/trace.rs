//! Quantum traces on `S^{⊗m}` through the pivotal weight of each basis key.
//!
//! Closing a strand with `cup`/`cap` contributes `q^{J^c}/q^J` for the subset `J` on that strand.
//! This equals `(−1)^{C(n+1,2)} q^{Σ_j (2(n−j)+1) w_j}` with `w_j = ±1` the doubled weight, so the
//! trace of an intertwiner only needs its diagonal on dominant weight blocks, weighted by the
//! orbit sum of the pivotal character.

use crate::qalg::{Laurent, RatFunc};
use crate::rep::linop::{basis, get};
use crate::rep::spin::key_weight2;
use crate::rep::{Factor, Key, LinOp, SVec};
use std::collections::{BTreeMap, BTreeSet};

fn sign_n(n: usize) -> i64 {
    if (n * (n + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `v`-exponent of the pivotal character on a doubled weight.
fn pivot_exp(w2: &[i64]) -> i64 {
    let n = w2.len();
    w2.iter().enumerate().map(|(j, w)| 2 * (2 * (n - j - 1) as i64 + 1) * w).sum()
}

/// Pivotal weight of a key of `S^{⊗m}`.
pub fn pivot_weight(key: Key, m: usize, n: usize) -> Laurent {
    let w = key_weight2(&vec![Factor::S; m], key, n);
    let s = if m % 2 == 1 { sign_n(n) } else { 1 };
    Laurent::monomial(s, pivot_exp(&w))
}

/// `Tr_q(W) = Σ_k w(k) W_{kk}` for any operator on `S^{⊗m}`.
pub fn qtrace(w: &LinOp) -> RatFunc {
    let m = w.dom.len();
    let mut acc = Laurent::zero();
    for (k, col) in &w.cols {
        if let Some(c) = col.get(k) {
            acc.add_mul(c, &pivot_weight(*k, m, w.n));
        }
    }
    RatFunc::new(acc, w.den.clone())
}

/// Partial trace closing the last strand: `(id ⊗ cap)(W ⊗ id)(id ⊗ cup)`.
pub fn ptrace(w: &LinOp) -> LinOp {
    let m = w.dom.len();
    let n = w.n;
    let sig = vec![Factor::S; m - 1];
    let mut out = LinOp::zero(n, sig.clone(), sig);
    out.den = w.den.clone();
    let mask: Key = if m == 1 { 0 } else { (1u64 << (8 * (m - 1))) - 1 };
    for (k, col) in &w.cols {
        let last = get(*k, m - 1);
        for (r, c) in col {
            if get(*r, m - 1) == last {
                let wt = pivot_weight(last as Key, 1, n);
                out.insert(r & mask, k & mask, c * &wt);
            }
        }
    }
    out
}

/// Dominant doubled weights of `S^{⊗m}` and, for each, its keys.
pub fn dominant_blocks(m: usize, n: usize) -> BTreeMap<Vec<i64>, Vec<Key>> {
    let mut out: BTreeMap<Vec<i64>, Vec<Key>> = BTreeMap::new();
    let sig = vec![Factor::S; m];
    for k in basis(&sig, n) {
        let w = key_weight2(&sig, k, n);
        if is_dominant(&w) {
            out.entry(w).or_default().push(k);
        }
    }
    out
}

pub fn is_dominant(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1]) && w.last().map_or(true, |&x| x >= 0)
}

/// `Σ_{ν ∈ W·μ} q^{(2ρ, ν)}` in `v`-units, over signed permutations.
pub fn orbit_sum(mu: &[i64]) -> Laurent {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let n = mu.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = Laurent::zero();
    loop {
        for signs in 0..(1u32 << n) {
            let v: Vec<i64> =
                (0..n).map(|j| if signs >> j & 1 == 1 { -mu[perm[j]] } else { mu[perm[j]] }).collect();
            if seen.insert(v.clone()) {
                acc = &acc + &Laurent::v(pivot_exp(&v));
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Quantum trace of an intertwiner given only by its action on vectors:
/// `(±1)^m Σ_{μ dominant} tr(W|_μ) · orbit_sum(μ)`.
pub fn qtrace_dominant(m: usize, n: usize, mut apply: impl FnMut(Key) -> SVec) -> RatFunc {
    let s = if m % 2 == 1 { sign_n(n) } else { 1 };
    let mut total = RatFunc::zero();
    for (mu, keys) in dominant_blocks(m, n) {
        let mut diag = RatFunc::zero();
        for k in keys {
            let v = apply(k);
            if let Some(c) = v.map.get(&k) {
                diag = &diag + &RatFunc::new(c.clone(), v.den.clone());
            }
        }
        if !diag.is_zero() {
            total = &total + &(&diag * &RatFunc::from(orbit_sum(&mu)));
        }
    }
    if s < 0 {
        -total
    } else {
        total
    }
}

/// Trace of an operator whose columns are given, restricted to dominant blocks (intertwiners only).
pub fn qtrace_intertwiner(w: &LinOp) -> RatFunc {
    let m = w.dom.len();
    qtrace_dominant(m, w.n, |k| w.column(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::circle_value;
    use crate::rep::apply_at;
    use crate::rep::trivalent::{cap_s, cup_s};

    #[test]
    fn identity_traces() {
        for n in 1..=3 {
            let c = RatFunc::from(circle_value(n as i64));
            for m in 1..=2 {
                let id = LinOp::identity(n, vec![Factor::S; m]);
                let want = (0..m).fold(RatFunc::one(), |a, _| &a * &c);
                assert_eq!(qtrace(&id), want);
                assert_eq!(qtrace_intertwiner(&id), want);
            }
        }
    }

    #[test]
    fn ptrace_matches_cup_cap() {
        let n = 2;
        let x = crate::xcalc::family::x_one(n);
        let p = ptrace(&x);
        for k in basis(&[Factor::S], n) {
            let v = SVec::basis(k);
            let v2 = apply_at(&cup_s(n), 1, &v);
            let v3 = apply_at(&x, 0, &v2);
            let v4 = apply_at(&cap_s(n), 1, &v3);
            assert!(v4.same(&p.column(k)));
        }
    }
}
