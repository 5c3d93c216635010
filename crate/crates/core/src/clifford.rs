//! Fock model of the `q`-Clifford algebra on `S`, and Wenzl's endomorphism `C` of `S ⊗ S`.
//!
//! `S` is identified with `Cl/I`, `I` the left ideal generated by the `ψ_i`, via
//! `ε_I ψ*_I ↦ x_I`. On the coset of `ψ*_I` (indices increasing):
//!
//! * `ψ*_i ψ*_I = (−1)^{#{j∈I : j<i}} ψ*_{I∪i}` when `i ∉ I`, else `0` since `(ψ*_i)² = 0`.
//! * `ψ_i ψ*_I = (−1)^{#{j∈I : j<i}} ψ*_{I∖i}` when `i ∈ I`: anticommute to `ψ*_i`, then
//!   `ψ_iψ*_i = 1 − ψ*_iψ_i` and the second term lies in `I`. When `i ∉ I`, `ψ_i` passes
//!   everything and dies in `I`.
//! * `ω_i ≡ ψ_iψ*_i + q^{-2}ψ*_iψ_i ≡ 1` on the vacuum, and `ω_iψ*_i = q^{-2}ψ*_iω_i`, so
//!   `ω_i` acts by `q^{−2[i∈I]}`.
//! * each factor `ψ_iψ*_i − ψ*_iψ_i = 1 − 2ψ*_iψ_i` of `f` is `∓1` by occupancy, so `f = (−1)^{|I|}`.

use crate::error::Error;
use crate::qalg::{qint, Laurent, RatFunc};
use crate::rep::spin::{has, with, without, Gen};
use crate::rep::{Factor, Key, LinOp};
use crate::report::Report;
use serde_json::json;

fn check(i: usize, n: usize) -> Result<(), Error> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(())
}

/// `ε_I = ∏_{i∈I} (−1)^{n−i+1}`.
pub fn eps(set: usize, n: usize) -> i64 {
    (1..=n).filter(|&i| has(set, i) && (n - i + 1) % 2 == 1).fold(1, |s, _| -s)
}

fn below(set: usize, i: usize) -> u32 {
    (set & ((1usize << (i - 1)) - 1)).count_ones()
}

fn sparse(n: usize, f: impl Fn(usize) -> Option<(usize, Laurent)>) -> LinOp {
    let mut op = LinOp::zero(n, vec![Factor::S], vec![Factor::S]);
    for x in 0..(1usize << n) {
        if let Some((y, c)) = f(x) {
            op.insert(y as Key, x as Key, c);
        }
    }
    op
}

/// Sign relating `ε_J ψ*_J` bookkeeping: an operator sending `ψ*_I ↦ s ψ*_J` sends `x_I ↦ ε_I ε_J s x_J`.
fn rebase(from: usize, to: usize, s: i64, n: usize) -> Laurent {
    Laurent::constant(eps(from, n) * eps(to, n) * s)
}

pub fn psi(i: usize, n: usize) -> Result<LinOp, Error> {
    check(i, n)?;
    Ok(sparse(n, |x| {
        has(x, i).then(|| {
            let s = if below(x, i) % 2 == 0 { 1 } else { -1 };
            let y = without(x, i);
            (y, rebase(x, y, s, n))
        })
    }))
}

pub fn psi_star(i: usize, n: usize) -> Result<LinOp, Error> {
    check(i, n)?;
    Ok(sparse(n, |x| {
        (!has(x, i)).then(|| {
            let s = if below(x, i) % 2 == 0 { 1 } else { -1 };
            let y = with(x, i);
            (y, rebase(x, y, s, n))
        })
    }))
}

/// `ω_i^{±1}` acting by `q^{∓2[i∈I]}`.
pub fn omega(i: usize, n: usize, inverse: bool) -> Result<LinOp, Error> {
    check(i, n)?;
    let s = if inverse { -1 } else { 1 };
    Ok(sparse(n, |x| Some((x, Laurent::q(if has(x, i) { -2 * s } else { 0 })))))
}

/// `Ω_k^{±1} = (ω_1 ⋯ ω_k)^{±1}`.
pub fn big_omega(k: usize, n: usize, inverse: bool) -> LinOp {
    let s = if inverse { -1 } else { 1 };
    sparse(n, |x| Some((x, Laurent::q(-2 * s * (x & ((1usize << k) - 1)).count_ones() as i64))))
}

/// The volume element `f`.
pub fn volume_f(n: usize) -> LinOp {
    sparse(n, |x| Some((x, Laurent::constant(if x.count_ones() % 2 == 0 { 1 } else { -1 }))))
}

/// Image of a quantum group generator under the map into the Clifford algebra.
pub fn qgrp_via_clifford(g: Gen, n: usize) -> Result<LinOp, Error> {
    let i = g.index();
    check(i, n)?;
    let f = volume_f(n);
    Ok(match g {
        Gen::E(i) if i < n => psi(i, n)?.compose(&psi_star(i + 1, n)?),
        Gen::F(i) if i < n => psi(i + 1, n)?.compose(&psi_star(i, n)?),
        Gen::K(i) if i < n => omega(i, n, false)?.compose(&omega(i + 1, n, true)?),
        Gen::Kinv(i) if i < n => omega(i, n, true)?.compose(&omega(i + 1, n, false)?),
        Gen::E(_) => psi(n, n)?.compose(&f),
        Gen::F(_) => f.compose(&psi_star(n, n)?),
        Gen::K(_) => omega(n, n, false)?.scale(&RatFunc::q(1)),
        Gen::Kinv(_) => omega(n, n, true)?.scale(&RatFunc::q(-1)),
    })
}

/// Wenzl's `C = (Ω_n f ⊗ Ω_n^{-1} f)/[2] + Σ_k (Ω_{k−1} ⊗ Ω_{k−1}^{-1})(ψ_k ⊗ ψ*_k + ψ*_k ⊗ ψ_k)`,
/// with `Cl ⊗ Cl` acting factorwise.
pub fn wenzl_c(n: usize) -> LinOp {
    let f = volume_f(n);
    let head = big_omega(n, n, false).compose(&f).tensor(&big_omega(n, n, true).compose(&f));
    let mut c = head.scale(&RatFunc::new(Laurent::one(), qint(2)));
    for k in 1..=n {
        let om = big_omega(k - 1, n, false).tensor(&big_omega(k - 1, n, true));
        let (p, ps) = (psi(k, n).unwrap(), psi_star(k, n).unwrap());
        let inner = p.tensor(&ps).add(&ps.tensor(&p));
        c = c.add(&om.compose(&inner));
    }
    c.reduced()
}

fn same_or(rep: &mut Report, id: &str, params: serde_json::Value, a: &LinOp, b: &LinOp) {
    let d = a.first_difference(b);
    rep.push(id, params, d.is_none(), || format!("first differing entry {d:?}"));
}

/// Clifford relations, the generator comparison with the spin action, and `C = H`.
pub fn clifford_suite(n: usize) -> Report {
    let mut rep = Report::new();
    let id = LinOp::identity(n, vec![Factor::S]);
    let zero = LinOp::zero(n, vec![Factor::S], vec![Factor::S]);
    let f = volume_f(n);
    let p = |i: usize, j: usize| json!({"n": n, "i": i, "j": j});
    let neg = RatFunc::from_int(-1);
    for i in 1..=n {
        let (a, s) = (psi(i, n).unwrap(), psi_star(i, n).unwrap());
        let (w, wi) = (omega(i, n, false).unwrap(), omega(i, n, true).unwrap());
        same_or(&mut rep, "psi-square", p(i, i), &a.compose(&a), &zero);
        same_or(&mut rep, "psistar-square", p(i, i), &s.compose(&s), &zero);
        same_or(&mut rep, "omega-inverse", p(i, i), &w.compose(&wi), &id);
        same_or(&mut rep, "omega-psi-conj", p(i, i), &w.compose(&a).compose(&wi), &a.scale(&RatFunc::q(2)));
        same_or(&mut rep, "omega-psistar-conj", p(i, i), &w.compose(&s).compose(&wi), &s.scale(&RatFunc::q(-2)));
        let l = a.compose(&s).add(&s.compose(&a).scale(&RatFunc::q(2)));
        same_or(&mut rep, "omega-inverse-relation", p(i, i), &l, &wi);
        let l = a.compose(&s).add(&s.compose(&a).scale(&RatFunc::q(-2)));
        same_or(&mut rep, "omega-relation", p(i, i), &l, &w);
        same_or(&mut rep, "omega-psi-absorb", p(i, i), &w.compose(&a), &a);
        same_or(&mut rep, "psistar-omega-absorb", p(i, i), &s.compose(&w), &s);
        same_or(&mut rep, "anticommutator", p(i, i), &a.compose(&s).add(&s.compose(&a)), &id);
        same_or(&mut rep, "f-psi", p(i, i), &a.compose(&f), &f.compose(&a).scale(&neg));
        same_or(&mut rep, "f-psistar", p(i, i), &s.compose(&f), &f.compose(&s).scale(&neg));
        same_or(&mut rep, "f-omega", p(i, i), &w.compose(&f), &f.compose(&w));
        for j in 1..=n {
            if i == j {
                continue;
            }
            let (b, t) = (psi(j, n).unwrap(), psi_star(j, n).unwrap());
            let wj = omega(j, n, false).unwrap();
            let wji = omega(j, n, true).unwrap();
            same_or(&mut rep, "psi-anticommute", p(i, j), &a.compose(&b), &b.compose(&a).scale(&neg));
            same_or(&mut rep, "psi-psistar-anticommute", p(i, j), &a.compose(&t), &t.compose(&a).scale(&neg));
            same_or(&mut rep, "psistar-anticommute", p(i, j), &s.compose(&t), &t.compose(&s).scale(&neg));
            same_or(&mut rep, "omega-commute", p(i, j), &w.compose(&wj), &wj.compose(&w));
            same_or(&mut rep, "omega-psi-far", p(i, j), &wj.compose(&a).compose(&wji), &a);
            same_or(&mut rep, "omega-psistar-far", p(i, j), &wj.compose(&s).compose(&wji), &s);
        }
    }
    let fsq = f.compose(&f);
    same_or(&mut rep, "f-square", json!({"n": n}), &fsq, &id);
    for g in Gen::all(n) {
        let a = qgrp_via_clifford(g, n).unwrap();
        let b = crate::rep::gen_op(Factor::S, g, n).unwrap();
        same_or(&mut rep, "clifford-action", json!({"n": n, "gen": format!("{g:?}")}), &a, &b);
    }
    let c = wenzl_c(n);
    let fail = crate::rep::spin::intertwiner_failure(&c, None);
    rep.push("C-intertwiner", json!({"n": n}), fail.is_none(), || format!("{fail:?}"));
    let v = c.column(0);
    let want = crate::rep::SVec::basis(0).scale(&RatFunc::new(Laurent::one(), qint(2)));
    rep.push("C-vacuum", json!({"n": n}), v.same(&want), || format!("{:?}", v.map));
    let h = crate::rep::trivalent::h_op(n);
    same_or(&mut rep, "C-equals-H", json!({"n": n}), &c, &h);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::SVec;

    #[test]
    fn vacuum_and_creation() {
        let n = 2;
        let w = omega(1, n, false).unwrap();
        assert!(w.apply(&SVec::basis(0)).same(&SVec::basis(0)));
        // ψ*_1 · vacuum = ψ*_{1} = ε_{1}^{-1} x_{1}
        let v = psi_star(1, n).unwrap().apply(&SVec::basis(0));
        assert!(v.same(&SVec::basis(1).scale_poly(&Laurent::constant(eps(1, n)))));
        assert_eq!(eps(1, 2), 1);
        assert_eq!(eps(0b10, 2), -1);
        let k = qgrp_via_clifford(Gen::K(n), n).unwrap();
        assert!(k.apply(&SVec::basis(0)).same(&SVec::basis(0).scale_poly(&Laurent::q(1))));
    }

    #[test]
    fn suite_passes() {
        for n in 1..=3 {
            let r = clifford_suite(n);
            assert!(r.all_pass(), "{r}");
        }
    }
}
