//! Verification routines for the representation layer, shared by unit tests and `verify rep`.

use super::linop::{apply_at, basis, Factor, Key, LinOp, SVec};
use super::spin::{
    coroot_pair, full, gen_op, intertwiner_failure, lusztig_t, lusztig_tw0, q_subset, qi_exp, weight2, Gen,
};
use super::trivalent::{cap_s, cap_v, circle_s, cup_s, cup_v, h_op, y1, y_highest};
use crate::qalg::{circle_value, qbinom_at, qint, Int, Laurent, RatFunc};
use crate::report::Report;
use serde_json::json;

/// `(α_i, α_j)` with `(ε_a, ε_b) = 2δ_{ab}`.
pub fn root_pair(i: usize, j: usize, n: usize) -> i64 {
    let root = |i: usize| -> Vec<i64> {
        let mut r = vec![0; n];
        r[i - 1] = 1;
        if i < n {
            r[i] = -1;
        }
        r
    };
    root(i).iter().zip(root(j)).map(|(a, b)| 2 * a * b).sum()
}

fn pow_op(op: &LinOp, k: usize) -> LinOp {
    let mut acc = LinOp::identity(op.n, op.dom.clone());
    for _ in 0..k {
        acc = acc.compose(op);
    }
    acc
}

fn factor_name(f: Factor) -> &'static str {
    match f {
        Factor::S => "S",
        Factor::V => "V1",
    }
}

/// Witness text for a pair of operators that should agree.
fn diff_witness(a: &LinOp, b: &LinOp) -> String {
    match a.first_difference(b) {
        Some((r, c)) => format!("entry (row {r:#x}, col {c:#x}): {} vs {}", a.entry(r, c), b.entry(r, c)),
        None => String::new(),
    }
}

/// All defining relations of the quantum group, as matrix identities on one factor.
pub fn qgroup_relations(f: Factor, n: usize) -> Report {
    let mut rep = Report::new();
    let g = |x: Gen| gen_op(f, x, n).expect("index in range");
    let id = LinOp::identity(n, vec![f]);
    let p = |i: usize, j: usize| json!({"rep": factor_name(f), "n": n, "i": i, "j": j});
    for i in 1..=n {
        let (e, fi, k, ki) = (g(Gen::E(i)), g(Gen::F(i)), g(Gen::K(i)), g(Gen::Kinv(i)));
        let a = k.compose(&ki);
        rep.push("k-inverse", p(i, i), a.same(&id), || diff_witness(&a, &id));
        let qi = qi_exp(i, n);
        // [e_i, f_i] = (k − k^{-1}) / (q_i − q_i^{-1})
        let lhs = e.compose(&fi).sub(&fi.compose(&e));
        let rhs = k.sub(&ki).scale(&RatFunc::new(Laurent::one(), &Laurent::v(qi) - &Laurent::v(-qi)));
        rep.push("ef-commutator", p(i, i), lhs.same(&rhs), || diff_witness(&lhs, &rhs));
        for j in 1..=n {
            let (ej, fj, kj) = (g(Gen::E(j)), g(Gen::F(j)), g(Gen::K(j)));
            let kk = k.compose(&kj);
            let kk2 = kj.compose(&k);
            rep.push("k-commute", p(i, j), kk.same(&kk2), || diff_witness(&kk, &kk2));
            let c = root_pair(i, j, n);
            let l = k.compose(&ej);
            let r = ej.compose(&k).scale(&RatFunc::q(c));
            rep.push("k-e", p(i, j), l.same(&r), || diff_witness(&l, &r));
            let l = k.compose(&fj);
            let r = fj.compose(&k).scale(&RatFunc::q(-c));
            rep.push("k-f", p(i, j), l.same(&r), || diff_witness(&l, &r));
            if i == j {
                continue;
            }
            let l = e.compose(&fj);
            let r = fj.compose(&e);
            rep.push("e-f-distinct", p(i, j), l.same(&r), || diff_witness(&l, &r));
            // Σ_s (−1)^s [1−a, s]_{q_i} x_i^{1−a−s} x_j x_i^s = 0
            let aij = 2 * c / root_pair(i, i, n);
            let top = (1 - aij) as usize;
            for (name, xi, xj) in [("serre-e", &e, &ej), ("serre-f", &fi, &fj)] {
                let mut acc = LinOp::zero(n, vec![f], vec![f]);
                for s in 0..=top {
                    let coeff = qbinom_at(top as i64, s as i64, qi / 2);
                    let coeff = if s % 2 == 1 { -coeff } else { coeff };
                    let term = pow_op(xi, top - s).compose(xj).compose(&pow_op(xi, s));
                    acc = acc.add(&term.scale(&RatFunc::from(coeff)));
                }
                rep.push(name, p(i, j), acc.is_zero(), || format!("nonzero column {:?}", acc.cols.keys().next()));
            }
        }
    }
    rep
}

/// Checks that `T` is a monomial matrix with unit entries, i.e. visibly invertible.
fn is_unit_monomial(op: &LinOp) -> bool {
    let mut rows = std::collections::BTreeSet::new();
    let dim = basis(&op.dom, op.n).len();
    op.den.is_monomial()
        && op.cols.len() == dim
        && op.cols.values().all(|c| {
            c.len() == 1 && {
                let (r, x) = c.iter().next().unwrap();
                rows.insert(*r) && x.is_monomial() && x.leading().abs() == Int::ONE
            }
        })
}

/// Lusztig operators: weight shift, invertibility, trichotomy on `S`, braid relations, and `T_{w0}`.
pub fn lusztig_checks(n: usize) -> Report {
    let mut rep = Report::new();
    for f in [Factor::S, Factor::V] {
        for i in 1..=n {
            let t = lusztig_t(f, i, n).expect("index in range");
            let p = json!({"rep": factor_name(f), "n": n, "i": i});
            rep.push("T-invertible", p.clone(), is_unit_monomial(&t), || "not a unit monomial matrix".into());
            let mut bad = None;
            for (x, col) in &t.cols {
                let mut w = weight2(f, *x as usize, n);
                let c = coroot_pair(i, &w);
                // s_i μ = μ − (α_i^∨, μ) α_i
                if i < n {
                    w[i - 1] -= 2 * c;
                    w[i] += 2 * c;
                } else {
                    w[n - 1] -= 2 * c;
                }
                for r in col.keys() {
                    if weight2(f, *r as usize, n) != w {
                        bad = Some((*x, *r));
                    }
                }
            }
            rep.push("T-weight", p.clone(), bad.is_none(), || format!("{bad:?}"));
            if f == Factor::S {
                let e = gen_op(f, Gen::E(i), n).unwrap();
                let fo = gen_op(f, Gen::F(i), n).unwrap();
                let mut ok = true;
                for x in 0..(1usize << n) {
                    let v = SVec::basis(x as Key);
                    let c = coroot_pair(i, &weight2(f, x, n));
                    let want = match c {
                        1 => fo.apply(&v).scale_poly(&Laurent::monomial(-1, qi_exp(i, n))),
                        -1 => e.apply(&v),
                        _ => v.clone(),
                    };
                    ok &= t.apply(&v).same(&want);
                }
                rep.push("T-trichotomy", p, ok, || "mismatch".into());
            }
        }
        let ts: Vec<LinOp> = (1..=n).map(|i| lusztig_t(f, i, n).unwrap()).collect();
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (&ts[i - 1], &ts[j - 1]);
                let len = if j > i + 1 {
                    2
                } else if j == n {
                    4
                } else {
                    3
                };
                let word = |x: &LinOp, y: &LinOp| {
                    let mut acc = LinOp::identity(n, vec![f]);
                    for s in 0..len {
                        acc = acc.compose(if s % 2 == 0 { x } else { y });
                    }
                    acc
                };
                let l = word(a, b);
                let r = word(b, a);
                rep.push(
                    "T-braid",
                    json!({"rep": factor_name(f), "n": n, "i": i, "j": j}),
                    l.same(&r),
                    || diff_witness(&l, &r),
                );
            }
        }
    }
    let tw0 = lusztig_tw0(Factor::S, n);
    for i in 0..=n {
        let low = (1usize << i) - 1;
        let top = full(n) ^ low;
        let got = tw0.apply(&SVec::basis(low as Key));
        let want = SVec::basis(top as Key).scale_poly(&q_subset(top, n));
        rep.push("T-w0", json!({"n": n, "i": i}), got.same(&want), || format!("{:?}", got.map));
    }
    rep
}

/// `[2]·H − [2]·λ` for an eigenvalue `λ` given as `[2]λ`.
fn shifted(h2: &LinOp, lam2: &Laurent) -> LinOp {
    let id = LinOp::identity(h2.n, h2.dom.clone());
    h2.sub(&id.scale(&RatFunc::from(lam2.clone())))
}

/// `[2]·(eigenvalues of H)`: `1` on the symmetric top summand, then `(−1)^{n−i}[2(n−i)+1]`.
pub fn h_eigen_scaled(n: usize) -> Vec<Laurent> {
    let mut out = vec![Laurent::one()];
    for i in 0..n {
        let s = if (n - i) % 2 == 0 { 1 } else { -1 };
        out.push(qint(2 * (n - i) as i64 + 1).scale(&Int::from(s)));
    }
    out
}

/// Product of `(A − λ)` over the given roots, skipping index `skip`.
pub fn root_product(a: &LinOp, roots: &[Laurent], skip: Option<usize>) -> LinOp {
    let mut acc = LinOp::identity(a.n, a.dom.clone());
    for (t, r) in roots.iter().enumerate() {
        if Some(t) != skip {
            acc = acc.compose(&shifted(a, r)).reduced();
        }
    }
    acc
}

/// The battery for one `n`: group relations, Lusztig operators, cups and caps, `Y₁`, `H`.
pub fn rep_suite(n: usize) -> Report {
    let mut rep = qgroup_relations(Factor::S, n);
    rep.extend(qgroup_relations(Factor::V, n));
    rep.extend(lusztig_checks(n));
    let p = json!({"n": n});
    for (name, op) in [("cup-S", cup_s(n)), ("cap-S", cap_s(n)), ("cup-V1", cup_v(n)), ("cap-V1", cap_v(n))] {
        let fail = intertwiner_failure(&op, None);
        rep.push(&format!("intertwiner-{name}"), p.clone(), fail.is_none(), || format!("{fail:?}"));
    }
    let mut snake = true;
    for k in basis(&[Factor::S], n) {
        let v = SVec::basis(k);
        snake &= apply_at(&cap_s(n), 0, &apply_at(&cup_s(n), 1, &v)).same(&v);
        snake &= apply_at(&cap_s(n), 1, &apply_at(&cup_s(n), 0, &v)).same(&v);
    }
    rep.push("snake-S", p.clone(), snake, || "snake identity fails".into());
    let circ = circle_s(n);
    let want = RatFunc::from(circle_value(n as i64));
    rep.push("circle-S", p.clone(), circ == want, || format!("{circ}"));
    let y = y1(n);
    let fail = intertwiner_failure(&y, None);
    rep.push("intertwiner-Y1", p.clone(), fail.is_none(), || format!("{fail:?}"));
    let top = y.apply(&SVec::basis(0));
    rep.push("Y1-highest", p.clone(), top.same(&y_highest(1, n)), || "image of a_1".into());
    let h = h_op(n);
    let fail = intertwiner_failure(&h, None);
    rep.push("intertwiner-H", p.clone(), fail.is_none(), || format!("{fail:?}"));
    let eig = h_eigen_scaled(n);
    let h2 = h.scale(&RatFunc::from(qint(2))).reduced();
    let cup = cup_s(n);
    let hc = h2.compose(&cup);
    let ok = hc.same(&cup.scale(&RatFunc::from(eig[1].clone())));
    rep.push("H-cup", p.clone(), ok, || diff_witness(&hc, &cup));
    let yv = y_highest(1, n);
    // for n = 1 the image of Y₁ is the top summand
    let lam = if n == 1 { &eig[0] } else { &eig[2] };
    let ok = h2.apply(&yv).same(&yv.scale_poly(lam));
    rep.push("H-Y1", p.clone(), ok, || "eigenvalue on Y1".into());
    let full = root_product(&h2, &eig, None);
    rep.push("H-minpoly", p.clone(), full.is_zero(), || "product of eigen-factors is nonzero".into());
    for t in 0..eig.len() {
        let part = root_product(&h2, &eig, Some(t));
        rep.push("H-minpoly-proper", json!({"n": n, "dropped": t}), !part.is_zero(), || {
            "a proper sub-product already vanishes".into()
        });
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for n in 1..=3 {
            let r = rep_suite(n);
            assert!(r.all_pass(), "{}", r);
        }
    }
}
