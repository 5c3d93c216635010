//! Cups, caps, the trivalent vertex `Y₁ : V₁ → S⊗S`, and the intertwiner `H`.

use super::linop::{apply_at, basis, pack, Factor, Key, LinOp, SVec};
use super::spin::{full, has, q_subset};
use crate::qalg::{qint, Laurent, RatFunc};

/// `cup_n(1) = Σ_I q^I x_{I^c} ⊗ x_I`.
pub fn cup_s(n: usize) -> LinOp {
    let mut op = LinOp::zero(n, vec![], vec![Factor::S, Factor::S]);
    for i in 0..(1usize << n) {
        op.insert(pack(&[full(n) ^ i, i]), 0, q_subset(i, n));
    }
    op
}

/// `cap_n(x_I ⊗ x_J) = q^{-I} δ_{J, I^c}`.
pub fn cap_s(n: usize) -> LinOp {
    let mut op = LinOp::zero(n, vec![Factor::S, Factor::S], vec![]);
    // q^{-I} = ±v^{-e}; store as Laurent (monomials are units)
    for i in 0..(1usize << n) {
        let qi = q_subset(i, n);
        let inv = Laurent::monomial(qi.trailing().clone(), -qi.low());
        op.insert(0, pack(&[i, full(n) ^ i]), inv);
    }
    op
}

/// `(−q^{-2})^k` as a Laurent monomial.
fn neg_qm2(k: i64) -> Laurent {
    let s = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    Laurent::monomial(s, -4 * k)
}

/// `a_i ↦ (−q^{-2})^{i−1} b_i^*`, `u ↦ (−q^{-2})^n [2] u^*`, `b_i ↦ −(−q^{-2})^{2n−i} a_i^*`,
/// returned as the pairing value `φ₁(x)(y)` for the unique nonzero partner `y` of `x`.
pub fn phi1_pairs(n: usize) -> Vec<(usize, usize, Laurent)> {
    let mut out = Vec::new();
    let ni = n as i64;
    for i in 1..=n {
        let a = i - 1;
        let b = 2 * n + 1 - i;
        out.push((a, b, neg_qm2(i as i64 - 1)));
        out.push((b, a, -neg_qm2(2 * ni - i as i64)));
    }
    out.push((n, n, &neg_qm2(ni) * &qint(2)));
    out
}

/// The isomorphism `φ₁ : V₁ → V₁^*` as a matrix `e_x ↦ Σ φ₁(x)(y) e_y^*`.
pub fn phi1(n: usize) -> LinOp {
    let mut op = LinOp::zero(n, vec![Factor::V], vec![Factor::V]);
    for (x, y, c) in phi1_pairs(n) {
        op.insert(y as Key, x as Key, c);
    }
    op
}

pub fn phi1_inv(n: usize) -> LinOp {
    let mut op = LinOp::zero(n, vec![Factor::V], vec![Factor::V]);
    let mut den = Laurent::one();
    let pairs = phi1_pairs(n);
    for (_, _, c) in &pairs {
        den = &den * c;
    }
    op.den = den.clone();
    for (x, y, c) in pairs {
        op.insert(x as Key, y as Key, den.div_exact(&c).expect("product divisible by factor"));
    }
    op.reduced()
}

/// `cap_1(v ⊗ w) = φ₁(v)(w)`.
pub fn cap_v(n: usize) -> LinOp {
    let mut op = LinOp::zero(n, vec![Factor::V, Factor::V], vec![]);
    for (x, y, c) in phi1_pairs(n) {
        op.insert(0, pack(&[x, y]), c);
    }
    op
}

/// `cup_1(1) = Σ_v v ⊗ φ₁^{-1}(v^*)`.
pub fn cup_v(n: usize) -> LinOp {
    let inv = phi1_inv(n);
    let mut op = LinOp::zero(n, vec![], vec![Factor::V, Factor::V]);
    op.den = inv.den.clone();
    for v in 0..(2 * n + 1) {
        // φ₁^{-1}(v^*) is column v of the inverse matrix
        if let Some(col) = inv.cols.get(&(v as Key)) {
            for (w, c) in col {
                op.insert(pack(&[v, *w as usize]), 0, c.clone());
            }
        }
    }
    op
}

/// Order-preserving bijection `{2..n} → {1..n} ∖ {ℓ}`.
fn sigma(l: usize, t: usize) -> usize {
    if t <= l {
        t - 1
    } else {
        t
    }
}

fn sigma_set(l: usize, set: usize, n: usize) -> usize {
    let mut out = 0;
    for t in 2..=n {
        if has(set, t) {
            out |= 1 << (sigma(l, t) - 1);
        }
    }
    out
}

/// The trivalent vertex `Y₁ : V₁ → S ⊗ S`.
pub fn y1(n: usize) -> LinOp {
    let mut op = LinOp::zero(n, vec![Factor::V], vec![Factor::S, Factor::S]);
    op.den = Laurent::v(2);
    let rest = full(n) & !1; // {2..n}
    let subsets: Vec<usize> = (0..(1usize << n)).filter(|i| i & 1 == 0).collect();
    for l in 1..=n {
        let bit = 1usize << (l - 1);
        for &i in &subsets {
            let c = q_subset(i, n).shift(2);
            let left = sigma_set(l, rest ^ i, n);
            let right = sigma_set(l, i, n);
            op.insert(pack(&[left, right]), (l - 1) as Key, c.clone());
            op.insert(pack(&[left | bit, right | bit]), (2 * n + 1 - l) as Key, c);
        }
    }
    let nb = 1usize << (n - 1);
    for &i in &subsets {
        let c = q_subset(i, n);
        let left = sigma_set(n, rest ^ i, n);
        let right = sigma_set(n, i, n);
        op.insert(pack(&[left | nb, right]), n as Key, c.shift(2));
        op.insert(pack(&[left, right | nb]), n as Key, c);
    }
    op.reduced()
}

/// `H = (cap_n ⊗ id ⊗ id ⊗ cap_n) ∘ (id ⊗ Y₁ ⊗ Y₁ ⊗ id) ∘ (id ⊗ cup_1 ⊗ id)` on `S ⊗ S`.
pub fn h_op(n: usize) -> LinOp {
    let cupv = cup_v(n);
    let y = y1(n);
    let cap = cap_s(n);
    let sig = vec![Factor::S, Factor::S];
    let mut op = LinOp::zero(n, sig.clone(), sig.clone());
    let mut cols: Vec<(Key, SVec)> = Vec::new();
    for k in basis(&sig, n) {
        let v = SVec::basis(k);
        let v = apply_at(&cupv, 1, &v); // S V V S
        let v = apply_at(&y, 2, &v); // S V S S S
        let v = apply_at(&y, 1, &v); // S S S S S S
        let v = apply_at(&cap, 4, &v); // S S S S
        let v = apply_at(&cap, 0, &v); // S S
        cols.push((k, v));
    }
    op.den = cols[0].1.den.clone();
    for (k, v) in cols {
        debug_assert!(v.den == op.den);
        if !v.is_zero() {
            op.cols.insert(k, v.map);
        }
    }
    op.reduced()
}

/// The image `Y_i(v_i^+) = Σ_{I ⊔ J = {i+1..n}} q^J x_I ⊗ x_J` of the highest weight vector.
pub fn y_highest(i: usize, n: usize) -> SVec {
    let top = full(n) & !((1usize << i) - 1);
    let mut v = SVec::zero();
    for j in 0..(1usize << n) {
        if j & !top != 0 {
            continue;
        }
        v.map.insert(pack(&[top ^ j, j]), q_subset(j, n));
    }
    v
}

/// `cap ∘ cup` on `S`.
pub fn circle_s(n: usize) -> RatFunc {
    let v = apply_at(&cap_s(n), 0, &apply_at(&cup_s(n), 0, &SVec::basis(0)));
    v.get(0)
}

pub fn circle_v(n: usize) -> RatFunc {
    let v = apply_at(&cap_v(n), 0, &apply_at(&cup_v(n), 0, &SVec::basis(0)));
    v.get(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{circle_value, Int, RatFunc};
    use crate::rep::spin::intertwiner_failure;

    #[test]
    fn snakes_and_circle() {
        for n in 1..=3 {
            let id = LinOp::identity(n, vec![Factor::S]);
            for k in basis(&[Factor::S], n) {
                let v = SVec::basis(k);
                let a = apply_at(&cap_s(n), 0, &apply_at(&cup_s(n), 1, &v));
                let b = apply_at(&cap_s(n), 1, &apply_at(&cup_s(n), 0, &v));
                assert!(a.same(&id.column(k)));
                assert!(b.same(&id.column(k)));
            }
            assert_eq!(circle_s(n), RatFunc::from(circle_value(n as i64)));
        }
        assert_eq!(circle_s(1), RatFunc::from(-qint(2)));
    }

    #[test]
    fn v1_cup_cap() {
        for n in 1..=3 {
            // quantum dimension of V₁: the character at q^{2ρ}
            let mut qdim = Laurent::one();
            for i in 1..=n as i64 {
                qdim = &qdim + &crate::qalg::qtwo(4 * i - 2);
            }
            assert_eq!(circle_v(n), RatFunc::from(qdim));
            for k in 0..(2 * n + 1) {
                let v = SVec::basis(k as Key);
                let a = apply_at(&cap_v(n), 0, &apply_at(&cup_v(n), 1, &v));
                let b = apply_at(&cap_v(n), 1, &apply_at(&cup_v(n), 0, &v));
                assert!(a.same(&v));
                assert!(b.same(&v));
            }
            assert!(intertwiner_failure(&cup_v(n), None).is_none());
            assert!(intertwiner_failure(&cap_v(n), None).is_none());
            assert!(phi1(n).compose(&phi1_inv(n)).same(&LinOp::identity(n, vec![Factor::V])));
        }
        // φ₁(a₁) = b₁^*
        let p = phi1(2);
        assert_eq!(p.entry(4, 0), RatFunc::one());
    }

    #[test]
    fn h_eigen_relations() {
        for n in 1..=3 {
            let h = h_op(n);
            assert!(intertwiner_failure(&h, None).is_none());
            let cup = cup_s(n);
            let hc = h.compose(&cup);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let lam0 = RatFunc::new(qint(2 * n as i64 + 1).scale(&Int::from(sign)), qint(2));
            assert!(hc.same(&cup.scale(&lam0)), "n = {n}");
            let yv = y_highest(1, n);
            let lam1 = RatFunc::new(qint(2 * n as i64 - 1).scale(&Int::from(-sign)), qint(2));
            assert!(h.apply(&yv).same(&yv.scale(&lam1)), "n = {n}");
        }
    }

    #[test]
    fn spin_cup_cap_intertwine() {
        for n in 1..=3 {
            assert!(intertwiner_failure(&cup_s(n), None).is_none());
            assert!(intertwiner_failure(&cap_s(n), None).is_none());
        }
    }

    #[test]
    fn y1_intertwines() {
        for n in 1..=3 {
            assert_eq!(intertwiner_failure(&y1(n), None), None, "n = {n}");
            let top = y1(n).apply(&SVec::basis(0));
            assert!(top.same(&y_highest(1, n)));
        }
    }
}
