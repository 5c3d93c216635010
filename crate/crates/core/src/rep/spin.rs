//! Generators of `U_q(so_{2n+1})` acting on `S` and `V₁`, coproducts, and
//! Lusztig's braid group operators.

use super::linop::{basis, get, Factor, Key, LinOp, SVec};
use crate::error::Error;
use crate::qalg::{qint, qint_at, Int, Laurent, RatFunc};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    Kinv(usize),
}

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::E(i) | Gen::F(i) | Gen::K(i) | Gen::Kinv(i) => i,
        }
    }

    /// All of `e_i, f_i, k_i, k_i^{-1}` for `1 ≤ i ≤ n`.
    pub fn all(n: usize) -> Vec<Gen> {
        (1..=n).flat_map(|i| [Gen::E(i), Gen::F(i), Gen::K(i), Gen::Kinv(i)]).collect()
    }
}

#[inline]
pub fn has(j: usize, i: usize) -> bool {
    (j >> (i - 1)) & 1 == 1
}

#[inline]
pub fn with(j: usize, i: usize) -> usize {
    j | (1 << (i - 1))
}

#[inline]
pub fn without(j: usize, i: usize) -> usize {
    j & !(1 << (i - 1))
}

pub fn full(n: usize) -> usize {
    (1 << n) - 1
}

/// `q^J = ∏_{j∈J} (−1)^{n−j+1} q^{2(n−j)+1}`.
pub fn q_subset(j: usize, n: usize) -> Laurent {
    let mut sign = 1i64;
    let mut e = 0i64;
    for t in 1..=n {
        if has(j, t) {
            if (n - t + 1) % 2 == 1 {
                sign = -sign;
            }
            e += 2 * (n - t) as i64 + 1;
        }
    }
    Laurent::monomial(sign, 2 * e)
}

/// Twice the weight of a basis vector, as integer coordinates.
pub fn weight2(f: Factor, x: usize, n: usize) -> Vec<i64> {
    match f {
        Factor::S => (1..=n).map(|i| if has(x, i) { -1 } else { 1 }).collect(),
        Factor::V => {
            let mut w = vec![0; n];
            if x < n {
                w[x] = 2;
            } else if x > n {
                w[2 * n - x] = -2;
            }
            w
        }
    }
}

/// Twice the weight of a tensor basis key.
pub fn key_weight2(sig: &[Factor], key: Key, n: usize) -> Vec<i64> {
    let mut w = vec![0; n];
    for (t, f) in sig.iter().enumerate() {
        for (a, b) in w.iter_mut().zip(weight2(*f, get(key, t), n)) {
            *a += b;
        }
    }
    w
}

/// `(α_i, μ)` for a doubled weight `w2 = 2μ`.
pub fn alpha_pair(i: usize, w2: &[i64]) -> i64 {
    let n = w2.len();
    if i < n {
        w2[i - 1] - w2[i]
    } else {
        w2[n - 1]
    }
}

/// `(α_i^∨, μ)`.
pub fn coroot_pair(i: usize, w2: &[i64]) -> i64 {
    let n = w2.len();
    if i < n {
        (w2[i - 1] - w2[i]) / 2
    } else {
        w2[n - 1]
    }
}

/// `q_i` as a `v`-exponent: `q^2` for short-index long roots, `q` for `i = n`.
pub fn qi_exp(i: usize, n: usize) -> i64 {
    if i < n {
        4
    } else {
        2
    }
}

fn check_index(i: usize, n: usize) -> Result<(), Error> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(())
}

fn v_index_a(i: usize) -> usize {
    i - 1
}

fn v_index_b(i: usize, n: usize) -> usize {
    2 * n + 1 - i
}

/// Matrix of a generator on a single factor.
pub fn gen_op(f: Factor, g: Gen, n: usize) -> Result<LinOp, Error> {
    check_index(g.index(), n)?;
    let sig = vec![f];
    let mut op = LinOp::zero(n, sig.clone(), sig.clone());
    match g {
        Gen::K(i) | Gen::Kinv(i) => {
            let s = if matches!(g, Gen::K(_)) { 1 } else { -1 };
            return Ok(LinOp::diagonal(n, sig, |k| {
                let w = weight2(f, k as usize, n);
                Laurent::v(2 * s * alpha_pair(i, &w))
            }));
        }
        _ => {}
    }
    match f {
        Factor::S => {
            for j in 0..(1usize << n) {
                let img = match g {
                    Gen::E(i) if i < n => (has(j, i) && !has(j, i + 1)).then(|| with(without(j, i), i + 1)),
                    Gen::E(i) => has(j, i).then(|| without(j, i)),
                    Gen::F(i) if i < n => (has(j, i + 1) && !has(j, i)).then(|| with(without(j, i + 1), i)),
                    Gen::F(i) => (!has(j, i)).then(|| with(j, i)),
                    _ => unreachable!(),
                };
                if let Some(t) = img {
                    op.insert(t as Key, j as Key, Laurent::one());
                }
            }
        }
        Factor::V => {
            let u = n;
            let two = qint(2);
            match g {
                Gen::E(i) if i < n => {
                    op.insert(v_index_a(i) as Key, v_index_a(i + 1) as Key, Laurent::one());
                    op.insert(v_index_b(i + 1, n) as Key, v_index_b(i, n) as Key, Laurent::one());
                }
                Gen::F(i) if i < n => {
                    op.insert(v_index_a(i + 1) as Key, v_index_a(i) as Key, Laurent::one());
                    op.insert(v_index_b(i, n) as Key, v_index_b(i + 1, n) as Key, Laurent::one());
                }
                Gen::E(_) => {
                    op.insert(u as Key, v_index_b(n, n) as Key, Laurent::one());
                    op.insert(v_index_a(n) as Key, u as Key, two);
                }
                Gen::F(_) => {
                    op.insert(u as Key, v_index_a(n) as Key, Laurent::one());
                    op.insert(v_index_b(n, n) as Key, u as Key, two);
                }
                _ => unreachable!(),
            }
        }
    }
    Ok(op)
}

/// Action of `Δ^{(m)}(g)` on a vector in a tensor product, with
/// `Δ(e) = e⊗k + 1⊗e`, `Δ(f) = f⊗1 + k^{-1}⊗f`, `Δ(k) = k⊗k`.
pub fn apply_coproduct(g: Gen, sig: &[Factor], n: usize, v: &SVec) -> SVec {
    let i = g.index();
    let kexp = |key: Key, range: std::ops::Range<usize>| -> i64 {
        range.map(|t| alpha_pair(i, &weight2(sig[t], get(key, t), n))).sum::<i64>()
    };
    let m = sig.len();
    match g {
        Gen::K(_) | Gen::Kinv(_) => {
            let s = if matches!(g, Gen::K(_)) { 1 } else { -1 };
            let map = v
                .map
                .iter()
                .map(|(k, c)| (*k, c.shift(2 * s * kexp(*k, 0..m))))
                .collect();
            SVec { den: v.den.clone(), map }
        }
        Gen::E(_) | Gen::F(_) => {
            let mut acc: BTreeMap<Key, Laurent> = BTreeMap::new();
            let ops: Vec<LinOp> = sig.iter().map(|f| gen_op(*f, g, n).expect("valid index")).collect();
            for (key, c) in &v.map {
                for t in 0..m {
                    let scale = match g {
                        Gen::E(_) => 2 * kexp(*key, t + 1..m),
                        _ => -2 * kexp(*key, 0..t),
                    };
                    let x = get(*key, t) as Key;
                    if let Some(col) = ops[t].cols.get(&x) {
                        for (y, a) in col {
                            let nk = super::linop::set(*key, t, *y as usize);
                            acc.entry(nk).or_default().add_mul(c, &a.shift(scale));
                        }
                    }
                }
            }
            acc.retain(|_, c| !c.is_zero());
            SVec { den: v.den.clone(), map: acc }
        }
    }
}

/// Check `op ∘ Δ(g) = Δ(g) ∘ op` for all generators on all basis vectors of the domain
/// (or on the supplied subset of keys). Returns the first failing generator and key.
pub fn intertwiner_failure(op: &LinOp, keys: Option<&[Key]>) -> Option<(Gen, Key)> {
    let n = op.n;
    let all;
    let keys = match keys {
        Some(k) => k,
        None => {
            all = basis(&op.dom, n);
            &all
        }
    };
    for g in Gen::all(n) {
        for &k in keys {
            let v = SVec::basis(k);
            let lhs = op.apply(&apply_coproduct(g, &op.dom, n, &v));
            let rhs = apply_coproduct(g, &op.cod, n, &op.apply(&v));
            if !lhs.same(&rhs) {
                return Some((g, k));
            }
        }
    }
    None
}

/// Lusztig's operator `T_i(v) = Σ_{b−a=(α_i^∨,μ)} (−q_i)^b e_i^{(a)} f_i^{(b)} v` on one factor.
pub fn lusztig_t(f: Factor, i: usize, n: usize) -> Result<LinOp, Error> {
    check_index(i, n)?;
    let e = gen_op(f, Gen::E(i), n)?;
    let fo = gen_op(f, Gen::F(i), n)?;
    let qe = qi_exp(i, n);
    let dim = f.dim(n);
    let mut out = LinOp::zero(n, vec![f], vec![f]);
    let mut dens = Vec::new();
    let mut cols: Vec<(Key, SVec)> = Vec::new();
    for x in 0..dim {
        let c = coroot_pair(i, &weight2(f, x, n));
        let mut total = SVec::zero();
        for a in 0..=dim as i64 {
            let b = a + c;
            if b < 0 {
                continue;
            }
            let mut v = SVec::basis(x as Key);
            for _ in 0..b {
                v = fo.apply(&v);
            }
            for _ in 0..a {
                v = e.apply(&v);
            }
            if v.is_zero() {
                continue;
            }
            // divided powers in q_i, sign (−q_i)^b
            let fact = |k: i64| (1..=k).fold(Laurent::one(), |acc, t| &acc * &qint_at(t, qe / 2));
            let den = &fact(a) * &fact(b);
            let sgn = if b % 2 == 0 { Int::ONE } else { Int::from(-1) };
            let coeff = RatFunc::new(Laurent::monomial(sgn, qe * b), den);
            total = &total + &v.scale(&coeff);
        }
        total.reduce();
        dens.push(total.den.clone());
        cols.push((x as Key, total));
    }
    for (x, v) in cols {
        for (k, c) in v.map {
            let r = RatFunc::new(c, v.den.clone());
            assert!(r.den().is_one(), "Lusztig operator has polynomial entries on minuscule factors");
            out.insert(k, x, r.num().clone());
        }
    }
    Ok(out)
}

/// `T_{w0}` via the reduced word `(s_1 s_2 ⋯ s_n)^n`, applied right to left.
pub fn lusztig_tw0(f: Factor, n: usize) -> LinOp {
    let ts: Vec<LinOp> = (1..=n).map(|i| lusztig_t(f, i, n).expect("valid index")).collect();
    let mut acc = LinOp::identity(n, vec![f]);
    for _ in 0..n {
        for t in &ts {
            acc = acc.compose(t);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(j: usize) -> Key {
        j as Key
    }

    #[test]
    fn spin_examples() {
        for n in 1..=3 {
            let f = gen_op(Factor::S, Gen::F(n), n).unwrap();
            let v = f.apply(&SVec::basis(0));
            assert!(v.same(&SVec::basis(key(1 << (n - 1)))));
            let k = gen_op(Factor::S, Gen::K(n), n).unwrap();
            assert!(k.apply(&SVec::basis(0)).same(&SVec::basis(0).scale_poly(&Laurent::q(1))));
        }
        let e1 = gen_op(Factor::S, Gen::E(1), 2).unwrap();
        assert!(e1.apply(&SVec::basis(0b10)).is_zero());
        assert!(gen_op(Factor::S, Gen::E(3), 2).is_err());
    }

    #[test]
    fn weights_and_q_subset() {
        assert_eq!(weight2(Factor::S, 0, 3), vec![1, 1, 1]);
        assert_eq!(weight2(Factor::S, 0b11, 2), vec![-1, -1]);
        assert_eq!(weight2(Factor::S, 0b01, 2), vec![-1, 1]);
        assert!(q_subset(0, 3).is_one());
        assert_eq!(q_subset(1 << 2, 3), Laurent::monomial(-1, 2));
        assert_eq!(q_subset(0b11, 2), Laurent::monomial(-1, 8));
    }

    #[test]
    fn v1_examples() {
        let n = 2;
        let f = gen_op(Factor::V, Gen::F(n), n).unwrap();
        assert!(f.apply(&SVec::basis(1)).same(&SVec::basis(2)));
        assert!(f.apply(&SVec::basis(2)).same(&SVec::basis(3).scale_poly(&qint(2))));
    }
}
