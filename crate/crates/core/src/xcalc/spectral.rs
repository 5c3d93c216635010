//! Spectral idempotents of `X` on `S ⊗ S`, the normalized basis `I^{(i)}`, and rank computations.
//!
//! Summand `k = 0` is `V(2ϖ_n)`; summand `k ≥ 1` is `V_{n−k}`. The normalized element attached to
//! `V_{n−k}` is `I^{(n−k)} = (−1)^{C(k+1,2)} d_k Π_k`, and `I^{(n)}` is the identity.

use super::family::{x_eigenvalues, x_one, XFamily, XPoly};
use crate::qalg::{binom, d_value, devil, sign, Int, Laurent, RatFunc};
use crate::rep::linop::basis;
use crate::rep::{Factor, Key, LinOp, SVec};
use crate::report::Report;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

#[derive(Clone, Debug)]
pub struct SpectralFamily {
    pub n: usize,
    /// `Π_k`, `k = 0..=n`, indexed by summand as above.
    pub proj: Vec<LinOp>,
}

impl SpectralFamily {
    /// `I^{(i)}` for `0 ≤ i ≤ n`.
    pub fn i_elem(&self, i: usize) -> LinOp {
        let n = self.n;
        if i == n {
            return LinOp::identity(n, vec![Factor::S, Factor::S]);
        }
        let k = n - i;
        self.proj[k].scale(&RatFunc::from(i_norm(k)))
    }
}

/// `(−1)^{C(k+1,2)} d_k`, the scalar taking `Π_k` to `I^{(n−k)}`.
pub fn i_norm(k: usize) -> Laurent {
    d_value(k as i64).scale(&Int::from(sign(binom(k as i64 + 1, 2))))
}

/// Powers `X^0 ..= X^n`.
pub fn x_powers(n: usize) -> Vec<LinOp> {
    let x = x_one(n);
    let mut out = vec![LinOp::identity(n, vec![Factor::S, Factor::S])];
    for d in 1..=n {
        let next = out[d - 1].compose(&x).reduced();
        out.push(next);
    }
    out
}

pub fn eval_poly_op(p: &XPoly, powers: &[LinOp]) -> LinOp {
    let mut acc = LinOp::zero(powers[0].n, powers[0].dom.clone(), powers[0].cod.clone());
    for (d, c) in p.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&powers[d].scale(c));
        }
    }
    acc.reduced()
}

/// Lagrange basis polynomial for eigenvalue index `k`.
pub fn lagrange(eigs: &[Laurent], k: usize) -> XPoly {
    let mut p: XPoly = vec![RatFunc::one()];
    for (j, mu) in eigs.iter().enumerate() {
        if j == k {
            continue;
        }
        let denom = (&eigs[k] - mu).clone();
        let s = RatFunc::new(Laurent::one(), denom);
        let root = RatFunc::from(mu.clone());
        let mut next = vec![RatFunc::zero(); p.len() + 1];
        for (d, c) in p.iter().enumerate() {
            let cs = c * &s;
            next[d + 1] = &next[d + 1] + &cs;
            next[d] = &next[d] - &(&cs * &root);
        }
        p = next;
    }
    p
}

pub fn spectral_basis(n: usize) -> SpectralFamily {
    let powers = x_powers(n);
    let eigs = x_eigenvalues(n);
    let proj = (0..=n).map(|k| eval_poly_op(&lagrange(&eigs, k), &powers)).collect();
    SpectralFamily { n, proj }
}

/// Dense matrix of `op` specialized at `v = x`, or `None` if the denominator vanishes there.
fn specialize(op: &LinOp, x: &BigRational) -> Option<Vec<Vec<BigRational>>> {
    let d = op.den.eval(x);
    if d.is_zero() {
        return None;
    }
    let rows = basis(&op.cod, op.n);
    let cols = basis(&op.dom, op.n);
    let ri: std::collections::HashMap<Key, usize> = rows.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut m = vec![vec![BigRational::zero(); cols.len()]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        if let Some(col) = op.cols.get(c) {
            for (r, e) in col {
                m[ri[r]][j] = e.eval(x) / &d;
            }
        }
    }
    Some(m)
}

fn rank_dense(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in (r + 1)..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            for j in c..cols {
                let t = &m[r][j] * &f;
                m[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Rank over `ℚ(v)` by specialization at three seeded random rationals. Returns the common value,
/// or `Err` with all three if they disagree (which only happens on an unlucky point).
pub fn rank_specialized(op: &LinOp, seed: u64) -> Result<usize, Vec<usize>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut got = Vec::new();
    while got.len() < 3 {
        let p: i64 = rng.gen_range(2..60);
        let q: i64 = rng.gen_range(1..60);
        let x = BigRational::new(p.into(), q.into());
        if let Some(m) = specialize(op, &x) {
            got.push(rank_dense(m));
        }
    }
    if got.iter().all(|&r| r == got[0]) {
        Ok(got[0])
    } else {
        Err(got)
    }
}

/// Exact rank by fraction-free (Bareiss) elimination over `ℤ[v^{±1}]`.
pub fn rank_exact(op: &LinOp) -> usize {
    let rows = basis(&op.cod, op.n);
    let cols = basis(&op.dom, op.n);
    let ri: std::collections::HashMap<Key, usize> = rows.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut m = vec![vec![Laurent::zero(); cols.len()]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        if let Some(col) = op.cols.get(c) {
            for (r, e) in col {
                m[ri[r]][j] = e.clone();
            }
        }
    }
    let (nr, nc) = (rows.len(), cols.len());
    let mut prev = Laurent::one();
    let mut r = 0;
    for c in 0..nc {
        let Some(p) = (r..nr).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in (r + 1)..nr {
            for j in (c + 1)..nc {
                let t = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][c] = Laurent::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Expected rank of `Π_k`: `C(2n+1, n−k)` for `k ≥ 1`, and the residual for `k = 0`.
pub fn expected_rank(n: usize, k: usize) -> usize {
    if k >= 1 {
        return binom(2 * n as i64 + 1, (n - k) as i64) as usize;
    }
    let lower: i64 = (0..n as i64).map(|i| binom(2 * n as i64 + 1, i)).sum();
    (1usize << (2 * n)) - lower as usize
}

/// Closed form `λ(i, ℓ)` for the coefficient of `I^{(n−ℓ)}` in `X^{(i)}`.
pub fn lambda_closed(i: usize, l: usize) -> RatFunc {
    if l < i {
        return RatFunc::zero();
    }
    let mut acc = RatFunc::new(Laurent::constant(sign(binom((l - i + 1) as i64, 2))), d_value(l as i64));
    for t in 1..=i as i64 {
        let l = l as i64;
        acc = &acc * &RatFunc::new(devil(l + 1 - t, l + t), devil(t, t));
    }
    acc
}

/// Closed form `b_{n−ℓ}` of the braiding in the `I`-basis.
pub fn b_closed(n: usize, l: usize) -> RatFunc {
    let c = binom(l as i64 + 1, 2);
    let inner = &Laurent::q(-2 * c) - &Laurent::constant(sign(c));
    RatFunc::new(&Laurent::v(n as i64) * &inner, d_value(l as i64))
}

/// A nonzero vector in the image of `Π_k`, from its first nonzero column.
fn image_vector(p: &LinOp) -> SVec {
    p.cols
        .keys()
        .map(|k| p.column(*k))
        .find(|v| !v.is_zero())
        .expect("projector is nonzero")
}

/// Scalar by which `op` acts on `v`, assuming `v` is an eigenvector.
fn eigen_ratio(op: &LinOp, v: &SVec) -> Option<RatFunc> {
    let w = op.apply(v);
    let (k, c) = v.map.iter().next()?;
    let num = &RatFunc::new(w.map.get(k).cloned().unwrap_or_default(), w.den.clone());
    let r = num / &RatFunc::new(c.clone(), v.den.clone());
    w.same(&v.scale(&r)).then_some(r)
}

/// Projector algebra, ranks, `bigonschur`, `I^{(0)} = cup∘cap = X^{(n)}`, and the two
/// change-of-basis tables.
pub fn spectral_suite(fam: &XFamily, exact_rank: bool) -> Report {
    let n = fam.n;
    let sp = spectral_basis(n);
    let mut rep = Report::new();
    let id = LinOp::identity(n, vec![Factor::S, Factor::S]);
    let mut total = LinOp::zero(n, id.dom.clone(), id.cod.clone());
    for a in 0..=n {
        total = total.add(&sp.proj[a]);
        for b in 0..=n {
            let prod = sp.proj[a].compose(&sp.proj[b]);
            let ok = if a == b { prod.same(&sp.proj[a]) } else { prod.is_zero() };
            rep.push("projector-orthogonal", json!({"n": n, "a": a, "b": b}), ok, || format!("{:?}", prod.first_difference(&sp.proj[a])));
        }
    }
    rep.push("projector-sum", json!({"n": n}), total.same(&id), || format!("{:?}", total.first_difference(&id)));

    for i in 0..n {
        for j in 0..n {
            let lhs = sp.i_elem(i).compose(&sp.i_elem(j));
            let rhs = if i == j { sp.i_elem(i).scale(&RatFunc::from(i_norm(n - i))) } else { LinOp::zero(n, id.dom.clone(), id.cod.clone()) };
            let d = lhs.first_difference(&rhs);
            rep.push("bigonschur", json!({"n": n, "i": i, "j": j}), d.is_none(), || format!("{d:?}"));
        }
    }

    let cc = crate::rep::trivalent::cup_s(n).compose(&crate::rep::trivalent::cap_s(n));
    let i0 = sp.i_elem(0);
    let d = i0.first_difference(&cc);
    rep.push("I0-equals-cupcap", json!({"n": n}), d.is_none(), || format!("{d:?}"));
    let d = fam.x[n].first_difference(&i0);
    rep.push("Xn-equals-I0", json!({"n": n}), d.is_none(), || format!("{d:?}"));

    for k in 0..=n {
        let want = expected_rank(n, k);
        let label = if k == 0 { "V(2w_n)".to_string() } else { format!("V_{}", n - k) };
        let got = if exact_rank { Ok(rank_exact(&sp.proj[k])) } else { rank_specialized(&sp.proj[k], 0x5eed + k as u64) };
        let ok = got == Ok(want);
        rep.push("projector-rank", json!({"n": n, "summand": label, "expected": want, "exact": exact_rank}), ok, || format!("got {got:?}"));
    }

    // λ(i, ℓ): read off on an eigenvector of each summand, then check the full expansion.
    let vecs: Vec<SVec> = (0..=n).map(|k| image_vector(&sp.proj[k])).collect();
    for i in 0..=n {
        let mut expansion = LinOp::zero(n, id.dom.clone(), id.cod.clone());
        for l in 0..=n {
            let Some(eig) = eigen_ratio(&fam.x[i], &vecs[l]) else {
                rep.fail("lambda-coefficient", json!({"n": n, "i": i, "l": l}), "projector image is not an eigenvector".into());
                continue;
            };
            if l == 0 {
                // only X^{(0)} = id sees the top summand, through I^{(n)} = id
                let ok = if i == 0 { eig.is_one() } else { eig.is_zero() };
                rep.push("lambda-top", json!({"n": n, "i": i}), ok, || format!("{eig}"));
                if i == 0 {
                    expansion = expansion.add(&id);
                }
                continue;
            }
            if i == 0 {
                continue;
            }
            let lam = &eig / &RatFunc::from(i_norm(l));
            let want = lambda_closed(i, l);
            rep.push("lambda-coefficient", json!({"n": n, "i": i, "l": l}), lam == want, || format!("recovered {lam}, closed form {want}"));
            if l == i {
                rep.push("lambda-diagonal-one", json!({"n": n, "i": i}), lam.is_one(), || format!("{lam}"));
            }
            expansion = expansion.add(&sp.i_elem(n - l).scale(&lam));
        }
        let d = fam.x[i].first_difference(&expansion);
        rep.push("X-in-I-basis", json!({"n": n, "i": i}), d.is_none(), || format!("{d:?}"));
    }

    let r = super::family::braiding(fam, false);
    let mut expansion = id.scale(&RatFunc::v(n as i64));
    for l in 1..=n {
        let Some(eig) = eigen_ratio(&r, &vecs[l]) else {
            rep.fail("braid-coefficient", json!({"n": n, "l": l}), "not an eigenvector".into());
            continue;
        };
        let b = &(&eig - &RatFunc::v(n as i64)) / &RatFunc::from(i_norm(l));
        let want = b_closed(n, l);
        rep.push("braid-coefficient", json!({"n": n, "l": l}), b == want, || format!("recovered {b}, closed form {want}"));
        expansion = expansion.add(&sp.i_elem(n - l).scale(&b));
    }
    let d = r.first_difference(&expansion);
    rep.push("R-in-I-basis", json!({"n": n}), d.is_none(), || format!("{d:?}"));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_dimensions() {
        assert_eq!(expected_rank(1, 1), 1);
        assert_eq!(expected_rank(1, 0), 3);
        assert_eq!(expected_rank(2, 0), 10);
        assert_eq!(expected_rank(3, 0), 35);
    }

    #[test]
    fn lambda_diagonal_is_one() {
        for i in 1..=4 {
            assert!(lambda_closed(i, i).is_one(), "i = {i}");
        }
    }

    #[test]
    fn exact_and_specialized_rank_agree() {
        let sp = spectral_basis(2);
        for p in &sp.proj {
            assert_eq!(rank_specialized(p, 7), Ok(rank_exact(p)));
        }
    }

    #[test]
    fn suite_passes() {
        for n in 1..=3 {
            let fam = super::super::family::build_x(n);
            let r = spectral_suite(&fam, false);
            assert!(r.all_pass(), "{r}");
        }
    }
}
