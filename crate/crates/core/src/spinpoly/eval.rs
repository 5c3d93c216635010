//! Spin-colored link polynomial of a braid closure, through the matrix route.

use super::braid::BraidWord;
use crate::qalg::{binom, sign, GradedScalar, Laurent, RatFunc};
use crate::rep::{LinOp, SVec};
use crate::report::Report;
use crate::xcalc::family::{braiding, build_x, nu, XFamily};
use crate::xcalc::relations::apply_word;
use crate::xcalc::trace::qtrace_dominant;
use serde_json::json;
use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `Tr_q(R(β))`, a framed invariant.
    Raw,
    /// `ν^{−ε(β)} · raw`.
    Unframed,
    /// `(−1)^{nε+m·C(n+1,2)} q^{−nε/2} · raw`.
    Intro,
}

impl FromStr for Normalization {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raw" => Ok(Normalization::Raw),
            "unframed" => Ok(Normalization::Unframed),
            "intro" => Ok(Normalization::Intro),
            _ => Err(crate::Error::Usage(format!("unknown normalization {s:?} (raw|unframed|intro)"))),
        }
    }
}

/// The operators a braid evaluation needs at rank `n`, built once.
pub struct SpinOps {
    pub fam: XFamily,
    pub r: LinOp,
    pub rinv: LinOp,
}

pub fn spin_ops(n: usize) -> Arc<SpinOps> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SpinOps>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(o) = cache.lock().expect("cache lock").get(&n) {
        return o.clone();
    }
    let fam = build_x(n);
    let ops = Arc::new(SpinOps { r: braiding(&fam, false), rinv: braiding(&fam, true), fam });
    cache.lock().expect("cache lock").insert(n, ops.clone());
    ops
}

/// `Tr_q(R(β))` with `R(β) = R_{i_1}^{ε_1} ∘ ⋯ ∘ R_{i_ℓ}^{ε_ℓ}`.
pub fn eval_raw(b: &BraidWord, n: usize) -> RatFunc {
    let ops = spin_ops(n);
    let word: Vec<(usize, &LinOp)> =
        b.letters.iter().map(|&(i, s)| (i - 1, if s > 0 { &ops.r } else { &ops.rinv })).collect();
    qtrace_dominant(b.strands, n, |k| apply_word(&word, &SVec::basis(k)))
}

/// `ν^e` as a scalar.
pub fn nu_pow(n: usize, e: i64) -> RatFunc {
    RatFunc::from(nu(n)).pow(e as i32)
}

/// Scalar relating raw to the requested normalization.
pub fn normalization_factor(norm: Normalization, n: usize, strands: usize, eps: i64) -> RatFunc {
    match norm {
        Normalization::Raw => RatFunc::one(),
        Normalization::Unframed => nu_pow(n, -eps),
        Normalization::Intro => {
            let s = sign(n as i64 * eps + strands as i64 * binom(n as i64 + 1, 2));
            RatFunc::from(Laurent::monomial(s, -(n as i64) * eps))
        }
    }
}

pub fn eval_spin(b: &BraidWord, n: usize, norm: Normalization, mirror: bool) -> GradedScalar {
    let b = if mirror { b.mirror() } else { b.clone() };
    let raw = eval_raw(&b, n);
    GradedScalar::from(&raw * &normalization_factor(norm, n, b.strands, b.exponent_sum()))
}

/// Markov moves, mirror symmetry, and braid relations inserted into the word.
pub fn markov_suite(b: &BraidWord, n: usize) -> Report {
    let mut rep = Report::new();
    let base = eval_raw(b, n);
    let unframed = |w: &BraidWord| eval_spin(w, n, Normalization::Unframed, false);
    let base_u = unframed(b);
    let p = |mv: &str| json!({"n": n, "braid": b.to_string(), "strands": b.strands, "move": mv});
    let delta = |a: &RatFunc, c: &RatFunc| format!("delta {}", a - c);

    for k in 1..b.letters.len() {
        let v = eval_raw(&b.rotate(k), n);
        rep.push("markov-rotation", p(&format!("rotate {k}")), v == base, || delta(&v, &base));
    }
    for j in 1..b.strands {
        for s in [1i8, -1] {
            let g = BraidWord { strands: b.strands, letters: vec![(j, s)] };
            let w = g.then(b).then(&g.inverse());
            let v = eval_raw(&w, n);
            rep.push("markov-conjugation", p(&format!("conjugate s{j}^{s}")), v == base, || delta(&v, &base));
            let u = unframed(&w);
            rep.push("unframed-conjugation", p(&format!("conjugate s{j}^{s}")), u == base_u, String::new);
        }
    }
    for s in [1i8, -1] {
        let w = b.stabilize(s);
        let v = eval_raw(&w, n);
        let want = &base * &nu_pow(n, s as i64);
        rep.push("markov-stabilization", p(&format!("stabilize {s}")), v == want, || delta(&v, &want));
        let u = unframed(&w);
        rep.push("unframed-stabilization", p(&format!("stabilize {s}")), u == base_u, String::new);
    }
    let m = eval_raw(&b.mirror(), n);
    rep.push("mirror", p("mirror"), m == base.bar(), || delta(&m, &base.bar()));

    if b.strands >= 3 {
        let i = 1 + b.letters.len() % (b.strands - 2);
        let at = b.letters.len() / 2;
        let ins = |tri: [usize; 3]| {
            let mut l = b.letters.clone();
            for (off, g) in tri.iter().enumerate() {
                l.insert(at + off, (*g, 1));
            }
            BraidWord { strands: b.strands, letters: l }
        };
        let v1 = eval_raw(&ins([i, i + 1, i]), n);
        let v2 = eval_raw(&ins([i + 1, i, i + 1]), n);
        rep.push("braid-relation", p(&format!("insert at {at}, i = {i}")), v1 == v2, || delta(&v1, &v2));
    }
    rep
}

/// `count` random words with `2 ≤ m ≤ max_strands` strands and `1 ≤ ℓ ≤ max_len` letters,
/// each run through [`markov_suite`].
pub fn markov_battery(n: usize, count: usize, max_strands: usize, max_len: usize, seed: u64) -> Report {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut rep = Report::new();
    for _ in 0..count {
        let strands = rng.gen_range(2..=max_strands.max(2));
        let len = rng.gen_range(1..=max_len.max(1));
        let letters = (0..len).map(|_| (rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        rep.extend(markov_suite(&BraidWord { strands, letters }, n));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{circle_value, d_value};
    use crate::spinpoly::braid::parse_braid;

    #[test]
    fn unknots() {
        for n in 1..=3 {
            let u = parse_braid("", Some(1)).unwrap();
            let v = eval_spin(&u, n, Normalization::Raw, false);
            assert_eq!(v, GradedScalar::from(RatFunc::from(circle_value(n as i64))));
            let i = eval_spin(&u, n, Normalization::Intro, false);
            assert_eq!(i, GradedScalar::from(RatFunc::from(d_value(n as i64))));
        }
        let u = parse_braid("", Some(1)).unwrap();
        let want = Laurent::from_terms([(8, 1.into()), (4, 1.into()), (-4, 1.into()), (-8, 1.into())]);
        assert_eq!(eval_spin(&u, 2, Normalization::Raw, false).sign_stripped(), GradedScalar::from(RatFunc::from(want)));
    }

    #[test]
    fn stabilized_unknot() {
        for n in 1..=3 {
            let w = parse_braid("s1", None).unwrap();
            let want = &RatFunc::from(nu(n)) * &RatFunc::from(circle_value(n as i64));
            assert_eq!(eval_raw(&w, n), want);
            assert_eq!(eval_spin(&w, n, Normalization::Unframed, false), GradedScalar::from(RatFunc::from(circle_value(n as i64))));
        }
    }

    #[test]
    fn trefoil_moves() {
        let t = parse_braid("s1 s1 s1", None).unwrap();
        for n in 1..=2 {
            let r = markov_suite(&t, n);
            assert!(r.all_pass(), "{r}");
        }
        let f = parse_braid("1 -2 1 -2", None).unwrap();
        let r = markov_suite(&f, 2);
        assert!(r.all_pass(), "{r}");
    }
}
