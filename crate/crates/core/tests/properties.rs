use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use spinlink::iqsym::{AlgElement, Engine};
use spinlink::qalg::{qbinom, GradedScalar, Laurent, RatFunc};
use spinlink::rep::spin::key_weight2;
use spinlink::rep::{basis, Factor, LinOp};
use spinlink::schur::{FormEvaluator, Gen, GlWeight, SchurElement};
use spinlink::spinpoly::{eval_raw, parse_braid, BraidWord};
use spinlink::xcalc::qtrace;

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-6i64..=6, -3i64..=3), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Laurent::zero(), |acc, (e, c)| &acc + &Laurent::monomial(c, e))
    })
}

fn nonzero_laurent() -> impl Strategy<Value = Laurent> {
    laurent().prop_filter("nonzero", |l| !l.is_zero())
}

fn braid(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands, prop::bool::ANY), 0..=max_len).prop_map(move |ls| BraidWord {
        strands,
        letters: ls.into_iter().map(|(i, s)| (i, if s { 1 } else { -1 })).collect(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratfunc_inverse(a in nonzero_laurent(), b in nonzero_laurent()) {
        let x = RatFunc::new(a.clone(), b.clone());
        let y = RatFunc::new(b, a);
        prop_assert!((&x * &y).is_one());
    }

    #[test]
    fn ratfunc_specialization(a in laurent(), b in nonzero_laurent(), c in laurent(), d in nonzero_laurent()) {
        let x = RatFunc::new(a, b);
        let y = RatFunc::new(c, d);
        let s = &x + &y;
        let p = &x * &y;
        for k in [2i64, 3, 5] {
            let pt = BigRational::new(BigInt::from(k), BigInt::from(7));
            if let (Some(xv), Some(yv), Some(sv), Some(pv)) = (x.eval(&pt), y.eval(&pt), s.eval(&pt), p.eval(&pt)) {
                prop_assert_eq!(sv, &xv + &yv);
                prop_assert_eq!(pv, &xv * &yv);
            }
        }
    }

    #[test]
    fn graded_json_round_trip(a in laurent(), b in nonzero_laurent(), num in -7i64..7, den in 1i64..5) {
        let g = GradedScalar::new(num_rational::Rational64::new(num, den), RatFunc::new(a, b));
        prop_assert_eq!(GradedScalar::from_json(&g.to_json()), Some(g));
    }

    #[test]
    fn braid_text_round_trip(b in braid(5, 10)) {
        prop_assert_eq!(parse_braid(&b.to_string(), Some(5)).unwrap(), b);
    }

    #[test]
    fn qtrace_is_trace_like(ea in prop::collection::vec((0usize..16, 0usize..16, laurent()), 1..12),
                            eb in prop::collection::vec((0usize..16, 0usize..16, laurent()), 1..12)) {
        // weight-preserving operators on S ⊗ S at n = 2
        let n = 2;
        let sig = vec![Factor::S; 2];
        let keys = basis(&sig, n);
        let build = |es: &[(usize, usize, Laurent)]| {
            let mut op = LinOp::zero(n, sig.clone(), sig.clone());
            for (r, c, x) in es {
                let (r, c) = (keys[*r], keys[*c]);
                if key_weight2(&sig, r, n) == key_weight2(&sig, c, n) && !x.is_zero() {
                    op.insert(r, c, x.clone());
                }
            }
            op
        };
        let (a, b) = (build(&ea), build(&eb));
        prop_assert_eq!(qtrace(&a.compose(&b)), qtrace(&b.compose(&a)));
    }

    #[test]
    fn split_union_is_multiplicative(b1 in braid(2, 4), b2 in braid(2, 4)) {
        for n in 1..=2 {
            let joined = BraidWord { strands: 4, letters: b1.letters.iter().copied().chain(b2.shifted(2).letters).collect() };
            prop_assert_eq!(eval_raw(&joined, n), &eval_raw(&b1, n) * &eval_raw(&b2, n));
        }
    }
}

fn xword(n: usize, m: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((1..m, 1..=n), 0..=5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn normalize_properties(n in 1usize..=3, w1 in xword(3, 3), w2 in xword(3, 3), c in nonzero_laurent()) {
        let clip = |w: &[(usize, usize)]| -> Vec<(usize, usize)> { w.iter().map(|&(i, k)| (i, k.min(n))).collect() };
        let (w1, w2) = (clip(&w1), clip(&w2));
        let mut e = Engine::new(n).unwrap();
        let x = AlgElement::word(w1.clone());
        let y = AlgElement::term(w2.clone(), RatFunc::from(c));
        let nx = e.normalize(&x, 3).unwrap();
        prop_assert_eq!(e.normalize(&nx, 3).unwrap(), nx.clone());
        let ny = e.normalize(&y, 3).unwrap();
        prop_assert_eq!(e.normalize(&x.add(&y), 3).unwrap(), nx.add(&ny));
        prop_assert_eq!(e.trace_eval(&nx, 3).unwrap(), e.trace_eval(&x, 3).unwrap());
        // trace-like
        let xy = AlgElement::word([w1.clone(), w2.clone()].concat());
        let yx = AlgElement::word([w2, w1].concat());
        prop_assert_eq!(e.trace_eval(&xy, 3).unwrap(), e.trace_eval(&yx, 3).unwrap());
    }
}

fn sword(m: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec((1..m, prop::bool::ANY, 1i64..=2), 0..=3)
        .prop_map(|ls| ls.into_iter().map(|(i, e, r)| if e { Gen::e(i, r) } else { Gen::f(i, r) }).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The six defining properties of the form, on random short words.
    #[test]
    fn bilinear_form_properties(n in 1i64..=3, a in prop::collection::vec(0i64..=3, 3), x in sword(3), y in sword(3), g in (1usize..3, prop::bool::ANY)) {
        let a = GlWeight(a.into_iter().map(|t| t.min(n)).collect());
        let gen = if g.1 { Gen::e(g.0, 1) } else { Gen::f(g.0, 1) };
        let mut ev = FormEvaluator::new(n);
        let w = |src: &GlWeight, v: &[Gen]| SchurElement::word(src.clone(), v.to_vec());
        // (1), (2): (g x 1_a, y 1_a) = (x 1_a, ḡ y 1_a)
        let gx = [vec![gen], x.clone()].concat();
        let gy = [vec![gen.bar()], y.clone()].concat();
        prop_assert_eq!(ev.pair(&w(&a, &gx), &w(&a, &y)).unwrap(), ev.pair(&w(&a, &x), &w(&a, &gy)).unwrap());
        // (3), (4): (x g 1_a, y 1_a) = (x 1_{ga}, y ḡ 1_{ga})
        let b = gen.act(&a);
        if b.alive(n) {
            let xg = [x.clone(), vec![gen]].concat();
            let yg = [y.clone(), vec![gen.bar()]].concat();
            prop_assert_eq!(ev.pair(&w(&a, &xg), &w(&a, &y)).unwrap(), ev.pair(&w(&b, &x), &w(&b, &yg)).unwrap());
        }
        // (5): different sources pair to zero
        let other = GlWeight(a.0.iter().rev().cloned().collect());
        if other != a {
            prop_assert!(ev.pair(&w(&a, &x), &w(&other, &y)).unwrap().is_zero());
        }
        // (6)
        let want = a.0.iter().fold(RatFunc::one(), |acc, &t| &acc * &RatFunc::from(qbinom(n, t)));
        prop_assert_eq!(ev.trace(&SchurElement::idempotent(a.clone())).unwrap(), want);
    }
}
