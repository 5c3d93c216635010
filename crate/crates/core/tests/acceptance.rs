//! One PASS/FAIL line per acceptance criterion, all at exact equality.

use spinlink::clifford::{qgrp_via_clifford, wenzl_c};
use spinlink::qalg::{binom, circle_value, GradedScalar, Laurent, RatFunc};
use spinlink::rep::spin::{gen_op, Gen};
use spinlink::rep::trivalent::h_op;
use spinlink::rep::Factor;
use spinlink::report::Report;
use spinlink::xcalc::build_x;
use spinlink::xcalc::relations::{braid_suite, minpoly_suite, only_errata_fail, rotation_suite, three_strand_suite, trace_rule_suite};
use spinlink::xcalc::spectral::spectral_suite;
use std::time::{Duration, Instant};

enum Gate {
    Gating,
    /// Fails only through identities listed as known errata.
    Errata,
    Probe,
}

struct Outcome {
    ok: bool,
    gate: Gate,
    detail: String,
}

fn from_report(rep: &Report, detail: &str) -> Outcome {
    let (p, f) = rep.count();
    let mut d = format!("{detail}: {p} passed, {f} failed");
    if let Some(e) = rep.first_failure() {
        d.push_str(&format!("; first failure {} {}", e.identity_id, e.parameters));
    }
    Outcome { ok: f == 0, gate: Gate::Gating, detail: d }
}

fn within(mut o: Outcome, took: Duration, limit: Duration) -> Outcome {
    if took > limit {
        o.ok = false;
        o.detail.push_str(&format!("; took {took:?}, limit {limit:?}"));
    }
    o
}

fn unknots() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        let args = ["spinlink", "poly", "spin", "--n", &n.to_string(), "--strands", "1", "--braid", "", "--format", "json"];
        let (code, out) = spinlink::cli::run(args);
        let v: serde_json::Value = serde_json::from_str(&out).expect("json output");
        let got = GradedScalar::from_json(&v["value"]).expect("value parses");
        let want = GradedScalar::from(circle_value(n as i64));
        if code != 0 || got != want {
            bad.push(format!("n = {n}: {got}"));
        }
        let sign = if binom(n as i64 + 1, 2) % 2 == 0 { 1 } else { -1 };
        let prod = (1..=n as i64).fold(Laurent::one(), |acc, i| &acc * &(&Laurent::q(2 * i - 1) + &Laurent::q(1 - 2 * i)));
        if want != GradedScalar::from(prod.scale(&sign.into())) {
            bad.push(format!("n = {n}: circle value disagrees with the product formula"));
        }
    }
    let (_, out) = spinlink::cli::run(["spinlink", "poly", "spin", "--n", "2", "--strands", "1", "--braid", "", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json output");
    let got = GradedScalar::from_json(&v["value"]).expect("value parses").sign_stripped();
    let want = Laurent::from_terms([(8, 1.into()), (4, 1.into()), (-4, 1.into()), (-8, 1.into())]);
    if got != GradedScalar::from(want) {
        bad.push(format!("sign-stripped n = 2: {got}"));
    }
    Outcome { ok: bad.is_empty(), gate: Gate::Gating, detail: format!("poly spin raw unknot, n = 1,2,3 {bad:?}") }
}

fn c_equals_h() -> Outcome {
    let bad: Vec<usize> = (1..=3).filter(|&n| !wenzl_c(n).same(&h_op(n))).collect();
    Outcome { ok: bad.is_empty(), gate: Gate::Gating, detail: format!("C = H exactly, n = 1,2,3; failing ranks {bad:?}") }
}

fn clifford_action() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=3 {
        for g in Gen::all(n) {
            let a = qgrp_via_clifford(g, n).expect("valid generator");
            let b = gen_op(Factor::S, g, n).expect("valid generator");
            if !a.same(&b) {
                bad.push(format!("{g:?} at n = {n}"));
            }
        }
    }
    Outcome { ok: bad.is_empty(), gate: Gate::Gating, detail: format!("Clifford images equal the spin action on every generator {bad:?}") }
}

fn spectral() -> Outcome {
    let mut rep = Report::new();
    for n in 1..=3 {
        let fam = build_x(n);
        rep.extend(minpoly_suite(&fam));
        rep.extend(spectral_suite(&fam, false));
    }
    from_report(&rep, "minimal polynomial, isotypic ranks, spectral basis, n = 1,2,3")
}

fn braiding() -> Outcome {
    let mut rep = Report::new();
    for n in 1..=3 {
        rep.extend(braid_suite(&build_x(n), true));
    }
    from_report(&rep, "R R^-1 = id, Yang-Baxter on three strands, n = 1,2,3")
}

fn relations() -> Outcome {
    let mut rep = Report::new();
    for n in 1..=3 {
        let fam = build_x(n);
        rep.extend(three_strand_suite(&fam));
        rep.extend(trace_rule_suite(&fam, true));
        rep.extend(rotation_suite(&fam));
    }
    let mut o = from_report(&rep, "devil's Serre, GK Serre, R3 tables with reversals, trace rule, rotation, n = 1,2,3");
    if !o.ok && only_errata_fail(&rep) {
        o.gate = Gate::Errata;
        o.detail.push_str(
            "; every failure is the (3,1,2) rank-3 line as printed (and its reversal), whose first \
             coefficient has the wrong sign; the corrected line passes in all orientations",
        );
    }
    o
}

fn probes() -> Outcome {
    let rep = spinlink::xcalc::relations::probe_suite(4);
    let mut o = from_report(&rep, "n = 4 trace rule for k = 1,2,3 and rotation (non-gating)");
    o.gate = Gate::Probe;
    o
}

fn appendix() -> Outcome {
    let rep = spinlink::qalg::appendix::appendix_suite(12);
    let mut o = from_report(&rep, "rho closed form, [2] devil(m,n), devil(n,n), selfconj sums, A/B sums");
    let rho_ok = (1..=12).all(|l| spinlink::qalg::rho(l) == RatFunc::q(-l * (l + 1)));
    if !rho_ok {
        o.ok = false;
        o.detail.push_str("; rho mismatch");
    }
    o
}

fn markov() -> Outcome {
    let mut rep = Report::new();
    for n in 1..=2 {
        rep.extend(spinlink::spinpoly::markov_battery(n, 50, 4, 8, 20 + n as u64));
    }
    from_report(&rep, "conjugation, stabilization by nu^{+-1}, mirror, on 50 random words per rank, n = 1,2")
}

fn routes() -> Outcome {
    let mut rep = Report::new();
    for n in 1..=3 {
        rep.extend(spinlink::iqsym::route_suite(n, 3, 6).expect("ranks up to 3 are symbolic"));
    }
    from_report(&rep, "symbolic trace equals matrix quantum trace on all 3-strand words of length <= 6, n = 1,2,3")
}

fn sln() -> Outcome {
    let mut rep = Report::new();
    let form = spinlink::schur::form_suite(5, 3);
    rep.entries.extend(form.entries.into_iter().filter(|e| e.identity_id == "unlink-value"));
    rep.extend(spinlink::schur::oracle_suite(3, 6));
    from_report(&rep, "unlink values for a_i <= N <= 5, m <= 3; sl_2 vs Kauffman and spin n = 1 vs sl_2 on <= 3-strand words of length <= 6")
}

fn main() {
    let criteria: Vec<(u32, fn() -> Outcome, Option<Duration>)> = vec![
        (1, unknots, Some(Duration::from_secs(1))),
        (2, c_equals_h, Some(Duration::from_secs(60))),
        (3, clifford_action, None),
        (4, spectral, None),
        (5, braiding, None),
        (6, relations, None),
        (7, probes, None),
        (8, appendix, Some(Duration::from_secs(5))),
        (9, markov, None),
        (10, routes, None),
        (11, sln, None),
    ];
    let mut blocking = 0;
    for (id, f, limit) in criteria {
        let t = Instant::now();
        let mut o = f();
        let took = t.elapsed();
        if let Some(l) = limit {
            o = within(o, took, l);
        }
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {id:>2}: {status}  {}  [{:.2?}]", o.detail, took);
        if !o.ok && matches!(o.gate, Gate::Gating) {
            blocking += 1;
        }
    }
    if blocking > 0 {
        eprintln!("{blocking} gating criteria failed");
        std::process::exit(1);
    }
}
