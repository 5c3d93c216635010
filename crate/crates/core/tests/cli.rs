use spinlink::cli::run;
use spinlink::qalg::{GradedScalar, RatFunc};
use spinlink::schur::kauffman_oracle;
use spinlink::spinpoly::{all_words, eval_spin, Normalization};

fn json_value(args: &[&str]) -> GradedScalar {
    let (code, out) = run(args.iter().copied());
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).expect("json");
    GradedScalar::from_json(&v["value"]).expect("value")
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["spinlink", "poly", "spin", "--n", "2", "--strands", "2", "--braid", "1 x"],
        vec!["spinlink", "poly", "spin", "--n", "2", "--strands", "2", "--braid", "3"],
        vec!["spinlink", "poly", "spin", "--n", "9", "--strands", "2", "--braid", "1", "--engine", "symbolic"],
        vec!["spinlink", "poly", "sln", "--N", "3", "--colors", "1,2", "--braid", "1"],
        vec!["spinlink", "verify", "nonsense"],
        vec!["spinlink"],
    ] {
        let (code, _) = run(args.iter().copied());
        assert_eq!(code, 2, "{args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(["spinlink", "verify", "clifford"]).0, 0);
    assert_eq!(run(["spinlink", "verify", "conjectures"]).0, 0);
    let (code, out) = run(["spinlink", "verify", "rep", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<serde_json::Value>(&out).is_ok());
}

#[test]
fn engines_agree() {
    for n in ["1", "2"] {
        for braid in ["1 1 1", "1 -2 1 -2", "1 2 1 2 1 2"] {
            let base = ["spinlink", "poly", "spin", "--n", n, "--strands", "3", "--braid", braid, "--format", "json"];
            let m = json_value(&[&base[..], &["--engine", "matrix"]].concat());
            let s = json_value(&[&base[..], &["--engine", "symbolic"]].concat());
            assert_eq!(m, s, "n = {n}, braid {braid}");
        }
    }
}

#[test]
fn json_round_trip_matches_library() {
    let b = spinlink::spinpoly::parse_braid("1 1 1", Some(2)).unwrap();
    let got = json_value(&["spinlink", "poly", "spin", "--n", "2", "--strands", "2", "--braid", "1 1 1", "--normalize", "unframed", "--format", "json"]);
    assert_eq!(got, eval_spin(&b, 2, Normalization::Unframed, false));
}

#[test]
fn sln_unknot() {
    let got = json_value(&["spinlink", "poly", "sln", "--N", "4", "--colors", "2", "--braid", "", "--format", "json"]);
    assert_eq!(got, GradedScalar::from(spinlink::qalg::qbinom(4, 2)));
}

#[test]
fn dump_rows() {
    let (code, out) = run(["spinlink", "dump", "R", "--n", "1"]);
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).expect("rows");
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.as_array().is_some_and(|a| a.len() == 3)));
}

#[test]
fn unframed_rank_one_is_kauffman() {
    for strands in 1..=3 {
        for b in all_words(strands, 6) {
            let spin = eval_spin(&b, 1, Normalization::Unframed, false);
            assert_eq!(spin, GradedScalar::from(kauffman_oracle(&b)), "[{b}] on {strands}");
        }
    }
    assert_eq!(kauffman_oracle(&all_words(1, 0)[0]), RatFunc::from(-&spinlink::qalg::qint(2)));
}
