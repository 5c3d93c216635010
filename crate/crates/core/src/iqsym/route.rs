//! Symbolic versus matrix evaluation over every braid word up to a length bound.

use super::engine::{eval_all_prefix, Engine};
use crate::error::Error;
use crate::report::Report;
use crate::spinpoly::eval_raw;
use serde_json::json;

/// Compare the symbolic trace with the matrix quantum trace on all words with `strands` strands
/// and at most `max_len` letters. One entry per word.
pub fn route_suite(n: usize, strands: usize, max_len: usize) -> Result<Report, Error> {
    let mut engine = Engine::new(n)?;
    let mut rep = Report::new();
    for (b, sym) in eval_all_prefix(&mut engine, strands, max_len)? {
        let mat = eval_raw(&b, n);
        let ok = sym == mat;
        rep.push("route-equivalence", json!({"n": n, "strands": strands, "braid": b.to_string()}), ok, || {
            format!("symbolic {sym}, matrix {mat}")
        });
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_words_agree() {
        for n in 1..=2 {
            let r = route_suite(n, 3, 3).unwrap();
            assert_eq!(r.count(), (85, 0));
            assert!(r.all_pass(), "{r}");
        }
    }
}
