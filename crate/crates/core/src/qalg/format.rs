//! Text and JSON rendering of polynomials in `q`.

use super::int::Int;
use super::laurent::{fmt_exp, Laurent};
use num_integer::Integer;
use std::fmt;

/// One rendered term: exponent `en/ed` of `q`, coefficient `cn/cd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub en: i64,
    pub ed: i64,
    pub cn: Int,
    pub cd: Int,
}

/// Terms of `q^{on/od} · poly / divisor`, sorted by descending exponent.
pub fn terms(poly: &Laurent, on: i64, od: i64, divisor: &Int) -> Vec<Term> {
    let mut out: Vec<Term> = poly
        .terms()
        .map(|(e, k)| {
            let num = e * od + 2 * on;
            let den = 2 * od;
            let g = num.gcd(&den).max(1);
            let cg = k.gcd(divisor);
            let (mut cn, mut cd) = (k.div_exact(&cg), divisor.div_exact(&cg));
            if cd.signum() < 0 {
                cn = -cn;
                cd = -cd;
            }
            Term { en: num / g, ed: den / g, cn, cd }
        })
        .collect();
    out.sort_by(|a, b| (b.en * a.ed).cmp(&(a.en * b.ed)));
    out
}

pub fn write_terms(f: &mut fmt::Formatter<'_>, poly: &Laurent, on: i64, od: i64, divisor: &Int) -> fmt::Result {
    let ts = terms(poly, on, od, divisor);
    if ts.is_empty() {
        return write!(f, "0");
    }
    for (i, t) in ts.iter().enumerate() {
        let neg = t.cn.signum() < 0;
        let mag = t.cn.abs();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let unit = mag.is_one() && t.cd.is_one();
        let coeff = if t.cd.is_one() { format!("{mag}") } else { format!("{mag}/{}", t.cd) };
        if t.en == 0 {
            write!(f, "{coeff}")?;
        } else {
            if !unit {
                write!(f, "{coeff}·")?;
            }
            write!(f, "q^{{{}}}", fmt_exp(t.en, t.ed))?;
        }
    }
    Ok(())
}

/// `[[exp_num, exp_den, coeff_num, coeff_den], ...]` with big coefficients as strings
/// when they exceed `i64`.
pub fn terms_json(ts: &[Term]) -> serde_json::Value {
    let num = |k: &Int| match k.to_i64() {
        Some(s) => serde_json::Value::from(s),
        None => serde_json::Value::from(k.to_string()),
    };
    serde_json::Value::Array(
        ts.iter()
            .map(|t| serde_json::json!([t.en, t.ed, num(&t.cn), num(&t.cd)]))
            .collect(),
    )
}

pub fn parse_terms_json(v: &serde_json::Value) -> Option<Vec<Term>> {
    let int = |x: &serde_json::Value| -> Option<Int> {
        match x {
            serde_json::Value::Number(n) => n.as_i64().map(Int::from),
            serde_json::Value::String(s) => Int::parse(s),
            _ => None,
        }
    };
    v.as_array()?
        .iter()
        .map(|row| {
            let r = row.as_array()?;
            if r.len() != 4 {
                return None;
            }
            Some(Term { en: r[0].as_i64()?, ed: r[1].as_i64()?, cn: int(&r[2])?, cd: int(&r[3])? })
        })
        .collect()
}
