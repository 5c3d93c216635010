//! Command-line surface. `run` returns the exit code and the text written to stdout so the
//! binary and the integration tests share one path.

use crate::error::Error;
use crate::qalg::GradedScalar;
use crate::report::Report;
use crate::rep::{unpack, LinOp};
use crate::schur::GlWeight;
use crate::spinpoly::{parse_braid, Normalization};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Parser, Debug)]
#[command(name = "spinlink", about = "Exact spin-colored so(2n+1) and colored sl_N link polynomials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate a link polynomial of a braid closure.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Print an operator as JSON rows of (domain key, codomain key, scalar).
    Dump(DumpArgs),
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    Spin(SpinArgs),
    Sln(SlnArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Engine {
    Matrix,
    Symbolic,
}

#[derive(Parser, Debug)]
struct SpinArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    braid: String,
    #[arg(long, default_value = "raw")]
    normalize: String,
    #[arg(long)]
    mirror: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_enum, default_value = "matrix")]
    engine: Engine,
}

#[derive(Parser, Debug)]
struct SlnArgs {
    #[arg(long = "N")]
    big_n: i64,
    #[arg(long)]
    colors: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    braid: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Suite {
    Qalg,
    Rep,
    Clifford,
    Xcalc,
    Iq,
    Schur,
    Markov,
    Conjectures,
}

#[derive(Parser, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Largest parameter (qalg) or braid length (iq, schur, markov).
    #[arg(long)]
    bound: Option<usize>,
    /// Largest rank `n`; for `conjectures`, the probed rank.
    #[arg(long)]
    n: Option<usize>,
    /// Ranks by fraction-free elimination instead of random specialization.
    #[arg(long)]
    exact_rank: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Parser, Debug)]
struct DumpArgs {
    /// One of H, C, R, Rinv, cup, cap, Y1, or X<k>.
    operator: String,
    #[arg(long)]
    n: usize,
}

/// Identities whose failure reflects a misprint in the source relation table rather than a
/// defect; reported as FAIL but excluded from the exit status.
pub const KNOWN_ERRATA: &[&str] = crate::xcalc::relations::KNOWN_ERRATA;

pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli.cmd) {
        Ok(r) => r,
        Err(Error::Usage(m)) | Err(Error::Parse { message: m, .. }) => (2, format!("usage error: {m}\n")),
        Err(e @ (Error::SymbolicRankTooLarge(_) | Error::Unbalanced(_) | Error::IndexOutOfRange { .. })) => {
            (2, format!("usage error: {e}\n"))
        }
        Err(e) => (1, format!("error: {e}\n")),
    }
}

fn dispatch(cmd: Cmd) -> Result<(i32, String), Error> {
    match cmd {
        Cmd::Poly(PolyCmd::Spin(a)) => poly_spin(a),
        Cmd::Poly(PolyCmd::Sln(a)) => poly_sln(a),
        Cmd::Verify(a) => verify(a),
        Cmd::Dump(a) => dump(a),
    }
}

fn emit_value(format: Format, value: &GradedScalar, meta: serde_json::Value) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Json => {
            let mut obj = meta;
            obj["value"] = value.to_json();
            format!("{}\n", serde_json::to_string(&obj).expect("json"))
        }
    }
}

fn poly_spin(a: SpinArgs) -> Result<(i32, String), Error> {
    if a.n == 0 {
        return Err(Error::Usage("--n must be at least 1".into()));
    }
    let norm: Normalization = a.normalize.parse()?;
    let b = parse_braid(&a.braid, a.strands)?;
    let value = match a.engine {
        Engine::Matrix => crate::spinpoly::eval_spin(&b, a.n, norm, a.mirror),
        Engine::Symbolic => {
            let b = if a.mirror { b.mirror() } else { b.clone() };
            let raw = crate::iqsym::eval_spin_symbolic(&b, a.n)?;
            let f = crate::spinpoly::eval::normalization_factor(norm, a.n, b.strands, b.exponent_sum());
            raw * GradedScalar::from(f)
        }
    };
    let meta = json!({
        "n": a.n, "strands": b.strands, "braid": b.to_string(), "normalization": a.normalize,
        "mirror": a.mirror, "engine": format!("{:?}", a.engine).to_lowercase(),
    });
    Ok((0, emit_value(a.format, &value, meta)))
}

fn poly_sln(a: SlnArgs) -> Result<(i32, String), Error> {
    if a.big_n < 1 {
        return Err(Error::Usage("--N must be at least 1".into()));
    }
    let colors = a
        .colors
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::Usage(format!("bad color {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let colors = GlWeight(colors);
    let b = parse_braid(&a.braid, Some(colors.m()))?;
    let value = crate::schur::eval_sln(&b, &colors, a.big_n)?;
    let meta = json!({"N": a.big_n, "colors": colors.0, "braid": b.to_string()});
    Ok((0, emit_value(a.format, &value, meta)))
}

type Job = Box<dyn FnOnce() -> Result<Report, Error> + Send>;

fn pool_size() -> usize {
    let hw = std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var("SPINLINK_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        Some(k) if k >= 1 => k.min(hw.max(1)),
        _ => hw,
    }
}

/// Run the jobs on a bounded pool; results keep job order.
fn run_pool(jobs: Vec<Job>) -> Result<Report, Error> {
    let n = jobs.len();
    let slots: Vec<Mutex<Option<Job>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let results: Vec<Mutex<Option<Result<Report, Error>>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..pool_size().min(n.max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= n {
                    break;
                }
                let job = slots[i].lock().expect("slot").take().expect("each job runs once");
                *results[i].lock().expect("slot") = Some(job());
            });
        }
    });
    let mut rep = Report::new();
    for r in results {
        rep.extend(r.into_inner().expect("slot").expect("job finished")?);
    }
    Ok(rep)
}

fn ranks(max: usize, cap: usize) -> Result<std::ops::RangeInclusive<usize>, Error> {
    if max == 0 || max > cap {
        return Err(Error::Usage(format!("--n must be between 1 and {cap}")));
    }
    Ok(1..=max)
}

fn verify(a: VerifyArgs) -> Result<(i32, String), Error> {
    let mut jobs: Vec<Job> = Vec::new();
    let gating = a.suite != Suite::Conjectures;
    match a.suite {
        Suite::Qalg => {
            let bound = a.bound.unwrap_or(12) as i64;
            jobs.push(Box::new(move || Ok(crate::qalg::appendix::appendix_suite(bound))));
        }
        Suite::Rep => {
            for n in ranks(a.n.unwrap_or(3), 3)? {
                jobs.push(Box::new(move || Ok(crate::rep::checks::rep_suite(n))));
            }
        }
        Suite::Clifford => {
            for n in ranks(a.n.unwrap_or(3), 3)? {
                jobs.push(Box::new(move || Ok(crate::clifford::clifford_suite(n))));
            }
        }
        Suite::Xcalc => {
            let exact = a.exact_rank;
            for n in ranks(a.n.unwrap_or(3), 3)? {
                jobs.push(Box::new(move || {
                    let fam = crate::xcalc::build_x(n);
                    let mut r = crate::xcalc::spectral::spectral_suite(&fam, exact);
                    r.extend(crate::xcalc::relations::relation_suite(&fam, true));
                    Ok(r)
                }));
            }
        }
        Suite::Iq => {
            let len = a.bound.unwrap_or(6);
            for n in ranks(a.n.unwrap_or(3), 3)? {
                jobs.push(Box::new(move || Ok(crate::iqsym::iq_suite(n))));
                jobs.push(Box::new(move || crate::iqsym::route_suite(n, 3, len)));
            }
        }
        Suite::Schur => {
            let len = a.bound.unwrap_or(6);
            jobs.push(Box::new(|| Ok(crate::schur::form_suite(5, 3))));
            jobs.push(Box::new(move || Ok(crate::schur::oracle_suite(3, len))));
        }
        Suite::Markov => {
            let len = a.bound.unwrap_or(8);
            for n in ranks(a.n.unwrap_or(2), 3)? {
                jobs.push(Box::new(move || Ok(crate::spinpoly::markov_battery(n, 50, 4, len, 7))));
            }
        }
        Suite::Conjectures => {
            let n = a.n.unwrap_or(4);
            if !(1..=5).contains(&n) {
                return Err(Error::Usage("--n must be between 1 and 5 for conjectures".into()));
            }
            jobs.push(Box::new(move || Ok(crate::xcalc::relations::probe_suite(n))));
        }
    }
    let rep = run_pool(jobs)?;
    let blocking = rep.failures().filter(|e| !KNOWN_ERRATA.contains(&e.identity_id.as_str())).count();
    let code = if gating && blocking > 0 { 1 } else { 0 };
    let out = match a.format {
        Format::Json => format!("{}\n", rep.to_json()),
        Format::Text => {
            let fail = rep.count().1;
            let mut s = rep.to_string();
            if fail > blocking {
                s.push_str(&format!("{} of the failures are known errata (non-gating)\n", fail - blocking));
            }
            if !gating {
                s.push_str("probe suite: results never affect the exit status\n");
            }
            s
        }
    };
    Ok((code, out))
}

fn dump(a: DumpArgs) -> Result<(i32, String), Error> {
    let n = a.n;
    if n == 0 || n > 4 {
        return Err(Error::Usage("--n must be between 1 and 4".into()));
    }
    let op: LinOp = match a.operator.as_str() {
        "H" => crate::rep::trivalent::h_op(n),
        "C" => crate::clifford::wenzl_c(n),
        "R" => crate::xcalc::braiding(&crate::xcalc::build_x(n), false),
        "Rinv" => crate::xcalc::braiding(&crate::xcalc::build_x(n), true),
        "cup" => crate::rep::trivalent::cup_s(n),
        "cap" => crate::rep::trivalent::cap_s(n),
        "Y1" => crate::rep::trivalent::y1(n),
        x if x.starts_with('X') => {
            let k: usize = x[1..].parse().map_err(|_| Error::Usage(format!("unknown operator {x:?}")))?;
            if k > n {
                return Err(Error::IndexOutOfRange { index: k, max: n });
            }
            crate::xcalc::build_x(n).x[k].clone()
        }
        other => return Err(Error::Usage(format!("unknown operator {other:?}"))),
    };
    let (dm, cm) = (op.dom.len(), op.cod.len());
    let rows: Vec<serde_json::Value> = op
        .triples()
        .into_iter()
        .map(|(col, row, c)| json!([unpack(col, dm), unpack(row, cm), GradedScalar::from(c).to_json()]))
        .collect();
    Ok((0, format!("{}\n", serde_json::to_string(&rows).expect("json"))))
}
