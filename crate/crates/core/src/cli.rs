//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests drive it in-process.
//!
//! Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on
//! invalid input.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characters::{char_full_route, Route};
use crate::error::{Error, Result};
use crate::partitions::{CompositePartition, Partition};
use crate::ring::{LaurentPoly, PolyJson};
use crate::superschur::composite_super_schur;
use crate::sweep::{sweep_with, theorem_holds, with_jobs, SweepReport};
use crate::weights::{atypical_roots, phi, reduce_to_special, special_kind, SuperWeight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "superjt", version, about = "Irreducible characters of gl(m|1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character of an integral dominant weight.
    Char {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Lemma21)]
        route: RouteArg,
    },
    /// Typicality, special kind and composite partition of a weight.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// The unique j with weight + j*sigma special.
    Reduce {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Check the three character routes on every special weight in a box.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Largest absolute value of an even entry.
        #[arg(long)]
        bound: u32,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Composite super Schur function s_(nu;mu)(x/y).
    SuperSchur {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        nu: String,
        #[arg(long, default_value = "")]
        mu: String,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Number of even variables.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=20))]
    m: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Lemma21,
    Suzhang,
    Determinant,
    All,
}

impl RouteArg {
    fn routes(self) -> Vec<Route> {
        match self {
            RouteArg::Lemma21 => vec![Route::Lemma21],
            RouteArg::Suzhang => vec![Route::SuZhang],
            RouteArg::Determinant => vec![Route::Determinant],
            RouteArg::All => Route::ALL.to_vec(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_check(args, out, err, &theorem_holds)
}

/// [`run`] with the per-weight check used by `verify` swapped out.
pub fn run_with_check<I, T>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    check: &(dyn Fn(&SuperWeight) -> bool + Sync),
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, check) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn dispatch(
    cmd: Command,
    out: &mut dyn Write,
    check: &(dyn Fn(&SuperWeight) -> bool + Sync),
) -> Result<i32> {
    match cmd {
        Command::Char { common, weight, route } => cmd_char(&common, &weight, route, out),
        Command::Classify { common, weight } => cmd_classify(&common, &weight, out),
        Command::Reduce { common, weight } => cmd_reduce(&common, &weight, out),
        Command::Verify { common, bound, jobs } => cmd_verify(&common, bound, jobs, out, check),
        Command::SuperSchur { common, nu, mu } => cmd_super_schur(&common, &nu, &mu, out),
    }
}

#[derive(Serialize)]
struct CharJson {
    #[serde(flatten)]
    poly: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    routes_agree: Option<bool>,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn cmd_char(common: &Common, weight: &str, route: RouteArg, out: &mut dyn Write) -> Result<i32> {
    let w = SuperWeight::parse(weight, common.m as usize)?;
    let values: Vec<(Route, LaurentPoly)> = route
        .routes()
        .into_iter()
        .map(|r| char_full_route(&w, r).map(|c| (r, c.value)))
        .collect::<Result<_>>()?;
    let first = &values[0].1;
    let agree = values.iter().all(|(_, v)| v == first);
    let all = route == RouteArg::All;
    match common.format {
        Format::Json => {
            let j = CharJson { poly: first.to_json(), routes_agree: all.then_some(agree) };
            writeln!(out, "{}", to_json(&j)).map_err(io)?;
        }
        Format::Text => {
            if agree {
                writeln!(out, "{first}").map_err(io)?;
                if all {
                    writeln!(out, "routes agree: lemma21, suzhang, determinant").map_err(io)?;
                }
            } else {
                for (r, v) in &values {
                    writeln!(out, "{r}: {v}").map_err(io)?;
                }
                writeln!(out, "routes disagree").map_err(io)?;
            }
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Serialize)]
struct Composite {
    nu: Vec<i64>,
    mu: Vec<i64>,
}

#[derive(Serialize)]
struct ClassifyJson {
    weight: String,
    typical: bool,
    atypical_root: Option<usize>,
    special_k: Option<usize>,
    phi: Option<Composite>,
}

fn cmd_classify(common: &Common, weight: &str, out: &mut dyn Write) -> Result<i32> {
    let w = SuperWeight::parse(weight, common.m as usize)?;
    let root = atypical_roots(&w).first().copied();
    let k = special_kind(&w);
    let cp = k.map(|_| phi(&w)).transpose()?;
    match common.format {
        Format::Json => {
            let j = ClassifyJson {
                weight: w.to_string(),
                typical: root.is_none(),
                atypical_root: root,
                special_k: k,
                phi: cp.map(|c| Composite { nu: c.nu.parts().to_vec(), mu: c.mu.parts().to_vec() }),
            };
            writeln!(out, "{}", to_json(&j)).map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "weight: {w}").map_err(io)?;
            match root {
                Some(i) => writeln!(out, "atypical at i={i}"),
                None => writeln!(out, "typical"),
            }
            .map_err(io)?;
            match (k, cp) {
                (Some(k), Some(c)) => {
                    writeln!(out, "special: k={k}").map_err(io)?;
                    writeln!(out, "phi: nu={} mu={}", c.nu, c.mu).map_err(io)?;
                }
                _ => writeln!(out, "not special").map_err(io)?,
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ReduceJson {
    j: i64,
    special: String,
}

fn cmd_reduce(common: &Common, weight: &str, out: &mut dyn Write) -> Result<i32> {
    let w = SuperWeight::parse(weight, common.m as usize)?;
    let (j, special) = reduce_to_special(&w)?;
    match common.format {
        Format::Json => {
            writeln!(out, "{}", to_json(&ReduceJson { j, special: special.to_string() })).map_err(io)?
        }
        Format::Text => {
            writeln!(out, "j={j}").map_err(io)?;
            writeln!(out, "special: {special}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyJson {
    m: u32,
    bound: u32,
    total: usize,
    typical: usize,
    atypical: usize,
    failures: Vec<String>,
}

fn cmd_verify(
    common: &Common,
    bound: u32,
    jobs: Option<usize>,
    out: &mut dyn Write,
    check: &(dyn Fn(&SuperWeight) -> bool + Sync),
) -> Result<i32> {
    let m = common.m as usize;
    let report: SweepReport = with_jobs(jobs, || sweep_with(m, bound as i64, check));
    match common.format {
        Format::Json => {
            let j = VerifyJson {
                m: common.m,
                bound,
                total: report.total,
                typical: report.typical,
                atypical: report.atypical,
                failures: report.failures.iter().map(|w| w.to_string()).collect(),
            };
            writeln!(out, "{}", to_json(&j)).map_err(io)?;
        }
        Format::Text => {
            writeln!(out, "m={} bound={bound}", common.m).map_err(io)?;
            writeln!(
                out,
                "special weights: {} (typical {}, atypical {})",
                report.total, report.typical, report.atypical
            )
            .map_err(io)?;
            for w in &report.failures {
                writeln!(out, "FAIL {w}").map_err(io)?;
            }
            writeln!(out, "{} weights verified, {} failures", report.total, report.failures.len())
                .map_err(io)?;
        }
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_super_schur(common: &Common, nu: &str, mu: &str, out: &mut dyn Write) -> Result<i32> {
    let cp = CompositePartition::new(Partition::parse(nu)?, Partition::parse(mu)?);
    let value = composite_super_schur(&cp, common.m as usize)?;
    match common.format {
        Format::Json => writeln!(out, "{}", value.to_json_string()).map_err(io)?,
        Format::Text => writeln!(out, "{value}").map_err(io)?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["superjt"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn char_examples() {
        assert_eq!(call(&["char", "--m", "2", "--weight", "1,0;0"]), (0, "x1 + x2 + y\n".into(), String::new()));
        assert_eq!(call(&["char", "--m", "1", "--weight", "0;0"]).1, "1\n");
        let (code, _, err) = call(&["char", "--m", "2", "--weight", "0,1;0"]);
        assert_eq!(code, 2);
        assert!(err.contains("not dominant"), "{err}");
    }

    #[test]
    fn char_all_routes() {
        let (code, out, _) = call(&["char", "--m", "2", "--weight", "-1,-3;2", "--route", "all"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("routes agree: lemma21, suzhang, determinant\n"));
        let (code, out, _) =
            call(&["char", "--m", "2", "--weight", "1,0;0", "--route", "all", "--format", "json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"routes_agree\":true"));
        let back: PolyJson = serde_json::from_str(&out).unwrap();
        assert_eq!(LaurentPoly::from_json(&back).unwrap().to_text(), "x1 + x2 + y");
    }

    #[test]
    fn classify_examples() {
        let (_, out, _) = call(&["classify", "--m", "2", "--weight", "1,0;0"]);
        assert_eq!(out, "weight: 1,0;0\natypical at i=2\nspecial: k=0\nphi: nu=() mu=(1)\n");
        let (_, out, _) = call(&["classify", "--m", "1", "--weight", "2;0"]);
        assert_eq!(out, "weight: 2;0\ntypical\nspecial: k=0\nphi: nu=() mu=(2)\n");
        let (_, out, _) = call(&["classify", "--m", "2", "--weight", "0,-2;3"]);
        assert!(out.ends_with("not special\n"));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(call(&["reduce", "--m", "2", "--weight", "0,-2;3"]).1, "j=3\nspecial: 3,1;0\n");
        assert_eq!(call(&["reduce", "--m", "2", "--weight", "1,0;0"]).1, "j=0\nspecial: 1,0;0\n");
        assert_eq!(call(&["reduce", "--m", "2", "--weight", "-1,-1;0"]).1, "j=1\nspecial: 0,0;-1\n");
    }

    #[test]
    fn verify_examples() {
        let (code, out, _) = call(&["verify", "--m", "2", "--bound", "2"]);
        assert_eq!(code, 0);
        assert!(out.ends_with(" weights verified, 0 failures\n"), "{out}");
        let (code, _, _) = call(&["verify", "--m", "1", "--bound", "1", "--jobs", "2"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn verify_reports_injected_fault() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let faulty = |w: &SuperWeight| w.to_string() != "1,0;0";
        let code = run_with_check(
            ["superjt", "verify", "--m", "2", "--bound", "1"],
            &mut out,
            &mut err,
            &faulty,
        );
        let out = String::from_utf8(out).unwrap();
        assert_eq!(code, 1);
        assert!(out.contains("FAIL 1,0;0\n"));
        assert!(out.ends_with(", 1 failures\n"));
    }

    #[test]
    fn super_schur_examples() {
        assert_eq!(call(&["super-schur", "--m", "2", "--nu", "", "--mu", "1"]).1, "x1 + x2 + y\n");
        assert_eq!(
            call(&["super-schur", "--m", "2", "--nu", "1", "--mu", ""]).1,
            "y^-1 + x2^-1 + x1^-1\n"
        );
        let (code, _, err) = call(&["super-schur", "--m", "2", "--nu", "1,1,1", "--mu", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("2-standard"), "{err}");
    }

    #[test]
    fn bad_flags_exit_two() {
        assert_eq!(call(&["char", "--m", "0", "--weight", "0;0"]).0, 2);
        assert_eq!(call(&["char", "--m", "2"]).0, 2);
        assert_eq!(call(&["char", "--m", "2", "--weight", "1,0"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
