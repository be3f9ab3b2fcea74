//! JSON and markdown reports.
//!
//! The `results` array is reproducible byte for byte from the same limits and
//! seed. Wall times live only in `timings`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::checks::Ctx;
use crate::registry::Suite;
use crate::suite::{CheckResult, Status};

pub const TOOL: &str = "braidforge";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(format!("unknown format {other:?}; expected json or markdown")),
        }
    }
}

#[derive(Serialize)]
struct Limits {
    max_cosets: usize,
    strategy: String,
}

#[derive(Serialize, Default)]
struct Summary {
    total: usize,
    verified: usize,
    refuted: usize,
    inconclusive: usize,
    unsupported: usize,
}

#[derive(Serialize)]
struct Timing<'a> {
    id: &'a str,
    n: usize,
    wall_ms: f64,
}

#[derive(Serialize)]
struct Report<'a> {
    tool: &'static str,
    version: &'static str,
    suite: String,
    n_range: [usize; 2],
    limits: Limits,
    seed: u64,
    summary: Summary,
    results: &'a [CheckResult],
    timings: Vec<Timing<'a>>,
}

fn summarize(results: &[CheckResult]) -> Summary {
    let mut s = Summary { total: results.len(), ..Summary::default() };
    for r in results {
        match r.status {
            Status::Verified => s.verified += 1,
            Status::Refuted => s.refuted += 1,
            Status::Inconclusive => s.inconclusive += 1,
            Status::Unsupported => s.unsupported += 1,
        }
    }
    s
}

pub fn emit_report(
    results: &[CheckResult],
    suite: Suite,
    ns: &RangeInclusive<usize>,
    ctx: &Ctx,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let report = Report {
                tool: TOOL,
                version: VERSION,
                suite: suite.to_string(),
                n_range: [*ns.start(), *ns.end()],
                limits: Limits { max_cosets: ctx.limits.max_cosets, strategy: strategy_name(ctx.limits.strategy).into() },
                seed: ctx.seed,
                summary: summarize(results),
                results,
                timings: results
                    .iter()
                    .map(|r| Timing { id: &r.id, n: r.n, wall_ms: r.wall.as_secs_f64() * 1e3 })
                    .collect(),
            };
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
        Format::Markdown => markdown(results, suite, ns, ctx),
    }
}

fn markdown(results: &[CheckResult], suite: Suite, ns: &RangeInclusive<usize>, ctx: &Ctx) -> String {
    let s = summarize(results);
    let mut out = String::new();
    let _ = writeln!(out, "# {TOOL} {VERSION}: suite {suite}, n = {}..{}\n", ns.start(), ns.end());
    let _ = writeln!(
        out,
        "max_cosets {}, strategy {}, seed {:#x}\n",
        ctx.limits.max_cosets,
        strategy_name(ctx.limits.strategy),
        ctx.seed
    );
    let _ = writeln!(
        out,
        "{} checks: {} verified, {} refuted, {} inconclusive, {} unsupported\n",
        s.total, s.verified, s.refuted, s.inconclusive, s.unsupported
    );
    out.push_str("| id | n | status | observed | expected | ms |\n|---|---|---|---|---|---|\n");
    for r in results {
        let status = match r.strength {
            Some(st) if r.status == Status::Verified => format!("verified ({})", strength_name(st)),
            _ => r.status.as_str().to_string(),
        };
        let observed = r.observed.clone().or_else(|| r.note.clone()).unwrap_or_default();
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {:.1} |",
            r.id,
            r.n,
            status,
            observed.replace('|', "\\|"),
            r.expected.as_deref().unwrap_or("").replace('|', "\\|"),
            r.wall.as_secs_f64() * 1e3
        );
    }
    out
}

fn strength_name(s: crate::checks::Strength) -> &'static str {
    match s {
        crate::checks::Strength::Full => "full",
        crate::checks::Strength::Necessary => "necessary conditions",
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;

/// 0 unless some result is refuted.
/// The spelling accepted by `--strategy`.
fn strategy_name(s: braidforge_core::Strategy) -> &'static str {
    match s {
        braidforge_core::Strategy::HltLookahead => "hlt",
        braidforge_core::Strategy::Felsch => "felsch",
    }
}

pub fn exit_code(results: &[CheckResult]) -> i32 {
    if results.iter().any(|r| r.status == Status::Refuted) {
        EXIT_REFUTED
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Strength;
    use std::time::Duration;

    fn result(status: Status) -> CheckResult {
        CheckResult {
            id: "x".into(),
            n: 3,
            statement: "s".into(),
            status,
            strength: Some(Strength::Full),
            observed: Some("1".into()),
            expected: Some("1".into()),
            seed: None,
            note: None,
            wall: Duration::from_millis(5),
        }
    }

    #[test]
    fn empty_report_is_valid_json() {
        let text = emit_report(&[], Suite::All, &(3..=6), &Ctx::default(), Format::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["results"].as_array().unwrap().len(), 0);
        assert_eq!(v["summary"]["total"], 0);
    }

    #[test]
    fn verified_result_serializes() {
        let text = emit_report(&[result(Status::Verified)], Suite::Disc, &(3..=3), &Ctx::default(), Format::Json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["results"][0]["status"], "verified");
        assert_eq!(v["results"][0]["strength"], "full");
        assert!(v["results"][0].get("wall").is_none());
        assert_eq!(v["timings"][0]["wall_ms"], 5.0);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&[]), 0);
        assert_eq!(exit_code(&[result(Status::Verified), result(Status::Inconclusive)]), 0);
        assert_eq!(exit_code(&[result(Status::Verified), result(Status::Refuted)]), 2);
    }
}
