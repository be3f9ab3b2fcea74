//! Runs the registered claims over a range of `n`.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{Ctx, Halt, Strength};
use crate::registry::{registry, ClaimSpec, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Refuted,
    Inconclusive,
    Unsupported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
            Status::Unsupported => "unsupported",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub n: usize,
    pub statement: String,
    pub status: Status,
    /// Present when the check ran to completion.
    pub strength: Option<Strength>,
    pub observed: Option<String>,
    pub expected: Option<String>,
    pub seed: Option<u64>,
    pub note: Option<String>,
    #[serde(skip)]
    pub wall: Duration,
}

pub fn run_claim(spec: &ClaimSpec, n: usize, ctx: &Ctx) -> CheckResult {
    let start = Instant::now();
    let outcome = spec.run(n, ctx);
    let wall = start.elapsed();
    let mut r = CheckResult {
        id: spec.id.to_string(),
        n,
        statement: spec.statement.to_string(),
        status: Status::Unsupported,
        strength: None,
        observed: None,
        expected: None,
        seed: spec.randomized.then_some(ctx.seed),
        note: None,
        wall,
    };
    match outcome {
        Ok(o) => {
            r.status = if o.pass { Status::Verified } else { Status::Refuted };
            r.strength = Some(o.strength);
            r.observed = Some(o.observed);
            r.expected = Some(o.expected);
            r.note = o.note;
        }
        Err(Halt::Inconclusive(why)) => {
            r.status = Status::Inconclusive;
            r.note = Some(why);
        }
        Err(Halt::Unsupported(why)) => r.note = Some(why),
    }
    r
}

/// Every claim of `suite` at every `n` of `ns` it applies to, sorted by id then `n`.
pub fn run_suite(suite: Suite, ns: RangeInclusive<usize>, ctx: &Ctx) -> Vec<CheckResult> {
    let specs = registry();
    let jobs: Vec<(&ClaimSpec, usize)> = specs
        .iter()
        .filter(|s| suite.contains(s.suite))
        .flat_map(|s| ns.clone().filter(|&n| s.applies(n)).map(move |n| (s, n)))
        .collect();
    let mut results: Vec<CheckResult> = jobs.par_iter().map(|&(s, n)| run_claim(s, n, ctx)).collect();
    results.sort_by(|a, b| (a.id.as_str(), a.n).cmp(&(b.id.as_str(), b.n)));
    results
}

/// Parses `3..6`, `3..=6` or `4`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("bad range {s:?}; expected e.g. 3..6");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}
