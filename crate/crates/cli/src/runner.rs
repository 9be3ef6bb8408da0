use std::collections::BTreeMap;
use std::time::Instant;

use omatrix_core::diff::Jets;
use omatrix_core::Error;

use crate::catalog::{self, CheckSpec, Ctx};
use crate::error::CliError;
use crate::manifest::Problem;
use crate::report::{CheckResult, Report, Status};

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub max_jet_order: u32,
    pub witness_limit: usize,
    /// Record per-check wall time. Off by default so reports are
    /// byte-identical across runs.
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { seed: 0, max_jet_order: omatrix_core::diff::DEFAULT_MAX_JET_ORDER, witness_limit: 10, timings: false }
    }
}

/// Requested checks plus every applicable prerequisite, each paired with
/// its wave number.
fn plan(problem: &Problem) -> Result<BTreeMap<&'static str, usize>, CliError> {
    let mut seen = std::collections::BTreeSet::new();
    for name in &problem.checks {
        let (_, spec) = catalog::find(name).ok_or_else(|| CliError::UnknownCheck(name.clone()))?;
        if !seen.insert(name.as_str()) {
            return Err(CliError::DuplicateCheck(name.clone()));
        }
        if let Some(section) = spec.missing_section(problem) {
            return Err(CliError::MissingSection { check: name.clone(), section: section.key() });
        }
    }
    let mut waves = BTreeMap::new();
    for name in &problem.checks {
        wave_of(catalog::find(name).expect("validated").1, problem, &mut waves);
    }
    Ok(waves)
}

fn wave_of(spec: &'static CheckSpec, problem: &Problem, waves: &mut BTreeMap<&'static str, usize>) -> usize {
    if let Some(&w) = waves.get(spec.name) {
        return w;
    }
    let w = applicable_prereqs(spec, problem).map(|p| wave_of(p, problem, waves) + 1).max().unwrap_or(0);
    waves.insert(spec.name, w);
    w
}

/// Prerequisites whose sections are present; the others cannot run and are
/// not required.
fn applicable_prereqs<'a>(spec: &'a CheckSpec, problem: &'a Problem) -> impl Iterator<Item = &'static CheckSpec> + 'a {
    spec.after
        .iter()
        .map(|n| catalog::find(n).expect("catalog prerequisites exist").1)
        .filter(|p| p.missing_section(problem).is_none())
}

fn execute(spec: &CheckSpec, ctx: &Ctx, timings: bool) -> CheckResult {
    let start = Instant::now();
    let outcome = (spec.run)(ctx);
    let wall_ms = timings.then(|| start.elapsed().as_millis() as u64);
    let (verdict, detail, witnesses) = match outcome {
        Ok(v) => {
            let (holds, detail, witnesses) = v.into_outcome();
            (if holds { Status::Pass } else { Status::Fail }, detail, witnesses)
        }
        Err(e @ Error::Internal(_)) => (Status::Fail, e.to_string(), Vec::new()),
        Err(e) => (Status::Error, e.to_string(), Vec::new()),
    };
    CheckResult { name: spec.name.to_string(), verdict, detail, witnesses, wall_ms }
}

#[cfg(feature = "parallel")]
fn run_wave(specs: &[&'static CheckSpec], ctx: &Ctx, timings: bool) -> Vec<CheckResult> {
    use rayon::prelude::*;
    specs.par_iter().map(|s| execute(s, ctx, timings)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_wave(specs: &[&'static CheckSpec], ctx: &Ctx, timings: bool) -> Vec<CheckResult> {
    specs.iter().map(|s| execute(s, ctx, timings)).collect()
}

/// Runs the requested checks. Only input problems are errors; check
/// verdicts, including refusals, are in the report.
pub fn run(problem: &Problem, label: &str, opts: &RunOptions) -> Result<Report, CliError> {
    let waves = plan(problem)?;
    let ctx = Ctx {
        problem,
        seed: opts.seed,
        jets: Jets::new(opts.max_jet_order),
        witness_limit: opts.witness_limit,
    };
    let depth = waves.values().copied().max().map_or(0, |d| d + 1);
    let mut done: BTreeMap<&'static str, CheckResult> = BTreeMap::new();
    for w in 0..depth {
        let mut ready = Vec::new();
        for (&name, &wave) in &waves {
            if wave != w {
                continue;
            }
            let spec = catalog::find(name).expect("planned").1;
            let blocker = applicable_prereqs(spec, problem).find(|p| done[p.name].verdict != Status::Pass);
            match blocker {
                Some(p) => {
                    let skipped = CheckResult {
                        name: name.to_string(),
                        verdict: Status::Skipped,
                        detail: format!("prerequisite `{}` did not pass", p.name),
                        witnesses: Vec::new(),
                        wall_ms: None,
                    };
                    done.insert(name, skipped);
                }
                None => ready.push(spec),
            }
        }
        for res in run_wave(&ready, &ctx, opts.timings) {
            let name = catalog::find(&res.name).expect("planned").1.name;
            done.insert(name, res);
        }
    }
    let checks = problem.checks.iter().map(|n| done.remove(n.as_str()).expect("every requested check ran")).collect();
    Ok(Report::new(label.to_string(), opts.seed, opts.max_jet_order, opts.witness_limit, checks))
}
