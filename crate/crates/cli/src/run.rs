//! The kernel representation pipeline behind the `vmpum` binary.

use std::fmt::Write as _;

use serde::Serialize;

use ore_vmpum::gb::{module_equal, BaseOrder, MonomialOrder, Submodule};
use ore_vmpum::modops::{intersect, OpConfig};
use ore_vmpum::oracle::{difference_oracle_kernel, weyl_oracle_kernel};
use ore_vmpum::orecore::{AlgebraFamily, OrePoly};
use ore_vmpum::verify::{check_annihilation, falsifiability_probe, DEFAULT_SEED};
use ore_vmpum::vmpum::{minimize_generators, vmpum_of, KernelRepresentation, Minimizer, SignalSet};
use ore_vmpum::Error;

use crate::problem::ProblemFile;

pub const FORMAT_VERSION: u32 = 1;
/// Candidates drawn by the falsifiability probe.
pub const PROBE_TRIALS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Command-line overrides; `None` defers to the problem file, then to the
/// built-in default.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub order: Option<BaseOrder>,
    pub opvars_first: Option<bool>,
    pub minimize: Option<bool>,
    pub verify: Option<bool>,
    pub oracle: Option<bool>,
    pub seed: Option<u64>,
    pub output: OutputFormat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Settings {
    order: BaseOrder,
    opvars_first: bool,
    minimize: bool,
    verify: bool,
    oracle: bool,
    seed: u64,
}

impl Settings {
    fn resolve(flags: &Flags, problem: &ProblemFile) -> Self {
        let o = &problem.options;
        Settings {
            order: flags.order.or(o.order).unwrap_or(BaseOrder::DegRevLex),
            opvars_first: flags.opvars_first.or(o.opvars_first).unwrap_or(true),
            minimize: flags.minimize.or(o.minimize).unwrap_or(false),
            verify: flags.verify.or(o.verify).unwrap_or(true),
            oracle: flags.oracle.or(o.oracle).unwrap_or(false),
            seed: flags.seed.or(o.seed).unwrap_or(DEFAULT_SEED),
        }
    }
}

/// The machine-readable result, serialized with fields in this order.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub format_version: u32,
    pub algebra: String,
    pub order: String,
    pub rows: Vec<Vec<String>>,
    pub verified: bool,
    pub oracle_agrees: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    InputError = 1,
    CheckFailed = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    /// Diagnostics for stderr.
    pub messages: Vec<String>,
    pub status: ExitStatus,
}

impl Outcome {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => render_json(&self.report),
            OutputFormat::Text => render_text(&self.report),
        }
    }
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// Rows as a bracketed matrix with left-aligned columns.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra: {}  order: {}", report.algebra, report.order);
    let cols = report.rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| report.rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    for row in &report.rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "[ {} ]", cells.join("  ").trim_end());
    }
    let _ = writeln!(out, "verified: {}", report.verified);
    let oracle = match report.oracle_agrees {
        Some(b) => b.to_string(),
        None => "n/a".into(),
    };
    let _ = writeln!(out, "oracle agrees: {oracle}");
    out
}

fn oracle_kernel(problem: &ProblemFile, cfg: &OpConfig) -> Result<Option<Submodule>, Error> {
    let spec = &problem.spec;
    let route = match spec.family() {
        AlgebraFamily::Weyl => weyl_oracle_kernel,
        AlgebraFamily::Difference => difference_oracle_kernel,
        _ => return Ok(None),
    };
    if problem.signals.iter().flatten().any(|s| s.lambda.is_some()) {
        return Ok(None);
    }
    let kernels = problem
        .signals
        .iter()
        .map(|w| {
            let p: Vec<OrePoly> = w.iter().map(|s| s.poly.clone()).collect();
            route(spec, &p, cfg)
        })
        .collect::<Result<Vec<_>, _>>()?;
    if kernels.len() == 1 {
        Ok(kernels.into_iter().next())
    } else {
        intersect(&kernels, cfg).map(Some)
    }
}

fn verify(
    problem: &ProblemFile,
    set: &SignalSet,
    rep: &KernelRepresentation,
    seed: u64,
    messages: &mut Vec<String>,
) -> Result<bool, Error> {
    let report = check_annihilation(rep, set)?;
    for (r, s) in report.failures() {
        messages.push(format!("row {} does not annihilate signal {}", r + 1, s + 1));
    }
    let mut ok = report.pass;
    if !problem.expected.is_empty() {
        let want = Submodule::new(&problem.spec, set.dim(), problem.expected.clone())?;
        if !module_equal(&want, &rep.submodule(set.dim())?)? {
            messages.push("computed kernel differs from the expected rows".into());
            ok = false;
        }
    }
    let pure = problem.signals.iter().flatten().all(|s| s.lambda.is_none());
    if ok && pure && problem.signals.len() == 1 {
        let p: Vec<OrePoly> = problem.signals[0].iter().map(|s| s.poly.clone()).collect();
        if p.iter().any(|x| !x.is_zero()) {
            let degree = p.iter().map(OrePoly::total_degree).max().unwrap_or(0).max(1);
            let probe = falsifiability_probe(rep, &p, PROBE_TRIALS, degree, seed)?;
            for (i, t) in probe.trials.iter().enumerate() {
                if t.falsified_by.is_none() {
                    messages.push(format!("probe candidate {} is not rejected by any row", i + 1));
                }
            }
            ok = probe.pass;
        }
    }
    Ok(ok)
}

/// Runs the pipeline. `Err` means the input could not be processed.
pub fn run(problem: &ProblemFile, flags: &Flags) -> Result<Outcome, Error> {
    let settings = Settings::resolve(flags, problem);
    let spec = &problem.spec;
    let cfg = OpConfig::with_order(MonomialOrder::new(spec, settings.order, settings.opvars_first));
    let set = SignalSet::new(spec, problem.signals.clone())?;
    let full = vmpum_of(&set, &cfg)?;
    let m = set.dim();
    let mut messages = Vec::new();
    let mut failed = false;

    let rep = if settings.minimize {
        let small = minimize_generators(&full, Minimizer::Greedy, &cfg)?;
        if !module_equal(&small.submodule(m)?, &full.submodule(m)?)? {
            messages.push("minimized rows do not generate the full kernel".into());
            failed = true;
        }
        small
    } else {
        full.clone()
    };

    let verified = if settings.verify {
        let ok = verify(problem, &set, &rep, settings.seed, &mut messages)?;
        failed |= !ok;
        ok
    } else {
        false
    };

    let oracle_agrees = if settings.oracle {
        match oracle_kernel(problem, &cfg)? {
            Some(k) => {
                let agrees = module_equal(&k, &full.submodule(m)?)?;
                if !agrees {
                    messages.push("oracle kernel differs from the computed kernel".into());
                    failed = true;
                }
                Some(agrees)
            }
            None => {
                messages.push(format!(
                    "no oracle for {} with these signals",
                    spec.family().name()
                ));
                None
            }
        }
    } else {
        None
    };

    Ok(Outcome {
        report: Report {
            format_version: FORMAT_VERSION,
            algebra: spec.family().name().to_string(),
            order: settings.order.name().to_string(),
            rows: rep.format_rows(),
            verified,
            oracle_agrees,
        },
        messages,
        status: if failed { ExitStatus::CheckFailed } else { ExitStatus::Success },
    })
}
