//! Runner over the check registry: configuration, parallel execution and
//! text or JSON reports.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::verify::{readings, registry, run_spec, CheckResult, CheckSpec, Reading, Status, Variant, MIN_ORDER};

/// Environment variable overriding every registry default order.
pub const DEFAULT_ORDER_ENV: &str = "DARBOUX_DEFAULT_ORDER";

/// Report schema version.
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected text or json)")),
        }
    }
}

/// Which readings of the ambiguous formulas to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariantPolicy {
    Corrected,
    PaperLiteral,
    Both,
}

impl FromStr for VariantPolicy {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "corrected" => Ok(VariantPolicy::Corrected),
            "paper-literal" => Ok(VariantPolicy::PaperLiteral),
            "both" => Ok(VariantPolicy::Both),
            _ => Err(format!("unknown variant `{s}` (expected corrected, paper-literal or both)")),
        }
    }
}

impl VariantPolicy {
    fn variants(self) -> &'static [Variant] {
        match self {
            VariantPolicy::Corrected => &[Variant::Corrected],
            VariantPolicy::PaperLiteral => &[Variant::PaperLiteral],
            VariantPolicy::Both => &[Variant::Corrected, Variant::PaperLiteral],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// Selected check names; empty selects all.
    pub checks: Vec<String>,
    pub order: Option<usize>,
    pub format: Format,
    /// Worker threads; `None` picks one per job, bounded by the cores.
    pub jobs: Option<usize>,
    pub variant: VariantPolicy,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            checks: Vec::new(),
            order: None,
            format: Format::Text,
            jobs: None,
            variant: VariantPolicy::Corrected,
        }
    }
}

/// One unit of work.
#[derive(Clone, Copy, Debug)]
struct Job {
    spec: CheckSpec,
    order: usize,
    variant: Variant,
}

/// Parses `DARBOUX_DEFAULT_ORDER` if set.
pub fn env_default_order() -> Result<Option<usize>> {
    match std::env::var(DEFAULT_ORDER_ENV) {
        Err(_) => Ok(None),
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::InvalidConfig(format!("{DEFAULT_ORDER_ENV}={s} is not a nonnegative integer"))),
    }
}

impl RunConfig {
    /// The selected specs; unknown names and small orders are rejected.
    pub fn selected(&self) -> Result<Vec<CheckSpec>> {
        let reg = registry();
        if self.checks.is_empty() || self.checks.iter().any(|c| c == "all") {
            return Ok(reg);
        }
        let mut out = Vec::new();
        for name in &self.checks {
            let spec = reg
                .iter()
                .find(|c| c.name == name)
                .ok_or_else(|| Error::UnknownCheck(name.clone()))?;
            if !out.iter().any(|c: &CheckSpec| c.name == spec.name) {
                out.push(*spec);
            }
        }
        out.sort_by_key(|c| c.name);
        Ok(out)
    }

    fn jobs_for(&self, default_override: Option<usize>) -> Result<Vec<Job>> {
        if self.jobs == Some(0) {
            return Err(Error::InvalidConfig("--jobs must be at least 1".into()));
        }
        for o in [self.order, default_override].into_iter().flatten() {
            if o < MIN_ORDER {
                return Err(Error::InvalidConfig(format!("order {o} is below {MIN_ORDER}")));
            }
        }
        let mut jobs = Vec::new();
        for spec in self.selected()? {
            let order = self.order.or(default_override).unwrap_or(spec.default_order);
            if spec.reading.is_some() {
                for &variant in self.variant.variants() {
                    jobs.push(Job { spec, order, variant });
                }
            } else {
                jobs.push(Job {
                    spec,
                    order,
                    variant: Variant::Corrected,
                });
            }
        }
        Ok(jobs)
    }
}

/// Outcome of each reading's certifying checks.
#[derive(Clone, Debug, Serialize)]
pub struct ReadingReport {
    pub name: String,
    pub corrected: String,
    pub paper_literal: String,
    pub outcomes: Vec<ReadingOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReadingOutcome {
    pub check: String,
    pub variant: Variant,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: u32,
    pub config: RunConfig,
    pub results: Vec<CheckResult>,
    pub readings: Vec<ReadingReport>,
}

fn reading_reports(results: &[CheckResult]) -> Vec<ReadingReport> {
    let table: Vec<Reading> = readings().to_vec();
    let specs = registry();
    table
        .into_iter()
        .map(|r| {
            let outcomes = results
                .iter()
                .filter(|res| specs.iter().any(|s| s.name == res.name && s.reading == Some(r)))
                .filter_map(|res| {
                    res.variant.map(|variant| ReadingOutcome {
                        check: res.name.clone(),
                        variant,
                        status: res.status,
                    })
                })
                .collect();
            ReadingReport {
                name: r.name.to_string(),
                corrected: r.corrected.to_string(),
                paper_literal: r.paper_literal.to_string(),
                outcomes,
            }
        })
        .collect()
}

/// Runs the configured checks; results are sorted by name, then variant.
pub fn execute(config: &RunConfig) -> Result<Report> {
    let jobs = config.jobs_for(env_default_order()?)?;
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    let threads = config.jobs.unwrap_or_else(|| jobs.len().clamp(1, cores));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    let mut results: Vec<CheckResult> =
        pool.install(|| jobs.par_iter().map(|j| run_spec(&j.spec, j.order, j.variant)).collect());
    results.sort_by(|a, b| (&a.name, a.variant).cmp(&(&b.name, b.variant)));
    let readings = reading_reports(&results);
    Ok(Report {
        version: REPORT_VERSION,
        config: config.clone(),
        results,
        readings,
    })
}

/// 0 if everything passed, 1 if some check failed, 2 if some check errored.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    if results.iter().any(|r| r.status == Status::Error) {
        2
    } else if results.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

/// One line per registered check: name, anchor, default order, tower.
pub fn list_checks() -> String {
    let reg = registry();
    let width = reg.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in reg {
        let _ = writeln!(
            out,
            "{:width$}  order {:>3}  {:<10}  {}",
            c.name, c.default_order, c.tower, c.anchor
        );
    }
    out
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for r in &report.results {
        let variant = r.variant.map_or(String::new(), |v| format!(" [{}]", v.as_str()));
        let order = r.order.map_or("exact".to_string(), |o| format!("order {o}"));
        let _ = writeln!(
            out,
            "{:<5} {}{}  {}  {}  {} ms",
            r.status.as_str().to_uppercase(),
            r.name,
            variant,
            order,
            r.tower,
            r.elapsed_ms
        );
        if let Some(e) = &r.error {
            let _ = writeln!(out, "      error: {e}");
        }
        if let Some(m) = &r.first_mismatch {
            let _ = writeln!(out, "      first mismatch in {} at x^{}: {} != {}", m.item, m.exponent, m.lhs, m.rhs);
        }
        for f in &r.failed_items {
            let _ = writeln!(out, "      failed: {f}");
        }
        for n in &r.notes {
            let _ = writeln!(out, "      note: {n}");
        }
    }
    let count = |s: Status| report.results.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} passed, {} failed, {} errors",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Error)
    );
    for rr in &report.readings {
        if rr.outcomes.is_empty() {
            continue;
        }
        let _ = writeln!(out, "reading {}:", rr.name);
        let _ = writeln!(out, "  corrected:     {}", rr.corrected);
        let _ = writeln!(out, "  paper-literal: {}", rr.paper_literal);
        for o in &rr.outcomes {
            let _ = writeln!(out, "  {} [{}]: {}", o.check, o.variant.as_str(), o.status.as_str());
        }
    }
    out
}

/// Executes and prints the report; returns the process exit code.
pub fn run(config: &RunConfig, out: &mut impl std::io::Write, err: &mut impl std::io::Write) -> i32 {
    match execute(config) {
        Ok(report) => {
            let text = match config.format {
                Format::Json => render_json(&report),
                Format::Text => render_text(&report),
            };
            let _ = writeln!(out, "{}", text.trim_end());
            exit_code(&report.results)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(checks: &[&str]) -> RunConfig {
        RunConfig {
            checks: checks.iter().map(|s| s.to_string()).collect(),
            ..RunConfig::default()
        }
    }

    #[test]
    fn list_has_one_line_per_check() {
        let l = list_checks();
        assert_eq!(l.lines().count(), registry().len());
        assert!(l.lines().any(|line| line.starts_with("case3a_theorem") && line.contains("Q(s7)")));
        assert!(l.lines().any(|line| line.starts_with("fiber_product") && line.contains("fiber product")));
    }

    #[test]
    fn unknown_check_is_a_configuration_error() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(&config(&["nonexistent"]), &mut o, &mut e), 2);
        assert!(o.is_empty());
        let mut c = config(&["octa1"]);
        c.order = Some(3);
        assert_eq!(run(&c, &mut o, &mut e), 2);
    }

    #[test]
    fn literal_curve_fails_and_both_lists_two_entries() {
        let mut c = config(&["fiber_product", "rh_genus"]);
        c.variant = VariantPolicy::PaperLiteral;
        let r = execute(&c).unwrap();
        assert_eq!(exit_code(&r.results), 1);
        c.variant = VariantPolicy::Both;
        let r = execute(&c).unwrap();
        let names: Vec<(&str, Option<Variant>)> = r.results.iter().map(|x| (x.name.as_str(), x.variant)).collect();
        assert_eq!(
            names,
            vec![
                ("fiber_product", Some(Variant::Corrected)),
                ("fiber_product", Some(Variant::PaperLiteral)),
                ("rh_genus", None),
            ]
        );
        let curve = r.readings.iter().find(|x| x.name == "curve_cubic_term").unwrap();
        assert_eq!(curve.outcomes.len(), 2);
    }

    #[test]
    fn json_is_stable_modulo_timings() {
        let mut c = config(&["octa1", "compose_psi7"]);
        c.format = Format::Json;
        c.order = Some(12);
        let strip = |r: Report| {
            let mut r = r;
            r.results.iter_mut().for_each(|x| x.elapsed_ms = 0);
            render_json(&r)
        };
        let a = strip(execute(&c).unwrap());
        let b = strip(execute(&c).unwrap());
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["results"][1]["name"], "octa1");
        assert_eq!(v["results"][1]["status"], "pass");
        assert!(v["results"][1]["first_mismatch"].is_null());
    }

    #[test]
    fn parsing_options() {
        assert_eq!("both".parse::<VariantPolicy>(), Ok(VariantPolicy::Both));
        assert!("literal".parse::<VariantPolicy>().is_err());
        assert_eq!("json".parse::<Format>(), Ok(Format::Json));
        assert!("xml".parse::<Format>().is_err());
    }
}
