//! The registry of named, order-parameterized verifications.
//!
//! Every check builds [`Evidence`]: pairs of series compared coefficient by
//! coefficient up to the requested order, and exact boolean facts. Ambiguous
//! source readings are modelled as a [`Reading`] with a corrected and a
//! paper-literal [`Variant`].

mod checks;
pub mod linalg;
pub mod named;

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{fmt_rational, Rational};
use crate::series::{RadicalSeries, TruncSeries};

pub use checks::{
    cubic_transform, derived_r2, proposition_family, proposition_tower, quadratic_transform, rank_from_proposition,
    theorem_constants, Degree3Sides, TRANSFORM_SAMPLES,
};
pub use linalg::{rank_check, solve_connection_constants};

/// Which reading of an ambiguous formula to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Corrected,
    PaperLiteral,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Corrected => "corrected",
            Variant::PaperLiteral => "paper-literal",
        }
    }
}

/// An ambiguous printed formula and its two readings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reading {
    pub name: &'static str,
    pub corrected: &'static str,
    pub paper_literal: &'static str,
}

pub const CURVE_CUBIC_TERM: Reading = Reading {
    name: "curve_cubic_term",
    corrected: "v^2 = u(1 - 63u/4 + 91u^2 - 231u^3 + 224u^4)",
    paper_literal: "v^2 = u(1 - 63u/4 + 91u^2 - 231u^2 + 224u^4)",
};

pub const PSI4_QUADRATIC_FACTOR: Reading = Reading {
    name: "psi4_quadratic_factor",
    corrected: "(2x^2 - 21x + 56)^2",
    paper_literal: "(2x^2 - 21 + 56)^2",
};

pub const R2_QUADRATIC_COEFFICIENT: Reading = Reading {
    name: "r2_quadratic_coefficient",
    corrected: "R2 = 1 - 33x/32 + 13x^2/32 - 9x^3/128 + x^4/224",
    paper_literal: "R2 = 1 - 33x/32 + 13x^2/22 - 9x^3/128 + x^4/224",
};

pub const PSI3_NORMALIZED_SIGN: Reading = Reading {
    name: "psi3_normalized_sign",
    corrected: "Psi3 = -49x^3 Q3^3 / (27 P3^7)",
    paper_literal: "Psi3 = 49x^3 Q3^3 / (27 P3^7)",
};

pub const RADICAL_R1_POWER: Reading = Reading {
    name: "radical_r1_power",
    corrected: "3F2(3/14, 5/14, 13/14; 1/4, 3/4; Psi4) = P4^(3/2) sqrt(R1) / Q8 (1 - x^2/4 + x^3/28)",
    paper_literal: "3F2(3/14, 5/14, 13/14; 1/4, 3/4; Psi4) = P4^(3/2) R1 / Q8 (1 - x^2/4 + x^3/28)",
};

/// All ambiguous readings known to the registry.
pub fn readings() -> [Reading; 5] {
    [
        CURVE_CUBIC_TERM,
        PSI4_QUADRATIC_FACTOR,
        R2_QUADRATIC_COEFFICIENT,
        PSI3_NORMALIZED_SIGN,
        RADICAL_R1_POWER,
    ]
}

/// Parameters handed to a check builder.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub order: usize,
    pub variant: Variant,
}

impl Ctx {
    pub fn corrected(&self) -> bool {
        self.variant == Variant::Corrected
    }
}

/// One compared fact.
#[derive(Clone, Debug)]
pub enum Item {
    Series {
        label: String,
        lhs: RadicalSeries,
        rhs: RadicalSeries,
    },
    Exact {
        label: String,
        holds: bool,
        detail: Option<String>,
    },
}

/// What a check produced.
#[derive(Clone, Debug, Default)]
pub struct Evidence {
    pub items: Vec<Item>,
    pub notes: Vec<String>,
}

impl Evidence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn series(&mut self, label: impl Into<String>, lhs: &TruncSeries, rhs: &TruncSeries) -> &mut Self {
        self.radical(label, RadicalSeries::from_series(lhs), RadicalSeries::from_series(rhs))
    }

    pub fn radical(&mut self, label: impl Into<String>, lhs: RadicalSeries, rhs: RadicalSeries) -> &mut Self {
        self.items.push(Item::Series {
            label: label.into(),
            lhs,
            rhs,
        });
        self
    }

    pub fn exact(&mut self, label: impl Into<String>, holds: bool) -> &mut Self {
        self.items.push(Item::Exact {
            label: label.into(),
            holds,
            detail: None,
        });
        self
    }

    pub fn exact_with(&mut self, label: impl Into<String>, holds: bool, detail: impl Into<String>) -> &mut Self {
        self.items.push(Item::Exact {
            label: label.into(),
            holds,
            detail: Some(detail.into()),
        });
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }
}

/// A registered check.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub name: &'static str,
    /// Where the checked statement lives, in words.
    pub anchor: &'static str,
    /// The number field the check works over.
    pub tower: &'static str,
    pub default_order: usize,
    /// The ambiguous reading this check certifies, if any.
    pub reading: Option<Reading>,
    pub build: fn(&Ctx) -> Result<Evidence>,
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec")
            .field("name", &self.name)
            .field("anchor", &self.anchor)
            .field("tower", &self.tower)
            .field("default_order", &self.default_order)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// First disagreeing coefficient, field elements in the series dump syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchReport {
    pub item: String,
    /// Position counted from the lowest exponent of the pair.
    pub index: usize,
    /// The exponent of `x` at that position.
    pub exponent: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub variant: Option<Variant>,
    pub reading: Option<String>,
    pub status: Status,
    /// Coefficients compared per series; `None` for purely exact checks.
    pub order: Option<usize>,
    pub tower: String,
    pub first_mismatch: Option<MismatchReport>,
    pub failed_items: Vec<String>,
    pub notes: Vec<String>,
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

/// Smallest order a check may be run at.
pub const MIN_ORDER: usize = 8;

/// Every registered check, sorted by name.
pub fn registry() -> Vec<CheckSpec> {
    let mut v = checks::all();
    v.sort_by_key(|c| c.name);
    v
}

pub fn find(name: &str) -> Result<CheckSpec> {
    registry()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Runs a check by name at `order` with the corrected readings.
pub fn run_check(name: &str, order: usize) -> Result<CheckResult> {
    run_check_variant(name, order, Variant::Corrected)
}

pub fn run_check_variant(name: &str, order: usize, variant: Variant) -> Result<CheckResult> {
    let spec = find(name)?;
    if order < MIN_ORDER {
        return Err(Error::InvalidConfig(format!("order {order} is below {MIN_ORDER}")));
    }
    Ok(run_spec(&spec, order, variant))
}

/// Runs a spec and judges its evidence.
pub fn run_spec(spec: &CheckSpec, order: usize, variant: Variant) -> CheckResult {
    let start = Instant::now();
    let ctx = Ctx { order, variant };
    let built = (spec.build)(&ctx);
    let mut result = CheckResult {
        name: spec.name.to_string(),
        variant: spec.reading.map(|_| variant),
        reading: spec.reading.map(|r| {
            match variant {
                Variant::Corrected => r.corrected,
                Variant::PaperLiteral => r.paper_literal,
            }
            .to_string()
        }),
        status: Status::Pass,
        order: None,
        tower: spec.tower.to_string(),
        first_mismatch: None,
        failed_items: Vec::new(),
        notes: Vec::new(),
        error: None,
        elapsed_ms: 0,
    };
    match built.and_then(|ev| judge(&ev, order, &mut result).map(|()| ev)) {
        Ok(ev) => result.notes = ev.notes,
        Err(e) => {
            result.status = Status::Error;
            result.error = Some(e.to_string());
        }
    }
    result.elapsed_ms = start.elapsed().as_millis() as u64;
    result
}

fn judge(ev: &Evidence, order: usize, out: &mut CheckResult) -> Result<()> {
    if ev.items.is_empty() {
        return Err(Error::InvalidConfig("check produced no evidence".into()));
    }
    for item in &ev.items {
        match item {
            Item::Series { label, lhs, rhs } => {
                let cmp = lhs.compare(rhs)?;
                let reached = &cmp.offset + Rational::from_integer((cmp.compared as i64).into());
                if reached < Rational::from_integer((order as i64).into()) {
                    return Err(Error::InvalidConfig(format!(
                        "{label}: known through x^{}, {order} coefficients requested",
                        fmt_rational(&reached)
                    )));
                }
                out.order = Some(order);
                let absolute = |i: usize| &cmp.offset + Rational::from_integer((i as i64).into());
                if let Some(m) = cmp
                    .mismatch
                    .filter(|m| absolute(m.index) < Rational::from_integer((order as i64).into()))
                {
                    out.status = Status::Fail;
                    out.failed_items.push(label.clone());
                    if out.first_mismatch.is_none() {
                        out.first_mismatch = Some(MismatchReport {
                            item: label.clone(),
                            exponent: fmt_rational(&absolute(m.index)),
                            index: m.index,
                            lhs: m.lhs.to_string(),
                            rhs: m.rhs.to_string(),
                        });
                    }
                }
            }
            Item::Exact { label, holds, detail } => {
                if !holds {
                    out.status = Status::Fail;
                    out.failed_items.push(match detail {
                        Some(d) => format!("{label}: {d}"),
                        None => label.clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
