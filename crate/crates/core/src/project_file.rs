//! JSON project files and result documents.
//!
//! A project file holds `n` and up to two `n × n` lag matrices:
//!
//! ```json
//! {
//!   "n": 3,
//!   "start_finish": [[4, 1, 1], [2, 2, 0], [0, 1, 3]],
//!   "start_start": [[null, -2, 1], [0, null, 2], [-1, null, null]]
//! }
//! ```
//!
//! `null` in `start_start` means no lag (`𝟘`). Integer-valued numbers are
//! always written without a fraction or exponent so output is byte-stable.
//! Indices in result documents are 1-based.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matvec::{Matrix, Vector};
use crate::scheduling::{
    latest_schedule, max_completion_spread, max_completion_spread_constrained, max_initiation_spread, Project,
    Schedule,
};
use crate::optimizer::SolutionReport;
use crate::semiring::{MaxPlus, Semifield};

/// A finite number. Integral values serialize as JSON integers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

const EXACT_INT: f64 = 9_007_199_254_740_992.0;

impl Serialize for Num {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let v = self.0;
        if v.fract() == 0.0 && v.abs() < EXACT_INT {
            serializer.serialize_i64(v as i64)
        } else {
            serializer.serialize_f64(v)
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        f64::deserialize(deserializer).map(Num)
    }
}

impl From<MaxPlus> for Num {
    fn from(v: MaxPlus) -> Self {
        Num(v.value())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("cannot parse project file: {0}")]
pub struct ParseError(#[from] serde_json::Error);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start_finish: Option<Vec<Vec<Option<Num>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start_start: Option<Vec<Vec<Option<Num>>>>,
}

fn lag_matrix(rows: &[Vec<Option<Num>>], n: usize, key: &str, allow_null: bool) -> Result<Matrix<MaxPlus>> {
    if rows.len() != n {
        return Err(Error::InvariantViolation(format!("{key} has {} rows, expected n = {n}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvariantViolation(format!(
                "{key} row {} has {} entries, expected n = {n}",
                i + 1,
                row.len()
            )));
        }
        let mut values = Vec::with_capacity(n);
        for (j, v) in row.iter().enumerate() {
            match v {
                Some(Num(x)) => values.push(MaxPlus::new(*x)?),
                None if allow_null => values.push(MaxPlus::ZERO),
                None => {
                    return Err(Error::InvariantViolation(format!(
                        "{key} must be fully specified; row {}, column {} is null",
                        i + 1,
                        j + 1
                    )))
                }
            }
        }
        out.push(values);
    }
    Matrix::from_rows(out)
}

fn lag_rows(m: &Matrix<MaxPlus>) -> Vec<Vec<Option<Num>>> {
    m.to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(|v| (!v.is_zero()).then(|| Num::from(v))).collect())
        .collect()
}

impl ProjectFile {
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("project files always serialize");
        out.push('\n');
        out
    }

    pub fn from_project(project: &Project<MaxPlus>) -> Self {
        ProjectFile {
            n: project.activities(),
            start_finish: project.start_finish().map(lag_rows),
            start_start: project.start_start().map(lag_rows),
        }
    }

    pub fn to_project(&self) -> Result<Project<MaxPlus>> {
        if self.n == 0 {
            return Err(Error::InvariantViolation("n must be at least 1".into()));
        }
        let a = self
            .start_finish
            .as_deref()
            .map(|rows| lag_matrix(rows, self.n, "start_finish", false))
            .transpose()?;
        let c = self
            .start_start
            .as_deref()
            .map(|rows| lag_matrix(rows, self.n, "start_start", true))
            .transpose()?;
        Project::new(a, c)
    }
}

/// Which scheduling problem to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    /// Spread of completion times under start-finish lags.
    StartFinish,
    /// Spread of initiation times under start-start lags.
    StartStart,
    /// Spread of completion times under both.
    Combined,
}

impl ProblemKind {
    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::StartFinish => "sf",
            ProblemKind::StartStart => "ss",
            ProblemKind::Combined => "combined",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "sf" => Some(ProblemKind::StartFinish),
            "ss" => Some(ProblemKind::StartStart),
            "combined" => Some(ProblemKind::Combined),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Infeasible,
    InvalidInput,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDoc {
    pub k: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub pinned_index: usize,
    pub pinned_value: Num,
    pub upper_bounds: Vec<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleDoc {
    pub initiation: Vec<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completion: Option<Vec<Num>>,
    pub span: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Num>,
    /// `"x"` when families bound initiation times directly, `"u"` when they
    /// bound the generator with `x = C* u`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variable: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub families: Option<Vec<FamilyDoc>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub schedules: Vec<ScheduleDoc>,
}

fn nums(v: &Vector<MaxPlus>) -> Vec<Num> {
    v.iter().map(Num::from).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    /// Shift applied to the latest schedules.
    pub alpha: f64,
    /// Emit only `delta` and the latest schedules.
    pub latest_only: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { alpha: 0.0, latest_only: false }
    }
}

impl ResultDocument {
    pub fn failure(err: &Error) -> Self {
        ResultDocument {
            status: if err.is_infeasible() { Status::Infeasible } else { Status::InvalidInput },
            message: Some(err.to_string()),
            delta: None,
            variable: None,
            pairs: None,
            families: None,
            schedules: Vec::new(),
        }
    }

    fn success(
        report: &SolutionReport<MaxPlus>,
        variable: &str,
        schedules: &[Schedule<MaxPlus>],
        opts: &RunOptions,
    ) -> Self {
        let (pairs, families) = if opts.latest_only {
            (None, None)
        } else {
            (
                Some(report.pairs.iter().map(|p| PairDoc { k: p.k + 1, s: p.s + 1 }).collect()),
                Some(
                    report
                        .families
                        .iter()
                        .map(|f| FamilyDoc {
                            pinned_index: f.pinned_index() + 1,
                            pinned_value: f.pinned_value().into(),
                            upper_bounds: nums(f.upper_bounds()),
                        })
                        .collect(),
                ),
            )
        };
        ResultDocument {
            status: Status::Ok,
            message: None,
            delta: Some(report.delta.into()),
            variable: Some(variable.to_string()),
            pairs,
            families,
            schedules: schedules
                .iter()
                .map(|s| ScheduleDoc {
                    initiation: nums(&s.initiation),
                    completion: s.completion.as_ref().map(nums),
                    span: s.span.into(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("result documents always serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let fmt_vec = |v: &[Num]| {
            let parts: Vec<String> = v.iter().map(|n| MaxPlus::new(n.0).map_or_else(|_| n.0.to_string(), |m| m.to_string())).collect();
            format!("({})", parts.join(", "))
        };
        let fmt_num = |n: Num| fmt_vec(&[n]).trim_matches(|c| c == '(' || c == ')').to_string();
        let mut out = String::new();
        let status = match self.status {
            Status::Ok => "ok",
            Status::Infeasible => "infeasible",
            Status::InvalidInput => "invalid_input",
        };
        let _ = writeln!(out, "status: {status}");
        if let Some(msg) = &self.message {
            let _ = writeln!(out, "message: {msg}");
        }
        if let Some(delta) = self.delta {
            let _ = writeln!(out, "delta: {}", fmt_num(delta));
        }
        let var = self.variable.as_deref().unwrap_or("x");
        if let (Some(pairs), Some(families)) = (&self.pairs, &self.families) {
            for (pair, fam) in pairs.iter().zip(families) {
                let terms: Vec<String> = fam
                    .upper_bounds
                    .iter()
                    .enumerate()
                    .map(|(j, b)| {
                        let rel = if j + 1 == fam.pinned_index { "=" } else { "<=" };
                        format!("{var}{} {rel} {}", j + 1, fmt_num(*b))
                    })
                    .collect();
                let _ = writeln!(out, "family k={} s={}: {}", pair.k, pair.s, terms.join(", "));
            }
        }
        for (i, s) in self.schedules.iter().enumerate() {
            let _ = write!(out, "schedule {}: initiation {}", i + 1, fmt_vec(&s.initiation));
            if let Some(y) = &s.completion {
                let _ = write!(out, ", completion {}", fmt_vec(y));
            }
            let _ = writeln!(out, ", span {}", fmt_num(s.span));
        }
        out
    }
}

/// Solves `kind` for `project` and packages the outcome; failures become a
/// document with a non-`ok` status.
pub fn solve_project(kind: ProblemKind, project: &Project<MaxPlus>, opts: &RunOptions) -> ResultDocument {
    match try_solve(kind, project, opts) {
        Ok(doc) => doc,
        Err(err) => ResultDocument::failure(&err),
    }
}

fn missing(key: &str, kind: ProblemKind) -> Error {
    Error::InvariantViolation(format!("problem '{}' needs a {key} matrix", kind.name()))
}

fn try_solve(kind: ProblemKind, project: &Project<MaxPlus>, opts: &RunOptions) -> Result<ResultDocument> {
    let alpha = MaxPlus::new(opts.alpha)?;
    if alpha.is_zero() {
        return Err(Error::InvariantViolation("alpha must be finite".into()));
    }
    match kind {
        ProblemKind::StartFinish => {
            let a = project.start_finish().ok_or_else(|| missing("start_finish", kind))?;
            let report = max_completion_spread(a)?;
            let schedules = latest_schedule(&report, None, Some(a), alpha)?;
            Ok(ResultDocument::success(&report, "x", &schedules, opts))
        }
        ProblemKind::StartStart => {
            let c = project.start_start().ok_or_else(|| missing("start_start", kind))?;
            let out = max_initiation_spread(c)?;
            let schedules = latest_schedule(&out.report, Some(&out.closure), None, alpha)?;
            Ok(ResultDocument::success(&out.report, "u", &schedules, opts))
        }
        ProblemKind::Combined => {
            let a = project.start_finish().ok_or_else(|| missing("start_finish", kind))?;
            let c = project.start_start().ok_or_else(|| missing("start_start", kind))?;
            let out = max_completion_spread_constrained(a, c)?;
            let schedules = latest_schedule(&out.report, Some(&out.closure), Some(a), alpha)?;
            Ok(ResultDocument::success(&out.report, "u", &schedules, opts))
        }
    }
}
