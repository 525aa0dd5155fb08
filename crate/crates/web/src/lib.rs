//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns JSON strings so the page needs no
//! generated type glue. The functions are ordinary Rust on other targets and
//! are tested natively.

use maxspan::project_file::{solve_project, Num, ProblemKind, ProjectFile, ResultDocument, RunOptions, Status};
use maxspan::scheduling::{Project, Schedule};
use maxspan::{Error, Matrix, MaxPlus, Semifield, Vector};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

fn parse_project(project_json: &str) -> Result<Project<MaxPlus>, Error> {
    let file = ProjectFile::parse(project_json).map_err(|e| Error::InvariantViolation(e.to_string()))?;
    file.to_project()
}

fn parse_kind(kind: &str) -> Result<ProblemKind, Error> {
    ProblemKind::from_name(kind)
        .ok_or_else(|| Error::InvariantViolation(format!("unknown problem '{kind}', expected sf, ss or combined")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents always serialize")
}

/// Solves a project and returns the result document, as the CLI would print
/// it.
#[wasm_bindgen]
pub fn solve(kind: &str, project_json: &str, alpha: f64) -> String {
    let doc = parse_kind(kind).and_then(|kind| {
        let project = parse_project(project_json)?;
        Ok(solve_project(kind, &project, &RunOptions { alpha, latest_only: false }))
    });
    match doc {
        Ok(doc) => doc.to_json(),
        Err(err) => ResultDocument::failure(&err).to_json(),
    }
}

#[derive(Debug, Serialize)]
struct Evaluation {
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    feasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    completion: Option<Vec<Num>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    span: Option<Num>,
    /// Best achievable span, for comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    optimum: Option<Num>,
}

impl Evaluation {
    fn failure(err: &Error) -> Self {
        let doc = ResultDocument::failure(err);
        Evaluation { status: doc.status, message: doc.message, feasible: None, completion: None, span: None, optimum: None }
    }
}

fn nums(v: &Vector<MaxPlus>) -> Vec<Num> {
    v.iter().map(Num::from).collect()
}

fn try_evaluate(kind: &str, project_json: &str, initiation_json: &str) -> Result<Evaluation, Error> {
    let kind = parse_kind(kind)?;
    let project = parse_project(project_json)?;
    let values: Vec<f64> = serde_json::from_str(initiation_json)
        .map_err(|e| Error::InvariantViolation(format!("initiation times: {e}")))?;
    if values.len() != project.activities() {
        return Err(Error::InvariantViolation(format!(
            "expected {} initiation times, got {}",
            project.activities(),
            values.len()
        )));
    }
    let x = Vector::new(values.into_iter().map(MaxPlus::new).collect::<Result<_, _>>()?)?;
    if !x.is_regular() {
        return Err(Error::InvariantViolation("initiation times must be finite".into()));
    }

    // only the constraints the chosen problem looks at
    let relevant = match kind {
        ProblemKind::StartFinish => Project::new(project.start_finish().cloned(), None),
        ProblemKind::StartStart => Project::new(None, project.start_start().cloned()),
        ProblemKind::Combined => Project::new(project.start_finish().cloned(), project.start_start().cloned()),
    }?;
    let completion = relevant.start_finish().map(|a| a.mul_vec(&x)).transpose()?;
    let measured = completion.as_ref().unwrap_or(&x);
    let span = if measured.is_regular() { Some(Num::from(measured.span()?)) } else { None };
    let schedule = Schedule { initiation: x.clone(), completion: completion.clone(), span: MaxPlus::ONE };
    let feasible = relevant.is_feasible(&schedule)?;

    let best = solve_project(kind, &project, &RunOptions::default());
    Ok(Evaluation {
        status: best.status,
        message: best.message,
        feasible: Some(feasible),
        completion: completion.as_ref().map(nums),
        span,
        optimum: best.delta,
    })
}

/// Checks a hand-entered initiation vector against the project and reports
/// its span next to the optimum.
#[wasm_bindgen]
pub fn evaluate(kind: &str, project_json: &str, initiation_json: &str) -> String {
    match try_evaluate(kind, project_json, initiation_json) {
        Ok(ev) => to_json(&ev),
        Err(err) => to_json(&Evaluation::failure(&err)),
    }
}

#[derive(Debug, Serialize)]
struct ClosureReport {
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    irreducible: Option<bool>,
    /// `null` stands for an unbounded cycle weight of `−∞`.
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_weight: Option<Option<Num>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closure: Option<Vec<Vec<Option<Num>>>>,
}

fn lag_rows(m: &Matrix<MaxPlus>) -> Vec<Vec<Option<Num>>> {
    m.to_rows().into_iter().map(|row| row.into_iter().map(finite_num).collect()).collect()
}

fn finite_num(v: MaxPlus) -> Option<Num> {
    (!v.is_zero()).then(|| Num::from(v))
}

fn try_closure(project_json: &str) -> Result<ClosureReport, Error> {
    let project = parse_project(project_json)?;
    let c = project
        .start_start()
        .ok_or_else(|| Error::InvariantViolation("project has no start_start matrix".into()))?;
    let tr = c.tr_closure()?;
    let irreducible = c.is_irreducible()?;
    let (status, message, closure) = match c.asterate() {
        Ok(star) => (Status::Ok, None, Some(lag_rows(&star))),
        Err(err) => {
            let doc = ResultDocument::failure(&err);
            (doc.status, doc.message, None)
        }
    };
    Ok(ClosureReport { status, message, irreducible: Some(irreducible), cycle_weight: Some(finite_num(tr)), closure })
}

/// The heaviest cycle weight `Tr(C)`, the closure `C*` when it exists, and
/// whether `C` is irreducible.
#[wasm_bindgen]
pub fn closure(project_json: &str) -> String {
    match try_closure(project_json) {
        Ok(rep) => to_json(&rep),
        Err(err) => {
            let doc = ResultDocument::failure(&err);
            to_json(&ClosureReport {
                status: doc.status,
                message: doc.message,
                irreducible: None,
                cycle_weight: None,
                closure: None,
            })
        }
    }
}
