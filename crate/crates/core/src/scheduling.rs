//! Project scheduling problems that maximize the spread of initiation or
//! completion times.
//!
//! Activities `1..n` start at `xⱼ`. A start-finish lag `aᵢⱼ` says activity `i`
//! cannot finish before `xⱼ + aᵢⱼ`, and completion happens as early as
//! possible, so `y = A ⊗ x`. A start-start lag `cᵢⱼ` requires
//! `xᵢ ≥ xⱼ + cᵢⱼ`, i.e. `C ⊗ x ≤ x`; absent lags are `𝟘`.

use crate::error::{Error, Result};
use crate::matvec::{Matrix, Vector};
use crate::optimizer::{solve_constrained, solve_norm_form, ConstrainedReport, ProblemInstance, SolutionReport};
use crate::semiring::Semifield;

#[derive(Debug, Clone, PartialEq)]
pub struct Project<S> {
    n: usize,
    start_finish: Option<Matrix<S>>,
    start_start: Option<Matrix<S>>,
}

impl<S: Semifield> Project<S> {
    pub fn new(start_finish: Option<Matrix<S>>, start_start: Option<Matrix<S>>) -> Result<Self> {
        let shape = match (&start_finish, &start_start) {
            (None, None) => {
                return Err(Error::InvariantViolation(
                    "a project needs start-finish or start-start constraints".into(),
                ))
            }
            (Some(a), None) => a.shape(),
            (None, Some(c)) => c.shape(),
            (Some(a), Some(c)) => {
                if a.shape() != c.shape() {
                    return Err(Error::ShapeMismatch { op: "project", left: a.shape(), right: c.shape() });
                }
                a.shape()
            }
        };
        if shape.0 != shape.1 {
            return Err(Error::NotSquare { rows: shape.0, cols: shape.1 });
        }
        Ok(Project { n: shape.0, start_finish, start_start })
    }

    pub fn activities(&self) -> usize {
        self.n
    }

    pub fn start_finish(&self) -> Option<&Matrix<S>> {
        self.start_finish.as_ref()
    }

    pub fn start_start(&self) -> Option<&Matrix<S>> {
        self.start_start.as_ref()
    }

    /// Checks `y = A x` and `C x ≤ x` for the constraints this project has.
    pub fn is_feasible(&self, schedule: &Schedule<S>) -> Result<bool> {
        if let Some(c) = &self.start_start {
            if !c.mul_vec(&schedule.initiation)?.entrywise_leq(&schedule.initiation) {
                return Ok(false);
            }
        }
        if let Some(a) = &self.start_finish {
            match &schedule.completion {
                Some(y) => return Ok(a.mul_vec(&schedule.initiation)? == *y),
                None => return Ok(false),
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Schedule<S> {
    pub initiation: Vector<S>,
    pub completion: Option<Vector<S>>,
    /// `‖v‖‖v⁻‖` of the completion vector when present, else of the
    /// initiation vector.
    pub span: S,
}

/// Largest deviation of completion times under start-finish constraints:
/// the norm form with `B = A`.
pub fn max_completion_spread<S: Semifield>(a: &Matrix<S>) -> Result<SolutionReport<S>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    solve_norm_form(a, a)
}

/// Largest deviation of initiation times under start-start constraints.
/// Families are over `u` with `x = C* u`.
pub fn max_initiation_spread<S: Semifield>(c: &Matrix<S>) -> Result<ConstrainedReport<S>> {
    if !c.is_irreducible()? {
        return Err(Error::NotIrreducible);
    }
    let closure = c.asterate()?;
    let report = solve_norm_form(&closure, &closure)?;
    Ok(ConstrainedReport { report, closure })
}

/// Largest deviation of completion times under both kinds of constraints.
/// Families are over `u` with `x = C* u` and `y = D u`, `D = A C*`.
pub fn max_completion_spread_constrained<S: Semifield>(
    a: &Matrix<S>,
    c: &Matrix<S>,
) -> Result<ConstrainedReport<S>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if let Some(i) = (0..a.rows()).find(|&i| a.row(i).iter().all(|v| v.is_zero())) {
        return Err(Error::InvariantViolation(format!(
            "start-finish matrix must be row regular; row {} is zero",
            i + 1
        )));
    }
    // zero entries in A are fine as long as D = A C* has none
    let inst = ProblemInstance::norm_form_relaxed(a.clone(), a.clone())?;
    solve_constrained(&inst, c)
}

/// The componentwise-latest member of every family, scaled by `alpha`,
/// mapped through `closure` when the families live in `u`, with completion
/// times from `start_finish` when given. Duplicates are dropped, keeping
/// family order.
pub fn latest_schedule<S: Semifield>(
    report: &SolutionReport<S>,
    closure: Option<&Matrix<S>>,
    start_finish: Option<&Matrix<S>>,
    alpha: S,
) -> Result<Vec<Schedule<S>>> {
    if alpha.is_zero() {
        return Err(Error::InvariantViolation("scaling factor alpha must be nonzero".into()));
    }
    let mut out: Vec<Schedule<S>> = Vec::new();
    for fam in &report.families {
        let u = fam.latest().scale(alpha)?;
        let x = match closure {
            Some(star) => star.mul_vec(&u)?,
            None => u,
        };
        if out.iter().any(|s| s.initiation == x) {
            continue;
        }
        let completion = start_finish.map(|a| a.mul_vec(&x)).transpose()?;
        let span = completion.as_ref().unwrap_or(&x).span()?;
        out.push(Schedule { initiation: x, completion, span });
    }
    Ok(out)
}
