//! Maximization of `q⁻Bx(Ax)⁻p` over regular vectors `x`.
//!
//! The maximum is `Δ = q⁻BA⁻p`. Writing `Δ` column by column,
//! `Δ = ⊕ᵢ (q⁻bᵢ)(aᵢ⁻p)`, every maximizer is, up to a factor `α > 𝟘`, a
//! vector with
//!
//! ```text
//! x_k = a_k⁻p,    x_j ≤ a_sj⁻¹ p_s  (j ≠ k)
//! ```
//!
//! where `k` is a column attaining `Δ` and `s` a row attaining
//! `a_k⁻p = ⊕ᵢ a_ik⁻¹ pᵢ`. Ties in `k` or `s` each contribute their own
//! family, and the union of all of them is the full set of maximizers.

use crate::error::{Error, Result};
use crate::matvec::{Matrix, Vector};
use crate::semiring::Semifield;
use crate::solvers::BoxFamily;

/// Data of one problem: `A` is m×n with no zero entries, `B` is l×n and
/// column regular, `p` and `q` are regular.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance<S> {
    a: Matrix<S>,
    b: Matrix<S>,
    p: Vector<S>,
    q: Vector<S>,
}

impl<S: Semifield> ProblemInstance<S> {
    /// Builds an instance satisfying every precondition of the closed-form
    /// solution.
    pub fn new(a: Matrix<S>, b: Matrix<S>, p: Vector<S>, q: Vector<S>) -> Result<Self> {
        let inst = Self::new_relaxed(a, b, p, q)?;
        inst.check_solvable()?;
        Ok(inst)
    }

    /// Checks only shapes and the regularity of `p` and `q`. Such an instance
    /// can be evaluated for regular `x` when `A` is row regular, and passed
    /// to [`solve_constrained`], which validates the substituted matrices;
    /// [`solve_unconstrained`] rejects it unless the full preconditions hold.
    pub fn new_relaxed(a: Matrix<S>, b: Matrix<S>, p: Vector<S>, q: Vector<S>) -> Result<Self> {
        let violation = |msg: String| Err(Error::InvariantViolation(msg));
        if a.cols() != b.cols() {
            return violation(format!("A has {} columns but B has {}", a.cols(), b.cols()));
        }
        if p.dim() != a.rows() {
            return violation(format!("p has {} components but A has {} rows", p.dim(), a.rows()));
        }
        if q.dim() != b.rows() {
            return violation(format!("q has {} components but B has {} rows", q.dim(), b.rows()));
        }
        if let Some(i) = p.iter().position(|v| v.is_zero()) {
            return violation(format!("p must be regular; component {} is zero", i + 1));
        }
        if let Some(i) = q.iter().position(|v| v.is_zero()) {
            return violation(format!("q must be regular; component {} is zero", i + 1));
        }
        Ok(ProblemInstance { a, b, p, q })
    }

    fn check_solvable(&self) -> Result<()> {
        if let Some((i, j)) = self.a.find_zero_entry() {
            return Err(Error::InvariantViolation(format!(
                "A must have no zero entries; entry at row {}, column {} is zero",
                i + 1,
                j + 1
            )));
        }
        if let Some(j) = (0..self.b.cols()).find(|&j| self.b.column(j).iter().all(|v| v.is_zero())) {
            return Err(Error::InvariantViolation(format!("B must be column regular; column {} is zero", j + 1)));
        }
        Ok(())
    }

    /// The case `p = q = 𝟙`, where the objective reads `‖Bx‖‖(Ax)⁻‖`.
    pub fn norm_form(a: Matrix<S>, b: Matrix<S>) -> Result<Self> {
        let inst = Self::norm_form_relaxed(a, b)?;
        inst.check_solvable()?;
        Ok(inst)
    }

    pub fn norm_form_relaxed(a: Matrix<S>, b: Matrix<S>) -> Result<Self> {
        let p = Vector::ones(a.rows())?;
        let q = Vector::ones(b.rows())?;
        Self::new_relaxed(a, b, p, q)
    }

    pub fn a(&self) -> &Matrix<S> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<S> {
        &self.b
    }

    pub fn p(&self) -> &Vector<S> {
        &self.p
    }

    pub fn q(&self) -> &Vector<S> {
        &self.q
    }

    /// Number of unknowns.
    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    /// `q⁻ B x (A x)⁻ p`.
    pub fn evaluate_objective(&self, x: &Vector<S>) -> Result<S> {
        if x.dim() != self.dim() {
            return Err(Error::ShapeMismatch { op: "objective", left: self.a.shape(), right: (x.dim(), 1) });
        }
        if let Some(index) = x.iter().position(|v| v.is_zero()) {
            return Err(Error::NotRegular { what: "x", index });
        }
        let numerator = self.q.conjugate()?.dot(&self.b.mul_vec(x)?)?;
        let ax = self.a.mul_vec(x)?;
        let denominator = ax.conjugate()?.dot(&self.p)?;
        numerator.checked_mul(denominator)
    }

    /// `q⁻ b_i`.
    fn weighted_b_column(&self, i: usize) -> Result<S> {
        self.q.conjugate()?.dot(&self.b.column(i))
    }

    /// `a_i⁻ p`.
    fn conjugate_a_column(&self, i: usize) -> Result<S> {
        self.a.column(i).conjugate()?.dot(&self.p)
    }
}

/// Maximizing indices: column `k` of the matrices and row `s` of `A`.
/// Both are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexPair {
    pub k: usize,
    pub s: usize,
}

/// The maximum and all maximizers. Each family is stated at `α = 𝟙`;
/// the maximizer set is each family together with all its multiples by
/// `α > 𝟘`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionReport<S> {
    pub delta: S,
    pub pairs: Vec<IndexPair>,
    pub families: Vec<BoxFamily<S>>,
}

impl<S: Semifield> SolutionReport<S> {
    /// Whether `x` maximizes the objective, i.e. lies in the scaling closure
    /// of some family.
    pub fn contains(&self, x: &Vector<S>) -> Result<bool> {
        for fam in &self.families {
            if fam.contains(x, true)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Distinct maximizing columns `k`, ascending.
    pub fn maximizing_columns(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self.pairs.iter().map(|p| p.k).collect();
        ks.dedup();
        ks
    }
}

fn argmax_all<S: Semifield>(values: &[S]) -> (S, Vec<usize>) {
    let best = S::sum(values.iter().copied());
    let idx = values.iter().enumerate().filter(|(_, v)| **v == best).map(|(i, _)| i).collect();
    (best, idx)
}

/// Maximum and every maximizing family of `q⁻Bx(Ax)⁻p`. Pairs are ordered by
/// `(k, s)`.
pub fn solve_unconstrained<S: Semifield>(inst: &ProblemInstance<S>) -> Result<SolutionReport<S>> {
    inst.check_solvable()?;
    let n = inst.dim();
    let m = inst.a.rows();
    let mut terms = Vec::with_capacity(n);
    for i in 0..n {
        terms.push(inst.weighted_b_column(i)?.checked_mul(inst.conjugate_a_column(i)?)?);
    }
    let (delta, ks) = argmax_all(&terms);

    let mut pairs = Vec::new();
    let mut families = Vec::new();
    for k in ks {
        let row_terms = (0..m)
            .map(|i| inst.p.get(i).div(inst.a.get(i, k)))
            .collect::<Result<Vec<_>>>()?;
        let (pinned, ss) = argmax_all(&row_terms);
        for s in ss {
            let ps = inst.p.get(s);
            let bounds = (0..n).map(|j| ps.div(inst.a.get(s, j))).collect::<Result<Vec<_>>>()?;
            families.push(BoxFamily::new(k, pinned, Vector::new(bounds)?)?);
            pairs.push(IndexPair { k, s });
        }
    }
    Ok(SolutionReport { delta, pairs, families })
}

/// `p = q = 𝟙`: maximum `‖BA⁻‖` of `‖Bx‖‖(Ax)⁻‖`.
pub fn solve_norm_form<S: Semifield>(a: &Matrix<S>, b: &Matrix<S>) -> Result<SolutionReport<S>> {
    solve_unconstrained(&ProblemInstance::norm_form(a.clone(), b.clone())?)
}

/// Report for a problem with the constraint `Cx ≤ x`, expressed in the
/// generator variable `u` where `x = C* u`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstrainedReport<S> {
    pub report: SolutionReport<S>,
    pub closure: Matrix<S>,
}

impl<S: Semifield> ConstrainedReport<S> {
    pub fn to_x(&self, u: &Vector<S>) -> Result<Vector<S>> {
        self.closure.mul_vec(u)
    }
}

/// Maximizes `q⁻Bx(Ax)⁻p` subject to `Cx ≤ x` by substituting `x = C* u`,
/// which turns the problem into the unconstrained one for `AC*` and `BC*`.
pub fn solve_constrained<S: Semifield>(
    inst: &ProblemInstance<S>,
    c: &Matrix<S>,
) -> Result<ConstrainedReport<S>> {
    let n = inst.dim();
    if c.shape() != (n, n) {
        return Err(Error::ShapeMismatch { op: "constraint matrix", left: (n, n), right: c.shape() });
    }
    let closure = c.asterate()?;
    let sub = ProblemInstance::new(inst.a.mul(&closure)?, inst.b.mul(&closure)?, inst.p.clone(), inst.q.clone())
        .map_err(|e| match e {
            Error::InvariantViolation(msg) => {
                Error::InvariantViolation(format!("after substituting x = C*u: {msg}"))
            }
            other => other,
        })?;
    Ok(ConstrainedReport { report: solve_unconstrained(&sub)?, closure })
}
