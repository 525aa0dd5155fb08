//! Solution sets of the two linear problems the optimizer rests on: the
//! scalar equation `aᵀx = d` and the inequality `Cx ≤ x`.

use crate::error::{Error, Result};
use crate::matvec::{require_regular, Matrix, Vector};
use crate::semiring::Semifield;

/// `{x : x_i = pinned_value, x_j ≤ upper_bounds[j] for j ≠ i}`.
///
/// `upper_bounds[pinned_index]` always equals `pinned_value`, so
/// `upper_bounds` is also the componentwise-largest member.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxFamily<S> {
    pinned_index: usize,
    pinned_value: S,
    upper_bounds: Vector<S>,
}

impl<S: Semifield> BoxFamily<S> {
    pub fn new(pinned_index: usize, pinned_value: S, upper_bounds: Vector<S>) -> Result<Self> {
        if pinned_index >= upper_bounds.dim() {
            return Err(Error::InvariantViolation(format!(
                "pinned index {pinned_index} out of range for dimension {}",
                upper_bounds.dim()
            )));
        }
        if pinned_value.is_zero() {
            return Err(Error::InvariantViolation("pinned value of a family must be nonzero".into()));
        }
        let mut bounds = upper_bounds.into_entries();
        bounds[pinned_index] = pinned_value;
        Ok(BoxFamily { pinned_index, pinned_value, upper_bounds: Vector::new(bounds)? })
    }

    pub fn pinned_index(&self) -> usize {
        self.pinned_index
    }

    pub fn pinned_value(&self) -> S {
        self.pinned_value
    }

    pub fn upper_bounds(&self) -> &Vector<S> {
        &self.upper_bounds
    }

    pub fn dim(&self) -> usize {
        self.upper_bounds.dim()
    }

    /// The componentwise-largest member.
    pub fn latest(&self) -> Vector<S> {
        self.upper_bounds.clone()
    }

    /// Membership test. With `allow_scaling`, asks whether some `α > 𝟘`
    /// puts `α ⊗ x` in the box; the only candidate is the `α` matching the
    /// pinned component.
    pub fn contains(&self, x: &Vector<S>, allow_scaling: bool) -> Result<bool> {
        if x.dim() != self.dim() {
            return Err(Error::ShapeMismatch {
                op: "family membership",
                left: (self.dim(), 1),
                right: (x.dim(), 1),
            });
        }
        let pinned = x.get(self.pinned_index);
        let alpha = if allow_scaling {
            if pinned.is_zero() {
                return Ok(false);
            }
            self.pinned_value.div(pinned)?
        } else {
            S::one()
        };
        for (j, (v, bound)) in x.iter().zip(self.upper_bounds.iter()).enumerate() {
            let v = alpha.mul(v);
            let ok = if j == self.pinned_index { v == self.pinned_value } else { v.leq(bound) };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every member multiplied by `alpha`.
    pub fn scaled(&self, alpha: S) -> Result<Self> {
        Self::new(self.pinned_index, alpha.checked_mul(self.pinned_value)?, self.upper_bounds.scale(alpha)?)
    }
}

/// All solutions of `aᵀx = d` for regular `a` and `d ≠ 𝟘`, as one family per
/// component: `x_i = a_i⁻¹d`, `x_j ≤ a_j⁻¹d`. Families are not deduplicated.
pub fn solve_scalar_equation<S: Semifield>(a: &Vector<S>, d: S) -> Result<Vec<BoxFamily<S>>> {
    require_regular(a, "coefficient vector")?;
    if d.is_zero() {
        return Err(Error::ZeroRightHandSide);
    }
    let bounds = Vector::new(a.iter().map(|ai| d.div(ai)).collect::<Result<_>>()?)?;
    (0..a.dim()).map(|i| BoxFamily::new(i, bounds.get(i), bounds.clone())).collect()
}

/// Regular solutions of `Cx ≤ x`.
#[derive(Debug, Clone, PartialEq)]
pub enum SubeigenGenerator<S> {
    /// `x = C* u` for every regular `u`.
    Solvable { closure: Matrix<S> },
    /// `Tr(C) > 𝟙`.
    NoRegularSolution { tr: S },
}

impl<S: Semifield> SubeigenGenerator<S> {
    pub fn is_solvable(&self) -> bool {
        matches!(self, SubeigenGenerator::Solvable { .. })
    }

    pub fn closure(&self) -> Option<&Matrix<S>> {
        match self {
            SubeigenGenerator::Solvable { closure } => Some(closure),
            SubeigenGenerator::NoRegularSolution { .. } => None,
        }
    }

    /// `C* u`; fails on unsolvable systems or non-regular `u`.
    pub fn generate(&self, u: &Vector<S>) -> Result<Vector<S>> {
        match self {
            SubeigenGenerator::Solvable { closure } => {
                require_regular(u, "generator argument")?;
                closure.mul_vec(u)
            }
            SubeigenGenerator::NoRegularSolution { tr } => {
                Err(Error::TrConditionViolated { tr: tr.to_string() })
            }
        }
    }
}

/// Solves `Cx ≤ x` for irreducible `C`.
pub fn solve_subeigen<S: Semifield>(c: &Matrix<S>) -> Result<SubeigenGenerator<S>> {
    if !c.is_irreducible()? {
        return Err(Error::NotIrreducible);
    }
    let tr = c.tr_closure()?;
    if !tr.leq(S::one()) {
        return Ok(SubeigenGenerator::NoRegularSolution { tr });
    }
    Ok(SubeigenGenerator::Solvable { closure: c.asterate()? })
}
