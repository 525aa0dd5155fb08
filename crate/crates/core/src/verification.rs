//! Exhaustive grid oracles for small integer instances.
//!
//! The oracles evaluate everything in ordinary `i64` arithmetic
//! (`max`, `+`, `-`) straight from the entries, without going through the
//! semifield, matrix or optimizer code they are used to check. Both problems
//! are invariant under `x ↦ α ⊗ x`, so one component is pinned to `0` and
//! the rest range over `lo..=hi`.

use crate::error::{Error, Result};
use crate::matvec::{Matrix, Vector};
use crate::optimizer::ProblemInstance;
use crate::semiring::MaxPlus;

pub const DEFAULT_GRID_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub dim: usize,
    pub lo: i64,
    pub hi: i64,
    /// Component held at `0`.
    pub normalization: usize,
    pub cap: u128,
}

impl GridSpec {
    pub fn new(dim: usize, lo: i64, hi: i64, normalization: usize) -> Self {
        GridSpec { dim, lo, hi, normalization, cap: DEFAULT_GRID_CAP }
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    /// `(hi − lo + 1)^(dim − 1)`.
    pub fn size(&self) -> u128 {
        let width = (self.hi - self.lo + 1).max(0) as u128;
        width.saturating_pow(self.dim.saturating_sub(1) as u32)
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.normalization >= self.dim || self.lo > self.hi {
            return Err(Error::InvariantViolation(format!("malformed grid {self:?}")));
        }
        if self.size() > self.cap {
            return Err(Error::GridTooLarge { size: self.size(), cap: self.cap });
        }
        Ok(())
    }

    /// Calls `visit` for every grid point, in lexicographic order.
    pub fn for_each(&self, mut visit: impl FnMut(&[i64])) -> Result<()> {
        self.validate()?;
        let free: Vec<usize> = (0..self.dim).filter(|&i| i != self.normalization).collect();
        let mut point = vec![0i64; self.dim];
        for &i in &free {
            point[i] = self.lo;
        }
        loop {
            visit(&point);
            // odometer increment over the free components, last one fastest
            let mut pos = free.len();
            loop {
                if pos == 0 {
                    return Ok(());
                }
                pos -= 1;
                let i = free[pos];
                if point[i] < self.hi {
                    point[i] += 1;
                    break;
                }
                point[i] = self.lo;
            }
        }
    }
}

fn int_entry(v: MaxPlus, what: &str) -> Result<Option<i64>> {
    if v == MaxPlus::ZERO {
        return Ok(None);
    }
    v.as_integer().map(Some).ok_or_else(|| Error::NonInteger(format!("{what} entry {v}")))
}

fn int_matrix(m: &Matrix<MaxPlus>, what: &str) -> Result<Vec<Vec<Option<i64>>>> {
    m.to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(|v| int_entry(v, what)).collect())
        .collect()
}

fn int_vector(v: &Vector<MaxPlus>, what: &str) -> Result<Vec<i64>> {
    v.iter()
        .map(|e| int_entry(e, what)?.ok_or_else(|| Error::NonInteger(format!("{what} has a zero component"))))
        .collect()
}

/// `max_j (m_ij + x_j)` for each row, `None` when the whole row is `𝟘`.
fn max_plus_product(m: &[Vec<Option<i64>>], x: &[i64]) -> Vec<Option<i64>> {
    m.iter()
        .map(|row| row.iter().zip(x).filter_map(|(a, xj)| a.map(|a| a + xj)).max())
        .collect()
}

/// The objective in ordinary arithmetic:
/// `max_r((Bx)_r − q_r) + max_s(p_s − (Ax)_s)`.
fn objective(a: &[Vec<Option<i64>>], b: &[Vec<Option<i64>>], p: &[i64], q: &[i64], x: &[i64]) -> Option<i64> {
    let bx = max_plus_product(b, x);
    let ax = max_plus_product(a, x);
    let first = bx.iter().zip(q).filter_map(|(v, qr)| v.map(|v| v - qr)).max()?;
    let mut second = i64::MIN;
    for (v, ps) in ax.iter().zip(p) {
        second = second.max(ps - (*v)?);
    }
    Some(first + second)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleMax {
    pub max: MaxPlus,
    pub argmax: Vec<Vector<MaxPlus>>,
    /// Some maximizer has a free component at `hi`, so the grid may be
    /// cutting the maximizer set off. Maximizer sets are unbounded below, so
    /// `lo` is not tracked.
    pub touches_upper_boundary: bool,
}

/// Exact maximum of the objective over the grid and every grid maximizer.
pub fn brute_force_max(inst: &ProblemInstance<MaxPlus>, grid: &GridSpec) -> Result<OracleMax> {
    if grid.dim != inst.dim() {
        return Err(Error::ShapeMismatch { op: "grid", left: (inst.dim(), 1), right: (grid.dim, 1) });
    }
    let a = int_matrix(inst.a(), "A")?;
    let b = int_matrix(inst.b(), "B")?;
    let p = int_vector(inst.p(), "p")?;
    let q = int_vector(inst.q(), "q")?;

    let mut best: Option<i64> = None;
    let mut argmax: Vec<Vec<i64>> = Vec::new();
    let mut undefined = false;
    grid.for_each(|x| match objective(&a, &b, &p, &q, x) {
        None => undefined = true,
        Some(val) => match best {
            Some(cur) if val < cur => {}
            Some(cur) if val == cur => argmax.push(x.to_vec()),
            _ => {
                best = Some(val);
                argmax.clear();
                argmax.push(x.to_vec());
            }
        },
    })?;
    if undefined {
        return Err(Error::InvariantViolation("A x has a zero component on the grid".into()));
    }
    let max = best.map_or(MaxPlus::ZERO, MaxPlus::finite);
    let touches_upper_boundary = argmax
        .iter()
        .any(|x| x.iter().enumerate().any(|(i, &v)| i != grid.normalization && v == grid.hi));
    let argmax = argmax.iter().map(|x| Vector::from_ints(x)).collect::<Result<_>>()?;
    Ok(OracleMax { max, argmax, touches_upper_boundary })
}

/// Every grid point with `max_j (c_ij + x_j) ≤ x_i` for all `i`.
pub fn brute_force_subeigen(c: &Matrix<MaxPlus>, grid: &GridSpec) -> Result<Vec<Vector<MaxPlus>>> {
    if !c.is_square() {
        return Err(Error::NotSquare { rows: c.rows(), cols: c.cols() });
    }
    if grid.dim != c.rows() {
        return Err(Error::ShapeMismatch { op: "grid", left: c.shape(), right: (grid.dim, 1) });
    }
    let c = int_matrix(c, "C")?;
    let mut out = Vec::new();
    grid.for_each(|x| {
        let cx = max_plus_product(&c, x);
        if cx.iter().zip(x).all(|(v, xi)| v.is_none_or(|v| v <= *xi)) {
            out.push(x.to_vec());
        }
    })?;
    out.iter().map(|x| Vector::from_ints(x)).collect()
}
