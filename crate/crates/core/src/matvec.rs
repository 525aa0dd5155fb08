//! Dense matrices and vectors over a semifield.

use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{MaxPlus, Semifield};

/// Column vector. Conjugation produces a vector that callers read as a row.
#[derive(Clone, PartialEq)]
pub struct Vector<S> {
    entries: Vec<S>,
}

/// Row-major dense matrix with at least one row and one column.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Semifield> Vector<S> {
    pub fn new(entries: Vec<S>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyShape { rows: 0, cols: 1 });
        }
        Ok(Vector { entries })
    }

    /// The all-unit vector `𝟙`.
    pub fn ones(dim: usize) -> Result<Self> {
        Self::new(vec![S::one(); dim])
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> S {
        self.entries[i]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = S> + '_ {
        self.entries.iter().copied()
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn is_regular(&self) -> bool {
        self.entries.iter().all(|v| !v.is_zero())
    }

    fn require_regular(&self, what: &'static str) -> Result<()> {
        match self.entries.iter().position(|v| v.is_zero()) {
            Some(index) => Err(Error::NotRegular { what, index }),
            None => Ok(()),
        }
    }

    /// `x⁻`, componentwise inverse; the result is read as a row vector.
    pub fn conjugate(&self) -> Result<Self> {
        if let Some(col) = self.entries.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroEntry { what: "vector", row: 0, col });
        }
        let entries = self.entries.iter().map(|v| v.inv()).collect::<Result<_>>()?;
        Ok(Vector { entries })
    }

    /// Treats `self` as a row and `rhs` as a column: `⊕ᵢ selfᵢ ⊗ rhsᵢ`.
    pub fn dot(&self, rhs: &Self) -> Result<S> {
        if self.dim() != rhs.dim() {
            return Err(Error::ShapeMismatch {
                op: "dot",
                left: (1, self.dim()),
                right: (rhs.dim(), 1),
            });
        }
        let mut acc = S::zero();
        for (a, b) in self.iter().zip(rhs.iter()) {
            acc = acc.add(a.checked_mul(b)?);
        }
        Ok(acc)
    }

    /// `‖x‖ = ⊕ᵢ xᵢ`.
    pub fn norm(&self) -> S {
        S::sum(self.iter())
    }

    /// `‖x‖ ⊗ ‖x⁻‖`: the largest deviation between components.
    pub fn span(&self) -> Result<S> {
        self.norm().checked_mul(self.conjugate()?.norm())
    }

    pub fn scale(&self, alpha: S) -> Result<Self> {
        let entries = self.iter().map(|v| alpha.checked_mul(v)).collect::<Result<_>>()?;
        Ok(Vector { entries })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.dim() != rhs.dim() {
            return Err(Error::ShapeMismatch {
                op: "vector add",
                left: (self.dim(), 1),
                right: (rhs.dim(), 1),
            });
        }
        Ok(Vector {
            entries: self.iter().zip(rhs.iter()).map(|(a, b)| a.add(b)).collect(),
        })
    }

    /// `x yᵀ`.
    pub fn outer(&self, rhs: &Self) -> Result<Matrix<S>> {
        let mut entries = Vec::with_capacity(self.dim() * rhs.dim());
        for a in self.iter() {
            for b in rhs.iter() {
                entries.push(a.checked_mul(b)?);
            }
        }
        Matrix::new(self.dim(), rhs.dim(), entries)
    }

    pub fn as_column(&self) -> Matrix<S> {
        Matrix { rows: self.dim(), cols: 1, entries: self.entries.clone() }
    }

    pub fn as_row(&self) -> Matrix<S> {
        Matrix { rows: 1, cols: self.dim(), entries: self.entries.clone() }
    }

    /// Componentwise `≤`; false when dimensions differ.
    pub fn entrywise_leq(&self, rhs: &Self) -> bool {
        self.dim() == rhs.dim() && self.iter().zip(rhs.iter()).all(|(a, b)| a.leq(b))
    }
}

impl Vector<MaxPlus> {
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| MaxPlus::finite(v)).collect())
    }
}

impl<S: Semifield> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyShape { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                op: "matrix construction",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != n_cols {
                return Err(Error::Ragged { row, len: values.len(), expected: n_cols });
            }
            entries.extend(values);
        }
        Self::new(n_rows, n_cols, entries)
    }

    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![S::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zero(n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = S::one();
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vector<S> {
        Vector { entries: self.entries[i * self.cols..(i + 1) * self.cols].to_vec() }
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector { entries: (0..self.rows).map(|i| self.get(i, j)).collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        self.entries.chunks(self.cols).map(<[S]>::to_vec).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch { op: "matrix add", left: self.shape(), right: rhs.shape() });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(*b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch { op: "matrix product", left: self.shape(), right: rhs.shape() });
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = S::zero();
                for k in 0..self.cols {
                    acc = acc.add(self.get(i, k).checked_mul(rhs.get(k, j))?);
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: rhs.cols, entries })
    }

    pub fn mul_vec(&self, x: &Vector<S>) -> Result<Vector<S>> {
        if self.cols != x.dim() {
            return Err(Error::ShapeMismatch { op: "matrix-vector product", left: self.shape(), right: (x.dim(), 1) });
        }
        let entries = (0..self.rows)
            .map(|i| self.row(i).dot(x))
            .collect::<Result<_>>()?;
        Ok(Vector { entries })
    }

    pub fn scale(&self, alpha: S) -> Result<Self> {
        let entries = self.entries.iter().map(|v| alpha.checked_mul(*v)).collect::<Result<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    /// First `(row, col)` holding `𝟘`, if any.
    pub fn find_zero_entry(&self) -> Option<(usize, usize)> {
        self.entries.iter().position(|v| v.is_zero()).map(|p| (p / self.cols, p % self.cols))
    }

    /// `A⁻`: transpose with every entry inverted. Every entry must be nonzero.
    pub fn conjugate_transpose(&self) -> Result<Self> {
        if let Some((row, col)) = self.find_zero_entry() {
            return Err(Error::ZeroEntry { what: "matrix", row, col });
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).inv()?);
            }
        }
        Ok(Matrix { rows: self.cols, cols: self.rows, entries })
    }

    pub fn trace(&self) -> Result<S> {
        let n = self.require_square()?;
        Ok(S::sum((0..n).map(|i| self.get(i, i))))
    }

    /// `‖A‖`, the ⊕-sum of all entries.
    pub fn norm(&self) -> S {
        S::sum(self.entries.iter().copied())
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut out = Self::identity(n)?;
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `Tr(A) = tr A ⊕ tr A² ⊕ ⋯ ⊕ tr Aⁿ`.
    pub fn tr_closure(&self) -> Result<S> {
        let n = self.require_square()?;
        let mut power = self.clone();
        let mut acc = power.trace()?;
        for _ in 1..n {
            power = power.mul(self)?;
            acc = acc.add(power.trace()?);
        }
        Ok(acc)
    }

    /// `A* = I ⊕ A ⊕ ⋯ ⊕ Aⁿ⁻¹`, defined only when `Tr(A) ≤ 𝟙`.
    pub fn asterate(&self) -> Result<Self> {
        let n = self.require_square()?;
        let tr = self.tr_closure()?;
        if !tr.leq(S::one()) {
            return Err(Error::TrConditionViolated { tr: tr.to_string() });
        }
        self.star_series(n)
    }

    /// `I ⊕ A ⊕ ⋯ ⊕ Aⁿ⁻¹` with no condition on `Tr(A)`.
    pub fn star_series(&self, n: usize) -> Result<Self> {
        let mut acc = Self::identity(n)?;
        let mut power = Self::identity(n)?;
        for _ in 1..n {
            power = power.mul(self)?;
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    pub fn is_row_regular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).any(|j| !self.get(i, j).is_zero()))
    }

    pub fn is_column_regular(&self) -> bool {
        (0..self.cols).all(|j| (0..self.rows).any(|i| !self.get(i, j).is_zero()))
    }

    /// Strong connectivity of the digraph with an arc `j → i` whenever
    /// `aᵢⱼ ≠ 𝟘`. A 1×1 matrix is irreducible iff its entry is nonzero.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = self.require_square()?;
        if n == 1 {
            return Ok(!self.get(0, 0).is_zero());
        }
        let forward = self.reach_from_first(|from, to| !self.get(to, from).is_zero());
        let backward = self.reach_from_first(|from, to| !self.get(from, to).is_zero());
        Ok(forward && backward)
    }

    fn reach_from_first(&self, arc: impl Fn(usize, usize) -> bool) -> bool {
        let n = self.rows;
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (w, done) in seen.iter_mut().enumerate() {
                if !*done && arc(v, w) {
                    *done = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Entrywise `≤`; false when shapes differ.
    pub fn entrywise_leq(&self, rhs: &Self) -> bool {
        self.shape() == rhs.shape() && self.entries.iter().zip(&rhs.entries).all(|(a, b)| a.leq(*b))
    }
}

impl Matrix<MaxPlus> {
    /// Builds a matrix of finite integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| MaxPlus::finite(v)).collect()).collect())
    }

    /// Builds a matrix where `None` stands for `𝟘`.
    pub fn from_int_options(rows: &[&[Option<i64>]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| v.map_or(MaxPlus::ZERO, MaxPlus::finite)).collect())
                .collect(),
        )
    }
}

fn write_seq<T>(f: &mut fmt::Formatter<'_>, items: &[T], item: fn(&T, &mut fmt::Formatter<'_>) -> fmt::Result) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        item(v, f)?;
    }
    f.write_str(")")
}

fn write_rows<T>(
    f: &mut fmt::Formatter<'_>,
    entries: &[T],
    cols: usize,
    item: fn(&T, &mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    f.write_str("[")?;
    for (i, row) in entries.chunks(cols).enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write_seq(f, row, item)?;
    }
    f.write_str("]")
}

impl<S: fmt::Debug> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.entries, fmt::Debug::fmt)
    }
}

impl<S: fmt::Display> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.entries, fmt::Display::fmt)
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.entries, self.cols, fmt::Debug::fmt)
    }
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.entries, self.cols, fmt::Display::fmt)
    }
}

pub(crate) fn require_regular<S: Semifield>(v: &Vector<S>, what: &'static str) -> Result<()> {
    v.require_regular(what)
}
