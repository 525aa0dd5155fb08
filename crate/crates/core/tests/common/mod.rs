#![allow(dead_code)]

use maxspan::{Matrix, MaxPlus, ProblemInstance, Semifield, Vector};
use proptest::prelude::*;

pub fn mp(v: i64) -> MaxPlus {
    MaxPlus::finite(v)
}

pub fn ints(values: &[i64]) -> Vector<MaxPlus> {
    Vector::from_ints(values).unwrap()
}

pub fn to_ints(v: &Vector<MaxPlus>) -> Vec<i64> {
    v.iter().map(|e| e.as_integer().expect("finite integer")).collect()
}

/// Finite integer matrix.
pub fn dense(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix<MaxPlus>> {
    proptest::collection::vec(proptest::collection::vec(lo..=hi, cols), rows)
        .prop_map(|rows| Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(mp).collect()).collect()).unwrap())
}

/// Integer matrix in which roughly one entry in `zero_one_in` is `𝟘`.
pub fn sparse(rows: usize, cols: usize, lo: i64, hi: i64, zero_one_in: u32) -> impl Strategy<Value = Matrix<MaxPlus>> {
    let cell = (0..zero_one_in, lo..=hi).prop_map(|(z, v)| if z == 0 { MaxPlus::ZERO } else { mp(v) });
    proptest::collection::vec(proptest::collection::vec(cell, cols), rows)
        .prop_map(|rows| Matrix::from_rows(rows).unwrap())
}

pub fn regular(dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vector<MaxPlus>> {
    proptest::collection::vec(lo..=hi, dim).prop_map(|v| ints(&v))
}

/// Column regular by construction: each column keeps its diagonal-ish entry
/// finite.
pub fn column_regular(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix<MaxPlus>> {
    sparse(rows, cols, lo, hi, 3).prop_map(move |m| {
        let mut r = m.to_rows();
        for j in 0..cols {
            if (0..rows).all(|i| r[i][j].is_zero()) {
                r[j % rows][j] = mp(lo.max(0).min(hi));
            }
        }
        Matrix::from_rows(r).unwrap()
    })
}

/// A strict instance with `n, m, l ∈ 1..=max_dim`.
pub fn instance(max_dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = ProblemInstance<MaxPlus>> {
    (1..=max_dim, 1..=max_dim, 1..=max_dim).prop_flat_map(move |(n, m, l)| {
        (dense(m, n, lo, hi), column_regular(l, n, lo, hi), regular(m, lo, hi), regular(l, lo, hi))
            .prop_map(|(a, b, p, q)| ProblemInstance::new(a, b, p, q).unwrap())
    })
}

/// Square `𝟘`/finite pattern that is irreducible.
pub fn irreducible(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix<MaxPlus>> {
    sparse(n, n, lo, hi, 2).prop_filter("irreducible", |c| c.is_irreducible().unwrap())
}
