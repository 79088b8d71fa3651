//! Test-only oracles and generators, written without the library's own
//! routines wherever the library result is what is being checked.
#![allow(dead_code)]

use hilbert_games::lina::{c64, Complex64, ComplexMatrix};
use proptest::prelude::*;

pub const CASES: u32 = 256;

pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        ..ProptestConfig::default()
    }
}

/// Player 1's 16x16 penny-flip payoff matrix as printed in the reference
/// table, basis order (Nc, Fc, Nq, Fq) x (Nc, Fc, Nq, Fq).
pub const PENNY_H1: [&str; 16] = [
    "1 0 1 0 0 1 0 i 1 0 1 0 0 -i 0 1",
    "0 -1 0 i -1 0 1 0 0 -1 0 i i 0 -i 0",
    "1 0 1 0 0 1 0 i 1 0 1 0 0 -i 0 1",
    "0 -i 0 -1 -i 0 i 0 0 -i 0 -1 -1 0 1 0",
    "0 -1 0 i -1 0 1 0 0 -1 0 i i 0 -i 0",
    "1 0 1 0 0 1 0 i 1 0 1 0 0 -i 0 1",
    "0 1 0 -i 1 0 -1 0 0 1 0 -i -i 0 i 0",
    "-i 0 -i 0 0 -i 0 1 -i 0 -i 0 0 -1 0 -i",
    "1 0 1 0 0 1 0 i 1 0 1 0 0 -i 0 1",
    "0 -1 0 i -1 0 1 0 0 -1 0 i i 0 -i 0",
    "1 0 1 0 0 1 0 i 1 0 1 0 0 -i 0 1",
    "0 -i 0 -1 -i 0 i 0 0 -i 0 -1 -1 0 1 0",
    "0 -i 0 -1 -i 0 i 0 0 -i 0 -1 -1 0 1 0",
    "i 0 i 0 0 i 0 -1 i 0 i 0 0 1 0 i",
    "0 i 0 1 i 0 -i 0 0 i 0 1 1 0 -1 0",
    "1 0 1 0 0 1 0 i 1 0 1 0 0 -i 0 1",
];

pub fn symbolic_matrix(rows: &[&str]) -> ComplexMatrix {
    let entry = |s: &str| match s {
        "0" => c64(0.0, 0.0),
        "1" => c64(1.0, 0.0),
        "-1" => c64(-1.0, 0.0),
        "i" => c64(0.0, 1.0),
        "-i" => c64(0.0, -1.0),
        other => panic!("unexpected symbol {other}"),
    };
    ComplexMatrix::from_rows(rows.iter().map(|r| r.split_whitespace().map(entry).collect()).collect()).unwrap()
}

/// Root of p = 1/(1+e^{β(1+p)}) by bisection; the right side is decreasing
/// in p so the root is unique in [0, 1].
pub fn pd_fixed_point(beta: f64) -> f64 {
    let g = |p: f64| p - 1.0 / (1.0 + (beta * (1.0 + p)).exp());
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn logistic(x: f64) -> f64 {
    1.0 / (1.0 + x.exp())
}

/// `(A ⊗ B)[(i,k),(j,l)] = A[i,j] B[k,l]` by explicit index arithmetic.
pub fn naive_kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = vec![vec![c64(0.0, 0.0); ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

fn digits(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut d = vec![0; dims.len()];
    for f in (0..dims.len()).rev() {
        d[f] = flat % dims[f];
        flat /= dims[f];
    }
    d
}

/// Partial trace keeping one factor, summing matrix entries whose other
/// digits agree.
pub fn naive_partial_trace(m: &ComplexMatrix, dims: &[usize], keep: usize) -> Vec<Vec<Complex64>> {
    let n: usize = dims.iter().product();
    let k = dims[keep];
    let mut out = vec![vec![c64(0.0, 0.0); k]; k];
    for r in 0..n {
        let dr = digits(r, dims);
        for c in 0..n {
            let dc = digits(c, dims);
            let others_match = (0..dims.len()).all(|f| f == keep || dr[f] == dc[f]);
            if others_match {
                out[dr[keep]][dc[keep]] += m[(r, c)];
            }
        }
    }
    out
}

pub fn max_diff(a: &ComplexMatrix, b: &[Vec<Complex64>]) -> f64 {
    let mut worst = 0.0_f64;
    for (r, row) in b.iter().enumerate() {
        for (c, z) in row.iter().enumerate() {
            worst = worst.max((a[(r, c)] - z).norm());
        }
    }
    worst
}

pub fn matrix_from(n: usize, m: usize, parts: &[f64]) -> ComplexMatrix {
    let data = (0..n * m).map(|k| c64(parts[2 * k], parts[2 * k + 1])).collect();
    ComplexMatrix::new(n, m, data).unwrap()
}

/// Hermitian part of a random complex matrix.
pub fn hermitian_from(n: usize, parts: &[f64]) -> ComplexMatrix {
    let a = matrix_from(n, n, parts);
    a.add(&a.adjoint()).unwrap().scale(c64(0.5, 0.0))
}

/// `A A† / Tr(A A†)`, a full-rank density matrix almost surely.
pub fn density_from(n: usize, parts: &[f64]) -> ComplexMatrix {
    let a = matrix_from(n, n, parts);
    let g = a.matmul(&a.adjoint()).unwrap().add(&ComplexMatrix::identity(n).scale(c64(1e-3, 0.0))).unwrap();
    let t = g.trace().re;
    g.scale(c64(1.0 / t, 0.0)).hermitian_part()
}

pub fn normalize(weights: &[f64]) -> Vec<f64> {
    let s: f64 = weights.iter().sum();
    weights.iter().map(|w| w / s).collect()
}

pub fn entries(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0_f64..1.0, len)
}

pub fn weights(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01_f64..1.0, len).prop_map(|w| normalize(&w))
}

/// A square complex matrix of random side in `sides`.
pub fn square(sides: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (usize, Vec<f64>)> {
    sides.prop_flat_map(|n| (Just(n), entries(2 * n * n)))
}

pub mod props;
