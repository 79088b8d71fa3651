//! Dense complex linear algebra used throughout the crate.
//!
//! Every state, operator and payoff lives in a [`ComplexMatrix`]: a small,
//! row-major, always-finite matrix of `Complex64`. On top of it sit the
//! handful of operations the game machinery needs: Kronecker products,
//! partial traces over a [`DimensionProfile`], Hermitian eigendecomposition,
//! the normalized Gibbs exponential and the normalized operator inner
//! product `(A, B) = Tr(A†B) / Tr(I)`.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use nalgebra::DMatrix;
pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance for accepting a matrix as Hermitian before it is
/// symmetrized.
pub const HERMITIAN_TOLERANCE: f64 = 1e-9;

/// Shorthand for a complex scalar.
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries. Rejects empty shapes, a
    /// length that disagrees with the shape, and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix shape {rows}x{cols} has an empty side"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected {c} columns, found {}",
                bad.len()
            )));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| c64(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix sides must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex64::default(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c64(1.0, 0.0);
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = c64(d, 0.0);
        }
        m
    }

    /// Outer product `x y†`.
    pub fn outer(x: &[Complex64], y: &[Complex64]) -> Self {
        let mut m = Self::zeros(x.len(), y.len());
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                m[(i, j)] = xi * yj.conj();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn real_diagonal(&self) -> Vec<f64> {
        self.diagonal().iter().map(|z| z.re).collect()
    }

    pub fn trace(&self) -> Complex64 {
        self.diagonal().iter().sum()
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::default() {
                    continue;
                }
                for j in 0..other.cols {
                    m.data[i * other.cols + j] += a * other[(k, j)];
                }
            }
        }
        Ok(m)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.max_abs())
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| i == j || self[(i, j)] == Complex64::default())
        })
    }

    /// Largest off-diagonal modulus.
    pub fn off_diagonal_max(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    worst = worst.max(self[(i, j)].norm());
                }
            }
        }
        worst
    }

    /// `max |a_ij - conj(a_ji)|`; infinite for non-square input.
    pub fn hermitian_asymmetry(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(A + A†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        debug_assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            for j in i..self.cols {
                let avg = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
                // Adding/subtracting from +0.0 keeps signed zeros out of the output.
                let (re, im) = (avg.re + 0.0, if i == j { 0.0 } else { avg.im + 0.0 });
                m[(i, j)] = Complex64::new(re, im);
                m[(j, i)] = Complex64::new(re, 0.0 - im);
            }
        }
        m
    }

    /// Checks Hermiticity against `HERMITIAN_TOLERANCE * max(1, |A|_max)`
    /// and returns the symmetrized matrix.
    pub fn to_hermitian(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "Hermitian matrix must be square, got {}x{}",
                self.rows, self.cols
            )));
        }
        let tolerance = HERMITIAN_TOLERANCE * self.max_abs().max(1.0);
        let asymmetry = self.hermitian_asymmetry();
        if asymmetry > tolerance {
            return Err(Error::NotHermitian {
                asymmetry,
                tolerance,
            });
        }
        Ok(self.hermitian_part())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if let Some(&bad) = rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::DimensionMismatch(format!("row index {bad} out of range")));
        }
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::DimensionMismatch(format!("column index {bad} out of range")));
        }
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self[(r, c)])
            .collect();
        Self::new(rows.len(), cols.len(), data)
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on a shape mismatch; use [`ComplexMatrix::matmul`] for a
    /// checked product.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix product shape mismatch")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:>9.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Per-factor dimensions `L_1 … L_N` of a product space. Factor 0 is the
/// slowest-varying index of the flattened system basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionProfile {
    dims: Vec<usize>,
}

impl DimensionProfile {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::DimensionMismatch(format!(
                "profile {dims:?} must be non-empty with positive factors"
            )));
        }
        Ok(Self { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dim(&self, factor: usize) -> usize {
        self.dims[factor]
    }

    /// Side length of a system-level matrix, `∏ L_i`.
    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    /// Distance in the flat index between consecutive values of `factor`.
    pub fn stride(&self, factor: usize) -> usize {
        self.dims[factor + 1..].iter().product()
    }

    /// Row-major flattening of a multi-index.
    pub fn flatten(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.dims.len());
        multi
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&m, &d)| acc * d + m)
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut multi = vec![0; self.dims.len()];
        for (slot, &d) in multi.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        multi
    }
}

/// Eigenpairs of a Hermitian matrix: ascending values, eigenvectors in the
/// matching columns.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigenSystem {
    pub fn vector(&self, k: usize) -> Vec<Complex64> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }

    /// `V diag(w) V†`.
    pub fn compose(&self, weights: &[f64]) -> ComplexMatrix {
        let n = self.vectors.rows();
        let mut m = ComplexMatrix::zeros(n, n);
        for (k, &w) in weights.iter().enumerate() {
            if w == 0.0 {
                continue;
            }
            let v = self.vector(k);
            for i in 0..n {
                let vi = v[i] * w;
                for j in 0..n {
                    m[(i, j)] += vi * v[j].conj();
                }
            }
        }
        m
    }
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (rows, cols) = (a.rows * b.rows, a.cols * b.cols);
    let mut m = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let aij = a[(i, j)];
            for k in 0..b.rows {
                for l in 0..b.cols {
                    m[(i * b.rows + k, j * b.cols + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    m
}

/// Kronecker product of a non-empty sequence, left factor slowest.
pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> Option<ComplexMatrix> {
    factors.into_iter().fold(None, |acc, f| match acc {
        None => Some(f.clone()),
        Some(m) => Some(kron(&m, f)),
    })
}

/// Traces out every factor except `keep`:
/// `M'_{ab} = Σ_ν M_{(a,ν),(b,ν)}` with `ν` running over the other factors.
pub fn partial_trace(m: &ComplexMatrix, profile: &DimensionProfile, keep: usize) -> Result<ComplexMatrix> {
    let n = profile.total();
    if !m.is_square() || m.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{} but profile {:?} needs side {n}",
            m.rows(),
            m.cols(),
            profile.dims()
        )));
    }
    if keep >= profile.factors() {
        return Err(Error::DimensionMismatch(format!(
            "factor {keep} out of range for {} factors",
            profile.factors()
        )));
    }
    let l = profile.dim(keep);
    let stride = profile.stride(keep);
    let mut out = ComplexMatrix::zeros(l, l);
    // Flat indices whose `keep` digit is zero enumerate the traced factors.
    for base in (0..n).filter(|s| (s / stride) % l == 0) {
        for a in 0..l {
            let row = base + a * stride;
            for b in 0..l {
                out[(a, b)] += m[(row, base + b * stride)];
            }
        }
    }
    Ok(out)
}

/// Hermitian eigendecomposition with ascending eigenvalues.
///
/// Inputs within the Hermiticity tolerance are symmetrized first. Each
/// eigenvector is rotated so its largest-magnitude entry is real positive,
/// which makes the output reproducible across runs.
pub fn eig_hermitian(h: &ComplexMatrix) -> Result<EigenSystem> {
    let h = h.to_hermitian()?;
    let n = h.rows();

    if h.is_diagonal() {
        let diag = h.real_diagonal();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| diag[a].total_cmp(&diag[b]));
        let mut vectors = ComplexMatrix::zeros(n, n);
        for (k, &i) in order.iter().enumerate() {
            vectors[(i, k)] = c64(1.0, 0.0);
        }
        return Ok(EigenSystem {
            values: order.iter().map(|&i| diag[i]).collect(),
            vectors,
        });
    }

    let decomposition = nalgebra::SymmetricEigen::new(h.to_nalgebra());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| decomposition.eigenvalues[a].total_cmp(&decomposition.eigenvalues[b]));

    let mut vectors = ComplexMatrix::zeros(n, n);
    for (k, &src) in order.iter().enumerate() {
        let column: Vec<Complex64> = (0..n).map(|i| decomposition.eigenvectors[(i, src)]).collect();
        let column = canonical_phase(column);
        for (i, z) in column.into_iter().enumerate() {
            vectors[(i, k)] = z;
        }
    }
    Ok(EigenSystem {
        values: order.iter().map(|&i| decomposition.eigenvalues[i]).collect(),
        vectors,
    })
}

fn canonical_phase(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let largest = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    // First entry within rounding of the largest modulus; ties are common
    // for the ±1 / ±i structured matrices this crate produces.
    let pivot = v
        .iter()
        .position(|z| z.norm() >= largest - 1e-12)
        .unwrap_or(0);
    let p = v[pivot];
    if p.norm() > 0.0 {
        let phase = p.conj() / p.norm();
        for z in &mut v {
            *z *= phase;
        }
        v[pivot] = c64(v[pivot].re, 0.0);
    }
    v
}

/// `e^{βH} / Tr(e^{βH})` for Hermitian `H` and finite `β ≥ 0`.
pub fn gibbs_exp(h: &ComplexMatrix, beta: f64) -> Result<ComplexMatrix> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(Error::InvalidBeta(beta));
    }
    let h = h.to_hermitian()?;
    let n = h.rows();
    if beta == 0.0 {
        return Ok(ComplexMatrix::identity(n).scale(c64(1.0 / n as f64, 0.0)));
    }
    if h.is_diagonal() {
        let weights = boltzmann_weights(&h.real_diagonal(), beta);
        return Ok(ComplexMatrix::from_diagonal(&weights));
    }
    let eigen = eig_hermitian(&h)?;
    let weights = boltzmann_weights(&eigen.values, beta);
    Ok(eigen.compose(&weights).hermitian_part())
}

/// Normalized `exp(β (x_k - max x))`.
fn boltzmann_weights(values: &[f64], beta: f64) -> Vec<f64> {
    let top = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let raw: Vec<f64> = values.iter().map(|&x| (beta * (x - top)).exp()).collect();
    let z: f64 = raw.iter().sum();
    raw.into_iter().map(|w| w / z).collect()
}

/// Normalized operator inner product `Tr(A†B) / Tr(I)`.
pub fn op_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "operator inner product needs equal square shapes, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let sum: Complex64 = a.entries().iter().zip(b.entries()).map(|(x, y)| x.conj() * y).sum();
    Ok(sum / a.rows() as f64)
}
