//! Small dense complex linear algebra: Gaussian elimination, normal-equation
//! least squares, and SVD-based rank.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Solve the square system `a x = b` by Gaussian elimination with partial
/// pivoting. `a` is given as rows.
pub fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n));
    let scale = a
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &k| a[i][col].norm().total_cmp(&a[k][col].norm()))
            .unwrap();
        let pivot = a[pivot_row][col].norm();
        if pivot <= 1e-13 * scale {
            return Err(Error::Singular { pivot });
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (upper, lower) = a.split_at_mut(row);
            for (x, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x -= factor * p;
            }
            let v = b[col];
            b[row] -= factor * v;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for row in (0..n).rev() {
        let tail: Complex64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    Ok(x)
}

/// Result of fitting a target vector in the span of given columns.
#[derive(Debug, Clone)]
pub struct LeastSquares {
    pub coeffs: Vec<Complex64>,
    /// Max-modulus entry of `target − Σ coeffs[k] columns[k]`.
    pub residual: f64,
}

/// Hermitian Gram system `G = AᴴA`, with `A` given by its columns.
pub struct NormalEquations {
    columns: Vec<Vec<Complex64>>,
    gram: Vec<Vec<Complex64>>,
}

impl NormalEquations {
    /// Build the Gram matrix and reject it when Gaussian elimination meets a
    /// pivot below `pivot_relative` times the largest diagonal entry.
    pub fn new(columns: Vec<Vec<Complex64>>, pivot_relative: f64) -> Result<Self> {
        let n = columns.len();
        let gram: Vec<Vec<Complex64>> = (0..n)
            .map(|a| (0..n).map(|b| inner(&columns[a], &columns[b])).collect())
            .collect();
        let max_diag = (0..n).map(|k| gram[k][k].re).fold(0.0, f64::max);
        let threshold = pivot_relative * max_diag.max(f64::MIN_POSITIVE);
        // Elimination without pivoting is stable on Hermitian positive
        // definite systems; its pivots are the squared Cholesky diagonal.
        let mut work = gram.clone();
        for col in 0..n {
            let pivot = work[col][col].re;
            if pivot <= threshold {
                return Err(Error::DegenerateSet {
                    pivot: pivot.max(0.0),
                    threshold,
                });
            }
            for row in col + 1..n {
                let factor = work[row][col] / work[col][col];
                let (upper, lower) = work.split_at_mut(row);
                for (x, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                    *x -= factor * p;
                }
            }
        }
        Ok(NormalEquations { columns, gram })
    }

    pub fn fit(&self, target: &[Complex64]) -> Result<LeastSquares> {
        let rhs: Vec<Complex64> = self.columns.iter().map(|col| inner(col, target)).collect();
        let coeffs = solve(self.gram.clone(), rhs)?;
        let residual = target
            .iter()
            .enumerate()
            .map(|(row, &t)| {
                let fitted: Complex64 = self
                    .columns
                    .iter()
                    .zip(&coeffs)
                    .map(|(col, &c)| col[row] * c)
                    .sum();
                (t - fitted).norm()
            })
            .fold(0.0, f64::max);
        Ok(LeastSquares { coeffs, residual })
    }
}

/// ⟨a, b⟩ = Σ conj(a_k) b_k.
fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn rank_of(matrix: DMatrix<Complex64>, relative: f64) -> usize {
    if matrix.is_empty() {
        return 0;
    }
    let singular = matrix.singular_values();
    let largest = singular.iter().copied().fold(0.0, f64::max);
    if largest == 0.0 {
        return 0;
    }
    singular.iter().filter(|&&s| s > relative * largest).count()
}

/// Rank over ℂ of a list of equally long complex vectors.
pub fn complex_rank(vectors: &[Vec<Complex64>], relative: f64) -> usize {
    let Some(len) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let m = DMatrix::from_fn(len, vectors.len(), |r, c| vectors[c][r]);
    rank_of(m, relative)
}

/// Rank over ℝ, each complex vector split into its real and imaginary parts.
pub fn real_rank(vectors: &[Vec<Complex64>], relative: f64) -> usize {
    let Some(len) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let m = DMatrix::from_fn(2 * len, vectors.len(), |r, c| {
        let z = vectors[c][r % len];
        Complex64::new(if r < len { z.re } else { z.im }, 0.0)
    });
    rank_of(m, relative)
}
