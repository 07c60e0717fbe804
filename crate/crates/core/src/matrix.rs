//! Dense complex square matrices and the Dirac-Pauli representation of CSTA.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::blade::{Blade, Metric, BLADE_COUNT};
use crate::error::{check_range, Error, Result};
use crate::linalg;
use crate::multivector::Multivector;
use crate::text::{clean_complex, format_complex};
use crate::tolerance::EPSILON;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const J: Complex64 = Complex64::new(0.0, 1.0);

/// Row-major `N × N` complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMatrix<const N: usize>(pub [[Complex64; N]; N]);

pub type CMatrix2 = CMatrix<2>;
pub type CMatrix3 = CMatrix<3>;
pub type CMatrix4 = CMatrix<4>;

impl<const N: usize> Default for CMatrix<N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const N: usize> CMatrix<N> {
    pub const fn zero() -> Self {
        CMatrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { ONE } else { ZERO })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        CMatrix(std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))))
    }

    /// Build from `(re, im)` pairs, row-major.
    pub fn from_pairs(rows: [[(f64, f64); N]; N]) -> Self {
        Self::from_fn(|r, c| Complex64::new(rows[r][c].0, rows[r][c].1))
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self::from_fn(|r, c| self.0[r][c] * z)
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|k| self.0[k][k]).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.0[c][r].conj())
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.max_abs_diff(other) <= eps
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Row-major entries as one vector of length `N²`.
    pub fn flatten(&self) -> Vec<Complex64> {
        self.0.iter().flatten().copied().collect()
    }

    pub fn from_flat(entries: &[Complex64]) -> Self {
        assert_eq!(entries.len(), N * N);
        Self::from_fn(|r, c| entries[r * N + c])
    }

    /// Aligned grid with entries rendered as `a+bj`.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|row| row.iter().map(|&z| format_complex(z)).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            out.push('[');
            let padded: Vec<String> = row
                .iter()
                .map(|s| format!("{}{}", " ".repeat(width - s.chars().count()), s))
                .collect();
            out.push_str(&padded.join("  "));
            out.push_str("]\n");
        }
        out
    }
}

impl CMatrix<3> {
    /// Insert a zero row and column at (0-based) position 2, giving a 4×4
    /// matrix whose rows/columns {0, 1, 3} hold the original entries.
    pub fn embed_skip_third(&self) -> CMatrix4 {
        const MAP: [Option<usize>; 4] = [Some(0), Some(1), None, Some(2)];
        CMatrix4::from_fn(|r, c| match (MAP[r], MAP[c]) {
            (Some(a), Some(b)) => self.0[a][b],
            _ => ZERO,
        })
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.0[r][c]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.0[r][c]
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.0[r][c] + rhs.0[r][c])
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.0[r][c] - rhs.0[r][c])
    }
}

impl<const N: usize> Neg for CMatrix<N> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::from_fn(|r, c| -self.0[r][c])
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| (0..N).map(|k| self.0[r][k] * rhs.0[k][c]).sum())
    }
}

impl<const N: usize> Mul<Complex64> for CMatrix<N> {
    type Output = Self;

    fn mul(self, z: Complex64) -> Self {
        self.scale(z)
    }
}

impl<const N: usize> Mul<f64> for CMatrix<N> {
    type Output = Self;

    fn mul(self, x: f64) -> Self {
        self.scale(Complex64::new(x, 0.0))
    }
}

impl<const N: usize> fmt::Display for CMatrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON form: array of rows, each row an array of `[re, im]` entries.
impl<const N: usize> Serialize for CMatrix<N> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut rows = serializer.serialize_seq(Some(N))?;
        for row in &self.0 {
            let entries: Vec<[f64; 2]> = row
                .iter()
                .map(|&z| {
                    let z = clean_complex(z);
                    [z.re, z.im]
                })
                .collect();
            rows.serialize_element(&entries)?;
        }
        rows.end()
    }
}

/// 2×2 Pauli matrix σ̂k, `k` in 1..=3.
pub fn pauli_matrix(k: usize) -> Result<CMatrix2> {
    check_range("pauli", k as i64, 1, 3)?;
    Ok(match k {
        1 => CMatrix2::from_fn(|r, c| if r != c { ONE } else { ZERO }),
        2 => CMatrix([[ZERO, -J], [J, ZERO]]),
        _ => CMatrix([[ONE, ZERO], [ZERO, -ONE]]),
    })
}

fn blocks(tl: CMatrix2, tr: CMatrix2, bl: CMatrix2, br: CMatrix2) -> CMatrix4 {
    CMatrix4::from_fn(|r, c| {
        let block = match (r < 2, c < 2) {
            (true, true) => &tl,
            (true, false) => &tr,
            (false, true) => &bl,
            (false, false) => &br,
        };
        block.0[r % 2][c % 2]
    })
}

/// Dirac-Pauli γ̂μ: γ̂0 = diag(I, −I), γ̂k = [[0, −σ̂k], [σ̂k, 0]].
pub fn gamma_matrix(mu: usize) -> Result<CMatrix4> {
    check_range("gamma", mu as i64, 0, 3)?;
    let id = CMatrix2::identity();
    let zero = CMatrix2::zero();
    Ok(if mu == 0 {
        blocks(id, zero, zero, -id)
    } else {
        let s = pauli_matrix(mu)?;
        blocks(zero, -s, s, zero)
    })
}

/// σ̂0 = γ̂0 and σ̂k = γ̂kγ̂0.
pub fn sigma4_matrix(mu: usize) -> Result<CMatrix4> {
    check_range("sigma", mu as i64, 0, 3)?;
    let g0 = gamma_matrix(0)?;
    Ok(if mu == 0 { g0 } else { gamma_matrix(mu)? * g0 })
}

/// A matrix representation of CSTA fixed by the images of γ0..γ3.
///
/// Every blade maps to the ordered product of its generator images; a
/// multivector maps to the coefficient-weighted sum of its blade images.
#[derive(Debug, Clone)]
pub struct Representation {
    gammas: [CMatrix4; 4],
    images: [CMatrix4; BLADE_COUNT],
}

impl Representation {
    pub fn from_gammas(gammas: [CMatrix4; 4]) -> Self {
        let images = std::array::from_fn(|mask| {
            Blade::new(mask as u8)
                .unwrap()
                .generators()
                .fold(CMatrix4::identity(), |acc, mu| acc * gammas[mu])
        });
        Representation { gammas, images }
    }

    pub fn dirac_pauli() -> &'static Representation {
        static REP: OnceLock<Representation> = OnceLock::new();
        REP.get_or_init(|| {
            Representation::from_gammas(std::array::from_fn(|mu| gamma_matrix(mu).unwrap()))
        })
    }

    pub fn gamma(&self, mu: usize) -> &CMatrix4 {
        &self.gammas[mu]
    }

    pub fn blade_image(&self, blade: Blade) -> &CMatrix4 {
        &self.images[blade.index()]
    }

    pub fn rep(&self, m: &Multivector) -> CMatrix4 {
        m.coeffs()
            .iter()
            .zip(&self.images)
            .filter(|(c, _)| **c != ZERO)
            .fold(CMatrix4::zero(), |acc, (&c, e)| acc + e.scale(c))
    }

    /// Inverse of [`Representation::rep`] by trace pairing.
    ///
    /// Each blade image E squares to ±I, so E⁻¹ = ±E and the coefficient of
    /// that blade in M is tr(E⁻¹M)/4. The reconstruction is checked against
    /// M; a miss beyond ε means the blade images are not trace-orthogonal.
    pub fn decompose(&self, m: &CMatrix4) -> Result<Multivector> {
        let coeffs = std::array::from_fn(|k| {
            let e = &self.images[k];
            let square_sign = (*e * *e)[(0, 0)].re;
            (e.scale(Complex64::new(square_sign, 0.0)) * *m).trace() / 4.0
        });
        let x = Multivector::from_coeffs(coeffs);
        let residual = self.rep(&x).max_abs_diff(m);
        if residual > EPSILON * (1.0 + m.max_abs()) {
            return Err(Error::DecomposeResidual {
                residual,
                tolerance: EPSILON,
            });
        }
        Ok(x)
    }

    /// Decomposition by a dense 16×16 solve over the flattened blade images.
    pub fn decompose_by_solve(&self, m: &CMatrix4) -> Result<Multivector> {
        let columns: Vec<Vec<Complex64>> = self.images.iter().map(|e| e.flatten()).collect();
        let system: Vec<Vec<Complex64>> = (0..16)
            .map(|row| columns.iter().map(|col| col[row]).collect())
            .collect();
        let x = linalg::solve(system, m.flatten())?;
        Ok(Multivector::from_coeffs(std::array::from_fn(|k| x[k])))
    }
}

/// Dirac-Pauli image of a multivector.
pub fn rep(m: &Multivector) -> CMatrix4 {
    Representation::dirac_pauli().rep(m)
}

/// Multivector whose Dirac-Pauli image is `m`.
pub fn decompose(m: &CMatrix4) -> Result<Multivector> {
    Representation::dirac_pauli().decompose(m)
}

/// η_μν I, the right-hand side of the Dirac relations.
pub fn metric_identity(mu: usize, nu: usize) -> CMatrix4 {
    if mu == nu {
        CMatrix4::identity() * Metric::eta(mu)
    } else {
        CMatrix4::zero()
    }
}
