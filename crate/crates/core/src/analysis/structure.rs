//! Structure constants of su(3) in the convention
//! `[λa, λb] = −2 Σc f_abc λc`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::NormalEquations;
use crate::matrix::CMatrix;
use crate::tolerance::PIVOT_RELATIVE;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

type Tensor = [[[Complex64; 8]; 8]; 8];

/// Rank-3 tensor c_abc (0-based storage, 1-based in the public accessors)
/// and the out-of-span residual of the fit that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    c: Tensor,
    pub residual: f64,
}

/// One nonzero component, 1-based indices.
#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub value: [f64; 2],
}

impl StructureConstants {
    pub fn zero() -> Self {
        StructureConstants {
            c: [[[ZERO; 8]; 8]; 8],
            residual: 0.0,
        }
    }

    /// f_abc with indices in 1..=8.
    pub fn get(&self, a: usize, b: usize, c: usize) -> Complex64 {
        self.c[a - 1][b - 1][c - 1]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, value: Complex64) {
        self.c[a - 1][b - 1][c - 1] = value;
    }

    /// Set a component and all its index permutations with the sign of the
    /// permutation.
    pub fn set_antisymmetric(&mut self, a: usize, b: usize, c: usize, value: f64) {
        let v = Complex64::new(value, 0.0);
        for (x, y, z, s) in [
            (a, b, c, 1.0),
            (b, c, a, 1.0),
            (c, a, b, 1.0),
            (b, a, c, -1.0),
            (a, c, b, -1.0),
            (c, b, a, -1.0),
        ] {
            self.set(x, y, z, v * s);
        }
    }

    /// Largest |c_abc − other_abc|.
    pub fn max_deviation(&self, other: &StructureConstants) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    worst = worst.max((self.c[a][b][c] - other.c[a][b][c]).norm());
                }
            }
        }
        worst
    }

    /// Largest |c_abc + c_bac|.
    pub fn first_pair_antisymmetry_error(&self) -> f64 {
        self.permutation_error(|a, b, c| (b, a, c))
    }

    /// Largest |c_abc + c_acb|; zero for a totally antisymmetric tensor.
    pub fn last_pair_antisymmetry_error(&self) -> f64 {
        self.permutation_error(|a, b, c| (a, c, b))
    }

    fn permutation_error(
        &self,
        swap: impl Fn(usize, usize, usize) -> (usize, usize, usize),
    ) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    let (x, y, z) = swap(a, b, c);
                    worst = worst.max((self.c[a][b][c] + self.c[x][y][z]).norm());
                }
            }
        }
        worst
    }

    /// Largest imaginary part over all components.
    pub fn max_imaginary(&self) -> f64 {
        self.c
            .iter()
            .flatten()
            .flatten()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    /// Components with a < b and modulus above `threshold`.
    pub fn nonzero_components(&self, threshold: f64) -> Vec<Component> {
        let mut out = Vec::new();
        for a in 1..=8 {
            for b in a + 1..=8 {
                for c in 1..=8 {
                    let v = self.get(a, b, c);
                    if v.norm() > threshold {
                        let v = crate::text::clean_complex(v);
                        out.push(Component {
                            a,
                            b,
                            c,
                            value: [v.re, v.im],
                        });
                    }
                }
            }
        }
        out
    }
}

/// The su(3) constants: f123 = 1; f147 = f246 = f257 = f345 = f516 = f637 =
/// 1/2; f458 = f678 = √3/2; totally antisymmetric, zero elsewhere.
pub fn reference_f() -> StructureConstants {
    let mut f = StructureConstants::zero();
    f.set_antisymmetric(1, 2, 3, 1.0);
    for (a, b, c) in [
        (1, 4, 7),
        (2, 4, 6),
        (2, 5, 7),
        (3, 4, 5),
        (5, 1, 6),
        (6, 3, 7),
    ] {
        f.set_antisymmetric(a, b, c, 0.5);
    }
    let half_root3 = 3f64.sqrt() / 2.0;
    f.set_antisymmetric(4, 5, 8, half_root3);
    f.set_antisymmetric(6, 7, 8, half_root3);
    f
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CommutationReport {
    pub max_error: f64,
    /// 1-based pair with the largest error.
    pub worst_pair: (usize, usize),
    pub pairs_checked: usize,
    pub tolerance: f64,
    pub pass: bool,
}

/// Check `[λa, λb] + 2 Σc f_abc λc = 0` for all 28 pairs a < b, in max-entry
/// norm.
pub fn verify_commutation<const N: usize>(
    matrices: &[CMatrix<N>; 8],
    f: &StructureConstants,
    tolerance: f64,
) -> CommutationReport {
    let mut max_error = 0.0f64;
    let mut worst_pair = (1, 2);
    let mut pairs_checked = 0;
    for a in 0..8 {
        for b in a + 1..8 {
            let mut lhs = matrices[a].commutator(&matrices[b]);
            for (c, m) in matrices.iter().enumerate() {
                let coeff = f.c[a][b][c];
                if coeff != ZERO {
                    lhs = lhs + m.scale(coeff * 2.0);
                }
            }
            let err = lhs.max_abs();
            pairs_checked += 1;
            if err > max_error {
                max_error = err;
                worst_pair = (a + 1, b + 1);
            }
        }
    }
    CommutationReport {
        max_error,
        worst_pair,
        pairs_checked,
        tolerance,
        pass: max_error < tolerance,
    }
}

/// Fit c_abc from the commutators by least squares over the generator span.
///
/// Matrices are flattened to vectors; for each pair a < b the coefficients
/// of `[λa, λb]` in the basis λ1..λ8 are found from the normal equations and
/// divided by −2. `c_bac = −c_abc` is imposed, and `residual` is the largest
/// out-of-span remainder, which bounds how far the set is from closing
/// under the commutator.
pub fn extract_structure_constants<const N: usize>(
    matrices: &[CMatrix<N>; 8],
) -> Result<StructureConstants> {
    let columns: Vec<Vec<Complex64>> = matrices.iter().map(|m| m.flatten()).collect();
    let normal = NormalEquations::new(columns, PIVOT_RELATIVE)?;
    let mut out = StructureConstants::zero();
    for a in 0..8 {
        for b in a + 1..8 {
            let fit = normal.fit(&matrices[a].commutator(&matrices[b]).flatten())?;
            out.residual = out.residual.max(fit.residual);
            for (c, coeff) in fit.coeffs.iter().enumerate() {
                let v = coeff / -2.0;
                out.c[a][b][c] = v;
                out.c[b][a][c] = -v;
            }
        }
    }
    Ok(out)
}

/// Max over all triples of ‖[[λa,λb],λc] + [[λb,λc],λa] + [[λc,λa],λb]‖∞.
pub fn jacobi_check<const N: usize>(matrices: &[CMatrix<N>; 8]) -> f64 {
    let mut brackets = [CMatrix::<N>::zero(); 64];
    for a in 0..8 {
        for b in 0..8 {
            brackets[a * 8 + b] = matrices[a].commutator(&matrices[b]);
        }
    }
    let mut worst = 0.0f64;
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let sum = brackets[a * 8 + b].commutator(&matrices[c])
                    + brackets[b * 8 + c].commutator(&matrices[a])
                    + brackets[c * 8 + a].commutator(&matrices[b]);
                worst = worst.max(sum.max_abs());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{gellmann3_set, gellmann4_set};
    use crate::matrix::CMatrix4;

    #[test]
    fn reference_values() {
        let f = reference_f();
        assert_eq!(f.get(1, 2, 3).re, 1.0);
        assert_eq!(f.get(2, 1, 3).re, -1.0);
        assert_eq!(f.get(4, 5, 8).re, 3f64.sqrt() / 2.0);
        assert_eq!(f.get(1, 5, 6).re, -0.5);
        assert_eq!(f.get(1, 1, 1).re, 0.0);
        assert_eq!(f.last_pair_antisymmetry_error(), 0.0);
        assert_eq!(f.first_pair_antisymmetry_error(), 0.0);
        assert_eq!(f.residual, 0.0);
        // 9 independent nonzero values, each appearing in 3 ordered pairs a < b.
        assert_eq!(f.nonzero_components(0.0).len(), 27);
    }

    /// f_abc = −tr([λa, λb] λc) / (2 tr(λc λc)), valid because the Gell-Mann
    /// matrices are trace-orthogonal.
    #[test]
    fn reference_matches_trace_formula() {
        let g = gellmann3_set();
        let f = reference_f();
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    let norm = (g[c] * g[c]).trace();
                    let value = -(g[a].commutator(&g[b]) * g[c]).trace() / (norm * 2.0);
                    assert!(
                        (value - f.c[a][b][c]).norm() < 1e-14,
                        "f{}{}{}",
                        a + 1,
                        b + 1,
                        c + 1
                    );
                }
            }
        }
    }

    #[test]
    fn gellmann_anchor() {
        let f = reference_f();
        let r3 = verify_commutation(&gellmann3_set(), &f, 1e-12);
        let r4 = verify_commutation(&gellmann4_set(), &f, 1e-12);
        assert!(r3.pass && r4.pass);
        assert_eq!(r3.pairs_checked, 28);
        assert!((r3.max_error - r4.max_error).abs() < 1e-14);
    }

    #[test]
    fn perturbed_constant_is_detected() {
        let mut f = reference_f();
        f.set_antisymmetric(1, 2, 3, 1.1);
        let r = verify_commutation(&gellmann3_set(), &f, 1e-10);
        assert!(!r.pass);
        // 2·0.1·‖λ̂3‖∞ = 0.2
        assert!((r.max_error - 0.2).abs() < 1e-12);
        assert_eq!(r.worst_pair, (1, 2));
    }

    #[test]
    fn extraction_recovers_reference() {
        let f = reference_f();
        for sc in [
            extract_structure_constants(&gellmann3_set()).unwrap(),
            extract_structure_constants(&gellmann4_set()).unwrap(),
        ] {
            assert!(sc.max_deviation(&f) < 1e-10);
            assert!(sc.residual < 1e-10);
            assert!(sc.last_pair_antisymmetry_error() < 1e-10);
        }
    }

    #[test]
    fn duplicated_generator_is_degenerate() {
        let mut g = gellmann3_set();
        g[1] = g[0];
        assert!(matches!(
            extract_structure_constants(&g),
            Err(Error::DegenerateSet { .. })
        ));
    }

    #[test]
    fn jacobi_holds_for_any_matrices() {
        assert!(jacobi_check(&gellmann3_set()) < 1e-12);
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
        };
        let random: [CMatrix4; 8] =
            std::array::from_fn(|_| CMatrix4::from_fn(|_, _| Complex64::new(next(), next())));
        assert!(jacobi_check(&random) < 1e-10);
    }
}
