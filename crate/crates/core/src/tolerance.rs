//! Numerical thresholds shared across the crate.

/// Coefficient-wise equality of multivectors and entry-wise equality of
/// matrices.
pub const EPSILON: f64 = 1e-12;

/// Default pass threshold for commutation, Jacobi and closure checks.
pub const COMMUTATION: f64 = 1e-10;

/// Singular values below this fraction of the largest one count as zero.
pub const RANK_RELATIVE: f64 = 1e-9;

/// Smallest acceptable pivot in the normal equations of the structure
/// constant fit, relative to the largest diagonal entry.
pub const PIVOT_RELATIVE: f64 = 1e-9;

/// Magnitudes below this are printed and serialized as zero.
pub const DISPLAY_ZERO: f64 = 1e-14;

/// Largest acceptable out-of-span residual when fitting commutators in the
/// span of a generator set.
pub const CLOSURE: f64 = 1e-9;
