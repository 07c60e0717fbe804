//! Seeded sampling of multivectors for property checks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blade::BLADE_COUNT;
use crate::multivector::Multivector;

/// Deterministic sample stream: the same seed always yields the same
/// multivectors, on every platform.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Real and imaginary parts uniform in [−1, 1).
    pub fn complex(&mut self) -> Complex64 {
        Complex64::new(self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0))
    }

    /// All 16 coefficients drawn with [`Sampler::complex`].
    pub fn multivector(&mut self) -> Multivector {
        let mut coeffs = [Complex64::new(0.0, 0.0); BLADE_COUNT];
        for c in &mut coeffs {
            *c = self.complex();
        }
        Multivector::from_coeffs(coeffs)
    }
}
