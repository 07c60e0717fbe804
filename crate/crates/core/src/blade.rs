//! Basis blades of the spacetime algebra G(1,3).
//!
//! A blade is stored as a 4-bit mask over the generators γ0..γ3, bit μ set
//! when γμ is a factor. Factors are always taken in ascending order, so
//! `0b0011` is γ0γ1 and `0b1111` is the pseudoscalar γ0γ1γ2γ3.

use std::fmt;

/// Number of basis blades.
pub const BLADE_COUNT: usize = 16;

/// The Minkowski metric diag(+, −, −, −).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metric;

impl Metric {
    pub const SIGNATURE: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

    /// η_μμ for generator `mu`. Panics if `mu > 3`.
    pub const fn eta(mu: usize) -> f64 {
        Self::SIGNATURE[mu]
    }
}

/// A canonical basis blade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u8);

const NAMES: [&str; BLADE_COUNT] = [
    "1",
    "γ0",
    "γ1",
    "γ0γ1",
    "γ2",
    "γ0γ2",
    "γ1γ2",
    "γ0γ1γ2",
    "γ3",
    "γ0γ3",
    "γ1γ3",
    "γ0γ1γ3",
    "γ2γ3",
    "γ0γ2γ3",
    "γ1γ2γ3",
    "γ0γ1γ2γ3",
];

impl Blade {
    pub const SCALAR: Blade = Blade(0);
    pub const PSEUDOSCALAR: Blade = Blade(0b1111);

    pub fn new(mask: u8) -> Option<Blade> {
        (mask < BLADE_COUNT as u8).then_some(Blade(mask))
    }

    /// The generator γμ. Panics if `mu > 3`.
    pub fn gamma(mu: usize) -> Blade {
        assert!(mu < 4, "generator index {mu} out of range");
        Blade(1 << mu)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Generator indices of the blade in ascending order.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        (0..4).filter(move |mu| self.0 & (1 << mu) != 0)
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Blade> {
        NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Blade(i as u8))
    }

    /// All 16 blades in mask order.
    pub fn all() -> impl Iterator<Item = Blade> + Clone {
        (0..BLADE_COUNT as u8).map(Blade)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Grade of a blade (number of generator factors).
pub fn blade_grade(a: Blade) -> u32 {
    a.grade()
}

/// Geometric product of two basis blades: `a * b = sign * result`.
///
/// The sign collects one factor −1 per transposition needed to sort the
/// concatenated generator list, times η_μμ for every generator that appears
/// in both blades and contracts.
pub fn blade_product(a: Blade, b: Blade) -> (f64, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let mut sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
    let common = a.0 & b.0;
    for mu in 0..4 {
        if common & (1 << mu) != 0 {
            sign *= Metric::eta(mu);
        }
    }
    (sign, Blade(a.0 ^ b.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiply generator words by bubble sort, independent of the bit trick.
    fn word_product(word: &[usize]) -> (f64, Blade) {
        let mut w = word.to_vec();
        let mut sign = 1.0;
        loop {
            let mut changed = false;
            let mut k = 0;
            while k + 1 < w.len() {
                if w[k] == w[k + 1] {
                    sign *= Metric::eta(w[k]);
                    w.drain(k..k + 2);
                    changed = true;
                } else if w[k] > w[k + 1] {
                    w.swap(k, k + 1);
                    sign = -sign;
                    changed = true;
                    k += 1;
                } else {
                    k += 1;
                }
            }
            if !changed {
                break;
            }
        }
        let mask = w.iter().fold(0u8, |m, &mu| m | (1 << mu));
        (sign, Blade(mask))
    }

    #[test]
    fn generator_squares_follow_metric() {
        assert_eq!(
            blade_product(Blade::gamma(0), Blade::gamma(0)),
            (1.0, Blade::SCALAR)
        );
        for mu in 1..4 {
            assert_eq!(
                blade_product(Blade::gamma(mu), Blade::gamma(mu)),
                (-1.0, Blade::SCALAR)
            );
        }
    }

    #[test]
    fn distinct_generators_anticommute() {
        let (s12, b12) = blade_product(Blade::gamma(1), Blade::gamma(2));
        let (s21, b21) = blade_product(Blade::gamma(2), Blade::gamma(1));
        assert_eq!((s12, b12.mask()), (1.0, 0b0110));
        assert_eq!((s21, b21.mask()), (-1.0, 0b0110));
    }

    #[test]
    fn pseudoscalar_squares_to_minus_one() {
        assert_eq!(
            blade_product(Blade::PSEUDOSCALAR, Blade::PSEUDOSCALAR),
            (-1.0, Blade::SCALAR)
        );
    }

    #[test]
    fn grades() {
        assert_eq!(blade_grade(Blade::SCALAR), 0);
        assert_eq!(blade_grade(Blade::new(0b0011).unwrap()), 2);
        assert_eq!(blade_grade(Blade::PSEUDOSCALAR), 4);
        assert!(Blade::new(16).is_none());
    }

    #[test]
    fn matches_word_oracle_on_all_pairs() {
        for a in Blade::all() {
            for b in Blade::all() {
                let word: Vec<usize> = a.generators().chain(b.generators()).collect();
                assert_eq!(blade_product(a, b), word_product(&word), "{a} * {b}");
            }
        }
    }

    #[test]
    fn pseudoscalar_commutation_by_grade() {
        for b in Blade::all() {
            let (s1, r1) = blade_product(Blade::PSEUDOSCALAR, b);
            let (s2, r2) = blade_product(b, Blade::PSEUDOSCALAR);
            assert_eq!(r1, r2);
            let expected = if b.grade() % 2 == 1 { -1.0 } else { 1.0 };
            assert_eq!(s1 * s2, expected, "blade {b}");
        }
    }

    #[test]
    fn names_round_trip() {
        for b in Blade::all() {
            assert_eq!(Blade::from_name(b.name()), Some(b));
        }
    }
}
