//! Multivectors of the complexified spacetime algebra.
//!
//! Coefficients are complex; the imaginary unit of a coefficient is the
//! scalar imaginary `j`, which commutes with every blade. The pseudoscalar
//! `i = γ0γ1γ2γ3` is a blade and does not commute with odd grades.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::blade::{blade_product, Blade, BLADE_COUNT};
use crate::error::{check_range, Result};
use crate::text::{clean_complex, format_complex};
use crate::tolerance::DISPLAY_ZERO;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A CSTA element: one complex coefficient per canonical blade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector {
    coeffs: [Complex64; BLADE_COUNT],
}

impl Default for Multivector {
    fn default() -> Self {
        Self::zero()
    }
}

impl Multivector {
    pub const fn zero() -> Self {
        Multivector {
            coeffs: [ZERO; BLADE_COUNT],
        }
    }

    pub fn from_coeffs(coeffs: [Complex64; BLADE_COUNT]) -> Self {
        Multivector { coeffs }
    }

    pub fn scalar(z: Complex64) -> Self {
        Self::term(z, Blade::SCALAR)
    }

    pub fn one() -> Self {
        Self::scalar(Complex64::new(1.0, 0.0))
    }

    /// `z` times a single basis blade.
    pub fn term(z: Complex64, blade: Blade) -> Self {
        let mut m = Self::zero();
        m.coeffs[blade.index()] = z;
        m
    }

    pub fn blade(blade: Blade) -> Self {
        Self::term(Complex64::new(1.0, 0.0), blade)
    }

    /// The generator γμ, `mu` in 0..=3.
    pub fn gamma(mu: usize) -> Result<Self> {
        check_range("gamma", mu as i64, 0, 3)?;
        Ok(Self::blade(Blade::gamma(mu)))
    }

    /// The unit pseudoscalar i = γ0γ1γ2γ3.
    pub fn pseudoscalar() -> Self {
        Self::blade(Blade::PSEUDOSCALAR)
    }

    /// Relative vector σk = γkγ0, `k` in 1..=3.
    pub fn sigma(k: usize) -> Result<Self> {
        check_range("sigma", k as i64, 1, 3)?;
        Ok(Self::blade(Blade::gamma(k)).gp(&Self::blade(Blade::gamma(0))))
    }

    pub fn coeffs(&self) -> &[Complex64; BLADE_COUNT] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> Complex64 {
        self.coeffs[blade.index()]
    }

    pub fn scale(&self, z: Complex64) -> Self {
        let mut out = *self;
        out.coeffs.iter_mut().for_each(|c| *c *= z);
        out
    }

    /// Geometric product.
    pub fn gp(&self, other: &Multivector) -> Multivector {
        let mut out = Self::zero();
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == ZERO {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == ZERO {
                    continue;
                }
                let (sign, blade) =
                    blade_product(Blade::new(a as u8).unwrap(), Blade::new(b as u8).unwrap());
                out.coeffs[blade.index()] += ca * cb * sign;
            }
        }
        out
    }

    /// `ab − ba`, without a factor ½.
    pub fn commutator(&self, other: &Multivector) -> Multivector {
        self.gp(other) - other.gp(self)
    }

    /// Keep only the blades of grade `grade` (0..=4).
    pub fn grade_project(&self, grade: u32) -> Result<Multivector> {
        check_range("grade", grade as i64, 0, 4)?;
        let mut out = *self;
        for blade in Blade::all() {
            if blade.grade() != grade {
                out.coeffs[blade.index()] = ZERO;
            }
        }
        Ok(out)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Largest coefficient modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Multivector) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Multivector, eps: f64) -> bool {
        self.max_abs_diff(other) <= eps
    }

    /// Nonzero terms as `(blade, coefficient)` in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, Complex64)> + '_ {
        Blade::all()
            .map(move |b| (b, self.coeffs[b.index()]))
            .filter(|(_, c)| c.norm() > DISPLAY_ZERO)
    }
}

impl Index<Blade> for Multivector {
    type Output = Complex64;

    fn index(&self, blade: Blade) -> &Complex64 {
        &self.coeffs[blade.index()]
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(mut self, rhs: Multivector) -> Multivector {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Multivector) {
        self.coeffs
            .iter_mut()
            .zip(rhs.coeffs)
            .for_each(|(a, b)| *a += b);
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Multivector) -> Multivector {
        self + (-rhs)
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        self.gp(&rhs)
    }
}

impl Mul<Complex64> for Multivector {
    type Output = Multivector;

    fn mul(self, z: Complex64) -> Multivector {
        self.scale(z)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(self, x: f64) -> Multivector {
        self.scale(Complex64::new(x, 0.0))
    }
}

/// Signed sum over canonical blade names, e.g. `(0.5+0.5j)·γ0γ1 + (-j)·γ2`.
/// Blades are always named in ascending generator order, so σ1 = γ1γ0
/// renders as `(-1)·γ0γ1`.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})·{}", format_complex(c), blade.name())?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Serialized as a map from blade name to `[re, im]`, nonzero terms only.
impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut map = serializer.serialize_map(Some(terms.len()))?;
        for (blade, c) in terms {
            let c = clean_complex(c);
            map.serialize_entry(blade.name(), &[c.re, c.im])?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn g(mu: usize) -> Multivector {
        Multivector::gamma(mu).unwrap()
    }

    #[test]
    fn addition_identities() {
        let a = g(1) * c(0.3, -2.0) + g(0);
        assert_eq!(a + Multivector::zero(), a);
        assert!((g(1) + g(1) * -1.0).approx_eq(&Multivector::zero(), 0.0));
        assert_eq!(
            Multivector::scalar(c(0.0, 1.0)) + Multivector::one(),
            Multivector::scalar(c(1.0, 1.0))
        );
    }

    #[test]
    fn scaling() {
        let j = c(0.0, 1.0);
        assert_eq!(Multivector::one().scale(j), Multivector::scalar(j));
        assert_eq!(g(1).scale(j).scale(j), -g(1));
        let a = g(2) * c(1.5, 0.25);
        assert_eq!(a.scale(c(1.0, 0.0)), a);
    }

    #[test]
    fn gp_examples() {
        assert_eq!(g(1).gp(&g(0)), Multivector::sigma(1).unwrap());
        let i = Multivector::pseudoscalar();
        assert_eq!(i.gp(&i), -Multivector::one());
        let s1 = Multivector::sigma(1).unwrap();
        assert_eq!(s1.gp(&s1), Multivector::one());
    }

    #[test]
    fn commutator_examples() {
        let a = g(1) * c(0.5, 1.0) + g(2);
        assert_eq!(a.commutator(&a), Multivector::zero());
        let e12 = Multivector::blade(Blade::new(0b0110).unwrap());
        assert_eq!(g(1).commutator(&g(2)), e12 * 2.0);
        assert_eq!(Multivector::one().commutator(&a), Multivector::zero());
    }

    #[test]
    fn pseudoscalar_relations() {
        let i = Multivector::pseudoscalar();
        assert_eq!(i.gp(&g(1)) + g(1).gp(&i), Multivector::zero());
        let s1 = Multivector::sigma(1).unwrap();
        assert_eq!(i.gp(&s1) - s1.gp(&i), Multivector::zero());
    }

    #[test]
    fn sigma_values() {
        // σ1 = γ1γ0 = −γ0γ1
        let s1 = Multivector::sigma(1).unwrap();
        assert_eq!(
            s1,
            Multivector::term(c(-1.0, 0.0), Blade::new(0b0011).unwrap())
        );
        for k in 1..=3 {
            let s = Multivector::sigma(k).unwrap();
            assert_eq!(s.gp(&s), Multivector::one());
        }
        // σ1σ2σ3 = γ1γ0γ2γ0γ3γ0; word-oracle sign is +1, so σ1σ2σ3 = +i.
        let triple = s1.gp(&Multivector::sigma(2)
            .unwrap()
            .gp(&Multivector::sigma(3).unwrap()));
        assert_eq!(triple, Multivector::pseudoscalar());
        assert!(Multivector::sigma(0).is_err());
        assert!(Multivector::sigma(4).is_err());
        assert!(Multivector::gamma(4).is_err());
    }

    #[test]
    fn grade_projection() {
        let s1 = Multivector::sigma(1).unwrap();
        assert_eq!((g(1) + s1).grade_project(1).unwrap(), g(1));
        let i = Multivector::pseudoscalar();
        assert_eq!(i.grade_project(4).unwrap(), i);
        let a = Multivector::from_coeffs(std::array::from_fn(|k| c(k as f64, 1.0 - k as f64)));
        let sum = (0..=4).fold(Multivector::zero(), |acc, g| {
            acc + a.grade_project(g).unwrap()
        });
        assert_eq!(sum, a);
        assert!(a.grade_project(5).is_err());
    }

    #[test]
    fn display_and_json() {
        let m = Multivector::sigma(1).unwrap() * c(0.5, 0.5);
        assert_eq!(m.to_string(), "(-0.5-0.5j)·γ0γ1");
        assert_eq!(Multivector::zero().to_string(), "0");
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"γ0γ1":[-0.5,-0.5]}"#);
    }
}
