//! su(3) generator sets: the matrix Gell-Mann bases and their multivector
//! constructions inside CSTA.
//!
//! A multivector set is built from four base elements λ1, λ2, λ4, λ5 and
//! completed by the recursion
//!
//! ```text
//! λ3 = −λ1λ2        λ6 = λ1λ5 − λ5λ1
//! λ7 = λ5λ2 − λ2λ5  λ8 = (−2λ4λ5 − λ3)/√3
//! ```
//!
//! Four gauge copies differ in the base pairs. Each construction can be
//! relabelled by a permutation of the spatial indices and scaled by a phase
//! on every frame vector.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::blade::Blade;
use crate::error::{check_range, Error, Result};
use crate::matrix::{decompose, CMatrix3, CMatrix4, Representation};
use crate::multivector::Multivector;
use crate::tolerance::EPSILON;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const J: Complex64 = Complex64::new(0.0, 1.0);

/// Gell-Mann matrix λ̂a multiplied by j, `a` in 1..=8 (anti-Hermitian).
pub fn gellmann3(a: usize) -> Result<CMatrix3> {
    check_range("gell-mann", a as i64, 1, 8)?;
    let mut m = CMatrix3::zero();
    match a {
        1 => {
            m[(0, 1)] = J;
            m[(1, 0)] = J;
        }
        2 => {
            m[(0, 1)] = ONE;
            m[(1, 0)] = -ONE;
        }
        3 => {
            m[(0, 0)] = J;
            m[(1, 1)] = -J;
        }
        4 => {
            m[(0, 2)] = J;
            m[(2, 0)] = J;
        }
        5 => {
            m[(0, 2)] = ONE;
            m[(2, 0)] = -ONE;
        }
        6 => {
            m[(1, 2)] = J;
            m[(2, 1)] = J;
        }
        7 => {
            m[(1, 2)] = ONE;
            m[(2, 1)] = -ONE;
        }
        _ => {
            let s = 1.0 / 3f64.sqrt();
            m[(0, 0)] = J * s;
            m[(1, 1)] = J * s;
            m[(2, 2)] = J * (-2.0 * s);
        }
    }
    Ok(m)
}

/// [`gellmann3`] padded to 4×4 with a zero third row and column.
pub fn gellmann4(a: usize) -> Result<CMatrix4> {
    Ok(gellmann3(a)?.embed_skip_third())
}

pub fn gellmann3_set() -> [CMatrix3; 8] {
    std::array::from_fn(|k| gellmann3(k + 1).unwrap())
}

pub fn gellmann4_set() -> [CMatrix4; 8] {
    std::array::from_fn(|k| gellmann4(k + 1).unwrap())
}

/// Which gauge-group copy: bit 0 swaps the first base pair, bit 1 the
/// second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CopyId(u8);

impl CopyId {
    pub const ALL: [CopyId; 4] = [CopyId(0), CopyId(1), CopyId(2), CopyId(3)];

    pub fn new(id: u8) -> Result<Self> {
        check_range("copy", id as i64, 0, 3)?;
        Ok(CopyId(id))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    fn swaps_first_pair(self) -> bool {
        self.0 & 1 != 0
    }

    fn swaps_second_pair(self) -> bool {
        self.0 & 2 != 0
    }
}

impl fmt::Display for CopyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A bijection of {1, 2, 3}, stored as the images of 1, 2, 3.
///
/// Applied to a construction it replaces γk by γp(k) for k = 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation([u8; 3]);

impl Permutation {
    /// All six permutations in lexicographic order of their image arrays;
    /// a permutation's position here is its CLI index.
    pub const ALL: [Permutation; 6] = [
        Permutation([1, 2, 3]),
        Permutation([1, 3, 2]),
        Permutation([2, 1, 3]),
        Permutation([2, 3, 1]),
        Permutation([3, 1, 2]),
        Permutation([3, 2, 1]),
    ];

    pub const IDENTITY: Permutation = Permutation([1, 2, 3]);

    pub fn new(images: [u8; 3]) -> Result<Self> {
        let mut sorted = images;
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::NotBijective(images));
        }
        Ok(Permutation(images))
    }

    pub fn from_index(index: usize) -> Result<Self> {
        check_range("permutation", index as i64, 0, 5)?;
        Ok(Self::ALL[index])
    }

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|p| *p == self).unwrap()
    }

    pub fn images(self) -> [u8; 3] {
        self.0
    }

    /// Image of a frame index; 0 is fixed.
    pub fn apply(self, mu: usize) -> usize {
        if mu == 0 {
            0
        } else {
            self.0[mu - 1] as usize
        }
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    pub fn is_three_cycle(self) -> bool {
        (1..=3).all(|k| self.apply(k) != k)
    }

    pub fn is_even(self) -> bool {
        self.is_identity() || self.is_three_cycle()
    }

    /// Cycle notation, e.g. `()`, `(12)`, `(123)`.
    pub fn cycle_notation(self) -> String {
        let mut seen = [false; 4];
        let mut out = String::new();
        for start in 1..=3usize {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            out.push('(');
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                out.push_str(&k.to_string());
                k = self.apply(k);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// Accepts an index `0`..`5`, `identity`/`id`/`e`/`()`, or cycle notation
/// such as `(123)`, `(1 3)`, `(12)(3)`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            what: "permutation",
            input: s.to_string(),
        };
        let t = s.trim();
        if let Ok(index) = t.parse::<usize>() {
            return Self::from_index(index);
        }
        if matches!(t, "identity" | "id" | "e" | "()" | "") {
            return Ok(Self::IDENTITY);
        }
        let mut images = [1u8, 2, 3];
        let mut rest = t;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(parse_err)?;
            let close = inner.find(')').ok_or_else(parse_err)?;
            let digits: Vec<u8> = inner[..close]
                .chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| {
                    c.to_digit(10)
                        .filter(|d| (1..=3).contains(d))
                        .map(|d| d as u8)
                })
                .collect::<Option<_>>()
                .ok_or_else(parse_err)?;
            for (k, &d) in digits.iter().enumerate() {
                images[d as usize - 1] = digits[(k + 1) % digits.len()];
            }
            rest = inner[close + 1..].trim_start();
        }
        Permutation::new(images).map_err(|_| parse_err())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// How the pseudoscalar factor in the first base pair is applied to its
/// operand `x`: `i·x`, `x·i`, `i⁻¹·x` or `x·i⁻¹` (with i⁻¹ = −i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PseudoscalarSide {
    Left,
    Right,
    LeftInverse,
    RightInverse,
}

impl PseudoscalarSide {
    pub const ALL: [PseudoscalarSide; 4] = [
        PseudoscalarSide::Left,
        PseudoscalarSide::Right,
        PseudoscalarSide::LeftInverse,
        PseudoscalarSide::RightInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PseudoscalarSide::Left => "left",
            PseudoscalarSide::Right => "right",
            PseudoscalarSide::LeftInverse => "left-inverse",
            PseudoscalarSide::RightInverse => "right-inverse",
        }
    }

    fn apply(self, ps: &Multivector, ps_inv: &Multivector, x: &Multivector) -> Multivector {
        match self {
            PseudoscalarSide::Left => ps.gp(x),
            PseudoscalarSide::Right => x.gp(ps),
            PseudoscalarSide::LeftInverse => ps_inv.gp(x),
            PseudoscalarSide::RightInverse => x.gp(ps_inv),
        }
    }
}

impl fmt::Display for PseudoscalarSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PseudoscalarSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|side| side.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "pseudoscalar side",
                input: s.to_string(),
            })
    }
}

/// Complex factor applied to every frame vector γμ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phase(Complex64);

impl Phase {
    pub const ONE: Phase = Phase(ONE);
    pub const J: Phase = Phase(J);

    /// A unit-modulus phase (within ε).
    pub fn unit(z: Complex64) -> Result<Self> {
        let p = Self::any(z)?;
        let modulus = z.norm();
        if (modulus - 1.0).abs() > EPSILON {
            return Err(Error::NonUnitPhase {
                re: z.re,
                im: z.im,
                modulus,
            });
        }
        Ok(p)
    }

    /// Any finite nonzero scale factor.
    pub fn any(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() == 0.0 {
            return Err(Error::DegeneratePhase);
        }
        Ok(Phase(z))
    }

    /// e^{jθ}.
    pub fn from_angle(theta: f64) -> Self {
        Phase(Complex64::from_polar(1.0, theta))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn is_one(self) -> bool {
        (self.0 - ONE).norm() <= EPSILON
    }
}

impl Serialize for Phase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.re, self.0.im].serialize(s)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_complex(self.0))
    }
}

/// Everything that determines a multivector generator set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BuildParams {
    pub copy: CopyId,
    pub permutation: Permutation,
    pub side: PseudoscalarSide,
    pub phase: Phase,
}

impl BuildParams {
    pub fn new(copy: CopyId, side: PseudoscalarSide) -> Self {
        BuildParams {
            copy,
            permutation: Permutation::IDENTITY,
            side,
            phase: Phase::ONE,
        }
    }

    pub fn with_permutation(mut self, permutation: Permutation) -> Self {
        self.permutation = permutation;
        self
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }
}

/// The four independent generators λ1, λ2, λ4, λ5.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasePairs {
    pub l1: Multivector,
    pub l2: Multivector,
    pub l4: Multivector,
    pub l5: Multivector,
}

/// Build λ1, λ2, λ4, λ5 for a copy in the transformed frame
/// γ'μ = phase·γ_{p(μ)}, σ'k = γ'kγ'0, i' = γ'0γ'1γ'2γ'3.
///
/// ```text
/// pair one, copies #0 #2:  λ1 = i(γ1 − σ1)/2    λ2 = i(γ2 − σ2)/2
/// pair one, copies #1 #3:  λ1 = −i(γ1 + σ1)/2   λ2 = −i(γ2 + σ2)/2
/// pair two, copies #0 #1:  λ4 = (jσ1 + γ2)/2    λ5 = (jσ2 − γ1)/2
/// pair two, copies #2 #3:  λ4 = (jσ1 − γ2)/2    λ5 = (jσ2 + γ1)/2
/// ```
///
/// where `i(...)` is applied according to `params.side`.
pub fn build_base_pairs(params: &BuildParams) -> BasePairs {
    let p = params.phase.value();
    let frame: [Multivector; 4] = std::array::from_fn(|mu| {
        Multivector::blade(Blade::gamma(params.permutation.apply(mu))).scale(p)
    });
    let sigma = |k: usize| frame[k].gp(&frame[0]);
    let ps = frame[0].gp(&frame[1]).gp(&frame[2]).gp(&frame[3]);
    // i'² is the scalar −p⁸.
    let ps_inv = ps.scale(ps.gp(&ps)[Blade::SCALAR].inv());
    let with_i = |x: Multivector| params.side.apply(&ps, &ps_inv, &x);
    let half = Complex64::new(0.5, 0.0);

    let (l1, l2) = if params.copy.swaps_first_pair() {
        (
            -with_i(frame[1] + sigma(1)).scale(half),
            -with_i(frame[2] + sigma(2)).scale(half),
        )
    } else {
        (
            with_i(frame[1] - sigma(1)).scale(half),
            with_i(frame[2] - sigma(2)).scale(half),
        )
    };
    let (l4, l5) = if params.copy.swaps_second_pair() {
        (
            (sigma(1).scale(J) - frame[2]).scale(half),
            (sigma(2).scale(J) + frame[1]).scale(half),
        )
    } else {
        (
            (sigma(1).scale(J) + frame[2]).scale(half),
            (sigma(2).scale(J) - frame[1]).scale(half),
        )
    };
    BasePairs { l1, l2, l4, l5 }
}

/// Eight generators in multivector form together with their matrices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorSet {
    pub label: String,
    #[serde(rename = "meta")]
    pub params: Option<BuildParams>,
    pub matrices: [CMatrix4; 8],
    #[serde(rename = "multivectors")]
    pub lambdas: [Multivector; 8],
}

impl GeneratorSet {
    /// Wrap a matrix set; the multivector forms come from decomposition.
    pub fn from_matrices(label: impl Into<String>, matrices: [CMatrix4; 8]) -> Result<Self> {
        let mut lambdas = [Multivector::zero(); 8];
        for (l, m) in lambdas.iter_mut().zip(&matrices) {
            *l = decompose(m)?;
        }
        Ok(GeneratorSet {
            label: label.into(),
            params: None,
            matrices,
            lambdas,
        })
    }

    /// Largest entry of λ̂a† + λ̂a over the set.
    pub fn anti_hermitian_error(&self) -> f64 {
        self.matrices
            .iter()
            .map(|m| (m.adjoint() + *m).max_abs())
            .fold(0.0, f64::max)
    }

    pub fn trace_error(&self) -> f64 {
        self.matrices
            .iter()
            .map(|m| m.trace().norm())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of tr(λ̂aλ̂b) from −2δab.
    pub fn trace_form_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for (a, ma) in self.matrices.iter().enumerate() {
            for (b, mb) in self.matrices.iter().enumerate() {
                let expected = if a == b { -2.0 } else { 0.0 };
                worst = worst.max(((*ma * *mb).trace() - expected).norm());
            }
        }
        worst
    }

    /// Largest gap between each stored matrix and the image of its
    /// multivector.
    pub fn rep_consistency_error(&self, rep: &Representation) -> f64 {
        self.lambdas
            .iter()
            .zip(&self.matrices)
            .map(|(l, m)| rep.rep(l).max_abs_diff(m))
            .fold(0.0, f64::max)
    }
}

fn set_label(params: &BuildParams) -> String {
    format!(
        "copy {} perm {} side {} phase {}",
        params.copy, params.permutation, params.side, params.phase
    )
}

/// Complete the base pairs by the recursion and map every generator to a
/// matrix with `rep`.
pub fn complete_set_with(
    rep: &Representation,
    base: &BasePairs,
    params: Option<BuildParams>,
) -> GeneratorSet {
    let BasePairs { l1, l2, l4, l5 } = *base;
    let l3 = -l1.gp(&l2);
    let l6 = l1.commutator(&l5);
    let l7 = l5.commutator(&l2);
    let l8 = (l4.gp(&l5) * -2.0 - l3) * (1.0 / 3f64.sqrt());
    let lambdas = [l1, l2, l3, l4, l5, l6, l7, l8];
    GeneratorSet {
        label: params
            .as_ref()
            .map(set_label)
            .unwrap_or_else(|| "custom".to_string()),
        params,
        matrices: lambdas.map(|l| rep.rep(&l)),
        lambdas,
    }
}

pub fn complete_set(base: &BasePairs, params: Option<BuildParams>) -> GeneratorSet {
    complete_set_with(Representation::dirac_pauli(), base, params)
}

/// Base pairs plus recursion, in the Dirac-Pauli representation.
pub fn build_set(params: &BuildParams) -> GeneratorSet {
    complete_set(&build_base_pairs(params), Some(*params))
}

pub fn build_set_with(rep: &Representation, params: &BuildParams) -> GeneratorSet {
    complete_set_with(rep, &build_base_pairs(params), Some(*params))
}

/// One set per permutation, in [`Permutation::ALL`] order.
pub fn all_permutation_sets(
    copy: CopyId,
    side: PseudoscalarSide,
    phase: Phase,
) -> Vec<GeneratorSet> {
    Permutation::ALL
        .par_iter()
        .map(|&p| {
            build_set(
                &BuildParams::new(copy, side)
                    .with_permutation(p)
                    .with_phase(phase),
            )
        })
        .collect()
}

/// The 4×4 Gell-Mann set as a [`GeneratorSet`].
pub fn gellmann4_generator_set() -> GeneratorSet {
    GeneratorSet::from_matrices("gell-mann 4x4", gellmann4_set())
        .expect("Dirac-Pauli images span all 4x4 matrices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rep;

    const SIDE: PseudoscalarSide = PseudoscalarSide::RightInverse;

    fn entry_only(m: &CMatrix4, entries: &[((usize, usize), Complex64)]) -> bool {
        (0..4).all(|r| {
            (0..4).all(|c| {
                let want = entries
                    .iter()
                    .find(|(pos, _)| *pos == (r, c))
                    .map(|(_, z)| *z)
                    .unwrap_or_default();
                (m[(r, c)] - want).norm() < EPSILON
            })
        })
    }

    #[test]
    fn gellmann3_tables() {
        assert!(gellmann3(0).is_err() && gellmann3(9).is_err());
        let g1 = gellmann3(1).unwrap();
        assert_eq!(g1[(0, 1)], J);
        assert_eq!(g1[(1, 0)], J);
        assert_eq!(g1.max_abs(), 1.0);
        let g2 = gellmann3(2).unwrap();
        assert_eq!((g2[(0, 1)], g2[(1, 0)]), (ONE, -ONE));
        let g8 = gellmann3(8).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert_eq!(g8[(0, 0)], J * s);
        assert_eq!(g8[(2, 2)], J * (-2.0 * s));
    }

    #[test]
    fn gellmann4_tables() {
        assert!(entry_only(
            &gellmann4(1).unwrap(),
            &[((0, 1), J), ((1, 0), J)]
        ));
        assert!(entry_only(
            &gellmann4(4).unwrap(),
            &[((0, 3), J), ((3, 0), J)]
        ));
        let s = 1.0 / 3f64.sqrt();
        assert!(entry_only(
            &gellmann4(8).unwrap(),
            &[((0, 0), J * s), ((1, 1), J * s), ((3, 3), J * (-2.0 * s))]
        ));
        for a in 1..=8 {
            let g3 = gellmann3(a).unwrap();
            let g4 = gellmann4(a).unwrap();
            let keep = [0, 1, 3];
            for (r3, &r4) in keep.iter().enumerate() {
                for (c3, &c4) in keep.iter().enumerate() {
                    assert_eq!(g3[(r3, c3)], g4[(r4, c4)]);
                }
            }
        }
    }

    #[test]
    fn base_pair_positions() {
        let b0 = build_base_pairs(&BuildParams::new(CopyId::new(0).unwrap(), SIDE));
        assert!(entry_only(&rep(&b0.l4), &[((0, 3), J), ((3, 0), J)]));
        let b1 = build_base_pairs(&BuildParams::new(CopyId::new(1).unwrap(), SIDE));
        assert!(entry_only(&rep(&b1.l1), &[((2, 3), J), ((3, 2), J)]));
        let b2 = build_base_pairs(&BuildParams::new(CopyId::new(2).unwrap(), SIDE));
        assert!(entry_only(&rep(&b2.l4), &[((1, 2), J), ((2, 1), J)]));
    }

    #[test]
    fn copy_zero_pairs_anticommute() {
        let b = build_base_pairs(&BuildParams::new(CopyId::new(0).unwrap(), SIDE));
        assert!(b.l1.gp(&b.l2).approx_eq(&-b.l2.gp(&b.l1), EPSILON));
        assert!(b.l4.gp(&b.l5).approx_eq(&-b.l5.gp(&b.l4), EPSILON));
    }

    #[test]
    fn copy_zero_reproduces_gellmann4() {
        let set = build_set(&BuildParams::new(CopyId::new(0).unwrap(), SIDE));
        for (a, (m, g)) in set.matrices.iter().zip(gellmann4_set()).enumerate() {
            assert!(m.approx_eq(&g, EPSILON), "λ{}:\n{}", a + 1, m);
        }
    }

    #[test]
    fn built_sets_are_anti_hermitian_traceless_and_normalised() {
        for copy in CopyId::ALL {
            for side in PseudoscalarSide::ALL {
                for set in all_permutation_sets(copy, side, Phase::ONE) {
                    assert!(set.anti_hermitian_error() < EPSILON, "{}", set.label);
                    assert!(set.trace_error() < EPSILON, "{}", set.label);
                    assert!(set.trace_form_error() < EPSILON, "{}", set.label);
                    assert!(set.rep_consistency_error(Representation::dirac_pauli()) < EPSILON);
                }
            }
        }
    }

    #[test]
    fn literal_second_pair_reading_is_not_anti_hermitian() {
        // The literal reading λ5 = j(σ2 + γ1)/2; jγ1 maps to a Hermitian matrix.
        let s2 = Multivector::sigma(2).unwrap();
        let g1 = Multivector::gamma(1).unwrap();
        let literal = rep(&(s2 + g1).scale(J * 0.5));
        assert!((literal.adjoint() + literal).max_abs() > 0.5);
        let used = build_base_pairs(&BuildParams::new(CopyId::new(2).unwrap(), SIDE)).l5;
        let m = rep(&used);
        assert!((m.adjoint() + m).max_abs() < EPSILON);
    }

    #[test]
    fn parallel_matches_serial() {
        for copy in CopyId::ALL {
            let par = all_permutation_sets(copy, SIDE, Phase::ONE);
            let serial: Vec<_> = Permutation::ALL
                .iter()
                .map(|&p| build_set(&BuildParams::new(copy, SIDE).with_permutation(p)))
                .collect();
            assert_eq!(par, serial);
        }
    }

    #[test]
    fn permutation_parsing_and_validation() {
        assert!(Permutation::new([1, 1, 2]).is_err());
        assert_eq!(
            "(123)".parse::<Permutation>().unwrap(),
            Permutation::new([2, 3, 1]).unwrap()
        );
        assert_eq!(
            "(1 3 2)".parse::<Permutation>().unwrap(),
            Permutation::new([3, 1, 2]).unwrap()
        );
        assert_eq!(
            "(12)".parse::<Permutation>().unwrap(),
            Permutation::new([2, 1, 3]).unwrap()
        );
        assert_eq!(
            "identity".parse::<Permutation>().unwrap(),
            Permutation::IDENTITY
        );
        assert_eq!(
            "3".parse::<Permutation>().unwrap(),
            Permutation::new([2, 3, 1]).unwrap()
        );
        assert!("6".parse::<Permutation>().is_err());
        assert!("(14)".parse::<Permutation>().is_err());
        assert!("(12".parse::<Permutation>().is_err());
        for p in Permutation::ALL {
            assert_eq!(p.cycle_notation().parse::<Permutation>().unwrap(), p);
            assert_eq!(Permutation::from_index(p.index()).unwrap(), p);
        }
        assert_eq!(
            Permutation::ALL
                .iter()
                .filter(|p| p.is_three_cycle())
                .count(),
            2
        );
    }

    #[test]
    fn phase_validation() {
        assert!(Phase::unit(Complex64::new(2.0, 0.0)).is_err());
        assert!(Phase::unit(Complex64::new(0.0, 1.0)).is_ok());
        assert!(Phase::any(Complex64::new(2.0, 0.0)).is_ok());
        assert!(Phase::any(Complex64::new(0.0, 0.0)).is_err());
        assert!(Phase::any(Complex64::new(f64::NAN, 0.0)).is_err());
        assert!(CopyId::new(4).is_err());
    }
}
