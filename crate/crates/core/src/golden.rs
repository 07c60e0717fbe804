//! Reference matrix tables for the generator constructions, entered
//! entry by entry, and the matching logic that resolves the construction
//! conventions against them.
//!
//! The tables are kept verbatim, including the copy #2 λ̂7
//! entry, which is Hermitian rather than anti-Hermitian and therefore
//! cannot be produced by any of the constructions.

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::generators::{
    build_set, gellmann4_set, BuildParams, CopyId, GeneratorSet, Permutation, PseudoscalarSide,
};
use crate::matrix::{CMatrix, CMatrix4};

const Z: Complex64 = Complex64::new(0.0, 0.0);
const P: Complex64 = Complex64::new(1.0, 0.0);
const N: Complex64 = Complex64::new(-1.0, 0.0);
const J: Complex64 = Complex64::new(0.0, 1.0);
const NJ: Complex64 = Complex64::new(0.0, -1.0);
const TWO_J: Complex64 = Complex64::new(0.0, 2.0);
const NEG_TWO_J: Complex64 = Complex64::new(0.0, -2.0);

fn m(rows: [[Complex64; 4]; 4], factor: f64) -> CMatrix4 {
    CMatrix(rows).scale(Complex64::new(factor, 0.0))
}

fn inv_sqrt3() -> f64 {
    1.0 / 3f64.sqrt()
}

/// A published table of eight 4×4 generator matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoldenTable {
    /// Gell-Mann matrices (times j) padded with a zero third row/column.
    GellMann4,
    /// Copy #0 after the first right (cyclic) permutation of γ1, γ2, γ3.
    FirstCyclic,
    /// Copy #0 after the second right (cyclic) permutation.
    SecondCyclic,
    Copy1,
    Copy2,
    Copy3,
}

impl GoldenTable {
    pub const ALL: [GoldenTable; 6] = [
        GoldenTable::GellMann4,
        GoldenTable::FirstCyclic,
        GoldenTable::SecondCyclic,
        GoldenTable::Copy1,
        GoldenTable::Copy2,
        GoldenTable::Copy3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GoldenTable::GellMann4 => "gell-mann-4x4",
            GoldenTable::FirstCyclic => "first-cyclic",
            GoldenTable::SecondCyclic => "second-cyclic",
            GoldenTable::Copy1 => "copy-1",
            GoldenTable::Copy2 => "copy-2",
            GoldenTable::Copy3 => "copy-3",
        }
    }

    /// The table describing copy `copy` with the identity permutation.
    pub fn for_copy(copy: CopyId) -> GoldenTable {
        match copy.get() {
            0 => GoldenTable::GellMann4,
            1 => GoldenTable::Copy1,
            2 => GoldenTable::Copy2,
            _ => GoldenTable::Copy3,
        }
    }

    pub fn matrices(self) -> [CMatrix4; 8] {
        match self {
            GoldenTable::GellMann4 => gellmann4_set(),
            GoldenTable::FirstCyclic => first_cyclic(),
            GoldenTable::SecondCyclic => second_cyclic(),
            GoldenTable::Copy1 => copy1(),
            GoldenTable::Copy2 => copy2(),
            GoldenTable::Copy3 => copy3(),
        }
    }
}

impl Serialize for GoldenTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for GoldenTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn first_cyclic() -> [CMatrix4; 8] {
    [
        m(
            [[Z, P, Z, Z], [N, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[J, Z, Z, Z], [Z, NJ, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, J, Z, Z], [J, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, Z, N, P], [Z, Z, N, P], [P, P, Z, Z], [N, N, Z, Z]],
            0.5,
        ),
        m(
            [[Z, Z, J, NJ], [Z, Z, J, NJ], [J, J, Z, Z], [NJ, NJ, Z, Z]],
            0.5,
        ),
        m(
            [[Z, Z, J, NJ], [Z, Z, NJ, J], [J, NJ, Z, Z], [NJ, J, Z, Z]],
            0.5,
        ),
        m(
            [[Z, Z, P, N], [Z, Z, N, P], [N, P, Z, Z], [P, N, Z, Z]],
            0.5,
        ),
        m(
            [[J, Z, Z, Z], [Z, J, Z, Z], [Z, Z, NJ, J], [Z, Z, J, NJ]],
            inv_sqrt3(),
        ),
    ]
}

fn second_cyclic() -> [CMatrix4; 8] {
    [
        m(
            [[J, Z, Z, Z], [Z, NJ, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, J, Z, Z], [J, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, P, Z, Z], [N, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, Z, J, N], [Z, Z, N, NJ], [J, P, Z, Z], [P, NJ, Z, Z]],
            0.5,
        ),
        m(
            [[Z, Z, P, J], [Z, Z, J, N], [N, J, Z, Z], [J, P, Z, Z]],
            0.5,
        ),
        m(
            [[Z, Z, J, N], [Z, Z, P, J], [J, N, Z, Z], [P, J, Z, Z]],
            0.5,
        ),
        m(
            [[Z, Z, P, J], [Z, Z, NJ, P], [N, NJ, Z, Z], [J, N, Z, Z]],
            0.5,
        ),
        m(
            [[J, Z, Z, Z], [Z, J, Z, Z], [Z, Z, NJ, P], [Z, Z, N, NJ]],
            inv_sqrt3(),
        ),
    ]
}

fn copy1() -> [CMatrix4; 8] {
    let g = gellmann4_set();
    [
        m(
            [[Z, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, J], [Z, Z, J, Z]],
            1.0,
        ),
        m(
            [[Z, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, Z, P], [Z, Z, N, Z]],
            1.0,
        ),
        m(
            [[Z, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, J, Z], [Z, Z, Z, NJ]],
            1.0,
        ),
        g[3],
        g[4],
        m(
            [[Z, Z, NJ, Z], [Z, Z, Z, Z], [NJ, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, Z, N, Z], [Z, Z, Z, Z], [P, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[TWO_J, Z, Z, Z], [Z, Z, Z, Z], [Z, Z, NJ, Z], [Z, Z, Z, NJ]],
            inv_sqrt3(),
        ),
    ]
}

fn copy2() -> [CMatrix4; 8] {
    let g = gellmann4_set();
    [
        g[0],
        g[1],
        g[2],
        m(
            [[Z, Z, Z, Z], [Z, Z, J, Z], [Z, J, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, Z, Z, Z], [Z, Z, N, Z], [Z, P, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[Z, Z, NJ, Z], [Z, Z, Z, Z], [NJ, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        // As published: +1 at both (1,3) and (3,1).
        m(
            [[Z, Z, P, Z], [Z, Z, Z, Z], [P, Z, Z, Z], [Z, Z, Z, Z]],
            1.0,
        ),
        m(
            [[NJ, Z, Z, Z], [Z, NJ, Z, Z], [Z, Z, TWO_J, Z], [Z, Z, Z, Z]],
            inv_sqrt3(),
        ),
    ]
}

fn copy3() -> [CMatrix4; 8] {
    let c1 = copy1();
    let c2 = copy2();
    [
        c1[0],
        c1[1],
        c1[2],
        c2[3],
        c2[4],
        m(
            [[Z, Z, Z, Z], [Z, Z, Z, J], [Z, Z, Z, Z], [Z, J, Z, Z]],
            1.0,
        ),
        m(
            [[Z, Z, Z, Z], [Z, Z, Z, N], [Z, Z, Z, Z], [Z, P, Z, Z]],
            1.0,
        ),
        m(
            [
                [Z, Z, Z, Z],
                [Z, NEG_TWO_J, Z, Z],
                [Z, Z, J, Z],
                [Z, Z, Z, J],
            ],
            inv_sqrt3(),
        ),
    ]
}

/// Entry-wise comparison of a generator set with a table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableMatch {
    pub table: GoldenTable,
    /// Max entry error per generator λ̂1..λ̂8.
    pub errors: [f64; 8],
    pub tolerance: f64,
}

impl TableMatch {
    pub fn compare(matrices: &[CMatrix4; 8], table: GoldenTable, tolerance: f64) -> Self {
        let golden = table.matrices();
        TableMatch {
            table,
            errors: std::array::from_fn(|k| matrices[k].max_abs_diff(&golden[k])),
            tolerance,
        }
    }

    pub fn matched(&self) -> [bool; 8] {
        self.errors.map(|e| e < self.tolerance)
    }

    pub fn matched_count(&self) -> usize {
        self.matched().iter().filter(|&&m| m).count()
    }

    pub fn all_match(&self) -> bool {
        self.matched_count() == 8
    }

    pub fn max_error(&self) -> f64 {
        self.errors.iter().copied().fold(0.0, f64::max)
    }

    /// 1-based indices of generators that miss the table.
    pub fn mismatched(&self) -> Vec<usize> {
        (1..=8).filter(|&a| !self.matched()[a - 1]).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SideCandidate {
    pub side: PseudoscalarSide,
    pub matched: usize,
    pub max_error: f64,
    pub mismatched: Vec<usize>,
}

/// Outcome of trying every pseudoscalar placement for one copy against the
/// copy's table (identity permutation, phase 1).
#[derive(Debug, Clone, Serialize)]
pub struct SideResolution {
    pub copy: CopyId,
    pub table: GoldenTable,
    pub candidates: Vec<SideCandidate>,
    /// Placement with the most matching generators, ties broken by
    /// smallest maximum error and then by [`PseudoscalarSide::ALL`] order.
    pub selected: PseudoscalarSide,
    pub exact: bool,
}

pub fn resolve_side(copy: CopyId, tolerance: f64) -> SideResolution {
    let table = GoldenTable::for_copy(copy);
    let candidates: Vec<SideCandidate> = PseudoscalarSide::ALL
        .iter()
        .map(|&side| {
            let set = build_set(&BuildParams::new(copy, side));
            let tm = TableMatch::compare(&set.matrices, table, tolerance);
            SideCandidate {
                side,
                matched: tm.matched_count(),
                max_error: tm.max_error(),
                mismatched: tm.mismatched(),
            }
        })
        .collect();
    let best = candidates
        .iter()
        .enumerate()
        .max_by(|(ia, a), (ib, b)| {
            a.matched
                .cmp(&b.matched)
                .then(b.max_error.total_cmp(&a.max_error))
                .then(ib.cmp(ia))
        })
        .map(|(_, c)| c)
        .unwrap();
    SideResolution {
        copy,
        table,
        selected: best.side,
        exact: best.matched == 8,
        candidates,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleCandidate {
    pub permutation: Permutation,
    pub matched: usize,
    pub max_error: f64,
}

/// Which permutation of copy #0 reproduces a permuted table.
#[derive(Debug, Clone, Serialize)]
pub struct CycleIdentification {
    pub table: GoldenTable,
    pub side: PseudoscalarSide,
    pub candidates: Vec<CycleCandidate>,
    /// Permutations whose set matches all eight matrices.
    pub matches: Vec<Permutation>,
}

pub fn identify_permutation(
    table: GoldenTable,
    side: PseudoscalarSide,
    tolerance: f64,
) -> CycleIdentification {
    let copy0 = CopyId::new(0).unwrap();
    let candidates: Vec<CycleCandidate> = Permutation::ALL
        .par_iter()
        .map(|&p| {
            let set = build_set(&BuildParams::new(copy0, side).with_permutation(p));
            let tm = TableMatch::compare(&set.matrices, table, tolerance);
            CycleCandidate {
                permutation: p,
                matched: tm.matched_count(),
                max_error: tm.max_error(),
            }
        })
        .collect();
    let matches = candidates
        .iter()
        .filter(|c| c.matched == 8)
        .map(|c| c.permutation)
        .collect();
    CycleIdentification {
        table,
        side,
        candidates,
        matches,
    }
}

/// Compare a built set with the table for its copy (identity permutation).
pub fn match_copy(set: &GeneratorSet, copy: CopyId, tolerance: f64) -> TableMatch {
    TableMatch::compare(&set.matrices, GoldenTable::for_copy(copy), tolerance)
}
