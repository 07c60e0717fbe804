//! Phase (U(1)) and index-permutation (SU(2)) sweeps over constructions.

use rayon::prelude::*;
use serde::Serialize;

use super::structure::{extract_structure_constants, verify_commutation, StructureConstants};
use crate::generators::{build_set, BuildParams, CopyId, Permutation, Phase, PseudoscalarSide};
use crate::golden::{GoldenTable, TableMatch};
use crate::tolerance::EPSILON;

#[derive(Debug, Clone, Serialize)]
pub struct PhaseRecord {
    pub phase: Phase,
    pub max_error: f64,
    pub pass: bool,
    /// Out-of-span residual of the commutators, `None` if the set is
    /// linearly dependent.
    pub closure_residual: Option<f64>,
    pub anti_hermitian_error: f64,
}

/// Build the set at every phase and check it against `f`.
pub fn u1_sweep(
    copy: CopyId,
    permutation: Permutation,
    side: PseudoscalarSide,
    phases: &[Phase],
    f: &StructureConstants,
    tolerance: f64,
) -> Vec<PhaseRecord> {
    phases
        .par_iter()
        .map(|&phase| {
            let set = build_set(
                &BuildParams::new(copy, side)
                    .with_permutation(permutation)
                    .with_phase(phase),
            );
            let report = verify_commutation(&set.matrices, f, tolerance);
            PhaseRecord {
                phase,
                max_error: report.max_error,
                pass: report.pass,
                closure_residual: extract_structure_constants(&set.matrices)
                    .ok()
                    .map(|sc| sc.residual),
                anti_hermitian_error: set.anti_hermitian_error(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct PermutationRecord {
    pub permutation: Permutation,
    pub cycle: String,
    pub max_error: f64,
    pub pass: bool,
    /// Tables this set reproduces exactly.
    pub table_matches: Vec<GoldenTable>,
}

/// Check all six index permutations of one copy against `f`.
pub fn su2_sweep(
    copy: CopyId,
    side: PseudoscalarSide,
    f: &StructureConstants,
    tolerance: f64,
) -> Vec<PermutationRecord> {
    Permutation::ALL
        .par_iter()
        .map(|&permutation| {
            let set = build_set(&BuildParams::new(copy, side).with_permutation(permutation));
            let report = verify_commutation(&set.matrices, f, tolerance);
            let table_matches = GoldenTable::ALL
                .into_iter()
                .filter(|&t| TableMatch::compare(&set.matrices, t, EPSILON).all_match())
                .collect();
            PermutationRecord {
                permutation,
                cycle: permutation.cycle_notation(),
                max_error: report.max_error,
                pass: report.pass,
                table_matches,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::structure::reference_f;
    use crate::tolerance::COMMUTATION;

    const SIDE: PseudoscalarSide = PseudoscalarSide::RightInverse;

    #[test]
    fn phase_one_passes() {
        let f = reference_f();
        let r = u1_sweep(
            CopyId::new(0).unwrap(),
            Permutation::IDENTITY,
            SIDE,
            &[Phase::ONE],
            &f,
            COMMUTATION,
        );
        assert!(r[0].pass);
        assert!(r[0].closure_residual.unwrap() < 1e-10);
    }

    #[test]
    fn sweep_is_order_independent() {
        let f = reference_f();
        let phases = [Phase::ONE, Phase::J, Phase::from_angle(0.3)];
        let forward = u1_sweep(
            CopyId::new(1).unwrap(),
            Permutation::IDENTITY,
            SIDE,
            &phases,
            &f,
            COMMUTATION,
        );
        let mut reversed_phases = phases;
        reversed_phases.reverse();
        let mut backward = u1_sweep(
            CopyId::new(1).unwrap(),
            Permutation::IDENTITY,
            SIDE,
            &reversed_phases,
            &f,
            COMMUTATION,
        );
        backward.reverse();
        for (a, b) in forward.iter().zip(&backward) {
            assert_eq!(a.max_error, b.max_error);
            assert_eq!(a.pass, b.pass);
        }
    }

    #[test]
    fn every_permutation_of_every_copy_is_su3() {
        let f = reference_f();
        for copy in CopyId::ALL {
            let records = su2_sweep(copy, SIDE, &f, COMMUTATION);
            assert_eq!(records.len(), 6);
            assert!(records.iter().all(|r| r.pass), "copy {copy}");
        }
        let copy0 = su2_sweep(CopyId::new(0).unwrap(), SIDE, &f, COMMUTATION);
        let cyclic: Vec<_> = copy0
            .iter()
            .filter(|r| {
                r.table_matches
                    .iter()
                    .any(|t| matches!(t, GoldenTable::FirstCyclic | GoldenTable::SecondCyclic))
            })
            .map(|r| r.cycle.as_str())
            .collect();
        assert_eq!(cyclic, vec!["(123)", "(132)"]);
    }
}
