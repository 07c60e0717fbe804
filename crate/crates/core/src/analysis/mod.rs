//! Lie-algebraic verification of generator sets.

pub mod rank;
pub mod structure;
pub mod sweep;

pub use rank::{compare_with_stated_counts, rank_audit, ClaimComparison, RankReport};
pub use structure::{
    extract_structure_constants, jacobi_check, reference_f, verify_commutation, CommutationReport,
    StructureConstants,
};
pub use sweep::{su2_sweep, u1_sweep, PermutationRecord, PhaseRecord};
