//! Injected defects must be caught by the check responsible for them.

use csta::analysis::{extract_structure_constants, reference_f, verify_commutation};
use csta::generators::{
    build_set_with, gellmann3_set, gellmann4_set, BuildParams, CopyId, PseudoscalarSide,
};
use csta::golden::{GoldenTable, TableMatch};
use csta::matrix::{gamma_matrix, Representation};
use csta::tolerance::{COMMUTATION, EPSILON};
use csta::{Error, Multivector};

fn flipped_gamma2() -> Representation {
    let mut gammas: [_; 4] = std::array::from_fn(|mu| gamma_matrix(mu).unwrap());
    gammas[2] = -gammas[2];
    Representation::from_gammas(gammas)
}

#[test]
fn perturbed_structure_constant() {
    let mut f = reference_f();
    f.set_antisymmetric(1, 2, 3, 1.1);
    for report in [
        verify_commutation(&gellmann3_set(), &f, COMMUTATION),
        verify_commutation(&gellmann4_set(), &f, COMMUTATION),
    ] {
        assert!(!report.pass);
        assert_eq!(report.worst_pair, (1, 2));
        assert!((report.max_error - 0.2).abs() < 1e-12);
    }
}

#[test]
fn perturbed_generator() {
    let mut g = gellmann4_set();
    g[7] = g[7] * 1.001;
    assert!(!verify_commutation(&g, &reference_f(), COMMUTATION).pass);
}

#[test]
fn duplicated_generator() {
    let mut g = gellmann4_set();
    g[1] = g[0];
    assert!(matches!(
        extract_structure_constants(&g),
        Err(Error::DegenerateSet { .. })
    ));
}

#[test]
fn sign_flipped_gamma2_breaks_table_match() {
    let params = BuildParams::new(CopyId::new(0).unwrap(), PseudoscalarSide::RightInverse);
    let set = build_set_with(&flipped_gamma2(), &params);
    let tm = TableMatch::compare(&set.matrices, GoldenTable::GellMann4, EPSILON);
    assert!(!tm.all_match());
    assert!(set.rep_consistency_error(Representation::dirac_pauli()) > COMMUTATION);
}

#[test]
fn sign_flipped_gamma2_breaks_decomposition() {
    let flipped = flipped_gamma2();
    let g2 = Multivector::gamma(2).unwrap();
    let image = flipped.rep(&g2);
    let read_back = Representation::dirac_pauli().decompose(&image).unwrap();
    assert!(!read_back.approx_eq(&g2, EPSILON));
    assert!(read_back.approx_eq(&-g2, EPSILON));
}
