use csta::analysis::{extract_structure_constants, jacobi_check, reference_f, verify_commutation};
use csta::blade::{blade_grade, blade_product, Blade};
use csta::generators::{build_set, BuildParams, CopyId, Permutation, Phase, PseudoscalarSide};
use csta::matrix::Representation;
use csta::{Complex64, Multivector};
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn multivector() -> impl Strategy<Value = Multivector> {
    proptest::array::uniform16(complex()).prop_map(Multivector::from_coeffs)
}

fn blade() -> impl Strategy<Value = Blade> {
    (0u8..16).prop_map(|m| Blade::new(m).unwrap())
}

fn params() -> impl Strategy<Value = BuildParams> {
    (0u8..4, 0usize..6).prop_map(|(c, p)| {
        BuildParams::new(CopyId::new(c).unwrap(), PseudoscalarSide::RightInverse)
            .with_permutation(Permutation::from_index(p).unwrap())
    })
}

proptest! {
    #[test]
    fn geometric_product_is_associative(a in multivector(), b in multivector(), c in multivector()) {
        prop_assert!(a.gp(&b).gp(&c).approx_eq(&a.gp(&b.gp(&c)), 1e-10));
    }

    #[test]
    fn geometric_product_distributes(a in multivector(), b in multivector(), c in multivector()) {
        prop_assert!(a.gp(&(b + c)).approx_eq(&(a.gp(&b) + a.gp(&c)), 1e-10));
        prop_assert!((a + b).gp(&c).approx_eq(&(a.gp(&c) + b.gp(&c)), 1e-10));
    }

    #[test]
    fn coefficient_imaginary_is_central(a in multivector(), b in multivector(), z in complex()) {
        let left = a.scale(z).gp(&b);
        prop_assert!(left.approx_eq(&a.gp(&b.scale(z)), 1e-10));
        prop_assert!(left.approx_eq(&a.gp(&b).scale(z), 1e-10));
    }

    #[test]
    fn commutator_satisfies_jacobi(a in multivector(), b in multivector(), c in multivector()) {
        let sum = a.commutator(&b).commutator(&c) + b.commutator(&c).commutator(&a) + c.commutator(&a).commutator(&b);
        prop_assert!(sum.max_abs() < 1e-9);
    }

    #[test]
    fn blade_product_grade_parity(a in blade(), b in blade()) {
        let (sign, c) = blade_product(a, b);
        prop_assert!(sign == 1.0 || sign == -1.0);
        prop_assert_eq!(c.mask(), a.mask() ^ b.mask());
        prop_assert_eq!(blade_grade(c) % 2, (blade_grade(a) + blade_grade(b)) % 2);
    }

    #[test]
    fn rep_is_a_homomorphism(a in multivector(), b in multivector()) {
        let rep = Representation::dirac_pauli();
        prop_assert!(rep.rep(&a.gp(&b)).max_abs_diff(&(rep.rep(&a) * rep.rep(&b))) < 1e-10);
    }

    #[test]
    fn decompose_inverts_rep(a in multivector()) {
        let rep = Representation::dirac_pauli();
        let back = rep.decompose(&rep.rep(&a)).unwrap();
        prop_assert!(back.approx_eq(&a, 1e-10));
        let solved = rep.decompose_by_solve(&rep.rep(&a)).unwrap();
        prop_assert!(solved.approx_eq(&a, 1e-10));
    }

    #[test]
    fn built_sets_are_su3(p in params()) {
        let set = build_set(&p);
        let f = reference_f();
        prop_assert!(verify_commutation(&set.matrices, &f, 1e-10).pass);
        prop_assert!(jacobi_check(&set.matrices) < 1e-12);
        prop_assert!(set.anti_hermitian_error() < 1e-12);
        prop_assert!(set.trace_error() < 1e-12);
        let sc = extract_structure_constants(&set.matrices).unwrap();
        prop_assert!(sc.max_deviation(&f) < 1e-10);
        prop_assert!(sc.first_pair_antisymmetry_error() == 0.0);
        prop_assert!(sc.last_pair_antisymmetry_error() < 1e-10);
    }

    #[test]
    fn any_phase_keeps_jacobi_and_rep(p in params(), theta in 0.0f64..std::f64::consts::TAU) {
        let set = build_set(&p.with_phase(Phase::from_angle(theta)));
        prop_assert!(jacobi_check(&set.matrices) < 1e-10);
        prop_assert!(set.rep_consistency_error(Representation::dirac_pauli()) < 1e-12);
    }
}
