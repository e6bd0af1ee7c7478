use proptest::prelude::*;
use toric_robust::complex::lambda_matrix;
use toric_robust::graver::{circuits, graver_basis, GraverBasis};
use toric_robust::linalg::{is_semiconformal_sum, IntMat, IntVec};
use toric_robust::oracle::{graver_box_bound, oracle_indispensable};
use toric_robust::robustness::{
    certificate_from_graver, decomposition_witness, indispensable_from_graver, is_indispensable,
};
use toric_robust::Error;

fn curve() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=15, 3)
}

fn check_witnesses(a: &IntMat, g: &GraverBasis) -> Result<(), TestCaseError> {
    for u in &g.elements {
        if let Some(d) = decomposition_witness(u, g).unwrap() {
            prop_assert_eq!(&d.u, u);
            prop_assert!(!d.v.is_zero() && !d.w.is_zero());
            prop_assert!(a.in_kernel(&d.v) && a.in_kernel(&d.w));
            prop_assert!(is_semiconformal_sum(&d.u, &d.v, &d.w).unwrap());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witnesses_are_sound(t in curve()) {
        let a = IntMat::row_matrix(&t);
        check_witnesses(&a, &graver_basis(&a).unwrap())?;
    }

    #[test]
    fn lifted_witnesses_are_sound(t in curve(), i in 1usize..=3) {
        let a = lambda_matrix(&IntMat::row_matrix(&t), &[i]).unwrap().matrix;
        let g = graver_basis(&a).unwrap();
        check_witnesses(&a, &g)?;
        let cert = certificate_from_graver(&g);
        if let Some(d) = &cert.witness {
            prop_assert!(!cert.strongly_robust);
            prop_assert!(is_semiconformal_sum(&d.u, &d.v, &d.w).unwrap());
        }
    }

    #[test]
    fn indispensable_inside_graver(t in curve()) {
        let g = graver_basis(&IntMat::row_matrix(&t)).unwrap();
        let s = indispensable_from_graver(&g);
        prop_assert!(s.elements.iter().all(|u| g.contains(u)));
        let cert = certificate_from_graver(&g);
        prop_assert_eq!(cert.strongly_robust, s.elements.len() == g.len());
        prop_assert_eq!(cert.indispensable_size, s.elements.len());
    }

    #[test]
    fn sign_does_not_matter(t in curve()) {
        let g = graver_basis(&IntMat::row_matrix(&t)).unwrap();
        for u in &g.elements {
            prop_assert_eq!(is_indispensable(u, &g).unwrap(), is_indispensable(&-u, &g).unwrap());
        }
    }

    #[test]
    fn agrees_with_boxed_pair_search(t in prop::collection::vec(1i64..=9, 3)) {
        let a = IntMat::row_matrix(&t);
        let g = graver_basis(&a).unwrap();
        let expected = oracle_indispensable(&a, graver_box_bound(&a).unwrap()).unwrap();
        prop_assert_eq!(indispensable_from_graver(&g).elements, expected);
    }
}

#[test]
fn at_most_one_circuit_indispensable() {
    for a in 1..=30i64 {
        for b in a..=30 {
            for c in b..=30 {
                if num_integer::gcd(num_integer::gcd(a, b), c) != 1 {
                    continue;
                }
                let m = IntMat::row_matrix(&[a, b, c]);
                let g = graver_basis(&m).unwrap();
                let count = circuits(&m)
                    .elements
                    .iter()
                    .filter(|u| is_indispensable(u, &g).unwrap())
                    .count();
                assert!(
                    count <= 1,
                    "({a},{b},{c}) has {count} indispensable circuits"
                );
            }
        }
    }
}

#[test]
fn generic_curve_generators() {
    let a = IntMat::row_matrix(&[3, 5, 7]);
    let g = graver_basis(&a).unwrap();
    let s = indispensable_from_graver(&g);
    assert_eq!(s.elements.len(), 3);
    assert!(s.elements.iter().all(|u| u.support().len() == 3));
    let degrees: Vec<i64> = s
        .elements
        .iter()
        .map(|u| {
            3 * u.positive_part()[0].to_i64().unwrap()
                + 5 * u.positive_part()[1].to_i64().unwrap()
                + 7 * u.positive_part()[2].to_i64().unwrap()
        })
        .collect();
    let mut sorted = degrees.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![10, 12, 14]);
    for c in &circuits(&a).elements {
        assert!(!is_indispensable(c, &g).unwrap());
    }
}

#[test]
fn membership_is_required() {
    let g = graver_basis(&IntMat::row_matrix(&[2, 3])).unwrap();
    assert!(matches!(
        is_indispensable(&IntVec::from_i64s(&[6, -4]), &g),
        Err(Error::NotMember)
    ));
    assert!(is_indispensable(&IntVec::from_i64s(&[-3, 2]), &g).unwrap());
}
