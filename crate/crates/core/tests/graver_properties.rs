use proptest::prelude::*;
use toric_robust::graver::{circuits, graver_basis, is_primitive_in};
use toric_robust::linalg::{kernel_lattice, IntMat, IntVec};
use toric_robust::oracle::{boxed_kernel, graver_box_bound, oracle_graver};

fn curve() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=12, 3..=4)
}

fn two_by_four() -> impl Strategy<Value = IntMat> {
    prop::collection::vec(0i64..=4, 8)
        .prop_map(|e| IntMat::from_rows(&[e[..4].to_vec(), e[4..].to_vec()]).unwrap())
}

/// Subtracts conformally smaller elements until none applies.
fn normal_form(mut h: IntVec, set: &[IntVec]) -> IntVec {
    while let Some(g) = set.iter().find(|g| !h.is_zero() && g.conformally_below(&h)) {
        h = &h - g;
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn circuits_lie_in_graver(t in curve()) {
        let a = IntMat::row_matrix(&t);
        let g = graver_basis(&a).unwrap();
        for c in &circuits(&a).elements {
            prop_assert!(g.contains(c), "{c} missing");
        }
    }

    #[test]
    fn circuits_lie_in_graver_two_rows(a in two_by_four()) {
        let g = graver_basis(&a).unwrap();
        for c in &circuits(&a).elements {
            prop_assert!(g.contains(c), "{c} missing");
        }
    }

    #[test]
    fn sums_reduce_to_zero(t in curve()) {
        let g = graver_basis(&IntMat::row_matrix(&t)).unwrap();
        let sym: Vec<IntVec> = g.symmetric().collect();
        for u in sym.iter().take(12) {
            for v in &sym {
                prop_assert!(normal_form(u + v, &sym).is_zero());
            }
        }
    }

    #[test]
    fn elements_are_conformally_minimal(a in two_by_four()) {
        let g = graver_basis(&a).unwrap();
        let sym: Vec<IntVec> = g.symmetric().collect();
        for u in &g.elements {
            prop_assert!(a.in_kernel(u));
            prop_assert!(u.is_sign_canonical());
            prop_assert!(is_primitive_in(u, &sym).unwrap());
        }
        prop_assert!(g.elements.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn projection_is_injective(t in curve(), i in 0usize..4) {
        let g = graver_basis(&IntMat::row_matrix(&t)).unwrap();
        let i = i % t.len() + 1;
        let mut images: Vec<IntVec> = g.symmetric().map(|u| u.project_out(i).unwrap()).collect();
        let n = images.len();
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), n);
    }

    #[test]
    fn kernel_basis_is_saturated(t in prop::collection::vec(1i64..=9, 3)) {
        let a = IntMat::row_matrix(&t);
        let basis = kernel_lattice(&a);
        for u in boxed_kernel(&a, 20).unwrap() {
            prop_assert!(basis.contains(&u), "{u} not spanned");
        }
    }

    #[test]
    fn matches_oracle_on_curves(t in prop::collection::vec(1i64..=9, 3)) {
        let a = IntMat::row_matrix(&t);
        let oracle = oracle_graver(&a, graver_box_bound(&a).unwrap()).unwrap();
        prop_assert_eq!(graver_basis(&a).unwrap().elements, oracle.elements);
    }
}

#[test]
fn repeated_runs_are_identical() {
    let a = IntMat::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 3, 4]]).unwrap();
    let first = graver_basis(&a).unwrap();
    let runs: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|_| s.spawn(|| graver_basis(&a).unwrap()))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(runs.iter().all(|g| *g == first));
}

#[test]
fn three_five_seven() {
    let g = graver_basis(&IntMat::row_matrix(&[3, 5, 7])).unwrap();
    let a = IntMat::row_matrix(&[3, 5, 7]);
    let oracle = oracle_graver(&a, graver_box_bound(&a).unwrap()).unwrap();
    assert_eq!(g.elements, oracle.elements);
    assert_eq!(circuits(&a).len(), 3);
}
