use proptest::prelude::*;
use toric_robust::bouquet::{
    bouquet_decomposition, decomposition_from_gale, gale_rows_from_basis, BouquetKind,
};
use toric_robust::complex::lambda_matrix;
use toric_robust::graver::{canonical_set, graver_basis};
use toric_robust::lawrence::{assemble_gen_lawrence, GenLawrenceSpec};
use toric_robust::linalg::{kernel_lattice, IntMat, IntVec};
use toric_robust::oracle::boxed_kernel;
use toric_robust::Integer;

fn load(name: &str) -> IntMat {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    IntMat::parse_text(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn curve() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1i64..=15, 3..=4)
}

fn lambda_case() -> impl Strategy<Value = (Vec<i64>, Vec<usize>)> {
    curve().prop_flat_map(|t| {
        let s = t.len();
        (
            Just(t),
            prop::sample::subsequence((1..=s).collect::<Vec<_>>(), 0..=s),
        )
    })
}

/// Elementary moves on basis vectors: `(kind, i, j, k)`.
fn moves() -> impl Strategy<Value = Vec<(u8, usize, usize, i64)>> {
    prop::collection::vec((0u8..3, 0usize..8, 0usize..8, -3i64..=3), 0..12)
}

fn apply_moves(mut basis: Vec<IntVec>, moves: &[(u8, usize, usize, i64)]) -> Vec<IntVec> {
    let r = basis.len();
    if r == 0 {
        return basis;
    }
    for &(kind, i, j, k) in moves {
        let (i, j) = (i % r, j % r);
        match kind {
            0 if i != j => basis[i] = &basis[i] + &basis[j].scale(&Integer::from(k)),
            1 => basis.swap(i, j),
            2 => basis[i] = -&basis[i],
            _ => {}
        }
    }
    basis
}

fn nonzero_entry() -> impl Strategy<Value = i64> {
    prop_oneof![-4i64..=-1, 1i64..=4]
}

fn c_vector() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(nonzero_entry(), 1..=3).prop_filter_map("gcd 1", |mut c| {
        c[0] = c[0].abs();
        let g = c.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
        (g == 1).then_some(c)
    })
}

fn spec() -> impl Strategy<Value = (Vec<i64>, Vec<Vec<i64>>)> {
    (3usize..=4).prop_flat_map(|s| {
        (
            prop::collection::vec(1i64..=15, s),
            prop::collection::vec(c_vector(), s),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn partition_is_basis_invariant((t, omega) in lambda_case(), mv in moves()) {
        let a = lambda_matrix(&IntMat::row_matrix(&t), &omega).unwrap().matrix;
        let reference = bouquet_decomposition(&a);
        let basis = apply_moves(kernel_lattice(&a).vectors, &mv);
        let changed = decomposition_from_gale(&a, &gale_rows_from_basis(&basis, a.cols()));
        prop_assert_eq!(reference, changed);
    }

    #[test]
    fn omega_is_recovered((t, omega) in lambda_case()) {
        let a = lambda_matrix(&IntMat::row_matrix(&t), &omega).unwrap().matrix;
        let dec = bouquet_decomposition(&a);
        prop_assert!(dec.free.is_none());
        prop_assert_eq!(dec.len(), t.len());
        prop_assert_eq!(dec.non_mixed(), omega);
    }

    #[test]
    fn d_map_is_a_kernel_bijection((t, omega) in lambda_case()) {
        let a = lambda_matrix(&IntMat::row_matrix(&t), &omega).unwrap().matrix;
        let dec = bouquet_decomposition(&a);
        for u in boxed_kernel(&dec.a_b, 4).unwrap() {
            let v = dec.d_map(&u).unwrap();
            prop_assert!(a.in_kernel(&v));
            prop_assert_eq!(dec.d_inverse(&v).unwrap(), u);
        }
        for v in boxed_kernel(&a, 3).unwrap() {
            let u = dec.d_inverse(&v).unwrap();
            prop_assert_eq!(dec.d_map(&u).unwrap(), v);
        }
    }

    #[test]
    fn graver_is_image_of_bouquet_graver((t, omega) in lambda_case()) {
        let a = lambda_matrix(&IntMat::row_matrix(&t), &omega).unwrap().matrix;
        let dec = bouquet_decomposition(&a);
        let image = canonical_set(graver_basis(&dec.a_b).unwrap().elements.iter().map(|u| dec.d_map(u).unwrap()));
        prop_assert_eq!(image, graver_basis(&a).unwrap().elements);
    }

    #[test]
    fn a_b_columns_are_weighted_sums((t, c) in spec(), mv in moves()) {
        let c_refs: Vec<&[i64]> = c.iter().map(Vec::as_slice).collect();
        let a = assemble_gen_lawrence(&GenLawrenceSpec::new(&t, &c_refs)).unwrap().matrix;
        let dec = bouquet_decomposition(&a);
        for (i, col) in dec.a_b.columns().iter().enumerate() {
            let cb = dec.c_vector(i);
            prop_assert_eq!(&a.mul_vec(&cb).unwrap(), col);
        }
        let basis = apply_moves(kernel_lattice(&a).vectors, &mv);
        prop_assert_eq!(&dec, &decomposition_from_gale(&a, &gale_rows_from_basis(&basis, a.cols())));
    }

    #[test]
    fn bouquets_are_well_formed((t, omega) in lambda_case()) {
        let a = lambda_matrix(&IntMat::row_matrix(&t), &omega).unwrap().matrix;
        let dec = bouquet_decomposition(&a);
        let mut seen: Vec<usize> = dec.bouquets.iter().flat_map(|b| b.members.clone()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..a.cols()).collect::<Vec<_>>());
        for b in &dec.bouquets {
            prop_assert!(b.c[0].is_positive());
            prop_assert_eq!(b.c.content(), Integer::from(1));
            let mixed = b.c.iter().any(Integer::is_negative);
            prop_assert_eq!(b.kind == BouquetKind::Mixed, mixed);
        }
    }
}

#[test]
fn example_e_is_invariant_under_basis_change() {
    let a = load("example_e.mat");
    let reference = bouquet_decomposition(&a);
    let basis = kernel_lattice(&a).vectors;
    let r = basis.len();
    let mv: Vec<(u8, usize, usize, i64)> = (0..r)
        .flat_map(|i| {
            [
                (0u8, i, (i + 1) % r, 2),
                (1, i, (i + 3) % r, 0),
                (2, i, 0, 0),
            ]
        })
        .collect();
    let changed = decomposition_from_gale(
        &a,
        &gale_rows_from_basis(&apply_moves(basis, &mv), a.cols()),
    );
    assert_eq!(reference, changed);
}

#[test]
fn example_e_graver_comes_from_bouquets() {
    let a = load("example_e.mat");
    let dec = bouquet_decomposition(&a);
    let image = canonical_set(
        graver_basis(&dec.a_b)
            .unwrap()
            .elements
            .iter()
            .map(|u| dec.d_map(u).unwrap()),
    );
    assert_eq!(image, graver_basis(&a).unwrap().elements);
}
