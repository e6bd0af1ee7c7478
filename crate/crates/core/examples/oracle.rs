// Brute-force cross-check of the completion algorithm over a box known to
// contain the Graver basis.

use toric_robust::graver::graver_basis;
use toric_robust::linalg::IntMat;
use toric_robust::oracle::{graver_box_bound, oracle_graver, oracle_indispensable};
use toric_robust::robustness::indispensable_set;

fn main() {
    for a in [
        IntMat::row_matrix(&[3, 5, 7]),
        IntMat::from_rows(&[vec![5, 4, 3, 1], vec![0, 2, 5, 1]]).expect("matrix"),
    ] {
        let bound = graver_box_bound(&a).expect("bound");
        let oracle = oracle_graver(&a, bound).expect("box");
        let g = graver_basis(&a).expect("graver basis");
        println!(
            "box {bound}: oracle {} elements, completion {}",
            oracle.elements.len(),
            g.len()
        );
        assert_eq!(oracle.elements, g.elements);
    }
    let t = IntMat::row_matrix(&[4, 5, 6]);
    let brute = oracle_indispensable(&t, graver_box_bound(&t).expect("bound")).expect("box");
    assert_eq!(brute, indispensable_set(&t).expect("set").elements);
    println!("indispensable elements of (4 5 6) agree: {}", brute.len());
}
