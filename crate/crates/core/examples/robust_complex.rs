// Strongly robust complexes of monomial curves, cross-checked by both face tests.

use toric_robust::complex::{robust_complex_with, ComplexOptions};
use toric_robust::linalg::IntMat;

fn main() {
    let opts = ComplexOptions {
        verify: true,
        ..ComplexOptions::default()
    };
    for t in [
        vec![4, 5, 6],
        vec![3, 5, 7],
        vec![8, 10, 12],
        vec![24, 40, 41, 60, 80],
    ] {
        let c = robust_complex_with(&IntMat::row_matrix(&t), &opts).expect("complex");
        let kind = c
            .classification
            .as_ref()
            .map(|k| k.kind.to_string())
            .unwrap_or_default();
        println!("{t:?}: faces {:?} vertex {:?} {kind}", c.faces, c.vertex());
    }
}
