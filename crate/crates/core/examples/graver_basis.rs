// Graver basis and circuits of a monomial curve and of a 2×4 matrix.

use toric_robust::graver::{circuits, graver_basis};
use toric_robust::linalg::IntMat;

fn main() {
    let t = IntMat::row_matrix(&[4, 5, 6]);
    let g = graver_basis(&t).expect("graver basis");
    println!("Gr(4 5 6): {} elements", g.len());
    print!("{}", g.to_text());

    let c = circuits(&t);
    println!("circuits: {}", c.len());
    for u in &c.elements {
        assert!(g.contains(u));
        println!("  {u}");
    }

    let a = IntMat::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).expect("matrix");
    let g = graver_basis(&a).expect("graver basis");
    println!(
        "Gr of the rational normal curve of degree 3: {} elements",
        g.len()
    );
    print!("{}", g.to_text());
}
