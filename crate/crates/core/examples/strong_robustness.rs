// Indispensable Graver elements and the strong robustness verdict.

use toric_robust::complex::lambda_matrix;
use toric_robust::graver::graver_basis;
use toric_robust::linalg::IntMat;
use toric_robust::robustness::{indispensable_set, is_indispensable, is_strongly_robust};

fn main() {
    let t = IntMat::row_matrix(&[3, 5, 7]);
    let s = indispensable_set(&t).expect("indispensable set");
    println!(
        "(3 5 7): {} of {} Graver elements are indispensable",
        s.elements.len(),
        s.graver_size
    );
    for u in &s.elements {
        println!("  {u}");
    }

    let g = graver_basis(&t).expect("graver basis");
    let circuit = g
        .elements
        .iter()
        .find(|u| u.support().len() == 2)
        .expect("a circuit");
    println!(
        "circuit {circuit} indispensable: {}",
        is_indispensable(circuit, &g).expect("member")
    );

    let cert = is_strongly_robust(&t).expect("certificate");
    println!("strongly robust: {}", cert.strongly_robust);
    if let Some(w) = &cert.witness {
        println!("  {} = {} +sc {}", w.u, w.v, w.w);
    }

    // the Lawrence lifting is always strongly robust
    let lifted = lambda_matrix(&t, &[]).expect("lifting");
    println!(
        "Λ(3 5 7) strongly robust: {}",
        is_strongly_robust(&lifted.matrix)
            .expect("certificate")
            .strongly_robust
    );
}
