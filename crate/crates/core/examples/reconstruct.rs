// Recovers the generalized Lawrence form of a matrix from its bouquets.

use toric_robust::lawrence::reconstruct_gen_lawrence;
use toric_robust::linalg::{kernel_lattice, IntMat};

fn main() {
    let a = IntMat::parse_text(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/example_e.mat"
    )))
    .expect("matrix file");
    let out = reconstruct_gen_lawrence(&a).expect("monomial curve bouquets");
    let t: Vec<String> = out.spec.t.iter().map(ToString::to_string).collect();
    println!("T = ({})", t.join(", "));
    for c in &out.spec.c {
        println!("  c = {c}");
    }
    println!(
        "permutation {:?}",
        out.permutation.as_ref().expect("set by reconstruction")
    );
    print!("{}", out.matrix.to_text());

    let kernel = kernel_lattice(&out.matrix);
    assert!(kernel_lattice(&a)
        .vectors
        .iter()
        .all(|b| kernel.contains(&out.permute(b))));
    println!("kernels agree after permuting columns");
}
