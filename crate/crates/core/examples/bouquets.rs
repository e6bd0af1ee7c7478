// Bouquet decomposition of a 7×11 matrix and the D map on its bouquet kernel.

use toric_robust::bouquet::bouquet_decomposition;
use toric_robust::graver::graver_basis;
use toric_robust::linalg::IntMat;

fn main() {
    let a = IntMat::parse_text(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/example_e.mat"
    )))
    .expect("matrix file");
    let dec = bouquet_decomposition(&a);
    for (i, b) in dec.bouquets.iter().enumerate() {
        let cols: Vec<usize> = b.members.iter().map(|k| k + 1).collect();
        println!("B{} {:?} {:?} c = {}", i + 1, cols, b.kind, b.c);
    }
    println!(
        "free columns: {:?}",
        dec.free.as_ref().map(|f| f.members.len()).unwrap_or(0)
    );
    println!("A_B =\n{}", dec.a_b);

    let g = graver_basis(&dec.a_b).expect("graver basis");
    let u = &g.elements[0];
    let v = dec.d_map(u).expect("kernel element");
    assert!(a.in_kernel(&v));
    println!("D({u}) = {v}");
}
