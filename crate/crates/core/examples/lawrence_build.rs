// Builds a generalized Lawrence matrix from degrees and block vectors, then
// checks that it is strongly robust.

use toric_robust::lawrence::{build_gen_lawrence, GenLawrenceSpec};
use toric_robust::robustness::is_strongly_robust;

fn main() {
    let spec: GenLawrenceSpec = serde_json::from_str(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/data/lawrence_456.json"
    )))
    .expect("spec file");
    let out = build_gen_lawrence(&spec).expect("hypothesis holds");
    print!("{}", out.matrix.to_text());
    let cert = is_strongly_robust(&out.matrix).expect("certificate");
    println!(
        "Graver size {}, strongly robust: {}",
        cert.graver_size, cert.strongly_robust
    );

    let bad = GenLawrenceSpec::new(&[4, 5, 6], &[&[1, 1], &[1, -1], &[1, -2]]);
    println!(
        "all-positive block off the vertex: {}",
        build_gen_lawrence(&bad).unwrap_err()
    );
}
