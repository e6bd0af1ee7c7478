// Complete intersection pattern of a few monomial curves in 3 variables.

use toric_robust::complex::classify_triple;

fn main() {
    for t in [
        [4, 5, 6],
        [3, 5, 7],
        [6, 10, 15],
        [4, 6, 9],
        [5, 6, 9],
        [2, 3, 5],
    ] {
        let c = classify_triple(t).expect("positive degrees");
        println!(
            "{:?}: c = {:?} degrees = {:?} -> {}",
            c.t, c.c, c.betti_candidates, c.kind
        );
    }
}
