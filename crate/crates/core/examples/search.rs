// Scans small monomial curves for robust complexes with an edge or two vertices.

use toric_robust::search::{sullivant_search, SearchConfig};

fn main() {
    let report = sullivant_search(&SearchConfig::exhaustive(&[3], 12)).expect("search");
    println!(
        "{} curves: {} with trivial complex, vertices {:?}",
        report.counts.instances, report.counts.trivial, report.counts.with_vertex
    );
    println!("classification {:?}", report.counts.classification);

    let mut cfg = SearchConfig::random(&[4, 5], 25, 20, 7);
    cfg.check_edges = true;
    let report = sullivant_search(&cfg).expect("search");
    println!(
        "{} sampled curves, {} edge tests, violations: {}",
        report.counts.instances,
        report.stats.edge_tests,
        report.violations.len()
    );
}
