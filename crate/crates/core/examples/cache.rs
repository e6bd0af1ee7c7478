// Stores a Graver basis in the on-disk cache and reads it back.

use toric_robust::cache::Cache;
use toric_robust::graver::{graver_basis, GraverBasis};
use toric_robust::linalg::IntMat;

fn main() {
    let dir = std::env::temp_dir().join(format!("toric-robust-example-{}", std::process::id()));
    let cache = Cache::new(&dir);
    let t = IntMat::row_matrix(&[5, 7, 11]);
    let key = Cache::key("graver", &t, "");
    for round in 1..=2 {
        let text = cache
            .get_or_insert_with(&key, || {
                println!("round {round}: computing");
                Ok(serde_json::to_string(&graver_basis(&t)?)?)
            })
            .expect("cache");
        let g: GraverBasis = serde_json::from_str(&text).expect("stored json");
        println!("round {round}: {} elements", g.len());
    }
    std::fs::remove_dir_all(&dir).ok();
}
