//! Bounded search over monomial curves `T = (n_1, …, n_s)` checking that the
//! robust complex never has an edge and has at most one vertex.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{face_test_lifting_with, robust_complex_with, ComplexOptions, CurveKind};
use crate::error::{Error, Result};
use crate::graver::{subsets, Budget};
use crate::integer::Integer;
use crate::linalg::IntMat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMode {
    /// All strictly increasing tuples with entries in `1..=bound`.
    Exhaustive,
    /// Uniform samples of `s` distinct entries, `s` drawn from the requested sizes.
    Random { samples: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub sizes: Vec<usize>,
    pub bound: u64,
    pub mode: SearchMode,
    /// Additional instances checked regardless of the mode.
    pub extra: Vec<Vec<u64>>,
    /// Run the lifting test on every 2-subset (costly).
    pub check_edges: bool,
    pub budget: Budget,
}

impl SearchConfig {
    pub fn exhaustive(sizes: &[usize], bound: u64) -> Self {
        SearchConfig {
            sizes: sizes.to_vec(),
            bound,
            mode: SearchMode::Exhaustive,
            extra: Vec::new(),
            check_edges: false,
            budget: Budget::default(),
        }
    }

    pub fn random(sizes: &[usize], bound: u64, samples: usize, seed: u64) -> Self {
        SearchConfig {
            mode: SearchMode::Random { samples, seed },
            ..Self::exhaustive(sizes, bound)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    #[serde(rename = "T")]
    pub t: Vec<u64>,
    pub faces: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kind: Option<CurveKind>,
    /// 2-subsets that passed the lifting test; only filled when edges are checked.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edges: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    #[serde(rename = "T")]
    pub t: Vec<u64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    #[serde(rename = "T")]
    pub t: Vec<u64>,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCounts {
    pub instances: usize,
    /// `Δ_T = {∅}`.
    pub trivial: usize,
    /// `Δ_T = {∅, {i}}`, keyed by `i`.
    pub with_vertex: BTreeMap<usize, usize>,
    /// `1×3` classification counts (only for `s = 3`).
    pub classification: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub elapsed_ms: u128,
    pub edge_tests: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub sizes: Vec<usize>,
    pub bound: u64,
    pub mode: SearchMode,
    pub instances: Vec<InstanceResult>,
    pub counts: SearchCounts,
    pub violations: Vec<Violation>,
    pub skipped: Vec<Skipped>,
    pub stats: SearchStats,
}

impl SearchReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn gcd_normalize(t: &[u64]) -> Vec<u64> {
    let g = t.iter().fold(0u64, |g, &x| num_integer::gcd(g, x));
    t.iter().map(|x| x / g.max(1)).collect()
}

/// The instances a config describes: gcd-normalized, deduplicated, in generation order.
pub fn search_instances(cfg: &SearchConfig) -> Result<Vec<Vec<u64>>> {
    if let Some(&s) = cfg.sizes.iter().find(|&&s| !(3..=6).contains(&s)) {
        return Err(Error::InvalidInput(format!(
            "curve length {s} outside 3..=6"
        )));
    }
    let bound = cfg.bound as usize;
    let mut raw: Vec<Vec<u64>> = Vec::new();
    match &cfg.mode {
        SearchMode::Exhaustive => {
            for &s in &cfg.sizes {
                if s <= bound {
                    raw.extend(
                        subsets(bound, s)
                            .into_iter()
                            .map(|c| c.iter().map(|&x| x as u64 + 1).collect()),
                    );
                }
            }
        }
        SearchMode::Random { samples, seed } => {
            let sizes: Vec<usize> = cfg.sizes.iter().copied().filter(|&s| s <= bound).collect();
            if !sizes.is_empty() {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                for _ in 0..*samples {
                    let s = sizes[sample(&mut rng, sizes.len(), 1).index(0)];
                    let mut t: Vec<u64> = sample(&mut rng, bound, s)
                        .into_iter()
                        .map(|x| x as u64 + 1)
                        .collect();
                    t.sort_unstable();
                    raw.push(t);
                }
            }
        }
    }
    raw.extend(cfg.extra.iter().cloned());
    let mut seen = std::collections::HashSet::new();
    Ok(raw
        .into_iter()
        .map(|t| gcd_normalize(&t))
        .filter(|t| seen.insert(t.clone()))
        .collect())
}

/// An instance result and the number of edge tests it ran.
type Checked = (InstanceResult, usize);

fn check_instance(t: &[u64], cfg: &SearchConfig) -> Result<Checked> {
    let mat = IntMat::from_vec(1, t.len(), t.iter().map(|&x| Integer::from(x)).collect())?;
    let opts = ComplexOptions {
        verify: false,
        budget: cfg.budget,
    };
    let complex = robust_complex_with(&mat, &opts)?;
    let mut edge_tests = 0;
    let edges = if cfg.check_edges {
        let mut passed = Vec::new();
        for pair in subsets(t.len(), 2) {
            let omega: Vec<usize> = pair.iter().map(|&i| i + 1).collect();
            edge_tests += 1;
            if face_test_lifting_with(&mat, &omega, &cfg.budget)? {
                passed.push(omega);
            }
        }
        Some(passed)
    } else {
        None
    };
    let kind = complex.classification.map(|c| c.kind);
    Ok((
        InstanceResult {
            t: t.to_vec(),
            faces: complex.faces,
            kind,
            edges,
        },
        edge_tests,
    ))
}

fn violations_of(r: &InstanceResult) -> Vec<String> {
    let mut out = Vec::new();
    let vertices: Vec<usize> = r
        .faces
        .iter()
        .filter(|f| f.len() == 1)
        .map(|f| f[0])
        .collect();
    if vertices.len() > 1 {
        out.push(format!("more than one vertex: {vertices:?}"));
    }
    if let Some(f) = r.faces.iter().find(|f| f.len() >= 2) {
        out.push(format!("face of dimension {}: {f:?}", f.len() - 1));
    }
    if let Some(edges) = r.edges.as_ref().filter(|e| !e.is_empty()) {
        out.push(format!("edges pass the lifting test: {edges:?}"));
    }
    if let Some(kind) = r.kind {
        let expected = match kind {
            CurveKind::CIOn(i) => Some(i),
            _ => None,
        };
        if expected != vertices.first().copied() {
            out.push(format!(
                "classification {kind} disagrees with vertices {vertices:?}"
            ));
        }
    }
    out
}

pub fn sullivant_search(cfg: &SearchConfig) -> Result<SearchReport> {
    let start = Instant::now();
    let instances = search_instances(cfg)?;
    let outcomes: Vec<(Vec<u64>, Result<Checked>)> = instances
        .into_par_iter()
        .map(|t| {
            let r = check_instance(&t, cfg);
            (t, r)
        })
        .collect();

    let mut report = SearchReport {
        sizes: cfg.sizes.clone(),
        bound: cfg.bound,
        mode: cfg.mode.clone(),
        instances: Vec::new(),
        counts: SearchCounts::default(),
        violations: Vec::new(),
        skipped: Vec::new(),
        stats: SearchStats {
            elapsed_ms: 0,
            edge_tests: 0,
        },
    };
    for (t, outcome) in outcomes {
        match outcome {
            Ok((r, edge_tests)) => {
                report.stats.edge_tests += edge_tests;
                for reason in violations_of(&r) {
                    report.violations.push(Violation {
                        t: t.clone(),
                        reason,
                    });
                }
                report.counts.instances += 1;
                match r.faces.iter().find(|f| f.len() == 1) {
                    Some(f) => *report.counts.with_vertex.entry(f[0]).or_default() += 1,
                    None => report.counts.trivial += 1,
                }
                if let Some(kind) = r.kind {
                    *report
                        .counts
                        .classification
                        .entry(kind.to_string())
                        .or_default() += 1;
                }
                report.instances.push(r);
            }
            Err(e) if e.is_budget() => report.skipped.push(Skipped {
                t,
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    report.stats.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}
