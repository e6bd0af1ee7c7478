//! The strongly robust complex `Δ_T` of a simple toric ideal, with the
//! `Λ(T)_ω` lifting test, the projection test and the `1×3` classification.

mod curve;
mod lambda;

pub use curve::{
    classify_curve3, classify_triple, degree_t, semigroup_min_multiple, CurveClassification,
    CurveKind,
};
pub use lambda::{check_subset, lambda_matrix, LambdaMatrix};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bouquet::bouquet_decomposition;
use crate::error::{Error, Result};
use crate::graver::{graver_basis_with, Budget, GraverBasis};
use crate::integer::Integer;
use crate::linalg::{IntMat, IntVec};
use crate::robustness::{certificate_from_graver, indispensable_from_graver};

fn require_simple(t: &IntMat) -> Result<()> {
    if bouquet_decomposition(t).is_simple() {
        Ok(())
    } else {
        Err(Error::NotSimple)
    }
}

/// Divides a `1×s` matrix of positive entries by the gcd of its entries.
pub fn normalize_degrees(t: &IntMat) -> Result<IntMat> {
    if t.rows() != 1 {
        return Err(Error::Shape(format!(
            "expected a 1×s matrix, got {}×{}",
            t.rows(),
            t.cols()
        )));
    }
    let row = t.row(0);
    if row.iter().any(Integer::is_negative) {
        return Err(Error::NegativeEntry);
    }
    if row.iter().any(Integer::is_zero) {
        return Err(Error::InvalidInput("degrees must be positive".into()));
    }
    let g = row.content();
    let entries: Vec<Integer> = row.iter().map(|x| x.div_exact(&g)).collect();
    IntMat::from_vec(1, entries.len(), entries)
}

/// `S_ω(T)`: elements of `Gr(T)` whose image in `Λ(T)_ω` is indispensable.
pub fn s_omega(t: &IntMat, omega: &[usize]) -> Result<Vec<IntVec>> {
    s_omega_with(t, omega, &Budget::default())
}

pub fn s_omega_with(t: &IntMat, omega: &[usize], budget: &Budget) -> Result<Vec<IntVec>> {
    require_simple(t)?;
    let lambda = lambda_matrix(t, omega)?;
    let gr_t = graver_basis_with(t, budget)?;
    let gr_l = graver_basis_with(&lambda.matrix, budget)?;
    let dec = bouquet_decomposition(&lambda.matrix);
    let indispensable = indispensable_from_graver(&gr_l).elements;
    let mut out = Vec::new();
    for u in &gr_t.elements {
        let d = dec.d_map(u)?.sign_canonical();
        if indispensable.binary_search(&d).is_ok() {
            out.push(u.clone());
        }
    }
    Ok(out)
}

/// `ω ∈ Δ_T` iff `Λ(T)_ω` is strongly robust.
pub fn face_test_lifting(t: &IntMat, omega: &[usize]) -> Result<bool> {
    face_test_lifting_with(t, omega, &Budget::default())
}

pub fn face_test_lifting_with(t: &IntMat, omega: &[usize], budget: &Budget) -> Result<bool> {
    require_simple(t)?;
    let lambda = lambda_matrix(t, omega)?;
    let g = graver_basis_with(&lambda.matrix, budget)?;
    Ok(certificate_from_graver(&g).strongly_robust)
}

/// A projected Graver element `[u]^i` together with another projected
/// element strictly conformally below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionWitness {
    pub u: IntVec,
    pub projected: IntVec,
    pub below: IntVec,
}

/// First element of `Gr(T)` whose projection is not primitive in `Gr(T)^i`.
pub fn projection_witness(g: &GraverBasis, i: usize) -> Result<Option<ProjectionWitness>> {
    let mut projected: Vec<IntVec> = g
        .symmetric()
        .map(|u| u.project_out(i))
        .collect::<Result<_>>()?;
    projected.sort();
    projected.dedup();
    for u in &g.elements {
        let p = u.project_out(i)?;
        if let Some(v) = projected
            .iter()
            .find(|v| **v != p && v.conformally_below(&p))
        {
            return Ok(Some(ProjectionWitness {
                u: u.clone(),
                projected: p,
                below: v.clone(),
            }));
        }
    }
    Ok(None)
}

/// `{i} ∈ Δ_T` iff every `[u]^i` is primitive in `Gr(T)^i`.
pub fn face_test_projection(t: &IntMat, i: usize) -> Result<bool> {
    require_simple(t)?;
    check_subset(&[i], t.cols())?;
    let g = graver_basis_with(t, &Budget::default())?;
    Ok(projection_witness(&g, i)?.is_none())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ComplexOptions {
    /// Also run the lifting test on every face candidate and require agreement.
    pub verify: bool,
    pub budget: Budget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustComplex {
    /// Divided by the gcd of its entries.
    #[serde(rename = "T")]
    pub t: Vec<Integer>,
    /// Sorted 1-based index sets, `∅` first.
    pub faces: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classification: Option<CurveClassification>,
    pub cross_checked: bool,
}

impl RobustComplex {
    /// The unique 0-dimensional face, if any.
    pub fn vertex(&self) -> Option<usize> {
        self.faces.iter().find(|f| f.len() == 1).map(|f| f[0])
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.faces.contains(&f)
    }
}

pub fn robust_complex(t: &IntMat) -> Result<RobustComplex> {
    robust_complex_with(t, &ComplexOptions::default())
}

pub fn robust_complex_with(t: &IntMat, opts: &ComplexOptions) -> Result<RobustComplex> {
    let t = normalize_degrees(t)?;
    let s = t.cols();
    if s < 3 {
        return Err(Error::InvalidInput(format!(
            "the complex needs at least 3 columns, got {s}"
        )));
    }
    require_simple(&t)?;
    let g = graver_basis_with(&t, &opts.budget)?;
    let passed: Vec<bool> = (1..=s)
        .into_par_iter()
        .map(|i| projection_witness(&g, i).map(|w| w.is_none()))
        .collect::<Result<_>>()?;
    let mut faces = vec![vec![]];
    faces.extend((1..=s).filter(|&i| passed[i - 1]).map(|i| vec![i]));

    if opts.verify {
        let candidates: Vec<Vec<usize>> = std::iter::once(vec![])
            .chain((1..=s).map(|i| vec![i]))
            .collect();
        let lifted: Vec<bool> = candidates
            .par_iter()
            .map(|w| face_test_lifting_with(&t, w, &opts.budget))
            .collect::<Result<_>>()?;
        for (w, ok) in candidates.iter().zip(lifted) {
            if ok != faces.contains(w) {
                return Err(Error::Inconsistent(format!(
                    "face {w:?}: lifting test says {ok}, projection test says {}",
                    !ok
                )));
            }
        }
    }

    let classification = if s == 3 {
        Some(classify_curve3(&t)?)
    } else {
        None
    };
    Ok(RobustComplex {
        t: t.row(0).into_entries(),
        faces,
        classification,
        cross_checked: opts.verify,
    })
}
