//! Indispensable elements and strong robustness.
//!
//! A Graver element is indispensable when it has no proper semiconformal
//! decomposition `u = v +sc w` with `v, w` nonzero kernel vectors. It is
//! enough to try `w ∈ ±Gr(A)`: if `u = v +sc w` then some Graver element
//! `g ⊑ w` also gives a decomposition `u = (u − g) +sc g`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graver::{assert_pointed, graver_basis_with, Budget, GraverBasis};
use crate::linalg::{is_semiconformal_sum, IntMat, IntVec};

/// `u = v +sc w` with `v, w` nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub u: IntVec,
    pub v: IntVec,
    pub w: IntVec,
}

/// A semiconformal decomposition of `u` through some `±g`, if one exists.
///
/// `u` must itself be an element of `g` (up to sign).
pub fn decomposition_witness(u: &IntVec, g: &GraverBasis) -> Result<Option<Decomposition>> {
    if u.len() != g.ambient {
        return Err(Error::LengthMismatch(g.ambient, u.len()));
    }
    if !g.contains(u) {
        return Err(Error::NotMember);
    }
    Ok(find_decomposition(u, &g.elements))
}

fn find_decomposition(u: &IntVec, elements: &[IntVec]) -> Option<Decomposition> {
    for e in elements {
        for w in [e.clone(), -e] {
            if &w == u {
                continue;
            }
            let v = u - &w;
            if v.is_zero() {
                continue;
            }
            if is_semiconformal_sum(u, &v, &w).unwrap_or(false) {
                return Some(Decomposition { u: u.clone(), v, w });
            }
            if is_semiconformal_sum(u, &w, &v).unwrap_or(false) {
                return Some(Decomposition {
                    u: u.clone(),
                    v: w,
                    w: v,
                });
            }
        }
    }
    None
}

pub fn is_indispensable(u: &IntVec, g: &GraverBasis) -> Result<bool> {
    Ok(decomposition_witness(u, g)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndispensableSet {
    pub ambient: usize,
    pub matrix_hash: String,
    pub graver_size: usize,
    /// Sign-canonical, sorted.
    pub elements: Vec<IntVec>,
}

/// Verdict for a Graver basis, plus a decomposition of the first dispensable element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RobustnessCertificate {
    pub matrix_hash: String,
    pub strongly_robust: bool,
    pub graver_size: usize,
    pub indispensable_size: usize,
    pub witness: Option<Decomposition>,
}

fn classify(g: &GraverBasis) -> Vec<Option<Decomposition>> {
    g.elements
        .par_iter()
        .map(|u| find_decomposition(u, &g.elements))
        .collect()
}

fn pointed_graver(a: &IntMat, budget: &Budget) -> Result<GraverBasis> {
    let g = graver_basis_with(a, budget)?;
    if !assert_pointed(a, &g) {
        return Err(Error::NotPointed);
    }
    Ok(g)
}

pub fn indispensable_set(a: &IntMat) -> Result<IndispensableSet> {
    indispensable_set_with(a, &Budget::default())
}

pub fn indispensable_set_with(a: &IntMat, budget: &Budget) -> Result<IndispensableSet> {
    let g = pointed_graver(a, budget)?;
    Ok(indispensable_from_graver(&g))
}

pub fn indispensable_from_graver(g: &GraverBasis) -> IndispensableSet {
    let elements = g
        .elements
        .iter()
        .zip(classify(g))
        .filter(|(_, d)| d.is_none())
        .map(|(u, _)| u.clone())
        .collect();
    IndispensableSet {
        ambient: g.ambient,
        matrix_hash: g.matrix_hash.clone(),
        graver_size: g.len(),
        elements,
    }
}

pub fn is_strongly_robust(a: &IntMat) -> Result<RobustnessCertificate> {
    is_strongly_robust_with(a, &Budget::default())
}

pub fn is_strongly_robust_with(a: &IntMat, budget: &Budget) -> Result<RobustnessCertificate> {
    let g = pointed_graver(a, budget)?;
    Ok(certificate_from_graver(&g))
}

pub fn certificate_from_graver(g: &GraverBasis) -> RobustnessCertificate {
    let verdicts = classify(g);
    let indispensable_size = verdicts.iter().filter(|d| d.is_none()).count();
    let witness = verdicts.into_iter().flatten().next();
    RobustnessCertificate {
        matrix_hash: g.matrix_hash.clone(),
        strongly_robust: witness.is_none(),
        graver_size: g.len(),
        indispensable_size,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graver::graver_basis;
    use crate::ivec;

    fn mat(rows: &[Vec<i64>]) -> IntMat {
        IntMat::from_rows(rows).unwrap()
    }

    #[test]
    fn principal_ideal_is_robust() {
        let cert = is_strongly_robust(&IntMat::row_matrix(&[2, 3])).unwrap();
        assert!(cert.strongly_robust);
        assert_eq!((cert.graver_size, cert.indispensable_size), (1, 1));
    }

    #[test]
    fn twisted_cubic_is_not_robust() {
        // Gr(1,2,3) = {(2,-1,0),(3,0,-1),(1,1,-1),(1,-2,1),(0,3,-2)}
        let a = IntMat::row_matrix(&[1, 2, 3]);
        let cert = is_strongly_robust(&a).unwrap();
        assert!(!cert.strongly_robust);
        let d = cert.witness.unwrap();
        assert_eq!(&d.v + &d.w, d.u);
        assert!(is_semiconformal_sum(&d.u, &d.v, &d.w).unwrap());
        assert!(a.in_kernel(&d.v) && a.in_kernel(&d.w));
        assert!(!d.v.is_zero() && !d.w.is_zero());
    }

    #[test]
    fn lawrence_lifting_is_robust() {
        let a = mat(&[vec![1, 2, 0, 0], vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        let cert = is_strongly_robust(&a).unwrap();
        assert!(cert.strongly_robust);
        assert_eq!(cert.graver_size, cert.indispensable_size);
    }

    #[test]
    fn indispensable_subset_of_graver() {
        let a = IntMat::row_matrix(&[4, 5, 6]);
        let g = graver_basis(&a).unwrap();
        let s = indispensable_set(&a).unwrap();
        assert!(s.elements.iter().all(|u| g.contains(u)));
        assert!(s.elements.len() < g.len());
        // minimal generators (1,-2,1) and (3,0,-2) are indispensable here
        assert!(s.elements.contains(&ivec![1, -2, 1]));
        assert!(s.elements.contains(&ivec![3, 0, -2]));
    }

    #[test]
    fn not_pointed_rejected() {
        let a = IntMat::row_matrix(&[1, -1]);
        assert!(matches!(is_strongly_robust(&a), Err(Error::NotPointed)));
        assert!(matches!(indispensable_set(&a), Err(Error::NotPointed)));
    }

    #[test]
    fn witness_requires_membership() {
        let g = graver_basis(&IntMat::row_matrix(&[1, 2, 3])).unwrap();
        assert!(matches!(
            decomposition_witness(&ivec![4, -2, 0], &g),
            Err(Error::NotMember)
        ));
        assert!(decomposition_witness(&ivec![1, 2], &g).is_err());
        assert!(is_indispensable(&ivec![2, -1, 0], &g).unwrap());
        // same verdict for the negated element
        assert!(is_indispensable(&ivec![-2, 1, 0], &g).unwrap());
    }
}
