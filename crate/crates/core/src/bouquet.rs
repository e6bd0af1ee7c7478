//! Gale rows, bouquets, the bouquet matrix `A_B` and the kernel map `D`.
//!
//! Two columns lie in the same bouquet when their Gale rows are nonzero
//! rational multiples of each other. Columns with a zero Gale row are free.
//! Non-free bouquets are listed in order of their smallest column (the
//! anchor), and members within a bouquet are increasing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::Integer;
use crate::linalg::{kernel_lattice, IntMat, IntVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BouquetKind {
    Free,
    Mixed,
    NonMixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bouquet {
    /// 0-based column indices, increasing; the first is the anchor.
    pub members: Vec<usize>,
    pub kind: BouquetKind,
    /// `c_B` restricted to `members`; gcd 1 with a positive anchor entry.
    pub c: IntVec,
}

impl Bouquet {
    pub fn anchor(&self) -> usize {
        self.members[0]
    }

    pub fn is_mixed(&self) -> bool {
        self.kind == BouquetKind::Mixed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BouquetDecomposition {
    pub ambient: usize,
    /// Non-free bouquets in anchor order.
    pub bouquets: Vec<Bouquet>,
    /// The free bouquet (possibly empty); its `c` is all ones.
    pub free: Option<Bouquet>,
    /// Columns `a_B = Σ_j (c_B)_j a_j`, one per non-free bouquet.
    pub a_b: IntMat,
}

impl BouquetDecomposition {
    /// Number of non-free bouquets.
    pub fn len(&self) -> usize {
        self.bouquets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bouquets.is_empty()
    }

    /// `c_B` of the `i`-th (0-based) non-free bouquet, in the ambient space.
    pub fn c_vector(&self, i: usize) -> IntVec {
        let b = &self.bouquets[i];
        let mut v = IntVec::zeros(self.ambient);
        for (k, &col) in b.members.iter().enumerate() {
            v[col] = b.c[k].clone();
        }
        v
    }

    /// 1-based indices of the non-mixed bouquets.
    pub fn non_mixed(&self) -> Vec<usize> {
        self.bouquets
            .iter()
            .enumerate()
            .filter(|(_, b)| b.kind == BouquetKind::NonMixed)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Every non-free bouquet is a single column and no column is free.
    pub fn is_simple(&self) -> bool {
        self.free.is_none() && self.bouquets.iter().all(|b| b.members.len() == 1)
    }

    /// `D(u)`: entry `c_ij · u_i` at every member column `ij`.
    pub fn d_map(&self, u: &IntVec) -> Result<IntVec> {
        if u.len() != self.len() {
            return Err(Error::LengthMismatch(self.len(), u.len()));
        }
        if !self.a_b.in_kernel(u) {
            return Err(Error::NotInKernel);
        }
        Ok(self.d_map_unchecked(u))
    }

    fn d_map_unchecked(&self, u: &IntVec) -> IntVec {
        let mut v = IntVec::zeros(self.ambient);
        for (b, ui) in self.bouquets.iter().zip(u.iter()) {
            for (k, &col) in b.members.iter().enumerate() {
                v[col] = &b.c[k] * ui;
            }
        }
        v
    }

    /// Inverse of `D` on `Ker_Z(A)`: reads each bouquet coordinate off its anchor.
    pub fn d_inverse(&self, v: &IntVec) -> Result<IntVec> {
        if v.len() != self.ambient {
            return Err(Error::LengthMismatch(self.ambient, v.len()));
        }
        let u: IntVec = self
            .bouquets
            .iter()
            .map(|b| v[b.anchor()].div_floor(&b.c[0]))
            .collect();
        if self.d_map_unchecked(&u) != *v {
            return Err(Error::NotInKernel);
        }
        Ok(u)
    }
}

/// Rows `G(a_1), …, G(a_n)` of the Gale matrix built from the canonical kernel basis.
pub fn gale_rows(a: &IntMat) -> Vec<IntVec> {
    let basis = kernel_lattice(a);
    gale_rows_from_basis(&basis.vectors, a.cols())
}

/// Gale rows for an arbitrary kernel basis (the basis vectors are the columns).
pub fn gale_rows_from_basis(basis: &[IntVec], n: usize) -> Vec<IntVec> {
    (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).collect())
        .collect()
}

/// Nonzero vectors `x`, `y` are rational multiples of each other: all 2×2
/// minors `x_p y_q − x_q y_p` vanish.
fn proportional(x: &IntVec, y: &IntVec) -> bool {
    let k = x.len();
    for p in 0..k {
        for q in p + 1..k {
            if &x[p] * &y[q] != &x[q] * &y[p] {
                return false;
            }
        }
    }
    // for k = 1 the minors are vacuous; both rows are nonzero here
    true
}

pub fn bouquet_decomposition(a: &IntMat) -> BouquetDecomposition {
    decomposition_from_gale(a, &gale_rows(a))
}

/// Bouquet decomposition computed from a given set of Gale rows of `a`.
pub fn decomposition_from_gale(a: &IntMat, rows: &[IntVec]) -> BouquetDecomposition {
    let n = a.cols();
    let mut free = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if rows[i].is_zero() {
            free.push(i);
            continue;
        }
        match classes
            .iter_mut()
            .find(|c| proportional(&rows[c[0]], &rows[i]))
        {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }

    let bouquets: Vec<Bouquet> = classes
        .into_iter()
        .map(|members| {
            let anchor = &rows[members[0]];
            let l = (0..anchor.len())
                .find(|&l| members.iter().all(|&j| !rows[j][l].is_zero()))
                .expect("proportional nonzero rows share their support");
            let g = members
                .iter()
                .fold(Integer::ZERO, |g, &j| g.gcd(&rows[j][l]));
            let sign = Integer::from(anchor[l].signum() as i64);
            let c: IntVec = members
                .iter()
                .map(|&j| (&sign * &rows[j][l]).div_exact(&g))
                .collect();
            let mixed = c.iter().any(Integer::is_negative);
            let kind = if mixed {
                BouquetKind::Mixed
            } else {
                BouquetKind::NonMixed
            };
            Bouquet { members, kind, c }
        })
        .collect();

    let mut a_b = IntMat::zeros(a.rows(), bouquets.len());
    for (k, b) in bouquets.iter().enumerate() {
        for r in 0..a.rows() {
            let v: Integer = b
                .members
                .iter()
                .zip(b.c.iter())
                .map(|(&j, cj)| cj * a.get(r, j))
                .sum();
            a_b.set(r, k, v);
        }
    }

    let free = (!free.is_empty()).then(|| Bouquet {
        c: IntVec::new(vec![Integer::ONE; free.len()]),
        members: free,
        kind: BouquetKind::Free,
    });

    BouquetDecomposition {
        ambient: n,
        bouquets,
        free,
        a_b,
    }
}

/// `D(u)` for the bouquet decomposition of `a`.
pub fn d_map(dec: &BouquetDecomposition, u: &IntVec) -> Result<IntVec> {
    dec.d_map(u)
}

pub fn is_simple(a: &IntMat) -> bool {
    bouquet_decomposition(a).is_simple()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec;

    #[test]
    fn monomial_curve_is_simple() {
        let t = IntMat::row_matrix(&[4, 5, 6]);
        let dec = bouquet_decomposition(&t);
        assert!(dec.is_simple());
        assert_eq!(dec.a_b, t);
        assert!(dec.bouquets.iter().all(|b| b.kind == BouquetKind::NonMixed));
        assert_eq!(dec.non_mixed(), vec![1, 2, 3]);
    }

    #[test]
    fn principal_ideal_is_one_mixed_bouquet() {
        // kernel (1,-1): both columns in one mixed bouquet
        let dec = bouquet_decomposition(&IntMat::row_matrix(&[1, 1]));
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.bouquets[0].c, ivec![1, -1]);
        assert!(!dec.is_simple());
        assert_eq!(
            gale_rows(&IntMat::row_matrix(&[1, 1])),
            vec![ivec![1], ivec![-1]]
        );
    }

    #[test]
    fn free_columns_collect_in_free_bouquet() {
        let a = IntMat::from_rows(&[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let dec = bouquet_decomposition(&a);
        let free = dec.free.as_ref().unwrap();
        assert_eq!(free.members, vec![2]);
        assert_eq!(free.c, ivec![1]);
        assert!(!dec.is_simple());
    }

    #[test]
    fn full_rank_is_all_free() {
        let rows = gale_rows(&IntMat::identity(2));
        assert!(rows.iter().all(|r| r.is_empty()));
        let dec = bouquet_decomposition(&IntMat::identity(2));
        assert!(dec.is_empty());
        assert_eq!(dec.free.unwrap().members, vec![0, 1]);
    }

    #[test]
    fn lambda_456_pairs_columns() {
        // Λ(T)_∅ for T = (4,5,6)
        let a = IntMat::from_rows(&[
            vec![4, 5, 6, 0, 0, 0],
            vec![1, 0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 1],
        ])
        .unwrap();
        let dec = bouquet_decomposition(&a);
        assert!(!dec.is_simple());
        let members: Vec<_> = dec.bouquets.iter().map(|b| b.members.clone()).collect();
        assert_eq!(members, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert!(dec.bouquets.iter().all(|b| b.c == ivec![1, -1]));
        assert!(dec.non_mixed().is_empty());
    }

    #[test]
    fn d_map_round_trip() {
        let a = IntMat::from_rows(&[
            vec![4, 5, 6, 0, 0, 0],
            vec![1, 0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 1],
        ])
        .unwrap();
        let dec = bouquet_decomposition(&a);
        let u = ivec![1, -2, 1];
        let v = dec.d_map(&u).unwrap();
        assert_eq!(v, ivec![1, -2, 1, -1, 2, -1]);
        assert!(a.in_kernel(&v));
        assert_eq!(dec.d_inverse(&v).unwrap(), u);
        assert_eq!(dec.d_map(&IntVec::zeros(3)).unwrap(), IntVec::zeros(6));
        assert!(matches!(
            dec.d_map(&ivec![1, 1, 1]),
            Err(Error::NotInKernel)
        ));
        assert!(dec.d_map(&ivec![1, 1]).is_err());
    }
}
