//! Brute-force reference routines over a box `|u_i| ≤ B`.
//!
//! These are deliberately naive and independent of the completion code, and
//! exist to cross-check it: enumerate every kernel vector in the box, keep
//! the conformally minimal ones, and search semiconformal splittings among
//! all boxed kernel pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graver::{canonical_set, subsets};
use crate::linalg::{is_semiconformal_sum, IntMat, IntVec};

/// Hard cap on the number of box points visited.
const MAX_POINTS: u128 = 200_000_000;

fn to_i64_rows(a: &IntMat) -> Result<Vec<Vec<i64>>> {
    a.row_vecs()
        .iter()
        .map(|r| {
            r.to_i64s()
                .ok_or_else(|| Error::InvalidInput("oracle needs entries that fit in i64".into()))
        })
        .collect()
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// `adj(M)` with `M · adj(M) = det(M) · I`.
fn adjugate(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[j][i] = sign * det(&minor);
        }
    }
    adj
}

/// Pivot columns `J` with `A_J` of full rank, and `rank A` independent rows of `A_J`.
fn independent_core(a: &IntMat) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut pivots: Vec<usize> = Vec::new();
    for j in 0..a.cols() {
        let mut trial = pivots.clone();
        trial.push(j);
        if a.select_columns(&trial).rank() > pivots.len() {
            pivots = trial;
        }
    }
    let a_j = a.select_columns(&pivots);
    let mut rows: Vec<usize> = Vec::new();
    for i in 0..a.rows() {
        let mut trial = rows.clone();
        trial.push(i);
        let sub = IntMat::from_int_rows(
            &trial.iter().map(|&k| a_j.row(k)).collect::<Vec<_>>(),
            pivots.len(),
        )?;
        if sub.rank() > rows.len() {
            rows = trial;
        }
    }
    Ok((pivots, rows))
}

/// A box guaranteed to contain `Gr(A)`: `(n − r) · Δ` with `Δ` the largest
/// `r × r` minor of `r` independent rows.
///
/// A Graver element that is not a circuit lies in the cone of circuits
/// conformal to it, so by Carathéodory it is `Σ λ_i c_i` over at most `n − r`
/// circuits. Each `λ_i < 1`, since otherwise `c_i` would lie conformally below
/// it, and circuit entries are bounded by `Δ`.
pub fn graver_box_bound(a: &IntMat) -> Result<i64> {
    let rows = to_i64_rows(a)?;
    let (pivots, row_idx) = independent_core(a)?;
    let r = pivots.len();
    let n = a.cols();
    if r == n {
        return Ok(0);
    }
    let mut delta: i128 = 1;
    for cols in subsets(n, r) {
        let m: Vec<Vec<i128>> = row_idx
            .iter()
            .map(|&i| cols.iter().map(|&j| rows[i][j] as i128).collect())
            .collect();
        delta = delta.max(det(&m).abs());
    }
    i64::try_from((n - r) as i128 * delta)
        .map_err(|_| Error::InvalidInput("Graver box bound overflows i64".into()))
}

/// Every nonzero `u ∈ Ker_Z(A)` with `|u_i| ≤ bound`, both signs, sorted.
pub fn boxed_kernel(a: &IntMat, bound: i64) -> Result<Vec<IntVec>> {
    if bound < 0 {
        return Err(Error::InvalidInput("box bound must be non-negative".into()));
    }
    let rows = to_i64_rows(a)?;
    let n = a.cols();
    let (pivots, row_idx) = independent_core(a)?;
    let r = pivots.len();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();

    let m: Vec<Vec<i128>> = row_idx
        .iter()
        .map(|&i| pivots.iter().map(|&j| rows[i][j] as i128).collect())
        .collect();
    let d = det(&m);
    let adj = adjugate(&m);
    let side = 2 * bound as u128 + 1;
    if side
        .checked_pow(free.len() as u32)
        .is_none_or(|p| p > MAX_POINTS)
    {
        return Err(Error::InvalidInput(format!(
            "box of side {side} in {} free coordinates is too large",
            free.len()
        )));
    }

    let mut out = Vec::new();
    let mut x = vec![-bound; free.len()];
    loop {
        // A_J x_J = −A_F x_F on the independent rows
        let rhs: Vec<i128> = row_idx
            .iter()
            .map(|&i| {
                -free
                    .iter()
                    .zip(&x)
                    .map(|(&j, &v)| rows[i][j] as i128 * v as i128)
                    .sum::<i128>()
            })
            .collect();
        let mut u = vec![0i64; n];
        let mut ok = true;
        for (k, &j) in pivots.iter().enumerate() {
            let num: i128 = (0..r).map(|t| adj[k][t] * rhs[t]).sum();
            if num % d != 0 || (num / d).abs() > bound as i128 {
                ok = false;
                break;
            }
            u[j] = (num / d) as i64;
        }
        if ok {
            for (&j, &v) in free.iter().zip(&x) {
                u[j] = v;
            }
            if u.iter().any(|&v| v != 0) {
                out.push(IntVec::from_i64s(&u));
            }
        }
        let mut k = 0;
        while k < x.len() && x[k] == bound {
            x[k] = -bound;
            k += 1;
        }
        if k == x.len() {
            break;
        }
        x[k] += 1;
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleGraver {
    pub bound: i64,
    /// Sign-canonical, sorted.
    pub elements: Vec<IntVec>,
    /// Some minimal element has an entry of absolute value `bound`; a larger
    /// box may then reveal further elements.
    pub touches_boundary: bool,
}

/// Conformally minimal elements of a set of nonzero vectors.
pub fn conformal_minimal(vectors: &[IntVec]) -> Vec<IntVec> {
    let minimal = vectors
        .iter()
        .filter(|u| {
            !vectors
                .iter()
                .any(|v| v != *u && !v.is_zero() && v.conformally_below(u))
        })
        .cloned();
    canonical_set(minimal)
}

pub fn oracle_graver(a: &IntMat, bound: i64) -> Result<OracleGraver> {
    let kernel = boxed_kernel(a, bound)?;
    let elements = conformal_minimal(&kernel);
    let touches_boundary = elements.iter().any(|u| u.iter().any(|x| x.abs() == bound));
    Ok(OracleGraver {
        bound,
        elements,
        touches_boundary,
    })
}

/// A splitting `u = v +sc w` with `v, w` nonzero and `w` in the boxed kernel.
pub fn oracle_decomposition(u: &IntVec, kernel: &[IntVec]) -> Option<(IntVec, IntVec)> {
    for w in kernel {
        if w == u {
            continue;
        }
        let v = u - w;
        if v.is_zero() {
            continue;
        }
        if is_semiconformal_sum(u, &v, w).unwrap_or(false) {
            return Some((v, w.clone()));
        }
        if is_semiconformal_sum(u, w, &v).unwrap_or(false) {
            return Some((w.clone(), v));
        }
    }
    None
}

/// Boxed Graver elements with no semiconformal splitting through the boxed kernel.
pub fn oracle_indispensable(a: &IntMat, bound: i64) -> Result<Vec<IntVec>> {
    let kernel = boxed_kernel(a, bound)?;
    let graver = conformal_minimal(&kernel);
    Ok(graver
        .into_iter()
        .filter(|u| oracle_decomposition(u, &kernel).is_none())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec;

    #[test]
    fn box_enumeration_of_principal_kernel() {
        let k = boxed_kernel(&IntMat::row_matrix(&[2, 3]), 6).unwrap();
        assert_eq!(
            k,
            vec![ivec![-6, 4], ivec![-3, 2], ivec![3, -2], ivec![6, -4]]
        );
        assert!(boxed_kernel(&IntMat::row_matrix(&[2, 3]), 1)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn full_rank_and_zero_rank() {
        assert!(boxed_kernel(&IntMat::identity(3), 4).unwrap().is_empty());
        assert_eq!(boxed_kernel(&IntMat::zeros(1, 2), 1).unwrap().len(), 8);
    }

    #[test]
    fn twisted_cubic() {
        let g = oracle_graver(&IntMat::row_matrix(&[1, 2, 3]), 4).unwrap();
        assert!(!g.touches_boundary);
        assert_eq!(
            g.elements,
            vec![
                ivec![0, 3, -2],
                ivec![1, -2, 1],
                ivec![1, 1, -1],
                ivec![2, -1, 0],
                ivec![3, 0, -1]
            ]
        );
        let small = oracle_graver(&IntMat::row_matrix(&[1, 2, 3]), 3).unwrap();
        assert!(small.touches_boundary);
    }

    #[test]
    fn two_row_kernel() {
        let a = IntMat::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        let g = oracle_graver(&a, 4).unwrap();
        assert!(!g.touches_boundary);
        assert!(g.elements.contains(&ivec![1, -2, 1, 0]));
        assert!(g.elements.contains(&ivec![1, -1, -1, 1]));
        for u in &g.elements {
            assert!(a.in_kernel(u));
        }
    }

    #[test]
    fn indispensable_principal() {
        assert_eq!(
            oracle_indispensable(&IntMat::row_matrix(&[2, 3]), 4).unwrap(),
            vec![ivec![3, -2]]
        );
    }

    #[test]
    fn box_bound_contains_graver() {
        assert_eq!(
            graver_box_bound(&IntMat::row_matrix(&[1, 2, 3])).unwrap(),
            6
        );
        assert_eq!(graver_box_bound(&IntMat::identity(2)).unwrap(), 0);
        // (14,-25,10,0) lies outside |u_i| ≤ 20 although nothing inside touches that box
        let a = IntMat::from_rows(&[vec![5, 4, 3, 1], vec![0, 2, 5, 1]]).unwrap();
        let bound = graver_box_bound(&a).unwrap();
        assert_eq!(bound, 50);
        let g = oracle_graver(&a, bound).unwrap();
        assert!(g.elements.contains(&ivec![14, -25, 10, 0]));
        assert!(!oracle_graver(&a, 20).unwrap().touches_boundary);
    }

    #[test]
    fn oversized_box_is_refused() {
        assert!(boxed_kernel(&IntMat::zeros(1, 8), 1000).is_err());
        assert!(boxed_kernel(&IntMat::row_matrix(&[1, 2]), -1).is_err());
    }
}
