use serde::{Deserialize, Serialize};

use super::matrix::IntMat;
use super::vector::IntVec;
use crate::integer::Integer;

/// A basis of `Ker_Z(A)`. The rows are kept in row-Hermite normal form, which
/// depends only on the lattice, so equal lattices give equal bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub ambient: usize,
    pub vectors: Vec<IntVec>,
    pub matrix_hash: String,
}

impl LatticeBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// The `n × (n − r)` Gale matrix whose columns are the basis vectors.
    pub fn gale_matrix(&self) -> IntMat {
        IntMat::from_columns(&self.vectors, self.ambient)
            .expect("basis vectors have ambient length")
    }

    /// Integer coordinates of `u` in this basis, if `u` lies in the lattice.
    pub fn coordinates(&self, u: &IntVec) -> Option<Vec<Integer>> {
        if u.len() != self.ambient {
            return None;
        }
        let mut rest = u.clone();
        let mut coords = Vec::with_capacity(self.vectors.len());
        for b in &self.vectors {
            let p = b.iter().position(|x| !x.is_zero())?;
            let pivot = &b[p];
            if !rest[p].rem_euclid(pivot).is_zero() {
                return None;
            }
            let c = rest[p].div_exact(pivot);
            if !c.is_zero() {
                rest = &rest - &b.scale(&c);
            }
            coords.push(c);
        }
        rest.is_zero().then_some(coords)
    }

    pub fn contains(&self, u: &IntVec) -> bool {
        self.coordinates(u).is_some()
    }
}

/// Column-style unimodular reduction `A·U = [H | 0]`; returns the trailing
/// columns of `U` (a basis of the full integer kernel) and the rank of `A`.
fn kernel_columns(a: &IntMat) -> (Vec<IntVec>, usize) {
    let (m, n) = a.shape();
    let mut cols: Vec<Vec<Integer>> = (0..n).map(|j| a.column(j).into_entries()).collect();
    let mut trans: Vec<IntVec> = (0..n).map(|j| IntVec::unit(n, j)).collect();
    let mut pivot = 0;
    for row in 0..m {
        if pivot == n {
            break;
        }
        loop {
            // smallest nonzero |entry| in this row among the remaining columns
            let best = (pivot..n)
                .filter(|&j| !cols[j][row].is_zero())
                .min_by(|&x, &y| cols[x][row].abs().cmp(&cols[y][row].abs()).then(x.cmp(&y)));
            let Some(best) = best else { break };
            cols.swap(pivot, best);
            trans.swap(pivot, best);
            let mut done = true;
            for j in pivot + 1..n {
                if cols[j][row].is_zero() {
                    continue;
                }
                let q = cols[j][row].div_floor(&cols[pivot][row]);
                let (head, tail) = cols.split_at_mut(j);
                for (x, y) in tail[0].iter_mut().zip(&head[pivot]) {
                    *x -= &(&q * y);
                }
                let (th, tt) = trans.split_at_mut(j);
                tt[0] = &tt[0] - &th[pivot].scale(&q);
                if !cols[j][row].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !cols[pivot][row].is_zero() {
            pivot += 1;
        }
    }
    (trans.split_off(pivot), pivot)
}

/// Row-Hermite normal form of a set of linearly independent vectors.
pub fn hermite_rows(vectors: Vec<IntVec>) -> Vec<IntVec> {
    let Some(n) = vectors.first().map(IntVec::len) else {
        return vectors;
    };
    let mut rows = vectors;
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()).then(x.cmp(&y)));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                rows[i] = &rows[i] - &rows[r].scale(&q);
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            rows[r] = -&rows[r];
        }
        for i in 0..r {
            let q = rows[i][col].div_floor(&rows[r][col]);
            if !q.is_zero() {
                rows[i] = &rows[i] - &rows[r].scale(&q);
            }
        }
        r += 1;
    }
    rows.retain(|v| !v.is_zero());
    rows
}

/// Basis of the full integer kernel `Ker_Z(A)`; empty when `A` has full column rank.
pub fn kernel_lattice(a: &IntMat) -> LatticeBasis {
    let (cols, _) = kernel_columns(a);
    LatticeBasis {
        ambient: a.cols(),
        vectors: hermite_rows(cols),
        matrix_hash: a.hash_hex(),
    }
}

/// Rank of `A` as determined by the same reduction.
pub fn lattice_rank(a: &IntMat) -> usize {
    kernel_columns(a).1
}
