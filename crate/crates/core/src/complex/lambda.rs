use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::Integer;
use crate::linalg::{IntMat, IntVec};

/// `Λ(T)_ω`: the second Lawrence lifting `[[T, 0], [I, I]]` of `T` with the
/// identity row and the second identity column of every `i ∈ ω` removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaMatrix {
    #[serde(rename = "T")]
    pub t: IntMat,
    /// 1-based, sorted.
    pub omega: Vec<usize>,
    pub matrix: IntMat,
}

impl LambdaMatrix {
    /// `(u, −u_j for j ∉ ω)`, the image of `u ∈ Ker(T)` in `Ker(Λ(T)_ω)`.
    pub fn lift(&self, u: &IntVec) -> IntVec {
        let s = self.t.cols();
        let mut out = u.entries().to_vec();
        out.extend(
            (1..=s)
                .filter(|j| !self.omega.contains(j))
                .map(|j| -&u[j - 1]),
        );
        IntVec::new(out)
    }
}

/// Validates `ω ⊆ {1..s}` and returns it sorted.
pub fn check_subset(omega: &[usize], s: usize) -> Result<Vec<usize>> {
    let mut w = omega.to_vec();
    w.sort_unstable();
    if let Some(&i) = w.iter().find(|&&i| i == 0 || i > s) {
        return Err(Error::BadSubset(format!("index {i} not in 1..={s}")));
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::BadSubset("repeated index".into()));
    }
    Ok(w)
}

pub fn lambda_matrix(t: &IntMat, omega: &[usize]) -> Result<LambdaMatrix> {
    let (m, s) = t.shape();
    if s < 2 {
        return Err(Error::Shape(format!("need at least 2 columns, got {s}")));
    }
    let omega = check_subset(omega, s)?;
    let kept: Vec<usize> = (1..=s).filter(|j| !omega.contains(j)).collect();
    let rows = m + kept.len();
    let cols = s + kept.len();
    let mut a = IntMat::zeros(rows, cols);
    for i in 0..m {
        for j in 0..s {
            a.set(i, j, t.get(i, j).clone());
        }
    }
    for (k, &j) in kept.iter().enumerate() {
        a.set(m + k, j - 1, Integer::ONE);
        a.set(m + k, s + k, Integer::ONE);
    }
    Ok(LambdaMatrix {
        t: t.clone(),
        omega,
        matrix: a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec;

    #[test]
    fn four_columns_omega_three() {
        let t = IntMat::row_matrix(&[4, 5, 6, 7]);
        let l = lambda_matrix(&t, &[3]).unwrap();
        let expected = IntMat::from_rows(&[
            vec![4, 5, 6, 7, 0, 0, 0],
            vec![1, 0, 0, 0, 1, 0, 0],
            vec![0, 1, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 1, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(l.matrix, expected);
    }

    #[test]
    fn extremes() {
        let t = IntMat::row_matrix(&[4, 5, 6]);
        assert_eq!(lambda_matrix(&t, &[1, 2, 3]).unwrap().matrix, t);
        let full = lambda_matrix(&t, &[]).unwrap().matrix;
        assert_eq!(full.shape(), (4, 6));
        assert_eq!(full.row(3), ivec![0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn bad_subsets() {
        let t = IntMat::row_matrix(&[4, 5, 6]);
        assert!(matches!(lambda_matrix(&t, &[0]), Err(Error::BadSubset(_))));
        assert!(matches!(lambda_matrix(&t, &[4]), Err(Error::BadSubset(_))));
        assert!(matches!(
            lambda_matrix(&t, &[2, 2]),
            Err(Error::BadSubset(_))
        ));
        assert!(lambda_matrix(&IntMat::row_matrix(&[4]), &[]).is_err());
    }

    #[test]
    fn lift_lands_in_kernel() {
        let t = IntMat::row_matrix(&[4, 5, 6]);
        let u = ivec![1, -2, 1];
        for omega in [vec![], vec![1], vec![2, 3], vec![1, 2, 3]] {
            let l = lambda_matrix(&t, &omega).unwrap();
            assert!(l.matrix.in_kernel(&l.lift(&u)), "{omega:?}");
        }
    }
}
