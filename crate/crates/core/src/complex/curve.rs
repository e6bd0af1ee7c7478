use std::fmt;

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::Integer;
use crate::linalg::{IntMat, IntVec};

/// `deg_T(x^u) = Σ u_i n_i` for a non-negative exponent vector.
pub fn degree_t(t: &IntMat, u: &IntVec) -> Result<Integer> {
    if t.rows() != 1 {
        return Err(Error::Shape(format!(
            "expected a 1×s matrix, got {}×{}",
            t.rows(),
            t.cols()
        )));
    }
    if u.len() != t.cols() {
        return Err(Error::LengthMismatch(t.cols(), u.len()));
    }
    if !u.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    Ok(t.row(0).dot(u))
}

/// Largest reachability table the dynamic program will allocate.
const DP_LIMIT: u64 = 1 << 26;

/// Least `c ≥ 1` with `c·n_i ∈ ⟨n_j, n_k⟩`. Since `n_j·n_i` and `n_k·n_i` are
/// both in the semigroup, `c ≤ min(n_j, n_k)`.
pub fn semigroup_min_multiple(ni: u64, nj: u64, nk: u64) -> u64 {
    assert!(
        ni > 0 && nj > 0 && nk > 0,
        "semigroup generators must be positive"
    );
    let cmax = nj.min(nk);
    let bound = cmax.saturating_mul(ni);
    if bound <= DP_LIMIT {
        let bound = bound as usize;
        let (nj, nk) = (nj as usize, nk as usize);
        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for x in 1..=bound {
            reach[x] = (x >= nj && reach[x - nj]) || (x >= nk && reach[x - nk]);
        }
        (1..=cmax)
            .find(|&c| reach[(c * ni) as usize])
            .unwrap_or(cmax)
    } else {
        (1..=cmax)
            .find(|&c| in_semigroup(c as u128 * ni as u128, nj, nk))
            .unwrap_or(cmax)
    }
}

/// `x = a·p + b·q` for some `a, b ≥ 0`; only `b < p` needs checking.
fn in_semigroup(x: u128, p: u64, q: u64) -> bool {
    let (p, q) = (p as u128, q as u128);
    let top = (x / q).min(p - 1);
    (0..=top).any(|b| (x - b * q).is_multiple_of(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveKind {
    NotCI,
    /// Complete intersection on `n_i` (1-based).
    CIOn(usize),
    CIOnAll,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::NotCI => f.write_str("NotCI"),
            CurveKind::CIOn(i) => write!(f, "CIOn({i})"),
            CurveKind::CIOnAll => f.write_str("CIOnAll"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClassification {
    /// Divided by the gcd of the entries.
    #[serde(rename = "T")]
    pub t: [u64; 3],
    pub c: [u64; 3],
    /// `c_i · n_i`.
    pub betti_candidates: [u64; 3],
    pub kind: CurveKind,
}

fn kind_of(d: [u64; 3]) -> CurveKind {
    if d[0] == d[1] && d[1] == d[2] {
        return CurveKind::CIOnAll;
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        if d[j] == d[k] {
            return CurveKind::CIOn(i + 1);
        }
    }
    CurveKind::NotCI
}

pub fn classify_triple(n: [u64; 3]) -> Result<CurveClassification> {
    if n.contains(&0) {
        return Err(Error::InvalidInput("degrees must be positive".into()));
    }
    let g = n[0].gcd(&n[1]).gcd(&n[2]);
    let t = n.map(|x| x / g);
    let c = [0, 1, 2].map(|i| semigroup_min_multiple(t[i], t[(i + 1) % 3], t[(i + 2) % 3]));
    let betti_candidates = [0, 1, 2].map(|i| c[i] * t[i]);
    Ok(CurveClassification {
        t,
        c,
        betti_candidates,
        kind: kind_of(betti_candidates),
    })
}

/// Classification of the monomial curve of a `1×3` matrix.
pub fn classify_curve3(t: &IntMat) -> Result<CurveClassification> {
    if t.shape() != (1, 3) {
        return Err(Error::Shape(format!(
            "expected a 1×3 matrix, got {}×{}",
            t.rows(),
            t.cols()
        )));
    }
    let mut n = [0u64; 3];
    for (j, slot) in n.iter_mut().enumerate() {
        let x = t.get(0, j);
        if x.is_negative() {
            return Err(Error::NegativeEntry);
        }
        *slot = x
            .to_i64()
            .map(|v| v as u64)
            .ok_or_else(|| Error::InvalidInput(format!("entry {x} too large")))?;
    }
    classify_triple(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ivec;
    use proptest::prelude::*;

    fn dp_free(ni: u64, nj: u64, nk: u64) -> u64 {
        (1..)
            .find(|&c| in_semigroup((c * ni) as u128, nj, nk))
            .unwrap()
    }

    #[test]
    fn min_multiples() {
        assert_eq!(semigroup_min_multiple(7, 15, 20), 5);
        assert_eq!(semigroup_min_multiple(11, 6, 8), 2);
        assert_eq!(semigroup_min_multiple(5, 3, 7), 2);
        assert_eq!(semigroup_min_multiple(1, 2, 3), 2);
        assert_eq!(semigroup_min_multiple(4, 2, 3), 1);
    }

    #[test]
    fn large_inputs_use_arithmetic_path() {
        let (a, b, c) = (100_003, 100_019, 100_043);
        assert_eq!(semigroup_min_multiple(a, b, c), dp_free(a, b, c));
    }

    #[test]
    fn degrees() {
        let t = IntMat::row_matrix(&[7, 15, 20]);
        assert_eq!(degree_t(&t, &ivec![5, 0, 0]).unwrap(), 35);
        assert_eq!(degree_t(&t, &ivec![0, 0, 0]).unwrap(), 0);
        assert!(matches!(
            degree_t(&t, &ivec![1, -1, 0]),
            Err(Error::NegativeEntry)
        ));
        let t = IntMat::row_matrix(&[6, 10, 15]);
        assert_eq!(degree_t(&t, &ivec![0, 3, 0]).unwrap(), 30);
    }

    #[test]
    fn classification_table() {
        let cases = [
            ([7, 15, 20], [5, 4, 3], CurveKind::CIOn(1)),
            ([5, 6, 15], [3, 5, 1], CurveKind::CIOn(2)),
            ([6, 8, 11], [4, 3, 2], CurveKind::CIOn(3)),
            ([6, 10, 15], [5, 3, 2], CurveKind::CIOnAll),
            ([3, 5, 7], [4, 2, 2], CurveKind::NotCI),
        ];
        for (t, c, kind) in cases {
            let r = classify_curve3(&IntMat::row_matrix(&t)).unwrap();
            assert_eq!(r.c, c, "{t:?}");
            assert_eq!(r.kind, kind, "{t:?}");
        }
        let r = classify_triple([7, 15, 20]).unwrap();
        assert_eq!(r.betti_candidates, [35, 60, 60]);
        assert_eq!(
            classify_triple([3, 5, 7]).unwrap().betti_candidates,
            [12, 10, 14]
        );
    }

    #[test]
    fn gcd_is_divided_out() {
        let r = classify_triple([14, 30, 40]).unwrap();
        assert_eq!(r.t, [7, 15, 20]);
        assert_eq!(r.kind, CurveKind::CIOn(1));
        assert!(classify_triple([0, 1, 2]).is_err());
        assert!(matches!(
            classify_curve3(&IntMat::row_matrix(&[3, -5, 7])),
            Err(Error::NegativeEntry)
        ));
        assert!(classify_curve3(&IntMat::row_matrix(&[3, 5])).is_err());
    }

    proptest! {
        #[test]
        fn min_multiple_is_least(ni in 1u64..60, nj in 1u64..60, nk in 1u64..60) {
            let c = semigroup_min_multiple(ni, nj, nk);
            prop_assert_eq!(c, dp_free(ni, nj, nk));
            prop_assert!(c >= 1 && c <= nj.min(nk));
        }

        #[test]
        fn kind_matches_degree_pattern(a in 1u64..40, b in 1u64..40, c in 1u64..40) {
            let r = classify_triple([a, b, c]).unwrap();
            let d = r.betti_candidates;
            let equal_pairs = [(1, 2), (0, 2), (0, 1)].iter().filter(|(x, y)| d[*x] == d[*y]).count();
            match r.kind {
                CurveKind::CIOnAll => prop_assert_eq!(equal_pairs, 3),
                CurveKind::CIOn(i) => {
                    prop_assert_eq!(equal_pairs, 1);
                    prop_assert_eq!(d[i % 3], d[(i + 1) % 3]);
                }
                CurveKind::NotCI => prop_assert_eq!(equal_pairs, 0),
            }
        }
    }
}
