use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::Integer;

/// Integer vector. Every `u` splits uniquely as `u = u⁺ − u⁻` with
/// non-negative parts of disjoint support.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(Vec<Integer>);

impl IntVec {
    pub fn new(entries: Vec<Integer>) -> Self {
        IntVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntVec(vec![Integer::ZERO; n])
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        IntVec(v.iter().map(|&x| Integer::from(x)).collect())
    }

    /// Unit vector with a one in 0-based slot `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Integer::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Integer] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Integer> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Integer> {
        self.0.iter()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(Integer::to_i64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Integer::is_zero)
    }

    pub fn positive_part(&self) -> IntVec {
        IntVec(
            self.0
                .iter()
                .map(|x| {
                    if x.is_positive() {
                        x.clone()
                    } else {
                        Integer::ZERO
                    }
                })
                .collect(),
        )
    }

    pub fn negative_part(&self) -> IntVec {
        IntVec(
            self.0
                .iter()
                .map(|x| if x.is_negative() { -x } else { Integer::ZERO })
                .collect(),
        )
    }

    /// 0-based indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn norm1(&self) -> Integer {
        self.0.iter().map(Integer::abs).sum()
    }

    pub fn dot(&self, other: &IntVec) -> Integer {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &Integer) -> IntVec {
        IntVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn content(&self) -> Integer {
        self.0.iter().fold(Integer::ZERO, |g, x| g.gcd(x))
    }

    /// Divides out the gcd of the entries. The zero vector is returned unchanged.
    pub fn primitive(&self) -> IntVec {
        let g = self.content();
        if g.is_zero() || g == 1 {
            return self.clone();
        }
        IntVec(self.0.iter().map(|x| x.div_exact(&g)).collect())
    }

    pub fn first_nonzero(&self) -> Option<&Integer> {
        self.0.iter().find(|x| !x.is_zero())
    }

    /// The representative of `{u, −u}` whose first nonzero entry is positive.
    pub fn sign_canonical(&self) -> IntVec {
        match self.first_nonzero() {
            Some(x) if x.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn is_sign_canonical(&self) -> bool {
        !self.first_nonzero().is_some_and(Integer::is_negative)
    }

    /// `self ⊑ other`: `self⁺ ≤ other⁺` and `self⁻ ≤ other⁻`.
    ///
    /// Panics on a length mismatch.
    pub fn conformally_below(&self, other: &IntVec) -> bool {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| match a.signum() {
            0 => true,
            1 => b >= a,
            _ => b <= a,
        })
    }

    /// No coordinate where the two vectors have strictly opposite signs.
    pub fn sign_compatible(&self, other: &IntVec) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| a.signum() * b.signum() >= 0)
    }

    /// `[u]^i`: the vector with the 1-based component `i` deleted.
    pub fn project_out(&self, i: usize) -> Result<IntVec> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let mut out = self.0.clone();
        out.remove(i - 1);
        Ok(IntVec(out))
    }

    /// Entries at the given 0-based positions, in order.
    pub fn select(&self, idx: &[usize]) -> IntVec {
        IntVec(idx.iter().map(|&i| self.0[i].clone()).collect())
    }

    fn check_len(&self, other: &IntVec) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }
}

/// `u = v +_c w`: `u = v + w` with `u⁺ = v⁺ + w⁺` and `u⁻ = v⁻ + w⁻`.
pub fn is_conformal_sum(u: &IntVec, v: &IntVec, w: &IntVec) -> Result<bool> {
    u.check_len(v)?;
    u.check_len(w)?;
    Ok(u.0
        .iter()
        .zip(&v.0)
        .zip(&w.0)
        .all(|((ui, vi), wi)| &(vi + wi) == ui && vi.signum() * wi.signum() >= 0))
}

/// `u = v +_sc w`: `u = v + w`, and for every coordinate `v_i > 0 ⇒ w_i ≥ 0`
/// and `w_i < 0 ⇒ v_i ≤ 0`.
pub fn is_semiconformal_sum(u: &IntVec, v: &IntVec, w: &IntVec) -> Result<bool> {
    u.check_len(v)?;
    u.check_len(w)?;
    Ok(u.0.iter().zip(&v.0).zip(&w.0).all(|((ui, vi), wi)| {
        // the two implications are contrapositives of each other
        &(vi + wi) == ui && !(vi.is_positive() && wi.is_negative())
    }))
}

/// `[u]^i` for a 1-based index `i`.
pub fn project_out(u: &IntVec, i: usize) -> Result<IntVec> {
    u.project_out(i)
}

impl Ord for IntVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for IntVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Index<usize> for IntVec {
    type Output = Integer;
    fn index(&self, i: usize) -> &Integer {
        &self.0[i]
    }
}

impl IndexMut<usize> for IntVec {
    fn index_mut(&mut self, i: usize) -> &mut Integer {
        &mut self.0[i]
    }
}

impl Add for &IntVec {
    type Output = IntVec;
    fn add(self, rhs: &IntVec) -> IntVec {
        assert_eq!(self.len(), rhs.len());
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVec {
    type Output = IntVec;
    fn sub(self, rhs: &IntVec) -> IntVec {
        assert_eq!(self.len(), rhs.len());
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        -&self
    }
}

impl From<Vec<Integer>> for IntVec {
    fn from(v: Vec<Integer>) -> Self {
        IntVec(v)
    }
}

impl FromIterator<Integer> for IntVec {
    fn from_iter<I: IntoIterator<Item = Integer>>(iter: I) -> Self {
        IntVec(iter.into_iter().collect())
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[macro_export]
macro_rules! ivec {
    ($($x:expr),* $(,)?) => {
        $crate::linalg::IntVec::from_i64s(&[$($x as i64),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conformal_examples() {
        assert!(is_conformal_sum(&ivec![1, -1], &ivec![1, -1], &ivec![0, 0]).unwrap());
        assert!(is_conformal_sum(&ivec![2, -2], &ivec![1, -1], &ivec![1, -1]).unwrap());
        assert!(!is_conformal_sum(&ivec![1, -1], &ivec![2, -2], &ivec![-1, 1]).unwrap());
        assert!(matches!(
            is_conformal_sum(&ivec![1], &ivec![1, 0], &ivec![0, 0]),
            Err(Error::LengthMismatch(1, 2))
        ));
    }

    #[test]
    fn semiconformal_examples() {
        // (c_j, 0, -c_k) = (c_j, -c_i, 0) + (0, c_i, -c_k)
        let (cj, ci, ck) = (3, 4, 5);
        assert!(
            is_semiconformal_sum(&ivec![cj, 0, -ck], &ivec![cj, -ci, 0], &ivec![0, ci, -ck])
                .unwrap()
        );
        let u = ivec![3, -7, 0, 2];
        assert!(is_semiconformal_sum(&u, &u, &IntVec::zeros(4)).unwrap());
        assert!(!is_semiconformal_sum(&ivec![1, 0], &ivec![2, 0], &ivec![-1, 0]).unwrap());
        assert!(is_semiconformal_sum(&ivec![1], &ivec![1, 0], &ivec![0, 0]).is_err());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(ivec![7, 8, 9].project_out(2).unwrap(), ivec![7, 9]);
        assert_eq!(ivec![5, -6, 0].project_out(1).unwrap(), ivec![-6, 0]);
        let circuit = ivec![0, 6, 0, -5, 0];
        assert_eq!(circuit.project_out(3).unwrap(), ivec![0, 6, -5, 0]);
        assert!(matches!(
            ivec![1, 2].project_out(3),
            Err(Error::IndexOutOfRange { index: 3, len: 2 })
        ));
        assert!(ivec![1, 2].project_out(0).is_err());
    }

    #[test]
    fn parts_and_support() {
        let u = ivec![3, 0, -2, 1];
        assert_eq!(u.positive_part(), ivec![3, 0, 0, 1]);
        assert_eq!(u.negative_part(), ivec![0, 0, 2, 0]);
        assert_eq!(&u.positive_part() - &u.negative_part(), u);
        assert_eq!(u.support(), vec![0, 2, 3]);
        assert_eq!((-&u).sign_canonical(), u);
        assert!(ivec![1, -1].conformally_below(&ivec![2, -1]));
        assert!(!ivec![1, -1].conformally_below(&ivec![2, 0]));
    }

    fn small_vec(n: usize) -> impl Strategy<Value = IntVec> {
        proptest::collection::vec(-6i64..=6, n).prop_map(|v| IntVec::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn conformal_implies_semiconformal(v in small_vec(5), w in small_vec(5)) {
            let u = &v + &w;
            if is_conformal_sum(&u, &v, &w).unwrap() {
                prop_assert!(is_semiconformal_sum(&u, &v, &w).unwrap());
                prop_assert!(is_semiconformal_sum(&u, &w, &v).unwrap());
            }
        }

        #[test]
        fn projection_is_linear(u in small_vec(4), v in small_vec(4), i in 1usize..=4) {
            let lhs = (&u + &v).project_out(i).unwrap();
            let rhs = &u.project_out(i).unwrap() + &v.project_out(i).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn parts_are_disjoint(u in small_vec(6)) {
            let (p, n) = (u.positive_part(), u.negative_part());
            prop_assert!(p.is_nonnegative() && n.is_nonnegative());
            prop_assert!(p.iter().zip(n.iter()).all(|(a, b)| a.is_zero() || b.is_zero()));
            prop_assert_eq!(&p - &n, u);
        }
    }
}
