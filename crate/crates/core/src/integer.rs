//! Arbitrary-precision integers with an inline machine-word fast path.
//!
//! Values that fit in an `i64` are always stored as [`Integer::Small`]; the
//! big representation is used only for values outside that range. Keeping
//! this normalization is what makes the derived `Eq`/`Hash` correct.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Integer {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    #[inline]
    pub fn is_positive(&self) -> bool {
        match self {
            Integer::Small(v) => *v > 0,
            Integer::Big(b) => b.is_positive(),
        }
    }

    #[inline]
    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Big(b) => b.is_negative(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::from_big(BigInt::from(*v).abs()),
            },
            Integer::Big(b) => Integer::from_big(b.abs()),
        }
    }

    /// Non-negative greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => {
                let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                match i64::try_from(x) {
                    Ok(v) => Integer::Small(v),
                    Err(_) => Integer::from_big(BigInt::from(x)),
                }
            }
            _ => Integer::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Extended gcd: returns `(g, x, y)` with `self*x + other*y = g >= 0`.
    pub fn extended_gcd(&self, other: &Integer) -> (Integer, Integer, Integer) {
        let (mut old_r, mut r) = (self.abs(), other.abs());
        let (mut old_s, mut s) = (Integer::ONE, Integer::ZERO);
        let (mut old_t, mut t) = (Integer::ZERO, Integer::ONE);
        while !r.is_zero() {
            let q = old_r.div_floor(&r);
            let next_r = &old_r - &(&q * &r);
            old_r = std::mem::replace(&mut r, next_r);
            let next_s = &old_s - &(&q * &s);
            old_s = std::mem::replace(&mut s, next_s);
            let next_t = &old_t - &(&q * &t);
            old_t = std::mem::replace(&mut t, next_t);
        }
        if self.is_negative() {
            old_s = -old_s;
        }
        if other.is_negative() {
            old_t = -old_t;
        }
        (old_r, old_s, old_t)
    }

    /// Floor division. Panics on a zero divisor.
    pub fn div_floor(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                Integer::Small(a.div_floor(b))
            }
            _ => Integer::from_big(self.to_big().div_floor(&other.to_big())),
        }
    }

    /// Division known to be exact (debug-checked).
    pub fn div_exact(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                debug_assert_eq!(a % b, 0, "inexact division {a} / {b}");
                Integer::Small(a / b)
            }
            _ => {
                let (q, r) = self.to_big().div_rem(&other.to_big());
                debug_assert!(r.is_zero(), "inexact division");
                Integer::from_big(q)
            }
        }
    }

    /// Remainder with the sign of the divisor's absolute value (always `>= 0`).
    pub fn rem_euclid(&self, other: &Integer) -> Integer {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                Integer::Small(a.rem_euclid(*b))
            }
            _ => {
                let m = other.to_big().abs();
                Integer::from_big(self.to_big().mod_floor(&m))
            }
        }
    }

    /// Division rounding to the nearest integer, ties toward negative infinity.
    pub fn div_round(&self, other: &Integer) -> Integer {
        let (num, den) = if other.is_negative() {
            (-self, -other)
        } else {
            (self.clone(), other.clone())
        };
        let twice = &num * &Integer::from(2) + &den;
        twice.div_floor(&(&den * &Integer::from(2)))
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(s) => Integer::Small(s),
            Err(_) => Integer::Big(BigInt::from(v)),
        }
    }
}

impl From<usize> for Integer {
    fn from(v: usize) -> Self {
        Integer::from(v as u64)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::ONE
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<i64> for Integer {
    fn eq(&self, other: &i64) -> bool {
        matches!(self, Integer::Small(v) if v == other)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b Integer> for &'a Integer {
            type Output = Integer;
            #[inline]
            fn $method(self, rhs: &'b Integer) -> Integer {
                if let (Integer::Small(a), Integer::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Integer::Small(v);
                    }
                }
                Integer::from_big(self.to_big() $op rhs.to_big())
            }
        }
        impl $trait<Integer> for Integer {
            type Output = Integer;
            #[inline]
            fn $method(self, rhs: Integer) -> Integer {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b Integer> for Integer {
            type Output = Integer;
            #[inline]
            fn $method(self, rhs: &'b Integer) -> Integer {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Integer> for &'a Integer {
            type Output = Integer;
            #[inline]
            fn $method(self, rhs: Integer) -> Integer {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add, +);
binop!(Sub, sub, checked_sub, -);
binop!(Mul, mul, checked_mul, *);

impl AddAssign<&Integer> for Integer {
    #[inline]
    fn add_assign(&mut self, rhs: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                *self = Integer::Small(v);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Integer> for Integer {
    #[inline]
    fn sub_assign(&mut self, rhs: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                *self = Integer::Small(v);
                return;
            }
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Integer> for Integer {
    fn mul_assign(&mut self, rhs: &Integer) {
        *self = &*self * rhs;
    }
}

impl Neg for &Integer {
    type Output = Integer;
    #[inline]
    fn neg(self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::from_big(-BigInt::from(*v)),
            },
            Integer::Big(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl Sum for Integer {
    fn sum<I: Iterator<Item = Integer>>(iter: I) -> Integer {
        let mut acc = Integer::ZERO;
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> Sum<&'a Integer> for Integer {
    fn sum<I: Iterator<Item = &'a Integer>>(iter: I) -> Integer {
        let mut acc = Integer::ZERO;
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => fmt::Display::fmt(v, f),
            Integer::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid integer literal {0:?}")]
pub struct ParseIntegerError(pub String);

impl FromStr for Integer {
    type Err = ParseIntegerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        s.parse::<BigInt>()
            .map(Integer::from_big)
            .map_err(|_| ParseIntegerError(s.to_string()))
    }
}

// Machine-word values serialize as JSON numbers; anything larger as a decimal string.
impl Serialize for Integer {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Integer::Small(v) => serializer.serialize_i64(*v),
            Integer::Big(b) => serializer.serialize_str(&b.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntegerVisitor;

        impl Visitor<'_> for IntegerVisitor {
            type Value = Integer;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Integer, E> {
                Ok(Integer::Small(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Integer, E> {
                Ok(Integer::from(v))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Integer, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(IntegerVisitor)
    }
}
