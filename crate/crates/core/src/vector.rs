//! Integer lattice vectors.
//!
//! Coordinates are `i64`; every arithmetic path used on untrusted input is
//! checked and reports [`Error::Overflow`] instead of wrapping. The operator
//! impls (`+`, `-`, unary `-`) panic on overflow and are meant for the small
//! hard-coded catalog coordinates.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(IntVector(coords))
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim > 0, "zero-dimensional vector");
        IntVector(vec![0; dim])
    }

    /// The standard basis vector with a 1 in position `i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = 1;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(())
    }

    /// Exact scalar product.
    pub fn dot(&self, other: &Self) -> Result<i64> {
        self.check_dim(other)?;
        self.0.iter().zip(&other.0).try_fold(0i64, |acc, (&x, &y)| {
            x.checked_mul(y).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
        })
    }

    pub fn norm_sq(&self) -> Result<i64> {
        self.dot(self)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_checked(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_checked(other, i64::checked_sub)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        self.0
            .iter()
            .map(|&x| x.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }

    /// Squared Euclidean distance.
    pub fn dist_sq(&self, other: &Self) -> Result<i64> {
        self.checked_sub(other)?.norm_sq()
    }

    fn zip_checked(&self, other: &Self, op: fn(i64, i64) -> Option<i64>) -> Result<Self> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&x, &y)| op(x, y).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(IntVector)
    }
}

impl From<Vec<i64>> for IntVector {
    /// Panics on an empty coordinate list; use [`IntVector::new`] for input
    /// that has not been checked.
    fn from(coords: Vec<i64>) -> Self {
        IntVector::new(coords).expect("empty coordinate list")
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(coords: [i64; N]) -> Self {
        IntVector::from(coords.to_vec())
    }
}

impl Index<usize> for IntVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        self.checked_add(rhs).expect("vector addition")
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        self.checked_sub(rhs).expect("vector subtraction")
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        self.checked_scale(-1).expect("vector negation")
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dot_examples() {
        let e0 = IntVector::from([1, 0]);
        let e1 = IntVector::from([0, 1]);
        assert_eq!(e0.dot(&e1).unwrap(), 0);

        let v01 = IntVector::from([3, 3, -1, -1, -1, -1, -1, -1]);
        assert_eq!(v01.dot(&v01).unwrap(), 24);

        let alpha7 = IntVector::from([-2, -2, -2, -2, 2, 2, 2, 2]);
        assert_eq!(alpha7.dot(&alpha7).unwrap(), 32);
    }

    #[test]
    fn dot_dimension_mismatch() {
        let a = IntVector::from([1, 2]);
        let b = IntVector::from([1, 2, 3]);
        assert_eq!(a.dot(&b), Err(Error::DimensionMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn overflow_is_reported() {
        let big = IntVector::from([i64::MAX, 1]);
        assert_eq!(big.dot(&big), Err(Error::Overflow));
        assert_eq!(big.checked_add(&big), Err(Error::Overflow));
        assert_eq!(IntVector::new(vec![]), Err(Error::ZeroDimension));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut vs = [IntVector::from([1, 0]), IntVector::from([-1, 5]), IntVector::from([0, 0])];
        vs.sort();
        assert_eq!(vs[0], IntVector::from([-1, 5]));
        assert_eq!(vs[2], IntVector::from([1, 0]));
    }

    fn small_vec(dim: usize) -> impl Strategy<Value = IntVector> {
        prop::collection::vec(-50i64..50, dim).prop_map(IntVector::from)
    }

    proptest! {
        #[test]
        fn dot_is_symmetric_and_bilinear(
            (u, v, w) in (1usize..8).prop_flat_map(|d| (small_vec(d), small_vec(d), small_vec(d))),
            k in -20i64..20,
        ) {
            prop_assert_eq!(u.dot(&v).unwrap(), v.dot(&u).unwrap());
            let lhs = (&u + &v).dot(&w).unwrap();
            prop_assert_eq!(lhs, u.dot(&w).unwrap() + v.dot(&w).unwrap());
            let ku = u.checked_scale(k).unwrap();
            prop_assert_eq!(ku.dot(&v).unwrap(), k * u.dot(&v).unwrap());
        }
    }
}
