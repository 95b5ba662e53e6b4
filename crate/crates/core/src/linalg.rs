//! Small dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dense square matrix as rows.
pub type Matrix = Vec<Vec<Q>>;

pub fn from_ints(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Determinant by fraction-exact Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn determinant(m: &Matrix) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for k in col..n {
                let t = &f * &a[col][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

/// Inverse, or `None` when singular.
#[allow(clippy::needless_range_loop)]
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let pivot = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for k in 0..2 * n {
                let t = &f * &a[col][k];
                a[r][k] -= t;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_inverse() {
        let m = from_ints(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(determinant(&m), q(3));
        let inv = inverse(&m).unwrap();
        let third = Q::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(inv[0][0], &third * q(2));
        assert_eq!(inv[0][1], third);

        let singular = from_ints(&[vec![2, -2], vec![-2, 2]]);
        assert_eq!(determinant(&singular), q(0));
        assert!(inverse(&singular).is_none());

        // Needs a row swap.
        let m = from_ints(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&m), q(-1));
        assert_eq!(inverse(&m).unwrap(), m);
    }
}
