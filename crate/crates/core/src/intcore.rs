//! Exact integer vectors and matrices.
//!
//! Every arithmetic operation is overflow-checked; an overflow surfaces as
//! [`Error::Overflow`] instead of a wrapped value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dense vector of signed 64-bit integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(Vec<i64>);

impl IntVec {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntVec(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    fn check_dim(&self, other: &IntVec) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &IntVec) -> Result<IntVec> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("vector addition")))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn checked_sub(&self, other: &IntVec) -> Result<IntVec> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("vector subtraction")))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn checked_neg(&self) -> Result<IntVec> {
        self.0
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow("vector negation")))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn dot(&self, other: &IntVec) -> Result<i64> {
        self.check_dim(other)?;
        checked_dot(&self.0, &other.0)
    }

    /// Sum of absolute values.
    pub fn l1_norm(&self) -> i64 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    /// Splits `u` into `(u⁺, u⁻)` with `u = u⁺ − u⁻` and disjoint supports.
    pub fn sign_split(&self) -> (IntVec, IntVec) {
        let plus = self.0.iter().map(|&x| x.max(0)).collect();
        // x.min(0) is never i64::MIN negated unless x == i64::MIN; saturate there.
        let minus = self.0.iter().map(|&x| x.min(0).saturating_neg()).collect();
        (IntVec(plus), IntVec(minus))
    }

    pub fn plus(&self) -> IntVec {
        self.sign_split().0
    }

    pub fn minus(&self) -> IntVec {
        self.sign_split().1
    }

    /// `v ⊑ u`: `v⁺ ≤ u⁺` and `v⁻ ≤ u⁻` componentwise.
    pub fn conformal_leq(&self, u: &IntVec) -> Result<bool> {
        self.check_dim(u)?;
        Ok(conformal_leq_slice(&self.0, &u.0))
    }

    /// Returns `u` or `−u`, whichever has a positive first nonzero entry.
    pub fn canonicalize_sign(&self) -> IntVec {
        match self.0.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => IntVec(self.0.iter().map(|v| -v).collect()),
            _ => self.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_none_or(|&x| x > 0)
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec(v)
    }
}

impl From<&[i64]> for IntVec {
    fn from(v: &[i64]) -> Self {
        IntVec(v.to_vec())
    }
}

impl std::ops::Index<usize> for IntVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for IntVec {
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

pub(crate) fn checked_dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("dot product"))
    })
}

pub(crate) fn conformal_leq_slice(v: &[i64], u: &[i64]) -> bool {
    v.iter().zip(u).all(|(&a, &b)| {
        if a > 0 {
            b >= a
        } else if a < 0 {
            b <= a
        } else {
            true
        }
    })
}

/// A lattice element identified up to sign: the first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Move(IntVec);

impl Move {
    /// Canonicalizes the sign of `v`.
    pub fn new(v: IntVec) -> Self {
        Move(v.canonicalize_sign())
    }

    pub fn vector(&self) -> &IntVec {
        &self.0
    }

    pub fn into_vector(self) -> IntVec {
        self.0
    }

    pub fn as_slice(&self) -> &[i64] {
        self.0.as_slice()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<i64>> for Move {
    fn from(v: Vec<i64>) -> Self {
        Move::new(IntVec(v))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl IntMat {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        let expected = rows
            .checked_mul(cols)
            .ok_or(Error::Overflow("matrix dimensions"))?;
        if entries.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: entries.len(),
            });
        }
        Ok(IntMat {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend_from_slice(r);
        }
        IntMat::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| IntVec::from(self.row(i))).collect()
    }

    /// `A·x`.
    pub fn mul_vec(&self, x: &IntVec) -> Result<IntVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        (0..self.rows)
            .map(|i| checked_dot(self.row(i), x.as_slice()))
            .collect::<Result<Vec<_>>>()
            .map(IntVec::new)
    }

    /// `h·A`.
    pub fn left_mul_vec(&self, h: &IntVec) -> Result<IntVec> {
        if h.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: h.len(),
            });
        }
        (0..self.cols)
            .map(|j| checked_dot(h.as_slice(), &self.column(j)))
            .collect::<Result<Vec<_>>>()
            .map(IntVec::new)
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Flattens row-major into a vector of length `rows·cols`.
    pub fn to_vec(&self) -> IntVec {
        IntVec::new(self.entries.clone())
    }

    pub fn from_flat(rows: usize, cols: usize, v: &IntVec) -> Result<Self> {
        IntMat::new(rows, cols, v.as_slice().to_vec())
    }

    /// Sums of each column.
    pub fn column_sums(&self) -> Result<IntVec> {
        (0..self.cols)
            .map(|j| {
                (0..self.rows).try_fold(0i64, |acc, i| {
                    acc.checked_add(self.get(i, j))
                        .ok_or(Error::Overflow("column sum"))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVec::new)
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: &[i64]) -> IntVec {
        IntVec::from(x)
    }

    #[test]
    fn sign_split_examples() {
        assert_eq!(
            v(&[1, -1, -1, 1]).sign_split(),
            (v(&[1, 0, 0, 1]), v(&[0, 1, 1, 0]))
        );
        assert_eq!(
            v(&[0, 0, 0, 0]).sign_split(),
            (v(&[0, 0, 0, 0]), v(&[0, 0, 0, 0]))
        );
        // the last witness row at n = 5
        assert_eq!(
            v(&[-3, 3, -3, 2]).sign_split(),
            (v(&[0, 3, 0, 2]), v(&[3, 0, 3, 0]))
        );
    }

    #[test]
    fn conformal_examples() {
        assert!(v(&[2, -1]).conformal_leq(&v(&[4, -2])).unwrap());
        assert!(!v(&[1, -1]).conformal_leq(&v(&[-1, 1])).unwrap());
        assert!(v(&[0, 0]).conformal_leq(&v(&[3, -2])).unwrap());
        assert!(matches!(
            v(&[1]).conformal_leq(&v(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_sign_examples() {
        assert_eq!(v(&[-1, 1, 1, -1]).canonicalize_sign(), v(&[1, -1, -1, 1]));
        assert_eq!(v(&[1, -1, -1, 1]).canonicalize_sign(), v(&[1, -1, -1, 1]));
        assert_eq!(v(&[0, -2, 1]).canonicalize_sign(), v(&[0, 2, -1]));
        assert_eq!(v(&[0, 0]).canonicalize_sign(), v(&[0, 0]));
    }

    #[test]
    fn overflow_is_reported() {
        let big = v(&[i64::MAX]);
        assert_eq!(
            big.checked_add(&v(&[1])),
            Err(Error::Overflow("vector addition"))
        );
        assert!(v(&[i64::MIN]).checked_neg().is_err());
        assert!(v(&[i64::MAX, 2]).dot(&v(&[2, 1])).is_err());
    }

    #[test]
    fn matrix_shape_is_checked() {
        assert!(IntMat::new(2, 2, vec![1, 2, 3]).is_err());
        let m = IntMat::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.mul_vec(&v(&[1, 1])).unwrap(), v(&[3, 7]));
        assert_eq!(m.left_mul_vec(&v(&[1, 1])).unwrap(), v(&[4, 6]));
        assert_eq!(m.column_sums().unwrap(), v(&[4, 6]));
        assert_eq!(m.transpose().row(0), &[1, 3]);
    }

    fn small_vec(n: usize) -> impl Strategy<Value = IntVec> {
        proptest::collection::vec(-20i64..=20, n).prop_map(IntVec::new)
    }

    proptest! {
        #[test]
        fn sign_split_recombines(u in small_vec(6)) {
            let (p, m) = u.sign_split();
            prop_assert_eq!(p.checked_sub(&m).unwrap(), u);
            prop_assert!(p.as_slice().iter().zip(m.as_slice()).all(|(a, b)| (*a).min(*b) == 0));
            prop_assert!(p.is_nonnegative() && m.is_nonnegative());
        }

        #[test]
        fn canonical_sign_is_idempotent_and_sign_blind(u in small_vec(5)) {
            let c = u.canonicalize_sign();
            prop_assert_eq!(c.canonicalize_sign(), c.clone());
            prop_assert_eq!(u.checked_neg().unwrap().canonicalize_sign(), c);
        }

        #[test]
        fn conformal_order_is_a_partial_order(a in small_vec(4), b in small_vec(4), c in small_vec(4)) {
            prop_assert!(a.conformal_leq(&a).unwrap());
            if a.conformal_leq(&b).unwrap() && b.conformal_leq(&a).unwrap() {
                prop_assert_eq!(&a, &b);
            }
            if a.conformal_leq(&b).unwrap() && b.conformal_leq(&c).unwrap() {
                prop_assert!(a.conformal_leq(&c).unwrap());
            }
        }
    }
}
