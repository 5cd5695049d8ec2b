//! Configurations `A` with a certified positive grading, their kernel
//! lattices `L(A) = ker_Z(A)`, and A-degrees.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intcore::{checked_dot, IntMat, IntVec, Move};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ConfigKind {
    /// A single row of positive integers.
    Curve,
    /// The `r`-th Lawrence lifting of the curve `base`.
    Lawrence { base: Vec<i64>, r: usize },
    General,
}

/// A nonnegative integer matrix together with a grading certificate `h`
/// satisfying `h·a_j > 0` for every column `a_j`.
///
/// The certificate proves `L(A) ∩ N^n = {0}`, so every fiber is finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    matrix: IntMat,
    grading: IntVec,
    kind: ConfigKind,
    /// `h·a_j` for each column.
    #[serde(skip)]
    weights: Vec<i64>,
}

impl Configuration {
    /// A monomial curve `(a_1, …, a_n)` as a `1×n` matrix with grading `(1)`.
    pub fn curve(entries: &[i64]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidConfiguration("empty curve".into()));
        }
        if let Some(bad) = entries.iter().find(|&&a| a < 1) {
            return Err(Error::InvalidConfiguration(format!(
                "curve entries must be positive, found {bad}"
            )));
        }
        let matrix = IntMat::new(1, entries.len(), entries.to_vec())?;
        Self::build(matrix, IntVec::new(vec![1]), ConfigKind::Curve)
    }

    /// A general configuration; fails unless `h·A` is strictly positive.
    pub fn general(matrix: IntMat, grading: IntVec) -> Result<Self> {
        Self::build(matrix, grading, ConfigKind::General)
    }

    pub(crate) fn build(matrix: IntMat, grading: IntVec, kind: ConfigKind) -> Result<Self> {
        if matrix.cols() == 0 {
            return Err(Error::InvalidConfiguration("no columns".into()));
        }
        if matrix.entries().iter().any(|&a| a < 0) {
            return Err(Error::InvalidConfiguration(
                "configuration entries must be nonnegative".into(),
            ));
        }
        if let Some(j) = (0..matrix.cols()).find(|&j| matrix.column(j).iter().all(|&a| a == 0)) {
            return Err(Error::InvalidConfiguration(format!("column {} is zero", j + 1)));
        }
        let weights = matrix.left_mul_vec(&grading)?.into_inner();
        if let Some(j) = weights.iter().position(|&w| w <= 0) {
            return Err(Error::InvalidConfiguration(format!(
                "grading certificate gives nonpositive degree {} to column {}",
                weights[j],
                j + 1
            )));
        }
        Ok(Configuration {
            matrix,
            grading,
            kind,
            weights,
        })
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn grading(&self) -> &IntVec {
        &self.grading
    }

    pub fn kind(&self) -> &ConfigKind {
        &self.kind
    }

    /// Number of columns `n`.
    pub fn dim(&self) -> usize {
        self.matrix.cols()
    }

    /// Number of rows `m`.
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn column_weights(&self) -> &[i64] {
        &self.weights
    }

    /// The curve entries, when this is a curve.
    pub fn curve_entries(&self) -> Option<&[i64]> {
        match self.kind {
            ConfigKind::Curve => Some(self.matrix.row(0)),
            _ => None,
        }
    }

    /// `A·x` for `x ≥ 0`.
    pub fn multidegree(&self, x: &IntVec) -> Result<IntVec> {
        if !x.is_nonnegative() {
            return Err(Error::InvalidArgument(format!(
                "multidegree of a vector with negative entries: {x}"
            )));
        }
        self.matrix.mul_vec(x)
    }

    /// The grading degree `h·A·x`.
    pub fn graded_degree(&self, x: &[i64]) -> Result<i64> {
        checked_dot(&self.weights, x)
    }

    pub fn contains(&self, u: &IntVec) -> Result<bool> {
        Ok(self.matrix.mul_vec(u)?.is_zero())
    }

    /// Short deterministic identifier of the matrix.
    pub fn digest(&self) -> String {
        // FNV-1a over the shape and entries.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |x: i64| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        };
        eat(self.matrix.rows() as i64);
        eat(self.matrix.cols() as i64);
        for &x in self.matrix.entries() {
            eat(x);
        }
        format!("{}x{}-{h:016x}", self.matrix.rows(), self.matrix.cols())
    }

    /// An integer basis of `L(A)`.
    pub fn kernel_basis(&self) -> Result<LatticeBasis> {
        kernel_basis(&self.matrix)
    }
}

/// An integer basis of a saturated lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub vectors: Vec<Move>,
    pub rank: usize,
}

impl LatticeBasis {
    pub fn as_matrix(&self, dim: usize) -> Result<IntMat> {
        if self.vectors.is_empty() {
            return Ok(IntMat::zeros(0, dim));
        }
        let rows: Vec<Vec<i64>> = self
            .vectors
            .iter()
            .map(|m| m.as_slice().to_vec())
            .collect();
        IntMat::from_rows(&rows)
    }
}

/// Kernel of `A` by unimodular column reduction of `[A; I]`.
///
/// Each row of `A` is cleared to a single pivot by repeated Euclidean
/// steps, picking the leftmost entry of smallest absolute value. The
/// columns whose `A`-part vanishes carry a basis of `ker_Z(A)`; since the
/// transform is unimodular the basis generates the full lattice.
pub fn kernel_basis(a: &IntMat) -> Result<LatticeBasis> {
    let m = a.rows();
    let n = a.cols();
    // cols[j] = (A-part, U-part) of column j
    let mut cols: Vec<(Vec<i64>, Vec<i64>)> = (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            (a.column(j), e)
        })
        .collect();
    let mut start = 0;
    for row in 0..m {
        if start == n {
            break;
        }
        loop {
            let pivot = (start..n)
                .filter(|&j| cols[j].0[row] != 0)
                .min_by_key(|&j| (cols[j].0[row].unsigned_abs(), j));
            let Some(p) = pivot else { break };
            let mut done = true;
            for j in start..n {
                if j == p || cols[j].0[row] == 0 {
                    continue;
                }
                let q = cols[j].0[row].div_euclid(cols[p].0[row]);
                let (pa, pu) = cols[p].clone();
                let (ja, ju) = &mut cols[j];
                axpy(ja, -q, &pa)?;
                axpy(ju, -q, &pu)?;
                if ja[row] != 0 {
                    done = false;
                }
            }
            if done {
                if cols[p].0[row] < 0 {
                    let (pa, pu) = &mut cols[p];
                    negate(pa)?;
                    negate(pu)?;
                }
                cols.swap(start, p);
                start += 1;
                break;
            }
        }
    }
    let vectors: Vec<Move> = cols[start..]
        .iter()
        .map(|(_, u)| Move::new(IntVec::new(u.clone())))
        .collect();
    Ok(LatticeBasis {
        rank: vectors.len(),
        vectors,
    })
}

fn axpy(y: &mut [i64], q: i64, x: &[i64]) -> Result<()> {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi = q
            .checked_mul(*xi)
            .and_then(|p| yi.checked_add(p))
            .ok_or(Error::Overflow("column reduction"))?;
    }
    Ok(())
}

fn negate(y: &mut [i64]) -> Result<()> {
    for yi in y.iter_mut() {
        *yi = yi.checked_neg().ok_or(Error::Overflow("column reduction"))?;
    }
    Ok(())
}

/// Nonzero elementary divisors of `m`, by diagonal reduction.
pub fn elementary_divisors(m: &IntMat) -> Result<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let rows = m.rows();
    let cols = m.cols();
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let pick = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| (a[i][j].unsigned_abs(), i, j));
        let Some((pi, pj)) = pick else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t];
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_euclid(p);
            if q != 0 {
                let pr = a[t].clone();
                axpy(&mut a[i], -q, &pr)?;
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j].div_euclid(p);
            if q != 0 {
                for row in a.iter_mut() {
                    row[j] = row[j]
                        .checked_sub(q.checked_mul(row[t]).ok_or(Error::Overflow("smith"))?)
                        .ok_or(Error::Overflow("smith"))?;
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // p must divide the rest of the block; otherwise fold a row in
        let bad = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j] % p != 0);
        if let Some((i, _)) = bad {
            let ri = a[i].clone();
            axpy(&mut a[t], 1, &ri)?;
            continue;
        }
        divisors.push(p.abs());
        t += 1;
    }
    Ok(divisors)
}

/// True when the rows of `basis` are independent and generate a saturated
/// lattice (all elementary divisors equal 1).
pub fn is_saturated_basis(basis: &IntMat) -> Result<bool> {
    let d = elementary_divisors(basis)?;
    Ok(d.len() == basis.rows() && d.iter().all(|&x| x == 1))
}

/// Expresses `u` over the rows of a lattice basis by integer elimination.
/// Returns `None` when `u` is not in the integer span.
pub fn coordinates_in(basis: &LatticeBasis, u: &IntVec) -> Result<Option<Vec<i64>>> {
    // Solve c·B = u with B in column echelon form after the same reduction as
    // kernel_basis, applied to the transpose.
    let k = basis.vectors.len();
    if k == 0 {
        return Ok(if u.is_zero() { Some(vec![]) } else { None });
    }
    let n = basis.vectors[0].len();
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    // rows: (vector, coefficient tracker)
    let mut rows: Vec<(Vec<i64>, Vec<i64>)> = basis
        .vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut e = vec![0; k];
            e[i] = 1;
            (v.as_slice().to_vec(), e)
        })
        .collect();
    let mut start = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        if start == k {
            break;
        }
        loop {
            let pivot = (start..k)
                .filter(|&i| rows[i].0[col] != 0)
                .min_by_key(|&i| (rows[i].0[col].unsigned_abs(), i));
            let Some(p) = pivot else { break };
            let mut done = true;
            for i in start..k {
                if i == p || rows[i].0[col] == 0 {
                    continue;
                }
                let q = rows[i].0[col].div_euclid(rows[p].0[col]);
                let (pv, pc) = rows[p].clone();
                axpy(&mut rows[i].0, -q, &pv)?;
                axpy(&mut rows[i].1, -q, &pc)?;
                done &= rows[i].0[col] == 0;
            }
            if done {
                rows.swap(start, p);
                pivots.push(col);
                start += 1;
                break;
            }
        }
    }
    let mut rest = u.as_slice().to_vec();
    let mut coeffs = vec![0i64; k];
    for (i, &col) in pivots.iter().enumerate() {
        let p = rows[i].0[col];
        if rest[col] % p != 0 {
            return Ok(None);
        }
        let q = rest[col] / p;
        axpy(&mut rest, -q, &rows[i].0)?;
        axpy(&mut coeffs, q, &rows[i].1)?;
    }
    Ok(if rest.iter().all(|&x| x == 0) {
        Some(coeffs)
    } else {
        None
    })
}
