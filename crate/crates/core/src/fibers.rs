//! Fiber enumeration `F_b = {t ∈ N^n : A·t = b}` and semiconformal
//! decompositions.

use serde::{Deserialize, Serialize};

use crate::configuration::{ConfigKind, Configuration};
use crate::error::{Error, Result};
use crate::intcore::{IntMat, IntVec};

/// Default point cap for a single fiber.
pub const DEFAULT_FIBER_CAP: usize = 10_000_000;

/// A nonnegative point of a fiber; for Lawrence liftings the flattened
/// `r×n` matrix.
pub type FiberPoint = IntVec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fiber {
    pub degree: IntVec,
    /// Lexicographically sorted, no duplicates.
    pub points: Vec<FiberPoint>,
    /// Set when the cap was reached; `points` is then incomplete.
    pub truncated: bool,
}

impl Fiber {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, t: &IntVec) -> bool {
        self.points.binary_search(t).is_ok()
    }

    /// Errors when the fiber is incomplete.
    pub fn require_complete(&self, cap: usize) -> Result<&Self> {
        if self.truncated {
            return Err(Error::TruncatedFiber {
                degree: self.degree.as_slice().to_vec(),
                cap,
            });
        }
        Ok(self)
    }
}

/// All `t ≥ 0` with `A·t = b` (and `t ≤ bound` when given).
///
/// Depth-first over coordinates left to right; coordinate `j` is bounded by
/// the residual of every row with a positive entry in column `j` and by the
/// remaining grading budget. Points come out in lexicographic order.
/// Lawrence liftings dispatch to the row-structured enumerator.
pub fn enumerate_fiber(
    c: &Configuration,
    b: &IntVec,
    cap: usize,
    bound: Option<&IntVec>,
) -> Result<Fiber> {
    if cap == 0 {
        return Err(Error::InvalidArgument("fiber cap must be positive".into()));
    }
    if b.len() != c.rows() {
        return Err(Error::DimensionMismatch {
            expected: c.rows(),
            found: b.len(),
        });
    }
    if let Some(bx) = bound {
        if bx.len() != c.dim() {
            return Err(Error::DimensionMismatch {
                expected: c.dim(),
                found: bx.len(),
            });
        }
    }
    if let ConfigKind::Lawrence { base, r } = c.kind() {
        return lawrence_fiber_at_degree(base, *r, b, cap, bound);
    }
    let mut out = Vec::new();
    let truncated = if b.as_slice().iter().any(|&x| x < 0) {
        false
    } else {
        let mut search = Dfs::new(c.matrix(), b.as_slice(), bound.map(IntVec::as_slice), cap);
        search.run(&mut out);
        search.truncated
    };
    Ok(Fiber {
        degree: b.clone(),
        points: out.into_iter().map(IntVec::new).collect(),
        truncated,
    })
}

/// Fiber through `u⁺` for a lattice element `u`.
pub fn fiber_of(c: &Configuration, u: &IntVec, cap: usize) -> Result<Fiber> {
    if !c.contains(u)? {
        return Err(Error::InvalidArgument(format!("{u} is not in L(A)")));
    }
    let degree = c.multidegree(&u.plus())?;
    enumerate_fiber(c, &degree, cap, None)
}

struct Dfs<'a> {
    a: &'a IntMat,
    bound: Option<&'a [i64]>,
    cap: usize,
    residual: Vec<i64>,
    point: Vec<i64>,
    truncated: bool,
    found: usize,
}

impl<'a> Dfs<'a> {
    fn new(a: &'a IntMat, b: &[i64], bound: Option<&'a [i64]>, cap: usize) -> Self {
        Dfs {
            a,
            bound,
            cap,
            residual: b.to_vec(),
            point: vec![0; a.cols()],
            truncated: false,
            found: 0,
        }
    }

    fn run(&mut self, out: &mut Vec<Vec<i64>>) {
        self.visit(0, out);
    }

    fn visit(&mut self, j: usize, out: &mut Vec<Vec<i64>>) {
        if self.truncated {
            return;
        }
        let n = self.a.cols();
        if j == n {
            if self.residual.iter().all(|&x| x == 0) {
                if self.found == self.cap {
                    self.truncated = true;
                    return;
                }
                self.found += 1;
                out.push(self.point.clone());
            }
            return;
        }
        let mut hi = self.bound.map_or(i64::MAX, |bx| bx[j]);
        for (i, &res) in self.residual.iter().enumerate() {
            let aij = self.a.get(i, j);
            if aij > 0 {
                hi = hi.min(res / aij);
            }
        }
        if j + 1 == n {
            // last coordinate is forced when any row touches it
            let forced = (0..self.a.rows()).find(|&i| self.a.get(i, j) > 0);
            if let Some(i) = forced {
                let aij = self.a.get(i, j);
                if self.residual[i] % aij != 0 {
                    return;
                }
                let x = self.residual[i] / aij;
                if x > hi {
                    return;
                }
                self.step(j, x);
                self.visit(j + 1, out);
                self.step(j, -x);
            }
            return;
        }
        for x in 0..=hi.max(-1) {
            self.step(j, x);
            self.visit(j + 1, out);
            self.step(j, -x);
            if self.truncated {
                return;
            }
        }
    }

    fn step(&mut self, j: usize, x: i64) {
        self.point[j] += x;
        for i in 0..self.a.rows() {
            self.residual[i] -= x * self.a.get(i, j);
        }
    }
}

/// Fiber of the `r`-th Lawrence lifting of `base` at the degree of
/// `target`: all `r×n` matrices `t ≥ 0` whose rows have the same A-degrees
/// as the rows of `target` and whose column sums match.
///
/// Each row is drawn from the curve fiber at its row degree, boxed by the
/// remaining column totals; the last row is forced.
pub fn enumerate_lawrence_fiber(
    c: &Configuration,
    r: usize,
    target: &IntMat,
    cap: usize,
) -> Result<Fiber> {
    let base = c
        .curve_entries()
        .ok_or_else(|| Error::InvalidArgument("Lawrence fibers need a curve".into()))?;
    if target.rows() != r || target.cols() != base.len() {
        return Err(Error::DimensionMismatch {
            expected: r * base.len(),
            found: target.rows() * target.cols(),
        });
    }
    if target.entries().iter().any(|&x| x < 0) {
        return Err(Error::InvalidArgument("Lawrence target must be nonnegative".into()));
    }
    let degree = lawrence_degree(base, target)?;
    lawrence_fiber_at_degree(base, r, &degree, cap, None)
}

/// Degree of an `r×n` matrix under the lifting: row degrees then column sums.
pub fn lawrence_degree(base: &[i64], t: &IntMat) -> Result<IntVec> {
    let mut d = Vec::with_capacity(t.rows() + t.cols());
    for i in 0..t.rows() {
        d.push(crate::intcore::checked_dot(base, t.row(i))?);
    }
    d.extend_from_slice(t.column_sums()?.as_slice());
    Ok(IntVec::new(d))
}

pub(crate) fn lawrence_fiber_at_degree(
    base: &[i64],
    r: usize,
    degree: &IntVec,
    cap: usize,
    bound: Option<&IntVec>,
) -> Result<Fiber> {
    let n = base.len();
    if degree.len() != r + n {
        return Err(Error::DimensionMismatch {
            expected: r + n,
            found: degree.len(),
        });
    }
    let d = &degree.as_slice()[..r];
    let totals = &degree.as_slice()[r..];
    let empty = Fiber {
        degree: degree.clone(),
        points: vec![],
        truncated: false,
    };
    if degree.as_slice().iter().any(|&x| x < 0) {
        return Ok(empty);
    }
    // row degrees must add up to the degree of the column totals
    if crate::intcore::checked_dot(base, totals)? != d.iter().sum::<i64>() {
        return Ok(empty);
    }
    let curve = IntMat::new(1, n, base.to_vec())?;
    let row_fibers: Vec<Vec<Vec<i64>>> = d
        .iter()
        .enumerate()
        .map(|(i, &di)| {
            let row_box: Vec<i64> = match bound {
                Some(bx) => (0..n).map(|j| bx[i * n + j].min(totals[j])).collect(),
                None => totals.to_vec(),
            };
            let mut out = Vec::new();
            let mut dfs = Dfs::new(&curve, &[di], Some(&row_box), usize::MAX);
            dfs.run(&mut out);
            out
        })
        .collect();
    let mut search = RowSearch {
        row_fibers: &row_fibers,
        n,
        remaining: totals.to_vec(),
        current: Vec::with_capacity(r * n),
        out: Vec::new(),
        cap,
        truncated: false,
    };
    search.visit(0);
    let truncated = search.truncated;
    Ok(Fiber {
        degree: degree.clone(),
        points: search.out.into_iter().map(IntVec::new).collect(),
        truncated,
    })
}

struct RowSearch<'a> {
    row_fibers: &'a [Vec<Vec<i64>>],
    n: usize,
    remaining: Vec<i64>,
    current: Vec<i64>,
    out: Vec<Vec<i64>>,
    cap: usize,
    truncated: bool,
}

impl RowSearch<'_> {
    fn visit(&mut self, i: usize) {
        if self.truncated {
            return;
        }
        let r = self.row_fibers.len();
        if i == r {
            if self.remaining.iter().all(|&x| x == 0) {
                if self.out.len() == self.cap {
                    self.truncated = true;
                    return;
                }
                self.out.push(self.current.clone());
            }
            return;
        }
        let rows = &self.row_fibers[i];
        if i + 1 == r {
            // the last row must use up every remaining column total
            if rows.binary_search(&self.remaining).is_ok() {
                let rem = self.remaining.clone();
                self.current.extend_from_slice(&rem);
                self.remaining.iter_mut().for_each(|x| *x = 0);
                self.visit(r);
                self.remaining.copy_from_slice(&rem);
                self.current.truncate(i * self.n);
            }
            return;
        }
        for row in rows {
            if row.iter().zip(&self.remaining).any(|(x, b)| x > b) {
                continue;
            }
            for (b, x) in self.remaining.iter_mut().zip(row) {
                *b -= x;
            }
            self.current.extend_from_slice(row);
            self.visit(i + 1);
            self.current.truncate(i * self.n);
            for (b, x) in self.remaining.iter_mut().zip(row) {
                *b += x;
            }
            if self.truncated {
                return;
            }
        }
    }
}

/// A semiconformal decomposition `u = v +sc w` through the fiber point `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScDecomposition {
    /// `v = u⁺ − t`
    pub left: IntVec,
    /// `w = t − u⁻`
    pub right: IntVec,
    pub pivot: FiberPoint,
}

impl ScDecomposition {
    pub fn is_proper(&self) -> bool {
        !self.left.is_zero() && !self.right.is_zero()
    }
}

/// One decomposition per point of `F_u`, in fiber order.
pub fn sc_decompositions(c: &Configuration, u: &IntVec, cap: usize) -> Result<Vec<ScDecomposition>> {
    let fiber = fiber_of(c, u, cap)?;
    fiber.require_complete(cap)?;
    let (plus, minus) = u.sign_split();
    fiber
        .points
        .into_iter()
        .map(|t| {
            Ok(ScDecomposition {
                left: plus.checked_sub(&t)?,
                right: t.checked_sub(&minus)?,
                pivot: t,
            })
        })
        .collect()
}

/// `u = v +sc w`: `u = v + w`, and `v(i) > 0 ⇒ w(i) ≥ 0`, `w(i) < 0 ⇒ v(i) ≤ 0`.
pub fn is_semiconformal(u: &IntVec, v: &IntVec, w: &IntVec) -> Result<bool> {
    if v.checked_add(w)? != *u {
        return Ok(false);
    }
    Ok(v
        .as_slice()
        .iter()
        .zip(w.as_slice())
        .all(|(&vi, &wi)| !(vi > 0 && wi < 0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(e: &[i64]) -> Configuration {
        Configuration::curve(e).unwrap()
    }

    fn v(x: &[i64]) -> IntVec {
        IntVec::from(x)
    }

    #[test]
    fn degree_25_fiber_of_a5() {
        let c = curve(&[1, 5, 20, 24]);
        let f = enumerate_fiber(&c, &v(&[25]), DEFAULT_FIBER_CAP, None).unwrap();
        assert!(!f.truncated);
        assert_eq!(f.len(), 9);
        let alpha_zero: Vec<_> = f.points.iter().filter(|p| p[0] == 0).cloned().collect();
        assert_eq!(alpha_zero, vec![v(&[0, 1, 1, 0]), v(&[0, 5, 0, 0])]);
        assert!(f.points.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn infeasible_degree_is_empty() {
        let f = enumerate_fiber(&curve(&[2, 3]), &v(&[1]), 10, None).unwrap();
        assert!(f.is_empty() && !f.truncated);
        let f = enumerate_fiber(&curve(&[2, 3]), &v(&[-4]), 10, None).unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn cap_truncates_without_error() {
        let f = enumerate_fiber(&curve(&[1, 1]), &v(&[10]), 3, None).unwrap();
        assert!(f.truncated);
        assert_eq!(f.len(), 3);
        assert!(f.require_complete(3).is_err());
    }

    #[test]
    fn boxed_fiber() {
        let f = enumerate_fiber(&curve(&[1, 1]), &v(&[4]), 100, Some(&v(&[3, 3]))).unwrap();
        assert_eq!(f.points, vec![v(&[1, 3]), v(&[2, 2]), v(&[3, 1])]);
    }

    #[test]
    fn fibers_of_moves() {
        let f = fiber_of(&curve(&[1, 1]), &v(&[1, -1]), 100).unwrap();
        assert_eq!(f.points, vec![v(&[0, 1]), v(&[1, 0])]);
        let f = fiber_of(&curve(&[3, 4, 5]), &v(&[1, -2, 1]), 100).unwrap();
        assert_eq!(f.points, vec![v(&[0, 2, 0]), v(&[1, 0, 1])]);
        let f = fiber_of(&curve(&[1, 5, 20, 24]), &v(&[1, -1, -1, 1]), 100).unwrap();
        assert_eq!(f.len(), 9);
        for p in [[1, 0, 0, 1], [5, 0, 1, 0], [25, 0, 0, 0]] {
            assert!(f.contains(&v(&p)));
        }
        assert!(fiber_of(&curve(&[1, 1]), &v(&[1, 1]), 100).is_err());
    }

    #[test]
    fn general_matrix_fiber() {
        let a = IntMat::from_rows(&[vec![1, 1, 1, 1], vec![0, 1, 2, 3]]).unwrap();
        let c = Configuration::general(a, v(&[1, 0])).unwrap();
        let f = enumerate_fiber(&c, &v(&[2, 3]), 100, None).unwrap();
        assert_eq!(f.points, vec![v(&[0, 1, 1, 0]), v(&[1, 0, 0, 1])]);
    }

    #[test]
    fn lemma_decompositions_at_n5() {
        let c = curve(&[1, 5, 20, 24]);
        let u = v(&[1, -1, -1, 1]);
        let all = sc_decompositions(&c, &u, 1000).unwrap();
        let alpha0: Vec<_> = all
            .iter()
            .filter(|d| d.pivot[0] == 0)
            .map(|d| (d.left.clone(), d.right.clone()))
            .collect();
        assert_eq!(
            alpha0,
            vec![
                (v(&[1, -1, -1, 1]), v(&[0, 0, 0, 0])),
                (v(&[1, -5, 0, 1]), v(&[0, 4, -1, 0])),
            ]
        );
        let mut rights: Vec<_> = all
            .iter()
            .filter(|d| d.pivot[1] == 0)
            .map(|d| d.right.clone())
            .collect();
        rights.sort();
        assert_eq!(
            rights,
            vec![v(&[1, -1, -1, 1]), v(&[5, -1, 0, 0]), v(&[25, -1, -1, 0])]
        );
        for d in &all {
            assert!(is_semiconformal(&u, &d.left, &d.right).unwrap());
        }
    }

    #[test]
    fn two_point_fiber_has_only_improper_decompositions() {
        let d = sc_decompositions(&curve(&[1, 1]), &v(&[1, -1]), 10).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|x| !x.is_proper()));
    }

    #[test]
    fn semiconformal_predicate() {
        let u = v(&[1, -1, -1, 1]);
        assert!(is_semiconformal(&u, &v(&[1, -5, 0, 1]), &v(&[0, 4, -1, 0])).unwrap());
        assert!(is_semiconformal(&v(&[1, -1]), &v(&[1, -1]), &v(&[0, 0])).unwrap());
        assert!(!is_semiconformal(&u, &v(&[0, 4, -1, 0]), &v(&[1, -5, 0, 1])).unwrap());
        assert!(!is_semiconformal(&u, &v(&[1, 0, 0, 0]), &v(&[0, 0, 0, 0])).unwrap());
    }

    #[test]
    fn lawrence_fiber_single_row_matches_curve_fiber() {
        let c = curve(&[1, 3, 6, 8]);
        let t = IntMat::from_rows(&[vec![2, 1, 0, 1]]).unwrap();
        let lf = enumerate_lawrence_fiber(&c, 1, &t, 1000).unwrap();
        // one row: column totals pin the row itself
        assert_eq!(lf.points, vec![v(&[2, 1, 0, 1])]);
    }

    #[test]
    fn lawrence_fiber_of_a_sign_pair() {
        let c = curve(&[1, 1]);
        // u = [(1,-1); (-1,1)], u+ = [(1,0); (0,1)]
        let t = IntMat::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let f = enumerate_lawrence_fiber(&c, 2, &t, 100).unwrap();
        assert_eq!(f.points, vec![v(&[0, 1, 1, 0]), v(&[1, 0, 0, 1])]);
    }
}
