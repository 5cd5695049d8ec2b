//! Higher Lawrence liftings.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::configuration::{ConfigKind, Configuration};
use crate::error::{Error, Result};
use crate::intcore::{checked_dot, IntMat, IntVec, Move};
use crate::markov::{minimal_markov_basis_with, universal_markov_basis_by_degrees, DegreeSource};

/// The `r`-th Lawrence lifting of a curve: `r` diagonal copies of `A` over
/// `r` horizontal copies of the identity.
pub fn lift(c: &Configuration, r: usize) -> Result<Configuration> {
    let base = curve_of(c)?.to_vec();
    if r < 2 {
        return Err(Error::InvalidArgument(format!("lifting order must be at least 2, got {r}")));
    }
    let n = base.len();
    let rows = r.checked_add(n).ok_or(Error::Overflow("lifting dimensions"))?;
    let cols = r.checked_mul(n).ok_or(Error::Overflow("lifting dimensions"))?;
    let mut m = IntMat::zeros(rows, cols);
    for i in 0..r {
        for (j, &a) in base.iter().enumerate() {
            m.set(i, i * n + j, a);
            m.set(r + j, i * n + j, 1);
        }
    }
    let mut grading = vec![0; rows];
    grading[r..].iter_mut().for_each(|h| *h = 1);
    Configuration::build(m, IntVec::new(grading), ConfigKind::Lawrence { base, r })
}

fn curve_of(c: &Configuration) -> Result<&[i64]> {
    c.curve_entries()
        .ok_or_else(|| Error::InvalidArgument("only curves can be lifted".into()))
}

/// An element of `L(A⁽ʳ⁾)` as an `r×n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedMove {
    pub matrix: IntMat,
    #[serde(rename = "type")]
    pub kind_type: usize,
}

impl LiftedMove {
    /// Checks rows against `base` and column sums.
    pub fn new(base: &[i64], matrix: IntMat) -> Result<Self> {
        if !in_lifted_lattice(base, &matrix)? {
            return Err(Error::InvalidArgument("matrix is not in the lifted lattice".into()));
        }
        let kind_type = type_of(&matrix);
        Ok(LiftedMove { matrix, kind_type })
    }

    pub fn from_move(base: &[i64], r: usize, m: &Move) -> Result<Self> {
        Self::new(base, IntMat::from_flat(r, base.len(), m.vector())?)
    }
}

/// Number of nonzero rows.
pub fn type_of(m: &IntMat) -> usize {
    (0..m.rows()).filter(|&i| m.row(i).iter().any(|&x| x != 0)).count()
}

/// Type of a flattened `r×n` move.
pub fn move_type(m: &Move, n: usize) -> usize {
    m.as_slice().chunks(n).filter(|row| row.iter().any(|&x| x != 0)).count()
}

/// True iff every row lies in `L(base)` and every column sums to zero.
pub fn in_lifted_lattice(base: &[i64], m: &IntMat) -> Result<bool> {
    if m.cols() != base.len() {
        return Err(Error::DimensionMismatch {
            expected: base.len(),
            found: m.cols(),
        });
    }
    for i in 0..m.rows() {
        if checked_dot(base, m.row(i))? != 0 {
            return Ok(false);
        }
    }
    Ok(m.column_sums()?.is_zero())
}

/// The map σ: pads every row with zero columns up to width `n`.
pub fn embed_zero_columns(u: &IntMat, n: usize) -> Result<IntMat> {
    if n < u.cols() {
        return Err(Error::DimensionMismatch {
            expected: u.cols(),
            found: n,
        });
    }
    let mut out = IntMat::zeros(u.rows(), n);
    for i in 0..u.rows() {
        for (j, &x) in u.row(i).iter().enumerate() {
            out.set(i, j, x);
        }
    }
    Ok(out)
}

/// The map π: keeps the first `s` columns.
pub fn project_columns(v: &IntMat, s: usize) -> Result<IntMat> {
    if s > v.cols() {
        return Err(Error::DimensionMismatch {
            expected: v.cols(),
            found: s,
        });
    }
    let mut out = IntMat::zeros(v.rows(), s);
    for i in 0..v.rows() {
        for j in 0..s {
            out.set(i, j, v.get(i, j));
        }
    }
    Ok(out)
}

/// True iff the columns π drops are all zero.
pub fn dropped_columns_zero(v: &IntMat, s: usize) -> bool {
    (0..v.rows()).all(|i| v.row(i)[s.min(v.cols())..].iter().all(|&x| x == 0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub r: usize,
    pub basis_size: usize,
    pub max_type: usize,
    pub wall_time_secs: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    pub curve: Vec<i64>,
    pub per_r: Vec<ProfileRow>,
    /// Largest type seen; `m(A)` is at least this.
    pub complexity_lower_bound: usize,
    /// The first `r` that did not finish, and why.
    pub truncated_at: Option<(usize, String)>,
}

/// Minimal Markov bases of `A⁽ʳ⁾` for `r = 2..=rmax`, stopping at the first
/// `r` that runs out of budget.
pub fn complexity_profile(c: &Configuration, rmax: usize, budget: &Budget) -> Result<ComplexityProfile> {
    let base = curve_of(c)?.to_vec();
    if rmax < 2 {
        return Err(Error::InvalidArgument(format!("rmax must be at least 2, got {rmax}")));
    }
    let mut profile = ComplexityProfile {
        curve: base.clone(),
        per_r: Vec::new(),
        complexity_lower_bound: 0,
        truncated_at: None,
    };
    for r in 2..=rmax {
        let started = Instant::now();
        let lifted = lift(c, r)?;
        match minimal_markov_basis_with(&lifted, DegreeSource::Auto, budget) {
            Ok(m) => {
                let max_type = m.moves.iter().map(|mv| move_type(mv, base.len())).max().unwrap_or(0);
                profile.complexity_lower_bound = profile.complexity_lower_bound.max(max_type);
                profile.per_r.push(ProfileRow {
                    r,
                    basis_size: m.len(),
                    max_type,
                    wall_time_secs: started.elapsed().as_secs_f64(),
                });
            }
            Err(e @ (Error::TruncatedFiber { .. } | Error::CompletionBudget(_) | Error::TimeBudget)) => {
                profile.truncated_at = Some((r, e.to_string()));
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(profile)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionCheck {
    pub prefix: usize,
    pub r: usize,
    /// `|M(B⁽ʳ⁾)|`
    pub restricted_size: usize,
    /// Elements of `M(A⁽ʳ⁾)` vanishing on the dropped columns.
    pub zero_padded_size: usize,
    pub holds: bool,
}

/// Compares `σ(M(B⁽ʳ⁾))` with the elements of `M(A⁽ʳ⁾)` whose dropped
/// columns vanish, where `B` is the first `s` entries of `A`.
pub fn check_restriction(c: &Configuration, s: usize, r: usize, budget: &Budget) -> Result<RestrictionCheck> {
    let a = curve_of(c)?;
    let n = a.len();
    if s == 0 || s > n {
        return Err(Error::InvalidArgument(format!("prefix length {s} outside 1..={n}")));
    }
    let b = Configuration::curve(&a[..s])?;
    let ma = universal_markov_basis_by_degrees(&lift(c, r)?, budget)?;
    let mb = universal_markov_basis_by_degrees(&lift(&b, r)?, budget)?;
    let mut lifted: Vec<Move> = mb
        .moves
        .iter()
        .map(|m| {
            let padded = embed_zero_columns(&IntMat::from_flat(r, s, m.vector())?, n)?;
            Ok(Move::new(padded.to_vec()))
        })
        .collect::<Result<_>>()?;
    lifted.sort();
    let mut zero_padded: Vec<Move> = Vec::new();
    for m in &ma.moves {
        if dropped_columns_zero(&IntMat::from_flat(r, n, m.vector())?, s) {
            zero_padded.push(m.clone());
        }
    }
    zero_padded.sort();
    Ok(RestrictionCheck {
        prefix: s,
        r,
        restricted_size: lifted.len(),
        zero_padded_size: zero_padded.len(),
        holds: lifted == zero_padded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: &[i64]) -> Configuration {
        Configuration::curve(a).unwrap()
    }

    #[test]
    fn lifting_shapes() {
        let l = lift(&curve(&[1, 5, 20, 24]), 2).unwrap();
        assert_eq!((l.matrix().rows(), l.matrix().cols()), (6, 8));
        let l = lift(&curve(&[1, 1]), 2).unwrap();
        assert_eq!((l.matrix().rows(), l.matrix().cols()), (4, 4));
        assert!(l.column_weights().iter().all(|&w| w == 1));
        let l = lift(&curve(&[1, 3, 6, 8]), 3).unwrap();
        assert_eq!((l.matrix().rows(), l.matrix().cols()), (7, 12));
        assert!(lift(&curve(&[1, 2]), 1).is_err());
        assert!(lift(&l, 2).is_err());
    }

    #[test]
    fn types() {
        assert_eq!(type_of(&IntMat::zeros(3, 4)), 0);
        let m = IntMat::from_rows(&[vec![1, -1], vec![0, 0], vec![-1, 1]]).unwrap();
        assert_eq!(type_of(&m), 2);
        assert_eq!(LiftedMove::new(&[1, 1], m).unwrap().kind_type, 2);
        let bad = IntMat::from_rows(&[vec![1, -1], vec![1, -1]]).unwrap();
        assert!(LiftedMove::new(&[1, 1], bad).is_err());
    }

    #[test]
    fn sigma_and_pi() {
        let u = IntMat::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap();
        let s = embed_zero_columns(&u, 3).unwrap();
        assert_eq!(s.row(0), &[1, -1, 0]);
        assert!(s.column_sums().unwrap().is_zero());
        assert_eq!(project_columns(&s, 2).unwrap(), u);
        assert!(dropped_columns_zero(&s, 2));
        let v = IntMat::from_rows(&[vec![1, 0, -1], vec![-1, 0, 1]]).unwrap();
        assert!(!dropped_columns_zero(&v, 2));
    }

    #[test]
    fn small_profiles() {
        let p = complexity_profile(&curve(&[1, 1]), 2, &Budget::sequential()).unwrap();
        assert_eq!(p.per_r[0].max_type, 2);
        assert_eq!(p.complexity_lower_bound, 2);
        let p = complexity_profile(&curve(&[1, 5, 20, 24]), 3, &Budget::sequential()).unwrap();
        let rows: Vec<_> = p.per_r.iter().map(|x| (x.r, x.basis_size, x.max_type)).collect();
        assert_eq!(rows, vec![(2, 46, 2), (3, 174, 3)]);
    }

    #[test]
    fn vacuous_restriction() {
        let chk = check_restriction(&curve(&[1, 2]), 1, 2, &Budget::sequential()).unwrap();
        assert!(chk.holds);
        assert_eq!(chk.restricted_size, 0);
    }
}
