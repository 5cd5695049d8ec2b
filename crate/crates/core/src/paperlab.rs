//! The curves `A_n = (1, n, n²−n, n²−1)`, the type-`n` witness in
//! `L(A_n⁽ⁿ⁾)`, and one checker per claim about them.
//!
//! Every checker returns a [`Verdict`] carrying the evidence it looked at,
//! so a failure can be diagnosed from the report alone.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::configuration::Configuration;
use crate::error::{Error, Result};
use crate::fibers::{enumerate_lawrence_fiber, fiber_of, lawrence_degree};
use crate::intcore::{IntMat, IntVec};
use crate::lawrence::{check_restriction, complexity_profile, in_lifted_lattice, type_of, LiftedMove};
use crate::markov::minimal_markov_basis_with;

/// Sizes and largest types of minimal Markov bases of `A_5⁽ʳ⁾`, `r = 2..=7`.
pub const TABLE1: [(usize, usize, usize); 6] = [
    (2, 46, 2),
    (3, 174, 3),
    (4, 528, 4),
    (5, 1520, 5),
    (6, 4110, 6),
    (7, 10206, 6),
];

/// The two type-6 elements of `L(A_5⁽⁶⁾)`.
pub fn remark_matrices() -> [IntMat; 2] {
    let m1 = IntMat::from_rows(&[
        vec![0, 0, -6, 5],
        vec![-2, 2, -4, 3],
        vec![-2, 2, -4, 3],
        vec![-2, 2, -4, 3],
        vec![3, -3, 3, -2],
        vec![3, -3, 3, -2],
    ]);
    let m2 = IntMat::from_rows(&[
        vec![0, 0, -6, 5],
        vec![0, 0, -6, 5],
        vec![-1, 1, -5, 4],
        vec![-1, 1, -5, 4],
        vec![-1, 1, -5, 4],
        vec![3, -3, 3, -2],
    ]);
    [m1.expect("6×4"), m2.expect("6×4")]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFamilyMember {
    pub n: i64,
    pub config: Configuration,
}

impl CurveFamilyMember {
    pub fn entries(&self) -> Vec<i64> {
        self.config.curve_entries().expect("a curve").to_vec()
    }
}

/// `(1, n, n²−n, n²−1)` for `n ≥ 3`.
pub fn curve_family(n: i64) -> Result<CurveFamilyMember> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("the family starts at n = 3, got {n}")));
    }
    let sq = n.checked_mul(n).ok_or(Error::Overflow("n²"))?;
    Ok(CurveFamilyMember {
        n,
        config: Configuration::curve(&[1, n, sq - n, sq - 1])?,
    })
}

/// `A_n` followed by further entries.
pub fn extended_curve(n: i64, extras: &[i64]) -> Result<Configuration> {
    let mut entries = curve_family(n)?.entries();
    entries.extend_from_slice(extras);
    Configuration::curve(&entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub member: CurveFamilyMember,
    pub lifted: LiftedMove,
}

/// `n−2` rows `(1,−1,−1,1)`, then `(0,0,n+1,−n)` and `(2−n,n−2,−3,2)`.
pub fn witness(n: i64) -> Result<Witness> {
    let member = curve_family(n)?;
    let mut rows = vec![vec![1, -1, -1, 1]; (n - 2) as usize];
    rows.push(vec![0, 0, n + 1, -n]);
    rows.push(vec![2 - n, n - 2, -3, 2]);
    let lifted = LiftedMove::new(&member.entries(), IntMat::from_rows(&rows)?)?;
    Ok(Witness { member, lifted })
}

/// Outcome of one checker.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub params: Value,
    pub pass: bool,
    pub certificate: Value,
}

fn v(x: &[i64]) -> IntVec {
    IntVec::new(x.to_vec())
}

fn set_of(xs: impl IntoIterator<Item = IntVec>) -> BTreeSet<IntVec> {
    xs.into_iter().collect()
}

fn show(xs: &BTreeSet<IntVec>) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Pivots with `α = 0` in the fiber of `(1,−1,−1,1)` are exactly
/// `(0,1,1,0)` and `(0,n,0,0)`.
pub fn verify_lemma1(n: i64, budget: &Budget) -> Result<Verdict> {
    let a = curve_family(n)?;
    let u = v(&[1, -1, -1, 1]);
    let f = fiber_of(&a.config, &u, budget.max_fiber)?;
    f.require_complete(budget.max_fiber)?;
    let pivots = set_of(f.points.iter().filter(|t| t.as_slice()[0] == 0).cloned());
    let expected = set_of([v(&[0, 1, 1, 0]), v(&[0, n, 0, 0])]);
    let decompositions: Vec<(String, String)> = pivots
        .iter()
        .map(|t| {
            Ok((
                u.plus().checked_sub(t)?.to_string(),
                t.checked_sub(&u.minus())?.to_string(),
            ))
        })
        .collect::<Result<_>>()?;
    let expected_dec = vec![
        (v(&[1, -1, -1, 1]).to_string(), v(&[0, 0, 0, 0]).to_string()),
        (v(&[1, -n, 0, 1]).to_string(), v(&[0, n - 1, -1, 0]).to_string()),
    ];
    let pass = pivots == expected && decompositions == expected_dec;
    Ok(Verdict {
        claim: "lemma1".into(),
        params: json!({ "n": n }),
        pass,
        certificate: json!({
            "degree": f.degree.as_slice(),
            "fiber_size": f.len(),
            "pivots": show(&pivots),
            "decompositions": decompositions,
        }),
    })
}

/// Pivots with `β = 0` in the same fiber are exactly `(1,0,0,1)`,
/// `(n,0,1,0)` and `(n²,0,0,0)`.
pub fn verify_lemma2(n: i64, budget: &Budget) -> Result<Verdict> {
    let a = curve_family(n)?;
    let u = v(&[1, -1, -1, 1]);
    let f = fiber_of(&a.config, &u, budget.max_fiber)?;
    f.require_complete(budget.max_fiber)?;
    let pivots = set_of(f.points.iter().filter(|t| t.as_slice()[1] == 0).cloned());
    let expected = set_of([v(&[1, 0, 0, 1]), v(&[n, 0, 1, 0]), v(&[n * n, 0, 0, 0])]);
    let rights = set_of(
        pivots
            .iter()
            .map(|t| t.checked_sub(&u.minus()))
            .collect::<Result<Vec<_>>>()?,
    );
    let expected_rights = set_of([v(&[1, -1, -1, 1]), v(&[n, -1, 0, 0]), v(&[n * n, -1, -1, 0])]);
    Ok(Verdict {
        claim: "lemma2".into(),
        params: json!({ "n": n }),
        pass: pivots == expected && rights == expected_rights,
        certificate: json!({
            "degree": f.degree.as_slice(),
            "fiber_size": f.len(),
            "pivots": show(&pivots),
            "right_parts": show(&rights),
        }),
    })
}

/// In the fiber of `(2−n,n−2,−3,2)`, at degree `3n²−2n−2`, the only pivots
/// with `α, β ≤ n−2` are `u⁺` and `u⁻`.
pub fn verify_lemma3(n: i64, budget: &Budget) -> Result<Verdict> {
    let a = curve_family(n)?;
    let u = v(&[2 - n, n - 2, -3, 2]);
    let f = fiber_of(&a.config, &u, budget.max_fiber)?;
    f.require_complete(budget.max_fiber)?;
    let degree_ok = f.degree.as_slice() == [3 * n * n - 2 * n - 2];
    let pivots = set_of(
        f.points
            .iter()
            .filter(|t| t.as_slice()[0] <= n - 2 && t.as_slice()[1] <= n - 2)
            .cloned(),
    );
    let expected = set_of([v(&[0, n - 2, 0, 2]), v(&[n - 2, 0, 3, 0])]);
    Ok(Verdict {
        claim: "lemma3".into(),
        params: json!({ "n": n }),
        pass: degree_ok && pivots == expected,
        certificate: json!({
            "degree": f.degree.as_slice(),
            "fiber_size": f.len(),
            "pivots": show(&pivots),
        }),
    })
}

/// The Lawrence fiber through the witness's positive part is `{u⁺, u⁻}`.
pub fn verify_witness_indispensable(n: i64, budget: &Budget) -> Result<Verdict> {
    let w = witness(n)?;
    let m = &w.lifted.matrix;
    let plus = IntMat::from_flat(m.rows(), m.cols(), &m.to_vec().plus())?;
    let minus = IntMat::from_flat(m.rows(), m.cols(), &m.to_vec().minus())?;
    let f = enumerate_lawrence_fiber(&w.member.config, n as usize, &plus, budget.max_fiber)?;
    f.require_complete(budget.max_fiber)?;
    let expected = set_of([plus.to_vec(), minus.to_vec()]);
    let found = set_of(f.points.iter().cloned());
    Ok(Verdict {
        claim: "witness".into(),
        params: json!({ "n": n }),
        pass: found == expected && w.lifted.kind_type == n as usize,
        certificate: json!({
            "type": w.lifted.kind_type,
            "degree": lawrence_degree(&w.member.entries(), &plus)?.as_slice(),
            "column_totals": minus.column_sums()?.as_slice(),
            "fiber_size": f.len(),
            "fiber": show(&found),
        }),
    })
}

/// Minimal Markov bases of `A_5⁽ʳ⁾` for `r ≤ rmax` against [`TABLE1`].
/// Rows that did not finish within `budget` are reported, not failed.
pub fn table1(rmax: usize, budget: &Budget) -> Result<Verdict> {
    if !(2..=7).contains(&rmax) {
        return Err(Error::InvalidArgument(format!("rmax must be in 2..=7, got {rmax}")));
    }
    let profile = complexity_profile(&curve_family(5)?.config, rmax, budget)?;
    let pass = profile
        .per_r
        .iter()
        .all(|row| TABLE1.iter().any(|&(r, size, t)| (r, size, t) == (row.r, row.basis_size, row.max_type)));
    Ok(Verdict {
        claim: "table1".into(),
        params: json!({ "rmax": rmax }),
        pass,
        certificate: json!({ "expected": TABLE1, "profile": profile }),
    })
}

/// Both remark matrices lie in `L(A_5⁽⁶⁾)` with type 6, and so does every
/// row permutation of them.
///
/// The matrices are checked as printed. The certificate also reports their
/// column sums and whether negating the `(0,0,−6,5)` rows repairs them,
/// since that single sign is what separates them from lattice members.
pub fn verify_remark_type6() -> Result<Verdict> {
    let printed = remark_matrices();
    let results = printed.iter().map(check_type6).collect::<Result<Vec<_>>>()?;
    let repaired = printed.iter().map(|m| check_type6(&negate_rows(m, &[0, 0, -6, 5]))).collect::<Result<Vec<_>>>()?;
    let pass = results.iter().all(|r| r["pass"] == json!(true));
    Ok(Verdict {
        claim: "remark6".into(),
        params: json!({}),
        pass,
        certificate: json!({ "printed": results, "with_rows_(0,0,6,-5)": repaired }),
    })
}

fn check_type6(m: &IntMat) -> Result<Value> {
    let base = curve_family(5)?.entries();
    let rows: Vec<Vec<i64>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let rows_in_lattice = rows.iter().all(|r| r.iter().zip(&base).map(|(x, a)| x * a).sum::<i64>() == 0);
    let mut all = true;
    let mut count = 0usize;
    for perm in permutations(rows.len()) {
        let p: Vec<Vec<i64>> = perm.iter().map(|&i| rows[i].clone()).collect();
        let pm = IntMat::from_rows(&p)?;
        all &= in_lifted_lattice(&base, &pm)? && type_of(&pm) == 6;
        count += 1;
    }
    let member = in_lifted_lattice(&base, m)?;
    Ok(json!({
        "rows_in_lattice": rows_in_lattice,
        "column_sums": m.column_sums()?.as_slice(),
        "member": member,
        "type": type_of(m),
        "permutations_checked": count,
        "all_permutations_pass": all,
        "pass": member && type_of(m) == 6 && all,
    }))
}

/// Negates every row equal to `row`.
pub fn negate_rows(m: &IntMat, row: &[i64]) -> IntMat {
    let mut out = m.clone();
    for i in 0..m.rows() {
        if m.row(i) == row {
            for (j, &x) in row.iter().enumerate() {
                out.set(i, j, -x);
            }
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for len in 0..k {
        let mut next = Vec::new();
        for p in out {
            for pos in 0..=len {
                let mut q = p.clone();
                q.insert(pos, len);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// The minimal generator count equals the kernel rank.
pub fn is_complete_intersection(entries: &[i64], budget: &Budget) -> Result<bool> {
    let c = Configuration::curve(entries)?;
    let rank = c.kernel_basis()?.rank;
    if rank == 0 {
        return Err(Error::InvalidArgument("kernel of rank 0".into()));
    }
    Ok(minimal_markov_basis_with(&c, Default::default(), budget)?.len() == rank)
}

/// Every 3-subset of `A_n` is a complete intersection, and so is `A_n`.
pub fn verify_subsets_ci(n: i64, budget: &Budget) -> Result<Verdict> {
    let a = curve_family(n)?.entries();
    let mut subsets = Vec::new();
    for skip in 0..4 {
        let t: Vec<i64> = (0..4).filter(|&i| i != skip).map(|i| a[i]).collect();
        subsets.push(json!({ "subset": t, "ci": is_complete_intersection(&t, budget)? }));
    }
    let whole = minimal_markov_basis_with(&Configuration::curve(&a)?, Default::default(), budget)?.len();
    let pass = subsets.iter().all(|s| s["ci"] == json!(true)) && whole == 3;
    Ok(Verdict {
        claim: "subsets-ci".into(),
        params: json!({ "n": n }),
        pass,
        certificate: json!({ "subsets": subsets, "minimal_generators": whole }),
    })
}

/// Restriction from `A_n` to its first three entries for `r = 2..=rmax`,
/// and from `A_n` extended by `n²+1` to `A_n` at `r = 2`.
pub fn verify_restriction(n: i64, rmax: usize, budget: &Budget) -> Result<Verdict> {
    let a = curve_family(n)?;
    let mut checks = Vec::new();
    for r in 2..=rmax {
        checks.push(check_restriction(&a.config, 3, r, budget)?);
    }
    let ext = extended_curve(n, &[n * n + 1])?;
    checks.push(check_restriction(&ext, 4, 2, budget)?);
    Ok(Verdict {
        claim: "restriction".into(),
        params: json!({ "n": n, "rmax": rmax }),
        pass: checks.iter().all(|c| c.holds),
        certificate: serde_json::to_value(&checks).map_err(|e| Error::Io(e.to_string()))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::sequential()
    }

    #[test]
    fn family_members() {
        assert_eq!(curve_family(5).unwrap().entries(), vec![1, 5, 20, 24]);
        assert_eq!(curve_family(3).unwrap().entries(), vec![1, 3, 6, 8]);
        assert_eq!(curve_family(7).unwrap().entries(), vec![1, 7, 42, 48]);
        assert!(curve_family(2).is_err());
    }

    #[test]
    fn witness_shapes() {
        let w = witness(5).unwrap();
        let m = &w.lifted.matrix;
        assert_eq!(m.row(0), &[1, -1, -1, 1]);
        assert_eq!(m.row(2), &[1, -1, -1, 1]);
        assert_eq!(m.row(3), &[0, 0, 6, -5]);
        assert_eq!(m.row(4), &[-3, 3, -3, 2]);
        let w = witness(3).unwrap();
        let rows: Vec<&[i64]> = (0..3).map(|i| w.lifted.matrix.row(i)).collect();
        assert_eq!(rows, vec![&[1, -1, -1, 1][..], &[0, 0, 4, -3], &[-1, 1, -3, 2]]);
        for n in 3..=8 {
            assert_eq!(witness(n).unwrap().lifted.kind_type, n as usize);
        }
    }

    #[test]
    fn lemmas_at_small_n() {
        for n in [3, 5] {
            assert!(verify_lemma1(n, &b()).unwrap().pass);
            assert!(verify_lemma2(n, &b()).unwrap().pass);
            assert!(verify_lemma3(n, &b()).unwrap().pass);
        }
    }

    #[test]
    fn witness_fiber_at_three() {
        let v = verify_witness_indispensable(3, &b()).unwrap();
        assert!(v.pass);
        assert_eq!(v.certificate["column_totals"], json!([1, 1, 4, 3]));
    }

    #[test]
    fn remark_matrices_as_printed() {
        let v = verify_remark_type6().unwrap();
        // the printed first rows carry the wrong sign
        assert!(!v.pass);
        assert_eq!(v.certificate["printed"][0]["column_sums"], json!([0, 0, -12, 10]));
        assert_eq!(v.certificate["printed"][0]["rows_in_lattice"], json!(true));
        for r in v.certificate["with_rows_(0,0,6,-5)"].as_array().unwrap() {
            assert_eq!(r["pass"], json!(true));
            assert_eq!(r["permutations_checked"], json!(720));
        }
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn complete_intersections() {
        assert!(!is_complete_intersection(&[3, 4, 5], &b()).unwrap());
        assert!(is_complete_intersection(&[1, 5, 20], &b()).unwrap());
        assert!(is_complete_intersection(&[5, 20, 24], &b()).unwrap());
        assert!(verify_subsets_ci(5, &b()).unwrap().pass);
    }

    #[test]
    fn extended_curves() {
        assert_eq!(extended_curve(3, &[10]).unwrap().curve_entries().unwrap(), &[1, 3, 6, 8, 10]);
        assert_eq!(extended_curve(3, &[]).unwrap(), curve_family(3).unwrap().config);
    }
}
