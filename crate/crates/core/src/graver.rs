//! Graver bases: the ⊑-minimal nonzero elements of `L(A)`.
//!
//! [`graver_basis`] runs a completion procedure: starting from a
//! generating set, sums of pairs are reduced conformally against the
//! current set and every nonzero remainder is added, until all pairs
//! reduce to zero. [`graver_oracle_box`] is an independent brute-force
//! enumeration used to cross-check it.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use crate::budget::{par_map, Budget};
use crate::configuration::{ConfigKind, Configuration};
use crate::error::{Error, Result};
use crate::intcore::{conformal_leq_slice, IntVec, Move};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraverBasis {
    /// Canonical representatives, sorted.
    pub moves: Vec<Move>,
    pub config_digest: String,
}

impl GraverBasis {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn contains(&self, m: &Move) -> bool {
        self.moves.binary_search(m).is_ok()
    }

    /// Largest absolute coordinate over all moves.
    pub fn max_abs_entry(&self) -> i64 {
        self.moves
            .iter()
            .flat_map(|m| m.as_slice().iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }
}

/// Repeatedly subtracts any `±g` with `±g ⊑ s` until none applies.
pub fn normal_form(s: &IntVec, g: &[Move]) -> Result<IntVec> {
    let mut s = s.as_slice().to_vec();
    'outer: loop {
        if s.iter().all(|&x| x == 0) {
            break;
        }
        for m in g {
            let m = m.as_slice();
            if m.len() != s.len() {
                return Err(Error::DimensionMismatch {
                    expected: s.len(),
                    found: m.len(),
                });
            }
            if m.iter().all(|&x| x == 0) {
                continue;
            }
            for sign in [1i64, -1] {
                if conformal_leq_signed(m, sign, &s) {
                    subtract_max_multiple(&mut s, m, sign)?;
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(IntVec::new(s))
}

fn conformal_leq_signed(g: &[i64], sign: i64, s: &[i64]) -> bool {
    g.iter().zip(s).all(|(&gi, &si)| {
        let gi = gi * sign;
        if gi > 0 {
            si >= gi
        } else if gi < 0 {
            si <= gi
        } else {
            true
        }
    })
}

/// `s -= k·sign·g` for the largest `k` keeping `k·sign·g ⊑ s`.
fn subtract_max_multiple(s: &mut [i64], g: &[i64], sign: i64) -> Result<()> {
    subtract_max_multiple_on(s, g, sign, s.len())
}

/// As [`subtract_max_multiple`], with `k` fixed by the first `prefix`
/// coordinates only.
fn subtract_max_multiple_on(s: &mut [i64], g: &[i64], sign: i64, prefix: usize) -> Result<()> {
    let k = g[..prefix]
        .iter()
        .zip(s[..prefix].iter())
        .filter(|(&gi, _)| gi != 0)
        .map(|(&gi, &si)| si / (gi * sign))
        .min()
        .unwrap_or(0);
    for (si, &gi) in s.iter_mut().zip(g) {
        let step = gi
            .checked_mul(sign * k)
            .ok_or(Error::Overflow("normal form"))?;
        *si = si.checked_sub(step).ok_or(Error::Overflow("normal form"))?;
    }
    Ok(())
}

/// Ternary trie over sign patterns, used to find conformal reducers.
struct SignTrie {
    dim: usize,
    /// children[node] = [zero, positive, negative]
    children: Vec<[u32; 3]>,
    leaves: HashMap<u32, Vec<u32>>,
}

const NONE: u32 = u32::MAX;

impl SignTrie {
    fn new(dim: usize) -> Self {
        SignTrie {
            dim,
            children: vec![[NONE; 3]],
            leaves: HashMap::new(),
        }
    }

    fn insert(&mut self, v: &[i64], id: u32) {
        let mut node = 0u32;
        for &x in &v[..self.dim] {
            let slot = sign_slot(x);
            let next = self.children[node as usize][slot];
            node = if next == NONE {
                self.children.push([NONE; 3]);
                let id = (self.children.len() - 1) as u32;
                self.children[node as usize][slot] = id;
                id
            } else {
                next
            };
        }
        self.leaves.entry(node).or_default().push(id);
    }

    /// Some element `e` (and a sign) with `sign·e ⊑ s`, skipping `exclude`.
    fn find_reducer(&self, elems: &[Vec<i64>], s: &[i64], exclude: Option<u32>) -> Option<(u32, i64)> {
        for sign in [1i64, -1] {
            if let Some(id) = self.search(0, 0, elems, s, sign, exclude) {
                return Some((id, sign));
            }
        }
        None
    }

    fn search(
        &self,
        node: u32,
        depth: usize,
        elems: &[Vec<i64>],
        s: &[i64],
        sign: i64,
        exclude: Option<u32>,
    ) -> Option<u32> {
        if depth == self.dim {
            let ids = self.leaves.get(&node)?;
            return ids
                .iter()
                .copied()
                .find(|&id| {
                    Some(id) != exclude
                        && conformal_leq_signed(&elems[id as usize][..self.dim], sign, &s[..self.dim])
                });
        }
        let kids = self.children[node as usize];
        let x = s[depth] * sign;
        if kids[0] != NONE {
            if let Some(found) = self.search(kids[0], depth + 1, elems, s, sign, exclude) {
                return Some(found);
            }
        }
        let slot = if x > 0 {
            1
        } else if x < 0 {
            2
        } else {
            return None;
        };
        if kids[slot] != NONE {
            return self.search(kids[slot], depth + 1, elems, s, sign, exclude);
        }
        None
    }
}

fn sign_slot(x: i64) -> usize {
    match x.signum() {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

/// Working set of a completion: elements plus their reducer index.
struct Completion {
    elems: Vec<Vec<i64>>,
    trie: SignTrie,
}

impl Completion {
    fn new(dim: usize) -> Self {
        Completion {
            elems: Vec::new(),
            trie: SignTrie::new(dim),
        }
    }

    /// Conformal reduction on the first `trie.dim` coordinates; the
    /// remaining coordinates are carried along.
    fn reduce(&self, s: &mut [i64]) -> Result<()> {
        let p = self.trie.dim;
        while s[..p].iter().any(|&x| x != 0) {
            match self.trie.find_reducer(&self.elems, s, None) {
                Some((id, sign)) => subtract_max_multiple_on(s, &self.elems[id as usize], sign, p)?,
                None => break,
            }
        }
        Ok(())
    }

    fn push(&mut self, v: Vec<i64>) -> u32 {
        let id = self.elems.len() as u32;
        self.trie.insert(&v, id);
        self.elems.push(v);
        id
    }
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: i64,
    norm: i64,
    i: u32,
    j: u32,
    /// 0 for `e_i + e_j`, 1 for `e_i − e_j`
    minus: u8,
}

/// Graver basis by completion.
pub fn graver_basis(c: &Configuration) -> Result<GraverBasis> {
    graver_basis_with(c, &Budget::default())
}

pub fn graver_basis_with(c: &Configuration, budget: &Budget) -> Result<GraverBasis> {
    let moves = match c.kind() {
        ConfigKind::Lawrence { base, r } => lawrence_graver(base, *r, budget)?,
        _ => sieve_minimal(complete(c, generating_set(c)?, budget)?, budget),
    };
    Ok(GraverBasis {
        moves,
        config_digest: c.digest(),
    })
}

/// Graver basis by plain completion from a generating set, regardless of
/// the configuration kind. Lawrence liftings use project-and-lift in
/// [`graver_basis`]; this route is kept as an independent cross-check.
pub fn graver_basis_by_completion(c: &Configuration, budget: &Budget) -> Result<GraverBasis> {
    let moves = sieve_minimal(complete(c, generating_set(c)?, budget)?, budget);
    Ok(GraverBasis {
        moves,
        config_digest: c.digest(),
    })
}

/// A generating set of `L(A)`. Lawrence liftings use `b` in row `i` and
/// `−b` in row `j` for every kernel vector `b` of the curve and `i < j`.
fn generating_set(c: &Configuration) -> Result<Vec<Vec<i64>>> {
    match c.kind() {
        ConfigKind::Lawrence { base, r } => {
            let curve = Configuration::curve(base)?;
            let n = base.len();
            let mut out = Vec::new();
            for b in curve.kernel_basis()?.vectors {
                for i in 0..*r {
                    for j in i + 1..*r {
                        let mut v = vec![0; r * n];
                        v[i * n..(i + 1) * n].copy_from_slice(b.as_slice());
                        for (k, &x) in b.as_slice().iter().enumerate() {
                            v[j * n + k] = -x;
                        }
                        out.push(v);
                    }
                }
            }
            Ok(out)
        }
        _ => Ok(c
            .kernel_basis()?
            .vectors
            .into_iter()
            .map(|m| m.into_vector().into_inner())
            .collect()),
    }
}

fn complete(c: &Configuration, seeds: Vec<Vec<i64>>, budget: &Budget) -> Result<Vec<Vec<i64>>> {
    let dim = c.dim();
    let mut work = Completion::new(dim);
    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let mut processed = 0usize;

    let admit = |work: &mut Completion, heap: &mut BinaryHeap<Reverse<PairKey>>, v: Vec<i64>| -> Result<()> {
        let v = canonical(v);
        let id = work.push(v);
        let f = &work.elems[id as usize];
        for j in 0..id {
            let g = &work.elems[j as usize];
            for minus in [0u8, 1] {
                let sign = if minus == 0 { 1 } else { -1 };
                // sign-compatible sums reduce to zero immediately
                if !has_cancellation(f, g, sign) {
                    continue;
                }
                let sum = add_signed(f, g, sign)?;
                heap.push(Reverse(PairKey {
                    degree: plus_degree(c, &sum)?,
                    norm: sum.iter().map(|x| x.abs()).sum(),
                    i: id,
                    j,
                    minus,
                }));
            }
        }
        Ok(())
    };

    for mut s in seeds {
        work.reduce(&mut s)?;
        if s.iter().any(|&x| x != 0) {
            admit(&mut work, &mut heap, s)?;
        }
    }

    while let Some(Reverse(first)) = heap.pop() {
        // reduce a batch of equal-degree sums against the current set
        let mut batch = vec![first];
        while let Some(Reverse(next)) = heap.peek() {
            if next.degree != batch[0].degree || batch.len() >= 4096 {
                break;
            }
            batch.push(heap.pop().expect("peeked").0);
        }
        processed += batch.len();
        if processed > budget.max_completion {
            return Err(Error::CompletionBudget(budget.max_completion));
        }
        let reduced: Vec<Result<Vec<i64>>> = par_map(budget, &batch, |k| {
            let sign = if k.minus == 0 { 1 } else { -1 };
            let mut s = add_signed(&work.elems[k.i as usize], &work.elems[k.j as usize], sign)?;
            work.reduce(&mut s)?;
            Ok(s)
        });
        for s in reduced {
            let mut s = s?;
            if s.iter().all(|&x| x == 0) {
                continue;
            }
            // earlier members of this batch may reduce it further
            work.reduce(&mut s)?;
            if s.iter().any(|&x| x != 0) {
                admit(&mut work, &mut heap, s)?;
            }
        }
    }
    Ok(work.elems)
}

fn canonical(mut v: Vec<i64>) -> Vec<i64> {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

fn has_cancellation(f: &[i64], g: &[i64], sign: i64) -> bool {
    f.iter().zip(g).any(|(&a, &b)| a * b * sign < 0)
}

fn add_signed(f: &[i64], g: &[i64], sign: i64) -> Result<Vec<i64>> {
    f.iter()
        .zip(g)
        .map(|(&a, &b)| {
            b.checked_mul(sign)
                .and_then(|b| a.checked_add(b))
                .ok_or(Error::Overflow("completion sum"))
        })
        .collect()
}

fn plus_degree(c: &Configuration, v: &[i64]) -> Result<i64> {
    c.column_weights()
        .iter()
        .zip(v)
        .filter(|(_, &x)| x > 0)
        .try_fold(0i64, |acc, (&w, &x)| {
            w.checked_mul(x)
                .and_then(|p| acc.checked_add(p))
                .ok_or(Error::Overflow("degree"))
        })
}

/// Graver basis of the `r`-th Lawrence lifting by project-and-lift.
///
/// Dropping the last row is injective on `L(A⁽ʳ⁾)` and maps it onto
/// `L(A)^(r−1)`, whose Graver basis is `G(A)` placed in a single row. Each
/// coordinate of the last row is then lifted by a completion that only
/// pairs elements sign-compatible on the lifted prefix and of opposite
/// sign on the new coordinate.
fn lawrence_graver(base: &[i64], r: usize, budget: &Budget) -> Result<Vec<Move>> {
    let curve = Configuration::curve(base)?;
    let row_basis = graver_basis_with(&curve, budget)?;
    let n = base.len();
    let dim = r * n;
    let mut elems = Vec::with_capacity(row_basis.len() * (r - 1));
    for m in &row_basis.moves {
        for i in 0..r - 1 {
            let mut v = vec![0; dim];
            for (j, &x) in m.as_slice().iter().enumerate() {
                v[i * n + j] = x;
                v[(r - 1) * n + j] = -x;
            }
            elems.push(v);
        }
    }
    let mut processed = 0;
    for d in (r - 1) * n..dim {
        elems = lift_coordinate(elems, d, budget, &mut processed)?;
    }
    let mut moves: Vec<Move> = elems
        .into_iter()
        .map(|v| Move::new(IntVec::new(v)))
        .collect();
    moves.sort();
    moves.dedup();
    Ok(moves)
}

/// Lifts the Graver basis of the projection onto coordinates `..d` to the
/// projection onto `..=d`. Elements are carried as full lattice vectors.
fn lift_coordinate(
    start: Vec<Vec<i64>>,
    d: usize,
    budget: &Budget,
    processed: &mut usize,
) -> Result<Vec<Vec<i64>>> {
    let prefix = d + 1;
    let mut work = Completion::new(prefix);
    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();

    let admit = |work: &mut Completion, heap: &mut BinaryHeap<Reverse<PairKey>>, v: Vec<i64>| -> Result<()> {
        let id = work.push(canonical(v));
        let f = &work.elems[id as usize];
        if f[d] == 0 {
            return Ok(());
        }
        for j in 0..id {
            let g = &work.elems[j as usize];
            if g[d] == 0 {
                continue;
            }
            // choose the sign of g opposite to f on coordinate d
            let sign = if f[d] * g[d] < 0 { 1 } else { -1 };
            if f[..d].iter().zip(&g[..d]).any(|(&a, &b)| a * b * sign < 0) {
                continue;
            }
            let sum = add_signed(&f[..prefix], &g[..prefix], sign)?;
            heap.push(Reverse(PairKey {
                degree: sum.iter().map(|x| x.abs()).sum(),
                norm: 0,
                i: id,
                j,
                minus: u8::from(sign < 0),
            }));
        }
        Ok(())
    };

    for v in start {
        admit(&mut work, &mut heap, v)?;
    }
    while let Some(Reverse(first)) = heap.pop() {
        let mut batch = vec![first];
        while let Some(Reverse(next)) = heap.peek() {
            if next.degree != batch[0].degree || batch.len() >= 4096 {
                break;
            }
            batch.push(heap.pop().expect("peeked").0);
        }
        *processed += batch.len();
        if *processed > budget.max_completion {
            return Err(Error::CompletionBudget(budget.max_completion));
        }
        let reduced: Vec<Result<Vec<i64>>> = par_map(budget, &batch, |k| {
            let sign = if k.minus == 0 { 1 } else { -1 };
            let mut s = add_signed(&work.elems[k.i as usize], &work.elems[k.j as usize], sign)?;
            work.reduce(&mut s)?;
            Ok(s)
        });
        for s in reduced {
            let mut s = s?;
            if s[..prefix].iter().all(|&x| x == 0) {
                continue;
            }
            work.reduce(&mut s)?;
            if s[..prefix].iter().any(|&x| x != 0) {
                admit(&mut work, &mut heap, s)?;
            }
        }
    }
    // keep the ⊑-minimal elements on the prefix
    let trie = &work.trie;
    let ids: Vec<usize> = (0..work.elems.len()).collect();
    let keep = par_map(budget, &ids, |&i| {
        trie.find_reducer(&work.elems, &work.elems[i], Some(i as u32)).is_none()
    });
    Ok(work
        .elems
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(e, _)| e)
        .collect())
}

/// Keeps the elements not conformally dominated by another one.
fn sieve_minimal(elems: Vec<Vec<i64>>, budget: &Budget) -> Vec<Move> {
    let mut elems: Vec<Vec<i64>> = elems.into_iter().map(canonical).collect();
    elems.sort();
    elems.dedup();
    let dim = elems.first().map_or(0, Vec::len);
    let mut trie = SignTrie::new(dim);
    for (i, e) in elems.iter().enumerate() {
        trie.insert(e, i as u32);
    }
    let ids: Vec<usize> = (0..elems.len()).collect();
    let keep = par_map(budget, &ids, |&i| {
        trie.find_reducer(&elems, &elems[i], Some(i as u32)).is_none()
    });
    elems
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(e, _)| Move::new(IntVec::new(e)))
        .collect()
}

/// All nonzero lattice elements with every coordinate in `[−K, K]` that are
/// ⊑-minimal among themselves, which is exactly `G(A)` intersected with
/// the box.
///
/// Points `t ∈ [0, K]^n` are grouped by A-degree; every pair of points
/// with disjoint supports in a common group gives a lattice element.
pub fn graver_oracle_box(c: &Configuration, k: i64) -> Result<GraverBasis> {
    graver_oracle_box_with(c, k, &Budget::default())
}

pub fn graver_oracle_box_with(c: &Configuration, k: i64, budget: &Budget) -> Result<GraverBasis> {
    if k < 1 {
        return Err(Error::InvalidArgument("box radius must be at least 1".into()));
    }
    let n = c.dim();
    let side = (k + 1) as u128;
    let total = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(side));
    match total {
        Some(t) if t <= budget.max_fiber as u128 => {}
        _ => {
            return Err(Error::InvalidArgument(format!(
                "box [0,{k}]^{n} exceeds the point budget of {}",
                budget.max_fiber
            )))
        }
    }
    let mut by_degree: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    let mut t = vec![0i64; n];
    loop {
        let d = c.matrix().mul_vec(&IntVec::new(t.clone()))?.into_inner();
        by_degree.entry(d).or_default().push(t.clone());
        // odometer
        let mut j = 0;
        while j < n && t[j] == k {
            t[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        t[j] += 1;
    }
    let groups: Vec<Vec<Vec<i64>>> = by_degree.into_values().filter(|g| g.len() > 1).collect();
    let found: Vec<Vec<Vec<i64>>> = par_map(budget, &groups, |pts| {
        let mut out = Vec::new();
        for (a, p) in pts.iter().enumerate() {
            for q in &pts[a + 1..] {
                if p.iter().zip(q).any(|(x, y)| *x > 0 && *y > 0) {
                    continue;
                }
                let u: Vec<i64> = p.iter().zip(q).map(|(x, y)| x - y).collect();
                if is_primitive_in_box(c, &u) {
                    out.push(canonical(u));
                }
            }
        }
        out
    });
    let mut moves: Vec<Move> = found
        .into_iter()
        .flatten()
        .map(|u| Move::new(IntVec::new(u)))
        .collect();
    moves.sort();
    moves.dedup();
    Ok(GraverBasis {
        moves,
        config_digest: c.digest(),
    })
}

/// No `0 ≠ x ≤ u⁺`, `y ≤ u⁻` with `A·x = A·y` other than `(u⁺, u⁻)` itself.
fn is_primitive_in_box(c: &Configuration, u: &[i64]) -> bool {
    let plus: Vec<i64> = u.iter().map(|&x| x.max(0)).collect();
    let minus: Vec<i64> = u.iter().map(|&x| (-x).max(0)).collect();
    let below = |top: &[i64]| -> BTreeMap<Vec<i64>, Vec<Vec<i64>>> {
        let mut map: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
        let mut t = vec![0i64; top.len()];
        loop {
            let d = c
                .matrix()
                .mul_vec(&IntVec::new(t.clone()))
                .expect("box entries are small")
                .into_inner();
            map.entry(d).or_default().push(t.clone());
            let mut j = 0;
            while j < top.len() && t[j] == top[j] {
                t[j] = 0;
                j += 1;
            }
            if j == top.len() {
                break;
            }
            t[j] += 1;
        }
        map
    };
    let xs = below(&plus);
    let ys = below(&minus);
    for (d, xlist) in &xs {
        if d.iter().all(|&x| x == 0) {
            continue;
        }
        if let Some(ylist) = ys.get(d) {
            for x in xlist {
                for y in ylist {
                    if !(x == &plus && y == &minus) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True when no element of `moves` is conformally below another one
/// (under either sign).
pub fn is_conformally_minimal(moves: &[Move]) -> bool {
    for (i, a) in moves.iter().enumerate() {
        for (j, b) in moves.iter().enumerate() {
            if i == j {
                continue;
            }
            let a = a.as_slice();
            let b = b.as_slice();
            if conformal_leq_slice(a, b) || conformal_leq_signed(a, -1, b) {
                return false;
            }
        }
    }
    true
}
