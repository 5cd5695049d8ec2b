//! Generating sets of toric ideals of Lawrence liftings.
//!
//! Dropping the last row maps `L(A⁽ʳ⁾)` injectively onto `L(A)^(r−1)`,
//! whose Markov bases are unions of per-row Markov bases of `A`. The last
//! row is then recovered one coordinate at a time: lifting a generating set
//! of the projection gives an ideal whose saturation by the new variable is
//! the lattice ideal of the next projection, and that saturation is a
//! Gröbner basis in graded reverse lexicographic order with the new
//! variable smallest, computed here in vector form.
//!
//! Only the degrees of the result matter downstream: every minimal
//! generator of a graded ideal has the degree of some member of any
//! homogeneous generating set.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::intcore::IntVec;

/// A homogeneous generating set of the toric ideal of the `r`-th Lawrence
/// lifting of `base`, given a Markov basis `row_markov` of `base` itself.
pub fn lawrence_generating_set(
    base: &[i64],
    r: usize,
    row_markov: &[IntVec],
    budget: &Budget,
) -> Result<Vec<IntVec>> {
    let n = base.len();
    let dim = r * n;
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for m in row_markov {
        for i in 0..r - 1 {
            let mut v = vec![0; dim];
            for (j, &x) in m.as_slice().iter().enumerate() {
                v[i * n + j] = x;
                v[(r - 1) * n + j] = -x;
            }
            gens.push(v);
        }
    }
    let mut processed = 0usize;
    for d in (r - 1) * n..dim {
        let prefix = d + 1;
        let weights = projected_grading(base, r, prefix);
        let mut gb = Groebner::new(prefix, weights);
        gens = gb.saturate(gens, budget, &mut processed)?;
    }
    Ok(gens.into_iter().map(IntVec::new).collect())
}

/// A strictly positive grading that is constant on fibers of the projection
/// of `L(A⁽ʳ⁾)` onto its first `prefix` coordinates: the row degrees of the
/// first `r − 1` rows plus the column sums of every column whose last-row
/// entry is kept.
fn projected_grading(base: &[i64], r: usize, prefix: usize) -> Vec<i64> {
    let n = base.len();
    let kept = prefix - (r - 1) * n;
    (0..prefix)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            if i < r - 1 {
                base[j] + i64::from(j < kept)
            } else {
                1
            }
        })
        .collect()
}

/// Vector-form Buchberger completion over the first `prefix` coordinates.
struct Groebner {
    prefix: usize,
    weights: Vec<i64>,
    /// Oriented so the positive part is the leading term.
    elems: Vec<Vec<i64>>,
    index: LeadIndex,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    degree: i64,
    i: u32,
    j: u32,
}

impl Groebner {
    fn new(prefix: usize, weights: Vec<i64>) -> Self {
        Groebner {
            prefix,
            weights,
            elems: Vec::new(),
            index: LeadIndex::new(prefix),
        }
    }

    /// Grevlex orientation: the last nonzero prefix entry is negative.
    fn orient(&self, v: &mut [i64]) {
        if let Some(&x) = v[..self.prefix].iter().rev().find(|&&x| x != 0) {
            if x > 0 {
                v.iter_mut().for_each(|y| *y = -*y);
            }
        }
    }

    fn is_zero(&self, v: &[i64]) -> bool {
        v[..self.prefix].iter().all(|&x| x == 0)
    }

    /// Leading-term reduction to normal form.
    fn reduce(&self, v: &mut [i64]) -> Result<()> {
        loop {
            if self.is_zero(v) {
                return Ok(());
            }
            self.orient(v);
            let Some(id) = self.index.find_divisor(&self.elems, v) else {
                return Ok(());
            };
            let g = &self.elems[id as usize];
            for (x, y) in v.iter_mut().zip(g) {
                *x = x.checked_sub(*y).ok_or(Error::Overflow("Gröbner reduction"))?;
            }
        }
    }

    fn lcm_degree(&self, a: &[i64], b: &[i64]) -> i64 {
        (0..self.prefix)
            .map(|k| self.weights[k] * a[k].max(0).max(b[k].max(0)))
            .sum()
    }

    fn saturate(
        &mut self,
        input: Vec<Vec<i64>>,
        budget: &Budget,
        processed: &mut usize,
    ) -> Result<Vec<Vec<i64>>> {
        let mut heap: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
        let mut pending: HashSet<(u32, u32)> = HashSet::new();
        for mut v in input {
            self.reduce(&mut v)?;
            if !self.is_zero(&v) {
                self.admit(v, &mut heap, &mut pending);
            }
        }
        while let Some(Reverse(p)) = heap.pop() {
            pending.remove(&(p.i, p.j));
            *processed += 1;
            if *processed > budget.max_completion {
                return Err(Error::CompletionBudget(budget.max_completion));
            }
            if processed.is_multiple_of(4096) {
                budget.check_deadline()?;
            }
            if self.chain_criterion(p.i, p.j, &pending) {
                continue;
            }
            let a = &self.elems[p.i as usize];
            let b = &self.elems[p.j as usize];
            let mut s: Vec<i64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
            self.reduce(&mut s)?;
            if !self.is_zero(&s) {
                self.admit(s, &mut heap, &mut pending);
            }
        }
        Ok(self.minimal())
    }

    fn admit(&mut self, v: Vec<i64>, heap: &mut BinaryHeap<Reverse<Pair>>, pending: &mut HashSet<(u32, u32)>) {
        let id = self.elems.len() as u32;
        for (j, g) in self.elems.iter().enumerate() {
            // coprime leading terms: the S-vector reduces to zero
            if (0..self.prefix).all(|k| v[k] <= 0 || g[k] <= 0) {
                continue;
            }
            let degree = self.lcm_degree(&v, g);
            heap.push(Reverse(Pair {
                degree,
                i: j as u32,
                j: id,
            }));
            pending.insert((j as u32, id));
        }
        self.index.insert(&v, id);
        self.elems.push(v);
    }

    /// Skips `(i, j)` when some `f` has a leading term dividing
    /// `lcm(lead i, lead j)` and neither `(i, f)` nor `(j, f)` is pending.
    fn chain_criterion(&self, i: u32, j: u32, pending: &HashSet<(u32, u32)>) -> bool {
        let a = &self.elems[i as usize];
        let b = &self.elems[j as usize];
        let lcm: Vec<i64> = (0..self.prefix).map(|k| a[k].max(0).max(b[k].max(0))).collect();
        let key = |x: u32, y: u32| if x < y { (x, y) } else { (y, x) };
        self.index.any_divisor(&self.elems, &lcm, |f| {
            f != i && f != j && !pending.contains(&key(i, f)) && !pending.contains(&key(j, f))
        })
    }

    /// Drops elements whose leading term is divisible by another's.
    fn minimal(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for (id, e) in self.elems.iter().enumerate() {
            let lead: Vec<i64> = e[..self.prefix].iter().map(|&x| x.max(0)).collect();
            if !seen.insert(lead.clone()) {
                continue;
            }
            let redundant = self.index.any_divisor(&self.elems, &lead, |f| {
                if f as usize == id {
                    return false;
                }
                let g = &self.elems[f as usize];
                // equal leading terms: keep the first
                let equal = (0..self.prefix).all(|k| g[k].max(0) == lead[k]);
                !equal || (f as usize) < id
            });
            if !redundant {
                out.push(e.clone());
            }
        }
        out
    }
}

/// Binary trie over the supports of leading terms.
struct LeadIndex {
    prefix: usize,
    children: Vec<[u32; 2]>,
    leaves: HashMap<u32, Vec<u32>>,
}

const NONE: u32 = u32::MAX;

impl LeadIndex {
    fn new(prefix: usize) -> Self {
        LeadIndex {
            prefix,
            children: vec![[NONE; 2]],
            leaves: HashMap::new(),
        }
    }

    fn insert(&mut self, v: &[i64], id: u32) {
        let mut node = 0u32;
        for &x in &v[..self.prefix] {
            let slot = usize::from(x > 0);
            let next = self.children[node as usize][slot];
            node = if next == NONE {
                self.children.push([NONE; 2]);
                let new = (self.children.len() - 1) as u32;
                self.children[node as usize][slot] = new;
                new
            } else {
                next
            };
        }
        self.leaves.entry(node).or_default().push(id);
    }

    /// An element whose leading term divides the leading term of `v`.
    fn find_divisor(&self, elems: &[Vec<i64>], v: &[i64]) -> Option<u32> {
        let mut found = None;
        self.walk(0, 0, elems, v, &mut |id| {
            found = Some(id);
            true
        });
        found
    }

    fn any_divisor(&self, elems: &[Vec<i64>], t: &[i64], mut accept: impl FnMut(u32) -> bool) -> bool {
        self.walk(0, 0, elems, t, &mut accept)
    }

    /// Visits elements with `lead ≤ t⁺` until `visit` returns true.
    fn walk(
        &self,
        node: u32,
        depth: usize,
        elems: &[Vec<i64>],
        t: &[i64],
        visit: &mut dyn FnMut(u32) -> bool,
    ) -> bool {
        if depth == self.prefix {
            if let Some(ids) = self.leaves.get(&node) {
                for &id in ids {
                    let e = &elems[id as usize];
                    if (0..self.prefix).all(|k| e[k] <= t[k].max(0)) && visit(id) {
                        return true;
                    }
                }
            }
            return false;
        }
        let kids = self.children[node as usize];
        if kids[0] != NONE && self.walk(kids[0], depth + 1, elems, t, visit) {
            return true;
        }
        if t[depth] > 0 && kids[1] != NONE && self.walk(kids[1], depth + 1, elems, t, visit) {
            return true;
        }
        false
    }
}
