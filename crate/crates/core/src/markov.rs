//! Minimal, universal and indispensable Markov bases.
//!
//! Membership questions are decided on fiber graphs: two points of a fiber
//! are adjacent when their supports meet. The number of minimal generators
//! in a degree is the number of components minus one, `u` belongs to some
//! minimal Markov basis iff `u⁺` and `u⁻` lie in different components, and
//! `u` is indispensable iff its fiber is `{u⁺, u⁻}`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::budget::{par_map, Budget};
use crate::configuration::{ConfigKind, Configuration};
use crate::error::{Error, Result};
use crate::fibers::{enumerate_fiber, fiber_of, Fiber, FiberPoint};
use crate::generators::lawrence_generating_set;
use crate::graver::graver_basis_with;
use crate::intcore::{IntVec, Move};

/// Shared-support components of a fiber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberGraph {
    pub fiber: Fiber,
    /// Each component sorted; components ordered by their smallest member.
    pub components: Vec<Vec<FiberPoint>>,
}

impl FiberGraph {
    pub fn component_of(&self, t: &IntVec) -> Option<usize> {
        self.components.iter().position(|c| c.binary_search(t).is_ok())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkovKind {
    Minimal,
    Universal,
    Indispensable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkovBasis {
    /// Canonical representatives, sorted.
    pub moves: Vec<Move>,
    /// Number of moves per degree, sorted by degree.
    pub per_degree_counts: Vec<(IntVec, usize)>,
    pub kind: MarkovKind,
}

impl MarkovBasis {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn contains(&self, m: &Move) -> bool {
        self.moves.binary_search(m).is_ok()
    }

    fn from_degrees(per_degree: Vec<(IntVec, Vec<Move>)>, kind: MarkovKind) -> Self {
        let mut moves = Vec::new();
        let mut counts = BTreeMap::new();
        for (d, ms) in per_degree {
            if ms.is_empty() {
                continue;
            }
            *counts.entry(d).or_insert(0) += ms.len();
            moves.extend(ms);
        }
        moves.sort();
        moves.dedup();
        MarkovBasis {
            moves,
            per_degree_counts: counts.into_iter().collect(),
            kind,
        }
    }
}

/// Where candidate degrees come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeSource {
    /// Graver degrees for curves and general matrices, a Gröbner generating
    /// set for Lawrence liftings.
    #[default]
    Auto,
    /// Degrees of the Graver basis, always.
    Graver,
}

/// Union-find over shared support.
pub fn fiber_graph_components(f: &Fiber) -> Result<FiberGraph> {
    if f.truncated {
        return Err(Error::TruncatedFiber {
            degree: f.degree.as_slice().to_vec(),
            cap: f.points.len(),
        });
    }
    let pts = &f.points;
    let mut uf = UnionFind::new(pts.len());
    let dim = pts.first().map_or(0, IntVec::len);
    let mut owner: Vec<Option<usize>> = vec![None; dim];
    for (i, p) in pts.iter().enumerate() {
        for (j, &x) in p.as_slice().iter().enumerate() {
            if x > 0 {
                match owner[j] {
                    Some(k) => uf.union(k, i),
                    None => owner[j] = Some(i),
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<FiberPoint>> = BTreeMap::new();
    // points are sorted, so the first point seen in each group is its minimum
    let mut order: HashMap<usize, usize> = HashMap::new();
    for (i, p) in pts.iter().enumerate() {
        let root = uf.find(i);
        let key = *order.entry(root).or_insert(i);
        groups.entry(key).or_default().push(p.clone());
    }
    Ok(FiberGraph {
        fiber: f.clone(),
        components: groups.into_values().collect(),
    })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller index wins so roots are deterministic
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

fn nonzero(u: &IntVec) -> Result<()> {
    if u.as_slice().iter().all(|&x| x == 0) {
        return Err(Error::InvalidArgument("the zero vector has no fiber graph".into()));
    }
    Ok(())
}

/// True iff the fiber of `u` is exactly `{u⁺, u⁻}`.
pub fn is_indispensable(c: &Configuration, u: &IntVec, budget: &Budget) -> Result<bool> {
    nonzero(u)?;
    let f = fiber_of(c, u, budget.max_fiber)?;
    f.require_complete(budget.max_fiber)?;
    Ok(f.len() == 2)
}

/// True iff `u⁺` and `u⁻` lie in different fiber-graph components.
pub fn in_universal_markov(c: &Configuration, u: &IntVec, budget: &Budget) -> Result<bool> {
    nonzero(u)?;
    let f = fiber_of(c, u, budget.max_fiber)?;
    let g = fiber_graph_components(&f)?;
    Ok(g.component_of(&u.plus()) != g.component_of(&u.minus()))
}

/// `x > y` read as `x ≥ y` componentwise with `x ≠ y`.
fn strictly_above(x: &[i64], y: &[i64]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b) && x != y
}

/// A proper strongly semiconformal decomposition `u = u₁ + ⋯ + u_l` with
/// `2 ≤ l ≤ lmax`, if one exists.
///
/// Candidates are chains of distinct fiber points from `u⁺` to `u⁻`; each
/// step is accepted only if it satisfies the defining inequalities
/// `u⁺ > u₁⁺` and `u⁺ > (u₁ + ⋯ + u_{i−1}) + u_i⁺`. Breadth-first, so the
/// returned chain is a shortest one.
pub fn ssc_search(c: &Configuration, u: &IntVec, lmax: usize, budget: &Budget) -> Result<Option<Vec<IntVec>>> {
    if lmax < 2 {
        return Err(Error::InvalidArgument("ssc chains have at least two parts".into()));
    }
    nonzero(u)?;
    let f = fiber_of(c, u, budget.max_fiber)?;
    f.require_complete(budget.max_fiber)?;
    let up = u.plus();
    let um = u.minus();
    let pts = &f.points;
    let start = pts.binary_search(&up).expect("u⁺ lies in its fiber");
    let goal = pts.binary_search(&um).expect("u⁻ lies in its fiber");
    // accepts the step t → t' where t = u⁺ − s and s is the partial sum so far
    let step_ok = |t: &IntVec, next: &IntVec| -> bool {
        let ui: Vec<i64> = t.as_slice().iter().zip(next.as_slice()).map(|(a, b)| a - b).collect();
        if ui.iter().all(|&x| x == 0) {
            return false;
        }
        let lhs: Vec<i64> = up
            .as_slice()
            .iter()
            .zip(t.as_slice())
            .zip(&ui)
            .map(|((p, ti), x)| (p - ti) + (*x).max(0))
            .collect();
        strictly_above(up.as_slice(), &lhs)
    };
    let mut prev: Vec<Option<usize>> = vec![None; pts.len()];
    let mut depth = vec![usize::MAX; pts.len()];
    depth[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        if depth[i] >= lmax {
            continue;
        }
        for j in 0..pts.len() {
            if depth[j] != usize::MAX || !step_ok(&pts[i], &pts[j]) {
                continue;
            }
            // the one-step chain u⁺ → u⁻ is not a decomposition
            if j == goal && i == start {
                continue;
            }
            depth[j] = depth[i] + 1;
            prev[j] = Some(i);
            if j == goal {
                let mut path = vec![goal];
                let mut k = goal;
                while let Some(p) = prev[k] {
                    path.push(p);
                    k = p;
                }
                path.reverse();
                let chain = path
                    .windows(2)
                    .map(|w| pts[w[0]].checked_sub(&pts[w[1]]))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(Some(chain));
            }
            queue.push_back(j);
        }
    }
    Ok(None)
}

/// Candidate degrees: every minimal generator has one of these degrees.
pub fn candidate_degrees(c: &Configuration, source: DegreeSource, budget: &Budget) -> Result<Vec<IntVec>> {
    let vectors: Vec<IntVec> = match (c.kind(), source) {
        (ConfigKind::Lawrence { base, r }, DegreeSource::Auto) => {
            let curve = Configuration::curve(base)?;
            let rows: Vec<IntVec> = minimal_markov_basis_with(&curve, DegreeSource::Auto, budget)?
                .moves
                .into_iter()
                .map(Move::into_vector)
                .collect();
            lawrence_generating_set(base, *r, &rows, budget)?
        }
        _ => graver_basis_with(c, budget)?
            .moves
            .into_iter()
            .map(Move::into_vector)
            .collect(),
    };
    let mut degrees = BTreeSet::new();
    for v in vectors {
        degrees.insert(c.multidegree(&v.plus())?);
    }
    Ok(degrees.into_iter().collect())
}

/// Fiber-graph components at `degree`.
pub fn components_at(c: &Configuration, degree: &IntVec, budget: &Budget) -> Result<FiberGraph> {
    let f = enumerate_fiber(c, degree, budget.max_fiber, None)?;
    fiber_graph_components(&f)
}

fn minimal_moves(g: &FiberGraph) -> Result<Vec<Move>> {
    let base = &g.components[0][0];
    g.components[1..]
        .iter()
        .map(|comp| Ok(Move::new(comp[0].checked_sub(base)?)))
        .collect()
}

fn universal_moves(g: &FiberGraph) -> Result<Vec<Move>> {
    let mut out = Vec::new();
    for (a, ca) in g.components.iter().enumerate() {
        for cb in &g.components[a + 1..] {
            for p in ca {
                for q in cb {
                    out.push(Move::new(p.checked_sub(q)?));
                }
            }
        }
    }
    Ok(out)
}

/// One minimal Markov basis: per degree, the lexicographically smallest
/// point of every component minus that of the component holding the
/// fiber's smallest point.
pub fn minimal_markov_basis(c: &Configuration) -> Result<MarkovBasis> {
    minimal_markov_basis_with(c, DegreeSource::Auto, &Budget::default())
}

pub fn minimal_markov_basis_with(c: &Configuration, source: DegreeSource, budget: &Budget) -> Result<MarkovBasis> {
    let per_degree = per_degree(c, source, budget, minimal_moves)?;
    Ok(MarkovBasis::from_degrees(per_degree, MarkovKind::Minimal))
}

/// Graver elements that lie in some minimal Markov basis.
pub fn universal_markov_basis(c: &Configuration) -> Result<MarkovBasis> {
    universal_markov_basis_with(c, &Budget::default())
}

pub fn universal_markov_basis_with(c: &Configuration, budget: &Budget) -> Result<MarkovBasis> {
    let graver = graver_basis_with(c, budget)?;
    universal_from_moves(c, &graver.moves, budget)
}

/// Universal Markov basis from the fiber graphs at candidate degrees: every
/// difference of two points in different components. Agrees with
/// [`universal_markov_basis`] without computing a Graver basis.
pub fn universal_markov_basis_by_degrees(c: &Configuration, budget: &Budget) -> Result<MarkovBasis> {
    let per_degree = per_degree(c, DegreeSource::Auto, budget, universal_moves)?;
    Ok(MarkovBasis::from_degrees(per_degree, MarkovKind::Universal))
}

fn universal_from_moves(c: &Configuration, moves: &[Move], budget: &Budget) -> Result<MarkovBasis> {
    let verdicts = par_map(budget, moves, |m| -> Result<(IntVec, bool)> {
        let u = m.vector();
        Ok((c.multidegree(&u.plus())?, in_universal_markov(c, u, budget)?))
    });
    let mut per_degree: BTreeMap<IntVec, Vec<Move>> = BTreeMap::new();
    for (m, v) in moves.iter().zip(verdicts) {
        let (d, keep) = v?;
        if keep {
            per_degree.entry(d).or_default().push(m.clone());
        }
    }
    Ok(MarkovBasis::from_degrees(per_degree.into_iter().collect(), MarkovKind::Universal))
}

/// Universal elements whose fiber has exactly two points.
pub fn indispensable_set(c: &Configuration) -> Result<MarkovBasis> {
    indispensable_set_with(c, &Budget::default())
}

pub fn indispensable_set_with(c: &Configuration, budget: &Budget) -> Result<MarkovBasis> {
    let universal = universal_markov_basis_with(c, budget)?;
    indispensable_from(c, &universal, budget)
}

/// Indispensable elements via fiber graphs at candidate degrees.
pub fn indispensable_set_by_degrees(c: &Configuration, budget: &Budget) -> Result<MarkovBasis> {
    let universal = universal_markov_basis_by_degrees(c, budget)?;
    indispensable_from(c, &universal, budget)
}

fn indispensable_from(c: &Configuration, universal: &MarkovBasis, budget: &Budget) -> Result<MarkovBasis> {
    let verdicts = par_map(budget, &universal.moves, |m| -> Result<(IntVec, bool)> {
        let u = m.vector();
        Ok((c.multidegree(&u.plus())?, is_indispensable(c, u, budget)?))
    });
    let mut per_degree: BTreeMap<IntVec, Vec<Move>> = BTreeMap::new();
    for (m, v) in universal.moves.iter().zip(verdicts) {
        let (d, keep) = v?;
        if keep {
            per_degree.entry(d).or_default().push(m.clone());
        }
    }
    Ok(MarkovBasis::from_degrees(
        per_degree.into_iter().collect(),
        MarkovKind::Indispensable,
    ))
}

/// Applies `moves_at` to the fiber graph of every candidate degree.
/// Lawrence liftings visit one degree per orbit of row permutations and
/// transport the result to the other arrangements.
fn per_degree(
    c: &Configuration,
    source: DegreeSource,
    budget: &Budget,
    moves_at: fn(&FiberGraph) -> Result<Vec<Move>>,
) -> Result<Vec<(IntVec, Vec<Move>)>> {
    let degrees = candidate_degrees(c, source, budget)?;
    match c.kind() {
        ConfigKind::Lawrence { base, r } => {
            let n = base.len();
            let r = *r;
            let orbits: BTreeSet<IntVec> = degrees.iter().map(|d| sorted_rows(d, r)).collect();
            let orbits: Vec<IntVec> = orbits.into_iter().collect();
            let results = par_map(budget, &orbits, |d| -> Result<Vec<(IntVec, Vec<Move>)>> {
                budget.check_deadline()?;
                let g = components_at(c, d, budget)?;
                if g.components.len() < 2 {
                    return Ok(vec![]);
                }
                let mut out = Vec::new();
                for perm in arrangements(&d.as_slice()[..r]) {
                    let moved = permute_graph(&g, &perm, r, n);
                    out.push((moved.fiber.degree.clone(), moves_at(&moved)?));
                }
                Ok(out)
            });
            let mut all = Vec::new();
            for res in results {
                all.extend(res?);
            }
            Ok(all)
        }
        _ => {
            let results = par_map(budget, &degrees, |d| -> Result<(IntVec, Vec<Move>)> {
                let g = components_at(c, d, budget)?;
                Ok((d.clone(), moves_at(&g)?))
            });
            results.into_iter().collect()
        }
    }
}

/// Row degrees sorted ascending; column totals unchanged.
fn sorted_rows(d: &IntVec, r: usize) -> IntVec {
    let mut v = d.as_slice().to_vec();
    v[..r].sort_unstable();
    IntVec::new(v)
}

/// Permutations `p` (new row `i` takes old row `p[i]`) producing each
/// distinct rearrangement of the sorted row degrees `d` once.
fn arrangements(d: &[i64]) -> Vec<Vec<usize>> {
    fn go(d: &[i64], used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..d.len() {
            // among equal degrees take the earliest unused one
            if used[i] || (i > 0 && d[i] == d[i - 1] && !used[i - 1]) {
                continue;
            }
            used[i] = true;
            cur.push(i);
            go(d, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    go(d, &mut vec![false; d.len()], &mut Vec::new(), &mut out);
    out
}

fn permute_rows(p: &[i64], perm: &[usize], n: usize) -> IntVec {
    let mut v = Vec::with_capacity(p.len());
    for &src in perm {
        v.extend_from_slice(&p[src * n..(src + 1) * n]);
    }
    IntVec::new(v)
}

fn permute_graph(g: &FiberGraph, perm: &[usize], r: usize, n: usize) -> FiberGraph {
    let old = g.fiber.degree.as_slice();
    let mut degree: Vec<i64> = perm.iter().map(|&i| old[i]).collect();
    degree.extend_from_slice(&old[r..]);
    let mut components: Vec<Vec<FiberPoint>> = g
        .components
        .iter()
        .map(|comp| {
            let mut c: Vec<FiberPoint> = comp.iter().map(|p| permute_rows(p.as_slice(), perm, n)).collect();
            c.sort();
            c
        })
        .collect();
    components.sort_by(|a, b| a[0].cmp(&b[0]));
    let mut points: Vec<FiberPoint> = components.iter().flatten().cloned().collect();
    points.sort();
    FiberGraph {
        fiber: Fiber {
            degree: IntVec::new(degree),
            points,
            truncated: false,
        },
        components,
    }
}

/// True iff every listed fiber is connected by the moves `±m`.
pub fn verify_markov_property(c: &Configuration, moves: &[Move], degrees: &[IntVec], budget: &Budget) -> Result<bool> {
    for m in moves {
        if !c.contains(m.vector())? {
            return Err(Error::InvalidArgument(format!("{m} is not in L(A)")));
        }
    }
    let verdicts = par_map(budget, degrees, |d| -> Result<bool> {
        let f = enumerate_fiber(c, d, budget.max_fiber, None)?;
        f.require_complete(budget.max_fiber)?;
        Ok(fiber_connected(&f, moves))
    });
    for v in verdicts {
        if !v? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fiber_connected(f: &Fiber, moves: &[Move]) -> bool {
    let pts = &f.points;
    if pts.len() <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(pts.len());
    for (i, p) in pts.iter().enumerate() {
        for m in moves {
            // p − m ≥ 0 reaches another fiber point; p + m is the same edge seen from there
            let q: Vec<i64> = p.as_slice().iter().zip(m.as_slice()).map(|(a, b)| a - b).collect();
            if q.iter().all(|&x| x >= 0) {
                if let Ok(j) = pts.binary_search(&IntVec::new(q)) {
                    uf.union(i, j);
                }
            }
            let q: Vec<i64> = p.as_slice().iter().zip(m.as_slice()).map(|(a, b)| a + b).collect();
            if q.iter().all(|&x| x >= 0) {
                if let Ok(j) = pts.binary_search(&IntVec::new(q)) {
                    uf.union(i, j);
                }
            }
        }
    }
    uf.components() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(a: &[i64]) -> Configuration {
        Configuration::curve(a).unwrap()
    }

    fn v(x: &[i64]) -> IntVec {
        IntVec::new(x.to_vec())
    }

    fn b() -> Budget {
        Budget::sequential()
    }

    #[test]
    fn components_of_small_fibers() {
        let c = curve(&[1, 1]);
        let g = fiber_graph_components(&fiber_of(&c, &v(&[1, -1]), 100).unwrap()).unwrap();
        assert_eq!(g.components.len(), 2);
        let g = components_at(&c, &v(&[2]), &b()).unwrap();
        assert_eq!(g.components.len(), 1);
        let c = curve(&[3, 4, 5]);
        let g = fiber_graph_components(&fiber_of(&c, &v(&[1, -2, 1]), 100).unwrap()).unwrap();
        assert_eq!(g.components, vec![vec![v(&[0, 2, 0])], vec![v(&[1, 0, 1])]]);
    }

    #[test]
    fn membership_predicates() {
        let c = curve(&[1, 1]);
        assert!(is_indispensable(&c, &v(&[1, -1]), &b()).unwrap());
        assert!(!is_indispensable(&c, &v(&[2, -2]), &b()).unwrap());
        assert!(in_universal_markov(&c, &v(&[1, -1]), &b()).unwrap());
        assert!(!in_universal_markov(&c, &v(&[2, -2]), &b()).unwrap());
        assert!(is_indispensable(&curve(&[3, 4, 5]), &v(&[1, -2, 1]), &b()).unwrap());
        assert!(is_indispensable(&c, &v(&[0, 0]), &b()).is_err());
    }

    #[test]
    fn ssc_examples() {
        let c = curve(&[1, 1]);
        assert_eq!(ssc_search(&c, &v(&[1, -1]), 4, &b()).unwrap(), None);
        assert_eq!(
            ssc_search(&c, &v(&[2, -2]), 2, &b()).unwrap(),
            Some(vec![v(&[1, -1]), v(&[1, -1])])
        );
        // (1,−5,0,1) + (0,4,−1,0) starts with u₁⁺ = u⁺, so it is not strongly semiconformal
        let a5 = curve(&[1, 5, 20, 24]);
        let u = v(&[1, -1, -1, 1]);
        assert!(!strictly_above(u.plus().as_slice(), v(&[1, -5, 0, 1]).plus().as_slice()));
        let verdict = ssc_search(&a5, &u, 20, &b()).unwrap().is_none();
        assert_eq!(verdict, in_universal_markov(&a5, &u, &b()).unwrap());
    }

    #[test]
    fn minimal_bases_of_curves() {
        let m = minimal_markov_basis(&curve(&[2, 3])).unwrap();
        assert_eq!(m.moves, vec![Move::from(vec![3, -2])]);
        assert_eq!(minimal_markov_basis(&curve(&[3, 4, 5])).unwrap().len(), 3);
        assert_eq!(minimal_markov_basis(&curve(&[1, 5, 20, 24])).unwrap().len(), 3);
    }

    #[test]
    fn universal_and_indispensable() {
        let c = curve(&[1, 1]);
        assert_eq!(universal_markov_basis(&c).unwrap().moves, vec![Move::from(vec![1, -1])]);
        assert_eq!(indispensable_set(&c).unwrap().moves, vec![Move::from(vec![1, -1])]);
        let c = curve(&[2, 3]);
        assert_eq!(indispensable_set(&c).unwrap().moves, vec![Move::from(vec![3, -2])]);
        let c = curve(&[3, 4, 5]);
        let min = minimal_markov_basis(&c).unwrap();
        let uni = universal_markov_basis(&c).unwrap();
        assert!(min.moves.iter().all(|m| uni.contains(m)));
        assert!(indispensable_set(&c).unwrap().contains(&Move::from(vec![1, -2, 1])));
        let c = curve(&[1, 5, 20, 24]);
        let uni = universal_markov_basis(&c).unwrap();
        assert!(minimal_markov_basis(&c).unwrap().moves.iter().all(|m| uni.contains(m)));
    }

    #[test]
    fn markov_property_examples() {
        let c = curve(&[1, 1]);
        let degs: Vec<IntVec> = (1..=5).map(|d| v(&[d])).collect();
        assert!(verify_markov_property(&c, &[Move::from(vec![1, -1])], &degs, &b()).unwrap());
        assert!(!verify_markov_property(&c, &[Move::from(vec![2, -2])], &[v(&[1])], &b()).unwrap());
        let c = curve(&[3, 4, 5]);
        let m = minimal_markov_basis(&c).unwrap();
        let degs = candidate_degrees(&c, DegreeSource::Graver, &b()).unwrap();
        assert!(verify_markov_property(&c, &m.moves, &degs, &b()).unwrap());
    }

    #[test]
    fn arrangements_of_repeated_degrees() {
        assert_eq!(arrangements(&[1, 2, 3]).len(), 6);
        assert_eq!(arrangements(&[1, 1, 2]).len(), 3);
        assert_eq!(arrangements(&[4, 4, 4]).len(), 1);
    }
}
