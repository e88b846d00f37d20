//! Weak asphericity of weight functions on the star graph.

use crate::groups::{GroupSpec, GroupValue};
use crate::intmat::{nonneg_combination, Feasibility};
use crate::presentation::Tuple;
use crate::prelude::*;
use crate::stargraph::{LabelWord, StarGraph};
use crate::{Error, Rational, Result};
use alloc::collections::BinaryHeap;
use core::cmp::{Ordering, Reverse};

/// Nonnegative rational weights, one per unoriented edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction(Vec<Rational>);

impl WeightFunction {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.iter().any(|w| *w < Rational::from_integer(0)) {
            return Err(Error::invalid("weights must be nonnegative"));
        }
        Ok(WeightFunction(weights))
    }

    /// Weights of `e_a, e_b, e_c, e_d`.
    pub fn canonical(ea: Rational, eb: Rational, ec: Rational, ed: Rational) -> Result<Self> {
        Self::new(vec![ea, eb, ec, ed])
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn dart(&self, graph: &StarGraph, d: usize) -> Rational {
        self.0[graph.darts[d].edge]
    }

    pub fn walk(&self, graph: &StarGraph, walk: &[usize]) -> Rational {
        walk.iter().map(|&d| self.dart(graph, d)).sum()
    }
}

/// Sum of the weights is at most the number of edges minus two.
pub fn check_condition1(alpha: &WeightFunction) -> bool {
    let total: Rational = alpha.0.iter().copied().sum();
    total <= Rational::from_integer(alpha.0.len() as i64 - 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMethod {
    /// Shortest paths over (group element, last dart) for finite `H`.
    FiniteReachability,
    /// Cycle shapes with integer feasibility for infinite abelian `H`.
    AbelianShapes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub method: SearchMethod,
    /// States settled (finite case) or shapes examined (abelian case).
    pub explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub darts: Vec<usize>,
    pub label: LabelWord,
    pub weight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeakAsphericityVerdict {
    WeaklyAspherical(Certificate),
    Counterexample(CycleWitness),
    Unknown { bound: usize, reason: String },
}

/// Checks a counterexample: reduced closed walk, trivial label, weight below 2.
pub fn verify_counterexample(graph: &StarGraph, alpha: &WeightFunction, tuple: &Tuple, w: &CycleWitness) -> bool {
    graph.is_reduced_cycle(&w.darts)
        && LabelWord(graph.walk_label(&w.darts)) == w.label
        && tuple.is_trivial(&w.label.0)
        && alpha.walk(graph, &w.darts) == w.weight
        && w.weight < Rational::from_integer(2)
}

/// Searches for an admissible cycle of weight below 2.
///
/// For finite `H` the search is exhaustive and never returns `Unknown`. For
/// infinite abelian `H`, `bound` caps both the number of cycle shapes examined and
/// the integer points tried per feasibility test.
pub fn decide_weak_asphericity(
    graph: &StarGraph,
    alpha: &WeightFunction,
    tuple: &Tuple,
    bound: usize,
) -> Result<WeakAsphericityVerdict> {
    if alpha.0.len() != graph.edge_count() {
        return Err(Error::invalid(format!(
            "weight function has {} entries for {} edges",
            alpha.0.len(),
            graph.edge_count()
        )));
    }
    if !check_condition1(alpha) {
        return Err(Error::invalid("weight function violates the sum condition"));
    }
    if bound == 0 {
        return Err(Error::invalid("bound must be positive"));
    }
    let values: Vec<GroupValue> = graph.darts.iter().map(|d| tuple.eval(&d.label)).collect();
    if tuple.h.is_finite() {
        Ok(finite_search(graph, alpha, tuple, &values))
    } else if tuple.group.abelian_coords().is_some() {
        abelian_search(graph, alpha, tuple, &values, bound)
    } else {
        Err(Error::Unsupported(format!("weight check over {}", tuple.group)))
    }
}

#[derive(PartialEq, Eq)]
struct Item {
    weight: Rational,
    node: usize,
}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> Ordering {
        (Reverse(self.weight), Reverse(self.node)).cmp(&(Reverse(other.weight), Reverse(other.node)))
    }
}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn finite_search(graph: &StarGraph, alpha: &WeightFunction, tuple: &Tuple, values: &[GroupValue]) -> WeakAsphericityVerdict {
    let g = &tuple.group;
    let two = Rational::from_integer(2);
    let m = graph.darts.len();
    let mut best: Option<(Rational, Vec<usize>)> = None;
    let mut explored = 0u64;
    for first in 0..m {
        // arena of (state, weight, parent)
        let mut arena: Vec<((GroupValue, usize), Rational, usize)> = Vec::new();
        let mut settled: BTreeSet<(GroupValue, usize)> = BTreeSet::new();
        let mut dist: BTreeMap<(GroupValue, usize), Rational> = BTreeMap::new();
        let mut heap = BinaryHeap::new();
        let w0 = alpha.dart(graph, first);
        if w0 >= two {
            continue;
        }
        let s0 = (values[first].clone(), first);
        arena.push((s0.clone(), w0, usize::MAX));
        dist.insert(s0, w0);
        heap.push(Item { weight: w0, node: 0 });
        while let Some(Item { weight, node }) = heap.pop() {
            let (state, _, _) = arena[node].clone();
            if !settled.insert(state.clone()) {
                continue;
            }
            explored += 1;
            let (h, last) = state;
            if g.is_identity(&h) && graph.follows(last, first) {
                let mut walk = Vec::new();
                let mut n = node;
                while n != usize::MAX {
                    walk.push(arena[n].0 .1);
                    n = arena[n].2;
                }
                walk.reverse();
                if best.as_ref().is_none_or(|(bw, bp)| (weight, &walk) < (*bw, bp)) {
                    best = Some((weight, walk));
                }
                break;
            }
            #[allow(clippy::needless_range_loop)]
            for next in 0..m {
                if !graph.follows(last, next) {
                    continue;
                }
                let w = weight + alpha.dart(graph, next);
                if w >= two {
                    continue;
                }
                let s = (g.mul(&h, &values[next]).expect("values lie in the group"), next);
                if settled.contains(&s) || dist.get(&s).is_some_and(|&d| d <= w) {
                    continue;
                }
                dist.insert(s.clone(), w);
                arena.push((s, w, node));
                heap.push(Item { weight: w, node: arena.len() - 1 });
            }
        }
    }
    match best {
        Some((weight, darts)) => WeakAsphericityVerdict::Counterexample(CycleWitness {
            label: LabelWord(graph.walk_label(&darts)),
            darts,
            weight,
        }),
        None => WeakAsphericityVerdict::WeaklyAspherical(Certificate { method: SearchMethod::FiniteReachability, explored }),
    }
}

/// Simple cycles of the dart transition graph, each starting at its least dart.
fn simple_cycles(graph: &StarGraph) -> Vec<Vec<usize>> {
    fn dfs(graph: &StarGraph, start: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("nonempty");
        for next in start..graph.darts.len() {
            if !graph.follows(last, next) {
                continue;
            }
            if next == start {
                out.push(path.clone());
            } else if !on[next] {
                on[next] = true;
                path.push(next);
                dfs(graph, start, path, on, out);
                path.pop();
                on[next] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; graph.darts.len()];
    for s in 0..graph.darts.len() {
        on[s] = true;
        dfs(graph, s, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Eulerian circuit through the given cycles, each used with its multiplicity.
fn euler_circuit(graph: &StarGraph, cycles: &[(&Vec<usize>, u64)]) -> Vec<usize> {
    let m = graph.darts.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (c, mult) in cycles {
        for _ in 0..*mult {
            for i in 0..c.len() {
                adj[c[i]].push(c[(i + 1) % c.len()]);
            }
        }
    }
    for a in adj.iter_mut() {
        a.sort_unstable_by(|x, y| y.cmp(x));
    }
    let start = cycles.iter().map(|(c, _)| c[0]).min().expect("at least one cycle");
    let mut stack = vec![start];
    let mut circuit = Vec::new();
    while let Some(&v) = stack.last() {
        if let Some(u) = adj[v].pop() {
            stack.push(u);
        } else {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    circuit.pop();
    circuit
}

fn connected(cycles: &[&Vec<usize>]) -> bool {
    let n = cycles.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && cycles[i].iter().any(|x| cycles[j].contains(x)) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn abelian_search(
    graph: &StarGraph,
    alpha: &WeightFunction,
    tuple: &Tuple,
    values: &[GroupValue],
    bound: usize,
) -> Result<WeakAsphericityVerdict> {
    let g: &GroupSpec = &tuple.group;
    let coords = g.abelian_coords().expect("checked by caller");
    let order = coords.free_first();
    let free = coords.free_rank();
    let moduli: Vec<i64> = order[free..].iter().map(|&i| coords.moduli[i]).collect();
    let vec_of = |v: &GroupValue| -> Vec<i64> {
        let c = g.to_coords(v).expect("abelian backend");
        order.iter().map(|&i| c[i]).collect()
    };
    let dart_vec: Vec<Vec<i64>> = values.iter().map(vec_of).collect();
    let two = Rational::from_integer(2);
    let zero = Rational::from_integer(0);

    let cycles = simple_cycles(graph);
    let cyc_weight: Vec<Rational> = cycles.iter().map(|c| alpha.walk(graph, c)).collect();
    let cyc_vec: Vec<Vec<i64>> = cycles
        .iter()
        .map(|c| {
            let mut s = vec![0i64; order.len()];
            for &d in c {
                for (x, y) in s.iter_mut().zip(&dart_vec[d]) {
                    *x += y;
                }
            }
            s
        })
        .collect();
    let positive: Vec<usize> = (0..cycles.len()).filter(|&i| cyc_weight[i] > zero).collect();
    let zeros: Vec<usize> = (0..cycles.len()).filter(|&i| cyc_weight[i] == zero).collect();

    // multisets of positive cycles with total weight below 2
    let mut multisets: Vec<(Rational, Vec<(usize, u64)>)> = Vec::new();
    fn grow(
        from: usize,
        positive: &[usize],
        w: &[Rational],
        acc: Rational,
        cur: &mut Vec<(usize, u64)>,
        out: &mut Vec<(Rational, Vec<(usize, u64)>)>,
        limit: usize,
    ) -> bool {
        if out.len() > limit {
            return false;
        }
        out.push((acc, cur.clone()));
        for (pi, &ci) in positive.iter().enumerate().skip(from) {
            let mut total = acc;
            let mut mult = 0u64;
            loop {
                total += w[ci];
                mult += 1;
                if total >= Rational::from_integer(2) {
                    break;
                }
                cur.push((ci, mult));
                let ok = grow(pi + 1, positive, w, total, cur, out, limit);
                cur.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    if !grow(0, &positive, &cyc_weight, zero, &mut Vec::new(), &mut multisets, bound) {
        return Ok(WeakAsphericityVerdict::Unknown { bound, reason: "too many positive-weight cycle combinations".into() });
    }
    multisets.sort();

    if zeros.len() >= 31 {
        return Ok(WeakAsphericityVerdict::Unknown { bound, reason: "too many zero-weight cycles".into() });
    }
    let mut masks: Vec<u32> = (0u32..1 << zeros.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));

    let mut explored = 0u64;
    let mut unknown = false;
    for (weight, pos) in &multisets {
        debug_assert!(*weight < two);
        for &mask in &masks {
            let zsel: Vec<usize> = (0..zeros.len()).filter(|&i| mask >> i & 1 == 1).map(|i| zeros[i]).collect();
            let support: Vec<&Vec<usize>> = pos.iter().map(|(c, _)| &cycles[*c]).chain(zsel.iter().map(|&z| &cycles[z])).collect();
            if !connected(&support) {
                continue;
            }
            explored += 1;
            if explored as usize > bound {
                return Ok(WeakAsphericityVerdict::Unknown { bound, reason: "too many cycle shapes".into() });
            }
            let mut target = vec![0i64; order.len()];
            for (c, mult) in pos {
                for (x, y) in target.iter_mut().zip(&cyc_vec[*c]) {
                    *x -= *mult as i64 * y;
                }
            }
            for &z in &zsel {
                for (x, y) in target.iter_mut().zip(&cyc_vec[z]) {
                    *x -= y;
                }
            }
            let gens: Vec<Vec<i64>> = zsel.iter().map(|&z| cyc_vec[z].clone()).collect();
            match nonneg_combination(&gens, free, &moduli, &target, bound) {
                Feasibility::Infeasible => {}
                Feasibility::Unknown => unknown = true,
                Feasibility::Feasible(nu) => {
                    let mut used: Vec<(&Vec<usize>, u64)> = pos.iter().map(|(c, m)| (&cycles[*c], *m)).collect();
                    used.extend(zsel.iter().zip(&nu).map(|(&z, &n)| (&cycles[z], 1 + n as u64)));
                    let darts = euler_circuit(graph, &used);
                    let label = LabelWord(graph.walk_label(&darts));
                    let weight = alpha.walk(graph, &darts);
                    return Ok(WeakAsphericityVerdict::Counterexample(CycleWitness { darts, label, weight }));
                }
            }
        }
    }
    if unknown {
        Ok(WeakAsphericityVerdict::Unknown { bound, reason: "integer feasibility search exhausted its budget".into() })
    } else {
        Ok(WeakAsphericityVerdict::WeaklyAspherical(Certificate { method: SearchMethod::AbelianShapes, explored }))
    }
}

/// Runs the abelian shape method regardless of whether `H` is finite.
#[doc(hidden)]
pub fn decide_by_shapes(graph: &StarGraph, alpha: &WeightFunction, tuple: &Tuple, bound: usize) -> Result<WeakAsphericityVerdict> {
    if tuple.group.abelian_coords().is_none() {
        return Err(Error::Unsupported("shape method needs an abelian backend".into()));
    }
    let values: Vec<GroupValue> = graph.darts.iter().map(|d| tuple.eval(&d.label)).collect();
    abelian_search(graph, alpha, tuple, &values, bound)
}
