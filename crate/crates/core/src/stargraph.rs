//! Star graph of a relator, its cyclically reduced closed walks and their labels.

use crate::groups::GroupValue;
use crate::presentation::{invert_word, parse_word, word_to_string, Letter, RelatorWord, Tuple};
use crate::prelude::*;
use crate::{Error, Result};
use core::fmt;

/// The two vertices `t` and `t⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    T,
    TInv,
}

impl Vertex {
    fn of(t_inverse: bool) -> Self {
        if t_inverse {
            Vertex::TInv
        } else {
            Vertex::T
        }
    }

    fn opposite(t_inverse: bool) -> Self {
        Self::of(!t_inverse)
    }
}

/// A directed edge of the star graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dart {
    pub iota: Vertex,
    pub tau: Vertex,
    pub label: Vec<Letter>,
    pub edge: usize,
    pub inverse: usize,
}

/// Darts `2i` and `2i + 1` form edge `i`, the edge of the `i`-th coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarGraph {
    pub darts: Vec<Dart>,
}

/// Builds the star graph of a cyclically reduced relator.
pub fn build_star_graph(word: &RelatorWord) -> Result<StarGraph> {
    if word.syllables.is_empty() {
        return Err(Error::invalid("relator has no t-symbols"));
    }
    if !word.is_cyclically_reduced() {
        return Err(Error::invalid(format!("relator {word} is not cyclically reduced")));
    }
    let k = word.syllables.len();
    let mut darts = Vec::with_capacity(2 * k);
    for i in 0..k {
        let s = &word.syllables[i];
        let next = &word.syllables[(i + 1) % k];
        // cyclic permutation of r starting at t^{ε(i+1)} ends with t^{εi} g_i
        let iota = Vertex::of(next.t_inverse);
        let tau = Vertex::opposite(s.t_inverse);
        darts.push(Dart { iota, tau, label: invert_word(&s.coeff), edge: i, inverse: 2 * i + 1 });
        darts.push(Dart { iota: tau, tau: iota, label: s.coeff.clone(), edge: i, inverse: 2 * i });
    }
    Ok(StarGraph { darts })
}

impl StarGraph {
    pub fn canonical() -> Self {
        build_star_graph(&RelatorWord::canonical()).expect("canonical relator is reduced")
    }

    pub fn edge_count(&self) -> usize {
        self.darts.len() / 2
    }

    /// May `next` follow `prev` in a reduced walk?
    pub fn follows(&self, prev: usize, next: usize) -> bool {
        self.darts[prev].tau == self.darts[next].iota && self.darts[prev].inverse != next
    }

    /// All cyclically reduced closed walks with exactly `k` darts, as dart sequences.
    pub fn closed_walks(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if k == 0 {
            return out;
        }
        let mut path = Vec::with_capacity(k);
        for first in 0..self.darts.len() {
            path.clear();
            path.push(first);
            self.extend_walks(k, &mut path, &mut out);
        }
        out
    }

    fn extend_walks(&self, k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("nonempty path");
        if path.len() == k {
            if self.follows(last, path[0]) {
                out.push(path.clone());
            }
            return;
        }
        for next in 0..self.darts.len() {
            if self.follows(last, next) {
                path.push(next);
                self.extend_walks(k, path, out);
                path.pop();
            }
        }
    }

    /// Concatenated dart labels of a walk.
    pub fn walk_label(&self, walk: &[usize]) -> Vec<Letter> {
        walk.iter().flat_map(|&d| self.darts[d].label.iter().copied()).collect()
    }

    /// True for a nonempty closed walk with no backtracking, wrap-around included.
    pub fn is_reduced_cycle(&self, walk: &[usize]) -> bool {
        !walk.is_empty()
            && walk.iter().all(|&d| d < self.darts.len())
            && (0..walk.len()).all(|i| self.follows(walk[i], walk[(i + 1) % walk.len()]))
    }
}

/// A word over `{a, b, c, d}^±1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelWord(pub Vec<Letter>);

impl LabelWord {
    pub fn parse(s: &str) -> Result<Self> {
        parse_word(s).map(LabelWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        LabelWord(invert_word(&self.0))
    }

    /// Least rotation of the word or of its inverse.
    pub fn canonical(&self) -> Self {
        let mut best = self.0.clone();
        for w in [self.0.clone(), invert_word(&self.0)] {
            for r in 0..w.len() {
                let mut rot = w[r..].to_vec();
                rot.extend_from_slice(&w[..r]);
                if rot < best {
                    best = rot;
                }
            }
        }
        LabelWord(best)
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }
}

impl fmt::Display for LabelWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.0))
    }
}

/// Canonical labels of all cyclically reduced closed walks of length `k`.
pub fn enumerate_cycle_labels(graph: &StarGraph, k: usize) -> BTreeSet<LabelWord> {
    graph
        .closed_walks(k)
        .iter()
        .map(|w| LabelWord(graph.walk_label(w)).canonical())
        .collect()
}

/// Value of a label in the tuple's group.
pub fn evaluate_label(word: &LabelWord, tuple: &Tuple) -> GroupValue {
    tuple.eval(&word.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;
    use crate::presentation::Sym;

    fn set(words: &[&str]) -> BTreeSet<LabelWord> {
        words.iter().map(|w| LabelWord::parse(w).unwrap().canonical()).collect()
    }

    #[test]
    fn canonical_graph_shape() {
        let g = StarGraph::canonical();
        assert_eq!(g.darts.len(), 8);
        let fwd = |i: usize| &g.darts[2 * i];
        let letter = |s, inv| vec![Letter::new(s, inv)];
        assert_eq!((fwd(0).iota, fwd(0).tau, &fwd(0).label), (Vertex::T, Vertex::TInv, &letter(Sym::A, true)));
        assert_eq!((fwd(1).iota, fwd(1).tau, &fwd(1).label), (Vertex::T, Vertex::TInv, &letter(Sym::B, true)));
        assert_eq!((fwd(2).iota, fwd(2).tau, &fwd(2).label), (Vertex::TInv, Vertex::TInv, &letter(Sym::C, true)));
        assert_eq!((fwd(3).iota, fwd(3).tau, &fwd(3).label), (Vertex::T, Vertex::T, &letter(Sym::D, true)));
    }

    #[test]
    fn two_syllable_relator() {
        let g = build_star_graph(&RelatorWord::parse("taTb").unwrap()).unwrap();
        assert_eq!(g.edge_count(), 2);
        // both edges of t a t⁻¹ b are loops: e_a at t⁻¹, e_b at t
        assert_eq!((g.darts[0].iota, g.darts[0].tau), (Vertex::TInv, Vertex::TInv));
        assert_eq!((g.darts[2].iota, g.darts[2].tau), (Vertex::T, Vertex::T));
        assert!(build_star_graph(&RelatorWord::parse("tTa").unwrap()).is_err());
    }

    #[test]
    fn dart_count_is_twice_t_length() {
        for s in ["t", "ta", "tatb", "tatbtcTd", "ttttta"] {
            let r = RelatorWord::parse(s).unwrap();
            assert_eq!(build_star_graph(&r).unwrap().darts.len(), 2 * r.t_length());
        }
    }

    #[test]
    fn degree_two_and_three() {
        let g = StarGraph::canonical();
        assert_eq!(enumerate_cycle_labels(&g, 2), set(&["cc", "dd", "Ab"]));
        assert_eq!(enumerate_cycle_labels(&g, 3), set(&["ccc", "caB", "CaB", "dBa", "DBa", "ddd"]));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let w = LabelWord::parse("dBaAc").unwrap();
        assert_eq!(w.canonical().canonical(), w.canonical());
        assert_eq!(w.inverse().canonical(), w.canonical());
        assert_eq!(LabelWord::parse("cc").unwrap().canonical().to_string(), "cc");
        assert_eq!(LabelWord::parse("CC").unwrap().canonical().to_string(), "cc");
    }

    #[test]
    fn evaluate_examples() {
        let z = GroupValue::Int;
        let t = Tuple::from_bcd(GroupSpec::Cyclic(5), z(0), z(3), z(1)).unwrap();
        assert_eq!(evaluate_label(&LabelWord::parse("Ab").unwrap(), &t), z(0));
        let t = Tuple::from_bcd(GroupSpec::Cyclic(5), z(2), z(3), z(1)).unwrap();
        assert_eq!(evaluate_label(&LabelWord::parse("caB").unwrap(), &t), z(1));
        let t = Tuple::from_bcd(GroupSpec::Cyclic(6), z(1), z(2), z(1)).unwrap();
        assert_eq!(evaluate_label(&LabelWord::parse("ccc").unwrap(), &t), z(0));
    }
}
