//! Exact curvature arithmetic in units of π and the receipt bounds used by
//! curvature distribution arguments.

use crate::prelude::*;
use crate::{Error, Rational, Result};

/// A curvature value `q·π`, stored as `q`.
pub type Curvature = Rational;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `c(Δ) = (2 − k)π + 2π Σ 1/dᵢ` for a `k`-gon with vertex degrees `dᵢ`.
pub fn region_curvature(degrees: &[u32]) -> Result<Curvature> {
    if degrees.len() < 2 {
        return Err(Error::invalid("a region needs at least two vertices"));
    }
    if degrees.contains(&0) {
        return Err(Error::invalid("vertex degrees must be positive"));
    }
    let k = degrees.len() as i64;
    let sum: Rational = degrees.iter().map(|&d| r(1, d as i64)).sum();
    Ok(Rational::from_integer(2 - k) + sum * 2)
}

/// A `k`-gon with all vertex degrees 4 and a curvature receipt per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReceiptPattern {
    pub receipts: Vec<Rational>,
}

impl ReceiptPattern {
    pub fn new(receipts: Vec<Rational>) -> Result<Self> {
        if receipts.len() < 2 {
            return Err(Error::invalid("a region needs at least two edges"));
        }
        if receipts.iter().any(|x| *x < Rational::from_integer(0)) {
            return Err(Error::invalid("receipts must be nonnegative"));
        }
        Ok(ReceiptPattern { receipts })
    }

    /// `count` edges receiving `bound`, the rest nothing.
    pub fn uniform(k: usize, count: usize, bound: Rational) -> Result<Self> {
        if count > k {
            return Err(Error::invalid("more receiving edges than edges"));
        }
        let mut v = vec![Rational::from_integer(0); k];
        for x in v.iter_mut().take(count) {
            *x = bound;
        }
        Self::new(v)
    }

    pub fn k(&self) -> usize {
        self.receipts.len()
    }

    /// Edges that receive nothing.
    pub fn gaps(&self) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.receipts[i] == Rational::from_integer(0)).collect()
    }
}

/// `c*(Δ) ≤ π(2 − k/2) + Σ receipts`.
pub fn cstar_upper_bound(p: &ReceiptPattern) -> Curvature {
    let k = p.k() as i64;
    Rational::from_integer(2) - r(k, 2) + p.receipts.iter().copied().sum::<Rational>()
}

/// Which edges may receive curvature in a clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeShare {
    All,
    TwoThirds,
    Half,
    ThreeFifths,
    /// All but at least four edges.
    AllButFour,
}

impl EdgeShare {
    /// Maximum number of receiving edges of a `k`-gon.
    pub fn max_edges(self, k: usize) -> usize {
        match self {
            EdgeShare::All => k,
            EdgeShare::TwoThirds => 2 * k / 3,
            EdgeShare::Half => k / 2,
            EdgeShare::ThreeFifths => 3 * k / 5,
            EdgeShare::AllButFour => k.saturating_sub(4),
        }
    }
}

/// One receipt-bound statement: regions of degree `≥ min_k` receiving at most
/// `bound` across at most `share` of their edges have `c* ≤ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapClause {
    pub name: &'static str,
    pub bound: Rational,
    pub share: EdgeShare,
    pub min_k: usize,
}

/// The receipt-bound clauses, in order (i)–(vii) followed by the four-gap bound.
pub fn gap_clauses() -> Vec<GapClause> {
    let c = |name, bound, share, min_k| GapClause { name, bound, share, min_k };
    vec![
        c("i", r(1, 6), EdgeShare::All, 6),
        c("ii", r(1, 6), EdgeShare::TwoThirds, 5),
        c("iii", r(1, 4), EdgeShare::All, 8),
        c("iv", r(1, 4), EdgeShare::TwoThirds, 6),
        c("v", r(1, 4), EdgeShare::Half, 5),
        c("vi", r(1, 2), EdgeShare::Half, 7),
        c("vii", r(1, 2), EdgeShare::ThreeFifths, 8),
        c("four-gaps", r(1, 2), EdgeShare::AllButFour, 4),
    ]
}

/// Outcome of checking one clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseReport {
    pub name: &'static str,
    pub k_checked: Vec<usize>,
    pub placements_checked: u64,
    /// `(k, receipts)` for every pattern with `c* > 0`.
    pub violations: Vec<(usize, Vec<Rational>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub max_k: usize,
    pub clauses: Vec<ClauseReport>,
}

impl GapReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.violations.is_empty())
    }
}

/// Largest `k` for which receipt placements are enumerated subset by subset.
pub const EXHAUSTIVE_PLACEMENT_K: usize = 12;

/// Receipts take values in `{0, bound}` on the allowed edges; `c*` only depends on
/// their total, so beyond [`EXHAUSTIVE_PLACEMENT_K`] each receiving-edge count is
/// checked once instead of once per subset.
pub fn verify_gap_bounds(max_k: usize) -> GapReport {
    let clauses = gap_clauses()
        .into_iter()
        .map(|cl| {
            let mut rep = ClauseReport { name: cl.name, k_checked: Vec::new(), placements_checked: 0, violations: Vec::new() };
            for k in cl.min_k..=max_k {
                rep.k_checked.push(k);
                let m = cl.share.max_edges(k);
                if k <= EXHAUSTIVE_PLACEMENT_K {
                    for mask in 0u32..(1 << k) {
                        if mask.count_ones() as usize > m {
                            continue;
                        }
                        let receipts: Vec<Rational> = (0..k)
                            .map(|i| if mask >> i & 1 == 1 { cl.bound } else { Rational::from_integer(0) })
                            .collect();
                        rep.placements_checked += 1;
                        let p = ReceiptPattern::new(receipts).expect("valid pattern");
                        if cstar_upper_bound(&p) > Rational::from_integer(0) {
                            rep.violations.push((k, p.receipts));
                        }
                    }
                } else {
                    for count in 0..=m {
                        rep.placements_checked += 1;
                        let p = ReceiptPattern::uniform(k, count, cl.bound).expect("valid pattern");
                        if cstar_upper_bound(&p) > Rational::from_integer(0) {
                            rep.violations.push((k, p.receipts));
                        }
                    }
                }
            }
            rep
        })
        .collect();
    GapReport { max_k, clauses }
}

/// Largest subset of a `k`-cycle's edges in which no two are adjacent.
pub fn max_nonadjacent(k: usize) -> usize {
    max_subset(k, |mask, k| (0..k).all(|i| !(bit(mask, i) && bit(mask, (i + 1) % k))))
}

/// Largest subset of a `k`-cycle's edges in which every edge has at most one
/// chosen neighbour.
pub fn max_one_neighbour(k: usize) -> usize {
    max_subset(k, |mask, k| {
        (0..k).all(|i| !(bit(mask, i) && bit(mask, (i + 1) % k) && bit(mask, (i + k - 1) % k)))
    })
}

fn bit(mask: u32, i: usize) -> bool {
    mask >> i & 1 == 1
}

fn max_subset(k: usize, ok: impl Fn(u32, usize) -> bool) -> usize {
    assert!((3..32).contains(&k));
    (0u32..1 << k).filter(|&m| ok(m, k)).map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_values() {
        assert_eq!(region_curvature(&[4, 4, 4]).unwrap(), r(1, 2));
        assert_eq!(region_curvature(&[4, 4, 4, 4]).unwrap(), r(0, 1));
        assert_eq!(region_curvature(&[4, 4, 4, 4, 4]).unwrap(), r(-1, 2));
        assert!(region_curvature(&[4]).is_err());
    }

    #[test]
    fn all_four_formula() {
        for k in 2..40usize {
            let c = region_curvature(&vec![4; k]).unwrap();
            assert_eq!(c, Rational::from_integer(2) - r(k as i64, 2));
        }
    }

    #[test]
    fn cstar_examples() {
        assert_eq!(cstar_upper_bound(&ReceiptPattern::uniform(6, 6, r(1, 6)).unwrap()), r(0, 1));
        assert_eq!(cstar_upper_bound(&ReceiptPattern::uniform(5, 2, r(1, 4)).unwrap()), r(0, 1));
        assert_eq!(cstar_upper_bound(&ReceiptPattern::uniform(4, 0, r(0, 1)).unwrap()), r(0, 1));
        assert_eq!(cstar_upper_bound(&ReceiptPattern::uniform(7, 3, r(1, 2)).unwrap()), r(0, 1));
        assert_eq!(cstar_upper_bound(&ReceiptPattern::uniform(8, 8, r(1, 4)).unwrap()), r(0, 1));
        assert_eq!(cstar_upper_bound(&ReceiptPattern::uniform(9, 5, r(1, 2)).unwrap()), r(0, 1));
    }

    #[test]
    fn gap_bounds_hold() {
        let rep = verify_gap_bounds(64);
        assert!(rep.passed(), "{:?}", rep.clauses.iter().filter(|c| !c.violations.is_empty()).collect::<Vec<_>>());
        assert_eq!(rep.clauses.len(), 8);
    }

    #[test]
    fn loosened_clause_fails() {
        // π/4 on every edge is not enough for k = 7
        let p = ReceiptPattern::uniform(7, 7, r(1, 4)).unwrap();
        assert!(cstar_upper_bound(&p) > r(0, 1));
    }

    #[test]
    fn gap_fractions_match_adjacency() {
        for k in 3..=20 {
            assert_eq!(max_nonadjacent(k), k / 2, "k={k}");
            assert_eq!(max_one_neighbour(k), 2 * k / 3, "k={k}");
        }
    }
}
