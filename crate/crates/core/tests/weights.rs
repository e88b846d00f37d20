use asphere_core::groups::{CayleyTable, GroupSpec, GroupValue};
use asphere_core::presentation::Tuple;
use asphere_core::stargraph::StarGraph;
use asphere_core::weights::{
    decide_by_shapes, decide_weak_asphericity, verify_counterexample, WeakAsphericityVerdict as V, WeightFunction,
};
use asphere_core::Rational;
use std::collections::BTreeSet;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn functions() -> [WeightFunction; 3] {
    [
        WeightFunction::canonical(q(1, 1), q(1, 1), q(0, 1), q(0, 1)).unwrap(),
        WeightFunction::canonical(q(1, 2), q(1, 2), q(1, 1), q(0, 1)).unwrap(),
        WeightFunction::canonical(q(0, 1), q(0, 1), q(1, 1), q(1, 1)).unwrap(),
    ]
}

fn vec(v: &[i64]) -> GroupValue {
    GroupValue::Vector(v.to_vec())
}

fn is_weakly_aspherical(t: &Tuple, a: &WeightFunction) -> bool {
    let g = StarGraph::canonical();
    match decide_weak_asphericity(&g, a, t, 100_000).unwrap() {
        V::WeaklyAspherical(_) => true,
        V::Counterexample(w) => {
            assert!(verify_counterexample(&g, a, t, &w), "unsound counterexample {w:?}");
            false
        }
        V::Unknown { reason, .. } => panic!("unknown: {reason}"),
    }
}

#[test]
fn both_loops_of_infinite_order() {
    let g = GroupSpec::fg_abelian(2, vec![]).unwrap();
    let t = Tuple::from_bcd(g, vec(&[1, 1]), vec(&[1, 0]), vec(&[0, 1])).unwrap();
    assert!(is_weakly_aspherical(&t, &functions()[0]));
}

#[test]
fn finite_b_infinite_d() {
    for tors in [2u64, 3, 4] {
        let g = GroupSpec::fg_abelian(1, vec![tors]).unwrap();
        for c in [[1, 0], [0, 1], [3, 1], [-2, 0], [1, 1]] {
            let t = Tuple::from_bcd(g.clone(), vec(&[0, 1]), g.reduce(vec(&c)).unwrap(), vec(&[1, 0])).unwrap();
            assert!(is_weakly_aspherical(&t, &functions()[1]), "q={tors} c={c:?}");
        }
    }
}

#[test]
fn finite_loops_infinite_b() {
    let g = GroupSpec::fg_abelian(1, vec![6]).unwrap();
    for (c, d) in [([0, 2], [0, 3]), ([0, 1], [0, 1]), ([0, 3], [0, 3]), ([0, 5], [0, 2])] {
        let t = Tuple::from_bcd(g.clone(), vec(&[1, 0]), vec(&c), vec(&d)).unwrap();
        assert!(is_weakly_aspherical(&t, &functions()[2]), "c={c:?} d={d:?}");
    }
}

#[test]
fn broken_hypotheses_give_counterexamples() {
    let z = GroupValue::Int;
    // |c| = 3
    let t = Tuple::from_bcd(GroupSpec::Cyclic(3), z(0), z(1), z(1)).unwrap();
    assert!(!is_weakly_aspherical(&t, &functions()[0]));
    // b = 1 with |d| infinite: a⁻¹b has weight 1
    let g = GroupSpec::fg_abelian(1, vec![2]).unwrap();
    let t = Tuple::from_bcd(g, vec(&[0, 0]), vec(&[0, 1]), vec(&[1, 0])).unwrap();
    assert!(!is_weakly_aspherical(&t, &functions()[1]));
    // |b| finite with finite loops under the third function: c³ has weight 3 but cab⁻¹...
    let g = GroupSpec::fg_abelian(1, vec![6]).unwrap();
    let t = Tuple::from_bcd(g, vec(&[0, 2]), vec(&[0, 2]), vec(&[0, 3])).unwrap();
    assert!(!is_weakly_aspherical(&t, &functions()[2]));
}

#[test]
fn infinite_counterexample_needs_zero_loop_multiples() {
    // b = d³ in Z: a d³ b⁻¹ is trivial with weight 1 under the second function
    let z = GroupValue::Int;
    let t = Tuple::from_bcd(GroupSpec::InfiniteCyclic, z(3), z(5), z(1)).unwrap();
    let g = StarGraph::canonical();
    let a = &functions()[1];
    match decide_weak_asphericity(&g, a, &t, 100_000).unwrap() {
        V::Counterexample(w) => {
            assert!(verify_counterexample(&g, a, &t, &w));
            assert_eq!(w.weight, q(1, 1));
        }
        v => panic!("{v:?}"),
    }
}

/// Minimum weight (< 2) of an admissible cycle of length at most `len`, by dynamic
/// programming over (value, last dart, weight) layers.
fn min_admissible_weight(t: &Tuple, a: &WeightFunction, len: usize) -> Option<Rational> {
    let g = StarGraph::canonical();
    let grp = &t.group;
    let vals: Vec<GroupValue> = g.darts.iter().map(|d| t.eval(&d.label)).collect();
    let two = q(2, 1);
    let mut best: Option<Rational> = None;
    for first in 0..8 {
        let mut layer: BTreeSet<(GroupValue, usize, Rational)> = BTreeSet::new();
        let w0 = a.dart(&g, first);
        layer.insert((vals[first].clone(), first, w0));
        for _ in 0..len {
            for (h, last, w) in &layer {
                if grp.is_identity(h) && g.follows(*last, first) && best.is_none_or(|b| *w < b) {
                    best = Some(*w);
                }
            }
            let mut next = BTreeSet::new();
            for (h, last, w) in &layer {
                #[allow(clippy::needless_range_loop)]
                for e in 0..8 {
                    let w2 = *w + a.dart(&g, e);
                    if g.follows(*last, e) && w2 < two {
                        next.insert((grp.mul(h, &vals[e]).unwrap(), e, w2));
                    }
                }
            }
            layer = next;
        }
    }
    best
}

fn small_groups() -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> = (2..=6).map(GroupSpec::Cyclic).collect();
    v.push(GroupSpec::product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]).unwrap());
    v.push(GroupSpec::cayley(CayleyTable::dihedral(3).unwrap()));
    v
}

#[test]
fn finite_search_matches_layered_oracle() {
    let g = StarGraph::canonical();
    for grp in small_groups() {
        let els = grp.elements().unwrap();
        let n = els.len();
        for b in &els {
            for c in els.iter().filter(|x| !grp.is_identity(x)) {
                for d in els.iter().filter(|x| !grp.is_identity(x)) {
                    let t = Tuple::from_bcd(grp.clone(), b.clone(), c.clone(), d.clone()).unwrap();
                    for a in functions() {
                        let got = match decide_weak_asphericity(&g, &a, &t, 1000).unwrap() {
                            V::Counterexample(w) => Some(w.weight),
                            V::WeaklyAspherical(_) => None,
                            V::Unknown { .. } => panic!("finite search returned unknown"),
                        };
                        assert_eq!(got, min_admissible_weight(&t, &a, 2 * n * 4), "{grp} b={b} c={c} d={d}");
                    }
                }
            }
        }
    }
}

#[test]
fn shape_method_agrees_on_finite_abelian() {
    let g = StarGraph::canonical();
    for n in 2..=7i64 {
        let grp = GroupSpec::Cyclic(n as u64);
        for b in 0..n {
            for c in 1..n {
                for d in 1..n {
                    let z = GroupValue::Int;
                    let t = Tuple::from_bcd(grp.clone(), z(b), z(c), z(d)).unwrap();
                    for a in functions() {
                        let exact = decide_weak_asphericity(&g, &a, &t, 1000).unwrap();
                        let shapes = decide_by_shapes(&g, &a, &t, 10_000).unwrap();
                        match (&exact, &shapes) {
                            (V::WeaklyAspherical(_), V::WeaklyAspherical(_)) => {}
                            (V::Counterexample(_), V::Counterexample(w)) => assert!(verify_counterexample(&g, &a, &t, w)),
                            _ => panic!("Z{n} b={b} c={c} d={d}: {exact:?} vs {shapes:?}"),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn verdict_invariant_under_multipliers() {
    let g = StarGraph::canonical();
    let z = GroupValue::Int;
    for n in [5i64, 7, 8, 9] {
        let grp = GroupSpec::Cyclic(n as u64);
        let units: Vec<i64> = (1..n).filter(|u| num_integer::gcd(*u, n) == 1).collect();
        for b in 0..n {
            for c in 1..n {
                for d in 1..n {
                    for a in functions() {
                        let weight_of = |u: i64| {
                            let t = Tuple::from_bcd(grp.clone(), z(b * u % n), z(c * u % n), z(d * u % n)).unwrap();
                            match decide_weak_asphericity(&g, &a, &t, 1000).unwrap() {
                                V::Counterexample(w) => Some(w.weight),
                                _ => None,
                            }
                        };
                        let base = weight_of(1);
                        for &u in &units {
                            assert_eq!(weight_of(u), base);
                        }
                    }
                }
            }
        }
    }
}
