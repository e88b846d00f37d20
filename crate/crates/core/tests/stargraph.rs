use asphere_core::stargraph::{enumerate_cycle_labels, LabelWord, StarGraph};
use std::collections::BTreeSet;

const ORDER: &str = "aAbBcCdD";

/// (start, end) vertex of each letter; 0 is t, 1 is t⁻¹.
fn ends(x: char) -> (u8, u8) {
    match x {
        'a' | 'b' => (1, 0),
        'A' | 'B' => (0, 1),
        'c' | 'C' => (1, 1),
        _ => (0, 0),
    }
}

fn inv(x: char) -> char {
    if x.is_lowercase() {
        x.to_ascii_uppercase()
    } else {
        x.to_ascii_lowercase()
    }
}

fn canon(w: &[char]) -> String {
    let inverse: Vec<char> = w.iter().rev().map(|&x| inv(x)).collect();
    let key = |v: &[char]| v.iter().map(|&x| ORDER.find(x).unwrap()).collect::<Vec<_>>();
    let mut best: Option<Vec<char>> = None;
    for v in [w.to_vec(), inverse] {
        for i in 0..v.len() {
            let r: Vec<char> = v[i..].iter().chain(&v[..i]).copied().collect();
            if best.as_ref().is_none_or(|b| key(&r) < key(b)) {
                best = Some(r);
            }
        }
    }
    best.unwrap().into_iter().collect()
}

fn brute_force(k: usize) -> BTreeSet<String> {
    let letters: Vec<char> = ORDER.chars().collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; k];
    loop {
        let w: Vec<char> = idx.iter().map(|&i| letters[i]).collect();
        let ok = (0..k).all(|i| {
            let (x, y) = (w[i], w[(i + 1) % k]);
            ends(x).1 == ends(y).0 && y != inv(x)
        });
        if ok {
            out.insert(canon(&w));
        }
        let mut p = 0;
        loop {
            if p == k {
                return out;
            }
            idx[p] += 1;
            if idx[p] < 8 {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

fn enumerated(k: usize) -> BTreeSet<String> {
    enumerate_cycle_labels(&StarGraph::canonical(), k).iter().map(|w| w.to_string()).collect()
}

/// Expands `d{A,B}{c,C}{a,b}` into all choices, canonicalized.
fn expand(family: &str) -> BTreeSet<String> {
    let mut words = vec![String::new()];
    let mut rest = family;
    while !rest.is_empty() {
        let (choices, tail): (Vec<&str>, &str) = if let Some(r) = rest.strip_prefix('{') {
            let end = r.find('}').unwrap();
            (r[..end].split(',').collect(), &r[end + 1..])
        } else {
            let end = rest.find('{').unwrap_or(rest.len());
            (vec![&rest[..end]], &rest[end..])
        };
        words = words.iter().flat_map(|w| choices.iter().map(move |c| format!("{w}{c}"))).collect();
        rest = tail;
    }
    words
        .iter()
        .map(|w| LabelWord::parse(w).unwrap().canonical().to_string())
        .collect()
}

fn expand_all(families: &[&str]) -> BTreeSet<String> {
    families.iter().flat_map(|f| expand(f)).collect()
}

fn list(k: usize) -> BTreeSet<String> {
    match k {
        2 => expand_all(&["cc", "Ab", "dd"]),
        3 => expand_all(&["ccc", "caB", "CaB", "dBa", "DBa", "ddd"]),
        4 => expand_all(&["dddd", "ddAb", "ddBa", "ccaB", "ccbA", "cccc", "aBaB", "d{A,B}{c,C}{a,b}"]),
        5 => expand_all(&[
            "ddddd", "dddAb", "dddBa", "cccaB", "cccbA", "ccccc", "caBaB", "cbAbA", "dAbAb", "dBaBa",
            "dd{A,B}{c,C}{a,b}", "cc{a,b}{d,D}{A,B}",
        ]),
        6 => expand_all(&[
            "dddddd", "ddddAb", "ddddBa", "ccccaB", "ccccbA", "cccccc", "aBaBaB", "ddAbAb", "ddBaBa", "ccaBaB",
            "ccbAbA", "ddd{A,B}{c,C}{a,b}", "dd{A,B}{cc,CC}{a,b}", "d{A,B}{ccc,CCC}{a,b}",
            "c{aB,bA}{c,C}{aB,bA}", "d{Ab,Ba}{d,D}{Ab,Ba}", "c{aBa,bAb}{d,D}{A,B}", "c{a,b}{d,D}{AbA,BaB}",
        ]),
        _ => unreachable!(),
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for k in 1..=6 {
        assert_eq!(enumerated(k), brute_force(k), "k={k}");
    }
}

#[test]
fn degree_four_has_fifteen_classes() {
    assert_eq!(enumerated(4).len(), 15);
}

#[test]
fn published_list_matches_enumeration() {
    for (k, count) in [(2, 3), (3, 6), (4, 15), (5, 26), (6, 61)] {
        let all = enumerated(k);
        assert_eq!(all, list(k), "k={k}");
        assert_eq!(all.len(), count);
    }
}
