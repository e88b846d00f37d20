//! Acceptance criteria, one pass/fail line each.

use asphere_core::classifier::{classify, evaluate_condition, ClassificationResult, ConditionId, Representative};
use asphere_core::cosetenum::{check_quotient, quotient_presentation, QuotientCase};
use asphere_core::curvature::{region_curvature, verify_gap_bounds};
use asphere_core::groups::{CayleyTable, GroupSpec, GroupValue};
use asphere_core::pictures::{
    census_check, census_check_abelianized, family_census, family_relations, generate_sphere, realizing_tuple,
    verify_picture, Census, CombinatorialPicture, SphereFamily, SphereFamilyId,
};
use asphere_core::presentation::{derive_tuple, t_transform, Coefficients, Tuple};
use asphere_core::stargraph::{enumerate_cycle_labels, LabelWord, StarGraph};
use asphere_core::weights::{decide_weak_asphericity, verify_counterexample, WeakAsphericityVerdict, WeightFunction};
use asphere_core::Rational;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

const MAX_COSETS: usize = 2_000_000;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn line(&self, show_time: bool) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if show_time {
            format!(
                "[{tag}] {} {} ({:.2} s, limit {} s): {}",
                self.id,
                self.name,
                self.elapsed.as_secs_f64(),
                self.limit.as_secs(),
                self.detail
            )
        } else {
            format!("[{tag}] {} {}: {}", self.id, self.name, self.detail)
        }
    }
}

type Check = Result<String, String>;

fn run(id: u8, name: &'static str, limit_s: u64, f: impl FnOnce() -> Check) -> Outcome {
    let limit = Duration::from_secs(limit_s);
    let start = Instant::now();
    let r = f();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > limit {
        passed = false;
        detail = format!("too slow: {detail}");
    }
    Outcome { id, name, passed, detail, elapsed, limit }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs `f` and fails if it alone exceeds `limit_s`.
fn timed<T>(limit_s: u64, what: &str, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let start = Instant::now();
    let v = f()?;
    let t = start.elapsed();
    ensure(t <= Duration::from_secs(limit_s), || format!("{what} took {:.2} s", t.as_secs_f64()))?;
    Ok(v)
}

fn quotient(case: QuotientCase, k: Option<u32>) -> Result<(u64, u64), String> {
    let inst = quotient_presentation(case, k).map_err(|e| e.to_string())?;
    let out = check_quotient(&inst, MAX_COSETS).map_err(|e| e.to_string())?;
    Ok((out.order, out.t_order))
}

fn criterion1() -> Check {
    let mut seen = Vec::new();
    for k in 1..=2u32 {
        let (order, _) = timed(10, "enumeration", || quotient(QuotientCase::I, Some(k)))?;
        let k64 = k as u64;
        let want = 2 * k64 * (3u64.pow(2 * k) - 1);
        ensure(order == want, || format!("k={k}: order {order}, formula {want}"))?;
        seen.push(order);
    }
    ensure(seen == [16, 320], || format!("orders {seen:?}"))?;
    Ok(format!("orders {seen:?}"))
}

fn criterion2() -> Check {
    let mut seen = Vec::new();
    for k in 1..=4u32 {
        let (order, _) = timed(10, "enumeration", || quotient(QuotientCase::II, Some(k)))?;
        let want = 2 * k as u64 * (0..k).map(|i| 4u64.pow(i)).sum::<u64>();
        ensure(order == want, || format!("k={k}: order {order}, formula {want}"))?;
        seen.push(order);
    }
    ensure(seen == [2, 20, 126, 680], || format!("orders {seen:?}"))?;
    Ok(format!("orders {seen:?}"))
}

fn criterion3() -> Check {
    // (case, parameter, bound on |t|, pinned group order, pinned |t|)
    let cases = [
        (QuotientCase::VI, None, 12, 444, 12),
        (QuotientCase::VII, Some(4), 8, 72, 8),
        (QuotientCase::VII, Some(5), 10, 110, 10),
        (QuotientCase::VIII, None, 24, 9072, 24),
    ];
    let mut parts = Vec::new();
    for (case, k, bound, order_fixture, t_fixture) in cases {
        let (order, t) = timed(60, "enumeration", || quotient(case, k))?;
        ensure(t <= bound, || format!("{}: |t| = {t} exceeds {bound}", case.name()))?;
        ensure((order, t) == (order_fixture, t_fixture), || {
            format!("{}: (order, |t|) = ({order}, {t}), fixture ({order_fixture}, {t_fixture})", case.name())
        })?;
        parts.push(format!("{}{}: |t|={t}", case.name(), k.map(|k| format!("({k})")).unwrap_or_default()));
    }
    let iii_fixture = [(1, 2, 2), (2, 16, 8), (3, 78, 26), (4, 320, 80), (5, 1210, 242), (6, 4368, 728)];
    for (n, order_fixture, t_fixture) in iii_fixture {
        let (order, t) = timed(60, "enumeration", || quotient(QuotientCase::III, Some(n)))?;
        ensure((order, t) == (order_fixture, t_fixture), || format!("iii n={n}: ({order}, {t})"))?;
    }
    parts.push("iii n=1..6 finite".into());
    Ok(parts.join(", "))
}

const LETTERS: &str = "aAbBcCdD";

/// Endpoints of each letter: `a`, `b` run from `t⁻¹` to `t`, `c` loops at `t⁻¹`, `d` at `t`.
fn letter_ends(x: char) -> (u8, u8) {
    match x {
        'a' | 'b' => (1, 0),
        'A' | 'B' => (0, 1),
        'c' | 'C' => (1, 1),
        _ => (0, 0),
    }
}

fn swap_case(x: char) -> char {
    if x.is_ascii_lowercase() {
        x.to_ascii_uppercase()
    } else {
        x.to_ascii_lowercase()
    }
}

fn brute_force_classes(k: usize) -> BTreeSet<String> {
    let letters: Vec<char> = LETTERS.chars().collect();
    let mut out = BTreeSet::new();
    for code in 0..8usize.pow(k as u32) {
        let w: Vec<char> = (0..k).map(|i| letters[code / 8usize.pow(i as u32) % 8]).collect();
        let closed = (0..k).all(|i| {
            let (x, y) = (w[i], w[(i + 1) % k]);
            letter_ends(x).1 == letter_ends(y).0 && y != swap_case(x)
        });
        if closed {
            let s: String = w.iter().collect();
            out.insert(LabelWord::parse(&s).expect("letters").canonical().to_string());
        }
    }
    out
}

fn expand(family: &str) -> BTreeSet<String> {
    let mut words = vec![String::new()];
    let mut rest = family;
    while !rest.is_empty() {
        let (choices, tail): (Vec<&str>, &str) = match rest.strip_prefix('{') {
            Some(r) => {
                let end = r.find('}').expect("closing brace");
                (r[..end].split(',').collect(), &r[end + 1..])
            }
            None => {
                let end = rest.find('{').unwrap_or(rest.len());
                (vec![&rest[..end]], &rest[end..])
            }
        };
        words = words.iter().flat_map(|w| choices.iter().map(move |c| format!("{w}{c}"))).collect();
        rest = tail;
    }
    words.iter().map(|w| LabelWord::parse(w).expect("letters").canonical().to_string()).collect()
}

fn expand_all(families: &[&str]) -> BTreeSet<String> {
    families.iter().flat_map(|f| expand(f)).collect()
}

fn criterion4() -> Check {
    let g = StarGraph::canonical();
    let labels = |k| -> BTreeSet<String> { enumerate_cycle_labels(&g, k).iter().map(|w| w.to_string()).collect() };
    let s2 = labels(2);
    ensure(s2 == expand_all(&["cc", "dd", "Ab"]), || format!("S2 = {s2:?}"))?;
    let s3 = labels(3);
    ensure(s3 == expand_all(&["ccc", "caB", "CaB", "dBa", "DBa", "ddd"]), || format!("S3 = {s3:?}"))?;
    let s4 = labels(4);
    let list4 = expand_all(&["dddd", "ddAb", "ddBa", "ccaB", "ccbA", "cccc", "aBaB", "d{A,B}{c,C}{a,b}"]);
    ensure(s4 == list4, || format!("S4 = {s4:?}"))?;
    let brute = brute_force_classes(4);
    ensure(brute.len() == 15 && s4 == brute, || format!("brute force gives {} classes", brute.len()))?;
    let list5 = expand_all(&[
        "ddddd", "dddAb", "dddBa", "cccaB", "cccbA", "ccccc", "caBaB", "cbAbA", "dAbAb", "dBaBa",
        "dd{A,B}{c,C}{a,b}", "cc{a,b}{d,D}{A,B}",
    ]);
    let list6 = expand_all(&[
        "dddddd", "ddddAb", "ddddBa", "ccccaB", "ccccbA", "cccccc", "aBaBaB", "ddAbAb", "ddBaBa", "ccaBaB",
        "ccbAbA", "ddd{A,B}{c,C}{a,b}", "dd{A,B}{cc,CC}{a,b}", "d{A,B}{ccc,CCC}{a,b}", "c{aB,bA}{c,C}{aB,bA}",
        "d{Ab,Ba}{d,D}{Ab,Ba}", "c{aBa,bAb}{d,D}{A,B}", "c{a,b}{d,D}{AbA,BaB}",
    ]);
    let (s5, s6) = (labels(5), labels(6));
    ensure(list5.is_subset(&s5), || format!("missing at k=5: {:?}", list5.difference(&s5).collect::<Vec<_>>()))?;
    ensure(list6.is_subset(&s6), || format!("missing at k=6: {:?}", list6.difference(&s6).collect::<Vec<_>>()))?;
    Ok(format!("|S2|={} |S3|={} |S4|={} |S5|={} |S6|={}", s2.len(), s3.len(), s4.len(), s5.len(), s6.len()))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn weak(t: &Tuple, alpha: &WeightFunction) -> Result<Option<String>, String> {
    let g = StarGraph::canonical();
    let v = timed(5, "weight check", || decide_weak_asphericity(&g, alpha, t, 100_000).map_err(|e| e.to_string()))?;
    match v {
        WeakAsphericityVerdict::WeaklyAspherical(_) => Ok(None),
        WeakAsphericityVerdict::Counterexample(w) => {
            ensure(verify_counterexample(&g, alpha, t, &w), || format!("counterexample {} does not verify", w.label))?;
            Ok(Some(w.label.to_string()))
        }
        WeakAsphericityVerdict::Unknown { reason, .. } => Err(format!("unknown: {reason}")),
    }
}

fn criterion5() -> Check {
    let vec = |v: &[i64]| GroupValue::Vector(v.to_vec());
    let e = |x: asphere_core::Error| x.to_string();
    let a1 = WeightFunction::canonical(q(1, 1), q(1, 1), q(0, 1), q(0, 1)).map_err(e)?;
    let a2 = WeightFunction::canonical(q(1, 2), q(1, 2), q(1, 1), q(0, 1)).map_err(e)?;
    let a3 = WeightFunction::canonical(q(0, 1), q(0, 1), q(1, 1), q(1, 1)).map_err(e)?;
    let z2 = GroupSpec::fg_abelian(2, vec![]).map_err(e)?;
    let t1 = Tuple::from_bcd(z2, vec(&[1, 1]), vec(&[1, 0]), vec(&[0, 1])).map_err(e)?;
    ensure(weak(&t1, &a1)?.is_none(), || "clause (i) instance has a counterexample".into())?;
    let zq = GroupSpec::fg_abelian(1, vec![3]).map_err(e)?;
    let t2 = Tuple::from_bcd(zq, vec(&[0, 1]), vec(&[2, 1]), vec(&[1, 0])).map_err(e)?;
    ensure(weak(&t2, &a2)?.is_none(), || "clause (ii) instance has a counterexample".into())?;
    let z6 = GroupSpec::fg_abelian(1, vec![6]).map_err(e)?;
    let t3 = Tuple::from_bcd(z6, vec(&[1, 0]), vec(&[0, 2]), vec(&[0, 3])).map_err(e)?;
    ensure(weak(&t3, &a3)?.is_none(), || "clause (iii) instance has a counterexample".into())?;
    let int = GroupValue::Int;
    let broken = Tuple::from_bcd(GroupSpec::Cyclic(3), int(0), int(1), int(1)).map_err(e)?;
    let w = weak(&broken, &a1)?.ok_or("|c| = 3 under (1,1,0,0) gave no counterexample")?;
    let broken2 = Tuple::from_bcd(GroupSpec::InfiniteCyclic, int(3), int(5), int(1)).map_err(e)?;
    let w2 = weak(&broken2, &a2)?.ok_or("b = d^3 in Z under (1/2,1/2,1,0) gave no counterexample")?;
    Ok(format!("(i)-(iii) weakly aspherical; counterexamples {w}, {w2} verified"))
}

fn small_groups() -> Vec<GroupSpec> {
    let mut v: Vec<GroupSpec> = (2..=12).map(GroupSpec::Cyclic).collect();
    for f in [[2, 2], [2, 4], [2, 6], [3, 3]] {
        v.push(GroupSpec::product(f.iter().map(|&n| GroupSpec::Cyclic(n)).collect()).expect("factors"));
    }
    for n in 3..=6 {
        v.push(GroupSpec::cayley(CayleyTable::dihedral(n).expect("dihedral")));
    }
    let (s4, _) = CayleyTable::from_permutations(&[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 24).expect("S4");
    v.push(GroupSpec::cayley(s4));
    v
}

fn coefficients(g: &GroupSpec, b: &GroupValue, c: &GroupValue, d: &GroupValue) -> Option<Coefficients> {
    Coefficients::new(g.clone(), g.identity(), b.clone(), c.clone(), d.clone()).ok()
}

fn open_with(co: &Coefficients, id: ConditionId) -> Result<(), String> {
    let describe = |co: &Coefficients| format!("({}, {}, {}, {}) in {}", co.g1, co.g2, co.g3, co.g4, co.group);
    for co in [co.clone(), t_transform(co)] {
        let c = classify(&co).map_err(|e| e.to_string())?;
        match &c.result {
            ClassificationResult::OpenCase { exceptions } if exceptions.iter().any(|w| w.condition == id) => {}
            r => return Err(format!("{} on {}: {}", id.name(), describe(&co), r.verdict_name())),
        }
    }
    Ok(())
}

fn criterion6() -> Check {
    let e = |x: asphere_core::Error| x.to_string();
    let int = GroupValue::Int;
    let z24 = GroupSpec::product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)]).map_err(e)?;
    let pair = |x: i64, y: i64| GroupValue::Tuple(vec![int(x), int(y)]);
    let exceptional = [
        (ConditionId::E, z24.clone(), pair(0, 0), pair(1, 0), pair(0, 1)),
        (ConditionId::E1, GroupSpec::Cyclic(5), int(2), int(3), int(1)),
        (ConditionId::E2, GroupSpec::Cyclic(6), int(0), int(2), int(1)),
        (ConditionId::E3, GroupSpec::Cyclic(6), int(0), int(4), int(1)),
        (ConditionId::E4, GroupSpec::Cyclic(8), int(0), int(4), int(1)),
    ];
    for (id, g, b, c, d) in &exceptional {
        let co = coefficients(g, b, c, d).ok_or_else(|| format!("{} instance is invalid", id.name()))?;
        let t = derive_tuple(&co).map_err(e)?;
        ensure(evaluate_condition(&t, *id), || format!("{} does not hold on its instance", id.name()))?;
        open_with(&co, *id)?;
    }

    let groups = small_groups();
    let mut missing: Vec<ConditionId> = ConditionId::ALL.iter().copied().filter(|c| !c.is_exception()).collect();
    'groups: for g in &groups {
        let els = g.elements().expect("finite");
        for b in &els {
            for c in &els {
                for d in &els {
                    if missing.is_empty() {
                        break 'groups;
                    }
                    let Some(co) = coefficients(g, b, c, d) else { continue };
                    let t = derive_tuple(&co).map_err(e)?;
                    let holding: Vec<ConditionId> = missing.iter().copied().filter(|&id| evaluate_condition(&t, id)).collect();
                    if holding.is_empty() {
                        continue;
                    }
                    if let ClassificationResult::NotAspherical { witnesses } = classify(&co).map_err(e)?.result {
                        missing.retain(|id| {
                            !witnesses.iter().any(|w| w.representative == Representative::Original && w.condition == *id)
                        });
                    }
                }
            }
        }
    }
    ensure(missing.is_empty(), || {
        format!("no NotAspherical instance found for {:?}", missing.iter().map(|c| c.name()).collect::<Vec<_>>())
    })?;

    let mut sweep: Vec<GroupSpec> = (2..=10).map(GroupSpec::Cyclic).collect();
    sweep.push(GroupSpec::product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]).map_err(e)?);
    sweep.push(z24);
    let mut count = 0usize;
    let mut open = 0usize;
    for g in &sweep {
        let els = g.elements().expect("finite");
        for g1 in &els {
            for g2 in &els {
                for g3 in els.iter().filter(|x| !g.is_identity(x)) {
                    for g4 in els.iter().filter(|x| !g.is_identity(x)) {
                        let co = Coefficients::new(g.clone(), g1.clone(), g2.clone(), g3.clone(), g4.clone()).map_err(e)?;
                        let a = classify(&co).map_err(e)?.result;
                        let b = classify(&t_transform(&co)).map_err(e)?.result;
                        ensure(a == b.mirrored(), || {
                            format!("T-invariance fails at ({g1}, {g2}, {g3}, {g4}) in {g}: {} vs {}", a.verdict_name(), b.verdict_name())
                        })?;
                        if let ClassificationResult::OpenCase { exceptions } = &a {
                            open += 1;
                            ensure(exceptions.iter().all(|w| w.condition.is_exception()), || "open case without exception".into())?;
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("exceptions open, every T condition witnessed, {count} tuples T-invariant ({open} open)"))
}

fn map_families() -> Vec<(SphereFamily, std::ops::RangeInclusive<u64>)> {
    vec![
        (SphereFamily::AI, 3..=8),
        (SphereFamily::AIII, 3..=8),
        (SphereFamily::AII, 3..=6),
        (SphereFamily::BI, 3..=6),
        (SphereFamily::BII, 3..=6),
        (SphereFamily::CI, 3..=6),
        (SphereFamily::CII, 3..=6),
    ]
}

fn census_quotes() -> Vec<(SphereFamily, [(&'static str, u64); 4])> {
    vec![
        (SphereFamily::BIII, [("aBaB", 30), ("bdAC", 60), ("ccc", 20), ("DDDDD", 12)]),
        (SphereFamily::BIV, [("aBaBaB", 20), ("bdAC", 60), ("cc", 30), ("DDDDD", 12)]),
        (SphereFamily::BV, [("aBaBaBaBaB", 12), ("bdAC", 60), ("cc", 30), ("DDD", 20)]),
        (SphereFamily::CIII, [("aB", 60), ("bdACbdACbdAC", 20), ("cc", 30), ("DDDDD", 12)]),
        (SphereFamily::CIV, [("aB", 60), ("bdACbdAC", 30), ("ccc", 20), ("DDDDD", 12)]),
        (SphereFamily::CV, [("aB", 60), ("bdACbdACbdACbdACbdAC", 12), ("cc", 30), ("DDD", 20)]),
    ]
}

fn criterion7() -> Check {
    let e = |x: asphere_core::Error| x.to_string();
    let mut pictures = 0;
    for (f, range) in map_families() {
        for n in range {
            let id = SphereFamilyId::new(f, n).map_err(e)?;
            let pic = generate_sphere(id).map_err(e)?;
            let t = realizing_tuple(id).map_err(e)?;
            let r = verify_picture(&pic, &t).map_err(e)?;
            ensure(r.passed(), || format!("{f} n={n}: {r:?}"))?;
            ensure(r.curvature_total == Rational::from_integer(4), || format!("{f} n={n}: curvature {}", r.curvature_total))?;
            let census = pic.census().map_err(e)?;
            ensure(census == family_census(id).map_err(e)?, || format!("{f} n={n}: census {census}"))?;
            pictures += 1;
        }
    }
    for (f, items) in census_quotes() {
        let id = SphereFamilyId::new(f, 5).map_err(e)?;
        let quoted = Census::parse(&items).map_err(e)?;
        ensure(quoted == family_census(id).map_err(e)?, || format!("{f}: quoted census differs"))?;
        ensure(census_check_abelianized(&quoted, &family_relations(id)), || format!("{f}: abelianized check fails"))?;
        let t = realizing_tuple(id).map_err(e)?;
        ensure(census_check(&quoted, &t), || format!("{f}: check in the realizing group fails"))?;
    }
    Ok(format!("{pictures} pictures verified, 6 quoted censuses checked"))
}

fn instance(t: &Tuple) -> Result<Coefficients, String> {
    coefficients(&t.group, &t.b, &t.c, &t.d).ok_or_else(|| "realizing tuple has a trivial coefficient".into())
}

fn criterion8() -> Check {
    let e = |x: asphere_core::Error| x.to_string();
    let mut ids = Vec::new();
    for (f, range) in map_families() {
        ids.extend(range.map(|n| SphereFamilyId::new(f, n)));
    }
    for (f, _) in census_quotes() {
        let (lo, hi) = f.range();
        ids.extend((lo..=hi).map(|k| SphereFamilyId::new(f, k)));
    }
    for id in ids {
        let id = id.map_err(e)?;
        let co = instance(&realizing_tuple(id).map_err(e)?)?;
        let v = classify(&co).map_err(e)?.result;
        ensure(matches!(v, ClassificationResult::NotAspherical { .. } | ClassificationResult::OpenCase { .. }), || {
            format!("{} {} realizing tuple classified {}", id.family, id.param, v.verdict_name())
        })?;
    }

    let mut spheres: Vec<(SphereFamilyId, CombinatorialPicture)> = Vec::new();
    for f in SphereFamily::ALL.into_iter().filter(|f| f.has_map()) {
        for n in 2..=8 {
            let id = SphereFamilyId::new(f, n).map_err(e)?;
            spheres.push((id, generate_sphere(id).map_err(e)?));
        }
    }
    let mut groups: Vec<GroupSpec> = (2..=8).map(GroupSpec::Cyclic).collect();
    groups.push(GroupSpec::product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]).map_err(e)?);
    groups.push(GroupSpec::cayley(CayleyTable::dihedral(3).map_err(e)?));
    let mut aspherical = 0;
    for g in &groups {
        let els = g.elements().expect("finite");
        for b in &els {
            for c in &els {
                for d in &els {
                    let Some(co) = coefficients(g, b, c, d) else { continue };
                    if !matches!(classify(&co).map_err(e)?.result, ClassificationResult::Aspherical { .. }) {
                        continue;
                    }
                    aspherical += 1;
                    let t = derive_tuple(&co).map_err(e)?;
                    for (id, pic) in &spheres {
                        let r = verify_picture(pic, &t).map_err(e)?;
                        ensure(!r.passed(), || format!("aspherical ({b}, {c}, {d}) in {g} admits the {} sphere, n={}", id.family, id.param))?;
                    }
                }
            }
        }
    }
    Ok(format!("all witness instances non-aspherical or open; {aspherical} aspherical instances admit no generated sphere"))
}

fn criterion9() -> Check {
    let report = verify_gap_bounds(64);
    ensure(report.passed(), || {
        let bad: Vec<String> = report.clauses.iter().filter(|c| !c.violations.is_empty()).map(|c| format!("{}: {:?}", c.name, c.violations)).collect();
        format!("failing clauses: {}", bad.join("; "))
    })?;
    let c = region_curvature(&[4, 4, 4]).map_err(|e| e.to_string())?;
    ensure(c == q(1, 2), || format!("c(4,4,4) = {c}"))?;
    Ok(format!("{} gap clauses hold for k <= 64; c(4,4,4) = {c} pi", report.clauses.len()))
}

pub fn run_all() -> Vec<Outcome> {
    vec![
        run(1, "coset enumeration, case (i)", 20, criterion1),
        run(2, "coset enumeration, case (ii)", 40, criterion2),
        run(3, "finite t in cases (iii), (vi)-(viii)", 240, criterion3),
        run(4, "star graph labels", 1, criterion4),
        run(5, "weight functions", 30, criterion5),
        run(6, "classifier", 60, criterion6),
        run(7, "picture witnesses", 10, criterion7),
        run(8, "cross-module consistency", 10, criterion8),
        run(9, "curvature bounds", 5, criterion9),
    ]
}
