use asphere_core::cosetenum::{check_quotient, group_order, quotient_presentation, QuotientCase, QuotientClaim};

const BOUND: usize = 2_000_000;

fn run(case: QuotientCase, param: Option<u32>) -> (u64, u64) {
    let inst = quotient_presentation(case, param).unwrap();
    let out = check_quotient(&inst, BOUND).unwrap();
    assert!(out.holds, "{case:?} {param:?}: {out:?}");
    (out.order, out.t_order)
}

#[test]
fn case_i_orders() {
    assert_eq!(run(QuotientCase::I, Some(1)), (16, 8));
    assert_eq!(run(QuotientCase::I, Some(2)), (320, 16));
}

#[test]
fn case_i_with_b_matches_two_generator_form() {
    for k in 1..=2 {
        let a = quotient_presentation(QuotientCase::I, Some(k)).unwrap();
        let b = quotient_presentation(QuotientCase::IWithB, Some(k)).unwrap();
        assert_eq!(
            group_order(&a.presentation, BOUND).unwrap(),
            group_order(&b.presentation, BOUND).unwrap()
        );
    }
}

#[test]
fn case_ii_orders() {
    let got: Vec<u64> = (1..=4).map(|k| run(QuotientCase::II, Some(k)).0).collect();
    assert_eq!(got, vec![2, 20, 126, 680]);
    for k in 1..=4u32 {
        let geometric: u64 = (0..k).map(|i| 4u64.pow(i)).sum();
        assert_eq!(got[k as usize - 1], 2 * k as u64 * geometric);
    }
}

#[test]
fn case_iii_t_orders() {
    let want = [(2, 2), (16, 8), (78, 26), (320, 80), (1210, 242), (4368, 728)];
    for (n, w) in (1..=6).zip(want) {
        assert_eq!(run(QuotientCase::III, Some(n)), w, "n={n}");
    }
}

#[test]
fn cases_vi_to_viii() {
    assert_eq!(run(QuotientCase::VI, None), (444, 12));
    assert_eq!(run(QuotientCase::VII, Some(4)), (72, 8));
    assert_eq!(run(QuotientCase::VII, Some(5)), (110, 10));
    assert_eq!(run(QuotientCase::VIII, None), (9072, 24));
}

#[test]
fn claims_are_recorded() {
    let inst = quotient_presentation(QuotientCase::I, Some(2)).unwrap();
    assert_eq!(inst.claim, QuotientClaim::Order(320));
    assert!(quotient_presentation(QuotientCase::VII, Some(6)).is_err());
    assert!(quotient_presentation(QuotientCase::II, None).is_err());
}
