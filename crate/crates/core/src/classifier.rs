//! Asphericity classification of `⟨G, x | x g1 x g2 x g3 x⁻¹ g4⟩` up to T-equivalence.

use crate::groups::{AbelianInvariants, ExtendedNat};
use crate::presentation::{derive_tuple, parse_word, t_transform, Coefficients, Tuple};
use crate::prelude::*;
use crate::{Error, Rational, Result};
use core::fmt;

/// The tuple-level conditions and exceptional cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(non_camel_case_types)]
pub enum ConditionId {
    E,
    E1,
    E2,
    E3,
    E4,
    T1_i,
    T1_ii,
    T1_iii,
    T2_i,
    T2_ii,
    T2_iii,
    T2_iv,
    T2_v,
    T2_vi,
    T2_vii,
    T2_viii,
    T2_ix,
    T2_x,
}

impl ConditionId {
    pub const ALL: [ConditionId; 18] = [
        ConditionId::E,
        ConditionId::E1,
        ConditionId::E2,
        ConditionId::E3,
        ConditionId::E4,
        ConditionId::T1_i,
        ConditionId::T1_ii,
        ConditionId::T1_iii,
        ConditionId::T2_i,
        ConditionId::T2_ii,
        ConditionId::T2_iii,
        ConditionId::T2_iv,
        ConditionId::T2_v,
        ConditionId::T2_vi,
        ConditionId::T2_vii,
        ConditionId::T2_viii,
        ConditionId::T2_ix,
        ConditionId::T2_x,
    ];

    pub const NONCYCLIC: [ConditionId; 3] = [ConditionId::T1_i, ConditionId::T1_ii, ConditionId::T1_iii];

    pub const CYCLIC: [ConditionId; 10] = [
        ConditionId::T2_i,
        ConditionId::T2_ii,
        ConditionId::T2_iii,
        ConditionId::T2_iv,
        ConditionId::T2_v,
        ConditionId::T2_vi,
        ConditionId::T2_vii,
        ConditionId::T2_viii,
        ConditionId::T2_ix,
        ConditionId::T2_x,
    ];

    pub const CYCLIC_EXCEPTIONS: [ConditionId; 4] = [ConditionId::E1, ConditionId::E2, ConditionId::E3, ConditionId::E4];

    pub fn name(self) -> &'static str {
        match self {
            ConditionId::E => "E",
            ConditionId::E1 => "E1",
            ConditionId::E2 => "E2",
            ConditionId::E3 => "E3",
            ConditionId::E4 => "E4",
            ConditionId::T1_i => "T1_i",
            ConditionId::T1_ii => "T1_ii",
            ConditionId::T1_iii => "T1_iii",
            ConditionId::T2_i => "T2_i",
            ConditionId::T2_ii => "T2_ii",
            ConditionId::T2_iii => "T2_iii",
            ConditionId::T2_iv => "T2_iv",
            ConditionId::T2_v => "T2_v",
            ConditionId::T2_vi => "T2_vi",
            ConditionId::T2_vii => "T2_vii",
            ConditionId::T2_viii => "T2_viii",
            ConditionId::T2_ix => "T2_ix",
            ConditionId::T2_x => "T2_x",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn is_exception(self) -> bool {
        self <= ConditionId::E4
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn trivial(t: &Tuple, w: &str) -> bool {
    t.is_trivial(&parse_word(w).expect("condition words are well formed"))
}

fn order(t: &Tuple, w: &str) -> ExtendedNat {
    t.order_of(&parse_word(w).expect("condition words are well formed"))
}

/// Evaluates one condition on a tuple. Orders may be infinite; `1/∞ = 0`.
pub fn evaluate_condition(t: &Tuple, id: ConditionId) -> bool {
    let oc = || order(t, "c");
    let od = || order(t, "d");
    match id {
        ConditionId::E => oc().is(2) && od().is(4) && trivial(t, "b") && trivial(t, "cdCD"),
        ConditionId::E1 => od().is(5) && trivial(t, "bDD") && trivial(t, "cDDD"),
        ConditionId::E2 => od().is(6) && trivial(t, "b") && trivial(t, "cDD"),
        ConditionId::E3 => od().is(6) && trivial(t, "b") && trivial(t, "cDDDD"),
        ConditionId::E4 => od().is(8) && trivial(t, "b") && trivial(t, "cDDDD"),
        ConditionId::T1_i => od().is_finite() && trivial(t, "caB"),
        ConditionId::T1_ii => {
            order(t, "Ab").is_finite() && oc().is(2) && od().is(2) && trivial(t, "Acad") && trivial(t, "bDBC")
        }
        ConditionId::T1_iii => {
            let s: Rational = [order(t, "Ab"), oc(), od(), order(t, "bdAC")].iter().map(|o| o.reciprocal()).sum();
            s > Rational::from_integer(2)
        }
        ConditionId::T2_i => trivial(t, "caB"),
        ConditionId::T2_ii => trivial(t, "CaB") && trivial(t, "cadB"),
        ConditionId::T2_iii => trivial(t, "CaB") && trivial(t, "dBa"),
        ConditionId::T2_iv => oc().is(2) && od().is(2),
        ConditionId::T2_v => oc().is(2) && trivial(t, "cbdA") && trivial(t, "AbDD"),
        ConditionId::T2_vi => oc().is(2) && trivial(t, "cbdA") && trivial(t, "AbAbD"),
        ConditionId::T2_vii => trivial(t, "Ab") && (trivial(t, "cadA") || trivial(t, "caDA")),
        ConditionId::T2_viii => trivial(t, "Ab") && oc().is(2) && od().is(3),
        ConditionId::T2_ix => {
            let c = oc();
            trivial(t, "Ab") && (c.is(4) || c.is(5)) && trivial(t, "ccadA")
        }
        ConditionId::T2_x => trivial(t, "Ab") && oc().is(6) && trivial(t, "cccadA"),
    }
}

/// Which member of the T-equivalence pair a condition was evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Representative {
    Original,
    TImage,
}

impl Representative {
    pub fn name(self) -> &'static str {
        match self {
            Representative::Original => "original",
            Representative::TImage => "t_image",
        }
    }

    fn other(self) -> Self {
        match self {
            Representative::Original => Representative::TImage,
            Representative::TImage => Representative::Original,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub representative: Representative,
    pub condition: ConditionId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConditionRecord {
    pub representative: Representative,
    pub condition: ConditionId,
    pub holds: bool,
}

/// Why a presentation was found aspherical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AsphericalBasis {
    /// `H` is infinite cyclic.
    InfiniteCyclic,
    /// No listed condition holds on either representative.
    NoConditionHolds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassificationResult {
    Aspherical { basis: AsphericalBasis, checked: Vec<Witness> },
    NotAspherical { witnesses: Vec<Witness> },
    /// Every exceptional case that holds; the verdict is left open.
    OpenCase { exceptions: Vec<Witness> },
    Unsupported { reason: String },
}

impl ClassificationResult {
    pub fn verdict_name(&self) -> &'static str {
        match self {
            ClassificationResult::Aspherical { .. } => "Aspherical",
            ClassificationResult::NotAspherical { .. } => "NotAspherical",
            ClassificationResult::OpenCase { .. } => "OpenCase",
            ClassificationResult::Unsupported { .. } => "Unsupported",
        }
    }

    /// The least exceptional condition that holds, for open cases.
    pub fn exception(&self) -> Option<ConditionId> {
        match self {
            ClassificationResult::OpenCase { exceptions } => exceptions.iter().map(|w| w.condition).min(),
            _ => None,
        }
    }

    /// The same result with the two representatives swapped.
    pub fn mirrored(&self) -> Self {
        let swap = |ws: &[Witness]| {
            let mut v: Vec<Witness> = ws
                .iter()
                .map(|w| Witness { representative: w.representative.other(), condition: w.condition })
                .collect();
            v.sort();
            v
        };
        match self {
            ClassificationResult::Aspherical { basis, checked } => {
                ClassificationResult::Aspherical { basis: *basis, checked: swap(checked) }
            }
            ClassificationResult::NotAspherical { witnesses } => {
                ClassificationResult::NotAspherical { witnesses: swap(witnesses) }
            }
            ClassificationResult::OpenCase { exceptions } => ClassificationResult::OpenCase { exceptions: swap(exceptions) },
            ClassificationResult::Unsupported { reason } => ClassificationResult::Unsupported { reason: reason.clone() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSummary {
    pub order: ExtendedNat,
    pub cyclic: bool,
    pub invariants: Option<AbelianInvariants>,
}

/// Verdict plus the raw condition values on both representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub result: ClassificationResult,
    pub h: Option<HSummary>,
    pub conditions: Vec<ConditionRecord>,
}

/// Classifies a presentation.
pub fn classify(co: &Coefficients) -> Result<Classification> {
    if co.group.is_identity(&co.g3) || co.group.is_identity(&co.g4) {
        return Err(Error::invalid("g3 and g4 must not be the identity"));
    }
    let derived = derive_tuple(co).and_then(|t| Ok((t, derive_tuple(&t_transform(co))?)));
    let (orig, image) = match derived {
        Ok(p) => p,
        Err(Error::Unsupported(reason)) => {
            return Ok(Classification {
                result: ClassificationResult::Unsupported { reason },
                h: None,
                conditions: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    let h = HSummary {
        order: orig.h.order(),
        cyclic: orig.h.is_cyclic(),
        invariants: orig.h.abelian_invariants().ok().cloned(),
    };
    let reps = [(Representative::Original, &orig), (Representative::TImage, &image)];
    let mut conditions = Vec::new();
    for (rep, t) in reps {
        for id in ConditionId::ALL {
            conditions.push(ConditionRecord { representative: rep, condition: id, holds: evaluate_condition(t, id) });
        }
    }
    conditions.sort();
    let hits = |ids: &[ConditionId]| -> Vec<Witness> {
        let mut v: Vec<Witness> = conditions
            .iter()
            .filter(|r| r.holds && ids.contains(&r.condition))
            .map(|r| Witness { representative: r.representative, condition: r.condition })
            .collect();
        v.sort();
        v
    };
    let checked_of = |ids: &[ConditionId]| -> Vec<Witness> {
        let mut v: Vec<Witness> = reps
            .iter()
            .flat_map(|(rep, _)| ids.iter().map(|&c| Witness { representative: *rep, condition: c }))
            .collect();
        v.sort();
        v
    };

    let result = if h.cyclic && !h.order.is_finite() {
        ClassificationResult::Aspherical { basis: AsphericalBasis::InfiniteCyclic, checked: Vec::new() }
    } else {
        let (exceptions, conds): (&[ConditionId], &[ConditionId]) = if h.cyclic {
            (&ConditionId::CYCLIC_EXCEPTIONS, &ConditionId::CYCLIC)
        } else {
            (&[ConditionId::E], &ConditionId::NONCYCLIC)
        };
        let ex = hits(exceptions);
        let wit = hits(conds);
        if !ex.is_empty() {
            ClassificationResult::OpenCase { exceptions: ex }
        } else if !wit.is_empty() {
            ClassificationResult::NotAspherical { witnesses: wit }
        } else {
            ClassificationResult::Aspherical { basis: AsphericalBasis::NoConditionHolds, checked: checked_of(conds) }
        }
    };
    Ok(Classification { result, h: Some(h), conditions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupSpec, GroupValue};

    fn z(n: i64) -> GroupValue {
        GroupValue::Int(n)
    }

    fn v(a: i64, b: i64) -> GroupValue {
        GroupValue::Tuple(vec![z(a), z(b)])
    }

    fn z2z2() -> GroupSpec {
        GroupSpec::product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]).unwrap()
    }

    #[test]
    fn t1_ii_in_klein_group() {
        let t = Tuple::from_bcd(z2z2(), v(1, 0), v(0, 1), v(0, 1)).unwrap();
        assert!(evaluate_condition(&t, ConditionId::T1_ii));
    }

    #[test]
    fn t2_i_in_z6() {
        let t = Tuple::from_bcd(GroupSpec::Cyclic(6), z(2), z(2), z(2)).unwrap();
        assert!(evaluate_condition(&t, ConditionId::T2_i));
    }

    #[test]
    fn t1_iii_sum_four_thirds() {
        let g = GroupSpec::product(vec![GroupSpec::Cyclic(3), GroupSpec::Cyclic(3)]).unwrap();
        let t = Tuple::from_bcd(g, v(1, 1), v(1, 0), v(0, 1)).unwrap();
        assert_eq!(t.order_of(&parse_word("bdAC").unwrap()), ExtendedNat::Finite(3));
        assert!(!evaluate_condition(&t, ConditionId::T1_iii));
    }

    #[test]
    fn e1_is_open() {
        let co = Coefficients::new(GroupSpec::Cyclic(5), z(0), z(2), z(3), z(1)).unwrap();
        let c = classify(&co).unwrap();
        assert_eq!(c.result.verdict_name(), "OpenCase");
        assert_eq!(c.result.exception(), Some(ConditionId::E1));
    }

    #[test]
    fn infinite_cyclic_is_aspherical() {
        let co = Coefficients::new(GroupSpec::InfiniteCyclic, z(0), z(0), z(1), z(1)).unwrap();
        let c = classify(&co).unwrap();
        assert_eq!(
            c.result,
            ClassificationResult::Aspherical { basis: AsphericalBasis::InfiniteCyclic, checked: vec![] }
        );
    }

    #[test]
    fn klein_group_not_aspherical() {
        let co = Coefficients::new(z2z2(), v(0, 0), v(1, 0), v(0, 1), v(0, 1)).unwrap();
        let c = classify(&co).unwrap();
        let ClassificationResult::NotAspherical { witnesses } = &c.result else { panic!("{:?}", c.result) };
        assert!(witnesses.contains(&Witness { representative: Representative::Original, condition: ConditionId::T1_ii }));
        assert!(!evaluate_condition(
            &derive_tuple(&co).unwrap(),
            ConditionId::E
        ));
    }

    #[test]
    fn trivial_coefficients_rejected() {
        let g = GroupSpec::Cyclic(5);
        assert!(classify(&Coefficients { group: g.clone(), g1: z(0), g2: z(0), g3: z(0), g4: z(1) }).is_err());
    }

    #[test]
    fn names_roundtrip() {
        for id in ConditionId::ALL {
            assert_eq!(ConditionId::parse(id.name()), Some(id));
        }
    }
}
