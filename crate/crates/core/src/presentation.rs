//! The relator `x g1 x g2 x g3 x⁻¹ g4`, its normalized tuple and T-equivalence.

use crate::groups::{subgroup_closure, ExtendedNat, GroupSpec, GroupValue, Subgroup};
use crate::prelude::*;
use crate::{Error, Result};
use core::fmt;

/// Coefficient symbols of the normalized relator `t a t b t c t⁻¹ d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    A,
    B,
    C,
    D,
}

impl Sym {
    pub const ALL: [Sym; 4] = [Sym::A, Sym::B, Sym::C, Sym::D];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// A coefficient symbol with exponent ±1. Ordered `a < A < b < B < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub sym: Sym,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(sym: Sym, inverse: bool) -> Self {
        Letter { sym, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { sym: self.sym, inverse: !self.inverse }
    }

    /// Lowercase for the symbol, uppercase for its inverse.
    pub fn from_char(c: char) -> Option<Self> {
        let sym = match c.to_ascii_lowercase() {
            'a' => Sym::A,
            'b' => Sym::B,
            'c' => Sym::C,
            'd' => Sym::D,
            _ => return None,
        };
        Some(Letter { sym, inverse: c.is_ascii_uppercase() })
    }

    pub fn to_char(self) -> char {
        let c = b"abcd"[self.sym.index()] as char;
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Formal inverse of a coefficient word.
pub fn invert_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// Parses a word such as `"aBc"`.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    s.chars()
        .map(|c| Letter::from_char(c).ok_or_else(|| Error::invalid(format!("bad letter {c:?} in {s:?}"))))
        .collect()
}

pub fn word_to_string(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_char()).collect()
}

/// `(g1, g2, g3, g4)` in a group `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coefficients {
    pub group: GroupSpec,
    pub g1: GroupValue,
    pub g2: GroupValue,
    pub g3: GroupValue,
    pub g4: GroupValue,
}

impl Coefficients {
    /// Checks membership and the hypotheses `g3 ≠ 1`, `g4 ≠ 1`.
    pub fn new(group: GroupSpec, g1: GroupValue, g2: GroupValue, g3: GroupValue, g4: GroupValue) -> Result<Self> {
        for (name, g) in [("g1", &g1), ("g2", &g2), ("g3", &g3), ("g4", &g4)] {
            if !group.contains(g) {
                return Err(Error::mismatch(format!("{name} = {g} is not an element of {group}")));
            }
        }
        if group.is_identity(&g3) {
            return Err(Error::invalid("g3 must not be the identity"));
        }
        if group.is_identity(&g4) {
            return Err(Error::invalid("g4 must not be the identity"));
        }
        Ok(Coefficients { group, g1, g2, g3, g4 })
    }
}

/// Normalized coefficients `a = 1, b = g1⁻¹g2, c = g1⁻¹g3g1, d = g4` and `H = ⟨b, c, d⟩`.
#[derive(Debug, Clone)]
pub struct Tuple {
    pub group: GroupSpec,
    pub a: GroupValue,
    pub b: GroupValue,
    pub c: GroupValue,
    pub d: GroupValue,
    pub h: Subgroup,
}

impl Tuple {
    /// Builds a tuple directly from `(b, c, d)`.
    pub fn from_bcd(group: GroupSpec, b: GroupValue, c: GroupValue, d: GroupValue) -> Result<Self> {
        let e = group.identity();
        derive_tuple(&Coefficients::new(group, e.clone(), b, c, d)?)
    }

    pub fn value(&self, l: Letter) -> GroupValue {
        let v = match l.sym {
            Sym::A => &self.a,
            Sym::B => &self.b,
            Sym::C => &self.c,
            Sym::D => &self.d,
        };
        if l.inverse {
            self.group.inv(v).expect("tuple values lie in the group")
        } else {
            v.clone()
        }
    }

    /// Product of the letters of `w` in order.
    pub fn eval(&self, w: &[Letter]) -> GroupValue {
        let vals: Vec<GroupValue> = w.iter().map(|&l| self.value(l)).collect();
        self.group.product_of(&vals).expect("tuple values lie in the group")
    }

    pub fn is_trivial(&self, w: &[Letter]) -> bool {
        self.group.is_identity(&self.eval(w))
    }

    pub fn order_of(&self, w: &[Letter]) -> ExtendedNat {
        self.group.element_order(&self.eval(w)).expect("tuple values lie in the group")
    }
}

/// Derives the normalized tuple and its subgroup `H`.
pub fn derive_tuple(co: &Coefficients) -> Result<Tuple> {
    let g = &co.group;
    if g.is_identity(&co.g3) || g.is_identity(&co.g4) {
        return Err(Error::invalid("g3 and g4 must not be the identity"));
    }
    let g1i = g.inv(&co.g1)?;
    let b = g.mul(&g1i, &co.g2)?;
    let c = g.product_of([&g1i, &co.g3, &co.g1])?;
    let d = co.g4.clone();
    let h = subgroup_closure(g, &[b.clone(), c.clone(), d.clone()])?;
    Ok(Tuple { group: g.clone(), a: g.identity(), b, c, d, h })
}

/// `(g1, g2, g3, g4) ↦ (g2⁻¹, g1⁻¹, g4⁻¹, g3⁻¹)`.
pub fn t_transform(co: &Coefficients) -> Coefficients {
    let g = &co.group;
    let inv = |x: &GroupValue| g.inv(x).expect("coefficients lie in the group");
    Coefficients {
        group: g.clone(),
        g1: inv(&co.g2),
        g2: inv(&co.g1),
        g3: inv(&co.g4),
        g4: inv(&co.g3),
    }
}

/// A symbol of a relator in `G ∗ ⟨t⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// `t` (false) or `t⁻¹` (true).
    T(bool),
    L(Letter),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::T(false) => f.write_str("t"),
            Symbol::T(true) => f.write_str("T"),
            Symbol::L(l) => write!(f, "{l}"),
        }
    }
}

/// `t^ε` followed by a coefficient word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    pub t_inverse: bool,
    pub coeff: Vec<Letter>,
}

/// A relator `Π t^{εi} gi`, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorWord {
    pub syllables: Vec<Syllable>,
}

const fn l(sym: Sym) -> Letter {
    Letter::new(sym, false)
}

impl RelatorWord {
    /// `t a t b t c t⁻¹ d`.
    pub fn canonical() -> Self {
        let syl = |t_inverse, s| Syllable { t_inverse, coeff: vec![l(s)] };
        RelatorWord {
            syllables: vec![syl(false, Sym::A), syl(false, Sym::B), syl(false, Sym::C), syl(true, Sym::D)],
        }
    }

    /// Parses e.g. `"tatbtcTd"`; `t`/`T` are the extra generator and its inverse.
    pub fn parse(s: &str) -> Result<Self> {
        let mut syllables: Vec<Syllable> = Vec::new();
        for ch in s.chars() {
            match ch {
                't' | 'T' => syllables.push(Syllable { t_inverse: ch == 'T', coeff: Vec::new() }),
                _ => {
                    let letter = Letter::from_char(ch).ok_or_else(|| Error::invalid(format!("bad symbol {ch:?}")))?;
                    match syllables.last_mut() {
                        Some(s) => s.coeff.push(letter),
                        None => return Err(Error::invalid("relator must start with t or T")),
                    }
                }
            }
        }
        if syllables.is_empty() {
            return Err(Error::invalid("relator needs at least one t-symbol"));
        }
        Ok(RelatorWord { syllables })
    }

    pub fn t_length(&self) -> usize {
        self.syllables.len()
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        for s in &self.syllables {
            out.push(Symbol::T(s.t_inverse));
            out.extend(s.coeff.iter().map(|&l| Symbol::L(l)));
        }
        out
    }

    /// Formal inverse as a flat symbol list.
    pub fn inverse_symbols(&self) -> Vec<Symbol> {
        self.symbols()
            .into_iter()
            .rev()
            .map(|s| match s {
                Symbol::T(i) => Symbol::T(!i),
                Symbol::L(l) => Symbol::L(l.inv()),
            })
            .collect()
    }

    /// No empty coefficient word sits between `t^ε` and `t^{-ε}`, cyclically.
    pub fn is_cyclically_reduced(&self) -> bool {
        let k = self.syllables.len();
        (0..k).all(|i| {
            let next = &self.syllables[(i + 1) % k];
            !(self.syllables[i].coeff.is_empty() && self.syllables[i].t_inverse != next.t_inverse)
        })
    }

    /// Same as [`Self::is_cyclically_reduced`] with coefficients evaluated in a tuple.
    pub fn is_reduced_in(&self, tuple: &Tuple) -> bool {
        let k = self.syllables.len();
        (0..k).all(|i| {
            let next = &self.syllables[(i + 1) % k];
            !(tuple.is_trivial(&self.syllables[i].coeff) && self.syllables[i].t_inverse != next.t_inverse)
        })
    }
}

impl fmt::Display for RelatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The relator of a tuple; always `t a t b t c t⁻¹ d`.
pub fn relator_word(_tuple: &Tuple) -> RelatorWord {
    RelatorWord::canonical()
}
