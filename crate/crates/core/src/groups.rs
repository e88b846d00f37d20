//! Concrete group backends: Cayley tables, cyclic groups, direct products and
//! finitely generated abelian groups, plus subgroup closure.

use crate::intmat::{self, Hermite};
use crate::prelude::*;
use crate::{Error, Rational, Result};
use core::fmt;
use num_integer::Integer;

/// A positive integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinite,
}

impl ExtendedNat {
    /// `1/n`, with `1/∞ = 0`.
    pub fn reciprocal(self) -> Rational {
        match self {
            ExtendedNat::Finite(n) => Rational::new(1, n as i64),
            ExtendedNat::Infinite => Rational::from_integer(0),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(n) => Some(n),
            ExtendedNat::Infinite => None,
        }
    }

    pub fn is(self, n: u64) -> bool {
        self == ExtendedNat::Finite(n)
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(n) => write!(f, "{n}"),
            ExtendedNat::Infinite => f.write_str("inf"),
        }
    }
}

/// Validated multiplication table of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    size: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

impl CayleyTable {
    /// Tables up to this size are checked for associativity on construction.
    pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;

    /// Builds a table, checking every group axiom.
    ///
    /// Tables larger than [`Self::ASSOCIATIVITY_CHECK_LIMIT`] are refused; use
    /// [`Self::new_trusted`] for those.
    pub fn new(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        if rows.len() > Self::ASSOCIATIVITY_CHECK_LIMIT {
            return Err(Error::invalid(format!(
                "Cayley table of size {} exceeds the associativity check limit {}; mark it trusted",
                rows.len(),
                Self::ASSOCIATIVITY_CHECK_LIMIT
            )));
        }
        let t = Self::build(rows, identity)?;
        let n = t.size;
        for x in 0..n {
            for y in 0..n {
                let xy = t.product(x, y);
                for z in 0..n {
                    if t.product(xy, z) != t.product(x, t.product(y, z)) {
                        return Err(Error::invalid(format!("table is not associative at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(t)
    }

    /// Builds a table checking identity and the Latin square property only.
    pub fn new_trusted(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        Self::build(rows, identity)
    }

    fn build(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::invalid("empty Cayley table"));
        }
        if identity >= n {
            return Err(Error::invalid("identity index out of range"));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::invalid("Cayley table is not square"));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n || seen[v] {
                    return Err(Error::invalid("Cayley table row is not a permutation"));
                }
                seen[v] = true;
                table.push(v as u32);
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if seen[v] {
                    return Err(Error::invalid("Cayley table column is not a permutation"));
                }
                seen[v] = true;
            }
        }
        for x in 0..n {
            if table[identity * n + x] as usize != x || table[x * n + identity] as usize != x {
                return Err(Error::invalid("identity row or column is not fixed"));
            }
        }
        let mut inverse = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x * n + y] as usize == identity)
                .ok_or_else(|| Error::invalid("element without inverse"))?;
            inverse[x] = y as u32;
        }
        Ok(CayleyTable { size: n, table, identity, inverse })
    }

    /// Group generated by permutations of `0..m`, closed by breadth-first search.
    ///
    /// The product `p·q` applies `p` first. Returns the table and the indices of
    /// the generators. The identity gets index 0.
    pub fn from_permutations(gens: &[Vec<usize>], limit: usize) -> Result<(Self, Vec<usize>)> {
        let m = gens.first().map_or(0, |g| g.len());
        for g in gens {
            let mut s = g.clone();
            s.sort_unstable();
            if g.len() != m || s.iter().enumerate().any(|(i, &v)| i != v) {
                return Err(Error::invalid("generator is not a permutation"));
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&x| q[x]).collect() };
        let id: Vec<usize> = (0..m).collect();
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut elems = vec![id.clone()];
        index.insert(id, 0);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for g in gens {
                let y = compose(&x, g);
                if !index.contains_key(&y) {
                    if elems.len() >= limit {
                        return Err(Error::Resource { what: "permutation group closure", limit });
                    }
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                }
            }
        }
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|p| elems.iter().map(|q| index[&compose(p, q)]).collect())
            .collect();
        let gen_idx = gens.iter().map(|g| index[g]).collect();
        Ok((Self::build(rows, 0)?, gen_idx))
    }

    /// Dihedral group of order `2n`; element `k + n·f` stands for `r^k s^f`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("dihedral group needs n >= 1"));
        }
        let rows = (0..2 * n)
            .map(|x| {
                let (k1, f1) = (x % n, x / n);
                (0..2 * n)
                    .map(|y| {
                        let (k2, f2) = (y % n, y / n);
                        let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
                        k + n * (f1 ^ f2)
                    })
                    .collect()
            })
            .collect();
        Self::build(rows, 0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn product(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|x| (0..x).all(|y| self.product(x, y) == self.product(y, x)))
    }
}

/// A concrete group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    InfiniteCyclic,
    Product(Vec<GroupSpec>),
    Cayley(Arc<CayleyTable>),
    /// `Z^rank × Z/t1 × … × Z/tm` with `t1 | t2 | …`.
    FgAbelian { rank: usize, torsion: Vec<u64> },
}

/// An element of a [`GroupSpec`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupValue {
    /// Cyclic residue, Cayley index or integer.
    Int(i64),
    /// Components of a direct product.
    Tuple(Vec<GroupValue>),
    /// Coordinates in a finitely generated abelian group.
    Vector(Vec<i64>),
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupValue::Int(i) => write!(f, "{i}"),
            GroupValue::Tuple(v) => {
                f.write_str("(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            GroupValue::Vector(v) => write!(f, "{v:?}"),
        }
    }
}

/// Coordinates of an abelian backend: one entry per coordinate, `0` marks a free one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCoords {
    pub moduli: Vec<i64>,
}

impl AbelianCoords {
    /// Indices of free coordinates followed by torsion coordinates.
    pub fn free_first(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.moduli.len()).filter(|&i| self.moduli[i] == 0).collect();
        idx.extend((0..self.moduli.len()).filter(|&i| self.moduli[i] != 0));
        idx
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|&&m| m == 0).count()
    }
}

impl GroupSpec {
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("cyclic group order must be positive"));
        }
        Ok(GroupSpec::Cyclic(n))
    }

    pub fn fg_abelian(rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if torsion.iter().any(|&t| t < 2) {
            return Err(Error::invalid("torsion factors must be at least 2"));
        }
        if torsion.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::invalid("torsion factors must each divide the next"));
        }
        Ok(GroupSpec::FgAbelian { rank, torsion })
    }

    pub fn product(factors: Vec<GroupSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid("direct product needs at least one factor"));
        }
        Ok(GroupSpec::Product(factors))
    }

    pub fn cayley(table: CayleyTable) -> Self {
        GroupSpec::Cayley(Arc::new(table))
    }

    pub fn identity(&self) -> GroupValue {
        match self {
            GroupSpec::Cyclic(_) | GroupSpec::InfiniteCyclic => GroupValue::Int(0),
            GroupSpec::Cayley(t) => GroupValue::Int(t.identity() as i64),
            GroupSpec::Product(fs) => GroupValue::Tuple(fs.iter().map(|f| f.identity()).collect()),
            GroupSpec::FgAbelian { rank, torsion } => GroupValue::Vector(vec![0; rank + torsion.len()]),
        }
    }

    pub fn is_identity(&self, x: &GroupValue) -> bool {
        *x == self.identity()
    }

    /// True when `x` is a reduced element of this group.
    pub fn contains(&self, x: &GroupValue) -> bool {
        match (self, x) {
            (GroupSpec::Cyclic(n), GroupValue::Int(i)) => *i >= 0 && (*i as u64) < *n,
            (GroupSpec::InfiniteCyclic, GroupValue::Int(_)) => true,
            (GroupSpec::Cayley(t), GroupValue::Int(i)) => *i >= 0 && (*i as usize) < t.size(),
            (GroupSpec::Product(fs), GroupValue::Tuple(v)) => {
                fs.len() == v.len() && fs.iter().zip(v).all(|(f, y)| f.contains(y))
            }
            (GroupSpec::FgAbelian { rank, torsion }, GroupValue::Vector(v)) => {
                v.len() == rank + torsion.len()
                    && torsion.iter().zip(&v[*rank..]).all(|(&m, &y)| y >= 0 && (y as u64) < m)
            }
            _ => false,
        }
    }

    fn check(&self, x: &GroupValue) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::mismatch(format!("{x} is not an element of {self}")))
        }
    }

    /// Reduces residues into range; Cayley indices must already be in range.
    pub fn reduce(&self, x: GroupValue) -> Result<GroupValue> {
        let out = match (self, x) {
            (GroupSpec::Cyclic(n), GroupValue::Int(i)) => GroupValue::Int(i.rem_euclid(*n as i64)),
            (GroupSpec::Product(fs), GroupValue::Tuple(v)) if fs.len() == v.len() => GroupValue::Tuple(
                fs.iter().zip(v).map(|(f, y)| f.reduce(y)).collect::<Result<Vec<_>>>()?,
            ),
            (GroupSpec::FgAbelian { rank, torsion }, GroupValue::Vector(mut v)) if v.len() == rank + torsion.len() => {
                for (y, &m) in v[*rank..].iter_mut().zip(torsion) {
                    *y = y.rem_euclid(m as i64);
                }
                GroupValue::Vector(v)
            }
            (_, x) => x,
        };
        self.check(&out)?;
        Ok(out)
    }

    pub fn mul(&self, x: &GroupValue, y: &GroupValue) -> Result<GroupValue> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: &GroupValue, y: &GroupValue) -> GroupValue {
        match (self, x, y) {
            (GroupSpec::Cyclic(n), GroupValue::Int(a), GroupValue::Int(b)) => GroupValue::Int((a + b) % *n as i64),
            (GroupSpec::InfiniteCyclic, GroupValue::Int(a), GroupValue::Int(b)) => GroupValue::Int(a + b),
            (GroupSpec::Cayley(t), GroupValue::Int(a), GroupValue::Int(b)) => {
                GroupValue::Int(t.product(*a as usize, *b as usize) as i64)
            }
            (GroupSpec::Product(fs), GroupValue::Tuple(a), GroupValue::Tuple(b)) => GroupValue::Tuple(
                fs.iter().zip(a.iter().zip(b)).map(|(f, (p, q))| f.mul_unchecked(p, q)).collect(),
            ),
            (GroupSpec::FgAbelian { rank, torsion }, GroupValue::Vector(a), GroupValue::Vector(b)) => {
                let mut v: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                for (y, &m) in v[*rank..].iter_mut().zip(torsion) {
                    *y %= m as i64;
                }
                GroupValue::Vector(v)
            }
            _ => unreachable!("values were checked against the backend"),
        }
    }

    pub fn inv(&self, x: &GroupValue) -> Result<GroupValue> {
        self.check(x)?;
        Ok(self.inv_unchecked(x))
    }

    fn inv_unchecked(&self, x: &GroupValue) -> GroupValue {
        match (self, x) {
            (GroupSpec::Cyclic(n), GroupValue::Int(a)) => GroupValue::Int((*n as i64 - a) % *n as i64),
            (GroupSpec::InfiniteCyclic, GroupValue::Int(a)) => GroupValue::Int(-a),
            (GroupSpec::Cayley(t), GroupValue::Int(a)) => GroupValue::Int(t.inverse(*a as usize) as i64),
            (GroupSpec::Product(fs), GroupValue::Tuple(a)) => {
                GroupValue::Tuple(fs.iter().zip(a).map(|(f, p)| f.inv_unchecked(p)).collect())
            }
            (GroupSpec::FgAbelian { rank, torsion }, GroupValue::Vector(a)) => {
                let mut v: Vec<i64> = a.iter().map(|p| -p).collect();
                for (y, &m) in v[*rank..].iter_mut().zip(torsion) {
                    *y = y.rem_euclid(m as i64);
                }
                GroupValue::Vector(v)
            }
            _ => unreachable!("values were checked against the backend"),
        }
    }

    /// `x^e` for any integer `e`.
    pub fn pow(&self, x: &GroupValue, e: i64) -> Result<GroupValue> {
        self.check(x)?;
        let base = if e < 0 { self.inv_unchecked(x) } else { x.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &sq);
            }
            sq = self.mul_unchecked(&sq, &sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product_of<'a>(&self, xs: impl IntoIterator<Item = &'a GroupValue>) -> Result<GroupValue> {
        let mut acc = self.identity();
        for x in xs {
            self.check(x)?;
            acc = self.mul_unchecked(&acc, x);
        }
        Ok(acc)
    }

    pub fn element_order(&self, x: &GroupValue) -> Result<ExtendedNat> {
        self.check(x)?;
        Ok(self.order_unchecked(x))
    }

    fn order_unchecked(&self, x: &GroupValue) -> ExtendedNat {
        match (self, x) {
            (GroupSpec::Cyclic(n), GroupValue::Int(a)) => ExtendedNat::Finite(n / (*a as u64).gcd(n)),
            (GroupSpec::InfiniteCyclic, GroupValue::Int(a)) => {
                if *a == 0 {
                    ExtendedNat::Finite(1)
                } else {
                    ExtendedNat::Infinite
                }
            }
            (GroupSpec::Cayley(t), GroupValue::Int(a)) => {
                let mut y = *a as usize;
                let mut k = 1;
                while y != t.identity() {
                    y = t.product(y, *a as usize);
                    k += 1;
                }
                ExtendedNat::Finite(k)
            }
            (GroupSpec::Product(fs), GroupValue::Tuple(a)) => {
                let mut o = 1u64;
                for (f, p) in fs.iter().zip(a) {
                    match f.order_unchecked(p) {
                        ExtendedNat::Finite(k) => o = o.lcm(&k),
                        ExtendedNat::Infinite => return ExtendedNat::Infinite,
                    }
                }
                ExtendedNat::Finite(o)
            }
            (GroupSpec::FgAbelian { rank, torsion }, GroupValue::Vector(a)) => {
                if a[..*rank].iter().any(|&v| v != 0) {
                    return ExtendedNat::Infinite;
                }
                let o = torsion
                    .iter()
                    .zip(&a[*rank..])
                    .fold(1u64, |o, (&m, &v)| o.lcm(&(m / (v as u64).gcd(&m))));
                ExtendedNat::Finite(o)
            }
            _ => unreachable!("values were checked against the backend"),
        }
    }

    pub fn order(&self) -> ExtendedNat {
        match self {
            GroupSpec::Cyclic(n) => ExtendedNat::Finite(*n),
            GroupSpec::InfiniteCyclic => ExtendedNat::Infinite,
            GroupSpec::Cayley(t) => ExtendedNat::Finite(t.size() as u64),
            GroupSpec::Product(fs) => {
                let mut o = 1u64;
                for f in fs {
                    match f.order() {
                        ExtendedNat::Finite(k) => o *= k,
                        ExtendedNat::Infinite => return ExtendedNat::Infinite,
                    }
                }
                ExtendedNat::Finite(o)
            }
            GroupSpec::FgAbelian { rank, torsion } => {
                if *rank > 0 {
                    ExtendedNat::Infinite
                } else {
                    ExtendedNat::Finite(torsion.iter().product())
                }
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_finite()
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GroupSpec::Cayley(t) => t.is_abelian(),
            GroupSpec::Product(fs) => fs.iter().all(|f| f.is_abelian()),
            _ => true,
        }
    }

    /// All elements of a finite group in a fixed order; `None` when infinite.
    pub fn elements(&self) -> Option<Vec<GroupValue>> {
        match self {
            GroupSpec::Cyclic(n) => Some((0..*n as i64).map(GroupValue::Int).collect()),
            GroupSpec::Cayley(t) => Some((0..t.size() as i64).map(GroupValue::Int).collect()),
            GroupSpec::InfiniteCyclic => None,
            GroupSpec::FgAbelian { rank, torsion } => {
                if *rank > 0 {
                    return None;
                }
                let mut out = vec![Vec::new()];
                for &m in torsion {
                    out = out
                        .into_iter()
                        .flat_map(|v: Vec<i64>| {
                            (0..m as i64).map(move |i| {
                                let mut w = v.clone();
                                w.push(i);
                                w
                            })
                        })
                        .collect();
                }
                Some(out.into_iter().map(GroupValue::Vector).collect())
            }
            GroupSpec::Product(fs) => {
                let mut out = vec![Vec::new()];
                for f in fs {
                    let es = f.elements()?;
                    out = out
                        .into_iter()
                        .flat_map(|v: Vec<GroupValue>| {
                            es.iter().map(move |e| {
                                let mut w = v.clone();
                                w.push(e.clone());
                                w
                            })
                        })
                        .collect();
                }
                Some(out.into_iter().map(GroupValue::Tuple).collect())
            }
        }
    }

    /// Integer coordinates for abelian backends without Cayley tables.
    pub fn abelian_coords(&self) -> Option<AbelianCoords> {
        let moduli = match self {
            GroupSpec::Cyclic(n) => vec![*n as i64],
            GroupSpec::InfiniteCyclic => vec![0],
            GroupSpec::Cayley(_) => return None,
            GroupSpec::FgAbelian { rank, torsion } => {
                let mut m = vec![0; *rank];
                m.extend(torsion.iter().map(|&t| t as i64));
                m
            }
            GroupSpec::Product(fs) => {
                let mut m = Vec::new();
                for f in fs {
                    m.extend(f.abelian_coords()?.moduli);
                }
                m
            }
        };
        Some(AbelianCoords { moduli })
    }

    /// Flattens an element into the coordinates of [`Self::abelian_coords`].
    pub fn to_coords(&self, x: &GroupValue) -> Option<Vec<i64>> {
        match (self, x) {
            (GroupSpec::Cyclic(_) | GroupSpec::InfiniteCyclic, GroupValue::Int(a)) => Some(vec![*a]),
            (GroupSpec::FgAbelian { .. }, GroupValue::Vector(v)) => Some(v.clone()),
            (GroupSpec::Product(fs), GroupValue::Tuple(v)) => {
                let mut out = Vec::new();
                for (f, y) in fs.iter().zip(v) {
                    out.extend(f.to_coords(y)?);
                }
                Some(out)
            }
            _ => None,
        }
    }

    fn value_at_coords(&self, c: &[i64], pos: &mut usize) -> GroupValue {
        match self {
            GroupSpec::Cyclic(n) => {
                *pos += 1;
                GroupValue::Int(c[*pos - 1].rem_euclid(*n as i64))
            }
            GroupSpec::InfiniteCyclic => {
                *pos += 1;
                GroupValue::Int(c[*pos - 1])
            }
            GroupSpec::FgAbelian { rank, torsion } => {
                let len = rank + torsion.len();
                let mut v = c[*pos..*pos + len].to_vec();
                for (y, &m) in v[*rank..].iter_mut().zip(torsion) {
                    *y = y.rem_euclid(m as i64);
                }
                *pos += len;
                GroupValue::Vector(v)
            }
            GroupSpec::Product(fs) => GroupValue::Tuple(fs.iter().map(|f| f.value_at_coords(c, pos)).collect()),
            GroupSpec::Cayley(_) => unreachable!("Cayley tables have no coordinates"),
        }
    }

    /// Inverse of [`Self::to_coords`].
    pub fn from_coords(&self, c: &[i64]) -> Option<GroupValue> {
        let coords = self.abelian_coords()?;
        if c.len() != coords.moduli.len() {
            return None;
        }
        Some(self.value_at_coords(c, &mut 0))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::InfiniteCyclic => f.write_str("Z"),
            GroupSpec::Cayley(t) => write!(f, "Cayley({})", t.size()),
            GroupSpec::Product(fs) => {
                for (i, g) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::FgAbelian { rank, torsion } => write!(f, "Z^{rank} x {torsion:?}"),
        }
    }
}

/// Isomorphism type of an abelian group: `Z^free_rank × Z/t1 × …` with `t1 | t2 | …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotAbelian;

#[derive(Debug, Clone)]
enum Repr {
    Explicit(BTreeSet<GroupValue>),
    Lattice { coords: AbelianCoords, hermite: Hermite },
}

/// A subgroup given by generators, with cached order and isomorphism type.
#[derive(Debug, Clone)]
pub struct Subgroup {
    ambient: GroupSpec,
    generators: Vec<GroupValue>,
    repr: Repr,
    order: ExtendedNat,
    invariants: Option<AbelianInvariants>,
}

/// Default bound on explicit subgroup closures.
pub const DEFAULT_CLOSURE_LIMIT: usize = 1 << 20;

/// Least subgroup of `g` containing `gens`.
pub fn subgroup_closure(g: &GroupSpec, gens: &[GroupValue]) -> Result<Subgroup> {
    subgroup_closure_bounded(g, gens, DEFAULT_CLOSURE_LIMIT)
}

/// [`subgroup_closure`] with an explicit bound on the number of elements.
pub fn subgroup_closure_bounded(g: &GroupSpec, gens: &[GroupValue], limit: usize) -> Result<Subgroup> {
    if gens.is_empty() {
        return Err(Error::invalid("subgroup closure needs at least one generator"));
    }
    for x in gens {
        g.check(x)?;
    }
    if g.is_finite() {
        explicit_closure(g, gens, limit)
    } else if let Some(coords) = g.abelian_coords() {
        Ok(lattice_closure(g, gens, coords))
    } else {
        Err(Error::Unsupported(format!("subgroup closure in {g}")))
    }
}

fn explicit_closure(g: &GroupSpec, gens: &[GroupValue], limit: usize) -> Result<Subgroup> {
    let mut set = BTreeSet::new();
    let mut queue = VecDeque::new();
    let e = g.identity();
    set.insert(e.clone());
    queue.push_back(e);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = g.mul_unchecked(&x, s);
            if !set.contains(&y) {
                if set.len() >= limit {
                    return Err(Error::Resource { what: "subgroup closure", limit });
                }
                set.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let abelian = gens
        .iter()
        .enumerate()
        .all(|(i, x)| gens[..i].iter().all(|y| g.mul_unchecked(x, y) == g.mul_unchecked(y, x)));
    let invariants = abelian.then(|| finite_abelian_invariants(g, &set));
    Ok(Subgroup {
        ambient: g.clone(),
        generators: gens.to_vec(),
        order: ExtendedNat::Finite(set.len() as u64),
        repr: Repr::Explicit(set),
        invariants,
    })
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of a finite abelian group from counts of `p^j`-torsion.
fn finite_abelian_invariants(g: &GroupSpec, set: &BTreeSet<GroupValue>) -> AbelianInvariants {
    let orders: Vec<u64> = set.iter().map(|x| g.order_unchecked(x).finite().unwrap_or(1)).collect();
    // per prime, the exponents of the cyclic p-parts in decreasing order
    let mut parts: Vec<Vec<u64>> = Vec::new();
    for p in prime_factors(set.len() as u64) {
        let mut log_counts = vec![0u32];
        let mut pj = 1u64;
        loop {
            pj *= p;
            let count = orders.iter().filter(|&&o| pj.is_multiple_of(o)).count() as u64;
            let mut l = 0u32;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            if l == *log_counts.last().unwrap() {
                break;
            }
            log_counts.push(l);
        }
        // number of parts with exponent >= j is log_counts[j] - log_counts[j-1]
        let at_least: Vec<u32> = log_counts.windows(2).map(|w| w[1] - w[0]).collect();
        let mut exps = Vec::new();
        for j in 0..at_least.len() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            for _ in 0..at_least[j] - next {
                exps.push(p.pow(j as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        parts.push(exps);
    }
    let len = parts.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut torsion: Vec<u64> = (0..len)
        .map(|i| parts.iter().map(|v| v.get(i).copied().unwrap_or(1)).product())
        .collect();
    torsion.reverse();
    AbelianInvariants { free_rank: 0, torsion }
}

fn lattice_closure(g: &GroupSpec, gens: &[GroupValue], coords: AbelianCoords) -> Subgroup {
    let dim = coords.moduli.len();
    let mut rows: Vec<Vec<i64>> = gens.iter().map(|x| g.to_coords(x).expect("abelian backend")).collect();
    let mut torsion_rows = Vec::new();
    for (j, &m) in coords.moduli.iter().enumerate() {
        if m != 0 {
            let mut r = vec![0; dim];
            r[j] = m;
            torsion_rows.push(r);
        }
    }
    rows.extend(torsion_rows.iter().cloned());
    let hermite = intmat::hermite(&rows, dim);
    let basis = &hermite.hnf[..hermite.rank];
    // H = L / T where L is the lattice and T the torsion relations
    let rel: Vec<Vec<i64>> = torsion_rows
        .iter()
        .map(|r| intmat::solve_left(basis, dim, r).expect("torsion rows lie in the lattice").particular)
        .collect();
    let diag = intmat::smith_invariants(&rel, hermite.rank);
    let free_rank = hermite.rank - diag.len();
    let torsion: Vec<u64> = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    let order = if free_rank > 0 {
        ExtendedNat::Infinite
    } else {
        ExtendedNat::Finite(torsion.iter().product())
    };
    Subgroup {
        ambient: g.clone(),
        generators: gens.to_vec(),
        repr: Repr::Lattice { coords, hermite },
        order,
        invariants: Some(AbelianInvariants { free_rank, torsion }),
    }
}

impl Subgroup {
    pub fn ambient(&self) -> &GroupSpec {
        &self.ambient
    }

    pub fn generators(&self) -> &[GroupValue] {
        &self.generators
    }

    pub fn order(&self) -> ExtendedNat {
        self.order
    }

    pub fn is_finite(&self) -> bool {
        self.order.is_finite()
    }

    pub fn is_abelian(&self) -> bool {
        self.invariants.is_some()
    }

    pub fn abelian_invariants(&self) -> core::result::Result<&AbelianInvariants, NotAbelian> {
        self.invariants.as_ref().ok_or(NotAbelian)
    }

    pub fn is_cyclic(&self) -> bool {
        match &self.invariants {
            None => false,
            Some(inv) => match inv.free_rank {
                0 => inv.torsion.len() <= 1,
                1 => inv.torsion.is_empty(),
                _ => false,
            },
        }
    }

    pub fn contains(&self, x: &GroupValue) -> bool {
        match &self.repr {
            Repr::Explicit(set) => set.contains(x),
            Repr::Lattice { hermite, .. } => match self.ambient.to_coords(x) {
                Some(c) if self.ambient.contains(x) => intmat::reduce(hermite, &c).iter().all(|&v| v == 0),
                _ => false,
            },
        }
    }

    /// The element set, for subgroups of finite groups.
    pub fn elements(&self) -> Option<&BTreeSet<GroupValue>> {
        match &self.repr {
            Repr::Explicit(set) => Some(set),
            Repr::Lattice { .. } => None,
        }
    }

    /// Hermite basis of the coordinate lattice, for subgroups of infinite abelian groups.
    pub fn lattice_basis(&self) -> Option<Vec<Vec<i64>>> {
        match &self.repr {
            Repr::Explicit(_) => None,
            Repr::Lattice { hermite, .. } => Some(hermite.hnf[..hermite.rank].to_vec()),
        }
    }

    pub fn coords(&self) -> Option<&AbelianCoords> {
        match &self.repr {
            Repr::Explicit(_) => None,
            Repr::Lattice { coords, .. } => Some(coords),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> (GroupSpec, Vec<usize>) {
        // (0 1) and (0 1 2)
        let (t, g) = CayleyTable::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 100).unwrap();
        (GroupSpec::cayley(t), g)
    }

    #[test]
    fn cyclic_arithmetic() {
        let g = GroupSpec::Cyclic(6);
        assert_eq!(g.mul(&GroupValue::Int(2), &GroupValue::Int(3)).unwrap(), GroupValue::Int(5));
        assert_eq!(g.inv(&GroupValue::Int(2)).unwrap(), GroupValue::Int(4));
        assert_eq!(g.inv(&GroupValue::Int(0)).unwrap(), GroupValue::Int(0));
        assert_eq!(g.element_order(&GroupValue::Int(2)).unwrap(), ExtendedNat::Finite(3));
        assert!(g.mul(&GroupValue::Int(6), &GroupValue::Int(0)).is_err());
    }

    #[test]
    fn infinite_cyclic() {
        let g = GroupSpec::InfiniteCyclic;
        assert_eq!(g.inv(&GroupValue::Int(5)).unwrap(), GroupValue::Int(-5));
        assert_eq!(g.element_order(&GroupValue::Int(5)).unwrap(), ExtendedNat::Infinite);
    }

    #[test]
    fn transposition_squares_to_identity() {
        let (g, gens) = s3();
        let t = GroupValue::Int(gens[0] as i64);
        assert_eq!(g.mul(&t, &t).unwrap(), g.identity());
        assert_eq!(g.order(), ExtendedNat::Finite(6));
        assert!(!g.is_abelian());
    }

    #[test]
    fn fg_abelian_order_with_free_part() {
        let g = GroupSpec::fg_abelian(1, vec![2]).unwrap();
        assert_eq!(g.element_order(&GroupValue::Vector(vec![1, 1])).unwrap(), ExtendedNat::Infinite);
        assert_eq!(g.element_order(&GroupValue::Vector(vec![0, 1])).unwrap(), ExtendedNat::Finite(2));
        assert!(GroupSpec::fg_abelian(0, vec![4, 2]).is_err());
    }

    #[test]
    fn closure_examples() {
        let h = subgroup_closure(&GroupSpec::Cyclic(6), &[GroupValue::Int(2)]).unwrap();
        assert_eq!(h.order(), ExtendedNat::Finite(3));
        assert!(h.is_cyclic());
        assert_eq!(h.abelian_invariants().unwrap().torsion, vec![3]);

        let g = GroupSpec::product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(4)]).unwrap();
        let x = GroupValue::Tuple(vec![GroupValue::Int(1), GroupValue::Int(0)]);
        let y = GroupValue::Tuple(vec![GroupValue::Int(0), GroupValue::Int(1)]);
        let h = subgroup_closure(&g, &[x, y]).unwrap();
        assert_eq!(h.order(), ExtendedNat::Finite(8));
        assert!(!h.is_cyclic());
        assert_eq!(h.abelian_invariants().unwrap().torsion, vec![2, 4]);
    }

    #[test]
    fn lattice_of_index_six() {
        let g = GroupSpec::fg_abelian(2, vec![]).unwrap();
        let h = subgroup_closure(&g, &[GroupValue::Vector(vec![2, 0]), GroupValue::Vector(vec![0, 3])]).unwrap();
        assert_eq!(h.order(), ExtendedNat::Infinite);
        assert_eq!(h.lattice_basis().unwrap(), vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(h.abelian_invariants().unwrap(), &AbelianInvariants { free_rank: 2, torsion: vec![] });
        assert!(h.contains(&GroupValue::Vector(vec![4, -3])));
        assert!(!h.contains(&GroupValue::Vector(vec![1, 0])));
        assert!(!h.is_cyclic());
    }

    #[test]
    fn rank_one_lattice_is_cyclic() {
        let g = GroupSpec::fg_abelian(2, vec![]).unwrap();
        let h = subgroup_closure(&g, &[GroupValue::Vector(vec![2, 2]), GroupValue::Vector(vec![3, 3])]).unwrap();
        assert!(h.is_cyclic());
        assert_eq!(h.order(), ExtendedNat::Infinite);
    }

    #[test]
    fn lattice_with_torsion() {
        // Z x Z6, generated by (1,0),(0,2),(0,3) is all of Z x Z6 = Z x Z2 x Z3, not cyclic
        let g = GroupSpec::fg_abelian(1, vec![6]).unwrap();
        let gens = [GroupValue::Vector(vec![1, 0]), GroupValue::Vector(vec![0, 2]), GroupValue::Vector(vec![0, 3])];
        let h = subgroup_closure(&g, &gens).unwrap();
        assert_eq!(h.abelian_invariants().unwrap(), &AbelianInvariants { free_rank: 1, torsion: vec![6] });
        assert!(!h.is_cyclic());
        // (1,1) alone generates an infinite cyclic group
        let h = subgroup_closure(&g, &[GroupValue::Vector(vec![1, 1])]).unwrap();
        assert!(h.is_cyclic());
        // (0,2) generates Z3
        let h = subgroup_closure(&g, &[GroupValue::Vector(vec![0, 2])]).unwrap();
        assert_eq!(h.order(), ExtendedNat::Finite(3));
    }

    #[test]
    fn s3_is_not_abelian() {
        let (g, gens) = s3();
        let gv: Vec<_> = gens.iter().map(|&i| GroupValue::Int(i as i64)).collect();
        let h = subgroup_closure(&g, &gv).unwrap();
        assert_eq!(h.order(), ExtendedNat::Finite(6));
        assert_eq!(h.abelian_invariants(), Err(NotAbelian));
        assert!(!h.is_cyclic());
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(CayleyTable::new(vec![vec![1, 0], vec![0, 1]], 0).is_err());
        // Latin square with identity that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(CayleyTable::new(t.clone(), 0).is_err());
        assert!(CayleyTable::new_trusted(t, 0).is_ok());
    }

    #[test]
    fn dihedral_and_a5() {
        let d = CayleyTable::dihedral(5).unwrap();
        assert_eq!(d.size(), 10);
        assert!(CayleyTable::new(d.rows(), 0).is_ok());
        let (a5, _) = CayleyTable::from_permutations(&[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]], 1000).unwrap();
        assert_eq!(a5.size(), 60);
    }

    #[test]
    fn coords_roundtrip() {
        let g = GroupSpec::product(vec![GroupSpec::Cyclic(3), GroupSpec::fg_abelian(1, vec![2]).unwrap()]).unwrap();
        let x = GroupValue::Tuple(vec![GroupValue::Int(2), GroupValue::Vector(vec![-4, 1])]);
        let c = g.to_coords(&x).unwrap();
        assert_eq!(c, vec![2, -4, 1]);
        assert_eq!(g.from_coords(&c).unwrap(), x);
        assert_eq!(g.abelian_coords().unwrap().free_first(), vec![1, 0, 2]);
    }
}
