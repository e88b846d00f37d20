//! Spherical pictures over the relator `t a t b t c t⁻¹ d`, stored as maps: discs are
//! 4-valent vertices with a cyclic order of darts, arcs pair darts, regions are faces.

use crate::curvature::region_curvature;
use crate::groups::{CayleyTable, ExtendedNat, GroupSpec, GroupValue};
use crate::intmat;
use crate::presentation::{Letter, Sym, Tuple};
use crate::prelude::*;
use crate::stargraph::LabelWord;
use crate::{Error, Rational, Result};
use core::fmt;

const A: Letter = Letter::new(Sym::A, false);
const B: Letter = Letter::new(Sym::B, false);
const C: Letter = Letter::new(Sym::C, false);
const D: Letter = Letter::new(Sym::D, false);

/// Corner letters of a positive disc; corner `k` sits between darts `k` and `k + 1`.
pub const POSITIVE_CORNERS: [Letter; 4] = [A, B, C, D];
/// `true` marks a `t⁻¹` dart.
pub const POSITIVE_EXPONENTS: [bool; 4] = [false, false, false, true];
pub const NEGATIVE_CORNERS: [Letter; 4] = [C.inv_const(), B.inv_const(), A.inv_const(), D.inv_const()];
pub const NEGATIVE_EXPONENTS: [bool; 4] = [false, true, true, true];

impl Letter {
    const fn inv_const(self) -> Self {
        Letter::new(self.sym, !self.inverse)
    }
}

/// One disc: darts in anticlockwise order and the corner after each dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disc {
    pub darts: [usize; 4],
    pub corners: [Letter; 4],
}

impl Disc {
    /// `t⁻¹` flags of the four darts, if the corner word reads a cyclic permutation
    /// of the relator or its inverse.
    pub fn exponents(&self) -> Option<[bool; 4]> {
        for (corners, exps) in [(POSITIVE_CORNERS, POSITIVE_EXPONENTS), (NEGATIVE_CORNERS, NEGATIVE_EXPONENTS)] {
            for s in 0..4 {
                if (0..4).all(|k| self.corners[k] == corners[(k + s) % 4]) {
                    return Some(core::array::from_fn(|k| exps[(k + s) % 4]));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialPicture {
    pub vertices: Vec<Disc>,
    pub pairing: Vec<(usize, usize)>,
}

/// Positional form: dart `4v + k` is the `k`-th dart of disc `v`.
struct Map {
    alpha: Vec<usize>,
    corners: Vec<Letter>,
}

impl Map {
    fn discs(&self) -> usize {
        self.alpha.len() / 4
    }

    fn next(h: usize) -> usize {
        h - h % 4 + (h + 1) % 4
    }

    fn prev(h: usize) -> usize {
        h - h % 4 + (h + 3) % 4
    }

    /// Faces as lists of positional darts; each face entry `h` contributes the corner
    /// between `h` and its successor.
    fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.alpha.len()];
        let mut faces = Vec::new();
        for start in 0..self.alpha.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                face.push(h);
                h = self.alpha[Self::next(h)];
            }
            faces.push(face);
        }
        faces
    }

    fn connected(&self) -> bool {
        let n = self.discs();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for k in 0..4 {
                let w = self.alpha[4 * v + k] / 4;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }
}

impl CombinatorialPicture {
    fn map(&self) -> Result<Map> {
        let mut pos = BTreeMap::new();
        for (v, disc) in self.vertices.iter().enumerate() {
            for (k, &d) in disc.darts.iter().enumerate() {
                if pos.insert(d, 4 * v + k).is_some() {
                    return Err(Error::invalid(format!("dart {d} appears twice")));
                }
            }
        }
        let mut alpha = vec![usize::MAX; pos.len()];
        for &(x, y) in &self.pairing {
            let (&px, &py) = match (pos.get(&x), pos.get(&y)) {
                (Some(px), Some(py)) => (px, py),
                _ => return Err(Error::invalid(format!("pairing ({x}, {y}) names an unknown dart"))),
            };
            if px == py {
                return Err(Error::invalid(format!("dart {x} is paired with itself")));
            }
            if alpha[px] != usize::MAX || alpha[py] != usize::MAX {
                return Err(Error::invalid(format!("pairing ({x}, {y}) reuses a dart")));
            }
            alpha[px] = py;
            alpha[py] = px;
        }
        if let Some(h) = alpha.iter().position(|&x| x == usize::MAX) {
            return Err(Error::invalid(format!("dart {} is unpaired", self.vertices[h / 4].darts[h % 4])));
        }
        let corners = self.vertices.iter().flat_map(|d| d.corners).collect();
        Ok(Map { alpha, corners })
    }

    pub fn edge_count(&self) -> usize {
        self.pairing.len()
    }

    /// Region labels, one per face, read along the face.
    pub fn region_labels(&self) -> Result<Vec<LabelWord>> {
        let m = self.map()?;
        Ok(m.faces().iter().map(|f| LabelWord(f.iter().map(|&h| m.corners[h]).collect())).collect())
    }

    pub fn census(&self) -> Result<Census> {
        Ok(Census::new(self.region_labels()?.into_iter().map(|w| (w, 1))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PictureReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub corner_words_ok: bool,
    /// Every arc joins a `t` dart to a `t⁻¹` dart.
    pub orientation_ok: bool,
    pub connected: bool,
    /// Consistently oriented, connected and of Euler characteristic 2.
    pub spherical: bool,
    pub all_region_labels_trivial: bool,
    pub reduced: bool,
    /// Arcs, as pairs of dart ids, whose two discs form a dipole.
    pub dipoles: Vec<(usize, usize)>,
    pub nontrivial_regions: Vec<LabelWord>,
    pub curvature_total: Rational,
}

impl PictureReport {
    pub fn passed(&self) -> bool {
        self.corner_words_ok
            && self.orientation_ok
            && self.spherical
            && self.all_region_labels_trivial
            && self.reduced
            && self.curvature_total == Rational::from_integer(4)
    }
}

fn face_curvature(k: usize) -> Result<Rational> {
    if k >= 2 {
        region_curvature(&vec![4; k])
    } else {
        Ok(Rational::from_integer(2 - k as i64) + Rational::new(k as i64, 2))
    }
}

/// Checks corner words, Euler characteristic, region labels in `tuple` and dipoles.
pub fn verify_picture(pic: &CombinatorialPicture, tuple: &Tuple) -> Result<PictureReport> {
    let m = pic.map()?;
    let faces = m.faces();
    let (v, e, f) = (m.discs(), pic.pairing.len(), faces.len());
    let euler = v as i64 - e as i64 + f as i64;
    let exps: Option<Vec<[bool; 4]>> = pic.vertices.iter().map(Disc::exponents).collect();
    let exp_of = |h: usize| exps.as_ref().map(|x| x[h / 4][h % 4]);
    let orientation_ok = exps.is_some() && (0..m.alpha.len()).all(|h| exp_of(h) != exp_of(m.alpha[h]));
    let connected = m.connected();

    let mut nontrivial = Vec::new();
    let mut curvature_total = Rational::from_integer(0);
    for face in &faces {
        let word: Vec<Letter> = face.iter().map(|&h| m.corners[h]).collect();
        if !tuple.is_trivial(&word) {
            nontrivial.push(LabelWord(word));
        }
        curvature_total += face_curvature(face.len())?;
    }

    let mut dipoles = Vec::new();
    if exps.is_some() {
        let value = |h: usize| tuple.value(m.corners[h]);
        for x in 0..m.alpha.len() {
            let y = m.alpha[x];
            if x > y || x / 4 == y / 4 {
                continue;
            }
            // walk x forwards and y backwards; corner after x faces the corner before y
            let step = |h: usize, i: usize, fwd: bool| (0..i).fold(h, |h, _| if fwd { Map::next(h) } else { Map::prev(h) });
            let mirror_exp = (0..4).all(|i| exp_of(step(x, i, true)) != exp_of(step(y, i, false)));
            let corner_match: Vec<bool> = (0..4)
                .map(|i| {
                    let cv = value(step(x, i, true));
                    let cw = value(step(y, i + 1, false));
                    tuple.group.mul(&cv, &cw).map(|p| tuple.group.is_identity(&p)).unwrap_or(false)
                })
                .collect();
            let dipole = mirror_exp && (corner_match[1..].iter().all(|&b| b) || corner_match[..3].iter().all(|&b| b));
            if dipole {
                let dart = |h: usize| pic.vertices[h / 4].darts[h % 4];
                dipoles.push((dart(x), dart(y)));
            }
        }
    }

    Ok(PictureReport {
        vertices: v,
        edges: e,
        faces: f,
        euler_characteristic: euler,
        corner_words_ok: exps.is_some(),
        orientation_ok,
        connected,
        spherical: orientation_ok && connected && euler == 2,
        all_region_labels_trivial: nontrivial.is_empty(),
        reduced: exps.is_some() && dipoles.is_empty(),
        dipoles,
        nontrivial_regions: nontrivial,
        curvature_total,
    })
}

/// Region labels up to cyclic permutation and inversion, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Census {
    pub entries: BTreeMap<LabelWord, u64>,
}

impl Census {
    pub fn new(entries: impl IntoIterator<Item = (LabelWord, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, m) in entries {
            if m > 0 {
                *map.entry(w.canonical()).or_insert(0) += m;
            }
        }
        Census { entries: map }
    }

    /// Parses `"word:mult"` pairs, e.g. `["dddd:2", "caB:8"]`.
    pub fn parse(items: &[(&str, u64)]) -> Result<Self> {
        let mut v = Vec::new();
        for &(w, m) in items {
            v.push((LabelWord::parse(w)?, m));
        }
        Ok(Self::new(v))
    }

    pub fn faces(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn edges(&self) -> Option<u64> {
        let total: u64 = self.entries.iter().map(|(w, m)| w.len() as u64 * m).sum();
        total.is_multiple_of(2).then_some(total / 2)
    }

    pub fn vertices(&self) -> Option<u64> {
        let (e, f) = (self.edges()?, self.faces());
        (e + 2).checked_sub(f)
    }

    /// `F = V + 2`, `E = 2V` and integrality.
    pub fn is_consistent(&self) -> bool {
        match (self.edges(), self.vertices()) {
            (Some(e), Some(v)) => v > 0 && e == 2 * v,
            _ => false,
        }
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, m) in &self.entries {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{m} {w}")?;
        }
        Ok(())
    }
}

pub fn census_check(census: &Census, tuple: &Tuple) -> bool {
    census.is_consistent() && census.entries.keys().all(|w| tuple.is_trivial(&w.0))
}

fn exponent_vector(w: &[Letter]) -> Vec<i64> {
    let mut v = vec![0; 4];
    for l in w {
        v[l.sym.index()] += if l.inverse { -1 } else { 1 };
    }
    v
}

/// Census check in the abelianization: every label's exponent-sum vector must lie in
/// the lattice spanned by `relations` (together with `a`, which is trivial).
pub fn census_check_abelianized(census: &Census, relations: &[LabelWord]) -> bool {
    let mut rows: Vec<Vec<i64>> = relations.iter().map(|r| exponent_vector(&r.0)).collect();
    rows.push(exponent_vector(&[A]));
    let h = intmat::hermite(&rows, 4);
    census.is_consistent() && census.entries.keys().all(|w| intmat::reduce(&h, &exponent_vector(&w.0)).iter().all(|&x| x == 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SphereFamily {
    AI,
    AII,
    AIII,
    BI,
    BII,
    BIII,
    BIV,
    BV,
    CI,
    CII,
    CIII,
    CIV,
    CV,
}

impl SphereFamily {
    pub const ALL: [SphereFamily; 13] = [
        Self::AI,
        Self::AII,
        Self::AIII,
        Self::BI,
        Self::BII,
        Self::BIII,
        Self::BIV,
        Self::BV,
        Self::CI,
        Self::CII,
        Self::CIII,
        Self::CIV,
        Self::CV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::AI => "a_i",
            Self::AII => "a_ii",
            Self::AIII => "a_iii",
            Self::BI => "b_i",
            Self::BII => "b_ii",
            Self::BIII => "b_iii",
            Self::BIV => "b_iv",
            Self::BV => "b_v",
            Self::CI => "c_i",
            Self::CII => "c_ii",
            Self::CIII => "c_iii",
            Self::CIV => "c_iv",
            Self::CV => "c_v",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown sphere family {s:?}")))
    }

    /// Families whose maps are fully described in prose; the rest exist at census level.
    pub fn has_map(self) -> bool {
        matches!(self, Self::AI | Self::AII | Self::AIII | Self::BI | Self::BII | Self::CI | Self::CII)
    }

    /// Admissible range of the parameter.
    pub fn range(self) -> (u64, u64) {
        match self {
            Self::BIV | Self::CIII => (4, 5),
            Self::BIII | Self::BV | Self::CIV | Self::CV => (3, 5),
            _ => (2, u64::MAX),
        }
    }
}

impl fmt::Display for SphereFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family with its parameter: `n` for the prose families, `k` or `l` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereFamilyId {
    pub family: SphereFamily,
    pub param: u64,
}

impl SphereFamilyId {
    pub fn new(family: SphereFamily, param: u64) -> Result<Self> {
        let (lo, hi) = family.range();
        if param < lo || param > hi {
            return Err(Error::invalid(format!("{family} needs a parameter in {lo}..={hi}, got {param}")));
        }
        Ok(SphereFamilyId { family, param })
    }

    /// `(|a⁻¹b|, |c|, |d|)` for the b families, `(|c|, |d|, |bda⁻¹c⁻¹|)` for the c families.
    pub fn orders(&self) -> Option<(u64, u64, u64)> {
        let n = self.param;
        Some(match self.family {
            SphereFamily::BIII => (2, 3, n),
            SphereFamily::BIV => (3, 2, n),
            SphereFamily::BV => (n, 2, 3),
            SphereFamily::CIII => (2, n, 3),
            SphereFamily::CIV => (3, n, 2),
            SphereFamily::CV => (2, 3, n),
            _ => return None,
        })
    }
}

fn power(w: &str, n: u64) -> String {
    w.repeat(n as usize)
}

/// The census the family's sphere must have.
pub fn family_census(id: SphereFamilyId) -> Result<Census> {
    let n = id.param;
    let items: Vec<(String, u64)> = match id.family {
        SphereFamily::AI => vec![(power("d", n), 2), ("caB".into(), 2 * n)],
        SphereFamily::AII => vec![(power("d", n), 2), ("cadB".into(), 2 * n), ("cbA".into(), 2 * n)],
        SphereFamily::AIII => vec![(power("d", n), 1), (power("c", n), 1), ("Ab".into(), n), ("caDB".into(), n)],
        SphereFamily::BI => vec![(power("d", n), 2), ("AbAb".into(), n), ("cc".into(), n), ("aDBc".into(), 2 * n)],
        SphereFamily::BII => vec![(power("Ab", n), 2), ("cc".into(), n), ("dd".into(), n), ("aDBc".into(), 2 * n)],
        SphereFamily::CI => vec![(power("bdAC", n), 2), ("cc".into(), n), ("dd".into(), n), ("aB".into(), 2 * n)],
        SphereFamily::CII => vec![(power("d", n), 2), (power("bdAC", 2), n), ("aB".into(), 2 * n), ("cc".into(), n)],
        _ => {
            let (f1, f2, f3) = id.orders().expect("census families carry orders");
            // N (1/f1 + 1/f2 + 1/f3 - 1) = 2
            let den = f2 * f3 + f1 * f3 + f1 * f2 - f1 * f2 * f3;
            let big = 2 * f1 * f2 * f3 / den;
            if id.family <= SphereFamily::BV {
                vec![(power("aB", f1), big / f1), ("bdAC".into(), big), (power("c", f2), big / f2), (power("D", f3), big / f3)]
            } else {
                vec![("aB".into(), big), (power("bdAC", f3), big / f3), (power("c", f1), big / f1), (power("D", f2), big / f2)]
            }
        }
    };
    let items: Vec<(&str, u64)> = items.iter().map(|(w, m)| (w.as_str(), *m)).collect();
    Census::parse(&items)
}

/// Relations a realizing tuple satisfies, as label words equal to 1.
pub fn family_relations(id: SphereFamilyId) -> Vec<LabelWord> {
    let n = id.param;
    let words: Vec<String> = match id.family {
        SphereFamily::AI => vec![power("d", n), "caB".into()],
        SphereFamily::AII => vec![power("d", n), "CaB".into(), "bDAC".into()],
        SphereFamily::AIII => vec![power("d", n), "Ab".into(), "caDB".into()],
        SphereFamily::BI => vec!["bdAC".into(), "AbAb".into(), "cc".into(), power("d", n)],
        SphereFamily::BII => vec!["bdAC".into(), power("Ab", n), "cc".into(), "dd".into()],
        SphereFamily::CI => vec!["Ab".into(), "cc".into(), "dd".into(), power("bdAC", n)],
        SphereFamily::CII => vec!["Ab".into(), "cc".into(), power("d", n), "bdACbdAC".into()],
        _ => {
            let (f1, f2, f3) = id.orders().expect("census families carry orders");
            if id.family <= SphereFamily::BV {
                vec!["bdAC".into(), power("Ab", f1), power("c", f2), power("d", f3)]
            } else {
                vec!["Ab".into(), power("c", f1), power("d", f2), power("bdAC", f3)]
            }
        }
    };
    words.iter().map(|w| LabelWord::parse(w).expect("family relations are well formed")).collect()
}

/// Disc types (`true` for positive) and arcs `X_i.k ↔ Y_{i+δ}.l`.
type Template = (&'static [bool], &'static [((usize, usize), (usize, usize), i64)]);

fn template(f: SphereFamily) -> Option<Template> {
    const P: usize = 0;
    const N: usize = 1;
    const R: usize = 1;
    const M: usize = 3;
    Some(match f {
        SphereFamily::AI => (&[true, false], &[((P, 0), (P, 3), 1), ((N, 0), (N, 3), -1), ((P, 2), (N, 2), 0), ((P, 1), (N, 1), 1)]),
        SphereFamily::AIII => (&[true, false], &[((P, 0), (P, 3), 1), ((N, 1), (N, 0), -1), ((P, 2), (N, 2), 0), ((P, 1), (N, 3), 0)]),
        // P, R positive; Q, S negative
        SphereFamily::AII => (
            &[true, true, false, false],
            &[
                ((0, 0), (0, 3), 1),
                ((0, 1), (1, 3), 0),
                ((0, 2), (3, 2), 0),
                ((1, 2), (3, 3), 0),
                ((1, 0), (3, 1), 1),
                ((1, 1), (2, 1), 0),
                ((2, 2), (3, 0), 1),
                ((2, 0), (2, 3), -1),
            ],
        ),
        // P, R positive; N, M negative
        SphereFamily::BI => (
            &[true, true, false, false],
            &[
                ((P, 0), (P, 3), 1),
                ((R, 0), (R, 3), -1),
                ((P, 1), (2, 3), 0),
                ((M, 2), (P, 2), 1),
                ((R, 1), (M, 3), 0),
                ((2, 2), (R, 2), -1),
                ((2, 0), (M, 1), 0),
                ((2, 1), (M, 0), 0),
            ],
        ),
        SphereFamily::BII => (
            &[true, true, false, false],
            &[
                ((P, 2), (2, 2), 0),
                ((2, 3), (P, 1), 1),
                ((R, 2), (M, 2), 0),
                ((M, 3), (R, 1), -1),
                ((P, 0), (R, 3), 0),
                ((P, 3), (R, 0), 0),
                ((2, 0), (M, 1), 1),
                ((2, 1), (M, 0), 1),
            ],
        ),
        SphereFamily::CI => (
            &[true, true, false, false],
            &[
                ((P, 2), (R, 3), 0),
                ((P, 3), (R, 2), 0),
                ((2, 3), (M, 0), 0),
                ((2, 0), (M, 3), 0),
                ((R, 0), (2, 2), 0),
                ((R, 1), (2, 1), 0),
                ((M, 1), (P, 1), 1),
                ((M, 2), (P, 0), 1),
            ],
        ),
        SphereFamily::CII => (
            &[true, true, false, false],
            &[
                ((2, 0), (2, 3), 1),
                ((M, 0), (M, 3), -1),
                ((P, 2), (R, 3), 0),
                ((P, 3), (R, 2), 0),
                ((P, 1), (2, 1), 0),
                ((2, 2), (P, 0), 0),
                ((R, 1), (M, 1), 0),
                ((M, 2), (R, 0), 0),
            ],
        ),
        _ => return None,
    })
}

/// Builds the sphere of a prose-described family. Disc `v` owns darts `4v..4v+4`.
pub fn generate_sphere(id: SphereFamilyId) -> Result<CombinatorialPicture> {
    let (types, arcs) = template(id.family).ok_or_else(|| {
        Error::Unsupported(format!("{} is only available at census level; use census_check", id.family))
    })?;
    let n = id.param as usize;
    let vertex = |t: usize, i: i64| t * n + i.rem_euclid(n as i64) as usize;
    let vertices = types
        .iter()
        .flat_map(|&pos| {
            (0..n).map(move |_| if pos { POSITIVE_CORNERS } else { NEGATIVE_CORNERS })
        })
        .enumerate()
        .map(|(v, corners)| Disc { darts: core::array::from_fn(|k| 4 * v + k), corners })
        .collect();
    let mut pairing = Vec::with_capacity(2 * n * types.len());
    for &((x, k), (y, l), delta) in arcs {
        for i in 0..n as i64 {
            pairing.push((4 * vertex(x, i) + k, 4 * vertex(y, i + delta) + l));
        }
    }
    let pic = CombinatorialPicture { vertices, pairing };
    pic.map()?;
    Ok(pic)
}

fn find_pair(
    g: &GroupSpec,
    want: impl Fn(&GroupSpec, &GroupValue, &GroupValue) -> bool,
) -> Option<(GroupValue, GroupValue)> {
    let els = g.elements()?;
    for x in &els {
        for y in &els {
            if want(g, x, y) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

fn has_order(g: &GroupSpec, x: &GroupValue, n: u64) -> bool {
    g.element_order(x).map(|o| o == ExtendedNat::Finite(n)).unwrap_or(false)
}

/// A concrete tuple satisfying the family's relations with the stated orders.
///
/// Prose families use cyclic and dihedral groups. Census families use a pair of
/// elements of the symmetric group of degree 5, which contains every spherical
/// triangle group that occurs.
pub fn realizing_tuple(id: SphereFamilyId) -> Result<Tuple> {
    let n = id.param;
    let int = GroupValue::Int;
    let dihedral = || -> Result<(GroupSpec, GroupValue, GroupValue)> {
        let g = GroupSpec::cayley(CayleyTable::dihedral(n as usize)?);
        Ok((g, int(1), int(n as i64)))
    };
    match id.family {
        SphereFamily::AI => Tuple::from_bcd(GroupSpec::Cyclic(n), int(1), int(1), int(1)),
        SphereFamily::AII => Tuple::from_bcd(GroupSpec::Cyclic(2 * n), int(1), int(2 * n as i64 - 1), int(2)),
        SphereFamily::AIII => Tuple::from_bcd(GroupSpec::Cyclic(n), int(0), int(1), int(1)),
        SphereFamily::BI => {
            let (g, r, s) = dihedral()?;
            let sr = g.mul(&s, &r)?;
            Tuple::from_bcd(g, s, sr, r)
        }
        SphereFamily::BII => {
            let (g, r, s) = dihedral()?;
            let rs = g.mul(&r, &s)?;
            Tuple::from_bcd(g, r, rs, s)
        }
        SphereFamily::CI => {
            let (g, r, s) = dihedral()?;
            let rs = g.mul(&r, &s)?;
            Tuple::from_bcd(g.clone(), g.identity(), s, rs)
        }
        SphereFamily::CII => {
            let (g, r, s) = dihedral()?;
            Tuple::from_bcd(g.clone(), g.identity(), s, r)
        }
        _ => {
            let (f1, f2, f3) = id.orders().expect("census families carry orders");
            let transposition = vec![1, 0, 2, 3, 4];
            let cycle = vec![1, 2, 3, 4, 0];
            let (table, _) = CayleyTable::from_permutations(&[transposition, cycle], 120)?;
            let g = GroupSpec::cayley(table);
            let mul = |g: &GroupSpec, x: &GroupValue, y: &GroupValue| g.mul(x, y).expect("elements of g");
            let inv = |g: &GroupSpec, x: &GroupValue| g.inv(x).expect("elements of g");
            if id.family <= SphereFamily::BV {
                // c = b d
                let (b, d) = find_pair(&g, |g, b, d| {
                    has_order(g, b, f1) && has_order(g, d, f3) && has_order(g, &mul(g, b, d), f2)
                })
                .ok_or_else(|| Error::invalid("no realizing pair in S5"))?;
                let c = mul(&g, &b, &d);
                Tuple::from_bcd(g, b, c, d)
            } else {
                // b = 1, |d c⁻¹| = f3
                let (c, d) = find_pair(&g, |g, c, d| {
                    has_order(g, c, f1) && has_order(g, d, f2) && has_order(g, &mul(g, d, &inv(g, c)), f3)
                })
                .ok_or_else(|| Error::invalid("no realizing pair in S5"))?;
                Tuple::from_bcd(g.clone(), g.identity(), c, d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(f: SphereFamily, n: u64) -> SphereFamilyId {
        SphereFamilyId::new(f, n).unwrap()
    }

    #[test]
    fn a_i_five() {
        let pic = generate_sphere(id(SphereFamily::AI, 5)).unwrap();
        let t = realizing_tuple(id(SphereFamily::AI, 5)).unwrap();
        let r = verify_picture(&pic, &t).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.vertices, r.edges, r.faces), (10, 20, 12));
        let census = pic.census().unwrap();
        assert_eq!(census, Census::parse(&[("ddddd", 1), ("DDDDD", 1), ("caB", 10)]).unwrap());
    }

    #[test]
    fn corrupted_label_detected() {
        let pic = generate_sphere(id(SphereFamily::AI, 5)).unwrap();
        let t = Tuple::from_bcd(GroupSpec::Cyclic(5), GroupValue::Int(1), GroupValue::Int(2), GroupValue::Int(1)).unwrap();
        let r = verify_picture(&pic, &t).unwrap();
        assert!(!r.all_region_labels_trivial);
        assert!(r.spherical && r.corner_words_ok);
    }

    #[test]
    fn single_disc_self_paired() {
        let pic = CombinatorialPicture {
            vertices: vec![Disc { darts: [0, 1, 2, 3], corners: POSITIVE_CORNERS }],
            pairing: vec![(0, 1), (2, 3)],
        };
        let t = realizing_tuple(id(SphereFamily::AI, 3)).unwrap();
        let r = verify_picture(&pic, &t).unwrap();
        assert!(r.corner_words_ok && !r.orientation_ok);
        assert_eq!(r.euler_characteristic, 2);
        assert!(!r.spherical);
        assert!(!r.passed());
    }

    #[test]
    fn malformed_pairings_rejected() {
        let disc = Disc { darts: [0, 1, 2, 3], corners: POSITIVE_CORNERS };
        let t = realizing_tuple(id(SphereFamily::AI, 3)).unwrap();
        for pairing in [vec![(0, 1)], vec![(0, 0), (1, 2)], vec![(0, 1), (1, 2)], vec![(0, 9), (1, 2)]] {
            let pic = CombinatorialPicture { vertices: vec![disc.clone()], pairing };
            assert!(verify_picture(&pic, &t).is_err());
        }
    }

    #[test]
    fn census_examples() {
        let t = realizing_tuple(id(SphereFamily::AI, 5)).unwrap();
        let good = Census::parse(&[("ddddd", 1), ("DDDDD", 1), ("caB", 10)]).unwrap();
        assert_eq!((good.faces(), good.edges(), good.vertices()), (12, Some(20), Some(10)));
        assert!(census_check(&good, &t));
        let bad = Census::parse(&[("ddddd", 1), ("caB", 10)]).unwrap();
        assert!(!census_check(&bad, &t));
    }

    #[test]
    fn census_families_need_no_map() {
        assert!(matches!(generate_sphere(id(SphereFamily::BIII, 5)), Err(Error::Unsupported(_))));
        assert!(SphereFamilyId::new(SphereFamily::BIV, 3).is_err());
        assert!(SphereFamilyId::new(SphereFamily::AI, 1).is_err());
    }

    #[test]
    fn disc_exponents_follow_rotation() {
        let d = Disc { darts: [0, 1, 2, 3], corners: [C, D, A, B] };
        assert_eq!(d.exponents(), Some([false, true, false, false]));
        let bad = Disc { darts: [0, 1, 2, 3], corners: [A, C, B, D] };
        assert_eq!(bad.exponents(), None);
    }

    #[test]
    fn mirror_pair_is_a_dipole() {
        let t = realizing_tuple(id(SphereFamily::BI, 3)).unwrap();
        let mut found = 0;
        for perm in [[0, 1, 2, 3], [0, 3, 2, 1], [1, 0, 3, 2], [1, 2, 3, 0], [2, 1, 0, 3], [2, 3, 0, 1], [3, 0, 1, 2], [3, 2, 1, 0]] {
            let pic = CombinatorialPicture {
                vertices: vec![
                    Disc { darts: [0, 1, 2, 3], corners: POSITIVE_CORNERS },
                    Disc { darts: [4, 5, 6, 7], corners: NEGATIVE_CORNERS },
                ],
                pairing: (0..4).map(|k| (k, 4 + perm[k])).collect(),
            };
            let r = verify_picture(&pic, &t).unwrap();
            if r.spherical && r.all_region_labels_trivial {
                found += 1;
                assert!(!r.reduced && !r.dipoles.is_empty(), "{perm:?}");
            }
        }
        assert_eq!(found, 1);
    }
}
