//! JSON file formats. Letters use lowercase for a generator and uppercase for its inverse.

use anyhow::{anyhow, bail, Context, Result};
use asphere_core::cosetenum::FpPresentation;
use asphere_core::groups::{CayleyTable, GroupSpec, GroupValue};
use asphere_core::pictures::{CombinatorialPicture, Disc};
use asphere_core::presentation::{Coefficients, Letter};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Groups larger than this are refused when built from permutations.
pub const PERMUTATION_GROUP_LIMIT: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupJson {
    Cyclic {
        n: u64,
    },
    InfiniteCyclic,
    Product {
        factors: Vec<GroupJson>,
    },
    Cayley {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        identity: usize,
        /// Skip the associativity check; required above 256 elements.
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        trusted: bool,
    },
    FgAbelian {
        rank: usize,
        #[serde(default)]
        torsion: Vec<u64>,
    },
    /// Dihedral group of order `2n`, element `k + n·f` standing for `r^k s^f`.
    Dihedral {
        n: usize,
    },
    /// Permutation group on `0..m`, elements indexed as in the generated Cayley table.
    Permutations {
        generators: Vec<Vec<usize>>,
    },
}

impl GroupJson {
    pub fn build(&self) -> Result<GroupSpec> {
        Ok(match self {
            GroupJson::Cyclic { n } => GroupSpec::cyclic(*n)?,
            GroupJson::InfiniteCyclic => GroupSpec::InfiniteCyclic,
            GroupJson::Product { factors } => {
                GroupSpec::product(factors.iter().map(GroupJson::build).collect::<Result<_>>()?)?
            }
            GroupJson::Cayley { table, identity, trusted } => {
                let t = if *trusted {
                    CayleyTable::new_trusted(table.clone(), *identity)?
                } else {
                    CayleyTable::new(table.clone(), *identity)?
                };
                GroupSpec::cayley(t)
            }
            GroupJson::FgAbelian { rank, torsion } => GroupSpec::fg_abelian(*rank, torsion.clone())?,
            GroupJson::Dihedral { n } => GroupSpec::cayley(CayleyTable::dihedral(*n)?),
            GroupJson::Permutations { generators } => {
                GroupSpec::cayley(CayleyTable::from_permutations(generators, PERMUTATION_GROUP_LIMIT)?.0)
            }
        })
    }
}

pub fn element_from_json(g: &GroupSpec, v: &Value) -> Result<GroupValue> {
    let int = |v: &Value| v.as_i64().ok_or_else(|| anyhow!("expected an integer element of {g}, got {v}"));
    Ok(match g {
        GroupSpec::Cyclic(_) | GroupSpec::InfiniteCyclic | GroupSpec::Cayley(_) => GroupValue::Int(int(v)?),
        GroupSpec::Product(fs) => {
            let items = v.as_array().ok_or_else(|| anyhow!("expected an array element of {g}, got {v}"))?;
            if items.len() != fs.len() {
                bail!("element {v} has {} components, {g} has {}", items.len(), fs.len());
            }
            GroupValue::Tuple(fs.iter().zip(items).map(|(f, x)| element_from_json(f, x)).collect::<Result<_>>()?)
        }
        GroupSpec::FgAbelian { .. } => {
            let items = v.as_array().ok_or_else(|| anyhow!("expected an array element of {g}, got {v}"))?;
            GroupValue::Vector(items.iter().map(int).collect::<Result<_>>()?)
        }
    })
}

pub fn element_to_json(x: &GroupValue) -> Value {
    match x {
        GroupValue::Int(i) => json!(i),
        GroupValue::Tuple(v) => Value::Array(v.iter().map(element_to_json).collect()),
        GroupValue::Vector(v) => json!(v),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientsJson {
    pub group: GroupJson,
    pub g1: Value,
    pub g2: Value,
    pub g3: Value,
    pub g4: Value,
}

impl CoefficientsJson {
    pub fn build(&self) -> Result<Coefficients> {
        let g = self.group.build()?;
        let el = |name: &str, v: &Value| element_from_json(&g, v).with_context(|| format!("coefficient {name}"));
        let (g1, g2, g3, g4) = (el("g1", &self.g1)?, el("g2", &self.g2)?, el("g3", &self.g3)?, el("g4", &self.g4)?);
        Ok(Coefficients::new(g, g1, g2, g3, g4)?)
    }
}

pub fn parse_coefficients(text: &str) -> Result<Coefficients> {
    let j: CoefficientsJson = serde_json::from_str(text).context("malformed coefficients JSON")?;
    j.build()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    /// Words generating the subgroup whose cosets are enumerated; empty for the group order.
    #[serde(default)]
    pub subgroup: Vec<String>,
}

impl PresentationJson {
    pub fn build(&self) -> Result<FpPresentation> {
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut chars = g.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => gens.push(c),
                _ => bail!("generator names must be single lowercase letters, got {g:?}"),
            }
        }
        let rels: Vec<&str> = self.relators.iter().map(String::as_str).collect();
        let sub: Vec<&str> = self.subgroup.iter().map(String::as_str).collect();
        Ok(FpPresentation::parse(&gens, &rels, &sub)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscJson {
    pub darts: [usize; 4],
    pub corners: [String; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PictureJson {
    pub vertices: Vec<DiscJson>,
    pub pairing: Vec<[usize; 2]>,
}

fn letter(s: &str) -> Result<Letter> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Letter::from_char(c).ok_or_else(|| anyhow!("unknown corner letter {s:?}")),
        _ => bail!("corner labels are single letters, got {s:?}"),
    }
}

impl PictureJson {
    pub fn build(&self) -> Result<CombinatorialPicture> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let corners = [letter(&v.corners[0])?, letter(&v.corners[1])?, letter(&v.corners[2])?, letter(&v.corners[3])?];
            vertices.push(Disc { darts: v.darts, corners });
        }
        Ok(CombinatorialPicture { vertices, pairing: self.pairing.iter().map(|p| (p[0], p[1])).collect() })
    }

    pub fn from_picture(p: &CombinatorialPicture) -> Self {
        PictureJson {
            vertices: p
                .vertices
                .iter()
                .map(|d| DiscJson { darts: d.darts, corners: d.corners.map(|l| l.to_char().to_string()) })
                .collect(),
            pairing: p.pairing.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }
}
