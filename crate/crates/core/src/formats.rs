//! Serializable file formats. Elements are referred to by name; indices
//! follow declaration order.

use std::collections::HashMap;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::catmon::{FiniteCategory, FiniteMonoid, Morphism, WreathData};
use crate::equivariant::{FiniteGroup, GMonoid};
use crate::error::{Error, Result};
use crate::realize::RealizationPoint;
use crate::sset::{BisimplicialSet, BisimplicialViolation, OrderedComplex, SimplicialSet};

fn lookup(names: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::new();
    for (k, n) in names.iter().enumerate() {
        if index.insert(n.clone(), k).is_some() {
            return Err(Error::UnknownName(format!("{what} name {n} is declared twice")));
        }
    }
    Ok(index)
}

fn resolve(index: &HashMap<String, usize>, name: &str) -> Result<usize> {
    index.get(name).copied().ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn resolve_table(index: &HashMap<String, usize>, table: &[Vec<String>]) -> Result<Vec<Vec<usize>>> {
    table.iter().map(|row| row.iter().map(|n| resolve(index, n)).collect()).collect()
}

/// `{elements, identity, table}` with `table[a][b] = a·b`, all by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidFile {
    pub elements: Vec<String>,
    pub identity: String,
    pub table: Vec<Vec<String>>,
}

impl MonoidFile {
    /// Resolves names and validates; the error names the first broken law.
    pub fn to_monoid(&self) -> Result<FiniteMonoid> {
        let index = lookup(&self.elements, "element")?;
        let table = resolve_table(&index, &self.table)?;
        FiniteMonoid::new(self.elements.clone(), table, resolve(&index, &self.identity)?)
    }

    pub fn to_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::new(self.to_monoid()?)
    }

    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        Self {
            elements: m.names().to_vec(),
            identity: m.name(m.identity()).to_string(),
            table: m.table().iter().map(|row| row.iter().map(|&c| m.name(c).to_string()).collect()).collect(),
        }
    }
}

/// A monoid together with `group` and `action[g][m] = g·m` by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GMonoidFile {
    #[serde(flatten)]
    pub monoid: MonoidFile,
    pub group: MonoidFile,
    pub action: Vec<Vec<String>>,
}

impl GMonoidFile {
    pub fn to_gmonoid(&self) -> Result<GMonoid> {
        let monoid = self.monoid.to_monoid()?;
        let group = self.group.to_group()?;
        let index = lookup(&self.monoid.elements, "element")?;
        GMonoid::new(monoid, group, resolve_table(&index, &self.action)?)
    }

    pub fn from_gmonoid(a: &GMonoid) -> Self {
        let m = a.monoid();
        Self {
            monoid: MonoidFile::from_monoid(m),
            group: MonoidFile::from_monoid(a.group().monoid()),
            action: a.action().iter().map(|row| row.iter().map(|&x| m.name(x).to_string()).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// `{objects, morphisms, identities, compose}`; each `compose` entry is
/// `[g, f, g∘f]` and every composable pair must appear exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: Vec<String>,
    pub compose: Vec<[String; 3]>,
}

impl CategoryFile {
    pub fn to_category(&self) -> Result<FiniteCategory> {
        let objects = lookup(&self.objects, "object")?;
        let names: Vec<String> = self.morphisms.iter().map(|m| m.name.clone()).collect();
        let morphisms = lookup(&names, "morphism")?;
        let list = self
            .morphisms
            .iter()
            .map(|m| Ok(Morphism { name: m.name.clone(), source: resolve(&objects, &m.source)?, target: resolve(&objects, &m.target)? }))
            .collect::<Result<Vec<_>>>()?;
        let identities = self.identities.iter().map(|n| resolve(&morphisms, n)).collect::<Result<Vec<_>>>()?;
        let mut composition = vec![vec![None; list.len()]; list.len()];
        for [g, f, gf] in &self.compose {
            let (g, f, gf) = (resolve(&morphisms, g)?, resolve(&morphisms, f)?, resolve(&morphisms, gf)?);
            if composition[g][f].replace(gf).is_some() {
                return Err(Error::InvalidCategory(format!("{} ∘ {} is given twice", names[g], names[f])));
            }
        }
        FiniteCategory::new(self.objects.clone(), list, identities, composition)
    }

    pub fn from_category(c: &FiniteCategory) -> Self {
        let name = |f: usize| c.morphism(f).name.clone();
        let count = c.morphisms().len();
        let compose = (0..count)
            .flat_map(|g| (0..count).filter_map(move |f| c.compose(g, f).map(|gf| (g, f, gf))))
            .map(|(g, f, gf)| [name(g), name(f), name(gf)])
            .collect();
        Self {
            objects: c.objects().to_vec(),
            morphisms: c
                .morphisms()
                .iter()
                .map(|m| MorphismEntry { name: m.name.clone(), source: c.objects()[m.source].clone(), target: c.objects()[m.target].clone() })
                .collect(),
            identities: (0..c.objects().len()).map(|x| name(c.identity(x))).collect(),
            compose,
        }
    }
}

/// `{acting, coefficients, points, action}` with `action[n][x] = n·x` by
/// point name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathFile {
    pub acting: MonoidFile,
    pub coefficients: MonoidFile,
    pub points: Vec<String>,
    pub action: Vec<Vec<String>>,
}

impl WreathFile {
    pub fn to_wreath_data(&self) -> Result<WreathData> {
        let index = lookup(&self.points, "point")?;
        WreathData::new(self.acting.to_monoid()?, self.coefficients.to_monoid()?, self.points.clone(), resolve_table(&index, &self.action)?)
    }
}

/// `{vertices, simplices}`; vertex order is the declared order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub simplices: Vec<Vec<String>>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<OrderedComplex> {
        OrderedComplex::from_names(self.vertices.clone(), &self.simplices)
    }
}

/// `{cutoff, levels, faces, degeneracies}`: `levels[n]` lists the labels of
/// the `n`-simplices, `faces[n-1][i][x]` is `d_i x` for `x` on level `n`,
/// and `degeneracies[n][i][x]` is `s_i x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsetFile {
    pub cutoff: usize,
    pub levels: Vec<Vec<String>>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

impl SsetFile {
    /// Builds the simplicial set and checks the simplicial identities; the
    /// error names the first one that fails.
    pub fn to_sset(&self) -> Result<SimplicialSet> {
        let x = SimplicialSet::from_tables(self.cutoff, self.levels.clone(), self.faces.clone(), self.degeneracies.clone())?;
        match x.validate().violations.first() {
            Some(v) => Err(Error::MalformedSimplicialSet(v.to_string())),
            None => Ok(x),
        }
    }

    pub fn from_sset(x: &SimplicialSet) -> Self {
        let c = x.cutoff();
        Self {
            cutoff: c,
            levels: (0..=c).map(|n| x.labels(n).to_vec()).collect(),
            faces: (1..=c).map(|n| (0..=n).map(|i| x.face_table(n, i).to_vec()).collect()).collect(),
            degeneracies: (0..c).map(|n| (0..=n).map(|i| x.degeneracy_table(n, i).to_vec()).collect()).collect(),
        }
    }
}

/// `{rows, columns}`: `rows[n]` is the horizontal simplicial set at
/// vertical level `n`, `columns[m]` the vertical one at horizontal level `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BissetFile {
    pub rows: Vec<SsetFile>,
    pub columns: Vec<SsetFile>,
}

impl BissetFile {
    pub fn to_bisset(&self) -> Result<BisimplicialSet> {
        let rows = self.rows.iter().map(SsetFile::to_sset).collect::<Result<Vec<_>>>()?;
        let columns = self.columns.iter().map(SsetFile::to_sset).collect::<Result<Vec<_>>>()?;
        let b = BisimplicialSet::from_rows_and_columns(rows, columns)?;
        match b.validate().first() {
            Some(BisimplicialViolation::Commutation { m, n, horizontal, vertical, simplex }) => Err(Error::MalformedSimplicialSet(format!(
                "{horizontal} and {vertical} do not commute on simplex {simplex} of bidegree ({m},{n})"
            ))),
            Some(v) => Err(Error::MalformedSimplicialSet(format!("{v:?}"))),
            None => Ok(b),
        }
    }

    pub fn from_bisset(b: &BisimplicialSet) -> Self {
        let (d1, d2) = b.cutoffs();
        Self {
            rows: (0..=d2).map(|n| SsetFile::from_sset(b.row(n))).collect(),
            columns: (0..=d1).map(|m| SsetFile::from_sset(b.column(m))).collect(),
        }
    }
}

/// A simplex given by index or by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SimplexRef {
    Index(usize),
    Label(String),
}

/// `{level, simplex, coords}` with coordinates as fraction strings such as
/// `"1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointFile {
    pub level: usize,
    pub simplex: SimplexRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub coords: Vec<String>,
}

impl PointFile {
    pub fn to_point(&self, x: &SimplicialSet) -> Result<RealizationPoint> {
        if self.level > x.cutoff() {
            return Err(Error::CutoffTooSmall { needed: self.level, cutoff: x.cutoff() });
        }
        let simplex = match &self.simplex {
            SimplexRef::Index(i) => *i,
            SimplexRef::Label(l) => {
                x.labels(self.level).iter().position(|m| m == l).ok_or_else(|| Error::UnknownName(l.clone()))?
            }
        };
        let coords = self
            .coords
            .iter()
            .map(|c| BigRational::from_str(c.trim()).map_err(|_| Error::InvalidCoordinates(format!("{c} is not a fraction"))))
            .collect::<Result<Vec<_>>>()?;
        RealizationPoint::new(self.level, simplex, coords)
    }

    pub fn from_point(x: &SimplicialSet, p: &RealizationPoint) -> Self {
        Self {
            level: p.level,
            simplex: SimplexRef::Index(p.simplex),
            label: Some(x.label(p.level, p.simplex).to_string()),
            coords: p.coords.iter().map(|c| c.to_string()).collect(),
        }
    }
}
