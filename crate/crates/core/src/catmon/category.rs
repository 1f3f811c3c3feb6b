use std::collections::HashMap;

use serde::Serialize;

use super::monoid::FiniteMonoid;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite category with an explicit composition table.
///
/// `composition[g][f]` is `Some(g ∘ f)` exactly when `f` ends where `g`
/// starts. `identities[x]` is the identity morphism of object `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    composition: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    /// Validates shapes, identity laws and associativity.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        composition: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidCategory(m));
        let objs = objects.len();
        let mors = morphisms.len();
        if let Some(f) = morphisms.iter().find(|f| f.source >= objs || f.target >= objs) {
            return bad(format!("morphism {} has an endpoint outside the objects", f.name));
        }
        let mut names = HashMap::new();
        for f in &morphisms {
            if names.insert(f.name.as_str(), ()).is_some() {
                return bad(format!("morphism name {} is used twice", f.name));
            }
        }
        if identities.len() != objs {
            return bad(format!("{} identities for {objs} objects", identities.len()));
        }
        for (x, &id) in identities.iter().enumerate() {
            if id >= mors || morphisms[id].source != x || morphisms[id].target != x {
                return bad(format!("identity of {} is not an endomorphism of it", objects[x]));
            }
        }
        if composition.len() != mors || composition.iter().any(|row| row.len() != mors) {
            return bad("composition table must be square in the morphisms".into());
        }
        for g in 0..mors {
            for f in 0..mors {
                let composable = morphisms[f].target == morphisms[g].source;
                match (composable, composition[g][f]) {
                    (true, None) => return bad(format!("{} ∘ {} is missing", morphisms[g].name, morphisms[f].name)),
                    (false, Some(_)) => {
                        return bad(format!("{} ∘ {} is defined but not composable", morphisms[g].name, morphisms[f].name))
                    }
                    (true, Some(h)) => {
                        if h >= mors || morphisms[h].source != morphisms[f].source || morphisms[h].target != morphisms[g].target {
                            return bad(format!("{} ∘ {} has the wrong endpoints", morphisms[g].name, morphisms[f].name));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        let cat = Self { objects, morphisms, identities, composition };
        for f in 0..mors {
            let (s, t) = (cat.morphisms[f].source, cat.morphisms[f].target);
            if cat.compose(f, cat.identities[s]) != Some(f) || cat.compose(cat.identities[t], f) != Some(f) {
                return bad(format!("identity law fails for {}", cat.morphisms[f].name));
            }
        }
        for h in 0..mors {
            for g in 0..mors {
                let Some(hg) = cat.compose(h, g) else { continue };
                for f in 0..mors {
                    let Some(gf) = cat.compose(g, f) else { continue };
                    if cat.compose(hg, f) != cat.compose(h, gf) {
                        return bad(format!(
                            "associativity fails for {}, {}, {}",
                            cat.morphisms[h].name, cat.morphisms[g].name, cat.morphisms[f].name
                        ));
                    }
                }
            }
        }
        Ok(cat)
    }

    /// A monoid as a one-object category (object `*`), with `g ∘ f = g · f`.
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        let morphisms = (0..m.size()).map(|a| Morphism { name: m.name(a).to_string(), source: 0, target: 0 }).collect();
        let composition = (0..m.size()).map(|g| (0..m.size()).map(|f| Some(m.mul(g, f))).collect()).collect();
        Self { objects: vec!["*".into()], morphisms, identities: vec![m.identity()], composition }
    }

    /// The chaotic category on `k` objects: one morphism between any two.
    ///
    /// The morphism `x → y` has index `x · k + y` and is named `x>y`.
    pub fn chaotic(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidCategory("the chaotic category needs at least one object".into()));
        }
        let objects = (0..k).map(|x| x.to_string()).collect();
        let morphisms = (0..k * k).map(|f| Morphism { name: format!("{}>{}", f / k, f % k), source: f / k, target: f % k }).collect();
        let composition = (0..k * k)
            .map(|g| (0..k * k).map(|f| (f % k == g / k).then_some((f / k) * k + g % k)).collect())
            .collect();
        Ok(Self { objects, morphisms, identities: (0..k).map(|x| x * k + x).collect(), composition })
    }

    /// The product category; the pair `(f, g)` has index `f · |Mor(other)| + g`
    /// and the object pair `(x, y)` has index `x · |Ob(other)| + y`.
    pub fn product(&self, other: &FiniteCategory) -> FiniteCategory {
        let ko = other.objects.len();
        let km = other.morphisms.len();
        let mut objects = Vec::new();
        for a in &self.objects {
            for b in &other.objects {
                objects.push(format!("({a},{b})"));
            }
        }
        let mut morphisms = Vec::new();
        for f in &self.morphisms {
            for g in &other.morphisms {
                morphisms.push(Morphism {
                    name: format!("({},{})", f.name, g.name),
                    source: f.source * ko + g.source,
                    target: f.target * ko + g.target,
                });
            }
        }
        let total = morphisms.len();
        let composition = (0..total)
            .map(|p| {
                (0..total)
                    .map(|q| {
                        let a = self.compose(p / km, q / km)?;
                        let b = other.compose(p % km, q % km)?;
                        Some(a * km + b)
                    })
                    .collect()
            })
            .collect();
        let identities = (0..objects.len()).map(|x| self.identities[x / ko] * km + other.identities[x % ko]).collect();
        FiniteCategory { objects, morphisms, identities, composition }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].source] == f
    }

    /// `g ∘ f`, when `f` ends where `g` starts.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.composition[g][f]
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects.iter().position(|o| o == name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn morphism_index(&self, name: &str) -> Result<usize> {
        self.morphisms.iter().position(|f| f.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Morphisms `x → y` in index order.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&f| self.morphisms[f].source == x && self.morphisms[f].target == y).collect()
    }

    /// The inverse of `f`, if `f` is an isomorphism.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let m = &self.morphisms[f];
        self.hom(m.target, m.source).into_iter().find(|&g| {
            self.compose(g, f) == Some(self.identities[m.source]) && self.compose(f, g) == Some(self.identities[m.target])
        })
    }
}
