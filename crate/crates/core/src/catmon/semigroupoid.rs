use serde::Serialize;

use super::category::FiniteCategory;
use super::monoid::FiniteMonoid;
use crate::error::{check_index, Error, Result};

/// A nonempty finite category in which all objects are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroupoid {
    category: FiniteCategory,
}

/// An explicit isomorphism `S ≅ M × J` for a semigroupoid `S`, its
/// endomorphism monoid `M` at the base object, and the chaotic category `J`
/// on the objects of `S`.
///
/// `f: y → z` corresponds to `(φ_z⁻¹ ∘ f ∘ φ_y, y, z)`, where `φ_y` is the
/// chosen isomorphism from the base object to `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingWitness {
    pub base: usize,
    /// `chosen[y] = φ_y`.
    pub chosen: Vec<usize>,
    /// `coordinates[f] = (m, y, z)`.
    pub coordinates: Vec<(usize, usize, usize)>,
}

impl Semigroupoid {
    pub fn new(category: FiniteCategory) -> Result<Self> {
        if category.objects().is_empty() {
            return Err(Error::NotSemigroupoid("the category is empty".into()));
        }
        for y in 0..category.objects().len() {
            if first_isomorphism(&category, 0, y).is_none() {
                return Err(Error::NotSemigroupoid(format!(
                    "objects {} and {} are not isomorphic",
                    category.objects()[0],
                    category.objects()[y]
                )));
            }
        }
        Ok(Self { category })
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    /// The endomorphism monoid at `base` (elements keep their morphism
    /// names) together with a verified splitting `S ≅ M × J`.
    ///
    /// For each object `y` the witness uses the first isomorphism
    /// `base → y` in morphism order.
    pub fn associated_monoid(&self, base: usize) -> Result<(FiniteMonoid, SplittingWitness)> {
        let cat = &self.category;
        check_index(base, cat.objects().len())?;
        let endos = cat.hom(base, base);
        let mut position = vec![usize::MAX; cat.morphisms().len()];
        for (k, &f) in endos.iter().enumerate() {
            position[f] = k;
        }
        let table = endos
            .iter()
            .map(|&a| endos.iter().map(|&b| position[cat.compose(a, b).expect("endomorphisms compose")]).collect())
            .collect();
        let names = endos.iter().map(|&f| cat.morphism(f).name.clone()).collect();
        let monoid = FiniteMonoid::new(names, table, position[cat.identity(base)])?;

        let mut chosen = Vec::with_capacity(cat.objects().len());
        let mut inverses = Vec::with_capacity(cat.objects().len());
        for y in 0..cat.objects().len() {
            let (phi, inv) = first_isomorphism(cat, base, y)
                .ok_or_else(|| Error::NotSemigroupoid(format!("no isomorphism to {}", cat.objects()[y])))?;
            chosen.push(phi);
            inverses.push(inv);
        }
        let coordinates = (0..cat.morphisms().len())
            .map(|f| {
                let (y, z) = (cat.morphism(f).source, cat.morphism(f).target);
                let conj = cat.compose(inverses[z], cat.compose(f, chosen[y]).expect("φ_y ends at y")).expect("φ_z⁻¹ starts at z");
                (position[conj], y, z)
            })
            .collect();
        let witness = SplittingWitness { base, chosen, coordinates };
        witness.verify(cat, &monoid).map_err(Error::NotSemigroupoid)?;
        Ok((monoid, witness))
    }
}

impl SplittingWitness {
    /// Exhaustively checks that the coordinates define an isomorphism of
    /// categories onto `M × J`.
    pub fn verify(&self, cat: &FiniteCategory, monoid: &FiniteMonoid) -> std::result::Result<(), String> {
        let k = cat.objects().len();
        if cat.morphisms().len() != monoid.size() * k * k {
            return Err(format!("|Mor| = {} but |M × J| = {}", cat.morphisms().len(), monoid.size() * k * k));
        }
        let mut hit = vec![false; monoid.size() * k * k];
        for (f, &(m, y, z)) in self.coordinates.iter().enumerate() {
            if m >= monoid.size() {
                return Err(format!("{} has no monoid coordinate", cat.morphism(f).name));
            }
            let slot = (m * k + y) * k + z;
            if std::mem::replace(&mut hit[slot], true) {
                return Err(format!("{} collides with another morphism", cat.morphism(f).name));
            }
        }
        for x in 0..k {
            if self.coordinates[cat.identity(x)] != (monoid.identity(), x, x) {
                return Err(format!("identity of {} is not sent to an identity", cat.objects()[x]));
            }
        }
        for g in 0..cat.morphisms().len() {
            for f in 0..cat.morphisms().len() {
                if let Some(gf) = cat.compose(g, f) {
                    let (mg, _, z) = self.coordinates[g];
                    let (mf, y, _) = self.coordinates[f];
                    if self.coordinates[gf] != (monoid.mul(mg, mf), y, z) {
                        return Err(format!("composition {} ∘ {} is not preserved", cat.morphism(g).name, cat.morphism(f).name));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The first isomorphism `x → y` in morphism order, with its inverse.
fn first_isomorphism(cat: &FiniteCategory, x: usize, y: usize) -> Option<(usize, usize)> {
    cat.hom(x, y).into_iter().find_map(|f| cat.inverse(f).map(|g| (f, g)))
}
