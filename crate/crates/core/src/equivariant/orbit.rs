use serde::Serialize;

use super::gmonoid::{GMonoid, GSimplicialSet};
use super::group::{subgroups, FiniteGroup, Subgroup};
use crate::catmon::{FiniteCategory, Morphism, Nerve};
use crate::error::{check_index, Error, Result};
use crate::sset::{SimplicialMap, SimplicialSet};

/// A morphism `G/H → G/K`, `gH ↦ gγK`, stored by the least element of
/// the coset `γK`. It exists exactly when `γ⁻¹Hγ ⊆ K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitMorphism {
    pub source: usize,
    pub target: usize,
    pub representative: usize,
}

/// The orbit category: one object `G/H` for every subgroup `H`.
#[derive(Clone, Debug)]
pub struct OrbitCategory {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
    morphisms: Vec<OrbitMorphism>,
    category: FiniteCategory,
}

impl OrbitCategory {
    pub fn new(group: &FiniteGroup) -> Self {
        let subs = subgroups(group);
        let mut morphisms = Vec::new();
        for (hi, h) in subs.iter().enumerate() {
            for (ki, k) in subs.iter().enumerate() {
                for gamma in 0..group.size() {
                    if least_in_coset(group, gamma, k) == gamma && h.elements().iter().all(|&x| k.contains(group.conjugate(x, gamma))) {
                        morphisms.push(OrbitMorphism { source: hi, target: ki, representative: gamma });
                    }
                }
            }
        }
        let find = |s: usize, t: usize, r: usize| {
            morphisms.iter().position(|m| m.source == s && m.target == t && m.representative == r).expect("morphism listed")
        };
        let composition = morphisms
            .iter()
            .map(|b| {
                morphisms
                    .iter()
                    .map(|a| {
                        (a.target == b.source).then(|| {
                            let r = least_in_coset(group, group.mul(a.representative, b.representative), &subs[b.target]);
                            find(a.source, b.target, r)
                        })
                    })
                    .collect()
            })
            .collect();
        let objects = subs.iter().map(|h| format!("G/{}", group.subgroup_name(h))).collect::<Vec<_>>();
        let identities = (0..subs.len()).map(|x| find(x, x, group.identity())).collect();
        let cat_morphisms = morphisms
            .iter()
            .map(|m| Morphism {
                name: format!("{}: {} -> {}", group.name(m.representative), objects[m.source], objects[m.target]),
                source: m.source,
                target: m.target,
            })
            .collect();
        let category =
            FiniteCategory::new(objects, cat_morphisms, identities, composition).expect("the orbit category satisfies the category laws");
        Self { group: group.clone(), subgroups: subs, morphisms, category }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn morphisms(&self) -> &[OrbitMorphism] {
        &self.morphisms
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    /// Indices of the morphisms `G/H → G/K`.
    pub fn hom(&self, h: usize, k: usize) -> Vec<usize> {
        self.category.hom(h, k)
    }

    /// `β ∘ α`, when `α` ends where `β` starts.
    pub fn compose(&self, beta: usize, alpha: usize) -> Option<usize> {
        self.category.compose(beta, alpha)
    }

    pub fn identity(&self, h: usize) -> usize {
        self.category.identity(h)
    }

    /// Every representative of the coset of morphism `alpha`.
    pub fn representatives(&self, alpha: usize) -> Vec<usize> {
        let m = &self.morphisms[alpha];
        self.group.left_coset(m.representative, &self.subgroups[m.target])
    }
}

/// `|(G/K)^H|`: cosets `xK` with `hxK = xK` for every `h ∈ H`.
pub fn fixed_coset_count(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> usize {
    let mut cosets: Vec<Vec<usize>> = (0..g.size()).map(|x| g.left_coset(x, k)).collect();
    cosets.sort();
    cosets.dedup();
    cosets
        .iter()
        .filter(|c| h.elements().iter().all(|&y| k.contains(g.mul(g.inverse(c[0]), g.mul(y, c[0])))))
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomCount {
    pub source: String,
    pub target: String,
    pub morphisms: usize,
    pub fixed_cosets: usize,
}

/// `|Hom(G/H, G/K)|` against `|(G/K)^H|` for every pair of subgroups.
pub fn hom_counts(orbit: &OrbitCategory) -> Vec<HomCount> {
    let g = orbit.group();
    let subs = orbit.subgroups();
    let mut out = Vec::new();
    for (hi, h) in subs.iter().enumerate() {
        for (ki, k) in subs.iter().enumerate() {
            out.push(HomCount {
                source: g.subgroup_name(h),
                target: g.subgroup_name(k),
                morphisms: orbit.hom(hi, ki).len(),
                fixed_cosets: fixed_coset_count(g, h, k),
            });
        }
    }
    out
}

/// The least element of `gK`.
fn least_in_coset(g: &FiniteGroup, x: usize, k: &Subgroup) -> usize {
    k.elements().iter().map(|&y| g.mul(x, y)).min().expect("subgroups are nonempty")
}

/// `R(α): Y^K → Y^H`, `y ↦ γ·y`, for `α: G/H → G/K`. Every representative
/// of `γK` is checked to give the same simplex, inside `Y^H`.
///
/// Source and target are [`GSimplicialSet::fixed_sset`] for `K` and `H`.
pub fn restriction_map(y: &GSimplicialSet, orbit: &OrbitCategory, alpha: usize) -> Result<SimplicialMap> {
    check_index(alpha, orbit.morphisms.len())?;
    if y.group() != &orbit.group {
        return Err(Error::IllDefinedRestriction("the orbit category belongs to another group".into()));
    }
    let m = orbit.morphisms[alpha];
    let (h, k) = (&orbit.subgroups[m.source], &orbit.subgroups[m.target]);
    let source_cells = y.fixed_indices(k)?;
    let target_cells = y.fixed_indices(h)?;
    let reps = orbit.representatives(alpha);
    let mut levels = Vec::with_capacity(source_cells.len());
    for (n, cells) in source_cells.iter().enumerate() {
        let level = cells
            .iter()
            .map(|&x| {
                let image = y.act(n, m.representative, x);
                if let Some(&other) = reps.iter().find(|&&g| y.act(n, g, x) != image) {
                    return Err(Error::IllDefinedRestriction(format!(
                        "representatives {} and {} disagree on {}",
                        orbit.group.name(m.representative),
                        orbit.group.name(other),
                        y.sset().label(n, x)
                    )));
                }
                target_cells[n].binary_search(&image).map_err(|_| {
                    Error::IllDefinedRestriction(format!("the image of {} is not fixed by the source subgroup", y.sset().label(n, x)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        levels.push(level);
    }
    let map = SimplicialMap { levels };
    map.check(&y.fixed_sset(k)?, &y.fixed_sset(h)?).map_err(Error::IllDefinedRestriction)?;
    Ok(map)
}

/// A simplex on which the two routes around a naturality square differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalityFailure {
    pub morphism: String,
    pub level: usize,
    pub simplex: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub squares: usize,
    pub simplices_checked: usize,
    pub failures: Vec<NaturalityFailure>,
}

impl NaturalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `α: G/H → G/K`, checks simplexwise that
///
/// ```text
/// N(M^K) --N(γ·)--> N(M^H)
///   |                 |
/// N(M)^K --R(α)---> N(M)^H
/// ```
///
/// commutes, the vertical maps matching simplices by label.
pub fn check_naturality(a: &GMonoid, cutoff: usize) -> Result<NaturalityReport> {
    if cutoff < 1 {
        return Err(Error::CutoffTooSmall { needed: 1, cutoff });
    }
    let orbit = OrbitCategory::new(a.group());
    let y = super::gmonoid::nerve_of_gmonoid(a, cutoff)?;
    let nerves: Vec<Nerve> =
        orbit.subgroups.iter().map(|h| a.fixed_monoid(h).map(|m| Nerve::of_monoid(&m, cutoff))).collect::<Result<_>>()?;
    let fixed: Vec<SimplicialSet> = orbit.subgroups.iter().map(|h| y.fixed_sset(h)).collect::<Result<_>>()?;
    let identification: Vec<Vec<Vec<Option<usize>>>> = nerves.iter().zip(&fixed).map(|(n, f)| match_labels(n.sset(), f)).collect();

    let mut failures = Vec::new();
    let mut checked = 0;
    for (alpha, m) in orbit.morphisms.iter().enumerate() {
        let name = orbit.category.morphism(alpha).name.clone();
        let right = restriction_map(&y, &orbit, alpha)?;
        let (src_elems, dst_elems) = (a.fixed_elements(&orbit.subgroups[m.target])?, a.fixed_elements(&orbit.subgroups[m.source])?);
        // γ· restricted to M^K → M^H, in submonoid indices
        let on_monoid: Vec<usize> = src_elems
            .iter()
            .map(|&x| dst_elems.binary_search(&a.act(m.representative, x)).map_err(|_| Error::IllDefinedRestriction(format!("{name} leaves M^H"))))
            .collect::<Result<_>>()?;
        let (src, dst) = (&nerves[m.target], &nerves[m.source]);
        let left = src.functor_map(dst, &[0], &on_monoid)?;
        for n in 0..=cutoff {
            for x in 0..src.sset().level_size(n) {
                checked += 1;
                let down_then_across = identification[m.target][n][x].map(|z| right.apply(n, z));
                let across_then_down = identification[m.source][n][left.apply(n, x)];
                if down_then_across.is_none() || down_then_across != across_then_down {
                    failures.push(NaturalityFailure {
                        morphism: name.clone(),
                        level: n,
                        simplex: src.sset().label(n, x).to_string(),
                        detail: format!("{down_then_across:?} vs {across_then_down:?}"),
                    });
                }
            }
        }
    }
    Ok(NaturalityReport { squares: orbit.morphisms.len(), simplices_checked: checked, failures })
}

/// For each simplex of `a`, the simplex of `b` with the same label.
fn match_labels(a: &SimplicialSet, b: &SimplicialSet) -> Vec<Vec<Option<usize>>> {
    (0..=a.cutoff().min(b.cutoff()))
        .map(|n| {
            let index: std::collections::HashMap<&str, usize> = b.labels(n).iter().enumerate().map(|(x, l)| (l.as_str(), x)).collect();
            a.labels(n).iter().map(|l| index.get(l.as_str()).copied()).collect()
        })
        .collect()
}
