use serde::Serialize;

use super::group::{subgroups, FiniteGroup, Subgroup};
use crate::catmon::{FiniteMonoid, Nerve};
use crate::error::{Error, Result};
use crate::homology::{homology, HomologyResult};
use crate::sset::SimplicialSet;

/// A finite monoid with a left action of a finite group by monoid
/// automorphisms; `action[g][m] = g · m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMonoid {
    monoid: FiniteMonoid,
    group: FiniteGroup,
    action: Vec<Vec<usize>>,
}

impl GMonoid {
    pub fn new(monoid: FiniteMonoid, group: FiniteGroup, action: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidAction(m));
        let n = monoid.size();
        if action.len() != group.size() || action.iter().any(|row| row.len() != n) {
            return bad(format!("action table must be {} × {n}", group.size()));
        }
        for (g, row) in action.iter().enumerate() {
            let mut hit = vec![false; n];
            for &y in row {
                if y >= n || std::mem::replace(&mut hit[y], true) {
                    return bad(format!("{} does not act bijectively", group.name(g)));
                }
            }
            if row[monoid.identity()] != monoid.identity() {
                return bad(format!("{} moves the identity", group.name(g)));
            }
            for a in 0..n {
                for b in 0..n {
                    if row[monoid.mul(a, b)] != monoid.mul(row[a], row[b]) {
                        return bad(format!("{} is not multiplicative on {}·{}", group.name(g), monoid.name(a), monoid.name(b)));
                    }
                }
            }
        }
        check_action_axioms(&group, &action, n)?;
        Ok(Self { monoid, group, action })
    }

    pub fn trivial(monoid: FiniteMonoid, group: FiniteGroup) -> Self {
        let action = vec![(0..monoid.size()).collect(); group.size()];
        Self { monoid, group, action }
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn act(&self, g: usize, m: usize) -> usize {
        self.action[g][m]
    }

    /// The elements fixed by every element of `h`, in index order.
    pub fn fixed_elements(&self, h: &Subgroup) -> Result<Vec<usize>> {
        check_subgroup(&self.group, h)?;
        Ok((0..self.monoid.size()).filter(|&m| h.elements().iter().all(|&g| self.action[g][m] == m)).collect())
    }

    /// `M^H` with the original element names.
    pub fn fixed_monoid(&self, h: &Subgroup) -> Result<FiniteMonoid> {
        self.monoid.submonoid(&self.fixed_elements(h)?)
    }
}

fn check_action_axioms(group: &FiniteGroup, action: &[Vec<usize>], n: usize) -> Result<()> {
    if let Some(x) = (0..n).find(|&x| action[group.identity()][x] != x) {
        return Err(Error::InvalidAction(format!("the identity moves element {x}")));
    }
    for g in 0..group.size() {
        for h in 0..group.size() {
            for x in 0..n {
                if action[group.mul(g, h)][x] != action[g][action[h][x]] {
                    return Err(Error::InvalidAction(format!(
                        "({}{})·x ≠ {}·({}·x) for element {x}",
                        group.name(g),
                        group.name(h),
                        group.name(g),
                        group.name(h)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Subgroups are stored as element lists, so a subgroup of a different
/// group of the same order would slip through without this.
pub(crate) fn check_subgroup(g: &FiniteGroup, h: &Subgroup) -> Result<()> {
    Subgroup::new(g, h.elements().to_vec()).map(|_| ())
}

/// A truncated simplicial set with a levelwise group action commuting with
/// every face and degeneracy; `action[n][g][x] = g · x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSimplicialSet {
    sset: SimplicialSet,
    group: FiniteGroup,
    action: Vec<Vec<Vec<usize>>>,
}

impl GSimplicialSet {
    pub fn new(sset: SimplicialSet, group: FiniteGroup, action: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if action.len() != sset.cutoff() + 1 {
            return Err(Error::InvalidAction(format!("{} action levels for cutoff {}", action.len(), sset.cutoff())));
        }
        for (n, level) in action.iter().enumerate() {
            let size = sset.level_size(n);
            if level.len() != group.size() || level.iter().any(|row| row.len() != size) {
                return Err(Error::InvalidAction(format!("action on level {n} must be {} × {size}", group.size())));
            }
            for (g, row) in level.iter().enumerate() {
                let mut hit = vec![false; size];
                if row.iter().any(|&y| y >= size || std::mem::replace(&mut hit[y], true)) {
                    return Err(Error::InvalidAction(format!("{} is not a bijection on level {n}", group.name(g))));
                }
            }
            check_action_axioms(&group, level, size)?;
        }
        for g in 0..group.size() {
            for n in 1..=sset.cutoff() {
                for i in 0..=n {
                    for x in 0..sset.level_size(n) {
                        if action[n - 1][g][sset.face(n, i, x)] != sset.face(n, i, action[n][g][x]) {
                            return Err(Error::InvalidAction(format!("{} does not commute with d_{i} on level {n}", group.name(g))));
                        }
                    }
                }
            }
            for n in 0..sset.cutoff() {
                for i in 0..=n {
                    for x in 0..sset.level_size(n) {
                        if action[n + 1][g][sset.degeneracy(n, i, x)] != sset.degeneracy(n, i, action[n][g][x]) {
                            return Err(Error::InvalidAction(format!("{} does not commute with s_{i} on level {n}", group.name(g))));
                        }
                    }
                }
            }
        }
        Ok(Self { sset, group, action })
    }

    pub fn trivial(sset: SimplicialSet, group: FiniteGroup) -> Self {
        let action = (0..=sset.cutoff()).map(|n| vec![(0..sset.level_size(n)).collect(); group.size()]).collect();
        Self { sset, group, action }
    }

    pub fn sset(&self) -> &SimplicialSet {
        &self.sset
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn act(&self, n: usize, g: usize, x: usize) -> usize {
        self.action[n][g][x]
    }

    pub fn is_fixed(&self, n: usize, x: usize, h: &Subgroup) -> bool {
        h.elements().iter().all(|&g| self.action[n][g][x] == x)
    }

    /// The `H`-fixed simplices of each level, in index order.
    pub fn fixed_indices(&self, h: &Subgroup) -> Result<Vec<Vec<usize>>> {
        check_subgroup(&self.group, h)?;
        Ok((0..=self.sset.cutoff()).map(|n| (0..self.sset.level_size(n)).filter(|&x| self.is_fixed(n, x, h)).collect()).collect())
    }

    /// `Y^H`, keeping labels and the relative order of simplices.
    pub fn fixed_sset(&self, h: &Subgroup) -> Result<SimplicialSet> {
        check_subgroup(&self.group, h)?;
        let keep: Vec<Vec<bool>> =
            (0..=self.sset.cutoff()).map(|n| (0..self.sset.level_size(n)).map(|x| self.is_fixed(n, x, h)).collect()).collect();
        self.sset.subobject(&keep)
    }
}

/// The nerve of `a.monoid()` with `g` acting entrywise on strings.
pub fn nerve_of_gmonoid(a: &GMonoid, cutoff: usize) -> Result<GSimplicialSet> {
    let nerve = Nerve::of_monoid(&a.monoid, cutoff);
    let action = (0..=cutoff)
        .map(|n| {
            (0..a.group.size())
                .map(|g| {
                    (0..nerve.sset().level_size(n))
                        .map(|x| {
                            if n == 0 {
                                return x;
                            }
                            let image: Vec<usize> = nerve.string(n, x).iter().map(|&m| a.action[g][m]).collect();
                            nerve.index_of(n, &image).expect("strings of a monoid are closed under the action")
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    GSimplicialSet::new(nerve.into_sset(), a.group.clone(), action)
}

/// One subgroup's comparison of `N(M^H)` with `N(M)^H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedComparison {
    pub subgroup: String,
    pub fixed_elements: Vec<String>,
    /// The first labeled-table difference, if any.
    pub mismatch: Option<String>,
    pub nerve_of_fixed: HomologyResult,
    pub fixed_of_nerve: HomologyResult,
}

impl FixedComparison {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.nerve_of_fixed == self.fixed_of_nerve
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub comparisons: Vec<FixedComparison>,
}

impl FixedPointReport {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(FixedComparison::passed)
    }
}

/// For every subgroup `H`, compares `N(M^H)` with `N(M)^H` as labeled
/// tables up to level `cutoff` and through homology in degrees `0..=d`.
pub fn check_fixed_commutes(a: &GMonoid, cutoff: usize, d: usize) -> Result<FixedPointReport> {
    if cutoff < d + 1 {
        return Err(Error::CutoffTooSmall { needed: d + 1, cutoff });
    }
    let y = nerve_of_gmonoid(a, cutoff)?;
    let comparisons = subgroups(&a.group)
        .into_iter()
        .map(|h| compare_fixed(a, &y, &h, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(FixedPointReport { comparisons })
}

/// The comparison for a single subgroup.
pub fn compare_fixed(a: &GMonoid, y: &GSimplicialSet, h: &Subgroup, d: usize) -> Result<FixedComparison> {
    let fixed = a.fixed_monoid(h)?;
    let left = Nerve::of_monoid(&fixed, y.sset().cutoff()).into_sset();
    let right = y.fixed_sset(h)?;
    Ok(FixedComparison {
        subgroup: a.group.subgroup_name(h),
        fixed_elements: fixed.names().to_vec(),
        mismatch: left.labeled_mismatch(&right),
        nerve_of_fixed: homology(&left, d)?,
        fixed_of_nerve: homology(&right, d)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedConnectivity {
    pub subgroup: String,
    pub fixed_vertices: usize,
    pub components: usize,
}

impl FixedConnectivity {
    pub fn connected(&self) -> bool {
        self.fixed_vertices > 0 && self.components == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub subgroups: Vec<FixedConnectivity>,
}

impl ConnectivityReport {
    pub fn g_connected(&self) -> bool {
        self.subgroups.iter().all(FixedConnectivity::connected)
    }
}

/// Whether every fixed-point set `Y^H` is nonempty and connected, judged by
/// `H_0`.
pub fn g_connected(y: &GSimplicialSet) -> Result<ConnectivityReport> {
    let entries = subgroups(&y.group)
        .into_iter()
        .map(|h| {
            let fixed = y.fixed_sset(&h)?;
            Ok(FixedConnectivity {
                subgroup: y.group.subgroup_name(&h),
                fixed_vertices: fixed.level_size(0),
                components: homology(&fixed, 0)?.groups[0].betti,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConnectivityReport { subgroups: entries })
}
