//! Truncated simplicial sets stored as explicit face and degeneracy tables.
//!
//! A [`SimplicialSet`] keeps levels `0..=cutoff`. Simplices are opaque
//! indices per level; every bit of structure lives in the tables, so nerves,
//! standard simplices and ordered complexes share one representation. Each
//! simplex also carries a display label, which is what labeled comparisons
//! (for example between a fixed-point nerve and a nerve of fixed points) use
//! to match simplices across independently built objects.
//!
//! Operations that would need a level above the cutoff fail with
//! [`Error::CutoffTooSmall`] instead of silently truncating.

mod bisimplicial;
mod builders;
mod map;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::delta::{canonical_factorization, MonotoneMap};
use crate::error::{check_index, Error, Result};

pub use bisimplicial::{BisimplicialSet, BisimplicialViolation};
pub use builders::{constant_sset, free_degeneracies, from_complex, product, standard_simplex, OrderedComplex, SemiSimplicialSet};
pub use map::SimplicialMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    cutoff: usize,
    labels: Vec<Vec<String>>,
    /// `faces[n][i][x] = d_i x` for `1 ≤ n ≤ cutoff`; `faces[0]` is empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][i][x] = s_i x` for `n < cutoff`.
    degeneracies: Vec<Vec<Vec<usize>>>,
    /// For each simplex, the first `(j, y)` with `s_j y = x`, if any.
    degenerate_from: Vec<Vec<Option<(usize, usize)>>>,
}

impl SimplicialSet {
    /// Builds a simplicial set from raw tables.
    ///
    /// Shapes and index ranges are checked here. The simplicial identities
    /// are not; run [`SimplicialSet::validate`] for those.
    pub fn from_tables(
        cutoff: usize,
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let malformed = |msg: String| Err(Error::MalformedSimplicialSet(msg));
        if labels.len() != cutoff + 1 {
            return malformed(format!("expected {} levels, found {}", cutoff + 1, labels.len()));
        }
        let mut faces = faces;
        if faces.len() == cutoff {
            faces.insert(0, Vec::new());
        }
        if faces.len() != cutoff + 1 || !faces[0].is_empty() {
            return malformed(format!("expected face tables for levels 1..={cutoff}"));
        }
        if degeneracies.len() != cutoff {
            return malformed(format!("expected degeneracy tables for levels 0..{cutoff}"));
        }
        let size = |n: usize| labels[n].len();
        for n in 1..=cutoff {
            if faces[n].len() != n + 1 {
                return malformed(format!("level {n} needs {} face maps, found {}", n + 1, faces[n].len()));
            }
            for (i, table) in faces[n].iter().enumerate() {
                if table.len() != size(n) {
                    return malformed(format!("d_{i} on level {n} has {} entries, level has {}", table.len(), size(n)));
                }
                if let Some(&bad) = table.iter().find(|&&y| y >= size(n - 1)) {
                    return malformed(format!("d_{i} on level {n} points to {bad}, level {} has {}", n - 1, size(n - 1)));
                }
            }
        }
        for n in 0..cutoff {
            if degeneracies[n].len() != n + 1 {
                return malformed(format!("level {n} needs {} degeneracies, found {}", n + 1, degeneracies[n].len()));
            }
            for (i, table) in degeneracies[n].iter().enumerate() {
                if table.len() != size(n) {
                    return malformed(format!("s_{i} on level {n} has {} entries, level has {}", table.len(), size(n)));
                }
                if let Some(&bad) = table.iter().find(|&&y| y >= size(n + 1)) {
                    return malformed(format!("s_{i} on level {n} points to {bad}, level {} has {}", n + 1, size(n + 1)));
                }
            }
        }

        let mut degenerate_from: Vec<Vec<Option<(usize, usize)>>> = labels.iter().map(|l| vec![None; l.len()]).collect();
        for n in 0..cutoff {
            for (j, table) in degeneracies[n].iter().enumerate() {
                for (y, &x) in table.iter().enumerate() {
                    degenerate_from[n + 1][x].get_or_insert((j, y));
                }
            }
        }

        Ok(Self { cutoff, labels, faces, degeneracies, degenerate_from })
    }

    /// Same as [`SimplicialSet::from_tables`] with labels `"0"`, `"1"`, … per level.
    pub fn from_unlabeled_tables(
        sizes: &[usize],
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::MalformedSimplicialSet("no levels".into()));
        }
        let labels = sizes.iter().map(|&s| (0..s).map(|x| x.to_string()).collect()).collect();
        Self::from_tables(sizes.len() - 1, labels, faces, degeneracies)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    /// `d_i x` for `x` on level `n ≥ 1`.
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    /// `s_i x` for `x` on level `n < cutoff`.
    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> usize {
        self.degeneracies[n][i][x]
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degeneracy_table(&self, n: usize, i: usize) -> &[usize] {
        &self.degeneracies[n][i]
    }

    pub(crate) fn require_level(&self, n: usize) -> Result<()> {
        if n > self.cutoff {
            Err(Error::CutoffTooSmall { needed: n, cutoff: self.cutoff })
        } else {
            Ok(())
        }
    }

    /// Some `(j, y)` with `s_j y = x`, or `None` when `x` is nondegenerate.
    ///
    /// `j` is the smallest index for which a preimage exists.
    pub fn degenerate_preimage(&self, n: usize, x: usize) -> Option<(usize, usize)> {
        self.degenerate_from[n][x]
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        self.degenerate_from[n][x].is_some()
    }

    /// The simplices on level `n` outside the image of every degeneracy.
    pub fn nondegenerate_basis(&self, n: usize) -> Result<Vec<usize>> {
        self.require_level(n)?;
        Ok((0..self.level_size(n)).filter(|&x| !self.is_degenerate(n, x)).collect())
    }

    /// `f^* x` for `f: [m] → [n]` and `x` on level `n`.
    ///
    /// Computed from the epi-mono normal form of `f`: the faces act first,
    /// then the degeneracies.
    pub fn induced_map(&self, f: &MonotoneMap, x: usize) -> Result<usize> {
        let (m, n) = (f.source_dim(), f.target_dim());
        self.require_level(m.max(n))?;
        check_index(x, self.level_size(n))?;
        let fac = canonical_factorization(f);
        let mut y = x;
        for d in &fac.faces {
            y = self.face(d.n, d.i, y);
        }
        for s in &fac.degeneracies {
            y = self.degeneracy(s.n, s.i, y);
        }
        Ok(y)
    }

    /// Writes `x` as `s^* y` with `y` nondegenerate, returning `(k, y, σ)`
    /// where `σ: [n] → [k]` is surjective and `x = σ^* y`.
    pub fn ez_decomposition(&self, n: usize, x: usize) -> (usize, usize, MonotoneMap) {
        let mut level = n;
        let mut current = x;
        let mut epi = MonotoneMap::identity(n);
        while let Some((j, y)) = self.degenerate_preimage(level, current) {
            // x = σ^* (s_j y) = (σ_j ∘ σ)^* y
            let sigma = crate::delta::degeneracy_map(level - 1, j).expect("index in range");
            epi = crate::delta::compose(&sigma, &epi).expect("composable");
            level -= 1;
            current = y;
        }
        (level, current, epi)
    }

    /// Every violated simplicial identity; empty iff the tables are valid.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut push = |kind, level, i, j, simplex| violations.push(IdentityViolation { kind, level, i, j, simplex });
        let top = self.cutoff;
        for n in 0..=top {
            for x in 0..self.level_size(n) {
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            let lhs = self.face(n - 1, i, self.face(n, j, x));
                            let rhs = self.face(n - 1, j - 1, self.face(n, i, x));
                            if lhs != rhs {
                                push(IdentityKind::FaceFace, n, i, j, x);
                            }
                        }
                    }
                }
                if n < top {
                    for j in 0..=n {
                        let sx = self.degeneracy(n, j, x);
                        for i in 0..=n + 1 {
                            let lhs = self.face(n + 1, i, sx);
                            let ok = if i == j || i == j + 1 {
                                lhs == x
                            } else if i < j {
                                lhs == self.degeneracy(n - 1, j - 1, self.face(n, i, x))
                            } else {
                                lhs == self.degeneracy(n - 1, j, self.face(n, i - 1, x))
                            };
                            if !ok {
                                push(IdentityKind::FaceDegeneracy, n, i, j, x);
                            }
                        }
                    }
                }
                if n + 1 < top {
                    for j in 0..=n {
                        for i in 0..=j {
                            let lhs = self.degeneracy(n + 1, i, self.degeneracy(n, j, x));
                            let rhs = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x));
                            if lhs != rhs {
                                push(IdentityKind::DegeneracyDegeneracy, n, i, j, x);
                            }
                        }
                    }
                }
            }
            if n < top {
                for (i, table) in self.degeneracies[n].iter().enumerate() {
                    let mut seen = HashMap::new();
                    for (x, &y) in table.iter().enumerate() {
                        if let Some(&first) = seen.get(&y) {
                            push(IdentityKind::DegeneracyNotInjective, n, i, first, x);
                        } else {
                            seen.insert(y, x);
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Restriction to levels `0..=cutoff`.
    pub fn truncate(&self, cutoff: usize) -> Result<Self> {
        self.require_level(cutoff)?;
        Self::from_tables(
            cutoff,
            self.labels[..=cutoff].to_vec(),
            self.faces[..=cutoff].to_vec(),
            self.degeneracies[..cutoff].to_vec(),
        )
    }

    /// The simplices of level `n` selected by `keep`, with tables restricted.
    ///
    /// `keep` must be closed under every face and degeneracy; otherwise an
    /// error names the first escaping simplex.
    pub fn subobject(&self, keep: &[Vec<bool>]) -> Result<Self> {
        let mut new_index: Vec<Vec<Option<usize>>> = Vec::with_capacity(self.cutoff + 1);
        let mut labels = Vec::with_capacity(self.cutoff + 1);
        for n in 0..=self.cutoff {
            let mut next = 0;
            let mut idx = vec![None; self.level_size(n)];
            let mut level_labels = Vec::new();
            for x in 0..self.level_size(n) {
                if keep[n][x] {
                    idx[x] = Some(next);
                    next += 1;
                    level_labels.push(self.labels[n][x].clone());
                }
            }
            new_index.push(idx);
            labels.push(level_labels);
        }
        let restrict = |src: usize, dst: usize, table: &[usize]| -> Result<Vec<usize>> {
            (0..table.len())
                .filter(|&x| keep[src][x])
                .map(|x| {
                    new_index[dst][table[x]].ok_or_else(|| {
                        Error::MalformedSimplicialSet(format!(
                            "subobject not closed: simplex {} on level {src} leaves it",
                            self.labels[src][x]
                        ))
                    })
                })
                .collect()
        };
        let mut faces = vec![Vec::new()];
        for n in 1..=self.cutoff {
            faces.push((0..=n).map(|i| restrict(n, n - 1, &self.faces[n][i])).collect::<Result<Vec<_>>>()?);
        }
        let degeneracies = (0..self.cutoff)
            .map(|n| (0..=n).map(|i| restrict(n, n + 1, &self.degeneracies[n][i])).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_tables(self.cutoff, labels, faces, degeneracies)
    }

    /// Checks that `other` has the same labels on every level and that the
    /// tables agree once simplices are matched by label.
    ///
    /// Returns a description of the first difference, or `None`.
    pub fn labeled_mismatch(&self, other: &Self) -> Option<String> {
        if self.cutoff != other.cutoff {
            return Some(format!("cutoffs differ: {} vs {}", self.cutoff, other.cutoff));
        }
        let mut matching: Vec<Vec<usize>> = Vec::with_capacity(self.cutoff + 1);
        for n in 0..=self.cutoff {
            if self.level_size(n) != other.level_size(n) {
                return Some(format!("level {n} sizes differ: {} vs {}", self.level_size(n), other.level_size(n)));
            }
            let index: HashMap<&str, usize> = other.labels[n].iter().enumerate().map(|(x, l)| (l.as_str(), x)).collect();
            if index.len() != other.level_size(n) {
                return Some(format!("labels on level {n} are not unique"));
            }
            let mut level = Vec::with_capacity(self.level_size(n));
            for label in &self.labels[n] {
                match index.get(label.as_str()) {
                    Some(&y) => level.push(y),
                    None => return Some(format!("label {label} on level {n} has no counterpart")),
                }
            }
            matching.push(level);
        }
        for n in 1..=self.cutoff {
            for i in 0..=n {
                for x in 0..self.level_size(n) {
                    if matching[n - 1][self.face(n, i, x)] != other.face(n, i, matching[n][x]) {
                        return Some(format!("d_{i} differs on {} (level {n})", self.labels[n][x]));
                    }
                }
            }
        }
        for n in 0..self.cutoff {
            for i in 0..=n {
                for x in 0..self.level_size(n) {
                    if matching[n + 1][self.degeneracy(n, i, x)] != other.degeneracy(n, i, matching[n][x]) {
                        return Some(format!("s_{i} differs on {} (level {n})", self.labels[n][x]));
                    }
                }
            }
        }
        None
    }

    /// True when the tables coincide index for index (labels ignored).
    pub fn same_tables(&self, other: &Self) -> bool {
        self.cutoff == other.cutoff
            && self.level_sizes() == other.level_sizes()
            && self.faces == other.faces
            && self.degeneracies == other.degeneracies
    }

    /// Connected components of the 1-skeleton, by union-find.
    pub fn component_count(&self) -> usize {
        let vertices = self.level_size(0);
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut components = vertices;
        if self.cutoff >= 1 {
            for e in 0..self.level_size(1) {
                let a = find(&mut parent, self.face(1, 0, e));
                let b = find(&mut parent, self.face(1, 1, e));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
        components
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    /// `d_i d_j = d_{j−1} d_i` for `i < j`.
    FaceFace,
    /// `d_i s_j` against `s_{j−1} d_i`, the identity, or `s_j d_{i−1}`.
    FaceDegeneracy,
    /// `s_i s_j = s_{j+1} s_i` for `i ≤ j`.
    DegeneracyDegeneracy,
    /// `s_i` sends simplices `j` and `simplex` to the same place.
    DegeneracyNotInjective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityViolation {
    pub kind: IdentityKind,
    pub level: usize,
    pub i: usize,
    pub j: usize,
    pub simplex: usize,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.i, self.j);
        let what = match self.kind {
            IdentityKind::FaceFace => format!("d_{i} d_{j} = d_{} d_{i}", j.wrapping_sub(1)),
            IdentityKind::FaceDegeneracy => format!("d_{i} s_{j}"),
            IdentityKind::DegeneracyDegeneracy => format!("s_{i} s_{j} = s_{} s_{i}", j + 1),
            IdentityKind::DegeneracyNotInjective => format!("s_{i} injective (collides with simplex {j})"),
        };
        write!(f, "{what} fails on simplex {} of level {}", self.simplex, self.level)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<IdentityViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests;
