use serde::Serialize;

use super::{IdentityViolation, SimplicialSet};
use crate::error::{Error, Result};

/// A truncated bisimplicial set, kept as its rows and columns.
///
/// Row `n` is the horizontal simplicial set `m ↦ B_{m,n}` and column `m` is
/// the vertical simplicial set `n ↦ B_{m,n}`. Both views share the same
/// simplex indices and labels at every bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisimplicialSet {
    rows: Vec<SimplicialSet>,
    columns: Vec<SimplicialSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "direction", rename_all = "snake_case")]
pub enum BisimplicialViolation {
    Horizontal { row: usize, violation: IdentityViolation },
    Vertical { column: usize, violation: IdentityViolation },
    /// A horizontal structure map fails to commute with a vertical one.
    Commutation { m: usize, n: usize, horizontal: String, vertical: String, simplex: usize },
}

impl BisimplicialSet {
    /// `rows[n]` must have cutoff `D1` and `columns[m]` cutoff `D2`, with
    /// `D2 + 1` rows and `D1 + 1` columns agreeing on every bidegree.
    pub fn from_rows_and_columns(rows: Vec<SimplicialSet>, columns: Vec<SimplicialSet>) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedSimplicialSet(m));
        if rows.is_empty() || columns.is_empty() {
            return bad("a bisimplicial set needs at least one row and one column".into());
        }
        let d1 = columns.len() - 1;
        let d2 = rows.len() - 1;
        for (n, row) in rows.iter().enumerate() {
            if row.cutoff() != d1 {
                return bad(format!("row {n} has cutoff {}, expected {d1}", row.cutoff()));
            }
        }
        for (m, col) in columns.iter().enumerate() {
            if col.cutoff() != d2 {
                return bad(format!("column {m} has cutoff {}, expected {d2}", col.cutoff()));
            }
            for (n, row) in rows.iter().enumerate() {
                if col.labels(n) != row.labels(m) {
                    return bad(format!("row and column views disagree at bidegree ({m},{n})"));
                }
            }
        }
        Ok(Self { rows, columns })
    }

    /// The external product `(m, n) ↦ X_m × Y_n`; the pair `(a, b)` has
    /// index `a · |Y_n| + b`.
    pub fn external_product(x: &SimplicialSet, y: &SimplicialSet) -> Self {
        let rows = (0..=y.cutoff())
            .map(|n| {
                let fiber: Vec<String> = y.labels(n).to_vec();
                super::product(x, &super::constant_sset(&fiber, x.cutoff())).expect("same cutoff")
            })
            .collect();
        let columns = (0..=x.cutoff())
            .map(|m| {
                let fiber: Vec<String> = x.labels(m).to_vec();
                super::product(&super::constant_sset(&fiber, y.cutoff()), y).expect("same cutoff")
            })
            .collect();
        Self::from_rows_and_columns(rows, columns).expect("product views agree")
    }

    /// `(m, n) ↦ X_m` with identity vertical structure maps.
    pub fn vertically_constant(x: &SimplicialSet, vertical_cutoff: usize) -> Self {
        let rows = vec![x.clone(); vertical_cutoff + 1];
        let columns = (0..=x.cutoff()).map(|m| super::constant_sset(x.labels(m), vertical_cutoff)).collect();
        Self::from_rows_and_columns(rows, columns).expect("constant views agree")
    }

    /// `(m, n) ↦ Y_n` with identity horizontal structure maps.
    pub fn horizontally_constant(y: &SimplicialSet, horizontal_cutoff: usize) -> Self {
        let rows = (0..=y.cutoff()).map(|n| super::constant_sset(y.labels(n), horizontal_cutoff)).collect();
        let columns = vec![y.clone(); horizontal_cutoff + 1];
        Self::from_rows_and_columns(rows, columns).expect("constant views agree")
    }

    /// Bidegree-wise disjoint union; simplices of `a` come first and labels
    /// get an `L.` or `R.` prefix.
    pub fn coproduct(a: &Self, b: &Self) -> Result<Self> {
        if a.cutoffs() != b.cutoffs() {
            return Err(Error::CutoffMismatch(a.cutoffs().0, b.cutoffs().0));
        }
        let rows = a.rows.iter().zip(&b.rows).map(|(x, y)| disjoint_union(x, y)).collect();
        let columns = a.columns.iter().zip(&b.columns).map(|(x, y)| disjoint_union(x, y)).collect();
        Self::from_rows_and_columns(rows, columns)
    }

    /// `(D1, D2)`: horizontal and vertical cutoffs.
    pub fn cutoffs(&self) -> (usize, usize) {
        (self.columns.len() - 1, self.rows.len() - 1)
    }

    pub fn size(&self, m: usize, n: usize) -> usize {
        self.rows[n].level_size(m)
    }

    pub fn label(&self, m: usize, n: usize, x: usize) -> &str {
        self.rows[n].label(m, x)
    }

    pub fn row(&self, n: usize) -> &SimplicialSet {
        &self.rows[n]
    }

    pub fn column(&self, m: usize) -> &SimplicialSet {
        &self.columns[m]
    }

    /// Horizontal `d_i: B_{m,n} → B_{m−1,n}`.
    pub fn h_face(&self, m: usize, n: usize, i: usize, x: usize) -> usize {
        self.rows[n].face(m, i, x)
    }

    /// Vertical `d_i: B_{m,n} → B_{m,n−1}`.
    pub fn v_face(&self, m: usize, n: usize, i: usize, x: usize) -> usize {
        self.columns[m].face(n, i, x)
    }

    pub fn h_degeneracy(&self, m: usize, n: usize, i: usize, x: usize) -> usize {
        self.rows[n].degeneracy(m, i, x)
    }

    pub fn v_degeneracy(&self, m: usize, n: usize, i: usize, x: usize) -> usize {
        self.columns[m].degeneracy(n, i, x)
    }

    /// Nondegenerate in both directions.
    pub fn is_bi_nondegenerate(&self, m: usize, n: usize, x: usize) -> bool {
        !self.rows[n].is_degenerate(m, x) && !self.columns[m].is_degenerate(n, x)
    }

    pub fn truncate(&self, d1: usize, d2: usize) -> Result<Self> {
        let (c1, c2) = self.cutoffs();
        if d1 > c1 {
            return Err(Error::CutoffTooSmall { needed: d1, cutoff: c1 });
        }
        if d2 > c2 {
            return Err(Error::CutoffTooSmall { needed: d2, cutoff: c2 });
        }
        let rows = self.rows[..=d2].iter().map(|r| r.truncate(d1)).collect::<Result<Vec<_>>>()?;
        let columns = self.columns[..=d1].iter().map(|c| c.truncate(d2)).collect::<Result<Vec<_>>>()?;
        Self::from_rows_and_columns(rows, columns)
    }

    /// Every violated identity: each row and column must be simplicial and
    /// horizontal maps must commute with vertical ones.
    pub fn validate(&self) -> Vec<BisimplicialViolation> {
        let mut out = Vec::new();
        for (row, r) in self.rows.iter().enumerate() {
            out.extend(r.validate().violations.into_iter().map(|violation| BisimplicialViolation::Horizontal { row, violation }));
        }
        for (column, c) in self.columns.iter().enumerate() {
            out.extend(c.validate().violations.into_iter().map(|violation| BisimplicialViolation::Vertical { column, violation }));
        }
        let (d1, d2) = self.cutoffs();
        for m in 0..=d1 {
            for n in 0..=d2 {
                for x in 0..self.size(m, n) {
                    let mut fail = |horizontal: String, vertical: String| {
                        out.push(BisimplicialViolation::Commutation { m, n, horizontal, vertical, simplex: x })
                    };
                    if m >= 1 && n >= 1 {
                        for i in 0..=m {
                            for j in 0..=n {
                                if self.h_face(m, n - 1, i, self.v_face(m, n, j, x)) != self.v_face(m - 1, n, j, self.h_face(m, n, i, x)) {
                                    fail(format!("d_{i}"), format!("d_{j}"));
                                }
                            }
                        }
                    }
                    if m >= 1 && n < d2 {
                        for i in 0..=m {
                            for j in 0..=n {
                                if self.h_face(m, n + 1, i, self.v_degeneracy(m, n, j, x))
                                    != self.v_degeneracy(m - 1, n, j, self.h_face(m, n, i, x))
                                {
                                    fail(format!("d_{i}"), format!("s_{j}"));
                                }
                            }
                        }
                    }
                    if m < d1 && n >= 1 {
                        for i in 0..=m {
                            for j in 0..=n {
                                if self.h_degeneracy(m, n - 1, i, self.v_face(m, n, j, x))
                                    != self.v_face(m + 1, n, j, self.h_degeneracy(m, n, i, x))
                                {
                                    fail(format!("s_{i}"), format!("d_{j}"));
                                }
                            }
                        }
                    }
                    if m < d1 && n < d2 {
                        for i in 0..=m {
                            for j in 0..=n {
                                if self.h_degeneracy(m, n + 1, i, self.v_degeneracy(m, n, j, x))
                                    != self.v_degeneracy(m + 1, n, j, self.h_degeneracy(m, n, i, x))
                                {
                                    fail(format!("s_{i}"), format!("s_{j}"));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The diagonal simplicial set `n ↦ B_{n,n}`, with `d_i` the horizontal
    /// `d_i` followed by the vertical `d_i` (and likewise for `s_i`).
    pub fn diagonal(&self) -> Result<SimplicialSet> {
        let (d1, d2) = self.cutoffs();
        if d1 != d2 {
            return Err(Error::CutoffMismatch(d1, d2));
        }
        let labels = (0..=d1).map(|n| self.rows[n].labels(n).to_vec()).collect();
        let mut faces = vec![Vec::new()];
        for n in 1..=d1 {
            faces.push(
                (0..=n)
                    .map(|i| (0..self.size(n, n)).map(|x| self.v_face(n - 1, n, i, self.h_face(n, n, i, x))).collect())
                    .collect(),
            );
        }
        let degeneracies = (0..d1)
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        (0..self.size(n, n)).map(|x| self.v_degeneracy(n + 1, n, i, self.h_degeneracy(n, n, i, x))).collect()
                    })
                    .collect()
            })
            .collect();
        SimplicialSet::from_tables(d1, labels, faces, degeneracies)
    }
}

fn disjoint_union(a: &SimplicialSet, b: &SimplicialSet) -> SimplicialSet {
    let cutoff = a.cutoff();
    let shift = |n: usize| a.level_size(n);
    let labels = (0..=cutoff)
        .map(|n| {
            a.labels(n)
                .iter()
                .map(|l| format!("L.{l}"))
                .chain(b.labels(n).iter().map(|l| format!("R.{l}")))
                .collect()
        })
        .collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=cutoff {
        faces.push(
            (0..=n)
                .map(|i| {
                    a.face_table(n, i)
                        .iter()
                        .copied()
                        .chain(b.face_table(n, i).iter().map(|&y| y + shift(n - 1)))
                        .collect()
                })
                .collect(),
        );
    }
    let degeneracies = (0..cutoff)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    a.degeneracy_table(n, i)
                        .iter()
                        .copied()
                        .chain(b.degeneracy_table(n, i).iter().map(|&y| y + shift(n + 1)))
                        .collect()
                })
                .collect()
        })
        .collect();
    SimplicialSet::from_tables(cutoff, labels, faces, degeneracies).expect("union of well-formed tables")
}
