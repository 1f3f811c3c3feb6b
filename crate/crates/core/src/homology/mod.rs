//! Integer homology of truncated simplicial and bisimplicial sets.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sset::{BisimplicialSet, SimplicialSet};

pub use snf::{smith_normal_form, IntMatrix, SmithForm};

/// A finite chain complex of free abelian groups in degrees
/// `0..=top_degree`.
///
/// `boundaries[n]` is `∂_n: C_n → C_{n−1}`, with `boundaries[0]` the zero
/// map out of degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    bases: Vec<Vec<String>>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Panics unless `∂_{n−1} ∂_n = 0` for every stored `n`.
    pub fn new(bases: Vec<Vec<String>>, boundaries: Vec<IntMatrix>) -> Self {
        assert!(!bases.is_empty() && bases.len() == boundaries.len(), "one boundary per degree");
        for (n, b) in boundaries.iter().enumerate() {
            let below = if n == 0 { 0 } else { bases[n - 1].len() };
            assert_eq!((b.rows(), b.cols()), (below, bases[n].len()), "∂_{n} has the wrong shape");
        }
        for n in 2..boundaries.len() {
            let square = boundaries[n - 1].checked_mul(&boundaries[n]);
            assert!(square.is_some_and(|s| s.is_zero()), "∂_{}∂_{n} ≠ 0", n - 1);
        }
        Self { bases, boundaries }
    }

    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, n: usize) -> &[String] {
        &self.bases[n]
    }

    pub fn boundary(&self, n: usize) -> &IntMatrix {
        &self.boundaries[n]
    }

    /// Homology in degrees `0..top_degree`; the top degree only supplies
    /// boundaries.
    pub fn homology(&self) -> HomologyResult {
        let top = self.top_degree();
        let forms: Vec<SmithForm> = (1..=top).into_par_iter().map(|n| smith_normal_form(&self.boundaries[n])).collect();
        let rank = |n: usize| if n == 0 { 0 } else { forms[n - 1].rank() };
        let groups = (0..top)
            .map(|n| HomologyGroup { betti: self.bases[n].len() - rank(n) - rank(n + 1), torsion: forms[n].torsion() })
            .collect();
        HomologyResult { groups }
    }
}

/// `Z^betti ⊕ Z/d_1 ⊕ Z/d_2 ⊕ …` with `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        Self { betti, torsion: Vec::new() }
    }

    pub fn new(betti: usize, torsion: &[u64]) -> Self {
        Self { betti, torsion: torsion.iter().map(|&d| BigInt::from(d)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

fn as_strings<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology groups in degrees `0, 1, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn degree(&self, n: usize) -> &HomologyGroup {
        &self.groups[n]
    }

    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// The first `n` degrees.
    pub fn truncated(&self, n: usize) -> HomologyResult {
        HomologyResult { groups: self.groups[..n.min(self.groups.len())].to_vec() }
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join("; "))
    }
}

fn require(cutoff: usize, d: usize) -> Result<()> {
    if cutoff < d + 1 {
        return Err(Error::CutoffTooSmall { needed: d + 1, cutoff });
    }
    Ok(())
}

/// Normalized chains of `x` in degrees `0..=d+1`: the basis in degree `n`
/// is the nondegenerate `n`-simplices and `∂_n = Σ (−1)^i d_i`, faces that
/// land on degenerate simplices contributing nothing.
pub fn normalized_chains(x: &SimplicialSet, d: usize) -> Result<ChainComplex> {
    require(x.cutoff(), d)?;
    let top = d + 1;
    let bases: Vec<Vec<usize>> = (0..=top).map(|n| x.nondegenerate_basis(n)).collect::<Result<_>>()?;
    let positions: Vec<Vec<Option<usize>>> = (0..=top)
        .map(|n| {
            let mut pos = vec![None; x.level_size(n)];
            for (k, &s) in bases[n].iter().enumerate() {
                pos[s] = Some(k);
            }
            pos
        })
        .collect();
    let mut boundaries = vec![IntMatrix::zero(0, bases[0].len())];
    for n in 1..=top {
        let mut m = IntMatrix::zero(bases[n - 1].len(), 0);
        for &s in &bases[n] {
            m.push_column((0..=n).filter_map(|i| positions[n - 1][x.face(n, i, s)].map(|r| (r, sign(i)))));
        }
        boundaries.push(m);
    }
    let labels = bases.iter().enumerate().map(|(n, b)| b.iter().map(|&s| x.label(n, s).to_string()).collect()).collect();
    Ok(ChainComplex::new(labels, boundaries))
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Integer homology of `x` in degrees `0..=d`.
pub fn homology(x: &SimplicialSet, d: usize) -> Result<HomologyResult> {
    Ok(normalized_chains(x, d)?.homology())
}

/// The normalized total complex of `b` in degrees `0..=d+1`.
///
/// Degree `n` is spanned by the simplices of bidegree `(p, q)`, `p + q = n`,
/// that are nondegenerate in both directions. The differential is
/// `∂^h + (−1)^p ∂^v`. Basis elements are ordered by `p`, then index.
pub fn total_complex(b: &BisimplicialSet, d: usize) -> Result<ChainComplex> {
    let (c1, c2) = b.cutoffs();
    require(c1, d)?;
    require(c2, d)?;
    let top = d + 1;
    // basis[n] = [(p, x)], position[(p, q)][x]
    let mut basis: Vec<Vec<(usize, usize)>> = Vec::with_capacity(top + 1);
    let mut position: Vec<Vec<Vec<Option<usize>>>> = vec![vec![Vec::new(); top + 1]; top + 1];
    for n in 0..=top {
        let mut level = Vec::new();
        for p in 0..=n {
            let q = n - p;
            position[p][q] = vec![None; b.size(p, q)];
            for x in 0..b.size(p, q) {
                if b.is_bi_nondegenerate(p, q, x) {
                    position[p][q][x] = Some(level.len());
                    level.push((p, x));
                }
            }
        }
        basis.push(level);
    }
    let mut boundaries = vec![IntMatrix::zero(0, basis[0].len())];
    for n in 1..=top {
        let mut m = IntMatrix::zero(basis[n - 1].len(), 0);
        for &(p, x) in &basis[n] {
            let q = n - p;
            let mut entries = Vec::new();
            if p > 0 {
                for i in 0..=p {
                    if let Some(r) = position[p - 1][q][b.h_face(p, q, i, x)] {
                        entries.push((r, sign(i)));
                    }
                }
            }
            if q > 0 {
                for i in 0..=q {
                    if let Some(r) = position[p][q - 1][b.v_face(p, q, i, x)] {
                        entries.push((r, sign(p) * sign(i)));
                    }
                }
            }
            m.push_column(entries);
        }
        boundaries.push(m);
    }
    let labels = basis
        .iter()
        .enumerate()
        .map(|(n, level)| level.iter().map(|&(p, x)| format!("{}@({p},{})", b.label(p, n - p, x), n - p)).collect())
        .collect();
    Ok(ChainComplex::new(labels, boundaries))
}

/// Homology of the diagonal against homology of the total complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EzReport {
    pub degree: usize,
    pub diagonal: HomologyResult,
    pub total: HomologyResult,
    /// Degrees where the two disagree.
    pub mismatches: Vec<usize>,
}

impl EzReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `H_*(diag b)` with `H_*(Tot b)` in degrees `0..=d`. Both
/// cutoffs must be at least `d + 1`; the larger one is truncated to the
/// smaller before taking the diagonal.
pub fn ez_check(b: &BisimplicialSet, d: usize) -> Result<EzReport> {
    let (c1, c2) = b.cutoffs();
    require(c1, d)?;
    require(c2, d)?;
    let c = c1.min(c2);
    let square = if c1 == c2 { b.clone() } else { b.truncate(c, c)? };
    let diagonal = homology(&square.diagonal()?, d)?;
    let total = total_complex(b, d)?.homology();
    let mismatches = (0..=d).filter(|&n| diagonal.groups[n] != total.groups[n]).collect();
    Ok(EzReport { degree: d, diagonal, total, mismatches })
}
