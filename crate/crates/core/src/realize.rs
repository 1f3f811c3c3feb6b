//! Points of geometric realizations in canonical form.
//!
//! A point is a simplex together with exact barycentric coordinates. Two
//! presentations are identified by `(f^*x, u) ~ (x, f̄u)`; the canonical one
//! has a nondegenerate simplex and strictly positive coordinates.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::equivariant::GSimplicialSet;
use crate::error::{check_index, Error, Result};
use crate::sset::SimplicialSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealizationPoint {
    pub level: usize,
    pub simplex: usize,
    pub coords: Vec<BigRational>,
}

impl RealizationPoint {
    /// Checks that there are `level + 1` nonnegative coordinates summing to 1.
    pub fn new(level: usize, simplex: usize, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != level + 1 {
            return Err(Error::InvalidCoordinates(format!("{} coordinates on level {level}", coords.len())));
        }
        if coords.iter().any(Signed::is_negative) {
            return Err(Error::InvalidCoordinates("negative coordinate".into()));
        }
        let sum: BigRational = coords.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidCoordinates(format!("coordinates sum to {sum}")));
        }
        Ok(Self { level, simplex, coords })
    }

    /// A vertex of `x` as a point.
    pub fn vertex(simplex: usize) -> Self {
        Self { level: 0, simplex, coords: vec![BigRational::one()] }
    }

    pub fn is_canonical(&self, x: &SimplicialSet) -> bool {
        !x.is_degenerate(self.level, self.simplex) && self.coords.iter().all(Signed::is_positive)
    }

    fn check_in(&self, x: &SimplicialSet) -> Result<()> {
        if self.level > x.cutoff() {
            return Err(Error::CutoffTooSmall { needed: self.level, cutoff: x.cutoff() });
        }
        check_index(self.simplex, x.level_size(self.level))
    }
}

impl fmt::Display for RealizationPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({}#{}, ({}))", self.level, self.simplex, coords.join(", "))
    }
}

/// `δ̄_i`: insert a zero at slot `i`.
pub fn coord_face(u: &[BigRational], i: usize) -> Result<Vec<BigRational>> {
    check_index(i, u.len() + 1)?;
    let mut out = u.to_vec();
    out.insert(i, BigRational::zero());
    Ok(out)
}

/// `σ̄_i`: merge slots `i` and `i + 1`.
pub fn coord_degeneracy(u: &[BigRational], i: usize) -> Result<Vec<BigRational>> {
    check_index(i + 1, u.len())?;
    let mut out = u.to_vec();
    let next = out.remove(i + 1);
    out[i] += next;
    Ok(out)
}

/// The canonical representative: drop zero coordinates through faces, then
/// collapse degeneracies, until neither applies.
pub fn normalize_point(x: &SimplicialSet, p: &RealizationPoint) -> Result<RealizationPoint> {
    let mut p = RealizationPoint::new(p.level, p.simplex, p.coords.clone())?;
    p.check_in(x)?;
    loop {
        if let Some(i) = p.coords.iter().position(Zero::is_zero) {
            p.simplex = x.face(p.level, i, p.simplex);
            p.coords.remove(i);
            p.level -= 1;
        } else if let Some((j, y)) = x.degenerate_preimage(p.level, p.simplex) {
            p.coords = coord_degeneracy(&p.coords, j)?;
            p.simplex = y;
            p.level -= 1;
        } else {
            return Ok(p);
        }
    }
}

/// Every point reachable from `p` by one rewrite in the reducing direction:
/// `(x, δ̄_i v) → (d_i x, v)` and `(s_j y, u) → (y, σ̄_j u)`.
pub fn one_step_reductions(x: &SimplicialSet, p: &RealizationPoint) -> Vec<RealizationPoint> {
    let mut out = Vec::new();
    if p.level == 0 {
        return out;
    }
    for (i, t) in p.coords.iter().enumerate() {
        if t.is_zero() {
            let mut coords = p.coords.clone();
            coords.remove(i);
            out.push(RealizationPoint { level: p.level - 1, simplex: x.face(p.level, i, p.simplex), coords });
        }
    }
    for j in 0..p.level {
        // x = s_j y forces y = d_j x
        let y = x.face(p.level, j, p.simplex);
        if x.degeneracy(p.level - 1, j, y) == p.simplex {
            let coords = coord_degeneracy(&p.coords, j).expect("j < level");
            out.push(RealizationPoint { level: p.level - 1, simplex: y, coords });
        }
    }
    out
}

/// `g · (x, u) = (g·x, u)`, without normalizing.
pub fn act_raw(y: &GSimplicialSet, g: usize, p: &RealizationPoint) -> Result<RealizationPoint> {
    check_index(g, y.group().size())?;
    p.check_in(y.sset())?;
    Ok(RealizationPoint { level: p.level, simplex: y.act(p.level, g, p.simplex), coords: p.coords.clone() })
}

/// The group action on the realization, landing in canonical form.
pub fn act_point(y: &GSimplicialSet, g: usize, p: &RealizationPoint) -> Result<RealizationPoint> {
    normalize_point(y.sset(), &act_raw(y, g, p)?)
}
