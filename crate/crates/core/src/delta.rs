//! The simplex category: order-preserving maps `[m] → [n]`, the face and
//! degeneracy generators, and the epi-mono normal form of a map.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An order-preserving map `[m] → [n]`, stored as its value vector.
///
/// `[m] = {0, …, m}` has `m + 1` elements, so `values.len() == m + 1` and
/// every value is at most `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonotoneMap {
    codomain_size: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, codomain_size: usize) -> Result<Self> {
        if values.is_empty() || codomain_size == 0 {
            return Err(Error::NotMonotone("ordinals [n] are nonempty".into()));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= codomain_size) {
            return Err(Error::IndexOutOfRange { index: v, bound: codomain_size });
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotMonotone(format!("{values:?} is not weakly increasing")));
        }
        Ok(Self { codomain_size, values })
    }

    /// The identity of `[n]`.
    pub fn identity(n: usize) -> Self {
        Self { codomain_size: n + 1, values: (0..=n).collect() }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn domain_size(&self) -> usize {
        self.values.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    /// `m` for a map out of `[m]`.
    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    /// `n` for a map into `[n]`.
    pub fn target_dim(&self) -> usize {
        self.codomain_size - 1
    }

    pub fn apply(&self, j: usize) -> usize {
        self.values[j]
    }

    pub fn is_identity(&self) -> bool {
        self.domain_size() == self.codomain_size && self.values.iter().enumerate().all(|(j, &v)| j == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.codomain_size - 1
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Every monotone map `[m] → [n]` in lexicographic order of values.
    pub fn all(m: usize, n: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut current = vec![0; m + 1];
        loop {
            out.push(MonotoneMap { codomain_size: n + 1, values: current.clone() });
            // advance to the next weakly increasing sequence
            let Some(pos) = (0..=m).rev().find(|&k| current[k] < n) else {
                return out;
            };
            let next = current[pos] + 1;
            for v in &mut current[pos..] {
                *v = next;
            }
        }
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The coface `δ_i: [n−1] → [n]`, skipping `i`.
pub fn face_map(n: usize, i: usize) -> Result<MonotoneMap> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, bound: 0 });
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n + 1 });
    }
    let values = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
    Ok(MonotoneMap { codomain_size: n + 1, values })
}

/// The codegeneracy `σ_i: [n+1] → [n]`, hitting `i` twice.
pub fn degeneracy_map(n: usize, i: usize) -> Result<MonotoneMap> {
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n + 1 });
    }
    let values = (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect();
    Ok(MonotoneMap { codomain_size: n + 1, values })
}

/// `g ∘ f`.
pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if f.codomain_size != g.domain_size() {
        return Err(Error::SizeMismatch { expected: g.domain_size(), found: f.codomain_size });
    }
    let values = f.values.iter().map(|&v| g.values[v]).collect();
    Ok(MonotoneMap { codomain_size: g.codomain_size, values })
}

/// `δ_i: [n−1] → [n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub n: usize,
    pub i: usize,
}

/// `σ_i: [n+1] → [n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Degeneracy {
    pub n: usize,
    pub i: usize,
}

impl Face {
    pub fn to_map(self) -> Result<MonotoneMap> {
        face_map(self.n, self.i)
    }
}

impl Degeneracy {
    pub fn to_map(self) -> Result<MonotoneMap> {
        degeneracy_map(self.n, self.i)
    }
}

/// A map written as `δ_{i_1} ∘ … ∘ δ_{i_s} ∘ σ_{j_1} ∘ … ∘ σ_{j_t}`.
///
/// Both lists are in composition order (leftmost first), so the face
/// indices strictly decrease and the degeneracy indices strictly increase.
/// The rightmost degeneracy acts first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub source_dim: usize,
    pub target_dim: usize,
    pub faces: Vec<Face>,
    pub degeneracies: Vec<Degeneracy>,
}

impl Factorization {
    /// Composes the generators back into a single map.
    pub fn recompose(&self) -> Result<MonotoneMap> {
        let mut acc = MonotoneMap::identity(self.source_dim);
        for s in self.degeneracies.iter().rev() {
            acc = compose(&s.to_map()?, &acc)?;
        }
        for d in self.faces.iter().rev() {
            acc = compose(&d.to_map()?, &acc)?;
        }
        if acc.target_dim() != self.target_dim {
            return Err(Error::SizeMismatch { expected: self.target_dim, found: acc.target_dim() });
        }
        Ok(acc)
    }

    /// `k` for the intermediate ordinal `[k]` the map factors through.
    pub fn epi_dim(&self) -> usize {
        self.source_dim - self.degeneracies.len()
    }
}

/// Unique epi-mono normal form of `f`.
///
/// Faces skip exactly the values missing from the image of `f`, and
/// degeneracies sit at the positions `j` where `f(j) = f(j + 1)`.
pub fn canonical_factorization(f: &MonotoneMap) -> Factorization {
    let m = f.source_dim();
    let n = f.target_dim();

    let repeats: Vec<usize> = (0..m).filter(|&j| f.values[j] == f.values[j + 1]).collect();
    let t = repeats.len();
    let degeneracies = repeats
        .iter()
        .enumerate()
        .map(|(r, &j)| Degeneracy { n: m - t + r, i: j })
        .collect();

    let mut hit = vec![false; n + 1];
    for &v in &f.values {
        hit[v] = true;
    }
    let faces = (0..=n)
        .rev()
        .filter(|&i| !hit[i])
        .enumerate()
        .map(|(r, i)| Face { n: n - r, i })
        .collect();

    Factorization { source_dim: m, target_dim: n, faces, degeneracies }
}
