use std::collections::{BTreeSet, HashMap};

use super::SimplicialSet;
use crate::delta::{canonical_factorization, compose, degeneracy_map, face_map, MonotoneMap};
use crate::error::{Error, Result};

/// The combinatorial simplex `Δ[n]` truncated at `cutoff`: level `k` is the
/// set of monotone maps `[k] → [n]`, with structure maps by precomposition.
pub fn standard_simplex(n: usize, cutoff: usize) -> SimplicialSet {
    let levels: Vec<Vec<MonotoneMap>> = (0..=cutoff).map(|k| MonotoneMap::all(k, n)).collect();
    let index: Vec<HashMap<&MonotoneMap, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(x, f)| (f, x)).collect()).collect();

    let mut faces = vec![Vec::new()];
    for k in 1..=cutoff {
        let tables = (0..=k)
            .map(|i| {
                let delta = face_map(k, i).expect("valid face");
                levels[k].iter().map(|x| index[k - 1][&compose(x, &delta).expect("composable")]).collect()
            })
            .collect();
        faces.push(tables);
    }
    let degeneracies = (0..cutoff)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sigma = degeneracy_map(k, i).expect("valid degeneracy");
                    levels[k].iter().map(|x| index[k + 1][&compose(x, &sigma).expect("composable")]).collect()
                })
                .collect()
        })
        .collect();
    let labels = levels.iter().map(|l| l.iter().map(ToString::to_string).collect()).collect();
    SimplicialSet::from_tables(cutoff, labels, faces, degeneracies).expect("standard simplex tables are well formed")
}

/// The constant simplicial set on `points`: every level is the same set and
/// every structure map is the identity.
pub fn constant_sset<S: AsRef<str>>(points: &[S], cutoff: usize) -> SimplicialSet {
    let level: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
    let id: Vec<usize> = (0..level.len()).collect();
    let faces = std::iter::once(Vec::new())
        .chain((1..=cutoff).map(|n| vec![id.clone(); n + 1]))
        .collect();
    let degeneracies = (0..cutoff).map(|n| vec![id.clone(); n + 1]).collect();
    SimplicialSet::from_tables(cutoff, vec![level; cutoff + 1], faces, degeneracies)
        .expect("constant tables are well formed")
}

/// Levelwise cartesian product with componentwise structure maps.
///
/// The pair `(a, b)` on level `n` has index `a · |Y_n| + b`.
pub fn product(x: &SimplicialSet, y: &SimplicialSet) -> Result<SimplicialSet> {
    if x.cutoff() != y.cutoff() {
        return Err(Error::CutoffMismatch(x.cutoff(), y.cutoff()));
    }
    let cutoff = x.cutoff();
    let pair = |n: usize, a: usize, b: usize| a * y.level_size(n) + b;
    let labels = (0..=cutoff)
        .map(|n| {
            let mut level = Vec::with_capacity(x.level_size(n) * y.level_size(n));
            for a in x.labels(n) {
                for b in y.labels(n) {
                    level.push(format!("({a},{b})"));
                }
            }
            level
        })
        .collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=cutoff {
        faces.push(
            (0..=n)
                .map(|i| {
                    let mut t = Vec::with_capacity(x.level_size(n) * y.level_size(n));
                    for a in 0..x.level_size(n) {
                        for b in 0..y.level_size(n) {
                            t.push(pair(n - 1, x.face(n, i, a), y.face(n, i, b)));
                        }
                    }
                    t
                })
                .collect(),
        );
    }
    let degeneracies = (0..cutoff)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let mut t = Vec::with_capacity(x.level_size(n) * y.level_size(n));
                    for a in 0..x.level_size(n) {
                        for b in 0..y.level_size(n) {
                            t.push(pair(n + 1, x.degeneracy(n, i, a), y.degeneracy(n, i, b)));
                        }
                    }
                    t
                })
                .collect()
        })
        .collect();
    SimplicialSet::from_tables(cutoff, labels, faces, degeneracies)
}

/// Nondegenerate simplices with face maps only (a Δ-complex skeleton).
///
/// `faces[k][i][y]` is the `i`-th face of the `k`-simplex `y`; `faces[0]` is
/// empty. Faces of nondegenerate simplices are nondegenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiSimplicialSet {
    pub labels: Vec<Vec<String>>,
    pub faces: Vec<Vec<Vec<usize>>>,
}

impl SemiSimplicialSet {
    pub fn top_dim(&self) -> usize {
        self.labels.len().saturating_sub(1)
    }

    /// Checks table shapes and `d_i d_j = d_{j−1} d_i`.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::MalformedSimplicialSet(m));
        if self.labels.is_empty() {
            return bad("no levels".into());
        }
        if self.faces.len() != self.labels.len() || self.faces.first().is_some_and(|f| !f.is_empty()) {
            return bad("face tables must be given for levels 1..=top".into());
        }
        for k in 1..self.labels.len() {
            if self.faces[k].len() != k + 1 {
                return bad(format!("level {k} needs {} faces", k + 1));
            }
            for t in &self.faces[k] {
                if t.len() != self.labels[k].len() || t.iter().any(|&y| y >= self.labels[k - 1].len()) {
                    return bad(format!("face table on level {k} is malformed"));
                }
            }
            if k >= 2 {
                for x in 0..self.labels[k].len() {
                    for j in 1..=k {
                        for i in 0..j {
                            if self.faces[k - 1][i][self.faces[k][j][x]] != self.faces[k - 1][j - 1][self.faces[k][i][x]] {
                                return bad(format!("d_{i} d_{j} fails on simplex {x} of level {k}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Freely adjoins degeneracies to a semi-simplicial set.
///
/// Level `n` consists of pairs `(y, σ)` with `y` a nondegenerate
/// `k`-simplex and `σ: [n] → [k]` surjective; the pair stands for `σ^* y`.
/// `label(k, y, σ)` names each simplex.
pub fn free_degeneracies<F>(base: &SemiSimplicialSet, cutoff: usize, label: F) -> Result<SimplicialSet>
where
    F: Fn(usize, usize, &MonotoneMap) -> String,
{
    base.check()?;
    type Key = (usize, usize, Vec<usize>);
    let top = base.top_dim();
    let mut entries: Vec<Vec<(usize, usize, MonotoneMap)>> = Vec::with_capacity(cutoff + 1);
    let mut index: Vec<HashMap<Key, usize>> = Vec::with_capacity(cutoff + 1);
    for n in 0..=cutoff {
        let mut level = Vec::new();
        let mut idx = HashMap::new();
        for k in 0..=n.min(top) {
            let surjections: Vec<MonotoneMap> = MonotoneMap::all(n, k).into_iter().filter(MonotoneMap::is_surjective).collect();
            for y in 0..base.labels[k].len() {
                for sigma in &surjections {
                    idx.insert((k, y, sigma.values().to_vec()), level.len());
                    level.push((k, y, sigma.clone()));
                }
            }
        }
        entries.push(level);
        index.push(idx);
    }

    let mut faces = vec![Vec::new()];
    for n in 1..=cutoff {
        let tables = (0..=n)
            .map(|i| {
                let delta = face_map(n, i).expect("valid face");
                entries[n]
                    .iter()
                    .map(|(k, y, sigma)| {
                        let tau = compose(sigma, &delta).expect("composable");
                        let fac = canonical_factorization(&tau);
                        let mut target = *y;
                        for d in &fac.faces {
                            target = base.faces[d.n][d.i][target];
                        }
                        let k2 = k - fac.faces.len();
                        let epi = image_rank(&tau);
                        index[n - 1][&(k2, target, epi)]
                    })
                    .collect()
            })
            .collect();
        faces.push(tables);
    }
    let degeneracies = (0..cutoff)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let s = degeneracy_map(n, i).expect("valid degeneracy");
                    entries[n]
                        .iter()
                        .map(|(k, y, sigma)| index[n + 1][&(*k, *y, compose(sigma, &s).expect("composable").values().to_vec())])
                        .collect()
                })
                .collect()
        })
        .collect();
    let labels = entries.iter().map(|l| l.iter().map(|(k, y, s)| label(*k, *y, s)).collect()).collect();
    SimplicialSet::from_tables(cutoff, labels, faces, degeneracies)
}

/// Replaces each value of a monotone map by its rank within the image.
fn image_rank(f: &MonotoneMap) -> Vec<usize> {
    let mut out = Vec::with_capacity(f.domain_size());
    let mut rank = 0;
    for (j, &v) in f.values().iter().enumerate() {
        if j > 0 && v != f.values()[j - 1] {
            rank += 1;
        }
        out.push(rank);
    }
    out
}

/// A finite simplicial complex with a total order on its vertices.
///
/// Simplices are stored as strictly increasing vertex-index lists. Every
/// vertex is a 0-simplex; the simplex set is closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedComplex {
    vertices: Vec<String>,
    simplices: BTreeSet<Vec<usize>>,
}

impl OrderedComplex {
    /// Simplices must list their vertices in increasing order and every
    /// face of a listed simplex must itself be listed (vertices are implicit).
    pub fn new(vertices: Vec<String>, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let mut names = BTreeSet::new();
        for v in &vertices {
            if !names.insert(v) {
                return Err(Error::InvalidComplex(format!("vertex {v} listed twice")));
            }
        }
        let mut set: BTreeSet<Vec<usize>> = (0..vertices.len()).map(|v| vec![v]).collect();
        for s in simplices {
            if s.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if let Some(&v) = s.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::IndexOutOfRange { index: v, bound: vertices.len() });
            }
            if s.windows(2).any(|w| w[0] >= w[1]) {
                let shown: Vec<&str> = s.iter().map(|&v| vertices[v].as_str()).collect();
                return Err(Error::InvalidComplex(format!("simplex {shown:?} is not in increasing vertex order")));
            }
            set.insert(s);
        }
        for s in &set {
            if s.len() < 2 {
                continue;
            }
            for drop in 0..s.len() {
                let mut face = s.clone();
                face.remove(drop);
                if !set.contains(&face) {
                    let shown: Vec<&str> = s.iter().map(|&v| vertices[v].as_str()).collect();
                    return Err(Error::InvalidComplex(format!("a face of {shown:?} is missing")));
                }
            }
        }
        Ok(Self { vertices, simplices: set })
    }

    /// Builds from vertex names, resolving simplices given by name.
    pub fn from_names(vertices: Vec<String>, simplices: &[Vec<String>]) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect();
        let resolved = simplices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|v| index.get(v.as_str()).copied().ok_or_else(|| Error::UnknownName(v.clone())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, resolved)
    }

    /// The graph on `vertex_count` vertices with the given edges.
    pub fn graph(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = (0..vertex_count).map(|v| format!("v{v}")).collect();
        Self::new(vertices, edges.iter().map(|&(a, b)| vec![a.min(b), a.max(b)]).collect())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn dimension(&self) -> usize {
        self.simplices.iter().map(|s| s.len() - 1).max().unwrap_or(0)
    }

    /// The `k`-simplices in lexicographic order.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<&[usize]> {
        self.simplices.iter().filter(|s| s.len() == k + 1).map(Vec::as_slice).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.simplices_of_dim(1).into_iter().map(|e| (e[0], e[1])).collect()
    }

    /// The same complex with vertices re-ordered by `order` (a permutation
    /// listing old vertex indices in their new order).
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let mut position = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        if order.len() != self.vertices.len() || position.contains(&usize::MAX) {
            return Err(Error::InvalidComplex("vertex order is not a permutation".into()));
        }
        let vertices = order.iter().map(|&old| self.vertices[old].clone()).collect();
        let simplices = self
            .simplices
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&v| position[v]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        Self::new(vertices, simplices)
    }

    fn semi_simplicial(&self) -> SemiSimplicialSet {
        let dim = self.dimension();
        let levels: Vec<Vec<&[usize]>> = (0..=dim).map(|k| self.simplices_of_dim(k)).collect();
        let index: Vec<HashMap<&[usize], usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(x, s)| (*s, x)).collect()).collect();
        let mut faces = vec![Vec::new()];
        for k in 1..=dim {
            faces.push(
                (0..=k)
                    .map(|i| {
                        levels[k]
                            .iter()
                            .map(|s| {
                                let mut face = s.to_vec();
                                face.remove(i);
                                index[k - 1][face.as_slice()]
                            })
                            .collect()
                    })
                    .collect(),
            );
        }
        let labels = levels
            .iter()
            .map(|l| l.iter().map(|s| s.iter().map(|&v| self.vertices[v].as_str()).collect::<Vec<_>>().join(",")).collect())
            .collect();
        SemiSimplicialSet { labels, faces }
    }
}

/// The simplicial set of an ordered complex: its increasing simplices are
/// the nondegenerate ones, with all degeneracies adjoined up to `cutoff`.
///
/// Simplices are labeled by their vertex sequence, e.g. `[a,a,b]`.
pub fn from_complex(complex: &OrderedComplex, cutoff: usize) -> Result<SimplicialSet> {
    let base = complex.semi_simplicial();
    let vertex_lists: Vec<Vec<&[usize]>> = (0..=base.top_dim()).map(|k| complex.simplices_of_dim(k)).collect();
    free_degeneracies(&base, cutoff, |k, y, sigma| {
        let simplex = vertex_lists[k][y];
        let names: Vec<&str> = sigma.values().iter().map(|&j| complex.vertices[simplex[j]].as_str()).collect();
        format!("[{}]", names.join(","))
    })
}
