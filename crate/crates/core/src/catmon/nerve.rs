use std::collections::HashMap;

use super::category::FiniteCategory;
use super::monoid::{FiniteMonoid, MonoidHomomorphism};
use crate::error::{Error, Result};
use crate::sset::{SimplicialMap, SimplicialSet};

/// The nerve of a finite category together with the strings behind each
/// simplex.
///
/// Level 0 holds the objects (as one-entry strings of object indices);
/// level `n ≥ 1` holds composable strings `(f_1, …, f_n)` of morphism
/// indices, `f_{i+1}` starting where `f_i` ends, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Nerve {
    strings: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    sset: SimplicialSet,
}

impl Nerve {
    pub fn new(cat: &FiniteCategory, cutoff: usize) -> Self {
        let mut strings: Vec<Vec<Vec<usize>>> = Vec::with_capacity(cutoff + 1);
        strings.push((0..cat.objects().len()).map(|x| vec![x]).collect());
        if cutoff >= 1 {
            strings.push((0..cat.morphisms().len()).map(|f| vec![f]).collect());
        }
        for n in 2..=cutoff {
            let mut level = Vec::new();
            for s in &strings[n - 1] {
                let end = cat.morphism(*s.last().expect("nonempty")).target;
                for g in 0..cat.morphisms().len() {
                    if cat.morphism(g).source == end {
                        let mut t = s.clone();
                        t.push(g);
                        level.push(t);
                    }
                }
            }
            strings.push(level);
        }
        let index: Vec<HashMap<Vec<usize>, usize>> =
            strings.iter().map(|l| l.iter().enumerate().map(|(x, s)| (s.clone(), x)).collect()).collect();

        let lookup = |n: usize, s: &[usize]| index[n][s];
        let mut faces = vec![Vec::new()];
        for n in 1..=cutoff {
            let tables = (0..=n)
                .map(|i| strings[n].iter().map(|s| lookup(n - 1, &face_string(cat, s, i))).collect())
                .collect();
            faces.push(tables);
        }
        let degeneracies = (0..cutoff)
            .map(|n| {
                (0..=n)
                    .map(|i| strings[n].iter().map(|s| lookup(n + 1, &degeneracy_string(cat, n, s, i))).collect())
                    .collect()
            })
            .collect();
        let labels = strings
            .iter()
            .enumerate()
            .map(|(n, level)| {
                level
                    .iter()
                    .map(|s| {
                        if n == 0 {
                            cat.objects()[s[0]].clone()
                        } else {
                            let names: Vec<&str> = s.iter().map(|&f| cat.morphism(f).name.as_str()).collect();
                            format!("[{}]", names.join(","))
                        }
                    })
                    .collect()
            })
            .collect();
        let sset = SimplicialSet::from_tables(cutoff, labels, faces, degeneracies).expect("nerve tables are well formed");
        Self { strings, index, sset }
    }

    pub fn of_monoid(m: &FiniteMonoid, cutoff: usize) -> Self {
        Self::new(&FiniteCategory::from_monoid(m), cutoff)
    }

    pub fn sset(&self) -> &SimplicialSet {
        &self.sset
    }

    pub fn into_sset(self) -> SimplicialSet {
        self.sset
    }

    /// The string of simplex `x` on level `n`.
    pub fn string(&self, n: usize, x: usize) -> &[usize] {
        &self.strings[n][x]
    }

    pub fn index_of(&self, n: usize, string: &[usize]) -> Option<usize> {
        self.index.get(n)?.get(string).copied()
    }

    /// The simplicial map induced by a functor, given on objects and
    /// morphisms. The functor laws are checked through the resulting map.
    pub fn functor_map(&self, target: &Nerve, objects: &[usize], morphisms: &[usize]) -> Result<SimplicialMap> {
        let cutoff = self.sset.cutoff();
        if target.sset.cutoff() != cutoff {
            return Err(Error::CutoffMismatch(cutoff, target.sset.cutoff()));
        }
        let levels = (0..=cutoff)
            .map(|n| {
                self.strings[n]
                    .iter()
                    .map(|s| {
                        let image: Vec<usize> = if n == 0 { vec![objects[s[0]]] } else { s.iter().map(|&f| morphisms[f]).collect() };
                        target
                            .index_of(n, &image)
                            .ok_or_else(|| Error::NotAHomomorphism(format!("image of a composable string on level {n} is not composable")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let map = SimplicialMap { levels };
        map.check(&self.sset, &target.sset).map_err(Error::NotAHomomorphism)?;
        Ok(map)
    }

    /// The simplicial map `N(h)` of a monoid homomorphism.
    pub fn homomorphism_map(&self, target: &Nerve, h: &MonoidHomomorphism) -> Result<SimplicialMap> {
        self.functor_map(target, &[0], &h.map)
    }
}

/// `d_i (f_1, …, f_n)`: drop `f_1` (`i = 0`), drop `f_n` (`i = n`), or
/// replace `f_i, f_{i+1}` by `f_{i+1} ∘ f_i`. On level 1, `d_0 f` is the
/// target of `f` and `d_1 f` its source.
fn face_string(cat: &FiniteCategory, s: &[usize], i: usize) -> Vec<usize> {
    let n = s.len();
    if n == 1 {
        let f = cat.morphism(s[0]);
        return vec![if i == 0 { f.target } else { f.source }];
    }
    let mut out = Vec::with_capacity(n - 1);
    if i == 0 {
        out.extend_from_slice(&s[1..]);
    } else if i == n {
        out.extend_from_slice(&s[..n - 1]);
    } else {
        out.extend_from_slice(&s[..i - 1]);
        out.push(cat.compose(s[i], s[i - 1]).expect("composable string"));
        out.extend_from_slice(&s[i + 1..]);
    }
    out
}

/// `s_i` inserts the identity of the `i`-th vertex object after `f_i`.
fn degeneracy_string(cat: &FiniteCategory, level: usize, s: &[usize], i: usize) -> Vec<usize> {
    if level == 0 {
        return vec![cat.identity(s[0])];
    }
    let vertex = if i == 0 { cat.morphism(s[0]).source } else { cat.morphism(s[i - 1]).target };
    let mut out = Vec::with_capacity(s.len() + 1);
    out.extend_from_slice(&s[..i]);
    out.push(cat.identity(vertex));
    out.extend_from_slice(&s[i..]);
    out
}

/// The nerve of a finite category, truncated at `cutoff`.
pub fn nerve(cat: &FiniteCategory, cutoff: usize) -> SimplicialSet {
    Nerve::new(cat, cutoff).into_sset()
}

/// The nerve of a monoid viewed as a one-object category.
pub fn nerve_of_monoid(m: &FiniteMonoid, cutoff: usize) -> SimplicialSet {
    Nerve::of_monoid(m, cutoff).into_sset()
}
