//! The free groupoid `F(P)` of an ordered connected complex of dimension at
//! most one, and its homological check.

use std::collections::VecDeque;

use serde::Serialize;

use crate::catmon::FiniteMonoid;
use crate::error::{Error, Result};
use crate::homology::homology;
use crate::sset::{from_complex, OrderedComplex};

/// One invertible generator `v₀ → v₁` per edge, `v₀ < v₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Tree edges become identities in the associated monoid.
    pub in_tree: bool,
}

/// A presentation of `F(P)` for a graph `P`: objects are the vertices,
/// every generator is invertible, and the associated monoid at the base
/// vertex is free on the non-tree edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphPresentation {
    pub objects: Vec<String>,
    pub base: String,
    pub generators: Vec<Generator>,
    pub rank: usize,
}

impl GraphPresentation {
    /// The associated monoid when it is finite, which happens only for a
    /// tree: then it is trivial.
    pub fn finite_monoid(&self) -> Option<FiniteMonoid> {
        (self.rank == 0).then(FiniteMonoid::trivial)
    }

    pub fn free_generators(&self) -> Vec<&str> {
        self.generators.iter().filter(|g| !g.in_tree).map(|g| g.name.as_str()).collect()
    }
}

/// Builds `F(P)` from a breadth-first spanning tree rooted at the least
/// vertex. Fails on disconnected input and on dimension two or more.
pub fn f_graph(p: &OrderedComplex) -> Result<GraphPresentation> {
    if p.dimension() >= 2 {
        return Err(Error::Unsupported(format!("F(P) is only built for dimension ≤ 1, got {}", p.dimension())));
    }
    let names = p.vertices();
    if names.is_empty() {
        return Err(Error::InvalidComplex("the complex has no vertices".into()));
    }
    let edges = p.edges();
    let mut adjacent = vec![Vec::new(); names.len()];
    for (k, &(a, b)) in edges.iter().enumerate() {
        adjacent[a].push((b, k));
        adjacent[b].push((a, k));
    }
    let mut seen = vec![false; names.len()];
    let mut in_tree = vec![false; edges.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &(w, k) in &adjacent[v] {
            if !seen[w] {
                seen[w] = true;
                in_tree[k] = true;
                queue.push_back(w);
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidComplex(format!("the complex is not connected: {} is unreachable", names[v])));
    }
    let generators = edges
        .iter()
        .zip(&in_tree)
        .map(|(&(a, b), &t)| Generator { name: format!("{}>{}", names[a], names[b]), source: names[a].clone(), target: names[b].clone(), in_tree: t })
        .collect();
    Ok(GraphPresentation {
        objects: names.to_vec(),
        base: names[0].clone(),
        generators,
        rank: edges.len() + 1 - names.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McDuffReport {
    pub rank: usize,
    pub betti_0: usize,
    pub betti_1: usize,
    pub torsion_free: bool,
}

impl McDuffReport {
    pub fn passed(&self) -> bool {
        self.betti_0 == 1 && self.rank == self.betti_1 && self.torsion_free
    }
}

/// Compares the rank of the free monoid of `F(P)` with `H_1(P)`; the
/// classifying space of a free group of rank `r` has `H_1 = Z^r`.
pub fn verify_mcduff_graph(p: &OrderedComplex) -> Result<McDuffReport> {
    let presentation = f_graph(p)?;
    let h = homology(&from_complex(p, 2)?, 1)?;
    Ok(McDuffReport {
        rank: presentation.rank,
        betti_0: h.groups[0].betti,
        betti_1: h.groups[1].betti,
        torsion_free: h.groups.iter().all(|g| g.torsion.is_empty()),
    })
}
