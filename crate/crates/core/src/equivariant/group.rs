use std::collections::BTreeSet;

use crate::catmon::FiniteMonoid;
use crate::error::{check_index, Error, Result};

/// A finite group: a finite monoid in which every element has an inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    monoid: FiniteMonoid,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(monoid: FiniteMonoid) -> Result<Self> {
        let inverse = (0..monoid.size())
            .map(|a| {
                (0..monoid.size())
                    .find(|&b| monoid.mul(a, b) == monoid.identity() && monoid.mul(b, a) == monoid.identity())
                    .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", monoid.name(a))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { monoid, inverse })
    }

    pub fn trivial() -> Self {
        Self::new(FiniteMonoid::trivial()).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(FiniteMonoid::cyclic(n)).expect("Z/n is a group")
    }

    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        Self::new(self.monoid.product(&other.monoid)).expect("product of groups")
    }

    /// The symmetric group on `0..n`, elements ordered as in
    /// [`permutations`] and named in cycle notation, e.g. `(0 1 2)`.
    /// Products compose right to left: `(p q)(i) = p(q(i))`.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation listed");
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index(&q.iter().map(|&i| p[i]).collect::<Vec<_>>())).collect())
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::new(FiniteMonoid::new(names, table, 0).expect("S_n is a monoid")).expect("S_n is a group")
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    pub fn identity(&self) -> usize {
        self.monoid.identity()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        self.monoid.name(a)
    }

    /// `g⁻¹ h g`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.inverse(g), self.mul(h, g))
    }

    /// The subgroup generated by `elements`.
    pub fn generated(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity()]);
        for &g in elements {
            check_index(g, self.size())?;
            set.insert(g);
        }
        loop {
            let grown: BTreeSet<usize> = set.iter().flat_map(|&a| set.iter().map(move |&b| (a, b))).map(|(a, b)| self.mul(a, b)).collect();
            if grown.len() == set.len() {
                break;
            }
            set.extend(grown);
        }
        Ok(Subgroup { elements: set.into_iter().collect() })
    }

    /// The left coset `g K` as a sorted list.
    pub fn left_coset(&self, g: usize, k: &Subgroup) -> Vec<usize> {
        let mut coset: Vec<usize> = k.elements.iter().map(|&x| self.mul(g, x)).collect();
        coset.sort_unstable();
        coset
    }

    /// Names of the elements of `h`, e.g. `{e,a}`.
    pub fn subgroup_name(&self, h: &Subgroup) -> String {
        let names: Vec<&str> = h.elements.iter().map(|&x| self.name(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// A subgroup, as the sorted list of its elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Checks that `elements` is a subgroup of `g`.
    pub fn new(g: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        for &x in &elements {
            check_index(x, g.size())?;
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if !set.contains(&g.identity()) {
            return Err(Error::NotASubgroup("missing the identity".into()));
        }
        for &a in &elements {
            if !set.contains(&g.inverse(a)) {
                return Err(Error::NotASubgroup(format!("missing the inverse of {}", g.name(a))));
            }
            for &b in &elements {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("{}·{} leaves the subset", g.name(a), g.name(b))));
                }
            }
        }
        Ok(Self { elements })
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self { elements: vec![g.identity()] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self { elements: (0..g.size()).collect() }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// Every subgroup of `g`, ordered by size and then by element list.
pub fn subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::from([Subgroup::trivial(g)]);
    let mut frontier = vec![Subgroup::trivial(g)];
    while let Some(h) = frontier.pop() {
        for x in 0..g.size() {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.elements.clone();
            gens.push(x);
            let k = g.generated(&gens).expect("indices in range");
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    out
}

/// All permutations of `0..n` in lexicographic order of their one-line
/// notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i.to_string());
            i = p[i];
        }
        cycles.push(format!("({})", cycle.join(" ")));
    }
    if cycles.is_empty() {
        "e".into()
    } else {
        cycles.concat()
    }
}
