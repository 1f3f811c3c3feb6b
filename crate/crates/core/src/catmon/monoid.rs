use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite monoid given by its multiplication table.
///
/// Elements are indices `0..size`; `table[a][b]` is `a · b`. Every element
/// carries a unique display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

/// The first monoid law a candidate table breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum MonoidViolation {
    Empty,
    NotSquare { row: usize },
    NameCount { names: usize, size: usize },
    DuplicateName { name: String },
    EntryOutOfRange { a: usize, b: usize },
    IdentityOutOfRange { identity: usize },
    LeftUnit { a: usize },
    RightUnit { a: usize },
    Associativity { a: usize, b: usize, c: usize },
}

impl fmt::Display for MonoidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidViolation::Empty => write!(f, "a monoid has at least one element"),
            MonoidViolation::NotSquare { row } => write!(f, "row {row} of the table has the wrong length"),
            MonoidViolation::NameCount { names, size } => write!(f, "{names} names for {size} elements"),
            MonoidViolation::DuplicateName { name } => write!(f, "element name {name} is used twice"),
            MonoidViolation::EntryOutOfRange { a, b } => write!(f, "product {a}·{b} is not an element"),
            MonoidViolation::IdentityOutOfRange { identity } => write!(f, "identity {identity} is not an element"),
            MonoidViolation::LeftUnit { a } => write!(f, "e·{a} ≠ {a}"),
            MonoidViolation::RightUnit { a } => write!(f, "{a}·e ≠ {a}"),
            MonoidViolation::Associativity { a, b, c } => write!(f, "({a}·{b})·{c} ≠ {a}·({b}·{c})"),
        }
    }
}

impl MonoidViolation {
    /// Like `Display`, with element names in place of indices.
    pub fn named(&self, names: &[String]) -> String {
        let n = |k: &usize| names.get(*k).cloned().unwrap_or_else(|| k.to_string());
        match self {
            MonoidViolation::EntryOutOfRange { a, b } => format!("product {}·{} is not an element", n(a), n(b)),
            MonoidViolation::LeftUnit { a } => format!("e·{0} ≠ {0}", n(a)),
            MonoidViolation::RightUnit { a } => format!("{0}·e ≠ {0}", n(a)),
            MonoidViolation::Associativity { a, b, c } => format!("({0}·{1})·{2} ≠ {0}·({1}·{2})", n(a), n(b), n(c)),
            other => other.to_string(),
        }
    }
}

/// Checks every monoid law, returning the monoid or the first failure.
pub fn validate_monoid(names: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> std::result::Result<FiniteMonoid, MonoidViolation> {
    let size = table.len();
    if size == 0 {
        return Err(MonoidViolation::Empty);
    }
    if names.len() != size {
        return Err(MonoidViolation::NameCount { names: names.len(), size });
    }
    let mut seen = HashMap::new();
    for name in &names {
        if seen.insert(name.as_str(), ()).is_some() {
            return Err(MonoidViolation::DuplicateName { name: name.clone() });
        }
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != size {
            return Err(MonoidViolation::NotSquare { row: a });
        }
        if let Some(b) = row.iter().position(|&c| c >= size) {
            return Err(MonoidViolation::EntryOutOfRange { a, b });
        }
    }
    if identity >= size {
        return Err(MonoidViolation::IdentityOutOfRange { identity });
    }
    for a in 0..size {
        if table[identity][a] != a {
            return Err(MonoidViolation::LeftUnit { a });
        }
        if table[a][identity] != a {
            return Err(MonoidViolation::RightUnit { a });
        }
    }
    for a in 0..size {
        for b in 0..size {
            let ab = table[a][b];
            for c in 0..size {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(MonoidViolation::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(FiniteMonoid { names, table, identity })
}

impl FiniteMonoid {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let labels = names.clone();
        validate_monoid(names, table, identity).map_err(|v| Error::InvalidMonoid(v.named(&labels)))
    }

    /// Builds from a table whose elements are named by their indices.
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let names = (0..table.len()).map(|a| a.to_string()).collect();
        Self::new(names, table, identity)
    }

    pub fn trivial() -> Self {
        Self { names: vec!["e".into()], table: vec![vec![0]], identity: 0 }
    }

    /// `Z/n` with elements `e, a, a^2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "Z/0 is not finite");
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self { names, table, identity: 0 }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Direct product; `(a, b)` has index `a · |other| + b`.
    pub fn product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let k = other.size();
        let mut names = Vec::with_capacity(self.size() * k);
        for a in &self.names {
            for b in &other.names {
                names.push(format!("({a},{b})"));
            }
        }
        let table = (0..self.size() * k)
            .map(|x| (0..self.size() * k).map(|y| self.mul(x / k, y / k) * k + other.mul(x % k, y % k)).collect())
            .collect();
        FiniteMonoid { names, table, identity: self.identity * k + other.identity }
    }

    /// `n`-fold direct power with elements named by tuples, e.g. `(a,e,a)`.
    pub fn power(&self, n: usize) -> FiniteMonoid {
        let size = self.size().pow(n as u32);
        let digits = |mut x: usize| {
            let mut d = vec![0; n];
            for slot in d.iter_mut().rev() {
                *slot = x % self.size();
                x /= self.size();
            }
            d
        };
        let encode = |d: &[usize]| d.iter().fold(0, |acc, &v| acc * self.size() + v);
        let names = (0..size)
            .map(|x| format!("({})", digits(x).iter().map(|&v| self.names[v].as_str()).collect::<Vec<_>>().join(",")))
            .collect();
        let table = (0..size)
            .map(|x| {
                let dx = digits(x);
                (0..size)
                    .map(|y| {
                        let prod: Vec<usize> = dx.iter().zip(digits(y)).map(|(&a, b)| self.mul(a, b)).collect();
                        encode(&prod)
                    })
                    .collect()
            })
            .collect();
        FiniteMonoid { names, table, identity: encode(&vec![self.identity; n]) }
    }

    /// The submonoid on `elements` (sorted, containing the identity),
    /// keeping the original element names.
    pub fn submonoid(&self, elements: &[usize]) -> Result<FiniteMonoid> {
        let mut position = vec![None; self.size()];
        for (k, &a) in elements.iter().enumerate() {
            crate::error::check_index(a, self.size())?;
            position[a] = Some(k);
        }
        let identity = position[self.identity]
            .ok_or_else(|| Error::InvalidMonoid("a submonoid must contain the identity".into()))?;
        let table = elements
            .iter()
            .map(|&a| {
                elements
                    .iter()
                    .map(|&b| {
                        position[self.mul(a, b)].ok_or_else(|| {
                            Error::InvalidMonoid(format!("{}·{} leaves the subset", self.names[a], self.names[b]))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let names = elements.iter().map(|&a| self.names[a].clone()).collect();
        Ok(FiniteMonoid { names, table, identity })
    }

    /// Every 2-sided-unital associative table on `size` elements with the
    /// identity at index 0.
    pub fn enumerate_all(size: usize) -> Vec<FiniteMonoid> {
        assert!(size >= 1);
        let free = (size - 1) * (size - 1);
        let total = size.pow(free as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let mut table: Vec<Vec<usize>> = (0..size).map(|a| (0..size).map(|b| if a == 0 { b } else if b == 0 { a } else { 0 }).collect()).collect();
            for row in table.iter_mut().skip(1) {
                for entry in row.iter_mut().skip(1) {
                    *entry = c % size;
                    c /= size;
                }
            }
            if let Ok(m) = FiniteMonoid::from_table(table, 0) {
                out.push(m);
            }
        }
        out
    }
}

/// A monoid homomorphism between two finite monoids, verified on creation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidHomomorphism {
    pub source: FiniteMonoid,
    pub target: FiniteMonoid,
    pub map: Vec<usize>,
}

impl MonoidHomomorphism {
    /// Checks unitality and multiplicativity on every pair.
    pub fn new(source: FiniteMonoid, target: FiniteMonoid, map: Vec<usize>) -> Result<Self> {
        check_homomorphism(&source, &target, &map).map_err(Error::NotAHomomorphism)?;
        Ok(Self { source, target, map })
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&b| !std::mem::replace(&mut seen[b], true))
    }
}

/// `Err` names the first failing law.
pub fn check_homomorphism(source: &FiniteMonoid, target: &FiniteMonoid, map: &[usize]) -> std::result::Result<(), String> {
    if map.len() != source.size() {
        return Err(format!("map has {} entries for {} elements", map.len(), source.size()));
    }
    if let Some(&b) = map.iter().find(|&&b| b >= target.size()) {
        return Err(format!("image {b} is not an element of the target"));
    }
    if map[source.identity()] != target.identity() {
        return Err("identity is not preserved".into());
    }
    for a in 0..source.size() {
        for b in 0..source.size() {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(format!("h({}·{}) ≠ h({})·h({})", source.name(a), source.name(b), source.name(a), source.name(b)));
            }
        }
    }
    Ok(())
}

/// Some isomorphism `a → b`, found by backtracking over bijections.
pub fn find_isomorphism(a: &FiniteMonoid, b: &FiniteMonoid) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    let order: Vec<usize> = (0..n).filter(|&x| x != a.identity()).collect();

    fn consistent(a: &FiniteMonoid, b: &FiniteMonoid, map: &[usize]) -> bool {
        for x in 0..a.size() {
            if map[x] == usize::MAX {
                continue;
            }
            for y in 0..a.size() {
                let xy = a.mul(x, y);
                if map[y] != usize::MAX && map[xy] != usize::MAX && map[xy] != b.mul(map[x], map[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(a: &FiniteMonoid, b: &FiniteMonoid, order: &[usize], map: &mut [usize], used: &mut [bool]) -> bool {
        let Some((&x, rest)) = order.split_first() else {
            return true;
        };
        for y in 0..b.size() {
            if used[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if consistent(a, b, map) && extend(a, b, rest, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }

    extend(a, b, &order, &mut map, &mut used).then_some(map)
}
