//! Random inputs and brute-force oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use equimon::homology::HomologyResult;
use equimon::realize::{coord_face, one_step_reductions, RealizationPoint};
use equimon::sset::{free_degeneracies, BisimplicialSet, SemiSimplicialSet, SimplicialSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random Δ-complex of dimension ≤ 2 with at most `max` simplices per
/// level. Edges get random endpoints; triangles are glued onto existing
/// edges, adding missing ones while there is room.
pub fn random_semi(rng: &mut ChaCha8Rng, max: usize) -> SemiSimplicialSet {
    let vertices = rng.gen_range(1..=max);
    let mut edges: Vec<(usize, usize)> = (0..rng.gen_range(0..=max))
        .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
        .collect();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    if !edges.is_empty() {
        for _ in 0..rng.gen_range(0..=max) {
            let v: Vec<usize> = (0..3).map(|_| rng.gen_range(0..vertices)).collect();
            // d_0 = [v1,v2], d_1 = [v0,v2], d_2 = [v0,v1]
            let mut faces = [0; 3];
            let mut ok = true;
            for (i, (a, b)) in [(v[1], v[2]), (v[0], v[2]), (v[0], v[1])].into_iter().enumerate() {
                let found: Vec<usize> = (0..edges.len()).filter(|&e| edges[e] == (a, b)).collect();
                faces[i] = match found.choose(rng) {
                    Some(&e) => e,
                    None if edges.len() < max => {
                        edges.push((a, b));
                        edges.len() - 1
                    }
                    None => {
                        ok = false;
                        break;
                    }
                };
            }
            if ok {
                triangles.push(faces);
            }
        }
    }
    let mut labels = vec![(0..vertices).map(|v| format!("v{v}")).collect::<Vec<_>>()];
    let mut face_tables = vec![Vec::new()];
    if !edges.is_empty() {
        labels.push((0..edges.len()).map(|e| format!("e{e}")).collect());
        face_tables.push(vec![edges.iter().map(|e| e.1).collect(), edges.iter().map(|e| e.0).collect()]);
    }
    if !triangles.is_empty() {
        labels.push((0..triangles.len()).map(|t| format!("t{t}")).collect());
        face_tables.push((0..3).map(|i| triangles.iter().map(|t| t[i]).collect()).collect());
    }
    SemiSimplicialSet { labels, faces: face_tables }
}

pub fn random_sset(rng: &mut ChaCha8Rng, max: usize, cutoff: usize) -> SimplicialSet {
    let base = random_semi(rng, max);
    free_degeneracies(&base, cutoff, |k, y, s| {
        if s.is_identity() {
            base.labels[k][y].clone()
        } else {
            format!("{}{:?}", base.labels[k][y], s.values())
        }
    })
    .expect("random Δ-complexes are valid")
}

/// An external product of random simplicial sets, sometimes summed with a
/// second one.
pub fn random_bisset(rng: &mut ChaCha8Rng, max: usize, cutoff: usize) -> BisimplicialSet {
    let one = |rng: &mut ChaCha8Rng| BisimplicialSet::external_product(&random_sset(rng, max, cutoff), &random_sset(rng, max, cutoff));
    let b = one(rng);
    if rng.gen_bool(0.3) {
        let c = one(rng);
        BisimplicialSet::coproduct(&b, &c).expect("equal cutoffs")
    } else {
        b
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Random nonnegative rationals with denominator dividing 12, summing to 1,
/// about a third of them zero.
pub fn random_coords(rng: &mut ChaCha8Rng, len: usize) -> Vec<BigRational> {
    loop {
        let weights: Vec<i64> = (0..len).map(|_| if rng.gen_bool(0.3) { 0 } else { rng.gen_range(1..=6) }).collect();
        let total: i64 = weights.iter().sum();
        if total > 0 {
            return weights.into_iter().map(|w| q(w, total)).collect();
        }
    }
}

pub fn random_point(rng: &mut ChaCha8Rng, x: &SimplicialSet) -> RealizationPoint {
    let level = rng.gen_range(0..=x.cutoff());
    let simplex = rng.gen_range(0..x.level_size(level));
    RealizationPoint::new(level, simplex, random_coords(rng, level + 1)).expect("valid coordinates")
}

/// One random step against the reducing direction: either insert a zero
/// through a face relation or split a coordinate through a degeneracy.
pub fn random_expansion(rng: &mut ChaCha8Rng, x: &SimplicialSet, p: &RealizationPoint) -> Option<RealizationPoint> {
    if p.level >= x.cutoff() {
        return None;
    }
    let n = p.level + 1;
    if rng.gen_bool(0.5) {
        let mut options = Vec::new();
        for i in 0..=n {
            for z in 0..x.level_size(n) {
                if x.face(n, i, z) == p.simplex {
                    options.push((i, z));
                }
            }
        }
        let &(i, z) = options.choose(rng)?;
        Some(RealizationPoint { level: n, simplex: z, coords: coord_face(&p.coords, i).ok()? })
    } else {
        let j = rng.gen_range(0..n);
        let t = p.coords[j].clone();
        let part = t.clone() * q(rng.gen_range(0..=4), 4);
        let mut coords = p.coords.clone();
        coords[j] = part.clone();
        coords.insert(j + 1, t - part);
        Some(RealizationPoint { level: n, simplex: x.degeneracy(p.level, j, p.simplex), coords })
    }
}

/// Applies random single-step reductions until none applies.
pub fn random_reduction(rng: &mut ChaCha8Rng, x: &SimplicialSet, p: &RealizationPoint) -> RealizationPoint {
    let mut p = p.clone();
    loop {
        let next = one_step_reductions(x, &p);
        match next.choose(rng) {
            Some(q) => p = q.clone(),
            None => return p,
        }
    }
}

/// `(betti, torsion)` per degree.
pub type Table = Vec<(usize, Vec<u64>)>;

pub fn table(h: &HomologyResult) -> Table {
    h.groups.iter().map(|g| (g.betti, g.torsion.iter().map(|t| t.to_u64().expect("small torsion")).collect())).collect()
}

pub fn parse_table(s: &str) -> Table {
    s.trim_matches(|c| c == '(' || c == ')')
        .split("; ")
        .map(|part| {
            let mut betti = 0;
            let mut torsion = Vec::new();
            for term in part.split(" + ") {
                if let Some(t) = term.strip_prefix("Z/") {
                    torsion.push(t.parse().unwrap());
                } else if let Some(b) = term.strip_prefix("Z^") {
                    betti = b.parse().unwrap();
                } else if term == "Z" {
                    betti = 1;
                }
            }
            (betti, torsion)
        })
        .collect()
}

/// Diagonal entries of a Smith form, with the divisibility chain restored
/// by gcd/lcm exchanges.
pub fn invariant_factors(mut a: Vec<Vec<i128>>) -> Vec<u128> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = (t..rows).flat_map(|r| (t..cols).map(move |c| (r, c))).filter(|&(r, c)| a[r][c] != 0).min_by_key(|&(r, c)| a[r][c].abs()) else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let p = a[t][t];
        let mut clean = true;
        for r in t + 1..rows {
            let k = a[r][t].div_euclid(p);
            if k != 0 {
                for c in t..cols {
                    a[r][c] -= k * a[t][c];
                }
            }
            clean &= a[r][t] == 0;
        }
        for c in t + 1..cols {
            let k = a[t][c].div_euclid(p);
            if k != 0 {
                for r in t..rows {
                    a[r][c] -= k * a[r][t];
                }
            }
            clean &= a[t][c] == 0;
        }
        if clean {
            diagonal.push(p.unsigned_abs());
            t += 1;
        }
    }
    for i in 0..diagonal.len() {
        for j in i + 1..diagonal.len() {
            let (x, y) = (diagonal[i], diagonal[j]);
            let g = gcd(x, y);
            diagonal[i] = g;
            diagonal[j] = x / g * y;
        }
    }
    diagonal
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Homology from dense boundary matrices; `levels[n]` is the size of
/// `C_n` and `boundary(n)` maps `C_n → C_{n−1}`.
fn dense_homology(levels: &[usize], boundary: impl Fn(usize) -> Vec<Vec<i128>>, top: usize) -> Table {
    let factors: Vec<Vec<u128>> = (0..=top + 1).map(|n| if n == 0 { Vec::new() } else { invariant_factors(boundary(n)) }).collect();
    (0..=top)
        .map(|n| {
            let betti = levels[n] - factors[n].len() - factors[n + 1].len();
            (betti, factors[n + 1].iter().filter(|&&d| d > 1).map(|&d| d as u64).collect())
        })
        .collect()
}

/// Unnormalized bar complex of a monoid given by its multiplication table,
/// with every string, degenerate ones included.
pub fn bar_homology(table: &[Vec<usize>], top: usize) -> Table {
    let m = table.len();
    let levels: Vec<usize> = (0..=top + 1).map(|n| m.pow(n as u32)).collect();
    let digits = |mut x: usize, n: usize| {
        let mut d = vec![0; n];
        for slot in d.iter_mut().rev() {
            *slot = x % m;
            x /= m;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().fold(0, |acc, &v| acc * m + v);
    let boundary = |n: usize| {
        let mut a = vec![vec![0i128; levels[n]]; levels[n - 1]];
        for c in 0..levels[n] {
            let s = digits(c, n);
            for i in 0..=n {
                let face: Vec<usize> = if i == 0 {
                    s[1..].to_vec()
                } else if i == n {
                    s[..n - 1].to_vec()
                } else {
                    let mut f = s[..i - 1].to_vec();
                    f.push(table[s[i]][s[i - 1]]);
                    f.extend_from_slice(&s[i + 1..]);
                    f
                };
                a[encode(&face)][c] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        a
    };
    dense_homology(&levels, boundary, top)
}

/// Homology of the unnormalized chains of `x`: every simplex is a basis
/// element.
pub fn moore_homology(x: &SimplicialSet, top: usize) -> Table {
    let levels = x.level_sizes();
    let boundary = |n: usize| {
        let mut a = vec![vec![0i128; levels[n]]; levels[n - 1]];
        for c in 0..levels[n] {
            for i in 0..=n {
                a[x.face(n, i, c)][c] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        a
    };
    dense_homology(&levels, boundary, top)
}

pub fn sums_to_one(p: &RealizationPoint) -> bool {
    let s: BigRational = p.coords.iter().sum();
    (s - BigRational::from_integer(BigInt::from(1))).is_zero()
}
