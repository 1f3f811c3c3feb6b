//! Small standard inputs shared by the tests, the CLI and the docs.

use crate::catmon::FiniteMonoid;
use crate::equivariant::{permutations, FiniteGroup, GMonoid};
use crate::sset::OrderedComplex;

pub fn klein() -> FiniteGroup {
    FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2))
}

/// `Z/2` swapping the factors of `Z/2 × Z/2`.
pub fn swap_action() -> GMonoid {
    let m = FiniteMonoid::cyclic(2).product(&FiniteMonoid::cyclic(2));
    let swap = (0..4).map(|x| (x % 2) * 2 + x / 2).collect();
    GMonoid::new(m, FiniteGroup::cyclic(2), vec![(0..4).collect(), swap]).expect("swap is an automorphism")
}

/// `Z/2` acting on `Z/3` by inversion.
pub fn inversion_action() -> GMonoid {
    let inv = (0..3).map(|x| (3 - x) % 3).collect();
    GMonoid::new(FiniteMonoid::cyclic(3), FiniteGroup::cyclic(2), vec![(0..3).collect(), inv]).expect("inversion is an automorphism")
}

/// `S_n` permuting the factors of `M^n`.
pub fn permuting_power(m: &FiniteMonoid, n: usize) -> GMonoid {
    let power = m.power(n);
    let k = m.size();
    let digits = |mut x: usize| {
        let mut d = vec![0; n];
        for slot in d.iter_mut().rev() {
            *slot = x % k;
            x /= k;
        }
        d
    };
    // (π·x)_{π(i)} = x_i
    let action = permutations(n)
        .iter()
        .map(|p| {
            (0..power.size())
                .map(|x| {
                    let d = digits(x);
                    let mut out = vec![0; n];
                    for i in 0..n {
                        out[p[i]] = d[i];
                    }
                    out.iter().fold(0, |acc, &v| acc * k + v)
                })
                .collect()
        })
        .collect();
    GMonoid::new(power, FiniteGroup::symmetric(n), action).expect("permuting factors is an action by automorphisms")
}

/// `S_3` permuting the factors of `(Z/2)^3`.
pub fn cube_action() -> GMonoid {
    permuting_power(&FiniteMonoid::cyclic(2), 3)
}

/// The three group actions used throughout the checks, by name.
pub fn gmonoids() -> Vec<(&'static str, GMonoid)> {
    vec![("swap", swap_action()), ("inversion", inversion_action()), ("cube", cube_action())]
}

pub fn triangle() -> OrderedComplex {
    OrderedComplex::graph(3, &[(0, 1), (0, 2), (1, 2)]).expect("triangle")
}

/// The boundary of the 3-simplex: a 2-sphere.
pub fn tetrahedron_boundary() -> OrderedComplex {
    let mut simplices = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            simplices.push(vec![a, b]);
            for c in b + 1..4 {
                simplices.push(vec![a, b, c]);
            }
        }
    }
    OrderedComplex::new((0..4).map(|v| format!("v{v}")).collect(), simplices).expect("∂Δ³")
}

pub fn complete_graph(n: usize) -> OrderedComplex {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    OrderedComplex::graph(n, &edges).expect("complete graph")
}
