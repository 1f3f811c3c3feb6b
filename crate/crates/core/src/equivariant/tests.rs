use super::*;
use crate::catmon::{nerve_of_monoid, FiniteMonoid};
use crate::error::Error;
use crate::fixtures::{cube_action, gmonoids, inversion_action, klein, swap_action};
use crate::sset::{constant_sset, from_complex, OrderedComplex, SimplicialMap};

fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2)
}

#[test]
fn groups_and_inverses() {
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(s3.size(), 6);
    assert_eq!(s3.name(0), "e");
    assert!(!s3.monoid().is_commutative());
    for g in 0..6 {
        assert_eq!(s3.mul(g, s3.inverse(g)), s3.identity());
    }
    assert!(matches!(FiniteGroup::new(FiniteMonoid::enumerate_all(2)[1].clone()), Err(Error::NotAGroup(_))));
}

#[test]
fn subgroup_counts() {
    assert_eq!(subgroups(&z2()).len(), 2);
    assert_eq!(subgroups(&FiniteGroup::cyclic(4)).len(), 3);
    assert_eq!(subgroups(&klein()).len(), 5);
    let s3 = subgroups(&FiniteGroup::symmetric(3));
    let orders: Vec<usize> = s3.iter().map(Subgroup::order).collect();
    assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
}

#[test]
fn subgroup_validation() {
    let z4 = FiniteGroup::cyclic(4);
    assert!(Subgroup::new(&z4, vec![0, 2]).is_ok());
    assert!(matches!(Subgroup::new(&z4, vec![0, 1]), Err(Error::NotASubgroup(_))));
    assert!(matches!(Subgroup::new(&z4, vec![1, 3]), Err(Error::NotASubgroup(_))));
}

#[test]
fn invalid_gmonoid_actions() {
    let m = FiniteMonoid::cyclic(3);
    // a ↦ a^2 is fine, a ↦ e is not bijective, and a shift moves e
    assert!(GMonoid::new(m.clone(), z2(), vec![vec![0, 1, 2], vec![0, 2, 1]]).is_ok());
    assert!(GMonoid::new(m.clone(), z2(), vec![vec![0, 1, 2], vec![0, 0, 0]]).is_err());
    assert!(GMonoid::new(m.clone(), z2(), vec![vec![0, 1, 2], vec![1, 2, 0]]).is_err());
    // a and a^2 of Z/4 cannot both act by inversion
    let z4 = FiniteGroup::cyclic(4);
    let inv = vec![0, 2, 1];
    assert!(GMonoid::new(m.clone(), z4.clone(), vec![vec![0, 1, 2], inv.clone(), inv.clone(), vec![0, 1, 2]]).is_err());
    assert!(GMonoid::new(m, z4, vec![vec![0, 1, 2], inv.clone(), vec![0, 1, 2], inv]).is_ok());
}

#[test]
fn fixed_monoids() {
    let swap = swap_action();
    let whole = Subgroup::whole(swap.group());
    let diagonal = swap.fixed_monoid(&whole).unwrap();
    assert_eq!(diagonal.names(), &["(e,e)".to_string(), "(a,a)".to_string()]);
    assert_eq!(swap.fixed_monoid(&Subgroup::trivial(swap.group())).unwrap(), *swap.monoid());

    let trivial = GMonoid::trivial(FiniteMonoid::cyclic(3), FiniteGroup::symmetric(3));
    for h in subgroups(trivial.group()) {
        assert_eq!(trivial.fixed_monoid(&h).unwrap().size(), 3);
    }
    assert_eq!(inversion_action().fixed_monoid(&Subgroup::whole(&z2())).unwrap().size(), 1);
}

#[test]
fn foreign_subgroups_are_rejected() {
    let swap = swap_action();
    let h = Subgroup::new(&FiniteGroup::cyclic(4), vec![0, 2]).unwrap();
    assert!(swap.fixed_monoid(&h).is_err());
}

#[test]
fn nerve_action_is_entrywise() {
    let swap = swap_action();
    let y = nerve_of_gmonoid(&swap, 3).unwrap();
    let m = swap.monoid();
    let x = y.sset().labels(1).iter().position(|l| l == "[(a,e)]").unwrap();
    assert_eq!(y.sset().label(1, y.act(1, 1, x)), "[(e,a)]");
    let x = y.sset().labels(2).iter().position(|l| l == "[(a,e),(e,a)]").unwrap();
    assert_eq!(y.sset().label(2, y.act(2, 1, x)), "[(e,a),(a,e)]");
    assert_eq!(m.size(), 4);
    let trivial = nerve_of_gmonoid(&GMonoid::trivial(m.clone(), z2()), 2).unwrap();
    for n in 0..=2 {
        assert_eq!(trivial.fixed_sset(&Subgroup::whole(&z2())).unwrap().level_size(n), 4usize.pow(n as u32));
    }
}

#[test]
fn nonequivariant_action_is_rejected() {
    // swap the two vertices of an edge but leave the edge alone
    let x = from_complex(&OrderedComplex::graph(2, &[(0, 1)]).unwrap(), 1).unwrap();
    let action = vec![vec![vec![0, 1], vec![1, 0]], vec![vec![0, 1, 2], vec![0, 1, 2]]];
    assert!(matches!(GSimplicialSet::new(x, z2(), action), Err(Error::InvalidAction(_))));
}

#[test]
fn fixed_nerve_of_swap_is_nerve_of_diagonal() {
    let swap = swap_action();
    let y = nerve_of_gmonoid(&swap, 3).unwrap();
    let whole = Subgroup::whole(swap.group());
    let fixed = y.fixed_sset(&whole).unwrap();
    assert!(fixed.validate().is_valid());
    assert!(nerve_of_monoid(&swap.fixed_monoid(&whole).unwrap(), 3).labeled_mismatch(&fixed).is_none());
    assert!(y.fixed_sset(&Subgroup::trivial(swap.group())).unwrap().same_tables(y.sset()));
}

#[test]
fn fixed_points_commute_with_nerve() {
    let report = check_fixed_commutes(&swap_action(), 3, 2).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.comparisons[1].nerve_of_fixed.to_string(), "(Z; Z/2; 0)");

    let report = check_fixed_commutes(&inversion_action(), 3, 2).unwrap();
    assert!(report.passed());
    assert_eq!(report.comparisons[1].fixed_elements, vec!["e".to_string()]);
    assert_eq!(report.comparisons[1].fixed_of_nerve.to_string(), "(Z; 0; 0)");

    let report = check_fixed_commutes(&GMonoid::trivial(FiniteMonoid::cyclic(2), klein()), 2, 1).unwrap();
    assert!(report.passed());
    assert!(check_fixed_commutes(&swap_action(), 2, 2).is_err());
}

#[test]
fn g_connectivity() {
    for (_, a) in gmonoids() {
        assert!(g_connected(&nerve_of_gmonoid(&a, 2).unwrap()).unwrap().g_connected());
    }
    let two = constant_sset(&["p", "q"], 1);
    let swapped = GSimplicialSet::new(two.clone(), z2(), vec![vec![vec![0, 1], vec![1, 0]]; 2]).unwrap();
    let report = g_connected(&swapped).unwrap();
    assert!(!report.g_connected());
    assert_eq!(report.subgroups[1].fixed_vertices, 0);

    let apart = from_complex(&OrderedComplex::graph(2, &[]).unwrap(), 1).unwrap();
    let report = g_connected(&GSimplicialSet::trivial(apart, z2())).unwrap();
    assert!(!report.g_connected());
    assert_eq!(report.subgroups[0].components, 2);
}

/// `|(G/K)^H|`, counted by multiplying whole cosets.
fn fixed_cosets(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> usize {
    let mut cosets: Vec<Vec<usize>> = (0..g.size()).map(|x| g.left_coset(x, k)).collect();
    cosets.sort();
    cosets.dedup();
    cosets
        .iter()
        .filter(|c| {
            h.elements().iter().all(|&x| {
                let mut moved: Vec<usize> = c.iter().map(|&y| g.mul(x, y)).collect();
                moved.sort_unstable();
                &moved == *c
            })
        })
        .count()
}

#[test]
fn orbit_category_of_z2() {
    let o = OrbitCategory::new(&z2());
    let counts: Vec<usize> = [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(h, k)| o.hom(h, k).len()).collect();
    assert_eq!(counts, vec![2, 1, 0, 1]);
}

#[test]
fn orbit_hom_counts_match_fixed_cosets() {
    for g in [z2(), FiniteGroup::cyclic(4), klein(), FiniteGroup::symmetric(3)] {
        let o = OrbitCategory::new(&g);
        for (hi, h) in o.subgroups().iter().enumerate() {
            for (ki, k) in o.subgroups().iter().enumerate() {
                assert_eq!(o.hom(hi, ki).len(), fixed_cosets(&g, h, k));
            }
        }
    }
}

#[test]
fn restriction_examples() {
    let swap = swap_action();
    let y = nerve_of_gmonoid(&swap, 2).unwrap();
    let o = OrbitCategory::new(swap.group());
    let identity = restriction_map(&y, &o, o.identity(0)).unwrap();
    assert_eq!(identity, SimplicialMap::identity(y.sset()));

    let inclusion = restriction_map(&y, &o, o.hom(0, 1)[0]).unwrap();
    let fixed = y.fixed_sset(&Subgroup::whole(swap.group())).unwrap();
    for n in 0..=2 {
        for x in 0..fixed.level_size(n) {
            assert_eq!(y.sset().label(n, inclusion.apply(n, x)), fixed.label(n, x));
        }
    }

    let twist = o.hom(0, 0).into_iter().find(|&a| a != o.identity(0)).unwrap();
    let r = restriction_map(&y, &o, twist).unwrap();
    for n in 0..=2 {
        for x in 0..y.sset().level_size(n) {
            assert_eq!(r.apply(n, x), y.act(n, 1, x));
        }
    }
}

#[test]
fn restriction_is_contravariant() {
    for (_, a) in gmonoids() {
        let y = nerve_of_gmonoid(&a, 2).unwrap();
        let o = OrbitCategory::new(a.group());
        let count = o.morphisms().len();
        for alpha in 0..count {
            for beta in 0..count {
                let Some(composite) = o.compose(beta, alpha) else { continue };
                let lhs = restriction_map(&y, &o, composite).unwrap();
                let rhs = restriction_map(&y, &o, alpha).unwrap().after(&restriction_map(&y, &o, beta).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn naturality_squares_commute() {
    for (name, a) in gmonoids() {
        let report = check_naturality(&a, 2).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.failures);
        assert!(report.simplices_checked > 0);
    }
    let trivial = GMonoid::trivial(FiniteMonoid::cyclic(2), FiniteGroup::symmetric(3));
    assert!(check_naturality(&trivial, 2).unwrap().passed());
    assert_eq!(check_naturality(&swap_action(), 2).unwrap().squares, 4);
    assert!(check_naturality(&swap_action(), 0).is_err());
}

#[test]
fn cube_fixed_points() {
    let cube = cube_action();
    let report = check_fixed_commutes(&cube, 3, 2).unwrap();
    assert!(report.passed());
    // the whole group fixes only the constant tuples
    assert_eq!(report.comparisons.last().unwrap().fixed_elements.len(), 2);
}

#[test]
fn hom_count_table() {
    let rows = hom_counts(&OrbitCategory::new(&z2()));
    assert_eq!(rows.iter().map(|r| r.morphisms).collect::<Vec<_>>(), vec![2, 1, 0, 1]);
    assert_eq!(rows[1].source, "{e}");
    assert_eq!(rows[1].target, "{e,a}");
    let s3 = FiniteGroup::symmetric(3);
    let subs = subgroups(&s3);
    for h in &subs {
        for k in &subs {
            assert_eq!(fixed_coset_count(&s3, h, k), fixed_cosets(&s3, h, k));
        }
    }
    assert!(hom_counts(&OrbitCategory::new(&s3)).iter().all(|r| r.morphisms == r.fixed_cosets));
}
