mod common;

use common::{moore_homology, random_bisset, random_expansion, random_point, random_reduction, random_sset, rng, sums_to_one, table};
use equimon::equivariant::nerve_of_gmonoid;
use equimon::fixtures::gmonoids;
use equimon::homology::{ez_check, homology};
use equimon::realize::{act_point, act_raw, normalize_point};
use equimon::sset::{product, BisimplicialSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_simplicial_sets_validate(seed in any::<u64>()) {
        let x = random_sset(&mut rng(seed), 4, 3);
        prop_assert!(x.validate().is_valid());
        for n in 0..=3 {
            for s in 0..x.level_size(n) {
                let (k, y, sigma) = x.ez_decomposition(n, s);
                prop_assert!(!x.is_degenerate(k, y));
                prop_assert_eq!(x.induced_map(&sigma, y).unwrap(), s);
            }
        }
    }

    #[test]
    fn normalized_and_unnormalized_chains_agree(seed in any::<u64>()) {
        let x = random_sset(&mut rng(seed), 4, 3);
        let h = homology(&x, 2).unwrap();
        prop_assert_eq!(table(&h), moore_homology(&x, 2));
        prop_assert_eq!(h.groups[0].betti, x.component_count());
    }

    #[test]
    fn diagonal_of_external_product_is_product(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (x, y) = (random_sset(&mut r, 3, 3), random_sset(&mut r, 3, 3));
        let diagonal = BisimplicialSet::external_product(&x, &y).diagonal().unwrap();
        prop_assert!(diagonal.same_tables(&product(&x, &y).unwrap()));
    }

    #[test]
    fn eilenberg_zilber_on_random_bisimplicial_sets(seed in any::<u64>()) {
        let b = random_bisset(&mut rng(seed), 4, 3);
        prop_assert!(b.validate().is_empty());
        let report = ez_check(&b, 2).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn normal_forms_are_confluent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_sset(&mut r, 4, 3);
        let p = random_point(&mut r, &x);
        let normal = normalize_point(&x, &p).unwrap();
        prop_assert!(normal.is_canonical(&x));
        prop_assert_eq!(&normalize_point(&x, &normal).unwrap(), &normal);
        let mut q = p.clone();
        for _ in 0..3 {
            if let Some(next) = random_expansion(&mut r, &x, &q) {
                prop_assert!(sums_to_one(&next));
                q = next;
            }
        }
        prop_assert_eq!(&random_reduction(&mut r, &x, &q), &normal);
        prop_assert_eq!(&normalize_point(&x, &q).unwrap(), &normal);
    }

    #[test]
    fn action_commutes_with_normalization(seed in any::<u64>()) {
        let mut r = rng(seed);
        let fixtures = gmonoids();
        let (_, a) = &fixtures[(seed % 3) as usize];
        let y = nerve_of_gmonoid(a, 2).unwrap();
        let p = random_point(&mut r, y.sset());
        for g in 0..a.group().size() {
            let lhs = act_point(&y, g, &normalize_point(y.sset(), &p).unwrap()).unwrap();
            let rhs = normalize_point(y.sset(), &act_raw(&y, g, &p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn random_inputs_are_varied() {
    let mut r = rng(11);
    let (mut triangles, mut loops, mut split) = (0, 0, 0);
    for _ in 0..200 {
        let x = random_sset(&mut r, 4, 3);
        triangles += usize::from(!x.nondegenerate_basis(2).unwrap().is_empty());
        let h = homology(&x, 2).unwrap();
        loops += usize::from(h.groups[1].betti > 0);
        split += usize::from(h.groups[0].betti > 1);
    }
    assert!(triangles > 20 && loops > 20 && split > 20, "{triangles} {loops} {split}");
}
