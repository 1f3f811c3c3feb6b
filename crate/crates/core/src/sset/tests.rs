use super::*;
use crate::delta::{compose, face_map, MonotoneMap};

fn triangle() -> OrderedComplex {
    OrderedComplex::graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
}

#[test]
fn standard_simplex_level_sizes() {
    assert_eq!(standard_simplex(0, 2).level_sizes(), vec![1, 1, 1]);
    assert_eq!(standard_simplex(1, 1).level_sizes(), vec![2, 3]);
    assert_eq!(standard_simplex(2, 2).level_sizes(), vec![3, 6, 10]);
}

#[test]
fn standard_simplices_validate() {
    for n in 0..=3 {
        assert!(standard_simplex(n, 4).validate().is_valid(), "Δ[{n}]");
    }
}

#[test]
fn planted_face_defect_is_reported_once() {
    let x = standard_simplex(2, 2);
    let top = x.labels(2).iter().position(|l| l == "[0,1,2]").unwrap();
    let edge01 = x.labels(1).iter().position(|l| l == "[0,1]").unwrap();
    let mut faces: Vec<Vec<Vec<usize>>> = (1..=2).map(|n| (0..=n).map(|i| x.face_table(n, i).to_vec()).collect()).collect();
    // d_1 of the top simplex should be [0,2]; point it at [0,1] instead
    faces[1][1][top] = edge01;
    let degeneracies = (0..2).map(|n| (0..=n).map(|i| x.degeneracy_table(n, i).to_vec()).collect()).collect();
    let broken = SimplicialSet::from_tables(2, (0..=2).map(|n| x.labels(n).to_vec()).collect(), faces, degeneracies).unwrap();
    let report = broken.validate();
    assert_eq!(report.violations.len(), 1, "{:?}", report.violations);
    let v = &report.violations[0];
    assert_eq!((v.kind, v.level, v.i, v.j, v.simplex), (IdentityKind::FaceFace, 2, 0, 1, top));
}

#[test]
fn malformed_tables_are_rejected() {
    assert!(SimplicialSet::from_unlabeled_tables(&[1, 1], vec![vec![vec![0]]], vec![vec![vec![0]]]).is_err());
    assert!(SimplicialSet::from_unlabeled_tables(&[1, 1], vec![vec![vec![0], vec![3]]], vec![vec![vec![0]]]).is_err());
    assert!(SimplicialSet::from_unlabeled_tables(&[1, 1], vec![vec![vec![0], vec![0]]], vec![]).is_err());
}

#[test]
fn non_injective_degeneracy_is_reported() {
    // two vertices, one edge, both vertices degenerate onto it
    let x = SimplicialSet::from_unlabeled_tables(&[2, 1], vec![vec![vec![0], vec![0]]], vec![vec![vec![0, 0]]]).unwrap();
    let report = x.validate();
    assert!(report.violations.iter().any(|v| v.kind == IdentityKind::DegeneracyNotInjective));
}

#[test]
fn constant_examples() {
    let point = constant_sset(&["*"], 3);
    assert_eq!(point.level_sizes(), vec![1; 4]);
    let empty = constant_sset::<&str>(&[], 2);
    assert_eq!(empty.level_sizes(), vec![0, 0, 0]);
    assert!(empty.validate().is_valid());
    let two = constant_sset(&["a", "b"], 2);
    assert!(two.validate().is_valid());
    assert!(two.nondegenerate_basis(1).unwrap().is_empty());
    assert_eq!(two.nondegenerate_basis(0).unwrap(), vec![0, 1]);
}

#[test]
fn induced_map_examples() {
    let x = standard_simplex(2, 2);
    let top = x.labels(2).iter().position(|l| l == "[0,1,2]").unwrap();
    assert_eq!(x.induced_map(&MonotoneMap::identity(2), top).unwrap(), top);
    let d0 = face_map(2, 0).unwrap();
    assert_eq!(x.induced_map(&d0, top).unwrap(), x.face(2, 0, top));
    let f = MonotoneMap::new(vec![0, 0, 2], 3).unwrap();
    assert_eq!(x.induced_map(&f, top).unwrap(), x.degeneracy(1, 0, x.face(2, 1, top)));
    assert_eq!(x.label(2, x.induced_map(&f, top).unwrap()), "[0,0,2]");
    let too_high = MonotoneMap::identity(3);
    assert!(matches!(x.induced_map(&too_high, 0), Err(Error::CutoffTooSmall { .. })));
}

#[test]
fn induced_map_is_contravariant_exhaustive() {
    let x = standard_simplex(2, 4);
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                for g in MonotoneMap::all(a, b) {
                    for f in MonotoneMap::all(b, c) {
                        let fg = compose(&f, &g).unwrap();
                        for s in 0..x.level_size(c) {
                            let lhs = x.induced_map(&fg, s).unwrap();
                            let rhs = x.induced_map(&g, x.induced_map(&f, s).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn nondegenerate_basis_of_interval() {
    let x = standard_simplex(1, 1);
    let basis = x.nondegenerate_basis(1).unwrap();
    assert_eq!(basis.len(), 1);
    assert_eq!(x.label(1, basis[0]), "[0,1]");
    assert!(x.nondegenerate_basis(2).is_err());
}

#[test]
fn eilenberg_zilber_uniqueness() {
    // each simplex is σ^* y for exactly one nondegenerate y and surjection σ
    for x in [standard_simplex(2, 4), from_complex(&triangle(), 4).unwrap()] {
        for n in 0..=4 {
            let mut hits = vec![0usize; x.level_size(n)];
            for k in 0..=n {
                for y in x.nondegenerate_basis(k).unwrap() {
                    for sigma in MonotoneMap::all(n, k).into_iter().filter(MonotoneMap::is_surjective) {
                        hits[x.induced_map(&sigma, y).unwrap()] += 1;
                    }
                }
            }
            assert!(hits.iter().all(|&h| h == 1), "level {n}: {hits:?}");
            for s in 0..x.level_size(n) {
                let (k, y, sigma) = x.ez_decomposition(n, s);
                assert!(!x.is_degenerate(k, y));
                assert_eq!(x.induced_map(&sigma, y).unwrap(), s);
            }
        }
    }
}

#[test]
fn product_with_point_is_unit() {
    let x = standard_simplex(1, 3);
    let p = product(&x, &constant_sset(&["*"], 3)).unwrap();
    assert!(p.same_tables(&x));
    assert!(product(&x, &constant_sset(&["*"], 2)).is_err());
}

#[test]
fn product_of_simplices_validates() {
    let p = product(&standard_simplex(1, 3), &standard_simplex(1, 3)).unwrap();
    assert!(p.validate().is_valid());
    // Δ[1] × Δ[1] is a square: two nondegenerate 2-simplices
    assert_eq!(p.nondegenerate_basis(2).unwrap().len(), 2);
    assert_eq!(p.nondegenerate_basis(3).unwrap().len(), 0);
}

#[test]
fn complex_examples() {
    let v = OrderedComplex::new(vec!["v".into()], vec![]).unwrap();
    assert!(from_complex(&v, 3).unwrap().same_tables(&constant_sset(&["v"], 3)));

    let t = from_complex(&triangle(), 3).unwrap();
    assert!(t.validate().is_valid());
    assert_eq!(t.nondegenerate_basis(1).unwrap().len(), 3);
    assert_eq!(t.component_count(), 1);
}

#[test]
fn complex_input_errors() {
    let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
    assert!(matches!(OrderedComplex::new(names.clone(), vec![vec![1, 0]]), Err(Error::InvalidComplex(_))));
    assert!(matches!(OrderedComplex::new(names.clone(), vec![vec![0, 1, 2]]), Err(Error::InvalidComplex(_))));
    assert!(OrderedComplex::new(names.clone(), vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1, 2]]).is_ok());
    assert!(matches!(
        OrderedComplex::from_names(names, &[vec!["a".into(), "z".into()]]),
        Err(Error::UnknownName(_))
    ));
}

#[test]
fn subobject_must_be_closed() {
    let x = standard_simplex(1, 1);
    // keep only the edge [0,1] without its vertices
    let keep: Vec<Vec<bool>> = (0..=1).map(|n| x.labels(n).iter().map(|l| l == "[0,1]").collect()).collect();
    assert!(x.subobject(&keep).is_err());
    let all: Vec<Vec<bool>> = (0..=1).map(|n| vec![true; x.level_size(n)]).collect();
    assert!(x.subobject(&all).unwrap().same_tables(&x));
}

#[test]
fn bisimplicial_external_product_and_diagonal() {
    let a = standard_simplex(1, 3);
    let b = from_complex(&triangle(), 3).unwrap();
    let bi = BisimplicialSet::external_product(&a, &b);
    assert!(bi.validate().is_empty());
    let diag = bi.diagonal().unwrap();
    assert!(diag.labeled_mismatch(&product(&a, &b).unwrap()).is_none());
}

#[test]
fn diagonal_of_constant_direction() {
    let x = standard_simplex(2, 3);
    let v = BisimplicialSet::vertically_constant(&x, 3);
    assert!(v.validate().is_empty());
    assert!(v.diagonal().unwrap().same_tables(&x));
    let h = BisimplicialSet::horizontally_constant(&x, 3);
    assert!(h.validate().is_empty());
    assert!(h.diagonal().unwrap().same_tables(&x));
    let lopsided = BisimplicialSet::vertically_constant(&x, 2);
    assert!(matches!(lopsided.diagonal(), Err(Error::CutoffMismatch(3, 2))));
}

#[test]
fn bisimplicial_commutation_defect_is_reported() {
    // two different column structures on the same rows
    let x = constant_sset(&["a", "b"], 1);
    let swap = SimplicialSet::from_tables(
        1,
        vec![vec!["a".into(), "b".into()], vec!["a".into(), "b".into()]],
        vec![vec![vec![1, 0], vec![0, 1]]],
        vec![vec![vec![0, 1]]],
    )
    .unwrap();
    let rows = vec![x.clone(), x.clone()];
    let columns = vec![swap, x];
    let bi = BisimplicialSet::from_rows_and_columns(rows, columns).unwrap();
    assert!(!bi.validate().is_empty());
}
