//! Frozen expected values, each recomputed here by explicit path enumeration.

mod common;

use cartbc::exact::{integer, rational};
use cartbc::generators::{complete, cycle, path};
use cartbc::product::{self, ProductSpec};
use cartbc::{betweenness, generate, Algorithm, AllPairs, Family};
use common::{betweenness_by_enumeration, floyd_warshall, geodesics, wiener_by_floyd};
use num_bigint::BigUint;

#[test]
fn three_by_three_grid_values() {
    let grid = generate(&Family::Grid(3, 3)).unwrap();
    let oracle = betweenness_by_enumeration(&grid);
    // frozen from the enumeration oracle
    assert_eq!(oracle[4], rational(32, 3));
    for corner in [0, 2, 6, 8] {
        assert_eq!(oracle[corner], rational(4, 3));
    }
    for alg in [Algorithm::Definitional, Algorithm::Brandes] {
        assert_eq!(betweenness(&grid, alg).unwrap().values, oracle);
    }
    let spec = ProductSpec::new(vec![path(3), path(3)]).unwrap();
    assert_eq!(
        product::factorized_betweenness(&spec, &[1, 1]).unwrap(),
        rational(32, 3)
    );
    assert_eq!(product::factorized_betweenness(&spec, &[2, 0]).unwrap(), rational(4, 3));
}

#[test]
fn grid_pair_dependency_by_counting() {
    let grid = generate(&Family::Grid(3, 3)).unwrap();
    let dist = floyd_warshall(&grid);
    let paths = geodesics(&grid, &dist, 0, 8);
    let through = paths.iter().filter(|p| p.contains(&4)).count();
    assert_eq!((through, paths.len()), (4, 6));
    let spec = ProductSpec::new(vec![path(3), path(3)]).unwrap();
    assert_eq!(
        product::product_pair_dependency(&spec, &[0, 0], &[2, 2], &[1, 1]).unwrap(),
        rational(4, 6)
    );
}

#[test]
fn five_cycle_is_one_everywhere() {
    let c5 = cycle(5);
    assert_eq!(betweenness_by_enumeration(&c5), vec![integer(1); 5]);
}

#[test]
fn cube_geodesic_counts() {
    let q3 = generate(&Family::Hypercube(3)).unwrap();
    let dist = floyd_warshall(&q3);
    assert_eq!(geodesics(&q3, &dist, 0, 7).len(), 6);
    // through the neighbour (1,0,0) = 4
    let via = geodesics(&q3, &dist, 0, 7).iter().filter(|p| p[1] == 4).count();
    assert_eq!(via, 2);
    assert_eq!(cartbc::sigma_through(&q3, 0, 7, 4).unwrap(), BigUint::from(2u32));
}

#[test]
fn lattice_corner_counts() {
    for (k, n, expected) in [(2usize, 2usize, 6usize), (2, 3, 20), (3, 3, 1680)] {
        let factors = vec![path(n + 1); k];
        let g = product::cartesian_product(factors.clone()).unwrap().graph;
        let dist = floyd_warshall(&g);
        let count = geodesics(&g, &dist, 0, g.vertex_count() - 1).len();
        assert_eq!(count, expected);
        let spec = ProductSpec::new(factors).unwrap();
        assert_eq!(
            product::product_sigma(&spec, &vec![0; k], &vec![n; k]).unwrap(),
            BigUint::from(expected)
        );
        assert_eq!(
            cartbc::closed_forms::debruijn_count(k, n).unwrap(),
            BigUint::from(expected)
        );
    }
}

#[test]
fn wiener_values_by_floyd() {
    assert_eq!(wiener_by_floyd(&path(3)), 4);
    assert_eq!(wiener_by_floyd(&cycle(4)), 8);
    assert_eq!(wiener_by_floyd(&cycle(7)), 42);
    let grid = generate(&Family::Grid(3, 3)).unwrap();
    assert_eq!(wiener_by_floyd(&grid), 72);
    let torus = generate(&Family::Torus(4, 4)).unwrap();
    assert_eq!(wiener_by_floyd(&torus), 256);
    let t33 = generate(&Family::Torus(3, 3)).unwrap();
    assert_eq!(wiener_by_floyd(&t33), 54);
    assert_eq!(cartbc::wiener(&torus).unwrap(), BigUint::from(256u32));
}

#[test]
fn closed_forms_against_enumeration() {
    let cases: Vec<(Family, cartbc::ExactRational)> = vec![
        (Family::Hypercube(2), rational(1, 2)),
        (Family::Hypercube(3), rational(5, 2)),
        (Family::Hamming(vec![3, 4]), integer(3)),
        (Family::Hamming(vec![3, 3]), integer(2)),
        (Family::Torus(3, 4), rational(9, 2)),
        (Family::Torus(3, 3), integer(2)),
        (Family::Cycle(6), integer(2)),
    ];
    for (family, expected) in cases {
        let g = generate(&family).unwrap();
        let oracle = betweenness_by_enumeration(&g);
        assert!(oracle.iter().all(|b| b == &expected), "{family}: {oracle:?}");
    }
}

#[test]
fn bfs_distances_match_floyd() {
    for g in [
        generate(&Family::Torus(4, 5)).unwrap(),
        generate(&Family::Hamming(vec![2, 3, 3])).unwrap(),
        complete(6),
    ] {
        let fw = floyd_warshall(&g);
        let tables = AllPairs::new(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                assert_eq!(tables.dist(u, v), fw[u][v]);
                assert_eq!(tables.sigma(u, v), &BigUint::from(geodesics(&g, &fw, u, v).len()));
            }
        }
    }
}
