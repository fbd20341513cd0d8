use num_rational::Ratio;

use empty4::arith::binomial;
use empty4::{
    count_lattice_points_by_coset, ehrhart_polynomial, enumerate_empty, facet_volumes,
    facet_volumes_geometric, hstar, realize, tuple_from_simplex, tuple_width, width, width1_test,
    SimplexCoords, Tuple,
};

fn empties(max_v: u32) -> impl Iterator<Item = Tuple> {
    (1..=max_v).flat_map(|v| enumerate_empty(v).into_iter().map(|c| c.into_tuple()))
}

#[test]
fn realization_round_trips_and_facets_agree() {
    for t in empties(200).filter(|t| t.volume() % 7 == 0 || t.volume() <= 60) {
        let s = realize(&t).unwrap();
        assert_eq!(s.volume(), t.volume() as u64);
        let back = tuple_from_simplex(&s).unwrap();
        assert!(back.is_isomorphic(&t).unwrap(), "{t} -> {back}");
        assert_eq!(facet_volumes_geometric(&s), facet_volumes(&t), "{t}");
        let text = s.to_string();
        assert_eq!(text.parse::<SimplexCoords>().unwrap(), s);
    }
}

#[test]
fn unimodular_images_give_the_same_tuple() {
    let t = Tuple::new(42, &[4, 7, 15, 17, 41]).unwrap();
    let s = realize(&t).unwrap();
    // Shear and translate by an integral matrix of determinant 1.
    let a = [[1, 2, 0, -1], [0, 1, 3, 0], [0, 0, 1, 5], [0, 0, 0, 1]];
    let moved: Vec<Vec<i64>> = s
        .vertices()
        .iter()
        .rev()
        .map(|v| (0..4).map(|r| (0..4).map(|c| a[r][c] * v[c]).sum::<i64>() + 7 - r as i64).collect())
        .collect();
    let s2 = SimplexCoords::new(moved).unwrap();
    assert!(tuple_from_simplex(&s2).unwrap().is_isomorphic(&t).unwrap());
    assert_eq!(width(&s2), width(&s));
}

#[test]
fn width_one_iff_width1_test() {
    for t in empties(100) {
        let w = tuple_width(&t);
        assert_eq!(w == 1, width1_test(&t).is_some(), "{t} width {w}");
    }
}

#[test]
fn geometric_width_matches_tuple_width() {
    for t in empties(60).filter(|t| t.volume() % 5 == 0 || t.volume() > 48) {
        let s = realize(&t).unwrap();
        assert_eq!(width(&s), tuple_width(&t) as u64, "{t}");
    }
}

#[test]
fn ehrhart_hstar_and_coset_counts_agree() {
    for t in empties(50) {
        let e = ehrhart_polynomial(&t).unwrap();
        let h = hstar(&t).unwrap();
        for n in 0..=5u64 {
            let by_coset = count_lattice_points_by_coset(&t, n);
            assert_eq!(e.eval(n as i64), Ratio::from_integer(by_coset as i64), "{t} n={n}");
            // Generating function h*(x) / (1 - x)^5.
            let from_h: u128 = (0..5)
                .filter(|&i| i as u64 <= n)
                .map(|i| h.0[i] as u128 * binomial(n as i64 - i as i64 + 4, 4))
                .sum();
            assert_eq!(from_h, by_coset, "{t} n={n}");
        }
        assert_eq!(h.0.iter().sum::<u64>(), t.volume() as u64);
    }
}
