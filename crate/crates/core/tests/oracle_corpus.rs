mod common;

use std::collections::HashSet;

use common::{matchings, naive_crossings};
use proptest::prelude::*;
use shooting_star::corpus::*;
use shooting_star::format::write_drawing;
use shooting_star::geom::orient;
use shooting_star::oracle::*;
use shooting_star::validate::{validate, Mode, Rule};
use shooting_star::*;

/// Edge pairs that cross, from the Cramer oracle.
fn crossing_pairs(d: &Drawing) -> HashSet<(EdgeId, EdgeId)> {
    naive_crossings(d).into_iter().map(|(a, b, _)| (a, b)).collect()
}

fn plane(pairs: &HashSet<(EdgeId, EdgeId)>, edges: &[EdgeId]) -> bool {
    edges.iter().all(|&a| edges.iter().all(|&b| !pairs.contains(&(a, b))))
}

/// Straight edges with every other vertex strictly on one side.
fn hull_edges(d: &Drawing) -> Vec<EdgeId> {
    let pts: Vec<Point> = d.vertices().map(|(_, v)| v.position.clone()).collect();
    (0..d.edges().len())
        .filter(|&e| {
            let (a, b) = (&d.edge(e).polyline[0], d.edge(e).polyline.last().unwrap());
            let sides: Vec<_> = pts.iter().filter(|p| p != &a && p != &b).map(|p| orient(a, b, p)).collect();
            sides.iter().all(|s| s.is_gt()) || sides.iter().all(|s| s.is_lt())
        })
        .collect()
}

#[test]
fn single_blue_has_one_shooting_star() {
    let d = gen_convex(3, 1);
    for r in 0..3 {
        assert_eq!(enumerate_shooting_stars(&d, VertexRef::red(r), DEFAULT_BUDGET).unwrap().count, 1);
    }
    let k21 = gen_convex(2, 1);
    assert_eq!(enumerate_shooting_stars(&k21, VertexRef::blue(0), DEFAULT_BUDGET).unwrap().count, 1);
}

#[test]
fn convex_examples() {
    let k22 = gen_convex(2, 2);
    for (v, _) in k22.vertices() {
        assert!(enumerate_shooting_stars(&k22, v, DEFAULT_BUDGET).unwrap().count >= 1);
    }
    assert_eq!(max_plane_subdrawing(&k22, DEFAULT_BUDGET).unwrap().len(), 3);

    let k33 = gen_convex(3, 3);
    assert!(validate_simple(&k33).ok);
    assert_eq!(plane_spanning_tree(&k33, DEFAULT_BUDGET).unwrap().unwrap().len(), 5);
    assert_eq!(max_plane_subdrawing(&k33, DEFAULT_BUDGET).unwrap().len(), 5);

    let minus = gen_convex_minus_edge(3, 3).unwrap();
    assert_eq!(max_plane_subdrawing(&minus, DEFAULT_BUDGET).unwrap().len(), 4);
    assert_eq!(plane_spanning_tree(&gen_convex_minus_edge(2, 2).unwrap(), DEFAULT_BUDGET).unwrap(), None);
    assert_eq!(plane_spanning_tree(&minus, DEFAULT_BUDGET).unwrap(), None);
}

#[test]
fn convex_hull_holds_exactly_two_edges() {
    let single = gen_convex(1, 1);
    assert_eq!(single.edges().len(), 1);
    assert!(CrossingIndex::of(&single).is_empty());
    for m in 2..=5 {
        for n in 2..=5 {
            let d = gen_convex(m, n);
            let mut hull = hull_edges(&d);
            hull.sort_unstable();
            let mut expected = convex_hull_edges(&d).to_vec();
            expected.sort_unstable();
            assert_eq!(hull, expected, "{m}x{n}");
        }
    }
}

#[test]
fn minus_edge_drops_one_hull_edge() {
    let d = gen_convex_minus_edge(2, 2).unwrap();
    assert_eq!(d.edges().len(), 3);
    assert_eq!(hull_edges(&d).len(), 1);
}

#[test]
fn double_crossing_fixture() {
    let d = fixture_double_crossing();
    let report = validate_simple(&d);
    assert!(report.has(Rule::PairCrossesMoreThanOnce), "{report}");
    assert!(!report.has(Rule::SelfIntersection));
    assert!(!report.has(Rule::IncidentEdgesCross));
    assert!(validate(&d, Mode::StarSimple).ok);
    assert_eq!(plane_spanning_tree(&d, DEFAULT_BUDGET).unwrap(), None);
}

#[test]
fn refusals_are_explicit() {
    let d = gen_convex(5, 5);
    assert!(matches!(enumerate_shooting_stars(&d, VertexRef::red(0), 100), Err(Error::BudgetExceeded(_))));
    assert!(matches!(max_plane_subdrawing(&d, 10), Err(Error::BudgetExceeded(_))));
}

#[test]
fn generators_are_byte_deterministic() {
    for family in [Family::Convex, Family::ConvexMinusEdge, Family::RandomStraightline, Family::RandomMonotone] {
        for seed in [0, 7, 123] {
            let spec = GenSpec { family, m: 4, n: 3, seed };
            let a = write_drawing(&spec.generate().unwrap());
            let b = write_drawing(&spec.generate().unwrap());
            assert_eq!(a, b);
        }
    }
    let a = write_drawing(&gen_random_straightline(4, 4, 7).unwrap());
    assert_ne!(a, write_drawing(&gen_random_straightline(4, 4, 8).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn enumeration_matches_brute_force(poly: bool, m in 1usize..=3, n in 1usize..=3, seed in 0u64..10_000) {
        let d = if poly { gen_random_polyline(m, n, seed) } else { gen_random_straightline(m, n, seed) }.unwrap();
        let pairs = crossing_pairs(&d);
        for r in 0..m {
            let found = enumerate_shooting_stars(&d, VertexRef::red(r), DEFAULT_BUDGET).unwrap();
            let others: Vec<usize> = (0..m).filter(|&w| w != r).collect();
            let star: Vec<EdgeId> = (0..n).map(|b| d.edge_id(r, b)).collect();
            let mut expected: Vec<Vec<(usize, usize)>> = matchings(&others, &(0..n).collect::<Vec<_>>())
                .into_iter()
                .filter(|mm| {
                    let mut edges = star.clone();
                    edges.extend(mm.iter().map(|(&w, &b)| d.edge_id(w, b)));
                    plane(&pairs, &edges)
                })
                .map(|mm| mm.into_iter().collect())
                .collect();
            expected.sort();
            let mut got: Vec<Vec<(usize, usize)>> =
                found.witnesses.iter().map(|w| w.matching.iter().map(|(&a, &b)| (a, b)).collect()).collect();
            got.sort();
            prop_assert_eq!(found.count, got.len());
            prop_assert_eq!(got, expected);
            prop_assert!(found.count >= 1);
        }
    }

    #[test]
    fn max_plane_matches_subset_search(poly: bool, m in 1usize..=3, n in 1usize..=3, seed in 0u64..10_000) {
        let d = if poly { gen_random_polyline(m, n, seed) } else { gen_random_straightline(m, n, seed) }.unwrap();
        let pairs = crossing_pairs(&d);
        let k = d.edges().len();
        let best = (0u32..1 << k)
            .filter(|mask| plane(&pairs, &(0..k).filter(|e| mask >> e & 1 == 1).collect::<Vec<_>>()))
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap();
        let got = max_plane_subdrawing(&d, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(got.len(), best);
        prop_assert!(plane(&pairs, &got));
    }

    #[test]
    fn a_shooting_star_means_a_spanning_tree(poly: bool, m in 1usize..=4, n in 1usize..=4, seed in 0u64..10_000) {
        let d = if poly { gen_random_polyline(m, n, seed) } else { gen_random_straightline(m, n, seed) }.unwrap();
        let tree = plane_spanning_tree(&d, DEFAULT_BUDGET).unwrap().unwrap();
        prop_assert_eq!(tree.len(), m + n - 1);
        prop_assert!(verify_plane(&d, &tree).is_none());
    }
}
