use proptest::prelude::*;
use shooting_star::corpus::{gen_random_monotone, gen_random_polyline, gen_random_straightline};
use shooting_star::geom::ratio;
use shooting_star::monotone::*;
use shooting_star::oracle::{enumerate_shooting_stars, DEFAULT_BUDGET};
use shooting_star::wedge::{find_shooting_star_straightline, wedge_assignment};
use shooting_star::*;

fn seg_drawing(reds: &[(i64, i64)], blues: &[(i64, i64)]) -> Drawing {
    let p = |v: &[(i64, i64)]| v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
    Drawing::straight_line(p(reds), p(blues)).unwrap()
}

fn leftmost(d: &Drawing) -> VertexRef {
    d.vertices().min_by(|a, b| a.1.position.x.cmp(&b.1.position.x)).unwrap().0
}

/// Height of a polyline above `x`, if it spans `x`.
fn height(poly: &[Point], x: &Rational) -> Option<Rational> {
    poly.windows(2).find(|w| (&w[0].x <= x && x <= &w[1].x) || (&w[1].x <= x && x <= &w[0].x)).map(|w| {
        if w[0].x == w[1].x {
            w[0].y.clone()
        } else {
            &w[0].y + (x - &w[0].x) * (&w[1].y - &w[0].y) / (&w[1].x - &w[0].x)
        }
    })
}

/// Counterclockwise angle of `p - o` in `[0, 2pi)`.
fn angle(o: &Point, p: &Point) -> f64 {
    let (ox, oy) = o.to_f64();
    let (px, py) = p.to_f64();
    (py - oy).atan2(px - ox).rem_euclid(2.0 * std::f64::consts::PI)
}

/// The vertex on the nearer bounding ray of the wedge around `root`
/// containing `w`, by floating-point angles.
fn wedge_pick_by_angles(d: &Drawing, root: VertexRef, w: VertexRef) -> usize {
    let o = &d.vertex(root).position;
    let other = root.color.other();
    let k = match other {
        Color::Red => d.m(),
        Color::Blue => d.n(),
    };
    let rays: Vec<(f64, usize)> =
        (0..k).map(|i| (angle(o, &d.vertex(VertexRef { color: other, index: i }).position), i)).collect();
    let a = angle(o, &d.vertex(w).position);
    let tau = 2.0 * std::f64::consts::PI;
    // nearest ray clockwise and counterclockwise from w
    let cw = rays.iter().min_by(|x, y| (a - x.0).rem_euclid(tau).total_cmp(&(a - y.0).rem_euclid(tau))).unwrap();
    let ccw = rays.iter().min_by(|x, y| (x.0 - a).rem_euclid(tau).total_cmp(&(y.0 - a).rem_euclid(tau))).unwrap();
    if (a - cw.0).rem_euclid(tau) < (ccw.0 - a).rem_euclid(tau) {
        cw.1
    } else {
        ccw.1
    }
}

#[test]
fn monotone_case_examples() {
    // the case (i) example is checked at pick level; its vertices are collinear
    type Case<'a> = (&'a [(i64, i64)], &'a [(i64, i64)], MonotoneCase, usize);
    let cases: [Case; 3] = [
        (&[(0, 0), (3, 0)], &[(2, 2), (4, 4)], MonotoneCase::One, 1),
        (&[(0, 0), (1, 0)], &[(2, 2), (3, -3)], MonotoneCase::Both, 0),
        (&[(0, 0), (4, 0)], &[(1, 1), (2, -1)], MonotoneCase::Neither, 1),
    ];
    for (reds, blues, case, bw) in cases {
        let f = MonotoneFrame::new(&seg_drawing(reds, blues)).unwrap();
        let pick = monotone_pick(&f, 1).unwrap();
        assert_eq!((pick.case, pick.b_w), (case, bw));
        assert_eq!(monotone_pick_combinatorial(&f, 1), bw);
    }
    let d = seg_drawing(&[(0, 0), (1, 0)], &[(2, 2), (3, -3)]);
    let star = find_shooting_star_monotone(&d).unwrap();
    assert_eq!(star.matching, [(1, 0)].into());
}

#[test]
fn monotone_preconditions_are_reported() {
    let d = seg_drawing(&[(0, 0), (2, 1)], &[(2, 3), (5, -1)]);
    assert!(matches!(find_shooting_star_monotone(&d), Err(Error::NotMonotone(_))));
    let bent = (0..50).map(|s| gen_random_polyline(3, 3, s).unwrap()).find(|d| {
        shooting_star::validate::check_monotone(d).is_err()
    });
    assert!(matches!(find_shooting_star_monotone(&bent.unwrap()), Err(Error::NotMonotone(_))));
}

#[test]
fn wedge_examples() {
    let d = Drawing::straight_line(
        vec![Point::from_ints(0, 0), Point::new(ratio(2, 5), ratio(1, 10))],
        vec![Point::from_ints(1, 0), Point::from_ints(-1, 0)],
    )
    .unwrap();
    let star = find_shooting_star_straightline(&d, VertexRef::red(0)).unwrap();
    assert_eq!(star.matching, [(1, 0)].into());

    let single = seg_drawing(&[(0, 0), (3, 1), (-2, 5)], &[(1, 4)]);
    for r in 0..3 {
        let star = find_shooting_star_straightline(&single, VertexRef::red(r)).unwrap();
        assert_eq!(star.edge_pairs().len(), 3);
    }
    let bent = gen_random_polyline(2, 2, 1).unwrap();
    assert!(matches!(find_shooting_star_straightline(&bent, VertexRef::red(0)), Err(Error::NotStraight(_))));
}

fn check_monotone_instance(d: &Drawing) -> Result<(), TestCaseError> {
    let report = monotone_report(d).unwrap();
    let f = MonotoneFrame::new(d).unwrap();
    prop_assert_eq!(report.star.root, leftmost(d));
    certify(d, &report.star).unwrap();
    let fd = &f.drawing;
    let x = CrossingIndex::of(fd);
    let t: Vec<EdgeId> = (0..fd.n()).map(|b| fd.edge_id(f.root, b)).collect();
    for pick in &report.picks {
        prop_assert_eq!(pick.b_w, monotone_pick_combinatorial(&f, pick.w));
        let e = fd.edge_id(pick.w, pick.b_w);
        prop_assert!(t.iter().all(|&s| !x.crosses(e, s)));
        prop_assert!(pick.b_w == pick.b_i || Some(pick.b_w) == pick.b_j);
        match pick.case {
            MonotoneCase::One => prop_assert!(pick.up.is_some() != pick.down.is_some()),
            MonotoneCase::Both => prop_assert!(pick.up.is_some() && pick.down.is_some()),
            MonotoneCase::Neither => prop_assert!(pick.up.is_none() && pick.down.is_none()),
        }
        if let (MonotoneCase::Both, Some(bj)) = (pick.case, pick.b_j) {
            // w-b_w stays between r-b_i above and r-b_j below
            let above = &fd.edge(fd.edge_id(f.root, pick.b_i)).polyline;
            let below = &fd.edge(fd.edge_id(f.root, bj)).polyline;
            let path = &fd.edge(e).polyline;
            for seg in path.windows(2) {
                for k in 1..7 {
                    let p = Point::lerp(&seg[0], &seg[1], &ratio(k, 7));
                    let (hi, lo) = (height(above, &p.x).unwrap(), height(below, &p.x).unwrap());
                    prop_assert!(lo < p.y && p.y < hi);
                }
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn monotone_on_straight_lines(m in 1usize..=6, n in 1usize..=6, seed in 0u64..10_000) {
        check_monotone_instance(&gen_random_straightline(m, n, seed).unwrap())?;
    }

    #[test]
    fn monotone_on_bent_monotone_drawings(m in 1usize..=5, n in 1usize..=5, seed in 0u64..10_000) {
        check_monotone_instance(&gen_random_monotone(m, n, seed).unwrap())?;
    }

    #[test]
    fn wedge_picks_match_angles(m in 1usize..=6, n in 1usize..=6, seed in 0u64..10_000) {
        let d = gen_random_straightline(m, n, seed).unwrap();
        for (root, _) in d.vertices() {
            let a = wedge_assignment(&d, root).unwrap();
            for pick in &a.picks {
                let w = VertexRef { color: root.color, index: pick.w };
                prop_assert_eq!(pick.chosen, wedge_pick_by_angles(&d, root, w));
            }
            certify(&d, &find_shooting_star_straightline(&d, root).unwrap()).unwrap();
        }
    }

    #[test]
    fn all_constructions_are_shooting_stars(m in 1usize..=4, n in 1usize..=4, seed in 0u64..10_000) {
        let d = gen_random_straightline(m, n, seed).unwrap();
        let root = leftmost(&d);
        let all = enumerate_shooting_stars(&d, root, DEFAULT_BUDGET).unwrap();
        let stars = [
            find_shooting_star_monotone(&d).unwrap(),
            find_shooting_star_straightline(&d, root).unwrap(),
            find_shooting_star(&d, root).unwrap(),
        ];
        for star in stars {
            prop_assert_eq!(star.root, root);
            prop_assert!(all.witnesses.iter().any(|w| w.key() == star.key()));
        }
    }
}
