//! Independent helpers for the integration tests. Nothing here calls the
//! crate's own predicates, so the tests can use them as oracles.

#![allow(dead_code)]

use num_traits::Zero;
use shooting_star::search::Matching;
use shooting_star::{Drawing, EdgeId, Point, Rational};

pub fn fixture(name: &str) -> Drawing {
    let path = format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    shooting_star::format::parse_drawing(&text).unwrap()
}

fn det(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Rational {
    ax * by - ay * bx
}

/// Proper crossings of two segments, solving `a0 + t(a1-a0) = b0 + u(b1-b0)`
/// by Cramer's rule. Parallel segments never cross properly.
pub fn cramer(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> Option<Point> {
    let (dax, day) = (&a1.x - &a0.x, &a1.y - &a0.y);
    let (dbx, dby) = (&b1.x - &b0.x, &b1.y - &b0.y);
    let (rx, ry) = (&b0.x - &a0.x, &b0.y - &a0.y);
    let den = det(&dax, &day, &dbx, &dby);
    if den.is_zero() {
        return None;
    }
    let t = det(&rx, &ry, &dbx, &dby) / &den;
    let u = det(&rx, &ry, &dax, &day) / &den;
    let zero = Rational::zero();
    let one = Rational::from_integer(1.into());
    (t > zero && t < one && u > zero && u < one).then(|| Point::new(&a0.x + &t * &dax, &a0.y + &t * &day))
}

/// Every proper crossing between two distinct edges, as sorted
/// `(edge, edge, point)` triples.
pub fn naive_crossings(d: &Drawing) -> Vec<(EdgeId, EdgeId, (Rational, Rational))> {
    let mut out = Vec::new();
    let k = d.edges().len();
    for a in 0..k {
        for b in a + 1..k {
            let (pa, pb) = (&d.edge(a).polyline, &d.edge(b).polyline);
            for sa in pa.windows(2) {
                for sb in pb.windows(2) {
                    if let Some(p) = cramer(&sa[0], &sa[1], &sb[0], &sb[1]) {
                        out.push((a, b, (p.x, p.y)));
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn on_closed_segment(a: &Point, b: &Point, p: &Point) -> bool {
    let c = det(&(&b.x - &a.x), &(&b.y - &a.y), &(&p.x - &a.x), &(&p.y - &a.y));
    if !c.is_zero() {
        return false;
    }
    let within = |lo: &Rational, hi: &Rational, v: &Rational| (lo <= v && v <= hi) || (hi <= v && v <= lo);
    within(&a.x, &b.x, &p.x) && within(&a.y, &b.y, &p.y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Where {
    In,
    On,
    Out,
}

/// Even-odd membership in a closed polygon by the half-open horizontal ray
/// rule.
pub fn point_in_polygon(poly: &[Point], p: &Point) -> Where {
    let k = poly.len();
    let mut inside = false;
    for i in 0..k {
        let (a, b) = (&poly[i], &poly[(i + 1) % k]);
        if on_closed_segment(a, b, p) {
            return Where::On;
        }
        if (a.y > p.y) != (b.y > p.y) {
            let x = &a.x + (&p.y - &a.y) * (&b.x - &a.x) / (&b.y - &a.y);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    if inside {
        Where::In
    } else {
        Where::Out
    }
}

/// Position of `p` on a polyline as (segment, fraction).
fn locate_on(poly: &[Point], p: &Point) -> (usize, Rational) {
    for (i, w) in poly.windows(2).enumerate() {
        if on_closed_segment(&w[0], &w[1], p) {
            let t = if w[0].x != w[1].x {
                (&p.x - &w[0].x) / (&w[1].x - &w[0].x)
            } else {
                (&p.y - &w[0].y) / (&w[1].y - &w[0].y)
            };
            return (i, t);
        }
    }
    panic!("point is not on the polyline");
}

/// The part of `poly` from `p` to `q` (both on it), in that direction.
pub fn between(poly: &[Point], p: &Point, q: &Point) -> Vec<Point> {
    let (a, b) = (locate_on(poly, p), locate_on(poly, q));
    if a <= b {
        let mut out = vec![p.clone()];
        out.extend(poly[a.0 + 1..=b.0].iter().cloned());
        out.push(q.clone());
        out
    } else {
        let mut rev = between(poly, q, p);
        rev.reverse();
        rev
    }
}

/// Every map from `reds` to `blues`.
pub fn matchings(reds: &[usize], blues: &[usize]) -> Vec<Matching> {
    let mut out = vec![Matching::new()];
    for &r in reds {
        out = out
            .into_iter()
            .flat_map(|m| {
                blues.iter().map(move |&b| {
                    let mut m = m.clone();
                    m.insert(r, b);
                    m
                })
            })
            .collect();
    }
    out
}

/// Matchings of the non-root reds into the star blues (all but `b1`, which is
/// last) that are plane with that star and cross `root-b1`.
pub fn repairable(d: &Drawing, root: usize, blues: &[usize]) -> Vec<Matching> {
    let x = shooting_star::CrossingIndex::of(d);
    let reds: Vec<usize> = (0..d.m()).filter(|&r| r != root).collect();
    let (star, b1) = blues.split_at(blues.len() - 1);
    let s = d.edge_id(root, b1[0]);
    matchings(&reds, star)
        .into_iter()
        .filter(|m| {
            let mut edges: Vec<EdgeId> = star.iter().map(|&b| d.edge_id(root, b)).collect();
            edges.extend(m.iter().map(|(&r, &b)| d.edge_id(r, b)));
            let plane = edges.iter().enumerate().all(|(i, &a)| edges[i + 1..].iter().all(|&b| !x.crosses(a, b)));
            plane && m.iter().any(|(&r, &b)| x.crosses(s, d.edge_id(r, b)))
        })
        .collect()
}

/// Crossings between `root-b1` and the matching.
pub fn crossings_with(d: &Drawing, root: usize, b1: usize, m: &Matching) -> usize {
    let x = shooting_star::CrossingIndex::of(d);
    let s = d.edge_id(root, b1);
    m.iter().map(|(&r, &b)| x.between(s, d.edge_id(r, b)).len()).sum()
}
