//! Instance generators and the committed fixtures.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::drawing::{Color, Drawing, Edge, EdgeId, Vertex};
use crate::error::{Error, Result};
use crate::format::parse_drawing;
use crate::geom::{orient, ratio, Point, Rational};
use crate::validate::validate_simple;
use crate::wedge::wedge_assignment;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Convex,
    ConvexMinusEdge,
    RandomStraightline,
    RandomMonotone,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    #[serde(default)]
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Drawing> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::Malformed("both classes need at least one vertex".into()));
        }
        match self.family {
            Family::Convex => Ok(gen_convex(self.m, self.n)),
            Family::ConvexMinusEdge => gen_convex_minus_edge(self.m, self.n),
            Family::RandomStraightline => gen_random_straightline(self.m, self.n, self.seed),
            Family::RandomMonotone => gen_random_monotone(self.m, self.n, self.seed),
        }
    }
}

fn ids(prefix: &str, count: usize) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |i| format!("{prefix}{i}"))
}

fn build(reds: &[Point], blues: &[Point], polys: Vec<Vec<Point>>) -> Result<Drawing> {
    let vertices = |pts: &[Point], color, prefix| -> Vec<Vertex> {
        ids(prefix, pts.len())
            .zip(pts)
            .map(|(id, p)| Vertex { id, color, position: p.clone() })
            .collect()
    };
    let n = blues.len();
    let edges = polys
        .into_iter()
        .enumerate()
        .map(|(i, polyline)| Edge { red: i / n, blue: i % n, polyline })
        .collect();
    Drawing::new(vertices(reds, Color::Red, "r"), vertices(blues, Color::Blue, "b"), edges, false)
}

/// Point on the unit circle from the tangent half-angle parametrization.
fn circle_point(t: &Rational) -> Point {
    let t2 = t * t;
    let den = Rational::one() + &t2;
    Point::new((Rational::one() - &t2) / &den, (t + t) / den)
}

/// `m + n` points exactly on the unit circle at approximately equal angles,
/// reds first and contiguous, counterclockwise.
pub fn gen_convex(m: usize, n: usize) -> Drawing {
    let total = m + n;
    let points: Vec<Point> = (0..total)
        .map(|k| {
            let theta = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / total as f64;
            let t = ((theta / 2.0).tan() * 10_000.0).round() as i64;
            circle_point(&ratio(t, 10_000))
        })
        .collect();
    Drawing::straight_line(points[..m].to_vec(), points[m..].to_vec()).expect("distinct points on a circle")
}

/// The two drawn edges on the convex hull of [`gen_convex`]:
/// `r_m-b_1` and `r_1-b_n`.
pub fn convex_hull_edges(d: &Drawing) -> [EdgeId; 2] {
    [d.edge_id(d.m() - 1, 0), d.edge_id(0, d.n() - 1)]
}

/// [`gen_convex`] with the hull edge `r_m-b_1` removed.
pub fn gen_convex_minus_edge(m: usize, n: usize) -> Result<Drawing> {
    if m + n < 3 {
        return Err(Error::Malformed("removing an edge needs m + n >= 3".into()));
    }
    let d = gen_convex(m, n);
    let [hull, _] = convex_hull_edges(&d);
    Ok(d.without_edges(&[hull]))
}

const ATTEMPTS: usize = 10_000;

fn coordinate_range(m: usize, n: usize) -> i64 {
    4 * (m + n) as i64 + 8
}

/// Integer points with pairwise distinct x-coordinates, no three collinear.
fn random_points(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Result<(Vec<Point>, Vec<Point>)> {
    let range = coordinate_range(m, n);
    for _ in 0..ATTEMPTS {
        let pts: Vec<Point> =
            (0..m + n).map(|_| Point::from_ints(rng.gen_range(0..range), rng.gen_range(0..range))).collect();
        let mut xs: Vec<_> = pts.iter().map(|p| &p.x).collect();
        xs.sort();
        if xs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        if has_collinear_triple(&pts) {
            continue;
        }
        return Ok((pts[..m].to_vec(), pts[m..].to_vec()));
    }
    Err(Error::BudgetExceeded(format!("no point set in general position after {ATTEMPTS} draws")))
}

fn has_collinear_triple(pts: &[Point]) -> bool {
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                if orient(&pts[i], &pts[j], &pts[k]).is_eq() {
                    return true;
                }
            }
        }
    }
    false
}

/// No vertex on a ray or an angle bisector of the wedge construction, for any root.
fn wedge_generic(d: &Drawing) -> bool {
    d.vertices().all(|(v, _)| wedge_assignment(d, v).is_ok())
}

/// Random straight-line drawing in general position: distinct x-coordinates,
/// no three collinear vertices, no three edges through a point, no vertex on
/// a wedge ray or bisector. Deterministic per seed.
pub fn gen_random_straightline(m: usize, n: usize, seed: u64) -> Result<Drawing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let (reds, blues) = random_points(&mut rng, m, n)?;
        let d = Drawing::straight_line(reds, blues)?;
        if validate_simple(&d).ok && wedge_generic(&d) {
            return Ok(d);
        }
    }
    Err(Error::BudgetExceeded(format!("no simple straight-line drawing after {ATTEMPTS} draws")))
}

/// Random drawing whose edges are x-monotone with at most one bend each.
/// Bends sit at half-integer x so no vertical line through a vertex meets one.
pub fn gen_random_monotone(m: usize, n: usize, seed: u64) -> Result<Drawing> {
    bent_drawing(m, n, seed, |rng, a, b, range| {
        if rng.gen_bool(0.5) {
            return vec![a.clone(), b.clone()];
        }
        let (lo, hi) = if a.x < b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
        let lo = lo.to_integer().to_i64().expect("small coordinates");
        let hi = hi.to_integer().to_i64().expect("small coordinates");
        let bx = ratio(2 * rng.gen_range(lo..hi) + 1, 2);
        let by = ratio(rng.gen_range(-range / 2..range + range / 2), 1);
        vec![a.clone(), Point::new(bx, by), b.clone()]
    })
}

/// Random drawing with one or two free bends per edge; edges need not be
/// monotone. Used for stress tests of the general search.
pub fn gen_random_polyline(m: usize, n: usize, seed: u64) -> Result<Drawing> {
    bent_drawing(m, n, seed, |rng, a, b, range| {
        let mut poly = vec![a.clone()];
        for _ in 0..rng.gen_range(1..=2) {
            poly.push(Point::new(
                ratio(2 * rng.gen_range(-range / 2..range + range / 2) + 1, 2),
                ratio(2 * rng.gen_range(-range / 2..range + range / 2) + 1, 2),
            ));
        }
        poly.push(b.clone());
        poly
    })
}

type BendFn = fn(&mut ChaCha8Rng, &Point, &Point, i64) -> Vec<Point>;

/// Draws bent edges and resamples only the edges named in validation
/// failures. An edge that keeps failing is drawn straight.
fn bent_drawing(m: usize, n: usize, seed: u64, bend: BendFn) -> Result<Drawing> {
    const RETRIES_PER_EDGE: usize = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = coordinate_range(m, n);
    for _ in 0..ATTEMPTS / 100 {
        let (reds, blues) = random_points(&mut rng, m, n)?;
        let ends = |i: usize| (&reds[i / n], &blues[i % n]);
        let mut polys: Vec<Vec<Point>> = (0..m * n)
            .map(|i| {
                let (a, b) = ends(i);
                bend(&mut rng, a, b, range)
            })
            .collect();
        let mut tries = vec![0; m * n];
        loop {
            let d = build(&reds, &blues, polys.clone())?;
            let report = validate_simple(&d);
            if report.ok {
                return Ok(d);
            }
            let names: HashMap<String, EdgeId> = (0..m * n).map(|e| (d.edge_name(e), e)).collect();
            let mut bad: Vec<EdgeId> = report
                .violations
                .iter()
                .flat_map(|v| v.edges.iter().filter_map(|name| names.get(name).copied()))
                .filter(|&e| polys[e].len() > 2)
                .collect();
            bad.sort_unstable();
            bad.dedup();
            if bad.is_empty() {
                break;
            }
            for e in bad {
                tries[e] += 1;
                let (a, b) = ends(e);
                polys[e] =
                    if tries[e] > RETRIES_PER_EDGE { vec![a.clone(), b.clone()] } else { bend(&mut rng, a, b, range) };
            }
        }
    }
    Err(Error::BudgetExceeded("no simple bent drawing found".into()))
}

const DOUBLE_CROSSING: &str = include_str!("../fixtures/double_crossing.json");

/// A star-simple drawing of `K_{2,3}` without any plane spanning tree.
/// `r1-b3` crosses both `r2-b1` and `r2-b2` twice.
pub fn fixture_double_crossing() -> Drawing {
    parse_drawing(DOUBLE_CROSSING).expect("committed fixture parses")
}
