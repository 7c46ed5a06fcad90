//! Shooting stars in x-monotone drawings, rooted at the leftmost vertex.
//!
//! Every vertex `w` of the root's class shoots vertical rays up and down and
//! is matched by which edges of the root star `T` they meet first.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::Serialize;

use crate::crossing::CrossingIndex;
use crate::drawing::{Color, Drawing, VertexRef};
use crate::error::{Error, Result};
use crate::geom::{cross, Point, Rational};
use crate::star::{certify, ShootingStar};
use crate::validate::{check_monotone, validate_simple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonotoneCase {
    /// Exactly one ray meets `T`.
    #[serde(rename = "i")]
    One,
    /// Both rays meet `T`.
    #[serde(rename = "ii")]
    Both,
    /// Neither ray meets `T`.
    #[serde(rename = "iii")]
    Neither,
}

/// First edge of `T` met by a vertical ray, named by its far endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayHit {
    pub blue: usize,
    pub point: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotonePick {
    pub w: usize,
    pub case: MonotoneCase,
    pub up: Option<RayHit>,
    pub down: Option<RayHit>,
    pub b_i: usize,
    pub b_j: Option<usize>,
    pub b_w: usize,
}

/// The drawing in the frame where the leftmost vertex is red.
#[derive(Clone, Debug)]
pub struct MonotoneFrame {
    pub drawing: Drawing,
    pub root: usize,
    /// Whether colors were swapped to make the leftmost vertex red.
    pub swapped: bool,
    pub crossings: CrossingIndex,
}

impl MonotoneFrame {
    /// Checks completeness and the monotone preconditions and picks the
    /// root. Simplicity is checked by [`monotone_report`], not here.
    pub fn new(d: &Drawing) -> Result<MonotoneFrame> {
        d.require_complete()?;
        check_monotone(d).map_err(Error::NotMonotone)?;
        let (leftmost, _) = d
            .vertices()
            .min_by(|a, b| a.1.position.x.cmp(&b.1.position.x))
            .expect("drawings have vertices");
        let swapped = leftmost.color == Color::Blue;
        let drawing = if swapped { d.color_swapped() } else { d.clone() };
        let crossings = CrossingIndex::of(&drawing);
        Ok(MonotoneFrame { drawing, root: leftmost.index, swapped, crossings })
    }

    /// The root in the caller's color convention.
    pub fn root_ref(&self) -> VertexRef {
        let color = if self.swapped { Color::Blue } else { Color::Red };
        VertexRef { color, index: self.root }
    }

    fn red(&self, i: usize) -> &Point {
        &self.drawing.reds()[i].position
    }

    fn blue(&self, j: usize) -> &Point {
        &self.drawing.blues()[j].position
    }
}

/// Height of the root edge to `b` above `x`, if the edge spans `x`.
fn height_at(f: &MonotoneFrame, b: usize, x: &Rational) -> Result<Option<Rational>> {
    let edge = f.drawing.edge(f.drawing.edge_id(f.root, b));
    for (i, w) in edge.polyline.windows(2).enumerate() {
        if &w[0].x < x && x < &w[1].x {
            let t = (x - &w[0].x) / (&w[1].x - &w[0].x);
            return Ok(Some(Point::lerp(&w[0], &w[1], &t).y));
        }
        if i > 0 && &w[0].x == x {
            let name = f.drawing.edge_name(f.drawing.edge_id(f.root, b));
            return Err(Error::DegenerateRay(format!("vertical line hits a bend of {name}")));
        }
    }
    Ok(None)
}

/// The pick for `w` by shooting vertical rays.
pub fn monotone_pick(f: &MonotoneFrame, w: usize) -> Result<MonotonePick> {
    let p = f.red(w).clone();
    let mut up: Option<(Rational, usize)> = None;
    let mut down: Option<(Rational, usize)> = None;
    for b in 0..f.drawing.n() {
        let Some(y) = height_at(f, b, &p.x)? else { continue };
        let gap = &y - &p.y;
        match gap.cmp(&Rational::zero()) {
            Ordering::Greater if up.as_ref().is_none_or(|(g, _)| &gap < g) => up = Some((gap, b)),
            Ordering::Less if down.as_ref().is_none_or(|(g, _)| &gap > g) => down = Some((gap, b)),
            Ordering::Equal => {
                return Err(Error::DegenerateRay(format!("{} lies on the root star", f.drawing.reds()[w].id)));
            }
            _ => {}
        }
    }
    let hit = |h: &Option<(Rational, usize)>| {
        h.as_ref().map(|(g, b)| RayHit { blue: *b, point: Point::new(p.x.clone(), &p.y + g) })
    };
    let dist = |b: usize| {
        let dx = &f.blue(b).x - &p.x;
        if dx < Rational::zero() {
            -dx
        } else {
            dx
        }
    };
    let (case, b_i, b_j, b_w) = match (&up, &down) {
        (Some((_, b)), None) | (None, Some((_, b))) => (MonotoneCase::One, *b, None, *b),
        (Some((_, bi)), Some((_, bj))) => {
            let bw = if dist(*bi) <= dist(*bj) { *bi } else { *bj };
            (MonotoneCase::Both, *bi, Some(*bj), bw)
        }
        (None, None) => {
            let b = (0..f.drawing.n()).min_by_key(|&b| dist(b)).expect("at least one blue");
            (MonotoneCase::Neither, b, None, b)
        }
    };
    Ok(MonotonePick { w, case, up: hit(&up), down: hit(&down), b_i, b_j, b_w })
}

/// The pick for `w` from the rotation at `w` and the crossings with `T`:
/// among edges leaving `w` to the right that cross no edge of `T`, the first
/// and last in clockwise order from vertical-up; the one whose blue end is
/// further left wins.
pub fn monotone_pick_combinatorial(f: &MonotoneFrame, w: usize) -> usize {
    let d = &f.drawing;
    let x = d.reds()[w].position.x.clone();
    let right: Vec<usize> = (0..d.n()).filter(|&b| f.blue(b).x > x).collect();
    if right.is_empty() {
        return (0..d.n()).max_by(|&a, &b| f.blue(a).x.cmp(&f.blue(b).x)).expect("at least one blue");
    }
    let star: Vec<_> = (0..d.n()).map(|b| d.edge_id(f.root, b)).collect();
    let initial = |b: usize| {
        let e = d.edge(d.edge_id(w, b));
        e.polyline[1].sub(&e.polyline[0])
    };
    let mut free: Vec<usize> = right
        .into_iter()
        .filter(|&b| {
            let e = d.edge_id(w, b);
            star.iter().all(|&t| !f.crossings.crosses(e, t))
        })
        .collect();
    // clockwise from up: b comes after a when it turns right of a
    free.sort_by(|&a, &b| cross(&initial(a), &initial(b)).cmp(&Rational::zero()));
    let (first, last) = (free[0], free[free.len() - 1]);
    if f.blue(first).x <= f.blue(last).x {
        first
    } else {
        last
    }
}

#[derive(Clone, Debug)]
pub struct MonotoneReport {
    pub star: ShootingStar,
    pub picks: Vec<MonotonePick>,
}

/// Shooting star rooted at the leftmost vertex, with the per-vertex picks.
pub fn monotone_report(d: &Drawing) -> Result<MonotoneReport> {
    let f = MonotoneFrame::new(d)?;
    let report = validate_simple(d);
    if !report.ok {
        return Err(Error::NotSimple(report));
    }
    let picks = (0..f.drawing.m())
        .filter(|&w| w != f.root)
        .map(|w| monotone_pick(&f, w))
        .collect::<Result<Vec<_>>>()?;
    let star = ShootingStar {
        root: f.root_ref(),
        own: (0..f.drawing.m()).collect(),
        other: (0..f.drawing.n()).collect(),
        matching: picks.iter().map(|p| (p.w, p.b_w)).collect(),
    };
    certify(d, &star).map_err(|err| Error::InvariantBreach(format!("monotone construction: {err}")))?;
    Ok(MonotoneReport { star, picks })
}

pub fn find_shooting_star_monotone(d: &Drawing) -> Result<ShootingStar> {
    Ok(monotone_report(d)?.star)
}
