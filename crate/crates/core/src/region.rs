//! Closed chains of edge arcs and side-of-curve queries.
//!
//! A region is never materialized. It is named by its boundary plus a
//! reference point known to lie on the wanted side, and membership is decided
//! by comparing ray-crossing parities. This works whether or not the side is
//! bounded in the plane.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::drawing::{Drawing, EdgeId, Param};
use crate::error::{Error, Result};
use crate::geom::{cross, on_segment, rat, Point};

/// The part of an edge between two positions, traversed `from -> to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub edge: EdgeId,
    pub from: Param,
    pub to: Param,
}

impl Arc {
    pub fn new(edge: EdgeId, from: Param, to: Param) -> Self {
        Arc { edge, from, to }
    }

    pub fn is_degenerate(&self) -> bool {
        self.from == self.to
    }
}

/// A closed chain of arcs; each arc ends where the next one starts.
#[derive(Clone, Debug)]
pub struct RegionBoundary {
    arcs: Vec<Arc>,
    points: Vec<Point>,
}

impl RegionBoundary {
    /// Chains the arcs. Zero-length arcs are dropped. Fails if consecutive
    /// arcs do not meet or the chain does not close.
    pub fn from_arcs(d: &Drawing, arcs: Vec<Arc>) -> Result<RegionBoundary> {
        let arcs: Vec<Arc> = arcs.into_iter().filter(|a| !a.is_degenerate()).collect();
        let mut points: Vec<Point> = Vec::new();
        for (i, arc) in arcs.iter().enumerate() {
            let pts = d.edge(arc.edge).sub_polyline(&arc.from, &arc.to);
            let next = &arcs[(i + 1) % arcs.len()];
            let next_start = d.edge(next.edge).point_at(&next.from);
            if pts.last() != Some(&next_start) {
                return Err(Error::InvariantBreach(format!(
                    "arc {i} on {} ends at {:?} but the next arc starts at {next_start}",
                    d.edge_name(arc.edge),
                    pts.last()
                )));
            }
            for p in pts {
                if points.last() != Some(&p) {
                    points.push(p);
                }
            }
        }
        if points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        Ok(RegionBoundary { arcs, points })
    }

    /// A boundary given directly as a closed polygon.
    pub fn from_points(points: Vec<Point>) -> RegionBoundary {
        RegionBoundary { arcs: Vec::new(), points }
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    fn segments(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.points.len();
        (0..n).map(move |i| (&self.points[i], &self.points[(i + 1) % n]))
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        match self.points.len() {
            0 => false,
            1 => &self.points[0] == p,
            _ => self.segments().any(|(a, b)| on_segment(a, b, p)),
        }
    }

    /// Parity of crossings of the ray `p + s * dir, s > 0` with the chain.
    /// `None` when the line through `p` along `dir` hits a chain vertex, which
    /// makes the count ambiguous.
    pub fn parity_along(&self, p: &Point, dir: &Point) -> Option<bool> {
        if self.points.iter().any(|v| cross(dir, &v.sub(p)).is_zero()) {
            return None;
        }
        let mut odd = false;
        if self.points.len() < 2 {
            return Some(false);
        }
        for (a, b) in self.segments() {
            let sa = cross(dir, &a.sub(p)).is_positive();
            let sb = cross(dir, &b.sub(p)).is_positive();
            if sa == sb {
                continue;
            }
            let ab = b.sub(a);
            let s = cross(&a.sub(p), &ab) / cross(dir, &ab);
            if s.is_positive() {
                odd = !odd;
            }
        }
        Some(odd)
    }

    /// Parity along the first admissible ray from a fixed candidate list.
    pub fn parity(&self, p: &Point) -> bool {
        (0i64..)
            .map(|k| Point::new(rat(7919), rat(2 * k + 1)))
            .find_map(|dir| self.parity_along(p, &dir))
            .expect("finitely many directions are blocked")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Same,
    Opposite,
}

/// Whether `p` and `reference` lie on the same side of the closed chain.
pub fn region_side(boundary: &RegionBoundary, p: &Point, reference: &Point) -> Result<Side> {
    if boundary.on_boundary(p) || boundary.on_boundary(reference) {
        return Err(Error::OnBoundary);
    }
    Ok(if boundary.parity(p) == boundary.parity(reference) {
        Side::Same
    } else {
        Side::Opposite
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// Strictly on the side of the reference point.
    Inside,
    OnBoundary,
    /// Strictly on the other side.
    Outside,
}

/// Where `p` is relative to the region on `reference`'s side of `boundary`.
/// `reference` must not be on the boundary.
pub fn locate(boundary: &RegionBoundary, p: &Point, reference: &Point) -> Location {
    if boundary.on_boundary(p) {
        return Location::OnBoundary;
    }
    debug_assert!(!boundary.on_boundary(reference));
    match boundary.parity(p).cmp(&boundary.parity(reference)) {
        Ordering::Equal => Location::Inside,
        _ => Location::Outside,
    }
}
