//! Shooting stars in straight-line drawings from the wedges around the root.
//!
//! The rays from the root through the opposite-class vertices cut the plane
//! into wedges. Each wedge is halved by its angle bisector, and a vertex in a
//! half-wedge is joined to the vertex on the ray bounding that half.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::drawing::{Color, Drawing, VertexRef};
use crate::error::{Error, Result};
use crate::geom::{cmp_angle, cross, dot, relative_direction, Point};
use crate::star::{certify, ShootingStar};

#[derive(Clone, Debug, Serialize)]
pub struct WedgePick {
    /// Index of the matched vertex in the root's class.
    pub w: usize,
    /// Opposite-class vertices on the rays bounding the wedge, in
    /// counterclockwise order.
    pub wedge: (usize, usize),
    pub chosen: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct WedgeAssignment {
    pub root: VertexRef,
    /// Opposite-class vertices sorted by the angle of their ray.
    pub rays: Vec<usize>,
    pub picks: Vec<WedgePick>,
}

/// Which ray bounds the half-wedge containing direction `d`, for the wedge
/// running counterclockwise from `u` to `v` (the whole turn when `u == v`).
/// `Less` means the half at `u`.
pub fn half_of(u: &Point, d: &Point, v: &Point) -> Option<Ordering> {
    let a = relative_direction(u, d);
    let b = relative_direction(d, v);
    if on_positive_axis(&a) || on_positive_axis(&b) {
        return None;
    }
    match cmp_angle(&a, &b) {
        Ordering::Equal => None,
        ord => Some(ord),
    }
}

fn on_positive_axis(p: &Point) -> bool {
    p.y.is_zero() && p.x > Zero::zero()
}

pub fn wedge_assignment(d: &Drawing, root: VertexRef) -> Result<WedgeAssignment> {
    d.require_complete()?;
    if let Some(e) = (0..d.edges().len()).find(|&e| !d.edge(e).is_straight()) {
        return Err(Error::NotStraight(format!("edge {} has bends", d.edge_name(e))));
    }
    let other = root.color.other();
    let v = d.vertex(root).position.clone();
    let count = |c| match c {
        Color::Red => d.m(),
        Color::Blue => d.n(),
    };
    let dir = |color, i| d.vertex(VertexRef { color, index: i }).position.sub(&v);

    let mut rays: Vec<usize> = (0..count(other)).collect();
    rays.sort_by(|&a, &b| cmp_angle(&dir(other, a), &dir(other, b)));

    let mut picks = Vec::new();
    for w in (0..count(root.color)).filter(|&w| w != root.index) {
        let dw = dir(root.color, w);
        let name = &d.vertex(VertexRef { color: root.color, index: w }).id;
        if let Some(&b) = rays.iter().find(|&&b| {
            let u = dir(other, b);
            cross(&u, &dw).is_zero() && dot(&u, &dw) > Zero::zero()
        }) {
            return Err(Error::DegenerateWedge(format!(
                "{name} lies on the ray through {}",
                d.vertex(VertexRef { color: other, index: b }).id
            )));
        }
        // first ray counterclockwise after dw, and the one before it
        let after = rays.iter().position(|&b| cmp_angle(&dir(other, b), &dw) == Ordering::Greater).unwrap_or(0);
        let before = (after + rays.len() - 1) % rays.len();
        let (bu, bv) = (rays[before], rays[after]);
        let chosen = match half_of(&dir(other, bu), &dw, &dir(other, bv)) {
            Some(Ordering::Less) => bu,
            Some(_) => bv,
            None => {
                return Err(Error::DegenerateWedge(format!("{name} lies on an angle bisector")));
            }
        };
        picks.push(WedgePick { w, wedge: (bu, bv), chosen });
    }
    Ok(WedgeAssignment { root, rays, picks })
}

/// The wedge-bisector shooting star, certified before it is returned.
pub fn find_shooting_star_straightline(d: &Drawing, root: VertexRef) -> Result<ShootingStar> {
    let a = wedge_assignment(d, root)?;
    let star = assignment_star(d, &a);
    certify(d, &star).map_err(|err| Error::InvariantBreach(format!("wedge construction: {err}")))?;
    Ok(star)
}

pub fn assignment_star(d: &Drawing, a: &WedgeAssignment) -> ShootingStar {
    let (own, other) = match a.root.color {
        Color::Red => (d.m(), d.n()),
        Color::Blue => (d.n(), d.m()),
    };
    ShootingStar {
        root: a.root,
        own: (0..own).collect(),
        other: (0..other).collect(),
        matching: a.picks.iter().map(|p| (p.w, p.chosen)).collect::<BTreeMap<_, _>>(),
    }
}
