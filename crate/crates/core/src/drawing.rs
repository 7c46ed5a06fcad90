//! Drawings of complete bipartite graphs with polyline edges.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A vertex addressed by its color class and its index inside that class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexRef {
    pub color: Color,
    pub index: usize,
}

impl VertexRef {
    pub fn red(index: usize) -> Self {
        VertexRef { color: Color::Red, index }
    }

    pub fn blue(index: usize) -> Self {
        VertexRef { color: Color::Blue, index }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub color: Color,
    pub position: Point,
}

pub type EdgeId = usize;

/// Position along a polyline: segment index plus a fraction in `[0, 1]`.
///
/// The start of the edge is `(0, 0)`, the end `(last, 1)` and interior bends
/// `(i, 0)`. Ordering is lexicographic, which is the order along the edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Param {
    pub seg: usize,
    pub t: Rational,
}

impl Param {
    pub fn new(seg: usize, t: Rational) -> Self {
        Param { seg, t }
    }
}

impl PartialOrd for Param {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Param {
    fn cmp(&self, other: &Self) -> Ordering {
        self.seg.cmp(&other.seg).then_with(|| self.t.cmp(&other.t))
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.seg, crate::geom::format_rational(&self.t))
    }
}

/// An edge, canonically oriented from its red to its blue endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub red: usize,
    pub blue: usize,
    pub polyline: Vec<Point>,
}

impl Edge {
    pub fn num_segments(&self) -> usize {
        self.polyline.len().saturating_sub(1)
    }

    pub fn segment(&self, i: usize) -> (&Point, &Point) {
        (&self.polyline[i], &self.polyline[i + 1])
    }

    pub fn start_param(&self) -> Param {
        Param::new(0, Rational::zero())
    }

    pub fn end_param(&self) -> Param {
        Param::new(self.num_segments() - 1, Rational::one())
    }

    pub fn is_straight(&self) -> bool {
        self.polyline.len() == 2
    }

    pub fn point_at(&self, p: &Param) -> Point {
        let (a, b) = self.segment(p.seg);
        Point::lerp(a, b, &p.t)
    }

    /// Direction of the segment that contains `p`, in red-to-blue orientation.
    pub fn tangent_at(&self, p: &Param) -> Point {
        let (a, b) = self.segment(p.seg);
        b.sub(a)
    }

    /// The sub-curve between two positions, traversed from `from` to `to`.
    pub fn sub_polyline(&self, from: &Param, to: &Param) -> Vec<Point> {
        if from > to {
            let mut pts = self.sub_polyline(to, from);
            pts.reverse();
            return pts;
        }
        let mut pts = vec![self.point_at(from)];
        for j in 1..self.num_segments() {
            let bend = Param::new(j, Rational::zero());
            if &bend > from && &bend < to {
                pts.push(self.polyline[j].clone());
            }
        }
        if to != from {
            pts.push(self.point_at(to));
        }
        pts
    }

    fn reversed(&self) -> Edge {
        let mut polyline = self.polyline.clone();
        polyline.reverse();
        Edge { red: self.blue, blue: self.red, polyline }
    }
}

/// A drawing of `K_{m,n}` (or of a subgraph of it when `subdrawing` is set).
#[derive(Clone, Debug)]
pub struct Drawing {
    reds: Vec<Vertex>,
    blues: Vec<Vertex>,
    edges: Vec<Edge>,
    lookup: Vec<Option<EdgeId>>,
    subdrawing: bool,
}

impl Drawing {
    /// Builds a drawing. Only structural problems that make the data
    /// unaddressable (bad indices, repeated pairs, repeated ids) are errors;
    /// geometric problems are left for the validator.
    pub fn new(
        reds: Vec<Vertex>,
        blues: Vec<Vertex>,
        edges: Vec<Edge>,
        subdrawing: bool,
    ) -> Result<Drawing> {
        if reds.is_empty() || blues.is_empty() {
            return Err(Error::Malformed("both color classes must be nonempty".into()));
        }
        let mut ids = HashMap::new();
        for v in reds.iter().chain(blues.iter()) {
            if ids.insert(v.id.clone(), ()).is_some() {
                return Err(Error::Malformed(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let n = blues.len();
        let mut lookup = vec![None; reds.len() * n];
        for (id, e) in edges.iter().enumerate() {
            if e.red >= reds.len() || e.blue >= n {
                return Err(Error::Malformed(format!("edge {id} refers to a missing vertex")));
            }
            if e.polyline.len() < 2 {
                return Err(Error::Malformed(format!(
                    "edge {}-{} needs at least two polyline points",
                    reds[e.red].id, blues[e.blue].id
                )));
            }
            let slot = &mut lookup[e.red * n + e.blue];
            if slot.is_some() {
                return Err(Error::Malformed(format!(
                    "edge {}-{} given twice",
                    reds[e.red].id, blues[e.blue].id
                )));
            }
            *slot = Some(id);
        }
        Ok(Drawing { reds, blues, edges, lookup, subdrawing })
    }

    /// Straight-line drawing of the full `K_{m,n}` on the given points, with
    /// ids `r1..rm` and `b1..bn`.
    pub fn straight_line(reds: Vec<Point>, blues: Vec<Point>) -> Result<Drawing> {
        let red_vs: Vec<Vertex> = reds
            .into_iter()
            .enumerate()
            .map(|(i, position)| Vertex { id: format!("r{}", i + 1), color: Color::Red, position })
            .collect();
        let blue_vs: Vec<Vertex> = blues
            .into_iter()
            .enumerate()
            .map(|(i, position)| Vertex { id: format!("b{}", i + 1), color: Color::Blue, position })
            .collect();
        let mut edges = Vec::new();
        for (i, r) in red_vs.iter().enumerate() {
            for (j, b) in blue_vs.iter().enumerate() {
                edges.push(Edge {
                    red: i,
                    blue: j,
                    polyline: vec![r.position.clone(), b.position.clone()],
                });
            }
        }
        Drawing::new(red_vs, blue_vs, edges, false)
    }

    pub fn reds(&self) -> &[Vertex] {
        &self.reds
    }

    pub fn blues(&self) -> &[Vertex] {
        &self.blues
    }

    pub fn m(&self) -> usize {
        self.reds.len()
    }

    pub fn n(&self) -> usize {
        self.blues.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn is_subdrawing(&self) -> bool {
        self.subdrawing
    }

    pub fn is_complete(&self) -> bool {
        self.lookup.iter().all(Option::is_some)
    }

    pub fn edge_between(&self, red: usize, blue: usize) -> Option<EdgeId> {
        self.lookup[red * self.n() + blue]
    }

    /// Edge between a red and a blue; panics if the pair is not drawn.
    pub fn edge_id(&self, red: usize, blue: usize) -> EdgeId {
        self.edge_between(red, blue)
            .unwrap_or_else(|| panic!("no edge between red {red} and blue {blue}"))
    }

    pub fn vertex(&self, v: VertexRef) -> &Vertex {
        match v.color {
            Color::Red => &self.reds[v.index],
            Color::Blue => &self.blues[v.index],
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexRef, &Vertex)> {
        let reds = self.reds.iter().enumerate().map(|(i, v)| (VertexRef::red(i), v));
        let blues = self.blues.iter().enumerate().map(|(i, v)| (VertexRef::blue(i), v));
        reds.chain(blues)
    }

    pub fn find_vertex(&self, id: &str) -> Option<VertexRef> {
        self.vertices().find(|(_, v)| v.id == id).map(|(r, _)| r)
    }

    pub fn edge_name(&self, id: EdgeId) -> String {
        let e = &self.edges[id];
        format!("{}-{}", self.reds[e.red].id, self.blues[e.blue].id)
    }

    pub fn shares_endpoint(&self, a: EdgeId, b: EdgeId) -> bool {
        let (ea, eb) = (&self.edges[a], &self.edges[b]);
        ea.red == eb.red || ea.blue == eb.blue
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(Error::Incomplete(format!(
                "{} of {} edges drawn",
                self.edges.len(),
                self.m() * self.n()
            )))
        }
    }

    /// Reflection in the x-axis. Keeps every id and index.
    pub fn mirrored(&self) -> Drawing {
        let flip = |v: &Vertex| Vertex { position: v.position.mirrored(), ..v.clone() };
        Drawing {
            reds: self.reds.iter().map(flip).collect(),
            blues: self.blues.iter().map(flip).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge { polyline: e.polyline.iter().map(Point::mirrored).collect(), ..e.clone() })
                .collect(),
            lookup: self.lookup.clone(),
            subdrawing: self.subdrawing,
        }
    }

    /// Exchanges the color classes: old blues become reds and every polyline
    /// is reversed so edges stay red-to-blue oriented. Edge ids are kept.
    pub fn color_swapped(&self) -> Drawing {
        let recolor = |v: &Vertex| Vertex { color: v.color.other(), ..v.clone() };
        let reds: Vec<Vertex> = self.blues.iter().map(recolor).collect();
        let blues: Vec<Vertex> = self.reds.iter().map(recolor).collect();
        let edges: Vec<Edge> = self.edges.iter().map(Edge::reversed).collect();
        let n = blues.len();
        let mut lookup = vec![None; reds.len() * n];
        for (id, e) in edges.iter().enumerate() {
            lookup[e.red * n + e.blue] = Some(id);
        }
        Drawing { reds, blues, edges, lookup, subdrawing: self.subdrawing }
    }

    /// Copy with only the listed edges kept, marked as a subdrawing.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Drawing {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !removed.contains(id))
            .map(|(_, e)| e.clone())
            .collect();
        Drawing::new(self.reds.clone(), self.blues.clone(), edges, true)
            .expect("subset of a well-formed drawing is well-formed")
    }
}

/// A view selecting some vertices of a drawing and every drawn edge between
/// two selected vertices.
#[derive(Clone, Debug)]
pub struct Subdrawing<'a> {
    base: &'a Drawing,
    reds: Vec<bool>,
    blues: Vec<bool>,
    edges: Vec<bool>,
}

impl<'a> Subdrawing<'a> {
    pub fn full(base: &'a Drawing) -> Self {
        Subdrawing {
            base,
            reds: vec![true; base.m()],
            blues: vec![true; base.n()],
            edges: vec![true; base.edges().len()],
        }
    }

    pub fn base(&self) -> &'a Drawing {
        self.base
    }

    pub fn has_red(&self, i: usize) -> bool {
        self.reds[i]
    }

    pub fn has_blue(&self, j: usize) -> bool {
        self.blues[j]
    }

    pub fn has_vertex(&self, v: VertexRef) -> bool {
        match v.color {
            Color::Red => self.reds[v.index],
            Color::Blue => self.blues[v.index],
        }
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges[e]
    }

    pub fn active_reds(&self) -> Vec<usize> {
        (0..self.reds.len()).filter(|&i| self.reds[i]).collect()
    }

    pub fn active_blues(&self) -> Vec<usize> {
        (0..self.blues.len()).filter(|&j| self.blues[j]).collect()
    }

    pub fn active_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| self.edges[e]).collect()
    }
}

/// The subdrawing induced by the chosen reds and blues.
pub fn restrict<'a>(d: &'a Drawing, reds: &[usize], blues: &[usize]) -> Result<Subdrawing<'a>> {
    if reds.is_empty() || blues.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut red_mask = vec![false; d.m()];
    let mut blue_mask = vec![false; d.n()];
    for &i in reds {
        *red_mask.get_mut(i).ok_or_else(|| Error::UnknownVertex(format!("red #{i}")))? = true;
    }
    for &j in blues {
        *blue_mask.get_mut(j).ok_or_else(|| Error::UnknownVertex(format!("blue #{j}")))? = true;
    }
    let edges = d.edges().iter().map(|e| red_mask[e.red] && blue_mask[e.blue]).collect();
    Ok(Subdrawing { base: d, reds: red_mask, blues: blue_mask, edges })
}
