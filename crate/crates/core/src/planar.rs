//! Planarization: the plane graph on vertices and crossing points.

use std::collections::HashMap;

use num_traits::Signed;

use crate::crossing::{CrossingId, CrossingIndex};
use crate::drawing::{EdgeId, Subdrawing, VertexRef};
use crate::geom::{cmp_angle, twice_signed_area, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Vertex(VertexRef),
    Crossing(CrossingId),
}

#[derive(Clone, Debug)]
pub struct Node {
    pub kind: NodeKind,
    pub point: Point,
}

/// A piece of an edge between two consecutive nodes on it.
#[derive(Clone, Debug)]
pub struct PlaneArc {
    pub edge: EdgeId,
    pub tail: usize,
    pub head: usize,
    pub points: Vec<Point>,
}

/// Half-edge `2a` runs along arc `a`, `2a + 1` against it.
pub type HalfEdge = usize;

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    pub nodes: Vec<Node>,
    pub arcs: Vec<PlaneArc>,
    /// Outgoing half-edges at each node in counterclockwise order.
    pub rotation: Vec<Vec<HalfEdge>>,
    /// Boundary walks; each half-edge is in exactly one.
    pub face_walks: Vec<Vec<HalfEdge>>,
    pub components: usize,
}

impl PlaneGraph {
    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn tail(&self, h: HalfEdge) -> usize {
        let a = &self.arcs[h / 2];
        if h.is_multiple_of(2) {
            a.tail
        } else {
            a.head
        }
    }

    pub fn head(&self, h: HalfEdge) -> usize {
        self.tail(h ^ 1)
    }

    fn half_points(&self, h: HalfEdge) -> Vec<Point> {
        let mut pts = self.arcs[h / 2].points.clone();
        if h % 2 == 1 {
            pts.reverse();
        }
        pts
    }

    /// Twice the signed area enclosed by a boundary walk.
    pub fn walk_area(&self, walk: &[HalfEdge]) -> crate::geom::Rational {
        let mut poly = Vec::new();
        for &h in walk {
            let pts = self.half_points(h);
            poly.extend_from_slice(&pts[..pts.len() - 1]);
        }
        twice_signed_area(&poly)
    }

    /// Faces of the plane graph: one per walk with positive area (bounded
    /// faces) plus the single unbounded face.
    pub fn num_faces(&self) -> usize {
        self.face_walks.iter().filter(|w| self.walk_area(w).is_positive()).count() + 1
    }

    /// `V - E + F - (1 + C)`; zero for every plane graph.
    pub fn euler_defect(&self) -> i64 {
        self.num_nodes() as i64 - self.num_arcs() as i64 + self.num_faces() as i64 - 1 - self.components as i64
    }
}

/// Builds the plane graph of the active part of a drawing. `index` may hold
/// crossings of inactive edges too; they are ignored.
pub fn planarize(sub: &Subdrawing, index: &CrossingIndex) -> PlaneGraph {
    let d = sub.base();
    let mut nodes = Vec::new();
    let mut vertex_node = HashMap::new();
    for (v, vertex) in d.vertices() {
        if sub.has_vertex(v) {
            vertex_node.insert(v, nodes.len());
            nodes.push(Node { kind: NodeKind::Vertex(v), point: vertex.position.clone() });
        }
    }
    let mut crossing_node = HashMap::new();
    for (id, c) in index.crossings().iter().enumerate() {
        if sub.has_edge(c.edge_a) && sub.has_edge(c.edge_b) {
            crossing_node.insert(id, nodes.len());
            nodes.push(Node { kind: NodeKind::Crossing(id), point: c.point.clone() });
        }
    }

    let mut arcs = Vec::new();
    for e in sub.active_edges() {
        let edge = d.edge(e);
        let mut stops = vec![(edge.start_param(), vertex_node[&VertexRef::red(edge.red)])];
        for &id in index.along(e) {
            if let Some(&node) = crossing_node.get(&id) {
                stops.push((index.get(id).param_on(e).clone(), node));
            }
        }
        stops.push((edge.end_param(), vertex_node[&VertexRef::blue(edge.blue)]));
        for w in stops.windows(2) {
            arcs.push(PlaneArc {
                edge: e,
                tail: w[0].1,
                head: w[1].1,
                points: edge.sub_polyline(&w[0].0, &w[1].0),
            });
        }
    }

    let mut g = PlaneGraph { nodes, arcs, rotation: Vec::new(), face_walks: Vec::new(), components: 0 };
    let mut rotation: Vec<Vec<(HalfEdge, Point)>> = vec![Vec::new(); g.nodes.len()];
    for h in 0..2 * g.arcs.len() {
        let pts = g.half_points(h);
        rotation[g.tail(h)].push((h, pts[1].sub(&pts[0])));
    }
    g.rotation = rotation
        .into_iter()
        .map(|mut out| {
            out.sort_by(|a, b| cmp_angle(&a.1, &b.1));
            out.into_iter().map(|(h, _)| h).collect()
        })
        .collect();

    let mut position = vec![0; 2 * g.arcs.len()];
    for out in &g.rotation {
        for (i, &h) in out.iter().enumerate() {
            position[h] = i;
        }
    }
    let next = |h: HalfEdge| {
        let twin = h ^ 1;
        let out = &g.rotation[g.tail(twin)];
        out[(position[twin] + out.len() - 1) % out.len()]
    };
    let mut seen = vec![false; 2 * g.arcs.len()];
    let mut walks = Vec::new();
    for start in 0..seen.len() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            walk.push(h);
            h = next(h);
        }
        walks.push(walk);
    }
    g.face_walks = walks;
    g.components = count_components(g.nodes.len(), g.arcs.iter().map(|a| (a.tail, a.head)));
    g
}

fn count_components(n: usize, links: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for (a, b) in links {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}
