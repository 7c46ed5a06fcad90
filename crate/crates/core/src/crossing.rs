//! Proper crossings between edges, sorted along each edge, with the
//! clockwise/counterclockwise direction of every crossing.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::drawing::{Drawing, EdgeId, Param, Subdrawing};
use crate::error::{Error, Result};
use crate::geom::{cross, segment_contact, Point, SegmentContact};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Clockwise,
    Counterclockwise,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Clockwise => Direction::Counterclockwise,
            Direction::Counterclockwise => Direction::Clockwise,
        }
    }
}

/// Direction in which a curve with tangent `crosser` crosses a curve with
/// tangent `crossed`, both oriented red to blue.
///
/// Around the crossing the four arc ends are, in counterclockwise angular
/// order, either `-crossed, -crosser, +crossed, +crosser` or the reverse. The
/// crossing is clockwise exactly when the clockwise order starts
/// `-crossed, -crosser`, which happens iff `crosser` points to the right of
/// `crossed`.
pub fn direction_from_tangents(crossed: &Point, crosser: &Point) -> Option<Direction> {
    match cross(crossed, crosser).cmp(&Default::default()) {
        Ordering::Less => Some(Direction::Clockwise),
        Ordering::Greater => Some(Direction::Counterclockwise),
        Ordering::Equal => None,
    }
}

pub type CrossingId = usize;

/// A proper crossing of `edge_a` and `edge_b` (`edge_a < edge_b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub edge_a: EdgeId,
    pub edge_b: EdgeId,
    pub point: Point,
    pub param_a: Param,
    pub param_b: Param,
    /// Direction in which `edge_b` crosses `edge_a`.
    pub direction: Direction,
}

impl Crossing {
    pub fn param_on(&self, edge: EdgeId) -> &Param {
        if edge == self.edge_a {
            &self.param_a
        } else {
            debug_assert_eq!(edge, self.edge_b);
            &self.param_b
        }
    }

    pub fn other(&self, edge: EdgeId) -> EdgeId {
        if edge == self.edge_a {
            self.edge_b
        } else {
            self.edge_a
        }
    }

    /// Direction in which `crosser` crosses `crossed`.
    pub fn direction_of(&self, crosser: EdgeId, crossed: EdgeId) -> Direction {
        if crossed == self.edge_a && crosser == self.edge_b {
            self.direction
        } else {
            debug_assert!(crossed == self.edge_b && crosser == self.edge_a);
            self.direction.flipped()
        }
    }
}

/// Direction in which `e2` crosses `e1` at `at`, recomputed from the tangents
/// of the two polyline segments through the crossing.
pub fn crossing_direction(d: &Drawing, e1: EdgeId, e2: EdgeId, at: &Crossing) -> Result<Direction> {
    let t1 = d.edge(e1).tangent_at(at.param_on(e1));
    let t2 = d.edge(e2).tangent_at(at.param_on(e2));
    direction_from_tangents(&t1, &t2).ok_or_else(|| Error::Tangency(d.edge_name(e1), d.edge_name(e2)))
}

#[derive(Clone, Debug, Default)]
pub struct CrossingIndex {
    crossings: Vec<Crossing>,
    along: Vec<Vec<CrossingId>>,
    pairs: HashMap<(EdgeId, EdgeId), Vec<CrossingId>>,
}

impl CrossingIndex {
    fn build(num_edges: usize, crossings: Vec<Crossing>) -> CrossingIndex {
        let mut along = vec![Vec::new(); num_edges];
        let mut pairs: HashMap<_, Vec<_>> = HashMap::new();
        for (id, c) in crossings.iter().enumerate() {
            along[c.edge_a].push(id);
            along[c.edge_b].push(id);
            pairs.entry((c.edge_a, c.edge_b)).or_default().push(id);
        }
        for (edge, list) in along.iter_mut().enumerate() {
            list.sort_by(|&x, &y| crossings[x].param_on(edge).cmp(crossings[y].param_on(edge)));
        }
        CrossingIndex { crossings, along, pairs }
    }

    /// All crossings of the whole drawing.
    pub fn of(d: &Drawing) -> CrossingIndex {
        compute_crossings(&Subdrawing::full(d))
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn get(&self, id: CrossingId) -> &Crossing {
        &self.crossings[id]
    }

    /// Crossings on `edge`, in order from its red to its blue end.
    pub fn along(&self, edge: EdgeId) -> &[CrossingId] {
        self.along.get(edge).map_or(&[], Vec::as_slice)
    }

    pub fn between(&self, a: EdgeId, b: EdgeId) -> &[CrossingId] {
        let key = if a < b { (a, b) } else { (b, a) };
        self.pairs.get(&key).map_or(&[], Vec::as_slice)
    }

    pub fn crosses(&self, a: EdgeId, b: EdgeId) -> bool {
        !self.between(a, b).is_empty()
    }

    /// The same crossings restricted to a subdrawing; ids are renumbered.
    pub fn filtered(&self, sub: &Subdrawing) -> CrossingIndex {
        let kept = self
            .crossings
            .iter()
            .filter(|c| sub.has_edge(c.edge_a) && sub.has_edge(c.edge_b))
            .cloned()
            .collect();
        CrossingIndex::build(self.along.len(), kept)
    }

    /// Index of the mirrored drawing: same ids and params, reflected points,
    /// every direction flipped.
    pub fn mirrored(&self) -> CrossingIndex {
        CrossingIndex {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing { point: c.point.mirrored(), direction: c.direction.flipped(), ..c.clone() })
                .collect(),
            along: self.along.clone(),
            pairs: self.pairs.clone(),
        }
    }
}

/// Every proper crossing between two active edges.
///
/// Pairs are tested segment by segment after a bounding-box rejection.
/// Contacts that are not proper crossings (touching, overlap, crossing at a
/// bend) are skipped here; the validator reports them.
pub fn compute_crossings(sub: &Subdrawing) -> CrossingIndex {
    let d = sub.base();
    let edges = sub.active_edges();
    let boxes: Vec<_> = d.edges().iter().map(|e| bbox(&e.polyline)).collect();
    let mut found = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if !boxes_meet(&boxes[a], &boxes[b]) {
                continue;
            }
            let (ea, eb) = (d.edge(a), d.edge(b));
            for sa in 0..ea.num_segments() {
                let (a0, a1) = ea.segment(sa);
                for sb in 0..eb.num_segments() {
                    let (b0, b1) = eb.segment(sb);
                    if let SegmentContact::Proper { point, s, t } = segment_contact(a0, a1, b0, b1) {
                        let direction = direction_from_tangents(&a1.sub(a0), &b1.sub(b0))
                            .expect("proper crossings are transversal");
                        found.push(Crossing {
                            edge_a: a,
                            edge_b: b,
                            point,
                            param_a: Param::new(sa, s),
                            param_b: Param::new(sb, t),
                            direction,
                        });
                    }
                }
            }
        }
    }
    CrossingIndex::build(d.edges().len(), found)
}

type BBox = (Point, Point);

fn bbox(points: &[Point]) -> BBox {
    let mut lo = points[0].clone();
    let mut hi = points[0].clone();
    for p in &points[1..] {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    (lo, hi)
}

fn boxes_meet(a: &BBox, b: &BBox) -> bool {
    a.0.x <= b.1.x && b.0.x <= a.1.x && a.0.y <= b.1.y && b.0.y <= a.1.y
}

/// Do the two edges share any point other than a common endpoint vertex?
/// Works on arbitrary input, including drawings that fail validation.
pub fn edges_conflict(d: &Drawing, a: EdgeId, b: EdgeId) -> bool {
    let (ea, eb) = (d.edge(a), d.edge(b));
    let shared: Option<&Point> = if ea.red == eb.red {
        Some(&d.reds()[ea.red].position)
    } else if ea.blue == eb.blue {
        Some(&d.blues()[ea.blue].position)
    } else {
        None
    };
    for sa in 0..ea.num_segments() {
        let (a0, a1) = ea.segment(sa);
        for sb in 0..eb.num_segments() {
            let (b0, b1) = eb.segment(sb);
            match segment_contact(a0, a1, b0, b1) {
                SegmentContact::None => {}
                SegmentContact::Touch { point, .. } if Some(&point) == shared => {
                    let at_a_end = (sa == 0 && &ea.polyline[0] == shared.unwrap())
                        || (sa + 1 == ea.num_segments() && ea.polyline.last() == shared);
                    let at_b_end = (sb == 0 && &eb.polyline[0] == shared.unwrap())
                        || (sb + 1 == eb.num_segments() && eb.polyline.last() == shared);
                    if !(at_a_end && at_b_end) {
                        return true;
                    }
                }
                _ => return true,
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{Color, Edge, Vertex};
    use crate::geom::{ratio, Point};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    /// r1=(0,0), b1=(2,0), r2 at `r2`, b2 at `b2`, all edges straight.
    fn cross_pair(r2: Point, b2: Point) -> Drawing {
        Drawing::straight_line(vec![pt(0, 0), r2], vec![pt(2, 0), b2]).unwrap()
    }

    #[test]
    fn unit_square_diagonals() {
        let d = Drawing::straight_line(vec![pt(0, 0), pt(0, 1)], vec![pt(1, 0), pt(1, 1)]).unwrap();
        let idx = CrossingIndex::of(&d);
        assert_eq!(idx.len(), 1);
        assert_eq!(idx.get(0).point, Point::new(ratio(1, 2), ratio(1, 2)));
    }

    #[test]
    fn upward_crosser_is_counterclockwise() {
        let d = cross_pair(pt(1, -1), pt(1, 1));
        let idx = CrossingIndex::of(&d);
        let (e1, e2) = (d.edge_id(0, 0), d.edge_id(1, 1));
        let c = idx.get(idx.between(e1, e2)[0]);
        assert_eq!(c.point, pt(1, 0));
        assert_eq!(crossing_direction(&d, e1, e2, c).unwrap(), Direction::Counterclockwise);
        assert_eq!(c.direction_of(e2, e1), Direction::Counterclockwise);
        assert_eq!(crossing_direction(&d, e2, e1, c).unwrap(), Direction::Clockwise);
    }

    #[test]
    fn downward_crosser_is_clockwise() {
        let d = cross_pair(pt(1, 1), pt(1, -1));
        let idx = CrossingIndex::of(&d);
        let (e1, e2) = (d.edge_id(0, 0), d.edge_id(1, 1));
        let c = idx.get(idx.between(e1, e2)[0]);
        assert_eq!(crossing_direction(&d, e1, e2, c).unwrap(), Direction::Clockwise);
    }

    #[test]
    fn crossings_are_sorted_along_each_edge() {
        // one long red edge crossed by two blue-side edges
        let reds = vec![
            Vertex { id: "r".into(), color: Color::Red, position: pt(0, 0) },
            Vertex { id: "s".into(), color: Color::Red, position: pt(3, 5) },
        ];
        let blues = vec![
            Vertex { id: "b".into(), color: Color::Blue, position: pt(10, 0) },
            Vertex { id: "c".into(), color: Color::Blue, position: pt(5, -5) },
        ];
        let edges = vec![
            Edge { red: 0, blue: 0, polyline: vec![pt(0, 0), pt(10, 0)] },
            Edge { red: 1, blue: 1, polyline: vec![pt(3, 5), pt(3, -3), pt(7, 3), pt(5, -5)] },
        ];
        let d = Drawing::new(reds, blues, edges, true).unwrap();
        let idx = CrossingIndex::of(&d);
        assert_eq!(idx.len(), 3);
        let along = idx.along(0);
        let xs: Vec<_> = along.iter().map(|&c| idx.get(c).point.x.clone()).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        assert_eq!(xs, sorted);
        let dirs: Vec<_> = along.iter().map(|&c| idx.get(c).direction_of(1, 0)).collect();
        assert_eq!(dirs, vec![Direction::Clockwise, Direction::Counterclockwise, Direction::Clockwise]);
    }

    #[test]
    fn mirrored_index_flips_directions() {
        let d = cross_pair(pt(1, -1), pt(1, 1));
        let idx = CrossingIndex::of(&d);
        let again = CrossingIndex::of(&d.mirrored());
        let m = idx.mirrored();
        assert_eq!(m.crossings(), again.crossings());
    }

    #[test]
    fn incident_edges_meeting_only_at_their_vertex_do_not_conflict() {
        let d = Drawing::straight_line(vec![pt(0, 0)], vec![pt(1, 0), pt(0, 1)]).unwrap();
        assert!(!edges_conflict(&d, 0, 1));
    }
}
