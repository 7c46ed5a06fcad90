//! Simplicity and general-position checks.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::drawing::{Drawing, EdgeId};
use crate::geom::{on_segment, segment_contact, Point, SegmentContact};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    EndpointMismatch,
    DuplicateVertexPosition,
    DegeneratePolyline,
    MissingEdge,
    SelfIntersection,
    PassesThroughVertex,
    IncidentEdgesCross,
    PairCrossesMoreThanOnce,
    Tangency,
    CrossingAtBend,
    ConcurrentCrossings,
}

impl Rule {
    pub fn describe(self) -> &'static str {
        match self {
            Rule::EndpointMismatch => "polyline does not start at its red and end at its blue vertex",
            Rule::DuplicateVertexPosition => "two vertices share a position",
            Rule::DegeneratePolyline => "polyline repeats a point",
            Rule::MissingEdge => "complete bipartite drawing lacks an edge",
            Rule::SelfIntersection => "edge intersects itself",
            Rule::PassesThroughVertex => "edge passes through a non-incident vertex",
            Rule::IncidentEdgesCross => "incident edges cross",
            Rule::PairCrossesMoreThanOnce => "pair crosses more than once",
            Rule::Tangency => "edges touch or overlap without crossing",
            Rule::CrossingAtBend => "edges meet at a polyline bend",
            Rule::ConcurrentCrossings => "two crossings coincide",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    /// Edge names (`red-blue`) involved, if any.
    pub edges: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule.describe())?;
        if !self.edges.is_empty() {
            write!(f, " [{}]", self.edges.join(", "))?;
        }
        if let Some(v) = &self.vertex {
            write!(f, " at vertex {v}")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Which crossing multiplicity is tolerated between independent edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every pair of edges meets at most once.
    Simple,
    /// Independent edges may cross several times; everything else as in
    /// `Simple`.
    StarSimple,
}

/// Full check of a simple drawing in general position.
pub fn validate_simple(d: &Drawing) -> ValidationReport {
    validate(d, Mode::Simple)
}

pub fn validate(d: &Drawing, mode: Mode) -> ValidationReport {
    let mut v = Validator { d, out: Vec::new() };
    v.structure();
    // geometry is only meaningful on polylines without repeated points
    let usable: Vec<bool> = d.edges().iter().map(|e| e.polyline.windows(2).all(|w| w[0] != w[1])).collect();
    v.self_intersections(&usable);
    v.vertex_contacts(&usable);
    v.pairs(&usable, mode);
    let violations = v.out;
    ValidationReport { ok: violations.is_empty(), violations }
}

/// Contacts between one pair of edges other than their shared endpoint.
#[derive(Debug, Default)]
pub struct PairReport {
    pub proper: Vec<Point>,
    pub at_bend: Vec<Point>,
    pub tangency: bool,
}

/// Classifies every contact between two edges. Touching at the common
/// endpoint vertex of incident edges is not reported.
pub fn inspect_pair(d: &Drawing, a: EdgeId, b: EdgeId) -> PairReport {
    let (ea, eb) = (d.edge(a), d.edge(b));
    let shared = if ea.red == eb.red {
        Some(d.reds()[ea.red].position.clone())
    } else if ea.blue == eb.blue {
        Some(d.blues()[ea.blue].position.clone())
    } else {
        None
    };
    let mut report = PairReport::default();
    for sa in 0..ea.num_segments() {
        let (a0, a1) = ea.segment(sa);
        for sb in 0..eb.num_segments() {
            let (b0, b1) = eb.segment(sb);
            match segment_contact(a0, a1, b0, b1) {
                SegmentContact::None => {}
                SegmentContact::Overlap => report.tangency = true,
                SegmentContact::Proper { point, .. } => report.proper.push(point),
                SegmentContact::Touch { point, .. } => {
                    if Some(&point) == shared.as_ref() {
                        continue;
                    }
                    let is_bend = |poly: &[Point]| poly[1..poly.len() - 1].contains(&point);
                    if is_bend(&ea.polyline) || is_bend(&eb.polyline) {
                        if !report.at_bend.contains(&point) {
                            report.at_bend.push(point);
                        }
                    } else {
                        // touching at a vertex: reported by the vertex check
                        let is_end = |poly: &[Point]| poly[0] == point || poly[poly.len() - 1] == point;
                        if !(is_end(&ea.polyline) || is_end(&eb.polyline)) {
                            report.tangency = true;
                        }
                    }
                }
            }
        }
    }
    report
}

struct Validator<'a> {
    d: &'a Drawing,
    out: Vec<Violation>,
}

impl Validator<'_> {
    fn push(&mut self, rule: Rule, edges: &[EdgeId], vertex: Option<String>, detail: String) {
        let edges = edges.iter().map(|&e| self.d.edge_name(e)).collect();
        self.out.push(Violation { rule, edges, vertex, detail });
    }

    fn structure(&mut self) {
        let d = self.d;
        let mut seen: HashMap<&Point, &str> = HashMap::new();
        for (_, v) in d.vertices() {
            if let Some(prev) = seen.insert(&v.position, &v.id) {
                self.push(
                    Rule::DuplicateVertexPosition,
                    &[],
                    Some(v.id.clone()),
                    format!("same position as {prev}: {}", v.position),
                );
            }
        }
        for (id, e) in d.edges().iter().enumerate() {
            let red = &d.reds()[e.red].position;
            let blue = &d.blues()[e.blue].position;
            if &e.polyline[0] != red || e.polyline.last() != Some(blue) {
                self.push(Rule::EndpointMismatch, &[id], None, String::new());
            }
            if e.polyline.windows(2).any(|w| w[0] == w[1]) {
                self.push(Rule::DegeneratePolyline, &[id], None, String::new());
            }
        }
        if !d.is_subdrawing() {
            for r in 0..d.m() {
                for b in 0..d.n() {
                    if d.edge_between(r, b).is_none() {
                        let detail = format!("{}-{}", d.reds()[r].id, d.blues()[b].id);
                        self.push(Rule::MissingEdge, &[], None, detail);
                    }
                }
            }
        }
    }

    fn self_intersections(&mut self, usable: &[bool]) {
        for (id, e) in self.d.edges().iter().enumerate() {
            if !usable[id] {
                continue;
            }
            let k = e.num_segments();
            let mut bad = false;
            'outer: for i in 0..k {
                for j in i + 1..k {
                    let (a0, a1) = e.segment(i);
                    let (b0, b1) = e.segment(j);
                    let contact = segment_contact(a0, a1, b0, b1);
                    let ok = match contact {
                        SegmentContact::None => true,
                        // consecutive segments share their joint and nothing else
                        SegmentContact::Touch { ref point, .. } => j == i + 1 && point == a1,
                        _ => false,
                    };
                    if !ok {
                        bad = true;
                        break 'outer;
                    }
                }
            }
            if bad {
                self.push(Rule::SelfIntersection, &[id], None, String::new());
            }
        }
    }

    fn vertex_contacts(&mut self, usable: &[bool]) {
        let d = self.d;
        for (vref, v) in d.vertices() {
            for (id, e) in d.edges().iter().enumerate() {
                let incident = match vref.color {
                    crate::drawing::Color::Red => e.red == vref.index,
                    crate::drawing::Color::Blue => e.blue == vref.index,
                };
                // returning to an own endpoint is a self-intersection
                if incident || !usable[id] {
                    continue;
                }
                let hits = (0..e.num_segments()).any(|s| {
                    let (a, b) = e.segment(s);
                    on_segment(a, b, &v.position)
                });
                if hits {
                    self.push(Rule::PassesThroughVertex, &[id], Some(v.id.clone()), String::new());
                }
            }
        }
    }

    fn pairs(&mut self, usable: &[bool], mode: Mode) {
        let d = self.d;
        let mut crossing_points: HashMap<Point, (EdgeId, EdgeId)> = HashMap::new();
        let ne = d.edges().len();
        for a in 0..ne {
            for b in a + 1..ne {
                if !usable[a] || !usable[b] {
                    continue;
                }
                let report = inspect_pair(d, a, b);
                let incident = d.shares_endpoint(a, b);
                if report.tangency {
                    self.push(Rule::Tangency, &[a, b], None, String::new());
                }
                for p in &report.at_bend {
                    self.push(Rule::CrossingAtBend, &[a, b], None, format!("at {p}"));
                }
                if incident && !report.proper.is_empty() {
                    self.push(Rule::IncidentEdgesCross, &[a, b], None, format!("at {}", report.proper[0]));
                } else if mode == Mode::Simple && report.proper.len() > 1 {
                    self.push(
                        Rule::PairCrossesMoreThanOnce,
                        &[a, b],
                        None,
                        format!("{} crossings", report.proper.len()),
                    );
                }
                for p in report.proper {
                    if let Some(&(c, e)) = crossing_points.get(&p) {
                        let mut involved = vec![a, b, c, e];
                        involved.sort_unstable();
                        involved.dedup();
                        self.push(Rule::ConcurrentCrossings, &involved, None, format!("at {p}"));
                    } else {
                        crossing_points.insert(p, (a, b));
                    }
                }
            }
        }
    }
}

/// Preconditions of the monotone construction: every edge strictly
/// x-monotone and all vertex x-coordinates distinct.
pub fn check_monotone(d: &Drawing) -> Result<(), String> {
    let mut xs: Vec<_> = d.vertices().map(|(_, v)| (&v.position.x, &v.id)).collect();
    xs.sort();
    if let Some(w) = xs.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(format!("vertices {} and {} share an x-coordinate", w[0].1, w[1].1));
    }
    for (id, e) in d.edges().iter().enumerate() {
        let up = e.polyline.windows(2).all(|w| w[0].x < w[1].x);
        let down = e.polyline.windows(2).all(|w| w[0].x > w[1].x);
        if !(up || down) {
            return Err(format!("edge {} is not x-monotone", d.edge_name(id)));
        }
    }
    Ok(())
}
