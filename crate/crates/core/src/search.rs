//! Shooting stars in simple drawings by induction on the opposite class.
//!
//! Blues are inserted one at a time. After adding the star edge `r-b1`, the
//! matching is repaired until nothing crosses `r-b1`. Each repair removes at
//! least one crossing with `r-b1`, either by re-matching a 3-arc region to
//! `b1` (case 1) or by solving the subproblem induced by a region `Γ` that
//! holds fewer blues (case 2).
//!
//! All positions below are in the internal red-root frame. A blue root is
//! handled by swapping the colors of the whole drawing.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::crossing::{Crossing, CrossingIndex, Direction};
use crate::drawing::{Color, Drawing, EdgeId, Param, Subdrawing, VertexRef};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::region::{locate, Arc, Location, RegionBoundary};
use crate::star::{certify_in, ShootingStar};
use crate::validate::validate_simple;

/// Red index -> blue index.
pub type Matching = BTreeMap<usize, usize>;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Shuffle the insertion order of the blues with this seed. `None` keeps
    /// the input order.
    pub order_seed: Option<u64>,
    /// Maximum number of repair steps over the whole search, recursion included.
    pub max_steps: usize,
    /// Maximum recursion depth; `None` means the number of blues.
    pub max_depth: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { order_seed: None, max_steps: 1_000_000, max_depth: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    One,
    Two,
}

/// One instrumented repair step.
#[derive(Clone, Debug, Serialize)]
pub struct RepairTrace {
    pub depth: usize,
    pub b1: usize,
    pub case: CaseTag,
    pub mirrored: bool,
    pub eta: bool,
    /// Crossings of `r-b1` with the matching before and after the step.
    pub before: usize,
    pub after: usize,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub star: ShootingStar,
    pub trace: Vec<RepairTrace>,
}

/// Everything a repair step computed, kept for diagnostics.
#[derive(Clone, Debug, Default)]
pub struct RepairContext {
    pub b1: usize,
    pub mirrored: bool,
    /// Crossing of `r-b1` closest to `b1`, with its position on `r-b1`.
    pub x: Option<(Point, Param)>,
    /// The matching edge `r_k-b_t` crossed at `x`.
    pub f: Option<(usize, usize)>,
    /// The edge into `b1` bounding the region, as `(red, b1)`.
    pub e: Option<(usize, usize)>,
    pub y: Option<Point>,
    pub case: Option<CaseTag>,
    /// Star edges crossed by `e` in order: blue index and crossing point.
    pub crossed_star: Vec<(usize, Point)>,
    /// Per crossed star edge: first and last crossing of `e` with the
    /// matching edges into that blue from the far side, plus the star edge.
    pub first_last: Vec<(usize, Point, Point)>,
    /// Matching edge crossing `r-b1` clockwise closest to `x`, with the point.
    pub eta: Option<((usize, usize), Point)>,
    pub excluded_regions: usize,
    /// Blues in `Γ`.
    pub j: Vec<usize>,
    /// Non-root reds in `Γ`.
    pub gamma_reds: Vec<usize>,
}

impl fmt::Display for RepairContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:#?}")
    }
}

struct Frame {
    d: Drawing,
    x: CrossingIndex,
}

struct Engine {
    frames: [Frame; 2],
    root: usize,
    max_steps: usize,
    max_depth: usize,
    steps: usize,
    trace: Vec<RepairTrace>,
}

fn breach(what: &str, ctx: &RepairContext) -> Error {
    Error::InvariantBreach(format!("{what}\n{ctx}"))
}

impl Engine {
    fn new(d: &Drawing, root: usize, opts: &SearchOptions) -> Engine {
        let x = CrossingIndex::of(d);
        let mirrored = Frame { d: d.mirrored(), x: x.mirrored() };
        Engine {
            frames: [Frame { d: d.clone(), x }, mirrored],
            root,
            max_steps: opts.max_steps,
            max_depth: opts.max_depth.unwrap_or(d.n()),
            steps: 0,
            trace: Vec::new(),
        }
    }

    fn d(&self) -> &Drawing {
        &self.frames[0].d
    }

    fn edge(&self, red: usize, blue: usize) -> EdgeId {
        self.d().edge_id(red, blue)
    }

    fn crossings_with(&self, s: EdgeId, m: &Matching) -> usize {
        let x = &self.frames[0].x;
        m.iter().map(|(&r, &b)| x.between(s, self.edge(r, b)).len()).sum()
    }

    /// Plane check of the matching together with the star edges to `blues`.
    fn conflict(&self, m: &Matching, blues: &[usize]) -> Option<(EdgeId, EdgeId)> {
        let mut edges: Vec<EdgeId> = blues.iter().map(|&b| self.edge(self.root, b)).collect();
        edges.extend(m.iter().map(|(&r, &b)| self.edge(r, b)));
        let x = &self.frames[0].x;
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if x.crosses(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// A matching for `reds` (root excluded) such that it and the star of the
    /// root over `blues` are plane. `blues` are inserted in the given order.
    fn solve(&mut self, reds: &[usize], blues: &[usize], depth: usize) -> Result<Matching> {
        if depth > self.max_depth {
            return Err(Error::BudgetExceeded(format!("recursion depth {depth} exceeds {}", self.max_depth)));
        }
        let mut m: Matching = reds.iter().filter(|&&r| r != self.root).map(|&r| (r, blues[0])).collect();
        for i in 1..blues.len() {
            m = self.insert(m, &blues[..=i], depth)?;
        }
        Ok(m)
    }

    /// Adds the last of `blues` and repairs until its star edge is free.
    fn insert(&mut self, mut m: Matching, blues: &[usize], depth: usize) -> Result<Matching> {
        let b1 = *blues.last().expect("nonempty");
        let s = self.edge(self.root, b1);
        let mut count = self.crossings_with(s, &m);
        while count > 0 {
            self.steps += 1;
            if self.steps > self.max_steps {
                return Err(Error::BudgetExceeded(format!("more than {} repair steps", self.max_steps)));
            }
            let (next, ctx) = self.repair(&m, blues, depth)?;
            let after = self.crossings_with(s, &next);
            self.trace.push(RepairTrace {
                depth,
                b1,
                case: ctx.case.expect("set by repair"),
                mirrored: ctx.mirrored,
                eta: ctx.eta.is_some(),
                before: count,
                after,
            });
            if after >= count {
                return Err(breach(&format!("crossings with r-b1 went from {count} to {after}"), &ctx));
            }
            if let Some((a, b)) = self.conflict(&next, &blues[..blues.len() - 1]) {
                return Err(breach(
                    &format!("repair produced crossing edges {} and {}", self.d().edge_name(a), self.d().edge_name(b)),
                    &ctx,
                ));
            }
            m = next;
            count = after;
        }
        Ok(m)
    }

    /// One replacement step. `blues` are the star blues, `b1` last.
    fn repair(&mut self, m: &Matching, blues: &[usize], depth: usize) -> Result<(Matching, RepairContext)> {
        let root = self.root;
        let b1 = *blues.last().expect("nonempty");
        let mut ctx = RepairContext { b1, ..Default::default() };
        let s = self.edge(root, b1);
        let m_edges: HashSet<EdgeId> = m.iter().map(|(&r, &b)| self.edge(r, b)).collect();
        let reds: BTreeSet<usize> = m.keys().copied().chain([root]).collect();

        let normal = &self.frames[0];
        let x_id = *normal
            .x
            .along(s)
            .iter()
            .rev()
            .find(|&&c| m_edges.contains(&normal.x.get(c).other(s)))
            .ok_or_else(|| breach("r-b1 does not cross the matching", &ctx))?;
        let f = normal.x.get(x_id).other(s);
        let mirrored = normal.x.get(x_id).direction_of(f, s) == Direction::Clockwise;
        ctx.mirrored = mirrored;
        let fr = &self.frames[usize::from(mirrored)];
        let (d, xi) = (&fr.d, &fr.x);
        let cx = xi.get(x_id);
        let (rk, bt) = (d.edge(f).red, d.edge(f).blue);
        let x_on_f = cx.param_on(f).clone();
        let at = |c: &Crossing| if mirrored { c.point.mirrored() } else { c.point.clone() };
        ctx.x = Some((at(cx), cx.param_on(s).clone()));
        ctx.f = Some((rk, bt));
        debug_assert_eq!(cx.direction_of(f, s), Direction::Counterclockwise);

        // e: edge into b1 crossing the arc r_k x counterclockwise, closest to x
        let chosen: Option<&Crossing> = xi
            .along(f)
            .iter()
            .rev()
            .map(|&c| xi.get(c))
            .filter(|c| c.param_on(f) < &x_on_f)
            .filter(|c| {
                let g = d.edge(c.other(f));
                g.blue == b1 && g.red != root && reds.contains(&g.red)
            })
            .find(|c| c.direction_of(c.other(f), f) == Direction::Counterclockwise);
        let (e, y_on_e, y_on_f) = match chosen {
            Some(c) => (c.other(f), c.param_on(c.other(f)).clone(), c.param_on(f).clone()),
            None => {
                let e = d.edge_id(rk, b1);
                (e, d.edge(e).start_param(), d.edge(f).start_param())
            }
        };
        let e_red = d.edge(e).red;
        ctx.e = Some((e_red, b1));
        ctx.y = Some(self.frames[0].d.edge(e).point_at(&y_on_e));

        // star edges crossed by e, in order along e
        let star_blues: BTreeSet<usize> = blues[..blues.len() - 1].iter().copied().collect();
        let crossed: Vec<(usize, &Crossing)> = xi
            .along(e)
            .iter()
            .map(|&c| xi.get(c))
            .filter_map(|c| {
                let g = d.edge(c.other(e));
                (g.red == root && star_blues.contains(&g.blue)).then_some((g.blue, c))
            })
            .collect();
        ctx.crossed_star = crossed.iter().map(|(b, c)| (*b, at(c))).collect();

        let pos = |v: VertexRef| self.frames[0].d.vertex(v).position.clone();
        let base = &self.frames[0].d;
        let region = |arcs: Vec<Arc>| RegionBoundary::from_arcs(base, arcs);

        if crossed.is_empty() {
            ctx.case = Some(CaseTag::One);
            let gamma = region(vec![
                Arc::new(e, y_on_e.clone(), d.edge(e).end_param()),
                Arc::new(s, d.edge(s).end_param(), cx.param_on(s).clone()),
                Arc::new(f, x_on_f.clone(), y_on_f),
            ])
            .map_err(|err| breach(&err.to_string(), &ctx))?;
            let r_pos = pos(VertexRef::red(root));
            let inside: Vec<usize> = m
                .keys()
                .copied()
                .filter(|&r| locate(&gamma, &pos(VertexRef::red(r)), &r_pos) != Location::Inside)
                .collect();
            ctx.gamma_reds = inside.clone();
            ctx.j = vec![b1];
            if !inside.contains(&rk) {
                return Err(breach("r_k is not in the case 1 region", &ctx));
            }
            let mut next = m.clone();
            for r in inside {
                next.insert(r, b1);
            }
            return Ok((next, ctx));
        }

        ctx.case = Some(CaseTag::Two);
        let (alpha, ya) = crossed[0];
        let star_alpha = d.edge_id(root, alpha);
        let pi = region(vec![
            Arc::new(star_alpha, d.edge(star_alpha).start_param(), ya.param_on(star_alpha).clone()),
            Arc::new(e, ya.param_on(e).clone(), d.edge(e).end_param()),
            Arc::new(s, d.edge(s).end_param(), d.edge(s).start_param()),
        ])
        .map_err(|err| breach(&err.to_string(), &ctx))?;
        let rk_pos = pos(VertexRef::red(rk));
        if locate(&pi, &pos(VertexRef::blue(bt)), &rk_pos) != Location::Outside {
            return Err(breach("b_t is not strictly right of the dividing curve", &ctx));
        }
        let right_reds: BTreeSet<usize> = m
            .keys()
            .copied()
            .filter(|&r| locate(&pi, &pos(VertexRef::red(r)), &rk_pos) == Location::Outside)
            .collect();

        // first and last crossing of e with the edges into b_xi from the right
        // side plus the star edge r-b_xi
        struct Span<'c> {
            blue: usize,
            y: &'c Crossing,
            first: &'c Crossing,
            last: &'c Crossing,
        }
        let mut spans = Vec::new();
        for &(b, y) in &crossed {
            let mut hits: Vec<&Crossing> = xi
                .along(e)
                .iter()
                .map(|&c| xi.get(c))
                .filter(|c| {
                    let g = c.other(e);
                    let ge = d.edge(g);
                    ge.blue == b && (ge.red == root || (right_reds.contains(&ge.red) && m.get(&ge.red) == Some(&b)))
                })
                .collect();
            hits.sort_by(|a, b| a.param_on(e).cmp(b.param_on(e)));
            spans.push(Span { blue: b, y, first: hits[0], last: hits[hits.len() - 1] });
        }
        ctx.first_last = spans
            .iter()
            .map(|sp| (sp.blue, at(sp.first), at(sp.last)))
            .collect();

        // eta: matching edge crossing r-b1 clockwise, closest to x
        let eta = xi
            .along(s)
            .iter()
            .rev()
            .map(|&c| xi.get(c))
            .find(|c| m_edges.contains(&c.other(s)) && c.direction_of(c.other(s), s) == Direction::Clockwise);
        let mut holes: Vec<RegionBoundary> = Vec::new();
        let mut eta_blue = None;
        if let Some(cp) = eta {
            let g = cp.other(s);
            let b_eta = d.edge(g).blue;
            eta_blue = Some(b_eta);
            ctx.eta = Some(((d.edge(g).red, b_eta), at(cp)));
            let star_eta = d.edge_id(root, b_eta);
            let mut arcs = vec![
                Arc::new(s, d.edge(s).start_param(), cp.param_on(s).clone()),
                Arc::new(g, cp.param_on(g).clone(), d.edge(g).end_param()),
            ];
            match spans.iter().find(|sp| sp.blue == b_eta) {
                None => arcs.push(Arc::new(star_eta, d.edge(star_eta).end_param(), d.edge(star_eta).start_param())),
                Some(sp) => {
                    let z_edge = sp.last.other(e);
                    arcs.push(Arc::new(z_edge, d.edge(z_edge).end_param(), sp.last.param_on(z_edge).clone()));
                    arcs.push(Arc::new(e, sp.last.param_on(e).clone(), sp.y.param_on(e).clone()));
                    arcs.push(Arc::new(star_eta, sp.y.param_on(star_eta).clone(), d.edge(star_eta).start_param()));
                }
            }
            holes.push(region(arcs).map_err(|err| breach(&err.to_string(), &ctx))?);
        }
        for sp in &spans {
            if Some(sp.blue) == eta_blue || std::ptr::eq(sp.first, sp.last) {
                continue;
            }
            let (xe, ze) = (sp.first.other(e), sp.last.other(e));
            holes.push(
                region(vec![
                    Arc::new(xe, sp.first.param_on(xe).clone(), d.edge(xe).end_param()),
                    Arc::new(ze, d.edge(ze).end_param(), sp.last.param_on(ze).clone()),
                    Arc::new(e, sp.last.param_on(e).clone(), sp.first.param_on(e).clone()),
                ])
                .map_err(|err| breach(&err.to_string(), &ctx))?,
            );
        }
        ctx.excluded_regions = holes.len();

        let b1_pos = pos(VertexRef::blue(b1));
        let in_gamma = |p: &Point| {
            locate(&pi, p, &rk_pos) != Location::Outside
                && holes.iter().all(|w| locate(w, p, &b1_pos) != Location::Outside)
        };
        let j: Vec<usize> = blues.iter().copied().filter(|&b| in_gamma(&pos(VertexRef::blue(b)))).collect();
        let gamma_reds: Vec<usize> = m.keys().copied().filter(|&r| in_gamma(&pos(VertexRef::red(r)))).collect();
        ctx.j = j.clone();
        ctx.gamma_reds = gamma_reds.clone();
        if !j.contains(&b1) || j.contains(&bt) {
            return Err(breach("Γ must contain b1 and miss b_t", &ctx));
        }
        if !gamma_reds.contains(&rk) {
            return Err(breach("r_k is not in Γ", &ctx));
        }

        let sub_reds: Vec<usize> = std::iter::once(root).chain(gamma_reds.iter().copied()).collect();
        let inner = self.solve(&sub_reds, &j, depth + 1)?;
        let mut next = m.clone();
        next.extend(inner);
        Ok((next, ctx))
    }
}

fn shuffled(blues: Vec<usize>, seed: Option<u64>) -> Vec<usize> {
    let mut blues = blues;
    if let Some(seed) = seed {
        blues.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    blues
}

fn into_star(root: VertexRef, reds: &[usize], blues: &[usize], m: Matching) -> ShootingStar {
    let mut own = reds.to_vec();
    own.sort_unstable();
    let mut other = blues.to_vec();
    other.sort_unstable();
    ShootingStar { root, own, other, matching: m }
}

/// Search on the red-root drawing; `root` is a red index.
fn run_red(d: &Drawing, root: usize, reds: &[usize], blues: &[usize], opts: &SearchOptions) -> Result<SearchReport> {
    let mut engine = Engine::new(d, root, opts);
    let order = shuffled(blues.to_vec(), opts.order_seed);
    let m = engine.solve(reds, &order, 0)?;
    let star = into_star(VertexRef::red(root), reds, blues, m);
    certify_in(d, &star, reds, blues)
        .map_err(|err| Error::InvariantBreach(format!("search output failed certification: {err}")))?;
    Ok(SearchReport { star, trace: engine.trace })
}

/// Search restricted to the vertices of `sub`, with full options and the
/// repair trace. The input is not validated here.
pub fn find_in(sub: &Subdrawing, root: VertexRef, opts: &SearchOptions) -> Result<SearchReport> {
    if !sub.has_vertex(root) {
        return Err(Error::UnknownVertex(format!("{root:?} is not in the subdrawing")));
    }
    let d = sub.base();
    let (reds, blues) = (sub.active_reds(), sub.active_blues());
    match root.color {
        Color::Red => run_red(d, root.index, &reds, &blues, opts),
        Color::Blue => {
            let swapped = d.color_swapped();
            let mut report = run_red(&swapped, root.index, &blues, &reds, opts)?;
            report.star.root = root;
            Ok(report)
        }
    }
}

/// Validated search over the whole drawing.
pub fn find_shooting_star_with(d: &Drawing, root: VertexRef, opts: &SearchOptions) -> Result<SearchReport> {
    d.require_complete()?;
    let report = validate_simple(d);
    if !report.ok {
        return Err(Error::NotSimple(report));
    }
    find_in(&Subdrawing::full(d), root, opts)
}

/// A shooting star rooted at `root` in the simple drawing `d`.
pub fn find_shooting_star(d: &Drawing, root: VertexRef) -> Result<ShootingStar> {
    Ok(find_shooting_star_with(d, root, &SearchOptions::default())?.star)
}

/// Extends a star over all vertices but `b1` (same root class as `b1`'s
/// opposite) by `b1`, repairing the matching as needed.
pub fn insert_blue_vertex(d: &Drawing, prev: &ShootingStar, b1: usize) -> Result<ShootingStar> {
    let (frame, reds) = match prev.root.color {
        Color::Red => (d.clone(), prev.own.clone()),
        Color::Blue => (d.color_swapped(), prev.own.clone()),
    };
    if prev.other.contains(&b1) {
        return Err(Error::Malformed(format!("vertex #{b1} is already spanned")));
    }
    let mut blues = prev.other.clone();
    blues.push(b1);
    let mut engine = Engine::new(&frame, prev.root.index, &SearchOptions::default());
    let m = engine.insert(prev.matching.clone(), &blues, 0)?;
    let star = into_star(prev.root, &reds, &blues, m);
    Ok(star)
}

/// A single repair step for a red root: `blues` lists the star blues with
/// `b1` last, and `r-b1` must cross `m`.
pub fn repair_step(d: &Drawing, root: usize, m: &Matching, blues: &[usize]) -> Result<(Matching, RepairContext)> {
    let mut engine = Engine::new(d, root, &SearchOptions::default());
    engine.repair(m, blues, 0)
}

/// The repair trace of a red-root search, for instrumentation.
pub fn repair_trace(d: &Drawing, root: VertexRef, opts: &SearchOptions) -> Result<Vec<RepairTrace>> {
    Ok(find_in(&Subdrawing::full(d), root, opts)?.trace)
}
