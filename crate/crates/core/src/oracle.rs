//! Exhaustive ground truth at desk scale.
//!
//! Nothing here assumes the drawing is simple or complete: conflicts are
//! decided by direct geometric tests on the polylines, and missing edges are
//! simply unavailable.

use crate::crossing::edges_conflict;
use crate::drawing::{Color, Drawing, EdgeId, VertexRef};
use crate::error::{Error, Result};
use crate::star::ShootingStar;

/// Edges of a drawing with adjacency "these two edges conflict".
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    adjacent: Vec<Vec<bool>>,
}

impl ConflictGraph {
    #[allow(clippy::needless_range_loop)]
    pub fn new(d: &Drawing) -> ConflictGraph {
        let k = d.edges().len();
        let mut adjacent = vec![vec![false; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let hit = edges_conflict(d, a, b);
                adjacent[a][b] = hit;
                adjacent[b][a] = hit;
            }
        }
        ConflictGraph { adjacent }
    }

    pub fn len(&self) -> usize {
        self.adjacent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacent.is_empty()
    }

    pub fn conflict(&self, a: EdgeId, b: EdgeId) -> bool {
        self.adjacent[a][b]
    }

    pub fn degree(&self, a: EdgeId) -> usize {
        self.adjacent[a].iter().filter(|&&x| x).count()
    }

    pub fn independent(&self, edges: &[EdgeId]) -> bool {
        edges.iter().enumerate().all(|(i, &a)| edges[i + 1..].iter().all(|&b| !self.adjacent[a][b]))
    }
}

/// Node counter shared by a search; exceeding it is an explicit refusal.
struct Budget {
    left: u64,
    what: &'static str,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded(format!("{} search exceeded its node budget", self.what)));
        }
        self.left -= 1;
        Ok(())
    }
}

/// A matched vertex, its partner and the edge between them.
type Pick = (usize, usize, EdgeId);

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub count: usize,
    pub witnesses: Vec<ShootingStar>,
}

/// Every shooting star rooted at `root`. Refuses when the number of candidate
/// matchings, `other^(own - 1)`, exceeds `budget`.
pub fn enumerate_shooting_stars(d: &Drawing, root: VertexRef, budget: u64) -> Result<Enumeration> {
    let (own, other) = match root.color {
        Color::Red => (d.m(), d.n()),
        Color::Blue => (d.n(), d.m()),
    };
    let candidates = (other as u64).checked_pow((own - 1) as u32).filter(|&c| c <= budget);
    if candidates.is_none() {
        return Err(Error::BudgetExceeded(format!("{other}^{} candidate matchings exceed {budget}", own - 1)));
    }
    let edge = |w: usize, o: usize| match root.color {
        Color::Red => d.edge_between(w, o),
        Color::Blue => d.edge_between(o, w),
    };
    let conflicts = ConflictGraph::new(d);
    let star: Option<Vec<EdgeId>> = (0..other).map(|o| edge(root.index, o)).collect();
    let mut out = Enumeration { count: 0, witnesses: Vec::new() };
    let Some(star) = star else { return Ok(out) };
    if !conflicts.independent(&star) {
        return Ok(out);
    }
    let rest: Vec<usize> = (0..own).filter(|&w| w != root.index).collect();
    let mut chosen: Vec<(usize, usize, EdgeId)> = Vec::new();
    let mut used = star;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        rest: &[usize],
        other: usize,
        edge: &dyn Fn(usize, usize) -> Option<EdgeId>,
        conflicts: &ConflictGraph,
        used: &mut Vec<EdgeId>,
        chosen: &mut Vec<(usize, usize, EdgeId)>,
        emit: &mut dyn FnMut(&[Pick]),
    ) {
        if i == rest.len() {
            emit(chosen);
            return;
        }
        let w = rest[i];
        for o in 0..other {
            let Some(e) = edge(w, o) else { continue };
            if used.iter().any(|&u| conflicts.conflict(u, e)) {
                continue;
            }
            used.push(e);
            chosen.push((w, o, e));
            rec(i + 1, rest, other, edge, conflicts, used, chosen, emit);
            chosen.pop();
            used.pop();
        }
    }

    let mut emit = |c: &[(usize, usize, EdgeId)]| {
        out.count += 1;
        out.witnesses.push(ShootingStar {
            root,
            own: (0..own).collect(),
            other: (0..other).collect(),
            matching: c.iter().map(|&(w, o, _)| (w, o)).collect(),
        });
    };
    rec(0, &rest, other, &edge, &conflicts, &mut used, &mut chosen, &mut emit);
    Ok(out)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn vertex_slot(d: &Drawing, e: EdgeId) -> (usize, usize) {
    let edge = d.edge(e);
    (edge.red, d.m() + edge.blue)
}

/// Whether the given edges connect all `m + n` vertices.
fn spans(d: &Drawing, edges: impl Iterator<Item = EdgeId>) -> bool {
    let total = d.m() + d.n();
    let mut parent: Vec<usize> = (0..total).collect();
    let mut parts = total;
    for e in edges {
        let (a, b) = vertex_slot(d, e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            parts -= 1;
        }
    }
    parts == 1
}

/// A plane spanning tree, or `None` when the search space is exhausted.
///
/// Edges are decided in order (include, then exclude). A branch is cut when
/// the chosen edges plus all later edges compatible with them no longer
/// connect the vertices.
pub fn plane_spanning_tree(d: &Drawing, budget: u64) -> Result<Option<Vec<EdgeId>>> {
    let conflicts = ConflictGraph::new(d);
    let k = d.edges().len();
    let mut order: Vec<EdgeId> = (0..k).collect();
    order.sort_by_key(|&e| (conflicts.degree(e), e));
    let mut budget = Budget { left: budget, what: "spanning tree" };

    fn rec(
        d: &Drawing,
        conflicts: &ConflictGraph,
        order: &[EdgeId],
        i: usize,
        chosen: &mut Vec<EdgeId>,
        budget: &mut Budget,
    ) -> Result<Option<Vec<EdgeId>>> {
        budget.tick()?;
        if chosen.len() + 1 == d.m() + d.n() {
            return Ok(Some(chosen.clone()));
        }
        let compatible = |e: &EdgeId| chosen.iter().all(|&c| !conflicts.conflict(c, *e));
        if !spans(d, chosen.iter().copied().chain(order[i..].iter().copied().filter(compatible))) {
            return Ok(None);
        }
        let e = order[i];
        if compatible(&e) && !spans_cycle(d, chosen, e) {
            chosen.push(e);
            let found = rec(d, conflicts, order, i + 1, chosen, budget)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        rec(d, conflicts, order, i + 1, chosen, budget)
    }

    let total = d.m() + d.n();
    if total == 1 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    rec(d, &conflicts, &order, 0, &mut Vec::new(), &mut budget)
}

/// Would adding `e` close a cycle among `chosen`?
fn spans_cycle(d: &Drawing, chosen: &[EdgeId], e: EdgeId) -> bool {
    let total = d.m() + d.n();
    let mut parent: Vec<usize> = (0..total).collect();
    for &c in chosen {
        let (a, b) = vertex_slot(d, c);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let (a, b) = vertex_slot(d, e);
    find(&mut parent, a) == find(&mut parent, b)
}

/// Largest set of pairwise conflict-free edges, by branch and bound over the
/// conflict graph with vertices taken in order of descending degree.
pub fn max_plane_subdrawing(d: &Drawing, budget: u64) -> Result<Vec<EdgeId>> {
    let conflicts = ConflictGraph::new(d);
    let mut order: Vec<EdgeId> = (0..conflicts.len()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(conflicts.degree(e)), e));
    let mut budget = Budget { left: budget, what: "maximum plane subdrawing" };
    let mut best = Vec::new();

    fn rec(
        conflicts: &ConflictGraph,
        candidates: &[EdgeId],
        current: &mut Vec<EdgeId>,
        best: &mut Vec<EdgeId>,
        budget: &mut Budget,
    ) -> Result<()> {
        budget.tick()?;
        if current.len() + candidates.len() <= best.len() {
            return Ok(());
        }
        let Some((&v, rest)) = candidates.split_first() else {
            *best = current.clone();
            return Ok(());
        };
        let without_neighbors: Vec<EdgeId> = rest.iter().copied().filter(|&u| !conflicts.conflict(u, v)).collect();
        current.push(v);
        rec(conflicts, &without_neighbors, current, best, budget)?;
        current.pop();
        rec(conflicts, rest, current, best, budget)
    }

    rec(&conflicts, &order, &mut Vec::new(), &mut best, &mut budget)?;
    best.sort_unstable();
    Ok(best)
}
