//! Shooting stars and their certification.

use std::collections::{BTreeMap, BTreeSet};

use crate::crossing::edges_conflict;
use crate::drawing::{Color, Drawing, EdgeId, VertexRef};
use crate::error::{Error, Result};

/// A plane spanning tree of height two that contains the whole star of its
/// root. The star edges are implicit; `matching` assigns every other vertex
/// of the root's class to one vertex of the opposite class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShootingStar {
    pub root: VertexRef,
    /// Indices of the spanned vertices of the root's own class (root included).
    pub own: Vec<usize>,
    /// Indices of the spanned vertices of the opposite class.
    pub other: Vec<usize>,
    pub matching: BTreeMap<usize, usize>,
}

impl ShootingStar {
    /// `(red, blue)` index pairs of all tree edges, star edges first.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let orient = |own: usize, other: usize| match self.root.color {
            Color::Red => (own, other),
            Color::Blue => (other, own),
        };
        let mut pairs: Vec<_> = self.other.iter().map(|&o| orient(self.root.index, o)).collect();
        pairs.extend(self.matching.iter().map(|(&w, &o)| orient(w, o)));
        pairs
    }

    pub fn edge_ids(&self, d: &Drawing) -> Result<Vec<EdgeId>> {
        self.edge_pairs()
            .into_iter()
            .map(|(r, b)| {
                d.edge_between(r, b).ok_or_else(|| {
                    Error::Certification(format!(
                        "edge {}-{} is not drawn",
                        d.reds()[r].id,
                        d.blues()[b].id
                    ))
                })
            })
            .collect()
    }

    /// Sorted edge pairs; two stars with equal keys are the same tree.
    pub fn key(&self) -> Vec<(usize, usize)> {
        let mut pairs = self.edge_pairs();
        pairs.sort();
        pairs
    }

    /// Rebuilds a star from an unordered edge list. Every edge at the root is
    /// a star edge; each remaining edge must attach one distinct vertex of the
    /// root's class.
    pub fn from_edge_pairs(root: VertexRef, pairs: &[(usize, usize)]) -> Result<ShootingStar> {
        let mut own = BTreeSet::from([root.index]);
        let mut other = BTreeSet::new();
        let mut star = BTreeSet::new();
        let mut matching = BTreeMap::new();
        for &(r, b) in pairs {
            let (w, o) = match root.color {
                Color::Red => (r, b),
                Color::Blue => (b, r),
            };
            if w == root.index {
                if !star.insert(o) {
                    return Err(Error::Certification("repeated star edge".into()));
                }
            } else if matching.insert(w, o).is_some() {
                return Err(Error::Certification(format!(
                    "vertex #{w} has two edges outside the star"
                )));
            }
            own.insert(w);
            other.insert(o);
        }
        if other != star {
            return Err(Error::Certification("star of the root is incomplete".into()));
        }
        Ok(ShootingStar {
            root,
            own: own.into_iter().collect(),
            other: other.into_iter().collect(),
            matching,
        })
    }
}

/// First crossing pair among the given edges, decided by direct geometric
/// tests on the polylines.
pub fn verify_plane(d: &Drawing, edges: &[EdgeId]) -> Option<(EdgeId, EdgeId)> {
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if edges_conflict(d, a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Checks every shooting-star property against the given vertex sets:
/// root star present, one matching edge per non-root vertex of the root's
/// class, a spanning tree, and no crossings.
pub fn certify_in(d: &Drawing, star: &ShootingStar, own: &[usize], other: &[usize]) -> Result<()> {
    let fail = |msg: String| Err(Error::Certification(msg));
    let mut own_sorted = own.to_vec();
    own_sorted.sort_unstable();
    let mut other_sorted = other.to_vec();
    other_sorted.sort_unstable();
    if star.own != own_sorted || star.other != other_sorted {
        return fail("star does not span the requested vertex set".into());
    }
    if !star.own.contains(&star.root.index) {
        return fail("root is not among the spanned vertices".into());
    }
    let expected: BTreeSet<usize> = star.own.iter().copied().filter(|&w| w != star.root.index).collect();
    let matched: BTreeSet<usize> = star.matching.keys().copied().collect();
    if expected != matched {
        return fail("matching does not cover exactly the non-root vertices of the root's class".into());
    }
    if let Some((&w, _)) = star.matching.iter().find(|(_, o)| other_sorted.binary_search(o).is_err()) {
        return fail(format!("vertex #{w} is matched outside the spanned set"));
    }
    let ids = star.edge_ids(d)?;
    if ids.len() + 1 != own.len() + other.len() {
        return fail(format!("{} edges for {} vertices", ids.len(), own.len() + other.len()));
    }
    if let Some((a, b)) = verify_plane(d, &ids) {
        return fail(format!("edges {} and {} cross", d.edge_name(a), d.edge_name(b)));
    }
    Ok(())
}

/// [`certify_in`] over every vertex of the drawing.
pub fn certify(d: &Drawing, star: &ShootingStar) -> Result<()> {
    let (own, other) = match star.root.color {
        Color::Red => (d.m(), d.n()),
        Color::Blue => (d.n(), d.m()),
    };
    certify_in(d, star, &(0..own).collect::<Vec<_>>(), &(0..other).collect::<Vec<_>>())
}
