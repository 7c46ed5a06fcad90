//! JSON documents: drawings and shooting-star trees.
//!
//! Coordinates are written as strings (`"3"`, `"-7/2"`). On input, decimal
//! strings and plain JSON numbers are accepted too and read exactly from
//! their decimal text.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::drawing::{Color, Drawing, Edge, Vertex, VertexRef};
use crate::error::{Error, Result};
use crate::geom::{format_rational, parse_rational, Point, Rational};
use crate::star::ShootingStar;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Coord {
    Text(String),
    Number(serde_json::Number),
}

impl Coord {
    fn value(&self) -> Result<Rational> {
        match self {
            Coord::Text(s) => parse_rational(s),
            Coord::Number(n) => parse_rational(&n.to_string()),
        }
    }

    fn of(r: &Rational) -> Coord {
        Coord::Text(format_rational(r))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VertexDoc {
    pub id: String,
    pub x: Coord,
    pub y: Coord,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct EdgeDoc {
    pub red: String,
    pub blue: String,
    pub polyline: Vec<[Coord; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DrawingDoc {
    pub reds: Vec<VertexDoc>,
    pub blues: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub subdrawing: bool,
}

fn point_of(x: &Coord, y: &Coord) -> Result<Point> {
    Ok(Point::new(x.value()?, y.value()?))
}

impl DrawingDoc {
    pub fn to_drawing(&self) -> Result<Drawing> {
        let vertices = |docs: &[VertexDoc], color| -> Result<Vec<Vertex>> {
            docs.iter()
                .map(|v| Ok(Vertex { id: v.id.clone(), color, position: point_of(&v.x, &v.y)? }))
                .collect()
        };
        let reds = vertices(&self.reds, Color::Red)?;
        let blues = vertices(&self.blues, Color::Blue)?;
        let red_ids: HashMap<&str, usize> =
            reds.iter().enumerate().map(|(i, v)| (v.id.as_str(), i)).collect();
        let blue_ids: HashMap<&str, usize> =
            blues.iter().enumerate().map(|(i, v)| (v.id.as_str(), i)).collect();
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let red = *red_ids
                .get(e.red.as_str())
                .ok_or_else(|| Error::UnknownVertex(e.red.clone()))?;
            let blue = *blue_ids
                .get(e.blue.as_str())
                .ok_or_else(|| Error::UnknownVertex(e.blue.clone()))?;
            let polyline = e.polyline.iter().map(|[x, y]| point_of(x, y)).collect::<Result<_>>()?;
            edges.push(Edge { red, blue, polyline });
        }
        Drawing::new(reds, blues, edges, self.subdrawing)
    }

    pub fn from_drawing(d: &Drawing) -> DrawingDoc {
        let vertex = |v: &Vertex| VertexDoc {
            id: v.id.clone(),
            x: Coord::of(&v.position.x),
            y: Coord::of(&v.position.y),
        };
        DrawingDoc {
            reds: d.reds().iter().map(vertex).collect(),
            blues: d.blues().iter().map(vertex).collect(),
            edges: d
                .edges()
                .iter()
                .map(|e| EdgeDoc {
                    red: d.reds()[e.red].id.clone(),
                    blue: d.blues()[e.blue].id.clone(),
                    polyline: e.polyline.iter().map(|p| [Coord::of(&p.x), Coord::of(&p.y)]).collect(),
                })
                .collect(),
            subdrawing: d.is_subdrawing(),
        }
    }
}

pub fn parse_drawing(text: &str) -> Result<Drawing> {
    let doc: DrawingDoc = serde_json::from_str(text)?;
    doc.to_drawing()
}

/// Pretty JSON with a trailing newline; byte-identical for equal drawings.
pub fn write_drawing(d: &Drawing) -> String {
    let mut s = serde_json::to_string_pretty(&DrawingDoc::from_drawing(d))
        .expect("drawing documents always serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeEdgeDoc {
    pub red: String,
    pub blue: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TreeDoc {
    pub root: String,
    pub edges: Vec<TreeEdgeDoc>,
}

impl TreeDoc {
    pub fn from_star(d: &Drawing, star: &ShootingStar) -> TreeDoc {
        TreeDoc {
            root: d.vertex(star.root).id.clone(),
            edges: star
                .edge_pairs()
                .into_iter()
                .map(|(r, b)| TreeEdgeDoc { red: d.reds()[r].id.clone(), blue: d.blues()[b].id.clone() })
                .collect(),
        }
    }

    /// Resolves ids against the drawing and rebuilds the star structure.
    pub fn to_star(&self, d: &Drawing) -> Result<ShootingStar> {
        let root = d.find_vertex(&self.root).ok_or_else(|| Error::UnknownVertex(self.root.clone()))?;
        let mut pairs = Vec::new();
        for e in &self.edges {
            let r = d.find_vertex(&e.red).filter(|v| v.color == Color::Red);
            let b = d.find_vertex(&e.blue).filter(|v| v.color == Color::Blue);
            match (r, b) {
                (Some(r), Some(b)) => pairs.push((r.index, b.index)),
                _ => return Err(Error::UnknownVertex(format!("{}-{}", e.red, e.blue))),
            }
        }
        ShootingStar::from_edge_pairs(root, &pairs)
    }
}

pub fn root_ref(d: &Drawing, id: &str) -> Result<VertexRef> {
    d.find_vertex(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
}
