//! Deterministic SVG output.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::drawing::{Color, Drawing, EdgeId};
use crate::error::{Error, Result};
use crate::star::ShootingStar;

#[derive(Clone, Debug)]
pub struct ColorMap {
    pub star: String,
    pub matching: String,
    pub other: String,
    pub red: String,
    pub blue: String,
}

impl Default for ColorMap {
    fn default() -> Self {
        ColorMap {
            star: "#1f5fbf".into(),
            matching: "#c8102e".into(),
            other: "#b0b0b0".into(),
            red: "#d62728".into(),
            blue: "#1f77b4".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub edge_width: f64,
    pub tree_width: f64,
    pub vertex_radius: f64,
    pub labels: bool,
    pub colors: ColorMap,
    /// Edges drawn as root-star edges.
    pub star: BTreeSet<EdgeId>,
    /// Edges drawn as matching edges.
    pub matching: BTreeSet<EdgeId>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 640.0,
            height: 640.0,
            margin: 32.0,
            edge_width: 1.0,
            tree_width: 3.0,
            vertex_radius: 5.0,
            labels: true,
            colors: ColorMap::default(),
            star: BTreeSet::new(),
            matching: BTreeSet::new(),
        }
    }
}

impl RenderOptions {
    /// Highlights the edges of a shooting star.
    pub fn highlight(mut self, d: &Drawing, star: &ShootingStar) -> Result<Self> {
        let ids = star.edge_ids(d)?;
        let k = star.other.len();
        self.star = ids[..k].iter().copied().collect();
        self.matching = ids[k..].iter().copied().collect();
        Ok(self)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// The drawing as SVG. Other edges come first, then matching edges, star
/// edges, and vertices, each in index order.
pub fn render_svg(d: &Drawing, opts: &RenderOptions) -> Result<String> {
    let k = d.edges().len();
    if let Some(e) = opts.star.iter().chain(&opts.matching).find(|&&e| e >= k) {
        return Err(Error::Malformed(format!("highlighted edge #{e} is not in the drawing")));
    }
    let pts: Vec<(f64, f64)> = d
        .vertices()
        .map(|(_, v)| v.position.to_f64())
        .chain(d.edges().iter().flat_map(|e| e.polyline.iter().map(|p| p.to_f64())))
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = ((opts.width - 2.0 * opts.margin).min(opts.height - 2.0 * opts.margin)) / span;
    let map = |(x, y): (f64, f64)| (opts.margin + (x - x0) * scale, opts.height - opts.margin - (y - y0) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(opts.width),
        num(opts.height),
        num(opts.width),
        num(opts.height)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let mut layer = |class: &str, color: &str, width: f64, edges: &mut dyn Iterator<Item = EdgeId>| {
        let _ = writeln!(out, r#"<g class="{class}" stroke="{color}" stroke-width="{}" fill="none">"#, num(width));
        for e in edges {
            let pts: Vec<String> = d
                .edge(e)
                .polyline
                .iter()
                .map(|p| {
                    let (x, y) = map(p.to_f64());
                    format!("{},{}", num(x), num(y))
                })
                .collect();
            let _ = writeln!(out, r#"<polyline data-edge="{}" points="{}"/>"#, escape(&d.edge_name(e)), pts.join(" "));
        }
        let _ = writeln!(out, "</g>");
    };
    let c = &opts.colors;
    layer(
        "other",
        &c.other,
        opts.edge_width,
        &mut (0..k).filter(|e| !opts.star.contains(e) && !opts.matching.contains(e)),
    );
    layer("matching", &c.matching, opts.tree_width, &mut opts.matching.iter().copied());
    layer("star", &c.star, opts.tree_width, &mut opts.star.iter().copied());

    let _ = writeln!(out, r#"<g class="vertices" stroke="black" stroke-width="1">"#);
    for (v, vertex) in d.vertices() {
        let (x, y) = map(vertex.position.to_f64());
        let fill = if v.color == Color::Red { &c.red } else { &c.blue };
        let _ = writeln!(
            out,
            r#"<circle data-vertex="{}" cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
            escape(&vertex.id),
            num(x),
            num(y),
            num(opts.vertex_radius)
        );
        if opts.labels {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" stroke="none">{}</text>"#,
                num(x + opts.vertex_radius + 2.0),
                num(y - opts.vertex_radius - 2.0),
                escape(&vertex.id)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
