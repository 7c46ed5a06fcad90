//! JSON explanations of how a tree was built, keyed by vertex id.

use serde_json::{json, Value};
use shooting_star::geom::format_rational;
use shooting_star::monotone::{MonotoneFrame, MonotonePick};
use shooting_star::search::RepairTrace;
use shooting_star::wedge::WedgeAssignment;
use shooting_star::{Color, Drawing, Point, VertexRef};

fn id(d: &Drawing, color: Color, index: usize) -> String {
    d.vertex(VertexRef { color, index }).id.clone()
}

fn point(p: &Point) -> Value {
    json!([format_rational(&p.x), format_rational(&p.y)])
}

pub fn monotone(d: &Drawing, picks: &[MonotonePick], root: VertexRef) -> Value {
    // picks index the frame, whose ids match the input
    let frame = MonotoneFrame::new(d).expect("frame already built once");
    let f = &frame.drawing;
    let picks: Vec<Value> = picks
        .iter()
        .map(|p| {
            let hit = |h: &Option<_>| match h {
                Some(shooting_star::monotone::RayHit { blue, point: at }) => {
                    json!({ "vertex": id(f, Color::Blue, *blue), "at": point(at) })
                }
                None => Value::Null,
            };
            json!({
                "vertex": id(f, Color::Red, p.w),
                "case": p.case,
                "up": hit(&p.up),
                "down": hit(&p.down),
                "b_i": id(f, Color::Blue, p.b_i),
                "b_j": p.b_j.map(|b| id(f, Color::Blue, b)),
                "chosen": id(f, Color::Blue, p.b_w),
            })
        })
        .collect();
    json!({ "method": "monotone", "root": d.vertex(root).id, "picks": picks })
}

pub fn wedge(d: &Drawing, a: &WedgeAssignment) -> Value {
    let own = a.root.color;
    let other = own.other();
    let picks: Vec<Value> = a
        .picks
        .iter()
        .map(|p| {
            json!({
                "vertex": id(d, own, p.w),
                "wedge": [id(d, other, p.wedge.0), id(d, other, p.wedge.1)],
                "chosen": id(d, other, p.chosen),
            })
        })
        .collect();
    let rays: Vec<String> = a.rays.iter().map(|&i| id(d, other, i)).collect();
    json!({ "method": "straightline", "root": d.vertex(a.root).id, "rays": rays, "picks": picks })
}

pub fn trace(d: &Drawing, root: VertexRef, steps: &[RepairTrace]) -> Value {
    let other = root.color.other();
    let steps: Vec<Value> = steps
        .iter()
        .map(|s| {
            json!({
                "depth": s.depth,
                "inserted": id(d, other, s.b1),
                "case": s.case,
                "mirrored": s.mirrored,
                "eta": s.eta,
                "crossings_before": s.before,
                "crossings_after": s.after,
            })
        })
        .collect();
    json!({ "method": "general", "root": d.vertex(root).id, "repairs": steps })
}
