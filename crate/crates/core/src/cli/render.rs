//! Deterministic SVG drawings of Kekulé structures and lattice path tuples.

use std::fmt::Write;

use crate::benzenoid::{EdgeKind, KekuleStructure};
use crate::lattice::PathTuple;

/// Hexagon side length in pixels; also the lattice spacing for path drawings.
pub const UNIT: f64 = 30.0;
const MARGIN: f64 = 40.0;
const STRAND_GAP: f64 = 3.5;

fn header(out: &mut String, width: f64, height: f64) {
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    out.push_str(
        "<style>.hex{fill:#f4f4f4;stroke:none}.bond{stroke:#555;stroke-width:1.5}\
         .strand{stroke:#000;stroke-width:1.2}.vbar-label{font:10px sans-serif;fill:#b00}\
         .grid{stroke:#aaa;stroke-width:1;stroke-dasharray:2,4}.path{fill:none;stroke-width:4}\
         .endpoint{fill:#000}.endpoint-label{font:13px serif}</style>\n",
    );
}

fn line(out: &mut String, class: &str, a: (f64, f64), b: (f64, f64)) {
    writeln!(
        out,
        r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
        a.0, a.1, b.0, b.1
    )
    .unwrap();
}

/// Hexagons as filled polygons, unselected edges as single strokes, selected
/// edges as a group of three parallel strokes, and each v-bar labelled with
/// its (row, index) position.
pub fn render_kekule_svg(k: &KekuleStructure<'_>) -> String {
    let g = k.graph();
    let sx = UNIT * 3f64.sqrt() / 2.0;
    let sy = UNIT / 2.0;
    let xmin = g.vertices().iter().map(|v| v.x).min().unwrap_or(0);
    let ymin = g.vertices().iter().map(|v| v.y).min().unwrap_or(0);
    let xmax = g.vertices().iter().map(|v| v.x).max().unwrap_or(0);
    let ymax = g.vertices().iter().map(|v| v.y).max().unwrap_or(0);
    let pos = |id: usize| {
        let v = g.vertices()[id];
        (MARGIN + (v.x - xmin) as f64 * sx, MARGIN + (v.y - ymin) as f64 * sy)
    };
    let width = 2.0 * MARGIN + (xmax - xmin) as f64 * sx;
    let height = 2.0 * MARGIN + (ymax - ymin) as f64 * sy;

    let mut out = String::new();
    header(&mut out, width, height);
    for h in g.hexagons() {
        let pts: Vec<String> = h
            .vertices
            .iter()
            .map(|&v| {
                let (x, y) = pos(v);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(out, r#"<polygon class="hex" points="{}"/>"#, pts.join(" ")).unwrap();
    }
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = (pos(e.a), pos(e.b));
        if !k.is_selected(id) {
            line(&mut out, "bond", a, b);
            continue;
        }
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let len = (dx * dx + dy * dy).sqrt();
        let (nx, ny) = (-dy / len * STRAND_GAP, dx / len * STRAND_GAP);
        out.push_str(r#"<g class="bond selected">"#);
        out.push('\n');
        for s in [-1.0, 0.0, 1.0] {
            line(&mut out, "strand", (a.0 + s * nx, a.1 + s * ny), (b.0 + s * nx, b.1 + s * ny));
        }
        out.push_str("</g>\n");
        if let (EdgeKind::Vertical, Some((row, j))) = (e.kind, e.label) {
            writeln!(
                out,
                r#"<text class="vbar-label" x="{:.2}" y="{:.2}">({row},{j})</text>"#,
                a.0 + 5.0,
                (a.1 + b.1) / 2.0 + 3.0
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

const PATH_COLOURS: [&str; 6] = ["#1f4e9c", "#c0392b", "#1e8449", "#8e44ad", "#d35400", "#117a65"];

/// Dotted lattice, one thick polyline per path, and labelled endpoints
/// a1..am (sources) and b1..bm (destinations).
pub fn render_paths_svg(t: &PathTuple) -> String {
    let verts: Vec<Vec<(i64, i64)>> = t
        .paths()
        .iter()
        .map(|p| p.vertices().iter().map(|v| (v.x, v.y)).collect())
        .collect();
    let all = verts.iter().flatten();
    let xmin = all.clone().map(|v| v.0).min().unwrap_or(0) - 1;
    let xmax = all.clone().map(|v| v.0).max().unwrap_or(0) + 1;
    let ymin = all.clone().map(|v| v.1).min().unwrap_or(0) - 1;
    let ymax = all.map(|v| v.1).max().unwrap_or(0) + 1;
    // y grows upwards on the lattice
    let pos = |x: i64, y: i64| (MARGIN + (x - xmin) as f64 * UNIT, MARGIN + (ymax - y) as f64 * UNIT);
    let width = 2.0 * MARGIN + (xmax - xmin) as f64 * UNIT;
    let height = 2.0 * MARGIN + (ymax - ymin) as f64 * UNIT;

    let mut out = String::new();
    header(&mut out, width, height);
    for x in xmin..=xmax {
        line(&mut out, "grid", pos(x, ymin), pos(x, ymax));
    }
    for y in ymin..=ymax {
        line(&mut out, "grid", pos(xmin, y), pos(xmax, y));
    }
    for (i, path) in verts.iter().enumerate() {
        let pts: Vec<String> = path
            .iter()
            .map(|&(x, y)| {
                let (px, py) = pos(x, y);
                format!("{px:.2},{py:.2}")
            })
            .collect();
        writeln!(
            out,
            r#"<polyline class="path" stroke="{}" points="{}"/>"#,
            PATH_COLOURS[i % PATH_COLOURS.len()],
            pts.join(" ")
        )
        .unwrap();
    }
    for (i, path) in verts.iter().enumerate() {
        for (name, &(x, y), dx) in [("a", &path[0], -22.0), ("b", &path[path.len() - 1], 8.0)] {
            let (px, py) = pos(x, y);
            writeln!(out, r#"<circle class="endpoint" cx="{px:.2}" cy="{py:.2}" r="4"/>"#).unwrap();
            writeln!(
                out,
                r#"<text class="endpoint-label" x="{:.2}" y="{:.2}">{name}<tspan baseline-shift="sub" font-size="9">{}</tspan></text>"#,
                px + dx,
                py + 16.0,
                i + 1
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
