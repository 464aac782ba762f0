//! SVG rendering of colored graphs.
//!
//! Fills come from a fixed table indexed by palette position, so the same
//! color id looks the same in every picture. Palettes longer than the table
//! continue with golden-angle hues.

use std::fmt::Write;

use anyhow::{bail, Result};
use nonrep::colorings::{quadrant, Quadrant};
use nonrep::{ColoredGraph, ConstructionKind, VertexType};

const FILLS: [&str; 28] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000", "#aaffc3",
    "#808000", "#ffd8b1", "#000075", "#808080", "#2f4f4f", "#7fffd4", "#ff1493", "#1e90ff",
    "#ffdab9", "#8fbc8f", "#b8860b", "#dda0dd",
];

const CELL: i64 = 20;
const GAP: i64 = 20;

pub fn fill(id: u32) -> String {
    match FILLS.get(id as usize) {
        Some(f) => (*f).to_string(),
        None => {
            let hue = (id as f64 * 137.507_764) % 360.0;
            format!("hsl({hue:.1},65%,55%)")
        }
    }
}

fn rect(out: &mut String, x: i64, y: i64, color: u32, title: &str) {
    let _ = writeln!(
        out,
        r#"<rect class="cell" x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{}"><title>{}</title></rect>"#,
        fill(color),
        escape(title)
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn svg(cg: &ColoredGraph) -> Result<String> {
    let Some(spec) = cg.construction() else {
        bail!("only constructed colorings can be rendered");
    };
    match spec.kind {
        ConstructionKind::Rook { n } => Ok(board(cg, n)),
        ConstructionKind::Biclique { n } => Ok(board(cg, 2 * n)),
        _ => lattice(cg),
    }
}

/// Row-major lattice picture: `x` grows downwards, `y` to the right, one
/// sheet per `z` layer for 3D regions.
fn lattice(cg: &ColoredGraph) -> Result<String> {
    let g = cg.graph();
    let dim = g.dim();
    if !(1..=3).contains(&dim) {
        bail!("cannot render a {dim}-dimensional region");
    }
    let coord = |v: usize, i: usize| g.payload(v).get(i).copied().unwrap_or(0);
    let span = |i: usize| {
        let vals = (0..g.vertex_count()).map(|v| coord(v, i));
        (vals.clone().min().unwrap_or(0), vals.max().unwrap_or(0))
    };
    let (x0, x1) = span(0);
    let (y0, y1) = span(1);
    let (z0, z1) = span(2);
    let rows = x1 - x0 + 1;
    let cols = if dim >= 2 { y1 - y0 + 1 } else { 1 };
    let sheets = if dim == 3 { z1 - z0 + 1 } else { 1 };
    let sheet_w = cols * CELL;
    let width = sheets * sheet_w + (sheets - 1) * GAP;
    let height = rows * CELL + GAP;

    let mut out = header(width, height);
    for s in 0..sheets {
        let z = z0 + s;
        let dx = s * (sheet_w + GAP);
        let _ = writeln!(
            out,
            r#"<g class="sheet" data-z="{z}" transform="translate({dx},{GAP})">"#
        );
        if dim == 3 {
            let _ = writeln!(out, r#"<text x="0" y="-6" font-size="12">z = {z}</text>"#);
        }
        for v in 0..g.vertex_count() {
            if dim == 3 && coord(v, 2) != z {
                continue;
            }
            let r = coord(v, 0) - x0;
            let c = if dim >= 2 { coord(v, 1) - y0 } else { 0 };
            let title = format!("{:?} {}", g.payload(v), cg.label(v));
            rect(&mut out, c * CELL, r * CELL, cg.color(v), &title);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Square board with the color label in each cell. Rook cells carry their
/// type as an outline; biclique cells as quadrant shading.
fn board(cg: &ColoredGraph, side: usize) -> String {
    let g = cg.graph();
    let width = side as i64 * CELL;
    let mut out = header(width, width);
    let half = side / 2;
    let biclique = cg.types().is_none();
    for v in 0..g.vertex_count() {
        let p = g.payload(v);
        let (i, j) = (p[0], p[1]);
        let (x, y) = (j * CELL, i * CELL);
        rect(&mut out, x, y, cg.color(v), cg.label(v));
        let shade = match cg.types().map(|t| t[v]) {
            Some(VertexType::Yellow) => Some(("type-yellow", "#ffd700")),
            Some(VertexType::Blue) => Some(("type-blue", "#1e3cff")),
            None if biclique => match quadrant(half, i as usize, j as usize) {
                Quadrant::UpperLeft | Quadrant::LowerRight => Some(("quadrant-zero", "#000000")),
                Quadrant::UpperRight => Some(("quadrant-pattern", "#555555")),
                Quadrant::LowerLeft => Some(("quadrant-distinct", "#aaaaaa")),
            },
            None => None,
        };
        if let Some((class, stroke)) = shade {
            let _ = writeln!(
                out,
                r#"<rect class="{class}" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="{stroke}" stroke-width="2"/>"#,
                x + 1,
                y + 1,
                CELL - 2,
                CELL - 2
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="9" text-anchor="middle">{}</text>"#,
            x + CELL / 2,
            y + CELL / 2 + 3,
            escape(cg.label(v))
        );
    }
    out.push_str("</svg>\n");
    out
}

fn header(width: i64, height: i64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    )
}
