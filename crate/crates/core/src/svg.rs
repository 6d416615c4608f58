//! SVG output for two-dimensional drawings.

use std::fmt::Write;

use crate::draw::DominanceDrawing;
use crate::error::{Error, Result};
use crate::graph::Dag;

pub const DEFAULT_CELL: u32 = 40;
const RADIUS: u32 = 10;

/// Renders with the default 40px grid cell.
pub fn render_svg(drawing: &DominanceDrawing, g: &Dag) -> Result<String> {
    render_svg_with_cell(drawing, g, DEFAULT_CELL)
}

/// Vertex `v` is drawn at grid point `(D_1(v), top - D_2(v))`, with
/// `top = max(n - 1, max D_2)`, so dominance points up and to the right.
/// Edges of `g` whose endpoints are both in the drawing become straight
/// segments. Elements are emitted in vertex order, then edge order.
pub fn render_svg_with_cell(drawing: &DominanceDrawing, g: &Dag, cell: u32) -> Result<String> {
    if drawing.k() != 2 {
        return Err(Error::NotTwoDimensional(drawing.k()));
    }
    let cell = i64::from(cell);
    let n = drawing.len() as i64;
    let max_x = drawing.extent(0).max(0);
    let top = drawing.extent(1).max(n - 1).max(0);
    let at = |p: &[i64]| (cell + p[0] * cell, cell + (top - p[1]) * cell);
    let width = 2 * cell + max_x * cell;
    let height = 2 * cell + top * cell;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    out.push_str("  <g stroke=\"#555555\" stroke-width=\"1.5\">\n");
    for (u, v) in g.edges() {
        let (Some(pu), Some(pv)) = (drawing.get(g.id(u)), drawing.get(g.id(v))) else {
            continue;
        };
        let ((x1, y1), (x2, y2)) = (at(pu), at(pv));
        let _ = writeln!(
            out,
            "    <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>"
        );
    }
    out.push_str("  </g>\n");
    out.push_str("  <g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n");
    for (id, p) in drawing.iter() {
        let (x, y) = at(p);
        let _ = writeln!(
            out,
            "    <circle cx=\"{x}\" cy=\"{y}\" r=\"{RADIUS}\" fill=\"#ffffff\" stroke=\"#000000\"/>"
        );
        let _ = writeln!(
            out,
            "    <text x=\"{x}\" y=\"{}\">{}</text>",
            y + 4,
            escape(id)
        );
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}
