//! SVG renderings of instances, colorings, and violating homothets.
//!
//! Rationals are rasterized to f64 for display only; the exact values are
//! recorded in an SVG comment and never feed back into any computation.

use num::ToPrimitive;

use crate::coloring::Coloring;
use crate::gen::Instance;
use crate::geom::{canonical_map, Homothet, Point, Scalar};

const PALETTE: &[&str] = &[
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

fn approx(s: &Scalar) -> f64 {
    s.to_f64().unwrap_or(f64::NAN)
}

/// Render the instance; optionally with point colors and a highlighted
/// homothet (given in canonical coordinates, drawn in world coordinates).
pub fn render(
    instance: &Instance,
    coloring: Option<&Coloring>,
    highlight: Option<&Homothet>,
) -> String {
    let size = 640.0;
    let margin = 40.0;

    let mut corners: Vec<Point> = vec![
        instance.triangle.v0.clone(),
        instance.triangle.v1.clone(),
        instance.triangle.v2.clone(),
    ];
    corners.extend(instance.points.points.iter().cloned());
    let world_highlight = highlight.and_then(|h| {
        let inv = canonical_map(&instance.triangle).ok()?.inverse();
        Some(h.to_world(&inv))
    });
    if let Some(t) = &world_highlight {
        corners.extend([t.v0.clone(), t.v1.clone(), t.v2.clone()]);
    }
    let xs: Vec<f64> = corners.iter().map(|p| approx(&p.x)).collect();
    let ys: Vec<f64> = corners.iter().map(|p| approx(&p.y)).collect();
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (size - 2.0 * margin) / span;
    let px = |p: &Point| margin + (approx(&p.x) - min_x) * scale;
    let py = |p: &Point| size - margin - (approx(&p.y) - min_y) * scale;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str("<!-- exact coordinates:\n");
    out.push_str(&format!("  triangle: {}\n", crate::io::format_triangle(&instance.triangle)));
    for p in &instance.points.points {
        out.push_str(&format!("  point: {} {}\n", p.x, p.y));
    }
    if let Some(h) = highlight {
        out.push_str(&format!("  highlight (canonical): a={} b={} s={}\n", h.a, h.b, h.s));
    }
    out.push_str("-->\n");

    let tri_path = |v0: &Point, v1: &Point, v2: &Point| {
        format!(
            "M {:.3} {:.3} L {:.3} {:.3} L {:.3} {:.3} Z",
            px(v0), py(v0), px(v1), py(v1), px(v2), py(v2)
        )
    };
    out.push_str(&format!(
        "<path d=\"{}\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>\n",
        tri_path(&instance.triangle.v0, &instance.triangle.v1, &instance.triangle.v2)
    ));
    if let Some(t) = &world_highlight {
        out.push_str(&format!(
            "<path d=\"{}\" fill=\"#ffcc00\" fill-opacity=\"0.25\" stroke=\"#cc8800\" stroke-width=\"1.5\"/>\n",
            tri_path(&t.v0, &t.v1, &t.v2)
        ));
    }
    for (i, p) in instance.points.points.iter().enumerate() {
        let fill = match coloring {
            Some(c) => PALETTE[c.assignment[i] % PALETTE.len()],
            None => "#000",
        };
        out.push_str(&format!(
            "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"{fill}\"/>\n",
            px(p), py(p)
        ));
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(v: &[f64]) -> (f64, f64) {
    let min = v.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GeneratorKind};
    use crate::geom::scalar;

    #[test]
    fn renders_wellformed_svg_with_exact_comment() {
        let inst = generate(GeneratorKind::Grid, 9, 0);
        let coloring = Coloring::new(2, vec![0, 1, 0, 1, 0, 1, 0, 1, 0]).unwrap();
        let h = Homothet::new(scalar(0), scalar(0), scalar(1));
        let svg = render(&inst, Some(&coloring), Some(&h));
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("exact coordinates"));
        assert!(svg.contains("point: 0 0"));
        assert_eq!(svg.matches("<circle").count(), 9);
    }
}
