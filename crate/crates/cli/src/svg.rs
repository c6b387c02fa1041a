//! Standalone SVG 1.1 rendering of 2-D hulls.
//!
//! Rationals are converted to `f64` here and nowhere else; the hull polygon
//! itself is computed exactly before this module is involved.

use std::cmp::Ordering;
use std::fmt::Write;

use mrep_core::{Point, Rational};

const FILL: &str = "#7da7d9";
const STROKE: &str = "#24425c";
const AXIS: &str = "#999999";

/// Renders the given hull vertices (dimension 2, pairwise distinct) as a
/// filled polygon with coordinate axes. Vertices are joined in angular order
/// around their centroid; the ordering is decided with exact arithmetic so
/// the output is deterministic.
pub fn render_hull(vertices: &[Point]) -> String {
    assert!(!vertices.is_empty(), "plot needs at least one point");
    assert!(vertices.iter().all(|p| p.len() == 2), "plot is 2-D only");

    let ordered = angular_order(vertices);
    let xs: Vec<f64> = ordered.iter().map(|p| p[0].to_f64()).collect();
    let ys: Vec<f64> = ordered.iter().map(|p| p[1].to_f64()).collect();
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let span = (max_x - min_x).max(max_y - min_y);
    let pad = if span == 0.0 { 1.0 } else { span * 0.1 };

    let left = min_x - pad;
    let top = -(max_y + pad);
    let width = (max_x - min_x) + 2.0 * pad;
    let height = (max_y - min_y) + 2.0 * pad;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="480" height="480" viewBox="{left} {top} {width} {height}">"#
    );
    // axes through the origin, clipped by the viewBox
    let _ = writeln!(
        svg,
        r#"  <line x1="{left}" y1="0" x2="{}" y2="0" stroke="{AXIS}" stroke-width="{w}"/>"#,
        left + width,
        w = width.max(height) / 240.0
    );
    let _ = writeln!(
        svg,
        r#"  <line x1="0" y1="{top}" x2="0" y2="{}" stroke="{AXIS}" stroke-width="{w}"/>"#,
        top + height,
        w = width.max(height) / 240.0
    );
    let stroke_width = width.max(height) / 120.0;
    match ordered.len() {
        1 => {
            let _ = writeln!(
                svg,
                r#"  <circle cx="{}" cy="{}" r="{}" fill="{STROKE}"/>"#,
                xs[0],
                -ys[0],
                pad * 0.1
            );
        }
        2 => {
            let _ = writeln!(
                svg,
                r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{STROKE}" stroke-width="{stroke_width}"/>"#,
                xs[0], -ys[0], xs[1], -ys[1]
            );
        }
        _ => {
            let points: Vec<String> = xs
                .iter()
                .zip(&ys)
                .map(|(x, y)| format!("{x},{}", -y))
                .collect();
            let _ = writeln!(
                svg,
                r#"  <polygon points="{}" fill="{FILL}" fill-opacity="0.6" stroke="{STROKE}" stroke-width="{stroke_width}"/>"#,
                points.join(" ")
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

/// Sorts hull vertices by angle around their centroid, ascending like
/// `atan2` over `(-pi, pi]`, using exact sign tests only.
fn angular_order(vertices: &[Point]) -> Vec<Point> {
    let n = Rational::from_int(vertices.len() as i64);
    let centroid: Point = (0..2)
        .map(|i| {
            let mut acc = Rational::zero();
            for p in vertices {
                acc += &p[i];
            }
            acc / n.clone()
        })
        .collect();
    let mut with_offsets: Vec<(Point, Point)> = vertices
        .iter()
        .map(|p| {
            let offset = vec![&p[0] - &centroid[0], &p[1] - &centroid[1]];
            (offset, p.clone())
        })
        .collect();
    with_offsets.sort_by(|(a, _), (b, _)| compare_angles(a, b));
    with_offsets.into_iter().map(|(_, p)| p).collect()
}

/// Half-plane band in `atan2` order, then the cross-product sign within a
/// band (each band spans less than a half turn, so the cross product is a
/// total order there).
fn compare_angles(a: &[Rational], b: &[Rational]) -> Ordering {
    fn band(v: &[Rational]) -> u8 {
        if v[1].is_negative() {
            0 // (-pi, 0)
        } else if v[1].is_zero() && v[0].is_positive() {
            1 // angle 0
        } else if v[1].is_positive() {
            2 // (0, pi)
        } else {
            3 // angle pi (and the centroid itself, which cannot occur)
        }
    }
    band(a).cmp(&band(b)).then_with(|| {
        let cross = &(&a[0] * &b[1]) - &(&a[1] * &b[0]);
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        vec![Rational::from_int(x), Rational::from_int(y)]
    }

    #[test]
    fn parallelogram_is_ordered_counterclockwise() {
        let verts = vec![pt(-2, -1), pt(0, -1), pt(0, 1), pt(2, 1)];
        let ordered = angular_order(&verts);
        assert_eq!(ordered, vec![pt(-2, -1), pt(0, -1), pt(2, 1), pt(0, 1)]);
        let svg = render_hull(&verts);
        assert!(svg.contains("<polygon"));
        assert!(svg.contains("-2,1"));
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn degenerate_shapes_render() {
        let single = render_hull(&[pt(3, 4)]);
        assert!(single.contains("<circle"));
        let segment = render_hull(&[pt(0, 0), pt(1, 1)]);
        assert!(segment.contains("<line") && !segment.contains("<polygon"));
    }
}
