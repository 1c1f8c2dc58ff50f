//! SVG output for planar polytopes. Floating point appears only here.

use std::fmt::Write as _;

use delzant_core::exact::{format_rational, to_f64};
use delzant_core::packing::AdmissibleSimplex;
use delzant_core::{DelzantPolytope, RatVector};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 0.05 * SIZE;
const FILL_OPACITY: f64 = 0.4;
const PALETTE: &[&str] = &[
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
];

/// Vertex indices in boundary order, found by walking the edge graph.
pub fn boundary_cycle(d: &DelzantPolytope) -> Vec<usize> {
    let mut cycle = vec![0usize];
    let mut prev = usize::MAX;
    let mut cur = 0usize;
    loop {
        let next = d
            .frame(cur)
            .neighbors
            .iter()
            .copied()
            .find(|&k| k != prev && !cycle[1..].contains(&k));
        match next {
            Some(k) if k != 0 => {
                cycle.push(k);
                prev = cur;
                cur = k;
            }
            _ => break,
        }
    }
    cycle
}

struct Frame {
    min: (f64, f64),
    scale: f64,
    offset: (f64, f64),
}

impl Frame {
    fn new(points: &[(f64, f64)]) -> Frame {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        let offset = (
            MARGIN + (SIZE - 2.0 * MARGIN - (x1 - x0) * scale) / 2.0,
            MARGIN + (SIZE - 2.0 * MARGIN - (y1 - y0) * scale) / 2.0,
        );
        Frame {
            min: (x0, y0),
            scale,
            offset,
        }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            self.offset.0 + (p.0 - self.min.0) * self.scale,
            SIZE - (self.offset.1 + (p.1 - self.min.1) * self.scale),
        )
    }
}

fn point(v: &RatVector) -> (f64, f64) {
    (to_f64(&v[0]), to_f64(&v[1]))
}

fn polygon_points(frame: &Frame, pts: &[(f64, f64)]) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// The polygon, the given packing simplices, and `r_v` labels.
pub fn svg(d: &DelzantPolytope, title: &str, simplices: &[AdmissibleSimplex]) -> String {
    assert_eq!(d.dim(), 2, "only planar polytopes are rendered");
    let verts: Vec<(f64, f64)> = d.vertices().iter().map(point).collect();
    let frame = Frame::new(&verts);
    let cycle: Vec<(f64, f64)> = boundary_cycle(d).into_iter().map(|i| verts[i]).collect();
    let centroid = (
        verts.iter().map(|p| p.0).sum::<f64>() / verts.len() as f64,
        verts.iter().map(|p| p.1).sum::<f64>() / verts.len() as f64,
    );

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(title));
    let _ = writeln!(
        out,
        r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    for (k, s) in simplices.iter().enumerate() {
        let corners: Vec<(f64, f64)> = s.corners().iter().map(point).collect();
        let _ = writeln!(
            out,
            r#"  <polygon points="{}" fill="{}" fill-opacity="{FILL_OPACITY}" stroke="none"/>"#,
            polygon_points(&frame, &corners),
            PALETTE[k % PALETTE.len()]
        );
    }
    let _ = writeln!(
        out,
        r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        polygon_points(&frame, &cycle)
    );
    for (i, &p) in verts.iter().enumerate() {
        let (x, y) = frame.map(p);
        let (cx, cy) = frame.map(centroid);
        let (dx, dy) = (x - cx, y - cy);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (lx, ly) = (x + 18.0 * dx / len, y + 18.0 * dy / len);
        let _ = writeln!(
            out,
            r#"  <circle cx="{x:.3}" cy="{y:.3}" r="4" fill="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"  <text x="{lx:.3}" y="{ly:.3}" font-family="sans-serif" font-size="16" text-anchor="middle" dominant-baseline="middle">r={}</text>"#,
            format_rational(&d.corner_radii()[i])
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use delzant_core::delzant::{make_chopped_simplex, make_cube};
    use delzant_core::exact::{rat, ratio};

    #[test]
    fn cycle_follows_edges() {
        let sq = make_cube(2, &rat(1)).unwrap();
        // lexicographic (0,0), (0,1), (1,0), (1,1)
        let c = boundary_cycle(&sq);
        assert_eq!(c.len(), 4);
        for k in 0..4 {
            assert!(sq.is_adjacent(c[k], c[(k + 1) % 4]));
        }
        let p = make_chopped_simplex(2, &ratio(1, 10), &ratio(1, 5)).unwrap();
        assert_eq!(boundary_cycle(&p).len(), 5);
    }

    #[test]
    fn margins() {
        let sq = make_cube(2, &rat(3)).unwrap();
        let svg = svg(&sq, "a<b", &[]);
        assert!(svg.contains("40.000,760.000") && svg.contains("760.000,40.000"));
        assert!(svg.contains("a&lt;b"));
    }
}
