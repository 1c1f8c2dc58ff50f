//! JSON and text reports. Exact values are "p/q" strings; fields ending in
//! `_decimal` are for display only.

use delzant_core::exact::{decimal_nth_root, format_rational, IntVector};
use delzant_core::packing::{MaximalPackings, PackingPolytope};
use delzant_core::perturb::ScanResult;
use delzant_core::polytope::{HRepJson, IntegerJson};
use delzant_core::{DelzantPolytope, RatVector, Rational};
use serde_json::{json, Value};

pub fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vector(v: &RatVector) -> Value {
    Value::Array(v.0.iter().map(rat).collect())
}

pub fn int_vector(v: &IntVector) -> Value {
    serde_json::to_value(v.0.iter().cloned().map(IntegerJson).collect::<Vec<_>>())
        .expect("integers serialize")
}

pub fn decimal(r: &Rational) -> String {
    decimal_nth_root(r, 1, 12)
}

pub fn info(name: &str, d: &DelzantPolytope) -> Value {
    let edges: Vec<Value> = d
        .edges()
        .iter()
        .map(|&(i, j)| {
            json!({
                "vertices": [i, j],
                "length": rat(d.edge_length(i, j).expect("edge has a length")),
            })
        })
        .collect();
    let frames: Vec<Value> = d
        .frames()
        .iter()
        .map(|f| {
            json!({
                "vertex": f.vertex,
                "facets": f.facets,
                "directions": f.directions.iter().map(int_vector).collect::<Vec<_>>(),
                "lengths": f.lengths.iter().map(rat).collect::<Vec<_>>(),
                "neighbors": f.neighbors,
                "corner_radius": rat(&f.corner_radius()),
            })
        })
        .collect();
    let bounds: Vec<Value> = d
        .pair_bounds()
        .rows()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|b| b.as_ref().map_or(Value::Null, rat))
                    .collect(),
            )
        })
        .collect();
    let fan = d.fan();
    json!({
        "name": name,
        "dim": d.dim(),
        "facet_count": d.facet_count(),
        "vertex_count": d.vertex_count(),
        "volume": rat(d.volume()),
        "hrep": HRepJson::from(d.hrep()),
        "vertices": d.vertices().iter().map(vector).collect::<Vec<_>>(),
        "edges": edges,
        "frames": frames,
        "corner_radii": d.corner_radii().iter().map(rat).collect::<Vec<_>>(),
        "pair_bounds": bounds,
        "fan": {
            "rays": fan.rays().into_iter().map(int_vector).collect::<Vec<_>>(),
            "maximal_cones": fan.cones_of_dim(d.dim()).collect::<Vec<_>>(),
        },
    })
}

pub fn pack(name: &str, m: &MaximalPackings, pp: &PackingPolytope, all: bool) -> Value {
    let shown = if all {
        m.packings.len()
    } else {
        m.packings.len().min(1)
    };
    json!({
        "name": name,
        "max_density": rat(&m.max_density),
        "max_density_decimal": decimal(&m.max_density),
        "maximizer_count": m.packings.len(),
        "maximal_packings": m.packings[..shown].iter().map(|p| vector(&p.radii)).collect::<Vec<_>>(),
        "candidates": m.candidates,
        "packing_polytope": HRepJson::from(pp.hrep()),
    })
}

pub fn pack_text(name: &str, m: &MaximalPackings, all: bool) -> String {
    let mut out = format!(
        "{name}\nmax density: {} (~{})\nmaximal packings: {}\n",
        format_rational(&m.max_density),
        decimal(&m.max_density),
        m.packings.len()
    );
    let shown = if all {
        m.packings.len()
    } else {
        m.packings.len().min(1)
    };
    for p in &m.packings[..shown] {
        out.push_str(&format!("  {}\n", p.radii));
    }
    out
}

pub fn scan_csv(scan: &ScanResult) -> String {
    let mut out = String::from("t,volume,omega,omega_decimal,n_maximizers\n");
    for r in &scan.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_rational(&r.t),
            format_rational(&r.volume),
            format_rational(&r.omega),
            decimal_nth_root(&r.omega, 1, delzant_core::perturb::ROOT_DIGITS),
            r.maximizers
        ));
    }
    out
}

pub fn scan_summary(scan: &ScanResult) -> Value {
    let c = &scan.certificates;
    let decreasing = scan.rows.windows(2).all(|w| w[1].omega < w[0].omega);
    let constant = scan
        .rows
        .windows(2)
        .all(|w| w[1].omega == w[0].omega && w[1].volume == w[0].volume);
    json!({
        "dim": scan.dim,
        "samples": scan.rows.len(),
        "vol_root_midpoint_concave": c.vol_root_concave,
        "vol_root_strict_somewhere": c.vol_root_strict,
        "vol_root_affine": c.vol_root_affine,
        "omega_root_midpoint_convex_near_zero": c.omega_root_convex_near_zero,
        "endpoints_homothetic": c.endpoints_homothetic,
        "omega_max_gap": rat(&c.omega_max_gap),
        "omega_strictly_decreasing": decreasing,
        "constant": constant,
        "omega_root_decimal": scan.rows.iter().map(|r| r.omega_root.clone()).collect::<Vec<_>>(),
    })
}
