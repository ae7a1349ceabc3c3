//! Named convex polyhedra centred at the origin.
//!
//! Tetrahedron, cube and octahedron have exact integer coordinates. The
//! icosahedral family and the Archimedean solids are built in floating
//! point by truncation, rectification, expansion and alternation; only
//! their face lattices matter for the counting identities.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geom::{ConvexPolytope, FloatPolyhedron, RationalPoint};

/// Relative tolerance used when re-hulling floating coordinates.
pub const SNAP_EPS: f64 = 1e-12;

pub fn tetrahedron_exact() -> ConvexPolytope {
    exact(&[[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]])
}

pub fn cube_exact() -> ConvexPolytope {
    let pts: Vec<[i64; 3]> = (0..8)
        .map(|m| [if m & 1 == 1 { 1 } else { -1 }, if m & 2 == 2 { 1 } else { -1 }, if m & 4 == 4 { 1 } else { -1 }])
        .collect();
    exact(&pts)
}

pub fn octahedron_exact() -> ConvexPolytope {
    exact(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]])
}

fn exact(pts: &[[i64; 3]]) -> ConvexPolytope {
    let pts: Vec<RationalPoint> = pts.iter().map(|p| RationalPoint::from_ints(p)).collect();
    ConvexPolytope::hull(&pts).expect("catalog solid is full-dimensional")
}

fn hull(pts: &[[f64; 3]]) -> FloatPolyhedron {
    FloatPolyhedron::hull(pts, SNAP_EPS).expect("catalog solid is full-dimensional")
}

fn golden() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

fn icosahedron() -> FloatPolyhedron {
    let g = golden();
    let mut pts = Vec::new();
    for a in [-1.0, 1.0] {
        for b in [-g, g] {
            pts.push([0.0, a, b]);
            pts.push([a, b, 0.0]);
            pts.push([b, 0.0, a]);
        }
    }
    hull(&pts)
}

fn dodecahedron() -> FloatPolyhedron {
    let g = golden();
    let mut pts = Vec::new();
    for x in [-1.0, 1.0] {
        for y in [-1.0, 1.0] {
            for z in [-1.0, 1.0] {
                pts.push([x, y, z]);
            }
        }
    }
    for a in [-1.0 / g, 1.0 / g] {
        for b in [-g, g] {
            pts.push([0.0, a, b]);
            pts.push([a, b, 0.0]);
            pts.push([b, 0.0, a]);
        }
    }
    hull(&pts)
}

fn lerp(a: &[f64; 3], b: &[f64; 3], t: f64) -> [f64; 3] {
    std::array::from_fn(|k| a[k] + t * (b[k] - a[k]))
}

/// Cuts every vertex at fraction `t` of each incident edge.
pub fn truncate(p: &FloatPolyhedron, t: f64) -> FloatPolyhedron {
    let v = p.vertices();
    let pts: Vec<[f64; 3]> =
        p.edges().iter().flat_map(|&[a, b]| [lerp(&v[a], &v[b], t), lerp(&v[a], &v[b], 1.0 - t)]).collect();
    hull(&pts)
}

/// Hull of the edge midpoints.
pub fn rectify(p: &FloatPolyhedron) -> FloatPolyhedron {
    let v = p.vertices();
    let pts: Vec<[f64; 3]> = p.edges().iter().map(|&[a, b]| lerp(&v[a], &v[b], 0.5)).collect();
    hull(&pts)
}

/// Pushes every facet outward by `s` along its normal and takes the hull.
pub fn expand(p: &FloatPolyhedron, s: f64) -> FloatPolyhedron {
    let v = p.vertices();
    let mut pts = Vec::new();
    for f in p.facets() {
        let n = facet_normal(v, f);
        for &i in f {
            pts.push(std::array::from_fn(|k| v[i][k] + s * n[k]));
        }
    }
    hull(&pts)
}

/// Keeps one colour class of a bipartite edge graph.
pub fn alternate(p: &FloatPolyhedron) -> Result<FloatPolyhedron> {
    let n = p.num_vertices();
    let mut adj = vec![Vec::new(); n];
    for &[a, b] in p.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour = vec![None; n];
    colour[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(a) = queue.pop_front() {
        let c = colour[a].expect("queued vertices are coloured");
        for &b in &adj[a] {
            match colour[b] {
                None => {
                    colour[b] = Some(!c);
                    queue.push_back(b);
                }
                Some(cb) if cb == c => {
                    return Err(Error::DegenerateInput("edge graph is not bipartite".into()));
                }
                _ => {}
            }
        }
    }
    let pts: Vec<[f64; 3]> = (0..n).filter(|&i| colour[i] == Some(false)).map(|i| p.vertices()[i]).collect();
    Ok(hull(&pts))
}

/// Unit Newell normal of a facet.
pub(crate) fn facet_normal(v: &[[f64; 3]], f: &[usize]) -> [f64; 3] {
    let mut n = [0.0; 3];
    for (k, &i) in f.iter().enumerate() {
        let a = v[i];
        let b = v[f[(k + 1) % f.len()]];
        n[0] += (a[1] - b[1]) * (a[2] + b[2]);
        n[1] += (a[2] - b[2]) * (a[0] + b[0]);
        n[2] += (a[0] - b[0]) * (a[1] + b[1]);
    }
    let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    n.map(|x| x / len)
}

pub fn prism(n: usize) -> FloatPolyhedron {
    let mut pts = Vec::new();
    for k in 0..n {
        let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        pts.push([a.cos(), a.sin(), 0.5]);
        pts.push([a.cos(), a.sin(), -0.5]);
    }
    hull(&pts)
}

pub fn antiprism(n: usize) -> FloatPolyhedron {
    let mut pts = Vec::new();
    for k in 0..2 * n {
        let a = std::f64::consts::PI * k as f64 / n as f64;
        let z = if k % 2 == 0 { 0.5 } else { -0.5 };
        pts.push([a.cos(), a.sin(), z]);
    }
    hull(&pts)
}

pub const PLATONIC: [&str; 5] = ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"];

pub const ARCHIMEDEAN: [&str; 13] = [
    "truncated_tetrahedron",
    "cuboctahedron",
    "truncated_cube",
    "truncated_octahedron",
    "rhombicuboctahedron",
    "truncated_cuboctahedron",
    "snub_cube",
    "icosidodecahedron",
    "truncated_dodecahedron",
    "truncated_icosahedron",
    "rhombicosidodecahedron",
    "truncated_icosidodecahedron",
    "snub_dodecahedron",
];

/// Every catalog name: Platonic, Archimedean, then `prism_n` and
/// `antiprism_n` for `n = 3..=12`.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = PLATONIC.iter().chain(ARCHIMEDEAN.iter()).map(|s| s.to_string()).collect();
    out.extend((3..=12).map(|n| format!("prism_{n}")));
    out.extend((3..=12).map(|n| format!("antiprism_{n}")));
    out
}

pub fn polyhedron(name: &str) -> Result<FloatPolyhedron> {
    let sqrt2 = 2f64.sqrt();
    let g = golden();
    let p = match name {
        "tetrahedron" => tetrahedron_exact().to_float(),
        "cube" => cube_exact().to_float(),
        "octahedron" => octahedron_exact().to_float(),
        "dodecahedron" => dodecahedron(),
        "icosahedron" => icosahedron(),
        "truncated_tetrahedron" => truncate(&tetrahedron_exact().to_float(), 1.0 / 3.0),
        "cuboctahedron" => rectify(&cube_exact().to_float()),
        "truncated_cube" => truncate(&cube_exact().to_float(), 1.0 / (2.0 + sqrt2)),
        "truncated_octahedron" => truncate(&octahedron_exact().to_float(), 1.0 / 3.0),
        "rhombicuboctahedron" => expand(&cube_exact().to_float(), sqrt2),
        "truncated_cuboctahedron" => truncate(&rectify(&cube_exact().to_float()), 1.0 / 3.0),
        "snub_cube" => alternate(&truncate(&rectify(&cube_exact().to_float()), 1.0 / 3.0))?,
        "icosidodecahedron" => rectify(&dodecahedron()),
        "truncated_dodecahedron" => truncate(&dodecahedron(), 1.0 / (2.0 + g)),
        "truncated_icosahedron" => truncate(&icosahedron(), 1.0 / 3.0),
        "rhombicosidodecahedron" => expand(&dodecahedron(), 2.0 / g),
        "truncated_icosidodecahedron" => truncate(&rectify(&dodecahedron()), 1.0 / 3.0),
        "snub_dodecahedron" => alternate(&truncate(&rectify(&dodecahedron()), 1.0 / 3.0))?,
        other => {
            let parse =
                |prefix: &str| other.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok()).filter(|&n| n >= 3);
            if let Some(n) = parse("antiprism_") {
                antiprism(n)
            } else if let Some(n) = parse("prism_") {
                prism(n)
            } else {
                return Err(Error::UnknownName(other.to_string()));
            }
        }
    };
    Ok(p)
}
