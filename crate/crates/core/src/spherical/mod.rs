//! Mosaics of the unit sphere obtained by central projection of a convex
//! polyhedron that contains the origin in its interior.

pub mod catalog;
mod off;

use std::f64::consts::PI;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::formulas::harmonic_degree;
use crate::geom::{ConvexPolytope, FloatPolyhedron, RationalPoint};
use crate::rational::{qi, Q};

pub use off::{parse_off, to_off};

#[derive(Clone, Debug)]
pub struct SphericalMosaic {
    source: FloatPolyhedron,
    /// Vertices projected to the unit sphere.
    nodes: Vec<[f64; 3]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SphericalStats {
    pub cells: usize,
    pub nodes: usize,
    pub edges: usize,
    pub n_bar: Q,
    pub v_bar: Q,
    pub mu_bar: Q,
    pub h_bar: Q,
    /// Average total angle per incidence, from measured spherical angles.
    pub omega_bar: f64,
    pub area_sum: f64,
}

/// Minimum distance of a facet plane from the origin, relative to the
/// polyhedron's size, for the origin to count as interior.
const INTERIOR_TOL: f64 = 1e-12;

pub fn from_polyhedron(p: &ConvexPolytope) -> Result<SphericalMosaic> {
    if p.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: p.dim() });
    }
    for f in 0..p.facets().len() {
        let (_, off) = p.facet_plane(f);
        if !off.is_positive() {
            return Err(Error::OriginNotInterior);
        }
    }
    from_float(&p.to_float())
}

pub fn from_float(p: &FloatPolyhedron) -> Result<SphericalMosaic> {
    let v = p.vertices();
    let size = v.iter().map(norm).fold(0.0, f64::max);
    for f in p.facets() {
        let n = catalog::facet_normal(v, f);
        if dot(&n, &v[f[0]]) <= INTERIOR_TOL * size {
            return Err(Error::OriginNotInterior);
        }
    }
    let nodes = v.iter().map(|x| x.map(|c| c / norm(x))).collect();
    Ok(SphericalMosaic { source: p.clone(), nodes })
}

impl SphericalMosaic {
    pub fn source(&self) -> &FloatPolyhedron {
        &self.source
    }

    pub fn nodes(&self) -> &[[f64; 3]] {
        &self.nodes
    }

    /// `(N_c, N_v, N_e)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.source.facets().len(), self.nodes.len(), self.source.edges().len())
    }

    /// Interior angles of cell `c`, in facet vertex order.
    pub fn cell_angles(&self, c: usize) -> Vec<f64> {
        let f = &self.source.facets()[c];
        let k = f.len();
        (0..k)
            .map(|j| {
                let p = &self.nodes[f[j]];
                let a = tangent(p, &self.nodes[f[(j + k - 1) % k]]);
                let b = tangent(p, &self.nodes[f[(j + 1) % k]]);
                dot(&a, &b).clamp(-1.0, 1.0).acos()
            })
            .collect()
    }

    /// Area of cell `c` as angle excess `sum(alpha) - (v - 2) pi`.
    pub fn cell_area(&self, c: usize) -> f64 {
        let angles = self.cell_angles(c);
        angles.iter().sum::<f64>() - (angles.len() as f64 - 2.0) * PI
    }

    /// Node-degree-weighted average of `(2 pi + Lambda(C)) / v` over cells,
    /// where `Lambda(C)` is the angle sum of cell `C`.
    pub fn omega_bar(&self) -> f64 {
        let mut num = 0.0;
        let mut den = 0usize;
        for c in 0..self.source.facets().len() {
            let angles = self.cell_angles(c);
            num += 2.0 * PI + angles.iter().sum::<f64>();
            den += angles.len();
        }
        num / den as f64
    }

    pub fn stats(&self) -> SphericalStats {
        spherical_stats(self)
    }
}

pub fn spherical_stats(s: &SphericalMosaic) -> SphericalStats {
    let (nc, nv, ne) = s.counts();
    let incid = qi(2 * ne as i64);
    let n_bar = &incid / qi(nv as i64);
    let v_bar = &incid / qi(nc as i64);
    SphericalStats {
        cells: nc,
        nodes: nv,
        edges: ne,
        h_bar: harmonic_degree(&n_bar, &v_bar).expect("counts are positive"),
        mu_bar: qi(4) / qi((nc + nv) as i64),
        n_bar,
        v_bar,
        omega_bar: s.omega_bar(),
        area_sum: (0..nc).map(|c| s.cell_area(c)).sum(),
    }
}

/// Polar polyhedron: each facet `n . x <= b` becomes the vertex `n / b`.
pub fn polar_dual(p: &ConvexPolytope) -> Result<ConvexPolytope> {
    if p.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: p.dim() });
    }
    let mut pts = Vec::with_capacity(p.facets().len());
    for f in 0..p.facets().len() {
        let (n, off) = p.facet_plane(f);
        if !off.is_positive() {
            return Err(Error::OriginNotInterior);
        }
        pts.push(RationalPoint::new(n.coords().iter().map(|x| x / &off).collect()));
    }
    ConvexPolytope::hull(&pts)
}

/// Floating polar polyhedron, rebuilt by hull.
pub fn polar_dual_float(p: &FloatPolyhedron) -> Result<FloatPolyhedron> {
    let v = p.vertices();
    let mut pts = Vec::with_capacity(p.facets().len());
    for f in p.facets() {
        let n = catalog::facet_normal(v, f);
        let off = dot(&n, &v[f[0]]);
        if off <= 0.0 {
            return Err(Error::OriginNotInterior);
        }
        pts.push(n.map(|c| c / off));
    }
    FloatPolyhedron::hull(&pts, catalog::SNAP_EPS)
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Unit tangent at `p` of the great circle towards `q`.
fn tangent(p: &[f64; 3], q: &[f64; 3]) -> [f64; 3] {
    let d = dot(p, q);
    let t: [f64; 3] = std::array::from_fn(|k| q[k] - d * p[k]);
    let n = norm(&t);
    t.map(|c| c / n)
}
