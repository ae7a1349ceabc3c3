//! Operations producing a new periodic mosaic from an old one.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geom::RationalPoint;
use crate::periodic::{PeriodicMosaic, VertexRef};
use crate::rational::{self, q, Q};

/// Neighbours of each node orbit along mosaic edges, with the node at
/// shift zero.
fn node_neighbours(m: &PeriodicMosaic) -> BTreeMap<usize, Vec<VertexRef>> {
    let mut out: BTreeMap<usize, Vec<VertexRef>> = BTreeMap::new();
    for key in m.edge_orbits() {
        let (a, b) = (key[0], key[1]);
        let rel = |from: VertexRef, to: VertexRef| {
            VertexRef::new(
                to.v,
                [to.shift[0] - from.shift[0], to.shift[1] - from.shift[1], to.shift[2] - from.shift[2]],
            )
        };
        out.entry(a.v).or_default().push(rel(a, b));
        out.entry(b.v).or_default().push(rel(b, a));
    }
    out
}

/// Cuts every node off at fraction `t` of each incident edge: cells lose
/// their corners and each node becomes a new cell spanned by the cut
/// points around it. With `t = 1/2` cut points from both ends coincide.
pub(crate) fn truncate(m: &PeriodicMosaic, t: &Q) -> Result<PeriodicMosaic> {
    let s = Q::one() - t;
    let mut cells: Vec<Vec<RationalPoint>> = Vec::new();
    for poly in m.polytopes() {
        let mut pts = Vec::new();
        for e in poly.edges() {
            let (a, b) = (poly.vertex(e[0]), poly.vertex(e[1]));
            pts.push(a.lerp(b, t));
            pts.push(a.lerp(b, &s));
        }
        pts.sort();
        pts.dedup();
        cells.push(pts);
    }
    for (v, nbrs) in node_neighbours(m) {
        let p = m.cartesian(&VertexRef::new(v, [0, 0, 0]));
        let pts: Vec<RationalPoint> = nbrs.iter().map(|w| p.lerp(&m.cartesian(w), t)).collect();
        cells.push(pts);
    }
    PeriodicMosaic::from_cartesian(m.lattice().rows().to_vec(), cells)
}

/// Replaces every node by its vertex figure, cutting each incident edge at
/// fraction `eps` from the node. Requires each node to be a vertex of
/// exactly `d + 1` cells and `d + 1` edges, so the new cells are simplices.
pub fn foam_step(m: &PeriodicMosaic, eps: &Q) -> Result<PeriodicMosaic> {
    if !m.face_to_face() {
        return Err(Error::NotFaceToFace);
    }
    if eps <= &Q::zero() || eps >= &q(1, 2) {
        return Err(Error::EpsilonTooLarge(rational::display(eps)));
    }
    let d = m.dim();
    let nbrs = node_neighbours(m);
    let mut degree = vec![0usize; m.vertices().len()];
    for r in m.cells().iter().flatten() {
        degree[r.v] += 1;
    }
    for (&v, list) in &nbrs {
        if list.len() != d + 1 || degree[v] != d + 1 {
            return Err(Error::VertexFigureNotSimplex(v));
        }
    }
    truncate(m, eps)
}

/// Default foam parameter: a quarter of each edge.
pub fn default_foam_eps() -> Q {
    q(1, 4)
}

/// Splits every simplex into `d + 1` simplices coned from its centroid to
/// its facets.
pub fn dual_foam_step(m: &PeriodicMosaic) -> Result<PeriodicMosaic> {
    let d = m.dim();
    let mut cells = Vec::new();
    for (c, poly) in m.polytopes().iter().enumerate() {
        if poly.num_vertices() != d + 1 {
            return Err(Error::NotSimplicial(c));
        }
        let center = poly.vertex_centroid();
        for skip in 0..=d {
            let mut pts: Vec<RationalPoint> = (0..=d).filter(|&i| i != skip).map(|i| poly.vertex(i).clone()).collect();
            pts.push(center.clone());
            cells.push(pts);
        }
    }
    PeriodicMosaic::from_cartesian(m.lattice().rows().to_vec(), cells)
}

/// Simplicial subdivision whose cells are the flags of the mosaic: each
/// chain vertex < edge < (facet <) cell spans a simplex on the centroids.
pub fn barycentric_subdivision(m: &PeriodicMosaic) -> Result<PeriodicMosaic> {
    if !m.face_to_face() {
        return Err(Error::NotFaceToFace);
    }
    let d = m.dim();
    let mut cells = Vec::new();
    for poly in m.polytopes() {
        let cc = poly.vertex_centroid();
        let centroid = |idx: &[usize]| RationalPoint::centroid(idx.iter().map(|&i| poly.vertex(i)));
        if d == 2 {
            for e in poly.edges() {
                let ec = centroid(e);
                for &v in e {
                    cells.push(vec![poly.vertex(v).clone(), ec.clone(), cc.clone()]);
                }
            }
        } else {
            for f in poly.facets() {
                let fc = centroid(f);
                for i in 0..f.len() {
                    let e = [f[i], f[(i + 1) % f.len()]];
                    let ec = centroid(&e);
                    for &v in &e {
                        cells.push(vec![poly.vertex(v).clone(), ec.clone(), fc.clone(), cc.clone()]);
                    }
                }
            }
        }
    }
    PeriodicMosaic::from_cartesian(m.lattice().rows().to_vec(), cells)
}
