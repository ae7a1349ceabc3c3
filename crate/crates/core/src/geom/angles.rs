//! Internal and external angles at polytope vertices.
//!
//! Angles are measured on the unit sphere `S^{d-1}`: radians in 2D,
//! steradians in 3D. A convex spherical polygon with vertices `g_k` has area
//! `sum(interior angles) - (n-2)pi`.

use std::f64::consts::PI;

use super::polytope::{ConvexPolytope, FloatPolyhedron};
use crate::error::{Error, Result};

/// Tolerance attached to every floating angle computed here.
pub const ANGLE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolidAngle {
    pub value: f64,
    pub tolerance: f64,
}

impl SolidAngle {
    fn new(value: f64) -> Self {
        SolidAngle { value, tolerance: ANGLE_TOL }
    }
}

/// A pointed convex cone given by unit generators in cyclic order.
#[derive(Clone, Debug)]
pub struct VertexCone {
    generators: Vec<[f64; 3]>,
    planar: bool,
}

pub(crate) fn sub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

pub(crate) fn unit(u: [f64; 3]) -> [f64; 3] {
    let n = dot(&u, &u).sqrt();
    [u[0] / n, u[1] / n, u[2] / n]
}

fn angle_between(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let c = cross(a, b);
    dot(&c, &c).sqrt().atan2(dot(a, b))
}

/// Area of a convex spherical polygon with unit vertices in cyclic order.
pub fn spherical_polygon_area(g: &[[f64; 3]]) -> f64 {
    let n = g.len();
    let mut sum = 0.0;
    for k in 0..n {
        let p = &g[k];
        let a = &g[(k + n - 1) % n];
        let b = &g[(k + 1) % n];
        let ta = sub(a, &p.map(|x| x * dot(a, p)));
        let tb = sub(b, &p.map(|x| x * dot(b, p)));
        sum += angle_between(&ta, &tb);
    }
    sum - (n as f64 - 2.0) * PI
}

impl VertexCone {
    pub fn new(generators: Vec<[f64; 3]>, planar: bool) -> Self {
        VertexCone { generators: generators.into_iter().map(unit).collect(), planar }
    }

    pub fn generators(&self) -> &[[f64; 3]] {
        &self.generators
    }

    /// Measure of the cone's intersection with the unit sphere.
    pub fn area(&self) -> f64 {
        if self.planar {
            angle_between(&self.generators[0], &self.generators[1])
        } else {
            spherical_polygon_area(&self.generators)
        }
    }

    /// The polar cone `{y : y.x <= 0 for all x in the cone}`.
    pub fn polar(&self) -> VertexCone {
        let g = &self.generators;
        let n = g.len();
        let mut s = [0.0; 3];
        for x in g {
            s = [s[0] + x[0], s[1] + x[1], s[2] + x[2]];
        }
        let out = if self.planar {
            let z = [0.0, 0.0, 1.0];
            (0..2)
                .map(|k| {
                    let c = cross(&g[k], &z);
                    if dot(&c, &g[1 - k]) > 0.0 {
                        c.map(|x| -x)
                    } else {
                        c
                    }
                })
                .collect()
        } else {
            (0..n)
                .map(|k| {
                    let c = cross(&g[k], &g[(k + 1) % n]);
                    if dot(&c, &s) > 0.0 {
                        c.map(|x| -x)
                    } else {
                        c
                    }
                })
                .collect()
        };
        VertexCone::new(out, self.planar)
    }
}

fn newell(verts: &[[f64; 3]], f: &[usize]) -> [f64; 3] {
    let mut n = [0.0; 3];
    for i in 0..f.len() {
        let c = cross(&verts[f[i]], &verts[f[(i + 1) % f.len()]]);
        n = [n[0] + c[0], n[1] + c[1], n[2] + c[2]];
    }
    unit(n)
}

/// Facets around vertex `v`, chained so that consecutive facets share an
/// edge, together with the edge leaving `v` along each facet.
fn facet_chain(facets: &[Vec<usize>], v: usize) -> Option<Vec<(usize, usize)>> {
    let around: Vec<(usize, usize, usize)> = facets
        .iter()
        .enumerate()
        .filter_map(|(fi, f)| {
            let k = f.iter().position(|&x| x == v)?;
            let m = f.len();
            Some((fi, f[(k + m - 1) % m], f[(k + 1) % m]))
        })
        .collect();
    if around.len() < 3 {
        return None;
    }
    let mut chain = Vec::with_capacity(around.len());
    let (mut fi, _, mut next) = around[0];
    for _ in 0..around.len() {
        chain.push((fi, next));
        let &(g, _, w) = around.iter().find(|&&(_, prev, _)| prev == next)?;
        fi = g;
        next = w;
    }
    (chain[0].0 == fi).then_some(chain)
}

fn cones_3d(verts: &[[f64; 3]], facets: &[Vec<usize>], v: usize) -> Option<(VertexCone, VertexCone)> {
    let chain = facet_chain(facets, v)?;
    let p = verts[v];
    let internal = chain.iter().map(|&(_, w)| sub(&verts[w], &p)).collect();
    let external = chain.iter().map(|&(f, _)| newell(verts, &facets[f])).collect();
    Some((VertexCone::new(internal, false), VertexCone::new(external, false)))
}

fn cones_2d(verts: &[[f64; 3]], v: usize) -> (VertexCone, VertexCone) {
    let n = verts.len();
    let p = verts[v];
    let a = verts[(v + n - 1) % n];
    let b = verts[(v + 1) % n];
    let din = sub(&a, &p);
    let dout = sub(&b, &p);
    // CCW polygon: outward normal of edge (x -> y) is (dy, -dx).
    let e1 = sub(&p, &a);
    let e2 = sub(&b, &p);
    let n1 = [e1[1], -e1[0], 0.0];
    let n2 = [e2[1], -e2[0], 0.0];
    (VertexCone::new(vec![din, dout], true), VertexCone::new(vec![n1, n2], true))
}

impl ConvexPolytope {
    /// Tangent cone `I(C, p)` and normal cone `E(C, p)` at vertex `v`.
    pub fn vertex_cones(&self, v: usize) -> Result<(VertexCone, VertexCone)> {
        if v >= self.num_vertices() {
            return Err(Error::NotAVertex(v));
        }
        let verts: Vec<[f64; 3]> = self.vertices().iter().map(|p| p.to_f64()).collect();
        if self.dim() == 2 {
            return Ok(cones_2d(&verts, v));
        }
        cones_3d(&verts, self.facets(), v).ok_or(Error::NotAVertex(v))
    }

    /// `(internal, external)` angle at every vertex, in vertex order.
    pub fn vertex_angles(&self) -> Vec<(f64, f64)> {
        let verts: Vec<[f64; 3]> = self.vertices().iter().map(|p| p.to_f64()).collect();
        (0..verts.len())
            .map(|v| {
                let (i, e) = if self.dim() == 2 {
                    cones_2d(&verts, v)
                } else {
                    cones_3d(&verts, self.facets(), v).expect("hull facets form a closed chain")
                };
                (i.area(), e.area())
            })
            .collect()
    }
}

impl FloatPolyhedron {
    pub fn vertex_angles(&self) -> Vec<(f64, f64)> {
        (0..self.num_vertices())
            .map(|v| {
                let (i, e) = cones_3d(self.vertices(), self.facets(), v).expect("closed facet chain");
                (i.area(), e.area())
            })
            .collect()
    }
}

pub fn internal_solid_angle(cell: &ConvexPolytope, v: usize) -> Result<SolidAngle> {
    Ok(SolidAngle::new(cell.vertex_cones(v)?.0.area()))
}

pub fn external_solid_angle(cell: &ConvexPolytope, v: usize) -> Result<SolidAngle> {
    Ok(SolidAngle::new(cell.vertex_cones(v)?.1.area()))
}

/// Full sphere measure `S_{d-1}`: `2pi` for `d = 2`, `4pi` for `d = 3`.
pub fn sphere_measure(d: usize) -> f64 {
    match d {
        2 => 2.0 * PI,
        3 => 4.0 * PI,
        _ => panic!("sphere measure only for d = 2, 3"),
    }
}
