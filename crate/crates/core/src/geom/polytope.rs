use std::collections::BTreeSet;

use num_traits::Zero;

use super::exact::IntFrame;
use super::hull::{self, FloatKernel, IntKernel};
use super::point::RationalPoint;
use crate::error::{Error, Result};
use crate::rational::{self, Q};

/// Convex polytope with exact vertices and its face lattice.
///
/// In 3D facets are vertex cycles ordered counter-clockwise when seen from
/// outside. In 2D the vertices themselves are stored counter-clockwise and
/// facet `i` is the edge `[i, i+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexPolytope {
    dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
}

/// Same face lattice shape as [`ConvexPolytope`] with `f64` coordinates.
#[derive(Clone, Debug)]
pub struct FloatPolyhedron {
    vertices: Vec<[f64; 3]>,
    facets: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
}

pub fn convex_hull(points: &[RationalPoint]) -> Result<ConvexPolytope> {
    ConvexPolytope::hull(points)
}

fn check_dim(points: &[RationalPoint]) -> Result<usize> {
    let d = points.first().map_or(0, RationalPoint::dim);
    if !(2..=3).contains(&d) {
        return Err(Error::DegenerateInput(format!("unsupported dimension {d}")));
    }
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, got: p.dim() });
    }
    Ok(d)
}

fn edges_of(facets: &[Vec<usize>]) -> Vec<[usize; 2]> {
    let set: BTreeSet<[usize; 2]> = facets
        .iter()
        .flat_map(|f| {
            (0..f.len()).map(move |i| {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                [a.min(b), a.max(b)]
            })
        })
        .collect();
    set.into_iter().collect()
}

impl ConvexPolytope {
    pub fn hull(points: &[RationalPoint]) -> Result<Self> {
        Self::hull_indexed(points).map(|(p, _)| p)
    }

    /// Hull plus, for each output vertex, the index of the input point it
    /// came from.
    pub fn hull_indexed(points: &[RationalPoint]) -> Result<(Self, Vec<usize>)> {
        let dim = check_dim(points)?;
        let frame = IntFrame::new(points)?;
        if dim == 2 {
            let order = hull::hull2(&frame.points)?;
            let n = order.len();
            let vertices = order.iter().map(|&i| points[i].clone()).collect();
            let facets: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
            let edges = edges_of(&facets);
            return Ok((ConvexPolytope { dim, vertices, facets, edges }, order));
        }
        let raw = hull::hull3(&IntKernel(&frame.points))?;
        let used: BTreeSet<usize> = raw.iter().flatten().copied().collect();
        let origin: Vec<usize> = used.into_iter().collect();
        let mut remap = vec![usize::MAX; points.len()];
        for (new, &old) in origin.iter().enumerate() {
            remap[old] = new;
        }
        let facets: Vec<Vec<usize>> = raw.iter().map(|f| f.iter().map(|&i| remap[i]).collect()).collect();
        let vertices = origin.iter().map(|&i| points[i].clone()).collect();
        let edges = edges_of(&facets);
        Ok((ConvexPolytope { dim, vertices, facets, edges }, origin))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &RationalPoint {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// All `k`-faces as sorted vertex index sets, for `0 <= k <= dim`.
    pub fn faces(&self, k: usize) -> Vec<Vec<usize>> {
        match (k, self.dim) {
            (0, _) => (0..self.vertices.len()).map(|i| vec![i]).collect(),
            (1, _) => self.edges.iter().map(|e| e.to_vec()).collect(),
            (2, 3) => self
                .facets
                .iter()
                .map(|f| {
                    let mut s = f.clone();
                    s.sort_unstable();
                    s
                })
                .collect(),
            (k, d) if k == d => vec![(0..self.vertices.len()).collect()],
            _ => Vec::new(),
        }
    }

    /// `[v, e, f]` in 3D, `[v, e]` in 2D.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim {
            2 => vec![self.vertices.len(), self.edges.len()],
            _ => vec![self.vertices.len(), self.edges.len(), self.facets.len()],
        }
    }

    pub fn euler_ok(&self) -> bool {
        match self.dim {
            3 => self.vertices.len() + self.facets.len() == self.edges.len() + 2,
            _ => self.vertices.len() == self.edges.len(),
        }
    }

    pub fn vertex_facets(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len()).filter(|&f| self.facets[f].contains(&v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| match *e {
                [a, b] if a == v => Some(b),
                [a, b] if b == v => Some(a),
                _ => None,
            })
            .collect()
    }

    /// Outward normal `n` and offset `c` of facet `f`, so the polytope is
    /// `{x : n.x <= c}` over all facets.
    pub fn facet_plane(&self, f: usize) -> (RationalPoint, Q) {
        let fv = &self.facets[f];
        let a = &self.vertices[fv[0]];
        let b = &self.vertices[fv[1]];
        let n = if self.dim == 2 {
            let d = b - a;
            RationalPoint::new(vec![d.coords()[1].clone(), -d.coords()[0].clone()])
        } else {
            let c = &self.vertices[fv[2]];
            cross(&(b - a), &(c - b))
        };
        let off = n.dot(a);
        (n, off)
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        (0..self.facets.len()).all(|f| {
            let (n, c) = self.facet_plane(f);
            n.dot(p) <= c
        })
    }

    /// Average of the vertices; always an interior point.
    pub fn vertex_centroid(&self) -> RationalPoint {
        RationalPoint::centroid(&self.vertices)
    }

    /// Exact area (2D) or volume (3D).
    pub fn volume(&self) -> Q {
        if self.dim == 2 {
            let n = self.vertices.len();
            let mut s = Q::zero();
            for i in 0..n {
                let a = self.vertices[i].coords();
                let b = self.vertices[(i + 1) % n].coords();
                s += &a[0] * &b[1] - &a[1] * &b[0];
            }
            return s / rational::qi(2);
        }
        let apex = &self.vertices[0];
        let mut s = Q::zero();
        for f in &self.facets {
            if f.contains(&0) {
                continue;
            }
            for i in 1..f.len() - 1 {
                s += tet_volume(apex, &self.vertices[f[0]], &self.vertices[f[i]], &self.vertices[f[i + 1]]);
            }
        }
        s
    }

    pub fn translate(&self, t: &RationalPoint) -> Self {
        ConvexPolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v + t).collect(),
            facets: self.facets.clone(),
            edges: self.edges.clone(),
        }
    }

    pub fn to_float(&self) -> FloatPolyhedron {
        FloatPolyhedron {
            vertices: self.vertices.iter().map(RationalPoint::to_f64).collect(),
            facets: self.facets.clone(),
            edges: self.edges.clone(),
        }
    }

    /// Index of the vertex equal to `p`.
    pub fn index_of(&self, p: &RationalPoint) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }
}

pub(crate) fn cross(u: &RationalPoint, v: &RationalPoint) -> RationalPoint {
    let (u, v) = (u.coords(), v.coords());
    RationalPoint::new(vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ])
}

/// Unsigned volume of the tetrahedron `abcd`.
pub fn tet_volume(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint, d: &RationalPoint) -> Q {
    let n = cross(&(b - a), &(c - a));
    num_traits::Signed::abs(&n.dot(&(d - a))) / rational::qi(6)
}

impl FloatPolyhedron {
    /// Hull of floating points; coordinates closer than `eps` (relative)
    /// to degeneracy are treated as exactly degenerate.
    pub fn hull(points: &[[f64; 3]], eps: f64) -> Result<Self> {
        let raw = hull::hull3(&FloatKernel { pts: points, eps })?;
        let used: BTreeSet<usize> = raw.iter().flatten().copied().collect();
        let origin: Vec<usize> = used.into_iter().collect();
        let mut remap = vec![usize::MAX; points.len()];
        for (new, &old) in origin.iter().enumerate() {
            remap[old] = new;
        }
        let facets: Vec<Vec<usize>> = raw.iter().map(|f| f.iter().map(|&i| remap[i]).collect()).collect();
        Ok(Self::from_faces(origin.iter().map(|&i| points[i]).collect(), facets))
    }

    /// Trusts the caller that `facets` are counter-clockwise from outside.
    pub fn from_faces(vertices: Vec<[f64; 3]>, facets: Vec<Vec<usize>>) -> Self {
        let edges = edges_of(&facets);
        FloatPolyhedron { vertices, facets, edges }
    }

    pub fn vertices(&self) -> &[[f64; 3]] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn euler_ok(&self) -> bool {
        self.vertices.len() + self.facets.len() == self.edges.len() + 2
    }

    pub fn scaled(&self, s: f64) -> Self {
        FloatPolyhedron {
            vertices: self.vertices.iter().map(|v| [v[0] * s, v[1] * s, v[2] * s]).collect(),
            facets: self.facets.clone(),
            edges: self.edges.clone(),
        }
    }
}
