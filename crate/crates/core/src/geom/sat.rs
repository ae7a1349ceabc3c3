//! Exact contact classification between two convex cells on a common
//! integer frame: disjoint, touching (face-to-face or not), or overlapping.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use super::exact::{self, IPoint, COORD_LIMIT};
use super::polytope::ConvexPolytope;
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Debug)]
pub struct IntCell {
    pub dim: usize,
    pub pts: Vec<IPoint>,
    pub facets: Arc<[Vec<usize>]>,
    /// Outward normal and offset per facet: the cell is `n.x <= c`.
    pub planes: Vec<(IPoint, i128)>,
    pub edges: Arc<[[usize; 2]]>,
    pub lo: IPoint,
    pub hi: IPoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// Interiors are disjoint and the intersection is non-empty.
    Touching {
        face_to_face: bool,
    },
    Overlap,
}

fn dot(a: &IPoint, b: &IPoint) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(u: &IPoint, v: &IPoint) -> IPoint {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

impl IntCell {
    pub fn new(p: &ConvexPolytope, scale: &BigInt) -> Result<Self> {
        let pts = p.vertices().iter().map(|v| exact::to_int(v, scale)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(p.dim(), pts, p.facets().to_vec(), p.edges().to_vec()))
    }

    pub fn from_parts(dim: usize, pts: Vec<IPoint>, facets: Vec<Vec<usize>>, edges: Vec<[usize; 2]>) -> Self {
        let planes = facets
            .iter()
            .map(|f| {
                if dim == 2 {
                    let d = exact::sub(&pts[f[1]], &pts[f[0]]);
                    let g = exact::gcd3(d);
                    let n = [d[1] / g, -d[0] / g, 0];
                    (n, dot(&n, &pts[f[0]]))
                } else {
                    exact::plane(&pts[f[0]], &pts[f[1]], &pts[f[2]]).expect("facet vertices are not collinear")
                }
            })
            .collect();
        let mut lo = pts[0];
        let mut hi = pts[0];
        for p in &pts {
            for k in 0..3 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        IntCell { dim, pts, facets: facets.into(), planes, edges: edges.into(), lo, hi }
    }

    pub fn translated(&self, t: &IPoint) -> Result<Self> {
        let pts: Vec<IPoint> = self.pts.iter().map(|p| exact::add(p, t)).collect();
        if pts.iter().flatten().any(|x| x.abs() >= COORD_LIMIT) {
            return Err(Error::CoordinateOverflow);
        }
        Ok(IntCell {
            dim: self.dim,
            planes: self.planes.iter().map(|(n, c)| (*n, c + dot(n, t))).collect(),
            lo: exact::add(&self.lo, t),
            hi: exact::add(&self.hi, t),
            pts,
            facets: Arc::clone(&self.facets),
            edges: Arc::clone(&self.edges),
        })
    }

    pub fn boxes_meet(&self, other: &IntCell) -> bool {
        (0..3).all(|k| self.lo[k] <= other.hi[k] && other.lo[k] <= self.hi[k])
    }

    fn contains(&self, p: &IPoint) -> bool {
        self.planes.iter().all(|(n, c)| dot(n, p) <= *c)
    }

    fn contains_q(&self, p: &[Q; 3]) -> bool {
        self.planes.iter().all(|(n, c)| {
            let v: Q = (0..3).map(|k| &p[k] * Q::from_integer(n[k].into())).sum();
            v <= Q::from_integer((*c).into())
        })
    }

    fn range(&self, n: &IPoint) -> (i128, i128) {
        let mut lo = i128::MAX;
        let mut hi = i128::MIN;
        for p in &self.pts {
            let v = dot(n, p);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }
}

enum Sep {
    Strict,
    /// The cells touch only within the plane `n.x = level`.
    Weak(i128),
    None,
}

fn separates(a: &IntCell, b: &IntCell, n: &IPoint) -> Sep {
    let (alo, ahi) = a.range(n);
    let (blo, bhi) = b.range(n);
    if ahi < blo || bhi < alo {
        Sep::Strict
    } else if ahi == blo {
        Sep::Weak(ahi)
    } else if bhi == alo {
        Sep::Weak(alo)
    } else {
        Sep::None
    }
}

/// Classifies how two cells meet.
pub fn contact(a: &IntCell, b: &IntCell) -> Contact {
    if !a.boxes_meet(b) {
        return Contact::Disjoint;
    }
    let mut weak = None;
    for (n, _) in a.planes.iter().chain(&b.planes) {
        match separates(a, b, n) {
            Sep::Strict => return Contact::Disjoint,
            Sep::Weak(level) => weak = Some((*n, level)),
            Sep::None => {}
        }
    }
    if weak.is_none() && a.dim == 3 {
        'outer: for ea in a.edges.iter() {
            let u = exact::sub(&a.pts[ea[1]], &a.pts[ea[0]]);
            for eb in b.edges.iter() {
                let w = exact::sub(&b.pts[eb[1]], &b.pts[eb[0]]);
                let n = cross(&u, &w);
                if n == [0, 0, 0] {
                    continue;
                }
                match separates(a, b, &n) {
                    Sep::Strict => return Contact::Disjoint,
                    Sep::Weak(level) => {
                        weak = Some((n, level));
                        break 'outer;
                    }
                    Sep::None => {}
                }
            }
        }
    }
    let Some(plane) = weak else {
        return Contact::Overlap;
    };
    // Both cells meet the supporting plane in the same vertex set: the
    // intersection is that common face.
    let on_plane = |c: &IntCell| -> Vec<IPoint> {
        let mut v: Vec<IPoint> = c.pts.iter().copied().filter(|p| dot(&plane.0, p) == plane.1).collect();
        v.sort_unstable();
        v
    };
    if on_plane(a) == on_plane(b) {
        return Contact::Touching { face_to_face: true };
    }
    let s = intersection_vertices(a, b, &plane);
    if s.is_empty() {
        return Contact::Disjoint;
    }
    Contact::Touching { face_to_face: is_common_face(a, b, &s) }
}

fn to_q(p: &IPoint) -> [Q; 3] {
    p.map(|x| Q::from_integer(x.into()))
}

/// Points among which every vertex of `a ∩ b` is found: vertices of one
/// cell inside the other, edge/facet-plane crossings and edge/edge
/// crossings, each kept only if it lies in both cells. The intersection
/// lies in the weakly separating plane `(n, level)`, so only vertices and
/// edges in that plane take part.
fn intersection_vertices(a: &IntCell, b: &IntCell, (n, level): &(IPoint, i128)) -> BTreeSet<[Q; 3]> {
    let on = |p: &IPoint| dot(n, p) == *level;
    let in_plane = |c: &IntCell| -> Vec<[usize; 2]> {
        c.edges.iter().copied().filter(|e| on(&c.pts[e[0]]) && on(&c.pts[e[1]])).collect()
    };
    let (a_edges, b_edges) = (in_plane(a), in_plane(b));
    let mut out = BTreeSet::new();
    for (x, y, x_edges) in [(a, b, &a_edges), (b, a, &b_edges)] {
        for p in x.pts.iter().filter(|p| on(p)) {
            if y.contains(p) {
                out.insert(to_q(p));
            }
        }
        for e in x_edges {
            let (p, q) = (&x.pts[e[0]], &x.pts[e[1]]);
            for (n, c) in &y.planes {
                let dp = dot(n, p) - c;
                let dq = dot(n, q) - c;
                if (dp < 0 && dq > 0) || (dp > 0 && dq < 0) {
                    let t = Q::new(dp.into(), (dp - dq).into());
                    let pt: [Q; 3] = std::array::from_fn(|k| {
                        Q::from_integer(p[k].into()) + &t * Q::from_integer((q[k] - p[k]).into())
                    });
                    if y.contains_q(&pt) {
                        out.insert(pt);
                    }
                }
            }
        }
    }
    if a.dim == 3 {
        for ea in &a_edges {
            for eb in b.edges.iter() {
                if let Some(pt) = edge_crossing(&a.pts[ea[0]], &a.pts[ea[1]], &b.pts[eb[0]], &b.pts[eb[1]]) {
                    out.insert(pt);
                }
            }
        }
    }
    out
}

/// Crossing point of segments `pq` and `rs` when they meet at a single
/// point interior to both.
fn edge_crossing(p: &IPoint, q: &IPoint, r: &IPoint, s: &IPoint) -> Option<[Q; 3]> {
    let u = exact::sub(q, p);
    let w = exact::sub(s, r);
    let c = cross(&u, &w);
    if c == [0, 0, 0] || dot(&exact::sub(r, p), &c) != 0 {
        return None;
    }
    let big = |v: &IPoint| v.map(BigInt::from);
    let bcross = |x: &[BigInt; 3], y: &[BigInt; 3]| -> [BigInt; 3] {
        [&x[1] * &y[2] - &x[2] * &y[1], &x[2] * &y[0] - &x[0] * &y[2], &x[0] * &y[1] - &x[1] * &y[0]]
    };
    let bdot = |x: &[BigInt; 3], y: &[BigInt; 3]| &x[0] * &y[0] + &x[1] * &y[1] + &x[2] * &y[2];
    let (bu, bw, bc, brp) = (big(&u), big(&w), big(&c), big(&exact::sub(r, p)));
    let cc = bdot(&bc, &bc);
    let sn = bdot(&bcross(&brp, &bw), &bc);
    let tn = bdot(&bcross(&brp, &bu), &bc);
    let inside = |x: &BigInt| x.is_positive() && x < &cc;
    if !inside(&sn) || !inside(&tn) {
        return None;
    }
    let sp = Q::new(sn, cc);
    Some(std::array::from_fn(|k| Q::from_integer(p[k].into()) + &sp * Q::from_integer(bu[k].clone())))
}

fn vertex_index(c: &IntCell, p: &[Q; 3]) -> Option<usize> {
    if !p.iter().all(|x| x.is_integer()) {
        return None;
    }
    c.pts.iter().position(|v| (0..3).all(|k| Q::from_integer(v[k].into()) == p[k]))
}

/// Whether `conv(s)` is a face of both cells.
fn is_common_face(a: &IntCell, b: &IntCell, s: &BTreeSet<[Q; 3]>) -> bool {
    [a, b].iter().all(|c| {
        let Some(idx) = s.iter().map(|p| vertex_index(c, p)).collect::<Option<BTreeSet<usize>>>() else {
            return false;
        };
        let mut face: Option<BTreeSet<usize>> = None;
        for f in c.facets.iter() {
            if idx.iter().all(|i| f.contains(i)) {
                let fs: BTreeSet<usize> = f.iter().copied().collect();
                face = Some(match face {
                    None => fs,
                    Some(g) => g.intersection(&fs).copied().collect(),
                });
            }
        }
        face.is_some_and(|f| f == idx)
    })
}
