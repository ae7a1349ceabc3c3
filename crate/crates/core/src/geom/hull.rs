//! Incremental convex hulls over an abstract orientation kernel.
//!
//! The same code runs on exact integer frames and on floating point input
//! with a tolerance. Output facets are maximal: coplanar triangles are merged
//! and vertices in the relative interior of edges are dropped.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use super::exact::{self, IPoint};
use crate::error::{Error, Result};

pub(crate) trait Kernel {
    fn len(&self) -> usize;
    fn same(&self, i: usize, j: usize) -> bool;
    fn collinear(&self, i: usize, j: usize, k: usize) -> bool;
    /// Sign of the volume spanned by `j-i, k-i, l-i`.
    fn orient(&self, i: usize, j: usize, k: usize, l: usize) -> Ordering;
}

pub(crate) struct IntKernel<'a>(pub &'a [IPoint]);

impl Kernel for IntKernel<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }
    fn same(&self, i: usize, j: usize) -> bool {
        self.0[i] == self.0[j]
    }
    fn collinear(&self, i: usize, j: usize, k: usize) -> bool {
        exact::collinear(&self.0[i], &self.0[j], &self.0[k])
    }
    fn orient(&self, i: usize, j: usize, k: usize, l: usize) -> Ordering {
        exact::orient3(&self.0[i], &self.0[j], &self.0[k], &self.0[l])
    }
}

/// Floating kernel; determinants below `eps` times the product of the edge
/// lengths count as zero.
pub(crate) struct FloatKernel<'a> {
    pub pts: &'a [[f64; 3]],
    pub eps: f64,
}

fn fsub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn fcross(u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

fn fnorm(u: &[f64; 3]) -> f64 {
    (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt()
}

impl Kernel for FloatKernel<'_> {
    fn len(&self) -> usize {
        self.pts.len()
    }
    fn same(&self, i: usize, j: usize) -> bool {
        fnorm(&fsub(&self.pts[i], &self.pts[j])) <= self.eps
    }
    fn collinear(&self, i: usize, j: usize, k: usize) -> bool {
        let u = fsub(&self.pts[j], &self.pts[i]);
        let v = fsub(&self.pts[k], &self.pts[i]);
        fnorm(&fcross(&u, &v)) <= self.eps * fnorm(&u).max(1e-300) * fnorm(&v).max(1e-300)
            || fnorm(&u) <= self.eps
            || fnorm(&v) <= self.eps
    }
    fn orient(&self, i: usize, j: usize, k: usize, l: usize) -> Ordering {
        let u = fsub(&self.pts[j], &self.pts[i]);
        let v = fsub(&self.pts[k], &self.pts[i]);
        let w = fsub(&self.pts[l], &self.pts[i]);
        let c = fcross(&u, &v);
        let d = c[0] * w[0] + c[1] * w[1] + c[2] * w[2];
        let scale = fnorm(&u) * fnorm(&v) * fnorm(&w);
        if d.abs() <= self.eps * scale {
            Ordering::Equal
        } else {
            d.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
        }
    }
}

/// Facets of the 3D hull as cyclic lists of input indices, counter-clockwise
/// seen from outside.
pub(crate) fn hull3<K: Kernel>(k: &K) -> Result<Vec<Vec<usize>>> {
    let n = k.len();
    if n < 4 {
        return Err(Error::DegenerateInput(format!("{n} points cannot span a 3D hull")));
    }
    let p0 = 0;
    let p1 = (1..n).find(|&i| !k.same(p0, i)).ok_or_else(|| Error::DegenerateInput("all points coincide".into()))?;
    let p2 = (1..n)
        .find(|&i| !k.collinear(p0, p1, i))
        .ok_or_else(|| Error::DegenerateInput("points are collinear".into()))?;
    let (p3, s) = (1..n)
        .map(|i| (i, k.orient(p0, p1, p2, i)))
        .find(|&(_, s)| s != Ordering::Equal)
        .ok_or_else(|| Error::DegenerateInput("points are coplanar".into()))?;
    let (p1, p2) = if s == Ordering::Greater { (p1, p2) } else { (p2, p1) };
    let mut tris: Vec<[usize; 3]> = vec![[p0, p2, p1], [p0, p1, p3], [p1, p2, p3], [p2, p0, p3]];
    let seed = [p0, p1, p2, p3];

    for p in 0..n {
        if seed.contains(&p) {
            continue;
        }
        let visible: Vec<bool> = tris.iter().map(|t| k.orient(t[0], t[1], t[2], p) == Ordering::Greater).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let vis_edges: HashSet<(usize, usize)> = tris
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(t, _)| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])])
            .collect();
        let mut next = Vec::with_capacity(tris.len() + 4);
        for (t, &v) in tris.iter().zip(&visible) {
            if v {
                for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                    if !vis_edges.contains(&(b, a)) {
                        next.push([a, b, p]);
                    }
                }
            } else {
                next.push(*t);
            }
        }
        tris = next;
    }
    Ok(merge_coplanar(k, &tris))
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let nxt = parent[y];
        parent[y] = r;
        y = nxt;
    }
    r
}

fn merge_coplanar<K: Kernel>(k: &K, tris: &[[usize; 3]]) -> Vec<Vec<usize>> {
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (ti, t) in tris.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            owner.insert((a, b), ti);
        }
    }
    let mut parent: Vec<usize> = (0..tris.len()).collect();
    for (ti, t) in tris.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            let Some(&tj) = owner.get(&(b, a)) else { continue };
            if tj <= ti {
                continue;
            }
            let other = tris[tj].iter().copied().find(|&x| x != a && x != b).unwrap();
            if k.orient(t[0], t[1], t[2], other) == Ordering::Equal {
                let (ra, rb) = (find(&mut parent, ti), find(&mut parent, tj));
                parent[ra] = rb;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for ti in 0..tris.len() {
        let r = find(&mut parent, ti);
        groups.entry(r).or_default().push(ti);
    }
    let mut roots: Vec<usize> = groups.keys().copied().collect();
    roots.sort_unstable();

    let mut facets = Vec::with_capacity(roots.len());
    for r in roots {
        let members = &groups[&r];
        let edges: HashSet<(usize, usize)> = members
            .iter()
            .flat_map(|&ti| {
                let t = tris[ti];
                [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
            })
            .collect();
        let succ: HashMap<usize, usize> =
            edges.iter().filter(|(a, b)| !edges.contains(&(*b, *a))).map(|&(a, b)| (a, b)).collect();
        let start = *succ.keys().min().unwrap();
        let mut cycle = vec![start];
        let mut cur = succ[&start];
        while cur != start {
            cycle.push(cur);
            cur = succ[&cur];
        }
        facets.push(drop_collinear(k, cycle));
    }
    facets
}

fn drop_collinear<K: Kernel>(k: &K, mut cycle: Vec<usize>) -> Vec<usize> {
    loop {
        let m = cycle.len();
        let pos = (0..m).find(|&i| k.collinear(cycle[(i + m - 1) % m], cycle[i], cycle[(i + 1) % m]));
        match pos {
            Some(i) if m > 3 => {
                cycle.remove(i);
            }
            _ => break,
        }
    }
    let lo = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(lo);
    cycle
}

/// Counter-clockwise hull of planar integer points with collinear points
/// removed; returns input indices.
pub(crate) fn hull2(pts: &[IPoint]) -> Result<Vec<usize>> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| (pts[a][0], pts[a][1]).cmp(&(pts[b][0], pts[b][1])));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    if idx.len() < 3 {
        return Err(Error::DegenerateInput("fewer than 3 distinct points".into()));
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && exact::orient2(&pts[lower[lower.len() - 2]], &pts[lower[lower.len() - 1]], &pts[i]) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && exact::orient2(&pts[upper[upper.len() - 2]], &pts[upper[upper.len() - 1]], &pts[i]) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateInput("points are collinear".into()));
    }
    Ok(lower)
}
