//! Delaunay triangulation of the flat 3-torus by Bowyer-Watson insertion
//! of margin copies, using exact orientation and in-sphere predicates.

use std::collections::HashSet;

use robust::{insphere, orient3d, Coord3D};

use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// Resolution of the coordinate grid: inputs are rounded to multiples of
/// `2^-GRID_BITS` so that translated copies are exact.
pub const GRID_BITS: i32 = 32;

fn c(p: &[f64; 3]) -> Coord3D<f64> {
    Coord3D { x: p[0], y: p[1], z: p[2] }
}

#[derive(Clone, Copy)]
struct Tet {
    v: [u32; 4],
    n: [u32; 4],
}

struct Builder<'a> {
    pts: &'a [[f64; 3]],
    tets: Vec<Tet>,
    alive: Vec<bool>,
    stamp: Vec<u32>,
    free: Vec<u32>,
    round: u32,
    last: u32,
    rng: u64,
}

impl<'a> Builder<'a> {
    fn orient(&self, v: [u32; 4]) -> f64 {
        let p = |i: u32| c(&self.pts[i as usize]);
        orient3d(p(v[0]), p(v[1]), p(v[2]), p(v[3]))
    }

    fn next_rand(&mut self) -> usize {
        self.rng ^= self.rng << 13;
        self.rng ^= self.rng >> 7;
        self.rng ^= self.rng << 17;
        (self.rng % 4) as usize
    }

    fn locate(&mut self, p: u32) -> u32 {
        let mut t = self.last;
        'walk: loop {
            let start = self.next_rand();
            for k in 0..4 {
                let i = (start + k) % 4;
                let mut v = self.tets[t as usize].v;
                v[i] = p;
                if self.orient(v) < 0.0 {
                    let nb = self.tets[t as usize].n[i];
                    if nb != NONE {
                        t = nb;
                        continue 'walk;
                    }
                }
            }
            return t;
        }
    }

    fn alloc(&mut self, tet: Tet) -> u32 {
        if let Some(id) = self.free.pop() {
            self.tets[id as usize] = tet;
            self.alive[id as usize] = true;
            id
        } else {
            self.tets.push(tet);
            self.alive.push(true);
            self.stamp.push(0);
            (self.tets.len() - 1) as u32
        }
    }

    fn insert(&mut self, p: u32) {
        let start = self.locate(p);
        self.round += 1;
        let round = self.round;
        let mut cavity = vec![start];
        self.stamp[start as usize] = round;
        let mut boundary: Vec<(u32, usize)> = Vec::new();
        let mut k = 0;
        while k < cavity.len() {
            let t = cavity[k];
            k += 1;
            for i in 0..4 {
                let nb = self.tets[t as usize].n[i];
                if nb != NONE && self.stamp[nb as usize] == round {
                    continue;
                }
                let inside = nb != NONE && {
                    let v = self.tets[nb as usize].v;
                    let q = |j: usize| c(&self.pts[v[j] as usize]);
                    insphere(q(0), q(1), q(2), q(3), c(&self.pts[p as usize])) > 0.0
                };
                if inside {
                    self.stamp[nb as usize] = round;
                    cavity.push(nb);
                } else {
                    boundary.push((t, i));
                }
            }
        }
        let mut open: Vec<([u32; 2], u32, usize)> = Vec::new();
        let mut created = 0;
        for &(t, i) in &boundary {
            let old = self.tets[t as usize];
            let mut v = old.v;
            v[i] = p;
            let mut n = [NONE; 4];
            let outside = old.n[i];
            n[i] = outside;
            let id = self.alloc(Tet { v, n });
            created = id;
            if outside != NONE {
                let o = &mut self.tets[outside as usize];
                for slot in o.n.iter_mut() {
                    if *slot == t {
                        *slot = id;
                    }
                }
            }
            for j in 0..4 {
                if j == i {
                    continue;
                }
                let mut e: Vec<u32> = (0..4).filter(|&m| m != i && m != j).map(|m| v[m]).collect();
                e.sort_unstable();
                let key = [e[0], e[1]];
                if let Some(pos) = open.iter().position(|(k2, _, _)| *k2 == key) {
                    let (_, other, face) = open.swap_remove(pos);
                    self.tets[id as usize].n[j] = other;
                    self.tets[other as usize].n[face] = id;
                } else {
                    open.push((key, id, j));
                }
            }
        }
        debug_assert!(open.is_empty());
        for &t in &cavity {
            self.alive[t as usize] = false;
            self.free.push(t);
        }
        self.last = created;
    }
}

/// Delaunay tetrahedra of `pts`, positively oriented, as index quadruples.
pub(crate) fn delaunay(pts: &[[f64; 3]]) -> Vec<[u32; 4]> {
    let n = pts.len();
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for p in pts {
        for k in 0..3 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let size = (0..3).map(|k| hi[k] - lo[k]).fold(1.0, f64::max);
    let big = 64.0 * size;
    let base = [lo[0] - big, lo[1] - big, lo[2] - big];
    let mut all = pts.to_vec();
    all.push(base);
    for k in 0..3 {
        let mut q = base;
        q[k] += 8.0 * big;
        all.push(q);
    }
    let s = n as u32;
    let mut b = Builder {
        pts: &all,
        tets: Vec::with_capacity(8 * n),
        alive: Vec::with_capacity(8 * n),
        stamp: Vec::with_capacity(8 * n),
        free: Vec::new(),
        round: 0,
        last: 0,
        rng: 0x9e37_79b9_7f4a_7c15,
    };
    let mut v = [s, s + 1, s + 2, s + 3];
    if b.orient(v) < 0.0 {
        v.swap(0, 1);
    }
    b.alloc(Tet { v, n: [NONE; 4] });
    let order = morton_order(pts, &lo, size);
    for i in order {
        b.insert(i as u32);
    }
    b.tets.iter().zip(&b.alive).filter(|(t, &a)| a && t.v.iter().all(|&x| x < s)).map(|(t, _)| t.v).collect()
}

fn morton_order(pts: &[[f64; 3]], lo: &[f64; 3], size: f64) -> Vec<usize> {
    let key = |p: &[f64; 3]| {
        let mut k = 0u64;
        let cells: Vec<u64> = (0..3).map(|j| (((p[j] - lo[j]) / size) * 1023.0) as u64).collect();
        for bit in (0..10).rev() {
            for cj in &cells {
                k = (k << 1) | ((cj >> bit) & 1);
            }
        }
        k
    };
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by_key(|&i| key(&pts[i]));
    idx
}

/// Vertex of the torus triangulation: point index and lattice shift.
pub type TorusVertex = (u32, [i32; 3]);

/// One representative per translation orbit of tetrahedra.
#[derive(Clone, Debug)]
pub struct PeriodicTriangulation {
    points: Vec<[f64; 3]>,
    tets: Vec<[TorusVertex; 4]>,
    edges: usize,
    faces: usize,
    margin: f64,
}

fn canonical<const K: usize>(mut s: [TorusVertex; K]) -> [TorusVertex; K] {
    let mut best: Option<[TorusVertex; K]> = None;
    for a in 0..K {
        let base = s[a].1;
        let mut t = s;
        for x in t.iter_mut() {
            x.1 = [x.1[0] - base[0], x.1[1] - base[1], x.1[2] - base[2]];
        }
        t.sort_unstable();
        if best.is_none_or(|b| t < b) {
            best = Some(t);
        }
    }
    s = best.expect("K > 0");
    s
}

/// Rounds a coordinate in `[0, 1)` to the exact grid.
pub fn snap(x: f64) -> f64 {
    let scale = (2.0f64).powi(GRID_BITS);
    let y = (x.rem_euclid(1.0) * scale).floor() / scale;
    if y >= 1.0 {
        0.0
    } else {
        y
    }
}

impl PeriodicTriangulation {
    pub fn points(&self) -> &[[f64; 3]] {
        &self.points
    }

    pub fn tets(&self) -> &[[TorusVertex; 4]] {
        &self.tets
    }

    pub fn num_tets(&self) -> usize {
        self.tets.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges
    }

    pub fn num_faces(&self) -> usize {
        self.faces
    }

    /// Width of the layer of copies used around the unit cube.
    pub fn margin(&self) -> f64 {
        self.margin
    }

    pub fn coords(&self, v: &TorusVertex) -> [f64; 3] {
        let p = self.points[v.0 as usize];
        std::array::from_fn(|k| p[k] + v.1[k] as f64)
    }

    /// `V - E + F - T`, zero on the torus.
    pub fn euler_characteristic(&self) -> i64 {
        self.points.len() as i64 - self.edges as i64 + self.faces as i64 - self.tets.len() as i64
    }
}

/// Periodic Delaunay triangulation of points in the unit torus. Inputs are
/// first snapped to the `2^-32` grid.
pub fn periodic_delaunay(points: &[[f64; 3]]) -> Result<PeriodicTriangulation> {
    let n = points.len();
    if n < 5 {
        return Err(Error::TooFewPoints { need: 5, got: n });
    }
    let pts: Vec<[f64; 3]> = points.iter().map(|p| p.map(snap)).collect();
    let mut margin = (2.5 / (n as f64).cbrt()).min(1.0);
    loop {
        if let Some(t) = attempt(&pts, margin) {
            return Ok(t);
        }
        if margin >= 1.0 {
            return Err(Error::DegenerateInput("periodic triangulation did not close up".into()));
        }
        margin = (margin * 1.5).min(1.0);
    }
}

fn attempt(pts: &[[f64; 3]], margin: f64) -> Option<PeriodicTriangulation> {
    let mut ext: Vec<[f64; 3]> = Vec::new();
    let mut origin: Vec<TorusVertex> = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for sx in -1..=1 {
            for sy in -1..=1 {
                for sz in -1..=1 {
                    let s = [sx, sy, sz];
                    let q: [f64; 3] = std::array::from_fn(|k| p[k] + s[k] as f64);
                    if q.iter().all(|&x| x >= -margin && x < 1.0 + margin) {
                        ext.push(q);
                        origin.push((i as u32, s));
                    }
                }
            }
        }
    }
    let raw = delaunay(&ext);
    let mut seen: HashSet<[TorusVertex; 4]> = HashSet::new();
    let mut tets = Vec::new();
    let mut volume = 0.0;
    for t in &raw {
        let verts = t.map(|i| origin[i as usize]);
        if !verts.iter().any(|v| v.1 == [0, 0, 0]) {
            continue;
        }
        let q = t.map(|i| ext[i as usize]);
        if !ball_inside(&q, margin) {
            return None;
        }
        let key = canonical(verts);
        if seen.insert(key) {
            volume += tet_volume(&q);
            tets.push(key);
        }
    }
    if (volume - 1.0).abs() > 1e-9 {
        return None;
    }
    let mut edges: HashSet<[TorusVertex; 2]> = HashSet::new();
    let mut faces: HashSet<[TorusVertex; 3]> = HashSet::new();
    for t in &tets {
        for a in 0..4 {
            faces.insert(canonical(std::array::from_fn(|k| t[(a + 1 + k) % 4])));
            for b in a + 1..4 {
                edges.insert(canonical([t[a], t[b]]));
            }
        }
    }
    let out = PeriodicTriangulation { points: pts.to_vec(), edges: edges.len(), faces: faces.len(), tets, margin };
    (out.faces == 2 * out.tets.len() && out.euler_characteristic() == 0).then_some(out)
}

fn tet_volume(q: &[[f64; 3]; 4]) -> f64 {
    let u: [[f64; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|k| q[i + 1][k] - q[0][k]));
    let det = u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1]) - u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0])
        + u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0]);
    det.abs() / 6.0
}

/// Circumcentre and radius of a tetrahedron.
pub fn circumsphere(q: &[[f64; 3]; 4]) -> ([f64; 3], f64) {
    let a: [[f64; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|k| q[i + 1][k] - q[0][k]));
    let b: [f64; 3] = std::array::from_fn(|i| 0.5 * a[i].iter().map(|x| x * x).sum::<f64>());
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(&a);
    let x: [f64; 3] = std::array::from_fn(|col| {
        let mut m = a;
        for (row, r) in m.iter_mut().enumerate() {
            r[col] = b[row];
        }
        det(&m) / d
    });
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    (std::array::from_fn(|k| q[0][k] + x[k]), r)
}

fn ball_inside(q: &[[f64; 3]; 4], margin: f64) -> bool {
    let (c, r) = circumsphere(q);
    let r = r * (1.0 + 1e-9) + 1e-12;
    c.iter().all(|&x| x - r >= -margin && x + r <= 1.0 + margin)
}
