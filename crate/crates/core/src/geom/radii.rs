//! Inradius (Chebyshev centre) and minimum enclosing ball of a polytope.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::polytope::ConvexPolytope;
use crate::rational::{self, Q};

/// `(r, R)`: radius of the largest inscribed ball and of the smallest
/// enclosing ball.
pub fn normality_radii(p: &ConvexPolytope) -> (f64, f64) {
    (chebyshev_radius(p), enclosing_radius(p))
}

/// Largest `r` such that some ball of radius `r` fits inside `p`.
pub fn chebyshev_radius(p: &ConvexPolytope) -> f64 {
    let d = p.dim();
    let x0: Vec<f64> = p.vertex_centroid().to_f64()[..d].to_vec();
    // Variables: y+ (d), y- (d), r. Rows: n.y + |n| r <= c - n.x0.
    let m = p.facets().len();
    let nvar = 2 * d + 1;
    let mut a = vec![vec![0.0; nvar]; m];
    let mut b = vec![0.0; m];
    for f in 0..m {
        let (n, c) = p.facet_plane(f);
        let n: Vec<f64> = n.coords().iter().map(rational::to_f64).collect();
        let len = n.iter().map(|x| x * x).sum::<f64>().sqrt();
        for k in 0..d {
            a[f][k] = n[k] / len;
            a[f][d + k] = -n[k] / len;
        }
        a[f][2 * d] = 1.0;
        let nx0: f64 = n.iter().zip(&x0).map(|(x, y)| x * y).sum();
        b[f] = (rational::to_f64(&c) - nx0) / len;
    }
    let mut obj = vec![0.0; nvar];
    obj[2 * d] = 1.0;
    simplex_max(&a, &b, &obj)
}

/// Maximises `obj . z` subject to `a z <= b`, `z >= 0`, for `b >= 0`.
/// Dense tableau with Bland's rule; returns the optimal value.
fn simplex_max(a: &[Vec<f64>], b: &[f64], obj: &[f64]) -> f64 {
    let m = a.len();
    let n = obj.len();
    let width = n + m + 1;
    let mut t = vec![vec![0.0; width]; m + 1];
    for i in 0..m {
        t[i][..n].copy_from_slice(&a[i]);
        t[i][n + i] = 1.0;
        t[i][width - 1] = b[i].max(0.0);
    }
    for j in 0..n {
        t[m][j] = -obj[j];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    const EPS: f64 = 1e-12;
    while let Some(col) = (0..width - 1).find(|&j| t[m][j] < -EPS) {
        let mut row = None;
        let mut best = f64::INFINITY;
        for i in 0..m {
            if t[i][col] > EPS {
                let ratio = t[i][width - 1] / t[i][col];
                if ratio < best - EPS || (ratio <= best + EPS && row.is_some_and(|r: usize| basis[i] < basis[r])) {
                    best = ratio;
                    row = Some(i);
                }
            }
        }
        let Some(row) = row else { return f64::INFINITY };
        let pv = t[row][col];
        for v in t[row].iter_mut() {
            *v /= pv;
        }
        let prow = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != row && r[col].abs() > 0.0 {
                let f = r[col];
                for (x, y) in r.iter_mut().zip(&prow) {
                    *x -= f * y;
                }
            }
        }
        basis[row] = col;
    }
    t[m][width - 1]
}

/// Radius of the minimum enclosing ball of the vertices.
pub fn enclosing_radius(p: &ConvexPolytope) -> f64 {
    let (_, r2) = min_enclosing_ball(p);
    rational::to_f64(&r2).sqrt()
}

type Vector = Vec<Q>;

fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |s, (x, y)| s + x * y)
}

/// Exact centre and squared radius of the smallest ball containing the
/// vertices (Welzl's move-to-front recursion on a shuffled order).
pub fn min_enclosing_ball(p: &ConvexPolytope) -> (Vector, Q) {
    let mut pts: Vec<Vector> = p.vertices().iter().map(|v| v.coords().to_vec()).collect();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(0x5eed));
    let d = p.dim();
    let ball = welzl(&pts, pts.len(), &mut Vec::new(), d);
    ball.expect("non-empty vertex set")
}

fn welzl(pts: &[Vector], n: usize, support: &mut Vec<Vector>, d: usize) -> Option<(Vector, Q)> {
    if n == 0 || support.len() == d + 1 {
        return ball_through(support);
    }
    let p = &pts[n - 1];
    if let Some((c, r2)) = welzl(pts, n - 1, support, d) {
        let diff = sub(p, &c);
        if dot(&diff, &diff) <= r2 {
            return Some((c, r2));
        }
    }
    support.push(p.clone());
    let out = welzl(pts, n - 1, support, d);
    support.pop();
    out
}

/// Smallest ball with all of `s` on its boundary: the circumcentre within
/// the affine hull of `s`.
fn ball_through(s: &[Vector]) -> Option<(Vector, Q)> {
    let p0 = s.first()?;
    let dirs: Vec<Vector> = s[1..].iter().map(|p| sub(p, p0)).collect();
    let k = dirs.len();
    // Gram system G lambda = rhs with rhs_j = |d_j|^2 / 2.
    let mut rows: Vec<Vec<Q>> = (0..k)
        .map(|i| {
            let mut r: Vec<Q> = (0..k).map(|j| dot(&dirs[i], &dirs[j])).collect();
            r.push(dot(&dirs[i], &dirs[i]) / rational::qi(2));
            r
        })
        .collect();
    let lambda = solve_consistent(&mut rows, k);
    let mut c = p0.clone();
    for (l, dvec) in lambda.iter().zip(&dirs) {
        for (ci, di) in c.iter_mut().zip(dvec) {
            *ci += l * di;
        }
    }
    let diff = sub(p0, &c);
    let r2 = dot(&diff, &diff);
    Some((c, r2))
}

/// Gaussian elimination over `Q`; free variables of a rank-deficient
/// (consistent) system are set to zero.
fn solve_consistent(rows: &mut [Vec<Q>], k: usize) -> Vec<Q> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, pr);
        let inv = Q::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let mut out = vec![Q::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        out[col] = rows[i][k].clone();
    }
    out
}
