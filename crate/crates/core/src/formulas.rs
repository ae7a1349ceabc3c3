//! Closed-form degree relations, bounds, recursions and classifications.

use std::f64::consts::PI;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::periodic::MosaicStats;
use crate::rational::{q, qi, Q};

/// `h = n v / (n + v)`, half the harmonic mean of the two average degrees.
pub fn harmonic_degree(n_bar: &Q, v_bar: &Q) -> Result<Q> {
    if !n_bar.is_positive() {
        return Err(Error::NonPositiveParameter("n_bar"));
    }
    if !v_bar.is_positive() {
        return Err(Error::NonPositiveParameter("v_bar"));
    }
    Ok(n_bar * v_bar / (n_bar + v_bar))
}

/// Harmonic degree of a mosaic cut out by hyperplanes in general position
/// in `R^d`: `2^(d-1)`.
pub fn hyperplane_h(d: u32) -> Q {
    qi(1i64 << (d - 1))
}

/// One step of `x -> (d+1)^2 x / (d+1+x)`.
pub fn foam_map(x: &Q, d: u32) -> Q {
    let a = qi(d as i64 + 1);
    &a * &a * x / (&a + x)
}

/// `k` applications of [`foam_map`] starting from `x0 >= d + 1`.
pub fn foam_recursion(x0: &Q, d: u32, k: usize) -> Result<Q> {
    if x0 < &qi(d as i64 + 1) {
        return Err(Error::BelowSimplexDegree(crate::rational::display(x0)));
    }
    Ok((0..k).fold(x0.clone(), |x, _| foam_map(&x, d)))
}

/// Fixed point `d(d+1)` of the foam recursion.
pub fn foam_limit(d: u32) -> Q {
    qi(d as i64 * (d as i64 + 1))
}

fn factorial(n: u32) -> Q {
    (1..=n as i64).fold(Q::one(), |acc, k| acc * qi(k))
}

/// `(n, v, h)` of the barycentric subdivision of a face-to-face mosaic:
/// `((d+1)!, d+1, (d+1)!/(1+d!))`.
pub fn barycentric_degrees(d: u32) -> (Q, Q, Q) {
    let n = factorial(d + 1);
    let v = qi(d as i64 + 1);
    let h = &n / (Q::one() + factorial(d));
    (n, v, h)
}

/// `(d+1)/2`, the lower bound on `h` for convex face-to-face mosaics.
pub fn h_lower_bound(d: u32) -> Q {
    q(d as i64 + 1, 2)
}

/// Lower bound `max{4, 2v/(2v-7)}` on the node degree of a 3D mosaic with
/// mean cell degree `v >= 4`.
pub fn refined_3d_bound(v_bar: &Q) -> Q {
    let two_v = qi(2) * v_bar;
    let b = &two_v / (&two_v - qi(7));
    if b > qi(4) {
        b
    } else {
        qi(4)
    }
}

/// Minimum of `h` over all `v >= 4` under [`refined_3d_bound`]: `28/13`,
/// attained at `v = 14/3`.
pub fn refined_h_floor_3d() -> Q {
    q(28, 13)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurvatureClass {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl CurvatureClass {
    pub fn name(&self) -> &'static str {
        match self {
            CurvatureClass::Spherical => "elliptic",
            CurvatureClass::Euclidean => "euclidean",
            CurvatureClass::Hyperbolic => "hyperbolic",
        }
    }
}

/// Sign of `1/p + 1/q - 1/2`.
pub fn schlafli_classify(p: u32, q_: u32) -> CurvatureClass {
    let s = q(1, p as i64) + q(1, q_ as i64) - q(1, 2);
    if s.is_positive() {
        CurvatureClass::Spherical
    } else if s.is_zero() {
        CurvatureClass::Euclidean
    } else {
        CurvatureClass::Hyperbolic
    }
}

/// `(V, E, F)` of the Platonic solid `{p, q}`.
pub fn platonic_counts(p: u32, q_: u32) -> Option<(u32, u32, u32)> {
    match (p, q_) {
        (3, 3) => Some((4, 6, 4)),
        (4, 3) => Some((8, 12, 6)),
        (3, 4) => Some((6, 12, 8)),
        (5, 3) => Some((20, 30, 12)),
        (3, 5) => Some((12, 30, 20)),
        _ => None,
    }
}

/// `(V, E, F)` of `{p, q}` from `V = 4p / (4 - (p-2)(q-2))` and its
/// companions; only meaningful for spherical pairs.
pub fn platonic_counts_formula(p: u32, q_: u32) -> Option<(u32, u32, u32)> {
    let den = 4 - (p as i64 - 2) * (q_ as i64 - 2);
    if den <= 0 {
        return None;
    }
    let (p, q_) = (p as i64, q_ as i64);
    Some(((4 * p / den) as u32, (2 * p * q_ / den) as u32, (4 * q_ / den) as u32))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoneycombStats {
    pub n_bar: Q,
    pub v_bar: Q,
    pub h_bar: Q,
    pub curvature: CurvatureClass,
}

/// Degrees of the regular honeycomb `{p, q, r}`: cells `{p, q}` have
/// `v = V{p,q}` vertices and each node meets `n = F{q,r}` cells. The space
/// form follows the sign of `sin(pi/p) sin(pi/r) - cos(pi/q)`.
pub fn regular_honeycomb_stats(p: u32, q_: u32, r: u32) -> Result<HoneycombStats> {
    let name = || format!("{p},{q_},{r}");
    let (v, _, _) = platonic_counts(p, q_).ok_or_else(|| Error::NotAHoneycomb(name()))?;
    let (_, _, f) = platonic_counts(q_, r).ok_or_else(|| Error::NotAHoneycomb(name()))?;
    let (n_bar, v_bar) = (qi(f as i64), qi(v as i64));
    let s = (PI / p as f64).sin() * (PI / r as f64).sin() - (PI / q_ as f64).cos();
    let curvature = if s.abs() < 1e-12 {
        CurvatureClass::Euclidean
    } else if s > 0.0 {
        CurvatureClass::Spherical
    } else {
        CurvatureClass::Hyperbolic
    };
    Ok(HoneycombStats { h_bar: harmonic_degree(&n_bar, &v_bar)?, n_bar, v_bar, curvature })
}

/// Node degree of a planar mosaic with mean cell degree `v` and a
/// proportion `p` of regular nodes, in two forms: `2v/(v-p-1)` and
/// `(1+p)v/(v-2)`. They agree at `p = 1`.
pub fn planar_nff_relation(v_bar: &Q, p: &Q) -> Result<(Q, Q)> {
    let d1 = v_bar - p - Q::one();
    let d2 = v_bar - qi(2);
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    Ok((qi(2) * v_bar / d1, (Q::one() + p) * v_bar / d2))
}

/// `v = (2 - mu) n / (n + mu - 1 - p)` for a spherical mosaic.
pub fn spherical_nff_relation(n_bar: &Q, mu_bar: &Q, p: &Q) -> Result<Q> {
    let den = n_bar + mu_bar - Q::one() - p;
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    Ok((qi(2) - mu_bar) * n_bar / den)
}

/// Whether `d < h <= 2^(d-1)`.
pub fn conjecture_holds(h_bar: &Q, d: u32) -> bool {
    h_bar > &qi(d as i64) && h_bar <= &hyperplane_h(d)
}

pub fn conjecture_predicate(stats: &MosaicStats, d: u32) -> bool {
    conjecture_holds(&stats.h_bar, d)
}
